use criterion::{criterion_group, criterion_main, Criterion};

use lexc_core::fincat::homs::enumerate_homs;
use lexc_core::fincat::Ctx;
use lexc_core::linexp::Suite;
use lexc_core::models::{preset, SliceComonad, SliceModel};

fn def2(c: &mut Criterion) {
    for name in ["C2", "L3"] {
        let m = SliceModel::new(preset(name).unwrap());
        let co = SliceComonad::new(&m);
        c.bench_function(&format!("def2 {name} bound 2"), |b| {
            b.iter(|| {
                let ctx = Ctx::new(&m, Some(&co));
                Suite::new(&ctx, 2).def2()
            })
        });
    }
}

fn homs(c: &mut Criterion) {
    let m = SliceModel::new(preset("L3").unwrap());
    let ctx = Ctx::new(&m, None);
    let objs = Suite::new(&ctx, 2).objs.clone();
    c.bench_function("homs L3 bound 2", |b| {
        b.iter(|| {
            let mut n = 0;
            for x in &objs {
                for y in &objs {
                    n += enumerate_homs(&ctx, x, y).unwrap().len();
                }
            }
            n
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = def2, homs
}
criterion_main!(benches);
