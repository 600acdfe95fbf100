//! The acceptance run: one PASS/FAIL line per criterion.

use std::time::Instant;

use lexc_cli::report::emit_report;
use lexc_cli::{parse_config, replay, run_checks, Format, RunReport};
use lexc_core::linexp::MUTATIONS;
use lexc_core::report::{Evidence, Status};

type Outcome = Result<String, String>;

fn run(text: &str) -> RunReport {
    run_checks(&parse_config(text).expect("acceptance configs are valid")).expect("acceptance configs build")
}

fn slice(monoid: &str, checks: &str, bound: usize) -> String {
    format!(r#"{{"model":{{"kind":"slice-monoid","monoid":"{monoid}"}},"checks":{checks},"bounds":{{"max_carrier":{bound}}}}}"#)
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn all_pass(r: &RunReport, what: &str) -> Result<(), String> {
    match r.records().find(|c| c.status != Status::Pass) {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} is {:?} {}", c.id, c.status, c.note.clone().unwrap_or_default())),
    }
}

fn passes(r: &RunReport, id: &str) -> Result<(), String> {
    match r.get(id) {
        Some(c) if c.status == Status::Pass && c.cases > 0 => Ok(()),
        Some(c) => Err(format!("{id} is {:?} with {} cases", c.status, c.cases)),
        None => Err(format!("{id} missing from the report")),
    }
}

fn criterion_1() -> Outcome {
    let mut detail = Vec::new();
    for m in ["C2", "C3", "L3"] {
        let start = Instant::now();
        let r = run(&slice(m, r#"["comonad","def2.all"]"#, 3));
        let secs = start.elapsed().as_secs_f64();
        all_pass(&r, m)?;
        for k in 1..=8 {
            passes(&r, &format!("def2.cond{k}"))?;
        }
        let target = if secs <= 60.0 { "" } else { " over the 60 s target" };
        detail.push(format!("{m} {} cases in {secs:.1} s{target}", r.totals.cases));
    }
    Ok(detail.join("; "))
}

fn criterion_2() -> Outcome {
    let mut detail = Vec::new();
    for m in ["C2", "C3"] {
        let r = run(&slice(m, r#"["sym"]"#, 3));
        all_pass(&r, m)?;
        passes(&r, "sym.prop4")?;
        passes(&r, "sym.prop1")?;
        detail.push(format!("{m} sigma = symmetry on {} cases, composite = id on {}", r.get("sym.prop4").unwrap().cases, r.get("sym.prop1").unwrap().cases));
    }
    Ok(detail.join("; "))
}

fn criterion_3() -> Outcome {
    let r = run(&slice("L3", r#"["em.cartesian","em.symmetry"]"#, 3));
    all_pass(&r, "L3")?;
    for id in ["projections", "pairing", "uniqueness", "terminal"] {
        passes(&r, &format!("em.cartesian.{id}"))?;
    }
    passes(&r, "em.symmetry.lift")?;
    Ok(format!("{} cases", r.totals.cases))
}

fn criterion_4() -> Outcome {
    let r = run(&slice("L3", r#"["adj.round-trip"]"#, 3));
    all_pass(&r, "L3")?;
    passes(&r, "adj.round-trip")?;
    Ok(format!("round trip on {} cases", r.get("adj.round-trip").unwrap().cases))
}

fn criterion_5() -> Outcome {
    let r = run(&slice("L3", r#"["thm5.iff"]"#, 3));
    all_pass(&r, "Example 1")?;
    passes(&r, "thm5.recovered")?;
    let text = r#"{"model":{"kind":"slice-monoid","monoid":"L3","comonad":"identity"},"checks":["thm5.iff"],"bounds":{"max_carrier":2}}"#;
    let id = run(text);
    let rec = id.get("thm5.iff").ok_or("no thm5.iff record")?;
    ensure(rec.status == Status::Fail, || format!("identity comonad reported {:?}", rec.status))?;
    let note = rec.note.clone().unwrap_or_default();
    ensure(note.starts_with("not linear exponential: no projection"), || format!("identity note: {note}"))?;
    let cx = rec.counterexample.as_ref().ok_or("identity verdict has no witness")?;
    let Evidence::NoMorphism { src, tgt } = &cx.evidence else { return Err(format!("unexpected witness {:?}", cx.evidence)) };
    let replayed = replay(&id).map_err(|e| e.to_string())?;
    ensure(replayed.iter().any(|(i, ok)| i == "thm5.iff" && matches!(ok, Ok(true))), || "identity witness does not replay".into())?;
    Ok(format!("recovered d, e on {} cases; identity: no morphism {src} -> {tgt}", r.get("thm5.recovered").unwrap().cases))
}

fn criterion_6() -> Outcome {
    let mut detail = Vec::new();
    for g in ["Z2", "S3"] {
        let text = format!(r#"{{"model":{{"kind":"xrel-group","group":"{g}","degree":2}},"checks":["selfcheck","def2.all","sym"],"bounds":{{"max_carrier":2}}}}"#);
        let r = run(&text);
        all_pass(&r, g)?;
        passes(&r, "selfcheck.braiding")?;
        passes(&r, "xrel.sigma-vs-braiding")?;
        let (ex, wide) = (r.totals.excluded, r.totals.widened);
        ensure(ex + wide > 0, || format!("{g}: no case was affected by the degree bound"))?;
        detail.push(format!("{g} {} cases, {ex} excluded by grade, {wide} beyond grade", r.totals.cases));
    }
    Ok(detail.join("; "))
}

fn criterion_7() -> Outcome {
    let r = run(&slice("L3", r#"["prop2","prop3"]"#, 2));
    passes(&r, "prop2")?;
    passes(&r, "prop3.cartesian")?;
    passes(&r, "prop3.currying")?;
    all_pass(&r, "L3")?;
    Ok(format!("prop2 {} cases, currying {} cases", r.get("prop2").unwrap().cases, r.get("prop3.currying").unwrap().cases))
}

fn criterion_8() -> Outcome {
    let r = run(r#"{"model":{"kind":"day","base":"L3"},"checks":["day.cross-model"],"bounds":{"max_carrier":3}}"#);
    all_pass(&r, "Day over L3")?;
    passes(&r, "day.cross-model")?;
    Ok(format!("{} table rows agree", r.get("day.cross-model").unwrap().cases))
}

fn mutant_config(mutation: &str, on_model: bool) -> String {
    let monoid = if on_model { "Z2" } else { "L3" };
    format!(r#"{{"model":{{"kind":"slice-monoid","monoid":"{monoid}"}},"checks":["all"],"bounds":{{"max_carrier":2}},"mutate":"{mutation}"}}"#)
}

fn criterion_9() -> Outcome {
    let mut detail = Vec::new();
    for mu in MUTATIONS {
        let r = run(&mutant_config(mu.id(), mu.on_model()));
        ensure(!r.all_pass(), || format!("{mu} passes the full suite"))?;
        let replays = replay(&r).map_err(|e| e.to_string())?;
        let caught: Vec<&str> = replays.iter().filter(|(_, ok)| matches!(ok, Ok(true))).map(|(id, _)| id.as_str()).collect();
        ensure(!caught.is_empty(), || format!("{mu}: no failure replays"))?;
        detail.push(format!("{mu}: {}", caught[0]));
    }
    Ok(detail.join("; "))
}

fn criterion_10() -> Outcome {
    let configs = [
        slice("C2", r#"["sym"]"#, 3),
        slice("L3", r#"["adj.round-trip","thm5.iff"]"#, 2),
        slice("L3", r#"["prop2","prop3"]"#, 2),
        r#"{"model":{"kind":"day","base":"L3"},"checks":["day.cross-model"],"bounds":{"max_carrier":2}}"#.to_string(),
        r#"{"model":{"kind":"xrel-group","group":"Z2","degree":2},"checks":["sym"],"bounds":{"max_carrier":2}}"#.to_string(),
        mutant_config("broken-m", false),
    ];
    for c in &configs {
        let (a, b) = (emit_report(&run(c), Format::Json), emit_report(&run(c), Format::Json));
        ensure(a == b, || format!("reports differ for {c}"))?;
    }
    Ok(format!("{} configs reproduced byte for byte", configs.len()))
}

fn main() {
    let criteria: [(u8, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let only: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (n, check) in criteria {
        if only.is_some_and(|k| k != n) {
            continue;
        }
        match check() {
            Ok(detail) => println!("criterion {n}: PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
