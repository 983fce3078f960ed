use crate::input::{load, GluingArgs};
use crate::{CliError, Command, Format, RunConfig, Targets, VerifyArgs};
use fibergerm_core::criteria::{structure_report, CriterionResult, Outcome, StructureReport};
use fibergerm_core::germ::format::Item;
use fibergerm_core::poly::set_step_cap;
use fibergerm_core::resolution::{betti_numbers, residue_field_betti};
use fibergerm_core::{
    classify_gluing, corpus, verify_gluing, BettiTable, GluedGerm, GluingAnalysis, VerifyReport, Workspace,
};
use serde_json::{json, Value};
use std::fmt::Write as _;

pub fn run(command: Command, config: &RunConfig) -> Result<(), CliError> {
    if let Some(cap) = config.step_cap {
        set_step_cap(cap);
    }
    match command {
        Command::Invariants(t) => invariants(&t, config),
        Command::Betti(t) => betti(&t, config, false),
        Command::Poincare(t) => betti(&t, config, true),
        Command::Glue(g) => glue(&g, config),
        Command::Classify(g) => classify(&g, config),
        Command::Criteria(g) => criteria(&g, config),
        Command::Verify(v) => verify(&v, config),
    }
}

fn emit(config: &RunConfig, table: String, json: Value) -> Result<(), CliError> {
    let text = match config.format {
        Format::Table => table,
        Format::Json => serde_json::to_string_pretty(&json).expect("reports serialize") + "\n",
    };
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn germ_names(ws: &Workspace, t: &Targets) -> Vec<String> {
    if t.germ.is_empty() && t.subspace.is_empty() {
        ws.items()
            .iter()
            .filter_map(|i| match i {
                Item::Germ(g) => Some(g.name().to_string()),
                _ => None,
            })
            .collect()
    } else {
        t.germ.clone()
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_structure(out: &mut String, r: &StructureReport) {
    let _ = writeln!(out, "germ {}", r.germ);
    let _ = writeln!(out, "  edim {}  dim {}  depth {}  type {}", r.edim, r.dim, r.depth, r.cm_type);
    for (name, f) in [
        ("smooth", r.smooth),
        ("singular", r.singular),
        ("hypersurface", r.hypersurface),
        ("complete intersection", r.complete_intersection),
        ("Gorenstein", r.gorenstein),
        ("Cohen-Macaulay", r.cohen_macaulay),
    ] {
        let prov = serde_json::to_value(f.provenance).expect("provenance serializes");
        let _ = writeln!(out, "  {name:<22} {:<4} ({})", yes(f.value), prov.as_str().unwrap_or_default());
    }
}

fn invariants(t: &Targets, config: &RunConfig) -> Result<(), CliError> {
    let ws = load(&t.files)?;
    let mut table = String::new();
    let mut reports = Vec::new();
    for name in germ_names(&ws, t) {
        let r = StructureReport::direct(&ws.germ(&name)?)?;
        write_structure(&mut table, &r);
        reports.push(r);
    }
    emit(config, table, json!({ "schema": 1, "command": "invariants", "germs": reports }))
}

fn betti(t: &Targets, config: &RunConfig, as_series: bool) -> Result<(), CliError> {
    let ws = load(&t.files)?;
    let n = config.trunc;
    let mut entries: Vec<(String, &str, BettiTable)> = Vec::new();
    for name in germ_names(&ws, t) {
        entries.push((name.clone(), "residue field", residue_field_betti(&ws.germ(&name)?, n)?));
    }
    for name in &t.subspace {
        entries.push((name.clone(), "subspace", betti_numbers(&*ws.subspace(name)?, n)?));
    }
    let mut table = String::new();
    let mut rows = Vec::new();
    for (name, module, b) in &entries {
        if as_series {
            let s = b.series()?;
            let _ = writeln!(table, "{name} ({module}): {s}");
            rows.push(json!({ "name": name, "module": module, "series": s.coeffs() }));
        } else {
            let _ = writeln!(table, "{name} ({module})\n{b}");
            rows.push(json!({ "name": name, "module": module, "betti": b.betas() }));
        }
    }
    let command = if as_series { "poincare" } else { "betti" };
    emit(config, table, json!({ "schema": 1, "command": command, "trunc": n, "results": rows }))
}

fn presentation_text(v: &GluedGerm) -> String {
    let mut ws = Workspace::new();
    ws.push(Item::Germ(v.presentation().clone())).expect("a single item has no duplicate");
    ws.to_text()
}

fn glue(g: &GluingArgs, config: &RunConfig) -> Result<(), CliError> {
    let v = g.build()?;
    let text = presentation_text(&v);
    let (dim, dim_ok) = v.dimension_check()?;
    let a = GluingAnalysis::new(v, config.trunc);
    let c = classify_gluing(&a)?;
    let mut table = String::new();
    if let Some(path) = &config.out {
        std::fs::write(path, &text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    } else if config.format == Format::Table {
        table.push_str(&text);
        table.push('\n');
    }
    let _ = writeln!(table, "dim V = {dim} (max of the factors: {})", yes(dim_ok));
    let _ = writeln!(table, "weakly large:   {}", c.weakly_large);
    let _ = writeln!(table, "large:          {}", c.large);
    let _ = writeln!(table, "strongly large: {}", c.strongly_large);
    let json = json!({
        "schema": 1,
        "command": "glue",
        "presentation": text,
        "dim": dim,
        "dim_is_max": dim_ok,
        "classification": c,
    });
    let config = RunConfig {
        out: None,
        ..config.clone()
    };
    emit(&config, table, json)
}

fn classify(g: &GluingArgs, config: &RunConfig) -> Result<(), CliError> {
    let a = GluingAnalysis::new(g.build()?, config.trunc);
    let c = classify_gluing(&a)?;
    let mut table = String::new();
    let _ = writeln!(table, "gluing {} (through t^{})", a.presentation().name(), config.trunc);
    let _ = writeln!(table, "weakly large:   {}", c.weakly_large);
    let _ = writeln!(table, "large:          {}", c.large);
    let _ = writeln!(table, "strongly large: {}", c.strongly_large);
    for check in &c.checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(table, "  {status:<6} {}: {} | {}", check.label, check.lhs, check.rhs);
    }
    if let Some(f) = &c.beta1_flag {
        let _ = writeln!(table, "flag: {f}");
    }
    let _ = writeln!(table, "convention: {}", c.weak_convention);
    emit(config, table, json!({ "schema": 1, "command": "classify", "classification": c }))
}

fn write_criterion(out: &mut String, r: &CriterionResult) {
    let side = format!("{:?}", r.orientation);
    let (status, body) = match &r.outcome {
        Outcome::NotApplicable { reason } => ("N-A", reason.clone()),
        Outcome::Applicable { predicted, direct, agree } => {
            let status = match (r.report_only, agree) {
                (true, _) => "REPORT",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            };
            (status, format!("predicted {predicted}, direct {direct}"))
        }
    };
    let _ = write!(out, "{status:<6} {} [X = {side}]: {body}", r.name);
    if !r.detail.is_empty() {
        let _ = write!(out, "; {}", r.detail);
    }
    out.push('\n');
}

fn criteria(g: &GluingArgs, config: &RunConfig) -> Result<(), CliError> {
    let a = GluingAnalysis::new(g.build()?, config.trunc);
    let (report, results) = structure_report(&a)?;
    let mut table = String::new();
    write_structure(&mut table, &report);
    for r in &results {
        write_criterion(&mut table, r);
    }
    let failed = results.iter().any(CriterionResult::is_failure) || !report.disagreements().is_empty();
    emit(
        config,
        table,
        json!({ "schema": 1, "command": "criteria", "structure": report, "criteria": results }),
    )?;
    if failed {
        Err(CliError::Failed)
    } else {
        Ok(())
    }
}

fn write_verify(out: &mut String, name: &str, r: &VerifyReport) {
    let _ = writeln!(out, "gluing {name} (through t^{})", r.bound);
    for l in &r.lines {
        let _ = writeln!(out, "  {l}");
    }
    let fails = r.failures().count();
    let _ = writeln!(out, "  {} checks, {fails} failed", r.lines.len());
}

fn verify(v: &VerifyArgs, config: &RunConfig) -> Result<(), CliError> {
    let instances: Vec<(String, GluedGerm)> = if v.corpus {
        corpus::all()?.into_iter().map(|(n, g)| (n.to_string(), g)).collect()
    } else {
        let g = v.gluing.build()?;
        vec![(g.presentation().name().to_string(), g)]
    };
    let mut table = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for (name, g) in instances {
        let r = verify_gluing(&GluingAnalysis::new(g, config.trunc), config.jmax)?;
        write_verify(&mut table, &name, &r);
        ok &= r.passed();
        reports.push(json!({ "name": name, "passed": r.passed(), "report": r }));
    }
    emit(
        config,
        table,
        json!({ "schema": 1, "command": "verify", "jmax": config.jmax, "gluings": reports }),
    )?;
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}
