//! Every closed form and criterion checked against direct computation on one
//! gluing, as a list of PASS / FAIL / N-A lines.

use crate::criteria::{evaluate_all, CriterionResult, GluingFacts, Outcome, StructureReport};
use crate::error::Result;
use crate::gluing::Side;
use crate::poincare::formulas::{
    betti_formula_large, betti_formula_strong, large_subspace_formula, self_glue_formula, strongly_large_formula,
    weakly_large_formula,
};
use crate::poincare::{convolution_check, first_mismatch, Classification, GluingAnalysis};
use crate::series::TruncatedSeries;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "N-A")]
    NotApplicable,
    /// Evaluated but not asserted.
    #[serde(rename = "REPORT")]
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N-A",
            Status::Report => "REPORT",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Line {
    pub status: Status,
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<6} {}", self.status, self.check)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub gluing: String,
    pub bound: usize,
    pub classification: Classification,
    pub structure: StructureReport,
    pub criteria: Vec<CriterionResult>,
    pub lines: Vec<Line>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Line> {
        self.lines.iter().filter(|l| l.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::X => "X",
        Side::Y => "Y",
    }
}

struct Lines(Vec<Line>);

impl Lines {
    fn push(&mut self, status: Status, check: impl Into<String>, detail: impl Into<String>) {
        self.0.push(Line {
            status,
            check: check.into(),
            detail: detail.into(),
        });
    }

    fn assert(&mut self, ok: bool, check: impl Into<String>, detail: impl Into<String>) {
        self.push(if ok { Status::Pass } else { Status::Fail }, check, detail);
    }

    fn na(&mut self, check: impl Into<String>, reason: &str) {
        self.push(Status::NotApplicable, check, reason);
    }

    fn series(&mut self, check: String, formula: &TruncatedSeries, direct: &TruncatedSeries) {
        match first_mismatch(formula, direct) {
            None => self.push(Status::Pass, check, format!("{formula}")),
            Some(i) => self.push(
                Status::Fail,
                check,
                format!("t^{i} coefficient {} vs direct {}", formula.coeff(i), direct.coeff(i)),
            ),
        }
    }
}

/// Runs every check on `analysis` with convolution rows through `jmax`.
pub fn verify_gluing(analysis: &GluingAnalysis, jmax: usize) -> Result<VerifyReport> {
    let facts = GluingFacts::gather(analysis)?;
    let criteria = evaluate_all(&facts, analysis)?;
    let c = &facts.classification;
    let mut out = Lines(Vec::new());

    for (name, v) in [
        ("weakly large", &c.weakly_large),
        ("large", &c.large),
        ("strongly large", &c.strongly_large),
    ] {
        let theorem_contradicted = c.strongly_large.is_theorem_backed() && !v.holds();
        let status = if theorem_contradicted { Status::Fail } else { Status::Report };
        out.push(status, format!("classification: {name}"), v.to_string());
    }
    match &c.beta1_flag {
        Some(f) => out.push(Status::Fail, "b_1(Z) nonvanishing", f.clone()),
        None => out.push(Status::Pass, "b_1(Z) nonvanishing", ""),
    }

    let (dim, ok) = analysis.glued().dimension_check()?;
    out.assert(ok, "dim V = max(dim X, dim Y)", format!("dim V = {dim}"));

    series_checks(analysis, c, &mut out)?;
    betti_checks(analysis, c, &mut out)?;
    convolution_lines(analysis, c, jmax, &mut out)?;

    for r in &criteria {
        let check = format!("{} [X = {}]", r.name, side_name(r.orientation));
        match &r.outcome {
            Outcome::NotApplicable { reason } => out.na(check, reason),
            Outcome::Applicable { predicted, direct, agree } => {
                let status = match (r.report_only, agree) {
                    (true, _) => Status::Report,
                    (false, true) => Status::Pass,
                    (false, false) => Status::Fail,
                };
                let mut detail = format!("predicted {predicted}, direct {direct}");
                if !r.detail.is_empty() {
                    detail.push_str("; ");
                    detail.push_str(&r.detail);
                }
                out.push(status, check, detail);
            }
        }
    }

    let mut structure = facts.glued.clone();
    structure.merge(&criteria);
    out.assert(structure.implication_chain_holds(), "smooth => CI => Gorenstein => CM", "");
    let bad = structure.disagreements();
    out.assert(bad.is_empty(), "flag provenance", bad.join(", "));

    Ok(VerifyReport {
        gluing: analysis.presentation().name().to_string(),
        bound: analysis.bound(),
        classification: c.clone(),
        structure,
        criteria,
        lines: out.0,
    })
}

fn series_checks(a: &GluingAnalysis, c: &Classification, out: &mut Lines) -> Result<()> {
    for side in [Side::X, Side::Y] {
        let s = side_name(side);
        let check = format!("weakly large formula [X = {s}]");
        if !c.large_over(side).holds() {
            out.na(check, "gluing is not large over this factor");
        } else {
            let p_v_y = a.betti_factor_in_glued(side.other())?.series()?;
            let p_x_z = a.betti_z_in(side)?.series()?;
            let f = weakly_large_formula(&p_v_y, &p_x_z)?;
            out.series(check, &f, &a.betti_factor_in_glued(side)?.series()?);
            for w in a.test_subspaces(side)? {
                let p_x_w = a.betti_in_factor(side, &w)?.series()?;
                let f = large_subspace_formula(&p_x_w, &p_v_y, &p_x_z)?;
                let direct = a.betti_transported(side, &w)?.series()?;
                out.series(format!("large subspace formula, W = {} [X = {s}]", w.name()), &f, &direct);
            }
        }
    }
    for side in [Side::X, Side::Y] {
        let s = side_name(side);
        if !c.strongly_large.holds() {
            out.na(format!("strongly large formula [X = {s}]"), "gluing is not strongly large");
            continue;
        }
        let p_x_z = a.betti_z_in(side)?.series()?;
        let p_y_z = a.betti_z_in(side.other())?.series()?;
        for w in a.test_subspaces(side.other())? {
            let p_y_w = a.betti_in_factor(side.other(), &w)?.series()?;
            let f = strongly_large_formula(&p_y_w, &p_x_z, &p_y_z)?;
            let direct = a.betti_transported(side.other(), &w)?.series()?;
            out.series(format!("strongly large formula, W = {} [X = {s}]", w.name()), &f, &direct);
        }
    }
    if a.glued().datum().is_self_glue() {
        let p_x_z = a.betti_z_in(Side::X)?.series()?;
        for w in a.test_subspaces(Side::X)? {
            let p_x_w = a.betti_in_factor(Side::X, &w)?.series()?;
            let f = self_glue_formula(&p_x_w, &p_x_z)?;
            let direct = a.betti_transported(Side::X, &w)?.series()?;
            out.series(format!("self-gluing formula, W = {}", w.name()), &f, &direct);
        }
        let k = a.residue_field_glued()?.series()?;
        let f = self_glue_formula(&a.residue_field_factor(Side::X)?.series()?, &p_x_z)?;
        out.series("self-gluing formula, residue field".into(), &f, &k);
    } else {
        out.na("self-gluing formula", "not a self-gluing");
    }
    Ok(())
}

fn betti_checks(a: &GluingAnalysis, c: &Classification, out: &mut Lines) -> Result<()> {
    for side in [Side::X, Side::Y] {
        let s = side_name(side);
        let x_z = a.betti_z_in(side)?;
        let v_y = a.betti_factor_in_glued(side.other())?;
        for w in a.test_subspaces(side)? {
            let check = format!("large Betti formula, W = {} [X = {s}]", w.name());
            if !c.large_over(side).holds() {
                out.na(check, "gluing is not large");
                continue;
            }
            let x_w = a.betti_in_factor(side, &w)?;
            let direct = a.betti_transported(side, &w)?;
            let mut parts = Vec::new();
            let mut ok = true;
            for j in 0..=2 {
                let f = betti_formula_large(j, x_w.betas(), x_z.betas(), v_y.betas())?;
                if !f.matches(direct.get(j)) {
                    ok = false;
                }
                let integral = if f.as_integer().is_some() { "" } else { " (non-integral)" };
                parts.push(format!("b_{j} {f}{integral} vs {}", direct.get(j)));
            }
            out.assert(ok, check, parts.join(", "));
        }
        let y_z = a.betti_z_in(side.other())?;
        for w in a.test_subspaces(side.other())? {
            let check = format!("strongly large Betti formula, W = {} [X = {s}]", w.name());
            if !c.strongly_large.holds() {
                out.na(check, "gluing is not strongly large");
                continue;
            }
            let y_w = a.betti_in_factor(side.other(), &w)?;
            let direct = a.betti_transported(side.other(), &w)?;
            let mut parts = Vec::new();
            let mut ok = true;
            for j in 0..=2 {
                let f = betti_formula_strong(j, y_w.betas(), x_z.betas(), y_z.betas())?;
                ok &= f == direct.get(j);
                parts.push(format!("b_{j} {f} vs {}", direct.get(j)));
            }
            out.assert(ok, check, parts.join(", "));
        }
    }
    Ok(())
}

fn convolution_lines(a: &GluingAnalysis, c: &Classification, jmax: usize, out: &mut Lines) -> Result<()> {
    for side in [Side::X, Side::Y] {
        let s = side_name(side);
        for w in a.test_subspaces(side)? {
            let check = format!("convolution, W = {} [X = {s}]", w.name());
            if !c.large_over(side).holds() {
                out.na(check, "gluing is not large");
                continue;
            }
            let r = convolution_check(a, side, &w, jmax)?;
            let rows: Vec<String> = r
                .rows
                .iter()
                .map(|row| {
                    let mark = if row.readings_disagree {
                        format!(" (b_(j-1) reading {})", row.rhs_displayed)
                    } else {
                        String::new()
                    };
                    format!("j={} {}={}{mark}", row.j, row.lhs, row.rhs)
                })
                .collect();
            out.assert(r.passed(), check, rows.join(", "));
        }
    }
    Ok(())
}
