//! Poincaré series of glued germs: closed forms, largeness classification
//! and the Betti convolution identity.

mod analysis;
pub mod formulas;

pub use analysis::GluingAnalysis;
pub use formulas::{
    betti_formula_large, betti_formula_strong, ci_ratio, edim_formula_large, edim_formula_strong,
    large_subspace_formula, self_glue_formula, strongly_large_formula, weakly_large_formula, FormulaValue,
};

use crate::error::{Error, Result};
use crate::germ::Subspace;
use crate::gluing::Side;
use crate::series::TruncatedSeries;
use serde::Serialize;

/// First coefficient where two series differ, within their common range.
pub fn first_mismatch(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    let n = a.trunc().min(b.trunc());
    (0..=n).find(|&i| a.coeff(i) != b.coeff(i))
}

/// One series identity evaluated on direct data.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub label: String,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    pub mismatch: Option<usize>,
}

impl SeriesCheck {
    pub fn new(label: impl Into<String>, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        let mismatch = first_mismatch(&lhs, &rhs);
        SeriesCheck {
            label: label.into(),
            lhs,
            rhs,
            mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    /// `label: t^i coefficient lhs vs rhs`.
    pub fn diff(&self) -> Option<String> {
        self.mismatch
            .map(|i| format!("{}: t^{i} coefficient {} vs {}", self.label, self.lhs.coeff(i), self.rhs.coeff(i)))
    }
}

/// Outcome of testing one class of gluing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Every check passed through `t^order` on the test subspaces.
    Certified { order: usize },
    /// Some check failed at an exact coefficient.
    Refuted { detail: String },
    /// Known to hold; the checks passed as well.
    TheoremBacked { reason: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Refuted { .. })
    }

    pub fn is_theorem_backed(&self) -> bool {
        matches!(self, Verdict::TheoremBacked { .. })
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Certified { order } => write!(f, "certified through t^{order}"),
            Verdict::Refuted { detail } => write!(f, "refuted ({detail})"),
            Verdict::TheoremBacked { reason } => write!(f, "theorem-backed ({reason})"),
        }
    }
}

/// How `ker alpha` is compared over `V` in the weakly large check.
pub const WEAK_CONVENTION: &str =
    "ker alpha as a module: P^V_K = (P^V_Y - 1)/t and P^X_K = (P^X_Z - 1)/t, compared as P^V_Y - 1 = (P^X_Z - 1) P^V_X";

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub weakly_large: Verdict,
    pub large: Verdict,
    /// The large check with the factors swapped.
    pub large_over_y: Verdict,
    pub strongly_large: Verdict,
    pub checks: Vec<SeriesCheck>,
    pub weak_convention: &'static str,
    /// Set when `b^X_1(Z) = 0` on either side, which valid data never produces.
    pub beta1_flag: Option<String>,
}

fn verdict(checks: &[&SeriesCheck], order: usize, theorem: Option<&str>) -> Verdict {
    if let Some(bad) = checks.iter().find_map(|c| c.diff()) {
        return Verdict::Refuted { detail: bad };
    }
    match theorem {
        Some(reason) => Verdict::TheoremBacked { reason: reason.into() },
        None => Verdict::Certified { order },
    }
}

/// Largeness verdicts for the gluing with `X` in the role of the first factor.
///
/// The large check compares `P^V_W` with `P^X_W P^V_X` for every test
/// subspace `W` of `X`; strongly large adds the same check on `Y`.
pub fn classify_gluing(analysis: &GluingAnalysis) -> Result<Classification> {
    let n = analysis.bound();
    let theorem = analysis.strongly_large_theorem()?;
    let mut checks = Vec::new();
    let mut beta1_flag = None;
    for side in [Side::X, Side::Y] {
        if analysis.betti_z_in(side)?.get(1) == 0 {
            beta1_flag = Some(format!("b_1(Z) over {side:?} vanishes"));
        }
    }
    checks.push(analysis.weak_check(Side::X)?);
    let weak_end = checks.len();
    checks.extend(analysis.large_checks(Side::X)?);
    let large_end = checks.len();
    checks.push(analysis.weak_check(Side::Y)?);
    checks.extend(analysis.large_checks(Side::Y)?);

    let refs: Vec<&SeriesCheck> = checks.iter().collect();
    let reason = theorem.as_deref();
    Ok(Classification {
        weakly_large: verdict(&refs[..weak_end], n, reason),
        large: verdict(&refs[..large_end], n, reason),
        large_over_y: verdict(&refs[large_end..], n, reason),
        strongly_large: verdict(&refs, n, reason),
        checks,
        weak_convention: WEAK_CONVENTION,
        beta1_flag,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvolutionRow {
    pub j: usize,
    pub lhs: u64,
    /// `sum_(i<j) b^X_i(W) b^V_(j-i)(Y)`.
    pub rhs: u64,
    /// `sum_(i<j) b^X_i(W) b^V_(j-1)(Y)`.
    pub rhs_displayed: u64,
    pub pass: bool,
    pub readings_disagree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvolutionReport {
    pub side: Side,
    pub subspace: String,
    pub rows: Vec<ConvolutionRow>,
}

impl ConvolutionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// `sum_(i<j) b^V_i(W) b^X_(j-i)(Z) = sum_(i<j) b^X_i(W) b^V_(j-i)(Y)` for
/// `j = 1..=jmax`, with `W` in the factor on `side` and all Betti numbers
/// computed directly.
pub fn convolution_check(analysis: &GluingAnalysis, side: Side, w: &Subspace, jmax: usize) -> Result<ConvolutionReport> {
    if jmax > analysis.bound() {
        return Err(Error::Precondition(format!(
            "jmax {jmax} exceeds the truncation bound {}",
            analysis.bound()
        )));
    }
    let v_w = analysis.betti_transported(side, w)?;
    let x_w = analysis.betti_in_factor(side, w)?;
    let x_z = analysis.betti_z_in(side)?;
    let v_y = analysis.betti_factor_in_glued(side.other())?;
    let rows = (1..=jmax)
        .map(|j| {
            let lhs = (0..j).map(|i| v_w.get(i) * x_z.get(j - i)).sum();
            let rhs = (0..j).map(|i| x_w.get(i) * v_y.get(j - i)).sum();
            let rhs_displayed = (0..j).map(|i| x_w.get(i) * v_y.get(j - 1)).sum();
            ConvolutionRow {
                j,
                lhs,
                rhs,
                rhs_displayed,
                pass: lhs == rhs,
                readings_disagree: rhs != rhs_displayed,
            }
        })
        .collect();
    Ok(ConvolutionReport {
        side,
        subspace: w.name().to_string(),
        rows,
    })
}

impl Classification {
    /// The large verdict with the factor on `side` in the first role.
    pub fn large_over(&self, side: Side) -> &Verdict {
        match side {
            Side::X => &self.large,
            Side::Y => &self.large_over_y,
        }
    }
}

#[cfg(test)]
mod tests;
