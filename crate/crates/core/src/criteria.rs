//! Numerical criteria for smoothness, singularity, hypersurfaces, complete
//! intersections and the Gorenstein property of glued germs, each checked
//! against a direct computation on the presentation.

use crate::error::Result;
use crate::germ::AnalyticGerm;
use crate::gluing::Side;
use crate::poincare::formulas::{ci_ratio, ci_ratio_is_two, edim_formula_large, edim_formula_strong, FormulaValue};
use crate::poincare::{classify_gluing, Classification, GluingAnalysis};
use crate::resolution::{depth_and_type, residue_field_betti, BettiTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::sync::Arc;

/// Where a flag's value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Direct,
    Formula,
    BothAgree,
    Disagree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    pub provenance: Provenance,
}

impl Flag {
    fn direct(value: bool) -> Self {
        Flag {
            value,
            provenance: Provenance::Direct,
        }
    }

    /// Folds in a prediction; a disagreement keeps the direct value.
    fn confirm(&mut self, predicted: bool) {
        self.provenance = match (self.provenance, predicted == self.value) {
            (Provenance::Disagree, _) | (_, false) => Provenance::Disagree,
            _ => Provenance::BothAgree,
        };
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    EmbeddingDimension,
    Smooth,
    Singular,
    Hypersurface,
    CompleteIntersection,
    Gorenstein,
}

/// Invariants of one germ.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub germ: String,
    pub edim: usize,
    pub dim: usize,
    pub depth: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub smooth: Flag,
    pub singular: Flag,
    pub hypersurface: Flag,
    pub complete_intersection: Flag,
    pub gorenstein: Flag,
    pub cohen_macaulay: Flag,
}

fn binomial2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `b_2(k) = C(b_1(k), 2) + b_1(k) - dim` on the residue field.
pub fn ci_from_residue_betti(k: &BettiTable, dim: usize) -> bool {
    let b1 = k.get(1);
    (binomial2(b1) + b1) as i64 - dim as i64 == k.get(2) as i64
}

pub fn ci_criterion_direct(germ: &Arc<AnalyticGerm>) -> Result<bool> {
    let k = residue_field_betti(germ, 2)?;
    Ok(ci_from_residue_betti(&k, germ.krull_dim()?))
}

impl StructureReport {
    /// Everything computed from the presentation alone.
    pub fn direct(germ: &Arc<AnalyticGerm>) -> Result<Self> {
        let edim = germ.embedding_dim();
        let dim = germ.krull_dim()?;
        let (depth, cm_type) = depth_and_type(germ)?;
        let smooth = edim == dim;
        let cm = depth == dim;
        Ok(StructureReport {
            germ: germ.name().to_string(),
            edim,
            dim,
            depth,
            cm_type,
            smooth: Flag::direct(smooth),
            singular: Flag::direct(!smooth),
            hypersurface: Flag::direct(edim == depth + 1),
            complete_intersection: Flag::direct(ci_criterion_direct(germ)?),
            gorenstein: Flag::direct(cm && cm_type == 1),
            cohen_macaulay: Flag::direct(cm),
        })
    }

    /// smooth ⇒ complete intersection ⇒ Gorenstein ⇒ Cohen–Macaulay.
    pub fn implication_chain_holds(&self) -> bool {
        let imp = |a: Flag, b: Flag| !a.value || b.value;
        imp(self.smooth, self.complete_intersection)
            && imp(self.complete_intersection, self.gorenstein)
            && imp(self.gorenstein, self.cohen_macaulay)
    }

    fn flag_mut(&mut self, p: Property) -> Option<&mut Flag> {
        match p {
            Property::EmbeddingDimension => None,
            Property::Smooth => Some(&mut self.smooth),
            Property::Singular => Some(&mut self.singular),
            Property::Hypersurface => Some(&mut self.hypersurface),
            Property::CompleteIntersection => Some(&mut self.complete_intersection),
            Property::Gorenstein => Some(&mut self.gorenstein),
        }
    }

    /// Records every applicable, asserted prediction against the flags.
    pub fn merge(&mut self, results: &[CriterionResult]) {
        for r in results.iter().filter(|r| !r.report_only) {
            if let (Outcome::Applicable { predicted: Value::Bool(b), .. }, Some(flag)) =
                (&r.outcome, self.flag_mut(r.property))
            {
                flag.confirm(*b);
            }
        }
    }

    /// Names of flags whose prediction contradicts the direct value.
    pub fn disagreements(&self) -> Vec<&'static str> {
        [
            ("smooth", self.smooth),
            ("singular", self.singular),
            ("hypersurface", self.hypersurface),
            ("complete_intersection", self.complete_intersection),
            ("gorenstein", self.gorenstein),
            ("cohen_macaulay", self.cohen_macaulay),
        ]
        .into_iter()
        .filter(|(_, f)| f.provenance == Provenance::Disagree)
        .map(|(n, _)| n)
        .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(u64),
    Rational(String),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rational(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Applicable { predicted: Value, direct: Value, agree: bool },
    NotApplicable { reason: String },
}

/// A hypothesis-gated criterion evaluated with one factor in the first role.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub name: &'static str,
    /// The factor playing `X`.
    pub orientation: Side,
    pub property: Property,
    pub outcome: Outcome,
    /// Reported without asserting agreement.
    pub report_only: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn agrees(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Applicable { agree, .. } => Some(agree),
            Outcome::NotApplicable { .. } => None,
        }
    }

    pub fn is_failure(&self) -> bool {
        !self.report_only && self.agrees() == Some(false)
    }
}

/// Per-factor and glued data shared by all criteria.
pub struct GluingFacts {
    pub glued: StructureReport,
    pub classification: Classification,
    factors: [FactorFacts; 2],
}

struct FactorFacts {
    dim: usize,
    edim: usize,
    smooth: bool,
    ci: bool,
    z: BettiTable,
    /// The factor as a quotient of the glued germ.
    in_glued: BettiTable,
    residue: BettiTable,
}

fn at(side: Side) -> usize {
    match side {
        Side::X => 0,
        Side::Y => 1,
    }
}

impl GluingFacts {
    /// Needs Betti tables through index 3.
    pub fn gather(analysis: &GluingAnalysis) -> Result<Self> {
        assert!(analysis.bound() >= 3, "criteria need b_0 .. b_3");
        let factor = |side| -> Result<FactorFacts> {
            let g = analysis.factor(side);
            let dim = g.krull_dim()?;
            let residue = analysis.residue_field_factor(side)?;
            Ok(FactorFacts {
                dim,
                edim: g.embedding_dim(),
                smooth: g.is_smooth()?,
                ci: ci_from_residue_betti(&residue, dim),
                z: analysis.betti_z_in(side)?,
                in_glued: analysis.betti_factor_in_glued(side)?,
                residue,
            })
        };
        Ok(GluingFacts {
            glued: StructureReport::direct(analysis.presentation())?,
            classification: classify_gluing(analysis)?,
            factors: [factor(Side::X)?, factor(Side::Y)?],
        })
    }

    fn x(&self, side: Side) -> &FactorFacts {
        &self.factors[at(side)]
    }

    fn y(&self, side: Side) -> &FactorFacts {
        &self.factors[at(side.other())]
    }

    fn large(&self, side: Side) -> bool {
        self.classification.large_over(side).holds()
    }

    fn strongly_large(&self) -> bool {
        self.classification.strongly_large.holds()
    }

    fn is_self_glue(&self, analysis: &GluingAnalysis) -> bool {
        analysis.glued().datum().is_self_glue()
    }
}

fn rational(v: &FormulaValue) -> Value {
    match v.as_integer() {
        Some(n) => Value::Int(n),
        None => Value::Rational(v.to_string()),
    }
}

struct Builder {
    name: &'static str,
    orientation: Side,
    property: Property,
    report_only: bool,
}

impl Builder {
    fn new(name: &'static str, orientation: Side, property: Property) -> Self {
        Builder {
            name,
            orientation,
            property,
            report_only: false,
        }
    }

    fn gate(&self, reason: Option<String>) -> Option<CriterionResult> {
        reason.map(|reason| self.finish(Outcome::NotApplicable { reason }, String::new()))
    }

    fn verdict(&self, predicted: Value, direct: Value, detail: String) -> CriterionResult {
        let agree = predicted == direct;
        self.finish(Outcome::Applicable { predicted, direct, agree }, detail)
    }

    fn finish(&self, outcome: Outcome, detail: String) -> CriterionResult {
        CriterionResult {
            name: self.name,
            orientation: self.orientation,
            property: self.property,
            outcome,
            report_only: self.report_only,
            detail,
        }
    }
}

fn first_failure(gates: &[(bool, &str)]) -> Option<String> {
    gates.iter().find(|(ok, _)| !ok).map(|(_, why)| why.to_string())
}

/// `edim V` from the large-gluing formula.
pub fn edim_formula_large_check(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("edim (large)", side, Property::EmbeddingDimension);
    if let Some(r) = b.gate(first_failure(&[(f.large(side), "gluing is not large")])) {
        return r;
    }
    let v = edim_formula_large(f.x(side).edim, f.x(side).z.betas(), f.y(side).in_glued.betas());
    let detail = if v.as_integer().is_none() { "non-integral value".into() } else { String::new() };
    b.verdict(rational(&v), Value::Int(f.glued.edim as u64), detail)
}

/// `edim V = b^X_1(Z) + edim Y`.
pub fn edim_formula_strong_check(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("edim (strongly large)", side, Property::EmbeddingDimension);
    if let Some(r) = b.gate(first_failure(&[(f.strongly_large(), "gluing is not strongly large")])) {
        return r;
    }
    let v = edim_formula_strong(f.y(side).edim, f.x(side).z.betas());
    b.verdict(Value::Int(v as u64), Value::Int(f.glued.edim as u64), String::new())
}

fn theorem_gates(f: &GluingFacts, side: Side) -> Vec<(bool, &'static str)> {
    vec![
        (f.strongly_large(), "gluing is not strongly large"),
        (f.glued.dim == f.y(side).dim, "dim V differs from dim Y"),
    ]
}

/// A strongly large gluing with `dim V = dim Y` is singular.
pub fn singularity_theorem(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("singularity theorem", side, Property::Singular);
    if let Some(r) = b.gate(first_failure(&theorem_gates(f, side))) {
        return r;
    }
    let detail = format!("edim {} vs dim {}", f.glued.edim, f.glued.dim);
    b.verdict(Value::Bool(true), Value::Bool(f.glued.singular.value), detail)
}

/// `m (b^V_1(Y) edim X - dim X m + b^V_2(Y)) = b^V_1(Y) b^X_2(Z)` iff smooth.
pub fn smooth_criterion_large(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("smoothness (large)", side, Property::Smooth);
    let (x, y) = (f.x(side), f.y(side));
    if let Some(r) = b.gate(first_failure(&[
        (f.large(side), "gluing is not large"),
        (f.glued.dim == x.dim, "dim V differs from dim X"),
    ])) {
        return r;
    }
    let m = x.z.get(1) as i128;
    let (vy1, vy2) = (y.in_glued.get(1) as i128, y.in_glued.get(2) as i128);
    let lhs = m * (vy1 * x.edim as i128 - x.dim as i128 * m + vy2);
    let rhs = vy1 * x.z.get(2) as i128;
    let detail = format!("{lhs} vs {rhs}; b_2^V(T) read as b_2^V(Y)");
    b.verdict(Value::Bool(lhs == rhs), Value::Bool(f.glued.smooth.value), detail)
}

/// On a Cohen–Macaulay strongly large gluing with `dim V = dim Y`:
/// hypersurface iff `Y` is smooth and `b^X_1(Z) = 1`.
pub fn hypersurface_criterion(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("hypersurface", side, Property::Hypersurface);
    let mut gates = vec![(f.glued.cohen_macaulay.value, "V is not Cohen-Macaulay")];
    gates.extend(theorem_gates(f, side));
    if let Some(r) = b.gate(first_failure(&gates)) {
        return r;
    }
    let predicted = f.y(side).smooth && f.x(side).z.get(1) == 1;
    let detail = format!("edim {} - depth {}", f.glued.edim, f.glued.depth);
    b.verdict(Value::Bool(predicted), Value::Bool(f.glued.hypersurface.value), detail)
}

/// With `X` a complete intersection: `V` is one iff
/// `(m^2 + m) / (m b^Y_1(Z) + b^X_2(Z)) = 2`.
pub fn ci_criterion_strong(f: &GluingFacts, side: Side) -> CriterionResult {
    let b = Builder::new("complete intersection (strongly large)", side, Property::CompleteIntersection);
    let mut gates = vec![(f.x(side).ci, "X is not a complete intersection")];
    gates.extend(theorem_gates(f, side));
    if let Some(r) = b.gate(first_failure(&gates)) {
        return r;
    }
    let ratio = ci_ratio(f.x(side).z.betas(), f.y(side).z.betas());
    let detail = format!("ratio {ratio}");
    b.verdict(
        Value::Bool(ci_ratio_is_two(&ratio)),
        Value::Bool(f.glued.complete_intersection.value),
        detail,
    )
}

/// `X ⊔_Z X` with `X` a complete intersection is one iff `b^X_1(Z) = 1` and `b^X_2(Z) = 0`.
pub fn ci_criterion_selfglue(f: &GluingFacts, analysis: &GluingAnalysis) -> CriterionResult {
    let b = Builder::new("complete intersection (self-gluing)", Side::X, Property::CompleteIntersection);
    if let Some(r) = b.gate(first_failure(&[
        (f.is_self_glue(analysis), "not a self-gluing"),
        (f.x(Side::X).ci, "X is not a complete intersection"),
    ])) {
        return r;
    }
    let z = &f.x(Side::X).z;
    let detail = format!("b_1 {} b_2 {}", z.get(1), z.get(2));
    b.verdict(
        Value::Bool(z.get(1) == 1 && z.get(2) == 0),
        Value::Bool(f.glued.complete_intersection.value),
        detail,
    )
}

/// Under `b^X_2(Z) = 0` and `b^V_2(Y) = m`: complete intersection iff
/// `edim X + dim X = (edim X b^V_1(Y) l - b^V_3(Y) - c b^V_1(Y)) / m` with
/// `l = (3 - m) / 2m`. Evaluated for each reading of the coefficient `c`.
pub fn ci_criterion_p44(f: &GluingFacts, side: Side) -> Vec<CriterionResult> {
    let (x, y) = (f.x(side), f.y(side));
    let m = x.z.get(1);
    let gates = [
        (f.large(side), "gluing is not large"),
        (x.z.get(2) == 0, "b_2^X(Z) is nonzero"),
        (y.in_glued.get(2) == m, "b_2^V(Y) differs from b_1^X(Z)"),
    ];
    let readings: [(&'static str, u64); 2] = [
        ("complete intersection (l-formula, c = b_2^X(Z))", x.z.get(2)),
        ("complete intersection (l-formula, c = b_2 of the residue field)", x.residue.get(2)),
    ];
    readings
        .into_iter()
        .map(|(name, c)| {
            let mut b = Builder::new(name, side, Property::CompleteIntersection);
            b.report_only = true;
            if let Some(r) = b.gate(first_failure(&gates)) {
                return r;
            }
            let q = |n: u64| BigRational::from_integer(BigInt::from(n));
            let mq = q(m);
            let l = (q(3) - &mq) / (q(2) * &mq);
            let v1 = q(y.in_glued.get(1));
            let rhs = (q(x.edim as u64) * &v1 * l - q(y.in_glued.get(3)) - q(c) * &v1) / &mq;
            let lhs = q((x.edim + x.dim) as u64);
            let detail = format!("lhs {lhs} rhs {rhs}");
            b.verdict(
                Value::Bool(lhs == rhs),
                Value::Bool(f.glued.complete_intersection.value),
                detail,
            )
        })
        .collect()
}

/// On a Cohen–Macaulay strongly large gluing with `dim V = dim Y` and a
/// subspace `W` of `Y` with `b^V_1(W) <= b^V_0(W)`: Gorenstein iff `Y` is
/// smooth.
pub fn gorenstein_criterion(f: &GluingFacts, analysis: &GluingAnalysis, side: Side) -> Result<CriterionResult> {
    let b = Builder::new("Gorenstein", side, Property::Gorenstein);
    let mut gates = vec![(f.glued.cohen_macaulay.value, "V is not Cohen-Macaulay")];
    gates.extend(theorem_gates(f, side));
    if let Some(r) = b.gate(first_failure(&gates)) {
        return Ok(r);
    }
    let mut witness = None;
    for w in analysis.test_subspaces(side.other())? {
        let t = analysis.betti_transported(side.other(), &w)?;
        if t.get(1) <= t.get(0) {
            witness = Some(w.name().to_string());
            break;
        }
    }
    let Some(witness) = witness else {
        return Ok(b.finish(
            Outcome::NotApplicable {
                reason: "no test subspace W of Y with b_1^V(W) <= b_0^V(W)".into(),
            },
            format!("direct Gorenstein {}", f.glued.gorenstein.value),
        ));
    };
    Ok(b.verdict(
        Value::Bool(f.y(side).smooth),
        Value::Bool(f.glued.gorenstein.value),
        format!("witness {witness}; type {}", f.glued.cm_type),
    ))
}

/// Every criterion in both orientations. Orientations that coincide on a
/// self-gluing are evaluated once.
pub fn evaluate_all(f: &GluingFacts, analysis: &GluingAnalysis) -> Result<Vec<CriterionResult>> {
    let sides: &[Side] = if f.is_self_glue(analysis) { &[Side::X] } else { &[Side::X, Side::Y] };
    let mut out = Vec::new();
    for &side in sides {
        out.push(edim_formula_large_check(f, side));
        out.push(edim_formula_strong_check(f, side));
        out.push(singularity_theorem(f, side));
        out.push(smooth_criterion_large(f, side));
        out.push(hypersurface_criterion(f, side));
        out.push(ci_criterion_strong(f, side));
        out.extend(ci_criterion_p44(f, side));
        out.push(gorenstein_criterion(f, analysis, side)?);
    }
    out.push(ci_criterion_selfglue(f, analysis));
    Ok(out)
}

/// The glued germ's report with every applicable prediction folded in.
pub fn structure_report(analysis: &GluingAnalysis) -> Result<(StructureReport, Vec<CriterionResult>)> {
    let facts = GluingFacts::gather(analysis)?;
    let results = evaluate_all(&facts, analysis)?;
    let mut report = facts.glued.clone();
    report.merge(&results);
    Ok((report, results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn germ(vars: &[&str], rels: &[&str]) -> Arc<AnalyticGerm> {
        Arc::new(AnalyticGerm::parse("G", vars, rels).unwrap())
    }

    fn run(g: crate::Result<crate::GluedGerm>) -> (GluingFacts, Vec<CriterionResult>) {
        let a = GluingAnalysis::new(g.unwrap(), 4);
        let f = GluingFacts::gather(&a).unwrap();
        let r = evaluate_all(&f, &a).unwrap();
        (f, r)
    }

    fn find<'a>(rs: &'a [CriterionResult], name: &str, side: Side) -> &'a CriterionResult {
        rs.iter().find(|r| r.name == name && r.orientation == side).unwrap()
    }

    #[test]
    fn direct_reports() {
        let node = StructureReport::direct(&germ(&["x", "y"], &["x*y"])).unwrap();
        assert_eq!((node.edim, node.dim, node.depth, node.cm_type), (2, 1, 1, 1));
        assert!(node.complete_intersection.value && node.hypersurface.value && node.singular.value);
        let line = StructureReport::direct(&germ(&["x"], &[])).unwrap();
        assert!(line.smooth.value && line.implication_chain_holds());
        let emb = StructureReport::direct(&germ(&["x", "y"], &["x^2", "x*y"])).unwrap();
        assert_eq!(emb.depth, 0);
        assert!(!emb.cohen_macaulay.value);
    }

    #[test]
    fn ci_direct_examples() {
        assert!(ci_criterion_direct(&germ(&["x", "y"], &["x*y"])).unwrap());
        assert!(ci_criterion_direct(&germ(&["x", "y"], &[])).unwrap());
        let v = corpus::plane_along_origin().unwrap();
        // oracle: C(4,2) + 4 - 2 = 8, against b_2 = 10
        assert!(!ci_criterion_direct(v.presentation()).unwrap());
    }

    #[test]
    fn node_criteria() {
        let (f, rs) = run(corpus::node());
        assert!(rs.iter().all(|r| !r.is_failure()), "{rs:#?}");
        let s = find(&rs, "smoothness (large)", Side::X);
        assert_eq!(s.detail, "1 vs 0; b_2^V(T) read as b_2^V(Y)");
        assert!(matches!(
            find(&rs, "hypersurface", Side::X).outcome,
            Outcome::Applicable { predicted: Value::Bool(true), agree: true, .. }
        ));
        assert!(find(&rs, "Gorenstein", Side::X).agrees().unwrap());
        let mut report = f.glued.clone();
        report.merge(&rs);
        assert_eq!(report.singular.provenance, Provenance::BothAgree);
        assert!(report.disagreements().is_empty());
        // the l-formula is not asserted; on the node its two sides differ
        let p44 = find(&rs, "complete intersection (l-formula, c = b_2^X(Z))", Side::X);
        assert!(p44.report_only);
        assert_eq!(p44.agrees(), Some(false));
    }

    #[test]
    fn two_cusps_are_a_negative_case() {
        let (f, rs) = run(corpus::two_cusps());
        assert!(rs.iter().all(|r| !r.is_failure()), "{rs:#?}");
        assert_eq!((f.glued.edim, f.glued.depth), (4, 1));
        assert!(matches!(
            find(&rs, "hypersurface", Side::X).outcome,
            Outcome::Applicable { predicted: Value::Bool(false), agree: true, .. }
        ));
        assert!(matches!(find(&rs, "Gorenstein", Side::X).outcome, Outcome::NotApplicable { .. }));
    }

    #[test]
    fn plane_along_origin_is_not_a_complete_intersection() {
        let (_, rs) = run(corpus::plane_along_origin());
        assert!(rs.iter().all(|r| !r.is_failure()), "{rs:#?}");
        let r = find(&rs, "complete intersection (self-gluing)", Side::X);
        assert!(matches!(r.outcome, Outcome::Applicable { predicted: Value::Bool(false), agree: true, .. }));
        assert_eq!(find(&rs, "complete intersection (strongly large)", Side::X).detail, "ratio 6/5");
    }

    #[test]
    fn flag_confirmation() {
        let mut f = Flag::direct(true);
        f.confirm(true);
        assert_eq!(f.provenance, Provenance::BothAgree);
        f.confirm(false);
        assert_eq!(f.provenance, Provenance::Disagree);
        f.confirm(true);
        assert_eq!(f.provenance, Provenance::Disagree);
    }
}
