use crate::error::Result;
use crate::germ::{AnalyticGerm, GermSurjection, Subspace};
use crate::gluing::{GluedGerm, Side};
use crate::resolution::{betti_numbers, residue_field_betti, BettiTable};
use crate::series::TruncatedSeries;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::SeriesCheck;

/// A glued germ with every Betti table the formulas need, computed once to
/// a common bound.
pub struct GluingAnalysis {
    glued: GluedGerm,
    bound: usize,
    cache: Mutex<HashMap<String, BettiTable>>,
}

fn tag(side: Side) -> &'static str {
    match side {
        Side::X => "X",
        Side::Y => "Y",
    }
}

impl GluingAnalysis {
    pub fn new(glued: GluedGerm, bound: usize) -> Self {
        GluingAnalysis {
            glued,
            bound,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn glued(&self) -> &GluedGerm {
        &self.glued
    }

    pub fn presentation(&self) -> &Arc<AnalyticGerm> {
        self.glued.presentation()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn factor(&self, side: Side) -> &Arc<AnalyticGerm> {
        match side {
            Side::X => self.glued.datum().x(),
            Side::Y => self.glued.datum().y(),
        }
    }

    /// `alpha` for `X`, `beta` for `Y`.
    pub fn surjection(&self, side: Side) -> &Arc<GermSurjection> {
        match side {
            Side::X => self.glued.datum().alpha(),
            Side::Y => self.glued.datum().beta(),
        }
    }

    /// `Z` embedded in the factor on `side`.
    pub fn z_in(&self, side: Side) -> Result<Subspace> {
        Ok(self.surjection(side).kernel_subspace()?.renamed("Z"))
    }

    /// The origin, `Z` and the whole factor.
    pub fn test_subspaces(&self, side: Side) -> Result<Vec<Subspace>> {
        let f = self.factor(side).clone();
        Ok(vec![
            Subspace::origin(f.clone()),
            self.z_in(side)?,
            Subspace::whole(f).renamed("full"),
        ])
    }

    /// Which result makes the gluing strongly large, if any applies.
    pub fn strongly_large_theorem(&self) -> Result<Option<String>> {
        let datum = self.glued.datum();
        if datum.z_is_point()? {
            return Ok(Some("Z is a reduced point".into()));
        }
        if datum.is_self_glue() {
            return Ok(Some("a germ glued to itself".into()));
        }
        Ok(None)
    }

    fn cached(&self, ring: &str, w: &Subspace, compute: impl FnOnce() -> Result<BettiTable>) -> Result<BettiTable> {
        let mut eqs: Vec<String> = w.equations().iter().map(|p| format!("{p:?}")).collect();
        eqs.sort();
        let key = format!("{ring}|{}", eqs.join(","));
        if let Some(t) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(t.clone());
        }
        let t = compute()?;
        self.cache.lock().expect("cache lock").insert(key, t.clone());
        Ok(t)
    }

    /// `b^X(W)` for `W` in the factor on `side`.
    pub fn betti_in_factor(&self, side: Side, w: &Subspace) -> Result<BettiTable> {
        self.cached(tag(side), w, || betti_numbers(w, self.bound))
    }

    /// `b^V(W)` for a subspace of the glued germ.
    pub fn betti_in_glued(&self, w: &Subspace) -> Result<BettiTable> {
        self.cached("V", w, || betti_numbers(w, self.bound))
    }

    /// `b^V(W)` for `W` in a factor, via the preimage under the projection.
    pub fn betti_transported(&self, side: Side, w: &Subspace) -> Result<BettiTable> {
        let t = self.glued.transport(side, w)?;
        self.betti_in_glued(&t)
    }

    /// `b^X(Z)`.
    pub fn betti_z_in(&self, side: Side) -> Result<BettiTable> {
        self.betti_in_factor(side, &self.z_in(side)?)
    }

    /// `b^V(X)`: the factor as a quotient of the glued germ.
    pub fn betti_factor_in_glued(&self, side: Side) -> Result<BettiTable> {
        self.betti_transported(side, &Subspace::whole(self.factor(side).clone()))
    }

    pub fn residue_field_glued(&self) -> Result<BettiTable> {
        let origin = Subspace::origin(self.presentation().clone());
        self.cached("V", &origin, || residue_field_betti(self.presentation(), self.bound))
    }

    pub fn residue_field_factor(&self, side: Side) -> Result<BettiTable> {
        let origin = Subspace::origin(self.factor(side).clone());
        self.cached(tag(side), &origin, || residue_field_betti(self.factor(side), self.bound))
    }

    /// `P^V_Y - 1 = (P^X_Z - 1) P^V_X` with `X` on `side`.
    pub fn weak_check(&self, side: Side) -> Result<SeriesCheck> {
        let one = TruncatedSeries::one(self.bound);
        let lhs = self.betti_factor_in_glued(side.other())?.series()?.sub(&one)?;
        let rhs = self
            .betti_z_in(side)?
            .series()?
            .sub(&one)?
            .mul(&self.betti_factor_in_glued(side)?.series()?)?;
        Ok(SeriesCheck::new(format!("weakly large over {}", tag(side)), lhs, rhs))
    }

    /// `P^V_W = P^X_W P^V_X` for each test subspace `W` of the factor on `side`.
    pub fn large_checks(&self, side: Side) -> Result<Vec<SeriesCheck>> {
        let p_v_x = self.betti_factor_in_glued(side)?.series()?;
        self.test_subspaces(side)?
            .iter()
            .map(|w| {
                let lhs = self.betti_transported(side, w)?.series()?;
                let rhs = self.betti_in_factor(side, w)?.series()?.mul(&p_v_x)?;
                Ok(SeriesCheck::new(format!("large at {} in {}", w.name(), tag(side)), lhs, rhs))
            })
            .collect()
    }
}
