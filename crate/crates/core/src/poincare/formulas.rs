//! Closed forms for Poincaré series and low Betti numbers of glued germs.
//!
//! Notation: `P^T_U` is the Poincaré series of `O_T / I_U` over `O_T`, and
//! `b^T_i(U)` its coefficients.

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn minus_one(p: &TruncatedSeries) -> Result<TruncatedSeries> {
    p.sub(&TruncatedSeries::one(p.trunc()))
}

fn require_unit_constant(p: &TruncatedSeries, what: &str) -> Result<()> {
    if p.coeff(0) != 1 {
        return Err(Error::Series(format!("{what} must have constant term 1")));
    }
    Ok(())
}

/// `P^V_X = (1 - P^V_Y) / (1 - P^X_Z)`, exact through `t^(N-1)`.
pub fn weakly_large_formula(p_v_y: &TruncatedSeries, p_x_z: &TruncatedSeries) -> Result<TruncatedSeries> {
    require_unit_constant(p_v_y, "P^V_Y")?;
    require_unit_constant(p_x_z, "P^X_Z")?;
    if p_x_z.coeff(1) == 0 {
        return Err(Error::Series("b^X_1(Z) = 0 contradicts a proper surjection".into()));
    }
    minus_one(p_v_y)?.div(&minus_one(p_x_z)?)
}

/// `P^V_W = P^X_W (1 - P^V_Y) / (1 - P^X_Z)` for `W` in `X`.
pub fn large_subspace_formula(
    p_x_w: &TruncatedSeries,
    p_v_y: &TruncatedSeries,
    p_x_z: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    p_x_w.mul(&weakly_large_formula(p_v_y, p_x_z)?)
}

/// `P^V_W = P^Y_W P^X_Z / (P^X_Z + P^Y_Z - P^X_Z P^Y_Z)` for `W` in `Y`.
pub fn strongly_large_formula(
    p_y_w: &TruncatedSeries,
    p_x_z: &TruncatedSeries,
    p_y_z: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    require_unit_constant(p_x_z, "P^X_Z")?;
    require_unit_constant(p_y_z, "P^Y_Z")?;
    let denom = p_x_z.add(p_y_z)?.sub(&p_x_z.mul(p_y_z)?)?;
    p_y_w.mul(p_x_z)?.div(&denom)
}

/// `P^(X ⊔_Z X)_W = P^X_W / (2 - P^X_Z)`.
pub fn self_glue_formula(p_x_w: &TruncatedSeries, p_x_z: &TruncatedSeries) -> Result<TruncatedSeries> {
    require_unit_constant(p_x_z, "P^X_Z")?;
    let two = TruncatedSeries::constant(2, p_x_z.trunc());
    p_x_w.div(&two.sub(p_x_z)?)
}

fn q(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An exact rational formula value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValue(pub BigRational);

impl FormulaValue {
    pub fn as_integer(&self) -> Option<u64> {
        if !self.0.is_integer() {
            return None;
        }
        u64::try_from(self.0.to_integer()).ok()
    }

    pub fn matches(&self, direct: u64) -> bool {
        self.0 == q(direct)
    }
}

impl std::fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `b^V_j(W)` for `W` in `X` and `j <= 2`, on a large gluing.
///
/// `x_w`, `x_z` and `v_y` are `b^X(W)`, `b^X(Z)` and `b^V(Y)` through index 3.
pub fn betti_formula_large(j: usize, x_w: &[u64], x_z: &[u64], v_y: &[u64]) -> Result<FormulaValue> {
    let need = [2, 3, 4][j.min(2)];
    if j > 2 {
        return Err(Error::Precondition(format!("no closed form for b_{j}")));
    }
    if x_w.len() < j + 1 || x_z.len() < need || v_y.len() < need {
        return Err(Error::Precondition("not enough Betti numbers".into()));
    }
    if x_z[1] == 0 {
        return Err(Error::Series("b^X_1(Z) = 0 contradicts a proper surjection".into()));
    }
    let m = q(x_z[1]);
    let w = |i: usize| q(x_w[i]);
    let z = |i: usize| q(x_z[i]);
    let y = |i: usize| q(v_y[i]);
    let value = match j {
        0 => w(0) * y(1) / &m,
        1 => (y(1) * (w(1) * &m - w(0) * z(2)) / &m + w(0) * y(2)) / &m,
        _ => {
            let k = z(2) / &m;
            w(0) / &m * (y(3) + y(1) / &m * (z(2) * &k - z(3)) - &k * y(2))
                + w(1) / &m * (y(2) - &k * y(1))
                + w(2) * y(1) / &m
        }
    };
    Ok(FormulaValue(value))
}

/// `b^V_j(W)` for `W` in `Y` and `j <= 2`, on a strongly large gluing.
pub fn betti_formula_strong(j: usize, y_w: &[u64], x_z: &[u64], y_z: &[u64]) -> Result<u64> {
    let get = |v: &[u64], i: usize| {
        v.get(i)
            .copied()
            .ok_or_else(|| Error::Precondition("not enough Betti numbers".into()))
    };
    Ok(match j {
        0 => get(y_w, 0)?,
        1 => get(y_w, 0)? * get(x_z, 1)? + get(y_w, 1)?,
        2 => {
            get(y_w, 0)? * get(y_z, 1)? * get(x_z, 1)?
                + get(y_w, 0)? * get(x_z, 2)?
                + get(y_w, 1)? * get(x_z, 1)?
                + get(y_w, 2)?
        }
        _ => return Err(Error::Precondition(format!("no closed form for b_{j}"))),
    })
}

/// `edim V` on a large gluing: `[b^V_1(Y)(edim X b^X_1(Z) - b^X_2(Z)) / b^X_1(Z) + b^V_2(Y)] / b^X_1(Z)`.
pub fn edim_formula_large(edim_x: usize, x_z: &[u64], v_y: &[u64]) -> FormulaValue {
    let m = q(x_z[1]);
    let value = (q(v_y[1]) * (q(edim_x as u64) * &m - q(x_z[2])) / &m + q(v_y[2])) / &m;
    FormulaValue(value)
}

/// `edim V = b^X_1(Z) + edim Y` on a strongly large gluing.
pub fn edim_formula_strong(edim_y: usize, x_z: &[u64]) -> usize {
    x_z[1] as usize + edim_y
}

/// The ratio `(m^2 + m) / (m b^Y_1(Z) + b^X_2(Z))` with `m = b^X_1(Z)`.
pub fn ci_ratio(x_z: &[u64], y_z: &[u64]) -> FormulaValue {
    let m = q(x_z[1]);
    let num = &m * &m + &m;
    let den = &m * q(y_z[1]) + q(x_z[2]);
    FormulaValue(if den.is_zero() { BigRational::zero() } else { num / den })
}

pub fn ci_ratio_is_two(r: &FormulaValue) -> bool {
    r.0 == BigRational::one() + BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::new(c.to_vec(), n)
    }

    #[test]
    fn strongly_large_examples() {
        let one_t = s(&[1, 1], 6);
        let node = strongly_large_formula(&one_t, &one_t, &one_t).unwrap();
        assert_eq!(node.coeffs(), &[1, 2, 2, 2, 2, 2, 2]);
        // W = Y agrees with the weakly large relation
        let p_v_y = strongly_large_formula(&TruncatedSeries::one(6), &one_t, &one_t).unwrap();
        let p_v_x = weakly_large_formula(&p_v_y, &one_t).unwrap();
        assert_eq!(p_v_x.coeffs()[..5], [1, 1, 1, 1, 1]);
    }

    #[test]
    fn weakly_large_examples() {
        let a = s(&[1, 1], 4);
        assert_eq!(weakly_large_formula(&a, &a).unwrap(), s(&[1], 3));
        assert!(weakly_large_formula(&a, &s(&[1, 0, 1], 4)).is_err());
        let w = large_subspace_formula(&TruncatedSeries::one(4), &s(&[1, 1, 1, 1, 1], 4), &a).unwrap();
        assert_eq!(w, weakly_large_formula(&s(&[1, 1, 1, 1, 1], 4), &a).unwrap());
    }

    #[test]
    fn self_glue_examples() {
        let line_origin = s(&[1, 1], 6);
        assert_eq!(self_glue_formula(&line_origin, &line_origin).unwrap().coeffs(), &[1, 2, 2, 2, 2, 2, 2]);
        // plane along a line, W = origin: (1+t)^2 / (1-t)
        let w = s(&[1, 2, 1], 6);
        assert_eq!(self_glue_formula(&w, &line_origin).unwrap().coeffs(), &[1, 3, 4, 4, 4, 4, 4]);
        // plane along the origin: (1+t)^2 / (1-2t-t^2)
        assert_eq!(self_glue_formula(&w, &w).unwrap().coeffs(), &[1, 4, 10, 24, 58, 140, 338]);
    }

    #[test]
    fn betti_formula_examples() {
        let node_x_w = [1, 1, 0, 0];
        let node_x_z = [1, 1, 0, 0];
        let node_v_y = [1, 1, 1, 1];
        assert!(betti_formula_large(0, &node_x_w, &node_x_z, &node_v_y).unwrap().matches(1));
        assert!(betti_formula_large(1, &node_x_w, &node_x_z, &node_v_y).unwrap().matches(2));
        assert!(betti_formula_large(2, &node_x_w, &node_x_z, &node_v_y).unwrap().matches(2));
        assert_eq!(betti_formula_strong(1, &[1, 1, 0], &[1, 1, 0], &[1, 1, 0]).unwrap(), 2);
        assert_eq!(betti_formula_strong(2, &[1, 1, 0], &[1, 1, 0], &[1, 1, 0]).unwrap(), 2);
        assert_eq!(betti_formula_strong(1, &[1, 1, 0], &[1, 2, 2], &[1, 1, 0]).unwrap(), 3);
        assert!(betti_formula_large(3, &node_x_w, &node_x_z, &node_v_y).is_err());
    }

    #[test]
    fn ci_ratios() {
        assert!(ci_ratio_is_two(&ci_ratio(&[1, 1, 0], &[1, 1, 0])));
        assert_eq!(ci_ratio(&[1, 2, 1], &[1, 2, 1]).to_string(), "6/5");
        assert_eq!(ci_ratio(&[1, 2, 2], &[1, 1, 0]).to_string(), "3/2");
    }

    #[test]
    fn edim_formulas() {
        assert_eq!(edim_formula_strong(1, &[1, 1, 0]), 2);
        assert!(edim_formula_large(1, &[1, 1, 0, 0], &[1, 1, 1, 1]).matches(2));
    }
}
