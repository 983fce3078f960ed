//! Integer power series truncated at a fixed order.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// `c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

fn overflow() -> Error {
    Error::Series("coefficient overflow".into())
}

impl TruncatedSeries {
    /// Coefficients beyond `trunc` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<i64>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, 0);
        TruncatedSeries { coeffs }
    }

    pub fn from_u64(coeffs: &[u64], trunc: usize) -> Result<Self> {
        let cs = coeffs
            .iter()
            .map(|&c| i64::try_from(c).map_err(|_| overflow()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cs, trunc))
    }

    pub fn zero(trunc: usize) -> Self {
        Self::new(Vec::new(), trunc)
    }

    pub fn one(trunc: usize) -> Self {
        Self::new(vec![1], trunc)
    }

    pub fn constant(c: i64, trunc: usize) -> Self {
        Self::new(vec![c], trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Same series at a lower order.
    pub fn truncate(&self, trunc: usize) -> Self {
        Self::new(self.coeffs.clone(), trunc.min(self.trunc()))
    }

    fn common(&self, other: &Self) -> usize {
        self.trunc().min(other.trunc())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.common(other);
        let cs = (0..=n)
            .map(|i| self.coeffs[i].checked_add(other.coeffs[i]).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cs, n))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.common(other);
        let cs = (0..=n)
            .map(|i| self.coeffs[i].checked_sub(other.coeffs[i]).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cs, n))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.common(other);
        let mut cs = vec![0i64; n + 1];
        for (i, &a) in self.coeffs[..=n].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                let p = a.checked_mul(b).ok_or_else(overflow)?;
                cs[i + j] = cs[i + j].checked_add(p).ok_or_else(overflow)?;
            }
        }
        Ok(Self::new(cs, n))
    }

    /// `self / other`, cancelling a common power `t^v` first.
    ///
    /// Exact through `t^(N - v)`. The leading coefficient of the divisor must
    /// divide every step exactly.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let Some(v) = other.valuation() else {
            return Err(Error::Series("division by zero series".into()));
        };
        let n = self.common(other);
        if v > n {
            return Err(Error::Series("divisor vanishes through the truncation order".into()));
        }
        if self.coeffs[..v].iter().any(|&c| c != 0) {
            return Err(Error::Series(format!(
                "numerator valuation below divisor valuation {v}: not a series quotient"
            )));
        }
        let a = &self.coeffs[v..=n];
        let b = &other.coeffs[v..=n];
        let m = n - v;
        let lead = b[0];
        let mut q = vec![0i64; m + 1];
        for k in 0..=m {
            let mut acc = a[k] as i128;
            for i in 1..=k {
                acc -= b[i] as i128 * q[k - i] as i128;
            }
            if acc % lead as i128 != 0 {
                return Err(Error::Series(format!("quotient coefficient {k} is not an integer")));
            }
            q[k] = i64::try_from(acc / lead as i128).map_err(|_| overflow())?;
        }
        Ok(Self::new(q, m))
    }

    /// `c_0 = 1` and every coefficient nonnegative.
    pub fn is_poincare_shaped(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (sign, abs) = if c < 0 { ("-", c.unsigned_abs()) } else { ("+", c as u64) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{abs}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{abs}*t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.trunc() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::new(c.to_vec(), n)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s(&[1, 1], 4).mul(&s(&[1, -1], 4)).unwrap(), s(&[1, 0, -1], 4));
        assert_eq!(s(&[1, 1], 4).div(&s(&[1, -1], 4)).unwrap(), s(&[1, 2, 2, 2, 2], 4));
        assert_eq!(s(&[0, 1, 1], 4).div(&s(&[0, 1], 4)).unwrap(), s(&[1, 1], 3));
        assert!(s(&[1], 4).div(&s(&[0, 1], 4)).is_err());
        assert!(s(&[1], 4).div(&s(&[], 4)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 2, 2], 2).to_string(), "1 + 2*t + 2*t^2 + O(t^3)");
        assert_eq!(s(&[1, -1, 0, 1], 3).to_string(), "1 - t + t^3 + O(t^4)");
        assert_eq!(s(&[], 1).to_string(), "0 + O(t^2)");
    }

    proptest! {
        #[test]
        fn quotient_times_divisor(a in prop::collection::vec(-9i64..10, 7), b in prop::collection::vec(-9i64..10, 6)) {
            let mut b = b;
            b[0] = 1;
            let (a, b) = (s(&a, 6), s(&b, 6));
            let q = a.div(&b).unwrap();
            prop_assert_eq!(q.mul(&b).unwrap(), a);
        }
    }
}
