use super::monomial::Monomial;
use crate::error::Error;
use std::cmp::Ordering;

/// Monomial orders used by the engine.
///
/// `NegDegRevLex` is the local degree order (1 > x_i), `DegRevLex` the global
/// one. A `Block` order compares the exponents of the first `split` variables
/// with `first` and breaks ties on the remaining variables with `second`; with a
/// global first block it is an elimination order for those variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    NegDegRevLex,
    DegRevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order that eliminates the first `split` variables (global on them,
    /// local on the rest).
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::DegRevLex),
            second: Box::new(MonomialOrder::NegDegRevLex),
        }
    }

    pub fn is_local(&self) -> bool {
        match self {
            MonomialOrder::NegDegRevLex => true,
            MonomialOrder::DegRevLex => false,
            MonomialOrder::Block { first, second, .. } => first.is_local() && second.is_local(),
        }
    }

    pub fn is_global(&self) -> bool {
        match self {
            MonomialOrder::NegDegRevLex => false,
            MonomialOrder::DegRevLex => true,
            MonomialOrder::Block { first, second, .. } => {
                first.is_global() && second.is_global()
            }
        }
    }

    /// Compare two monomials of the same length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, Error> {
        if a.nvars() != b.nvars() {
            return Err(Error::Dimension {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::NegDegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => revlex(a.raw(), b.raw()),
                o => o.reverse(),
            },
            MonomialOrder::DegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => revlex(a.raw(), b.raw()),
                o => o,
            },
            _ => self.cmp_slices(a.raw(), b.raw()),
        }
    }

    fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::NegDegRevLex => match deg(a).cmp(&deg(b)) {
                Ordering::Equal => revlex(a, b),
                o => o.reverse(),
            },
            MonomialOrder::DegRevLex => match deg(a).cmp(&deg(b)) {
                Ordering::Equal => revlex(a, b),
                o => o,
            },
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let s = (*split).min(a.len());
                match first.cmp_slices(&a[..s], &b[..s]) {
                    Ordering::Equal => second.cmp_slices(&a[s..], &b[s..]),
                    o => o,
                }
            }
        }
    }
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent in
/// the last differing variable is larger.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn local_prefers_lower_degree() {
        let ord = MonomialOrder::NegDegRevLex;
        assert_eq!(ord.compare(&m(&[2]), &m(&[1])).unwrap(), Ordering::Less);
        assert_eq!(ord.compare(&m(&[1]), &m(&[1])).unwrap(), Ordering::Equal);
        assert_eq!(ord.compare(&m(&[0, 0]), &m(&[1, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn global_prefers_higher_degree() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(ord.compare(&m(&[2]), &m(&[1])).unwrap(), Ordering::Greater);
        // x*z < y^2 in degrevlex on (x, y, z)
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let ord = MonomialOrder::NegDegRevLex;
        assert!(ord.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn elimination_block() {
        let ord = MonomialOrder::elimination(1);
        // t*x^5 vs x: first block decides, t wins
        assert_eq!(ord.cmp(&m(&[1, 5]), &m(&[0, 1])), Ordering::Greater);
        // same t-part: local on the rest
        assert_eq!(ord.cmp(&m(&[1, 2]), &m(&[1, 1])), Ordering::Less);
        assert!(!ord.is_local());
        assert!(!ord.is_global());
    }
}
