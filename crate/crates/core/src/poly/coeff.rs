use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number, kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in `i64` stay on the machine-word
/// path; anything larger is promoted to a `BigRational` and demoted again when
/// it shrinks back.
#[derive(Clone)]
pub enum Coeff {
    Small(i64, i64),
    Big(BigRational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(0, 1)
    }

    pub fn one() -> Self {
        Coeff::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::Small(n, 1)
    }

    /// `num/den` reduced; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        demote(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Coeff::Big(r) => r.clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(n, _) => *n < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_, d) => *d == 1,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(n, 1) => Some(*n),
            Coeff::Small(..) => None,
            Coeff::Big(r) if r.is_integer() => r.to_integer().to_i64(),
            Coeff::Big(_) => None,
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Small(0, _) => panic!("inverse of zero"),
            Coeff::Small(n, d) => {
                if *n < 0 {
                    from_i128(-(*d as i128), -(*n as i128))
                } else {
                    Coeff::Small(*d, *n)
                }
            }
            Coeff::Big(r) => demote(r.recip()),
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self * &other.inv()
    }
}

fn from_i128(mut n: i128, mut d: i128) -> Coeff {
    if d < 0 {
        n = -n;
        d = -d;
    }
    let g = n.gcd(&d);
    if g > 1 {
        n /= g;
        d /= g;
    }
    if n == 0 {
        return Coeff::Small(0, 1);
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Coeff::Small(n, d),
        _ => Coeff::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
    }
}

fn demote(r: BigRational) -> Coeff {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Coeff::Small(n, d),
        _ => Coeff::Big(r),
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => a == c && b == d,
            (Coeff::Big(a), Coeff::Big(b)) => a == b,
            // a `Big` value never fits in the small representation
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl std::hash::Hash for Coeff {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Coeff::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Coeff::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add for &'a Coeff {
    type Output = Coeff;
    fn add(self, other: &'a Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => from_i128(s, z),
                        None => demote(self.to_big() + other.to_big()),
                    },
                    _ => demote(self.to_big() + other.to_big()),
                }
            }
            _ => demote(self.to_big() + other.to_big()),
        }
    }
}

impl<'a> Sub for &'a Coeff {
    type Output = Coeff;
    fn sub(self, other: &'a Coeff) -> Coeff {
        self + &(-other)
    }
}

impl<'a> Mul for &'a Coeff {
    type Output = Coeff;
    fn mul(self, other: &'a Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => demote(self.to_big() * other.to_big()),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(n, d) => match n.checked_neg() {
                Some(m) => Coeff::Small(m, *d),
                None => Coeff::Big(-self.to_big()),
            },
            Coeff::Big(r) => demote(-r.clone()),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, other: Coeff) -> Coeff {
        &self + &other
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, other: Coeff) -> Coeff {
        &self - &other
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, other: Coeff) -> Coeff {
        &self * &other
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::zero()
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::one()
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(n, 1) => write!(f, "{n}"),
            Coeff::Small(n, d) => write!(f, "{n}/{d}"),
            Coeff::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Coeff::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Coeff {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad integer `{n}`"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad integer `{d}`"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(demote(BigRational::new(n, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(Coeff::ratio(4, -6), Coeff::ratio(-2, 3));
        assert_eq!(Coeff::ratio(0, -5), Coeff::zero());
        assert_eq!("6/4".parse::<Coeff>().unwrap(), Coeff::ratio(3, 2));
        assert_eq!(Coeff::ratio(3, 2).to_string(), "3/2");
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Coeff::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Coeff::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back, Coeff::Small(..)));
        assert_eq!(-&Coeff::from_int(i64::MIN), Coeff::from_big(-Coeff::from_int(i64::MIN).to_big()));
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Coeff::ratio(a, b);
            let y = Coeff::ratio(c, d);
            let bx = BigRational::new(a.into(), b.into());
            let by = BigRational::new(c.into(), d.into());
            prop_assert_eq!((&x + &y).to_big(), &bx + &by);
            prop_assert_eq!((&x - &y).to_big(), &bx - &by);
            prop_assert_eq!((&x * &y).to_big(), &bx * &by);
            if c != 0 {
                prop_assert_eq!(x.div(&y).to_big(), &bx / &by);
            }
            prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        }
    }
}
