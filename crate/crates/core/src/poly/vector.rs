use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use std::cmp::Ordering;

/// One term `coeff * mono * e_comp` of a free-module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Position-over-term comparison: a lower component index dominates, then the
/// monomial order decides.
#[inline]
pub fn cmp_pot(order: &MonomialOrder, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => order.cmp(a.1, b.1),
        o => o,
    }
}

/// Element of a free module `R^r`, terms sorted descending in the
/// position-over-term extension of some monomial order.
///
/// The order is not stored; every operation that needs it takes it explicitly
/// and all operands must have been built with the same one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<Term>, order: &MonomialOrder) -> Self {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| cmp_pot(order, (b.comp, &b.mono), (a.comp, &a.mono)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mono == t.mono => {
                    l.coeff = &l.coeff + &t.coeff;
                    if l.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Vector { terms: out }
    }

    /// `p * e_comp`.
    pub fn from_poly(p: &Polynomial, comp: u32, order: &MonomialOrder) -> Self {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| Term {
                comp,
                mono: m.clone(),
                coeff: c.clone(),
            })
            .collect();
        Self::from_terms(terms, order)
    }

    /// `Σ entries[k] * e_{offset+k}`.
    pub fn from_entries(entries: &[Polynomial], offset: u32, order: &MonomialOrder) -> Self {
        let mut terms = Vec::new();
        for (k, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term {
                    comp: offset + k as u32,
                    mono: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        Self::from_terms(terms, order)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// `deg(v) - deg(LM(v))`.
    pub fn ecart(&self) -> u32 {
        match self.lead() {
            Some(l) => self.max_degree() - l.mono.degree(),
            None => 0,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mono: t.mono.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// Rescales so the leading coefficient is one.
    pub fn monic(self) -> Vector {
        match self.lead() {
            Some(l) if !l.coeff.is_one() => {
                let inv = l.coeff.inv();
                self.scale(&inv)
            }
            _ => self,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `self * p` for a scalar polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial, order: &MonomialOrder) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.axpy(&Coeff::one(), &Monomial::one(m.nvars()), &self.mul_term(m, c), order);
        }
        acc
    }

    pub fn add(&self, other: &Vector, order: &MonomialOrder) -> Vector {
        let nvars = self
            .lead()
            .or(other.lead())
            .map(|t| t.mono.nvars())
            .unwrap_or(0);
        self.axpy(&Coeff::one(), &Monomial::one(nvars), other, order)
    }

    pub fn sub(&self, other: &Vector, order: &MonomialOrder) -> Vector {
        let nvars = self
            .lead()
            .or(other.lead())
            .map(|t| t.mono.nvars())
            .unwrap_or(0);
        self.axpy(&Coeff::from_int(-1), &Monomial::one(nvars), other, order)
    }

    /// `self + c * m * other`, merging sorted term lists.
    pub fn axpy(&self, c: &Coeff, m: &Monomial, other: &Vector, order: &MonomialOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Monomial> = None;
        while i < a.len() && j < b.len() {
            let bm = shifted.get_or_insert_with(|| b[j].mono.mul(m));
            match cmp_pot(order, (a[i].comp, &a[i].mono), (b[j].comp, bm)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        comp: b[j].comp,
                        mono: shifted.take().unwrap(),
                        coeff: c * &b[j].coeff,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].coeff + &(c * &b[j].coeff);
                    if !s.is_zero() {
                        out.push(Term {
                            comp: a[i].comp,
                            mono: a[i].mono.clone(),
                            coeff: s,
                        });
                    }
                    shifted = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (k, t) in b[j..].iter().enumerate() {
            let mono = match (k, shifted.take()) {
                (0, Some(sm)) => sm,
                _ => t.mono.mul(m),
            };
            out.push(Term {
                comp: t.comp,
                mono,
                coeff: c * &t.coeff,
            });
        }
        Vector { terms: out }
    }

    /// The polynomial in component `comp`.
    pub fn component(&self, comp: u32, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mono.clone(), t.coeff.clone())),
        )
    }

    /// Components `offset..offset+rank` as a list of polynomials.
    pub fn entries(&self, offset: u32, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.comp >= offset && ((t.comp - offset) as usize) < rank {
                buckets[(t.comp - offset) as usize].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(nvars, b))
            .collect()
    }

    /// Keeps only components `>= from`, shifted down by `from`.
    pub fn tail_from(&self, from: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= from)
                .map(|t| Term {
                    comp: t.comp - from,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }
}
