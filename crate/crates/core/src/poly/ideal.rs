use super::coeff::Coeff;
use super::monomial::Monomial;
use super::mora::{standard_basis_vectors, weak_normal_form, Budget, ReducerSet, SbOptions};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::vector::{Term, Vector};
use crate::error::{Error, Result};
use std::sync::{Arc, OnceLock};

/// A standard basis: monic elements, no leading monomial divisible by another.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    nvars: usize,
    order: MonomialOrder,
    pub(crate) reducers: ReducerSet,
}

impl StandardBasis {
    pub(crate) fn from_reducers(nvars: usize, order: MonomialOrder, all: ReducerSet) -> Self {
        let leads: Vec<Monomial> = all
            .items
            .iter()
            .map(|r| r.v.lead().expect("nonzero").mono.clone())
            .collect();
        let mut reducers = ReducerSet::default();
        for (k, r) in all.items.into_iter().enumerate() {
            let redundant = leads.iter().enumerate().any(|(j, m)| {
                j != k && m.divides(&leads[k]) && (m != &leads[k] || j < k)
            });
            if !redundant {
                reducers.push(r);
            }
        }
        StandardBasis {
            nvars,
            order,
            reducers,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.reducers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reducers.len() == 0
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.reducers
            .items
            .iter()
            .map(|r| r.v.component(0, self.nvars))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reducers
            .items
            .iter()
            .map(|r| r.v.lead().expect("nonzero").mono.clone())
            .collect()
    }

    /// Weak normal form of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut budget = Budget::new("normal form");
        let h = Vector::from_poly(f, 0, &self.order);
        let r = weak_normal_form(h, &self.reducers, &self.order, u32::MAX, &mut budget)?;
        Ok(r.component(0, self.nvars))
    }

    /// Weak normal form together with the unit `u` such that `u*f - r` lies
    /// in the ideal.
    pub fn normal_form_with_unit(&self, f: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let mut budget = Budget::new("normal form");
        let mut h = Vector::from_poly(f, 0, &self.order);
        let one = Vector::from_terms(
            vec![Term {
                comp: 1,
                mono: Monomial::one(self.nvars),
                coeff: Coeff::one(),
            }],
            &self.order,
        );
        h = h.add(&one, &self.order);
        let r = weak_normal_form(h, &self.reducers, &self.order, 1, &mut budget)?;
        Ok((r.component(0, self.nvars), r.component(1, self.nvars)))
    }
}

/// An ideal of the localization of `Q[x_1..x_n]` determined by `order`
/// (`NegDegRevLex` gives the local ring at the origin), with a lazily
/// computed, write-once standard basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    sb: OnceLock<Arc<StandardBasis>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.gens == other.gens && self.order == other.order
    }
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Polynomial>, order: MonomialOrder) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            nvars,
            gens,
            order,
            sb: OnceLock::new(),
        }
    }

    /// Ideal of the local ring at the origin.
    pub fn local(nvars: usize, gens: Vec<Polynomial>) -> Self {
        Self::new(nvars, gens, MonomialOrder::NegDegRevLex)
    }

    pub fn zero(nvars: usize) -> Self {
        Self::local(nvars, Vec::new())
    }

    /// The maximal ideal `<x_1, ..., x_n>`.
    pub fn maximal(nvars: usize) -> Self {
        Self::local(nvars, (0..nvars).map(|i| Polynomial::variable(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn standard_basis(&self) -> Result<Arc<StandardBasis>> {
        if let Some(sb) = self.sb.get() {
            return Ok(sb.clone());
        }
        let gens = self
            .gens
            .iter()
            .map(|g| (Vector::from_poly(g, 0, &self.order), false))
            .collect();
        let out = standard_basis_vectors(gens, &self.order, &SbOptions::ideal(), "standard basis")?;
        let sb = Arc::new(StandardBasis::from_reducers(self.nvars, self.order.clone(), out.basis));
        let _ = self.sb.set(sb);
        Ok(self.sb.get().expect("just set").clone())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.standard_basis()?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two-way membership.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_all(other.generators())? && other.contains_all(self.generators())?)
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.standard_basis()?.leading_monomials())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.leading_monomials()?.iter().any(|m| m.is_one()))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens, self.order.clone())
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.nvars, gens, self.order.clone())
    }

    /// `I ∩ J` via `<t*I, (1-t)*J>` with the tag variable `t` eliminated.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let n = self.nvars;
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::variable(n + 1, 0);
        let one_minus_t = Polynomial::one(n + 1).sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.remap(n + 1, &shift).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.remap(n + 1, &shift).mul(&one_minus_t));
        }
        let kept = eliminate(n + 1, 1, gens)?;
        Ok(Ideal::new(n, kept, self.order.clone()))
    }

    /// Krull dimension of the quotient, read off the leading monomials.
    pub fn leading_ideal_dimension(&self) -> Result<usize> {
        let leads = self.leading_monomials()?;
        if leads.iter().any(|m| m.is_one()) {
            return Err(Error::Precondition("the unit ideal has no dimension".into()));
        }
        Ok(monomial_dimension(self.nvars, &leads))
    }
}

/// Largest number of variables whose monomials avoid every monomial in `leads`.
pub fn monomial_dimension(nvars: usize, leads: &[Monomial]) -> usize {
    assert!(nvars < 32, "too many variables for subset enumeration");
    let supports: Vec<u32> = leads
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for set in 0u32..(1u32 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Generators of `<gens> ∩ k[x_split..]` localized at the origin in the
/// remaining variables, remapped to `nvars - split` variables.
///
/// The eliminated block carries a global order, which makes the block order
/// an elimination order over the local ring in the other variables.
pub fn eliminate(nvars: usize, split: usize, gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let order = MonomialOrder::elimination(split);
    let ideal = Ideal::new(nvars, gens, order);
    let sb = ideal.standard_basis()?;
    let keep = nvars - split;
    let mut back = vec![0; nvars];
    for (i, b) in back.iter_mut().enumerate().skip(split) {
        *b = i - split;
    }
    let mut out = Vec::new();
    for g in sb.polynomials() {
        if (0..split).any(|v| g.uses_var(v)) {
            continue;
        }
        out.push(g.remap(keep, &back));
    }
    Ok(out)
}

/// Weak normal form of `f` against the list `g` (not completed first).
pub fn mora_normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let set = ReducerSet::from_vectors(g.iter().map(|p| Vector::from_poly(p, 0, order)));
    let mut budget = Budget::new("normal form");
    let r = weak_normal_form(Vector::from_poly(f, 0, order), &set, order, u32::MAX, &mut budget)?;
    Ok(r.component(0, f.nvars()))
}

/// Whether every s-polynomial of `g` has weak normal form zero against `g`.
pub fn is_standard_basis(g: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let vs: Vec<Vector> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Vector::from_poly(p, 0, order).monic())
        .collect();
    let set = ReducerSet::from_vectors(vs.iter().cloned());
    let mut budget = Budget::new("confluence check");
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (a, b) = (vs[i].lead().unwrap(), vs[j].lead().unwrap());
            let lcm = a.mono.lcm(&b.mono);
            let s = vs[i]
                .mul_term(&a.mono.quotient_of(&lcm), &Coeff::one())
                .axpy(&Coeff::from_int(-1), &b.mono.quotient_of(&lcm), &vs[j], order);
            if !weak_normal_form(s, &set, order, u32::MAX, &mut budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Kernel of `Q[s]_loc -> Q[t]_loc / target`, `s_i -> images[i]`.
///
/// Computed from the graph ideal `target + <s_i - images[i]>` in `(t, s)` by
/// eliminating `t` under an order that is global on `t` and local on `s`.
/// This is the kernel of the local map whenever the map is surjective; the
/// surjectivity checks in the germ layer certify that before relying on it.
pub fn map_kernel(source_nvars: usize, target: &Ideal, images: &[Polynomial]) -> Result<Ideal> {
    if images.len() != source_nvars {
        return Err(Error::Dimension {
            expected: source_nvars,
            found: images.len(),
        });
    }
    for (i, p) in images.iter().enumerate() {
        if !p.constant_term().is_zero() {
            return Err(Error::Precondition(format!(
                "image of source variable {i} has a nonzero constant term"
            )));
        }
    }
    let m = target.nvars();
    let total = m + source_nvars;
    let gens = graph_ideal(source_nvars, target, images);
    let kept = eliminate(total, m, gens)?;
    Ok(Ideal::local(source_nvars, kept))
}

/// `target(t) + <s_i - images_i(t)>` in the variables `(t, s)`.
pub(crate) fn graph_ideal(source_nvars: usize, target: &Ideal, images: &[Polynomial]) -> Vec<Polynomial> {
    let m = target.nvars();
    let total = m + source_nvars;
    let tmap: Vec<usize> = (0..m).collect();
    let mut gens: Vec<Polynomial> = target.generators().iter().map(|g| g.remap(total, &tmap)).collect();
    for (i, img) in images.iter().enumerate() {
        let s = Polynomial::variable(total, m + i);
        gens.push(s.sub(&img.remap(total, &tmap)));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;
    use std::cmp::Ordering;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(s, &names(vars)).unwrap()
    }

    fn ideal(gens: &[&str], vars: &[&str]) -> Ideal {
        Ideal::local(vars.len(), gens.iter().map(|g| p(g, vars)).collect())
    }

    #[test]
    fn compare_examples() {
        let ord = MonomialOrder::NegDegRevLex;
        let x2 = Monomial::from_exponents(&[2]);
        let x = Monomial::from_exponents(&[1]);
        assert_eq!(ord.compare(&x2, &x).unwrap(), Ordering::Less);
        assert_eq!(MonomialOrder::DegRevLex.compare(&x, &x).unwrap(), Ordering::Equal);
        assert_eq!(MonomialOrder::DegRevLex.compare(&x2, &x).unwrap(), Ordering::Greater);
    }

    #[test]
    fn normal_form_examples() {
        let ord = MonomialOrder::NegDegRevLex;
        let v = ["x"];
        assert!(mora_normal_form(&p("x", &v), &[p("x - x^2", &v)], &ord).unwrap().is_zero());
        let v2 = ["x", "y"];
        let r = mora_normal_form(&p("y^2", &v2), &[p("x*y", &v2)], &ord).unwrap();
        assert_eq!(r, p("y^2", &v2));
        assert!(mora_normal_form(&p("x^3 + x^5", &v), &[p("x^3", &v)], &ord).unwrap().is_zero());
        let f = p("x^2 + y", &v2);
        assert_eq!(mora_normal_form(&f, &[], &ord).unwrap(), f);
    }

    #[test]
    fn standard_basis_examples() {
        let v = ["x", "y"];
        let i = ideal(&["x*y"], &v);
        assert_eq!(i.standard_basis().unwrap().polynomials(), vec![p("x*y", &v)]);

        let i = ideal(&["x - x^2"], &["x"]);
        assert_eq!(i.leading_monomials().unwrap(), vec![Monomial::from_exponents(&[1])]);

        // colength must equal the intersection multiplicity of x^2 and
        // y*(x + y^2): 2 + 4 = 6, so the pure y-power in the leading ideal is y^5
        let i = ideal(&["x^2", "x*y + y^3"], &v);
        let mut leads = i.leading_monomials().unwrap();
        leads.sort_by_key(|m| (m.degree(), m.exponent(1)));
        let expect = vec![
            Monomial::from_exponents(&[2, 0]),
            Monomial::from_exponents(&[1, 1]),
            Monomial::from_exponents(&[0, 5]),
        ];
        assert_eq!(leads, expect);
        let standard: usize = (0..8u32)
            .flat_map(|a| (0..8u32).map(move |b| Monomial::from_exponents(&[a, b])))
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count();
        assert_eq!(standard, 6);
        let sb = i.standard_basis().unwrap().polynomials();
        assert!(is_standard_basis(&sb, &MonomialOrder::NegDegRevLex).unwrap());
    }

    #[test]
    fn membership_examples() {
        assert!(ideal(&["x - x^2"], &["x"]).contains(&p("x", &["x"])).unwrap());
        let v = ["x", "y"];
        assert!(!ideal(&["x*y"], &v).contains(&p("x", &v)).unwrap());
        assert!(ideal(&["x*y"], &v).contains(&p("x^2*y^3", &v)).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let v = ["x", "y"];
        let i = ideal(&["x"], &v).intersection(&ideal(&["y"], &v)).unwrap();
        assert!(i.same_as(&ideal(&["x*y"], &v)).unwrap());
        let a = ideal(&["x^2", "x*y + y^3"], &v);
        assert!(a.intersection(&a).unwrap().same_as(&a).unwrap());
        let i = ideal(&["x^2"], &v).intersection(&ideal(&["x^3"], &v)).unwrap();
        assert!(i.same_as(&ideal(&["x^3"], &v)).unwrap());
    }

    #[test]
    fn map_kernel_examples() {
        // C{x} -> C, x -> 0
        let k = map_kernel(1, &Ideal::zero(0), &[Polynomial::zero(0)]).unwrap();
        assert!(k.same_as(&ideal(&["x"], &["x"])).unwrap());
        // C{x1,x2} -> C{z}, x1 -> z, x2 -> 0
        let z = ["z"];
        let k = map_kernel(2, &Ideal::zero(1), &[p("z", &z), Polynomial::zero(1)]).unwrap();
        assert!(k.same_as(&ideal(&["x2"], &["x1", "x2"])).unwrap());
        // C{x} -> C{z}/<z^2>, x -> z
        let k = map_kernel(1, &ideal(&["z^2"], &z), &[p("z", &z)]).unwrap();
        assert!(k.same_as(&ideal(&["x^2"], &["x"])).unwrap());
        // non-local image
        assert!(map_kernel(1, &Ideal::zero(1), &[p("1 + z", &z)]).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(ideal(&["x*y"], &["x", "y"]).leading_ideal_dimension().unwrap(), 1);
        assert_eq!(Ideal::zero(3).leading_ideal_dimension().unwrap(), 3);
        assert_eq!(ideal(&["x", "y"], &["x", "y"]).leading_ideal_dimension().unwrap(), 0);
        assert!(ideal(&["1 + x"], &["x"]).leading_ideal_dimension().is_err());
    }

    #[test]
    fn unit_tracking() {
        // x = (1 - x)^{-1} (x - x^2): the weak normal form of x is 0 with unit 1 - x
        let i = ideal(&["x - x^2"], &["x"]);
        let sb = i.standard_basis().unwrap();
        let (r, u) = sb.normal_form_with_unit(&p("x", &["x"])).unwrap();
        assert!(r.is_zero());
        assert!(!u.constant_term().is_zero());
        assert!(i.contains(&u.mul(&p("x", &["x"])).sub(&r)).unwrap());
    }
}
