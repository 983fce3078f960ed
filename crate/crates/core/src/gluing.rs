//! The glued germ `X ⊔_Z Y`, presented as the fiber product
//! `O_X ×_{O_Z} O_Y` of two surjections onto `O_Z`.

use crate::error::{Error, Result};
use crate::germ::{AnalyticGerm, GermSurjection, Subspace};
use crate::poly::{with_step_cap, Ideal, Polynomial};
use crate::resolution::syzygy::syzygies;
use serde::Serialize;
use std::sync::Arc;

/// Two surjections `alpha: O_X -> O_Z` and `beta: O_Y -> O_Z` with nonzero
/// kernels.
#[derive(Clone, Debug)]
pub struct GluingDatum {
    alpha: Arc<GermSurjection>,
    beta: Arc<GermSurjection>,
}

impl GluingDatum {
    pub fn new(alpha: Arc<GermSurjection>, beta: Arc<GermSurjection>) -> Result<Self> {
        let (za, zb) = (alpha.target(), beta.target());
        if !Arc::ptr_eq(za, zb) && (za.vars() != zb.vars() || !za.relations().same_as(zb.relations())?) {
            return Err(Error::Precondition(format!(
                "`{}` and `{}` have different targets",
                alpha.name(),
                beta.name()
            )));
        }
        for m in [&alpha, &beta] {
            let source = m.source().relations();
            if source.contains_all(m.kernel()?.generators())? {
                return Err(Error::Degenerate(format!(
                    "`{}` is an isomorphism onto `{}`",
                    m.name(),
                    m.target().name()
                )));
            }
        }
        Ok(GluingDatum { alpha, beta })
    }

    pub fn alpha(&self) -> &Arc<GermSurjection> {
        &self.alpha
    }

    pub fn beta(&self) -> &Arc<GermSurjection> {
        &self.beta
    }

    pub fn x(&self) -> &Arc<AnalyticGerm> {
        self.alpha.source()
    }

    pub fn y(&self) -> &Arc<AnalyticGerm> {
        self.beta.source()
    }

    pub fn z(&self) -> &Arc<AnalyticGerm> {
        self.alpha.target()
    }

    /// Whether `alpha` and `beta` are the same map.
    pub fn is_self_glue(&self) -> bool {
        Arc::ptr_eq(&self.alpha, &self.beta)
            || (Arc::ptr_eq(self.x(), self.y()) && self.alpha.images() == self.beta.images())
    }

    /// `Z` is the reduced point.
    pub fn z_is_point(&self) -> Result<bool> {
        let z = self.z();
        let vars: Vec<Polynomial> = (0..z.nvars()).map(|i| Polynomial::variable(z.nvars(), i)).collect();
        z.relations().contains_all(&vars)
    }
}

/// How the cross lifts `q_i` and `s_j` are chosen. Any choice gives an
/// isomorphic presentation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LiftStrategy {
    /// Normal form of the target element against the graph ideal.
    #[default]
    NormalForm,
    /// As `NormalForm`, plus the first kernel generator of the lifting map.
    ShiftedByKernel,
}

/// Which factor of the gluing a subspace lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A presentation of `O_X ×_{O_Z} O_Y` with its two projections.
#[derive(Clone, Debug)]
pub struct GluedGerm {
    presentation: Arc<AnalyticGerm>,
    pi1: Arc<GermSurjection>,
    pi2: Arc<GermSurjection>,
    datum: GluingDatum,
}

impl GluedGerm {
    pub fn presentation(&self) -> &Arc<AnalyticGerm> {
        &self.presentation
    }

    pub fn pi1(&self) -> &Arc<GermSurjection> {
        &self.pi1
    }

    pub fn pi2(&self) -> &Arc<GermSurjection> {
        &self.pi2
    }

    pub fn datum(&self) -> &GluingDatum {
        &self.datum
    }

    pub fn projection(&self, side: Side) -> &Arc<GermSurjection> {
        match side {
            Side::X => &self.pi1,
            Side::Y => &self.pi2,
        }
    }

    /// Preimage of a subspace of `X` or `Y` under the matching projection.
    pub fn transport(&self, side: Side, w: &Subspace) -> Result<Subspace> {
        let pi = self.projection(side);
        if w.ambient().vars() != pi.target().vars() {
            return Err(Error::Precondition(format!(
                "subspace `{}` does not live in `{}`",
                w.name(),
                pi.target().name()
            )));
        }
        pi.transport(w)
    }

    /// `(dim V, dim V == max(dim X, dim Y))`.
    pub fn dimension_check(&self) -> Result<(usize, bool)> {
        let d = self.presentation.krull_dim()?;
        let expected = self.datum.x().krull_dim()?.max(self.datum.y().krull_dim()?);
        Ok((d, d == expected))
    }

    /// `alpha ∘ pi1 = beta ∘ pi2` on every generator, modulo the relations of `Z`.
    pub fn commutes(&self) -> Result<bool> {
        let z = self.datum.z();
        let (a, b) = (self.datum.alpha(), self.datum.beta());
        for (p1, p2) in self.pi1.images().iter().zip(self.pi2.images()) {
            let lhs = p1.substitute(a.images(), z.nvars());
            let rhs = p2.substitute(b.images(), z.nvars());
            if !z.relations().contains(&lhs.sub(&rhs))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn glued_dim(v: &GluedGerm) -> Result<(usize, bool)> {
    v.dimension_check()
}

pub fn fiber_product_presentation(datum: &GluingDatum) -> Result<GluedGerm> {
    fiber_product_with(datum, LiftStrategy::default())
}

/// Generators `u_i = (x_i, q_i)`, `v_j = (s_j, y_j)` and `k_t = (kappa_t, 0)`
/// for generators `kappa_t` of `ker alpha`; the relations are
/// `ker(-> O_X) ∩ ker(-> O_Y)`. Variables that a relation expresses as a
/// polynomial in the others are then eliminated.
pub fn fiber_product_with(datum: &GluingDatum, lifts: LiftStrategy) -> Result<GluedGerm> {
    let (alpha, beta) = (datum.alpha(), datum.beta());
    let (x, y) = (datum.x(), datum.y());
    let (nx, ny) = (x.nvars(), y.nvars());

    let q: Vec<Polynomial> = alpha
        .images()
        .iter()
        .map(|f| lift(beta, f, lifts))
        .collect::<Result<_>>()?;
    let s: Vec<Polynomial> = beta
        .images()
        .iter()
        .map(|f| lift(alpha, f, lifts))
        .collect::<Result<_>>()?;
    let kappa = minimal_modulo(x.relations(), alpha.kernel()?.generators().to_vec())?;
    let nk = kappa.len();
    let p = nx + ny + nk;

    let u_of = |i: usize| Polynomial::variable(p, i);
    let v_of = |j: usize| Polynomial::variable(p, nx + j);
    let k_of = |t: usize| Polynomial::variable(p, nx + ny + t);
    let x_to_u: Vec<usize> = (0..nx).collect();
    let y_to_v: Vec<usize> = (nx..nx + ny).collect();

    // ker(u -> x, v -> s, k -> kappa) and ker(u -> q, v -> y, k -> 0)
    let mut ka: Vec<Polynomial> = x.relations().generators().iter().map(|r| r.remap(p, &x_to_u)).collect();
    ka.extend((0..ny).map(|j| v_of(j).sub(&s[j].remap(p, &x_to_u))));
    ka.extend((0..nk).map(|t| k_of(t).sub(&kappa[t].remap(p, &x_to_u))));
    let mut kb: Vec<Polynomial> = y.relations().generators().iter().map(|r| r.remap(p, &y_to_v)).collect();
    kb.extend((0..nx).map(|i| u_of(i).sub(&q[i].remap(p, &y_to_v))));
    kb.extend((0..nk).map(k_of));
    let (ka, kb, shared) = substitute_shared(p, ka, kb);
    let relations = Ideal::local(shared.len(), ka).intersection(&Ideal::local(shared.len(), kb))?;

    let mut pi1: Vec<Polynomial> = (0..nx).map(|i| Polynomial::variable(nx, i)).collect();
    pi1.extend(s.iter().cloned());
    pi1.extend(kappa.iter().cloned());
    let mut pi2: Vec<Polynomial> = q.clone();
    pi2.extend((0..ny).map(|j| Polynomial::variable(ny, j)));
    pi2.extend((0..nk).map(|_| Polynomial::zero(ny)));

    let mut names = block_names("u", nx);
    names.extend(block_names("v", ny));
    names.extend(block_names("k", nk));
    let names: Vec<String> = shared.iter().map(|&i| names[i].clone()).collect();
    let pi1: Vec<Polynomial> = shared.iter().map(|&i| pi1[i].clone()).collect();
    let pi2: Vec<Polynomial> = shared.iter().map(|&i| pi2[i].clone()).collect();
    assemble(datum, names, relations.generators().to_vec(), pi1, pi2)
}

/// Drops redundant variables and generators and builds the projections.
fn assemble(
    datum: &GluingDatum,
    names: Vec<String>,
    relations: Vec<Polynomial>,
    pi1: Vec<Polynomial>,
    pi2: Vec<Polynomial>,
) -> Result<GluedGerm> {
    let (x, y) = (datum.x(), datum.y());
    let (names, gens, keep) = eliminate_redundant_variables(names, relations)?;
    let pi1: Vec<Polynomial> = keep.iter().map(|&i| pi1[i].clone()).collect();
    let pi2: Vec<Polynomial> = keep.iter().map(|&i| pi2[i].clone()).collect();
    let gens = minimal_generators(names.len(), gens)?;

    let name = format!("{}+{}", x.name(), y.name());
    let presentation = Arc::new(AnalyticGerm::new(name.clone(), names, gens)?);
    let pi1 = GermSurjection::new(format!("{name}->{}", x.name()), presentation.clone(), x.clone(), pi1)?;
    let pi2 = GermSurjection::new(format!("{name}->{}", y.name()), presentation.clone(), y.clone(), pi2)?;
    Ok(GluedGerm {
        presentation,
        pi1: Arc::new(pi1),
        pi2: Arc::new(pi2),
        datum: datum.clone(),
    })
}

/// `X ⊔ Y` along the reduced point.
pub fn glue_at_point(x: Arc<AnalyticGerm>, y: Arc<AnalyticGerm>) -> Result<GluedGerm> {
    let z = Arc::new(AnalyticGerm::point("pt"));
    let to_point = |g: Arc<AnalyticGerm>| {
        let images = vec![Polynomial::zero(0); g.nvars()];
        GermSurjection::new(format!("{}->pt", g.name()), g, z.clone(), images).map(Arc::new)
    };
    fiber_product_presentation(&GluingDatum::new(to_point(x)?, to_point(y)?)?)
}

/// `X ⊔_Z X` along the quotient `O_X -> O_X / I_Z`.
///
/// Presented directly as `O_X ⊕ I_Z`: generators `u_i = (x_i, x_i)` and
/// `k_t = (kappa_t, 0)` for minimal generators `kappa_t` of `I_Z` modulo
/// `I_X`, with relations `I_X(u)`, `k_s (k_t - kappa_t(u))` and
/// `sum a_t(u) k_t` for each syzygy `a` of the `kappa_t` over `O_X`.
pub fn self_glue(sub: &Subspace) -> Result<GluedGerm> {
    let x = sub.ambient().clone();
    let z = Arc::new(sub.as_germ(sub.name())?);
    let n = x.nvars();
    let images = (0..n).map(|i| Polynomial::variable(n, i)).collect();
    let alpha = Arc::new(GermSurjection::new(
        format!("{}->{}", x.name(), z.name()),
        x.clone(),
        z,
        images,
    )?);
    let datum = GluingDatum::new(alpha.clone(), alpha)?;

    let kappa = minimal_modulo(x.relations(), sub.equations().to_vec())?;
    let nk = kappa.len();
    let p = n + nk;
    let u: Vec<usize> = (0..n).collect();
    let k_of = |t: usize| Polynomial::variable(p, n + t);
    let mut relations: Vec<Polynomial> = x.relations().generators().iter().map(|r| r.remap(p, &u)).collect();
    for s in 0..nk {
        for (t, kt) in kappa.iter().enumerate() {
            relations.push(k_of(s).mul(&k_of(t).sub(&kt.remap(p, &u))));
        }
    }
    let ring = x.relations().standard_basis()?;
    let cols: Vec<Vec<Polynomial>> = kappa.iter().map(|g| vec![g.clone()]).collect();
    for a in syzygies(&ring, 1, &cols)? {
        if a.iter().all(|at| ring.normal_form(at).is_ok_and(|r| r.is_zero())) {
            continue;
        }
        let mut r = Polynomial::zero(p);
        for (t, at) in a.iter().enumerate() {
            r = r.add(&at.remap(p, &u).mul(&k_of(t)));
        }
        relations.push(r);
    }

    let mut names = block_names("u", n);
    names.extend(block_names("k", nk));
    let mut pi1: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(n, i)).collect();
    pi1.extend(kappa.iter().cloned());
    let mut pi2: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(n, i)).collect();
    pi2.extend((0..nk).map(|_| Polynomial::zero(n)));
    assemble(&datum, names, relations, pi1, pi2)
}

fn lift(m: &GermSurjection, f: &Polynomial, strategy: LiftStrategy) -> Result<Polynomial> {
    let base = m.lift(f)?;
    match strategy {
        LiftStrategy::NormalForm => Ok(base),
        LiftStrategy::ShiftedByKernel => {
            let source = m.source().relations();
            let shift = m
                .kernel()?
                .generators()
                .iter()
                .find(|g| !source.contains(g).unwrap_or(true))
                .cloned();
            Ok(shift.map_or(base.clone(), |k| base.add(&k)))
        }
    }
}

fn block_names(prefix: &str, n: usize) -> Vec<String> {
    match n {
        1 => vec![prefix.to_string()],
        _ => (1..=n).map(|i| format!("{prefix}{i}")).collect(),
    }
}

/// A variable `w` occurring in `g` only through one term `c*w`, so that
/// `g = 0` solves for `w`.
fn solved_variable(g: &Polynomial, w: usize) -> Option<Polynomial> {
    let mut coeff = None;
    let mut rest = Vec::new();
    for (m, c) in g.terms() {
        if m.exponent(w) == 0 {
            rest.push((m.clone(), c.clone()));
        } else if m.degree() == 1 && coeff.is_none() {
            coeff = Some(c.clone());
        } else {
            return None;
        }
    }
    let c = coeff?;
    Some(Polynomial::from_terms(g.nvars(), rest).scale(&(-c.inv())))
}

/// Images of `n` variables after dropping `w` and setting it to `value`.
fn dropping(n: usize, w: usize, value: &Polynomial) -> Vec<Polynomial> {
    let mut images: Vec<Polynomial> = (0..n)
        .map(|i| match i.cmp(&w) {
            std::cmp::Ordering::Less => Polynomial::variable(n - 1, i),
            std::cmp::Ordering::Equal => Polynomial::zero(n - 1),
            std::cmp::Ordering::Greater => Polynomial::variable(n - 1, i - 1),
        })
        .collect();
    images[w] = value.substitute(&images, n - 1);
    images
}

fn rewrite(gens: &[Polynomial], images: &[Polynomial], n: usize) -> Vec<Polynomial> {
    gens.iter().map(|h| h.substitute(images, n)).filter(|h| !h.is_zero()).collect()
}

fn proportional(g: &Polynomial, h: &Polynomial) -> bool {
    let (Some((_, a)), Some((_, b))) = (g.terms().first(), h.terms().first()) else {
        return false;
    };
    g.len() == h.len() && g.scale(&b.div(a)) == *h
}

/// Substitutes away variables solved by a relation common to `ka` and `kb`.
/// Such a relation lies in the intersection, so the intersection of the
/// rewritten ideals plus the dropped relations is the original one, and the
/// dropped variables are redundant in the quotient. Returns the rewritten
/// ideals and the indices of the surviving variables.
fn substitute_shared(
    nvars: usize,
    mut ka: Vec<Polynomial>,
    mut kb: Vec<Polynomial>,
) -> (Vec<Polynomial>, Vec<Polynomial>, Vec<usize>) {
    let mut keep: Vec<usize> = (0..nvars).collect();
    'outer: loop {
        let n = keep.len();
        for g in &ka {
            if !kb.iter().any(|h| proportional(g, h)) {
                continue;
            }
            for w in (0..n).rev() {
                let Some(value) = solved_variable(g, w) else { continue };
                let images = dropping(n, w, &value);
                ka = rewrite(&ka, &images, n - 1);
                kb = rewrite(&kb, &images, n - 1);
                keep.remove(w);
                continue 'outer;
            }
        }
        return (ka, kb, keep);
    }
}

/// Repeatedly removes a variable that some relation solves for, trying the
/// last variables first. Returns the surviving names, the rewritten
/// relations and the indices of the surviving original variables.
fn eliminate_redundant_variables(
    mut names: Vec<String>,
    mut gens: Vec<Polynomial>,
) -> Result<(Vec<String>, Vec<Polynomial>, Vec<usize>)> {
    let mut keep: Vec<usize> = (0..names.len()).collect();
    'outer: loop {
        let n = names.len();
        let mut candidates = gens.clone();
        candidates.extend(Ideal::local(n, gens.clone()).standard_basis()?.polynomials());
        for w in (0..n).rev() {
            for g in &candidates {
                let Some(value) = solved_variable(g, w) else { continue };
                gens = rewrite(&gens, &dropping(n, w, &value), n - 1);
                names.remove(w);
                keep.remove(w);
                continue 'outer;
            }
        }
        return Ok((names, gens, keep));
    }
}

const REDUNDANCY_STEPS: u64 = 2_000;

/// Drops generators lying in `base` plus the others, last first.
fn minimal_modulo(base: &Ideal, mut gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let others: Vec<Polynomial> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        if base.with_generators(&others).contains(&gens[i])? {
            gens.remove(i);
        }
    }
    Ok(gens)
}

/// Drops generators lying in the ideal of the others, last first. A test that
/// exceeds `REDUNDANCY_STEPS` keeps the generator.
fn minimal_generators(nvars: usize, mut gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    gens.retain(|g| !g.is_zero());
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let others: Vec<Polynomial> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        match with_step_cap(REDUNDANCY_STEPS, || Ideal::local(nvars, others).contains(&gens[i])) {
            Ok(true) => {
                gens.remove(i);
            }
            Ok(false) | Err(Error::StepCap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::map_kernel;
    use crate::resolution::betti_numbers;

    fn germ(name: &str, vars: &[&str], rels: &[&str]) -> Arc<AnalyticGerm> {
        Arc::new(AnalyticGerm::parse(name, vars, rels).unwrap())
    }

    fn surj(name: &str, s: &Arc<AnalyticGerm>, t: &Arc<AnalyticGerm>, imgs: &[&str]) -> Arc<GermSurjection> {
        Arc::new(GermSurjection::parse(name, s.clone(), t.clone(), imgs).unwrap())
    }

    fn same_ideal(g: &AnalyticGerm, gens: &[&str]) -> bool {
        let polys: Vec<_> = gens.iter().map(|s| g.parse_poly(s).unwrap()).collect();
        g.relations().same_as(&Ideal::local(g.nvars(), polys)).unwrap()
    }

    fn point_glue(x: Arc<AnalyticGerm>, y: Arc<AnalyticGerm>) -> GluedGerm {
        let z = Arc::new(AnalyticGerm::point("Z"));
        let a = surj("a", &x, &z, &vec!["0"; x.nvars()]);
        let b = surj("b", &y, &z, &vec!["0"; y.nvars()]);
        fiber_product_presentation(&GluingDatum::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn two_lines_at_a_point_give_the_node() {
        let v = point_glue(germ("X", &["x"], &[]), germ("Y", &["y"], &[]));
        let p = v.presentation();
        assert_eq!(p.vars(), &["u", "v"]);
        assert!(same_ideal(p, &["u*v"]));
        assert!(v.commutes().unwrap());
        assert_eq!(v.dimension_check().unwrap(), (1, true));
    }

    #[test]
    fn two_planes_along_a_line() {
        let x = germ("X", &["x1", "x2"], &[]);
        let z = germ("Z", &["z"], &[]);
        let a = surj("a", &x, &z, &["z", "0"]);
        let v = fiber_product_presentation(&GluingDatum::new(a.clone(), a).unwrap()).unwrap();
        let p = v.presentation();
        assert_eq!(p.nvars(), 3);
        // oracle: one relation, the product of the two transverse coordinates
        assert_eq!(p.relations().generators().len(), 1);
        assert!(same_ideal(p, &["u2*v2"]));
        assert_eq!(v.dimension_check().unwrap(), (2, true));
        assert!(v.commutes().unwrap());
    }

    #[test]
    fn point_gluing_pattern() {
        let cusp = germ("X", &["x1", "x2"], &["x2^2 - x1^3"]);
        let v = point_glue(cusp, germ("Y", &["y"], &[]));
        let p = v.presentation();
        assert!(same_ideal(p, &["u2^2 - u1^3", "u1*v", "u2*v"]));
        assert_eq!(v.dimension_check().unwrap(), (1, true));
        let plane = germ("X", &["x1", "x2"], &[]);
        let v = point_glue(plane, germ("Y", &["y"], &[]));
        assert!(same_ideal(v.presentation(), &["u1*v", "u2*v"]));
        assert_eq!(v.dimension_check().unwrap(), (2, true));
    }

    #[test]
    fn self_glue_along_origin() {
        let plane = germ("X", &["x1", "x2"], &[]);
        let v = self_glue(&Subspace::origin(plane)).unwrap();
        // k = (x, 0) and u - k = (0, x) multiply to zero
        assert_eq!(v.presentation().vars(), &["u1", "u2", "k1", "k2"]);
        assert!(same_ideal(
            v.presentation(),
            &["k1*(u1-k1)", "k1*(u2-k2)", "k2*(u1-k1)", "k2*(u2-k2)"]
        ));
        let line = germ("X", &["x"], &[]);
        let v = self_glue(&Subspace::origin(line)).unwrap();
        assert!(same_ideal(v.presentation(), &["k*(u-k)"]));
    }

    #[test]
    fn direct_self_gluing_matches_the_fiber_product() {
        let cusp = germ("X", &["x1", "x2"], &["x2^2 - x1^3"]);
        let subs = [
            Subspace::origin(cusp.clone()),
            Subspace::new("L", cusp.clone(), vec![cusp.parse_poly("x2").unwrap()]).unwrap(),
        ];
        for sub in subs {
            let direct = self_glue(&sub).unwrap();
            let a = direct.datum().alpha().clone();
            let general = fiber_product_presentation(&GluingDatum::new(a.clone(), a).unwrap()).unwrap();
            let (p, q) = (direct.presentation(), general.presentation());
            assert_eq!(p.embedding_dim(), q.embedding_dim());
            assert_eq!(p.krull_dim().unwrap(), q.krull_dim().unwrap());
            assert_eq!(
                betti_numbers(&Subspace::origin(p.clone()), 4).unwrap(),
                betti_numbers(&Subspace::origin(q.clone()), 4).unwrap()
            );
            assert!(direct.commutes().unwrap());
        }
    }

    #[test]
    fn substitution_kernels_match_elimination() {
        // oracle: K_A computed by elimination through the projection to X
        let x = germ("X", &["x1", "x2"], &[]);
        let z = germ("Z", &["z"], &[]);
        let a = surj("a", &x, &z, &["z", "0"]);
        let v = fiber_product_presentation(&GluingDatum::new(a.clone(), a).unwrap()).unwrap();
        let n = v.presentation().nvars();
        let [k1, k2] = [v.pi1(), v.pi2()].map(|pi| map_kernel(n, pi.target().relations(), pi.images()).unwrap());
        assert!(v.presentation().relations().same_as(&k1.intersection(&k2).unwrap()).unwrap());
    }

    #[test]
    fn degenerate_gluing_is_rejected() {
        let x = germ("X", &["x"], &[]);
        let z = germ("Z", &["z"], &[]);
        let a = surj("a", &x, &z, &["z"]);
        let e = GluingDatum::new(a.clone(), a).unwrap_err();
        assert!(matches!(e, Error::Degenerate(_)));
    }

    #[test]
    fn betti_numbers_do_not_depend_on_lifts() {
        let x = germ("X", &["x1", "x2"], &[]);
        let z = germ("Z", &["z"], &[]);
        let a = surj("a", &x, &z, &["z", "0"]);
        let d = GluingDatum::new(a.clone(), a).unwrap();
        let v1 = fiber_product_with(&d, LiftStrategy::NormalForm).unwrap();
        let v2 = fiber_product_with(&d, LiftStrategy::ShiftedByKernel).unwrap();
        assert_ne!(v1.pi2().images(), v2.pi2().images());
        let b1 = betti_numbers(&Subspace::origin(v1.presentation().clone()), 4).unwrap();
        let b2 = betti_numbers(&Subspace::origin(v2.presentation().clone()), 4).unwrap();
        assert_eq!(b1, b2);
        assert_eq!(b1.betas(), &[1, 3, 4, 4, 4]);
    }

    #[test]
    fn transport_of_origin() {
        let v = point_glue(germ("X", &["x"], &[]), germ("Y", &["y"], &[]));
        let o = Subspace::origin(v.datum().x().clone());
        let t = v.transport(Side::X, &o).unwrap();
        assert!(t.is_origin().unwrap());
        let w = Subspace::whole(v.datum().x().clone());
        let t = v.transport(Side::X, &w).unwrap();
        assert!(t.ideal().same_as(&v.pi1().kernel().unwrap()).unwrap());
    }
}
