//! Mora's tangent-cone normal form and the standard-basis completion built
//! on it. Everything here works on free-module elements; ideals are the
//! special case of a single component.

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::vector::Vector;
use crate::error::{Error, Result};
use std::cell::Cell;
use std::collections::HashMap;

pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

thread_local! {
    static STEP_CAP: Cell<u64> = const { Cell::new(DEFAULT_STEP_CAP) };
}

/// Reduction-step cap applied to each normal-form or standard-basis call on
/// this thread.
pub fn step_cap() -> u64 {
    STEP_CAP.with(|c| c.get())
}

pub fn set_step_cap(cap: u64) {
    STEP_CAP.with(|c| c.set(cap.max(1)));
}

/// Runs `f` with a temporary step cap, restoring the previous one afterwards.
pub fn with_step_cap<R>(cap: u64, f: impl FnOnce() -> R) -> R {
    struct Restore(u64);
    impl Drop for Restore {
        fn drop(&mut self) {
            set_step_cap(self.0);
        }
    }
    let _restore = Restore(step_cap());
    set_step_cap(cap);
    f()
}

pub(crate) struct Budget {
    used: u64,
    cap: u64,
    context: &'static str,
}

impl Budget {
    pub(crate) fn new(context: &'static str) -> Self {
        Budget {
            used: 0,
            cap: step_cap(),
            context,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::StepCap {
                cap: self.cap,
                context: self.context,
            });
        }
        Ok(())
    }
}

/// A monic reducer with its cached ecart.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub(crate) v: Vector,
    pub(crate) ecart: u32,
}

impl Reducer {
    pub(crate) fn new(v: Vector) -> Self {
        let v = v.monic();
        let ecart = v.ecart();
        Reducer { v, ecart }
    }

    #[inline]
    fn lead_comp(&self) -> u32 {
        self.v.lead().expect("nonzero reducer").comp
    }

    #[inline]
    fn lead_mono(&self) -> &Monomial {
        &self.v.lead().expect("nonzero reducer").mono
    }
}

/// Reducers bucketed by leading component.
#[derive(Clone, Debug, Default)]
pub(crate) struct ReducerSet {
    pub(crate) items: Vec<Reducer>,
    by_comp: HashMap<u32, Vec<usize>>,
}

impl ReducerSet {
    pub(crate) fn push(&mut self, r: Reducer) -> usize {
        let idx = self.items.len();
        self.by_comp.entry(r.lead_comp()).or_default().push(idx);
        self.items.push(r);
        idx
    }

    pub(crate) fn from_vectors(vs: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = ReducerSet::default();
        for v in vs {
            if !v.is_zero() {
                s.push(Reducer::new(v));
            }
        }
        s
    }

    pub(crate) fn len(&self) -> usize {
        self.items.len()
    }

    /// Reducer of minimal ecart whose leading term divides `(comp, m)`;
    /// ties go to the earliest one.
    fn best_divisor(&self, comp: u32, m: &Monomial) -> Option<&Reducer> {
        let mut best: Option<&Reducer> = None;
        for &i in self.by_comp.get(&comp)? {
            let r = &self.items[i];
            if r.lead_mono().divides(m) && best.is_none_or(|b| r.ecart < b.ecart) {
                best = Some(r);
                if r.ecart == 0 {
                    break;
                }
            }
        }
        best
    }
}

/// Mora's weak normal form of `h` against `g`.
///
/// Returns `r` with `u*h - r` in the submodule generated by `g` for a unit `u`;
/// the leading term of `r` is divisible by no leading term of `g`, or lies in
/// a component `>= stop`. Intermediate results with a smaller ecart than the
/// chosen reducer join the reducer set, which is what makes the loop terminate
/// for local orders.
pub(crate) fn weak_normal_form(
    mut h: Vector,
    g: &ReducerSet,
    order: &MonomialOrder,
    stop: u32,
    budget: &mut Budget,
) -> Result<Vector> {
    let mut extra = ReducerSet::default();
    loop {
        let Some(lead) = h.lead() else { return Ok(h) };
        if lead.comp >= stop {
            return Ok(h);
        }
        let a = g.best_divisor(lead.comp, &lead.mono);
        let b = extra.best_divisor(lead.comp, &lead.mono);
        let red = match (a, b) {
            (Some(a), Some(b)) => {
                if b.ecart < a.ecart {
                    b
                } else {
                    a
                }
            }
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Ok(h),
        };
        let eh = h.ecart();
        let red = if red.ecart > eh {
            let red = red.clone();
            extra.push(Reducer::new(h.clone()));
            red
        } else {
            red.clone()
        };
        let lead = h.lead().expect("nonzero");
        let shift = red.lead_mono().quotient_of(&lead.mono);
        let c = -&lead.coeff;
        h = h.axpy(&c, &shift, &red.v, order);
        budget.tick()?;
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: u64,
}

/// Options for [`standard_basis_vectors`].
#[derive(Clone, Debug)]
pub(crate) struct SbOptions {
    /// Components `>= stop` only track representations; an element whose
    /// leading term reaches them is reported as a syzygy and not kept.
    pub stop: u32,
    /// Buchberger's coprime-leading-term criterion, valid for ideals only.
    pub product_criterion: bool,
}

impl SbOptions {
    pub(crate) fn ideal() -> Self {
        SbOptions {
            stop: u32::MAX,
            product_criterion: true,
        }
    }

    pub(crate) fn syzygies(stop: u32) -> Self {
        SbOptions {
            stop,
            product_criterion: false,
        }
    }
}

pub(crate) struct SbOutput {
    pub basis: ReducerSet,
    pub syzygies: Vec<Vector>,
}

/// Standard basis of the submodule generated by `gens`.
///
/// Inputs flagged `true` in `inert` are pre-completed relation lifts: pairs
/// between two of them reduce to zero and are skipped. Pairs are processed by
/// ascending lcm degree, first come first served on ties, with the
/// Gebauer–Möller criteria.
pub(crate) fn standard_basis_vectors(
    gens: Vec<(Vector, bool)>,
    order: &MonomialOrder,
    opts: &SbOptions,
    context: &'static str,
) -> Result<SbOutput> {
    let mut budget = Budget::new(context);
    let mut basis = ReducerSet::default();
    let mut inert: Vec<bool> = Vec::new();
    let mut syzygies = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq = 0u64;

    for (g, is_inert) in gens {
        let Some(lead) = g.lead() else { continue };
        if lead.comp >= opts.stop {
            syzygies.push(g);
            continue;
        }
        let idx = basis.push(Reducer::new(g));
        inert.push(is_inert);
        update_pairs(&basis, &inert, idx, &mut pairs, &mut seq, opts);
    }

    while !pairs.is_empty() {
        let pos = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.degree(), p.seq))
            .map(|(k, _)| k)
            .expect("nonempty");
        let p = pairs.swap_remove(pos);
        let s = spoly(&basis.items[p.i], &basis.items[p.j], &p.lcm, order);
        let h = weak_normal_form(s, &basis, order, opts.stop, &mut budget)?;
        let Some(lead) = h.lead() else { continue };
        if lead.comp >= opts.stop {
            syzygies.push(h);
            continue;
        }
        let idx = basis.push(Reducer::new(h));
        inert.push(false);
        update_pairs(&basis, &inert, idx, &mut pairs, &mut seq, opts);
    }
    Ok(SbOutput { basis, syzygies })
}

fn spoly(a: &Reducer, b: &Reducer, lcm: &Monomial, order: &MonomialOrder) -> Vector {
    let ma = a.lead_mono().quotient_of(lcm);
    let mb = b.lead_mono().quotient_of(lcm);
    a.v.mul_term(&ma, &Coeff::one())
        .axpy(&Coeff::from_int(-1), &mb, &b.v, order)
}

fn update_pairs(
    basis: &ReducerSet,
    inert: &[bool],
    new: usize,
    pairs: &mut Vec<Pair>,
    seq: &mut u64,
    opts: &SbOptions,
) {
    let h = &basis.items[new];
    let comp = h.lead_comp();
    let hm = h.lead_mono();

    // candidates (i, new) with the chain criterion among themselves
    let mut cand: Vec<(usize, Monomial, bool)> = basis.by_comp[&comp]
        .iter()
        .filter(|&&i| i != new)
        .map(|&i| {
            let gm = basis.items[i].lead_mono();
            (i, gm.lcm(hm), gm.is_coprime(hm))
        })
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some(c) = cand.pop() {
        let dominated = cand.iter().chain(kept.iter()).any(|o| o.1.divides(&c.1));
        if (opts.product_criterion && c.2) || !dominated {
            kept.push(c);
        }
    }

    // old pairs made redundant by the new leading term
    pairs.retain(|p| {
        if basis.items[p.i].lead_comp() != comp || !hm.divides(&p.lcm) {
            return true;
        }
        let li = basis.items[p.i].lead_mono().lcm(hm);
        let lj = basis.items[p.j].lead_mono().lcm(hm);
        li == p.lcm || lj == p.lcm
    });

    kept.sort_by_key(|c| c.0);
    for (i, lcm, coprime) in kept {
        if opts.product_criterion && coprime {
            continue;
        }
        if inert[i] && inert[new] {
            continue;
        }
        pairs.push(Pair {
            i,
            j: new,
            lcm,
            seq: *seq,
        });
        *seq += 1;
    }
}
