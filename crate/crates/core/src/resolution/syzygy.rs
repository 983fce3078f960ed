//! Syzygies over `R = P_loc / I` and pruning of non-minimal generators.

use crate::error::Result;
use crate::poly::mora::{standard_basis_vectors, SbOptions};
use crate::poly::{Monomial, Polynomial, StandardBasis, Vector};
use std::collections::HashSet;

/// Column vectors of polynomials, all of the same length.
pub type Columns = Vec<Vec<Polynomial>>;

/// Generators of `{ a in R^s : sum a_i cols[i] = 0 in R^rank }`.
///
/// Lifts `(cols[i], e_i)` to `P^(rank + s)` with tracking components below
/// the data components, adds `g e_k` for `g` in the ring's standard basis and
/// completes; elements whose leading term reaches a tracking component are
/// syzygies, and they generate the whole module.
pub fn syzygies(ring: &StandardBasis, rank: usize, cols: &[Vec<Polynomial>]) -> Result<Columns> {
    let order = ring.order();
    let n = ring.nvars();
    let s = cols.len();
    let ring_gens = ring.polynomials();
    let mut gens = Vec::with_capacity(s + rank * ring_gens.len());
    for k in 0..rank {
        for g in &ring_gens {
            gens.push((Vector::from_poly(g, k as u32, order), true));
        }
    }
    for (i, c) in cols.iter().enumerate() {
        debug_assert_eq!(c.len(), rank);
        let v = Vector::from_entries(c, 0, order)
            .add(&Vector::from_poly(&Polynomial::one(n), (rank + i) as u32, order), order);
        gens.push((v, false));
    }
    let out = standard_basis_vectors(gens, order, &SbOptions::syzygies(rank as u32), "syzygy computation")?;
    let mut syz: Columns = out
        .syzygies
        .iter()
        .map(|z| z.entries(rank as u32, s, n))
        .collect();
    if !ring_gens.is_empty() {
        syz = syz.iter().map(|z| strip_monomial_relations(ring, z)).collect();
    }
    Ok(tidy(syz))
}

/// Drops every term lying in a monomial element of the ring's standard basis.
pub fn strip_monomial_relations(ring: &StandardBasis, v: &[Polynomial]) -> Vec<Polynomial> {
    let monos: Vec<Monomial> = ring
        .polynomials()
        .iter()
        .filter(|g| g.len() == 1)
        .map(|g| g.terms()[0].0.clone())
        .collect();
    if monos.is_empty() {
        return v.to_vec();
    }
    v.iter()
        .map(|p| {
            Polynomial::from_terms(
                p.nvars(),
                p.terms()
                    .iter()
                    .filter(|(m, _)| !monos.iter().any(|g| g.divides(m)))
                    .cloned(),
            )
        })
        .collect()
}

/// Drops zero columns and repeated columns up to a scalar.
pub fn tidy(cols: Columns) -> Columns {
    let mut seen = HashSet::with_capacity(cols.len());
    let mut out: Columns = Vec::with_capacity(cols.len());
    for c in cols {
        let Some(c) = normalize(c) else { continue };
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

fn normalize(c: Vec<Polynomial>) -> Option<Vec<Polynomial>> {
    let lead = c.iter().find(|p| !p.is_zero())?;
    let (_, k) = lead.terms().first()?;
    let inv = k.inv();
    Some(c.iter().map(|p| p.scale(&inv)).collect())
}

fn is_unit(p: &Polynomial) -> bool {
    !p.constant_term().is_zero()
}

/// Removes generators that are unit combinations of the others.
///
/// `relations` must generate all relations among `count` generators. While
/// some relation has a unit entry, the highest such coordinate is eliminated
/// together with that relation. Returns the surviving coordinates and the
/// remaining relations restricted to them; none has a unit entry.
pub fn prune(count: usize, mut relations: Columns) -> (Vec<usize>, Columns) {
    let mut removed = vec![false; count];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (zi, z) in relations.iter().enumerate() {
            for (j, e) in z.iter().enumerate().rev() {
                if is_unit(e) {
                    let better = match best {
                        None => true,
                        Some((bz, bj)) => j > bj || (j == bj && e.is_constant() && !relations[bz][bj].is_constant()),
                    };
                    if better {
                        best = Some((zi, j));
                    }
                    break;
                }
            }
        }
        let Some((zi, j)) = best else { break };
        let pivot = relations.swap_remove(zi);
        let pj = &pivot[j];
        for z in relations.iter_mut() {
            if z[j].is_zero() {
                continue;
            }
            if pj.is_constant() {
                let f = z[j].scale(&pj.constant_term().inv());
                for (e, p) in z.iter_mut().zip(&pivot) {
                    *e = e.sub(&f.mul(p));
                }
            } else {
                let f = z[j].clone();
                for (e, p) in z.iter_mut().zip(&pivot) {
                    *e = pj.mul(e).sub(&f.mul(p));
                }
            }
            debug_assert!(z[j].is_zero());
        }
        removed[j] = true;
    }
    let kept: Vec<usize> = (0..count).filter(|&i| !removed[i]).collect();
    let relations = relations
        .into_iter()
        .map(|z| kept.iter().map(|&i| z[i].clone()).collect())
        .collect();
    (kept, tidy(relations))
}
