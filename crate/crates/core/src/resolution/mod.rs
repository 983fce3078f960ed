//! Minimal free resolutions over the local algebra of a germ, truncated at a
//! homological bound, and the invariants read off from them.

pub mod ext;
pub mod syzygy;

use crate::error::{Error, Result};
use crate::germ::{AnalyticGerm, Subspace};
use crate::poly::{Polynomial, StandardBasis};
use crate::series::TruncatedSeries;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;
use syzygy::{prune, syzygies, Columns};

pub use ext::{cm_type, depth, depth_and_type, is_cohen_macaulay, is_gorenstein_direct};

/// `coker(R^relations.len() -> R^rank)` over the local algebra of `germ`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    germ: Arc<AnalyticGerm>,
    rank: usize,
    relations: Columns,
}

impl PresentedModule {
    pub fn new(germ: Arc<AnalyticGerm>, rank: usize, relations: Columns) -> Result<Self> {
        for c in &relations {
            if c.len() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    found: c.len(),
                });
            }
            if let Some(p) = c.iter().find(|p| p.nvars() != germ.nvars()) {
                return Err(Error::Dimension {
                    expected: germ.nvars(),
                    found: p.nvars(),
                });
            }
        }
        Ok(PresentedModule { germ, rank, relations })
    }

    /// `R / <gens>`.
    pub fn cyclic(germ: Arc<AnalyticGerm>, gens: &[Polynomial]) -> Result<Self> {
        let rels = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::new(germ, 1, rels)
    }

    pub fn residue_field(germ: Arc<AnalyticGerm>) -> Self {
        let n = germ.nvars();
        let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(n, i)).collect();
        Self::cyclic(germ, &vars).expect("variables have the right arity")
    }

    /// `O_X / I_W` for a subspace `W` of `X`.
    pub fn of_subspace(sub: &Subspace) -> Self {
        Self::cyclic(sub.ambient().clone(), sub.equations()).expect("subspace equations live in the ambient ring")
    }

    pub fn germ(&self) -> &Arc<AnalyticGerm> {
        &self.germ
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &Columns {
        &self.relations
    }
}

/// A map `R^columns.len() -> R^target_rank`, stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct Differential {
    pub target_rank: usize,
    pub columns: Columns,
}

impl Differential {
    pub fn source_rank(&self) -> usize {
        self.columns.len()
    }

    /// Row `k` as a vector indexed by the source basis.
    pub fn row(&self, k: usize) -> Vec<Polynomial> {
        self.columns.iter().map(|c| c[k].clone()).collect()
    }

    pub fn rows(&self) -> Columns {
        (0..self.target_rank).map(|k| self.row(k)).collect()
    }
}

/// `F_0 <- F_1 <- ... <- F_N` with `d_i = differentials[i - 1]`.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    module: PresentedModule,
    ring: Arc<StandardBasis>,
    rank0: usize,
    differentials: Vec<Differential>,
    bound: usize,
}

impl MinimalResolution {
    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn differentials(&self) -> &[Differential] {
        &self.differentials
    }

    /// `d_i` for `1 <= i <= bound`; an empty map once the resolution stops.
    pub fn differential(&self, i: usize) -> Differential {
        assert!(i >= 1, "differentials start at d_1");
        match self.differentials.get(i - 1) {
            Some(d) => d.clone(),
            None => Differential {
                target_rank: self.rank(i - 1),
                columns: Vec::new(),
            },
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        match i {
            0 => self.rank0,
            _ => self.differentials.get(i - 1).map_or(0, |d| d.source_rank()),
        }
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable {
            betas: (0..=self.bound).map(|i| self.rank(i) as u64).collect(),
        }
    }

    /// `d_i d_(i+1) = 0` modulo the relations, for every computed pair.
    pub fn check_complex(&self) -> Result<bool> {
        let germ = &self.module.germ;
        for w in self.differentials.windows(2) {
            let (d, e) = (&w[0], &w[1]);
            for z in &e.columns {
                for k in 0..d.target_rank {
                    let mut s = Polynomial::zero(germ.nvars());
                    for (zj, col) in z.iter().zip(&d.columns) {
                        if !zj.is_zero() && !col[k].is_zero() {
                            s = s.add(&zj.mul(&col[k]));
                        }
                    }
                    if !s.is_zero() && !self.ring.normal_form(&s)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// No differential entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .flat_map(|d| d.columns.iter().flatten())
            .all(|p| p.constant_term().is_zero())
    }
}

/// Minimal free resolution of `module` through `F_bound`.
///
/// Each step computes the syzygies of the current columns and pivots out unit
/// entries, which discards redundant columns; the surviving syzygies are the
/// next candidate columns.
pub fn minimal_free_resolution(module: &PresentedModule, bound: usize) -> Result<MinimalResolution> {
    let ring = module.germ.relations().standard_basis()?;
    let (kept0, mut current) = prune(module.rank, module.relations.clone());
    let mut target_rank = kept0.len();
    let mut differentials = Vec::new();
    for _ in 1..=bound {
        if current.is_empty() {
            break;
        }
        let syz = syzygies(&ring, target_rank, &current)?;
        let (kept, next) = prune(current.len(), syz);
        let columns: Columns = kept.into_iter().map(|i| std::mem::take(&mut current[i])).collect();
        let d = Differential { target_rank, columns };
        target_rank = d.source_rank();
        differentials.push(d);
        current = next;
    }
    Ok(MinimalResolution {
        module: module.clone(),
        ring,
        rank0: kept0.len(),
        differentials,
        bound,
    })
}

/// `beta_0 .. beta_N` of a module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BettiTable {
    betas: Vec<u64>,
}

impl BettiTable {
    pub fn new(betas: Vec<u64>) -> Self {
        assert!(!betas.is_empty(), "a Betti table has at least beta_0");
        BettiTable { betas }
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    pub fn bound(&self) -> usize {
        self.betas.len() - 1
    }

    /// `beta_i`, which must lie within the bound.
    pub fn get(&self, i: usize) -> u64 {
        assert!(i <= self.bound(), "beta_{i} is beyond the truncation bound {}", self.bound());
        self.betas[i]
    }

    pub fn series(&self) -> Result<TruncatedSeries> {
        TruncatedSeries::from_u64(&self.betas, self.bound())
    }

    /// Largest index with a nonzero entry, when the table ends in zeros.
    pub fn projective_dimension(&self) -> Option<usize> {
        if *self.betas.last().expect("nonempty") != 0 {
            return None;
        }
        self.betas.iter().rposition(|&b| b != 0)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.betas.iter().map(u64::to_string).collect();
        let width: Vec<usize> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| c.len().max(i.to_string().len()))
            .collect();
        write!(f, "i:")?;
        for (i, w) in width.iter().enumerate() {
            write!(f, " {i:>w$}")?;
        }
        write!(f, "\nβ:")?;
        for (c, w) in cells.iter().zip(&width) {
            write!(f, " {c:>w$}")?;
        }
        Ok(())
    }
}

pub fn betti_numbers(sub: &Subspace, bound: usize) -> Result<BettiTable> {
    Ok(minimal_free_resolution(&PresentedModule::of_subspace(sub), bound)?.betti())
}

pub fn residue_field_betti(germ: &Arc<AnalyticGerm>, bound: usize) -> Result<BettiTable> {
    Ok(minimal_free_resolution(&PresentedModule::residue_field(germ.clone()), bound)?.betti())
}

pub fn poincare_series_direct(sub: &Subspace, bound: usize) -> Result<TruncatedSeries> {
    betti_numbers(sub, bound)?.series()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(vars: &[&str], rels: &[&str]) -> Arc<AnalyticGerm> {
        Arc::new(AnalyticGerm::parse("X", vars, rels).unwrap())
    }

    fn k_betti(vars: &[&str], rels: &[&str], n: usize) -> Vec<u64> {
        let res = minimal_free_resolution(&PresentedModule::residue_field(germ(vars, rels)), n).unwrap();
        assert!(res.check_complex().unwrap());
        assert!(res.is_minimal());
        res.betti().betas().to_vec()
    }

    #[test]
    fn residue_field_examples() {
        assert_eq!(k_betti(&["x"], &[], 3), vec![1, 1, 0, 0]);
        assert_eq!(k_betti(&["x", "y"], &[], 3), vec![1, 2, 1, 0]);
        assert_eq!(k_betti(&["x", "y"], &["x*y"], 5), vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn koszul_ranks() {
        // oracle: binomial coefficients
        assert_eq!(k_betti(&["a", "b", "c", "d"], &[], 5), vec![1, 4, 6, 4, 1, 0]);
    }

    #[test]
    fn hypersurface_residue_field_is_periodic() {
        // oracle: Tate resolution over a hypersurface, P = (1+t)^n / (1-t^2) with n = edim
        let b = k_betti(&["x", "y"], &["y^2 - x^3"], 5);
        assert_eq!(b, vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn subspace_examples() {
        let line = germ(&["x"], &[]);
        assert_eq!(betti_numbers(&Subspace::origin(line), 3).unwrap().betas(), &[1, 1, 0, 0]);
        let plane = germ(&["x1", "x2"], &[]);
        let l = Subspace::new("L", plane.clone(), vec![plane.parse_poly("x2").unwrap()]).unwrap();
        assert_eq!(betti_numbers(&l, 3).unwrap().betas(), &[1, 1, 0, 0]);
        assert_eq!(betti_numbers(&Subspace::whole(plane), 3).unwrap().betas(), &[1, 0, 0, 0]);
    }

    #[test]
    fn series_and_display() {
        let node = germ(&["x", "y"], &["x*y"]);
        let s = poincare_series_direct(&Subspace::origin(node), 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 2, 2, 2]);
        let t = BettiTable::new(vec![1, 2, 12]);
        assert_eq!(t.to_string(), "i: 0 1  2\nβ: 1 2 12");
    }

    #[test]
    fn truncation_is_stable() {
        let b3 = k_betti(&["x", "y"], &["x^2", "x*y"], 3);
        let b5 = k_betti(&["x", "y"], &["x^2", "x*y"], 5);
        assert_eq!(b3[..], b5[..4]);
    }
}
