//! Depth and Cohen–Macaulay type from `Ext^i(k, R)`.

use super::syzygy::{prune, syzygies};
use super::{minimal_free_resolution, PresentedModule};
use crate::error::Result;
use crate::germ::AnalyticGerm;
use std::sync::Arc;

/// `(depth, type)` of the local algebra `R`.
///
/// Resolves `k` through `F_(dim+1)` and dualizes: with `K_i` the kernel of
/// `d_(i+1)^T` and `B_i` the image of `d_i^T`, `dim_k Ext^i = mu(K_i / B_i)`.
/// The depth is the first `i` with nonzero `Ext^i` and the type is its
/// dimension.
pub fn depth_and_type(germ: &Arc<AnalyticGerm>) -> Result<(usize, usize)> {
    let dim = germ.krull_dim()?;
    let res = minimal_free_resolution(&PresentedModule::residue_field(germ.clone()), dim + 1)?;
    let ring = germ.relations().standard_basis()?;
    for i in 0..=dim {
        let rank_i = res.rank(i);
        let next = res.differential(i + 1);
        let kernel = syzygies(&ring, next.source_rank(), &next.rows())?;
        debug_assert!(kernel.iter().all(|k| k.len() == rank_i));
        let image = if i == 0 { Vec::new() } else { res.differential(i).rows() };
        let nb = image.len();
        let mut gens = image;
        gens.extend(kernel);
        let relations = syzygies(&ring, rank_i, &gens)?;
        let (kept, _) = prune(gens.len(), relations);
        let ext = kept.iter().filter(|&&j| j >= nb).count();
        if ext > 0 {
            return Ok((i, ext));
        }
    }
    unreachable!("Ext^i(k, R) is nonzero for some i <= dim R")
}

pub fn depth(germ: &Arc<AnalyticGerm>) -> Result<usize> {
    Ok(depth_and_type(germ)?.0)
}

pub fn cm_type(germ: &Arc<AnalyticGerm>) -> Result<usize> {
    Ok(depth_and_type(germ)?.1)
}

pub fn is_cohen_macaulay(germ: &Arc<AnalyticGerm>) -> Result<bool> {
    Ok(depth(germ)? == germ.krull_dim()?)
}

pub fn is_gorenstein_direct(germ: &Arc<AnalyticGerm>) -> Result<bool> {
    let (d, t) = depth_and_type(germ)?;
    Ok(d == germ.krull_dim()? && t == 1)
}

/// `(depth, type)` from the resolution of `R` over the ambient regular ring:
/// `depth = n - pd` and the type is the last nonzero Betti number.
pub fn depth_and_type_over_ambient(germ: &Arc<AnalyticGerm>) -> Result<(usize, usize)> {
    let n = germ.nvars();
    let ambient = Arc::new(AnalyticGerm::affine(
        germ.name(),
        &germ.vars().iter().map(String::as_str).collect::<Vec<_>>(),
    ));
    let module = PresentedModule::cyclic(ambient, germ.relations().generators())?;
    let betti = minimal_free_resolution(&module, n + 1)?.betti();
    let pd = betti.projective_dimension().expect("regular rings have finite global dimension");
    Ok((n - pd, betti.get(pd) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(vars: &[&str], rels: &[&str]) -> Arc<AnalyticGerm> {
        Arc::new(AnalyticGerm::parse("X", vars, rels).unwrap())
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&germ(&["x", "y"], &[])).unwrap(), 2);
        assert_eq!(depth(&germ(&["x", "y"], &["x*y"])).unwrap(), 1);
        assert_eq!(depth(&germ(&["x", "y"], &["x^2", "x*y"])).unwrap(), 0);
        assert_eq!(depth(&Arc::new(AnalyticGerm::point("pt"))).unwrap(), 0);
    }

    #[test]
    fn type_and_gorenstein_examples() {
        let node = germ(&["x", "y"], &["x*y"]);
        assert!(is_cohen_macaulay(&node).unwrap());
        assert_eq!(cm_type(&node).unwrap(), 1);
        assert!(is_gorenstein_direct(&node).unwrap());
        assert!(!is_cohen_macaulay(&germ(&["x", "y"], &["x^2", "x*y"])).unwrap());
        let fat = germ(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert!(is_cohen_macaulay(&fat).unwrap());
        // oracle: the socle of Q[x,y]/(x,y)^2 is spanned by x and y
        assert_eq!(cm_type(&fat).unwrap(), 2);
        assert!(!is_gorenstein_direct(&fat).unwrap());
    }

    #[test]
    fn agrees_with_ambient_resolution() {
        for (vars, rels) in [
            (&["x", "y"][..], &["x*y"][..]),
            (&["x", "y"], &["x^2", "x*y"]),
            (&["x", "y"], &["x^2", "x*y", "y^2"]),
            (&["x", "y", "z"], &["x*y", "x*z", "y*z"]),
            (&["x", "y", "z"], &["x*z", "y*z"]),
        ] {
            let g = germ(vars, rels);
            assert_eq!(depth_and_type(&g).unwrap(), depth_and_type_over_ambient(&g).unwrap(), "{rels:?}");
        }
    }

    #[test]
    fn regular_quotient_drops_depth_by_one() {
        let plane = germ(&["x", "y"], &[]);
        let curve = germ(&["x", "y"], &["y - x^2"]);
        assert_eq!(depth(&plane).unwrap() - depth(&curve).unwrap(), 1);
    }
}
