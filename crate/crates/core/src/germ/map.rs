use super::{AnalyticGerm, Subspace};
use crate::error::{Error, Result};
use crate::poly::ideal::graph_ideal;
use crate::poly::linalg::rank;
use crate::poly::{map_kernel, Coeff, Ideal, MonomialOrder, Polynomial, StandardBasis};
use std::sync::{Arc, OnceLock};

/// A surjection of local algebras `O_source -> O_target`, given by the images
/// of the source variables. Equivalently a closed embedding of germs
/// `target -> source`.
#[derive(Clone, Debug)]
pub struct GermSurjection {
    name: String,
    source: Arc<AnalyticGerm>,
    target: Arc<AnalyticGerm>,
    images: Vec<Polynomial>,
    graph: OnceLock<Arc<StandardBasis>>,
}

impl GermSurjection {
    /// Validates images, relation compatibility and surjectivity.
    pub fn new(
        name: impl Into<String>,
        source: Arc<AnalyticGerm>,
        target: Arc<AnalyticGerm>,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        let name = name.into();
        if images.len() != source.nvars() {
            return Err(Error::Dimension {
                expected: source.nvars(),
                found: images.len(),
            });
        }
        for (v, img) in source.vars().iter().zip(&images) {
            if img.nvars() != target.nvars() {
                return Err(Error::Dimension {
                    expected: target.nvars(),
                    found: img.nvars(),
                });
            }
            if !img.constant_term().is_zero() {
                return Err(Error::NonLocalImage(v.clone(), target.display_poly(img)));
            }
        }
        for r in source.relations().generators() {
            let pushed = r.substitute(&images, target.nvars());
            if !target.relations().contains(&pushed)? {
                return Err(Error::RelationNotPreserved(name.clone(), source.display_poly(r)));
            }
        }
        let map = GermSurjection {
            name,
            source,
            target,
            images,
            graph: OnceLock::new(),
        };
        if !map.check_surjective()? {
            return Err(Error::NotSurjective(map.name.clone()));
        }
        Ok(map)
    }

    pub fn parse(
        name: &str,
        source: Arc<AnalyticGerm>,
        target: Arc<AnalyticGerm>,
        images: &[&str],
    ) -> Result<Self> {
        let images = images.iter().map(|s| target.parse_poly(s)).collect::<Result<Vec<_>>>()?;
        Self::new(name, source, target, images)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<AnalyticGerm> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AnalyticGerm> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Runs the cotangent test and the graph test; they must agree.
    pub fn check_surjective(&self) -> Result<bool> {
        let cotangent = self.cotangent_surjective();
        let graph = self.graph_surjective()?;
        if cotangent != graph {
            return Err(Error::SurjectivityMismatch(self.name.clone(), cotangent, graph));
        }
        Ok(cotangent)
    }

    /// The induced map on `m/m^2` is onto.
    pub fn cotangent_surjective(&self) -> bool {
        let mut rows: Vec<Vec<Coeff>> = self.images.iter().map(|p| p.linear_part()).collect();
        rows.extend(self.target.relations().generators().iter().map(|g| g.linear_part()));
        rank(&rows) == self.target.nvars()
    }

    /// Every target variable reduces modulo the graph ideal to a
    /// polynomial in the source variables alone.
    pub fn graph_surjective(&self) -> Result<bool> {
        let m = self.target.nvars();
        let total = m + self.source.nvars();
        let sb = self.graph_basis()?;
        for j in 0..m {
            let r = sb.normal_form(&Polynomial::variable(total, j))?;
            if (0..m).any(|v| r.uses_var(v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn graph_basis(&self) -> Result<Arc<StandardBasis>> {
        if let Some(sb) = self.graph.get() {
            return Ok(sb.clone());
        }
        let m = self.target.nvars();
        let total = m + self.source.nvars();
        let gens = graph_ideal(self.source.nvars(), self.target.relations(), &self.images);
        let sb = Ideal::new(total, gens, MonomialOrder::elimination(m)).standard_basis()?;
        Ok(self.graph.get_or_init(|| sb).clone())
    }

    /// A polynomial `g` in the source variables with `g |-> f`.
    ///
    /// The lift has no constant term when `f` has none.
    pub fn lift(&self, f: &Polynomial) -> Result<Polynomial> {
        let m = self.target.nvars();
        let n = self.source.nvars();
        let total = m + n;
        let sb = self.graph_basis()?;
        let tmap: Vec<usize> = (0..m).collect();
        let (r, u) = sb.normal_form_with_unit(&f.remap(total, &tmap))?;
        let shown = self.target.display_poly(f);
        if (0..m).any(|v| r.uses_var(v)) {
            return Err(Error::NotSurjective(format!("{}: `{shown}` has no lift", self.name)));
        }
        if !u.is_constant() {
            return Err(Error::NonPolynomialLift(self.name.clone(), shown));
        }
        let back: Vec<usize> = (0..total).map(|i| i.saturating_sub(m)).collect();
        let lifted = r.remap(n, &back).scale(&u.constant_term().inv());
        let c = lifted.constant_term();
        Ok(lifted.sub(&Polynomial::constant(n, c)))
    }

    /// `ker` as a subspace of the source: the target, embedded.
    pub fn kernel_subspace(&self) -> Result<Subspace> {
        let k = map_kernel(self.source.nvars(), self.target.relations(), &self.images)?;
        Subspace::new(format!("ker {}", self.name), self.source.clone(), k.generators().to_vec())
    }

    /// Generators of the kernel, including the source relations.
    pub fn kernel(&self) -> Result<Ideal> {
        Ok(self.kernel_subspace()?.ideal().clone())
    }

    /// The preimage of a target subspace, as a subspace of the source.
    pub fn transport(&self, w: &Subspace) -> Result<Subspace> {
        if !Arc::ptr_eq(w.ambient(), &self.target) && w.ambient().vars() != self.target.vars() {
            return Err(Error::Precondition(format!(
                "subspace `{}` does not live in `{}`",
                w.name(),
                self.target.name()
            )));
        }
        let k = map_kernel(self.source.nvars(), w.ideal(), &self.images)?;
        Subspace::new(w.name(), self.source.clone(), k.generators().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(name: &str, vars: &[&str], rels: &[&str]) -> Arc<AnalyticGerm> {
        Arc::new(AnalyticGerm::parse(name, vars, rels).unwrap())
    }

    #[test]
    fn surjectivity_examples() {
        let x = germ("X", &["x"], &[]);
        let z = germ("Z", &["z"], &["z^2"]);
        let ok = GermSurjection::parse("a", x.clone(), z.clone(), &["z"]).unwrap();
        assert!(ok.check_surjective().unwrap());
        let zz = germ("Z", &["z"], &["z^3"]);
        let err = GermSurjection::parse("b", x.clone(), zz, &["z^2"]).unwrap_err();
        assert!(matches!(err, Error::NotSurjective(_)));
    }

    #[test]
    fn non_polynomial_inverse_is_a_mismatch() {
        let x = germ("X", &["x"], &[]);
        let z = germ("Z", &["z"], &[]);
        let e = GermSurjection::parse("c", x.clone(), z.clone(), &["z - z^2"]).unwrap_err();
        assert!(matches!(e, Error::SurjectivityMismatch(_, true, false)));
        let m = GermSurjection::parse("d", x, z, &["2*z + z^2"]);
        assert!(matches!(m, Err(Error::SurjectivityMismatch(..))));
    }

    #[test]
    fn polynomial_coordinate_change_passes_both_checks() {
        let plane = germ("P", &["x", "y"], &[]);
        let target = germ("T", &["a", "b"], &[]);
        let m = GermSurjection::parse("e", plane, target, &["a", "b - a^2"]).unwrap();
        assert!(m.cotangent_surjective());
        assert!(m.graph_surjective().unwrap());
    }

    #[test]
    fn rejects_bad_maps() {
        let x = germ("X", &["x"], &[]);
        let z = germ("Z", &["z"], &["z^2"]);
        let e = GermSurjection::parse("a", x.clone(), z.clone(), &["z + 1"]).unwrap_err();
        assert!(matches!(e, Error::NonLocalImage(..)));
        let cusp = germ("C", &["x", "y"], &["y^2 - x^3"]);
        let plane = germ("P", &["u", "v"], &[]);
        let e = GermSurjection::parse("r", cusp, plane, &["u", "v"]).unwrap_err();
        assert!(matches!(e, Error::RelationNotPreserved(..)));
    }

    #[test]
    fn kernel_and_transport() {
        let plane = germ("P", &["x1", "x2"], &[]);
        let line = germ("L", &["t"], &[]);
        let m = GermSurjection::parse("p", plane.clone(), line.clone(), &["t", "0"]).unwrap();
        let k = m.kernel().unwrap();
        assert!(k.contains(&plane.parse_poly("x2").unwrap()).unwrap());
        assert!(!k.contains(&plane.parse_poly("x1").unwrap()).unwrap());
        let o = Subspace::origin(line.clone());
        let t = m.transport(&o).unwrap();
        assert!(t.is_origin().unwrap());
        let w = Subspace::whole(line);
        let t = m.transport(&w).unwrap();
        assert!(t.ideal().same_as(&k).unwrap());
    }

    #[test]
    fn lifts_map_back() {
        let cusp = germ("C", &["x", "y"], &["y^2 - x^3"]);
        let pt = germ("O", &["a"], &["a^2"]);
        let m = GermSurjection::parse("m", cusp.clone(), pt.clone(), &["a", "0"]).unwrap();
        let f = pt.parse_poly("3*a").unwrap();
        let g = m.lift(&f).unwrap();
        let back = g.substitute(m.images(), 1).sub(&f);
        assert!(pt.relations().contains(&back).unwrap());
        assert!(g.constant_term().is_zero());
    }
}
