//! Germs of analytic spaces at the origin, presented as local quotient
//! algebras `Q[x]_loc / I`, together with their subspaces and surjections.

pub mod format;
pub mod map;

use crate::error::{Error, Result};
use crate::poly::linalg::rank;
use crate::poly::{parse_polynomial, Ideal, Polynomial};
use std::sync::Arc;

pub use map::GermSurjection;

/// A germ `(X, 0)` with local algebra `Q[vars]_loc / relations`.
///
/// Every relation vanishes at the origin. A germ with no variables is the
/// reduced point.
#[derive(Clone, Debug)]
pub struct AnalyticGerm {
    name: String,
    vars: Vec<String>,
    relations: Ideal,
}

impl AnalyticGerm {
    pub fn new(name: impl Into<String>, vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        let name = name.into();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateName(format!("variable `{v}` in germ `{name}`")));
            }
        }
        for r in &relations {
            if r.nvars() != vars.len() {
                return Err(Error::Dimension {
                    expected: vars.len(),
                    found: r.nvars(),
                });
            }
            if !r.constant_term().is_zero() {
                return Err(Error::NotAGerm(format!("relation `{}` of `{name}`", r.display(&vars))));
            }
        }
        let relations = Ideal::local(vars.len(), relations);
        Ok(AnalyticGerm { name, vars, relations })
    }

    /// Parses the relations; the standard basis is computed eagerly.
    pub fn parse(name: &str, vars: &[&str], relations: &[&str]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let polys = relations
            .iter()
            .map(|r| parse_polynomial(r, &vars).map_err(|message| Error::Parse { line: 0, message }))
            .collect::<Result<Vec<_>>>()?;
        let g = Self::new(name, vars, polys)?;
        g.relations.standard_basis()?;
        Ok(g)
    }

    pub fn point(name: impl Into<String>) -> Self {
        AnalyticGerm {
            name: name.into(),
            vars: Vec::new(),
            relations: Ideal::zero(0),
        }
    }

    /// The smooth germ `(Q^n, 0)`.
    pub fn affine(name: impl Into<String>, vars: &[&str]) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        AnalyticGerm {
            name: name.into(),
            relations: Ideal::zero(vars.len()),
            vars,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        AnalyticGerm {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn is_point(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial> {
        parse_polynomial(s, &self.vars).map_err(|message| Error::Parse { line: 0, message })
    }

    /// `dim m/m^2`: variables minus the rank of the linear parts of the relations.
    pub fn embedding_dim(&self) -> usize {
        let rows: Vec<_> = self.relations.generators().iter().map(|g| g.linear_part()).collect();
        self.nvars() - rank(&rows)
    }

    pub fn krull_dim(&self) -> Result<usize> {
        self.relations.leading_ideal_dimension()
    }

    pub fn is_smooth(&self) -> Result<bool> {
        Ok(self.embedding_dim() == self.krull_dim()?)
    }

    pub fn display_poly(&self, p: &Polynomial) -> String {
        p.display(&self.vars)
    }
}

/// A closed subspace `(W, 0) ⊆ (X, 0)`, cut out by `equations` on top of the
/// ambient relations.
///
/// The ideal is assumed reduced; this is not checked.
#[derive(Clone, Debug)]
pub struct Subspace {
    name: String,
    ambient: Arc<AnalyticGerm>,
    equations: Vec<Polynomial>,
    ideal: Ideal,
}

impl Subspace {
    pub fn new(name: impl Into<String>, ambient: Arc<AnalyticGerm>, equations: Vec<Polynomial>) -> Result<Self> {
        let name = name.into();
        for e in &equations {
            if e.nvars() != ambient.nvars() {
                return Err(Error::Dimension {
                    expected: ambient.nvars(),
                    found: e.nvars(),
                });
            }
            if !e.constant_term().is_zero() {
                return Err(Error::NotAGerm(format!(
                    "equation `{}` of subspace `{name}`",
                    ambient.display_poly(e)
                )));
            }
        }
        let ideal = ambient.relations().with_generators(&equations);
        Ok(Subspace {
            name,
            ambient,
            equations,
            ideal,
        })
    }

    /// The reduced point at the origin.
    pub fn origin(ambient: Arc<AnalyticGerm>) -> Self {
        let n = ambient.nvars();
        let eqs = (0..n).map(|i| Polynomial::variable(n, i)).collect();
        Self::new("origin", ambient, eqs).expect("variables vanish at the origin")
    }

    /// The ambient germ as a subspace of itself.
    pub fn whole(ambient: Arc<AnalyticGerm>) -> Self {
        let name = ambient.name().to_string();
        Self::new(name, ambient, Vec::new()).expect("no equations")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Subspace {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn ambient(&self) -> &Arc<AnalyticGerm> {
        &self.ambient
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    /// Equations together with the ambient relations.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The subspace as a germ in its own right, in the ambient variables.
    pub fn as_germ(&self, name: impl Into<String>) -> Result<AnalyticGerm> {
        AnalyticGerm::new(name, self.ambient.vars().to_vec(), self.ideal.generators().to_vec())
    }

    /// Whether the subspace is the whole ambient germ.
    pub fn is_whole(&self) -> Result<bool> {
        self.ambient.relations().contains_all(&self.equations)
    }

    /// Whether the subspace is the reduced point.
    pub fn is_origin(&self) -> Result<bool> {
        let n = self.ambient.nvars();
        for i in 0..n {
            if !self.ideal.contains(&Polynomial::variable(n, i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_germ_examples() {
        let line = AnalyticGerm::parse("X", &["x"], &[]).unwrap();
        assert_eq!(line.nvars(), 1);
        assert!(line.is_smooth().unwrap());
        let cusp = AnalyticGerm::parse("C", &["x", "y"], &["y^2 - x^3"]).unwrap();
        // oracle: the relation vanishes at the origin
        assert!(cusp.relations().generators()[0].constant_term().is_zero());
        let err = AnalyticGerm::parse("P", &["x"], &["x - 1"]).unwrap_err();
        assert!(matches!(err, Error::NotAGerm(_)));
        assert!(AnalyticGerm::parse("Q", &["x"], &["x +"]).is_err());
    }

    #[test]
    fn embedding_dimension_examples() {
        assert_eq!(AnalyticGerm::affine("X", &["x"]).embedding_dim(), 1);
        let node = AnalyticGerm::parse("N", &["x", "y"], &["x*y"]).unwrap();
        assert_eq!(node.embedding_dim(), 2);
        let graph = AnalyticGerm::parse("G", &["x", "y"], &["y - x^2"]).unwrap();
        assert_eq!(graph.embedding_dim(), 1);
    }

    #[test]
    fn krull_dimension_and_smoothness() {
        let node = AnalyticGerm::parse("N", &["x", "y"], &["x*y"]).unwrap();
        assert_eq!(node.krull_dim().unwrap(), 1);
        assert_eq!(AnalyticGerm::affine("P", &["x1", "x2"]).krull_dim().unwrap(), 2);
        let pt = AnalyticGerm::parse("O", &["x", "y"], &["x", "y"]).unwrap();
        assert_eq!(pt.krull_dim().unwrap(), 0);
        assert!(!node.is_smooth().unwrap());
        let cusp = AnalyticGerm::parse("C", &["x", "y"], &["y^2 - x^3"]).unwrap();
        assert!(!cusp.is_smooth().unwrap());
        assert!(AnalyticGerm::point("pt").is_smooth().unwrap());
    }

    #[test]
    fn subspaces() {
        let plane = Arc::new(AnalyticGerm::affine("P", &["x1", "x2"]));
        let o = Subspace::origin(plane.clone());
        assert!(o.is_origin().unwrap());
        assert!(!o.is_whole().unwrap());
        let w = Subspace::whole(plane.clone());
        assert!(w.is_whole().unwrap());
        let bad = Subspace::new("b", plane.clone(), vec![Polynomial::one(2)]);
        assert!(bad.is_err());
    }
}
