//! Small gluings with known answers, used by the test suites and the CLI.

use crate::error::Result;
use crate::germ::{AnalyticGerm, Subspace};
use crate::gluing::{glue_at_point, self_glue, GluedGerm};
use std::sync::Arc;

fn germ(name: &str, vars: &[&str], rels: &[&str]) -> Result<Arc<AnalyticGerm>> {
    Ok(Arc::new(AnalyticGerm::parse(name, vars, rels)?))
}

fn line(name: &str, var: &str) -> Result<Arc<AnalyticGerm>> {
    germ(name, &[var], &[])
}

fn plane(name: &str) -> Result<Arc<AnalyticGerm>> {
    germ(name, &["x1", "x2"], &[])
}

fn cusp(name: &str, a: &str, b: &str) -> Result<Arc<AnalyticGerm>> {
    germ(name, &[a, b], &[&format!("{b}^2 - {a}^3")])
}

/// Two lines at a point: the node `uv = 0`.
pub fn node() -> Result<GluedGerm> {
    glue_at_point(line("X", "x")?, line("Y", "y")?)
}

/// The line glued to itself at the origin; isomorphic to [`node`].
pub fn line_along_origin() -> Result<GluedGerm> {
    self_glue(&Subspace::origin(line("X", "x")?))
}

pub fn plane_along_line() -> Result<GluedGerm> {
    let p = plane("X")?;
    let l = Subspace::new("L", p.clone(), vec![p.parse_poly("x2")?])?;
    self_glue(&l)
}

pub fn plane_along_origin() -> Result<GluedGerm> {
    self_glue(&Subspace::origin(plane("X")?))
}

pub fn cusp_and_line() -> Result<GluedGerm> {
    glue_at_point(cusp("X", "x1", "x2")?, line("Y", "y")?)
}

/// A plane and a line at a point, with the line as the first factor.
pub fn line_and_plane() -> Result<GluedGerm> {
    glue_at_point(line("X", "x")?, germ("Y", &["y1", "y2"], &[])?)
}

pub fn two_cusps() -> Result<GluedGerm> {
    glue_at_point(cusp("X", "x1", "x2")?, cusp("Y", "y1", "y2")?)
}

/// Every instance, by name.
pub fn all() -> Result<Vec<(&'static str, GluedGerm)>> {
    Ok(vec![
        ("node", node()?),
        ("line along origin", line_along_origin()?),
        ("plane along line", plane_along_line()?),
        ("plane along origin", plane_along_origin()?),
        ("cusp and line", cusp_and_line()?),
        ("line and plane", line_and_plane()?),
        ("two cusps", two_cusps()?),
    ])
}
