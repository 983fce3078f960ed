//! Line-oriented text format for germs, subspaces and surjections.
//!
//! ```text
//! germ X
//! vars x y
//! ideal
//! y^2 - x^3
//! end
//!
//! subspace O in X
//! ideal
//! x
//! y
//! end
//!
//! map alpha X -> Z
//! x -> z
//! y -> 0
//! end
//! ```
//!
//! `#` starts a comment. Names are unique across the file and every block
//! refers only to names defined above it.

use super::{AnalyticGerm, GermSurjection, Subspace};
use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, Polynomial};
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub enum Item {
    Germ(Arc<AnalyticGerm>),
    Subspace(Arc<Subspace>),
    Map(Arc<GermSurjection>),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Germ(g) => g.name(),
            Item::Subspace(s) => s.name(),
            Item::Map(m) => m.name(),
        }
    }
}

/// The parsed contents of a workspace file, in file order.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    items: Vec<Item>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name() == name)
    }

    pub fn germ(&self, name: &str) -> Result<Arc<AnalyticGerm>> {
        match self.get(name) {
            Some(Item::Germ(g)) => Ok(g.clone()),
            _ => Err(Error::UnknownName(format!("germ `{name}`"))),
        }
    }

    pub fn subspace(&self, name: &str) -> Result<Arc<Subspace>> {
        match self.get(name) {
            Some(Item::Subspace(s)) => Ok(s.clone()),
            _ => Err(Error::UnknownName(format!("subspace `{name}`"))),
        }
    }

    pub fn map(&self, name: &str) -> Result<Arc<GermSurjection>> {
        match self.get(name) {
            Some(Item::Map(m)) => Ok(m.clone()),
            _ => Err(Error::UnknownName(format!("map `{name}`"))),
        }
    }

    pub fn maps(&self) -> impl Iterator<Item = &Arc<GermSurjection>> {
        self.items.iter().filter_map(|i| match i {
            Item::Map(m) => Some(m),
            _ => None,
        })
    }

    pub fn subspaces(&self) -> impl Iterator<Item = &Arc<Subspace>> {
        self.items.iter().filter_map(|i| match i {
            Item::Subspace(s) => Some(s),
            _ => None,
        })
    }

    pub fn push(&mut self, item: Item) -> Result<()> {
        if self.get(item.name()).is_some() {
            return Err(Error::DuplicateName(item.name().to_string()));
        }
        self.items.push(item);
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let mut ws = Workspace::new();
        let mut pos = 0;
        while pos < lines.len() {
            let (lineno, head) = lines[pos];
            let words: Vec<&str> = head.split_whitespace().collect();
            pos += 1;
            let at = |message: String| Error::Parse { line: lineno, message };
            let item = match words.as_slice() {
                ["germ", name] => {
                    let (vline, vars_line) = lines
                        .get(pos)
                        .copied()
                        .ok_or_else(|| at("missing `vars` line".into()))?;
                    let mut vw = vars_line.split_whitespace();
                    if vw.next() != Some("vars") {
                        return Err(Error::Parse {
                            line: vline,
                            message: "expected `vars`".into(),
                        });
                    }
                    let vars: Vec<String> = vw.map(str::to_string).collect();
                    pos += 1;
                    let polys = read_ideal(&lines, &mut pos, &vars, lineno)?;
                    let germ = AnalyticGerm::new(*name, vars, polys)?;
                    Item::Germ(Arc::new(germ))
                }
                ["subspace", name, "in", ambient] => {
                    let ambient = ws.germ(ambient)?;
                    let polys = read_ideal(&lines, &mut pos, ambient.vars(), lineno)?;
                    Item::Subspace(Arc::new(Subspace::new(*name, ambient, polys)?))
                }
                ["map", name, source, "->", target] => {
                    let source = ws.germ(source)?;
                    let target = ws.germ(target)?;
                    let mut images: Vec<Option<Polynomial>> = vec![None; source.nvars()];
                    loop {
                        let (l, line) = lines
                            .get(pos)
                            .copied()
                            .ok_or_else(|| at("unterminated map".into()))?;
                        pos += 1;
                        if line == "end" {
                            break;
                        }
                        let (var, img) = line.split_once("->").ok_or_else(|| Error::Parse {
                            line: l,
                            message: "expected `var -> polynomial`".into(),
                        })?;
                        let idx = source
                            .var_index(var.trim())
                            .ok_or_else(|| Error::UnknownName(format!("variable `{}`", var.trim())))?;
                        let p = parse_polynomial(img, target.vars())
                            .map_err(|message| Error::Parse { line: l, message })?;
                        if images[idx].replace(p).is_some() {
                            return Err(Error::DuplicateName(format!("image of `{}`", var.trim())));
                        }
                    }
                    let images = images
                        .into_iter()
                        .enumerate()
                        .map(|(i, p)| p.ok_or_else(|| at(format!("no image for `{}`", source.vars()[i]))))
                        .collect::<Result<Vec<_>>>()?;
                    Item::Map(Arc::new(GermSurjection::new(*name, source, target, images)?))
                }
                _ => return Err(at(format!("unrecognised line `{head}`"))),
            };
            ws.push(item)?;
        }
        Ok(ws)
    }

    /// Canonical text; parsing it back gives the same workspace.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            match item {
                Item::Germ(g) => {
                    let _ = writeln!(out, "germ {}", g.name());
                    let _ = writeln!(out, "vars {}", g.vars().join(" ").trim_end());
                    write_ideal(&mut out, g.relations().generators(), g.vars());
                }
                Item::Subspace(s) => {
                    let _ = writeln!(out, "subspace {} in {}", s.name(), s.ambient().name());
                    write_ideal(&mut out, s.equations(), s.ambient().vars());
                }
                Item::Map(m) => {
                    let _ = writeln!(out, "map {} {} -> {}", m.name(), m.source().name(), m.target().name());
                    for (v, img) in m.source().vars().iter().zip(m.images()) {
                        let _ = writeln!(out, "{v} -> {}", m.target().display_poly(img));
                    }
                    out.push_str("end\n");
                }
            }
        }
        out
    }
}

fn read_ideal(lines: &[(usize, &str)], pos: &mut usize, vars: &[String], start: usize) -> Result<Vec<Polynomial>> {
    let mut polys = Vec::new();
    match lines.get(*pos) {
        Some((_, "ideal")) => *pos += 1,
        Some((_, "end")) => {
            *pos += 1;
            return Ok(polys);
        }
        Some(&(line, _)) => {
            return Err(Error::Parse {
                line,
                message: "expected `ideal` or `end`".into(),
            })
        }
        None => {
            return Err(Error::Parse {
                line: start,
                message: "unterminated block".into(),
            })
        }
    }
    loop {
        let &(line, text) = lines.get(*pos).ok_or(Error::Parse {
            line: start,
            message: "unterminated block".into(),
        })?;
        *pos += 1;
        if text == "end" {
            return Ok(polys);
        }
        polys.push(parse_polynomial(text, vars).map_err(|message| Error::Parse { line, message })?);
    }
}

fn write_ideal(out: &mut String, gens: &[Polynomial], vars: &[String]) {
    out.push_str("ideal\n");
    for g in gens {
        let _ = writeln!(out, "{}", g.display(vars));
    }
    out.push_str("end\n");
}

#[cfg(test)]
mod tests {
    use super::*;

    const NODE: &str = "\
# node from two lines
germ X
vars x
end

germ Y
vars y
ideal
end

germ Z
vars
end

map alpha X -> Z
x -> 0
end

map beta Y -> Z
y -> 0
end

subspace O in X
ideal
x
end
";

    #[test]
    fn parses_and_round_trips() {
        let ws = Workspace::parse(NODE).unwrap();
        assert_eq!(ws.items().len(), 6);
        assert!(ws.germ("Z").unwrap().is_point());
        assert_eq!(ws.map("beta").unwrap().source().name(), "Y");
        let text = ws.to_text();
        let again = Workspace::parse(&text).unwrap();
        assert_eq!(again.to_text(), text);
    }

    #[test]
    fn reports_errors() {
        let e = Workspace::parse("germ X\nvars x\nideal\nx +\nend\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        let e = Workspace::parse("germ X\nvars x\nend\ngerm X\nvars y\nend\n").unwrap_err();
        assert!(matches!(e, Error::DuplicateName(_)));
        let e = Workspace::parse("map a X -> Z\nend\n").unwrap_err();
        assert!(matches!(e, Error::UnknownName(_)));
        let e = Workspace::parse("germ X\nvars x\nideal\nx\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }
}
