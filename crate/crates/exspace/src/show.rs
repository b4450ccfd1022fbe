//! Text renderings of interchange objects for the `show` subcommand.

use std::fmt::Write;

use exspace_core::invariants::{homology, normalise_dims, Field};
use exspace_core::sset::FinSSet;

use crate::format::Object;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShowFormat {
    Summary,
    Full,
    Dot,
}

impl std::str::FromStr for ShowFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "summary" => Ok(ShowFormat::Summary),
            "full" => Ok(ShowFormat::Full),
            "dot" => Ok(ShowFormat::Dot),
            _ => Err(format!("unknown format {s:?}; expected summary, full or dot")),
        }
    }
}

/// `dims: 3,3,1`, or `dims: (empty)` for the empty simplicial set.
pub fn dims_line(label: &str, x: &FinSSet) -> String {
    let c = x.census();
    if c.is_empty() {
        return format!("{label}: (empty)");
    }
    let parts: Vec<String> = c.iter().map(|n| n.to_string()).collect();
    format!("{label}: {}", parts.join(","))
}

/// `homology: (1,1)`, rational Betti numbers with trailing zeros dropped.
pub fn homology_line(x: &FinSSet) -> String {
    let h = normalise_dims(&homology(x, Field::Rational));
    let parts: Vec<String> = h.iter().map(|n| n.to_string()).collect();
    format!("homology: ({})", parts.join(","))
}

pub fn show(o: &Object, format: ShowFormat) -> String {
    match format {
        ShowFormat::Summary => summary(o),
        ShowFormat::Full => o.print(),
        ShowFormat::Dot => dot(o),
    }
}

/// The census of the principal simplicial set first, then supporting data.
pub fn summary(o: &Object) -> String {
    let mut lines = Vec::new();
    match o {
        Object::SSet(x) => lines.push(dims_line("dims", x)),
        Object::SMap(f) => {
            lines.push(dims_line("dims", f.source()));
            lines.push(dims_line("target dims", f.target()));
            lines.push(format!("mono: {}", f.is_mono()));
        }
        Object::Ret(y) => {
            lines.push(dims_line("dims", y.total()));
            lines.push(dims_line("base dims", y.base()));
        }
        Object::GlobObj(a) => {
            lines.push(dims_line("dims", a.space().total()));
            lines.push(dims_line("base dims", a.base()));
        }
        Object::GlobMor(m) => {
            lines.push(dims_line("dims", m.source().space().total()));
            lines.push(dims_line("target dims", m.target().space().total()));
            lines.push(format!("mono: {}", m.is_mono()));
        }
        Object::Seq(a) => {
            lines.push(dims_line("base dims", a.base()));
            for n in 0..=a.trunc() {
                lines.push(dims_line(&format!("level {n} dims"), a.level(n).total()));
            }
        }
        Object::Sym(a) => {
            lines.push(dims_line("base dims", a.base()));
            for n in 0..=a.trunc() {
                lines.push(dims_line(&format!("level {n} dims"), a.level(n).total()));
            }
        }
        Object::Cover(c) => {
            lines.push(format!("sets: {}", c.sets.len()));
            let pts: std::collections::BTreeSet<u32> = c.sets.iter().flatten().copied().collect();
            lines.push(format!("points: {}", pts.len()));
        }
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Face graph of the principal simplicial set: one node per nondegenerate
/// simplex, one edge `x -> d_i x` per nondegenerate face.
pub fn dot(o: &Object) -> String {
    match o {
        Object::SSet(x) => face_graph(x),
        Object::SMap(f) => face_graph(f.source()),
        Object::Ret(y) => face_graph(y.total()),
        Object::GlobObj(a) => face_graph(a.space().total()),
        Object::GlobMor(m) => face_graph(m.source().space().total()),
        Object::Seq(a) => face_graph(a.level(0).total()),
        Object::Sym(a) => face_graph(a.level(0).total()),
        Object::Cover(_) => "digraph faces {\n}\n".to_string(),
    }
}

pub fn face_graph(x: &FinSSet) -> String {
    let mut out = String::from("digraph faces {\n");
    for u in x.all_nd() {
        let _ = writeln!(out, "  \"{}\" [label=\"{}\", dim={}];", x.name(u), x.name(u), u.dim());
    }
    for u in x.all_nd() {
        if u.dim() == 0 {
            continue;
        }
        for (i, f) in x.nd_faces(u).iter().enumerate() {
            if !f.is_degenerate() {
                let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"d{i}\"];", x.name(u), x.name(f.nd()));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{base, torus};
    use std::sync::Arc;

    #[test]
    fn summaries() {
        assert_eq!(summary(&Object::SSet(base("d2"))), "dims: 3,3,1\n");
        assert_eq!(summary(&Object::SSet(Arc::new(FinSSet::empty()))), "dims: (empty)\n");
        assert_eq!(summary(&Object::SSet(Arc::new(torus()))), "dims: 1,3,2\n");
    }

    #[test]
    fn dot_edges() {
        let g = face_graph(&base("d1"));
        assert_eq!(g.lines().filter(|l| l.contains("->")).count(), 2);
        // both faces of the circle's edge land on its one vertex
        let c = face_graph(&base("s1"));
        assert_eq!(c.lines().filter(|l| l.contains("->")).count(), 2);
        assert!(c.starts_with("digraph faces {") && c.ends_with("}\n"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("dot".parse::<ShowFormat>(), Ok(ShowFormat::Dot));
        assert!("png".parse::<ShowFormat>().is_err());
    }
}
