//! Line-oriented text formats.
//!
//! Every object is a block opened by a `<kind> v1` header and closed by
//! `end`. Blank lines and anything after `#` are ignored, which is safe
//! because simplex names never contain `#` or whitespace. The printers emit
//! the canonical form, and `parse(print(x)) == x` with identical names.
//! The grammar is written out in `docs/formats.md`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use exspace_core::global::{GlobMor, GlobObj};
use exspace_core::retractive::{RetMap, RetSpace};
use exspace_core::spectra::{GAction, SeqSpec, SymSpec};
use exspace_core::sset::{DegOp, FinSSet, FinSSetBuilder, SMap, Simplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = Result<T, ParseError>;

/// A cover given by the points of each set; two sets meet when they share a
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub names: Vec<String>,
    pub sets: Vec<BTreeSet<u32>>,
}

/// Any object the formats can hold.
#[derive(Clone, Debug)]
pub enum Object {
    SSet(Arc<FinSSet>),
    SMap(SMap),
    Ret(RetSpace),
    GlobObj(GlobObj),
    GlobMor(GlobMor),
    Seq(SeqSpec),
    Sym(SymSpec),
    Cover(CoverData),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::SSet(_) => "sset",
            Object::SMap(_) => "smap",
            Object::Ret(_) => "retspace",
            Object::GlobObj(_) => "globobj",
            Object::GlobMor(_) => "globmor",
            Object::Seq(_) => "seqspec",
            Object::Sym(_) => "symspec",
            Object::Cover(_) => "cover",
        }
    }

    pub fn print(&self) -> String {
        match self {
            Object::SSet(x) => print_sset(x),
            Object::SMap(f) => print_smap(f),
            Object::Ret(y) => print_retspace(y),
            Object::GlobObj(a) => print_globobj(a),
            Object::GlobMor(m) => print_globmor(m),
            Object::Seq(a) => print_seqspec(a),
            Object::Sym(a) => print_symspec(a),
            Object::Cover(c) => print_cover(c),
        }
    }
}

// ---------------------------------------------------------------- printing

fn degop_token(d: DegOp) -> String {
    if d.is_identity() {
        "-".to_string()
    } else {
        d.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn simplex_tokens(x: &FinSSet, s: Simplex) -> String {
    format!("{} {}", degop_token(s.deg()), x.name(s.nd()))
}

fn push_sset(out: &mut String, x: &FinSSet) {
    out.push_str("sset v1\n");
    for u in x.all_nd() {
        let _ = writeln!(out, "dim {} {}", u.dim(), x.name(u));
    }
    for u in x.all_nd() {
        for (i, f) in x.nd_faces(u).iter().enumerate() {
            let _ = writeln!(out, "face {} {i} = {}", x.name(u), simplex_tokens(x, *f));
        }
    }
    out.push_str("end\n");
}

fn push_sends(out: &mut String, keyword: &str, f: &SMap) {
    for u in f.source().all_nd() {
        let _ = writeln!(out, "{keyword} {} -> {}", f.source().name(u), simplex_tokens(f.target(), f.image(u)));
    }
}

fn push_smap(out: &mut String, f: &SMap) {
    out.push_str("smap v1\n");
    push_sset(out, f.source());
    push_sset(out, f.target());
    push_sends(out, "send", f);
    out.push_str("end\n");
}

fn push_retspace(out: &mut String, y: &RetSpace) {
    out.push_str("retspace v1\n");
    if let Some(n) = y.truncation() {
        let _ = writeln!(out, "trunc {n}");
    }
    push_sset(out, y.base());
    push_sset(out, y.total());
    out.push_str("maps\n");
    push_sends(out, "section", y.section());
    push_sends(out, "retract", y.retraction());
    out.push_str("end\n");
    out.push_str("end\n");
}

fn push_globobj(out: &mut String, a: &GlobObj) {
    out.push_str("globobj v1\n");
    push_retspace(out, a.space());
    out.push_str("end\n");
}

fn push_seqspec(out: &mut String, a: &SeqSpec) {
    out.push_str("seqspec v1\n");
    out.push_str("base\n");
    push_sset(out, a.base());
    let _ = writeln!(out, "trunc {}", a.trunc());
    match a.bound() {
        Some(b) => {
            let _ = writeln!(out, "bound {b}");
        }
        None => out.push_str("bound -\n"),
    }
    for (n, l) in a.levels().iter().enumerate() {
        let _ = writeln!(out, "level {n}");
        push_retspace(out, l);
    }
    for n in 0..a.trunc() {
        let _ = writeln!(out, "struct {n}");
        push_smap(out, a.struct_map(n).map());
    }
    out.push_str("end\n");
}

pub fn print_sset(x: &FinSSet) -> String {
    let mut out = String::new();
    push_sset(&mut out, x);
    out
}

pub fn print_smap(f: &SMap) -> String {
    let mut out = String::new();
    push_smap(&mut out, f);
    out
}

pub fn print_retspace(y: &RetSpace) -> String {
    let mut out = String::new();
    push_retspace(&mut out, y);
    out
}

pub fn print_globobj(a: &GlobObj) -> String {
    let mut out = String::new();
    push_globobj(&mut out, a);
    out
}

pub fn print_globmor(m: &GlobMor) -> String {
    let mut out = String::from("globmor v1\n");
    push_globobj(&mut out, m.source());
    push_globobj(&mut out, m.target());
    push_smap(&mut out, m.base_map());
    push_smap(&mut out, &m.total_map());
    out.push_str("end\n");
    out
}

pub fn print_seqspec(a: &SeqSpec) -> String {
    let mut out = String::new();
    push_seqspec(&mut out, a);
    out
}

pub fn print_symspec(a: &SymSpec) -> String {
    let mut out = String::from("symspec v1\n");
    push_seqspec(&mut out, a.seq());
    for n in 0..=a.trunc() {
        let act = a.action(n);
        let _ = writeln!(out, "action {n}");
        for i in 0..n.saturating_sub(1) {
            let _ = writeln!(out, "gen {i}");
            push_sends(&mut out, "send", act.generator(i).map());
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_cover(c: &CoverData) -> String {
    let mut out = String::from("cover v1\n");
    for (name, s) in c.names.iter().zip(&c.sets) {
        let pts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
        if pts.is_empty() {
            let _ = writeln!(out, "set {name}");
        } else {
            let _ = writeln!(out, "set {name} {}", pts.join(" "));
        }
    }
    out.push_str("end\n");
    out
}

// ----------------------------------------------------------------- parsing

struct Reader<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last = 0;
        for (i, raw) in text.lines().enumerate() {
            last = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if !toks.is_empty() {
                lines.push((i + 1, toks));
            }
        }
        Reader { lines, pos: 0, last }
    }

    fn line_no(&self) -> usize {
        self.lines.get(self.pos).map_or(self.last + 1, |l| l.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> ParseResult<T> {
        Err(ParseError {
            line: self.line_no(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&[&'a str]> {
        self.lines.get(self.pos).map(|l| l.1.as_slice())
    }

    fn next(&mut self) -> ParseResult<(usize, Vec<&'a str>)> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.clone())
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn expect(&mut self, words: &[&str]) -> ParseResult<()> {
        let want = words.join(" ");
        match self.peek() {
            Some(t) if t == words => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let got = t.join(" ");
                self.err(format!("expected `{want}`, found `{got}`"))
            }
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn at(&self, keyword: &str) -> bool {
        self.peek().is_some_and(|t| t[0] == keyword)
    }

    fn finish(&self) -> ParseResult<()> {
        if self.pos < self.lines.len() {
            return self.err("trailing content after the object");
        }
        Ok(())
    }
}

fn at_line(line: usize, message: impl fmt::Display) -> ParseError {
    ParseError {
        line,
        message: message.to_string(),
    }
}

fn number(line: usize, tok: &str, what: &str) -> ParseResult<usize> {
    tok.parse::<usize>().map_err(|_| at_line(line, format!("{what} must be a natural number, found `{tok}`")))
}

fn parse_degop(line: usize, tok: &str) -> ParseResult<DegOp> {
    if tok == "-" {
        return Ok(DegOp::IDENTITY);
    }
    let idx = tok.split(',').map(|t| number(line, t, "degeneracy index")).collect::<ParseResult<Vec<_>>>()?;
    DegOp::from_indices(&idx).map_err(|e| at_line(line, e))
}

fn parse_simplex(line: usize, x: &FinSSet, deg: &str, name: &str) -> ParseResult<Simplex> {
    let op = parse_degop(line, deg)?;
    let u = x.find(name).ok_or_else(|| at_line(line, format!("unknown simplex {name}")))?;
    Ok(Simplex::nondegenerate(u).degenerate(op))
}

fn parse_sset_block(r: &mut Reader<'_>) -> ParseResult<Arc<FinSSet>> {
    r.expect(&["sset", "v1"])?;
    let mut dims: Vec<(usize, usize, String)> = Vec::new();
    let mut faces: BTreeMap<String, BTreeMap<usize, (usize, String, String)>> = BTreeMap::new();
    loop {
        let (line, t) = r.next()?;
        match t.as_slice() {
            ["end"] => break,
            ["dim", d, name] => {
                let d = number(line, d, "dimension")?;
                if dims.iter().any(|e| e.2 == *name) {
                    return Err(at_line(line, format!("duplicate simplex name {name}")));
                }
                dims.push((d, line, name.to_string()));
            }
            ["face", name, i, "=", deg, target] => {
                let i = number(line, i, "face index")?;
                let slot = faces.entry(name.to_string()).or_default();
                if slot.insert(i, (line, deg.to_string(), target.to_string())).is_some() {
                    return Err(at_line(line, format!("face {i} of {name} given twice")));
                }
            }
            _ => return Err(at_line(line, format!("unrecognised line `{}` in sset block", t.join(" ")))),
        }
    }
    // simplices are added by dimension, keeping file order within a level
    let mut order: Vec<usize> = (0..dims.len()).collect();
    order.sort_by_key(|&k| dims[k].0);
    let mut b = FinSSetBuilder::new();
    let mut ids = BTreeMap::new();
    for k in order {
        let (d, line, name) = &dims[k];
        let given = faces.remove(name).unwrap_or_default();
        let expected = if *d == 0 { 0 } else { d + 1 };
        if given.len() != expected || given.keys().any(|&i| i >= expected) {
            return Err(at_line(*line, format!("{name} needs faces 0..={d}, exactly once each")));
        }
        let mut fs = Vec::with_capacity(expected);
        for (_, (fline, deg, target)) in given {
            let op = parse_degop(fline, &deg)?;
            let id = *ids.get(&target).ok_or_else(|| at_line(fline, format!("unknown or higher-dimensional simplex {target}")))?;
            fs.push(Simplex::nondegenerate(id).degenerate(op));
        }
        let id = b.add(name.clone(), fs).map_err(|e| at_line(*line, e))?;
        ids.insert(name.clone(), id);
    }
    if let Some((name, f)) = faces.into_iter().next() {
        let line = f.values().next().map_or(0, |v| v.0);
        return Err(at_line(line, format!("face given for undeclared simplex {name}")));
    }
    let line = r.line_no();
    b.build().map(Arc::new).map_err(|e| at_line(line, e))
}

/// Reads `keyword <name> -> <degop> <target>` lines into an image table.
fn parse_sends(r: &mut Reader<'_>, keyword: &str, source: &FinSSet, target: &FinSSet) -> ParseResult<Vec<Vec<Simplex>>> {
    let mut images: Vec<Vec<Option<Simplex>>> = source.census().iter().map(|&c| vec![None; c]).collect();
    let start = r.line_no();
    while r.at(keyword) {
        let (line, t) = r.next()?;
        let [_, name, "->", deg, tgt] = t.as_slice() else {
            return Err(at_line(line, format!("expected `{keyword} <name> -> <degop> <target>`")));
        };
        let u = source.find(name).ok_or_else(|| at_line(line, format!("unknown source simplex {name}")))?;
        let s = parse_simplex(line, target, deg, tgt)?;
        if s.dim() != u.dim() {
            return Err(at_line(line, format!("{name} has dimension {} but its image has dimension {}", u.dim(), s.dim())));
        }
        let slot = &mut images[u.dim()][u.index()];
        if slot.is_some() {
            return Err(at_line(line, format!("{name} is sent twice")));
        }
        *slot = Some(s);
    }
    let mut out = Vec::with_capacity(images.len());
    for level in images {
        let mut row = Vec::with_capacity(level.len());
        for (k, s) in level.into_iter().enumerate() {
            match s {
                Some(s) => row.push(s),
                None => {
                    let d = out.len();
                    let name = source.name(exspace_core::sset::NdId::new(d, k));
                    return Err(at_line(start, format!("no image given for {name}")));
                }
            }
        }
        out.push(row);
    }
    Ok(out)
}

fn parse_smap_block(r: &mut Reader<'_>) -> ParseResult<SMap> {
    r.expect(&["smap", "v1"])?;
    let source = parse_sset_block(r)?;
    let target = parse_sset_block(r)?;
    let line = r.line_no();
    let images = parse_sends(r, "send", &source, &target)?;
    r.expect(&["end"])?;
    SMap::new(source, target, images).map_err(|e| at_line(line, e))
}

fn parse_retspace_block(r: &mut Reader<'_>) -> ParseResult<RetSpace> {
    r.expect(&["retspace", "v1"])?;
    let mut trunc = None;
    if let Some(["trunc", n]) = r.peek() {
        let line = r.line_no();
        let n = n.to_string();
        r.next()?;
        trunc = Some(number(line, &n, "truncation")?);
    }
    let base = parse_sset_block(r)?;
    let total = parse_sset_block(r)?;
    r.expect(&["maps"])?;
    let line = r.line_no();
    let sec = parse_sends(r, "section", &base, &total)?;
    let ret = parse_sends(r, "retract", &total, &base)?;
    r.expect(&["end"])?;
    r.expect(&["end"])?;
    let section = SMap::new(base.clone(), total.clone(), sec).map_err(|e| at_line(line, e))?;
    let retraction = SMap::new(total, base, ret).map_err(|e| at_line(line, e))?;
    let y = RetSpace::new(section, retraction).map_err(|e| at_line(line, e))?;
    Ok(y.with_truncation(trunc))
}

fn parse_globobj_block(r: &mut Reader<'_>) -> ParseResult<GlobObj> {
    r.expect(&["globobj", "v1"])?;
    let y = parse_retspace_block(r)?;
    r.expect(&["end"])?;
    Ok(GlobObj::new(y))
}

fn parse_globmor_block(r: &mut Reader<'_>) -> ParseResult<GlobMor> {
    r.expect(&["globmor", "v1"])?;
    let a = parse_globobj_block(r)?;
    let b = parse_globobj_block(r)?;
    let line = r.line_no();
    let f = parse_smap_block(r)?;
    let total = parse_smap_block(r)?;
    r.expect(&["end"])?;
    let f = f.retarget(a.base(), b.base()).map_err(|e| at_line(line, e))?;
    let total = total.retarget(a.space().total(), b.space().total()).map_err(|e| at_line(line, e))?;
    GlobMor::from_square(&a, &b, &f, &total).map_err(|e| at_line(line, e))
}

fn parse_seqspec_block(r: &mut Reader<'_>) -> ParseResult<SeqSpec> {
    r.expect(&["seqspec", "v1"])?;
    r.expect(&["base"])?;
    let base = parse_sset_block(r)?;
    let (line, t) = r.next()?;
    let ["trunc", n] = t.as_slice() else {
        return Err(at_line(line, "expected `trunc <N>`"));
    };
    let trunc = number(line, n, "truncation")?;
    let (line, t) = r.next()?;
    let bound = match t.as_slice() {
        ["bound", "-"] => None,
        ["bound", b] => Some(number(line, b, "bound")?),
        _ => return Err(at_line(line, "expected `bound <b|->`")),
    };
    let mut levels = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        r.expect(&["level", &n.to_string()])?;
        let line = r.line_no();
        let y = parse_retspace_block(r)?;
        if **y.base() != *base {
            return Err(at_line(line, format!("level {n} is not over the declared base")));
        }
        // rebuild over the shared base so that all levels agree on it
        let section = y.section().retarget(&base, y.total()).map_err(|e| at_line(line, e))?;
        let retraction = y.retraction().retarget(y.total(), &base).map_err(|e| at_line(line, e))?;
        let t = y.truncation();
        levels.push(RetSpace::new(section, retraction).map_err(|e| at_line(line, e))?.with_truncation(t));
    }
    let mut maps = Vec::with_capacity(trunc);
    for n in 0..trunc {
        r.expect(&["struct", &n.to_string()])?;
        let line = r.line_no();
        maps.push((line, parse_smap_block(r)?));
    }
    r.expect(&["end"])?;
    let line = r.line_no();
    let mut maps = maps.into_iter();
    SeqSpec::from_fn(levels, bound, |n, _, src, tgt| {
        let (line, f) = maps.next().expect("one map per level");
        if **f.source() != **src.total() || **f.target() != **tgt.total() {
            return Err(exspace_core::Error::Mismatch(format!(
                "structure map {n} (line {line}) does not run from the suspension of level {n} to level {}",
                n + 1
            )));
        }
        let f = f.retarget(src.total(), tgt.total())?;
        RetMap::new(src.clone(), tgt.clone(), f)
    })
    .map_err(|e| at_line(line, e))
}

fn parse_symspec_block(r: &mut Reader<'_>) -> ParseResult<SymSpec> {
    r.expect(&["symspec", "v1"])?;
    let seq = parse_seqspec_block(r)?;
    let mut actions = Vec::with_capacity(seq.trunc() + 1);
    for n in 0..=seq.trunc() {
        r.expect(&["action", &n.to_string()])?;
        let y = seq.level(n);
        let line = r.line_no();
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            r.expect(&["gen", &i.to_string()])?;
            let glines = r.line_no();
            let images = parse_sends(r, "send", y.total(), y.total())?;
            let g = SMap::new(y.total().clone(), y.total().clone(), images).map_err(|e| at_line(glines, e))?;
            gens.push(RetMap::new(y.clone(), y.clone(), g).map_err(|e| at_line(glines, e))?);
        }
        actions.push(GAction::new(y.clone(), n, gens).map_err(|e| at_line(line, e))?);
    }
    r.expect(&["end"])?;
    let line = r.line_no();
    SymSpec::new(seq, actions).map_err(|e| at_line(line, e))
}

fn parse_cover_block(r: &mut Reader<'_>) -> ParseResult<CoverData> {
    r.expect(&["cover", "v1"])?;
    let mut c = CoverData {
        names: Vec::new(),
        sets: Vec::new(),
    };
    loop {
        let (line, t) = r.next()?;
        match t.as_slice() {
            ["end"] => break,
            ["set", name, pts @ ..] => {
                if c.names.iter().any(|n| n == name) {
                    return Err(at_line(line, format!("duplicate set name {name}")));
                }
                let mut s = BTreeSet::new();
                for p in pts {
                    let v = p.parse::<u32>().map_err(|_| at_line(line, format!("point must be a natural number, found `{p}`")))?;
                    if !s.insert(v) {
                        return Err(at_line(line, format!("point {v} listed twice")));
                    }
                }
                c.names.push(name.to_string());
                c.sets.push(s);
            }
            _ => return Err(at_line(line, format!("unrecognised line `{}` in cover block", t.join(" ")))),
        }
    }
    if c.sets.is_empty() {
        return Err(at_line(r.line_no(), "a cover needs at least one set"));
    }
    Ok(c)
}

fn whole<T>(text: &str, f: impl FnOnce(&mut Reader<'_>) -> ParseResult<T>) -> ParseResult<T> {
    let mut r = Reader::new(text);
    let out = f(&mut r)?;
    r.finish()?;
    Ok(out)
}

pub fn parse_sset(text: &str) -> ParseResult<Arc<FinSSet>> {
    whole(text, parse_sset_block)
}

pub fn parse_smap(text: &str) -> ParseResult<SMap> {
    whole(text, parse_smap_block)
}

pub fn parse_retspace(text: &str) -> ParseResult<RetSpace> {
    whole(text, parse_retspace_block)
}

pub fn parse_globobj(text: &str) -> ParseResult<GlobObj> {
    whole(text, parse_globobj_block)
}

pub fn parse_globmor(text: &str) -> ParseResult<GlobMor> {
    whole(text, parse_globmor_block)
}

pub fn parse_seqspec(text: &str) -> ParseResult<SeqSpec> {
    whole(text, parse_seqspec_block)
}

pub fn parse_symspec(text: &str) -> ParseResult<SymSpec> {
    whole(text, parse_symspec_block)
}

pub fn parse_cover(text: &str) -> ParseResult<CoverData> {
    whole(text, parse_cover_block)
}

/// Parses whichever kind of object the header announces.
pub fn parse_object(text: &str) -> ParseResult<Object> {
    let r = Reader::new(text);
    let Some(head) = r.peek() else {
        return r.err("empty input");
    };
    match head {
        ["sset", "v1"] => parse_sset(text).map(Object::SSet),
        ["smap", "v1"] => parse_smap(text).map(Object::SMap),
        ["retspace", "v1"] => parse_retspace(text).map(Object::Ret),
        ["globobj", "v1"] => parse_globobj(text).map(Object::GlobObj),
        ["globmor", "v1"] => parse_globmor(text).map(Object::GlobMor),
        ["seqspec", "v1"] => parse_seqspec(text).map(Object::Seq),
        ["symspec", "v1"] => parse_symspec(text).map(Object::Sym),
        ["cover", "v1"] => parse_cover(text).map(Object::Cover),
        _ => r.err(format!("unknown header `{}`", head.join(" "))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exspace_core::retractive::{point_plus, sphere1, PullbackRet};
    use exspace_core::spectra::{free_seq, free_sym, sphere_sym};
    use exspace_core::sset::{boundary_inclusion, circle, horn, product, standard, NdId};
    use proptest::prelude::*;

    fn round_trip(o: &Object) {
        let text = o.print();
        let back = parse_object(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(back.print(), text);
    }

    #[test]
    fn triangle_text() {
        let x = standard(2);
        let text = print_sset(&x);
        assert!(text.starts_with("sset v1\ndim 0 "));
        assert_eq!(text.lines().filter(|l| l.starts_with("dim")).count(), 7);
        assert_eq!(text.lines().filter(|l| l.starts_with("face")).count(), 3 * 2 + 3);
        assert_eq!(*parse_sset(&text).unwrap(), x);
    }

    #[test]
    fn circle_by_hand() {
        let text = "sset v1\ndim 0 * # the vertex\n\ndim 1 e\nface e 0 = - *\nface e 1 = - *\nend\n";
        let x = parse_sset(text).unwrap();
        assert_eq!(*x, circle());
        // higher dimensions may come first; faces are resolved afterwards
        let shuffled = "sset v1\ndim 1 e\nface e 1 = - *\nface e 0 = - *\ndim 0 *\nend\n";
        assert_eq!(*parse_sset(shuffled).unwrap(), circle());
    }

    #[test]
    fn rejects_bad_sset_data() {
        let cases = [
            ("sset v1\ndim 0 v\ndim 1 e\nface e 0 = - v\nend\n", 3),
            ("sset v1\ndim 0 v\ndim 1 e\nface e 0 = - v\nface e 1 = - w\nend\n", 5),
            ("sset v1\ndim 0 v\ndim 0 v\nend\n", 3),
            // an edge cannot have an edge as a face
            ("sset v1\ndim 0 v\ndim 1 e\nface e 0 = - v\nface e 1 = - v\ndim 1 f\nface f 0 = - e\nface f 1 = - v\nend\n", 6),
            // non-normal-form degeneracy
            (
                "sset v1\ndim 0 v\ndim 1 e\nface e 0 = - v\nface e 1 = - v\ndim 2 t\nface t 0 = 0,1 v\nface t 1 = - e\nface t 2 = - e\nend\n",
                7,
            ),
            ("sset v1\ndim 0 v\n", 3),
            ("sset v2\nend\n", 1),
            ("sset v1\nend\nend\n", 3),
            ("sset v1\nbogus line\nend\n", 2),
        ];
        for (text, line) in cases {
            let e = parse_sset(text).unwrap_err();
            assert_eq!(e.line, line, "{text}: {e}");
        }
        // the simplicial identities are checked
        let bad = "sset v1\ndim 0 a\ndim 0 b\ndim 1 e\nface e 0 = - b\nface e 1 = - a\ndim 2 t\nface t 0 = - e\nface t 1 = - e\nface t 2 = - e\nend\n";
        assert!(parse_sset(bad).unwrap_err().message.contains("simplicial identity"));
    }

    #[test]
    fn maps_and_spaces() {
        round_trip(&Object::SMap(boundary_inclusion(2)));
        let s1 = Arc::new(circle());
        let t = product(&s1, &s1).unwrap();
        round_trip(&Object::SSet(t.object().clone()));
        round_trip(&Object::SMap(t.left().clone()));
        let y = PullbackRet::of_pointed(&s1, &sphere1()).unwrap().space().clone();
        round_trip(&Object::Ret(y.clone()));
        round_trip(&Object::Ret(y.skeleton(1).unwrap()));
        round_trip(&Object::GlobObj(GlobObj::new(point_plus(&s1, NdId::new(0, 0)).unwrap())));
        round_trip(&Object::GlobMor(GlobMor::identity(&GlobObj::new(y))));
        round_trip(&Object::SSet(Arc::new(horn(2, 1).unwrap())));
        round_trip(&Object::SSet(Arc::new(FinSSet::empty())));
    }

    #[test]
    fn parsed_objects_equal_the_originals() {
        let f = boundary_inclusion(1);
        let g = parse_smap(&print_smap(&f)).unwrap();
        assert_eq!(g, f);
        let y = point_plus(&Arc::new(standard(1)), NdId::new(0, 1)).unwrap();
        assert_eq!(parse_retspace(&print_retspace(&y)).unwrap(), y);
    }

    #[test]
    fn spectra_round_trip() {
        let d1 = Arc::new(standard(1));
        let y = point_plus(&d1, NdId::new(0, 0)).unwrap();
        round_trip(&Object::Seq(free_seq(1, &y, 2).unwrap()));
        round_trip(&Object::Sym(sphere_sym(&d1, 2).unwrap().spec().clone()));
        round_trip(&Object::Sym(free_sym(1, &y, 3).unwrap().spec().clone()));
        let a = free_seq(0, &RetSpace::unit(&d1), 2).unwrap();
        let b = parse_seqspec(&print_seqspec(&a)).unwrap();
        for n in 0..=2 {
            assert_eq!(b.level(n), a.level(n));
            assert_eq!(b.struct_map(n.min(1)).map(), a.struct_map(n.min(1)).map());
        }
    }

    #[test]
    fn spectra_reject_wrong_structure_maps() {
        let d1 = Arc::new(standard(1));
        let a = free_seq(0, &RetSpace::unit(&d1), 1).unwrap();
        let text = print_seqspec(&a);
        // drop the structure map block entirely
        let cut = text.find("struct 0").unwrap();
        let e = parse_seqspec(&format!("{}end\n", &text[..cut])).unwrap_err();
        assert!(e.message.contains("struct 0"), "{e}");
        // the sphere with a trivial action on level 2 breaks equivariance
        let s = sphere_sym(&d1, 2).unwrap();
        let text = print_symspec(s.spec());
        assert!(parse_symspec(&text).is_ok());
        let gen = text.find("gen 0\n").unwrap();
        let mut out: Vec<String> = text[..gen + 6].lines().map(str::to_string).collect();
        let mut rest = text[gen + 6..].lines();
        for l in rest.by_ref() {
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts[0] != "send" {
                out.push(l.to_string());
                break;
            }
            out.push(format!("send {} -> - {}", parts[1], parts[1]));
        }
        out.extend(rest.map(str::to_string));
        let e = parse_symspec(&(out.join("\n") + "\n")).unwrap_err();
        assert!(e.message.contains("equivariant"), "{e}");
    }

    #[test]
    fn covers() {
        let text = "cover v1\nset U 0 1 2\nset V 2 3\nset W\nend\n";
        let c = parse_cover(text).unwrap();
        assert_eq!(c.sets.len(), 3);
        assert!(c.sets[2].is_empty());
        assert_eq!(print_cover(&c), text);
        assert_eq!(parse_cover("cover v1\nset U 1 1\nend\n").unwrap_err().line, 2);
        assert_eq!(parse_cover("cover v1\nend\n").unwrap_err().line, 3);
    }

    #[test]
    fn unknown_headers() {
        assert_eq!(parse_object("").unwrap_err().message, "empty input");
        assert!(parse_object("widget v1\nend\n").unwrap_err().message.contains("unknown header"));
    }

    fn random_complex(facets: &[Vec<u8>]) -> FinSSet {
        let fs: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.iter().map(|&v| v as usize).collect()).collect();
        exspace_core::sset::simplicial_complex(5, |s| fs.iter().any(|f| s.iter().all(|v| f.contains(v))))
    }

    proptest! {
        #[test]
        fn complexes_round_trip(facets in prop::collection::vec(prop::collection::vec(0u8..6, 1..4), 1..5)) {
            let x = random_complex(&facets);
            let text = print_sset(&x);
            let back = parse_sset(&text).unwrap();
            prop_assert_eq!(&*back, &x);
            prop_assert_eq!(print_sset(&back), text);
        }

        #[test]
        fn products_round_trip(n in 0usize..3, m in 0usize..3) {
            let p = product(&Arc::new(standard(n)), &Arc::new(standard(m))).unwrap();
            let text = print_smap(p.right());
            prop_assert_eq!(print_smap(&parse_smap(&text).unwrap()), text);
        }
    }
}
