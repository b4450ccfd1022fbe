//! Construction scripts: one statement per line,
//!
//! ```text
//! let c = circle()
//! let h = homology(c)
//! assert_dims(h, (1,1))
//! ```
//!
//! Names bind once and only to earlier names, so the binding graph is
//! acyclic. Syntax errors, unknown names or operations, wrong arity and
//! argument type mismatches are script errors. A library error while
//! evaluating a binding, or a false assertion, is a failed claim.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use exspace_core::digest::Fnv64;
use exspace_core::global::{diag_compare, ext_to_fib_compare, ExtSmash, GlobMor, GlobObj};
use exspace_core::invariants::{
    cech_nerve, default_horn_cap, fibration_check, homology, normalise_dims, pushout_product, rel_quotient_homology, rlp, Field, Verdict,
};
use exspace_core::koszul::{check_homomorphisms, check_identities, loop_group, path_fib, w_total, wbar};
use exspace_core::retractive::{point_plus, sphere0, sphere1, PullbackRet, Pushforward, RetMap, RetSpace, SmashProduct};
use exspace_core::spectra::{
    ext_smash_sym, fib_smash_sym, free_seq, free_smash_compare, free_sym, pulled_sphere, sphere_sym, trivial_bundle_compare, xi, zeta, FreeSym,
    Pairing, PairedGen, SeqMor, SeqSpec, SymMor, SymSpec,
};
use exspace_core::sset::{
    boundary, boundary_inclusion, circle, enumerate_maps, horn, horn_inclusion, point, product, sphere, standard, FinSSet, NdId, SMap,
};

use crate::corpus::{corpus_dir, with_cover};
use crate::format::{parse_object, CoverData, Object, ParseError};
use crate::suites::Options;

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Int(i64),
    Str(String),
    Tuple(Vec<i64>),
    Name(String),
    Call(String, Vec<Expr>),
}

#[derive(Clone, Debug)]
enum Stmt {
    Let(String, Expr),
    Assert(String, Vec<Expr>),
}

#[derive(Clone, Debug)]
struct Line {
    number: usize,
    text: String,
    stmt: Stmt,
}

const ASSERTIONS: [&str; 5] = ["assert_iso", "assert_card", "assert_dims", "assert_true", "assert_false"];

/// Operation names with their accepted argument counts.
const OPS: &[(&str, &[usize])] = &[
    ("load", &[1]),
    ("point", &[0]),
    ("simplex", &[1]),
    ("boundary", &[1]),
    ("horn", &[2]),
    ("circle", &[0]),
    ("sphere", &[1]),
    ("product", &[2]),
    ("census", &[1]),
    ("card", &[1]),
    ("hom_count", &[2]),
    ("boundary_inclusion", &[1]),
    ("horn_inclusion", &[2]),
    ("constant", &[3]),
    ("identity", &[1]),
    ("unit", &[1]),
    ("zero", &[1]),
    ("point_plus", &[2]),
    ("sphere0", &[0]),
    ("sphere1", &[0]),
    ("pull_pointed", &[2]),
    ("total", &[1]),
    ("base", &[1]),
    ("smash", &[2]),
    ("tensor", &[2]),
    ("push", &[2]),
    ("pull", &[2]),
    ("glob", &[1]),
    ("ext_smash", &[2]),
    ("space", &[1]),
    ("diag_compare", &[2]),
    ("ext_to_fib", &[2]),
    ("free_seq", &[3]),
    ("free_sym", &[3]),
    ("sphere_sym", &[2]),
    ("level", &[2]),
    ("zeta", &[3]),
    ("trivial_bundle", &[2]),
    ("xi", &[3]),
    ("smash_sym", &[3]),
    ("free_smash", &[3]),
    ("homology", &[1, 2]),
    ("reduced_homology", &[1, 2]),
    ("cech", &[1]),
    ("rlp", &[2]),
    ("fibration", &[1, 2]),
    ("pushout_product", &[2]),
    ("is_mono", &[1]),
    ("koszul", &[1, 2]),
];

// ----------------------------------------------------------------- parsing

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.line, format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        let w = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        if w.is_empty() || w.as_bytes()[0].is_ascii_digit() {
            return Err(err(self.line, "expected a name"));
        }
        Ok(w.to_string())
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let w = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        w.parse().map_err(|_| err(self.line, format!("bad integer {w:?}")))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => Err(err(self.line, "expected an expression")),
            Some(b'"') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos == self.s.len() {
                    return Err(err(self.line, "unterminated string"));
                }
                let w = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
                self.pos += 1;
                Ok(Expr::Str(w))
            }
            Some(b'(') => {
                self.pos += 1;
                let mut xs = Vec::new();
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    return Ok(Expr::Tuple(xs));
                }
                loop {
                    xs.push(self.int()?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Expr::Tuple(xs));
                        }
                        _ => return Err(err(self.line, "expected ',' or ')' in a tuple")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => Ok(Expr::Int(self.int()?)),
            Some(_) => {
                let name = self.ident()?;
                if self.peek() != Some(b'(') {
                    return Ok(Expr::Name(name));
                }
                let args = self.args()?;
                Ok(Expr::Call(name, args))
            }
        }
    }

    fn args(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.eat(b'(')?;
        let mut args = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(err(self.line, "expected ',' or ')'")),
            }
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(err(self.line, "trailing input")),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    // '#' outside a string literal starts a comment
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn check_names(e: &Expr, bound: &[String], line: usize) -> Result<(), ParseError> {
    match e {
        Expr::Name(n) if !bound.contains(n) => Err(err(line, format!("unbound name {n}"))),
        Expr::Call(op, args) => {
            let Some((_, arities)) = OPS.iter().find(|o| o.0 == op) else {
                return Err(err(line, format!("unknown operation {op}")));
            };
            if !arities.contains(&args.len()) {
                return Err(err(line, format!("{op} takes {arities:?} arguments, got {}", args.len())));
            }
            args.iter().try_for_each(|a| check_names(a, bound, line))
        }
        _ => Ok(()),
    }
}

fn parse(text: &str) -> Result<Vec<Line>, ParseError> {
    let mut out = Vec::new();
    let mut bound: Vec<String> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let mut lx = Lexer {
            s: body.as_bytes(),
            pos: 0,
            line: number,
        };
        let head = lx.ident()?;
        let stmt = if head == "let" {
            let name = lx.ident()?;
            if OPS.iter().any(|o| o.0 == name) || ASSERTIONS.contains(&name.as_str()) || name == "let" {
                return Err(err(number, format!("{name} is reserved")));
            }
            lx.eat(b'=')?;
            let e = lx.expr()?;
            lx.end()?;
            check_names(&e, &bound, number)?;
            if bound.contains(&name) {
                return Err(err(number, format!("{name} is already bound")));
            }
            bound.push(name.clone());
            Stmt::Let(name, e)
        } else if ASSERTIONS.contains(&head.as_str()) {
            let args = lx.args()?;
            lx.end()?;
            let want = match head.as_str() {
                "assert_iso" => &[1, 2][..],
                "assert_card" | "assert_dims" => &[2][..],
                _ => &[1][..],
            };
            if !want.contains(&args.len()) {
                return Err(err(number, format!("{head} takes {want:?} arguments")));
            }
            for a in &args {
                check_names(a, &bound, number)?;
            }
            match (head.as_str(), args.get(1)) {
                ("assert_card", Some(Expr::Int(_))) | ("assert_dims", Some(Expr::Tuple(_))) => {}
                ("assert_card", _) => return Err(err(number, "assert_card expects an integer literal")),
                ("assert_dims", _) => return Err(err(number, "assert_dims expects a tuple literal such as (1,1)")),
                _ => {}
            }
            Stmt::Assert(head, args)
        } else {
            return Err(err(number, format!("expected let or an assertion, found {head}")));
        };
        out.push(Line {
            number,
            text: body.to_string(),
            stmt,
        });
    }
    Ok(out)
}

// -------------------------------------------------------------- evaluation

#[derive(Clone)]
enum Value {
    Int(i64),
    Str(String),
    Dims(Vec<usize>),
    Bool(bool),
    SSet(Arc<FinSSet>),
    Map(SMap),
    Ret(RetSpace),
    RetMap(RetMap),
    Glob(GlobObj),
    GlobMor(GlobMor),
    Seq(SeqSpec),
    SeqMor(SeqMor),
    Sym(SymSpec),
    Free(FreeSym),
    SymMor(SymMor),
    Cover(CoverData),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Int(_) => "integer",
            Value::Str(_) => "string",
            Value::Dims(_) => "dimension vector",
            Value::Bool(_) => "boolean",
            Value::SSet(_) => "simplicial set",
            Value::Map(_) => "simplicial map",
            Value::Ret(_) => "retractive space",
            Value::RetMap(_) => "retractive map",
            Value::Glob(_) => "global object",
            Value::GlobMor(_) => "global morphism",
            Value::Seq(_) => "sequential spectrum",
            Value::SeqMor(_) => "map of sequential spectra",
            Value::Sym(_) | Value::Free(_) => "symmetric spectrum",
            Value::SymMor(_) => "map of symmetric spectra",
            Value::Cover(_) => "cover",
        }
    }

    fn describe(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Str(s) => format!("{s:?}"),
            Value::Dims(d) => dims_text(d),
            Value::Bool(b) => b.to_string(),
            Value::SSet(x) => format!("sset dims {}", dims_text(&x.census())),
            Value::Ret(y) => format!("retspace dims {}", dims_text(&y.total().census())),
            other => other.kind().to_string(),
        }
    }

    fn digest_into(&self, h: &mut Fnv64) {
        match self {
            Value::Int(n) => h.write_u64(*n as u64),
            Value::Str(s) => h.write(s.as_bytes()),
            Value::Dims(d) => d.iter().for_each(|&v| h.write_u64(v as u64)),
            Value::Bool(b) => h.write_u64(*b as u64),
            Value::SSet(x) => h.write_sset(x),
            Value::Ret(y) => {
                h.write_sset(y.base());
                h.write_sset(y.total());
            }
            other => h.write(other.kind().as_bytes()),
        }
    }
}

fn dims_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// What went wrong while evaluating a statement.
enum Failure {
    /// The script itself is wrong: exit code 2.
    Script(String),
    /// A library operation refused: a failed claim.
    Library(String),
}

impl From<exspace_core::Error> for Failure {
    fn from(e: exspace_core::Error) -> Self {
        Failure::Library(e.to_string())
    }
}

type Eval<T> = Result<T, Failure>;

fn type_err<T>(op: &str, i: usize, want: &str, got: &Value) -> Eval<T> {
    Err(Failure::Script(format!("{op}: argument {} should be a {want}, got a {}", i + 1, got.kind())))
}

struct Args<'a> {
    op: &'a str,
    vals: Vec<Value>,
}

impl Args<'_> {
    fn len(&self) -> usize {
        self.vals.len()
    }

    fn usize(&self, i: usize) -> Eval<usize> {
        match &self.vals[i] {
            Value::Int(n) if *n >= 0 => Ok(*n as usize),
            v => type_err(self.op, i, "nonnegative integer", v),
        }
    }

    fn str(&self, i: usize) -> Eval<&str> {
        match &self.vals[i] {
            Value::Str(s) => Ok(s),
            v => type_err(self.op, i, "string", v),
        }
    }

    fn sset(&self, i: usize) -> Eval<Arc<FinSSet>> {
        match &self.vals[i] {
            Value::SSet(x) => Ok(x.clone()),
            v => type_err(self.op, i, "simplicial set", v),
        }
    }

    fn map(&self, i: usize) -> Eval<SMap> {
        match &self.vals[i] {
            Value::Map(f) => Ok(f.clone()),
            v => type_err(self.op, i, "simplicial map", v),
        }
    }

    fn ret(&self, i: usize) -> Eval<RetSpace> {
        match &self.vals[i] {
            Value::Ret(y) => Ok(y.clone()),
            Value::Glob(a) => Ok(a.space().clone()),
            v => type_err(self.op, i, "retractive space", v),
        }
    }

    fn glob(&self, i: usize) -> Eval<GlobObj> {
        match &self.vals[i] {
            Value::Glob(a) => Ok(a.clone()),
            Value::Ret(y) => Ok(GlobObj::new(y.clone())),
            v => type_err(self.op, i, "global object", v),
        }
    }

    fn free(&self, i: usize) -> Eval<FreeSym> {
        match &self.vals[i] {
            Value::Free(f) => Ok(f.clone()),
            v => type_err(self.op, i, "free symmetric spectrum", v),
        }
    }

    fn sym(&self, i: usize) -> Eval<SymSpec> {
        match &self.vals[i] {
            Value::Sym(a) => Ok(a.clone()),
            Value::Free(f) => Ok(f.spec().clone()),
            v => type_err(self.op, i, "symmetric spectrum", v),
        }
    }

    fn pairing(&self, i: usize) -> Eval<Pairing> {
        match self.str(i)? {
            "fibrewise" => Ok(Pairing::Fibrewise),
            "external" => Ok(Pairing::External),
            other => Err(Failure::Script(format!("{}: pairing should be \"fibrewise\" or \"external\", got {other:?}", self.op))),
        }
    }

    fn field(&self, i: usize) -> Eval<Field> {
        match self.vals.get(i) {
            None => Ok(Field::Rational),
            Some(Value::Int(0)) => Ok(Field::Rational),
            Some(Value::Int(p)) if *p > 0 => Field::prime(*p as u32).map_err(Failure::from),
            Some(v) => type_err(self.op, i, "field characteristic", v),
        }
    }
}

struct Env<'a> {
    names: Vec<(String, Value)>,
    dir: Option<&'a Path>,
    opts: &'a Options,
}

impl Env<'_> {
    fn lookup(&self, n: &str) -> Value {
        self.names.iter().rev().find(|b| b.0 == n).expect("names are checked at parse time").1.clone()
    }

    fn resolve(&self, p: &str) -> PathBuf {
        let path = Path::new(p);
        if path.is_absolute() {
            return path.to_path_buf();
        }
        if let Some(d) = self.dir {
            let q = d.join(path);
            if q.exists() {
                return q;
            }
        }
        corpus_dir().join(path)
    }

    fn eval(&self, e: &Expr) -> Eval<Value> {
        match e {
            Expr::Int(n) => Ok(Value::Int(*n)),
            Expr::Str(s) => Ok(Value::Str(s.clone())),
            Expr::Tuple(xs) => {
                if xs.iter().any(|&x| x < 0) {
                    return Err(Failure::Script("dimension vectors are nonnegative".into()));
                }
                Ok(Value::Dims(xs.iter().map(|&x| x as usize).collect()))
            }
            Expr::Name(n) => Ok(self.lookup(n)),
            Expr::Call(op, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Eval<Vec<_>>>()?;
                self.call(&Args { op, vals })
            }
        }
    }

    fn call(&self, a: &Args<'_>) -> Eval<Value> {
        use Value as V;
        let v = match a.op {
            "load" => {
                let path = self.resolve(a.str(0)?);
                let text = std::fs::read_to_string(&path).map_err(|e| Failure::Script(format!("load {}: {e}", path.display())))?;
                let o = parse_object(&text).map_err(|e| Failure::Script(format!("load {}: {e}", path.display())))?;
                match o {
                    Object::SSet(x) => V::SSet(x),
                    Object::SMap(f) => V::Map(f),
                    Object::Ret(y) => V::Ret(y),
                    Object::GlobObj(g) => V::Glob(g),
                    Object::GlobMor(m) => V::GlobMor(m),
                    Object::Seq(s) => V::Seq(s),
                    Object::Sym(s) => V::Sym(s),
                    Object::Cover(c) => V::Cover(c),
                }
            }
            "point" => V::SSet(Arc::new(point())),
            "simplex" => V::SSet(Arc::new(standard(a.usize(0)?))),
            "boundary" => V::SSet(Arc::new(boundary(a.usize(0)?))),
            "horn" => V::SSet(Arc::new(horn(a.usize(0)?, a.usize(1)?)?)),
            "circle" => V::SSet(Arc::new(circle())),
            "sphere" => V::SSet(Arc::new(sphere(a.usize(0)?))),
            "product" => V::SSet(product(&a.sset(0)?, &a.sset(1)?)?.object().clone()),
            "census" => match &a.vals[0] {
                V::SSet(x) => V::Dims(x.census()),
                V::Ret(y) => V::Dims(y.total().census()),
                v => return type_err(a.op, 0, "simplicial set", v),
            },
            "card" => match &a.vals[0] {
                V::SSet(x) => V::Int(x.total_count() as i64),
                V::Ret(y) => V::Int(y.total().total_count() as i64),
                v => return type_err(a.op, 0, "simplicial set", v),
            },
            "hom_count" => match (&a.vals[0], &a.vals[1]) {
                (V::SSet(x), V::SSet(y)) => V::Int(enumerate_maps(x, y).len() as i64),
                (V::Seq(x), V::Seq(y)) => V::Int(x.hom_count(y)? as i64),
                (V::Sym(_) | V::Free(_), _) => V::Int(a.sym(0)?.hom_count(&a.sym(1)?)? as i64),
                _ => V::Int(a.ret(0)?.hom_count(&a.ret(1)?)? as i64),
            },
            "boundary_inclusion" => V::Map(boundary_inclusion(a.usize(0)?)),
            "horn_inclusion" => V::Map(horn_inclusion(a.usize(0)?, a.usize(1)?)?),
            "constant" => V::Map(SMap::constant(&a.sset(0)?, &a.sset(1)?, NdId::new(0, a.usize(2)?))?),
            "identity" => match &a.vals[0] {
                V::SSet(x) => V::Map(SMap::identity(x)),
                V::Ret(y) => V::RetMap(RetMap::identity(y)),
                v => return type_err(a.op, 0, "simplicial set or retractive space", v),
            },
            "unit" => V::Ret(RetSpace::unit(&a.sset(0)?)),
            "zero" => V::Ret(RetSpace::zero(&a.sset(0)?)),
            "point_plus" => V::Ret(point_plus(&a.sset(0)?, NdId::new(0, a.usize(1)?))?),
            "sphere0" => V::Ret(sphere0()),
            "sphere1" => V::Ret(sphere1()),
            "pull_pointed" => V::Ret(PullbackRet::of_pointed(&a.sset(0)?, &a.ret(1)?)?.space().clone()),
            "total" => V::SSet(a.ret(0)?.total().clone()),
            "base" => match &a.vals[0] {
                V::Seq(s) => V::SSet(s.base().clone()),
                V::Sym(_) | V::Free(_) => V::SSet(a.sym(0)?.base().clone()),
                _ => V::SSet(a.ret(0)?.base().clone()),
            },
            "smash" => V::Ret(SmashProduct::pair(&a.ret(0)?, &a.ret(1)?)?.space().clone()),
            "tensor" => V::Ret(SmashProduct::tensor(&a.ret(0)?, &a.ret(1)?)?.space().clone()),
            "push" => V::Ret(Pushforward::new(&a.map(0)?, &a.ret(1)?)?.space().clone()),
            "pull" => V::Ret(PullbackRet::new(&a.map(0)?, &a.ret(1)?)?.space().clone()),
            "glob" => V::Glob(a.glob(0)?),
            "ext_smash" => V::Glob(ExtSmash::new(&a.glob(0)?, &a.glob(1)?)?.object().clone()),
            "space" => V::Ret(a.ret(0)?),
            "diag_compare" => V::RetMap(diag_compare(&a.ret(0)?, &a.ret(1)?)?.0),
            "ext_to_fib" => V::RetMap(ext_to_fib_compare(&a.glob(0)?, &a.glob(1)?)?.0),
            "free_seq" => V::Seq(free_seq(a.usize(0)?, &a.ret(1)?, a.usize(2)?)?),
            "free_sym" => V::Free(free_sym(a.usize(0)?, &a.ret(1)?, a.usize(2)?)?),
            "sphere_sym" => V::Sym(sphere_sym(&a.sset(0)?, a.usize(1)?)?.spec().clone()),
            "level" => {
                let n = a.usize(1)?;
                let (trunc, level) = match &a.vals[0] {
                    V::Seq(s) => (s.trunc(), (n <= s.trunc()).then(|| s.level(n).clone())),
                    V::Sym(_) | V::Free(_) => {
                        let s = a.sym(0)?;
                        (s.trunc(), (n <= s.trunc()).then(|| s.level(n).clone()))
                    }
                    v => return type_err(a.op, 0, "spectrum", v),
                };
                V::Ret(level.ok_or_else(|| Failure::Library(format!("level {n} above the truncation {trunc}")))?)
            }
            "zeta" => V::SeqMor(zeta(a.usize(0)?, &a.ret(1)?, a.usize(2)?)?),
            "trivial_bundle" => {
                let (x, n) = (a.sset(0)?, a.usize(1)?);
                let free = free_seq(0, &RetSpace::unit(&x), n)?;
                let (sph, pulled) = pulled_sphere(&x, n)?;
                V::SeqMor(trivial_bundle_compare(&free, &sph, &pulled)?)
            }
            "xi" => V::SymMor(xi(a.usize(0)?, &a.ret(1)?, a.usize(2)?)?.mor),
            "smash_sym" => {
                let (p, x, y) = (a.pairing(0)?, a.sym(1)?, a.sym(2)?);
                let sm = match p {
                    Pairing::Fibrewise => fib_smash_sym(&x, &y)?,
                    Pairing::External => ext_smash_sym(&x, &y)?,
                };
                V::Sym(sm.spec().clone())
            }
            "free_smash" => {
                let (p, fy, fz) = (a.pairing(0)?, a.free(1)?, a.free(2)?);
                let sm = match p {
                    Pairing::Fibrewise => fib_smash_sym(fy.spec(), fz.spec())?,
                    Pairing::External => ext_smash_sym(fy.spec(), fz.spec())?,
                };
                let pair = PairedGen::new(p, fy.generator(), fz.generator())?;
                let target = free_sym(fy.k() + fz.k(), pair.space(), sm.spec().trunc())?;
                V::SymMor(free_smash_compare(&sm, &fy, &fz, &pair, &target)?)
            }
            "homology" => {
                let f = a.field(1)?;
                match &a.vals[0] {
                    V::SSet(x) => V::Dims(homology(x, f)),
                    V::Ret(y) => V::Dims(homology(y.total(), f)),
                    v => return type_err(a.op, 0, "simplicial set", v),
                }
            }
            "reduced_homology" => V::Dims(rel_quotient_homology(&a.ret(0)?, a.field(1)?)),
            "cech" => match &a.vals[0] {
                V::Cover(c) => V::SSet(Arc::new(with_cover(c, cech_nerve)?)),
                v => return type_err(a.op, 0, "cover", v),
            },
            "rlp" => V::Bool(rlp(&a.map(0)?, &a.map(1)?).pass),
            "fibration" => {
                let p = a.map(0)?;
                let cap = if a.len() > 1 { a.usize(1)? } else { self.opts.horn_cap.unwrap_or_else(|| default_horn_cap(&p)) };
                V::Bool(fibration_check(&p, cap).pass)
            }
            "pushout_product" => V::Map(pushout_product(&a.map(0)?, &a.map(1)?)?.corner),
            "is_mono" => match &a.vals[0] {
                V::Map(f) => V::Bool(f.is_mono()),
                V::RetMap(f) => V::Bool(f.map().is_mono()),
                V::GlobMor(m) => V::Bool(m.is_mono()),
                v => return type_err(a.op, 0, "map", v),
            },
            "koszul" => {
                let x = a.sset(0)?;
                let samples = if a.len() > 1 { a.usize(1)? } else { self.opts.samples };
                let seed = self.opts.seed;
                let g = loop_group(&x)?;
                let reports = [
                    check_identities(&g, "G", samples, 3, seed),
                    check_homomorphisms(&g, "G", samples, 3, seed),
                    check_identities(&wbar(&g), "WbarG", samples, 3, seed),
                    check_identities(&w_total(&g), "WG", samples, 3, seed),
                    check_identities(&path_fib(&x)?, "P", samples, 3, seed),
                ];
                V::Bool(reports.iter().all(|r| r.passed()))
            }
            other => unreachable!("operation {other} passed the parse-time check"),
        };
        Ok(v)
    }

    fn assert(&self, head: &str, args: &[Expr]) -> Eval<(bool, String)> {
        let vals = args.iter().map(|a| self.eval(a)).collect::<Eval<Vec<_>>>()?;
        match head {
            "assert_iso" if vals.len() == 1 => {
                let iso = match &vals[0] {
                    Value::Map(f) => f.is_isomorphism(),
                    Value::RetMap(f) => f.is_isomorphism(),
                    Value::GlobMor(m) => m.is_isomorphism(),
                    Value::SeqMor(m) => m.is_isomorphism(),
                    Value::SymMor(m) => m.is_isomorphism(),
                    v => return type_err(head, 0, "map", v),
                };
                let levels = match &vals[0] {
                    Value::SeqMor(m) => format!(" levels iso={:?}", m.iso_levels()),
                    Value::SymMor(m) => format!(" levels iso={:?}", m.iso_levels()),
                    _ => String::new(),
                };
                Ok((iso, format!("{}{levels}", if iso { "iso" } else { "not iso" })))
            }
            "assert_iso" => {
                let found = match (&vals[0], &vals[1]) {
                    (Value::SSet(x), Value::SSet(y)) => x.census() == y.census() && enumerate_maps(x, y).iter().any(|f| f.is_isomorphism()),
                    (Value::Ret(y), Value::Ret(z)) => y.total().census() == z.total().census() && y.homs(z)?.iter().any(|f| f.is_isomorphism()),
                    (Value::SSet(_), v) | (Value::Ret(_), v) => return type_err(head, 1, vals[0].kind(), v),
                    (v, _) => return type_err(head, 0, "simplicial set or retractive space", v),
                };
                Ok((found, if found { "isomorphism found".into() } else { "no isomorphism".into() }))
            }
            "assert_card" => {
                let want = match &vals[1] {
                    Value::Int(n) => *n,
                    v => return type_err(head, 1, "integer", v),
                };
                let got = match &vals[0] {
                    Value::Int(n) => *n,
                    Value::SSet(x) => x.total_count() as i64,
                    Value::Ret(y) => y.total().total_count() as i64,
                    Value::Dims(d) => d.iter().sum::<usize>() as i64,
                    v => return type_err(head, 0, "integer or simplicial set", v),
                };
                Ok((got == want, format!("got {got}")))
            }
            "assert_dims" => {
                let want = match &vals[1] {
                    Value::Dims(d) => normalise_dims(d),
                    v => return type_err(head, 1, "dimension vector", v),
                };
                let got = match &vals[0] {
                    Value::Dims(d) => normalise_dims(d),
                    Value::SSet(x) => x.census(),
                    Value::Ret(y) => y.total().census(),
                    v => return type_err(head, 0, "dimension vector or simplicial set", v),
                };
                Ok((got == want, format!("got {}", dims_text(&got))))
            }
            "assert_true" | "assert_false" => match &vals[0] {
                Value::Bool(b) => Ok((*b == (head == "assert_true"), format!("got {b}"))),
                v => type_err(head, 0, "boolean", v),
            },
            _ => unreachable!("assertions are checked at parse time"),
        }
    }
}

#[derive(Debug)]
pub struct ScriptReport {
    pub verdicts: Vec<Verdict>,
    /// Commentary lines for bindings, in order.
    pub bindings: Vec<String>,
}

impl ScriptReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.pass)
    }

    pub fn render(&self, seed: u64) -> String {
        let mut out = format!("# seed={seed}\n");
        for b in &self.bindings {
            out.push_str(&format!("# {b}\n"));
        }
        for v in &self.verdicts {
            out.push_str(&v.tsv());
            out.push('\n');
        }
        let failed = self.verdicts.iter().filter(|v| !v.pass).count();
        out.push_str(&format!("# {} assertions, {} passed, {} failed\n", self.verdicts.len(), self.verdicts.len() - failed, failed));
        if let Some(f) = self.first_failure() {
            out.push_str(&format!("FAIL {}\n", f.claim));
        }
        out
    }
}

/// Parses and evaluates a script. `dir` is searched first for `load`
/// paths, then the corpus directory. Evaluation stops at the first
/// binding whose operation fails, which is reported as a failed claim.
pub fn run_script(text: &str, dir: Option<&Path>, opts: &Options) -> Result<ScriptReport, ParseError> {
    let lines = parse(text)?;
    let mut env = Env {
        names: Vec::new(),
        dir,
        opts,
    };
    let mut report = ScriptReport {
        verdicts: Vec::new(),
        bindings: Vec::new(),
    };
    for l in &lines {
        let claim = format!("line {}: {}", l.number, l.text);
        let mut h = Fnv64::new();
        h.write(l.text.as_bytes());
        h.write_u64(opts.seed);
        match &l.stmt {
            Stmt::Let(name, e) => match env.eval(e) {
                Ok(v) => {
                    report.bindings.push(format!("{name} = {}", v.describe()));
                    env.names.push((name.clone(), v));
                }
                Err(Failure::Script(m)) => return Err(err(l.number, m)),
                Err(Failure::Library(m)) => {
                    report.verdicts.push(Verdict::new(claim, h.finish(), false, format!("error: {m}")));
                    return Ok(report);
                }
            },
            Stmt::Assert(head, args) => {
                for a in args {
                    if let Ok(v) = env.eval(a) {
                        v.digest_into(&mut h);
                    }
                }
                match env.assert(head, args) {
                    Ok((pass, w)) => report.verdicts.push(Verdict::new(claim, h.finish(), pass, w)),
                    Err(Failure::Script(m)) => return Err(err(l.number, m)),
                    Err(Failure::Library(m)) => report.verdicts.push(Verdict::new(claim, h.finish(), false, format!("error: {m}"))),
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Result<ScriptReport, ParseError> {
        run_script(text, None, &Options::default())
    }

    #[test]
    fn circle_homology() {
        let r = run("let c = circle()\nlet h = homology(c)\nassert_dims(h, (1,1))\nassert_dims(homology(c, 2), (1,1))\n").unwrap();
        assert!(r.passed(), "{}", r.render(0));
        assert_eq!(r.verdicts.len(), 2);
        assert_eq!(r.verdicts[0].claim, "line 3: assert_dims(h, (1,1))");
    }

    #[test]
    fn wrong_dims_fail() {
        let r = run("let h = homology(circle())\nassert_dims(h, (1,0))").unwrap();
        assert!(!r.passed());
        let text = r.render(0);
        assert!(text.contains("\tFAIL\tgot (1,1)"), "{text}");
        assert!(text.ends_with("FAIL line 2: assert_dims(h, (1,0))\n"));
    }

    #[test]
    fn free_smash_script() {
        let text = "\
let x = simplex(1)
let y = point_plus(x, 0)
let z = unit(x)
let fy = free_sym(1, y, 2)
let fz = free_sym(1, z, 2)
let m = free_smash(\"fibrewise\", fy, fz)
assert_iso(m)
";
        let r = run(text).unwrap();
        assert!(r.passed(), "{}", r.render(0));
    }

    #[test]
    fn other_assertions() {
        let text = "\
let d = simplex(2)
assert_card(d, 7)
assert_card(hom_count(simplex(1), d), 6)
assert_dims(d, (3,3,1))
assert_iso(product(circle(), simplex(1)), product(simplex(1), circle()))
assert_false(rlp(boundary_inclusion(1), constant(simplex(1), point(), 0)))
assert_true(fibration(identity(d)))
assert_iso(zeta(0, unit(simplex(1)), 2))
";
        let r = run(text).unwrap();
        // ζ at k = 0 is not an isomorphism at level 0
        assert_eq!(r.verdicts.iter().filter(|v| !v.pass).count(), 1, "{}", r.render(0));
        assert!(!r.verdicts[6].pass);
    }

    #[test]
    fn script_errors() {
        let cases = [
            ("let x = circle(\n", 1),
            ("let x = circle()\nlet x = point()\n", 2),
            ("let x = y\n", 1),
            ("let x = frobnicate()\n", 1),
            ("let x = circle(1)\n", 1),
            ("\n\nassert_dims(circle(), 1)\n", 3),
            ("let x = simplex(\"two\")\n", 1),
            ("print x\n", 1),
            ("let circle = point()\n", 1),
            ("let x = load(\"no_such_file.sset\")\n", 1),
        ];
        for (text, line) in cases {
            let e = run(text).err().unwrap_or_else(|| panic!("{text:?} should not parse"));
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn library_errors_are_failures() {
        let r = run("let h = horn(1, 3)\nassert_true(rlp(boundary_inclusion(0), identity(point())))\n").unwrap();
        assert_eq!(r.verdicts.len(), 1);
        assert!(r.verdicts[0].witness.starts_with("error: "));
    }

    proptest::proptest! {
        #[test]
        fn simplex_census_in_scripts(n in 0usize..6, seed in 0u64..1000) {
            // nondegenerate k-simplices of Δ^n: C(n+1, k+1)
            let want: Vec<String> = (0..=n).map(|k| crate::suites::binomial(n + 1, k + 1).to_string()).collect();
            let text = format!("let d = simplex({n})\nassert_dims(census(d), ({}))\nassert_card(d, {})\n", want.join(","), (1usize << (n + 1)) - 1);
            let r = run_script(&text, None, &Options { seed, ..Options::default() }).unwrap();
            proptest::prop_assert!(r.passed(), "{}", r.render(seed));
            let header = format!("# seed={seed}\n");
            proptest::prop_assert!(r.render(seed).starts_with(&header));
        }
    }

    #[test]
    fn comments_and_strings() {
        assert_eq!(strip_comment("let x = load(\"a#b\") # c"), "let x = load(\"a#b\") ");
    }
}
