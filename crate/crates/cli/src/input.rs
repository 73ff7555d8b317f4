//! Session files: a ring declaration followed by named ideals and modules.
//!
//! ```text
//! ring p=32003 vars=x,y,z;
//! ideal I = x^2, x*y, z^2;
//! module M = [[x, y], [z, 0]];   # cokernel of the listed relation vectors
//! module F = free 2;
//! ```

use std::fmt;

use lindefect::field::{is_prime, Field};
use lindefect::parse::parse_polynomial_at;
use lindefect::{Error, FreeModule, Module, Polynomial, Ring, Submodule};
use std::sync::Arc;

/// Coefficient field of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix("p=").unwrap_or(s);
        let p: u64 = digits.parse().map_err(|_| format!("invalid field `{s}`"))?;
        if !is_prime(p) || p >= 1 << 31 {
            return Err(format!("modulus {p} is not a prime below 2^31"));
        }
        Ok(FieldSpec::Prime(p as u32))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "p={p}"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

/// Source text of one polynomial with its position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyText {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectDef {
    Ideal(Vec<PolyText>),
    /// Cokernel of the relation vectors in a free module of rank `rank`.
    Module { rank: usize, relations: Vec<Vec<PolyText>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionInput {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub objects: Vec<(String, ObjectDef)>,
}

impl SessionInput {
    pub fn object(&self, name: &str) -> Option<&ObjectDef> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { chars: src.chars().collect(), pos: 0, line: 1, column: 1, _src: src }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.chars.get(self.pos).copied()
    }

    fn here(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        match self.peek() {
            Some(d) if d == c => {
                self.bump();
                Ok(())
            }
            Some(d) => Err(err(self.line, self.column, format!("expected `{c}`, found `{d}`"))),
            None => Err(err(self.line, self.column, format!("expected `{c}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<String, Error> {
        self.skip_trivia();
        let (line, column) = self.here();
        let mut out = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() || out.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            return Err(err(line, column, "expected a name"));
        }
        Ok(out)
    }

    fn number(&mut self) -> Result<u64, Error> {
        self.skip_trivia();
        let (line, column) = self.here();
        let mut out = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        out.parse().map_err(|_| err(line, column, "expected a number"))
    }

    /// Raw polynomial text up to a top-level `,`, `;` or `]`.
    fn poly_text(&mut self) -> Result<PolyText, Error> {
        self.skip_trivia();
        let (line, column) = self.here();
        let mut text = String::new();
        let mut depth = 0usize;
        while let Some(&c) = self.chars.get(self.pos) {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ';' | ']' if depth == 0 => break,
                '#' => break,
                _ => {}
            }
            text.push(c);
            self.bump();
        }
        let text = text.trim_end().to_string();
        if text.is_empty() {
            return Err(err(line, column, "expected a polynomial"));
        }
        Ok(PolyText { text, line, column })
    }
}

/// Parse a session file.  Polynomials are checked against the ring here, so
/// unknown variables and malformed expressions are reported with positions.
pub fn parse_input(src: &str) -> Result<SessionInput, Error> {
    let mut sc = Scanner::new(src);
    let mut field = None;
    let mut vars: Vec<String> = Vec::new();
    let mut objects: Vec<(String, ObjectDef)> = Vec::new();
    while sc.peek().is_some() {
        let (line, column) = sc.here();
        let keyword = sc.ident()?;
        match keyword.as_str() {
            "ring" => {
                if field.is_some() {
                    return Err(err(line, column, "the ring is declared twice"));
                }
                let (fl, fc) = sc.here();
                let first = sc.ident()?;
                let spec = if first == "QQ" {
                    FieldSpec::Rationals
                } else if first == "p" {
                    sc.expect('=')?;
                    let p = sc.number()?;
                    FieldSpec::parse(&p.to_string()).map_err(|m| err(fl, fc, m))?
                } else {
                    return Err(err(fl, fc, "expected `p=<prime>` or `QQ`"));
                };
                let kw = sc.ident()?;
                if kw != "vars" {
                    return Err(err(sc.line, sc.column, "expected `vars=`"));
                }
                sc.expect('=')?;
                loop {
                    let (vl, vc) = sc.here();
                    let v = sc.ident()?;
                    if vars.contains(&v) {
                        return Err(err(vl, vc, format!("duplicate variable `{v}`")));
                    }
                    vars.push(v);
                    if sc.peek() == Some(',') {
                        sc.bump();
                    } else {
                        break;
                    }
                }
                sc.expect(';')?;
                field = Some(spec);
            }
            "ideal" | "module" => {
                if field.is_none() {
                    return Err(err(line, column, format!("{keyword} declared before the ring")));
                }
                let (nl, nc) = sc.here();
                let name = sc.ident()?;
                if objects.iter().any(|(n, _)| *n == name) {
                    return Err(err(nl, nc, format!("`{name}` is defined twice")));
                }
                sc.expect('=')?;
                let def = if keyword == "ideal" {
                    let mut gens = vec![sc.poly_text()?];
                    while sc.peek() == Some(',') {
                        sc.bump();
                        gens.push(sc.poly_text()?);
                    }
                    ObjectDef::Ideal(gens)
                } else {
                    parse_module_body(&mut sc)?
                };
                check_polys(&def, field.expect("ring declared"), &vars)?;
                sc.expect(';')?;
                objects.push((name, def));
            }
            other => return Err(err(line, column, format!("unknown statement `{other}`"))),
        }
    }
    let field = field.ok_or_else(|| err(1, 1, "missing ring declaration"))?;
    Ok(SessionInput { field, vars, objects })
}

fn parse_module_body(sc: &mut Scanner<'_>) -> Result<ObjectDef, Error> {
    if sc.peek() != Some('[') {
        let (l, c) = sc.here();
        let kw = sc.ident()?;
        if kw != "free" {
            return Err(err(l, c, "expected `[` or `free`"));
        }
        let rank = sc.number()? as usize;
        return Ok(ObjectDef::Module { rank, relations: Vec::new() });
    }
    sc.expect('[')?;
    let mut relations = Vec::new();
    let mut rank = None;
    if sc.peek() == Some(']') {
        sc.bump();
        return Err(err(sc.line, sc.column, "a module needs relations or `free <rank>`"));
    }
    loop {
        let (l, c) = sc.here();
        sc.expect('[')?;
        let mut row = vec![sc.poly_text()?];
        while sc.peek() == Some(',') {
            sc.bump();
            row.push(sc.poly_text()?);
        }
        sc.expect(']')?;
        match rank {
            None => rank = Some(row.len()),
            Some(r) if r != row.len() => {
                return Err(err(l, c, format!("relation has {} entries, expected {r}", row.len())))
            }
            _ => {}
        }
        relations.push(row);
        if sc.peek() == Some(',') {
            sc.bump();
        } else {
            break;
        }
    }
    sc.expect(']')?;
    Ok(ObjectDef::Module { rank: rank.unwrap_or(0), relations })
}

fn check_polys(def: &ObjectDef, field: FieldSpec, vars: &[String]) -> Result<(), Error> {
    // syntax and variable names do not depend on the characteristic
    let _ = field;
    let ring = Ring::polynomial(lindefect::Rationals, vars)?;
    let texts: Vec<&PolyText> = match def {
        ObjectDef::Ideal(g) => g.iter().collect(),
        ObjectDef::Module { relations, .. } => relations.iter().flatten().collect(),
    };
    for t in texts {
        parse_polynomial_at(&ring, &t.text, t.line, t.column)?;
    }
    Ok(())
}

/// A session with its polynomials interpreted over a concrete field.
pub struct Session<F: Field> {
    pub ring: Arc<Ring<F>>,
    pub input: SessionInput,
}

impl<F: Field> Session<F> {
    pub fn new(input: SessionInput, field: F) -> Result<Self, Error> {
        let ring = Ring::polynomial(field, &input.vars)?;
        Ok(Session { ring, input })
    }

    fn poly(&self, t: &PolyText) -> Result<Polynomial<F>, Error> {
        parse_polynomial_at(&self.ring, &t.text, t.line, t.column)
    }

    pub fn ideal(&self, name: &str) -> Result<Submodule<F>, Error> {
        match self.input.object(name) {
            Some(ObjectDef::Ideal(gens)) => {
                let polys: Vec<_> = gens.iter().map(|g| self.poly(g)).collect::<Result<_, _>>()?;
                Submodule::ideal(self.ring.clone(), &polys)
            }
            Some(_) => Err(Error::InvalidArgument(format!("`{name}` is a module, not an ideal"))),
            None => Err(Error::InvalidArgument(format!("no ideal named `{name}`"))),
        }
    }

    /// The named module; an ideal `I` is read as the module `I` itself.
    pub fn module(&self, name: &str) -> Result<Module<F>, Error> {
        match self.input.object(name) {
            Some(ObjectDef::Ideal(_)) => Module::from_submodule(&self.ideal(name)?),
            Some(ObjectDef::Module { rank, relations }) => {
                let free = FreeModule::free(*rank);
                let order = free.default_order(&self.ring);
                let rels = relations
                    .iter()
                    .map(|row| {
                        let polys: Vec<_> = row.iter().map(|p| self.poly(p)).collect::<Result<_, _>>()?;
                        Ok(self.ring.element_from_polys(&polys, &order))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                let sub = Submodule::new(self.ring.clone(), free, rels)?;
                if !sub.is_homogeneous() {
                    return Err(Error::Inhomogeneous(format!("relations of `{name}`")));
                }
                Ok(Module::cokernel(sub))
            }
            None => Err(Error::InvalidArgument(format!("no module named `{name}`"))),
        }
    }

    /// Canonical text: generators printed in normal form and sorted.
    pub fn canonical(&self) -> Result<String, Error> {
        let mut out = format!("ring {} vars={};\n", self.input.field, self.input.vars.join(","));
        for (name, def) in &self.input.objects {
            match def {
                ObjectDef::Ideal(gens) => {
                    let mut g: Vec<String> =
                        gens.iter().map(|p| Ok(self.ring.format(&self.poly(p)?))).collect::<Result<_, Error>>()?;
                    g.sort();
                    out.push_str(&format!("ideal {name} = {};\n", g.join(", ")));
                }
                ObjectDef::Module { rank, relations } if relations.is_empty() => {
                    out.push_str(&format!("module {name} = free {rank};\n"));
                }
                ObjectDef::Module { relations, .. } => {
                    let mut rows: Vec<String> = relations
                        .iter()
                        .map(|row| {
                            let entries: Vec<String> =
                                row.iter().map(|p| Ok(self.ring.format(&self.poly(p)?))).collect::<Result<_, Error>>()?;
                            Ok(format!("[{}]", entries.join(", ")))
                        })
                        .collect::<Result<_, Error>>()?;
                    rows.sort();
                    out.push_str(&format!("module {name} = [{}];\n", rows.join(", ")));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lindefect::PrimeField;

    #[test]
    fn reads_ring_and_ideal() {
        let s = parse_input("ring p=32003 vars=x,y,z; ideal I = x^2, x*y, z^2;").unwrap();
        assert_eq!(s.field, FieldSpec::Prime(32003));
        match s.object("I") {
            Some(ObjectDef::Ideal(g)) => assert_eq!(g.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parenthesized_generators_keep_their_commas_apart() {
        let s = parse_input("ring QQ vars=x,y,z;\nideal F = x*(y^3-z^3), y*(x^3-z^3), z*(x^3-y^3);").unwrap();
        assert_eq!(s.field, FieldSpec::Rationals);
        match s.object("F") {
            Some(ObjectDef::Ideal(g)) => {
                assert_eq!(g.len(), 3);
                assert_eq!((g[1].line, g[1].column), (2, 24));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dangling_operator_is_a_syntax_error() {
        match parse_input("ring QQ vars=x,y;\nideal I = x^2 +") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert!(matches!(parse_input("ring p=32004 vars=x;"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_variable_is_reported() {
        assert!(matches!(parse_input("ring QQ vars=x;\nideal I = x*q;"), Err(Error::Parse { line: 2, column: 13, .. })));
    }

    #[test]
    fn modules_and_canonical_round_trip() {
        let src = "ring p=7 vars=x,y;\n# a comment\nmodule M = [[x, y], [y2, 0]];\nmodule F = free 2;\nideal I = y, x;";
        let s = Session::new(parse_input(src).unwrap(), PrimeField::new(7).unwrap()).unwrap();
        let canon = s.canonical().unwrap();
        let again = Session::new(parse_input(&canon).unwrap(), PrimeField::new(7).unwrap()).unwrap();
        assert_eq!(again.canonical().unwrap(), canon);
        assert_eq!(s.module("M").unwrap().free_module().rank(), 2);
        assert!(s.ideal("M").is_err());
    }
}
