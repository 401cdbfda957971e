//! Recursive-descent parser for the descriptor grammar.
//!
//! ```text
//! ring   := "zmod" INT | "product(" ring {"," ring} ")" | "polyquot(" INT "," ints ")"
//!         | "quot(" ring "," lits ")" | "trivext(" ring "," module ")"
//! module := "regular(" ring ")" | "cyclic(" ring "," lits ")" | "dsum(" module {"," module} ")"
//!         | "sub(" module "," lits ")" | "quotmod(" module "," lits ")" | "zabelian(" ints ")"
//!         | "overquot(" module "," lits ")" | "prodmod(" module "," module ")"
//! lit    := INT | "(" lit {"," lit} ")"
//! ```

use std::str::FromStr;

use crate::descriptor::{Descriptor, ElemLit, ModuleDescriptor, RingDescriptor};
use crate::error::{Error, Result};

const RING_WORDS: [&str; 5] = ["zmod", "product", "polyquot", "quot", "trivext"];
const MODULE_WORDS: [&str; 8] = [
    "regular", "cyclic", "dsum", "sub", "quotmod", "zabelian", "overquot", "prodmod",
];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn error(&self, expected: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Syntax {
            line,
            column,
            expected: expected.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("`{c}`")))
        }
    }

    fn word(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return None;
        }
        let w = &self.rest()[..len];
        self.pos += len;
        Some(w)
    }

    fn peek_word(&mut self) -> Option<&'a str> {
        let save = self.pos;
        let w = self.word();
        self.pos = save;
        w
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("integer"));
        }
        let v = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("integer below 2^64"))?;
        self.pos += len;
        Ok(v)
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(']') {
                return Ok(out);
            }
            if !self.eat(',') {
                return Err(self.error("`,` or `]`"));
            }
        }
    }

    fn lit(&mut self) -> Result<ElemLit> {
        if self.eat('(') {
            let mut parts = vec![self.lit()?];
            while self.eat(',') {
                parts.push(self.lit()?);
            }
            self.expect(')')?;
            Ok(ElemLit::Tuple(parts))
        } else {
            self.int().map(ElemLit::Int).map_err(|_| self.error("element literal"))
        }
    }

    fn lits(&mut self) -> Result<Vec<ElemLit>> {
        self.list(Self::lit)
    }

    fn descriptor(&mut self) -> Result<Descriptor> {
        match self.peek_word() {
            Some(w) if RING_WORDS.contains(&w) => self.ring().map(Descriptor::Ring),
            Some(w) if MODULE_WORDS.contains(&w) => self.module().map(Descriptor::Module),
            _ => Err(self.error("ring or module descriptor")),
        }
    }

    fn ring(&mut self) -> Result<RingDescriptor> {
        let start = self.pos;
        let w = self.word();
        let d = match w {
            Some("zmod") => RingDescriptor::ZmodN(self.int()?),
            Some("product") => {
                self.expect('(')?;
                let mut parts = vec![self.ring()?];
                while self.eat(',') {
                    parts.push(self.ring()?);
                }
                self.expect(')')?;
                RingDescriptor::Product(parts)
            }
            Some("polyquot") => {
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let coeffs = self.list(Self::int)?;
                self.expect(')')?;
                RingDescriptor::PolyQuot { p, coeffs }
            }
            Some("quot") => {
                self.expect('(')?;
                let base = self.ring()?;
                self.expect(',')?;
                let generators = self.lits()?;
                self.expect(')')?;
                RingDescriptor::quotient(base, generators)
            }
            Some("trivext") => {
                self.expect('(')?;
                let base = self.ring()?;
                self.expect(',')?;
                let module = self.module()?;
                self.expect(')')?;
                RingDescriptor::trivext(base, module)
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return Err(self.error("ring descriptor"));
            }
        };
        Ok(d)
    }

    fn module_with_lits(&mut self, make: fn(ModuleDescriptor, Vec<ElemLit>) -> ModuleDescriptor) -> Result<ModuleDescriptor> {
        self.expect('(')?;
        let m = self.module()?;
        self.expect(',')?;
        let gens = self.lits()?;
        self.expect(')')?;
        Ok(make(m, gens))
    }

    fn module(&mut self) -> Result<ModuleDescriptor> {
        let start = self.pos;
        let d = match self.word() {
            Some("regular") => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(')')?;
                ModuleDescriptor::Regular(r)
            }
            Some("cyclic") => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(',')?;
                let gens = self.lits()?;
                self.expect(')')?;
                ModuleDescriptor::cyclic(r, gens)
            }
            Some("dsum") => {
                self.expect('(')?;
                let mut parts = vec![self.module()?];
                while self.eat(',') {
                    parts.push(self.module()?);
                }
                self.expect(')')?;
                ModuleDescriptor::DirectSum(parts)
            }
            Some("sub") => self.module_with_lits(ModuleDescriptor::sub)?,
            Some("quotmod") => self.module_with_lits(ModuleDescriptor::quotmod)?,
            Some("overquot") => self.module_with_lits(ModuleDescriptor::overquot)?,
            Some("zabelian") => {
                self.expect('(')?;
                let orders = self.list(Self::int)?;
                self.expect(')')?;
                ModuleDescriptor::ZAbelian(orders)
            }
            Some("prodmod") => {
                self.expect('(')?;
                let a = self.module()?;
                self.expect(',')?;
                let b = self.module()?;
                self.expect(')')?;
                ModuleDescriptor::ProductMod(Box::new(a), Box::new(b))
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return Err(self.error("module descriptor"));
            }
        };
        Ok(d)
    }

    fn finish<T>(&mut self, v: T) -> Result<T> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(v)
        } else {
            Err(self.error("end of input"))
        }
    }
}

/// Parses one ring or module descriptor.
pub fn parse_descriptor(text: &str) -> Result<Descriptor> {
    let mut p = Parser::new(text);
    let d = p.descriptor()?;
    p.finish(d)
}

/// Parses a descriptor file: one descriptor per line; blank lines and text
/// after `#` are ignored. Syntax errors carry the file line number.
pub fn parse_descriptor_file(text: &str) -> Result<Vec<Descriptor>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match parse_descriptor(line) {
            Ok(d) => out.push(d),
            Err(Error::Syntax { column, expected, .. }) => {
                return Err(Error::Syntax {
                    line: i + 1,
                    column,
                    expected,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s)
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let d = p.ring()?;
        p.finish(d)
    }
}

impl FromStr for ModuleDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let d = p.module()?;
        p.finish(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_six() {
        assert_eq!(parse_descriptor("zmod 6").unwrap(), Descriptor::Ring(RingDescriptor::zmod(6)));
    }

    #[test]
    fn nested_trivext() {
        let d = parse_descriptor("trivext(zmod 2, dsum(cyclic(zmod 2,[0]), cyclic(zmod 2,[0])))").unwrap();
        let c = ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![ElemLit::Int(0)]);
        let expected = RingDescriptor::trivext(RingDescriptor::zmod(2), ModuleDescriptor::DirectSum(vec![c.clone(), c]));
        assert_eq!(d, Descriptor::Ring(expected));
    }

    #[test]
    fn missing_argument_position() {
        match parse_descriptor("zmod").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (1, 5)),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn tuple_literals_and_lines() {
        let d = parse_descriptor("sub(regular(product(zmod 2, zmod 4)), [(1, 2)])").unwrap();
        assert_eq!(d.to_string(), "sub(regular(product(zmod 2, zmod 4)), [(1, 2)])");
        match parse_descriptor("dsum(regular(zmod 2),\n  bogus)").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 3)),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn descriptor_file() {
        let text = "# rings\nzmod 4\n\nzabelian([2, 3])  # Z/6 as a group\n";
        let ds = parse_descriptor_file(text).unwrap();
        assert_eq!(ds.len(), 2);
        assert!(matches!(
            parse_descriptor_file("zmod 2\nzmod x").unwrap_err(),
            Error::Syntax { line: 2, column: 6, .. }
        ));
    }
}
