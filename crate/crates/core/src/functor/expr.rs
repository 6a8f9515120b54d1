//! Functor expressions:
//!
//! ```text
//! expr := Identity | Cokernel | Kernel | DefectOfHoms | HomR | Hom | Tensor
//!       | Ext(q) | Tor(q)
//!       | LDerived(q, expr [, slot]) | RDerived(q, expr [, slot])
//!       | Compose(expr, slot, expr)
//! ```

use super::{catalogue, compose_functors, left_derived, right_derived_cofunctor, Functor};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in functor expression {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a functor name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let n = rest[..len].parse().map_err(|_| self.err("expected a number"))?;
        self.pos += len;
        Ok(n)
    }

    fn expr(&mut self) -> Result<Functor> {
        let name = self.ident()?;
        let f = match name {
            "Identity" => catalogue::identity_functor(),
            "Cokernel" => catalogue::cokernel_functor(),
            "Kernel" => catalogue::kernel_functor(),
            "DefectOfHoms" => catalogue::defect_functor(),
            "HomR" => catalogue::hom_r_functor(),
            "Hom" => catalogue::hom_functor(),
            "Tensor" => catalogue::tensor_functor(),
            "Ext" | "Tor" => {
                self.expect('(')?;
                let q = self.number()?;
                self.expect(')')?;
                if name == "Ext" {
                    catalogue::ext(q)
                } else {
                    catalogue::tor(q)
                }
            }
            "LDerived" | "RDerived" => {
                self.expect('(')?;
                let q = self.number()?;
                self.expect(',')?;
                let inner = self.expr()?;
                let slot = if self.peek() == Some(',') {
                    self.pos += 1;
                    self.number()?
                } else {
                    0
                };
                self.expect(')')?;
                if name == "LDerived" {
                    left_derived(&inner, slot, q)?
                } else {
                    right_derived_cofunctor(&inner, slot, q)?
                }
            }
            "Compose" => {
                self.expect('(')?;
                let outer = self.expr()?;
                self.expect(',')?;
                let slot = self.number()?;
                self.expect(',')?;
                let inner = self.expr()?;
                self.expect(')')?;
                compose_functors(&outer, slot, &inner)?
            }
            other => {
                self.pos -= other.len();
                return Err(self.err(&format!("unknown functor {other:?}")));
            }
        };
        Ok(f)
    }
}

pub fn parse_functor(src: &str) -> Result<Functor> {
    let mut p = Parser { src, pos: 0 };
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}
