//! Text syntax for forms: `2*H + bin(1,wp)`, `diag(1,-lambda)`, `H+bin(1,1)`.
//!
//! A form is a `+`-separated sum of terms; a term is an optional repeat count
//! `k*` followed by `H`, `diag(e, ...)` or `bin(e, e)`. An element is an
//! integer encoding, `lambda` or `wp`, optionally negated with a leading `-`.

use crate::error::{Error, Result};
use crate::gf::Field;

use super::QuadraticForm;

pub fn parse_form(field: &Field, src: &str) -> Result<QuadraticForm> {
    let mut p = Parser {
        field,
        src: src.as_bytes(),
        pos: 0,
    };
    let mut form = p.term()?;
    loop {
        p.skip_ws();
        if p.eof() {
            break;
        }
        p.expect(b'+')?;
        form = form.orth_sum(&p.term()?)?;
    }
    Ok(form)
}

struct Parser<'a> {
    field: &'a Field,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn eof(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("expected an integer"))
    }

    fn term(&mut self) -> Result<QuadraticForm> {
        let count = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.integer()?;
            self.expect(b'*')?;
            if k == 0 {
                return Err(self.error("repeat count must be positive"));
            }
            k
        } else {
            1
        };
        let atom = self.atom()?;
        let mut form = atom.clone();
        for _ in 1..count {
            form = form.orth_sum(&atom)?;
        }
        Ok(form)
    }

    fn atom(&mut self) -> Result<QuadraticForm> {
        let start = self.pos;
        match self.word() {
            "H" => Ok(QuadraticForm::hyperbolic(self.field)),
            "diag" => {
                let args = self.args()?;
                QuadraticForm::diag(self.field, &args)
            }
            "bin" => {
                let args = self.args()?;
                if args.len() != 2 {
                    return Err(self.error("bin takes two elements"));
                }
                QuadraticForm::binary(self.field, args[0], args[1])
            }
            _ => {
                self.pos = start;
                Err(self.error("expected H, diag(...) or bin(...)"))
            }
        }
    }

    fn args(&mut self) -> Result<Vec<u32>> {
        self.expect(b'(')?;
        let mut out = vec![self.element()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.element()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn element(&mut self) -> Result<u32> {
        let negate = self.peek() == Some(b'-');
        if negate {
            self.pos += 1;
        }
        let value = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.field.check(self.integer()?)?,
            _ => match self.word() {
                "lambda" => self.field.lambda(),
                "wp" => self.field.wp_witness()?,
                _ => return Err(self.error("expected an element")),
            },
        };
        Ok(if negate { self.field.neg(value) } else { value })
    }
}
