//! Parser for the arbor text grammar
//!
//! ```text
//! node := '{' int (',' int)* '}' [ '(' node (',' node)* ')' ]
//! ```
//!
//! Whitespace is allowed anywhere except inside an integer.

use super::{Arbor, ArborError, ArborSpec};

/// Parses and validates an arbor.
pub fn parse_arbor(text: &str) -> Result<Arbor, ArborError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let spec = p.node()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("trailing input after arbor"));
    }
    Arbor::from_spec(&spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ArborError {
        ArborError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ArborError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(&format!(
                "expected '{}', found '{}'",
                byte as char, b as char
            ))),
            None => Err(self.error(&format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn node(&mut self) -> Result<ArborSpec, ArborError> {
        self.expect(b'{')?;
        if self.peek() == Some(b'}') {
            return Err(ArborError::EmptyLabelSet { pos: self.pos });
        }
        let mut labels = vec![self.label()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    labels.push(self.label()?);
                }
                Some(b'}') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected ',' or '}' in label set")),
            }
        }
        let mut children = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            children.push(self.node()?);
            loop {
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        children.push(self.node()?);
                    }
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')' in child list")),
                }
            }
        }
        Ok(ArborSpec { labels, children })
    }

    fn label(&mut self) -> Result<u32, ArborError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if digits.is_empty() || digits == "-" {
            self.pos = start;
            return Err(self.error("expected an integer label"));
        }
        let value: i64 = digits.parse().map_err(|_| ArborError::Syntax {
            pos: start,
            message: format!("label {digits} out of range"),
        })?;
        if value <= 0 {
            return Err(ArborError::NonPositiveLabel(value));
        }
        u32::try_from(value).map_err(|_| ArborError::Syntax {
            pos: start,
            message: format!("label {digits} out of range"),
        })
    }
}
