use std::fmt;

use crate::{Error, Result};

/// `x_{generator+1}` or its inverse. Generators are 0-based internally and
/// 1-based in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word { letters: vec![Letter::new(i, false)] }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter, cancelling against the last one if needed.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// One more than the largest generator index used (0 for the identity).
    pub fn rank_hint(&self) -> usize {
        self.letters.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `[u, v] = u v u^-1 v^-1`
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters.iter().filter(|l| l.generator == generator).map(|l| l.sign()).sum()
    }

    /// Image under the substitution `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut w = Word::identity();
        for l in &self.letters {
            let img = &images[l.generator];
            if l.inverse {
                w = w.mul(&img.inverse());
            } else {
                w = w.mul(img);
            }
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inverse { format!("x{}^-1", l.generator + 1) } else { format!("x{}", l.generator + 1) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// Parses `x1 x2^-1 [x1,x3]^2 (x2 x3)^-1`; `1` is the identity.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut p = WordParser { s: s.as_bytes(), pos: 0 };
    let w = p.product()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(w)
}

struct WordParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::parse(1, format!("{msg} at column {} in word", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn product(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        while let Some(c) = self.peek() {
            if c == b',' || c == b']' || c == b')' {
                break;
            }
            let f = self.factor()?;
            w = w.mul(&f);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = match self.peek() {
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                let i = self.number()?;
                if i < 1 {
                    return Err(self.err("generator indices start at 1"));
                }
                Word::generator(i as usize - 1)
            }
            Some(b'1') => {
                self.pos += 1;
                Word::identity()
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.product()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected ','"));
                }
                self.pos += 1;
                let v = self.product()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("expected ']'"));
                }
                self.pos += 1;
                Word::commutator(&u, &v)
            }
            Some(b'(') => {
                self.pos += 1;
                let u = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                u
            }
            _ => return Err(self.err("expected generator, '[' or '('")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            return Ok(atom.pow(e));
        }
        Ok(atom)
    }
}
