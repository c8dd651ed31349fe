use thiserror::Error;

use super::{Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed syntax at position {0}")]
    MalformedSyntax(usize),
    #[error("zero exponent at position {0}")]
    ZeroExponent(usize),
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Lexer { src, pos: 0, base }
    }

    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn malformed(&mut self) -> WordError {
        self.skip_ws();
        WordError::MalformedSyntax(self.at())
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.malformed())
        }
    }

    fn ident(&mut self) -> Result<&'a str, WordError> {
        self.skip_ws();
        let start = self.pos;
        let b = self.bytes();
        if start < b.len() && (b[start].is_ascii_alphabetic() || b[start] == b'_') {
            self.pos += 1;
            while self.pos < b.len() && (b[self.pos].is_ascii_alphanumeric() || b[self.pos] == b'_') {
                self.pos += 1;
            }
            Ok(&self.src[start..self.pos])
        } else {
            Err(WordError::MalformedSyntax(self.at()))
        }
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        let b = self.bytes();
        if self.pos < b.len() && (b[self.pos] == b'-' || b[self.pos] == b'+') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < b.len() && b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(WordError::MalformedSyntax(self.base + digits));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| WordError::MalformedSyntax(self.base + start))
    }

    /// word := "e" | term ("*" term)*
    fn word(&mut self, names: &[String]) -> Result<Word, WordError> {
        let mut syllables = Vec::new();
        loop {
            let start = {
                self.skip_ws();
                self.at()
            };
            let name = self.ident()?;
            let idx = names.iter().position(|n| n == name);
            let mut e = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let epos = self.at();
                e = self.integer()?;
                if e == 0 {
                    return Err(WordError::ZeroExponent(epos));
                }
            }
            match idx {
                Some(i) => syllables.push((i + 1, e)),
                None if name == "e" => {}
                None => {
                    let _ = start;
                    return Err(WordError::UnknownGenerator(name.to_string()));
                }
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Word::from_syllables(syllables));
            }
        }
    }
}

/// Parses a single word over `names`, returning its free reduction.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, WordError> {
    let mut lx = Lexer::new(text, 0);
    let w = lx.word(names)?;
    if lx.peek().is_some() {
        return Err(lx.malformed());
    }
    Ok(w)
}

/// Parses a comma-separated list of words; the empty string gives no words.
pub fn parse_word_list(text: &str, names: &[String]) -> Result<Vec<Word>, WordError> {
    let mut lx = Lexer::new(text, 0);
    let mut out = Vec::new();
    if lx.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(lx.word(names)?);
        match lx.peek() {
            Some(b',') => lx.pos += 1,
            None => return Ok(out),
            Some(_) => return Err(lx.malformed()),
        }
    }
}

/// Parses `<a,b,…|w1,w2,…>`.
pub fn parse_presentation(text: &str) -> Result<Presentation, WordError> {
    let mut lx = Lexer::new(text, 0);
    lx.expect(b'<')?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let n = lx.ident()?.to_string();
        if names.contains(&n) {
            return Err(WordError::DuplicateGenerator(n));
        }
        names.push(n);
        match lx.peek() {
            Some(b',') => lx.pos += 1,
            Some(b'|') => {
                lx.pos += 1;
                break;
            }
            _ => return Err(lx.malformed()),
        }
    }
    let mut relators = Vec::new();
    if lx.peek() != Some(b'>') {
        loop {
            relators.push(lx.word(&names)?);
            match lx.peek() {
                Some(b',') => lx.pos += 1,
                Some(b'>') => break,
                _ => return Err(lx.malformed()),
            }
        }
    }
    lx.expect(b'>')?;
    if lx.peek().is_some() {
        return Err(lx.malformed());
    }
    Ok(Presentation { names, relators })
}
