//! Dehn-twist words and their induced action on mod-2 homology.
//!
//! A twist along a curve `c` acts on homology as the transvection
//! `x -> x + (c . x) c`, an involution over GF(2) that preserves the
//! intersection pairing. Words compose right to left: the rightmost
//! letter acts first. Inverse twists `T'` induce the same transvection,
//! so they are accepted for verbatim entry of words but never change the
//! matrix.
//!
//! Grammar (ASCII, whitespace between tokens optional):
//!
//! ```text
//! word  := item+
//! item  := twist | "(" word ")" "^" integer
//! twist := ("T" | "T'") "(" name ")"
//!        | ("T" | "T'") "[" name ("+" name)* "]"
//! name  := letters, an optional prime, then digits: c3, d2, d'1, a2, e
//! ```

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Mat, Gf2Vec};
use crate::homology::{CurveClass, HomologySpace};

/// One twist letter: a curve class and whether the twist was written as an
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistLetter {
    pub curve: CurveClass,
    pub inverse: bool,
}

/// A parsed Dehn-twist word over the standard space of its genus.
#[derive(Clone, Debug)]
pub struct TwistWord {
    space: Arc<HomologySpace>,
    letters: Vec<TwistLetter>,
}

/// A pairing-preserving automorphism of the homology space.
#[derive(Clone, Debug)]
pub struct HomologyAction {
    space: Arc<HomologySpace>,
    matrix: Gf2Mat,
}

impl TwistWord {
    /// The empty word; its action is the identity.
    pub fn empty(space: Arc<HomologySpace>) -> Self {
        TwistWord { space, letters: Vec::new() }
    }

    pub fn from_letters(space: Arc<HomologySpace>, letters: Vec<TwistLetter>) -> Self {
        for letter in &letters {
            assert_eq!(letter.curve.cls.dim(), space.dim(), "letter class dimension mismatch");
        }
        TwistWord { space, letters }
    }

    pub fn space(&self) -> &Arc<HomologySpace> {
        &self.space
    }

    pub fn genus(&self) -> usize {
        self.space.genus()
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    /// Induced action: the product of the letters' transvections, with the
    /// rightmost letter applied first.
    pub fn action(&self) -> HomologyAction {
        let mut matrix = Gf2Mat::identity(self.space.dim());
        for letter in &self.letters {
            matrix = &matrix * &transvection(&self.space, &letter.curve.cls);
        }
        HomologyAction::from_parts(self.space.clone(), matrix)
    }

    /// Render back to grammar text. Class twists on unnamed sums use the
    /// bracket syntax.
    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(|letter| {
                let t = if letter.inverse { "T'" } else { "T" };
                if letter.curve.name.contains('+') {
                    format!("{t}[{}]", letter.curve.name)
                } else {
                    format!("{t}({})", letter.curve.name)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl HomologyAction {
    /// Wrap a matrix after checking that it preserves the pairing.
    pub fn new(space: Arc<HomologySpace>, matrix: Gf2Mat) -> Result<Self> {
        if !space.preserves_pairing(&matrix) {
            return Err(Error::NotSymplectic);
        }
        Ok(HomologyAction { space, matrix })
    }

    /// Internal constructor for matrices symplectic by construction.
    pub(crate) fn from_parts(space: Arc<HomologySpace>, matrix: Gf2Mat) -> Self {
        debug_assert!(space.preserves_pairing(&matrix));
        HomologyAction { space, matrix }
    }

    pub fn identity(space: Arc<HomologySpace>) -> Self {
        let matrix = Gf2Mat::identity(space.dim());
        HomologyAction { space, matrix }
    }

    pub fn space(&self) -> &Arc<HomologySpace> {
        &self.space
    }

    pub fn matrix(&self) -> &Gf2Mat {
        &self.matrix
    }

    /// Image of a class under the action.
    pub fn apply(&self, x: &Gf2Vec) -> Gf2Vec {
        self.matrix.mul_vec(x)
    }
}

/// Transvection along a class: the matrix of `x -> x + (c . x) c`.
pub fn transvection(space: &HomologySpace, c: &Gf2Vec) -> Gf2Mat {
    assert_eq!(c.dim(), space.dim(), "transvection class dimension mismatch");
    let columns: Vec<Gf2Vec> = (0..space.dim())
        .map(|j| {
            let e = space.basis_vector(j);
            if space.pair(c, &e) {
                e + *c
            } else {
                e
            }
        })
        .collect();
    Gf2Mat::from_columns(&columns)
}

/// Parse a twist word over `standard_space(genus)`.
pub fn parse_word(genus: usize, text: &str) -> Result<TwistWord> {
    let space = HomologySpace::standard(genus)?;
    let mut parser = Parser { bytes: text.as_bytes(), pos: 0, space: &space };
    let letters = parser.word(true)?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(TwistWord { space, letters })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    space: &'a Arc<HomologySpace>,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", byte as char)))
        }
    }

    /// `word := item+`, stopping at `)` when inside a group.
    fn word(&mut self, top_level: bool) -> Result<Vec<TwistLetter>> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'T') => letters.extend(self.twist()?),
                Some(b'(') => letters.extend(self.group()?),
                Some(b')') if !top_level => break,
                Some(other) => {
                    return Err(self.err(format!(
                        "expected a twist or group, found `{}`",
                        other as char
                    )))
                }
                None => break,
            }
        }
        if letters.is_empty() {
            return Err(self.err("expected at least one twist"));
        }
        Ok(letters)
    }

    /// `group := "(" word ")" "^" integer`; the letters repeat that many
    /// times.
    fn group(&mut self) -> Result<Vec<TwistLetter>> {
        self.expect(b'(')?;
        let inner = self.word(false)?;
        self.expect(b')')?;
        self.skip_ws();
        self.expect(b'^')?;
        self.skip_ws();
        let count = self.integer()?;
        let mut letters = Vec::with_capacity(inner.len() * count);
        for _ in 0..count {
            letters.extend(inner.iter().cloned());
        }
        Ok(letters)
    }

    fn twist(&mut self) -> Result<Vec<TwistLetter>> {
        self.expect(b'T')?;
        let inverse = if self.peek() == Some(b'\'') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let (name, cls) = self.name()?;
                self.expect(b')')?;
                Ok(vec![TwistLetter { curve: CurveClass::new(name, cls), inverse }])
            }
            Some(b'[') => {
                self.pos += 1;
                let (mut label, mut cls) = self.name()?;
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b'+') => {
                            self.pos += 1;
                            self.skip_ws();
                            let (name, part) = self.name()?;
                            label.push('+');
                            label.push_str(&name);
                            cls += part;
                        }
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("expected `+` or `]` in class twist")),
                    }
                }
                Ok(vec![TwistLetter { curve: CurveClass::new(label, cls), inverse }])
            }
            _ => Err(self.err("expected `(` or `[` after twist")),
        }
    }

    /// `name := letters ['] digits*`, resolved in the curve table.
    fn name(&mut self) -> Result<(String, Gf2Vec)> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a curve name"));
        }
        if self.peek() == Some(b'\'') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("name bytes are ASCII")
            .to_string();
        let cls = self.space.curve(&name)?;
        Ok((name, cls))
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a repeat count"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|_| self.err("repeat count out of range"))
    }
}
