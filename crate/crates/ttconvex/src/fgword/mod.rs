//! Free group words, cyclic words, and automorphisms.
//!
//! Words live over a finite [`Alphabet`]; each generator has a formal
//! inverse written with a trailing `'` in text form. All words are kept
//! freely reduced at all times, stored run-length compressed so powers like
//! `a^k` stay cheap under iteration.

mod parse;

pub use parse::{parse_automorphism, write_automorphism};

use crate::limits::ResourceLimits;
use crate::rle::{Letter, RleWord};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum WordError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("alphabet error: {0}")]
    Alphabet(String),
    #[error("word length {len} exceeds the limit of {max} letters")]
    ResourceLimit { len: u64, max: u64 },
    #[error("iteration count {0} exceeds the limit of {1}")]
    IterationLimit(i64, u32),
    #[error("negative iteration requires a supplied inverse")]
    MissingInverse,
    #[error("supplied inverse fails on generator `{0}`")]
    BadInverse(String),
    #[error("parse error ({place}): {msg}")]
    Parse { place: String, msg: String },
}

fn parse_err(place: impl Into<String>, msg: impl Into<String>) -> WordError {
    WordError::Parse {
        place: place.into(),
        msg: msg.into(),
    }
}

/// Ordered generator names; generator `i` and its inverse are the two
/// orientations of symbol `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Alphabet, WordError> {
        if names.is_empty() {
            return Err(WordError::Alphabet("rank must be at least 1".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            let n = n.as_ref();
            if n.is_empty() {
                return Err(WordError::Alphabet("empty generator name".into()));
            }
            if n.contains(['\'', '^', '#', '['])
                || n.contains(char::is_whitespace)
                || n.contains("->")
            {
                return Err(WordError::Alphabet(format!("invalid generator name `{n}`")));
            }
            if !seen.insert(n.to_string()) {
                return Err(WordError::Alphabet(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Alphabet {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, sym: u32) -> &str {
        &self.names[sym as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn format_letter(&self, l: Letter) -> String {
        if l.is_positive() {
            self.name(l.sym()).to_string()
        } else {
            format!("{}'", self.name(l.sym()))
        }
    }

    /// Parses one whitespace-separated token: `g`, `g'`, `g^3`, `g'^2`, `g^-2`.
    pub fn parse_token(&self, token: &str) -> Result<(u32, i64), WordError> {
        let (head, exp) = match token.split_once('^') {
            Some((h, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| parse_err("token", format!("bad exponent in `{token}`")))?;
                if exp == 0 {
                    return Err(parse_err("token", format!("zero exponent in `{token}`")));
                }
                (h, exp)
            }
            None => (token, 1),
        };
        let (base, sign) = match head.strip_suffix('\'') {
            Some(b) => (b, -1i64),
            None => (head, 1i64),
        };
        let sym = self
            .lookup(base)
            .ok_or_else(|| WordError::UnknownSymbol(base.to_string()))?;
        Ok((sym, sign * exp))
    }

    /// Parses a whitespace-separated word and freely reduces it.
    pub fn parse_word(&self, text: &str) -> Result<ReducedWord, WordError> {
        let mut w = RleWord::new();
        for token in text.split_whitespace() {
            let (sym, exp) = self.parse_token(token)?;
            w.push_run(sym, exp);
        }
        Ok(ReducedWord { rle: w })
    }

    pub fn format_rle(&self, w: &RleWord) -> String {
        let mut out = String::new();
        for (i, b) in w.blocks().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let name = self.name(b.sym);
            match b.exp {
                1 => out.push_str(name),
                -1 => {
                    let _ = write!(out, "{name}'");
                }
                e if e > 0 => {
                    let _ = write!(out, "{name}^{e}");
                }
                e => {
                    let _ = write!(out, "{name}'^{}", -e);
                }
            }
        }
        out
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord {
    rle: RleWord,
}

impl ReducedWord {
    pub fn empty() -> ReducedWord {
        ReducedWord::default()
    }

    pub fn from_rle(rle: RleWord) -> ReducedWord {
        ReducedWord { rle }
    }

    /// Reduces an arbitrary letter sequence (leftmost-first cancellation).
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> ReducedWord {
        ReducedWord {
            rle: RleWord::from_letters(letters),
        }
    }

    pub fn rle(&self) -> &RleWord {
        &self.rle
    }

    pub fn len(&self) -> u64 {
        self.rle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rle.is_empty()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord {
            rle: self.rle.inverse(),
        }
    }

    /// Reduced concatenation.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        ReducedWord {
            rle: self.rle.concat(&other.rle),
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rle.letters()
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        alphabet.format_rle(&self.rle)
    }

    /// Splits off the cyclically reduced core: `self = conj . core . conj^-1`.
    pub fn cyclic_reduce(&self) -> (CyclicWord, ReducedWord) {
        let (core, conj) = self.rle.cyclic_reduce();
        (CyclicWord::from_core(core), ReducedWord { rle: conj })
    }
}

/// A conjugacy class representative: cyclically reduced, stored in a
/// canonical rotation so equality and hashing are rotation invariant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    core: RleWord,
}

impl CyclicWord {
    fn from_core(core: RleWord) -> CyclicWord {
        CyclicWord {
            core: core.canonical_rotation(),
        }
    }

    pub fn of(word: &ReducedWord) -> CyclicWord {
        word.cyclic_reduce().0
    }

    pub fn len(&self) -> u64 {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    /// The canonical rotation as a plain reduced word.
    pub fn representative(&self) -> ReducedWord {
        ReducedWord {
            rle: self.core.clone(),
        }
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        alphabet.format_rle(&self.core)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMode {
    Word,
    Cyclic,
}

/// A free group automorphism given by generator images, with an optional
/// verified inverse for negative iteration.
#[derive(Clone, Debug)]
pub struct Automorphism {
    alphabet: Alphabet,
    images: Vec<ReducedWord>,
    image_parts: Vec<(RleWord, RleWord)>,
    inverse_images: Option<Vec<ReducedWord>>,
    inverse_parts: Option<Vec<(RleWord, RleWord)>>,
    max_image_len: u64,
}

fn cyclic_parts(images: &[ReducedWord]) -> Vec<(RleWord, RleWord)> {
    images
        .iter()
        .map(|w| {
            let (core, conj) = w.rle().cyclic_reduce();
            (conj, core)
        })
        .collect()
}

impl Automorphism {
    pub fn new(
        alphabet: Alphabet,
        images: Vec<ReducedWord>,
        inverse_images: Option<Vec<ReducedWord>>,
    ) -> Result<Automorphism, WordError> {
        if images.len() != alphabet.rank() {
            return Err(WordError::Alphabet(format!(
                "expected {} generator images, got {}",
                alphabet.rank(),
                images.len()
            )));
        }
        let rank = alphabet.rank() as u32;
        let check_syms = |ws: &[ReducedWord]| -> Result<(), WordError> {
            for w in ws {
                for b in w.rle().blocks() {
                    if b.sym >= rank {
                        return Err(WordError::Alphabet("image uses out-of-range symbol".into()));
                    }
                }
            }
            Ok(())
        };
        check_syms(&images)?;
        if let Some(inv) = &inverse_images {
            if inv.len() != alphabet.rank() {
                return Err(WordError::Alphabet(
                    "inverse images must cover every generator".into(),
                ));
            }
            check_syms(inv)?;
        }
        let max_image_len = images.iter().map(|w| w.len()).max().unwrap_or(0);
        let phi = Automorphism {
            image_parts: cyclic_parts(&images),
            inverse_parts: inverse_images.as_deref().map(cyclic_parts),
            alphabet,
            images,
            inverse_images,
            max_image_len,
        };
        if phi.inverse_images.is_some() {
            phi.verify_inverse()?;
        }
        Ok(phi)
    }

    fn verify_inverse(&self) -> Result<(), WordError> {
        let limits = ResourceLimits::default();
        for sym in 0..self.rank() as u32 {
            let g = ReducedWord::from_rle(RleWord::single(sym, 1));
            let a = self.apply_inverse(&self.apply(&g, &limits)?, &limits)?;
            let b = self.apply(&self.apply_inverse(&g, &limits)?, &limits)?;
            if a != g || b != g {
                return Err(WordError::BadInverse(self.alphabet.name(sym).to_string()));
            }
        }
        Ok(())
    }

    pub fn identity(alphabet: Alphabet) -> Automorphism {
        let images: Vec<ReducedWord> = (0..alphabet.rank() as u32)
            .map(|s| ReducedWord::from_rle(RleWord::single(s, 1)))
            .collect();
        Automorphism::new(alphabet, images.clone(), Some(images)).unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn image(&self, sym: u32) -> &ReducedWord {
        &self.images[sym as usize]
    }

    pub fn images(&self) -> &[ReducedWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> Option<&[ReducedWord]> {
        self.inverse_images.as_deref()
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse_images.is_some()
    }

    /// `L = max |phi(x_i)|`.
    pub fn max_image_len(&self) -> u64 {
        self.max_image_len
    }

    /// The inverse automorphism, when inverse images were supplied.
    pub fn inverse(&self) -> Option<Automorphism> {
        let inv = self.inverse_images.clone()?;
        Some(Automorphism::new(self.alphabet.clone(), inv, Some(self.images.clone())).unwrap())
    }

    pub fn apply(&self, w: &ReducedWord, limits: &ResourceLimits) -> Result<ReducedWord, WordError> {
        apply_rle(&self.images, &self.image_parts, w.rle(), limits).map(ReducedWord::from_rle)
    }

    pub fn apply_inverse(
        &self,
        w: &ReducedWord,
        limits: &ResourceLimits,
    ) -> Result<ReducedWord, WordError> {
        let (images, parts) = match (&self.inverse_images, &self.inverse_parts) {
            (Some(i), Some(p)) => (i, p),
            _ => return Err(WordError::MissingInverse),
        };
        apply_rle(images, parts, w.rle(), limits).map(ReducedWord::from_rle)
    }

    /// `phi^k(w)`, tightened after each step; `k < 0` needs the inverse.
    pub fn iterate(
        &self,
        w: &ReducedWord,
        k: i64,
        limits: &ResourceLimits,
    ) -> Result<ReducedWord, WordError> {
        if k.unsigned_abs() > limits.max_iterations as u64 {
            return Err(WordError::IterationLimit(k, limits.max_iterations));
        }
        if k < 0 && self.inverse_images.is_none() {
            return Err(WordError::MissingInverse);
        }
        let mut cur = w.clone();
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 {
                self.apply(&cur, limits)?
            } else {
                self.apply_inverse(&cur, limits)?
            };
        }
        Ok(cur)
    }

    /// Entry `i` is `|phi^i(w)|` (word mode) or `||phi^i(w)||` (cyclic mode),
    /// for `i = 0..=n`. Cyclic mode iterates on the cyclically reduced core,
    /// which is length-equivalent and keeps conjugating junk from growing.
    pub fn orbit_lengths(
        &self,
        w: &ReducedWord,
        n: u32,
        mode: OrbitMode,
        limits: &ResourceLimits,
    ) -> Result<Vec<u64>, WordError> {
        if n > limits.max_iterations {
            return Err(WordError::IterationLimit(n as i64, limits.max_iterations));
        }
        let mut out = Vec::with_capacity(n as usize + 1);
        match mode {
            OrbitMode::Word => {
                let mut cur = w.clone();
                out.push(cur.len());
                for _ in 0..n {
                    cur = self.apply(&cur, limits)?;
                    out.push(cur.len());
                }
            }
            OrbitMode::Cyclic => {
                let mut core = w.cyclic_reduce().0.representative();
                out.push(core.len());
                for _ in 0..n {
                    core = self.apply(&core, limits)?.cyclic_reduce().0.representative();
                    out.push(core.len());
                }
            }
        }
        Ok(out)
    }

    /// Extends to rank n+1 with a fresh fixed generator. With `fresh = None` a
    /// non-colliding name is chosen automatically; an explicitly requested
    /// name that collides is an error. Returns the new map and the fresh
    /// symbol index.
    pub fn stabilize(&self, fresh: Option<&str>) -> Result<(Automorphism, u32), WordError> {
        let name = match fresh {
            Some(n) => {
                if self.alphabet.lookup(n).is_some() {
                    return Err(WordError::Alphabet(format!(
                        "fresh generator `{n}` collides with an existing one"
                    )));
                }
                n.to_string()
            }
            None => {
                let mut candidate = "a".to_string();
                let mut i = 0u32;
                while self.alphabet.lookup(&candidate).is_some() {
                    candidate = format!("a{i}");
                    i += 1;
                }
                candidate
            }
        };
        let mut names = self.alphabet.names.clone();
        names.push(name);
        let alphabet = Alphabet::new(&names)?;
        let fresh_sym = (alphabet.rank() - 1) as u32;
        let fixed = ReducedWord::from_rle(RleWord::single(fresh_sym, 1));
        let mut images = self.images.clone();
        images.push(fixed.clone());
        let inverse = self.inverse_images.clone().map(|mut inv| {
            inv.push(fixed);
            inv
        });
        Ok((Automorphism::new(alphabet, images, inverse)?, fresh_sym))
    }
}

/// Substitutes images block-wise with incremental reduction. Repeated powers
/// `g^e` use the cyclic decomposition `phi(g) = c v c^-1` so that fixed and
/// conjugate-periodic generators stay O(1) per block.
fn apply_rle(
    images: &[ReducedWord],
    parts: &[(RleWord, RleWord)],
    w: &RleWord,
    limits: &ResourceLimits,
) -> Result<RleWord, WordError> {
    let max = limits.max_word_length;
    // transient peak allowance: later blocks may cancel earlier material
    let peak = max.saturating_mul(2).saturating_add(16);
    let mut out = RleWord::new();
    for b in w.blocks() {
        let sym = b.sym as usize;
        if sym >= images.len() {
            return Err(WordError::Alphabet("symbol out of range for this map".into()));
        }
        if b.exp == 1 {
            out.push_word(images[sym].rle());
        } else if b.exp == -1 {
            out.push_word_inverted(images[sym].rle());
        } else {
            let (conj, core) = &parts[sym];
            out.push_word(conj);
            if core.blocks().len() == 1 {
                let cb = core.blocks()[0];
                let total = cb.exp.checked_mul(b.exp).ok_or(WordError::ResourceLimit {
                    len: u64::MAX,
                    max,
                })?;
                out.push_run(cb.sym, total);
            } else {
                for _ in 0..b.exp.unsigned_abs() {
                    if b.exp > 0 {
                        out.push_word(core);
                    } else {
                        out.push_word_inverted(core);
                    }
                    if out.len() > peak {
                        return Err(WordError::ResourceLimit {
                            len: out.len(),
                            max,
                        });
                    }
                }
            }
            out.push_word_inverted(conj);
        }
        if out.len() > peak {
            return Err(WordError::ResourceLimit {
                len: out.len(),
                max,
            });
        }
    }
    if out.len() > max {
        return Err(WordError::ResourceLimit {
            len: out.len(),
            max,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
