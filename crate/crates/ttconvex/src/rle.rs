//! Run-length-compressed reduced sequences over a signed alphabet.
//!
//! This is the shared backbone of free group words and graph edge paths.
//! A symbol is a `u32` index with two orientations; a run of equal letters
//! is stored as one block `(sym, exp)` where the sign of `exp` carries the
//! orientation. Pushing onto the right end performs free reduction
//! (cancellation of adjacent inverse pairs) incrementally, which is the
//! deterministic leftmost-first cancellation order used everywhere.

use std::fmt;

/// One oriented symbol. `sym` is the 0-based symbol index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(sym: u32, positive: bool) -> Letter {
        let v = sym as i32 + 1;
        Letter(if positive { v } else { -v })
    }

    pub fn sym(self) -> u32 {
        (self.0.abs() - 1) as u32
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Total order used for canonical forms: by symbol, positive before inverse.
    pub fn canon_key(self) -> (u32, bool) {
        (self.sym(), !self.is_positive())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "{}", self.sym())
        } else {
            write!(f, "{}'", self.sym())
        }
    }
}

/// A maximal run `sym^exp` with `exp != 0`; negative exponents are runs of
/// the inverse letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Block {
    pub sym: u32,
    pub exp: i64,
}

impl Block {
    pub fn letter(self) -> Letter {
        Letter::new(self.sym, self.exp > 0)
    }

    pub fn count(self) -> u64 {
        self.exp.unsigned_abs()
    }
}

/// A freely reduced sequence in RLE form. Invariants: no block has `exp == 0`
/// and adjacent blocks have distinct symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RleWord {
    blocks: Vec<Block>,
    len: u64,
}

impl RleWord {
    pub fn new() -> RleWord {
        RleWord::default()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> RleWord {
        let mut w = RleWord::new();
        for l in letters {
            w.push_letter(l);
        }
        w
    }

    pub fn single(sym: u32, exp: i64) -> RleWord {
        let mut w = RleWord::new();
        w.push_run(sym, exp);
        w
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn first(&self) -> Option<Letter> {
        self.blocks.first().map(|b| b.letter())
    }

    pub fn last(&self) -> Option<Letter> {
        self.blocks.last().map(|b| b.letter())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat(b.letter()).take(b.count() as usize))
    }

    pub fn to_letters(&self) -> Vec<Letter> {
        self.letters().collect()
    }

    pub fn letter_at(&self, mut pos: u64) -> Option<Letter> {
        for b in &self.blocks {
            if pos < b.count() {
                return Some(b.letter());
            }
            pos -= b.count();
        }
        None
    }

    pub fn push_letter(&mut self, l: Letter) {
        self.push_run(l.sym(), if l.is_positive() { 1 } else { -1 });
    }

    /// Reducing push of a run. Cancellation with the current tail is resolved
    /// here, so sequentially pushing the blocks of any raw sequence yields its
    /// free reduction.
    pub fn push_run(&mut self, sym: u32, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(top) = self.blocks.last_mut() {
            if top.sym == sym {
                let old = top.exp;
                let merged = old + exp;
                self.len = self.len - old.unsigned_abs() + merged.unsigned_abs();
                if merged == 0 {
                    self.blocks.pop();
                } else {
                    top.exp = merged;
                }
                return;
            }
        }
        self.blocks.push(Block { sym, exp });
        self.len += exp.unsigned_abs();
    }

    pub fn push_word(&mut self, other: &RleWord) {
        for b in &other.blocks {
            self.push_run(b.sym, b.exp);
        }
    }

    pub fn push_word_inverted(&mut self, other: &RleWord) {
        for b in other.blocks.iter().rev() {
            self.push_run(b.sym, -b.exp);
        }
    }

    /// Reduced concatenation `self . other`.
    pub fn concat(&self, other: &RleWord) -> RleWord {
        let mut w = self.clone();
        w.push_word(other);
        w
    }

    pub fn inverse(&self) -> RleWord {
        let blocks: Vec<Block> = self
            .blocks
            .iter()
            .rev()
            .map(|b| Block {
                sym: b.sym,
                exp: -b.exp,
            })
            .collect();
        RleWord {
            blocks,
            len: self.len,
        }
    }

    /// Reduced power `self^e` (by repeated reducing pushes).
    pub fn pow(&self, e: i64) -> RleWord {
        let mut w = RleWord::new();
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                w.push_word(self);
            } else {
                w.push_word_inverted(self);
            }
        }
        w
    }

    /// Splits into (prefix, suffix) at a letter position `0 <= pos <= len`.
    pub fn split_at_letter(&self, pos: u64) -> (RleWord, RleWord) {
        assert!(pos <= self.len, "split position out of range");
        let mut head = RleWord::new();
        let mut tail = RleWord::new();
        let mut remaining = pos;
        for b in &self.blocks {
            let c = b.count();
            if remaining >= c {
                head.push_run(b.sym, b.exp);
                remaining -= c;
            } else if remaining > 0 {
                let sign = if b.exp > 0 { 1 } else { -1 };
                head.push_run(b.sym, sign * remaining as i64);
                tail.push_run(b.sym, sign * (c - remaining) as i64);
                remaining = 0;
            } else {
                tail.push_run(b.sym, b.exp);
            }
        }
        (head, tail)
    }

    /// The letters in `[start, end)` as a reduced word (they already are).
    pub fn slice(&self, start: u64, end: u64) -> RleWord {
        assert!(start <= end && end <= self.len);
        self.split_at_letter(end).0.split_at_letter(start).1
    }

    /// Strips matching conjugating ends: returns `(core, conj)` with
    /// `self = conj . core . conj^-1` and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (RleWord, RleWord) {
        let mut core = self.clone();
        let mut conj = RleWord::new();
        loop {
            if core.blocks.len() < 2 {
                break;
            }
            let first = core.blocks[0];
            let last = *core.blocks.last().unwrap();
            if first.sym != last.sym || first.exp.signum() == last.exp.signum() {
                break;
            }
            let strip = first.count().min(last.count()) as i64;
            let sign = first.exp.signum();
            conj.push_run(first.sym, sign * strip);
            // remove strip letters from each end
            let n = core.len;
            core = core.slice(strip as u64, n - strip as u64);
        }
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.blocks.first(), self.blocks.last()) {
            (Some(f), Some(l)) => {
                self.blocks.len() == 1 || f.sym != l.sym || f.exp.signum() == l.exp.signum()
            }
            _ => true,
        }
    }

    /// Canonical representative of the rotation class of a cyclically reduced
    /// word. Runs split by the wrap-around are first merged so the block list
    /// is intrinsic to the cycle, then the least block rotation is chosen.
    pub fn canonical_rotation(&self) -> RleWord {
        assert!(self.is_cyclically_reduced(), "word is not cyclically reduced");
        if self.blocks.len() < 2 {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        // merge a run split across the wrap
        let first = blocks[0];
        let last = *blocks.last().unwrap();
        if first.sym == last.sym && first.exp.signum() == last.exp.signum() {
            blocks[0] = Block {
                sym: first.sym,
                exp: first.exp + last.exp,
            };
            blocks.pop();
        }
        if blocks.len() == 1 {
            return RleWord {
                blocks,
                len: self.len,
            };
        }
        let start = least_rotation(&blocks);
        let rotated: Vec<Block> = blocks[start..]
            .iter()
            .chain(blocks[..start].iter())
            .copied()
            .collect();
        RleWord {
            blocks: rotated,
            len: self.len,
        }
    }
}

impl fmt::Debug for RleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", b.sym, b.exp)?;
        }
        write!(f, "]")
    }
}

/// Booth's least-rotation algorithm over an arbitrary ordered alphabet.
fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let at = |i: usize| &s[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}
