//! Young diagrams inside an `n x m` rectangle.
//!
//! Rows of the rectangle are labeled `e1..en` from the top down and columns
//! `d1..dm` from left to right. A partition `(l1 >= l2 >= ... >= ln)` sits in
//! the bottom-left corner, so row `e_i` holds `l_{n+1-i}` boxes. Callers should
//! go through [`RectConfig::boxes_in_row`] instead of re-deriving that reversal.
//!
//! Every box `e_i - d_j` of the rectangle is labeled by a positive isotropic
//! root; its negative labels the inverse morphism. Adding an outer corner
//! `t_a` and removing the inner corner `t_{-a}` are mutually inverse.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The `n x m` rectangle all diagrams live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectConfig {
    n: usize,
    m: usize,
}

/// Weakly decreasing parts, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Signed isotropic root `±(e_i - d_j)` with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

/// A step of the upper border of a diagram. `D < R` so that words sort with
/// `d` before `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    D,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RowColFlags {
    pub row_full: bool,
    pub row_empty: bool,
    pub col_full: bool,
    pub col_empty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PseudoFlags {
    /// `(m, 1^{n-1})` is contained in the diagram, so `e_n - d_1` is an outer
    /// pseudo-corner.
    pub has_outer_pseudo: bool,
    /// `l_n = l'_m = 0`, so `e_1 - d_m` is an inner pseudo-corner.
    pub is_reduced: bool,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Root {
    pub fn new(i: usize, j: usize, sign: Sign) -> Root {
        Root { i, j, sign }
    }

    pub fn pos(i: usize, j: usize) -> Root {
        Root::new(i, j, Sign::Plus)
    }

    pub fn neg(i: usize, j: usize) -> Root {
        Root::new(i, j, Sign::Minus)
    }

    pub fn negate(self) -> Root {
        Root { sign: self.sign.negate(), ..self }
    }

    /// The positive root labeling the same box.
    pub fn positive(self) -> Root {
        Root { sign: Sign::Plus, ..self }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Plus
    }

    /// The box directly above, `e_{i-1} - d_j`.
    pub fn up(self) -> Option<Root> {
        (self.i > 1).then(|| Root::new(self.i - 1, self.j, self.sign))
    }

    /// The box directly to the right, `e_i - d_{j+1}`.
    pub fn right(self, rect: &RectConfig) -> Option<Root> {
        (self.j < rect.m).then(|| Root::new(self.i, self.j + 1, self.sign))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}-d{}", self.sign, self.i, self.j)
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Parses `+e1-d2`, `-e2-d1` or the unsigned `e1-d2` (taken as positive).
    fn from_str(s: &str) -> Result<Root> {
        let bad = || Error::InvalidRoot { label: s.to_string(), n: 0, m: 0 };
        let (sign, rest) = match s.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &s[1..]),
            Some(b'-') => (Sign::Minus, &s[1..]),
            _ => (Sign::Plus, s),
        };
        let rest = rest.strip_prefix('e').ok_or_else(bad)?;
        let (i, j) = rest.split_once("-d").ok_or_else(bad)?;
        let i = i.parse().map_err(|_| bad())?;
        let j = j.parse().map_err(|_| bad())?;
        Ok(Root::new(i, j, sign))
    }
}

impl Partition {
    /// Builds a partition, checking only that parts are weakly decreasing.
    /// Use [`RectConfig::partition`] to also check that it fits the rectangle.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts, reason: "parts are not weakly decreasing".into() });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `l_k`, 1-based. Parts past the end are zero.
    pub fn part(&self, k: usize) -> usize {
        debug_assert!(k >= 1);
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..self.parts.len().max(other.parts.len())).all(|k| self.part(k + 1) >= other.part(k + 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Moves the first letter to the end.
    pub fn rotate_left(&self) -> Word {
        let mut letters = self.0.clone();
        if !letters.is_empty() {
            letters.rotate_left(1);
        }
        Word(letters)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::D => "d",
                Letter::R => "r",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'd' => Ok(Letter::D),
                'r' => Ok(Letter::R),
                _ => Err(Error::InvalidWord {
                    word: s.to_string(),
                    reason: format!("unexpected letter {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl RectConfig {
    pub fn new(n: usize, m: usize) -> Result<RectConfig> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidRect { n, m });
        }
        Ok(RectConfig { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_coprime(&self) -> bool {
        self.n.gcd(&self.m) == 1
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.is_coprime() {
            Ok(())
        } else {
            Err(Error::NonCoprimeConfig { n: self.n, m: self.m })
        }
    }

    /// Validates `parts` as a diagram inside the rectangle.
    pub fn partition(&self, parts: &[usize]) -> Result<Partition> {
        let p = Partition::new(parts.to_vec())?;
        self.check(&p)?;
        Ok(p)
    }

    pub fn check(&self, p: &Partition) -> Result<()> {
        let reason = if p.parts.len() != self.n {
            format!("expected {} parts, got {}", self.n, p.parts.len())
        } else if p.part(1) > self.m {
            format!("largest part exceeds {}", self.m)
        } else {
            return Ok(());
        };
        Err(Error::InvalidPartition { parts: p.parts.clone(), reason })
    }

    pub fn check_root(&self, r: Root) -> Result<()> {
        if (1..=self.n).contains(&r.i) && (1..=self.m).contains(&r.j) {
            Ok(())
        } else {
            Err(Error::InvalidRoot { label: r.to_string(), n: self.n, m: self.m })
        }
    }

    pub fn empty(&self) -> Partition {
        Partition { parts: vec![0; self.n] }
    }

    pub fn full(&self) -> Partition {
        Partition { parts: vec![self.m; self.n] }
    }

    /// The hook `(m, 1^{n-1})`.
    pub fn hook(&self) -> Partition {
        let mut parts = vec![1; self.n];
        parts[0] = self.m;
        Partition { parts }
    }

    /// All diagrams in the rectangle, in lexicographic order of parts.
    pub fn all_partitions(&self) -> Vec<Partition> {
        fn go(n: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for v in 0..=cap {
                prefix.push(v);
                go(n, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self.n, self.m, &mut Vec::with_capacity(self.n), &mut out);
        out
    }

    /// Positive roots `e_i - d_j`, row-major.
    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (1..=self.n).flat_map(move |i| (1..=self.m).map(move |j| Root::pos(i, j)))
    }

    /// Every positive root followed by its negative.
    pub fn signed_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots().flat_map(|r| [r, r.negate()])
    }

    /// Number of boxes in row `e_i`.
    pub fn boxes_in_row(&self, p: &Partition, i: usize) -> usize {
        p.part(self.n + 1 - i)
    }

    /// `l'_j = |{i : l_i >= j}|` for `j` in `1..=m`.
    pub fn dual(&self, p: &Partition) -> Partition {
        let parts = (1..=self.m).map(|j| p.parts.iter().filter(|&&l| l >= j).count()).collect();
        Partition { parts }
    }

    /// `l'_j`, 1-based.
    pub fn dual_part(&self, p: &Partition, j: usize) -> usize {
        p.parts.iter().filter(|&&l| l >= j).count()
    }

    /// Whether box `e_i - d_j` belongs to the diagram.
    pub fn has_box(&self, p: &Partition, r: Root) -> bool {
        self.boxes_in_row(p, r.i) >= r.j
    }

    /// Upper border traced from the top-left to the bottom-right corner.
    pub fn to_word(&self, p: &Partition) -> Word {
        let mut letters = Vec::with_capacity(self.n + self.m);
        let mut x = 0;
        for i in 1..=self.n {
            let row = self.boxes_in_row(p, i);
            letters.extend(std::iter::repeat_n(Letter::R, row - x));
            x = row;
            letters.push(Letter::D);
        }
        letters.extend(std::iter::repeat_n(Letter::R, self.m - x));
        Word(letters)
    }

    pub fn from_word(&self, w: &Word) -> Result<Partition> {
        let (rs, ds) = (w.count(Letter::R), w.count(Letter::D));
        if rs != self.m || ds != self.n {
            return Err(Error::InvalidWord {
                word: w.to_string(),
                reason: format!("expected {} r and {} d, got {rs} and {ds}", self.m, self.n),
            });
        }
        // Each `d` ends a row, top row first; its width is the number of `r` seen so far.
        let mut x = 0;
        let mut rows = Vec::with_capacity(self.n);
        for l in &w.0 {
            match l {
                Letter::R => x += 1,
                Letter::D => rows.push(x),
            }
        }
        rows.reverse();
        Ok(Partition { parts: rows })
    }

    pub fn is_outer_corner(&self, p: &Partition, r: Root) -> bool {
        let (i, j) = (r.i, r.j);
        self.boxes_in_row(p, i) + 1 == j && self.dual_part(p, j) == self.n - i
    }

    pub fn is_inner_corner(&self, p: &Partition, r: Root) -> bool {
        let (i, j) = (r.i, r.j);
        self.boxes_in_row(p, i) == j && self.dual_part(p, j) == self.n + 1 - i
    }

    /// Whether `p` lies in the domain of `t_r`: `r` positive needs an outer
    /// corner at its box, `r` negative an inner corner.
    pub fn in_domain(&self, p: &Partition, r: Root) -> bool {
        match r.sign {
            Sign::Plus => self.is_outer_corner(p, r),
            Sign::Minus => self.is_inner_corner(p, r),
        }
    }

    /// Roots `a` with `p` in `X_a` (sign `+`) or in `X_{-a}` (sign `-`).
    /// At most one candidate per row, so this is a scan of `n` boxes.
    pub fn corners(&self, p: &Partition, sign: Sign) -> Vec<Root> {
        (1..=self.n)
            .filter_map(|i| {
                let row = self.boxes_in_row(p, i);
                let j = match sign {
                    Sign::Plus => row + 1,
                    Sign::Minus => row,
                };
                let r = Root::new(i, j, sign);
                (j >= 1 && j <= self.m && self.in_domain(p, r)).then_some(r)
            })
            .collect()
    }

    pub fn outer_corners(&self, p: &Partition) -> Vec<Root> {
        self.corners(p, Sign::Plus)
    }

    pub fn inner_corners(&self, p: &Partition) -> Vec<Root> {
        self.corners(p, Sign::Minus)
    }

    /// Adds (positive root) or removes (negative root) the box of `r`.
    pub fn apply_t(&self, p: &Partition, r: Root) -> Result<Partition> {
        self.check_root(r)?;
        if !self.in_domain(p, r) {
            return Err(Error::NotACorner { parts: p.parts.clone(), root: r.to_string() });
        }
        let mut parts = p.parts.clone();
        let k = self.n - r.i;
        match r.sign {
            Sign::Plus => parts[k] += 1,
            Sign::Minus => parts[k] -= 1,
        }
        Ok(Partition { parts })
    }

    pub fn row_col_flags(&self, p: &Partition) -> RowColFlags {
        RowColFlags {
            row_full: p.part(1) == self.m,
            row_empty: p.part(self.n) == 0,
            col_full: self.dual_part(p, 1) == self.n,
            col_empty: self.dual_part(p, self.m) == 0,
        }
    }

    /// `l^{-r}`: remove the full bottom row and shift the rest down.
    pub fn drop_row(&self, p: &Partition) -> Result<Partition> {
        if !self.row_col_flags(p).row_full {
            return Err(self.violated("drop_row", "row full", p));
        }
        let mut parts = p.parts[1..].to_vec();
        parts.push(0);
        Ok(Partition { parts })
    }

    /// `l^{+r}`: inverse of [`Self::drop_row`].
    pub fn add_row(&self, p: &Partition) -> Result<Partition> {
        if !self.row_col_flags(p).row_empty {
            return Err(self.violated("add_row", "row empty", p));
        }
        let mut parts = Vec::with_capacity(self.n);
        parts.push(self.m);
        parts.extend_from_slice(&p.parts[..self.n - 1]);
        Ok(Partition { parts })
    }

    /// `l^{-c}`: delete the full first column.
    pub fn drop_col(&self, p: &Partition) -> Result<Partition> {
        if !self.row_col_flags(p).col_full {
            return Err(self.violated("drop_col", "column full", p));
        }
        Ok(Partition { parts: p.parts.iter().map(|&l| l - 1).collect() })
    }

    /// `l^{+c}`: inverse of [`Self::drop_col`].
    pub fn add_col(&self, p: &Partition) -> Result<Partition> {
        if !self.row_col_flags(p).col_empty {
            return Err(self.violated("add_col", "column empty", p));
        }
        Ok(Partition { parts: p.parts.iter().map(|&l| l + 1).collect() })
    }

    pub fn pseudo_flags(&self, p: &Partition) -> PseudoFlags {
        let f = self.row_col_flags(p);
        PseudoFlags { has_outer_pseudo: p.contains(&self.hook()), is_reduced: f.row_empty && f.col_empty }
    }

    /// `eta^{eta_pow} nu^{nu_pow}` applied to a root:
    /// `e_r - d_s` goes to `e_{r + nu_pow} - d_{s - eta_pow}`, indices cyclic.
    pub fn transport(&self, r: Root, eta_pow: i64, nu_pow: i64) -> Root {
        let i = (r.i as i64 - 1 + nu_pow).rem_euclid(self.n as i64) as usize + 1;
        let j = (r.j as i64 - 1 - eta_pow).rem_euclid(self.m as i64) as usize + 1;
        Root::new(i, j, r.sign)
    }

    fn violated(&self, op: &'static str, predicate: &'static str, p: &Partition) -> Error {
        Error::PredicateViolated { op, predicate, parts: p.parts.clone() }
    }
}
