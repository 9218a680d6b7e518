//! Equivalence classes `[l, k]` of labeled diagrams and the groupoid action on them.
//!
//! `(l, k) ~ (l^{-r}, k + m)` when the bottom row of `l` is full and
//! `(l, k) ~ (l^{-c}, k + n)` when the first column is full. On border words
//! this is cyclic rotation: moving a leading `d` to the end shifts `k` by `-m`,
//! moving a leading `r` shifts it by `+n`. For coprime `(n, m)` every class has
//! exactly `m + n` members and the shifts `k` inside a class are pairwise distinct.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::diagrams::{Letter, Partition, RectConfig, Root, Sign, Word};
use crate::error::{Error, Result};

/// Largest accepted `|k|`.
pub const K_LIMIT: i64 = 1 << 40;

/// A pair `(l, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabeledDiagram {
    pub lambda: Partition,
    pub k: i64,
}

impl LabeledDiagram {
    pub fn new(lambda: Partition, k: i64) -> LabeledDiagram {
        LabeledDiagram { lambda, k }
    }

    /// `|l| + k`.
    pub fn degree(&self) -> i64 {
        self.lambda.size() as i64 + self.k
    }
}

impl Ord for LabeledDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, &self.lambda).cmp(&(other.k, &other.lambda))
    }
}

impl PartialOrd for LabeledDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.k)
    }
}

/// An equivalence class, stored as its members in rotation order starting
/// from the canonical member (smallest `k`, ties broken by the word with `d < r`).
///
/// Equality, hashing and ordering only look at the canonical member.
#[derive(Debug, Clone)]
pub struct EquivClass {
    members: Vec<LabeledDiagram>,
}

impl EquivClass {
    pub fn canonical(&self) -> &LabeledDiagram {
        &self.members[0]
    }

    pub fn members(&self) -> &[LabeledDiagram] {
        &self.members
    }

    pub fn degree(&self) -> i64 {
        self.canonical().degree()
    }

    pub fn contains(&self, s: &LabeledDiagram) -> bool {
        self.members.contains(s)
    }
}

impl PartialEq for EquivClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for EquivClass {}

impl Hash for EquivClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state)
    }
}

impl Ord for EquivClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical().cmp(other.canonical())
    }
}

impl PartialOrd for EquivClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        write!(f, "[{}, {}]", c.lambda, c.k)
    }
}

impl Serialize for EquivClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical().serialize(s)
    }
}

/// One step of the word rotation: the first letter moves to the end and `k`
/// shifts by `-m` for `d` or `+n` for `r`.
pub fn rotate_once(rect: &RectConfig, w: &Word, k: i64) -> (Word, i64) {
    let shift = match w.letters().first() {
        Some(Letter::D) => -(rect.m() as i64),
        Some(Letter::R) => rect.n() as i64,
        None => 0,
    };
    (w.rotate_left(), k + shift)
}

/// `k_i = k_0 + n * #r - m * #d` over the first `i` letters of `w`.
pub fn closed_form_shift(rect: &RectConfig, w: &Word, k0: i64, i: usize) -> i64 {
    let prefix = &w.letters()[..i];
    let rs = prefix.iter().filter(|&&l| l == Letter::R).count() as i64;
    let ds = prefix.len() as i64 - rs;
    k0 + rect.n() as i64 * rs - rect.m() as i64 * ds
}

/// A decomposition `k = i*n + j*m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub i: i64,
    pub j: i64,
}

impl Decomposition {
    /// `(i + t*m, j - t*n)`, which decomposes the same `k`.
    pub fn shifted(self, rect: &RectConfig, t: i64) -> Decomposition {
        Decomposition { i: self.i + t * rect.m() as i64, j: self.j - t * rect.n() as i64 }
    }

    pub fn value(self, rect: &RectConfig) -> i64 {
        self.i * rect.n() as i64 + self.j * rect.m() as i64
    }
}

/// The unique `k = i*n + j*m` with `0 <= i < m`.
pub fn decompose(rect: &RectConfig, k: i64) -> Result<Decomposition> {
    rect.require_coprime()?;
    check_k(k)?;
    let (n, m) = (rect.n() as i64, rect.m() as i64);
    // n * inv = 1 (mod m)
    let inv = n.extended_gcd(&m).x;
    let i = (k.rem_euclid(m) * inv.rem_euclid(m)).rem_euclid(m);
    let j = (k - i * n) / m;
    Ok(Decomposition { i, j })
}

pub fn check_k(k: i64) -> Result<()> {
    if k.abs() > K_LIMIT {
        Err(Error::KOutOfRange { k })
    } else {
        Ok(())
    }
}

/// A member of a class together with the root the morphism acts by on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub member: LabeledDiagram,
    pub decomposition: Decomposition,
    /// `eta^i nu^j` applied to the morphism's root.
    pub transported: Root,
}

/// The set of classes `[X x Z]` for a coprime rectangle.
#[derive(Debug, Clone, Copy)]
pub struct ClassSpace {
    rect: RectConfig,
    shift: i64,
}

impl ClassSpace {
    pub fn new(rect: RectConfig) -> Result<ClassSpace> {
        rect.require_coprime()?;
        Ok(ClassSpace { rect, shift: 0 })
    }

    /// Uses the decomposition `(i + t*m, j - t*n)` instead of the canonical one.
    /// Results must not depend on `t`.
    pub fn with_decomposition_shift(self, t: i64) -> ClassSpace {
        ClassSpace { shift: t, ..self }
    }

    pub fn rect(&self) -> &RectConfig {
        &self.rect
    }

    pub fn decompose(&self, k: i64) -> Result<Decomposition> {
        Ok(decompose(&self.rect, k)?.shifted(&self.rect, self.shift))
    }

    /// All `m + n` members of the class of `s`.
    pub fn enumerate_class(&self, s: &LabeledDiagram) -> Result<EquivClass> {
        self.rect.check(&s.lambda)?;
        check_k(s.k)?;
        let len = self.rect.n() + self.rect.m();
        let mut orbit = Vec::with_capacity(len);
        let mut w = self.rect.to_word(&s.lambda);
        let mut k = s.k;
        for _ in 0..len {
            orbit.push((k, w.clone()));
            (w, k) = rotate_once(&self.rect, &w, k);
        }
        let start = (0..len).min_by(|&a, &b| orbit[a].cmp(&orbit[b])).expect("non-empty class");
        orbit.rotate_left(start);
        let members = orbit
            .into_iter()
            .map(|(k, w)| {
                let lambda = self.rect.from_word(&w).expect("rotation keeps letter counts");
                LabeledDiagram { lambda, k }
            })
            .collect();
        Ok(EquivClass { members })
    }

    pub fn class(&self, parts: &[usize], k: i64) -> Result<EquivClass> {
        let lambda = self.rect.partition(parts)?;
        self.enumerate_class(&LabeledDiagram { lambda, k })
    }

    /// Every member `(l, k)` of `c` with `l` in the domain of `t_b`, where
    /// `b = eta^i nu^j a` for the decomposition of `k`.
    pub fn witnesses(&self, c: &EquivClass, root: Root) -> Result<Vec<Witness>> {
        self.rect.check_root(root)?;
        let mut out = Vec::new();
        for s in c.members() {
            let d = self.decompose(s.k)?;
            let beta = self.rect.transport(root, d.i, d.j);
            if self.rect.in_domain(&s.lambda, beta) {
                out.push(Witness { member: s.clone(), decomposition: d, transported: beta });
            }
        }
        Ok(out)
    }

    /// First witness in rotation order, if the class is in the domain of `root`.
    pub fn class_domain(&self, c: &EquivClass, root: Root) -> Result<Option<Witness>> {
        Ok(self.witnesses(c, root)?.into_iter().next())
    }

    /// Applies the morphism through a particular witness.
    pub fn apply_via(&self, w: &Witness) -> Result<EquivClass> {
        let lambda = self.rect.apply_t(&w.member.lambda, w.transported)?;
        self.enumerate_class(&LabeledDiagram { lambda, k: w.member.k })
    }

    /// `T_a [l, k]`.
    pub fn apply_morphism(&self, c: &EquivClass, root: Root) -> Result<EquivClass> {
        match self.class_domain(c, root)? {
            Some(w) => self.apply_via(&w),
            None => Err(Error::NotInDomain { root: root.to_string() }),
        }
    }

    /// All defined morphisms out of `c`, in root order.
    pub fn moves(&self, c: &EquivClass) -> Vec<(Root, EquivClass)> {
        self.moves_with_sign(c, None)
    }

    fn moves_with_sign(&self, c: &EquivClass, sign: Option<Sign>) -> Vec<(Root, EquivClass)> {
        self.rect
            .signed_roots()
            .filter(|r| sign.is_none_or(|s| r.sign == s))
            .filter_map(|r| {
                let w = self.class_domain(c, r).ok().flatten()?;
                Some((r, self.apply_via(&w).ok()?))
            })
            .collect()
    }

    /// Every class of degree `d`, sorted.
    pub fn classes_of_degree(&self, d: i64) -> Result<Vec<EquivClass>> {
        let mut set = BTreeSet::new();
        for lambda in self.rect.all_partitions() {
            let k = d - lambda.size() as i64;
            set.insert(self.enumerate_class(&LabeledDiagram { lambda, k })?);
        }
        Ok(set.into_iter().collect())
    }

    /// Searches for a chain of positive morphisms from `from` to `to`.
    ///
    /// Breadth-first over positive moves; every move raises the degree by one
    /// so the search stops at the degree of `to`. `cap` bounds the number of
    /// visited classes.
    pub fn poset_leq(&self, from: &EquivClass, to: &EquivClass, cap: usize) -> Result<Vec<Root>> {
        if from == to {
            return Ok(Vec::new());
        }
        let target_degree = to.degree();
        if from.degree() >= target_degree {
            return Err(Error::NotComparable);
        }
        let mut parent: BTreeMap<EquivClass, Option<(EquivClass, Root)>> = BTreeMap::new();
        parent.insert(from.clone(), None);
        let mut frontier = vec![from.clone()];
        while !frontier.is_empty() && frontier[0].degree() < target_degree {
            let mut next = BTreeSet::new();
            for c in &frontier {
                for (r, d) in self.moves_with_sign(c, Some(Sign::Plus)) {
                    if parent.contains_key(&d) {
                        continue;
                    }
                    if parent.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    parent.insert(d.clone(), Some((c.clone(), r)));
                    if &d == to {
                        return Ok(trace_chain(&parent, to));
                    }
                    next.insert(d);
                }
            }
            frontier = next.into_iter().collect();
        }
        Err(Error::NotComparable)
    }

    /// The class `[empty, K*m*n]` above `[l, i*n + j*m]`, with `K = k0 + k1 + 1`
    /// for the least `k0, k1` such that `i <= k0*m` and `j <= k1*n`.
    pub fn archimedean_bound(&self, c: &EquivClass) -> Result<EquivClass> {
        let s = c.canonical();
        let d = self.decompose(s.k)?;
        let (n, m) = (self.rect.n() as i64, self.rect.m() as i64);
        let k0 = Integer::div_ceil(&d.i, &m);
        let k1 = Integer::div_ceil(&d.j, &n);
        let big_k = k0 + k1 + 1;
        self.enumerate_class(&LabeledDiagram::new(self.rect.empty(), big_k * m * n))
    }
}

fn trace_chain(parent: &BTreeMap<EquivClass, Option<(EquivClass, Root)>>, to: &EquivClass) -> Vec<Root> {
    let mut chain = Vec::new();
    let mut cur = to;
    while let Some(Some((prev, r))) = parent.get(cur) {
        chain.push(*r);
        cur = prev;
    }
    chain.reverse();
    chain
}
