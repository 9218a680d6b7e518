//! The Sergeev-Veselov action on integer supervectors `(a_1..a_n | b_1..b_m)`.
//!
//! For `k = -p/q` the morphism of `e_i - d_j` is defined on the hyperplane
//! `a_i = b_j` and adds `q` to `a_i` and `p` to `b_j`; its inverse is defined on
//! `a_i - b_j = q - p`. Coordinates are the integral ones (`X = q x`), so no
//! rational arithmetic is needed. With `(p, q) = (m, n)` the orbit of the base
//! point `L0 = (m(n-1), .., m, 0 | 0, n, .., n(m-1))` is in bijection with the
//! classes of labeled diagrams through [`build_x_hat`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classes::{decompose, Decomposition, EquivClass, LabeledDiagram};
use crate::diagrams::{Partition, RectConfig, Root, Sign};
use crate::error::{Error, Result};

/// `L = sum a_i e_i - sum b_j d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperVector {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl SuperVector {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> SuperVector {
        SuperVector { a, b }
    }

    /// Splits a flat list of `n + m` integers into the two blocks.
    pub fn from_flat(rect: &RectConfig, flat: &[i64]) -> Result<SuperVector> {
        if flat.len() != rect.n() + rect.m() {
            return Err(Error::DimensionMismatch {
                a: flat.len().min(rect.n()),
                b: flat.len().saturating_sub(rect.n()),
                n: rect.n(),
                m: rect.m(),
            });
        }
        let (a, b) = flat.split_at(rect.n());
        Ok(SuperVector::new(a.to_vec(), b.to_vec()))
    }

    pub fn check(&self, rect: &RectConfig) -> Result<()> {
        if self.a.len() != rect.n() || self.b.len() != rect.m() {
            return Err(Error::DimensionMismatch {
                a: self.a.len(),
                b: self.b.len(),
                n: rect.n(),
                m: rect.m(),
            });
        }
        Ok(())
    }

    /// Adds `c` to every coordinate.
    pub fn translate(&self, c: i64) -> SuperVector {
        SuperVector { a: self.a.iter().map(|x| x + c).collect(), b: self.b.iter().map(|x| x + c).collect() }
    }

    pub fn max_abs(&self) -> i64 {
        self.a.iter().chain(&self.b).map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for SuperVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.a), join(&self.b))
    }
}

/// `k = ±p/q` with `p` in `[m]`, `q` in `[n]`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Kappa {
    pub p: usize,
    pub q: usize,
    pub sign: Sign,
}

impl Kappa {
    pub fn new(p: usize, q: usize, sign: Sign) -> Result<Kappa> {
        let k = Kappa { p, q, sign };
        if p == 0 || q == 0 || p.gcd(&q) != 1 {
            return Err(Error::InvalidKappa {
                text: k.to_string(),
                reason: "need positive coprime p and q".into(),
            });
        }
        Ok(k)
    }

    /// `-m/n`, the parameter of the base-point orbit.
    pub fn standard(rect: &RectConfig) -> Result<Kappa> {
        rect.require_coprime()?;
        Kappa::new(rect.m(), rect.n(), Sign::Minus)
    }

    /// Checks `p <= m` and `q <= n`.
    pub fn validate(&self, rect: &RectConfig) -> Result<()> {
        if self.p > rect.m() || self.q > rect.n() {
            return Err(Error::InvalidKappa {
                text: self.to_string(),
                reason: format!("need p in [{}] and q in [{}]", rect.m(), rect.n()),
            });
        }
        Ok(())
    }

    pub fn is_negative_special(&self) -> bool {
        self.sign == Sign::Minus
    }

    /// Shift of `b_j` under a positive morphism: `+p` for negative `k`,
    /// `-p` for positive `k`.
    pub fn b_step(&self) -> i64 {
        -self.sign.as_i64() * self.p as i64
    }

    pub fn a_step(&self) -> i64 {
        self.q as i64
    }

    /// `(L, a)` on the hyperplane of the negative morphism.
    pub fn negative_threshold(&self) -> i64 {
        self.a_step() - self.b_step()
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}/{}", self.sign, self.p, self.q)
    }
}

impl FromStr for Kappa {
    type Err = Error;

    /// Parses `+3/2`, `-3/2` (an unsigned literal is positive).
    fn from_str(s: &str) -> Result<Kappa> {
        let bad = |reason: &str| Error::InvalidKappa { text: s.into(), reason: reason.into() };
        let t = s.trim();
        let (sign, rest) = match t.as_bytes().first() {
            Some(b'-') => (Sign::Minus, &t[1..]),
            Some(b'+') => (Sign::Plus, &t[1..]),
            _ => (Sign::Plus, t),
        };
        let (p, q) = rest.split_once('/').ok_or_else(|| bad("expected ±p/q"))?;
        let p = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        Kappa::new(p, q, sign)
    }
}

/// `(L, ±(e_i - d_j)) = ±(a_i - b_j)`.
pub fn form(v: &SuperVector, r: Root) -> i64 {
    r.sign.as_i64() * (v.a[r.i - 1] - v.b[r.j - 1])
}

/// Membership in the hyperplane of the morphism `r`: `(L, a) = 0` for a
/// positive root, `(L, a) = q - p` for a negative one.
pub fn in_pi(v: &SuperVector, r: Root, kappa: &Kappa) -> bool {
    let pairing = form(v, r.positive());
    match r.sign {
        Sign::Plus => pairing == 0,
        Sign::Minus => pairing == kappa.negative_threshold(),
    }
}

pub fn apply_tau(v: &SuperVector, r: Root, kappa: &Kappa) -> Result<SuperVector> {
    if r.i == 0 || r.i > v.a.len() || r.j == 0 || r.j > v.b.len() {
        return Err(Error::InvalidRoot { label: r.to_string(), n: v.a.len(), m: v.b.len() });
    }
    if !in_pi(v, r, kappa) {
        return Err(Error::NotOnHyperplane { root: r.to_string() });
    }
    let s = r.sign.as_i64();
    let mut out = v.clone();
    out.a[r.i - 1] += s * kappa.a_step();
    out.b[r.j - 1] += s * kappa.b_step();
    Ok(out)
}

/// `eta^{eta_pow} nu^{nu_pow}`. `nu` sends entry `i` of the `a` block to
/// position `i + 1`; `eta` moves entry `j + 1` of the `b` block to position `j`.
pub fn rotate(v: &SuperVector, eta_pow: i64, nu_pow: i64) -> SuperVector {
    let n = v.a.len() as i64;
    let m = v.b.len() as i64;
    let a = (0..n).map(|i| v.a[(i - nu_pow).rem_euclid(n) as usize]).collect();
    let b = (0..m).map(|j| v.b[(j + eta_pow).rem_euclid(m) as usize]).collect();
    SuperVector { a, b }
}

pub fn rotate_nu(v: &SuperVector) -> SuperVector {
    rotate(v, 0, 1)
}

pub fn rotate_nu_inv(v: &SuperVector) -> SuperVector {
    rotate(v, 0, -1)
}

pub fn rotate_eta(v: &SuperVector) -> SuperVector {
    rotate(v, 1, 0)
}

pub fn rotate_eta_inv(v: &SuperVector) -> SuperVector {
    rotate(v, -1, 0)
}

/// `L0 = (m(n-1), .., m, 0 | 0, n, .., n(m-1))`.
pub fn base_point(rect: &RectConfig) -> SuperVector {
    let (n, m) = (rect.n() as i64, rect.m() as i64);
    SuperVector { a: (1..=n).map(|i| m * (n - i)).collect(), b: (1..=m).map(|j| n * (j - 1)).collect() }
}

/// `x(l)`: `a_i = m(n-i) + n l_{n+1-i}`, `b_j = n(j-1) + m l'_j`.
pub fn build_x(rect: &RectConfig, lambda: &Partition) -> Result<SuperVector> {
    rect.require_coprime()?;
    rect.check(lambda)?;
    Ok(x_unchecked(rect, lambda))
}

fn x_unchecked(rect: &RectConfig, lambda: &Partition) -> SuperVector {
    let (n, m) = (rect.n() as i64, rect.m() as i64);
    SuperVector {
        a: (1..=rect.n()).map(|i| m * (n - i as i64) + n * rect.boxes_in_row(lambda, i) as i64).collect(),
        b: (1..=rect.m()).map(|j| n * (j as i64 - 1) + m * rect.dual_part(lambda, j) as i64).collect(),
    }
}

/// `eta^{-i} nu^{-j} x(l) + (i n + j m)` for an arbitrary decomposition.
pub fn x_decomposed(rect: &RectConfig, lambda: &Partition, d: Decomposition) -> Result<SuperVector> {
    let x = build_x(rect, lambda)?;
    Ok(rotate(&x, -d.i, -d.j).translate(d.value(rect)))
}

/// `x_hat(l, k)` using the canonical decomposition `0 <= i < m`.
pub fn build_x_hat(rect: &RectConfig, s: &LabeledDiagram) -> Result<SuperVector> {
    let d = decompose(rect, s.k)?;
    x_decomposed(rect, &s.lambda, d)
}

pub fn class_image(rect: &RectConfig, c: &EquivClass) -> Result<SuperVector> {
    build_x_hat(rect, c.canonical())
}

/// `(sum a_i)/n - m(n-1)/2`, when integral. On the base-point orbit this equals
/// the degree `|l| + k` of the preimage class.
pub fn svdeg(rect: &RectConfig, v: &SuperVector) -> Option<i64> {
    let (n, m) = (rect.n() as i64, rect.m() as i64);
    let num = v.a.iter().sum::<i64>() - m * n * (n - 1) / 2;
    (num % n == 0).then(|| num / n)
}

/// Same functional computed from the `b` block: `(sum b_j)/m - n(m-1)/2`.
pub fn svdeg_right(rect: &RectConfig, v: &SuperVector) -> Option<i64> {
    let (n, m) = (rect.n() as i64, rect.m() as i64);
    let num = v.b.iter().sum::<i64>() - n * m * (m - 1) / 2;
    (num % m == 0).then(|| num / m)
}

/// `Some(a)` iff `lhs = rhs + a(1,..,1|1,..,1)`, which holds iff their matrices agree.
pub fn matches_up_to_translation(lhs: &SuperVector, rhs: &SuperVector) -> Option<i64> {
    if lhs.a.len() != rhs.a.len() || lhs.b.len() != rhs.b.len() {
        return None;
    }
    let mut diffs = lhs.a.iter().zip(&rhs.a).chain(lhs.b.iter().zip(&rhs.b)).map(|(x, y)| x - y);
    let first = diffs.next()?;
    diffs.all(|d| d == first).then_some(first)
}

/// The `a` entries cover every residue mod `n` and the `b` entries every residue mod `m`.
pub fn residue_check(rect: &RectConfig, v: &SuperVector) -> bool {
    fn complete(xs: &[i64], modulus: usize) -> bool {
        let mut seen = vec![false; modulus];
        for x in xs {
            seen[x.rem_euclid(modulus as i64) as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }
    complete(&v.a, rect.n()) && complete(&v.b, rect.m())
}

/// `A(L)` bordered by the `a` block on the left and the `b` block on top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugMatrix {
    pub core: Vec<Vec<i64>>,
    pub left: Vec<i64>,
    pub top: Vec<i64>,
}

impl AugMatrix {
    pub fn new(v: &SuperVector) -> AugMatrix {
        let core = v.a.iter().map(|ai| v.b.iter().map(|bj| ai - bj).collect()).collect();
        AugMatrix { core, left: v.a.clone(), top: v.b.clone() }
    }

    /// Positive roots whose entry is zero, row-major.
    pub fn zeros(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for (i, row) in self.core.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 {
                    out.push(Root::pos(i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Plain-text block layout: `b` block across the top, `a` block down the
    /// left, `A(L)` in the body. With `zeros_only` nonzero entries print as `.`.
    pub fn render(&self, zeros_only: bool) -> String {
        let cell = |x: i64| {
            if zeros_only && x != 0 {
                ".".to_string()
            } else {
                x.to_string()
            }
        };
        let width = self
            .left
            .iter()
            .chain(&self.top)
            .map(|x| x.to_string().len())
            .chain(self.core.iter().flatten().map(|&x| cell(x).len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&" ".repeat(width + 1));
        out.push_str("||");
        for t in &self.top {
            out.push_str(&format!(" {t:>width$}"));
        }
        out.push('\n');
        out.push_str(&"=".repeat(width + 3 + self.top.len() * (width + 1)));
        out.push('\n');
        for (l, row) in self.left.iter().zip(&self.core) {
            out.push_str(&format!("{l:>width$} ||"));
            for &x in row {
                out.push_str(&format!(" {:>width$}", cell(x)));
            }
            out.push('\n');
        }
        out
    }
}

/// Zeros of `A(L)` sitting at outer corners of `lambda`.
fn supported_count(rect: &RectConfig, m: &AugMatrix, lambda: &Partition) -> usize {
    rect.outer_corners(lambda).into_iter().filter(|r| m.core[r.i - 1][r.j - 1] == 0).count()
}

/// `a(L)`: the diagram under the descending path that supports the most zeros
/// of `A(L)`, taking the containment-maximal path among those.
///
/// The empty and the full diagram have the same matrix, since
/// `x(m^n) = L0 + mn`; for vectors `L0 + c` with `c >= mn` the full diagram is
/// returned.
pub fn recover_a(rect: &RectConfig, v: &SuperVector) -> Result<Partition> {
    v.check(rect)?;
    let m = AugMatrix::new(v);
    let all = rect.all_partitions();
    let counts: Vec<usize> = all.iter().map(|p| supported_count(rect, &m, p)).collect();
    let best = counts.iter().copied().max().unwrap_or(0);
    let candidates: Vec<&Partition> =
        all.iter().zip(&counts).filter(|(_, &c)| c == best).map(|(p, _)| p).collect();
    let maximal: Vec<&Partition> =
        candidates.iter().copied().filter(|p| !candidates.iter().any(|q| q != p && q.contains(p))).collect();
    let [chosen] = maximal[..] else {
        return Err(Error::AmbiguousPath { count: best });
    };
    if *chosen == rect.empty() {
        let full_shift = (rect.n() * rect.m()) as i64;
        if matches_up_to_translation(v, &base_point(rect)).is_some_and(|c| c >= full_shift) {
            return Ok(rect.full());
        }
    }
    Ok(chosen.clone())
}

/// `Z(L)`: the zeros supported by the path of [`recover_a`].
pub fn supported_zeros(rect: &RectConfig, v: &SuperVector) -> Result<Vec<Root>> {
    let lambda = recover_a(rect, v)?;
    let m = AugMatrix::new(v);
    Ok(rect.outer_corners(&lambda).into_iter().filter(|r| m.core[r.i - 1][r.j - 1] == 0).collect())
}

/// `SV^{p,q}` restricted to the roots `e_i - d_j` with `i <= rows`, `j <= cols`.
#[derive(Debug, Clone, Copy)]
pub struct SvAction {
    rect: RectConfig,
    kappa: Kappa,
    rows: usize,
    cols: usize,
}

impl SvAction {
    pub fn new(rect: RectConfig, kappa: Kappa) -> Result<SvAction> {
        kappa.validate(&rect)?;
        Ok(SvAction { rect, kappa, rows: rect.n(), cols: rect.m() })
    }

    /// The action with `k = -m/n` on the full base.
    pub fn standard(rect: RectConfig) -> Result<SvAction> {
        SvAction::new(rect, Kappa::standard(&rect)?)
    }

    /// Restricts the base to `i in [rows]`, `j in [cols]`.
    pub fn restricted(self, rows: usize, cols: usize) -> Result<SvAction> {
        if rows == 0 || cols == 0 || rows > self.rect.n() || cols > self.rect.m() {
            return Err(Error::InvalidRect { n: rows, m: cols });
        }
        Ok(SvAction { rows, cols, ..self })
    }

    pub fn rect(&self) -> &RectConfig {
        &self.rect
    }

    pub fn kappa(&self) -> &Kappa {
        &self.kappa
    }

    pub fn base(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn signed_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (1..=self.rows)
            .flat_map(move |i| (1..=self.cols).map(move |j| Root::pos(i, j)))
            .flat_map(|r| [r, r.negate()])
    }

    pub fn moves(&self, v: &SuperVector) -> Vec<(Root, SuperVector)> {
        self.signed_roots()
            .filter(|&r| in_pi(v, r, &self.kappa))
            .map(|r| (r, apply_tau(v, r, &self.kappa).expect("checked hyperplane")))
            .collect()
    }
}
