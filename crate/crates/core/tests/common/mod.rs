#![allow(dead_code)]

use std::collections::BTreeSet;

use tiso::svaction::supported_zeros;
use tiso::{build_x, form, Partition, RectConfig, Root, SuperVector};

pub const COPRIME_RECTS: [(usize, usize); 8] =
    [(2, 3), (3, 2), (2, 5), (5, 2), (3, 4), (4, 3), (3, 5), (4, 5)];

pub fn rect(n: usize, m: usize) -> RectConfig {
    RectConfig::new(n, m).unwrap()
}

fn zset(v: &[Root]) -> BTreeSet<Root> {
    v.iter().copied().collect()
}

/// Checks the comparison of zero sets along the step `lambda -> t_a(lambda)`
/// for a positive outer corner `a`. Returns a description of the first
/// violated condition.
pub fn check_zero_step(r: &RectConfig, lambda: &Partition, a: Root) -> Result<(), String> {
    let (n, m) = (r.n(), r.m());
    let (i, j) = (a.i, a.j);
    let star = r.apply_t(lambda, a).map_err(|e| e.to_string())?;
    let big = build_x(r, lambda).map_err(|e| e.to_string())?;
    let big_star = build_x(r, &star).map_err(|e| e.to_string())?;

    let z = zset(&supported_zeros(r, &big).map_err(|e| e.to_string())?);
    let z_star = zset(&supported_zeros(r, &big_star).map_err(|e| e.to_string())?);
    let c = zset(&r.outer_corners(lambda));
    let c_star = zset(&r.outer_corners(&star));

    let up = a.up();
    let right = a.right(r);
    let extra: BTreeSet<Root> = up.into_iter().chain(right).collect();
    let dual = |k: usize| r.dual_part(lambda, k);
    // row e_k holds part n+1-k
    let row = |k: usize| if (1..=n).contains(&k) { lambda.part(n + 1 - k) } else { 0 };

    for (name, before, after) in [("Z", &z, &z_star), ("z", &c, &c_star)] {
        let mut reduced = before.clone();
        reduced.remove(&a);
        if !reduced.is_subset(after) {
            return Err(format!("{name}: lost a zero at {lambda} + {a}"));
        }
        let bound: BTreeSet<Root> = reduced.union(&extra).copied().collect();
        if !after.is_subset(&bound) {
            return Err(format!("{name}: unexpected zero at {lambda} + {a}"));
        }
        if let Some(rt) = right {
            if after.contains(&rt) != (dual(j + 1) == n - i) {
                return Err(format!("{name}: right neighbour condition at {lambda} + {a}"));
            }
        }
        if let Some(u) = up {
            if after.contains(&u) != (row(i - 1) == j - 1) {
                return Err(format!("{name}: upper neighbour condition at {lambda} + {a}"));
            }
        }
    }

    // zeros of the whole row and column of a after the step
    let hook_in_star = star.part(1) == m && r.dual_part(&star, 1) == n;
    for k in 1..=m {
        let b = Root::pos(i, k);
        if k == j || form(&big_star, b) != 0 {
            continue;
        }
        let case_a = k == j + 1 && dual(j) == dual(j + 1) && Some(b) == right;
        let case_b =
            a == Root::pos(n, m) && b == Root::pos(n, 1) && dual(1) == n && dual(m) == 0 && hook_in_star;
        if !(case_a || case_b) {
            return Err(format!("row zero {b} at {lambda} + {a}"));
        }
    }
    for k in 1..=n {
        let b = Root::pos(k, j);
        if k == i || form(&big_star, b) != 0 {
            continue;
        }
        let case_a = k + 1 == i && row(i) == row(i - 1) && Some(b) == up;
        let case_b = a == Root::pos(1, 1)
            && b == Root::pos(n, 1)
            && lambda.part(1) == m
            && lambda.part(n) == 0
            && hook_in_star;
        if !(case_a || case_b) {
            return Err(format!("column zero {b} at {lambda} + {a}"));
        }
    }
    Ok(())
}

/// At most one zero in every row and column of `A(v)`.
pub fn sparse_zeros(r: &RectConfig, v: &SuperVector) -> bool {
    let rows = (0..r.n()).all(|i| (0..r.m()).filter(|&j| v.a[i] == v.b[j]).count() <= 1);
    let cols = (0..r.m()).all(|j| (0..r.n()).filter(|&i| v.a[i] == v.b[j]).count() <= 1);
    rows && cols
}
