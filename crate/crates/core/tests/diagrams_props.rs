mod common;

use std::collections::BTreeSet;

use common::rect;
use num_integer::binomial;
use proptest::prelude::*;
use tiso::{Partition, RectConfig, Root, Sign};

fn rect_and_partition() -> impl Strategy<Value = (RectConfig, Partition)> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0..=m, n).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let r = rect(n, m);
            let p = r.partition(&v).unwrap();
            (r, p)
        })
    })
}

/// Adds (`delta = 1`) or removes (`delta = -1`) the box in row e_i, column
/// d_j by editing the parts directly, if the result is a diagram in the box.
fn edit_box(r: &RectConfig, p: &Partition, root: Root, delta: i64) -> Option<Partition> {
    let mut parts: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
    let idx = r.n() - root.i;
    let expected = if delta > 0 { root.j as i64 - 1 } else { root.j as i64 };
    if parts[idx] != expected {
        return None;
    }
    parts[idx] += delta;
    let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&x| (0..=r.m() as i64).contains(&x));
    ok.then(|| Partition::new(parts.into_iter().map(|x| x as usize).collect()).unwrap())
}

proptest! {
    #[test]
    fn corners_match_box_editing((r, p) in rect_and_partition()) {
        for a in r.positive_roots() {
            let add = edit_box(&r, &p, a, 1);
            let remove = edit_box(&r, &p, a, -1);
            prop_assert_eq!(r.is_outer_corner(&p, a), add.is_some());
            prop_assert_eq!(r.is_inner_corner(&p, a), remove.is_some());
            prop_assert_eq!(r.in_domain(&p, a), add.is_some());
            prop_assert_eq!(r.in_domain(&p, a.negate()), remove.is_some());
            if let Some(q) = add {
                prop_assert_eq!(r.apply_t(&p, a).unwrap(), q);
            } else {
                prop_assert!(r.apply_t(&p, a).is_err());
            }
            if let Some(q) = remove {
                prop_assert_eq!(r.apply_t(&p, a.negate()).unwrap(), q);
            }
        }
    }

    #[test]
    fn steps_are_mutually_inverse((r, p) in rect_and_partition()) {
        for a in r.signed_roots() {
            if let Ok(q) = r.apply_t(&p, a) {
                prop_assert_eq!(q.size() as i64 - p.size() as i64, if a.is_positive() { 1 } else { -1 });
                prop_assert!(r.in_domain(&q, a.negate()));
                prop_assert_eq!(r.apply_t(&q, a.negate()).unwrap(), p.clone());
            }
        }
    }

    #[test]
    fn corners_are_turns_of_the_word((r, p) in rect_and_partition()) {
        let w = r.to_word(&p).to_string();
        prop_assert_eq!(w.len(), r.n() + r.m());
        prop_assert_eq!(w.matches('d').count(), r.n());
        prop_assert_eq!(r.outer_corners(&p).len(), w.matches("dr").count());
        prop_assert_eq!(r.inner_corners(&p).len(), w.matches("rd").count());
        prop_assert_eq!(r.corners(&p, Sign::Plus), r.outer_corners(&p));
    }

    #[test]
    fn dual_is_an_involution((r, p) in rect_and_partition()) {
        let t = rect(r.m(), r.n());
        let d = r.dual(&p);
        prop_assert_eq!(d.size(), p.size());
        prop_assert_eq!(t.dual(&d), p.clone());
        for a in r.positive_roots() {
            prop_assert_eq!(r.has_box(&p, a), a.j <= r.boxes_in_row(&p, a.i));
        }
    }

    #[test]
    fn row_and_column_moves((r, p) in rect_and_partition()) {
        let f = r.row_col_flags(&p);
        prop_assert_eq!(f.row_full, p.part(1) == r.m());
        prop_assert_eq!(f.row_empty, p.part(r.n()) == 0);
        prop_assert_eq!(f.col_full, r.dual_part(&p, 1) == r.n());
        prop_assert_eq!(f.col_empty, r.dual_part(&p, r.m()) == 0);
        match r.drop_row(&p) {
            Ok(q) => {
                prop_assert!(f.row_full);
                prop_assert_eq!(q.size() + r.m(), p.size());
                prop_assert_eq!(r.add_row(&q).unwrap(), p.clone());
            }
            Err(_) => prop_assert!(!f.row_full),
        }
        match r.drop_col(&p) {
            Ok(q) => {
                prop_assert!(f.col_full);
                prop_assert_eq!(q.size() + r.n(), p.size());
                prop_assert_eq!(r.add_col(&q).unwrap(), p.clone());
            }
            Err(_) => prop_assert!(!f.col_full),
        }
        prop_assert_eq!(r.add_row(&p).is_ok(), f.row_empty);
        prop_assert_eq!(r.add_col(&p).is_ok(), f.col_empty);
    }

    #[test]
    fn pseudo_corner_flags((r, p) in rect_and_partition()) {
        let f = r.pseudo_flags(&p);
        prop_assert_eq!(f.has_outer_pseudo, p.contains(&r.hook()));
        prop_assert_eq!(f.is_reduced, p.part(r.n()) == 0 && r.dual_part(&p, r.m()) == 0);
    }
}

#[test]
fn words_round_trip_exhaustively() {
    for n in 1..=6 {
        for m in 1..=6 {
            let r = rect(n, m);
            let all = r.all_partitions();
            assert_eq!(all.len() as u64, binomial((n + m) as u64, n as u64), "{n}x{m}");
            let mut words = BTreeSet::new();
            for p in &all {
                let w = r.to_word(p);
                assert_eq!(r.from_word(&w).unwrap(), *p);
                assert!(words.insert(w.to_string()));
            }
        }
    }
}

#[test]
fn transport_is_a_free_action() {
    let r = rect(3, 4);
    for a in r.signed_roots() {
        assert_eq!(r.transport(a, 4, 0), a);
        assert_eq!(r.transport(a, 0, 3), a);
        for (e, u) in [(1, 2), (-3, 5), (7, -1)] {
            let b = r.transport(a, e, u);
            assert_eq!(b.sign, a.sign);
            assert_eq!(r.transport(b, -e, -u), a);
        }
    }
}

#[test]
fn malformed_input_is_rejected() {
    let r = rect(2, 3);
    assert!(r.partition(&[1, 3]).is_err());
    assert!(r.partition(&[4, 0]).is_err());
    assert!(r.partition(&[1]).is_err());
    assert!(r.check_root(Root::pos(3, 1)).is_err());
    assert!(r.check_root(Root::pos(1, 0)).is_err());
    assert!("+e1-d".parse::<Root>().is_err());
    assert_eq!("-e2-d3".parse::<Root>().unwrap(), Root::neg(2, 3));
}
