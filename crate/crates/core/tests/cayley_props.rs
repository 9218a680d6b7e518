mod common;

use common::rect;
use proptest::prelude::*;
use tiso::svaction::SvAction;
use tiso::{
    base_point, check_equivariant_iso, class_window_graph, diagram_window_graph, orbit_bfs, scan_finiteness,
    sv_window_graph, Caps, ClassSpace, DiagramAction, Kappa, OrbitStatus, ScanCell, SeedSpec, Sign,
    SuperVector,
};

#[test]
fn diagram_orbit_is_every_diagram() {
    for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 3), (2, 5)] {
        let r = rect(n, m);
        let (g, rep) = orbit_bfs(&DiagramAction::new(r), r.empty(), Caps::default());
        assert_eq!(rep.status, OrbitStatus::Closed);
        assert_eq!(g.vertices.len(), r.all_partitions().len());
        assert!(g.is_symmetric());
        let w = diagram_window_graph(&r, 0, (n * m) as i64).unwrap();
        assert_eq!(w, g);
    }
}

#[test]
fn window_graphs_are_symmetric_and_agree() {
    for (n, m, lo, hi) in [(2, 3, -3, 8), (3, 4, 0, 6), (2, 5, -2, 5), (3, 5, 0, 4)] {
        let r = rect(n, m);
        let sp = ClassSpace::new(r).unwrap();
        let cg = class_window_graph(&sp, lo, hi).unwrap();
        let sg = sv_window_graph(&r, lo, hi).unwrap();
        assert!(cg.is_symmetric() && sg.is_symmetric());
        let rep = check_equivariant_iso(&r, &cg, &sg).unwrap();
        assert!(rep.passed, "{n}x{m}: {:?}", rep.first_mismatch);
        assert_eq!(rep.vertices, cg.vertices.len());
        assert_eq!(rep.edges, cg.edges.len());
    }
}

#[test]
fn empty_window_is_an_error() {
    let r = rect(2, 3);
    assert!(sv_window_graph(&r, 3, 2).is_err());
    assert!(class_window_graph(&ClassSpace::new(r).unwrap(), 1, 0).is_err());
}

#[test]
fn restricted_bases_have_finite_orbits() {
    let r = rect(2, 3);
    let k = Kappa::standard(&r).unwrap();
    for (rows, cols) in [(1, 1), (1, 3), (2, 2), (2, 1)] {
        let action = SvAction::new(r, k).unwrap().restricted(rows, cols).unwrap();
        let (_, rep) = orbit_bfs(&action, base_point(&r), Caps::vertices(20_000));
        assert_eq!(rep.status, OrbitStatus::Closed, "base {rows}x{cols}");
    }
    let (_, rep) = orbit_bfs(&SvAction::new(r, k).unwrap(), base_point(&r), Caps::vertices(5_000));
    assert_eq!(rep.status, OrbitStatus::CapExceeded);
}

#[test]
fn scans_are_reproducible() {
    let cells = [ScanCell { n: 2, m: 3, kappa: Kappa::new(3, 2, Sign::Plus).unwrap(), base: None }];
    let seeds = SeedSpec::Random { count: 20, lo: -20, hi: 20 };
    let a = scan_finiteness(&cells, &seeds, Caps::vertices(5_000), 11).unwrap();
    let b = scan_finiteness(&cells, &seeds, Caps::vertices(5_000), 11).unwrap();
    let c = scan_finiteness(&cells, &seeds, Caps::vertices(5_000), 12).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_ne!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&c).unwrap());
    assert_eq!(a.prng_seed, 11);
    assert!(a.all_closed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn positive_kappa_orbits_close(flat in proptest::collection::vec(-25i64..25, 5)) {
        let r = rect(2, 3);
        let action = SvAction::new(r, Kappa::new(3, 2, Sign::Plus).unwrap()).unwrap();
        let seed = SuperVector::from_flat(&r, &flat).unwrap();
        let (g, rep) = orbit_bfs(&action, seed, Caps::vertices(20_000));
        prop_assert_eq!(rep.status, OrbitStatus::Closed);
        prop_assert!(g.is_symmetric());
        for v in &g.vertices {
            for (label, w) in tiso::Action::moves(&action, v) {
                prop_assert!(g.has_edge(v, &w, label));
            }
        }
    }

    #[test]
    fn orbits_do_not_depend_on_the_seed_vertex(steps in proptest::collection::vec(0usize..64, 1..6)) {
        // walk from the base point and search again from where the walk ends
        let r = rect(2, 3);
        let action = SvAction::standard(r).unwrap().restricted(2, 2).unwrap();
        let mut v = base_point(&r);
        for s in steps {
            let moves = tiso::Action::moves(&action, &v);
            v = moves[s % moves.len()].1.clone();
        }
        let (g0, _) = orbit_bfs(&action, base_point(&r), Caps::default());
        let (g1, _) = orbit_bfs(&action, v, Caps::default());
        prop_assert_eq!(g0, g1);
    }
}
