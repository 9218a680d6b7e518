//! Orbit enumeration and Cayley graphs for the three actions: diagrams in the
//! rectangle, classes of labeled diagrams, and integer supervectors.
//!
//! Breadth-first search runs level by level. The moves of a level may be
//! computed in parallel, but they are merged in frontier order, so the vertex
//! and edge sets only depend on the seed and the caps.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{ClassSpace, EquivClass};
use crate::diagrams::{Partition, RectConfig, Root};
use crate::error::{Error, Result};
use crate::svaction::{
    base_point, class_image, matches_up_to_translation, svdeg, Kappa, SuperVector, SvAction,
};

/// A groupoid action: the defined morphisms out of each vertex.
pub trait Action: Sync {
    type Vertex: Clone + Ord + Send + Sync + Serialize;

    /// Every `(root, image)` for which the morphism is defined, in a fixed root order.
    fn moves(&self, v: &Self::Vertex) -> Vec<(Root, Self::Vertex)>;

    /// Size measure checked against [`Caps::max_abs_coordinate`].
    fn magnitude(&self, v: &Self::Vertex) -> i64;
}

/// The action on diagrams inside the rectangle: add or remove a corner box.
#[derive(Debug, Clone, Copy)]
pub struct DiagramAction {
    rect: RectConfig,
}

impl DiagramAction {
    pub fn new(rect: RectConfig) -> DiagramAction {
        DiagramAction { rect }
    }
}

impl Action for DiagramAction {
    type Vertex = Partition;

    fn moves(&self, v: &Partition) -> Vec<(Root, Partition)> {
        self.rect
            .signed_roots()
            .filter(|&r| self.rect.in_domain(v, r))
            .map(|r| (r, self.rect.apply_t(v, r).expect("checked corner")))
            .collect()
    }

    fn magnitude(&self, _: &Partition) -> i64 {
        0
    }
}

impl Action for ClassSpace {
    type Vertex = EquivClass;

    fn moves(&self, v: &EquivClass) -> Vec<(Root, EquivClass)> {
        ClassSpace::moves(self, v)
    }

    fn magnitude(&self, v: &EquivClass) -> i64 {
        v.canonical().k.abs()
    }
}

impl Action for SvAction {
    type Vertex = SuperVector;

    fn moves(&self, v: &SuperVector) -> Vec<(Root, SuperVector)> {
        SvAction::moves(self, v)
    }

    fn magnitude(&self, v: &SuperVector) -> i64 {
        v.max_abs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge<V> {
    pub src: V,
    pub dst: V,
    pub label: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph<V: Ord> {
    pub vertices: BTreeSet<V>,
    pub edges: BTreeSet<Edge<V>>,
}

impl<V: Ord + Clone> CayleyGraph<V> {
    pub fn has_edge(&self, src: &V, dst: &V, label: Root) -> bool {
        // BTreeSet lookup needs an owned key
        self.edges.contains(&Edge { src: src.clone(), dst: dst.clone(), label })
    }

    /// Every edge `(u, v, a)` has its reverse `(v, u, -a)`.
    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|e| self.has_edge(&e.dst, &e.src, e.label.negate()))
    }

    /// Connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let index: std::collections::BTreeMap<&V, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (index[&e.src], index[&e.dst]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitStatus {
    Closed,
    CapExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_abs_coordinate: i64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_vertices: 200_000, max_abs_coordinate: 1_000_000 }
    }
}

impl Caps {
    pub fn vertices(max_vertices: usize) -> Caps {
        Caps { max_vertices, ..Caps::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub status: OrbitStatus,
    pub vertex_count: usize,
    pub max_coordinate: i64,
    pub witnesses: Option<ConjectureOutcome>,
}

/// Breadth-first closure of `seed` under every defined morphism.
///
/// Vertices past `caps.max_vertices`, or with magnitude above
/// `caps.max_abs_coordinate`, are not added and the status becomes
/// `CapExceeded`. Every added vertex is expanded, so edges between added
/// vertices are always complete.
pub fn orbit_bfs<A: Action>(
    action: &A,
    seed: A::Vertex,
    caps: Caps,
) -> (CayleyGraph<A::Vertex>, OrbitReport) {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut capped = false;
    let mut max_coordinate = action.magnitude(&seed);
    if max_coordinate > caps.max_abs_coordinate || caps.max_vertices == 0 {
        let report = OrbitReport {
            status: OrbitStatus::CapExceeded,
            vertex_count: 0,
            max_coordinate,
            witnesses: None,
        };
        return (CayleyGraph { vertices, edges }, report);
    }
    vertices.insert(seed.clone());
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let expanded: Vec<Vec<(Root, A::Vertex)>> = frontier.par_iter().map(|v| action.moves(v)).collect();
        let mut next = Vec::new();
        for (src, moves) in frontier.iter().zip(expanded) {
            for (label, dst) in moves {
                if !vertices.contains(&dst) {
                    let size = action.magnitude(&dst);
                    if size > caps.max_abs_coordinate || vertices.len() >= caps.max_vertices {
                        capped = true;
                        continue;
                    }
                    max_coordinate = max_coordinate.max(size);
                    vertices.insert(dst.clone());
                    next.push(dst.clone());
                }
                edges.insert(Edge { src: src.clone(), dst, label });
            }
        }
        frontier = next;
    }
    let report = OrbitReport {
        status: if capped { OrbitStatus::CapExceeded } else { OrbitStatus::Closed },
        vertex_count: vertices.len(),
        max_coordinate,
        witnesses: None,
    };
    (CayleyGraph { vertices, edges }, report)
}

fn check_window(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        Err(Error::WindowEmpty { lo, hi })
    } else {
        Ok(())
    }
}

/// Induced subgraph on the vertices whose degree lies in `[lo, hi]`.
fn induced<A: Action>(action: &A, vertices: BTreeSet<A::Vertex>) -> CayleyGraph<A::Vertex> {
    let list: Vec<&A::Vertex> = vertices.iter().collect();
    let expanded: Vec<Vec<(Root, A::Vertex)>> = list.par_iter().map(|v| action.moves(v)).collect();
    let mut edges = BTreeSet::new();
    for (src, moves) in list.into_iter().zip(expanded) {
        for (label, dst) in moves {
            if vertices.contains(&dst) {
                edges.insert(Edge { src: src.clone(), dst, label });
            }
        }
    }
    CayleyGraph { vertices, edges }
}

/// Diagrams with `|l|` in `[lo, hi]`.
pub fn diagram_window_graph(rect: &RectConfig, lo: i64, hi: i64) -> Result<CayleyGraph<Partition>> {
    check_window(lo, hi)?;
    let vertices: BTreeSet<Partition> =
        rect.all_partitions().into_iter().filter(|p| (lo..=hi).contains(&(p.size() as i64))).collect();
    if vertices.is_empty() {
        return Err(Error::WindowEmpty { lo, hi });
    }
    Ok(induced(&DiagramAction::new(*rect), vertices))
}

/// Classes with degree in `[lo, hi]`.
pub fn class_window_graph(space: &ClassSpace, lo: i64, hi: i64) -> Result<CayleyGraph<EquivClass>> {
    check_window(lo, hi)?;
    let mut vertices = BTreeSet::new();
    for d in lo..=hi {
        vertices.extend(space.classes_of_degree(d)?);
    }
    Ok(induced(space, vertices))
}

/// Orbit vertices with degree in `[lo, hi]`, generated as images of the class
/// window under `x_hat`. Edges come from applying the supervector morphisms
/// directly; a morphism landing inside the degree window on a vector that is
/// not an image is reported as a discrepancy.
pub fn sv_window_graph(rect: &RectConfig, lo: i64, hi: i64) -> Result<CayleyGraph<SuperVector>> {
    check_window(lo, hi)?;
    let space = ClassSpace::new(*rect)?;
    let action = SvAction::standard(*rect)?;
    let mut vertices = BTreeSet::new();
    for d in lo..=hi {
        for c in space.classes_of_degree(d)? {
            let v = class_image(rect, &c)?;
            if svdeg(rect, &v) != Some(d) {
                return Err(Error::Discrepancy(format!(
                    "{v} has degree {:?}, expected {d}",
                    svdeg(rect, &v)
                )));
            }
            vertices.insert(v);
        }
    }
    let mut edges = BTreeSet::new();
    for v in &vertices {
        for (label, w) in action.moves(v) {
            let d =
                svdeg(rect, &w).ok_or_else(|| Error::Discrepancy(format!("{w} has non-integral degree")))?;
            if !(lo..=hi).contains(&d) {
                continue;
            }
            if !vertices.contains(&w) {
                return Err(Error::Discrepancy(format!(
                    "{v} --{label}--> {w} leaves the image of the class window"
                )));
            }
            edges.insert(Edge { src: v.clone(), dst: w, label });
        }
    }
    Ok(CayleyGraph { vertices, edges })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub passed: bool,
    pub vertices: usize,
    pub edges: usize,
    pub first_mismatch: Option<String>,
}

/// Checks that `x_hat` is a bijection from the class vertices onto the orbit
/// vertices that carries every labeled edge to the identically labeled edge.
pub fn check_equivariant_iso(
    rect: &RectConfig,
    classes: &CayleyGraph<EquivClass>,
    orbit: &CayleyGraph<SuperVector>,
) -> Result<IsoReport> {
    let fail = |msg: String| IsoReport {
        passed: false,
        vertices: classes.vertices.len(),
        edges: classes.edges.len(),
        first_mismatch: Some(msg),
    };
    let mut images = std::collections::BTreeMap::new();
    for c in &classes.vertices {
        let v = class_image(rect, c)?;
        if let Some(prev) = images.insert(c.clone(), v.clone()) {
            return Ok(fail(format!("{c} visited twice ({prev})")));
        }
    }
    let image_set: BTreeSet<&SuperVector> = images.values().collect();
    if image_set.len() != images.len() {
        return Ok(fail("x_hat is not injective on the window".into()));
    }
    if let Some(c) = images.iter().find(|(_, v)| !orbit.vertices.contains(*v)) {
        return Ok(fail(format!("image {} of {} is not an orbit vertex", c.1, c.0)));
    }
    if let Some(v) = orbit.vertices.iter().find(|v| !image_set.contains(v)) {
        return Ok(fail(format!("orbit vertex {v} has no preimage")));
    }
    for e in &classes.edges {
        let (s, d) = (&images[&e.src], &images[&e.dst]);
        if !orbit.has_edge(s, d, e.label) {
            return Ok(fail(format!(
                "edge {} --{}--> {} maps to a missing edge {s} -> {d}",
                e.src, e.label, e.dst
            )));
        }
    }
    if classes.edges.len() != orbit.edges.len() {
        return Ok(fail(format!(
            "edge counts differ: {} class edges, {} orbit edges",
            classes.edges.len(),
            orbit.edges.len()
        )));
    }
    Ok(IsoReport {
        passed: true,
        vertices: classes.vertices.len(),
        edges: classes.edges.len(),
        first_mismatch: None,
    })
}

/// Result of searching an orbit for a translate of the base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureOutcome {
    /// A vertex `L0 + a(1,..,1|1,..,1)` and its shift `a`.
    pub witness: Option<(SuperVector, i64)>,
    /// Vertices whose blocks are permutations of the blocks of `L0 + a`, but
    /// which are not translates themselves.
    pub near_misses: Vec<(SuperVector, i64)>,
}

const NEAR_MISS_LIMIT: usize = 16;

/// Looks for a translate of the base point among the reached vertices. Finding
/// none is inconclusive.
pub fn conjecture_scan(rect: &RectConfig, orbit: &CayleyGraph<SuperVector>) -> ConjectureOutcome {
    let l0 = base_point(rect);
    let mut witness = None;
    let mut near_misses = Vec::new();
    let sorted = |xs: &[i64], c: i64| {
        let mut v: Vec<i64> = xs.iter().map(|x| x + c).collect();
        v.sort_unstable();
        v
    };
    for v in &orbit.vertices {
        if let Some(a) = matches_up_to_translation(v, &l0) {
            // keep the smallest shift
            if witness.as_ref().is_none_or(|(_, b): &(SuperVector, i64)| (a.abs(), a) < (b.abs(), *b)) {
                witness = Some((v.clone(), a));
            }
            continue;
        }
        if near_misses.len() >= NEAR_MISS_LIMIT || v.a.len() != l0.a.len() {
            continue;
        }
        let diff: i64 = v.a.iter().sum::<i64>() - l0.a.iter().sum::<i64>();
        let n = l0.a.len() as i64;
        if diff % n != 0 {
            continue;
        }
        let c = diff / n;
        if sorted(&v.a, 0) == sorted(&l0.a, c) && sorted(&v.b, 0) == sorted(&l0.b, c) {
            near_misses.push((v.clone(), c));
        }
    }
    ConjectureOutcome { witness, near_misses }
}

/// One cell of a finiteness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanCell {
    pub n: usize,
    pub m: usize,
    pub kappa: Kappa,
    /// Restricts roots to `i in [rows]`, `j in [cols]`.
    pub base: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedSpec {
    BasePoint,
    Explicit(Vec<Vec<i64>>),
    /// `count` vectors with coordinates uniform in `[lo, hi]`.
    Random {
        count: usize,
        lo: i64,
        hi: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub cell: ScanCell,
    pub seed: SuperVector,
    pub status: OrbitStatus,
    pub vertex_count: usize,
    pub max_coordinate: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanTable {
    pub prng_seed: u64,
    pub caps: Caps,
    pub rows: Vec<ScanRow>,
}

impl ScanTable {
    pub fn all_closed(&self) -> bool {
        self.rows.iter().all(|r| r.status == OrbitStatus::Closed)
    }
}

/// Runs an orbit search for every seed in every cell. Random seeds are drawn
/// from a single ChaCha stream seeded with `prng_seed`, cell by cell.
pub fn scan_finiteness(
    cells: &[ScanCell],
    seeds: &SeedSpec,
    caps: Caps,
    prng_seed: u64,
) -> Result<ScanTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(prng_seed);
    let mut rows = Vec::new();
    for cell in cells {
        let rect = RectConfig::new(cell.n, cell.m)?;
        let mut action = SvAction::new(rect, cell.kappa)?;
        if let Some((rows, cols)) = cell.base {
            action = action.restricted(rows, cols)?;
        }
        let cell_seeds: Vec<SuperVector> = match seeds {
            SeedSpec::BasePoint => vec![base_point(&rect)],
            SeedSpec::Explicit(list) => {
                list.iter().map(|flat| SuperVector::from_flat(&rect, flat)).collect::<Result<_>>()?
            }
            SeedSpec::Random { count, lo, hi } => (0..*count)
                .map(|_| {
                    let flat: Vec<i64> = (0..cell.n + cell.m).map(|_| rng.random_range(*lo..=*hi)).collect();
                    SuperVector::from_flat(&rect, &flat)
                })
                .collect::<Result<_>>()?,
        };
        for seed in cell_seeds {
            let (_, report) = orbit_bfs(&action, seed.clone(), caps);
            rows.push(ScanRow {
                cell: *cell,
                seed,
                status: report.status,
                vertex_count: report.vertex_count,
                max_coordinate: report.max_coordinate,
            });
        }
    }
    Ok(ScanTable { prng_seed, caps, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Sign;

    fn r23() -> RectConfig {
        RectConfig::new(2, 3).unwrap()
    }

    #[test]
    fn diagram_orbit_is_all_of_x() {
        let rect = r23();
        let (g, rep) = orbit_bfs(&DiagramAction::new(rect), rect.empty(), Caps::default());
        assert_eq!(rep.status, OrbitStatus::Closed);
        assert_eq!(rep.vertex_count, 10);
        assert!(g.is_symmetric());
        let rect = RectConfig::new(3, 3).unwrap();
        let (_, rep) = orbit_bfs(&DiagramAction::new(rect), rect.empty(), Caps::default());
        assert_eq!(rep.vertex_count, 20);
    }

    #[test]
    fn standard_orbit_hits_the_cap() {
        let rect = r23();
        let action = SvAction::standard(rect).unwrap();
        let (g, rep) = orbit_bfs(&action, base_point(&rect), Caps::vertices(500));
        assert_eq!(rep.status, OrbitStatus::CapExceeded);
        assert_eq!(rep.vertex_count, 500);
        assert!(g.is_symmetric());
    }

    #[test]
    fn positive_kappa_orbit_closes() {
        let rect = r23();
        let action = SvAction::new(rect, "+3/2".parse().unwrap()).unwrap();
        let (_, rep) = orbit_bfs(&action, base_point(&rect), Caps::default());
        assert_eq!(rep.status, OrbitStatus::Closed);
    }

    #[test]
    fn coordinate_cap() {
        let rect = r23();
        let action = SvAction::standard(rect).unwrap();
        let caps = Caps { max_vertices: 1_000_000, max_abs_coordinate: 30 };
        let (g, rep) = orbit_bfs(&action, base_point(&rect), caps);
        assert_eq!(rep.status, OrbitStatus::CapExceeded);
        assert!(g.vertices.iter().all(|v| v.max_abs() <= 30));
        assert!(rep.max_coordinate <= 30);
    }

    #[test]
    fn window_examples() {
        let rect = r23();
        let space = ClassSpace::new(rect).unwrap();
        let g = class_window_graph(&space, 0, 0).unwrap();
        assert!(g.vertices.contains(&space.class(&[0, 0], 0).unwrap()));

        let g = class_window_graph(&space, 0, 1).unwrap();
        let a = space.class(&[0, 0], 0).unwrap();
        let b = space.class(&[1, 0], 0).unwrap();
        assert!(g.has_edge(&a, &b, Root::pos(2, 1)));
        assert!(g.has_edge(&b, &a, Root::neg(2, 1)));

        let g = sv_window_graph(&rect, 0, 1).unwrap();
        let l1 = SuperVector::new(vec![3, 2], vec![3, 2, 4]);
        assert!(g.has_edge(&base_point(&rect), &l1, Root::pos(2, 1)));

        assert!(matches!(class_window_graph(&space, 2, 1), Err(Error::WindowEmpty { .. })));
        assert!(matches!(diagram_window_graph(&rect, 7, 9), Err(Error::WindowEmpty { .. })));
    }

    #[test]
    fn single_vertex_window() {
        let rect = r23();
        let space = ClassSpace::new(rect).unwrap();
        let classes = class_window_graph(&space, 0, 0).unwrap();
        let orbit = sv_window_graph(&rect, 0, 0).unwrap();
        let rep = check_equivariant_iso(&rect, &classes, &orbit).unwrap();
        assert!(rep.passed, "{rep:?}");
        let empty = space.class(&[0, 0], 0).unwrap();
        assert_eq!(class_image(&rect, &empty).unwrap(), base_point(&rect));
    }

    #[test]
    fn iso_detects_a_broken_orbit_graph() {
        let rect = r23();
        let space = ClassSpace::new(rect).unwrap();
        let classes = class_window_graph(&space, 0, 3).unwrap();
        let mut orbit = sv_window_graph(&rect, 0, 3).unwrap();
        let e = orbit.edges.iter().next().unwrap().clone();
        orbit.edges.remove(&e);
        let rep = check_equivariant_iso(&rect, &classes, &orbit).unwrap();
        assert!(!rep.passed);
        assert!(rep.first_mismatch.is_some());
    }

    #[test]
    fn conjecture_examples() {
        let rect = r23();
        let l0 = base_point(&rect);
        let action = SvAction::standard(rect).unwrap();
        let (g, _) = orbit_bfs(&action, l0.clone(), Caps::vertices(200));
        let (v, a) = conjecture_scan(&rect, &g).witness.unwrap();
        assert_eq!(matches_up_to_translation(&v, &l0), Some(a));
        // translates in the orbit are L0 + k*mn
        assert_eq!(a % 6, 0);
        let seeded = l0.translate(7);
        let (g, _) = orbit_bfs(&action, seeded.clone(), Caps::vertices(1));
        assert_eq!(conjecture_scan(&rect, &g).witness, Some((seeded, 7)));
        let (g, _) = orbit_bfs(&action, l0.clone(), Caps::vertices(1));
        assert_eq!(conjecture_scan(&rect, &g).witness, Some((l0, 0)));
    }

    #[test]
    fn scans_are_reproducible() {
        let cell = ScanCell { n: 2, m: 3, kappa: Kappa::new(3, 2, Sign::Plus).unwrap(), base: None };
        let seeds = SeedSpec::Random { count: 5, lo: -20, hi: 20 };
        let a = scan_finiteness(&[cell], &seeds, Caps::default(), 11).unwrap();
        let b = scan_finiteness(&[cell], &seeds, Caps::default(), 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.len(), 5);
        let c = scan_finiteness(&[cell], &seeds, Caps::default(), 12).unwrap();
        assert_ne!(
            a.rows.iter().map(|r| &r.seed).collect::<Vec<_>>(),
            c.rows.iter().map(|r| &r.seed).collect::<Vec<_>>()
        );
    }

    #[test]
    fn bfs_is_independent_of_thread_count() {
        let rect = RectConfig::new(3, 4).unwrap();
        let action = SvAction::standard(rect).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| orbit_bfs(&action, base_point(&rect), Caps::vertices(3_000)))
        };
        assert_eq!(run(1), run(4));
    }
}
