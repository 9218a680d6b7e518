//! Groupoid actions of isotropic roots on three sets, and the maps between them:
//!
//! * [`diagrams`]: Young diagrams in an `n x m` rectangle, where a root adds or
//!   removes a corner box;
//! * [`classes`]: classes of labeled diagrams `[l, k]` under row and column
//!   removal, with the extended action;
//! * [`svaction`]: integer supervectors under the Sergeev-Veselov action, the
//!   embedding `x_hat` of classes into the base-point orbit and its left inverse;
//! * [`cayley`]: orbit search, Cayley graphs over degree windows, the
//!   label-preserving comparison through `x_hat`, and finiteness scans.

pub mod cayley;
pub mod classes;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod export;
pub mod svaction;

pub use cayley::{
    check_equivariant_iso, class_window_graph, conjecture_scan, diagram_window_graph, orbit_bfs,
    scan_finiteness, sv_window_graph, Action, Caps, CayleyGraph, ConjectureOutcome, DiagramAction, Edge,
    IsoReport, OrbitReport, OrbitStatus, ScanCell, ScanRow, ScanTable, SeedSpec,
};
pub use classes::{decompose, rotate_once, ClassSpace, Decomposition, EquivClass, LabeledDiagram, Witness};
pub use diagrams::{Letter, Partition, PseudoFlags, RectConfig, Root, RowColFlags, Sign, Word};
pub use error::{Error, Result};
pub use svaction::{
    apply_tau, base_point, build_x, build_x_hat, form, in_pi, matches_up_to_translation, recover_a,
    residue_check, AugMatrix, Kappa, SuperVector, SvAction,
};
