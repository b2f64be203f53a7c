//! Deterministic flit-level simulation of 2D-mesh networks-on-chip with
//! denial-of-service attack injection, plus a traffic anomaly detector built
//! on subsequence time-series clustering.
//!
//! The crate is organised around a pipeline:
//!
//! * [`noc`] — cycle-stepped mesh of 5-port wormhole routers (XY routing,
//!   oldest-first arbitration) with deadlock/livelock detection.
//! * [`workload`] — synthetic traffic generators (uniform, transposed,
//!   hotspot, periodic) and the three attack behaviours (flooding,
//!   misrouting, deadlock-inducing route tampering).
//! * [`monitor`] — per-router, per-port, per-quantum flit counters and the
//!   trace file format.
//! * [`distance`] — Minkowski, Kullback-Leibler and DTW kernels with
//!   warping-path extraction.
//! * [`clustering`] — k-means, k-medoids and agglomerative clustering plus
//!   external validity indices.
//! * [`features`] — histograms and Shannon/Tsallis/Renyi entropies.
//! * [`ids`] — sliding-window shape-dictionary training, reconstruction
//!   error detection, threshold calibration and evaluation.
//!
//! Every operation is deterministic given its inputs and seeds; repeated
//! runs produce byte-identical output files.

pub mod clustering;
pub mod config;
pub mod distance;
pub mod error;
pub mod features;
pub mod ids;
pub mod monitor;
pub mod noc;
pub mod workload;

pub use error::{Error, Result};
