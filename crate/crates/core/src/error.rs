//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds tol {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix is not unitary: residual {residual:.3e} exceeds tol {tol:.3e}")]
    NotUnitary { residual: f64, tol: f64 },

    #[error("matrix is not antisymmetric: residual {residual:.3e} exceeds tol {tol:.3e}")]
    NotAntisymmetric { residual: f64, tol: f64 },

    #[error("matrix is not special unitary: |det - 1| = {residual:.3e}")]
    NotSpecialUnitary { residual: f64 },

    #[error("pfaffian requires even dimension, got {n}")]
    OddDimension { n: usize },

    #[error("matrix is singular at pivot {pivot}")]
    Singular { pivot: usize },

    #[error("phase jump {jump:.6} at step {index} reaches the unwrapping margin (pi - {margin:.2e}); path under-resolved")]
    PhaseJump { index: usize, jump: f64, margin: f64 },

    #[error("eigensolver failed to converge after {sweeps} sweeps (off-diagonal {offdiag:.3e})")]
    NoConvergence { sweeps: usize, offdiag: f64 },

    #[error("time-reversal operator is not odd: |u conj(u) {sign} I| = {residual:.3e}{hint}")]
    BadTimeReversal {
        sign: &'static str,
        residual: f64,
        hint: String,
    },

    #[error("model dimension must be 2 or 3, got {d}")]
    BadDimension { d: usize },

    #[error("matrix size must be even for odd time reversal, got {n}")]
    OddMatrixSize { n: usize },

    #[error("hopping list violates hermiticity: ||T(-R) - T(R)^dag|| = {residual:.3e} at R = {displacement:?}")]
    NonHermitianHoppings {
        displacement: Vec<i32>,
        residual: f64,
    },

    #[error("grid sizes must be even and positive, got {sizes:?}")]
    BadGridSizes { sizes: Vec<usize> },

    #[error("grid/model dimension mismatch: model d={model}, grid d={grid}")]
    DimensionMismatch { model: usize, grid: usize },

    #[error("spectral gap {gap:.3e} at k-index {at:?} is below tol {tol:.3e}: model is metallic or gap-closing there")]
    GapClosing { gap: f64, at: Vec<usize>, tol: f64 },

    #[error("valence rank is not constant over the grid: {ranks:?}")]
    RankNotConstant { ranks: Vec<usize> },

    #[error("valence bundle is not trivializable: Chern number {chern} on the {plane} plane")]
    NotTrivializable { chern: i64, plane: String },

    #[error("winding removal failed: residual det winding {winding} on cycle {cycle}")]
    ResidualWinding { winding: i64, cycle: usize },

    #[error("could not find a base point for the loop contraction after {tries} tries (best spectral margin {margin:.3e}); field too wild for the geodesic homotopy")]
    NoContractionBasePoint { tries: usize, margin: f64 },

    #[error("frame is not smooth enough: link jump {jump:.3e} exceeds {tol:.3e}")]
    FrameNotSmooth { jump: f64, tol: f64 },

    #[error("sewing field symmetry residual {residual:.3e} exceeds tol {tol:.3e}: frame and theta are inconsistent")]
    SewingSymmetry { residual: f64, tol: f64 },

    #[error("det branch winds ({winding}) around basic cycle {cycle}; not a valid sewing field")]
    DetWinding { winding: i64, cycle: usize },

    #[error("Pfaffian factor at TRIM {at:?} is not close to a sign: value {value}")]
    BadTrimFactor { at: Vec<usize>, value: String },

    #[error("element is not in the stabilizer G_ij: off-block mass {offblock:.3e}")]
    NotInStabilizer { offblock: f64 },

    #[error("triangulation refinement cap reached: worst margin {margin:.3e} < {tol:.3e}; field hugs an alcove wall")]
    RefinementCap { margin: f64, tol: f64 },

    #[error("eigenphase cluster structure changed between adjacent samples; refine the path")]
    ClusterCrossing,

    #[error("holonomy produced a non-unit amplitude: |amp| - 1 = {deviation:.3e}")]
    NonUnitAmplitude { deviation: f64 },

    #[error("grid is too coarse for task: {what}")]
    GridTooCoarse { what: String },

    #[error("model file: {0}")]
    ModelFile(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
