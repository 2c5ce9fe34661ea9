use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse exact scalar from {0:?}")]
pub struct ParseScalarError(pub String);

/// Cartan weight of a block, kept as plain integers for error payloads.
pub type WeightLabel = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("tensor slot {slot} out of range for a rank-{rank} tensor")]
    SlotOutOfRange { slot: usize, rank: usize },

    #[error("l = {0} is not supported (need 1 <= l <= {max})", max = crate::monomial::MAX_VARS / 2)]
    UnsupportedRank(usize),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("target vector is not in the span of the basis")]
    NotInSpan,

    #[error("matrix is not in sp(V, omega): omega(Av, w) + omega(v, Aw) != 0 at (e{v}, e{w})")]
    NotSymplectic { v: usize, w: usize },

    #[error("tensor is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("tensor is not antisymmetric in its last two slots at ({i}, {j}, {k}, {l})")]
    NotAntisymmetric { i: usize, j: usize, k: usize, l: usize },

    #[error("({i}, {j}) is not in the index triangle")]
    NotInTriangle { i: usize, j: usize },

    #[error(
        "injectivity failure: {operator} drops rank on E^({i},{j}) at weight {weight:?} \
         (rank {rank} < dim {dim})"
    )]
    InjectivityFailure {
        operator: &'static str,
        i: usize,
        j: usize,
        weight: WeightLabel,
        rank: usize,
        dim: usize,
    },

    #[error(
        "spanning failure at form degree {form_degree}, {parity} block of weight {weight:?}: \
         block reaches polynomial degree {top_degree} > cap {cap}; raise the cap to at least {top_degree}"
    )]
    SpanningFailure {
        form_degree: usize,
        parity: &'static str,
        weight: WeightLabel,
        top_degree: u32,
        cap: u32,
    },

    #[error("components do not sum directly at form degree {form_degree}, weight {weight:?}: rank {rank} != dim {dim}")]
    DirectSumFailure { form_degree: usize, weight: WeightLabel, rank: usize, dim: usize },

    #[error(
        "connection is not a Fedosov connection: lowered symbol not totally symmetric at (k, a, b) = ({k}, {a}, {b})"
    )]
    ConnectionInvariant { k: usize, a: usize, b: usize },

    #[error("section values leave the decomposed range: need fiber cap >= {required_cap} (have {cap})")]
    GuardBand { required_cap: u32, cap: u32 },

    #[error("form is not homogeneous of degree {expected}")]
    FormDegree { expected: usize },

    #[error("section is not valued in E^({i},{j})")]
    NotInComponent { i: usize, j: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
