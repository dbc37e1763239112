//! Explicit clique covers and their validation.

mod certificate;
mod four;
mod refine;
mod three;

pub use certificate::{
    validate_cover, CoverBuilder, CoverCertificate, CoverViolation, Provenance, UnknownProvenance,
};
pub use four::build_4cover;
pub use refine::{
    build_triple_hypergraph, find_k4_triples, refine_3cover, K4Triples, RefinedCover, TripleCost,
    TripleHypergraph,
};
pub use three::{build_3cover, ThreeCover};
