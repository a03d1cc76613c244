//! Exact symbolic toolkit for Hadamard products of projective varieties.

pub mod arith;
pub mod poly;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod geometry;
pub mod predictor;
