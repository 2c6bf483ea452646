pub mod error;
pub mod hypergraph;
pub mod lagrangian;
pub mod poset;
pub mod verifier;
