pub mod combinatorics;
pub mod deformation;
pub mod digraph;
pub mod edgelist;
pub mod error;
pub mod hamiltonian;
pub mod lemmas;
pub mod limits;
pub mod poly;
pub mod redei;
pub mod registry;
pub mod verify;
