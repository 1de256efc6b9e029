pub mod lattice;
pub mod matrix;
pub mod partition;
pub mod poly;
