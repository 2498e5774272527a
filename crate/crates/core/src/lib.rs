pub mod cli;
pub mod error;
pub mod exact;
pub mod rootsys;
pub mod sinhprod;
pub mod tables;
pub mod universal;
pub mod vogel;
