pub mod arith;
pub mod cli;
pub mod config;
pub mod fixtures;
pub mod group;
pub mod refute;
pub mod rep;
pub mod separation;
