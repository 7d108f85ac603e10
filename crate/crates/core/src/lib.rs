pub mod assembler;
pub mod blocks;
pub mod charpoly;
pub mod cli;
pub mod codec;
pub mod exactalg;
pub mod pattern_s;
pub mod solver;
