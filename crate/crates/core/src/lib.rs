pub mod embedding;
pub mod facial_coloring;
pub mod simple;
pub mod choosability;
pub mod nullstellensatz;
pub mod reducibility;
pub mod discharging;
