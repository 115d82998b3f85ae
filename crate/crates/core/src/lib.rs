pub mod arith;
pub mod cosecant;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod report;
pub mod series;
pub mod sums;
pub mod symfun;
pub mod tables;
pub mod verify;
