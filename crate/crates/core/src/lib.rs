pub mod cover;
pub mod graph;
pub mod poly;
pub mod verify;
pub mod sv;
pub mod construct;
pub mod random;
pub mod laws;
pub mod report;
