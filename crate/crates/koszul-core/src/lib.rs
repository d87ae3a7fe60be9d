pub mod cdga;
pub mod cli;
pub mod groebner;
pub mod invariants;
pub mod koszul;
pub mod lie;
pub mod polycore;
