//! Real-world objectives, registered as problems `antenna` and `fm`.

pub mod antenna;
pub mod fm;

pub use antenna::{antenna_fitness, array_factor, AntennaLayout};
pub use fm::{fm_fitness, FmForm};
