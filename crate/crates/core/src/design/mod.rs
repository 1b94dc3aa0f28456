//! Standalone combinatorial arrays: magic squares and rectangles, nearly
//! magic rectangles, Kotzig arrays and magic rectangle sets.

pub mod existence;
pub mod fixtures;
pub mod kotzig;
pub mod lift;
pub mod magic;
pub mod mrs;
pub mod solver;
pub mod verify;

pub use existence::{ka_exists, mr_exists, mrs_exists, nmr_exists};
pub use kotzig::{kotzig_array, quasi_kotzig_array, KotzigMatrix};
pub use lift::circulant_lift;
pub use magic::{
    magic_rectangle, nearly_magic_rectangle, odd_magic_square, siamese_magic_square, Variant,
};
pub use mrs::magic_rectangle_set;
pub use verify::{verify_array, ArrayKind, VerificationReport};
