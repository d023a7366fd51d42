//! Littlewood-Richardson commutors on ballot tableau pairs, computed by
//! switching and by recursive internal row insertion, with the tableau, word
//! and symmetric-function machinery they rest on.

pub mod commutor;
pub mod error;
pub mod format;
pub mod golden;
pub mod insertion;
pub mod knuth;
pub mod schur;
pub mod tableau;
pub mod verify;
pub mod word;

pub use commutor::{SwitchStrategy, TwoColorTableau};
pub use error::{CommutorError, FormatError, InsertionError, KnuthError, TableauError};
pub use insertion::{GluedPair, InsertionTrace};
pub use tableau::{Cell, Composition, Letter, Partition, SkewShape, SkewTableau};
pub use word::Word;
