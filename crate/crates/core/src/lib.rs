//! Two dihedral actions on the 24 major and minor triads.
//!
//! * [`pitchspace`]: pitch classes mod 12 and the transposition/inversion group.
//! * [`triads`]: consonant triads as ordered triples, naming and parsing.
//! * [`neoriemann`]: the componentwise and the contextual (`P`, `L`, `R`)
//!   actions, PLR words, dihedral normal forms, uniform triadic transformations.
//! * [`permgroup`]: exhaustive permutation-group machinery (closure, orbits,
//!   centralizers, regular representations).
//! * [`duality`]: checks that the two groups centralize each other, and related
//!   structure.
//! * [`tonnetz`]: the Tonnetz, the chicken-wire torus, and their duality.
//! * [`analysis`]: progression parsing, transformation discovery, worked
//!   examples, and the voice-leading parsimony study.

pub mod analysis;
pub mod duality;
pub mod neoriemann;
pub mod permgroup;
pub mod pitchspace;
pub mod tonnetz;
pub mod triads;

pub use analysis::{Progression, TransformationStep};
pub use neoriemann::{DihedralNormalForm, PlrOp, PlrWord, Sign, Utt};
pub use permgroup::{CayleyTable, PermError, PermGroup, Permutation};
pub use pitchspace::{PitchClass, TiElement, TiKind};
pub use tonnetz::{EdgeLabel, LabeledGraph};
pub use triads::{ConsonantTriad, Parity, Spelling, TriadError};
