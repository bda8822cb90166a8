//! Vogan diagrams and real forms of the basic classical Lie superalgebras.
//!
//! Everything is computed in exact rational arithmetic: distinguished
//! diagrams, Cartan data, root systems, diagram involutions, paintings,
//! Borel-de Siebenthal reduction and the named real forms.

pub mod cartan;
pub mod classify;
pub mod commands;
pub mod diagram;
pub mod document;
pub mod error;
pub mod families;
pub mod family;
pub mod involution;
pub mod par;
pub mod rational;
pub mod render;
pub mod roots;
pub mod spec_parse;
pub mod table;
pub mod vogan;
pub mod weight;

pub use error::{Error, Result};
pub use family::{FamilyId, FamilyKind};
