//! Molecular toolkit: SMILES parsing and canonical writing, ring perception,
//! Morgan fingerprints, substructure patterns, and molecular descriptors.

pub mod canon;
pub mod descriptors;
pub mod element;
pub mod fingerprint;
pub mod fragments;
pub mod generate;
pub mod graph;
pub mod iso;
mod ring;
pub mod smarts;
pub mod smiles;
pub mod writer;

pub use fingerprint::{default_fingerprint, morgan_fingerprint, Fingerprint};
pub use graph::{Atom, Bond, BondOrder, Chirality, Diagnostic, MolecularGraph, Severity};
pub use smiles::{parse_smiles, ParseError};
pub use writer::write_smiles;
