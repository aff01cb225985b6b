//! Named pattern libraries: functional groups, fragment counts, and the
//! seen/unseen partition used for held-out evaluation.
//!
//! Library files are tab-separated: `name<TAB>pattern<TAB>list_id` with an
//! optional fourth `seen|unseen` column. Entries whose pattern uses an
//! unsupported construct are skipped and reported, not fatal.

use std::collections::BTreeMap;

use crate::graph::MolecularGraph;
use crate::smarts::{self, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ListId {
    Simple,
    MaccsLike,
    Fragment,
    Textbook,
}

impl ListId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ListId::Simple => "simple",
            ListId::MaccsLike => "maccs-like",
            ListId::Fragment => "fragment",
            ListId::Textbook => "textbook",
        }
    }

    fn parse(s: &str) -> Option<ListId> {
        match s {
            "simple" => Some(ListId::Simple),
            "maccs-like" => Some(ListId::MaccsLike),
            "fragment" => Some(ListId::Fragment),
            "textbook" => Some(ListId::Textbook),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LibraryEntry {
    pub name: String,
    pub pattern: Pattern,
    pub list_id: ListId,
    pub seen: bool,
}

/// An entry the loader could not accept, with the reason.
#[derive(Debug, Clone)]
pub struct SkippedEntry {
    pub line: usize,
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct PatternLibrary {
    pub entries: Vec<LibraryEntry>,
    pub skipped: Vec<SkippedEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum LibraryError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("duplicate name '{name}' in list {list}")]
    DuplicateName { name: String, list: String },
}

pub const DEFAULT_PARTITION_SALT: u64 = 0x6d6f_6c66_6f72_6765;

impl PatternLibrary {
    /// Parses library text. Entries without a partition column are assigned
    /// seen/unseen by a salted name hash, roughly 80/20.
    pub fn parse(text: &str, salt: u64) -> Result<PatternLibrary, LibraryError> {
        let mut lib = PatternLibrary::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = trimmed.split('\t').collect();
            if cols.len() < 3 || cols.len() > 4 {
                return Err(LibraryError::Malformed {
                    line,
                    message: format!("expected 3 or 4 tab-separated columns, got {}", cols.len()),
                });
            }
            let name = cols[0].to_string();
            let list_id = ListId::parse(cols[2]).ok_or_else(|| LibraryError::Malformed {
                line,
                message: format!("unknown list id '{}'", cols[2]),
            })?;
            let seen = match cols.get(3) {
                Some(&"seen") => true,
                Some(&"unseen") => false,
                Some(other) => {
                    return Err(LibraryError::Malformed {
                        line,
                        message: format!("partition must be seen|unseen, got '{other}'"),
                    });
                }
                None => is_seen(&name, salt),
            };
            if lib
                .entries
                .iter()
                .any(|e| e.list_id == list_id && e.name == name)
            {
                return Err(LibraryError::DuplicateName { name, list: list_id.as_str().into() });
            }
            match smarts::parse_pattern(cols[1]) {
                Ok(mut pattern) => {
                    pattern.name = name.clone();
                    lib.entries.push(LibraryEntry { name, pattern, list_id, seen });
                }
                Err(e) => {
                    log::warn!("skipping pattern '{name}' (line {line}): {e}");
                    lib.skipped.push(SkippedEntry { line, name, reason: e.to_string() });
                }
            }
        }
        Ok(lib)
    }

    /// The library shipped with the crate.
    pub fn builtin() -> PatternLibrary {
        let lib = PatternLibrary::parse(include_str!("../data/patterns.tsv"), DEFAULT_PARTITION_SALT)
            .expect("builtin pattern library is well-formed");
        assert!(lib.skipped.is_empty(), "builtin pattern library must fully parse");
        lib
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&LibraryEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn list(&self, list_id: ListId) -> impl Iterator<Item = &LibraryEntry> {
        self.entries.iter().filter(move |e| e.list_id == list_id)
    }

    /// Reassigns the seen/unseen partition from a salted hash of each name.
    pub fn assign_partition(&mut self, salt: u64) {
        for entry in &mut self.entries {
            entry.seen = is_seen(&entry.name, salt);
        }
    }
}

/// Salted 80/20 split on the pattern name.
pub fn is_seen(name: &str, salt: u64) -> bool {
    let mut h = salt ^ 0x9e37_79b9_7f4a_7c15;
    for b in name.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100_0000_01b3);
        h ^= h >> 29;
    }
    h % 100 < 80
}

/// Per-pattern counts of symmetry-deduplicated matches (unique matched atom
/// sets) over the whole library.
pub fn count_fragments(graph: &MolecularGraph, library: &PatternLibrary) -> BTreeMap<String, usize> {
    library
        .entries
        .iter()
        .map(|e| (e.name.clone(), smarts::count_unique_matches(graph, &e.pattern)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    #[test]
    fn builtin_library_loads() {
        let lib = PatternLibrary::builtin();
        assert!(lib.len() >= 140, "expected a ~150-entry library, got {}", lib.len());
        for list in [ListId::Simple, ListId::MaccsLike, ListId::Fragment, ListId::Textbook] {
            let entries: Vec<_> = lib.list(list).collect();
            assert!(!entries.is_empty(), "{} list is empty", list.as_str());
            assert!(
                entries.iter().any(|e| e.seen) && entries.iter().any(|e| !e.seen),
                "{} list must have both seen and unseen entries",
                list.as_str()
            );
        }
    }

    #[test]
    fn fragment_counts() {
        let lib = PatternLibrary::builtin();
        let acetic = parse_smiles("CC(=O)O").unwrap();
        let counts = count_fragments(&acetic, &lib);
        assert_eq!(counts["fr_COO"], 1);

        let oxalic = parse_smiles("OC(=O)C(=O)O").unwrap();
        assert_eq!(count_fragments(&oxalic, &lib)["fr_COO"], 2);

        let benzene = parse_smiles("c1ccccc1").unwrap();
        assert_eq!(count_fragments(&benzene, &lib)["fr_COO"], 0);
    }

    #[test]
    fn beta_lactam_is_the_narrow_ring_form() {
        let lib = PatternLibrary::builtin();
        let entry = lib.get("fr_lactam").unwrap();
        // azetidin-2-one matches; a six-membered cyclic amide does not
        let beta = parse_smiles("O=C1CCN1").unwrap();
        assert!(smarts::has_substructure(&beta, &entry.pattern));
        let delta = parse_smiles("O=C1CCCCN1").unwrap();
        assert!(!smarts::has_substructure(&delta, &entry.pattern));
    }

    #[test]
    fn loader_skips_unsupported_entries() {
        let text = "good\tC\tsimple\nbad\t[C,N]\tsimple\n";
        let lib = PatternLibrary::parse(text, 1).unwrap();
        assert_eq!(lib.len(), 1);
        assert_eq!(lib.skipped.len(), 1);
        assert!(lib.skipped[0].reason.contains("OR-list"));
    }

    #[test]
    fn explicit_partition_column_is_honored() {
        let text = "a\tC\tsimple\tseen\nb\tN\tsimple\tunseen\n";
        let lib = PatternLibrary::parse(text, 1).unwrap();
        assert!(lib.get("a").unwrap().seen);
        assert!(!lib.get("b").unwrap().seen);
    }

    #[test]
    fn partition_is_roughly_80_20() {
        let names: Vec<String> = (0..1000).map(|i| format!("pattern_{i}")).collect();
        let seen = names.iter().filter(|n| is_seen(n, DEFAULT_PARTITION_SALT)).count();
        assert!((700..=900).contains(&seen), "seen fraction off: {seen}/1000");
    }
}
