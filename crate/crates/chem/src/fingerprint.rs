//! Circular (Morgan/ECFP-style) fingerprints over the molecular graph.
//!
//! Environment identifiers start from per-atom invariants and are refined by
//! hashing the sorted `(bond order, neighbor id)` list at each radius.
//! Environments covering an atom set already emitted at a lower radius (or by
//! a lower-ranked center at the same radius) are suppressed, then surviving
//! identifiers fold into `id % n_bits`. Chirality is deliberately excluded
//! from the invariants; the fingerprint is non-chiral.

use std::collections::{BTreeMap, HashMap};

use crate::canon::canonical_ranks;
use crate::graph::MolecularGraph;

pub const DEFAULT_RADIUS: usize = 2;
pub const DEFAULT_N_BITS: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub n_bits: usize,
    /// Sorted, duplicate-free set-bit indices.
    pub set_bits: Vec<usize>,
    /// Per-bit provenance: which (center atom, radius) environments fed it.
    pub environment_log: Option<BTreeMap<usize, Vec<(usize, usize)>>>,
}

impl Fingerprint {
    pub fn contains(&self, bit: usize) -> bool {
        self.set_bits.binary_search(&bit).is_ok()
    }

    /// Dense 0/1 text form for debugging.
    pub fn to_dense_string(&self) -> String {
        let mut s = vec![b'0'; self.n_bits];
        for &b in &self.set_bits {
            s[b] = b'1';
        }
        String::from_utf8(s).unwrap()
    }

    /// f64 vector with 1.0 at set bits, for numeric consumers.
    pub fn to_dense_f64(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.n_bits];
        for &b in &self.set_bits {
            v[b] = 1.0;
        }
        v
    }
}

/// splitmix64 finalizer; the fixed mixing primitive behind every identifier.
fn mix64(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn hash_fields(fields: &[u64]) -> u64 {
    let mut h: u64 = 0x9e3779b97f4a7c15;
    for &f in fields {
        h = mix64(h ^ f).wrapping_add(0x9e3779b97f4a7c15);
    }
    mix64(h)
}

/// Radius-0 identifier: a deterministic function of (atomic number,
/// heavy-atom degree, total hydrogens, formal charge, in-ring, aromatic).
pub fn atom_invariant(graph: &MolecularGraph, atom: usize) -> u64 {
    let a = graph.atom(atom);
    hash_fields(&[
        a.element as u64,
        graph.heavy_degree(atom) as u64,
        graph.total_hydrogens(atom) as u64,
        a.formal_charge as i64 as u64,
        graph.atom_in_ring(atom) as u64,
        a.aromatic as u64,
    ])
}

pub fn morgan_fingerprint(graph: &MolecularGraph, radius: usize, n_bits: usize) -> Fingerprint {
    assert!(n_bits >= 1, "n_bits must be positive");
    let n = graph.n_atoms();
    let ranks = canonical_ranks(graph);

    let mut ids: Vec<u64> = (0..n).map(|i| atom_invariant(graph, i)).collect();
    let mut covered: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();

    // atoms in canonical-rank order; emission at each radius follows it
    let mut by_rank: Vec<usize> = (0..n).collect();
    by_rank.sort_by_key(|&i| ranks[i]);

    let mut seen_sets: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut set_bits: Vec<usize> = Vec::new();
    let mut log: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();

    for r in 0..=radius {
        if r > 0 {
            // refine identifiers and coverage in lockstep
            let mut next_ids = ids.clone();
            let mut next_covered = covered.clone();
            for i in 0..n {
                let mut nbrs: Vec<(u64, u64)> = graph
                    .neighbors(i)
                    .map(|(nb, bond)| (bond.order.code(), ids[nb]))
                    .collect();
                nbrs.sort();
                let mut fields = vec![ids[i]];
                for (code, id) in nbrs {
                    fields.push(code);
                    fields.push(id);
                }
                next_ids[i] = hash_fields(&fields);
                let mut cover = covered[i].clone();
                for (nb, _) in graph.neighbors(i) {
                    cover.extend_from_slice(&covered[nb]);
                }
                cover.sort_unstable();
                cover.dedup();
                next_covered[i] = cover;
            }
            ids = next_ids;
            covered = next_covered;
        }
        for &center in &by_rank {
            if seen_sets.insert(covered[center].clone(), ()).is_none() {
                let bit = (ids[center] % n_bits as u64) as usize;
                set_bits.push(bit);
                log.entry(bit).or_default().push((center, r));
            }
        }
    }

    set_bits.sort_unstable();
    set_bits.dedup();
    Fingerprint { n_bits, set_bits, environment_log: Some(log) }
}

/// The 2048-bit radius-2 fingerprint used throughout the pipeline.
pub fn default_fingerprint(graph: &MolecularGraph) -> Fingerprint {
    morgan_fingerprint(graph, DEFAULT_RADIUS, DEFAULT_N_BITS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    fn fp(s: &str) -> Fingerprint {
        default_fingerprint(&parse_smiles(s).unwrap())
    }

    #[test]
    fn methane_has_exactly_one_bit() {
        // one radius-0 environment; higher radii cover the same single-atom set
        assert_eq!(fp("C").set_bits.len(), 1);
    }

    #[test]
    fn ethane_has_exactly_two_bits() {
        // symmetric atoms share the radius-0 id; both radius-1 environments
        // cover {0,1}, so one survives
        assert_eq!(fp("CC").set_bits.len(), 2);
    }

    #[test]
    fn atom_order_does_not_matter() {
        assert_eq!(fp("CCO").set_bits, fp("OCC").set_bits);
        assert_eq!(fp("c1ccccc1C").set_bits, fp("Cc1ccccc1").set_bits);
    }

    #[test]
    fn invariants_separate_atoms() {
        let g = parse_smiles("CC").unwrap();
        assert_eq!(atom_invariant(&g, 0), atom_invariant(&g, 1));
        let g = parse_smiles("CO").unwrap();
        assert_ne!(atom_invariant(&g, 0), atom_invariant(&g, 1));
        let neutral = parse_smiles("C").unwrap();
        let anion = parse_smiles("[CH3-]").unwrap();
        assert_ne!(atom_invariant(&neutral, 0), atom_invariant(&anion, 0));
    }

    #[test]
    fn chirality_is_ignored() {
        assert_eq!(fp("C[C@H](N)C(=O)O").set_bits, fp("C[C@@H](N)C(=O)O").set_bits);
    }

    #[test]
    fn radius_bits_are_monotone() {
        for s in ["CCO", "c1ccccc1", "CC(=O)NC1CC1"] {
            let g = parse_smiles(s).unwrap();
            let small = morgan_fingerprint(&g, 1, 2048);
            let big = morgan_fingerprint(&g, 2, 2048);
            assert!(
                small.set_bits.iter().all(|b| big.contains(*b)),
                "radius-1 bits must survive at radius 2 for {s}"
            );
        }
    }

    #[test]
    fn popcount_bound() {
        for s in ["C", "CC", "c1ccccc1", "CC(=O)OC1=CC=CC=C1C(=O)O"] {
            let g = parse_smiles(s).unwrap();
            let f = morgan_fingerprint(&g, 2, 2048);
            assert!(f.set_bits.len() <= g.n_atoms() * 3);
        }
    }

    #[test]
    fn environment_log_counts_survivors() {
        let g = parse_smiles("C").unwrap();
        let f = morgan_fingerprint(&g, 2, 2048);
        let log = f.environment_log.as_ref().unwrap();
        assert_eq!(log.values().map(Vec::len).sum::<usize>(), 1);
    }
}
