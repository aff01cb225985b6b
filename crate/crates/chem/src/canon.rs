//! Canonical atom ranks by iterative neighborhood refinement.
//!
//! Initial invariants cover everything the SMILES writer can emit (element,
//! degree, charge, hydrogen count, aromaticity, isotope, chirality tag) so
//! that relabeled copies of a graph always canonicalize to the same string.
//! Ties that survive refinement are broken by picking the smallest original
//! index inside the lowest-ranked tie class, then re-refining.

use crate::graph::{Chirality, MolecularGraph};

/// Per-atom canonical ranks: a permutation of `0..n_atoms`.
pub fn canonical_ranks(graph: &MolecularGraph) -> Vec<usize> {
    let n = graph.n_atoms();
    if n == 0 {
        return Vec::new();
    }

    let initial: Vec<(u8, usize, i8, u8, bool, u16, u8)> = (0..n)
        .map(|i| {
            let a = graph.atom(i);
            let chirality = match a.chirality {
                Chirality::None => 0,
                Chirality::Clockwise => 1,
                Chirality::CounterClockwise => 2,
            };
            (
                a.element,
                graph.degree(i),
                a.formal_charge,
                graph.total_hydrogens(i),
                a.aromatic,
                a.isotope.unwrap_or(0),
                chirality,
            )
        })
        .collect();

    let mut ranks = dense_ranks(&initial);
    loop {
        ranks = refine(graph, ranks);
        let n_classes = ranks.iter().copied().max().unwrap() + 1;
        if n_classes == n {
            return ranks;
        }
        // Lowest-ranked tie class, smallest original index wins.
        let mut class_size = vec![0usize; n_classes];
        for &r in &ranks {
            class_size[r] += 1;
        }
        let tied_rank = (0..n_classes).find(|&r| class_size[r] > 1).unwrap();
        let chosen = (0..n).find(|&i| ranks[i] == tied_rank).unwrap();
        let seeded: Vec<usize> = (0..n).map(|i| ranks[i] * 2 + usize::from(i != chosen)).collect();
        ranks = dense_ranks(&seeded);
    }
}

fn refine(graph: &MolecularGraph, mut ranks: Vec<usize>) -> Vec<usize> {
    let n = graph.n_atoms();
    loop {
        let before = ranks.iter().copied().max().unwrap() + 1;
        let keys: Vec<(usize, Vec<(u64, usize)>)> = (0..n)
            .map(|i| {
                let mut nbrs: Vec<(u64, usize)> = graph
                    .neighbors(i)
                    .map(|(nb, bond)| (bond.order.code(), ranks[nb]))
                    .collect();
                nbrs.sort();
                (ranks[i], nbrs)
            })
            .collect();
        ranks = dense_ranks(&keys);
        let after = ranks.iter().copied().max().unwrap() + 1;
        if after == before {
            return ranks;
        }
    }
}

fn dense_ranks<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    #[test]
    fn ethanol_environments_distinct() {
        let g = parse_smiles("CCO").unwrap();
        let ranks = canonical_ranks(&g);
        let mut sorted = ranks.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2]);
    }

    #[test]
    fn ethane_symmetric_before_tie_break() {
        let g = parse_smiles("CC").unwrap();
        // both atoms share refined invariants; the final ranks come from the
        // index tie-break and stay a permutation
        let mut ranks = canonical_ranks(&g);
        ranks.sort();
        assert_eq!(ranks, vec![0, 1]);
    }

    #[test]
    fn ranks_are_always_a_permutation() {
        for smi in ["c1ccccc1", "CC(C)(C)C", "C1CC1C1CC1", "[Na+].[Cl-]", "N#Cc1ccccc1"] {
            let g = parse_smiles(smi).unwrap();
            let mut ranks = canonical_ranks(&g);
            ranks.sort();
            assert_eq!(ranks, (0..g.n_atoms()).collect::<Vec<_>>(), "{smi}");
        }
    }
}
