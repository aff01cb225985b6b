//! Exhaustive graph-isomorphism check for small molecules.
//!
//! Compares element, charge, isotope, aromaticity, chirality tag, and total
//! hydrogen count per atom, and bond orders per edge. Backtracking with
//! invariant pruning; intended for graphs up to a few dozen atoms (it is the
//! round-trip oracle, not a production matcher).

use crate::graph::MolecularGraph;

type AtomKey = (u8, i8, u16, bool, u8, u8);

fn atom_key(g: &MolecularGraph, i: usize) -> AtomKey {
    let a = g.atom(i);
    (
        a.element,
        a.formal_charge,
        a.isotope.unwrap_or(0),
        a.aromatic,
        a.chirality as u8,
        g.total_hydrogens(i),
    )
}

/// True iff the two graphs are isomorphic as labeled molecular graphs.
pub fn isomorphic(a: &MolecularGraph, b: &MolecularGraph) -> bool {
    if a.n_atoms() != b.n_atoms() || a.n_bonds() != b.n_bonds() {
        return false;
    }
    let n = a.n_atoms();
    if n == 0 {
        return true;
    }

    let mut keys_a: Vec<AtomKey> = (0..n).map(|i| atom_key(a, i)).collect();
    let mut keys_b: Vec<AtomKey> = (0..n).map(|i| atom_key(b, i)).collect();
    keys_a.sort();
    keys_b.sort();
    if keys_a != keys_b {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|i| a.degree(i)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|i| b.degree(i)).collect();
    deg_a.sort();
    deg_b.sort();
    if deg_a != deg_b {
        return false;
    }

    // order atoms of `a` so each one (after the first per component) touches
    // an already-mapped atom, which keeps the search tree narrow
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = match (0..n).find(|&i| {
            !placed[i] && a.neighbors(i).any(|(nb, _)| placed[nb])
        }) {
            Some(i) => i,
            None => (0..n)
                .filter(|&i| !placed[i])
                .max_by_key(|&i| a.degree(i))
                .unwrap(),
        };
        placed[next] = true;
        order.push(next);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(a, b, &order, 0, &mut mapping, &mut used)
}

fn search(
    a: &MolecularGraph,
    b: &MolecularGraph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let ai = order[depth];
    let key = atom_key(a, ai);
    for bi in 0..b.n_atoms() {
        if used[bi] || atom_key(b, bi) != key || a.degree(ai) != b.degree(bi) {
            continue;
        }
        let consistent = a.neighbors(ai).all(|(nb, bond)| {
            let mapped = mapping[nb];
            if mapped == usize::MAX {
                return true;
            }
            b.bond_between(bi, mapped).map(|bb| bb.order) == Some(bond.order)
        });
        if !consistent {
            continue;
        }
        mapping[ai] = bi;
        used[bi] = true;
        if search(a, b, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[ai] = usize::MAX;
        used[bi] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    fn iso(x: &str, y: &str) -> bool {
        isomorphic(&parse_smiles(x).unwrap(), &parse_smiles(y).unwrap())
    }

    #[test]
    fn same_molecule_different_writing() {
        assert!(iso("CCO", "OCC"));
        assert!(iso("C(C)(C)C", "CC(C)C"));
        assert!(iso("c1ccccc1", "c1ccccc1"));
    }

    #[test]
    fn different_molecules() {
        assert!(!iso("CCO", "CCN"));
        assert!(!iso("CCO", "CC=O"));
        assert!(!iso("C1CC1", "CCC"));
        assert!(!iso("[13CH4]", "C"));
        assert!(!iso("[NH4+]", "N"));
        assert!(!iso("C[C@H](N)O", "C[C@@H](N)O"));
    }

    #[test]
    fn hydrogen_counts_matter() {
        assert!(!iso("[CH2]", "C"));
        assert!(iso("[CH4]", "C"));
    }
}
