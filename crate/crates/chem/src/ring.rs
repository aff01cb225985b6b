//! Smallest cycle basis via per-bond shortest-path cycles.
//!
//! Candidate cycles are the shortest cycle through each bond plus the
//! fundamental cycles of a BFS spanning forest (which guarantee the greedy
//! selection always reaches full rank). Candidates are taken shortest-first
//! under GF(2) independence over bond-incidence vectors, so the basis size is
//! exactly |bonds| - |atoms| + |components|.

use crate::graph::Bond;

type Adjacency = [Vec<(usize, usize)>];

pub(crate) fn smallest_cycle_basis(
    n_atoms: usize,
    bonds: &[Bond],
    adjacency: &Adjacency,
    n_components: usize,
) -> Vec<Vec<usize>> {
    if bonds.len() + n_components <= n_atoms {
        return Vec::new();
    }
    let rank_target = bonds.len() + n_components - n_atoms;

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for (bi, bond) in bonds.iter().enumerate() {
        if let Some(path) = shortest_path(bond.a, bond.b, adjacency, Some(bi)) {
            candidates.push(canonical_cycle(path));
        }
    }
    candidates.extend(
        fundamental_cycles(n_atoms, bonds, adjacency)
            .into_iter()
            .map(canonical_cycle),
    );
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    candidates.dedup();

    // Echelon rows keyed by pivot bit; a candidate is independent iff it does
    // not reduce to zero against them.
    let mut rows: std::collections::HashMap<usize, Vec<u64>> = std::collections::HashMap::new();
    let mut selected = Vec::new();
    let words = (bonds.len() + 63) / 64;
    for cycle in candidates {
        if selected.len() == rank_target {
            break;
        }
        let mut reduced = vec![0u64; words];
        for w in 0..cycle.len() {
            let u = cycle[w];
            let v = cycle[(w + 1) % cycle.len()];
            let bi = adjacency[u]
                .iter()
                .find(|&&(nb, _)| nb == v)
                .map(|&(_, bi)| bi)
                .expect("cycle edge exists");
            reduced[bi / 64] ^= 1 << (bi % 64);
        }
        while let Some(pivot) = leading_bit(&reduced) {
            match rows.get(&pivot) {
                Some(row) => {
                    for (r, w) in reduced.iter_mut().zip(row) {
                        *r ^= w;
                    }
                }
                None => {
                    rows.insert(pivot, reduced);
                    selected.push(cycle);
                    break;
                }
            }
        }
    }
    debug_assert_eq!(selected.len(), rank_target);
    selected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    selected
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

/// BFS shortest path from `from` to `to`, optionally skipping one bond.
/// Neighbors expand in ascending atom order so the result is deterministic.
fn shortest_path(
    from: usize,
    to: usize,
    adjacency: &Adjacency,
    skip_bond: Option<usize>,
) -> Option<Vec<usize>> {
    let n = adjacency.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    prev[from] = from;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        let mut nbrs: Vec<(usize, usize)> = adjacency[u].to_vec();
        nbrs.sort();
        for (v, bi) in nbrs {
            if Some(bi) == skip_bond || prev[v] != usize::MAX {
                continue;
            }
            prev[v] = u;
            queue.push_back(v);
        }
    }
    if prev[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Fundamental cycles of a BFS spanning forest: one per non-tree bond.
fn fundamental_cycles(n_atoms: usize, bonds: &[Bond], adjacency: &Adjacency) -> Vec<Vec<usize>> {
    let mut parent = vec![usize::MAX; n_atoms];
    let mut depth = vec![0usize; n_atoms];
    let mut visited = vec![false; n_atoms];
    let mut tree_bond = vec![false; bonds.len()];

    for start in 0..n_atoms {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        parent[start] = start;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let mut nbrs: Vec<(usize, usize)> = adjacency[u].to_vec();
            nbrs.sort();
            for (v, bi) in nbrs {
                if !visited[v] {
                    visited[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    tree_bond[bi] = true;
                    queue.push_back(v);
                }
            }
        }
    }

    let mut cycles = Vec::new();
    for (bi, bond) in bonds.iter().enumerate() {
        if tree_bond[bi] {
            continue;
        }
        let (mut a, mut b) = (bond.a, bond.b);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop(); // shared ancestor already in `left`
        right.reverse();
        left.extend(right);
        cycles.push(left);
    }
    cycles
}

/// Rotates/reflects a cycle to start at its smallest atom, taking the
/// direction with the smaller successor.
fn canonical_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{Atom, BondOrder, MolecularGraph};

    fn chain_with_bonds(n: usize, extra: &[(usize, usize)]) -> MolecularGraph {
        let atoms = vec![Atom::new(6); n];
        let mut bonds: Vec<(usize, usize, BondOrder)> =
            (1..n).map(|i| (i - 1, i, BondOrder::Single)).collect();
        bonds.extend(extra.iter().map(|&(a, b)| (a, b, BondOrder::Single)));
        MolecularGraph::from_parts(atoms, bonds, String::new(), vec![]).unwrap()
    }

    #[test]
    fn acyclic_has_no_rings() {
        let g = chain_with_bonds(4, &[]);
        assert!(g.rings().is_empty());
    }

    #[test]
    fn triangle() {
        let g = chain_with_bonds(3, &[(0, 2)]);
        assert_eq!(g.rings(), &[vec![0, 1, 2]]);
        assert!(g.bonds().iter().all(|b| b.in_ring));
    }

    #[test]
    fn fused_bicyclic_basis_size() {
        // naphthalene skeleton: 10 atoms, 11 bonds, 2 rings of size 6
        let atoms = vec![Atom::new(6); 10];
        let bonds = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (3, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 4),
        ];
        let g = MolecularGraph::from_parts(
            atoms,
            bonds.into_iter().map(|(a, b)| (a, b, BondOrder::Single)).collect(),
            String::new(),
            vec![],
        )
        .unwrap();
        assert_eq!(g.rings().len(), 2);
        assert!(g.rings().iter().all(|r| r.len() == 6));
    }

    #[test]
    fn spiro_and_bridged() {
        // bicyclo[1.1.1]pentane-ish: two triangles sharing one edge
        let g = chain_with_bonds(4, &[(0, 2), (1, 3)]);
        assert_eq!(g.rings().len(), 2);
        assert!(g.rings().iter().all(|r| r.len() == 3));
    }

    #[test]
    fn basis_size_matches_cyclomatic_number() {
        let g = chain_with_bonds(8, &[(0, 5), (2, 7), (1, 4)]);
        let expected = g.n_bonds() + g.n_components() - g.n_atoms();
        assert_eq!(g.rings().len(), expected);
    }
}
