//! Immutable molecular graph with perceived rings and implicit hydrogens.

use crate::element;
use crate::ring;

/// Tetrahedral chirality tag as written in the input (`@` / `@@`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Chirality {
    #[default]
    None,
    /// `@@`
    Clockwise,
    /// `@`
    CounterClockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BondOrder {
    Single,
    Double,
    Triple,
    Aromatic,
}

impl BondOrder {
    /// Contribution to the valence bond-order sum; aromatic counts 1.5 and the
    /// total is floored after summation.
    pub fn valence_contribution(self) -> f64 {
        match self {
            BondOrder::Single => 1.0,
            BondOrder::Double => 2.0,
            BondOrder::Triple => 3.0,
            BondOrder::Aromatic => 1.5,
        }
    }

    /// Stable small integer used in hashing and sort keys.
    pub fn code(self) -> u64 {
        match self {
            BondOrder::Single => 1,
            BondOrder::Double => 2,
            BondOrder::Triple => 3,
            BondOrder::Aromatic => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    /// Atomic number, 1-118.
    pub element: u8,
    pub formal_charge: i8,
    pub isotope: Option<u16>,
    /// Hydrogen count given in a bracket atom; `None` for organic-subset atoms,
    /// which get their hydrogens from the valence model.
    pub explicit_h: Option<u8>,
    pub aromatic: bool,
    pub chirality: Chirality,
}

impl Atom {
    pub fn new(element: u8) -> Self {
        Atom {
            element,
            formal_charge: 0,
            isotope: None,
            explicit_h: None,
            aromatic: false,
            chirality: Chirality::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub order: BondOrder,
    pub in_ring: bool,
}

impl Bond {
    pub fn other(&self, atom: usize) -> usize {
        if self.a == atom {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A diagnostic tied to a position in the source text (or the atom index for
/// post-parse checks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub position: usize,
    pub message: String,
    pub severity: Severity,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("bond endpoint {0} out of range")]
    BadEndpoint(usize),
    #[error("bond endpoints must be distinct (atom {0})")]
    SelfBond(usize),
    #[error("duplicate bond between atoms {0} and {1}")]
    DuplicateBond(usize, usize),
}

/// Parsed molecule: atoms, bonds, adjacency, smallest cycle basis, implicit
/// hydrogens. Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct MolecularGraph {
    atoms: Vec<Atom>,
    bonds: Vec<Bond>,
    adjacency: Vec<Vec<(usize, usize)>>, // (neighbor atom, bond index)
    rings: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    n_components: usize,
    implicit_h: Vec<u8>,
    source: String,
    warnings: Vec<Diagnostic>,
}

impl MolecularGraph {
    /// Builds a graph from atoms and bonds, perceiving rings and implicit
    /// hydrogens. `warnings` collects valence-overflow and parser warnings.
    pub fn from_parts(
        atoms: Vec<Atom>,
        bond_list: Vec<(usize, usize, BondOrder)>,
        source: String,
        mut warnings: Vec<Diagnostic>,
    ) -> Result<Self, GraphError> {
        let n = atoms.len();
        let mut bonds = Vec::with_capacity(bond_list.len());
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (a, b, order) in bond_list {
            if a >= n {
                return Err(GraphError::BadEndpoint(a));
            }
            if b >= n {
                return Err(GraphError::BadEndpoint(b));
            }
            if a == b {
                return Err(GraphError::SelfBond(a));
            }
            if adjacency[a].iter().any(|&(nb, _)| nb == b) {
                return Err(GraphError::DuplicateBond(a, b));
            }
            let idx = bonds.len();
            bonds.push(Bond { a, b, order, in_ring: false });
            adjacency[a].push((b, idx));
            adjacency[b].push((a, idx));
        }

        let (component_of, n_components) = components(n, &adjacency);
        let rings = ring::smallest_cycle_basis(n, &bonds, &adjacency, n_components);
        for cycle in &rings {
            for w in 0..cycle.len() {
                let u = cycle[w];
                let v = cycle[(w + 1) % cycle.len()];
                let idx = adjacency[u]
                    .iter()
                    .find(|&&(nb, _)| nb == v)
                    .map(|&(_, bi)| bi)
                    .expect("ring edge must exist");
                bonds[idx].in_ring = true;
            }
        }

        let mut implicit_h = vec![0u8; n];
        for (i, atom) in atoms.iter().enumerate() {
            implicit_h[i] = match atom.explicit_h {
                Some(h) => h,
                None => {
                    let sum: f64 = adjacency[i]
                        .iter()
                        .map(|&(_, bi)| bonds[bi].order.valence_contribution())
                        .sum();
                    let sum = sum.floor() as u8;
                    let valences = element::standard_valences(atom.element);
                    match valences.iter().find(|&&v| v >= sum) {
                        Some(&v) => v - sum,
                        None => {
                            warnings.push(Diagnostic {
                                position: i,
                                message: format!(
                                    "valence overflow on atom {} ({}): bond-order sum {}",
                                    i,
                                    element::symbol(atom.element).unwrap_or("?"),
                                    sum
                                ),
                                severity: Severity::Warning,
                            });
                            0
                        }
                    }
                }
            };
        }

        Ok(MolecularGraph {
            atoms,
            bonds,
            adjacency,
            rings,
            component_of,
            n_components,
            implicit_h,
            source,
            warnings,
        })
    }

    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn n_bonds(&self) -> usize {
        self.bonds.len()
    }

    pub fn atom(&self, i: usize) -> &Atom {
        &self.atoms[i]
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn bond(&self, i: usize) -> &Bond {
        &self.bonds[i]
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    /// Neighbors of an atom as `(neighbor index, bond)` pairs, in insertion order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, &Bond)> + '_ {
        self.adjacency[i].iter().map(move |&(nb, bi)| (nb, &self.bonds[bi]))
    }

    pub fn bond_between(&self, a: usize, b: usize) -> Option<&Bond> {
        self.adjacency[a]
            .iter()
            .find(|&&(nb, _)| nb == b)
            .map(|&(_, bi)| &self.bonds[bi])
    }

    /// Number of graph neighbors (explicit atoms only).
    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// Neighbors that are not hydrogen atoms.
    pub fn heavy_degree(&self, i: usize) -> usize {
        self.adjacency[i]
            .iter()
            .filter(|&&(nb, _)| self.atoms[nb].element != 1)
            .count()
    }

    /// Implicit hydrogen count under the valence model (bracket atoms report
    /// their declared count).
    pub fn implicit_hydrogens(&self, i: usize) -> u8 {
        self.implicit_h[i]
    }

    /// Implicit hydrogens plus explicit hydrogen neighbor atoms.
    pub fn total_hydrogens(&self, i: usize) -> u8 {
        let explicit = self
            .adjacency[i]
            .iter()
            .filter(|&&(nb, _)| self.atoms[nb].element == 1)
            .count() as u8;
        self.implicit_h[i] + explicit
    }

    /// Smallest-cycle-basis rings as atom-index cycles.
    pub fn rings(&self) -> &[Vec<usize>] {
        &self.rings
    }

    pub fn atom_in_ring(&self, i: usize) -> bool {
        self.adjacency[i].iter().any(|&(_, bi)| self.bonds[bi].in_ring)
    }

    /// True if the atom sits in a basis ring of the given size.
    pub fn in_ring_of_size(&self, i: usize, size: usize) -> bool {
        self.rings.iter().any(|r| r.len() == size && r.contains(&i))
    }

    pub fn n_components(&self) -> usize {
        self.n_components
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }

    pub fn source_text(&self) -> &str {
        &self.source
    }

    pub fn warnings(&self) -> &[Diagnostic] {
        &self.warnings
    }

    /// Copy of the graph with atoms relabeled: atom `i` becomes `perm[i]`.
    /// `perm` must be a permutation of `0..n_atoms`.
    pub fn permuted(&self, perm: &[usize]) -> MolecularGraph {
        assert_eq!(perm.len(), self.atoms.len());
        let mut atoms = vec![Atom::new(0); self.atoms.len()];
        for (i, atom) in self.atoms.iter().enumerate() {
            atoms[perm[i]] = atom.clone();
        }
        let mut bond_list: Vec<(usize, usize, BondOrder)> = self
            .bonds
            .iter()
            .map(|b| (perm[b.a].min(perm[b.b]), perm[b.a].max(perm[b.b]), b.order))
            .collect();
        bond_list.sort();
        MolecularGraph::from_parts(atoms, bond_list, String::new(), Vec::new())
            .expect("permutation preserves validity")
    }
}

fn components(n: usize, adjacency: &[Vec<(usize, usize)>]) -> (Vec<usize>, usize) {
    let mut component_of = vec![usize::MAX; n];
    let mut n_components = 0;
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component_of[start] = n_components;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adjacency[u] {
                if component_of[v] == usize::MAX {
                    component_of[v] = n_components;
                    stack.push(v);
                }
            }
        }
        n_components += 1;
    }
    (component_of, n_components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carbon() -> Atom {
        Atom::new(6)
    }

    #[test]
    fn methane_hydrogens() {
        let g = MolecularGraph::from_parts(vec![carbon()], vec![], "C".into(), vec![]).unwrap();
        assert_eq!(g.implicit_hydrogens(0), 4);
        assert_eq!(g.total_hydrogens(0), 4);
    }

    #[test]
    fn duplicate_bond_rejected() {
        let err = MolecularGraph::from_parts(
            vec![carbon(), carbon()],
            vec![(0, 1, BondOrder::Single), (1, 0, BondOrder::Double)],
            String::new(),
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, GraphError::DuplicateBond(1, 0));
    }

    #[test]
    fn valence_overflow_warns() {
        // carbon with five single bonds
        let atoms = vec![carbon(), carbon(), carbon(), carbon(), carbon(), carbon()];
        let bonds = (1..6).map(|i| (0, i, BondOrder::Single)).collect();
        let g = MolecularGraph::from_parts(atoms, bonds, String::new(), vec![]).unwrap();
        assert_eq!(g.implicit_hydrogens(0), 0);
        assert!(g.warnings().iter().any(|d| d.severity == Severity::Warning));
    }

    #[test]
    fn component_counting() {
        let atoms = vec![carbon(), carbon(), carbon()];
        let g = MolecularGraph::from_parts(
            atoms,
            vec![(0, 1, BondOrder::Single)],
            String::new(),
            vec![],
        )
        .unwrap();
        assert_eq!(g.n_components(), 2);
        assert_eq!(g.component_of(0), g.component_of(1));
        assert_ne!(g.component_of(0), g.component_of(2));
    }
}
