//! Numeric molecular descriptors: the named panel (MolWt, TPSA, MolLogP,
//! hydrogen-bond counts, ...) plus fr_* fragment counts delegated to the
//! pattern library.

mod crippen;
mod tpsa;

use std::collections::BTreeMap;

use crate::element;
use crate::fragments::PatternLibrary;
use crate::graph::{BondOrder, Chirality, MolecularGraph};
use crate::smarts;

pub use crippen::{crippen_logp, crippen_logp_with_diagnostics};
pub use tpsa::tpsa;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescriptorKind {
    Integer,
    Real,
}

#[derive(Debug, Clone)]
pub struct DescriptorSpec {
    pub name: &'static str,
    pub kind: DescriptorKind,
    pub units: &'static str,
}

/// The implemented named descriptors, in canonical order.
pub const NAMED_DESCRIPTORS: &[DescriptorSpec] = &[
    DescriptorSpec { name: "MolWt", kind: DescriptorKind::Real, units: "g/mol" },
    DescriptorSpec { name: "HeavyAtomCount", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "NumHDonors", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "NumHAcceptors", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "TPSA", kind: DescriptorKind::Real, units: "A^2" },
    DescriptorSpec { name: "MolLogP", kind: DescriptorKind::Real, units: "" },
    DescriptorSpec { name: "NumRotatableBonds", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "RingCount", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "NumAromaticRings", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "FractionCSP3", kind: DescriptorKind::Real, units: "" },
    DescriptorSpec { name: "NumHeteroatoms", kind: DescriptorKind::Integer, units: "" },
    DescriptorSpec { name: "NumAtomStereoCenters", kind: DescriptorKind::Integer, units: "" },
];

/// Kind of a descriptor name, covering fr_* fragment counts.
pub fn descriptor_kind(name: &str) -> Option<DescriptorKind> {
    if name.starts_with("fr_") {
        return Some(DescriptorKind::Integer);
    }
    NAMED_DESCRIPTORS.iter().find(|s| s.name == name).map(|s| s.kind)
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum DescriptorError {
    #[error("unknown descriptor '{name}'; valid names: {valid}")]
    UnknownName { name: String, valid: String },
    #[error("fragment descriptor '{0}' requires a pattern library")]
    MissingLibrary(String),
}

/// Computed values for one molecule, keyed by descriptor name.
#[derive(Debug, Clone, PartialEq)]
pub struct DescriptorVector {
    pub values: BTreeMap<String, f64>,
    /// Canonical SMILES of the molecule the values belong to.
    pub molecule: String,
}

impl DescriptorVector {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.values.get(name).copied()
    }
}

pub fn mol_weight(graph: &MolecularGraph) -> f64 {
    let mut total = 0.0;
    let h_mass = element::atomic_mass(1).unwrap();
    for i in 0..graph.n_atoms() {
        let atom = graph.atom(i);
        total += match atom.isotope {
            Some(a) => element::isotope_mass(atom.element, a),
            None => element::atomic_mass(atom.element).unwrap_or(0.0),
        };
        total += graph.implicit_hydrogens(i) as f64 * h_mass;
    }
    total
}

pub fn heavy_atom_count(graph: &MolecularGraph) -> usize {
    graph.atoms().iter().filter(|a| a.element != 1).count()
}

/// Lipinski-style donors and acceptors: donors are N/O bearing a hydrogen;
/// acceptors are all N/O except pyrrole-type aromatic N-H.
pub fn h_bond_counts(graph: &MolecularGraph) -> (usize, usize) {
    let mut donors = 0;
    let mut acceptors = 0;
    for i in 0..graph.n_atoms() {
        let atom = graph.atom(i);
        if !matches!(atom.element, 7 | 8) {
            continue;
        }
        let h = graph.total_hydrogens(i);
        if h >= 1 {
            donors += 1;
        }
        let pyrrole_like = atom.element == 7 && atom.aromatic && h >= 1;
        if !pyrrole_like {
            acceptors += 1;
        }
    }
    (donors, acceptors)
}

/// Non-ring single bonds between heavy atoms of heavy-degree >= 2, excluding
/// amide C-N bonds.
pub fn rotatable_bonds(graph: &MolecularGraph) -> usize {
    graph
        .bonds()
        .iter()
        .filter(|b| {
            b.order == BondOrder::Single
                && !b.in_ring
                && graph.atom(b.a).element != 1
                && graph.atom(b.b).element != 1
                && graph.heavy_degree(b.a) >= 2
                && graph.heavy_degree(b.b) >= 2
                && !is_amide_cn(graph, b.a, b.b)
                && !is_amide_cn(graph, b.b, b.a)
        })
        .count()
}

fn is_amide_cn(graph: &MolecularGraph, c: usize, n: usize) -> bool {
    graph.atom(c).element == 6
        && graph.atom(n).element == 7
        && graph.neighbors(c).any(|(nb, bond)| {
            graph.atom(nb).element == 8 && bond.order == BondOrder::Double
        })
}

/// Atoms carrying an explicit chirality tag in the input.
pub fn stereo_centers(graph: &MolecularGraph) -> usize {
    graph.atoms().iter().filter(|a| a.chirality != Chirality::None).count()
}

pub fn ring_count(graph: &MolecularGraph) -> usize {
    graph.rings().len()
}

/// Basis rings whose atoms are all aromatic and whose bonds are all aromatic.
pub fn num_aromatic_rings(graph: &MolecularGraph) -> usize {
    graph
        .rings()
        .iter()
        .filter(|ring| {
            ring.iter().all(|&i| graph.atom(i).aromatic)
                && (0..ring.len()).all(|k| {
                    let u = ring[k];
                    let v = ring[(k + 1) % ring.len()];
                    graph.bond_between(u, v).map(|b| b.order) == Some(BondOrder::Aromatic)
                })
        })
        .count()
}

pub fn fraction_csp3(graph: &MolecularGraph) -> f64 {
    let carbons: Vec<usize> = (0..graph.n_atoms())
        .filter(|&i| graph.atom(i).element == 6)
        .collect();
    if carbons.is_empty() {
        return 0.0;
    }
    let sp3 = carbons
        .iter()
        .filter(|&&i| {
            !graph.atom(i).aromatic
                && graph.neighbors(i).all(|(_, b)| b.order == BondOrder::Single)
        })
        .count();
    sp3 as f64 / carbons.len() as f64
}

pub fn num_heteroatoms(graph: &MolecularGraph) -> usize {
    graph.atoms().iter().filter(|a| !matches!(a.element, 1 | 6)).count()
}

fn named_value(graph: &MolecularGraph, name: &str) -> Option<f64> {
    Some(match name {
        "MolWt" => mol_weight(graph),
        "HeavyAtomCount" => heavy_atom_count(graph) as f64,
        "NumHDonors" => h_bond_counts(graph).0 as f64,
        "NumHAcceptors" => h_bond_counts(graph).1 as f64,
        "TPSA" => tpsa(graph),
        "MolLogP" => crippen_logp(graph),
        "NumRotatableBonds" => rotatable_bonds(graph) as f64,
        "RingCount" => ring_count(graph) as f64,
        "NumAromaticRings" => num_aromatic_rings(graph) as f64,
        "FractionCSP3" => fraction_csp3(graph),
        "NumHeteroatoms" => num_heteroatoms(graph) as f64,
        "NumAtomStereoCenters" => stereo_centers(graph) as f64,
        _ => return None,
    })
}

/// One entry per requested name; deterministic and independent of atom order.
/// fr_* names are delegated to the pattern library.
pub fn compute_descriptors(
    graph: &MolecularGraph,
    names: &[String],
    library: Option<&PatternLibrary>,
) -> Result<DescriptorVector, DescriptorError> {
    let mut values = BTreeMap::new();
    for name in names {
        if let Some(v) = named_value(graph, name) {
            values.insert(name.clone(), v);
            continue;
        }
        if name.starts_with("fr_") {
            let lib = library.ok_or_else(|| DescriptorError::MissingLibrary(name.clone()))?;
            match lib.get(name) {
                Some(entry) => {
                    let count = smarts::count_unique_matches(graph, &entry.pattern);
                    values.insert(name.clone(), count as f64);
                    continue;
                }
                None => {
                    return Err(DescriptorError::UnknownName {
                        name: name.clone(),
                        valid: valid_names(library),
                    });
                }
            }
        }
        return Err(DescriptorError::UnknownName { name: name.clone(), valid: valid_names(library) });
    }
    Ok(DescriptorVector { values, molecule: crate::writer::write_smiles(graph) })
}

fn valid_names(library: Option<&PatternLibrary>) -> String {
    let mut names: Vec<String> =
        NAMED_DESCRIPTORS.iter().map(|s| s.name.to_string()).collect();
    if let Some(lib) = library {
        names.extend(
            lib.entries
                .iter()
                .filter(|e| e.name.starts_with("fr_"))
                .map(|e| e.name.clone()),
        );
    }
    names.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    fn g(s: &str) -> MolecularGraph {
        parse_smiles(s).unwrap()
    }

    #[test]
    fn mol_weight_goldens() {
        assert!((mol_weight(&g("C")) - 16.043).abs() < 1e-3);
        assert!((mol_weight(&g("O")) - 18.015).abs() < 1e-3);
        assert!((mol_weight(&g("[2H]O[2H]")) - 20.028).abs() < 1e-3);
    }

    #[test]
    fn heavy_atoms_and_heteroatoms() {
        assert_eq!(heavy_atom_count(&g("CCO")), 3);
        assert_eq!(heavy_atom_count(&g("[H]O[H]")), 1);
        assert_eq!(num_heteroatoms(&g("CCO")), 1);
        assert_eq!(num_heteroatoms(&g("c1ccncc1S")), 2);
    }

    #[test]
    fn alanine_donors_acceptors() {
        let (d, a) = h_bond_counts(&g("CC(N)C(=O)O"));
        assert_eq!((d, a), (2, 3));
    }

    #[test]
    fn pyrrole_nitrogen_is_donor_not_acceptor() {
        let (d, a) = h_bond_counts(&g("[nH]1cccc1"));
        assert_eq!((d, a), (1, 0));
        // pyridine N accepts, does not donate
        let (d, a) = h_bond_counts(&g("n1ccccc1"));
        assert_eq!((d, a), (0, 1));
    }

    #[test]
    fn rotatable_bond_goldens() {
        assert_eq!(rotatable_bonds(&g("CCCC")), 1);
        assert_eq!(rotatable_bonds(&g("C1CCCCC1")), 0);
        assert_eq!(rotatable_bonds(&g("CC(=O)NC")), 0);
        assert_eq!(rotatable_bonds(&g("CCOCC")), 2);
    }

    #[test]
    fn stereo_center_counting_is_syntactic() {
        assert_eq!(stereo_centers(&g("C[C@H](N)C(=O)O")), 1);
        assert_eq!(stereo_centers(&g("CC(N)C(=O)O")), 0);
        assert_eq!(stereo_centers(&g("CCO")), 0);
    }

    #[test]
    fn ring_descriptors() {
        let benzene = g("c1ccccc1");
        assert_eq!(ring_count(&benzene), 1);
        assert_eq!(num_aromatic_rings(&benzene), 1);
        let cyclohexane = g("C1CCCCC1");
        assert_eq!(ring_count(&cyclohexane), 1);
        assert_eq!(num_aromatic_rings(&cyclohexane), 0);
        let naphthalene = g("c1ccc2ccccc2c1");
        assert_eq!(ring_count(&naphthalene), 2);
        assert_eq!(num_aromatic_rings(&naphthalene), 2);
    }

    #[test]
    fn csp3_fraction() {
        assert_eq!(fraction_csp3(&g("CCCC")), 1.0);
        assert_eq!(fraction_csp3(&g("c1ccccc1")), 0.0);
        assert!((fraction_csp3(&g("Cc1ccccc1")) - 1.0 / 7.0).abs() < 1e-12);
        assert_eq!(fraction_csp3(&g("O")), 0.0);
    }

    #[test]
    fn compute_rejects_unknown_names() {
        let err = compute_descriptors(&g("C"), &["NoSuchThing".into()], None).unwrap_err();
        assert!(err.to_string().contains("MolWt"));
    }

    #[test]
    fn fr_counts_match_fragment_module() {
        let lib = crate::fragments::PatternLibrary::builtin();
        let acid = g("CC(=O)O");
        let vec = compute_descriptors(&acid, &["fr_COO".into()], Some(&lib)).unwrap();
        assert_eq!(vec.get("fr_COO"), Some(1.0));
        let counts = crate::fragments::count_fragments(&acid, &lib);
        assert_eq!(counts["fr_COO"] as f64, vec.get("fr_COO").unwrap());
    }

    #[test]
    fn additivity_over_fragments() {
        for (a, b) in [("CCO", "CN"), ("c1ccccc1", "CC(=O)O")] {
            let combined = format!("{a}.{b}");
            let whole = g(&combined);
            let ga = g(a);
            let gb = g(b);
            assert!((mol_weight(&whole) - mol_weight(&ga) - mol_weight(&gb)).abs() < 1e-9);
            assert!((tpsa(&whole) - tpsa(&ga) - tpsa(&gb)).abs() < 1e-9);
            assert!(
                (crippen_logp(&whole) - crippen_logp(&ga) - crippen_logp(&gb)).abs() < 1e-9
            );
        }
    }
}
