//! Wildman-Crippen logP: atom-type assignment plus table lookup.
//!
//! Types follow the published scheme; atoms no specific rule claims fall to
//! the scheme's catch-all types (CS/NS/OS/HS/Me) and are reported back to the
//! caller as diagnostics.

use std::collections::HashMap;

use once_cell::sync::Lazy;

use crate::graph::{BondOrder, MolecularGraph};

static TABLE: Lazy<HashMap<&'static str, f64>> = Lazy::new(|| {
    let mut table = HashMap::new();
    for line in include_str!("../../data/crippen.tsv").lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let name = cols.next().unwrap();
        let value: f64 = cols.next().unwrap().parse().expect("crippen.tsv: value");
        assert!(table.insert(name, value).is_none(), "crippen.tsv: duplicate {name}");
    }
    // every type the assignment logic can emit must be priced
    for required in [
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13",
        "C14", "C15", "C16", "C17", "C18", "C19", "C20", "C21", "C22", "C23", "C24", "C25",
        "C26", "C27", "CS", "H1", "H2", "H3", "H4", "HS", "N1", "N2", "N3", "N4", "N5",
        "N6", "N7", "N8", "N9", "N10", "N11", "N12", "N13", "N14", "NS", "O1", "O2", "O3",
        "O4", "O5", "O6", "O7", "O8", "O9", "O10", "O11", "O12", "OS", "F", "Cl", "Br",
        "I", "Hal", "P", "S1", "S2", "S3", "Me",
    ] {
        assert!(table.contains_key(required), "crippen.tsv missing type {required}");
    }
    table
});

pub fn contribution(type_name: &str) -> f64 {
    TABLE[type_name]
}

struct AtomView<'a> {
    graph: &'a MolecularGraph,
    i: usize,
}

impl<'a> AtomView<'a> {
    fn z(&self) -> u8 {
        self.graph.atom(self.i).element
    }
    fn aromatic(&self) -> bool {
        self.graph.atom(self.i).aromatic
    }
    fn charge(&self) -> i8 {
        self.graph.atom(self.i).formal_charge
    }
    fn h(&self) -> u8 {
        self.graph.total_hydrogens(self.i)
    }
    fn bond_count(&self, order: BondOrder) -> usize {
        self.graph.neighbors(self.i).filter(|(_, b)| b.order == order).count()
    }
    fn sp3(&self) -> bool {
        !self.aromatic()
            && self
                .graph
                .neighbors(self.i)
                .all(|(_, b)| b.order == BondOrder::Single)
    }
    fn neighbors(&self) -> impl Iterator<Item = (usize, &'a crate::graph::Bond)> + '_ {
        self.graph.neighbors(self.i)
    }
    fn has_neighbor(&self, pred: impl Fn(u8, bool) -> bool) -> bool {
        self.neighbors().any(|(nb, _)| {
            let a = self.graph.atom(nb);
            pred(a.element, a.aromatic)
        })
    }
    fn double_partner(&self) -> Option<usize> {
        self.neighbors()
            .find(|(_, b)| b.order == BondOrder::Double)
            .map(|(nb, _)| nb)
    }
}

const HETERO: [u8; 8] = [7, 8, 15, 16, 9, 17, 35, 53];

fn is_exotic(z: u8) -> bool {
    z != 1 && z != 6 && !HETERO.contains(&z)
}

/// The Wildman-Crippen type of one heavy atom.
pub fn atom_type(graph: &MolecularGraph, i: usize) -> &'static str {
    let v = AtomView { graph, i };
    match v.z() {
        6 => carbon_type(&v),
        7 => nitrogen_type(&v),
        8 => oxygen_type(&v),
        9 => halogen_type(&v, "F"),
        17 => halogen_type(&v, "Cl"),
        35 => halogen_type(&v, "Br"),
        53 => halogen_type(&v, "I"),
        15 => "P",
        16 => {
            if v.aromatic() {
                "S3"
            } else if v.charge() != 0 {
                "S2"
            } else {
                "S1"
            }
        }
        1 => "HS",
        _ => "Me",
    }
}

fn halogen_type(v: &AtomView, neutral: &'static str) -> &'static str {
    if v.charge() == 0 {
        neutral
    } else {
        "Hal"
    }
}

fn carbon_type(v: &AtomView) -> &'static str {
    if v.aromatic() {
        // substituents on the aromatic carbon decide the type
        let non_aromatic_nbrs: Vec<(u8, bool, BondOrder)> = v
            .neighbors()
            .filter(|(_, b)| b.order != BondOrder::Aromatic)
            .map(|(nb, b)| {
                let a = v.graph.atom(nb);
                (a.element, a.aromatic, b.order)
            })
            .collect();
        if v.bond_count(BondOrder::Aromatic) >= 3 {
            return "C19";
        }
        if non_aromatic_nbrs.is_empty() {
            return "C18"; // ring CH (or bare ring atom)
        }
        let (z, aromatic_nbr, order) = non_aromatic_nbrs[0];
        return match (z, order) {
            (_, BondOrder::Double) if matches!(z, 6 | 7 | 8) => "C25",
            (9, _) => "C14",
            (17, _) => "C15",
            (35, _) => "C16",
            (53, _) => "C17",
            (6, _) if aromatic_nbr => "C20",
            (6, _) => "C21",
            (7, _) if aromatic_nbr => "C20",
            (7, _) => "C22",
            (8, _) => "C23",
            (16, _) => "C24",
            (1, _) => "C18",
            _ => "C13",
        };
    }

    let doubles = v.bond_count(BondOrder::Double);
    let triples = v.bond_count(BondOrder::Triple);
    if triples > 0 {
        return "C7";
    }
    if doubles > 0 {
        if let Some(partner) = v.double_partner() {
            let p = v.graph.atom(partner);
            if p.element != 6 && !p.aromatic {
                return "C5"; // C=N, C=O, C=S carbon
            }
            if p.aromatic {
                return "C26"; // exocyclic =c
            }
        }
        // vinylic: aromatic substituent bumps it to C26
        let has_aromatic_sub = v.has_neighbor(|_, ar| ar);
        return if has_aromatic_sub { "C26" } else { "C6" };
    }

    // sp3 carbon
    if v.has_neighbor(|z, _| is_exotic(z)) {
        return "C27";
    }
    let has_aromatic_nbr = v.has_neighbor(|_, ar| ar);
    if has_aromatic_nbr {
        let to_aromatic_carbon = v.neighbors().any(|(nb, _)| {
            let a = v.graph.atom(nb);
            a.aromatic && a.element == 6
        });
        return match v.h() {
            3 if to_aromatic_carbon => "C8",
            3 => "C9",
            2 => "C10",
            1 => "C11",
            _ => "C12",
        };
    }
    if v.has_neighbor(|z, _| HETERO.contains(&z)) {
        return if v.h() >= 2 { "C3" } else { "C4" };
    }
    if v.h() >= 2 {
        "C1"
    } else {
        "C2"
    }
}

fn nitrogen_type(v: &AtomView) -> &'static str {
    if v.aromatic() {
        return if v.charge() > 0 { "N12" } else { "N11" };
    }
    if v.charge() > 0 {
        if v.h() >= 1 {
            return "N10";
        }
        let all_single = v.sp3();
        return if all_single && v.graph.degree(v.i) == 4 { "N13" } else { "N14" };
    }
    if v.charge() < 0 {
        return "N14";
    }
    if v.bond_count(BondOrder::Triple) > 0 {
        return "N9";
    }
    if v.bond_count(BondOrder::Double) > 0 {
        return if v.h() >= 1 { "N5" } else { "N6" };
    }
    let aryl = v.has_neighbor(|_, ar| ar);
    match v.h() {
        h if h >= 2 => {
            if aryl {
                "N3"
            } else {
                "N1"
            }
        }
        1 => {
            if aryl {
                "N4"
            } else {
                "N2"
            }
        }
        _ => {
            if aryl {
                "N8"
            } else {
                "N7"
            }
        }
    }
}

fn oxygen_type(v: &AtomView) -> &'static str {
    if v.aromatic() {
        return "O1";
    }
    if v.charge() < 0 {
        if v.has_neighbor(|z, _| z == 7) {
            return "O5"; // nitro / N-oxide
        }
        if v.has_neighbor(|z, _| z == 16) {
            return "O6";
        }
        let carboxylate = v.neighbors().any(|(nb, _)| {
            v.graph.atom(nb).element == 6
                && v.graph.neighbors(nb).any(|(o2, b)| {
                    o2 != v.i && v.graph.atom(o2).element == 8 && b.order == BondOrder::Double
                })
        });
        return if carboxylate { "O12" } else { "O7" };
    }
    if v.h() >= 1 {
        return "O2"; // hydroxyl / water
    }
    if let Some(partner) = v.double_partner() {
        let p = v.graph.atom(partner);
        return match p.element {
            7 | 8 => "O5",
            16 => "O6",
            6 if p.aromatic => "O8",
            6 => {
                // classify the carbonyl by the carbon's other neighbors
                let others: Vec<(u8, bool)> = v
                    .graph
                    .neighbors(partner)
                    .filter(|(nb, _)| *nb != v.i)
                    .map(|(nb, _)| {
                        let a = v.graph.atom(nb);
                        (a.element, a.aromatic)
                    })
                    .collect();
                let all_hetero =
                    !others.is_empty() && others.iter().all(|&(z, _)| z != 6 && z != 1);
                if all_hetero {
                    "O11"
                } else if others.iter().any(|&(_, ar)| ar) {
                    "O10"
                } else {
                    "O9"
                }
            }
            _ => "OS",
        };
    }
    // ether: aromatic-attached or aliphatic
    if v.has_neighbor(|_, ar| ar) {
        "O4"
    } else {
        "O3"
    }
}

/// The hydrogen type for hydrogens sitting on the given heavy atom.
fn hydrogen_type(graph: &MolecularGraph, heavy: usize) -> &'static str {
    let v = AtomView { graph, i: heavy };
    match v.z() {
        6 | 1 => "H1",
        7 => "H3",
        8 => {
            let heavy_nbrs: Vec<usize> = v
                .neighbors()
                .filter(|(nb, _)| graph.atom(*nb).element != 1)
                .map(|(nb, _)| nb)
                .collect();
            if heavy_nbrs.is_empty() {
                return "H2"; // water
            }
            let nb = heavy_nbrs[0];
            let nz = graph.atom(nb).element;
            if nz == 7 {
                return "H3"; // N-OH
            }
            if nz == 8 || nz == 16 {
                return "H4"; // peroxide / O-S
            }
            if nz == 6 {
                let conjugated = graph.neighbors(nb).any(|(other, b)| {
                    other != heavy
                        && b.order == BondOrder::Double
                        && matches!(graph.atom(other).element, 6 | 7 | 8 | 16)
                });
                if conjugated {
                    return "H4"; // acid or enol OH
                }
            }
            "H2"
        }
        _ => "H2",
    }
}

/// Sum of heavy-atom and hydrogen contributions. Also returns the names of
/// atoms that fell to a catch-all type, as `(atom index, type)` diagnostics.
pub fn crippen_logp_with_diagnostics(graph: &MolecularGraph) -> (f64, Vec<(usize, &'static str)>) {
    let mut total = 0.0;
    let mut catch_alls = Vec::new();
    for i in 0..graph.n_atoms() {
        if graph.atom(i).element == 1 {
            continue; // explicit hydrogens are priced through their heavy atom
        }
        let t = atom_type(graph, i);
        if matches!(t, "CS" | "NS" | "OS" | "HS" | "Me") {
            catch_alls.push((i, t));
        }
        total += contribution(t);
        let h = graph.total_hydrogens(i) as f64;
        if h > 0.0 {
            total += h * contribution(hydrogen_type(graph, i));
        }
    }
    (total, catch_alls)
}

pub fn crippen_logp(graph: &MolecularGraph) -> f64 {
    crippen_logp_with_diagnostics(graph).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    fn lp(s: &str) -> f64 {
        crippen_logp(&parse_smiles(s).unwrap())
    }

    #[test]
    fn methane_matches_table() {
        // C1 plus four hydrocarbon hydrogens, straight from the table
        let expected = contribution("C1") + 4.0 * contribution("H1");
        assert!((lp("C") - expected).abs() < 1e-12);
        assert!((expected - 0.6361).abs() < 1e-4);
    }

    #[test]
    fn alkane_more_lipophilic_than_alcohol() {
        assert!(lp("CCCC") > lp("CCO"));
    }

    #[test]
    fn invariant_under_relabeling() {
        assert!((lp("CCO") - lp("OCC")).abs() < 1e-12);
        assert!((lp("c1ccccc1O") - lp("Oc1ccccc1")).abs() < 1e-12);
    }

    #[test]
    fn ethanol_near_zero() {
        // C1 + C3 + O2 + 5 H1 + 1 H2
        let expected = contribution("C1")
            + contribution("C3")
            + contribution("O2")
            + 5.0 * contribution("H1")
            + contribution("H2");
        assert!((lp("CCO") - expected).abs() < 1e-12);
        assert!(lp("CCO").abs() < 0.05, "ethanol should sit near zero: {}", lp("CCO"));
    }

    #[test]
    fn benzene_types() {
        let g = parse_smiles("c1ccccc1").unwrap();
        for i in 0..6 {
            assert_eq!(atom_type(&g, i), "C18");
        }
        // toluene: ring carbon bearing methyl is C21, methyl is C8
        let g = parse_smiles("Cc1ccccc1").unwrap();
        assert_eq!(atom_type(&g, 0), "C8");
        assert_eq!(atom_type(&g, 1), "C21");
    }

    #[test]
    fn hetero_types() {
        let g = parse_smiles("CN(C)C").unwrap();
        assert_eq!(atom_type(&g, 1), "N7");
        let g = parse_smiles("CC(=O)O").unwrap();
        assert_eq!(atom_type(&g, 1), "C5");
        assert_eq!(atom_type(&g, 2), "O9");
        assert_eq!(atom_type(&g, 3), "O2");
        let g = parse_smiles("C[N+](C)(C)C").unwrap();
        assert_eq!(atom_type(&g, 1), "N13");
    }

    #[test]
    fn acid_hydrogen_is_h4() {
        let g = parse_smiles("CC(=O)O").unwrap();
        assert_eq!(super::hydrogen_type(&g, 3), "H4");
        let g = parse_smiles("CCO").unwrap();
        assert_eq!(super::hydrogen_type(&g, 2), "H2");
    }

    #[test]
    fn exotic_atoms_fall_to_catch_all() {
        let g = parse_smiles("C[Si](C)(C)C").unwrap();
        let (_, diags) = crippen_logp_with_diagnostics(&g);
        assert!(diags.iter().any(|&(i, t)| i == 1 && t == "Me"));
    }
}
