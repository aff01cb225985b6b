//! Seeded random molecule generator for corpus synthesis and property tests.
//!
//! Grows a random tree under the valence model, optionally seeds an aromatic
//! ring, adds extra ring-closing bonds, and sprinkles charges, isotopes, and
//! chirality tags. Every emitted graph is valence-legal (no warnings).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element;
use crate::graph::{Atom, BondOrder, Chirality, MolecularGraph};

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub min_atoms: usize,
    pub max_atoms: usize,
    /// Maximum number of extra ring-closing bonds on top of the tree.
    pub max_ring_closures: usize,
    /// Probability of seeding the molecule with an aromatic ring.
    pub aromatic_ring_prob: f64,
    pub charge_prob: f64,
    pub isotope_prob: f64,
    pub chirality_prob: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            min_atoms: 1,
            max_atoms: 20,
            max_ring_closures: 2,
            aromatic_ring_prob: 0.3,
            charge_prob: 0.05,
            isotope_prob: 0.03,
            chirality_prob: 0.08,
        }
    }
}

/// Heavy-atom elements with sampling weights, capped at their smallest
/// standard valence.
const ELEMENT_WEIGHTS: &[(u8, u32)] = &[
    (6, 60),  // C
    (7, 12),  // N
    (8, 12),  // O
    (16, 4),  // S
    (9, 4),   // F
    (17, 4),  // Cl
    (35, 2),  // Br
    (15, 1),  // P
    (53, 1),  // I
];

struct Draft {
    atoms: Vec<Atom>,
    bonds: Vec<(usize, usize, BondOrder)>,
    used_valence: Vec<f64>,
    capacity: Vec<f64>,
}

impl Draft {
    fn spare(&self, i: usize) -> f64 {
        self.capacity[i] - self.used_valence[i]
    }

    fn add_atom(&mut self, atom: Atom, capacity: f64) -> usize {
        self.atoms.push(atom);
        self.used_valence.push(0.0);
        self.capacity.push(capacity);
        self.atoms.len() - 1
    }

    fn add_bond(&mut self, a: usize, b: usize, order: BondOrder) {
        let w = order.valence_contribution();
        self.used_valence[a] += w;
        self.used_valence[b] += w;
        self.bonds.push((a, b, order));
    }
}

pub fn random_molecule(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> MolecularGraph {
    let target = rng.gen_range(cfg.min_atoms..=cfg.max_atoms);
    let mut draft = Draft {
        atoms: Vec::new(),
        bonds: Vec::new(),
        used_valence: Vec::new(),
        capacity: Vec::new(),
    };

    if target >= 6 && rng.gen_bool(cfg.aromatic_ring_prob) {
        seed_aromatic_ring(rng, &mut draft);
    } else {
        let z = sample_element(rng);
        draft.add_atom(Atom::new(z), smallest_valence(z));
    }

    while draft.atoms.len() < target {
        let open: Vec<usize> = (0..draft.atoms.len()).filter(|&i| draft.spare(i) >= 1.0).collect();
        let Some(&anchor) = pick(rng, &open) else { break };
        let z = sample_element(rng);
        let cap = smallest_valence(z);
        let order = sample_bond_order(rng, draft.spare(anchor), cap, draft.atoms[anchor].element, z);
        let new = draft.add_atom(Atom::new(z), cap);
        draft.add_bond(anchor, new, order);
    }

    let closures = rng.gen_range(0..=cfg.max_ring_closures);
    for _ in 0..closures {
        add_ring_closure(rng, &mut draft);
    }

    decorate(rng, cfg, &mut draft);

    MolecularGraph::from_parts(draft.atoms, draft.bonds, String::new(), Vec::new())
        .expect("generator emits valid graphs")
}

/// `count` molecules from one seed.
pub fn random_molecules(seed: u64, count: usize, cfg: &GenConfig) -> Vec<MolecularGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_molecule(&mut rng, cfg)).collect()
}

fn seed_aromatic_ring(rng: &mut ChaCha8Rng, draft: &mut Draft) {
    // benzene, pyridine, pyrimidine, or pyrrole; all are warning-free under
    // the floored-1.5 aromatic valence rule
    let first = draft.atoms.len();
    let (size, nitrogens, pyrrole_nh) = match rng.gen_range(0..4u8) {
        0 => (6, 0, false),
        1 => (6, 1, false),
        2 => (6, 2, false),
        _ => (5, 1, true),
    };
    for k in 0..size {
        let nitrogen = match nitrogens {
            1 => k == 0,
            2 => k == 0 || k == 2,
            _ => false,
        };
        let z = if nitrogen { 7 } else { 6 };
        let mut atom = Atom::new(z);
        atom.aromatic = true;
        if nitrogen && pyrrole_nh {
            atom.explicit_h = Some(1);
        }
        draft.add_atom(atom, smallest_valence(z));
    }
    for k in 0..size {
        let a = first + k;
        let b = first + (k + 1) % size;
        draft.add_bond(a, b, BondOrder::Aromatic);
    }
}

fn sample_element(rng: &mut ChaCha8Rng) -> u8 {
    let total: u32 = ELEMENT_WEIGHTS.iter().map(|&(_, w)| w).sum();
    let mut dart = rng.gen_range(0..total);
    for &(z, w) in ELEMENT_WEIGHTS {
        if dart < w {
            return z;
        }
        dart -= w;
    }
    6
}

fn smallest_valence(z: u8) -> f64 {
    element::standard_valences(z).first().copied().unwrap_or(0) as f64
}

fn sample_bond_order(rng: &mut ChaCha8Rng, spare_a: f64, cap_b: f64, za: u8, zb: u8) -> BondOrder {
    let can_double = spare_a >= 2.0 && cap_b >= 2.0;
    let can_triple = spare_a >= 3.0 && cap_b >= 3.0 && matches!(za, 6 | 7) && matches!(zb, 6 | 7);
    let roll: f64 = rng.gen();
    if can_triple && roll < 0.03 {
        BondOrder::Triple
    } else if can_double && roll < 0.15 {
        BondOrder::Double
    } else {
        BondOrder::Single
    }
}

fn add_ring_closure(rng: &mut ChaCha8Rng, draft: &mut Draft) {
    let n = draft.atoms.len();
    if n < 3 {
        return;
    }
    // graph distances from a random open atom
    let open: Vec<usize> = (0..n).filter(|&i| draft.spare(i) >= 1.0).collect();
    let Some(&a) = pick(rng, &open) else { return };
    let mut dist = vec![usize::MAX; n];
    dist[a] = 0;
    let mut queue = std::collections::VecDeque::from([a]);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(x, y, _) in &draft.bonds {
        adj[x].push(y);
        adj[y].push(x);
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let candidates: Vec<usize> = (0..n)
        .filter(|&b| {
            b != a
                && draft.spare(b) >= 1.0
                && (2..=8).contains(&dist[b])
                && !adj[a].contains(&b)
        })
        .collect();
    if let Some(&b) = pick(rng, &candidates) {
        draft.add_bond(a, b, BondOrder::Single);
    }
}

fn decorate(rng: &mut ChaCha8Rng, cfg: &GenConfig, draft: &mut Draft) {
    for i in 0..draft.atoms.len() {
        let z = draft.atoms[i].element;
        let frozen_h = (draft.capacity[i] - draft.used_valence[i].floor()).max(0.0) as u8;
        if matches!(z, 7 | 8)
            && !draft.atoms[i].aromatic
            && draft.atoms[i].explicit_h.is_none()
            && rng.gen_bool(cfg.charge_prob)
        {
            // protonated N gains a hydrogen, deprotonated O loses one
            if z == 7 {
                draft.atoms[i].explicit_h = Some(frozen_h + 1);
                draft.atoms[i].formal_charge = 1;
            } else {
                draft.atoms[i].explicit_h = Some(frozen_h.saturating_sub(1));
                draft.atoms[i].formal_charge = -1;
            }
        }
        if rng.gen_bool(cfg.isotope_prob) {
            let mass = element::atomic_mass(z).unwrap_or(12.0).round() as u16;
            draft.atoms[i].isotope = Some(mass + rng.gen_range(0..2));
        }
        if cfg.chirality_prob > 0.0
            && !draft.atoms[i].aromatic
            && z == 6
            && draft.used_valence[i] >= 3.0
            && rng.gen_bool(cfg.chirality_prob)
        {
            draft.atoms[i].chirality = if rng.gen_bool(0.5) {
                Chirality::Clockwise
            } else {
                Chirality::CounterClockwise
            };
        }
    }
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.gen_range(0..items.len())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;
    use crate::writer::write_smiles;

    #[test]
    fn generated_molecules_are_valence_legal() {
        let mols = random_molecules(7, 100, &GenConfig::default());
        for g in &mols {
            assert!(g.warnings().is_empty(), "unexpected warning for {}", write_smiles(g));
        }
    }

    #[test]
    fn generated_molecules_round_trip_through_text() {
        for g in random_molecules(11, 50, &GenConfig::default()) {
            let text = write_smiles(&g);
            let back = parse_smiles(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
            assert_eq!(g.n_atoms(), back.n_atoms(), "{text}");
            assert_eq!(g.n_bonds(), back.n_bonds(), "{text}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_molecules(42, 10, &GenConfig::default());
        let b = random_molecules(42, 10, &GenConfig::default());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(write_smiles(x), write_smiles(y));
        }
    }
}
