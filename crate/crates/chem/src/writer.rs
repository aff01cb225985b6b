//! Canonical SMILES output.
//!
//! Atoms are visited depth-first in canonical-rank order, so isomorphic
//! graphs write the same string. Fragments are written independently and
//! joined with `.` in sorted order.

use crate::canon::canonical_ranks;
use crate::element;
use crate::graph::{BondOrder, Chirality, MolecularGraph};

pub fn write_smiles(graph: &MolecularGraph) -> String {
    let ranks = canonical_ranks(graph);
    let mut fragments: Vec<String> = Vec::new();
    for component in 0..graph.n_components() {
        let start = (0..graph.n_atoms())
            .filter(|&i| graph.component_of(i) == component)
            .min_by_key(|&i| ranks[i])
            .expect("component has atoms");
        fragments.push(write_component(graph, &ranks, start));
    }
    fragments.sort();
    fragments.join(".")
}

struct Writer<'a> {
    graph: &'a MolecularGraph,
    ranks: &'a [usize],
    visited: Vec<bool>,
    // ring-closure digits: per atom, list of (digit, bond order) to emit
    closures: Vec<Vec<(u16, BondOrder, bool)>>, // bool: this side opens the digit
    out: String,
}

fn write_component(graph: &MolecularGraph, ranks: &[usize], start: usize) -> String {
    let mut w = Writer {
        graph,
        ranks,
        visited: vec![false; graph.n_atoms()],
        closures: vec![Vec::new(); graph.n_atoms()],
        out: String::new(),
    };
    w.assign_closures(start);
    w.visited.iter_mut().for_each(|v| *v = false);
    w.emit(start, None);
    w.out
}

impl<'a> Writer<'a> {
    /// First pass: walk the DFS tree (same order as `emit`) and give every
    /// back edge a ring-closure digit. The side visited first opens the digit.
    fn assign_closures(&mut self, start: usize) {
        fn dfs(
            w: &mut Writer,
            atom: usize,
            parent: usize,
            next_digit: &mut u16,
            opened: &mut Vec<(usize, usize)>,
        ) {
            let mut nbrs: Vec<usize> = w.graph.neighbors(atom).map(|(nb, _)| nb).collect();
            nbrs.sort_by_key(|&nb| w.ranks[nb]);
            for nb in nbrs {
                if nb == parent {
                    continue;
                }
                if w.visited[nb] {
                    let key = (atom.min(nb), atom.max(nb));
                    if opened.contains(&key) {
                        continue;
                    }
                    opened.push(key);
                    let order = w.graph.bond_between(atom, nb).unwrap().order;
                    let digit = *next_digit;
                    *next_digit += 1;
                    w.closures[nb].push((digit, order, true));
                    w.closures[atom].push((digit, order, false));
                } else {
                    w.visited[nb] = true;
                    dfs(w, nb, atom, next_digit, opened);
                }
            }
        }
        self.visited[start] = true;
        let mut next_digit: u16 = 1;
        let mut opened = Vec::new();
        dfs(self, start, usize::MAX, &mut next_digit, &mut opened);
    }

    fn emit(&mut self, atom: usize, parent: Option<usize>) {
        self.visited[atom] = true;
        if let Some(p) = parent {
            let order = self.graph.bond_between(p, atom).unwrap().order;
            self.push_bond_symbol(order, p, atom);
        }
        self.push_atom_token(atom);
        let closures = self.closures[atom].clone();
        for (digit, order, opens) in closures {
            if opens {
                // bond symbol goes on the opening side only
                let other = self.closure_partner(atom, digit);
                self.push_bond_symbol(order, atom, other);
            }
            if digit > 9 {
                self.out.push('%');
                self.out.push_str(&format!("{digit:02}"));
            } else {
                self.out.push_str(&digit.to_string());
            }
        }
        let mut children: Vec<usize> = self
            .graph
            .neighbors(atom)
            .map(|(nb, _)| nb)
            .filter(|&nb| Some(nb) != parent && !self.visited[nb])
            .collect();
        children.sort_by_key(|&nb| self.ranks[nb]);
        // a closure partner that is still unvisited is reached through the
        // ring, not as a tree child
        children.retain(|&nb| {
            self.closures[atom]
                .iter()
                .all(|&(d, _, _)| self.closure_partner(atom, d) != nb)
        });
        let n = children.len();
        for (k, child) in children.into_iter().enumerate() {
            if k + 1 < n {
                self.out.push('(');
                self.emit(child, Some(atom));
                self.out.push(')');
            } else {
                self.emit(child, Some(atom));
            }
        }
    }

    fn closure_partner(&self, atom: usize, digit: u16) -> usize {
        for (i, list) in self.closures.iter().enumerate() {
            if i != atom && list.iter().any(|&(d, _, _)| d == digit) {
                return i;
            }
        }
        unreachable!("closure digit has two endpoints")
    }

    fn push_bond_symbol(&mut self, order: BondOrder, a: usize, b: usize) {
        let both_aromatic = self.graph.atom(a).aromatic && self.graph.atom(b).aromatic;
        match order {
            BondOrder::Single => {
                if both_aromatic {
                    self.out.push('-');
                }
            }
            BondOrder::Double => self.out.push('='),
            BondOrder::Triple => self.out.push('#'),
            BondOrder::Aromatic => {
                if !both_aromatic {
                    self.out.push(':');
                }
            }
        }
    }

    fn push_atom_token(&mut self, i: usize) {
        let atom = self.graph.atom(i);
        let symbol = element::symbol(atom.element).unwrap_or("?");
        let needs_bracket = !element::in_organic_subset(atom.element)
            || atom.formal_charge != 0
            || atom.isotope.is_some()
            || atom.explicit_h.is_some()
            || atom.chirality != Chirality::None
            || atom.element == 1;
        if !needs_bracket {
            if atom.aromatic {
                self.out.push_str(&symbol.to_lowercase());
            } else {
                self.out.push_str(symbol);
            }
            return;
        }
        self.out.push('[');
        if let Some(iso) = atom.isotope {
            self.out.push_str(&iso.to_string());
        }
        if atom.aromatic {
            self.out.push_str(&symbol.to_lowercase());
        } else {
            self.out.push_str(symbol);
        }
        match atom.chirality {
            Chirality::None => {}
            Chirality::CounterClockwise => self.out.push('@'),
            Chirality::Clockwise => self.out.push_str("@@"),
        }
        let h = self.graph.implicit_hydrogens(i);
        if h == 1 {
            self.out.push('H');
        } else if h > 1 {
            self.out.push('H');
            self.out.push_str(&h.to_string());
        }
        match self.graph.atom(i).formal_charge {
            0 => {}
            1 => self.out.push('+'),
            -1 => self.out.push('-'),
            c if c > 0 => self.out.push_str(&format!("+{c}")),
            c => self.out.push_str(&format!("{c}")),
        }
        self.out.push(']');
    }
}
