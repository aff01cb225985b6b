//! Substructure pattern language (a SMARTS subset) and backtracking matcher.
//!
//! Supported atom predicates: element symbols (aliphatic uppercase, aromatic
//! lowercase), `*` wildcard, `a`/`A`, and brackets combining `#n`, element,
//! charge, `Hn`, degree `Dn`, and ring membership `R`/`R0`. Bond predicates:
//! `-`, `=`, `#`, `:`, `~`, and the default single-or-aromatic. Recursive
//! SMARTS, OR-lists, negation, and stereo are rejected at parse time with the
//! construct named.

use crate::element;
use crate::graph::{BondOrder, MolecularGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {position}")]
pub struct PatternError {
    pub position: usize,
    pub message: String,
}

impl PatternError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        PatternError { position, message: message.into() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AtomPredicate {
    /// Required atomic number; `None` matches any element.
    pub element: Option<u8>,
    /// Required aromaticity; `None` matches either.
    pub aromatic: Option<bool>,
    pub charge: Option<i8>,
    /// Total hydrogen count (`H` primitive).
    pub h_count: Option<u8>,
    /// Explicit-connection count (`D` primitive).
    pub degree: Option<u8>,
    pub in_ring: Option<bool>,
}

impl AtomPredicate {
    pub fn matches(&self, graph: &MolecularGraph, atom: usize) -> bool {
        let a = graph.atom(atom);
        if let Some(el) = self.element {
            if a.element != el {
                return false;
            }
        }
        if let Some(ar) = self.aromatic {
            if a.aromatic != ar {
                return false;
            }
        }
        if let Some(c) = self.charge {
            if a.formal_charge != c {
                return false;
            }
        }
        if let Some(h) = self.h_count {
            if graph.total_hydrogens(atom) != h {
                return false;
            }
        }
        if let Some(d) = self.degree {
            if graph.degree(atom) != d as usize {
                return false;
            }
        }
        if let Some(r) = self.in_ring {
            if graph.atom_in_ring(atom) != r {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BondPredicate {
    Single,
    Double,
    Triple,
    Aromatic,
    Any,
    /// No symbol written: single or aromatic.
    Default,
}

impl BondPredicate {
    pub fn matches(&self, order: BondOrder) -> bool {
        match self {
            BondPredicate::Single => order == BondOrder::Single,
            BondPredicate::Double => order == BondOrder::Double,
            BondPredicate::Triple => order == BondOrder::Triple,
            BondPredicate::Aromatic => order == BondOrder::Aromatic,
            BondPredicate::Any => true,
            BondPredicate::Default => {
                order == BondOrder::Single || order == BondOrder::Aromatic
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternBond {
    pub a: usize,
    pub b: usize,
    pub predicate: BondPredicate,
}

/// A parsed substructure pattern: a connected predicate graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub atoms: Vec<AtomPredicate>,
    pub bonds: Vec<PatternBond>,
    pub name: String,
    pub source: String,
}

impl Pattern {
    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.atoms.len()];
        for (bi, bond) in self.bonds.iter().enumerate() {
            adj[bond.a].push((bond.b, bi));
            adj[bond.b].push((bond.a, bi));
        }
        adj
    }
}

pub fn parse_pattern(text: &str) -> Result<Pattern, PatternError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(PatternError::new(0, "empty pattern"));
    }
    if let Some(pos) = trimmed.bytes().position(|b| !b.is_ascii()) {
        return Err(PatternError::new(pos, "non-ASCII character"));
    }
    let mut parser = PatternParser {
        bytes: trimmed.as_bytes(),
        pos: 0,
        atoms: Vec::new(),
        bonds: Vec::new(),
        branch_stack: Vec::new(),
        prev: None,
        pending: None,
        ring_open: std::collections::HashMap::new(),
    };
    parser.run()?;
    let pattern = Pattern {
        atoms: parser.atoms,
        bonds: parser.bonds,
        name: String::new(),
        source: trimmed.to_string(),
    };
    // the matcher assumes a connected predicate graph
    if pattern.n_atoms() > 1 {
        let adj = pattern.adjacency();
        let mut seen = vec![false; pattern.n_atoms()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(PatternError::new(0, "disconnected pattern not supported"));
        }
    }
    Ok(pattern)
}

struct PatternParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    atoms: Vec<AtomPredicate>,
    bonds: Vec<PatternBond>,
    branch_stack: Vec<usize>,
    prev: Option<usize>,
    pending: Option<BondPredicate>,
    ring_open: std::collections::HashMap<u16, (usize, Option<BondPredicate>, usize)>,
}

impl<'a> PatternParser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn run(&mut self) -> Result<(), PatternError> {
        while let Some(c) = self.peek() {
            let at = self.pos;
            match c {
                b'[' => {
                    let pred = self.parse_bracket()?;
                    self.push_atom(pred, at)?;
                }
                b'*' => {
                    self.pos += 1;
                    self.push_atom(AtomPredicate::default(), at)?;
                }
                b'a' => {
                    self.pos += 1;
                    self.push_atom(
                        AtomPredicate { aromatic: Some(true), ..Default::default() },
                        at,
                    )?;
                }
                b'A' if !self.next_makes_element(c) => {
                    self.pos += 1;
                    self.push_atom(
                        AtomPredicate { aromatic: Some(false), ..Default::default() },
                        at,
                    )?;
                }
                b'b' | b'c' | b'n' | b'o' | b'p' | b's' => {
                    self.pos += 1;
                    let z = element::atomic_number(&(c as char).to_uppercase().to_string()).unwrap();
                    self.push_atom(
                        AtomPredicate {
                            element: Some(z),
                            aromatic: Some(true),
                            ..Default::default()
                        },
                        at,
                    )?;
                }
                b'B' | b'C' | b'N' | b'O' | b'P' | b'S' | b'F' | b'I' => {
                    let pred = self.parse_organic_symbol()?;
                    self.push_atom(pred, at)?;
                }
                b'-' | b'=' | b'#' | b':' | b'~' => {
                    if self.pending.is_some() {
                        return Err(PatternError::new(at, "two bond symbols in a row"));
                    }
                    self.pending = Some(match c {
                        b'-' => BondPredicate::Single,
                        b'=' => BondPredicate::Double,
                        b'#' => BondPredicate::Triple,
                        b':' => BondPredicate::Aromatic,
                        _ => BondPredicate::Any,
                    });
                    self.pos += 1;
                }
                b'(' => {
                    let prev = self
                        .prev
                        .ok_or_else(|| PatternError::new(at, "branch with no preceding atom"))?;
                    self.branch_stack.push(prev);
                    self.pos += 1;
                }
                b')' => {
                    let prev = self
                        .branch_stack
                        .pop()
                        .ok_or_else(|| PatternError::new(at, "unbalanced parenthesis"))?;
                    self.prev = Some(prev);
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    self.pos += 1;
                    self.ring_closure((c - b'0') as u16, at)?;
                }
                b'%' => {
                    self.pos += 1;
                    let d1 = self
                        .peek()
                        .filter(u8::is_ascii_digit)
                        .ok_or_else(|| PatternError::new(at, "% must be followed by two digits"))?;
                    self.pos += 1;
                    let d2 = self
                        .peek()
                        .filter(u8::is_ascii_digit)
                        .ok_or_else(|| PatternError::new(at, "% must be followed by two digits"))?;
                    self.pos += 1;
                    self.ring_closure((d1 - b'0') as u16 * 10 + (d2 - b'0') as u16, at)?;
                }
                b'$' => return Err(PatternError::new(at, "recursive SMARTS not supported")),
                b',' => return Err(PatternError::new(at, "OR-list not supported")),
                b'!' => return Err(PatternError::new(at, "negation not supported")),
                b'@' | b'/' | b'\\' => {
                    return Err(PatternError::new(at, "stereo primitive not supported"));
                }
                b'.' => return Err(PatternError::new(at, "disconnected pattern not supported")),
                _ => {
                    return Err(PatternError::new(
                        at,
                        format!("unsupported construct '{}'", c as char),
                    ));
                }
            }
        }
        if self.pending.is_some() {
            return Err(PatternError::new(self.bytes.len(), "dangling bond symbol"));
        }
        if !self.branch_stack.is_empty() {
            return Err(PatternError::new(self.bytes.len(), "unbalanced parenthesis"));
        }
        if let Some((&n, &(_, _, at))) = self.ring_open.iter().min_by_key(|(_, &(_, _, p))| p) {
            return Err(PatternError::new(at, format!("unclosed ring closure {n}")));
        }
        Ok(())
    }

    fn next_makes_element(&self, first: u8) -> bool {
        // "Br" is the only two-letter symbol starting a bare uppercase run here
        first == b'B' && self.bytes.get(self.pos + 1) == Some(&b'r')
    }

    fn parse_organic_symbol(&mut self) -> Result<AtomPredicate, PatternError> {
        let at = self.pos;
        let c = self.bytes[self.pos];
        let mut symbol = (c as char).to_string();
        self.pos += 1;
        if let Some(next) = self.peek().filter(u8::is_ascii_lowercase) {
            let two = format!("{}{}", c as char, next as char);
            if two == "Cl" || two == "Br" {
                symbol = two;
                self.pos += 1;
            }
        }
        let z = element::atomic_number(&symbol)
            .ok_or_else(|| PatternError::new(at, format!("unknown element symbol '{symbol}'")))?;
        Ok(AtomPredicate { element: Some(z), aromatic: Some(false), ..Default::default() })
    }

    fn parse_bracket(&mut self) -> Result<AtomPredicate, PatternError> {
        let open = self.pos;
        self.pos += 1;
        let mut pred = AtomPredicate::default();
        let mut saw_primitive = false;
        loop {
            let at = self.pos;
            match self.peek() {
                Some(b']') => {
                    self.pos += 1;
                    if !saw_primitive {
                        return Err(PatternError::new(open, "empty bracket expression"));
                    }
                    return Ok(pred);
                }
                Some(b'#') => {
                    self.pos += 1;
                    let z = self.read_number(at, "atomic number")? as u8;
                    if element::symbol(z).is_none() {
                        return Err(PatternError::new(at, format!("unknown atomic number {z}")));
                    }
                    pred.element = Some(z);
                    saw_primitive = true;
                }
                Some(b'H') => {
                    self.pos += 1;
                    // "H" alone after an element is a hydrogen-count primitive
                    let count = self.read_optional_digit().unwrap_or(1);
                    pred.h_count = Some(count);
                    saw_primitive = true;
                }
                Some(b'D') => {
                    self.pos += 1;
                    let d = self.read_optional_digit().unwrap_or(1);
                    pred.degree = Some(d);
                    saw_primitive = true;
                }
                Some(b'R') => {
                    self.pos += 1;
                    match self.read_optional_digit() {
                        None | Some(1) => pred.in_ring = Some(true),
                        Some(0) => pred.in_ring = Some(false),
                        Some(n) => {
                            return Err(PatternError::new(
                                at,
                                format!("ring-count primitive R{n} not supported"),
                            ));
                        }
                    }
                    saw_primitive = true;
                }
                Some(b'X') => return Err(PatternError::new(at, "X primitive not supported")),
                Some(b'x') => return Err(PatternError::new(at, "x primitive not supported")),
                Some(b'v') => return Err(PatternError::new(at, "v primitive not supported")),
                Some(b'r') => return Err(PatternError::new(at, "r primitive not supported")),
                Some(b'$') => return Err(PatternError::new(at, "recursive SMARTS not supported")),
                Some(b',') => return Err(PatternError::new(at, "OR-list not supported")),
                Some(b';') => return Err(PatternError::new(at, "AND-list ';' not supported")),
                Some(b'&') => return Err(PatternError::new(at, "AND-list '&' not supported")),
                Some(b'!') => return Err(PatternError::new(at, "negation not supported")),
                Some(b'@') => return Err(PatternError::new(at, "stereo primitive not supported")),
                Some(b'a') => {
                    self.pos += 1;
                    pred.aromatic = Some(true);
                    saw_primitive = true;
                }
                Some(b'A') => {
                    self.pos += 1;
                    pred.aromatic = Some(false);
                    saw_primitive = true;
                }
                Some(c @ (b'+' | b'-')) => {
                    self.pos += 1;
                    let sign: i16 = if c == b'+' { 1 } else { -1 };
                    let mut magnitude: i16 = 1;
                    if let Some(d) = self.read_optional_digit() {
                        magnitude = d as i16;
                    } else {
                        while self.peek() == Some(c) {
                            magnitude += 1;
                            self.pos += 1;
                        }
                    }
                    pred.charge = Some((sign * magnitude) as i8);
                    saw_primitive = true;
                }
                Some(b'*') => {
                    self.pos += 1;
                    saw_primitive = true;
                }
                Some(c) if c.is_ascii_lowercase() => {
                    self.pos += 1;
                    let symbol = (c as char).to_uppercase().to_string();
                    let z = element::atomic_number(&symbol)
                        .filter(|&z| element::aromatic_capable(z))
                        .ok_or_else(|| {
                            PatternError::new(at, format!("unknown aromatic atom '{}'", c as char))
                        })?;
                    pred.element = Some(z);
                    pred.aromatic = Some(true);
                    saw_primitive = true;
                }
                Some(c) if c.is_ascii_uppercase() => {
                    let mut symbol = (c as char).to_string();
                    self.pos += 1;
                    if let Some(next) = self.peek().filter(u8::is_ascii_lowercase) {
                        let two = format!("{}{}", c as char, next as char);
                        if element::atomic_number(&two).is_some() {
                            symbol = two;
                            self.pos += 1;
                        }
                    }
                    let z = element::atomic_number(&symbol).ok_or_else(|| {
                        PatternError::new(at, format!("unknown element symbol '{symbol}'"))
                    })?;
                    pred.element = Some(z);
                    pred.aromatic = Some(false);
                    saw_primitive = true;
                }
                Some(c) if c.is_ascii_digit() => {
                    // leading digits would be an isotope constraint
                    return Err(PatternError::new(at, "isotope primitive not supported"));
                }
                Some(other) => {
                    return Err(PatternError::new(
                        at,
                        format!("unsupported construct '{}'", other as char),
                    ));
                }
                None => return Err(PatternError::new(open, "unterminated bracket expression")),
            }
        }
    }

    fn read_optional_digit(&mut self) -> Option<u8> {
        let c = self.peek().filter(u8::is_ascii_digit)?;
        self.pos += 1;
        Some(c - b'0')
    }

    fn read_number(&mut self, at: usize, what: &str) -> Result<u16, PatternError> {
        let mut value: u16 = 0;
        let mut any = false;
        while let Some(c) = self.peek().filter(u8::is_ascii_digit) {
            value = value * 10 + (c - b'0') as u16;
            any = true;
            self.pos += 1;
        }
        if !any {
            return Err(PatternError::new(at, format!("expected {what}")));
        }
        Ok(value)
    }

    fn push_atom(&mut self, pred: AtomPredicate, at: usize) -> Result<(), PatternError> {
        let idx = self.atoms.len();
        self.atoms.push(pred);
        if let Some(prev) = self.prev {
            let predicate = self.pending.take().unwrap_or(BondPredicate::Default);
            self.bonds.push(PatternBond { a: prev, b: idx, predicate });
        } else if self.pending.is_some() {
            return Err(PatternError::new(at, "bond symbol with no preceding atom"));
        }
        self.prev = Some(idx);
        Ok(())
    }

    fn ring_closure(&mut self, number: u16, at: usize) -> Result<(), PatternError> {
        let here = self
            .prev
            .ok_or_else(|| PatternError::new(at, "ring closure with no preceding atom"))?;
        let pending = self.pending.take();
        match self.ring_open.remove(&number) {
            Some((there, opened, _)) => {
                let predicate = match (opened, pending) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(PatternError::new(
                            at,
                            format!("conflicting bond predicates on ring closure {number}"),
                        ));
                    }
                    (Some(a), _) => a,
                    (None, Some(b)) => b,
                    (None, None) => BondPredicate::Default,
                };
                self.bonds.push(PatternBond { a: there, b: here, predicate });
                Ok(())
            }
            None => {
                self.ring_open.insert(number, (here, pending, at));
                Ok(())
            }
        }
    }
}

/// All injective mappings of pattern atoms onto graph atoms that satisfy the
/// atom and bond predicates, in lexicographic order of the mapping vector.
/// Symmetry duplicates are retained.
pub fn match_pattern(graph: &MolecularGraph, pattern: &Pattern) -> Vec<Vec<usize>> {
    if pattern.atoms.is_empty() {
        return Vec::new();
    }
    if pattern.n_atoms() > graph.n_atoms() {
        return Vec::new();
    }
    let mut matcher = Matcher::new(graph, pattern, false);
    matcher.search(0);
    matcher.results.sort();
    matcher.results
}

/// True iff the pattern matches anywhere; stops at the first match.
pub fn has_substructure(graph: &MolecularGraph, pattern: &Pattern) -> bool {
    if pattern.atoms.is_empty() || pattern.n_atoms() > graph.n_atoms() {
        return false;
    }
    let mut matcher = Matcher::new(graph, pattern, true);
    matcher.search(0);
    !matcher.results.is_empty()
}

/// Count of matches deduplicated by matched atom set, the way a chemist
/// counts functional groups.
pub fn count_unique_matches(graph: &MolecularGraph, pattern: &Pattern) -> usize {
    let mut sets: Vec<Vec<usize>> = match_pattern(graph, pattern)
        .into_iter()
        .map(|mut m| {
            m.sort_unstable();
            m
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets.len()
}

struct Matcher<'a> {
    graph: &'a MolecularGraph,
    pattern: &'a Pattern,
    pattern_adj: Vec<Vec<(usize, usize)>>,
    /// Pattern atoms in match order: rarest predicate first, then connected.
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    results: Vec<Vec<usize>>,
    first_only: bool,
}

impl<'a> Matcher<'a> {
    fn new(graph: &'a MolecularGraph, pattern: &'a Pattern, first_only: bool) -> Self {
        let n = pattern.n_atoms();
        let candidate_count: Vec<usize> = (0..n)
            .map(|p| {
                (0..graph.n_atoms())
                    .filter(|&g| pattern.atoms[p].matches(graph, g))
                    .count()
            })
            .collect();
        let pattern_adj = pattern.adjacency();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let rarest = (0..n).min_by_key(|&p| (candidate_count[p], p)).unwrap();
        order.push(rarest);
        placed[rarest] = true;
        while order.len() < n {
            let next = (0..n)
                .filter(|&p| !placed[p] && pattern_adj[p].iter().any(|&(nb, _)| placed[nb]))
                .min_by_key(|&p| (candidate_count[p], p))
                .expect("pattern is connected");
            placed[next] = true;
            order.push(next);
        }
        Matcher {
            graph,
            pattern,
            pattern_adj,
            order,
            mapping: vec![usize::MAX; n],
            used: vec![false; graph.n_atoms()],
            results: Vec::new(),
            first_only,
        }
    }

    fn search(&mut self, depth: usize) {
        if self.first_only && !self.results.is_empty() {
            return;
        }
        if depth == self.order.len() {
            self.results.push(self.mapping.clone());
            return;
        }
        let p = self.order[depth];
        for g in 0..self.graph.n_atoms() {
            if self.used[g] || !self.pattern.atoms[p].matches(self.graph, g) {
                continue;
            }
            let consistent = self.pattern_adj[p].iter().all(|&(nb, bi)| {
                let mapped = self.mapping[nb];
                if mapped == usize::MAX {
                    return true;
                }
                match self.graph.bond_between(g, mapped) {
                    Some(bond) => self.pattern.bonds[bi].predicate.matches(bond.order),
                    None => false,
                }
            });
            if !consistent {
                continue;
            }
            self.mapping[p] = g;
            self.used[g] = true;
            self.search(depth + 1);
            self.mapping[p] = usize::MAX;
            self.used[g] = false;
            if self.first_only && !self.results.is_empty() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::parse_smiles;

    fn mol(s: &str) -> MolecularGraph {
        parse_smiles(s).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    #[test]
    fn carboxyl_matches_acetic_acid() {
        let acid = mol("CC(=O)O");
        assert!(has_substructure(&acid, &pat("C(=O)[OH]")));
        assert!(!has_substructure(&mol("CCO"), &pat("C(=O)[OH]")));
    }

    #[test]
    fn aromatic_carbon_in_benzene() {
        let benzene = mol("c1ccccc1");
        assert_eq!(match_pattern(&benzene, &pat("c")).len(), 6);
        assert_eq!(match_pattern(&mol("CCO"), &pat("c")).len(), 0);
    }

    #[test]
    fn presence_checks() {
        assert!(has_substructure(&mol("CCO"), &pat("O")));
        assert!(!has_substructure(&mol("CCO"), &pat("N")));
    }

    #[test]
    fn rejects_unsupported_constructs() {
        let err = parse_pattern("[OX2]").unwrap_err();
        assert!(err.message.contains("X primitive"), "{}", err.message);
        assert!(parse_pattern("[C,N]").unwrap_err().message.contains("OR-list"));
        assert!(parse_pattern("[$(CC)]").unwrap_err().message.contains("recursive"));
        assert!(parse_pattern("[!C]").unwrap_err().message.contains("negation"));
        assert!(parse_pattern("C.C").unwrap_err().message.contains("disconnected"));
    }

    #[test]
    fn bracket_predicates() {
        let p = pat("[N+](=O)[O-]");
        let nitrobenzene = mol("[O-][N+](=O)c1ccccc1");
        assert!(has_substructure(&nitrobenzene, &p));
        assert!(!has_substructure(&mol("NO"), &p));

        let quaternary = pat("[ND4]");
        assert!(has_substructure(&mol("C[N+](C)(C)C"), &quaternary));
        assert!(!has_substructure(&mol("CN(C)C"), &quaternary));
    }

    #[test]
    fn ring_membership_primitive() {
        let ring_o = pat("[OR]");
        assert!(has_substructure(&mol("C1CCOC1"), &ring_o));
        assert!(!has_substructure(&mol("CCO"), &ring_o));
        let chain_o = pat("[OR0]");
        assert!(has_substructure(&mol("CCO"), &chain_o));
        assert!(!has_substructure(&mol("C1CCOC1"), &chain_o));
    }

    #[test]
    fn wildcard_and_any_bond() {
        assert_eq!(match_pattern(&mol("CCO"), &pat("*")).len(), 3);
        assert!(has_substructure(&mol("C=C"), &pat("C~C")));
        assert!(has_substructure(&mol("CC"), &pat("C~C")));
        // default bond does not match a double bond
        assert!(!has_substructure(&mol("C=C"), &pat("CC")));
    }

    #[test]
    fn unique_match_counting() {
        let benzene = mol("c1ccccc1");
        let ring = pat("c1ccccc1");
        assert_eq!(match_pattern(&benzene, &ring).len(), 12);
        assert_eq!(count_unique_matches(&benzene, &ring), 1);
        let naphthalene = mol("c1ccc2ccccc2c1");
        assert_eq!(count_unique_matches(&naphthalene, &ring), 2);
    }

    #[test]
    fn hydrogen_count_primitive() {
        let hydroxyl = pat("[OH]");
        assert!(has_substructure(&mol("CCO"), &hydroxyl));
        assert!(!has_substructure(&mol("COC"), &hydroxyl));
        // explicit H atoms count toward the H primitive
        assert!(has_substructure(&mol("CO[H]"), &hydroxyl));
    }

    #[test]
    fn atomic_number_primitive() {
        let any_carbon = pat("[#6]");
        assert!(has_substructure(&mol("c1ccccc1"), &any_carbon));
        assert!(has_substructure(&mol("CC"), &any_carbon));
        assert!(!has_substructure(&mol("N"), &any_carbon));
    }

    #[test]
    fn mappings_are_lexicographic() {
        let m = match_pattern(&mol("CCC"), &pat("CC"));
        assert_eq!(m, vec![vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1]]);
    }
}
