//! SMILES parser for the organic subset plus bracket atoms, branches, ring
//! closures (including `%nn`), and dot-separated fragments.
//!
//! Aromatic atoms are accepted as written (lowercase = aromatic) without
//! independent aromaticity perception, and no kekulization is performed.
//! Directional bonds `/` and `\` are downgraded to single bonds with a
//! warning; reactions, wildcards, and extended stereo are rejected.

use std::collections::HashMap;

use crate::element;
use crate::graph::{Atom, BondOrder, Chirality, Diagnostic, MolecularGraph, Severity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        Diagnostic {
            position: self.position,
            message: self.message.clone(),
            severity: Severity::Error,
        }
    }
}

pub fn parse_smiles(text: &str) -> Result<MolecularGraph, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseError::new(0, "empty SMILES input"));
    }
    if let Some(pos) = trimmed.bytes().position(|b| !b.is_ascii()) {
        return Err(ParseError::new(pos, "non-ASCII character"));
    }
    Parser::new(trimmed).run()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    atoms: Vec<Atom>,
    bonds: Vec<(usize, usize, BondOrder)>,
    bonded: std::collections::HashSet<(usize, usize)>,
    branch_stack: Vec<usize>,
    prev: Option<usize>,
    pending_bond: Option<(BondOrder, usize)>,
    ring_open: HashMap<u16, (usize, Option<BondOrder>, usize)>,
    warnings: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            atoms: Vec::new(),
            bonds: Vec::new(),
            bonded: std::collections::HashSet::new(),
            branch_stack: Vec::new(),
            prev: None,
            pending_bond: None,
            ring_open: HashMap::new(),
            warnings: Vec::new(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn run(mut self) -> Result<MolecularGraph, ParseError> {
        while let Some(c) = self.peek() {
            let at = self.pos;
            match c {
                b'[' => {
                    let atom = self.parse_bracket_atom()?;
                    self.push_atom(atom, at)?;
                }
                b'A'..=b'Z' | b'b' | b'c' | b'n' | b'o' | b'p' | b's' => {
                    let atom = self.parse_organic_atom()?;
                    self.push_atom(atom, at)?;
                }
                b'-' | b'=' | b'#' | b':' => {
                    if self.pending_bond.is_some() {
                        return Err(ParseError::new(at, "two bond symbols in a row"));
                    }
                    let order = match c {
                        b'-' => BondOrder::Single,
                        b'=' => BondOrder::Double,
                        b'#' => BondOrder::Triple,
                        _ => BondOrder::Aromatic,
                    };
                    self.pending_bond = Some((order, at));
                    self.pos += 1;
                }
                b'/' | b'\\' => {
                    if self.pending_bond.is_some() {
                        return Err(ParseError::new(at, "two bond symbols in a row"));
                    }
                    self.warnings.push(Diagnostic {
                        position: at,
                        message: "directional bond treated as single".into(),
                        severity: Severity::Warning,
                    });
                    self.pending_bond = Some((BondOrder::Single, at));
                    self.pos += 1;
                }
                b'(' => {
                    if self.pending_bond.is_some() {
                        return Err(ParseError::new(at, "bond symbol before branch open"));
                    }
                    let prev = self
                        .prev
                        .ok_or_else(|| ParseError::new(at, "branch with no preceding atom"))?;
                    self.branch_stack.push(prev);
                    self.pos += 1;
                }
                b')' => {
                    if self.pending_bond.is_some() {
                        return Err(ParseError::new(at, "bond symbol before branch close"));
                    }
                    let prev = self
                        .branch_stack
                        .pop()
                        .ok_or_else(|| ParseError::new(at, "unbalanced parenthesis"))?;
                    self.prev = Some(prev);
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let n = (c - b'0') as u16;
                    self.pos += 1;
                    self.ring_closure(n, at)?;
                }
                b'%' => {
                    self.pos += 1;
                    let d1 = self.peek().filter(u8::is_ascii_digit).ok_or_else(|| {
                        ParseError::new(at, "% must be followed by two digits")
                    })?;
                    self.pos += 1;
                    let d2 = self.peek().filter(u8::is_ascii_digit).ok_or_else(|| {
                        ParseError::new(at, "% must be followed by two digits")
                    })?;
                    self.pos += 1;
                    let n = (d1 - b'0') as u16 * 10 + (d2 - b'0') as u16;
                    self.ring_closure(n, at)?;
                }
                b'.' => {
                    if self.pending_bond.is_some() {
                        return Err(ParseError::new(at, "bond symbol before fragment separator"));
                    }
                    self.prev = None;
                    self.pos += 1;
                }
                b'*' => {
                    return Err(ParseError::new(at, "wildcard atom not supported in molecule input"));
                }
                b'>' => return Err(ParseError::new(at, "reaction syntax not supported")),
                _ => {
                    return Err(ParseError::new(
                        at,
                        format!("unexpected character '{}'", c as char),
                    ));
                }
            }
        }

        if let Some((_, at)) = self.pending_bond {
            return Err(ParseError::new(at, "dangling bond symbol at end of input"));
        }
        if !self.branch_stack.is_empty() {
            return Err(ParseError::new(self.bytes.len(), "unbalanced parenthesis"));
        }
        if let Some((&n, &(_, _, at))) = self.ring_open.iter().min_by_key(|(_, &(_, _, p))| p) {
            return Err(ParseError::new(at, format!("unclosed ring closure {n}")));
        }

        let source = std::str::from_utf8(self.bytes).unwrap().to_string();
        MolecularGraph::from_parts(self.atoms, self.bonds, source, self.warnings)
            .map_err(|e| ParseError::new(0, e.to_string()))
    }

    fn push_atom(&mut self, atom: Atom, at: usize) -> Result<(), ParseError> {
        let idx = self.atoms.len();
        self.atoms.push(atom);
        if let Some(prev) = self.prev {
            let order = match self.pending_bond.take() {
                Some((order, _)) => order,
                None => self.default_order(prev, idx),
            };
            self.add_bond(prev, idx, order, at)?;
        } else if let Some((_, bond_at)) = self.pending_bond {
            return Err(ParseError::new(bond_at, "bond symbol with no preceding atom"));
        }
        self.prev = Some(idx);
        Ok(())
    }

    fn default_order(&self, a: usize, b: usize) -> BondOrder {
        if self.atoms[a].aromatic && self.atoms[b].aromatic {
            BondOrder::Aromatic
        } else {
            BondOrder::Single
        }
    }

    fn add_bond(&mut self, a: usize, b: usize, order: BondOrder, at: usize) -> Result<(), ParseError> {
        let key = (a.min(b), a.max(b));
        if !self.bonded.insert(key) {
            return Err(ParseError::new(at, format!("duplicate bond between atoms {a} and {b}")));
        }
        self.bonds.push((a, b, order));
        Ok(())
    }

    fn ring_closure(&mut self, number: u16, at: usize) -> Result<(), ParseError> {
        let here = self
            .prev
            .ok_or_else(|| ParseError::new(at, "ring closure with no preceding atom"))?;
        let pending = self.pending_bond.take().map(|(o, _)| o);
        match self.ring_open.remove(&number) {
            Some((there, opened_order, _)) => {
                if there == here {
                    return Err(ParseError::new(at, format!("ring closure {number} to the same atom")));
                }
                let order = match (opened_order, pending) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(ParseError::new(
                            at,
                            format!("conflicting bond orders on ring closure {number}"),
                        ));
                    }
                    (Some(a), _) => a,
                    (None, Some(b)) => b,
                    (None, None) => self.default_order(there, here),
                };
                self.add_bond(there, here, order, at)
            }
            None => {
                self.ring_open.insert(number, (here, pending, at));
                Ok(())
            }
        }
    }

    fn parse_organic_atom(&mut self) -> Result<Atom, ParseError> {
        let at = self.pos;
        let c = self.bytes[self.pos];
        if c.is_ascii_lowercase() {
            self.pos += 1;
            let symbol = (c as char).to_uppercase().to_string();
            let z = element::atomic_number(&symbol)
                .filter(|&z| element::aromatic_capable(z))
                .ok_or_else(|| ParseError::new(at, format!("unknown aromatic atom '{}'", c as char)))?;
            let mut atom = Atom::new(z);
            atom.aromatic = true;
            return Ok(atom);
        }
        // try two-letter organic symbols first (Cl, Br)
        if let Some(next) = self.bytes.get(self.pos + 1).copied() {
            if next.is_ascii_lowercase() {
                let two = format!("{}{}", c as char, next as char);
                if two == "Cl" || two == "Br" {
                    self.pos += 2;
                    return Ok(Atom::new(element::atomic_number(&two).unwrap()));
                }
            }
        }
        let symbol = (c as char).to_string();
        let z = element::atomic_number(&symbol)
            .filter(|&z| element::in_organic_subset(z))
            .ok_or_else(|| {
                ParseError::new(at, format!("unknown element symbol '{}' outside brackets", c as char))
            })?;
        self.pos += 1;
        Ok(Atom::new(z))
    }

    fn parse_bracket_atom(&mut self) -> Result<Atom, ParseError> {
        let open = self.pos;
        self.pos += 1; // consume '['

        let mut isotope: Option<u16> = None;
        while let Some(c) = self.peek().filter(u8::is_ascii_digit) {
            let digit = (c - b'0') as u16;
            isotope = Some(match isotope {
                None => digit,
                Some(v) if v < 1000 => v * 10 + digit,
                Some(_) => return Err(ParseError::new(self.pos, "isotope number too large")),
            });
            self.pos += 1;
        }

        let sym_at = self.pos;
        let first = self
            .peek()
            .ok_or_else(|| ParseError::new(open, "unterminated bracket atom"))?;
        let (z, aromatic) = if first.is_ascii_lowercase() {
            self.pos += 1;
            let symbol = (first as char).to_uppercase().to_string();
            let z = element::atomic_number(&symbol)
                .filter(|&z| element::aromatic_capable(z))
                .ok_or_else(|| {
                    ParseError::new(sym_at, format!("unknown aromatic atom '{}'", first as char))
                })?;
            (z, true)
        } else if first.is_ascii_uppercase() {
            let mut symbol = (first as char).to_string();
            self.pos += 1;
            if let Some(next) = self.peek().filter(u8::is_ascii_lowercase) {
                let two = format!("{}{}", first as char, next as char);
                if element::atomic_number(&two).is_some() {
                    symbol = two;
                    self.pos += 1;
                }
            }
            let z = element::atomic_number(&symbol)
                .ok_or_else(|| ParseError::new(sym_at, format!("unknown element symbol '{symbol}'")))?;
            (z, false)
        } else {
            return Err(ParseError::new(sym_at, "expected element symbol in bracket atom"));
        };

        let mut atom = Atom::new(z);
        atom.aromatic = aromatic;
        atom.isotope = isotope;
        atom.explicit_h = Some(0);

        let mut seen_h = false;
        let mut seen_charge = false;
        loop {
            let at = self.pos;
            match self.peek() {
                Some(b']') => {
                    self.pos += 1;
                    return Ok(atom);
                }
                Some(b'@') => {
                    if atom.chirality != Chirality::None {
                        return Err(ParseError::new(at, "repeated chirality tag"));
                    }
                    self.pos += 1;
                    if self.peek() == Some(b'@') {
                        self.pos += 1;
                        atom.chirality = Chirality::Clockwise;
                    } else {
                        atom.chirality = Chirality::CounterClockwise;
                    }
                    if matches!(self.peek(), Some(c) if c.is_ascii_uppercase()) {
                        // @TH1 / @AL1 / @SP1 style extended chirality
                        return Err(ParseError::new(at, "extended chirality class not supported"));
                    }
                }
                Some(b'H') => {
                    if seen_h {
                        return Err(ParseError::new(at, "repeated hydrogen count"));
                    }
                    seen_h = true;
                    self.pos += 1;
                    let mut count: u16 = 1;
                    if let Some(c) = self.peek().filter(u8::is_ascii_digit) {
                        count = (c - b'0') as u16;
                        self.pos += 1;
                        if self.peek().filter(u8::is_ascii_digit).is_some() {
                            return Err(ParseError::new(at, "hydrogen count too large"));
                        }
                    }
                    atom.explicit_h = Some(count as u8);
                }
                Some(c @ (b'+' | b'-')) => {
                    if seen_charge {
                        return Err(ParseError::new(at, "repeated charge specification"));
                    }
                    seen_charge = true;
                    let sign: i16 = if c == b'+' { 1 } else { -1 };
                    self.pos += 1;
                    let mut magnitude: i16 = 1;
                    if let Some(d) = self.peek().filter(u8::is_ascii_digit) {
                        magnitude = (d - b'0') as i16;
                        self.pos += 1;
                    } else {
                        while self.peek() == Some(c) {
                            magnitude += 1;
                            self.pos += 1;
                        }
                    }
                    if magnitude > 9 {
                        return Err(ParseError::new(at, "charge magnitude too large"));
                    }
                    atom.formal_charge = (sign * magnitude) as i8;
                }
                Some(b':') => return Err(ParseError::new(at, "atom map not supported")),
                Some(other) => {
                    return Err(ParseError::new(
                        at,
                        format!("unexpected character '{}' in bracket atom", other as char),
                    ));
                }
                None => return Err(ParseError::new(open, "unterminated bracket atom")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_atom() {
        let g = parse_smiles("C").unwrap();
        assert_eq!(g.n_atoms(), 1);
        assert_eq!(g.n_bonds(), 0);
        assert_eq!(g.atom(0).element, 6);
        assert_eq!(g.implicit_hydrogens(0), 4);
    }

    #[test]
    fn cyclopropane() {
        let g = parse_smiles("C1CC1").unwrap();
        assert_eq!(g.n_atoms(), 3);
        assert_eq!(g.n_bonds(), 3);
        assert_eq!(g.rings(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn benzene() {
        let g = parse_smiles("c1ccccc1").unwrap();
        assert_eq!(g.n_atoms(), 6);
        assert_eq!(g.n_bonds(), 6);
        assert!(g.atoms().iter().all(|a| a.aromatic));
        assert!(g.bonds().iter().all(|b| b.order == BondOrder::Aromatic));
        assert_eq!(g.rings().len(), 1);
        assert!(g.atoms().iter().enumerate().all(|(i, _)| g.implicit_hydrogens(i) == 1));
    }

    #[test]
    fn unclosed_ring_reports_offset() {
        let err = parse_smiles("C1CC").unwrap_err();
        assert_eq!(err.position, 1);
        assert!(err.message.contains("unclosed ring closure"), "{}", err.message);
    }

    #[test]
    fn unbalanced_parenthesis() {
        assert!(parse_smiles("C(C").unwrap_err().message.contains("unbalanced"));
        assert!(parse_smiles("CC)C").unwrap_err().message.contains("unbalanced"));
    }

    #[test]
    fn conflicting_ring_bond_orders() {
        let err = parse_smiles("C=1CCC#1").unwrap_err();
        assert!(err.message.contains("conflicting bond orders"), "{}", err.message);
        // agreeing orders are fine, as is specifying only one side
        assert!(parse_smiles("C=1CCC=1").is_ok());
        assert!(parse_smiles("C=1CCC1").is_ok());
    }

    #[test]
    fn bracket_atoms() {
        let g = parse_smiles("[NH4+]").unwrap();
        assert_eq!(g.atom(0).element, 7);
        assert_eq!(g.atom(0).formal_charge, 1);
        assert_eq!(g.implicit_hydrogens(0), 4);

        let g = parse_smiles("[13CH3-]").unwrap();
        assert_eq!(g.atom(0).isotope, Some(13));
        assert_eq!(g.atom(0).formal_charge, -1);
        assert_eq!(g.implicit_hydrogens(0), 3);

        let g = parse_smiles("[Fe+2]").unwrap();
        assert_eq!(g.atom(0).element, 26);
        assert_eq!(g.atom(0).formal_charge, 2);

        let g = parse_smiles("[O--]").unwrap();
        assert_eq!(g.atom(0).formal_charge, -2);
    }

    #[test]
    fn chirality_tags() {
        let g = parse_smiles("C[C@H](N)C(=O)O").unwrap();
        assert_eq!(g.atom(1).chirality, Chirality::CounterClockwise);
        let g = parse_smiles("C[C@@H](N)C(=O)O").unwrap();
        assert_eq!(g.atom(1).chirality, Chirality::Clockwise);
    }

    #[test]
    fn fragments_and_percent_rings() {
        let g = parse_smiles("[Na+].[Cl-]").unwrap();
        assert_eq!(g.n_components(), 2);
        assert_eq!(g.n_bonds(), 0);

        let g = parse_smiles("C%10CC%10").unwrap();
        assert_eq!(g.rings().len(), 1);
    }

    #[test]
    fn two_letter_organic() {
        let g = parse_smiles("ClCBr").unwrap();
        assert_eq!(g.atom(0).element, 17);
        assert_eq!(g.atom(2).element, 35);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(parse_smiles("").is_err());
        assert!(parse_smiles("C*").is_err());
        assert!(parse_smiles("CC>>CC").is_err());
        assert!(parse_smiles("[C:1]").is_err());
        assert!(parse_smiles("[Xx]").is_err());
        assert!(parse_smiles("Q").is_err());
        assert!(parse_smiles("C=").is_err());
        assert!(parse_smiles("C=#C").is_err());
        assert!(parse_smiles("[CH").is_err());
    }

    #[test]
    fn directional_bonds_downgrade_with_warning() {
        let g = parse_smiles("C/C=C/C").unwrap();
        assert_eq!(g.warnings().len(), 2);
        assert_eq!(g.bond_between(0, 1).unwrap().order, BondOrder::Single);
    }

    #[test]
    fn hydroxyl_hydrogens() {
        let g = parse_smiles("CCO").unwrap();
        assert_eq!(g.implicit_hydrogens(2), 1);
        assert_eq!(g.implicit_hydrogens(1), 2);
    }

    #[test]
    fn aromatic_default_bond_between_aromatic_atoms() {
        let g = parse_smiles("cc").unwrap();
        assert_eq!(g.bond(0).order, BondOrder::Aromatic);
        let g = parse_smiles("Cc1ccccc1").unwrap();
        assert_eq!(g.bond_between(0, 1).unwrap().order, BondOrder::Single);
    }

    #[test]
    fn explicit_hydrogen_atoms() {
        let g = parse_smiles("[H]O[H]").unwrap();
        assert_eq!(g.n_atoms(), 3);
        assert_eq!(g.total_hydrogens(1), 2);
        assert_eq!(g.implicit_hydrogens(1), 0);
    }
}
