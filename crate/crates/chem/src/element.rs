//! Periodic-table data: symbols, atomic masses, standard valence lists.

use std::collections::HashMap;

use once_cell::sync::Lazy;

struct PeriodicTable {
    symbols: Vec<&'static str>,      // index = atomic number, [0] unused
    masses: Vec<f64>,                // index = atomic number
    by_symbol: HashMap<&'static str, u8>,
    isotope_masses: HashMap<(u8, u16), f64>,
}

static TABLE: Lazy<PeriodicTable> = Lazy::new(|| {
    let mut symbols = vec![""; 119];
    let mut masses = vec![0.0; 119];
    let mut by_symbol = HashMap::new();
    for line in include_str!("../data/elements.tsv").lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let z: usize = cols.next().unwrap().parse().expect("elements.tsv: atomic number");
        let sym = cols.next().expect("elements.tsv: symbol");
        let mass: f64 = cols.next().unwrap().parse().expect("elements.tsv: mass");
        symbols[z] = sym;
        masses[z] = mass;
        by_symbol.insert(sym, z as u8);
    }
    assert!(
        (1..=118).all(|z| !symbols[z].is_empty() && masses[z] > 0.0),
        "elements.tsv must cover atomic numbers 1-118"
    );
    let mut isotope_masses = HashMap::new();
    for line in include_str!("../data/isotopes.tsv").lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let z: u8 = cols.next().unwrap().parse().expect("isotopes.tsv: atomic number");
        let a: u16 = cols.next().unwrap().parse().expect("isotopes.tsv: mass number");
        let mass: f64 = cols.next().unwrap().parse().expect("isotopes.tsv: mass");
        isotope_masses.insert((z, a), mass);
    }
    PeriodicTable { symbols, masses, by_symbol, isotope_masses }
});

/// Atomic number for an element symbol (`"C"` → 6, `"Cl"` → 17).
pub fn atomic_number(symbol: &str) -> Option<u8> {
    TABLE.by_symbol.get(symbol).copied()
}

/// Element symbol for an atomic number.
pub fn symbol(z: u8) -> Option<&'static str> {
    TABLE.symbols.get(z as usize).copied().filter(|s| !s.is_empty())
}

/// Standard atomic weight in g/mol.
pub fn atomic_mass(z: u8) -> Option<f64> {
    TABLE.masses.get(z as usize).copied().filter(|&m| m > 0.0)
}

/// Mass of a specific isotope; falls back to the bare mass number when the
/// isotope is not tabulated.
pub fn isotope_mass(z: u8, mass_number: u16) -> f64 {
    TABLE
        .isotope_masses
        .get(&(z, mass_number))
        .copied()
        .unwrap_or(mass_number as f64)
}

/// Standard valences for the SMILES organic subset, smallest first.
/// Elements outside the subset have no implicit-hydrogen model and return `&[]`.
pub fn standard_valences(z: u8) -> &'static [u8] {
    match z {
        5 => &[3],          // B
        6 => &[4],          // C
        7 => &[3, 5],       // N
        8 => &[2],          // O
        15 => &[3, 5],      // P
        16 => &[2, 4, 6],   // S
        9 | 17 | 35 | 53 => &[1], // F, Cl, Br, I
        _ => &[],
    }
}

/// True for elements writable without brackets in SMILES.
pub fn in_organic_subset(z: u8) -> bool {
    matches!(z, 5 | 6 | 7 | 8 | 9 | 15 | 16 | 17 | 35 | 53)
}

/// Elements accepted in lowercase (aromatic) form.
pub fn aromatic_capable(z: u8) -> bool {
    matches!(z, 5 | 6 | 7 | 8 | 15 | 16)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_round_trip() {
        for z in 1..=118u8 {
            let sym = symbol(z).unwrap();
            assert_eq!(atomic_number(sym), Some(z));
        }
    }

    #[test]
    fn two_letter_symbols() {
        assert_eq!(atomic_number("Cl"), Some(17));
        assert_eq!(atomic_number("Br"), Some(35));
        assert_eq!(atomic_number("C"), Some(6));
        assert_eq!(atomic_number("Xx"), None);
    }

    #[test]
    fn masses_match_reference_values() {
        assert!((atomic_mass(6).unwrap() - 12.011).abs() < 1e-9);
        assert!((atomic_mass(1).unwrap() - 1.00794).abs() < 1e-9);
        assert!((atomic_mass(8).unwrap() - 15.9994).abs() < 1e-9);
    }

    #[test]
    fn deuterium_mass() {
        assert!((isotope_mass(1, 2) - 2.014102).abs() < 1e-6);
        // untabulated isotope falls back to the mass number
        assert_eq!(isotope_mass(26, 60), 60.0);
    }
}
