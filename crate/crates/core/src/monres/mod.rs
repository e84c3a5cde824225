//! Minimal free resolutions of monomial ideals.
//!
//! Graded Betti numbers are computed over a prime field with Hochster's
//! formula: for a squarefree monomial ideal and a set of variables sigma,
//! beta_{i,sigma} is the rank of the reduced homology of the Stanley-Reisner
//! complex restricted to sigma, in dimension |sigma| - i - 2.  Ideals that
//! are not squarefree are polarized first, which preserves the graded Betti
//! numbers with total degrees unchanged.

mod homology;
mod taylor;

pub use taylor::taylor_betti_table;

pub(crate) use homology::is_prime;

use crate::groebner::{Monomial, MonomialIdeal};
use homology::{homology_from_levels, Fp};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest number of active variables the Hochster subset scan accepts.
pub const BETTI_VARIABLE_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonresError {
    #[error("ideal involves {nvars} active variables, above the cap of {cap}")]
    CapExceeded { nvars: usize, cap: usize },
    #[error("generator {generator} is not squarefree")]
    NotSquarefree { generator: String },
    #[error("Betti table is empty")]
    EmptyTable,
}

/// A simplicial complex on ground set {0, .., ground-1}; faces are vertex
/// bitmasks and only the maximal ones are stored.  A nonvoid complex with
/// no vertices has the single facet 0 (the empty face).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from a spanning set of faces, keeping the maximal
    /// ones.  An empty list yields the void complex.
    pub fn from_faces(ground: usize, faces: &[u64]) -> Self {
        assert!(ground <= 63, "ground set too large for bitmask faces");
        let mut facets: Vec<u64> = Vec::new();
        for &f in faces {
            debug_assert_eq!(f >> ground, 0, "face outside the ground set");
            if facets.iter().any(|&g| f & g == f && f != g) {
                continue;
            }
            facets.retain(|&g| g & f != g || g == f);
            if !facets.contains(&f) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|&f| (f.count_ones(), f));
        SimplicialComplex { ground, facets }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facet bitmasks, sorted by size then numeric value.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted vertex lists.
    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&f| (0..self.ground).filter(|&v| f >> v & 1 == 1).collect())
            .collect()
    }

    /// All faces grouped by vertex count: entry s lists the faces with s
    /// vertices.  Empty for the void complex.
    fn levels(&self) -> Vec<Vec<u64>> {
        use std::collections::HashSet;
        if self.facets.is_empty() {
            return Vec::new();
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &facet in &self.facets {
            // Enumerate the subsets of each facet.
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let top = self.facets.iter().map(|f| f.count_ones()).max().unwrap() as usize;
        let mut levels = vec![Vec::new(); top + 1];
        for face in seen {
            levels[face.count_ones() as usize].push(face);
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        levels
    }
}

/// Stanley-Reisner complex of a squarefree monomial ideal: the faces are
/// the subsets of variables whose product lies outside the ideal.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex, MonresError> {
    let n = ideal.nvars();
    if n > BETTI_VARIABLE_CAP {
        return Err(MonresError::CapExceeded {
            nvars: n,
            cap: BETTI_VARIABLE_CAP,
        });
    }
    let gens = squarefree_masks(ideal)?;
    let mut faces = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if gens.iter().all(|&g| mask & g != g) {
            faces.push(mask);
        }
    }
    Ok(SimplicialComplex::from_faces(n, &faces))
}

/// Ranks of the reduced homology over F_p, listed from dimension -1 up to
/// the dimension of the complex.  The void complex has no homology at all
/// and yields an empty list.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, characteristic: u32) -> Vec<usize> {
    homology_from_levels(&complex.levels(), Fp::new(characteristic))
}

/// Graded Betti numbers of a monomial ideal over a field of the given
/// characteristic: `rank(i, j)` is the rank of the i-th syzygy module in
/// total degree j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    characteristic: u32,
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    fn new(characteristic: u32) -> Self {
        BettiTable {
            characteristic,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: usize, j: u32, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn rank(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as (homological degree, total degree, rank), sorted.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn regularity(&self) -> Option<u32> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as u32)
            .max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<(usize, u32), usize>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (&(i, j), &rank) in self.0 {
                    seq.serialize_element(&[i, j as usize, rank])?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("BettiTable", 5)?;
        s.serialize_field("characteristic", &self.characteristic)?;
        s.serialize_field("entries", &Entries(&self.entries))?;
        s.serialize_field("reg", &self.regularity())?;
        s.serialize_field("pd", &self.projective_dimension())?;
        s.end()
    }
}

/// Summary invariants read off a Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiInvariants {
    /// Castelnuovo-Mumford regularity: max over entries of j - i.
    pub reg: u32,
    /// Projective dimension: largest homological degree with a syzygy.
    pub pd: usize,
    /// Total rank in the last step of the resolution.
    pub last_total_rank: usize,
}

/// Reads regularity, projective dimension, and the final total rank off a
/// Betti table; errors if the table is empty.
pub fn invariants_from_betti(table: &BettiTable) -> Result<BettiInvariants, MonresError> {
    let reg = table.regularity().ok_or(MonresError::EmptyTable)?;
    let pd = table.projective_dimension().unwrap();
    let last_total_rank = table
        .entries()
        .filter(|&(i, _, _)| i == pd)
        .map(|(_, _, r)| r)
        .sum();
    Ok(BettiInvariants {
        reg,
        pd,
        last_total_rank,
    })
}

/// Polarization: each generator power x^e is replaced by a squarefree
/// product of e fresh variables, one block of slots per original variable.
/// Graded Betti numbers and total degrees are unchanged.  Variables that
/// appear in no generator get no slot.
pub fn polarize(ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = ideal.nvars();
    let mut width = vec![0u32; n];
    for g in ideal.generators() {
        for v in 0..n {
            width[v] = width[v].max(g.exponent(v));
        }
    }
    let mut offset = vec![0usize; n];
    let mut total = 0usize;
    for v in 0..n {
        offset[v] = total;
        total += width[v] as usize;
    }
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; total];
            for v in 0..n {
                for slot in 0..g.exponent(v) as usize {
                    exps[offset[v] + slot] = 1;
                }
            }
            Monomial::from_exponents(exps)
        })
        .collect();
    MonomialIdeal::new(total, gens)
}

fn squarefree_masks(ideal: &MonomialIdeal) -> Result<Vec<u64>, MonresError> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            let mut mask = 0u64;
            for v in 0..ideal.nvars() {
                match g.exponent(v) {
                    0 => {}
                    1 => mask |= 1u64 << v,
                    _ => {
                        return Err(MonresError::NotSquarefree {
                            generator: format!("{g:?}"),
                        })
                    }
                }
            }
            Ok(mask)
        })
        .collect()
}

/// Graded Betti numbers of a monomial ideal over the prime field of the
/// given characteristic, via Hochster's formula with the default variable
/// cap.
pub fn betti_table(ideal: &MonomialIdeal, characteristic: u32) -> Result<BettiTable, MonresError> {
    betti_table_with_cap(ideal, characteristic, BETTI_VARIABLE_CAP)
}

/// As [`betti_table`], with an explicit cap on the number of active
/// variables in the subset scan.
pub fn betti_table_with_cap(
    ideal: &MonomialIdeal,
    characteristic: u32,
    cap: usize,
) -> Result<BettiTable, MonresError> {
    assert!(is_prime(characteristic));
    let squarefree;
    let ideal = if ideal
        .generators()
        .iter()
        .any(|g| (0..ideal.nvars()).any(|v| g.exponent(v) > 1))
    {
        squarefree = polarize(ideal);
        &squarefree
    } else {
        ideal
    };
    let mut table = BettiTable::new(characteristic);
    if ideal.is_zero() {
        return Ok(table);
    }
    let gens = squarefree_masks(ideal).expect("polarized ideal is squarefree");
    let support = gens.iter().fold(0u64, |acc, &g| acc | g);
    let active = support.count_ones() as usize;
    if active > cap.min(63) {
        return Err(MonresError::CapExceeded {
            nvars: active,
            cap: cap.min(63),
        });
    }

    // Faces of the full Stanley-Reisner complex on the support variables;
    // restricting to sigma just filters this list.
    let mut faces: Vec<u64> = Vec::new();
    {
        let mut sub = support;
        loop {
            if gens.iter().all(|&g| sub & g != g) {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & support;
        }
    }

    let f = Fp::new(characteristic);
    let mut sigma = support;
    loop {
        if sigma != 0 {
            scan_subset(sigma, &gens, &faces, f, &mut table);
        }
        if sigma == 0 {
            break;
        }
        sigma = (sigma - 1) & support;
    }
    Ok(table)
}

fn scan_subset(sigma: u64, gens: &[u64], faces: &[u64], f: Fp, table: &mut BettiTable) {
    // A vertex of sigma lying in no generator inside sigma makes the
    // restricted complex a cone over it, so all reduced homology vanishes.
    let covered = gens
        .iter()
        .filter(|&&g| sigma & g == g)
        .fold(0u64, |acc, &g| acc | g);
    if covered != sigma {
        return;
    }
    let size = sigma.count_ones() as usize;
    let mut levels = vec![Vec::new(); size];
    for &face in faces {
        if sigma & face == face {
            levels[face.count_ones() as usize].push(face);
        }
    }
    while levels.last().is_some_and(|l| l.is_empty()) {
        levels.pop();
    }
    let ranks = homology_from_levels(&levels, f);
    for (s, &rank) in ranks.iter().enumerate() {
        if rank > 0 {
            // Homology in dimension s-1 lands in homological degree
            // |sigma| - s - 1 and total degree |sigma|.
            let i = size - s - 1;
            table.add(i, size as u32, rank);
        }
    }
}
