//! Betti numbers via the Taylor complex, kept as an independent reference
//! implementation for cross-checking the Hochster-formula path.

use super::homology::{rank_mod_p, Fp};
use super::BettiTable;
use crate::groebner::{Monomial, MonomialIdeal};
use std::collections::HashMap;

const TAYLOR_GENERATOR_CAP: usize = 16;

/// Graded Betti numbers from the Taylor complex on the minimal generators:
/// the chain group in step s is spanned by the size-s generator subsets,
/// graded by the degree of the subset lcm, and after tensoring with the
/// base field a boundary entry survives exactly when dropping the generator
/// leaves the lcm unchanged.  Exponential in the generator count.
pub fn taylor_betti_table(ideal: &MonomialIdeal, characteristic: u32) -> BettiTable {
    let f = Fp::new(characteristic);
    let gens = ideal.generators();
    let r = gens.len();
    assert!(
        r <= TAYLOR_GENERATOR_CAP,
        "Taylor reference supports at most {TAYLOR_GENERATOR_CAP} generators"
    );
    let mut table = BettiTable::new(characteristic);
    if r == 0 {
        return table;
    }

    let one = Monomial::one(ideal.nvars());
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << r);
    for mask in 0u32..(1u32 << r) {
        let mut m = one.clone();
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                m = m.lcm(g);
            }
        }
        lcms.push(m);
    }

    // Subsets bucketed by (size, lcm degree); the tensored complex splits
    // along the degree because surviving entries preserve the lcm.
    let mut buckets: HashMap<(usize, u32), Vec<u32>> = HashMap::new();
    for mask in 0u32..(1u32 << r) {
        let key = (
            mask.count_ones() as usize,
            lcms[mask as usize].total_degree(),
        );
        buckets.entry(key).or_default().push(mask);
    }

    let boundary_rank = |s: usize, j: u32| -> usize {
        let Some(cols) = buckets.get(&(s, j)) else {
            return 0;
        };
        let Some(rows) = buckets.get(&(s - 1, j)) else {
            return 0;
        };
        let row_index: HashMap<u32, usize> =
            rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mat = vec![vec![0u32; cols.len()]; rows.len()];
        for (c, &mask) in cols.iter().enumerate() {
            let mut pos = 0u32;
            for k in 0..r {
                if mask >> k & 1 == 0 {
                    continue;
                }
                let sub = mask & !(1u32 << k);
                if lcms[sub as usize] == lcms[mask as usize] {
                    let coeff = if pos % 2 == 0 { 1 } else { f.neg(1) };
                    mat[row_index[&sub]][c] = coeff;
                }
                pos += 1;
            }
        }
        rank_mod_p(mat, f)
    };

    let mut keys: Vec<(usize, u32)> = buckets.keys().copied().collect();
    keys.sort_unstable();
    for (s, j) in keys {
        if s == 0 {
            continue;
        }
        let dim = buckets[&(s, j)].len();
        let homology = dim - boundary_rank(s, j) - boundary_rank(s + 1, j);
        // Step s of the resolution of the quotient is syzygy degree s-1 of
        // the ideal.
        table.add(s - 1, j, homology);
    }
    table
}
