//! Monomial ideals and bounded-degree graded-piece dimensions.

use super::{Binomial, Monomial};
use std::collections::HashMap;

/// A monomial ideal held by its unique minimal generating set, sorted by
/// (degree, exponents) for reproducible output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        // Sort by degree, then by exponents following variable precedence,
        // so x1-heavy generators print first.
        gens.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|(i, m)| {
                !gens[..*i].iter().any(|earlier| earlier.divides(m))
            })
            .map(|(_, m)| m.clone())
            .collect();
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    /// Number of degree-`d` monomials lying in the ideal.
    pub fn slice_dimension(&self, d: u32) -> usize {
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Number of degree-`d` monomials lying in both ideals.
    pub fn intersection_slice_dimension(&self, other: &MonomialIdeal, d: u32) -> usize {
        debug_assert_eq!(self.nvars, other.nvars);
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| self.contains(m) && other.contains(m))
            .count()
    }
}

/// All monomials of total degree `d` in `nvars` variables, in a fixed
/// deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill_monomials(&mut out, &mut cur, 0, d);
    out
}

fn fill_monomials(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, idx: usize, remaining: u32) {
    if idx + 1 == cur.len() {
        cur[idx] = remaining;
        out.push(Monomial::from_exponents(cur.clone()));
        cur[idx] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[idx] = e;
        fill_monomials(out, cur, idx + 1, remaining - e);
        cur[idx] = 0;
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn make_node(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

/// Dimension of the degree-`d` piece of the ideal generated by `gens`
/// (pure-difference binomials and monomials), over any field.
///
/// The piece is spanned by the products `m * g` over monomials `m` of
/// complementary degree. Each product is `e_a - e_b` or `e_a` in the
/// monomial basis; viewing those as edges of a graph with one extra ground
/// vertex for the single-monomial case, the span's dimension is the size of
/// a spanning forest. Cycles telescope to dependencies over every
/// coefficient field, so the count is field-independent.
pub fn slice_dimension(nvars: usize, gens: &[Binomial], d: u32) -> usize {
    let mut uf = UnionFind::new();
    let ground = uf.make_node();
    let mut ids: HashMap<Monomial, usize> = HashMap::new();
    let mut merges = 0usize;
    for g in gens {
        let dg = g.total_degree();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - dg) {
            let a = *ids
                .entry(g.lead().mul(&m))
                .or_insert_with(|| uf.make_node());
            let b = match g.trail() {
                Some(t) => *ids.entry(t.mul(&m)).or_insert_with(|| uf.make_node()),
                None => ground,
            };
            if uf.union(a, b) {
                merges += 1;
            }
        }
    }
    merges
}

/// Dimension of the degree-`d` piece of the sum of two ideals.
pub fn sum_slice_dimension(nvars: usize, a: &[Binomial], b: &[Binomial], d: u32) -> usize {
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    slice_dimension(nvars, &all, d)
}

/// Dimension of the degree-`d` piece of the intersection of two ideals,
/// from the dimension formula for a sum of subspaces.
pub fn intersection_slice_dimension(
    nvars: usize,
    a: &[Binomial],
    b: &[Binomial],
    d: u32,
) -> usize {
    slice_dimension(nvars, a, d) + slice_dimension(nvars, b, d)
        - sum_slice_dimension(nvars, a, b, d)
}
