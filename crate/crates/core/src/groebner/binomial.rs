//! Buchberger's algorithm on pure-difference binomials.

use super::{Monomial, PolyRing, TermOrder};
use crate::graph::Graph;
use std::cmp::Ordering;
use std::collections::HashSet;

/// A difference of two monomials `lead - trail`, or a single monomial when
/// `trail` is `None`. The invariant `lead > trail` holds for the order the
/// element was normalized under; the represented ideal element is monic up
/// to sign, which is all that matters over a field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    lead: Monomial,
    trail: Option<Monomial>,
}

impl Binomial {
    pub fn monomial(m: Monomial) -> Self {
        Binomial { lead: m, trail: None }
    }

    /// `a - b` normalized so the larger side leads; `None` when `a == b`.
    pub fn difference(a: Monomial, b: Monomial, order: TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, trail: Some(b) }),
            Ordering::Less => Some(Binomial { lead: b, trail: Some(a) }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> Option<&Monomial> {
        self.trail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.trail.is_none()
    }

    pub fn total_degree(&self) -> u32 {
        self.lead.total_degree()
    }
}

/// The defining generators `x_i y_j - x_j y_i`, one per edge `{i, j}` with
/// `i < j`, normalized for `order`.
pub fn edge_generators(ring: &PolyRing, g: &Graph, order: TermOrder) -> Vec<Binomial> {
    let nv = ring.nvars();
    g.edges()
        .into_iter()
        .map(|(i, j)| {
            let a = Monomial::var(nv, ring.x(i)).mul(&Monomial::var(nv, ring.y(j)));
            let b = Monomial::var(nv, ring.x(j)).mul(&Monomial::var(nv, ring.y(i)));
            Binomial::difference(a, b, order).expect("i < j makes the sides distinct")
        })
        .collect()
}

/// Fully reduces `f` modulo `basis`; `None` means it reduced to zero.
///
/// Reduction replaces a monomial `q * lead(g)` by `q * trail(g)` (or drops
/// it when `g` is a monomial), so every intermediate value stays in the
/// two-monomial class and strictly decreases in the order; termination
/// follows from the order being a well-order.
pub fn normal_form(f: &Binomial, basis: &[Binomial], order: TermOrder) -> Option<Binomial> {
    let mut lead = Some(f.lead.clone());
    let mut trail = f.trail.clone();
    // Reduce the leading monomial until irreducible; the trail side is
    // already below it and is cleaned up afterwards.
    'outer: loop {
        let Some(cur) = lead.as_ref() else { break };
        for g in basis {
            if g.lead.divides(cur) {
                let q = g.lead.div_into(cur);
                match &g.trail {
                    None => {
                        // Monomial reducer: the term vanishes.
                        lead = trail.take();
                        continue 'outer;
                    }
                    Some(t) => {
                        let replacement = q.mul(t);
                        match trail.as_ref().map(|tr| order.cmp(&replacement, tr)) {
                            Some(Ordering::Equal) => {
                                lead = None;
                                trail = None;
                            }
                            Some(Ordering::Less) => {
                                lead = trail.take();
                                trail = Some(replacement);
                            }
                            _ => lead = Some(replacement),
                        }
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    let lead = lead?;
    // Tail reduction; each replacement strictly decreases, and the order
    // being multiplicative keeps the tail below the lead.
    'tail: loop {
        let Some(cur) = trail.as_ref() else { break };
        for g in basis {
            if g.lead.divides(cur) {
                let q = g.lead.div_into(cur);
                trail = g.trail.as_ref().map(|t| q.mul(t));
                continue 'tail;
            }
        }
        break;
    }
    Some(Binomial { lead, trail })
}

/// S-polynomial of `f` and `g`, already in normalized two-monomial form;
/// `None` when it is literally zero.
fn s_polynomial(f: &Binomial, g: &Binomial, order: TermOrder) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let qf = f.lead.div_into(&l);
    let qg = g.lead.div_into(&l);
    match (&f.trail, &g.trail) {
        (None, None) => None,
        (None, Some(tg)) => Some(Binomial::monomial(qg.mul(tg))),
        (Some(tf), None) => Some(Binomial::monomial(qf.mul(tf))),
        (Some(tf), Some(tg)) => Binomial::difference(qg.mul(tg), qf.mul(tf), order),
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`, sorted by
/// decreasing leading monomial.
///
/// Normal selection strategy with the coprimality criterion and the chain
/// criterion; the basis is interreduced at the end. Because only exponent
/// vectors are manipulated, the result is the reduced basis over every
/// coefficient field at once.
pub fn buchberger(gens: &[Binomial], order: TermOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: Vec<(u32, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let deg = basis[i].lead.lcm(&basis[j].lead).total_degree();
            pending.insert((i, j));
            queue.push((deg, i, j));
        }
    }
    while !queue.is_empty() {
        let pos = queue
            .iter()
            .enumerate()
            .min_by_key(|(_, &(d, i, j))| (d, i, j))
            .map(|(p, _)| p)
            .unwrap();
        let (_, i, j) = queue.swap_remove(pos);
        pending.remove(&(i, j));
        if basis[i].lead.is_coprime_with(&basis[j].lead) {
            continue;
        }
        if chain_criterion(&basis, &pending, i, j) {
            continue;
        }
        let Some(s) = s_polynomial(&basis[i], &basis[j], order) else {
            continue;
        };
        let Some(nf) = normal_form(&s, &basis, order) else {
            continue;
        };
        let k = basis.len();
        for i2 in 0..k {
            let deg = basis[i2].lead.lcm(&nf.lead).total_degree();
            pending.insert((i2, k));
            queue.push((deg, i2, k));
        }
        basis.push(nf);
    }
    interreduce(basis, order)
}

/// True when some third basis element divides the pair's lcm and both
/// sub-pairs have already been handled.
fn chain_criterion(
    basis: &[Binomial],
    pending: &HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) -> bool {
    let l = basis[i].lead.lcm(&basis[j].lead);
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lead.divides(&l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn interreduce(basis: Vec<Binomial>, order: TermOrder) -> Vec<Binomial> {
    // Keep only elements with minimal leading monomials.
    let mut keep: Vec<Binomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i
                && h.lead.divides(&g.lead)
                && (h.lead != g.lead || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Tail-reduce each against the others; normal forms are canonical once
    // the leading terms form a Groebner basis, so one pass suffices.
    let reduced: Vec<Binomial> = (0..keep.len())
        .map(|i| {
            let others: Vec<Binomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            match &keep[i].trail {
                None => keep[i].clone(),
                Some(t) => {
                    let nf = normal_form(&Binomial::monomial(t.clone()), &others, order);
                    Binomial {
                        lead: keep[i].lead.clone(),
                        trail: nf.map(|b| b.lead),
                    }
                }
            }
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| order.cmp(&b.lead, &a.lead));
    reduced
}

/// Minimal generators of the initial ideal of a Groebner basis.
pub fn initial_ideal(gb: &[Binomial]) -> super::MonomialIdeal {
    let nvars = gb.first().map_or(0, |g| g.lead.nvars());
    super::MonomialIdeal::new(nvars, gb.iter().map(|g| g.lead.clone()).collect())
}
