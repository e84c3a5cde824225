//! Degreewise verification that the minimal primes cut out exactly the
//! binomial edge ideal, and of additivity of initial ideals across sums.

use super::{OracleError, VerificationReport};
use crate::graph::{compose, Composition, Graph, VertexSet};
use crate::groebner::{
    buchberger, edge_generators, initial_ideal, monomials_of_degree, normal_form, slice_dimension,
    Binomial, Monomial, PolyRing, TermOrder, LEX,
};
use crate::primes::{cut_point_sets, prime_of_cutset, CutSet, PrimeDescription};
use std::collections::HashMap;
use std::time::Instant;

/// Vertex cap for the degreewise decomposition check; the monomial bases
/// involved grow as binomial coefficients in 2n variables.
pub const DECOMPOSITION_VERTEX_CAP: usize = 6;

/// Degree cap for `verify_initial_additivity`.
pub const ADDITIVITY_DEGREE_CAP: u32 = 10;

/// Generators of the prime indexed by a cut set: both variables of every
/// removed vertex, plus the edge binomials of the completed parts.
pub fn prime_binomials(ring: &PolyRing, desc: &PrimeDescription, order: TermOrder) -> Vec<Binomial> {
    let nv = ring.nvars();
    let mut out = Vec::new();
    for &i in &desc.variables {
        out.push(Binomial::monomial(Monomial::var(nv, ring.x(i))));
        out.push(Binomial::monomial(Monomial::var(nv, ring.y(i))));
    }
    for part in &desc.cliques {
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                let (u, v) = if u < v { (u, v) } else { (v, u) };
                let lead = Monomial::var(nv, ring.x(u)).mul(&Monomial::var(nv, ring.y(v)));
                let trail = Monomial::var(nv, ring.x(v)).mul(&Monomial::var(nv, ring.y(u)));
                out.push(Binomial::difference(lead, trail, order).expect("distinct vertices"));
            }
        }
    }
    out
}

/// Incremental rank over F_2 with rows kept as sorted coordinate lists.
struct SparseF2 {
    pivots: HashMap<u32, usize>,
    rows: Vec<Vec<u32>>,
}

impl SparseF2 {
    fn new() -> Self {
        SparseF2 {
            pivots: HashMap::new(),
            rows: Vec::new(),
        }
    }

    /// Reduces `row` against the basis; returns false iff it was dependent.
    fn insert(&mut self, mut row: Vec<u32>) -> bool {
        loop {
            let Some(&p) = row.first() else {
                return false;
            };
            match self.pivots.get(&p) {
                Some(&i) => row = xor_sorted(&row, &self.rows[i]),
                None => {
                    self.pivots.insert(p, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Verifies degreewise, up to `max_degree`, that the intersection of the
/// cut-set primes equals the binomial edge ideal of `g`.
///
/// Two independent checks run. First, every edge binomial reduces to zero
/// modulo the basis of P_T for every subset T of the vertices, so the ideal
/// sits inside every candidate prime and restricting to the cut-point sets
/// loses nothing. Second, for each degree the quotient by the ideal maps
/// into the product of the quotients by the cut-set primes; that map is
/// injective iff the intersection is no larger than the ideal in that
/// degree. Injectivity is certified by a full-rank computation over F_2,
/// which bounds the rank over the rationals from below, so a pass here
/// proves the equality in characteristic 0 as well. Reduction of a monomial
/// modulo a pure-difference basis is again a monomial with coefficient one,
/// which keeps the matrix 0/1 and the F_2 argument sound.
pub fn verify_primary_decomposition(g: &Graph, max_degree: u32) -> Result<VerificationReport, OracleError> {
    let started = Instant::now();
    let n = g.n();
    if n > DECOMPOSITION_VERTEX_CAP {
        return Err(OracleError::CapExceeded {
            n,
            cap: DECOMPOSITION_VERTEX_CAP,
        });
    }
    let max_allowed = n as u32 + 2;
    if max_degree > max_allowed {
        return Err(OracleError::DegreeCapExceeded {
            requested: max_degree,
            max: max_allowed,
        });
    }
    let mut report = VerificationReport::new("primary_decomposition");
    let g6 = g.to_graph6();
    let ring = PolyRing::new(n);
    let gens = edge_generators(&ring, g, LEX);
    let gb = buchberger(&gens, LEX);
    let leads: Vec<&Monomial> = gb.iter().map(|b| b.lead()).collect();

    // Containment in P_T for every T, not only the cut-point sets; this is
    // what makes the restriction to C(G) harmless.
    for mask in 0u64..(1 << n) {
        let t: VertexSet = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let cut = CutSet::new(g, t);
        let pgb = buchberger(&prime_binomials(&ring, &prime_of_cutset(g, &cut)?, LEX), LEX);
        report.instances += 1;
        for f in &gens {
            if let Some(r) = normal_form(f, &pgb, LEX) {
                report.fail(
                    format!("{} T={:?}", g6, cut.t),
                    format!(
                        "edge generator {} has nonzero remainder {}",
                        ring.format_binomial(f),
                        ring.format_binomial(&r)
                    ),
                );
            }
        }
    }

    let cuts = cut_point_sets(g)?;
    let prime_bases: Vec<Vec<Binomial>> = cuts
        .iter()
        .map(|c| Ok(buchberger(&prime_binomials(&ring, &prime_of_cutset(g, c)?, LEX), LEX)))
        .collect::<Result<_, OracleError>>()?;

    for d in 0..=max_degree {
        report.instances += 1;
        let all = monomials_of_degree(ring.nvars(), d);
        let total = all.len();
        let dim_ideal = slice_dimension(ring.nvars(), &gens, d);
        let standard: Vec<&Monomial> = all
            .iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        // Standard monomials are a basis of the quotient; their count must
        // match the span dimension computed without the Groebner basis.
        if standard.len() + dim_ideal != total {
            report.fail(
                format!("{} degree {}", g6, d),
                format!(
                    "standard monomial count {} disagrees with slice dimension {} of {}",
                    standard.len(),
                    dim_ideal,
                    total
                ),
            );
            continue;
        }
        let mut coords: HashMap<(usize, Monomial), u32> = HashMap::new();
        let mut elim = SparseF2::new();
        for m in standard {
            let mut row = Vec::with_capacity(prime_bases.len());
            for (ti, pgb) in prime_bases.iter().enumerate() {
                if let Some(nf) = normal_form(&Binomial::monomial(m.clone()), pgb, LEX) {
                    let next = coords.len() as u32;
                    let id = *coords.entry((ti, nf.lead().clone())).or_insert(next);
                    row.push(id);
                }
            }
            row.sort_unstable();
            row.dedup();
            if !elim.insert(row) {
                report.fail(
                    format!("{} degree {}", g6, d),
                    format!(
                        "{} lies in every cut-set prime modulo the ideal",
                        ring.format_monomial(m)
                    ),
                );
            }
        }
    }
    report.runtime_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Verifies degreewise that taking initial ideals commutes with the sum of
/// the two given ideals, reporting the failing degrees otherwise.
///
/// For each degree two excesses are computed from independent data: how far
/// `ini(I+J)` exceeds `ini I + ini J`, measured on the monomial side, and
/// how far `ini I \cap ini J` exceeds `I \cap J`, measured through span
/// dimensions and the dimension formula for a pairwise intersection. The
/// two must agree degree by degree because passing to the initial ideal
/// preserves graded dimensions; both vanish exactly when the sum is
/// additive. Any negative excess or disagreement between the two routes is
/// reported as an internal inconsistency.
pub fn verify_initial_additivity(
    i_gens: &[Binomial],
    j_gens: &[Binomial],
    order: TermOrder,
    max_degree: u32,
) -> Result<VerificationReport, OracleError> {
    let started = Instant::now();
    if max_degree > ADDITIVITY_DEGREE_CAP {
        return Err(OracleError::DegreeCapExceeded {
            requested: max_degree,
            max: ADDITIVITY_DEGREE_CAP,
        });
    }
    let mut report = VerificationReport::new("initial_ideal_additivity");
    let Some(first) = i_gens.first().or_else(|| j_gens.first()) else {
        // Both ideals are zero; nothing can fail.
        report.instances = max_degree as usize + 1;
        report.runtime_ms = started.elapsed().as_millis();
        return Ok(report);
    };
    let nvars = first.lead().nvars();
    if i_gens
        .iter()
        .chain(j_gens.iter())
        .any(|b| b.lead().nvars() != nvars)
    {
        return Err(OracleError::MixedRings);
    }
    if nvars > 2 * super::ORACLE_VERTEX_CAP {
        return Err(OracleError::CapExceeded {
            n: nvars,
            cap: 2 * super::ORACLE_VERTEX_CAP,
        });
    }
    let mut sum_gens = i_gens.to_vec();
    sum_gens.extend_from_slice(j_gens);
    let ini_i = initial_ideal(&buchberger(i_gens, order));
    let ini_j = initial_ideal(&buchberger(j_gens, order));
    let ini_sum = initial_ideal(&buchberger(&sum_gens, order));
    let sum_of_inis = ini_i.sum(&ini_j);

    for d in 0..=max_degree {
        report.instances += 1;
        let dim_i = slice_dimension(nvars, i_gens, d);
        let dim_j = slice_dimension(nvars, j_gens, d);
        let dim_sum = slice_dimension(nvars, &sum_gens, d);
        // Initial ideals preserve graded dimensions; check all three before
        // relying on that identity.
        for (label, uf, mono) in [
            ("first ideal", dim_i, ini_i.slice_dimension(d)),
            ("second ideal", dim_j, ini_j.slice_dimension(d)),
            ("sum", dim_sum, ini_sum.slice_dimension(d)),
        ] {
            if uf != mono {
                report.fail(
                    format!("degree {}", d),
                    format!(
                        "{}: span dimension {} but initial ideal slice {}",
                        label, uf, mono
                    ),
                );
            }
        }
        let grassmann_int = dim_i as i64 + dim_j as i64 - dim_sum as i64;
        let mono_int = ini_i.intersection_slice_dimension(&ini_j, d) as i64;
        let excess_sum = ini_sum.slice_dimension(d) as i64 - sum_of_inis.slice_dimension(d) as i64;
        let excess_int = mono_int - grassmann_int;
        if excess_sum < 0 || excess_int < 0 || excess_sum != excess_int {
            report.fail(
                format!("degree {}", d),
                format!(
                    "sum excess {} and intersection excess {} must be equal and nonnegative",
                    excess_sum, excess_int
                ),
            );
        } else if excess_sum > 0 {
            report.fail(
                format!("degree {}", d),
                format!("additivity fails: excess dimension {}", excess_sum),
            );
        }
    }
    report.runtime_ms = started.elapsed().as_millis();
    Ok(report)
}

/// The two primes whose intersection realizes the edge ideal of a join:
/// all variables of one side together with the completed components of the
/// other. Returns the ring of the joined graph and both generator sets.
pub fn join_proof_ideals(
    g1: &Graph,
    g2: &Graph,
    order: TermOrder,
) -> Result<(PolyRing, Vec<Binomial>, Vec<Binomial>), OracleError> {
    let joined = compose(g1, g2, Composition::Join)?;
    let ring = PolyRing::new(joined.n());
    let v1: VertexSet = (1..=g1.n()).collect();
    let v2: VertexSet = (g1.n() + 1..=joined.n()).collect();
    let q1 = prime_binomials(&ring, &prime_of_cutset(&joined, &CutSet::new(&joined, v1))?, order);
    let q2 = prime_binomials(&ring, &prime_of_cutset(&joined, &CutSet::new(&joined, v2))?, order);
    Ok((ring, q1, q2))
}
