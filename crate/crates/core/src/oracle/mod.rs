//! Regularity oracles: certified regularity values combining the structural
//! route with initial-ideal Betti computations, plus verification routines
//! for the primary decomposition, the join regularity formula, initial-ideal
//! additivity, and conjecture sweeps over graph corpora.

mod conjectures;
mod decomposition;

pub use conjectures::{counterexample_report, verify_conjectures, ConjectureKind, CounterexampleReport};
pub use decomposition::{
    join_proof_ideals, prime_binomials, verify_initial_additivity, verify_primary_decomposition,
    ADDITIVITY_DEGREE_CAP, DECOMPOSITION_VERTEX_CAP,
};

use crate::classify::{join_decompose, ClassifyError, JoinCertificate, RegPrediction};
use crate::graph::{compose, Composition, Graph, GraphError};
use crate::groebner::{buchberger, edge_generators, initial_ideal, PolyRing, TermOrder, LEX};
use crate::monres::{betti_table, invariants_from_betti, BettiTable, MonresError};
use crate::primes::PrimesError;
use serde::{Serialize, Serializer};
use std::time::Instant;

/// Largest vertex count accepted by the initial-ideal regularity route;
/// 2n variables must stay within the Betti computation cap.
pub const ORACLE_VERTEX_CAP: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the initial-ideal cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("degree bound {requested} exceeds the supported maximum {max}")]
    DegreeCapExceeded { requested: u32, max: u32 },
    #[error("{p} is not prime")]
    NotPrime { p: u32 },
    #[error("no characteristics requested")]
    NoCharacteristics,
    #[error("structural regularity {structural} contradicts initial-ideal regularity {initial}")]
    Inconsistent { structural: u32, initial: u32 },
    #[error("generators live in inconsistent polynomial rings")]
    MixedRings,
    #[error(transparent)]
    Monres(#[from] MonresError),
    #[error(transparent)]
    Primes(#[from] PrimesError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A regularity value; the zero ideal of an edgeless graph has none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegValue {
    NoEdges,
    Reg(u32),
}

impl RegValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            RegValue::NoEdges => None,
            RegValue::Reg(v) => Some(v),
        }
    }
}

impl Serialize for RegValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RegValue::NoEdges => s.serialize_str("no_edges"),
            RegValue::Reg(v) => s.serialize_u32(*v),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactnessStatus {
    Exact,
    UpperBoundOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Structural,
    InitialIdeal,
    Both,
}

/// Outcome of `regularity_certified`: the value, whether it is exact for the
/// ideal itself or only an upper bound read off the initial ideal, which
/// route produced it, and the evidence that was computed along the way.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityResult {
    pub value: RegValue,
    pub status: ExactnessStatus,
    pub method: Method,
    pub certificate: Option<JoinCertificate>,
    pub betti: Option<BettiTable>,
    pub characteristics: Vec<u32>,
}

/// Outcome of one verification run. `failures` carries one witness per
/// violated instance; `skipped` counts instances dropped by a cap.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instances: usize,
    pub failures: Vec<Witness>,
    pub skipped: usize,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub instance: String,
    pub detail: String,
}

impl VerificationReport {
    pub(crate) fn new(claim: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            instances: 0,
            failures: Vec::new(),
            skipped: 0,
            runtime_ms: 0,
        }
    }

    pub(crate) fn fail(&mut self, instance: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Witness {
            instance: instance.into(),
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub(crate) fn check_prime(p: u32) -> Result<(), OracleError> {
    if crate::monres::is_prime(p) {
        Ok(())
    } else {
        Err(OracleError::NotPrime { p })
    }
}

fn check_vertex_cap(n: usize) -> Result<(), OracleError> {
    if n > ORACLE_VERTEX_CAP {
        Err(OracleError::CapExceeded {
            n,
            cap: ORACLE_VERTEX_CAP,
        })
    } else {
        Ok(())
    }
}

/// Castelnuovo-Mumford regularity of the initial ideal of the edge ideal of
/// `g` under `order`, over the prime field of the given characteristic.
pub fn regularity_initial(g: &Graph, order: TermOrder, characteristic: u32) -> Result<RegValue, OracleError> {
    initial_regularity(g, order, characteristic).map(|(v, _)| v)
}

/// Same as `regularity_initial` but keeps the Betti table as evidence.
pub(crate) fn initial_regularity(
    g: &Graph,
    order: TermOrder,
    characteristic: u32,
) -> Result<(RegValue, Option<BettiTable>), OracleError> {
    check_vertex_cap(g.n())?;
    check_prime(characteristic)?;
    if !g.has_any_edge() {
        return Ok((RegValue::NoEdges, None));
    }
    let ring = PolyRing::new(g.n());
    let gb = buchberger(&edge_generators(&ring, g, order), order);
    let ini = initial_ideal(&gb);
    let table = betti_table(&ini, characteristic)?;
    let inv = invariants_from_betti(&table)?;
    Ok((RegValue::Reg(inv.reg), Some(table)))
}

/// Certified regularity with the default lex order over F_2.
pub fn regularity_certified(g: &Graph) -> Result<RegularityResult, OracleError> {
    regularity_certified_with(g, LEX, &[2])
}

/// Certified regularity of the binomial edge ideal of `g`.
///
/// The structural route runs first. A structural `Exact` value is confirmed
/// against the initial ideal whenever the graph is small enough; values at
/// most 3 transfer between the ideal and its initial ideal in both
/// directions, so disagreement there is reported as an error rather than
/// absorbed. Without a structural value the initial-ideal regularity is
/// returned, exact when it is at most 3 and an upper bound otherwise.
pub fn regularity_certified_with(
    g: &Graph,
    order: TermOrder,
    characteristics: &[u32],
) -> Result<RegularityResult, OracleError> {
    if characteristics.is_empty() {
        return Err(OracleError::NoCharacteristics);
    }
    for &p in characteristics {
        check_prime(p)?;
    }
    let certificate = join_decompose(g);
    match certificate.predicted_reg {
        RegPrediction::NoEdges => Ok(RegularityResult {
            value: RegValue::NoEdges,
            status: ExactnessStatus::Exact,
            method: Method::Structural,
            certificate: Some(certificate),
            betti: None,
            characteristics: Vec::new(),
        }),
        RegPrediction::Exact(v) => {
            if g.n() > ORACLE_VERTEX_CAP {
                return Ok(RegularityResult {
                    value: RegValue::Reg(v),
                    status: ExactnessStatus::Exact,
                    method: Method::Structural,
                    certificate: Some(certificate),
                    betti: None,
                    characteristics: Vec::new(),
                });
            }
            let mut betti = None;
            for &p in characteristics {
                let (rv, table) = initial_regularity(g, order, p)?;
                let r = rv.finite().expect("graph with edges has a finite value");
                // The initial ideal can only raise regularity, and cannot
                // move it at all while the value is at most 3.
                if r < v || (v <= 3 && r != v) {
                    return Err(OracleError::Inconsistent {
                        structural: v,
                        initial: r,
                    });
                }
                if betti.is_none() {
                    betti = table;
                }
            }
            Ok(RegularityResult {
                value: RegValue::Reg(v),
                status: ExactnessStatus::Exact,
                method: Method::Both,
                certificate: Some(certificate),
                betti,
                characteristics: characteristics.to_vec(),
            })
        }
        RegPrediction::Unknown => {
            check_vertex_cap(g.n())?;
            let mut values = Vec::new();
            let mut betti = None;
            for &p in characteristics {
                let (rv, table) = initial_regularity(g, order, p)?;
                values.push(rv.finite().expect("graph with edges has a finite value"));
                if betti.is_none() {
                    betti = table;
                }
            }
            let value = *values.iter().max().expect("nonempty");
            let uniform = values.iter().all(|&r| r == value);
            let status = if value <= 3 && uniform {
                ExactnessStatus::Exact
            } else {
                ExactnessStatus::UpperBoundOnly
            };
            Ok(RegularityResult {
                value: RegValue::Reg(value),
                status,
                method: Method::InitialIdeal,
                certificate: Some(certificate),
                betti,
                characteristics: characteristics.to_vec(),
            })
        }
    }
}

/// Checks the join regularity formula on one pair: joining `g1` and `g2`
/// gives initial-ideal regularity `max(r1, r2, 3)` unless both factors are
/// complete, in which case the join is complete and the value is 2.
pub fn verify_join_regularity(
    g1: &Graph,
    g2: &Graph,
    order: TermOrder,
    characteristic: u32,
) -> Result<VerificationReport, OracleError> {
    let started = Instant::now();
    let joined = compose(g1, g2, Composition::Join)?;
    check_vertex_cap(joined.n())?;
    let mut report = VerificationReport::new("join_regularity_formula");
    let actual = regularity_initial(&joined, order, characteristic)?;
    let expected = if g1.is_complete() && g2.is_complete() {
        RegValue::Reg(2)
    } else {
        let r1 = regularity_initial(g1, order, characteristic)?;
        let r2 = regularity_initial(g2, order, characteristic)?;
        let mut m = 3;
        if let Some(v) = r1.finite() {
            m = m.max(v);
        }
        if let Some(v) = r2.finite() {
            m = m.max(v);
        }
        RegValue::Reg(m)
    };
    report.instances = 1;
    if actual != expected {
        report.fail(
            format!("{} * {}", g1.to_graph6(), g2.to_graph6()),
            format!("expected {:?}, initial ideal gives {:?}", expected, actual),
        );
    }
    report.runtime_ms = started.elapsed().as_millis();
    Ok(report)
}
