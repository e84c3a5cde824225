//! Pure-difference binomial arithmetic and Buchberger's algorithm.
//!
//! Every polynomial handled here is a difference of two monomials or a
//! single monomial. That class is closed under S-polynomials and reduction,
//! so no coefficients are ever stored, and every result is valid over any
//! field.

mod binomial;
mod ideal;

pub use binomial::{buchberger, edge_generators, initial_ideal, normal_form, Binomial};
pub use ideal::{
    intersection_slice_dimension, monomials_of_degree, slice_dimension, sum_slice_dimension,
    MonomialIdeal,
};

use std::cmp::Ordering;

/// The polynomial ring `K[x_1..x_n, y_1..y_n]` attached to a graph on `n`
/// vertices. Variables are indexed `0..2n` with `x_i` at `i - 1` and `y_i`
/// at `n + i - 1`, so the built-in precedence reads
/// `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    n: usize,
}

impl PolyRing {
    pub fn new(n: usize) -> Self {
        PolyRing { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    /// Index of `x_i`, `1 <= i <= n`.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n);
        i - 1
    }

    /// Index of `y_i`, `1 <= i <= n`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n);
        self.n + i - 1
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.n {
            format!("x{}", idx + 1)
        } else {
            format!("y{}", idx - self.n + 1)
        }
    }

    /// Renders `m` like `x1*y2^2`, or `1` for the unit monomial.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (idx, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_name(idx)),
                _ => parts.push(format!("{}^{}", self.var_name(idx), e)),
            }
        }
        parts.join("*")
    }

    /// Renders a binomial like `x1*y2 - x2*y1`.
    pub fn format_binomial(&self, b: &Binomial) -> String {
        match b.trail() {
            Some(t) => format!("{} - {}", self.format_monomial(b.lead()), self.format_monomial(t)),
            None => self.format_monomial(b.lead()),
        }
    }
}

/// A monomial as an exponent vector over a fixed variable count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}

/// Supported monomial orders. Variable precedence is fixed by index:
/// lower index is higher precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub kind: OrderKind,
}

pub const LEX: TermOrder = TermOrder { kind: OrderKind::Lex };
pub const DEGREVLEX: TermOrder = TermOrder { kind: OrderKind::DegRevLex };

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::Lex => {
                for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
                    match ea.cmp(eb) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: the last variable with differing exponent
                // decides, smaller exponent there meaning larger monomial.
                for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
                    match ea.cmp(eb) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
