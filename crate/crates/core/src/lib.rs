//! Tools for studying binomial edge ideals of finite simple graphs.
//!
//! The crate is organised around two routes to the Castelnuovo-Mumford
//! regularity of the binomial edge ideal `J_G`:
//!
//! * a structural route ([`classify`]) that decomposes a graph into joins,
//!   disjoint unions and clique blocks and reads the regularity off the
//!   decomposition when the graph permits it, and
//! * an algebraic route ([`oracle`]) that computes a Groebner basis of `J_G`
//!   ([`groebner`]), takes the initial ideal, and resolves it via Hochster's
//!   formula ([`monres`]).
//!
//! The two routes are kept independent so that each can serve as a check on
//! the other. [`primes`] handles the minimal primes of `J_G` and the
//! associated cut-set combinatorics, and [`graph`] provides the underlying
//! graph type together with graph6 I/O and small-graph enumeration.

pub mod graph;
pub mod groebner;
pub mod monres;
pub mod primes;
pub mod classify;
pub mod oracle;

pub use graph::Graph;
