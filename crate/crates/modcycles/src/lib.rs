//! Graphs without cycles of length 0 mod 4: detection, constructions, and
//! exact extremal search.
//!
//! The library is organized around five pieces:
//!
//! * [`graph`] — a bitset-backed simple graph on up to 64 vertices, with
//!   graph6 and edge-list serialization, biconnected decomposition, and a
//!   canonical form deciding isomorphism.
//! * [`cycles`] — enumeration and detection of simple cycles by length
//!   residue class, the oracle everything else is checked against.
//! * [`gadgets`] — deterministic builders for theta graphs, adjustable
//!   paths, odd necklaces, K4 subdivisions, the terminal blocks T1/T2, the
//!   extremal blocks L8 and L13, the family G_n, 2-cut switching, and
//!   bridge geometry.
//! * [`lemmas`] — randomized and exhaustive verification campaigns for the
//!   structural facts underlying the extremal bound.
//! * [`search`] — isomorph-free exhaustive search computing the exact
//!   maximum edge count at small orders, with an extremal-graph catalog.
//! * [`naive`] — deliberately slow, independent reference implementations
//!   used to cross-check the fast paths.

pub mod cycles;
pub mod gadgets;
pub mod graph;
pub mod lemmas;
pub mod naive;
pub mod search;

#[cfg(doctest)]
mod book {
    //! Every code block in the guide is compiled and run as a doctest.
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/modular-cycles.md")]
    mod modular_cycles {}
    #[doc = include_str!("../../../book/src/gadgets.md")]
    mod gadgets {}
    #[doc = include_str!("../../../book/src/extremal-search.md")]
    mod extremal_search {}
    #[doc = include_str!("../../../book/src/lemma-lab.md")]
    mod lemma_lab {}
}
