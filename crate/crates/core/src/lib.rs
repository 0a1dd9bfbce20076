//! Decides whether the Artin group of a finite edge-labeled graph is
//! subgroup separable (LERF), and explains the answer.
//!
//! The Artin group of Γ is LERF exactly when Γ belongs to the class 𝒮 of
//! graphs built from graphs on at most two vertices by disjoint unions and
//! 2-cones. [`decide_lerf`] tests membership and returns a [`Certificate`]
//! that [`verify_certificate`] can check independently. Companion modules
//! classify spherical graphs ([`spherical`]), build the right-angled Artin
//! group R(A) of the Generalized Tits Conjecture ([`gtc`]) and provide
//! brute-force oracles for differential testing ([`oracle`]).
//!
//! ```
//! use artin_lerf::{decide_lerf, decomposition_expression, ArtinGraph, Certificate};
//!
//! let g = ArtinGraph::from_labeled_edges(&[], &[("a", "b", 5), ("a", "c", 2), ("b", "c", 2)]).unwrap();
//! let Certificate::InS(tree) = decide_lerf(&g).unwrap() else { unreachable!() };
//! assert_eq!(decomposition_expression(&tree), "(Art2(5) x Z)");
//! ```

pub mod cli;
pub mod decider;
pub mod error;
pub mod graph;
pub mod gtc;
pub mod oracle;
pub mod quad;
pub mod spherical;

pub use decider::{
    decide_lerf, decomposition_expression, find_witness, verify_certificate, Certificate,
    ConstructionTree, NonLerfCore, TrailStep, VerificationFailure, WitnessKind, WitnessPattern,
};
pub use error::{Error, Result};
pub use graph::{ArtinGraph, EdgeLabel, RaagGraph, VertexId};
pub use gtc::{build_r, enumerate_spherical_subgraphs, raag_is_lerf, RaagPresentation};
pub use spherical::{classify_irreducible, classify_spherical, gtc_status, IrreducibleType};
