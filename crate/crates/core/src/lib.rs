//! Classification of the Lie algebra generated by a set of Pauli strings.
//!
//! The pipeline: encode each generator as a bit vector carrying a quadratic
//! form over GF(2) ([`pauli`], [`gf2`]), build the frustration graph of
//! anticommuting pairs ([`graphs`]), and classify each connected component
//! either through line-graph recognition or through the invariants of the
//! spanned quadratic space ([`classifier`]). The [`oracle`] module computes
//! the same answers by brute-force closure so every classification can be
//! cross-checked exactly.

pub mod classifier;
pub mod gf2;
pub mod graphs;
pub mod oracle;
pub mod pauli;

pub use classifier::{
    canonicalize, check_generates_full, classify, classify_opts, equiv_classes, forbidden_witness,
    Branch, Classification, ClassifyError, ClassifyOptions, ComponentReport, ResolvedBy, Summand,
    SummandKind, DEFAULT_CLOSURE_CAP,
};
pub use gf2::{
    analyze_radical, independent_subset, space_type, symplectic_gram_schmidt, BitVector, Echelon,
    FormType, HyperbolicBasis, QuadSpace, RadicalInfo,
};
pub use graphs::{
    connected_components, frustration_graph, iso_small, line_graph, recognize_root, Graph,
    MultiGraph, RootCertificate,
};
pub use oracle::{
    cartan_split, catalog_forbidden, closure, commutator_graph, enumerate_q1, enumerate_t,
    realize_in_pauli, verify_classification, CartanSplit, ClosureSet, ForbiddenGraph, OracleError,
    VerifyReport,
};
pub use pauli::{eval_forms, prepare_generators, PauliError, PauliString, PauliVector};
