//! Construction, classification and exhaustive verification of idempotent
//! k-translatable quasigroups over `Z_n`.

pub mod identity;
pub mod linear;
pub mod parastrophe;
pub mod qq;
pub mod search;
pub mod table;
pub mod zn;

pub use identity::{check_identity, quadratical_criteria, IdentityId, QuadraticalCriteria};
pub use linear::{
    build, classify, k_for_class, recover_linear, solve_from_k, translatable_k,
    ClassificationReport, LinearError, QClass,
};
pub use parastrophe::{
    equality_case, parastrophe_coeffs, parastrophe_table, preservation_rule, EqualityCase,
    ParastropheCoeffs, ParastropheError, ParastropheKind, PreservationRule,
};
pub use qq::{
    check_qq_axioms, induced_quasigroup, recovered_group, validate_astructure, AStructure,
    QqAxioms, QqError, QqStructure,
};
pub use search::{
    are_isomorphic, enumerate, oracle_vs_closed_form, EnumerationResult, OracleReport,
    SearchError,
};
pub use table::{CayleyTable, TableError, TranslatabilityReport};
