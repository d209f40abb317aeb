//! Degree-interval realizability for simple graphs.
//!
//! Given lower bounds `A` and upper bounds `B`, decide whether some simple
//! graph has `a_i <= deg(v_i) <= b_i` at every vertex. The crate provides
//! the sequence transforms the classical and interval criteria are phrased
//! in, a checker per criterion, witness construction, and a brute-force
//! oracle with sweep harnesses that compare every criterion against it.
//!
//! ```
//! use degbox_core::{check_cdz, normalize_good_order, realize_pair, verify_witness};
//!
//! let (a, b) = ([2, 2, 2], [2, 2, 2]);
//! let instance = normalize_good_order(&a, &b).unwrap();
//! assert!(check_cdz(&instance.pair).unwrap().holds);
//! let triangle = realize_pair(&instance).unwrap().unwrap();
//! assert!(verify_witness(&triangle, &a, &b).unwrap());
//! ```

pub mod criteria;
pub mod error;
pub mod oracle;
pub mod realization;
pub mod sequences;

pub use criteria::{
    check_berge_necessary, check_berge_sufficient, check_bollobas, check_cdz, check_cdz_reduced,
    check_erdos_gallai_fixed, check_fulkerson, check_fulkerson_exists, check_grunbaum,
    check_hasselbarth, criteria_report, CriteriaReport, Criterion, CriterionVerdict, NamedVerdict,
};
pub use error::{Error, Result};
pub use oracle::{
    cross_validate, implication_matrix, oracle_decide, oracle_realizable, ImplicationMatrix,
    OracleVerdict, SweepConfig, SweepReport,
};
pub use realization::{
    check_ryser_interval, find_graphic_in_box, havel_hakimi_realize, interval_bipartite_realize,
    realize_pair, verify_witness, BipartiteGraph, SimpleGraph,
};
pub use sequences::{
    berge_sequence, conjugate_sequence, crossing_indices, epsilon, index_set_it, is_good_order,
    lemma31_identities_hold, normalize_good_order, tilde_sequence, validate_and_clamp,
    DegreeSequence, IndexProfile, IntervalSequencePair, NormalizedInstance,
};
