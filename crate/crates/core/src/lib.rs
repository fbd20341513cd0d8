//! Empty lattice 4-simplices encoded as cyclic-quotient tuples.
//!
//! A tuple `(V; b_0, ..., b_d)` with `sum b_i = 0 (mod V)` describes a lattice
//! simplex of normalized volume `V` whose lattice quotient is cyclic. This
//! crate decides emptiness and hollowness on tuples, converts between tuples
//! and coordinates, sorts empty 4-simplices into their infinite families and
//! enumerates the finitely many that belong to none.

pub mod arith;
pub mod census;
pub mod enumerator;
pub mod families;
pub mod geometry;
pub mod oracle;
pub mod tuple;

pub use census::{
    diff_census, excess_report, histogram_by_volume, read_census, width_histogram, write_census, Census,
    CensusError, CensusMeta,
};
pub use enumerator::{
    enumerate, enumerate_empty, enumerate_sporadic, enumerate_via_sublattices, singularity_count,
    EnumError, SearchConfig,
};
pub use families::{
    admissible, classify, family_generate, family_membership, width1_test, Classification, FamilyError,
    FamilyId, FamilyLabel, Sign,
};
pub use geometry::{
    ehrhart_polynomial, facet_volumes, facet_volumes_geometric, hstar, realize, tuple_from_simplex,
    tuple_width, width, EhrhartPolynomial, FacetVolumes, GeometryError, HStar, SimplexCoords,
};
pub use oracle::{
    coprime_condition, count_lattice_points_by_coset, empty_via_facets, is_empty, is_hollow,
    CosetProfile, OracleError,
};
pub use tuple::{CanonicalTuple, SymmetryGroup, Tuple, TupleError};
