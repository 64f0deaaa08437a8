//! Semimodules over two-generated numerical semigroups `<alpha, beta>`.
//!
//! The crate works with isomorphism classes of semimodules, each stored as
//! a canonical lean generator set, and provides:
//!
//! * semigroup arithmetic in Rosales coordinates ([`semigroup`]);
//! * normalization, membership and `Hom` ([`semimodule`]);
//! * the dual in closed form with a scanning oracle ([`duality`]);
//! * the bijections with lattice paths and two-row matrices
//!   ([`pathmatrix`]);
//! * the syzygy operator and the dihedral action ([`syzygy`]);
//! * degree data of minimal graded free resolutions ([`resolution`]);
//! * selfdual classes, their census and parity maps ([`selfdual`]).
//!
//! ```
//! use semimod::{dual, normalize, NumericalSemigroup};
//!
//! let gamma = NumericalSemigroup::new(5, 7).unwrap();
//! let (lean, _) = normalize(gamma, &[0, 9, 6, 8]).unwrap();
//! assert_eq!(lean.gens(), &[0, 8, 6, 9]);
//! assert_eq!(dual(&lean).raw_generators, vec![20, 22, 19, 21]);
//! ```

pub mod duality;
pub mod error;
pub mod parse;
pub mod pathmatrix;
pub mod resolution;
pub mod selfdual;
pub mod semigroup;
pub mod semimodule;
pub mod syzygy;

pub use duality::{dual, dual_dual_check, dual_oracle, dual_semimodule, DualResult};
pub use error::{Error, Result};
pub use pathmatrix::{
    enumerate_classes, lean_to_matrix, lean_to_path, matrix_equiv, matrix_to_lean, path_to_lean,
    LatticePath, PathMatrix, Step,
};
pub use resolution::{
    bivector_syzygies, hat_semimodule, resolution_degrees, Bivector, ResolutionDegrees,
};
pub use selfdual::{
    census, classify_form, is_selfdual, parity_bijection, CensusReport, FormKind, ParityDirection,
    SelfdualForm,
};
pub use semigroup::{lgap_less, GapCoord, NumericalSemigroup};
pub use semimodule::{hom, is_isomorphic, normalize, LeanSet, Semimodule};
pub use syzygy::{
    dihedral_check, dual_matrix, syzygy, syzygy_generators, syzygy_matrix, syzygy_matrix_inverse,
    syzygy_oracle, FundamentalCouple,
};
