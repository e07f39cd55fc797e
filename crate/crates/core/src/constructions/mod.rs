//! Constructions relating h-vectors of flag complexes to f-vectors.

mod coneface;
mod h_to_f;
mod np;
mod polarize;
mod quasi_flag;
mod quotient;

pub use coneface::{cfp_facet, check_cfp, verify_coneface, ConeFaceCheck};
pub use h_to_f::{h_to_f_complex, HToF, NestingStep};
pub use np::{np_modify, np_property, NpModification, NpPair, NpStep};
pub use polarize::{polarize, Polarization};
pub use quasi_flag::{fvector_is_quasi_flag, is_quasi_flag, QuasiFlagMode, QUASI_FLAG_MAX_VERTICES};
pub use quotient::{matching_quotient, Quotient};
