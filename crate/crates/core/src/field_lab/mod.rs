//! Number-field engine: maximal orders, prime splitting, class groups and units,
//! ray-class 2-ranks for moduli `P^a * oo` and the amiability decision.

pub mod classgroup;
pub mod ideal;
pub mod local2;
pub mod order;
pub mod rayclass;
pub mod relations;

pub use classgroup::{class_and_units, splitting_type, ClassUnitData, PrimeSplitting};
pub use ideal::{primes_above, PrimeIdeal};
pub use order::{maximal_order, FieldElt, NumberFieldData};
pub use rayclass::{amiable, ray_class_2_rank, AmiableDetails, RayClassRank};
pub use relations::{BoundInfo, SearchConfig};
