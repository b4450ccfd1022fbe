//! Finite simplicial sets and the finite limits and colimits among them.

mod colimit;
mod degop;
mod finsset;
mod levelwise;
mod limit;
mod maps;
mod simplex;
mod smap;
mod standard;

pub use colimit::{coequalizer, coproduct, pushout, quotient, Colimit, Diagram, Elem};
pub use degop::{DegOp, MAX_DIM};
pub use finsset::{FinSSet, FinSSetBuilder};
pub use levelwise::{Levelwise, LevelwiseSource};
pub use limit::{product, ProductMany, Pullback};
pub use maps::{enumerate_maps, MapSearch};
pub use simplex::{NdId, Simplex};
pub use smap::SMap;
pub use standard::{
    boundary, boundary_inclusion, circle, coface, horn, horn_inclusion, point, simplicial_complex, sphere, standard,
    subcomplex_inclusion, two_points, yoneda,
};

pub(crate) use smap::same;
