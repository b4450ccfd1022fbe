//! Retractive spaces over a finite base and the operations between them.

mod basechange;
mod monoidal;
mod smash;
mod space;

pub use basechange::{direct_image, internal_hom, PullbackRet, PushPoint, Pushforward, SectionSpace};
pub use smash::{smash_by_diagram, SmashFactor, SmashPoint, SmashProduct, Wedge, WedgePoint};
pub use space::{RetMap, RetSpace};
pub(crate) use monoidal::point_simplex;
pub use monoidal::{
    associator, fib_loops, fib_suspension, flatten_left, left_unitor, pcotensor, point_plus, projection_formula, pullback_monoidal, push_tensor,
    right_unitor, smash_map, sphere0, sphere1, symmetry, tensor_assoc,
};
