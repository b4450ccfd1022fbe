//! Sequential spectra over a finite base, truncated at a finite level, and
//! the constructions between them.

mod change;
mod day;
mod double;
mod loops;
mod perm;
mod seq;
mod sym;
mod tower;
mod tsp;

pub use change::{pull_spec, pulled_sphere, push_free_compare, push_mor, push_spec, trivial_bundle_compare, wedge_census, GlobSeqMor, PullSpec, PushSpec};
pub use day::{
    day_assoc, day_map, day_symmetry, day_unit_left, ext_smash_sym, fib_smash_sym, free_smash_compare, smash_unit_left, sphere_mult, sphere_unit,
    strict_fibre_compare, DayConv, DayPoint, Pairing, PairedGen, SymSmash,
};
pub use double::{dbl_from, ev0, DblSpec, Direction};
pub use loops::{loop_spec, LoopSpec};
pub use perm::{block_decompose, block_shuffles, coset_decompose, coset_reps, Perm};
pub use seq::{
    free_adjunct, free_map, free_seq, free_tower, shift, susp_spec, tensor_spec, twist, twist_relates, unshift, unshift_adjunct, zeta, SeqMor,
    SeqSpec,
};
pub use sym::{
    cyclic_permutation, forget_to_seq, free_sym, is_equivariant, pull_sym, sphere_sym, xi, FreePoint, FreeSym, GAction, SphereSym, SymMor, SymSeq,
    SymSpec, XiMap,
};
pub use tower::{SuspTower, TowerPoint};
pub use tsp::{algebra_map, from_algebra, iterate_sigma, tsp_algebra_check, tsp_monad_check, Tsp, TspPoint};

#[cfg(test)]
mod tests;
#[cfg(test)]
mod sym_tests;
