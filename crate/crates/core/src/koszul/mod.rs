//! Kan's loop group and classifying spaces, the path fibration, comodules
//! over `X_+`, and Koszul pre-duality, on lazily evaluated simplicial
//! objects.

mod borel;
mod comod;
mod kan;
mod lazy;
mod word;

pub use borel::{borel_quotient, eta_eps_check, path_action_check, path_module, pull_path, BorelQuotient, LocalSystem, PathModule, PulledPath, PulledSimplex};
pub use comod::{coaction, comod_pull, comod_push, costar, koszul_pre, ComodData, Costar, KoszulPre, PlusCoalg};
pub use kan::{loop_group, path_fib, unit_map, w_total, wbar, LoopGroup, LoopWord, PathFib, PathSimplex, WTotal, Wbar};
pub use lazy::{check_homomorphisms, check_identities, seeded, LazySSet, SampleReport, SimplicialGroup};
pub use word::FreeWord;

#[cfg(test)]
mod tests;
