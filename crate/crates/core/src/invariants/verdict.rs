//! Certified claims and their report lines.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::digest::Fnv64;
use crate::sset::{FinSSet, SMap};

/// The outcome of checking one claim on one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub digest: u64,
    pub pass: bool,
    /// An isomorphism, a counterexample, or a count, in words.
    pub witness: String,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, digest: u64, pass: bool, witness: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            digest,
            pass,
            witness: witness.into(),
        }
    }

    /// `claim<TAB>digest<TAB>PASS|FAIL<TAB>witness`.
    pub fn tsv(&self) -> String {
        format!("{}\t{:016x}\t{}\t{}", self.claim, self.digest, if self.pass { "PASS" } else { "FAIL" }, self.witness)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tsv())
    }
}

/// Digest of a list of simplicial sets.
pub fn digest_ssets(xs: &[&FinSSet]) -> u64 {
    let mut h = Fnv64::new();
    for x in xs {
        h.write_sset(x);
    }
    h.finish()
}

/// Digest of a list of maps, including their ends.
pub fn digest_maps(fs: &[&SMap]) -> u64 {
    let mut h = Fnv64::new();
    for f in fs {
        h.write_sset(f.source());
        h.write_sset(f.target());
        for s in f.images().iter().flatten() {
            h.write_simplex(*s);
        }
    }
    h.finish()
}
