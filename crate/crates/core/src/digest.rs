//! A small stable hash for fingerprints and generated names.

use crate::sset::{FinSSet, Simplex};

/// 64-bit FNV-1a.
#[derive(Clone, Copy, Debug)]
pub struct Fnv64(u64);

impl Default for Fnv64 {
    fn default() -> Self {
        Self::new()
    }
}

impl Fnv64 {
    pub const fn new() -> Self {
        Fnv64(0xcbf2_9ce4_8422_2325)
    }

    pub fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }

    pub fn write_u64(&mut self, v: u64) {
        self.write(&v.to_le_bytes());
    }

    pub fn write_simplex(&mut self, s: Simplex) {
        self.write_u64(s.deg().bits());
        self.write_u64(s.nd().dim() as u64);
        self.write_u64(s.nd().index() as u64);
    }

    /// Hashes the combinatorial structure, ignoring names.
    pub fn write_sset(&mut self, x: &FinSSet) {
        let census = x.census();
        self.write_u64(census.len() as u64);
        for d in 0..census.len() {
            self.write_u64(census[d] as u64);
            for y in x.nd(d) {
                for &f in x.nd_faces(y) {
                    self.write_simplex(f);
                }
            }
        }
    }

    pub const fn finish(self) -> u64 {
        self.0
    }
}
