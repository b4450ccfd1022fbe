use core::fmt;

use super::degop::DegOp;

/// A nondegenerate simplex of a particular [`FinSSet`](super::FinSSet):
/// its dimension and position within that level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NdId {
    dim: u32,
    index: u32,
}

impl NdId {
    pub const fn new(dim: usize, index: usize) -> Self {
        NdId {
            dim: dim as u32,
            index: index as u32,
        }
    }

    pub const fn dim(self) -> usize {
        self.dim as usize
    }

    pub const fn index(self) -> usize {
        self.index as usize
    }
}

impl fmt::Debug for NdId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.dim, self.index)
    }
}

/// A simplex in normal form `s_I x` with `x` nondegenerate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    nd: NdId,
    deg: DegOp,
}

impl Simplex {
    pub const fn new(deg: DegOp, nd: NdId) -> Self {
        Simplex { nd, deg }
    }

    pub const fn nondegenerate(nd: NdId) -> Self {
        Simplex {
            nd,
            deg: DegOp::IDENTITY,
        }
    }

    pub const fn nd(self) -> NdId {
        self.nd
    }

    pub const fn deg(self) -> DegOp {
        self.deg
    }

    pub const fn dim(self) -> usize {
        self.nd.dim() + self.deg.len()
    }

    pub const fn is_degenerate(self) -> bool {
        !self.deg.is_identity()
    }

    /// `s_op` applied to this simplex.
    pub fn degenerate(self, op: DegOp) -> Simplex {
        Simplex {
            nd: self.nd,
            deg: self.deg.then(op),
        }
    }

    /// `s_j` applied to this simplex.
    pub fn degeneracy(self, j: usize) -> Simplex {
        self.degenerate(DegOp::from_bits(1 << j))
    }

    /// Iterated `s_0`, raising the dimension by `k`.
    pub fn lift(self, k: usize) -> Simplex {
        let mut s = self;
        for _ in 0..k {
            s = s.degeneracy(0);
        }
        s
    }
}

impl From<NdId> for Simplex {
    fn from(nd: NdId) -> Self {
        Simplex::nondegenerate(nd)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg.is_identity() {
            write!(f, "{:?}", self.nd)
        } else {
            write!(f, "{:?}{:?}", self.deg, self.nd)
        }
    }
}
