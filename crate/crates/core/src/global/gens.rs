//! Pushouts in the global category and its generating (trivial)
//! cofibrations.

use alloc::vec::Vec;

use super::external::{ext_smash_mor, ExtSmash};
use super::{GlobMor, GlobObj};
use crate::retractive::RetSpace;
use crate::sset::{boundary_inclusion, horn_inclusion, pushout, Colimit, SMap};
use crate::Result;

/// `B ∪_A C` in the global category, computed on bases and on totals.
#[derive(Clone, Debug)]
pub struct GlobPushout {
    bases: Colimit,
    totals: Colimit,
    obj: GlobObj,
    inl: GlobMor,
    inr: GlobMor,
    f: GlobMor,
}

/// The pushout of `B <- A -> C`.
pub fn glob_pushout(f: &GlobMor, g: &GlobMor) -> Result<GlobPushout> {
    let bases = pushout(f.base_map(), g.base_map())?;
    let totals = pushout(&f.total_map(), &g.total_map())?;
    let objs = [f.source().space(), f.target().space(), g.target().space()];
    let sections: Vec<SMap> = (0..3).map(|k| totals.cocone(k).compose(objs[k].section())).collect::<Result<_>>()?;
    let retractions: Vec<SMap> = (0..3).map(|k| bases.cocone(k).compose(objs[k].retraction())).collect::<Result<_>>()?;
    let section = bases.factor(totals.object(), &sections)?;
    let retraction = totals.factor(bases.object(), &retractions)?;
    let obj = GlobObj::new(RetSpace::new(section, retraction)?);
    let inl = GlobMor::from_square(f.target(), &obj, bases.cocone(1), totals.cocone(1))?;
    let inr = GlobMor::from_square(g.target(), &obj, bases.cocone(2), totals.cocone(2))?;
    Ok(GlobPushout {
        bases,
        totals,
        obj,
        inl,
        inr,
        f: f.clone(),
    })
}

impl GlobPushout {
    pub fn object(&self) -> &GlobObj {
        &self.obj
    }

    pub fn inl(&self) -> &GlobMor {
        &self.inl
    }

    pub fn inr(&self) -> &GlobMor {
        &self.inr
    }

    /// The map out of the pushout induced by `h: B -> T` and `k: C -> T`.
    pub fn factor(&self, h: &GlobMor, k: &GlobMor) -> Result<GlobMor> {
        let t = h.target();
        let a_base = h.base_map().compose(self.f.base_map())?;
        let a_total = h.total_map().compose(&self.f.total_map())?;
        let base = self.bases.factor(t.base(), &[a_base, h.base_map().clone(), k.base_map().clone()])?;
        let total = self.totals.factor(t.space().total(), &[a_total, h.total_map(), k.total_map()])?;
        GlobMor::from_square(&self.obj, t, &base, &total)
    }
}

/// The corner map of `i □ j` for the external smash, from
/// `B △ C ∪_{A △ C} A △ D` to `B △ D`.
pub fn pushout_product_global(i: &GlobMor, j: &GlobMor) -> Result<GlobMor> {
    let (a, b) = (i.source(), i.target());
    let (c, d) = (j.source(), j.target());
    let ac = ExtSmash::new(a, c)?;
    let bc = ExtSmash::new(b, c)?;
    let ad = ExtSmash::new(a, d)?;
    let bd = ExtSmash::new(b, d)?;
    let id_a = GlobMor::identity(a);
    let id_b = GlobMor::identity(b);
    let id_c = GlobMor::identity(c);
    let id_d = GlobMor::identity(d);
    let left = ext_smash_mor(i, &id_c, &ac, &bc)?;
    let right = ext_smash_mor(&id_a, j, &ac, &ad)?;
    let p = glob_pushout(&left, &right)?;
    let h = ext_smash_mor(&id_b, j, &bc, &bd)?;
    let k = ext_smash_mor(i, &id_d, &ad, &bd)?;
    p.factor(&h, &k)
}

fn plus_generator(inc: &SMap) -> Result<GlobMor> {
    let id = SMap::identity(inc.target());
    let m = RetSpace::plus_map(inc, &id, inc)?;
    let f = SMap::identity(inc.target());
    GlobMor::from_square(&GlobObj::new(m.source().clone()), &GlobObj::new(m.target().clone()), &f, m.map())
}

/// `0_-(∂Δ^n -> Δ^n)` and `(id|_{∂Δ^n} -> id)_{+Δ^n}` for `n <= max`.
pub fn generating_cofibrations(max: usize) -> Result<Vec<GlobMor>> {
    let mut out = Vec::new();
    for n in 0..=max {
        let inc = boundary_inclusion(n);
        out.push(GlobMor::zero_of(&inc)?);
        out.push(plus_generator(&inc)?);
    }
    Ok(out)
}

/// The same with horn inclusions `Λ^n_k -> Δ^n`, `1 <= n <= max`.
pub fn generating_trivial_cofibrations(max: usize) -> Result<Vec<GlobMor>> {
    let mut out = Vec::new();
    for n in 1..=max {
        for k in 0..=n {
            let inc = horn_inclusion(n, k)?;
            out.push(GlobMor::zero_of(&inc)?);
            out.push(plus_generator(&inc)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_monos() {
        let gens = generating_cofibrations(2).unwrap();
        assert_eq!(gens.len(), 6);
        assert!(gens.iter().all(GlobMor::is_mono));
        // the n = 0 member of the second family: Δ^0 ⊔ ∅ -> Δ^0 ⊔ Δ^0
        assert_eq!(gens[1].source().space().total().census(), alloc::vec![1]);
        assert_eq!(gens[1].target().space().total().census(), alloc::vec![2]);
        assert!(generating_trivial_cofibrations(2).unwrap().iter().all(GlobMor::is_mono));
    }

    #[test]
    fn pushout_products_of_generators() {
        let gens = generating_cofibrations(1).unwrap();
        for i in &gens {
            for j in &gens {
                let m = pushout_product_global(i, j).unwrap();
                assert!(m.is_mono());
            }
        }
    }
}
