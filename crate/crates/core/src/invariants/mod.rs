//! Homology over a field, lifting properties, pushout-products, Čech nerves
//! and the exact-sequence check.

mod cech;
mod homology;
mod lifting;
mod verdict;

pub use cech::{cech_nerve, meets_of, Cover};
pub use homology::{homology, normalise_dims, rank, reduced_homology, rel_quotient_homology, ChainData, Field};
pub use lifting::{
    default_horn_cap, fibration_check, pushout_product, pushout_product_external, pushout_product_fibrewise, rlp, PushoutProduct,
};
pub use verdict::{digest_maps, digest_ssets, Verdict};

use alloc::format;

use crate::retractive::{PushPoint, Pushforward, RetSpace};
use crate::sset::{point, SMap};
use crate::Result;

/// `dim H_p(Y) = dim H_p(X) + dim H̃_p(X_!Y)` for all `p`, with `X_!Y`
/// formed as the pushforward to the point.
pub fn split_seq_check(y: &RetSpace, field: Field) -> Result<Verdict> {
    let pt = alloc::sync::Arc::new(point());
    let push = Pushforward::new(&SMap::constant(y.base(), &pt, crate::sset::NdId::new(0, 0))?, y)?;
    let q = push.space();
    let basepoint = q.total().all_nd().find(|&u| matches!(push.split(u.into()), PushPoint::Base(_)));
    let quotient = match basepoint {
        Some(b) => reduced_homology(q.total(), b, field),
        None => alloc::vec::Vec::new(),
    };
    let hy = homology(y.total(), field);
    let hx = homology(y.base(), field);
    let len = hy.len().max(hx.len()).max(quotient.len());
    let at = |v: &[usize], p: usize| v.get(p).copied().unwrap_or(0);
    let pass = (0..len).all(|p| at(&hy, p) == at(&hx, p) + at(&quotient, p));
    let show = |v: &[usize]| {
        let parts: alloc::vec::Vec<_> = normalise_dims(v).iter().map(|d| format!("{d}")).collect();
        format!("({})", parts.join(","))
    };
    let witness = format!("{field} H(Y)={} H(X)={} H~(X_!Y)={}", show(&hy), show(&hx), show(&quotient));
    let digest = digest_maps(&[y.section(), y.retraction()]);
    Ok(Verdict::new("split_seq", digest, pass, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::retractive::{point_plus, sphere1, PullbackRet, SmashProduct};
    use crate::sset::{circle, standard, NdId};
    use alloc::sync::Arc;
    use alloc::vec;

    #[test]
    fn split_sequences_over_the_circle() {
        let x = Arc::new(circle());
        let v = split_seq_check(&RetSpace::unit(&x), Field::Rational).unwrap();
        assert!(v.pass, "{v}");
        assert_eq!(v.witness, "Q H(Y)=(2,2) H(X)=(1,1) H~(X_!Y)=(1,1)");
        let v = split_seq_check(&point_plus(&x, NdId::new(0, 0)).unwrap(), Field::Prime(2)).unwrap();
        assert!(v.pass);
        assert_eq!(v.witness, "F2 H(Y)=(2,1) H(X)=(1,1) H~(X_!Y)=(1)");
        let v = split_seq_check(&RetSpace::zero(&x), Field::Rational).unwrap();
        assert!(v.pass);
        assert!(v.witness.ends_with("H~(X_!Y)=()"));
        let pulled = PullbackRet::of_pointed(&x, &sphere1()).unwrap();
        assert!(split_seq_check(pulled.space(), Field::Rational).unwrap().pass);
        let d = Arc::new(standard(2));
        assert!(split_seq_check(&RetSpace::unit(&d), Field::Prime(3)).unwrap().pass);
    }

    #[test]
    fn relative_homology_agrees_with_the_quotient() {
        let x = Arc::new(circle());
        let y = RetSpace::unit(&x);
        assert_eq!(rel_quotient_homology(&y, Field::Rational), vec![1, 1]);
    }

    #[test]
    fn kunneth_for_spheres() {
        // H̃(S^a ∧ S^b) is one-dimensional in degree a + b
        let s1 = sphere1();
        let s2 = SmashProduct::pair(&s1, &s1).unwrap().space().clone();
        let s3 = SmashProduct::pair(&s2, &s1).unwrap().space().clone();
        for f in [Field::Rational, Field::Prime(2)] {
            assert_eq!(normalise_dims(&rel_quotient_homology(&s2, f)), vec![0, 0, 1]);
            assert_eq!(normalise_dims(&rel_quotient_homology(&s3, f)), vec![0, 0, 0, 1]);
        }
    }

    #[test]
    fn verdict_lines() {
        let v = Verdict::new("c", 0xab, true, "w");
        assert_eq!(v.tsv(), "c\t00000000000000ab\tPASS\tw");
    }
}
