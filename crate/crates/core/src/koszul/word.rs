use alloc::vec::Vec;
use core::fmt;

/// A reduced word in a free group on generators of type `G`: letters are
/// `(g, inverted)` and no letter sits next to its inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord<G> {
    letters: Vec<(G, bool)>,
}

impl<G: Clone + Eq> FreeWord<G> {
    pub fn unit() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn generator(g: G) -> Self {
        FreeWord {
            letters: alloc::vec![(g, false)],
        }
    }

    /// Reduces an arbitrary list of letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (G, bool)>) -> Self {
        let mut w = FreeWord::unit();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, (g, inv): (G, bool)) {
        if let Some((h, j)) = self.letters.last() {
            if *h == g && *j != inv {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((g, inv));
    }

    pub fn letters(&self) -> &[(G, bool)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for l in &other.letters {
            w.push(l.clone());
        }
        w
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|(g, inv)| (g.clone(), !inv)).collect(),
        }
    }

    /// The homomorphism sending each generator `g` to the word `f(g)`.
    pub fn substitute<H: Clone + Eq>(&self, mut f: impl FnMut(&G) -> FreeWord<H>) -> FreeWord<H> {
        let mut out = FreeWord::unit();
        for (g, inv) in &self.letters {
            let w = f(g);
            out = out.mul(&if *inv { w.inverse() } else { w });
        }
        out
    }

    /// Exponent sums per generator, in order of first appearance.
    pub fn abelianise(&self) -> Vec<(G, i64)> {
        let mut out: Vec<(G, i64)> = Vec::new();
        for (g, inv) in &self.letters {
            let e = if *inv { -1 } else { 1 };
            match out.iter_mut().find(|(h, _)| h == g) {
                Some((_, k)) => *k += e,
                None => out.push((g.clone(), e)),
            }
        }
        out.retain(|(_, k)| *k != 0);
        out
    }
}

impl<G: fmt::Debug> fmt::Debug for FreeWord<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, inv)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            write!(f, "{g:?}")?;
            if *inv {
                f.write_str("⁻¹")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word() -> impl Strategy<Value = FreeWord<u8>> {
        proptest::collection::vec((0u8..3, any::<bool>()), 0..8).prop_map(FreeWord::from_letters)
    }

    #[test]
    fn cancellation() {
        let a = FreeWord::generator(0u8);
        let b = FreeWord::generator(1u8);
        assert!(a.mul(&a.inverse()).is_unit());
        let ab = a.mul(&b);
        assert_eq!(ab.len(), 2);
        assert_eq!(ab.mul(&b.inverse()), a);
        assert_eq!(ab.inverse(), b.inverse().mul(&a.inverse()));
    }

    proptest! {
        #[test]
        fn group_axioms(x in word(), y in word(), z in word()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert!(x.mul(&x.inverse()).is_unit());
            prop_assert_eq!(x.mul(&FreeWord::unit()), x.clone());
            // reduced: no letter next to its inverse
            prop_assert!(x.letters().windows(2).all(|p| !(p[0].0 == p[1].0 && p[0].1 != p[1].1)));
        }

        #[test]
        fn substitution_is_a_homomorphism(x in word(), y in word()) {
            let f = |g: &u8| FreeWord::from_letters([((*g + 1) % 3, false), (*g, true)]);
            prop_assert_eq!(x.mul(&y).substitute(f), x.substitute(f).mul(&y.substitute(f)));
        }
    }
}
