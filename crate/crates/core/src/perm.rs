//! Permutations of `[n] = {1, ..., n}` and of `[n]^0 = {0, ..., n}`.
//!
//! Composition is functional: `compose(outer, inner)` maps `t` to
//! `outer(inner(t))`. Values are stored 0-based; every public accessor and
//! the text format use the 1-based one-line notation, e.g. `"2 3 1"`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest degree a [`Perm`] can carry (images are stored as `u8`).
pub const MAX_DEGREE: usize = 255;

/// Largest degree for which lexicographic ranks fit in a `u64`.
pub const MAX_RANK_DEGREE: usize = 20;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    /// Builds a permutation from its 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::DegreeTooSmall { n: 0, min: 1 });
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm {
            img: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_zero_based_unchecked(img: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&img));
        Perm { img }
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree out of range");
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    /// The reverse permutation `[n n-1 ... 1]`.
    pub fn reverse(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree out of range");
        Perm {
            img: (0..n as u8).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of `t` for `t` in `1..=n`.
    pub fn get(&self, t: usize) -> usize {
        self.img[t - 1] as usize + 1
    }

    /// 1-based one-line images.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(t, &v)| t == v as usize)
    }

    /// `outer ∘ inner`, i.e. `t ↦ outer(inner(t))`.
    pub fn compose(outer: &Perm, inner: &Perm) -> Result<Perm> {
        if outer.degree() != inner.degree() {
            return Err(Error::DegreeMismatch {
                left: outer.degree(),
                right: inner.degree(),
            });
        }
        Ok(Perm {
            img: inner.img.iter().map(|&x| outer.img[x as usize]).collect(),
        })
    }

    /// `self ∘ inner`; panics on a degree mismatch.
    pub fn then_after(&self, inner: &Perm) -> Perm {
        assert_eq!(self.degree(), inner.degree(), "degree mismatch");
        Perm {
            img: inner.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.img.len()];
        for (t, &v) in self.img.iter().enumerate() {
            inv[v as usize] = t as u8;
        }
        Perm { img: inv }
    }

    /// `[0 π]`: the extension to `{0, ..., n}` fixing 0.
    pub fn extend_zero(&self) -> ZeroPerm {
        let mut img = Vec::with_capacity(self.img.len() + 1);
        img.push(0);
        img.extend(self.img.iter().map(|&v| v + 1));
        ZeroPerm { img }
    }

    /// Lexicographic rank of the one-line notation among all of `Sym_n`.
    pub fn rank(&self) -> u64 {
        rank_of(&self.img)
    }

    pub fn unrank(n: usize, rank: u64) -> Perm {
        Perm {
            img: unrank_to_vec(n, rank),
        }
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        let mut next = Some(Perm::identity(n));
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut img = cur.img.clone();
            if next_permutation(&mut img) {
                next = Some(Perm { img });
            }
            Some(cur)
        })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.img.iter().enumerate() {
            if t > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.trim_matches(|c| c == '[' || c == ']')
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_one_line(&images)
    }
}

/// A permutation of `{0, ..., n}`; `image(0)` is unconstrained.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroPerm {
    img: Vec<u8>,
}

impl ZeroPerm {
    /// Builds from the images of `0, 1, ..., n`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.len() < 2 {
            return Err(Error::DegreeTooSmall {
                n: images.len().saturating_sub(1),
                min: 1,
            });
        }
        if images.len() > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                n: images.len() - 1,
                max: MAX_DEGREE - 1,
            });
        }
        let img: Vec<u8> = images.iter().map(|&v| v.min(255) as u8).collect();
        if images.iter().any(|&v| v >= images.len()) || !is_bijection(&img) {
            return Err(Error::NotAPermutation(format!("{images:?}")));
        }
        Ok(ZeroPerm { img })
    }

    pub fn identity(n: usize) -> Self {
        ZeroPerm {
            img: (0..=n as u8).collect(),
        }
    }

    /// `n`, so the domain is `{0, ..., n}`.
    pub fn degree(&self) -> usize {
        self.img.len() - 1
    }

    pub fn get(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize).collect()
    }

    pub fn compose(outer: &ZeroPerm, inner: &ZeroPerm) -> Result<ZeroPerm> {
        if outer.img.len() != inner.img.len() {
            return Err(Error::DegreeMismatch {
                left: outer.degree(),
                right: inner.degree(),
            });
        }
        Ok(outer.then_after(inner))
    }

    pub fn then_after(&self, inner: &ZeroPerm) -> ZeroPerm {
        assert_eq!(self.img.len(), inner.img.len(), "degree mismatch");
        ZeroPerm {
            img: inner.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> ZeroPerm {
        let mut inv = vec![0u8; self.img.len()];
        for (t, &v) in self.img.iter().enumerate() {
            inv[v as usize] = t as u8;
        }
        ZeroPerm { img: inv }
    }

    pub fn fixes_zero(&self) -> bool {
        self.img[0] == 0
    }

    /// Recovers `π` from `[0 π]`.
    pub fn restrict(&self) -> Result<Perm> {
        if !self.fixes_zero() {
            return Err(Error::ZeroNotFixed);
        }
        Ok(Perm {
            img: self.img[1..].iter().map(|&v| v - 1).collect(),
        })
    }
}

impl fmt::Display for ZeroPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.img.iter().enumerate() {
            if t > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZeroPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

fn is_bijection(img: &[u8]) -> bool {
    let mut seen = vec![false; img.len()];
    img.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lehmer-code rank of a 0-based image slice.
pub(crate) fn rank_of(img: &[u8]) -> u64 {
    let n = img.len();
    debug_assert!(n <= MAX_RANK_DEGREE);
    let mut used: u32 = 0;
    let mut rank = 0u64;
    for (t, &v) in img.iter().enumerate() {
        let smaller_unused = v as u32 - (used & ((1u32 << v) - 1)).count_ones();
        rank += smaller_unused as u64 * factorial(n - 1 - t);
        used |= 1 << v;
    }
    rank
}

pub(crate) fn unrank_to_vec(n: usize, mut rank: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut img = Vec::with_capacity(n);
    for t in 0..n {
        let f = factorial(n - 1 - t);
        let idx = (rank / f) as usize;
        rank %= f;
        img.push(pool.remove(idx));
    }
    img
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn compose_follows_functional_convention() {
        let got = Perm::compose(&p("1 4 5 2 3"), &p("2 3 4 5 1")).unwrap();
        assert_eq!(got, p("4 5 2 3 1"));
        let pi = p("3 1 4 5 2");
        assert_eq!(Perm::compose(&Perm::identity(5), &pi).unwrap(), pi);
        assert!(Perm::compose(&pi, &pi.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Perm::compose(&Perm::identity(3), &Perm::identity(4)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn inverses() {
        assert_eq!(Perm::identity(4).inverse(), Perm::identity(4));
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
        assert_eq!(Perm::reverse(6).inverse(), Perm::reverse(6));
    }

    #[test]
    fn named_permutations() {
        assert_eq!(Perm::reverse(4).one_line(), vec![4, 3, 2, 1]);
        assert_eq!(Perm::identity(3).one_line(), vec![1, 2, 3]);
        let w = Perm::reverse(4);
        assert!(w.then_after(&w).is_identity());
    }

    #[test]
    fn zero_extension_round_trip() {
        let pi = p("2 1");
        let z = pi.extend_zero();
        assert_eq!(z.images(), vec![0, 2, 1]);
        assert_eq!(z.restrict().unwrap(), pi);
        let bad = ZeroPerm::from_images(&[1, 0, 2]).unwrap();
        assert!(matches!(bad.restrict(), Err(Error::ZeroNotFixed)));
    }

    #[test]
    fn parse_and_print() {
        let pi = p("3 1 2");
        assert_eq!(pi.to_string(), "3 1 2");
        assert_eq!(p("[3, 1, 2]"), pi);
        assert!("1 1 2".parse::<Perm>().is_err());
        assert!("".parse::<Perm>().is_err());
        assert!("0 1".parse::<Perm>().is_err());
        assert!("a b".parse::<Perm>().is_err());
    }

    #[test]
    fn ranks_are_lexicographic() {
        for n in 1..=5 {
            for (r, pi) in Perm::all(n).enumerate() {
                assert_eq!(pi.rank(), r as u64);
                assert_eq!(Perm::unrank(n, r as u64), pi);
            }
            assert_eq!(Perm::all(n).count() as u64, factorial(n));
        }
    }

    #[test]
    fn compose_is_associative_small() {
        for n in 1..=4 {
            let all: Vec<Perm> = Perm::all(n).collect();
            for a in &all {
                for b in &all {
                    for c in &all {
                        assert_eq!(a.then_after(b).then_after(c), a.then_after(&b.then_after(c)));
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Perm> {
            Just((0..n as u8).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(Perm::from_zero_based_unchecked)
        }

        fn pair() -> impl Strategy<Value = (Perm, Perm)> {
            (1usize..=10).prop_flat_map(|n| (perm(n), perm(n)))
        }

        proptest! {
            #[test]
            fn inverse_of_product((a, b) in pair()) {
                prop_assert_eq!(a.then_after(&b).inverse(), b.inverse().then_after(&a.inverse()));
            }

            #[test]
            fn extend_zero_is_a_homomorphism((a, b) in pair()) {
                prop_assert_eq!(
                    a.then_after(&b).extend_zero(),
                    a.extend_zero().then_after(&b.extend_zero())
                );
                prop_assert_eq!(a.extend_zero().restrict().unwrap(), a);
            }

            #[test]
            fn text_round_trip(a in (1usize..=12).prop_flat_map(perm)) {
                prop_assert_eq!(a.to_string().parse::<Perm>().unwrap(), a);
            }
        }
    }
}
