//! Toric maps, the reverse map and the toric-reverse dihedral group.
//!
//! With `α = [1 2 ... n 0]` on `{0, ..., n}`, the toric map `f_r` sends `π`
//! to the `ρ` with `[0 ρ] = α^{n+1-π_r} ∘ [0 π] ∘ α^r` (`π_0 = 0`). The
//! right-invariant twin is `f̄_r(π) = f_r(π^{-1})^{-1}`, and the reverse map
//! is `g(π) = ω ∘ π ∘ ω`. Both families generate dihedral groups of order
//! `2(n+1)` that fix the identity and map `T_n` onto itself.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cuts::Cuts;
use crate::error::{Error, Result};
use crate::perm::{Perm, ZeroPerm};

/// `α^r` on `{0, ..., n}`: `x ↦ x + r (mod n+1)`.
pub fn alpha_power(n: usize, r: usize) -> ZeroPerm {
    let m = n + 1;
    let images: Vec<usize> = (0..m).map(|x| (x + r) % m).collect();
    ZeroPerm::from_images(&images).expect("rotation is a bijection")
}

/// `f_r(π)` by conjugation with powers of `α`.
pub fn toric_map(p: &Perm, r: usize) -> Result<Perm> {
    let n = p.degree();
    if r > n {
        return Err(Error::RotationOutOfRange { r, n });
    }
    Ok(toric_map_unchecked(p, r))
}

pub(crate) fn toric_map_unchecked(p: &Perm, r: usize) -> Perm {
    let n = p.degree();
    let m = n + 1;
    let z = p.extend_zero();
    let shift = m - z.get(r);
    let conj = alpha_power(n, shift % m)
        .then_after(&z)
        .then_after(&alpha_power(n, r));
    conj.restrict().expect("toric conjugate fixes 0")
}

/// `f̄_r(π) = f_r(π^{-1})^{-1}`.
pub fn toric_map_right(p: &Perm, r: usize) -> Result<Perm> {
    Ok(toric_map(&p.inverse(), r)?.inverse())
}

/// `g(π) = [0 ω] ∘ [0 π] ∘ [0 ω]`, restricted back to `[n]`.
pub fn reverse_map(p: &Perm) -> Perm {
    let w = Perm::reverse(p.degree());
    w.then_after(p).then_after(&w)
}

/// The toric class `{f_r(π) : 0 <= r <= n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricClass {
    members: BTreeSet<Perm>,
}

impl ToricClass {
    pub fn of(p: &Perm) -> Self {
        let members = (0..=p.degree())
            .map(|r| toric_map_unchecked(p, r))
            .collect();
        ToricClass { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.members.iter()
    }

    /// Least member in one-line order.
    pub fn representative(&self) -> &Perm {
        self.members.iter().next().expect("class is never empty")
    }
}

pub fn toric_class(p: &Perm) -> ToricClass {
    ToricClass::of(p)
}

/// Which Cayley-graph convention a toric-reverse element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Edges `{π, σ∘π}`; toric maps `f_r`.
    Left,
    /// Edges `{π, π∘σ}`; toric maps `f̄_r`.
    Right,
}

/// An element `f^r` or `f^r ∘ g` of the toric-reverse group.
///
/// Reflected elements apply `g` first. The same type serves both
/// conventions; the flag selects `f` or `f̄`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    n: usize,
    r: usize,
    reflected: bool,
    right: bool,
}

impl Dihedral {
    pub fn new(n: usize, r: usize, reflected: bool, convention: Convention) -> Result<Self> {
        if r > n {
            return Err(Error::RotationOutOfRange { r, n });
        }
        Ok(Dihedral {
            n,
            r,
            reflected,
            right: convention == Convention::Right,
        })
    }

    pub fn identity(n: usize, convention: Convention) -> Self {
        Dihedral::new(n, 0, false, convention).unwrap()
    }

    /// `f` (or `f̄`).
    pub fn rotation(n: usize, convention: Convention) -> Self {
        Dihedral::new(n, 1 % (n + 1), false, convention).unwrap()
    }

    /// `g`.
    pub fn reflection(n: usize, convention: Convention) -> Self {
        Dihedral::new(n, 0, true, convention).unwrap()
    }

    /// All `2(n+1)` elements: rotations first, then reflections, by `r`.
    pub fn all(n: usize, convention: Convention) -> Vec<Dihedral> {
        [false, true]
            .into_iter()
            .flat_map(|refl| (0..=n).map(move |r| Dihedral::new(n, r, refl, convention).unwrap()))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn reflected(&self) -> bool {
        self.reflected
    }
    pub fn convention(&self) -> Convention {
        if self.right {
            Convention::Right
        } else {
            Convention::Left
        }
    }

    pub fn is_identity(&self) -> bool {
        self.r == 0 && !self.reflected
    }

    /// `self ∘ other`, reduced with `g ∘ f_r ∘ g = f_{n+1-r}`.
    pub fn compose(&self, other: &Dihedral) -> Result<Dihedral> {
        if self.right != other.right {
            return Err(Error::ConventionMismatch);
        }
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let m = self.n + 1;
        // f^a g^x ∘ f^b g^y = f^{a ± b} g^{x+y}, minus when x is a reflection
        let r = if self.reflected {
            (self.r + m - other.r) % m
        } else {
            (self.r + other.r) % m
        };
        Ok(Dihedral {
            n: self.n,
            r,
            reflected: self.reflected ^ other.reflected,
            right: self.right,
        })
    }

    pub fn inverse(&self) -> Dihedral {
        let m = self.n + 1;
        let r = if self.reflected {
            self.r
        } else {
            (m - self.r) % m
        };
        Dihedral { r, ..*self }
    }

    /// Acts on a permutation of degree `n`.
    pub fn apply(&self, p: &Perm) -> Result<Perm> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: self.n,
            });
        }
        let q = if self.reflected {
            reverse_map(p)
        } else {
            p.clone()
        };
        Ok(if self.right {
            toric_map_unchecked(&q.inverse(), self.r).inverse()
        } else {
            toric_map_unchecked(&q, self.r)
        })
    }

    /// Acts on cut points through the closed forms for `f`, `f̄` and `g`.
    pub fn act_on_cuts(&self, c: &Cuts) -> Result<Cuts> {
        if c.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: c.n(),
                right: self.n,
            });
        }
        let mut cur = if self.reflected { reverse_cuts(c) } else { *c };
        for _ in 0..self.r {
            cur = if self.right {
                rotate_cuts_right(&cur)
            } else {
                rotate_cuts_left(&cur)
            };
        }
        Ok(cur)
    }

    /// Short name used in reports: `id`, `f`, `f^3`, `g`, `f^2·g`.
    pub fn short_name(&self) -> String {
        let rot = match self.r {
            0 => String::new(),
            1 => "f".to_string(),
            r => format!("f^{r}"),
        };
        match (rot.is_empty(), self.reflected) {
            (true, false) => "id".into(),
            (true, true) => "g".into(),
            (false, false) => rot,
            (false, true) => format!("{rot}·g"),
        }
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "f^{}·g", self.r)
        } else {
            write!(f, "f^{}", self.r)
        }
    }
}

impl fmt::Debug for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bar = if self.right { "bar " } else { "" };
        write!(f, "{bar}{self} (n={})", self.n)
    }
}

/// `f(σ(i,j,k))`: `σ(i-1,j-1,k-1)` if `i > 0`, else `σ(k-j-1, n-j, n)`.
pub fn rotate_cuts_left(c: &Cuts) -> Cuts {
    let (n, (i, j, k)) = (c.n(), c.triple());
    if i > 0 {
        Cuts::new_unchecked(n, i - 1, j - 1, k - 1)
    } else {
        Cuts::new_unchecked(n, k - j - 1, n - j, n)
    }
}

/// `f̄(σ(i,j,k))`: `σ(i-1,j-1,k-1)` if `i > 0`, else `σ(j-1, k-1, n)`.
pub fn rotate_cuts_right(c: &Cuts) -> Cuts {
    let (n, (i, j, k)) = (c.n(), c.triple());
    if i > 0 {
        Cuts::new_unchecked(n, i - 1, j - 1, k - 1)
    } else {
        Cuts::new_unchecked(n, j - 1, k - 1, n)
    }
}

/// `g(σ(i,j,k)) = σ(n-k, n-j, n-i)`.
pub fn reverse_cuts(c: &Cuts) -> Cuts {
    let (n, (i, j, k)) = (c.n(), c.triple());
    Cuts::new_unchecked(n, n - k, n - j, n - i)
}
