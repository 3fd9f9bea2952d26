//! Block transpositions `σ(i,j,k)` named by their cut points.
//!
//! `σ(i,j,k)` exchanges the adjacent blocks at positions `i+1..=j` and
//! `j+1..=k`; acting on the right of `π` it splices
//! `[π_1..π_i | π_{j+1}..π_k | π_{i+1}..π_j | π_{k+1}..π_n]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Perm, MAX_DEGREE};

/// Cut points `(i, j, k)` with `0 <= i < j < k <= n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cuts {
    n: usize,
    i: usize,
    j: usize,
    k: usize,
}

/// The four blocks of the partition `T_n = B ∪ L ∪ F ∪ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    /// `σ(0,j,n)`: the nontrivial powers of `β = σ(0,1,n)`.
    B,
    /// `σ(0,j,k)` with `k < n`.
    L,
    /// `σ(i,j,n)` with `i > 0`.
    F,
    /// `σ(i,j,k)` with `i > 0` and `k < n`: block transpositions on `{2, ..., n-1}`.
    S,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 4] = [Self::B, Self::L, Self::F, Self::S];

    /// Size of the class inside `T_n`.
    pub fn expected_size(self, n: usize) -> usize {
        let m = n.saturating_sub(1);
        match self {
            Self::B => m,
            Self::L | Self::F => m * m.saturating_sub(1) / 2,
            Self::S => m * m.saturating_sub(1) * m.saturating_sub(2) / 6,
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::B => "B",
            Self::L => "L",
            Self::F => "F",
            Self::S => "S",
        };
        f.write_str(s)
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Self::B),
            "L" | "l" => Ok(Self::L),
            "F" | "f" => Ok(Self::F),
            "S" | "s" => Ok(Self::S),
            other => Err(Error::Parse(format!("unknown class {other:?}"))),
        }
    }
}

/// `|T_n| = (n+1) n (n-1) / 6`.
pub fn tn_size(n: usize) -> usize {
    (n + 1) * n * n.saturating_sub(1) / 6
}

impl Cuts {
    pub fn new(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        if n > MAX_DEGREE || !(i < j && j < k && k <= n) {
            return Err(Error::InvalidCuts { n, i, j, k });
        }
        Ok(Cuts { n, i, j, k })
    }

    pub(crate) fn new_unchecked(n: usize, i: usize, j: usize, k: usize) -> Self {
        debug_assert!(i < j && j < k && k <= n, "({i},{j},{k}) n={n}");
        Cuts { n, i, j, k }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn i(&self) -> usize {
        self.i
    }
    pub fn j(&self) -> usize {
        self.j
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }

    /// Parses `"(i,j,k)"` (parentheses and spaces optional).
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [i, j, k] => Cuts::new(n, i, j, k),
            _ => Err(Error::Parse(format!("expected (i,j,k), got {s:?}"))),
        }
    }

    /// One-line form `[1..i  j+1..k  i+1..j  k+1..n]`.
    pub fn to_perm(&self) -> Perm {
        let (n, i, j, k) = (self.n, self.i, self.j, self.k);
        let img: Vec<u8> = (0..i)
            .chain(j..k)
            .chain(i..j)
            .chain(k..n)
            .map(|v| v as u8)
            .collect();
        Perm::from_zero_based_unchecked(img)
    }

    /// `π ∘ σ(i,j,k)`, computed as a block splice.
    pub fn apply_right(&self, p: &Perm) -> Result<Perm> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: self.n,
            });
        }
        Ok(self.apply_right_unchecked(p))
    }

    pub(crate) fn apply_right_unchecked(&self, p: &Perm) -> Perm {
        let src = p.zero_based();
        let (i, j, k) = (self.i, self.j, self.k);
        let mut img = Vec::with_capacity(src.len());
        img.extend_from_slice(&src[..i]);
        img.extend_from_slice(&src[j..k]);
        img.extend_from_slice(&src[i..j]);
        img.extend_from_slice(&src[k..]);
        Perm::from_zero_based_unchecked(img)
    }

    /// `σ(i,j,k)^{-1} = σ(i, k-j+i, k)`.
    pub fn inverse(&self) -> Cuts {
        Cuts::new_unchecked(self.n, self.i, self.k - self.j + self.i, self.k)
    }

    /// `σ(i,i+1,k)^e = σ(i, i+e, k)` for `1 <= e <= k-i-1`.
    pub fn power(n: usize, i: usize, k: usize, e: usize) -> Result<Cuts> {
        if !(i < k && k <= n) || k - i < 2 {
            return Err(Error::InvalidCuts { n, i, j: i + 1, k });
        }
        if e == 0 || e > k - i - 1 {
            return Err(Error::ExponentOutOfRange { e, max: k - i - 1 });
        }
        Cuts::new(n, i, i + e, k)
    }

    pub fn class(&self) -> PartitionClass {
        match (self.i == 0, self.k == self.n) {
            (true, true) => PartitionClass::B,
            (true, false) => PartitionClass::L,
            (false, true) => PartitionClass::F,
            (false, false) => PartitionClass::S,
        }
    }

    /// Decodes a permutation of the shape `[1..i  j+1..k  i+1..j  k+1..n]`.
    pub fn from_perm(p: &Perm) -> Option<Cuts> {
        let img = p.zero_based();
        let n = img.len();
        let i = img
            .iter()
            .enumerate()
            .position(|(t, &v)| t != v as usize)?;
        let j = img[i] as usize;
        let mut k = j + 1;
        while i + (k - j) < n && img[i + (k - j)] as usize == k {
            k += 1;
        }
        // ascending run j+1..k occupies positions i+1..i+(k-j)
        if j <= i || k > n {
            return None;
        }
        let cand = Cuts::new_unchecked(n, i, j, k);
        let ok = img[i + (k - j)..k]
            .iter()
            .zip(i..j)
            .all(|(&v, want)| v as usize == want)
            && img[k..].iter().zip(k..n).all(|(&v, want)| v as usize == want);
        ok.then_some(cand)
    }

    /// Position of these cut points in the lexicographic order of `T_n`.
    pub fn lex_index(&self) -> usize {
        let (n, i, j, k) = (self.n, self.i, self.j, self.k);
        let choose2 = |m: usize| m * m.saturating_sub(1) / 2;
        let before_i: usize = (0..i).map(|a| choose2(n - a)).sum();
        let before_j: usize = (i + 1..j).map(|b| n - b).sum();
        before_i + before_j + (k - j - 1)
    }
}

impl fmt::Display for Cuts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

impl fmt::Debug for Cuts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ({},{},{})/{}", self.i, self.j, self.k, self.n)
    }
}

/// All cut points of degree `n` in lexicographic order of `(i, j, k)`.
pub fn enumerate_tn(n: usize) -> Result<Vec<Cuts>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
    }
    let mut out = Vec::with_capacity(tn_size(n));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..=n {
                out.push(Cuts::new_unchecked(n, i, j, k));
            }
        }
    }
    Ok(out)
}

/// `β = σ(0,1,n)`.
pub fn beta(n: usize) -> Result<Cuts> {
    Cuts::new(n, 0, 1, n)
}
