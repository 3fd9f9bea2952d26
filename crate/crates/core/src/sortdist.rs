//! Sorting by block transpositions: word length in `Cay(Sym_n, T_n)`.
//!
//! The distance of `π` is the least `ℓ` with `π ∘ σ_1 ∘ ... ∘ σ_ℓ = ι`.
//! Single queries use a bidirectional breadth-first search over lexicographic
//! ranks; [`DistanceTable`] holds the distance of every permutation for
//! small `n`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cuts::{enumerate_tn, Cuts};
use crate::error::{Error, Result};
use crate::perm::{factorial, rank_of, unrank_to_vec, Perm};
use crate::toric::{Convention, Dihedral};

#[derive(Clone, Copy, Debug)]
pub struct SortOptions {
    /// Largest `n` for a single bidirectional query.
    pub max_single_n: usize,
    /// Largest `n` for which the full distance table may be built.
    pub max_table_n: usize,
}

impl Default for SortOptions {
    fn default() -> Self {
        SortOptions {
            max_single_n: 9,
            max_table_n: 7,
        }
    }
}

/// Start permutation, the block transpositions applied on the right, and the
/// permutation reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortingTrace {
    pub start: Perm,
    pub moves: Vec<Cuts>,
    pub end: Perm,
}

impl SortingTrace {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Folding the moves over `start` reproduces `end`.
    pub fn is_valid(&self) -> bool {
        let mut cur = self.start.clone();
        for c in &self.moves {
            match c.apply_right(&cur) {
                Ok(next) => cur = next,
                Err(_) => return false,
            }
        }
        cur == self.end
    }

    /// Each step as `(i,j,k) -> one-line`.
    pub fn lines(&self) -> Vec<String> {
        let mut cur = self.start.clone();
        self.moves
            .iter()
            .map(|c| {
                cur = c.apply_right_unchecked(&cur);
                format!("{c} -> {cur}")
            })
            .collect()
    }
}

fn neighbor_ranks<'a>(img: &[u8], gens: &'a [Cuts]) -> impl Iterator<Item = u64> + 'a {
    let owned = img.to_vec();
    gens.iter().map(move |c| {
        let (i, j, k) = c.triple();
        let mut next = Vec::with_capacity(owned.len());
        next.extend_from_slice(&owned[..i]);
        next.extend_from_slice(&owned[j..k]);
        next.extend_from_slice(&owned[i..j]);
        next.extend_from_slice(&owned[k..]);
        rank_of(&next)
    })
}

/// Distance of every permutation of degree `n` from the identity.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn build(n: usize, opts: SortOptions) -> Result<Self> {
        if n > opts.max_table_n {
            return Err(Error::BoundExceeded {
                what: "distance table",
                n,
                max: opts.max_table_n,
            });
        }
        if n == 0 {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        let count = factorial(n) as usize;
        let mut dist = vec![u8::MAX; count];
        let gens = if n >= 2 { enumerate_tn(n)? } else { Vec::new() };
        dist[0] = 0;
        let mut frontier: Vec<u64> = vec![0];
        let mut level = 0u8;
        while !frontier.is_empty() {
            level += 1;
            let dist_ref = &dist;
            let mut next: Vec<u64> = frontier
                .par_iter()
                .flat_map_iter(|&r| {
                    let img = unrank_to_vec(n, r);
                    neighbor_ranks(&img, &gens)
                        .filter(|&q| dist_ref[q as usize] == u8::MAX)
                        .collect::<Vec<_>>()
                })
                .collect();
            next.sort_unstable();
            next.dedup();
            for &q in &next {
                dist[q as usize] = level;
            }
            frontier = next;
        }
        Ok(DistanceTable { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: &Perm) -> usize {
        assert_eq!(p.degree(), self.n, "degree mismatch");
        self.dist[p.rank() as usize] as usize
    }

    pub fn by_rank(&self, rank: u64) -> usize {
        self.dist[rank as usize] as usize
    }

    /// Largest distance: the diameter of the Cayley graph.
    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Number of permutations at each distance.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.diameter() + 1];
        for &d in &self.dist {
            h[d as usize] += 1;
        }
        h
    }
}

/// Word length of `p` over `T_n`, by bidirectional breadth-first search.
pub fn distance(p: &Perm, opts: SortOptions) -> Result<usize> {
    let n = p.degree();
    if n > opts.max_single_n {
        return Err(Error::BoundExceeded {
            what: "distance query",
            n,
            max: opts.max_single_n,
        });
    }
    bidirectional(p, &Perm::identity(n), usize::MAX)
        .map(|d| d.expect("Cayley graph is connected"))
}

/// Distance between `a` and `b`, or `None` if it exceeds `limit`.
fn bidirectional(a: &Perm, b: &Perm, limit: usize) -> Result<Option<usize>> {
    let n = a.degree();
    let ra = a.rank();
    let rb = b.rank();
    if ra == rb {
        return Ok(Some(0));
    }
    let gens = enumerate_tn(n)?;
    let mut seen: [HashMap<u64, u8>; 2] = [HashMap::from([(ra, 0)]), HashMap::from([(rb, 0)])];
    let mut frontier: [Vec<u64>; 2] = [vec![ra], vec![rb]];
    let mut depth = [0usize; 2];
    while !frontier[0].is_empty() && !frontier[1].is_empty() {
        if depth[0] + depth[1] >= limit {
            return Ok(None);
        }
        let side = usize::from(frontier[1].len() < frontier[0].len());
        let other = 1 - side;
        depth[side] += 1;
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for &r in &frontier[side] {
            let img = unrank_to_vec(n, r);
            for q in neighbor_ranks(&img, &gens) {
                if let Some(&d) = seen[other].get(&q) {
                    let total = depth[side] + d as usize;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if !seen[side].contains_key(&q) {
                    seen[side].insert(q, depth[side] as u8);
                    next.push(q);
                }
            }
        }
        if let Some(total) = best {
            return Ok((total <= limit).then_some(total));
        }
        frontier[side] = next;
    }
    Ok(None)
}

/// A shortest sorting sequence; at each step the lexicographically least
/// block transposition that lowers the distance is taken.
pub fn sorting_sequence(p: &Perm, opts: SortOptions) -> Result<SortingTrace> {
    let n = p.degree();
    if n > opts.max_single_n {
        return Err(Error::BoundExceeded {
            what: "sorting sequence",
            n,
            max: opts.max_single_n,
        });
    }
    let gens = if n >= 2 { enumerate_tn(n)? } else { Vec::new() };
    let table = if n <= opts.max_table_n {
        Some(DistanceTable::build(n, opts)?)
    } else {
        None
    };
    let iota = Perm::identity(n);
    let dist_of = |q: &Perm, limit: usize| -> Result<Option<usize>> {
        match &table {
            Some(t) => Ok(Some(t.get(q)).filter(|&d| d <= limit)),
            None => bidirectional(q, &iota, limit),
        }
    };
    let mut d = dist_of(p, usize::MAX)?.expect("connected");
    let mut cur = p.clone();
    let mut moves = Vec::with_capacity(d);
    while d > 0 {
        let mut stepped = false;
        for c in &gens {
            let next = c.apply_right_unchecked(&cur);
            if dist_of(&next, d - 1)? == Some(d - 1) {
                moves.push(*c);
                cur = next;
                d -= 1;
                stepped = true;
                break;
            }
        }
        assert!(stepped, "a neighbour one step closer always exists");
    }
    Ok(SortingTrace {
        start: p.clone(),
        moves,
        end: cur,
    })
}

/// Least image of `p` under the right-invariant toric-reverse group.
/// These maps fix `ι` and are automorphisms, so distance is unchanged.
pub fn toric_reduce(p: &Perm) -> Perm {
    Dihedral::all(p.degree(), Convention::Right)
        .iter()
        .map(|d| d.apply(p).expect("degrees agree"))
        .min()
        .expect("group is non-empty")
}
