//! Graph automorphism groups and the symmetry claims about the block
//! transposition graphs.

mod checks;
mod search;

use std::collections::{HashSet, VecDeque};
use std::fmt;

pub use checks::{
    check_n_trivial, check_theorem_aut_bt, dihedral_as_vertex_maps, phi_check, phi_image,
    NTrivialOutcome, DEFAULT_MAX_N_TRIVIAL, MAX_PHI_N,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest vertex count the search accepts.
pub const DEFAULT_MAX_VERTICES: usize = 5040;

/// A permutation of a graph's vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap {
    images: Vec<u32>,
}

impl VertexMap {
    pub fn identity(m: usize) -> Self {
        VertexMap {
            images: (0..m as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("vertex map {images:?}")));
            }
        }
        Ok(VertexMap {
            images: images.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        VertexMap { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w as usize)
    }

    /// `self ∘ inner`.
    pub fn then_after(&self, inner: &VertexMap) -> VertexMap {
        VertexMap {
            images: inner.images.iter().map(|&v| self.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> VertexMap {
        let mut inv = vec![0u32; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w as usize] = v as u32;
        }
        VertexMap { images: inv }
    }

    /// Whether the map sends edges to edges. For a bijection on a finite
    /// graph this also sends non-edges to non-edges.
    pub fn is_automorphism_of<L>(&self, g: &Graph<L>) -> bool {
        self.images.len() == g.vertex_count()
            && (0..g.vertex_count()).all(|u| {
                let gu = self.image(u);
                g.degree(u) == g.degree(gu)
                    && g.neighbors(u).iter().all(|&v| g.has_edge(gu, self.image(v as usize)))
            })
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.image(v) == v
    }
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexMap{:?}", self.images)
    }
}

/// Order and generators of a computed automorphism group.
#[derive(Clone, Debug)]
pub struct GroupDescription {
    pub order: u128,
    pub generators: Vec<VertexMap>,
    /// Base points of the stabiliser chain and the orbit length at each level.
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub notes: String,
}

impl GroupDescription {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    pub max_vertices: usize,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// The full automorphism group of `g`.
pub fn automorphism_group<L>(g: &Graph<L>, opts: AutOptions) -> Result<GroupDescription> {
    stabilizer_fixing(g, &[], opts)
}

/// Automorphisms of `g` fixing each listed vertex.
pub fn stabilizer_fixing<L>(
    g: &Graph<L>,
    fixed: &[usize],
    opts: AutOptions,
) -> Result<GroupDescription> {
    let m = g.vertex_count();
    if m > opts.max_vertices {
        return Err(Error::BoundExceeded {
            what: "automorphism search vertex count",
            n: m,
            max: opts.max_vertices,
        });
    }
    let mut cells = vec![0u32; m];
    for (t, &v) in fixed.iter().enumerate() {
        if v >= m {
            return Err(Error::VertexOutOfRange { index: v, count: m });
        }
        if cells[v] == 0 {
            cells[v] = t as u32 + 1;
        }
    }
    let out = search::Search::new(g).run(&cells);
    let order = out.orbit_sizes.iter().map(|&s| s as u128).product();
    let notes = format!(
        "base {:?}; orbit lengths {:?}; {} refinements",
        out.base, out.orbit_sizes, out.nodes
    );
    Ok(GroupDescription {
        order,
        generators: out.generators,
        base: out.base,
        orbit_sizes: out.orbit_sizes,
        notes,
    })
}

/// Every element of the group generated by `gens`, by breadth-first closure.
/// Returns `None` once more than `limit` elements are found.
pub fn enumerate_group(m: usize, gens: &[VertexMap], limit: usize) -> Option<Vec<VertexMap>> {
    let id = VertexMap::identity(m);
    let mut seen: HashSet<VertexMap> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.then_after(&x);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    order.sort();
    Some(order)
}
