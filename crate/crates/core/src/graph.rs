//! The block transposition graph, the Cayley graph `Cay(Sym_n, T_n)` and the
//! structures inside them: partition bipartite degrees, maximal 2-cliques,
//! the vertex set `V` of those cliques and a Hamiltonian cycle of `Γ̄(V)`.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rayon::prelude::*;

use crate::cuts::{enumerate_tn, Cuts, PartitionClass};
use crate::error::{Error, Result};
use crate::perm::{factorial, Perm};
use crate::toric::Convention;

/// Default largest degree for which the full Cayley graph is materialised.
pub const DEFAULT_MAX_CAYLEY_N: usize = 7;

/// Simple undirected graph whose vertices carry distinct labels.
#[derive(Clone, Debug)]
pub struct Graph<L> {
    degree_n: usize,
    adj: Vec<Vec<u32>>,
    legend: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Clone + Eq + Hash> Graph<L> {
    /// Builds a graph from an edge list. Loops are rejected, duplicate and
    /// reversed edges are merged. `degree_n` is the permutation degree the
    /// labels live in (reported by exports).
    pub fn from_edges(
        degree_n: usize,
        legend: Vec<L>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let count = legend.len();
        let mut adj = vec![Vec::new(); count];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= count {
                    return Err(Error::VertexOutOfRange { index: x, count });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Self::from_adjacency(degree_n, legend, adj)
    }

    fn from_adjacency(degree_n: usize, legend: Vec<L>, mut adj: Vec<Vec<u32>>) -> Result<Self> {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let mut index = HashMap::with_capacity(legend.len());
        for (v, label) in legend.iter().enumerate() {
            if index.insert(label.clone(), v).is_some() {
                return Err(Error::Parse(format!("duplicate label at vertex {v}")));
            }
        }
        Ok(Graph {
            degree_n,
            adj,
            legend,
            index,
        })
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Subgraph induced on the given vertices, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph<L>> {
        let count = self.vertex_count();
        let mut new_index = vec![u32::MAX; count];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= count {
                return Err(Error::VertexOutOfRange { index: old, count });
            }
            new_index[old] = new as u32;
        }
        let adj = vertices
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| {
                        let w = new_index[w as usize];
                        (w != u32::MAX).then_some(w)
                    })
                    .collect()
            })
            .collect();
        let legend = vertices.iter().map(|&v| self.legend[v].clone()).collect();
        Self::from_adjacency(self.degree_n, legend, adj)
    }

    /// Subgraph induced on the vertices with these labels.
    pub fn induced_by_labels(&self, labels: &[L]) -> Result<Graph<L>> {
        let vertices = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::Parse("label not in graph".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.induced(&vertices)
    }
}

impl<L> Graph<L> {
    /// Permutation degree `n` the labels belong to.
    pub fn n(&self) -> usize {
        self.degree_n
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> &L {
        &self.legend[v]
    }

    pub fn legend(&self) -> &[L] {
        &self.legend
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut x, mut y, mut count) = (0, 0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    x += 1;
                    y += 1;
                }
            }
        }
        count
    }

    /// Degree multiset as `degree -> number of vertices`.
    pub fn degree_report(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for list in &self.adj {
            *out.entry(list.len()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|list| list.len() == k)
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.adj.len()
    }

    /// For every vertex of `part_a ∪ part_b`, the number of its neighbours in
    /// the other part.
    pub fn bipartite_degrees(
        &self,
        part_a: &[usize],
        part_b: &[usize],
    ) -> Result<BTreeMap<usize, usize>> {
        let count = self.vertex_count();
        let mut side = vec![0u8; count];
        for (tag, part) in [(1u8, part_a), (2u8, part_b)] {
            for &v in part {
                if v >= count {
                    return Err(Error::VertexOutOfRange { index: v, count });
                }
                if side[v] != 0 && side[v] != tag {
                    return Err(Error::Overlap(v));
                }
                side[v] = tag;
            }
        }
        Ok(part_a
            .iter()
            .chain(part_b)
            .map(|&v| {
                let other = 3 - side[v];
                let cross = self.adj[v]
                    .iter()
                    .filter(|&&w| side[w as usize] == other)
                    .count();
                (v, cross)
            })
            .collect())
    }

    /// Edges whose endpoints have no common neighbour, i.e. the edges of the
    /// maximal cliques of size 2. Sorted, `u < v`.
    pub fn maximal_two_cliques(&self) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(u, v)| self.common_neighbor_count(u, v) == 0)
            .collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| {
            vertices[a + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    /// Whether `cycle` visits every vertex exactly once and consecutive
    /// vertices (cyclically) are adjacent.
    pub fn is_hamiltonian_cycle(&self, cycle: &[usize]) -> bool {
        let count = self.vertex_count();
        if cycle.len() != count || count < 3 {
            return false;
        }
        let mut seen = vec![false; count];
        for &v in cycle {
            if v >= count || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..count).all(|t| self.has_edge(cycle[t], cycle[(t + 1) % count]))
    }
}

/// A complete graph on `m` vertices labelled `0..m`.
pub fn complete_graph(m: usize) -> Graph<usize> {
    let edges = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)));
    Graph::from_edges(0, (0..m).collect(), edges).expect("valid complete graph")
}

/// Whether `u^{-1} ∘ v` (right) or `v ∘ u^{-1}` (left) is a block transposition.
fn adjacent(u: &Perm, v: &Perm, convention: Convention) -> bool {
    let quotient = match convention {
        Convention::Right => u.inverse().then_after(v),
        Convention::Left => v.then_after(&u.inverse()),
    };
    Cuts::from_perm(&quotient).is_some()
}

/// The block transposition graph on `T_n` in the given convention. The
/// right-invariant graph `Γ̄` is the canonical one.
pub fn build_bt_graph_with(n: usize, convention: Convention) -> Result<Graph<Cuts>> {
    let vertices = enumerate_tn(n)?;
    let perms: Vec<Perm> = vertices.iter().map(Cuts::to_perm).collect();
    let adj: Vec<Vec<u32>> = (0..vertices.len())
        .into_par_iter()
        .map(|u| {
            (0..vertices.len())
                .filter(|&v| v != u && adjacent(&perms[u], &perms[v], convention))
                .map(|v| v as u32)
                .collect()
        })
        .collect();
    Graph::from_adjacency(n, vertices, adj)
}

/// `Γ̄`: the right-invariant block transposition graph.
pub fn build_bt_graph(n: usize) -> Result<Graph<Cuts>> {
    build_bt_graph_with(n, Convention::Right)
}

/// `Cay(Sym_n, T_n)`, vertices in lexicographic rank order.
pub fn build_cayley(n: usize, convention: Convention, max_n: usize) -> Result<Graph<Perm>> {
    if n > max_n {
        return Err(Error::BoundExceeded {
            what: "Cayley graph",
            n,
            max: max_n,
        });
    }
    let gens: Vec<Cuts> = enumerate_tn(n)?;
    let gen_perms: Vec<Perm> = gens.iter().map(Cuts::to_perm).collect();
    let count = factorial(n) as usize;
    let adj: Vec<Vec<u32>> = (0..count)
        .into_par_iter()
        .map(|r| {
            let p = Perm::unrank(n, r as u64);
            gens.iter()
                .zip(&gen_perms)
                .map(|(c, s)| {
                    let q = match convention {
                        Convention::Right => c.apply_right_unchecked(&p),
                        Convention::Left => s.then_after(&p),
                    };
                    q.rank() as u32
                })
                .collect()
        })
        .collect();
    let legend: Vec<Perm> = (0..count).map(|r| Perm::unrank(n, r as u64)).collect();
    Graph::from_adjacency(n, legend, adj)
}

/// Vertices of `T_n`'s graph that fall in the given class.
pub fn class_vertices(g: &Graph<Cuts>, class: PartitionClass) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.label(v).class() == class)
        .collect()
}

/// One of the `n+1` distinguished maximal 2-clique edges `e_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueEdge {
    pub m: usize,
    pub ends: (Cuts, Cuts),
}

impl CliqueEdge {
    /// Endpoints as an ordered pair (smaller first).
    pub fn sorted_ends(&self) -> (Cuts, Cuts) {
        let (a, b) = self.ends;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// The closed-form edges `e_0, ..., e_n`:
/// `e_l = {σ(l,l+1,l+3), σ(l,l+2,l+3)}` for `l <= n-3`, then
/// `e_{n-2} = {σ(0,n-2,n-1), σ(0,n-2,n)}`,
/// `e_{n-1} = {σ(1,n-1,n), σ(0,1,n-1)}`,
/// `e_n = {σ(0,2,n), σ(1,2,n)}`.
pub fn expected_em_edges(n: usize) -> Result<Vec<CliqueEdge>> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { n, min: 4 });
    }
    let c = |i, j, k| Cuts::new_unchecked(n, i, j, k);
    let mut out: Vec<CliqueEdge> = (0..=n - 3)
        .map(|l| CliqueEdge {
            m: l,
            ends: (c(l, l + 1, l + 3), c(l, l + 2, l + 3)),
        })
        .collect();
    out.push(CliqueEdge {
        m: n - 2,
        ends: (c(0, n - 2, n - 1), c(0, n - 2, n)),
    });
    out.push(CliqueEdge {
        m: n - 1,
        ends: (c(1, n - 1, n), c(0, 1, n - 1)),
    });
    out.push(CliqueEdge {
        m: n,
        ends: (c(0, 2, n), c(1, 2, n)),
    });
    Ok(out)
}

/// Endpoints of the `e_m`, deduplicated and in lexicographic order.
pub fn vertex_set_v(n: usize) -> Result<Vec<Cuts>> {
    let mut out: Vec<Cuts> = expected_em_edges(n)?
        .into_iter()
        .flat_map(|e| [e.ends.0, e.ends.1])
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `Γ̄(V)`, the subgraph of `Γ̄` induced on `V`.
pub fn build_btv_graph(n: usize) -> Result<Graph<Cuts>> {
    let g = build_bt_graph(n)?;
    g.induced_by_labels(&vertex_set_v(n)?)
}

/// A Hamiltonian cycle of `Γ̄(V)` for `n >= 5`: the path
/// `σ(0,2,3), σ(0,1,3), σ(1,3,4), σ(1,2,4), ..., σ(n-4,n-3,n-1)`
/// followed by
/// `σ(n-3,n-1,n), σ(n-3,n-2,n), σ(0,n-2,n), σ(0,n-2,n-1), σ(0,1,n-1),
/// σ(1,n-1,n), σ(1,2,n), σ(0,2,n)`, closing back at `σ(0,2,3)`.
pub fn hamiltonian_cycle_v(n: usize) -> Result<Vec<Cuts>> {
    if n < 5 {
        return Err(Error::DegreeTooSmall { n, min: 5 });
    }
    let c = |i, j, k| Cuts::new_unchecked(n, i, j, k);
    let mut cycle: Vec<Cuts> = (0..=n - 4)
        .flat_map(|l| [c(l, l + 2, l + 3), c(l, l + 1, l + 3)])
        .collect();
    cycle.extend([
        c(n - 3, n - 1, n),
        c(n - 3, n - 2, n),
        c(0, n - 2, n),
        c(0, n - 2, n - 1),
        c(0, 1, n - 1),
        c(1, n - 1, n),
        c(1, 2, n),
        c(0, 2, n),
    ]);
    Ok(cycle)
}
