//! Individualisation-refinement search for automorphism groups.
//!
//! Colourings are kept canonical: refinement recolours every vertex by
//! `(colour, sorted neighbour colours)` and numbers the distinct signatures in
//! sorted order, so two colourings related by an automorphism refine to
//! colourings related by the same automorphism. A hash of the signature
//! sequence (the trace) prunes branches whose refinements differ.
//!
//! Group orders come from a stabiliser chain along the leftmost path: base
//! points are processed deepest first, so generators found at deeper levels
//! already fix the earlier base points and their orbits can skip searches.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::VertexMap;
use crate::graph::Graph;

#[derive(Clone, Debug)]
struct Coloring {
    colors: Vec<u32>,
    count: u32,
    trace: u64,
}

impl Coloring {
    fn is_discrete(&self) -> bool {
        self.count as usize == self.colors.len()
    }
}

pub(crate) struct Outcome {
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub generators: Vec<VertexMap>,
    pub nodes: u64,
}

pub(crate) struct Search<'g, L> {
    graph: &'g Graph<L>,
    nodes: u64,
}

impl<'g, L> Search<'g, L> {
    pub fn new(graph: &'g Graph<L>) -> Self {
        Search { graph, nodes: 0 }
    }

    /// Automorphisms that preserve the initial colouring `cells`
    /// (equal values = same cell; the numeric order of values is respected).
    pub fn run(mut self, cells: &[u32]) -> Outcome {
        let root = self.refine(normalise(cells));
        let mut path = vec![root];
        let mut base = Vec::new();
        while !path.last().unwrap().is_discrete() {
            let cur = path.last().unwrap();
            let b = target_vertex(cur);
            base.push(b);
            let next = self.refine(individualise(cur, b));
            path.push(next);
        }

        let m = self.graph.vertex_count();
        let mut generators: Vec<VertexMap> = Vec::new();
        let mut orbit_sizes = vec![1; base.len()];
        for level in (0..base.len()).rev() {
            let b = base[level];
            let cell_color = path[level].colors[b];
            let mut orbits = Orbits::new(m, &generators);
            for w in 0..m {
                if path[level].colors[w] != cell_color || orbits.same(b, w) {
                    continue;
                }
                let right = self.refine(individualise(&path[level], w));
                if right.trace != path[level + 1].trace {
                    continue;
                }
                if let Some(found) = self.extend(&path, &base, level + 1, right) {
                    orbits.add(&found);
                    generators.push(found);
                }
            }
            orbit_sizes[level] = orbits.size_of(b);
        }

        Outcome {
            base,
            orbit_sizes,
            generators,
            nodes: self.nodes,
        }
    }

    fn extend(
        &mut self,
        path: &[Coloring],
        base: &[usize],
        depth: usize,
        right: Coloring,
    ) -> Option<VertexMap> {
        if right.is_discrete() {
            return self.leaf(&path[depth], &right);
        }
        let cell_color = path[depth].colors[base[depth]];
        let candidates: Vec<usize> = (0..right.colors.len())
            .filter(|&y| right.colors[y] == cell_color)
            .collect();
        for y in candidates {
            let next = self.refine(individualise(&right, y));
            if next.trace != path[depth + 1].trace {
                continue;
            }
            if let Some(found) = self.extend(path, base, depth + 1, next) {
                return Some(found);
            }
        }
        None
    }

    fn leaf(&self, left: &Coloring, right: &Coloring) -> Option<VertexMap> {
        let m = left.colors.len();
        let mut by_color = vec![0u32; m];
        for (v, &c) in right.colors.iter().enumerate() {
            by_color[c as usize] = v as u32;
        }
        let image: Vec<u32> = left.colors.iter().map(|&c| by_color[c as usize]).collect();
        let map = VertexMap::from_images_unchecked(image);
        map.is_automorphism_of(self.graph).then_some(map)
    }

    fn refine(&mut self, colors: Vec<u32>) -> Coloring {
        self.nodes += 1;
        let g = self.graph;
        let m = colors.len();
        let mut colors = colors;
        let mut count = distinct(&colors);
        let mut hasher = DefaultHasher::new();
        count.hash(&mut hasher);
        let mut order: Vec<usize> = (0..m).collect();
        loop {
            let sigs: Vec<Vec<u32>> = (0..m)
                .map(|v| {
                    let mut s: Vec<u32> = Vec::with_capacity(g.degree(v) + 1);
                    s.push(colors[v]);
                    let start = s.len();
                    s.extend(g.neighbors(v).iter().map(|&w| colors[w as usize]));
                    s[start..].sort_unstable();
                    s
                })
                .collect();
            order.sort_unstable_by(|&a, &b| sigs[a].cmp(&sigs[b]));
            let mut next = vec![0u32; m];
            let mut c = 0u32;
            for t in 0..m {
                if t > 0 && sigs[order[t]] != sigs[order[t - 1]] {
                    c += 1;
                    sigs[order[t - 1]].hash(&mut hasher);
                    t.hash(&mut hasher);
                }
                next[order[t]] = c;
            }
            if m > 0 {
                sigs[order[m - 1]].hash(&mut hasher);
            }
            let new_count = if m == 0 { 0 } else { c + 1 };
            colors = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        Coloring {
            colors,
            count,
            trace: hasher.finish(),
        }
    }
}

/// First vertex of the smallest non-singleton cell (lowest colour on ties).
fn target_vertex(c: &Coloring) -> usize {
    let mut sizes = vec![0usize; c.count as usize];
    for &col in &c.colors {
        sizes[col as usize] += 1;
    }
    let best = (0..sizes.len())
        .filter(|&k| sizes[k] > 1)
        .min_by_key(|&k| (sizes[k], k))
        .expect("non-discrete colouring has a non-singleton cell");
    c.colors
        .iter()
        .position(|&col| col as usize == best)
        .unwrap()
}

/// Splits `v` off its cell, placing it before the rest of the cell.
fn individualise(c: &Coloring, v: usize) -> Vec<u32> {
    let raw: Vec<u32> = c
        .colors
        .iter()
        .enumerate()
        .map(|(x, &col)| 2 * col + u32::from(x != v))
        .collect();
    normalise(&raw)
}

/// Renumbers colours densely, preserving their order.
fn normalise(raw: &[u32]) -> Vec<u32> {
    let mut values: Vec<u32> = raw.to_vec();
    values.sort_unstable();
    values.dedup();
    raw.iter()
        .map(|x| values.binary_search(x).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> u32 {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len() as u32
}

/// Union-find over vertices, merged along generator cycles.
struct Orbits {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Orbits {
    fn new(m: usize, gens: &[VertexMap]) -> Self {
        let mut o = Orbits {
            parent: (0..m as u32).collect(),
            size: vec![1; m],
        };
        for g in gens {
            o.add(g);
        }
        o
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn add(&mut self, g: &VertexMap) {
        for v in 0..self.parent.len() {
            let (a, b) = (self.find(v as u32), self.find(g.image(v) as u32));
            if a != b {
                let (big, small) = if self.size[a as usize] >= self.size[b as usize] {
                    (a, b)
                } else {
                    (b, a)
                };
                self.parent[small as usize] = big;
                self.size[big as usize] += self.size[small as usize];
            }
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a as u32) == self.find(b as u32)
    }

    fn size_of(&mut self, a: usize) -> usize {
        let r = self.find(a as u32);
        self.size[r as usize] as usize
    }
}
