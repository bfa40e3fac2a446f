//! Simple graphs on `[n]`, stored as adjacency bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v]` has bit `u` set iff `{u+1, v+1}` is an edge.
    adj: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::size(format!("graphs are limited to {MAX_VERTICES} vertices")));
        }
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i == j || i == 0 || j == 0 || i > n || j > n {
                return Err(Error::invalid(format!("bad edge {{{i},{j}}} for n = {n}")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for i in 1..=a {
            for j in a + 1..=a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// `K_a` on `{1..a}` and `K_b` on `{a+1..a+b}`.
    pub fn two_cliques(a: usize, b: usize) -> Self {
        Graph::complete_bipartite(a, b).complement()
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i, i + 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(1, n);
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask (bit `u-1` for vertex `u`).
    pub fn neighbours(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edge set as a bitmask over pairs in lexicographic order; used for canonical forms.
    pub fn edge_code(&self) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.has_edge(i, j) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    pub fn from_edge_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if code >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn all_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// `G[S]` relabelled to `1..|S|` preserving the order of `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
        }
        g
    }

    /// `G - v`, relabelled.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// `pi[i-1]` is the new label of vertex `i`.
    pub fn relabel(&self, pi: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            g.add_edge(pi[i - 1], pi[j - 1]);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (i, j) in self.edges() {
            g.add_edge(i, j);
        }
        for (i, j) in other.edges() {
            g.add_edge(i + self.n, j + self.n);
        }
        g
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// Text format: `n <int>` then one `i j` per line. JSON `{"n":..,"edges":[[i,j],..]}` is also accepted.
    pub fn parse(text: &str) -> Result<Graph> {
        let t = text.trim_start();
        if t.starts_with('{') {
            let j: GraphJson = serde_json::from_str(t).map_err(|e| Error::invalid(format!("bad graph JSON: {e}")))?;
            let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
            return Graph::from_edges(j.n, &edges);
        }
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::invalid("empty graph file"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", v] => v.parse::<usize>().map_err(|_| Error::invalid(format!("bad vertex count {v:?}")))?,
            _ => return Err(Error::invalid(format!("graph header must be `n <int>`, got {header:?}"))),
        };
        let mut edges = Vec::new();
        for l in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let [a, b] = parts[..] else {
                return Err(Error::invalid(format!("bad edge line {l:?}")));
            };
            let p = |s: &str| s.parse::<usize>().map_err(|_| Error::invalid(format!("bad vertex {s:?}")));
            edges.push((p(a)?, p(b)?));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}{j}")).collect();
        write!(f, "n={} {{{}}}", self.n, e.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n, edges: self.edges().iter().map(|&(i, j)| [i, j]).collect() }.serialize(s)
    }
}
