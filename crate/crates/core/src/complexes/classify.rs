//! Combinatorial classifiers: forbidden induced subgraphs, near-cone peeling,
//! base forms and chordality.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::complexes::graph::Graph;

/// `{12, 13, 34}` on 4 vertices (a path on four vertices).
pub fn graph_a() -> Graph {
    Graph::from_edges(4, &[(1, 2), (1, 3), (3, 4)]).expect("constant")
}

/// `{12, 34, 35}` on 5 vertices.
pub fn graph_b() -> Graph {
    Graph::from_edges(5, &[(1, 2), (3, 4), (3, 5)]).expect("constant")
}

/// `{12, 34, 56}` on 6 vertices.
pub fn graph_c() -> Graph {
    Graph::from_edges(6, &[(1, 2), (3, 4), (5, 6)]).expect("constant")
}

pub fn forbidden_graphs() -> [(&'static str, Graph); 3] {
    [("a", graph_a()), ("b", graph_b()), ("c", graph_c())]
}

/// An injection `h -> g` onto an induced copy: `result[i-1]` is the image of vertex `i` of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n() + 1];
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len() + 1;
        if i > h.n() {
            return true;
        }
        for v in 1..=g.n() {
            if used[v] {
                continue;
            }
            if (1..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j - 1])) {
                used[v] = true;
                map.push(v);
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    extend(g, h, &mut map, &mut used).then_some(map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenHit {
    /// `a`, `b` or `c`.
    pub graph: &'static str,
    /// Whether the copy sits in the complement.
    pub in_complement: bool,
    pub vertices: Vec<usize>,
}

impl fmt::Display for ForbiddenHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph ({}) at vertices {:?}", self.graph, self.vertices)?;
        if self.in_complement {
            f.write_str(" of the complement")?;
        }
        Ok(())
    }
}

/// First forbidden induced subgraph in `G` or its complement.
pub fn forbidden_hit(g: &Graph) -> Option<ForbiddenHit> {
    let gc = g.complement();
    for (name, h) in forbidden_graphs() {
        for (in_complement, host) in [(false, g), (true, &gc)] {
            if let Some(vertices) = contains_induced(host, &h) {
                return Some(ForbiddenHit { graph: name, in_complement, vertices });
            }
        }
    }
    None
}

/// Neither `G` nor its complement contains graph (a), (b) or (c) as an induced subgraph.
pub fn condition_v(g: &Graph) -> bool {
    forbidden_hit(g).is_none()
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1).map(|i| i + 1)
}

/// Near cone of `G[S]` with respect to `v`: every vertex of `S` with a neighbour in `S`,
/// other than `v`, is adjacent to `v`.
fn near_cone_on(g: &Graph, s: u32, v: usize) -> bool {
    bits(s).filter(|&t| t != v).all(|t| g.neighbours(t) & s == 0 || g.has_edge(t, v))
}

pub fn is_near_cone(g: &Graph, v: usize) -> bool {
    near_cone_on(g, g.all_mask(), v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseForm {
    SemiCompleteBipartite,
    TwoSemiCompleteCliques,
    Neither,
}

impl fmt::Display for BaseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseForm::SemiCompleteBipartite => "semi-complete-bipartite",
            BaseForm::TwoSemiCompleteCliques => "two-semi-complete-cliques",
            BaseForm::Neither => "neither",
        })
    }
}

/// Base form of `G[S]`. Edgeless residuals count as complete bipartite `K_{0,m}`.
fn base_form_on(g: &Graph, s: u32) -> BaseForm {
    let core: u32 = bits(s).filter(|&v| g.neighbours(v) & s != 0).fold(0, |m, v| m | 1 << (v - 1));
    if core == 0 {
        return BaseForm::SemiCompleteBipartite;
    }
    // complete bipartite: the non-neighbourhood of any vertex is one part
    let first = core.trailing_zeros() as usize + 1;
    let side_a = core & !g.neighbours(first);
    let side_b = core & !side_a;
    let bipartite = side_b != 0
        && bits(side_a).all(|v| g.neighbours(v) & core == side_b)
        && bits(side_b).all(|v| g.neighbours(v) & core == side_a);
    if bipartite {
        return BaseForm::SemiCompleteBipartite;
    }
    // at most two components, each a clique
    let mut rest = core;
    let mut comps = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize + 1;
        let comp = (g.neighbours(v) & core) | 1 << (v - 1);
        if bits(comp).any(|u| (g.neighbours(u) & core) | 1 << (u - 1) != comp) {
            return BaseForm::Neither;
        }
        rest &= !comp;
        comps += 1;
    }
    if comps <= 2 {
        BaseForm::TwoSemiCompleteCliques
    } else {
        BaseForm::Neither
    }
}

pub fn base_form(g: &Graph) -> BaseForm {
    base_form_on(g, g.all_mask())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Peeling {
    pub holds: bool,
    /// Vertices removed, in order (original labels).
    pub peel: Vec<usize>,
    /// Base form of the residual graph.
    pub base: BaseForm,
}

/// Searches for `v_1, ..., v_k` making `G` a `k`-near cone of a semi-complete
/// bipartite graph or of a disjoint union of two semi-complete graphs.
pub fn condition_vi(g: &Graph) -> Peeling {
    let all = g.all_mask();
    // greedy: smallest peelable vertex first
    let mut s = all;
    let mut peel = Vec::new();
    loop {
        let b = base_form_on(g, s);
        if b != BaseForm::Neither {
            return Peeling { holds: true, peel, base: b };
        }
        match bits(s).find(|&v| near_cone_on(g, s, v)) {
            Some(v) => {
                peel.push(v);
                s &= !(1 << (v - 1));
            }
            None => break,
        }
    }
    let mut failed = HashSet::new();
    let mut peel = Vec::new();
    if let Some(base) = search(g, all, &mut peel, &mut failed) {
        return Peeling { holds: true, peel, base };
    }
    Peeling { holds: false, peel: Vec::new(), base: base_form(g) }
}

fn search(g: &Graph, s: u32, peel: &mut Vec<usize>, failed: &mut HashSet<u32>) -> Option<BaseForm> {
    let b = base_form_on(g, s);
    if b != BaseForm::Neither {
        return Some(b);
    }
    if failed.contains(&s) {
        return None;
    }
    for v in bits(s) {
        if near_cone_on(g, s, v) {
            peel.push(v);
            if let Some(b) = search(g, s & !(1 << (v - 1)), peel, failed) {
                return Some(b);
            }
            peel.pop();
        }
    }
    failed.insert(s);
    None
}

/// Lexicographic breadth-first search order (first visited first).
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut done = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (1..=n).filter(|&v| !done[v]).max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a))).expect("vertex");
        done[v] = true;
        order.push(v);
        for u in bits(g.neighbours(v)) {
            if !done[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Chordality via a perfect elimination ordering (reverse LexBFS order).
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let mut pos = vec![0; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // in the reverse order, the later neighbours of v must form a clique;
    // equivalently the earlier-visited neighbours in LexBFS order
    for &v in &order {
        let earlier: Vec<usize> = bits(g.neighbours(v)).filter(|&u| pos[u] < pos[v]).collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&u| pos[u]) {
            if earlier.iter().any(|&u| u != p && !g.has_edge(u, p)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_copies() {
        assert!(contains_induced(&Graph::path(3), &Graph::path(2)).is_some());
        let hit = contains_induced(&Graph::cycle(5), &graph_a()).unwrap();
        assert_eq!(Graph::cycle(5).induced(&hit).edges(), graph_a().edges());
        assert!(contains_induced(&Graph::complete_bipartite(3, 3), &graph_a()).is_none());
    }

    #[test]
    fn forbidden_family() {
        assert!(condition_v(&Graph::complete_bipartite(2, 3)));
        assert!(!condition_v(&Graph::path(4)));
        let hit = forbidden_hit(&graph_c()).unwrap();
        assert!(!condition_v(&graph_c()));
        assert_eq!(hit.graph, "c");
        assert!(!condition_v(&Graph::cycle(5)));
    }

    #[test]
    fn near_cones() {
        for v in 1..=4 {
            assert!(is_near_cone(&Graph::empty(4), v));
        }
        assert!(is_near_cone(&Graph::from_edges(3, &[(1, 2)]).unwrap(), 1));
        assert!(!is_near_cone(&Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap(), 1));
    }

    #[test]
    fn base_forms() {
        let g = Graph::complete_bipartite(2, 3).disjoint_union(&Graph::empty(2));
        assert_eq!(base_form(&g), BaseForm::SemiCompleteBipartite);
        let h = Graph::complete(3).disjoint_union(&Graph::complete(2)).disjoint_union(&Graph::empty(1));
        assert_eq!(base_form(&h), BaseForm::TwoSemiCompleteCliques);
        assert_eq!(base_form(&Graph::path(4)), BaseForm::Neither);
        assert_eq!(base_form(&Graph::complete(3)), BaseForm::TwoSemiCompleteCliques);
        assert_eq!(base_form(&Graph::empty(3)), BaseForm::SemiCompleteBipartite);
        assert_eq!(base_form(&graph_c()), BaseForm::Neither);
    }

    #[test]
    fn peeling() {
        let k = condition_vi(&Graph::complete_bipartite(2, 3));
        assert!(k.holds && k.peel.is_empty());
        assert!(condition_vi(&Graph::complete(3)).holds);
        assert!(!condition_vi(&Graph::cycle(5)).holds);
        assert!(!condition_vi(&Graph::path(4)).holds);
        // a cone over P4 minus nothing: vertex 5 adjacent to all, residual P4 fails
        let mut g = Graph::path(4).disjoint_union(&Graph::empty(1));
        for v in 1..=4 {
            g.add_edge(v, 5);
        }
        assert!(!condition_vi(&g).holds);
        // cone over 2K2 peels to two cliques
        let mut h = Graph::from_edges(5, &[(1, 2), (3, 4)]).unwrap();
        for v in 1..=4 {
            h.add_edge(v, 5);
        }
        let p = condition_vi(&h);
        assert!(p.holds);
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::path(6)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(5)));
        assert!(is_chordal(&Graph::two_cliques(3, 4)));
        assert!(is_chordal(&Graph::complete(5)));
        // C4 plus a chord
        assert!(is_chordal(&Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap()));
    }
}
