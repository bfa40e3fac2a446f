//! Simplicial complexes and the monomial ideals attached to them.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::complexes::graph::Graph;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::engine::{gin, GinCertificate, GinOptions};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};
use crate::order::TermOrder;

/// Complexes are enumerated through all subsets of `[n]`, so `n` stays small.
pub const MAX_COMPLEX_VERTICES: usize = 20;

/// A simplicial complex on `[n]` containing every vertex. Faces are bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<u32>,
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn vec_to_mask(n: usize, s: &[usize]) -> Result<u32> {
    s.iter().try_fold(0u32, |m, &i| {
        if i == 0 || i > n {
            Err(Error::invalid(format!("vertex {i} outside 1..={n}")))
        } else {
            Ok(m | 1 << (i - 1))
        }
    })
}

impl SimplicialComplex {
    /// Downward closure of `facets` together with every vertex.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_COMPLEX_VERTICES {
            return Err(Error::size(format!("complexes are limited to {MAX_COMPLEX_VERTICES} vertices")));
        }
        let mut faces = BTreeSet::from([0u32]);
        let mut gens: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
        for f in facets {
            gens.push(vec_to_mask(n, f)?);
        }
        for g in gens {
            // all submasks of g
            let mut s = g;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & g;
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// Builds a complex from an explicit face list, checking the axioms.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n > MAX_COMPLEX_VERTICES {
            return Err(Error::size(format!("complexes are limited to {MAX_COMPLEX_VERTICES} vertices")));
        }
        let faces: BTreeSet<u32> = faces.into_iter().collect();
        let all = (1u32 << n) - 1;
        for &f in &faces {
            if f & !all != 0 {
                return Err(Error::invalid("face uses a vertex outside [n]"));
            }
            if (0..n).any(|i| f >> i & 1 == 1 && !faces.contains(&(f & !(1 << i)))) {
                return Err(Error::invalid(format!("face {:?} has a missing subface", mask_to_vec(f))));
            }
        }
        if (0..n).any(|i| !faces.contains(&(1 << i))) {
            return Err(Error::invalid("every vertex must be a face"));
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// `F(G)`: all cliques of `G`.
    pub fn flag(g: &Graph) -> Self {
        let mut faces = BTreeSet::new();
        fn grow(g: &Graph, clique: u32, cand: u32, faces: &mut BTreeSet<u32>) {
            faces.insert(clique);
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                grow(g, clique | 1 << v, c & g.neighbours(v + 1), faces);
            }
        }
        grow(g, 0, g.all_mask(), &mut faces);
        SimplicialComplex { n: g.n(), faces }
    }

    /// A graph as a one-dimensional complex.
    pub fn of_graph(g: &Graph) -> Self {
        let facets: Vec<Vec<usize>> = g.edges().iter().map(|&(i, j)| vec![i, j]).collect();
        SimplicialComplex::from_facets(g.n(), &facets).expect("valid graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        vec_to_mask(self.n, face).is_ok_and(|m| self.faces.contains(&m))
    }

    pub fn contains_mask(&self, m: u32) -> bool {
        self.faces.contains(&m)
    }

    pub fn faces(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.faces.iter().map(|&m| mask_to_vec(m))
    }

    pub fn faces_of_size(&self, k: usize) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> =
            self.faces.iter().filter(|m| m.count_ones() as usize == k).map(|&m| mask_to_vec(m)).collect();
        v.sort();
        v
    }

    /// `f[k]` = number of faces with `k` vertices, `k = 0..=n`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut f = vec![0; self.n + 1];
        for m in &self.faces {
            f[m.count_ones() as usize] += 1;
        }
        f
    }

    /// `dim = max |F| - 1`.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(|m| m.count_ones() as isize).max().unwrap_or(0) - 1
    }

    /// Maximal faces, sorted by size then lexicographically.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|&&f| (0..self.n).all(|i| f >> i & 1 == 1 || !self.faces.contains(&(f | 1 << i))))
            .map(|&m| mask_to_vec(m))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Non-faces all of whose proper subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for m in 1u32..(1 << self.n) {
            if !self.faces.contains(&m) && (0..self.n).all(|i| m >> i & 1 == 0 || self.faces.contains(&(m & !(1 << i))))
            {
                out.push(m);
            }
        }
        out.sort_by_key(|m| (m.count_ones(), mask_to_vec(*m)));
        out.into_iter().map(mask_to_vec).collect()
    }

    /// `{n+1} * Gamma` on `n+1` vertices.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        if self.n + 1 > MAX_COMPLEX_VERTICES {
            return Err(Error::size("cone exceeds the vertex limit"));
        }
        let apex = 1u32 << self.n;
        let faces = self.faces.iter().flat_map(|&f| [f, f | apex]).collect();
        Ok(SimplicialComplex { n: self.n + 1, faces })
    }

    /// The graph of edges of the complex.
    pub fn one_skeleton(&self) -> Graph {
        let e: Vec<(usize, usize)> = self.faces_of_size(2).iter().map(|f| (f[0], f[1])).collect();
        Graph::from_edges(self.n, &e).expect("edges of a complex")
    }

    /// `J_Gamma`: exterior ideal of the non-faces.
    pub fn exterior_face_ideal(&self) -> MonomialIdeal {
        self.nonface_ideal(Ring::Exterior)
    }

    /// `I_Gamma`: Stanley-Reisner ideal in the polynomial ring.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        self.nonface_ideal(Ring::Polynomial)
    }

    fn nonface_ideal(&self, ring: Ring) -> MonomialIdeal {
        let gens = self.minimal_nonfaces().into_iter().map(|s| {
            let m = Monomial::ext(self.n, &s).expect("indices in range");
            match ring {
                Ring::Exterior => m,
                Ring::Polynomial => m.to_poly(),
            }
        });
        MonomialIdeal::new(ring, self.n, gens).expect("consistent shape")
    }

    /// The complex whose non-faces are the monomials of a squarefree monomial ideal.
    pub fn from_face_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !ideal.is_squarefree() {
            return Err(Error::invalid("face ideal must be squarefree"));
        }
        let n = ideal.n();
        if n > MAX_COMPLEX_VERTICES {
            return Err(Error::size(format!("complexes are limited to {MAX_COMPLEX_VERTICES} vertices")));
        }
        let gens: Vec<u32> = ideal.generators().iter().map(|g| g.support_mask() as u32).collect();
        let faces = (0u32..(1 << n)).filter(|&m| !gens.iter().any(|&g| g & m == g));
        SimplicialComplex::from_faces(n, faces)
    }
}

/// `J_G`: the graph read as a one-dimensional complex.
pub fn graph_face_ideal(g: &Graph) -> MonomialIdeal {
    SimplicialComplex::of_graph(g).exterior_face_ideal()
}

/// `I(G)`: edge ideal.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g.edges().into_iter().map(|(i, j)| Monomial::ext(g.n(), &[i, j]).expect("edge").to_poly());
    MonomialIdeal::new(Ring::Polynomial, g.n(), gens).expect("consistent shape")
}

/// Source of a combinatorial ideal.
pub enum Source<'a> {
    Graph(&'a Graph),
    Complex(&'a SimplicialComplex),
}

/// Graph in the exterior algebra: `J_G`; graph in `R`: `I(G)`;
/// complex in `E`: `J_Gamma`; complex in `R`: `I_Gamma`.
pub fn combinatorial_ideal(source: Source<'_>, ring: Ring) -> MonomialIdeal {
    match (source, ring) {
        (Source::Graph(g), Ring::Exterior) => graph_face_ideal(g),
        (Source::Graph(g), Ring::Polynomial) => edge_ideal(g),
        (Source::Complex(c), Ring::Exterior) => c.exterior_face_ideal(),
        (Source::Complex(c), Ring::Polynomial) => c.stanley_reisner_ideal(),
    }
}

/// `Delta^sigma(Gamma)`: the complex with face ideal `Gin_sigma(J_Gamma)`.
/// Its faces are closed under index-increasing exchanges.
pub fn shifted_complex<F: Field>(
    f: &F,
    order: &TermOrder,
    complex: &SimplicialComplex,
    opts: &GinOptions,
) -> Result<(SimplicialComplex, GinCertificate)> {
    let g = gin(f, order, &complex.exterior_face_ideal(), opts)?;
    Ok((SimplicialComplex::from_face_ideal(&g.ideal)?, g.certificate))
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self
            .facets()
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "n={} facets [{}]", self.n, fs.join(", "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("facets", &self.facets())?;
        st.end()
    }
}
