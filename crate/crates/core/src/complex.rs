//! Explicit construction of the r-independence complex `Ind_r(G)` as a full
//! face list, dimension by dimension.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("r must be a positive integer")]
    InvalidR,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("face budget of {max_faces} faces exceeded")]
    FaceBudgetExceeded { max_faces: usize },
    #[error("invalid build limits: {0}")]
    InvalidLimits(String),
    #[error("invalid facet: {0}")]
    InvalidFacet(String),
}

/// Resource caps for complex construction. Exceeding the face budget is a
/// hard error, never a silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct BuildLimits {
    pub max_faces: usize,
    /// Optional cap on the constructed dimension; faces above it are not
    /// generated.
    pub max_dim: Option<usize>,
}

impl Default for BuildLimits {
    fn default() -> Self {
        BuildLimits {
            max_faces: 2_000_000,
            max_dim: None,
        }
    }
}

/// An abstract simplicial complex over the vertex set `0..vertex_count`,
/// stored as sorted per-dimension face lists. The entry at dimension `-1` is
/// the empty face, present in every nonvoid complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    // faces_by_dim[i] holds the faces of dimension i - 1, each ascending,
    // lists sorted lexicographically.
    faces_by_dim: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// The void complex: no faces at all, not even the empty one.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces_by_dim: Vec::new(),
        }
    }

    /// The complex `{∅}` with no vertices.
    pub fn empty_complex(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces_by_dim: vec![vec![Vec::new()]],
        }
    }

    /// Builds the downward closure of a facet list. Facets are deduplicated;
    /// the empty face is always included.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(Vec::new());
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() != facet.len() {
                return Err(ComplexError::InvalidFacet(format!(
                    "repeated vertex in {facet:?}"
                )));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(ComplexError::Graph(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: vertex_count,
                }));
            }
            // all subsets, via bitmasks of the facet
            for mask in 0u64..(1u64 << f.len()) {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(sub);
            }
        }
        let max_len = seen.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces_by_dim = vec![Vec::new(); max_len + 1];
        for f in seen {
            faces_by_dim[f.len()].push(f);
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces_by_dim,
        })
    }

    pub fn is_void(&self) -> bool {
        self.faces_by_dim.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension; `-1` for the complex `{∅}`. Panics on the void complex.
    pub fn dim(&self) -> isize {
        assert!(!self.is_void(), "void complex has no dimension");
        self.faces_by_dim.len() as isize - 2
    }

    /// Face counts per dimension starting at dimension `-1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_dim.iter().map(Vec::len).sum()
    }

    /// The faces of dimension `d`, sorted lexicographically; empty when out
    /// of range.
    pub fn faces_of_dim(&self, d: isize) -> &[Vec<usize>] {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.faces_by_dim.len() {
            &[]
        } else {
            &self.faces_by_dim[idx as usize]
        }
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces_by_dim.iter().flatten()
    }

    /// Membership test; `face` must be sorted ascending.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        let idx = face.len();
        idx < self.faces_by_dim.len()
            && self.faces_by_dim[idx]
                .binary_search_by(|f| f.as_slice().cmp(face))
                .is_ok()
    }

    /// Debug/interchange dump: faces grouped by dimension, one per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (idx, faces) in self.faces_by_dim.iter().enumerate() {
            let _ = writeln!(out, "=== dim {} ===", idx as isize - 1);
            for f in faces {
                let line = f
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                let _ = writeln!(out, "{line}");
            }
        }
        out
    }

    fn from_sorted_lists(vertex_count: usize, faces_by_dim: Vec<Vec<Vec<usize>>>) -> Self {
        SimplicialComplex {
            vertex_count,
            faces_by_dim,
        }
    }
}

/// True iff every connected component of `G[A]` has at most `r` vertices.
pub fn is_r_independent(g: &Graph, a: &[usize], r: usize) -> Result<bool, ComplexError> {
    if r == 0 {
        return Err(ComplexError::InvalidR);
    }
    let (sub, _) = g.induced_subgraph(a)?;
    Ok(sub.connected_components().iter().all(|c| c.len() <= r))
}

/// Builds `Ind_r(G)` by depth-first lexicographic extension with hereditary
/// pruning: a rejected extension is never revisited below, which is sound
/// because r-independence is closed under subsets.
pub fn build_ind_complex(
    g: &Graph,
    r: usize,
    limits: &BuildLimits,
) -> Result<SimplicialComplex, ComplexError> {
    if r == 0 {
        return Err(ComplexError::InvalidR);
    }
    if limits.max_faces == 0 {
        return Err(ComplexError::InvalidLimits(
            "max_faces must be at least 1".to_string(),
        ));
    }
    let mut builder = Builder {
        g,
        r,
        limits: *limits,
        in_face: vec![false; g.n()],
        faces_by_dim: vec![vec![Vec::new()]],
        count: 1, // the empty face
    };
    let mut face = Vec::new();
    builder.extend(&mut face)?;
    Ok(SimplicialComplex::from_sorted_lists(
        g.n(),
        builder.faces_by_dim,
    ))
}

struct Builder<'a> {
    g: &'a Graph,
    r: usize,
    limits: BuildLimits,
    in_face: Vec<bool>,
    faces_by_dim: Vec<Vec<Vec<usize>>>,
    count: usize,
}

impl Builder<'_> {
    fn extend(&mut self, face: &mut Vec<usize>) -> Result<(), ComplexError> {
        if let Some(cap) = self.limits.max_dim {
            if face.len() > cap {
                return Ok(());
            }
        }
        let start = face.last().map_or(0, |&v| v + 1);
        for v in start..self.g.n() {
            face.push(v);
            self.in_face[v] = true;
            if self.component_of_new_vertex_fits(v) {
                self.record(face)?;
                self.extend(face)?;
            }
            self.in_face[v] = false;
            face.pop();
        }
        Ok(())
    }

    /// The parent face is r-independent, so only the component that absorbs
    /// the new vertex can grow too large.
    fn component_of_new_vertex_fits(&self, v: usize) -> bool {
        let mut stack = vec![v];
        let mut seen = std::collections::BTreeSet::from([v]);
        while let Some(u) = stack.pop() {
            if seen.len() > self.r {
                return false;
            }
            for w in self.g.neighbors(u) {
                if self.in_face[w] && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() <= self.r
    }

    fn record(&mut self, face: &[usize]) -> Result<(), ComplexError> {
        if self.count >= self.limits.max_faces {
            return Err(ComplexError::FaceBudgetExceeded {
                max_faces: self.limits.max_faces,
            });
        }
        self.count += 1;
        if self.faces_by_dim.len() <= face.len() {
            self.faces_by_dim.push(Vec::new());
        }
        self.faces_by_dim[face.len()].push(face.to_vec());
        Ok(())
    }
}

/// Reduced Euler characteristic, including the empty face at dimension `-1`.
/// Zero for the void complex.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(idx, &f)| {
            // index idx holds dimension idx - 1, so the sign is (-1)^(idx-1)
            if idx % 2 == 0 {
                -(f as i64)
            } else {
                f as i64
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_graph, GeneratorSpec};

    fn path(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Path { n }).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Complete { n }).unwrap()
    }

    #[test]
    fn r_independence_on_p4() {
        let g = path(4);
        assert!(is_r_independent(&g, &[0, 1, 3], 2).unwrap());
        assert!(!is_r_independent(&g, &[0, 1, 2], 2).unwrap());
        assert!(is_r_independent(&g, &[], 1).unwrap());
        assert_eq!(is_r_independent(&g, &[0], 0), Err(ComplexError::InvalidR));
    }

    #[test]
    fn ind1_p3_f_vector() {
        let k = build_ind_complex(&path(3), 1, &BuildLimits::default()).unwrap();
        assert_eq!(k.f_vector(), vec![1, 3, 1]);
        assert_eq!(k.faces_of_dim(1), &[vec![0, 2]]);
    }

    #[test]
    fn ind2_k4_f_vector() {
        let k = build_ind_complex(&complete(4), 2, &BuildLimits::default()).unwrap();
        assert_eq!(k.f_vector(), vec![1, 4, 6]);
        assert_eq!(euler_characteristic(&k), -3);
    }

    #[test]
    fn ind2_p4_f_vector_and_triples() {
        let k = build_ind_complex(&path(4), 2, &BuildLimits::default()).unwrap();
        assert_eq!(k.f_vector(), vec![1, 4, 6, 2]);
        assert_eq!(k.faces_of_dim(2), &[vec![0, 1, 3], vec![0, 2, 3]]);
        assert_eq!(euler_characteristic(&k), -1);
    }

    #[test]
    fn full_simplex_euler_is_zero() {
        let k = build_ind_complex(&Graph::empty(3), 1, &BuildLimits::default()).unwrap();
        assert_eq!(k.face_count(), 8);
        assert_eq!(euler_characteristic(&k), 0);
    }

    #[test]
    fn faces_are_sorted_lexicographically() {
        let k = build_ind_complex(&path(6), 3, &BuildLimits::default()).unwrap();
        for d in -1..=k.dim() {
            let faces = k.faces_of_dim(d);
            assert!(faces.windows(2).all(|w| w[0] < w[1]), "dim {d} unsorted");
        }
    }

    #[test]
    fn face_budget_is_a_hard_error() {
        let limits = BuildLimits {
            max_faces: 10,
            max_dim: None,
        };
        let err = build_ind_complex(&Graph::empty(6), 1, &limits).unwrap_err();
        assert_eq!(err, ComplexError::FaceBudgetExceeded { max_faces: 10 });
    }

    #[test]
    fn max_dim_caps_construction() {
        let limits = BuildLimits {
            max_faces: 1 << 20,
            max_dim: Some(1),
        };
        let k = build_ind_complex(&Graph::empty(5), 1, &limits).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.f_vector(), vec![1, 5, 10]);
    }

    #[test]
    fn empty_graph_gives_empty_complex() {
        let k = build_ind_complex(&Graph::empty(0), 2, &BuildLimits::default()).unwrap();
        assert!(!k.is_void());
        assert_eq!(k.dim(), -1);
        assert_eq!(k.f_vector(), vec![1]);
    }

    #[test]
    fn dump_groups_by_dimension() {
        let k = build_ind_complex(&path(2), 1, &BuildLimits::default()).unwrap();
        let dump = k.dump();
        assert!(dump.contains("=== dim -1 ==="));
        assert!(dump.contains("=== dim 0 ==="));
        assert!(!dump.contains("0,1"));
    }

    #[test]
    fn from_facets_closure() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.f_vector(), vec![1, 3, 3, 1]);
        assert!(k.contains_face(&[0, 2]));
    }
}
