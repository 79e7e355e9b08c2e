//! Exact reduced simplicial homology with integer coefficients, computed
//! from boundary matrices via Smith normal form. This is the brute-force
//! oracle every symbolic result in the crate is checked against.

mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::chordal::HomotopyType;
use crate::complex::SimplicialComplex;

pub use snf::{smith_normal_form, SnfResult};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("the void complex has no boundary operators")]
    VoidComplex,
    #[error("dimension {d} exceeds dim(K) + 1 = {max}")]
    DimensionOutOfRange { d: usize, max: isize },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Sparse integer matrix with arbitrary-precision entries; only nonzero
/// entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if v == BigInt::ZERO {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or(BigInt::ZERO)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
}

/// The boundary operator `∂_d` of `K` with ascending-vertex orientation:
/// rows are indexed by the sorted (d-1)-faces, columns by the sorted
/// d-faces, and deleting the i-th vertex of a face contributes `(-1)^i`.
/// `∂_0` is the augmentation onto the empty face.
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> Result<IntegerMatrix, HomologyError> {
    if k.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    let dim = k.dim();
    if d as isize > dim + 1 {
        return Err(HomologyError::DimensionOutOfRange { d, max: dim + 1 });
    }
    let targets = k.faces_of_dim(d as isize - 1);
    let sources = k.faces_of_dim(d as isize);
    let mut m = IntegerMatrix::new(targets.len(), sources.len());
    for (col, face) in sources.iter().enumerate() {
        for i in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(i);
            let row = targets
                .binary_search_by(|t| t.as_slice().cmp(sub.as_slice()))
                .expect("complex is hereditary");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(row, col, BigInt::from(sign));
        }
    }
    Ok(m)
}

/// Reduced homology of one dimension: Betti number plus the torsion
/// invariant factors (each > 1, in divisibility order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimHomology {
    pub dim: isize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

/// Per-dimension reduced integral homology, stored densely from dimension
/// `-1` upward. Equality ignores trailing or interleaved zero groups, so
/// profiles from different sources compare meaningfully.
#[derive(Clone, Debug)]
pub struct HomologyProfile {
    dims: Vec<DimHomology>,
}

impl HomologyProfile {
    pub fn trivial() -> Self {
        HomologyProfile { dims: Vec::new() }
    }

    pub fn from_parts(dims: Vec<DimHomology>) -> Self {
        HomologyProfile { dims }
    }

    pub fn betti(&self, d: isize) -> usize {
        self.dims
            .iter()
            .find(|h| h.dim == d)
            .map_or(0, |h| h.betti)
    }

    pub fn torsion(&self, d: isize) -> &[BigInt] {
        self.dims
            .iter()
            .find(|h| h.dim == d)
            .map_or(&[], |h| h.torsion.as_slice())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.dims.iter().all(|h| h.torsion.is_empty())
    }

    /// The group in dimension `d` is zero: Betti 0 and no torsion.
    pub fn is_zero_in(&self, d: isize) -> bool {
        self.betti(d) == 0 && self.torsion(d).is_empty()
    }

    /// Dimensions carrying a nonzero group.
    pub fn nonzero_dims(&self) -> Vec<&DimHomology> {
        self.dims
            .iter()
            .filter(|h| h.betti > 0 || !h.torsion.is_empty())
            .collect()
    }

    /// `Σ (-1)^d betti_d`, the homological side of the Euler cross-check.
    pub fn reduced_euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|h| {
                let b = h.betti as i64;
                if h.dim.rem_euclid(2) == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    /// JSON form; dimensions with zero homology are omitted.
    pub fn to_json(&self) -> Value {
        let dims: Vec<Value> = self
            .nonzero_dims()
            .iter()
            .map(|h| {
                json!({
                    "d": h.dim,
                    "betti": h.betti,
                    "torsion": h.torsion.iter().map(bigint_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "dims": dims })
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let key = |p: &HomologyProfile| -> Vec<(isize, usize, Vec<BigInt>)> {
            p.nonzero_dims()
                .into_iter()
                .map(|h| (h.dim, h.betti, h.torsion.clone()))
                .collect()
        };
        key(self) == key(other)
    }
}

impl Eq for HomologyProfile {}

/// Reduced integral homology of `K` in every dimension from `-1` to
/// `dim(K)`. The void complex yields the empty profile.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    if k.is_void() {
        return HomologyProfile::trivial();
    }
    let dim = k.dim();
    let f = k.f_vector();
    // snf_by_d[i] describes ∂_i for i in 0..=dim+1
    let snf_by_d: Vec<SnfResult> = (0..=(dim + 1) as usize)
        .map(|d| smith_normal_form(&boundary_matrix(k, d).expect("d <= dim + 1")))
        .collect();
    let mut dims = Vec::new();
    for d in -1..=dim {
        let faces = f[(d + 1) as usize];
        let rank_out = if d < 0 {
            0 // ∂_{-1} is the zero map
        } else {
            snf_by_d[d as usize].rank
        };
        let above = &snf_by_d[(d + 1) as usize];
        let betti = faces - rank_out - above.rank;
        let torsion: Vec<BigInt> = above
            .invariant_factors
            .iter()
            .filter(|t| **t > BigInt::from(1))
            .cloned()
            .collect();
        dims.push(DimHomology { dim: d, betti, torsion });
    }
    HomologyProfile::from_parts(dims)
}

/// Per-dimension ranks of `H̃_d(K; Z/p)`, a fast cross-check that matches
/// the Betti numbers whenever torsion has no p-part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPProfile {
    pub p: u64,
    /// `(dimension, rank)` densely from dimension -1.
    pub ranks: Vec<(isize, usize)>,
}

impl ModPProfile {
    pub fn rank(&self, d: isize) -> usize {
        self.ranks
            .iter()
            .find(|(dim, _)| *dim == d)
            .map_or(0, |(_, r)| *r)
    }

    pub fn to_json(&self) -> Value {
        let dims: Vec<Value> = self
            .ranks
            .iter()
            .filter(|(_, r)| *r > 0)
            .map(|(d, r)| json!({ "d": d, "rank": r }))
            .collect();
        json!({ "p": self.p, "dims": dims })
    }
}

pub fn betti_mod_p(k: &SimplicialComplex, p: u64) -> Result<ModPProfile, HomologyError> {
    if !is_prime(p) {
        return Err(HomologyError::NotPrime(p));
    }
    if k.is_void() {
        return Ok(ModPProfile { p, ranks: Vec::new() });
    }
    let dim = k.dim();
    let f = k.f_vector();
    let ranks_by_d: Vec<usize> = (0..=(dim + 1) as usize)
        .map(|d| snf::rank_mod_p(&boundary_matrix(k, d).expect("d <= dim + 1"), p))
        .collect();
    let mut ranks = Vec::new();
    for d in -1..=dim {
        let faces = f[(d + 1) as usize];
        let rank_out = if d < 0 { 0 } else { ranks_by_d[d as usize] };
        ranks.push((d, faces - rank_out - ranks_by_d[(d + 1) as usize]));
    }
    Ok(ModPProfile { p, ranks })
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The homology a symbolic homotopy type predicts: zero for contractible
/// complexes, rank one in dimension `-1` for `{∅}`, and one free summand
/// per wedge sphere.
pub fn homology_of_type(t: &HomotopyType) -> HomologyProfile {
    match t {
        HomotopyType::Contractible => HomologyProfile::trivial(),
        HomotopyType::Empty => HomologyProfile::from_parts(vec![DimHomology {
            dim: -1,
            betti: 1,
            torsion: Vec::new(),
        }]),
        HomotopyType::Wedge(spheres) => HomologyProfile::from_parts(
            spheres
                .iter()
                .map(|(&dim, &count)| DimHomology {
                    dim: dim as isize,
                    betti: count,
                    torsion: Vec::new(),
                })
                .collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_ind_complex, euler_characteristic, BuildLimits};
    use crate::generate::{generate_graph, GeneratorSpec};
    use crate::graph::Graph;

    fn ind(g: &Graph, r: usize) -> SimplicialComplex {
        build_ind_complex(g, r, &BuildLimits::default()).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate_graph(&GeneratorSpec::Path { n }).unwrap()
    }

    fn dense(m: &IntegerMatrix) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; m.cols()]; m.rows()];
        for (r, c, v) in m.entries() {
            out[r][c] = i64::try_from(v).unwrap();
        }
        out
    }

    fn multiply(a: &IntegerMatrix, b: &IntegerMatrix) -> Vec<Vec<i64>> {
        let (da, db) = (dense(a), dense(b));
        let mut out = vec![vec![0i64; b.cols()]; a.rows()];
        for r in 0..a.rows() {
            for c in 0..b.cols() {
                out[r][c] = (0..a.cols()).map(|k| da[r][k] * db[k][c]).sum();
            }
        }
        out
    }

    #[test]
    fn triangle_boundary_columns_have_one_plus_one_minus() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let m = boundary_matrix(&k, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for c in 0..3 {
            let col: Vec<BigInt> = (0..3).map(|r| m.get(r, c)).collect();
            assert_eq!(col.iter().filter(|v| **v == BigInt::from(1)).count(), 1);
            assert_eq!(col.iter().filter(|v| **v == BigInt::from(-1)).count(), 1);
        }
    }

    #[test]
    fn augmentation_row_is_all_ones() {
        let k = ind(&path(4), 2);
        let d0 = boundary_matrix(&k, 0).unwrap();
        assert_eq!((d0.rows(), d0.cols()), (1, 4));
        for c in 0..4 {
            assert_eq!(d0.get(0, c), BigInt::from(1));
        }
    }

    #[test]
    fn boundary_composition_vanishes_on_ind2_p4() {
        let k = ind(&path(4), 2);
        for d in 1..=(k.dim() as usize) {
            let lower = boundary_matrix(&k, d - 1).unwrap();
            let upper = boundary_matrix(&k, d).unwrap();
            let prod = multiply(&lower, &upper);
            assert!(prod.iter().flatten().all(|&v| v == 0), "∂∂ ≠ 0 at d = {d}");
        }
    }

    #[test]
    fn boundary_dimension_out_of_range() {
        let k = ind(&path(3), 1);
        assert!(boundary_matrix(&k, (k.dim() + 1) as usize).is_ok());
        assert!(matches!(
            boundary_matrix(&k, (k.dim() + 2) as usize),
            Err(HomologyError::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn ind2_p4_is_a_circle() {
        let profile = reduced_homology(&ind(&path(4), 2));
        assert_eq!(profile.betti(1), 1);
        assert_eq!(profile.nonzero_dims().len(), 1);
        assert!(profile.is_torsion_free());
    }

    #[test]
    fn ind2_k4_is_wedge_of_three_circles() {
        let g = generate_graph(&GeneratorSpec::Complete { n: 4 }).unwrap();
        let profile = reduced_homology(&ind(&g, 2));
        assert_eq!(profile.betti(1), 3);
        assert_eq!(profile.nonzero_dims().len(), 1);
    }

    #[test]
    fn full_simplex_has_trivial_homology() {
        let profile = reduced_homology(&ind(&Graph::empty(5), 1));
        assert!(profile.nonzero_dims().is_empty());
    }

    #[test]
    fn empty_complex_has_betti_minus_one() {
        let k = SimplicialComplex::empty_complex(0);
        let profile = reduced_homology(&k);
        assert_eq!(profile.betti(-1), 1);
        assert_eq!(profile.nonzero_dims().len(), 1);
    }

    #[test]
    fn void_profile_is_empty() {
        assert_eq!(
            reduced_homology(&SimplicialComplex::void(0)),
            HomologyProfile::trivial()
        );
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // Minimal 6-vertex triangulation of RP^2 (antipodal icosahedron).
        let facets: Vec<Vec<usize>> = vec![
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ];
        let k = SimplicialComplex::from_facets(6, &facets).unwrap();
        // sanity: closed surface, every edge in exactly two triangles
        for e in k.faces_of_dim(1) {
            let count = k
                .faces_of_dim(2)
                .iter()
                .filter(|t| e.iter().all(|v| t.contains(v)))
                .count();
            assert_eq!(count, 2, "edge {e:?}");
        }
        let profile = reduced_homology(&k);
        assert_eq!(profile.betti(0), 0);
        assert_eq!(profile.betti(1), 0);
        assert_eq!(profile.betti(2), 0);
        assert_eq!(profile.torsion(1), &[BigInt::from(2)]);
        // Z/2 coefficients see both dimensions
        let mod2 = betti_mod_p(&k, 2).unwrap();
        assert_eq!(mod2.rank(1), 1);
        assert_eq!(mod2.rank(2), 1);
        let mod3 = betti_mod_p(&k, 3).unwrap();
        assert_eq!(mod3.rank(1), 0);
        assert_eq!(mod3.rank(2), 0);
    }

    #[test]
    fn mod_p_matches_integral_when_torsion_free() {
        let g = path(4);
        let k = ind(&g, 2);
        let profile = reduced_homology(&k);
        for p in [2, 3, 5] {
            let modp = betti_mod_p(&k, p).unwrap();
            for d in -1..=k.dim() {
                assert_eq!(modp.rank(d), profile.betti(d), "p = {p}, d = {d}");
            }
        }
    }

    #[test]
    fn betti_mod_p_rejects_composites() {
        let k = ind(&path(3), 1);
        assert_eq!(betti_mod_p(&k, 6).unwrap_err(), HomologyError::NotPrime(6));
        assert_eq!(betti_mod_p(&k, 1).unwrap_err(), HomologyError::NotPrime(1));
    }

    #[test]
    fn euler_characteristic_matches_betti_alternating_sum() {
        for (g, r) in [
            (path(5), 2),
            (path(6), 3),
            (generate_graph(&GeneratorSpec::Cycle { n: 6 }).unwrap(), 2),
            (generate_graph(&GeneratorSpec::Wheel { n: 4 }).unwrap(), 3),
        ] {
            let k = ind(&g, r);
            assert_eq!(
                euler_characteristic(&k),
                reduced_homology(&k).reduced_euler()
            );
        }
    }

    #[test]
    fn homology_of_type_examples() {
        use std::collections::BTreeMap;
        let wedge = HomotopyType::Wedge(BTreeMap::from([(1, 1), (3, 2)]));
        let profile = homology_of_type(&wedge);
        assert_eq!(profile.betti(1), 1);
        assert_eq!(profile.betti(3), 2);
        assert_eq!(homology_of_type(&HomotopyType::Contractible), HomologyProfile::trivial());
        assert_eq!(homology_of_type(&HomotopyType::Empty).betti(-1), 1);
    }

    #[test]
    fn profile_json_omits_zero_dims() {
        let profile = reduced_homology(&ind(&path(4), 2));
        let v = profile.to_json();
        assert_eq!(v["dims"].as_array().unwrap().len(), 1);
        assert_eq!(v["dims"][0]["d"], 1);
        assert_eq!(v["dims"][0]["betti"], 1);
    }
}
