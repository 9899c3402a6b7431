//! Finite simplicial complexes, relative pairs and graded dimensions.
//!
//! Complexes are purely combinatorial: a simplex is a sorted tuple of
//! vertex labels and a complex is a finite set of simplices closed under
//! taking faces. Spaces enter the toolkit only through such models; all
//! cohomology is simplicial with rational coefficients.

mod cohomology;
pub mod models;

pub use cohomology::{
    coboundary_matrix, cohomology, induced_map, pair_long_exact_sequence, relative_cohomology,
    CohomologyResult, SimplicialMap,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A simplex: strictly increasing vertex labels.
pub type Simplex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    /// A simplex listed the same vertex twice.
    DuplicateVertex { simplex: Vec<usize> },
    /// The simplex set is not closed under taking faces.
    NotFaceClosed { simplex: Simplex, missing_face: Simplex },
    /// A claimed subcomplex contains a simplex the total complex lacks.
    NotSubcomplex { simplex: Simplex },
    /// A vertex map does not send some simplex to a simplex.
    NotSimplicialMap { simplex: Simplex, image: Simplex },
    /// A vertex map leaves a source vertex without an image.
    UnmappedVertex { vertex: usize },
    /// A vertex map targets a label the target complex does not have.
    ImageVertexMissing { vertex: usize },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::DuplicateVertex { simplex } => {
                write!(f, "simplex {simplex:?} repeats a vertex")
            }
            ComplexError::NotFaceClosed {
                simplex,
                missing_face,
            } => write!(
                f,
                "complex is not face-closed: {simplex:?} is present but its face {missing_face:?} is not"
            ),
            ComplexError::NotSubcomplex { simplex } => {
                write!(f, "simplex {simplex:?} of the subcomplex is not in the total complex")
            }
            ComplexError::NotSimplicialMap { simplex, image } => write!(
                f,
                "vertex map is not simplicial: {simplex:?} maps onto {image:?}, which is not a simplex of the target"
            ),
            ComplexError::UnmappedVertex { vertex } => {
                write!(f, "vertex {vertex} has no image under the vertex map")
            }
            ComplexError::ImageVertexMissing { vertex } => {
                write!(f, "vertex map hits label {vertex}, which the target complex lacks")
            }
        }
    }
}

impl std::error::Error for ComplexError {}

fn normalize_simplex(mut s: Vec<usize>) -> Result<Simplex, ComplexError> {
    let raw = s.clone();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(ComplexError::DuplicateVertex { simplex: raw });
    }
    Ok(s)
}

/// Finite abstract simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the complex generated by the given simplices: every nonempty
    /// face of a listed simplex is added.
    pub fn from_maximal<I>(maximal: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut simplices = BTreeSet::new();
        for raw in maximal {
            let s = normalize_simplex(raw)?;
            for mask in 1u64..(1 << s.len()) {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                simplices.insert(face);
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    /// Builds a complex from an explicit simplex set, rejecting it when the
    /// set is not closed under taking faces.
    pub fn from_simplices<I>(list: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut simplices = BTreeSet::new();
        for raw in list {
            simplices.insert(normalize_simplex(raw)?);
        }
        for s in &simplices {
            if s.len() == 1 {
                continue;
            }
            for skip in 0..s.len() {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if !simplices.contains(&face) {
                    return Err(ComplexError::NotFaceClosed {
                        simplex: s.clone(),
                        missing_face: face,
                    });
                }
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    /// The k-simplices, in lexicographic order. This is the coordinate
    /// order used by every cochain vector in the crate.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| s.len() == k + 1)
            .cloned()
            .collect()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.simplices.iter().flatten().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.simplices.iter().flatten().copied().max()
    }

    /// Combinatorial Euler characteristic, the alternating sum of simplex
    /// counts per dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if (s.len() - 1) % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Is `sub` a subcomplex of `self`?
    pub fn has_subcomplex(&self, sub: &SimplicialComplex) -> bool {
        sub.simplices.iter().all(|s| self.simplices.contains(s))
    }

    /// Disjoint union; the other complex's labels are shifted past this
    /// one's largest label.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.max_vertex().map_or(0, |m| m + 1);
        let mut simplices = self.simplices.clone();
        for s in &other.simplices {
            simplices.insert(s.iter().map(|&v| v + shift).collect());
        }
        SimplicialComplex { simplices }
    }

    /// The simplices that are not a proper face of another simplex. They
    /// generate the complex under face closure.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
            })
            .cloned()
            .collect()
    }

    /// The complex with the open star of `v` removed: every simplex that
    /// contains `v` is dropped. The result is again face-closed.
    pub fn without_open_star(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex {
            simplices: self
                .simplices
                .iter()
                .filter(|s| !s.contains(&v))
                .cloned()
                .collect(),
        }
    }
}

/// A complex with a distinguished subcomplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self, ComplexError> {
        if let Some(s) = sub.simplices.iter().find(|s| !total.contains(s)) {
            return Err(ComplexError::NotSubcomplex { simplex: s.clone() });
        }
        Ok(SimplicialPair { total, sub })
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }
}

/// Finitely supported map from degree to positive dimension; degreewise
/// dimensions of a graded vector space, or equivalently the coefficients of
/// a Poincaré polynomial. Absent degrees are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDims {
    dims: BTreeMap<usize, usize>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from a dense vector: index = degree.
    pub fn from_vec(dims: &[usize]) -> Self {
        let mut g = Self::new();
        for (k, &d) in dims.iter().enumerate() {
            g.set(k, d);
        }
        g
    }

    pub fn get(&self, degree: usize) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, degree: usize, dim: usize) {
        if dim == 0 {
            self.dims.remove(&degree);
        } else {
            self.dims.insert(degree, dim);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.dims.keys().next_back().copied()
    }

    /// Degreewise sum.
    pub fn add(&self, other: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for (k, d) in other.iter() {
            out.set(k, out.get(k) + d);
        }
        out
    }

    /// Evaluation of the Poincaré polynomial at -1, i.e. the Euler
    /// characteristic of the graded space.
    pub fn euler(&self) -> i64 {
        self.iter()
            .map(|(k, d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// The Poincaré polynomial, e.g. `1 + 2t^2 + t^4`; the zero polynomial
    /// prints as `0`.
    pub fn poincare_polynomial(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(k, d)| match (k, d) {
                (0, d) => format!("{d}"),
                (1, 1) => "t".to_string(),
                (1, d) => format!("{d}t"),
                (k, 1) => format!("t^{k}"),
                (k, d) => format!("{d}t^{k}"),
            })
            .collect();
        terms.join(" + ")
    }

    /// Dense rendering `H^0=1 H^1=0 ...` through `max_degree` inclusive.
    pub fn dims_line(&self, max_degree: usize) -> String {
        (0..=max_degree)
            .map(|k| format!("H^{k}={}", self.get(k)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Graded-dimension Künneth formula: the polynomial product
/// `result[k] = sum_{a+b=k} p[a] * q[b]`.
pub fn kunneth_poly(p: &GradedDims, q: &GradedDims) -> GradedDims {
    let mut out = GradedDims::new();
    for (a, da) in p.iter() {
        for (b, db) in q.iter() {
            out.set(a + b, out.get(a + b) + da * db);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_closure_is_generated() {
        let x = SimplicialComplex::from_maximal(vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(x.simplex_count(), 7);
        assert!(x.contains(&[0, 2]));
        assert!(x.contains(&[1]));
    }

    #[test]
    fn from_simplices_rejects_open_sets() {
        let err = SimplicialComplex::from_simplices(vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(err, ComplexError::NotFaceClosed { .. }));
    }

    #[test]
    fn duplicate_vertices_are_rejected() {
        let err = SimplicialComplex::from_maximal(vec![vec![1, 1]]).unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateVertex { .. }));
    }

    #[test]
    fn pair_requires_subcomplex() {
        let total = SimplicialComplex::from_maximal(vec![vec![0, 1]]).unwrap();
        let bad_sub = SimplicialComplex::from_maximal(vec![vec![2]]).unwrap();
        assert!(matches!(
            SimplicialPair::new(total, bad_sub),
            Err(ComplexError::NotSubcomplex { .. })
        ));
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let pt = SimplicialComplex::from_maximal(vec![vec![0]]).unwrap();
        let two = pt.disjoint_union(&pt);
        assert_eq!(two.vertices().len(), 2);
        let four = two.disjoint_union(&two);
        assert_eq!(four.vertices().len(), 4);
    }

    #[test]
    fn kunneth_unit_and_symmetry() {
        let p = GradedDims::from_vec(&[1, 0, 3, 1]);
        let unit = GradedDims::from_vec(&[1]);
        assert_eq!(kunneth_poly(&p, &unit), p);
        let q = GradedDims::from_vec(&[2, 1]);
        assert_eq!(kunneth_poly(&p, &q), kunneth_poly(&q, &p));
    }

    #[test]
    fn kunneth_circle_squared_is_torus() {
        let circle = GradedDims::from_vec(&[1, 1]);
        let torus = kunneth_poly(&circle, &circle);
        assert_eq!(torus, GradedDims::from_vec(&[1, 2, 1]));
    }

    #[test]
    fn poincare_polynomial_formatting() {
        assert_eq!(
            GradedDims::from_vec(&[1, 0, 2, 0, 1]).poincare_polynomial(),
            "1 + 2t^2 + t^4"
        );
        assert_eq!(
            GradedDims::from_vec(&[1, 1, 0, 1, 1]).poincare_polynomial(),
            "1 + t + t^3 + t^4"
        );
        assert_eq!(GradedDims::new().poincare_polynomial(), "0");
        assert_eq!(GradedDims::from_vec(&[0, 2]).poincare_polynomial(), "2t");
    }

    #[test]
    fn dims_line_includes_zeros() {
        assert_eq!(
            GradedDims::from_vec(&[1, 0, 1]).dims_line(2),
            "H^0=1 H^1=0 H^2=1"
        );
    }
}
