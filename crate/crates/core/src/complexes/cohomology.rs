//! Simplicial cochain complexes and their cohomology.
//!
//! Cochains in degree k are rational-valued functions on the k-simplices,
//! with coordinates in the lexicographic simplex order. The coboundary
//! follows the alternating-face rule on sorted tuples: for a (k+1)-simplex
//! `t`, `(df)(t) = sum_j (-1)^j f(t minus j-th vertex)`.

use super::{ComplexError, GradedDims, Simplex, SimplicialComplex, SimplicialPair};
use crate::exactla::{rat, Rational, RationalMatrix};
use crate::lesolve::{ExactSequenceTemplate, Slot};
use num::traits::Zero;
use std::collections::BTreeMap;

/// The coordinate spaces of a cochain complex: per degree, the ordered list
/// of simplices carrying coordinates. For an absolute complex these are all
/// simplices; for a pair, the simplices of the total complex not in the
/// subcomplex.
struct CochainSpaces {
    per_degree: Vec<Vec<Simplex>>,
}

impl CochainSpaces {
    fn absolute(x: &SimplicialComplex) -> Self {
        let top = x.dim().map_or(0, |d| d + 1);
        CochainSpaces {
            per_degree: (0..top).map(|k| x.simplices_of_dim(k)).collect(),
        }
    }

    fn relative(p: &SimplicialPair) -> Self {
        let top = p.total().dim().map_or(0, |d| d + 1);
        CochainSpaces {
            per_degree: (0..top)
                .map(|k| {
                    p.total()
                        .simplices_of_dim(k)
                        .into_iter()
                        .filter(|s| !p.sub().contains(s))
                        .collect()
                })
                .collect(),
        }
    }

    fn count(&self, k: usize) -> usize {
        self.per_degree.get(k).map_or(0, Vec::len)
    }

    fn simplices(&self, k: usize) -> &[Simplex] {
        self.per_degree
            .get(k)
            .map_or(&[] as &[Simplex], Vec::as_slice)
    }

    fn index_of(&self, k: usize) -> BTreeMap<&Simplex, usize> {
        self.simplices(k)
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect()
    }

    /// Coboundary matrix `C^k -> C^{k+1}`. Faces that carry no coordinate
    /// (they lie in the subcomplex of a pair) contribute nothing.
    fn coboundary(&self, k: usize) -> RationalMatrix {
        let rows = self.simplices(k + 1);
        let col_index = self.index_of(k);
        let mut d = RationalMatrix::zeros(rows.len(), self.count(k));
        for (r, t) in rows.iter().enumerate() {
            for skip in 0..t.len() {
                let face: Simplex = t
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if let Some(&c) = col_index.get(&face) {
                    let sign = if skip % 2 == 0 { 1 } else { -1 };
                    d.set(r, c, rat(sign));
                }
            }
        }
        d
    }

    fn max_degree(&self) -> usize {
        self.per_degree.len().saturating_sub(1)
    }
}

/// Cohomology of a cochain complex, with chosen cocycle representatives.
///
/// Per degree, `cocycle_space` is a basis of the cocycles, `coboundary_space`
/// a basis of the coboundaries, and `representatives` the subset of the
/// cocycle basis that completes the coboundary basis (taken in order, so the
/// choice is deterministic). Classes of the representatives form a basis of
/// the cohomology in that degree; all vectors use the lexicographic simplex
/// coordinates of the underlying complex or pair.
#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub dims: GradedDims,
    pub representatives: BTreeMap<usize, Vec<Vec<Rational>>>,
    pub cocycle_space: BTreeMap<usize, Vec<Vec<Rational>>>,
    pub coboundary_space: BTreeMap<usize, Vec<Vec<Rational>>>,
}

impl CohomologyResult {
    pub fn dim(&self, degree: usize) -> usize {
        self.dims.get(degree)
    }

    fn reps(&self, degree: usize) -> &[Vec<Rational>] {
        self.representatives
            .get(&degree)
            .map_or(&[], Vec::as_slice)
    }

    fn coboundaries(&self, degree: usize) -> &[Vec<Rational>] {
        self.coboundary_space
            .get(&degree)
            .map_or(&[], Vec::as_slice)
    }

    /// Expresses a cocycle in the representative basis of the given degree,
    /// modulo coboundaries.
    fn express(&self, degree: usize, vector_len: usize, cocycle: &[Rational]) -> Vec<Rational> {
        let reps = self.reps(degree);
        let cobs = self.coboundaries(degree);
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(reps.len() + cobs.len());
        cols.extend(reps.iter().cloned());
        cols.extend(cobs.iter().cloned());
        let basis = RationalMatrix::from_columns(vector_len, cols);
        let solution = basis
            .solve(cocycle)
            .expect("a cocycle decomposes over representatives and coboundaries");
        solution[..reps.len()].to_vec()
    }
}

fn compute(spaces: &CochainSpaces) -> CohomologyResult {
    let mut dims = GradedDims::new();
    let mut representatives = BTreeMap::new();
    let mut cocycle_space = BTreeMap::new();
    let mut coboundary_space = BTreeMap::new();

    for k in 0..spaces.per_degree.len() {
        let d_k = spaces.coboundary(k);
        let cocycles = d_k.kernel_basis();
        let coboundaries = if k == 0 {
            Vec::new()
        } else {
            let d_prev = spaces.coboundary(k - 1);
            // pivot columns of the previous coboundary form a basis of its image
            let mut cols = Vec::new();
            let mut picked = RationalMatrix::zeros(spaces.count(k), 0);
            for c in 0..d_prev.cols() {
                let col = d_prev.column(c);
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                let candidate = picked
                    .augment(&RationalMatrix::from_columns(spaces.count(k), vec![col.clone()]))
                    .expect("same height");
                if candidate.rank() > picked.rank() {
                    picked = candidate;
                    cols.push(col);
                }
            }
            cols
        };
        // complete the coboundary basis to a basis of the cocycles,
        // scanning kernel vectors in order
        let mut chosen = Vec::new();
        let mut span = RationalMatrix::from_columns(spaces.count(k), coboundaries.clone());
        for z in &cocycles {
            let candidate = span
                .augment(&RationalMatrix::from_columns(spaces.count(k), vec![z.clone()]))
                .expect("same height");
            if candidate.rank() > span.rank() {
                span = candidate;
                chosen.push(z.clone());
            }
        }
        dims.set(k, chosen.len());
        representatives.insert(k, chosen);
        cocycle_space.insert(k, cocycles);
        coboundary_space.insert(k, coboundaries);
    }

    CohomologyResult {
        dims,
        representatives,
        cocycle_space,
        coboundary_space,
    }
}

/// Simplicial cohomology with rational coefficients.
pub fn cohomology(x: &SimplicialComplex) -> CohomologyResult {
    compute(&CochainSpaces::absolute(x))
}

/// The coboundary matrix `C^k -> C^{k+1}` of a complex, in lexicographic
/// simplex coordinates.
pub fn coboundary_matrix(x: &SimplicialComplex, k: usize) -> RationalMatrix {
    CochainSpaces::absolute(x).coboundary(k)
}

/// Cohomology of a pair: cohomology of the cochains supported on simplices
/// of the total complex that are not in the subcomplex.
pub fn relative_cohomology(p: &SimplicialPair) -> CohomologyResult {
    compute(&CochainSpaces::relative(p))
}

/// Sorts a vertex tuple, returning the sorted tuple and the sign of the
/// sorting permutation; `None` when a vertex repeats.
fn sorted_with_sign(tuple: &[usize]) -> Option<(Simplex, i64)> {
    let mut indexed: Vec<usize> = tuple.to_vec();
    let mut sign = 1i64;
    // insertion sort, counting inversions
    for i in 1..indexed.len() {
        let mut j = i;
        while j > 0 && indexed[j - 1] > indexed[j] {
            indexed.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indexed.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((indexed, sign))
}

/// A simplicial map between complexes, given on vertices.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: BTreeMap<usize, usize>,
}

impl SimplicialMap {
    /// Validates that every source vertex is mapped to a target vertex and
    /// that the image of every simplex spans a simplex of the target.
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<usize, usize>,
    ) -> Result<Self, ComplexError> {
        let target_vertices = target.vertices();
        for v in source.vertices() {
            match vertex_map.get(&v) {
                None => return Err(ComplexError::UnmappedVertex { vertex: v }),
                Some(&w) if !target_vertices.contains(&w) => {
                    return Err(ComplexError::ImageVertexMissing { vertex: w })
                }
                _ => {}
            }
        }
        for s in source.simplices() {
            let mut image: Vec<usize> = s.iter().map(|v| vertex_map[v]).collect();
            image.sort_unstable();
            image.dedup();
            if !target.contains(&image) {
                return Err(ComplexError::NotSimplicialMap {
                    simplex: s.clone(),
                    image,
                });
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    pub fn identity(x: &SimplicialComplex) -> Self {
        let vertex_map = x.vertices().into_iter().map(|v| (v, v)).collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            vertex_map,
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn image_of_vertex(&self, v: usize) -> usize {
        self.vertex_map[&v]
    }

    /// Cochain-level pullback `C^k(target) -> C^k(source)`: a source simplex
    /// picks up the value on its image, with the sorting sign, and
    /// degenerate images contribute zero.
    fn pullback_matrix(&self, k: usize) -> RationalMatrix {
        let source_simplices = self.source.simplices_of_dim(k);
        let target_simplices = self.target.simplices_of_dim(k);
        let target_index: BTreeMap<&Simplex, usize> = target_simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut m = RationalMatrix::zeros(source_simplices.len(), target_simplices.len());
        for (r, s) in source_simplices.iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|v| self.vertex_map[v]).collect();
            if let Some((sorted, sign)) = sorted_with_sign(&image) {
                if let Some(&c) = target_index.get(&sorted) {
                    m.set(r, c, rat(sign));
                }
            }
        }
        m
    }
}

/// Pullback on cohomology: per degree k, the matrix of
/// `H^k(target) -> H^k(source)` in the representative bases.
pub fn induced_map(f: &SimplicialMap) -> BTreeMap<usize, RationalMatrix> {
    let source_cohom = cohomology(f.source());
    let target_cohom = cohomology(f.target());
    induced_on_bases(f, &source_cohom, &target_cohom)
}

fn induced_on_bases(
    f: &SimplicialMap,
    source_cohom: &CohomologyResult,
    target_cohom: &CohomologyResult,
) -> BTreeMap<usize, RationalMatrix> {
    let top = f
        .source()
        .dim()
        .unwrap_or(0)
        .max(f.target().dim().unwrap_or(0));
    let mut out = BTreeMap::new();
    for k in 0..=top {
        let rows = source_cohom.dim(k);
        let cols = target_cohom.dim(k);
        let pullback = f.pullback_matrix(k);
        let n_source = f.source().simplices_of_dim(k).len();
        let mut m = RationalMatrix::zeros(rows, cols);
        for (j, rep) in target_cohom.reps(k).iter().enumerate() {
            let pulled = pullback.apply(rep).expect("representative length matches");
            let coords = source_cohom.express(k, n_source, &pulled);
            for (i, v) in coords.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        out.insert(k, m);
    }
    out
}

/// The long exact sequence of a pair, with explicit matrices for all three
/// map families:
///
/// ```text
/// 0 -> H^0(X,A) -> H^0(X) -> H^0(A) -> H^1(X,A) -> ... -> H^D(A) -> H^{D+1}(X,A) = 0
/// ```
///
/// The connecting map is built at cochain level: a cocycle on `A` is
/// extended by zero to `X`, its coboundary vanishes on `A` and therefore
/// defines a relative class one degree up.
pub fn pair_long_exact_sequence(p: &SimplicialPair) -> ExactSequenceTemplate {
    let rel_spaces = CochainSpaces::relative(p);
    let abs_spaces = CochainSpaces::absolute(p.total());
    let sub_spaces = CochainSpaces::absolute(p.sub());

    let rel = compute(&rel_spaces);
    let abs = compute(&abs_spaces);
    let sub = compute(&sub_spaces);

    let top = abs_spaces.max_degree();

    // index of each relative coordinate inside the absolute coordinates
    let rel_into_abs: Vec<Vec<usize>> = (0..=top + 1)
        .map(|k| {
            let abs_index = abs_spaces.index_of(k);
            rel_spaces
                .simplices(k)
                .iter()
                .map(|s| abs_index[s])
                .collect()
        })
        .collect();
    // index of each subcomplex coordinate inside the absolute coordinates
    let sub_into_abs: Vec<Vec<usize>> = (0..=top)
        .map(|k| {
            let abs_index = abs_spaces.index_of(k);
            sub_spaces
                .simplices(k)
                .iter()
                .map(|s| abs_index[s])
                .collect()
        })
        .collect();

    let mut slots = Vec::new();
    let mut maps = Vec::new();
    slots.push(Slot::known("0", 0));
    maps.push(RationalMatrix::zeros(rel.dim(0), 0));

    for k in 0..=top {
        let rel_k = rel.dim(k);
        let abs_k = abs.dim(k);
        let sub_k = sub.dim(k);
        let rel_next = rel.dim(k + 1);

        slots.push(Slot::known(format!("H^{k}(X,A)"), rel_k).with_degree(k as i64));
        slots.push(Slot::known(format!("H^{k}(X)"), abs_k).with_degree(k as i64));
        slots.push(Slot::known(format!("H^{k}(A)"), sub_k).with_degree(k as i64));

        // H^k(X,A) -> H^k(X): a relative cocycle, extended by zero, is a cocycle
        let mut include = RationalMatrix::zeros(abs_k, rel_k);
        for (j, rep) in rel.reps(k).iter().enumerate() {
            let mut vec = vec![Rational::zero(); abs_spaces.count(k)];
            for (rel_pos, &abs_pos) in rel_into_abs[k].iter().enumerate() {
                vec[abs_pos] = rep[rel_pos].clone();
            }
            let coords = abs.express(k, abs_spaces.count(k), &vec);
            for (i, v) in coords.into_iter().enumerate() {
                include.set(i, j, v);
            }
        }
        maps.push(include);

        // H^k(X) -> H^k(A): restriction of cochains
        let mut restrict = RationalMatrix::zeros(sub_k, abs_k);
        for (j, rep) in abs.reps(k).iter().enumerate() {
            let vec: Vec<Rational> = sub_into_abs[k]
                .iter()
                .map(|&abs_pos| rep[abs_pos].clone())
                .collect();
            let coords = sub.express(k, sub_spaces.count(k), &vec);
            for (i, v) in coords.into_iter().enumerate() {
                restrict.set(i, j, v);
            }
        }
        maps.push(restrict);

        // H^k(A) -> H^{k+1}(X,A): extend by zero, take the coboundary of X,
        // read off the relative coordinates
        let d_abs = abs_spaces.coboundary(k);
        let mut connecting = RationalMatrix::zeros(rel_next, sub_k);
        for (j, rep) in sub.reps(k).iter().enumerate() {
            let mut extended = vec![Rational::zero(); abs_spaces.count(k)];
            for (sub_pos, &abs_pos) in sub_into_abs[k].iter().enumerate() {
                extended[abs_pos] = rep[sub_pos].clone();
            }
            let cobound = d_abs.apply(&extended).expect("extension length matches");
            let vec: Vec<Rational> = rel_into_abs[k + 1]
                .iter()
                .map(|&abs_pos| cobound[abs_pos].clone())
                .collect();
            let coords = rel.express(k + 1, rel_spaces.count(k + 1), &vec);
            for (i, v) in coords.into_iter().enumerate() {
                connecting.set(i, j, v);
            }
        }
        maps.push(connecting);
    }

    // H^{top+1}(X,A) has no simplices to live on, so it closes the sequence.
    slots.push(Slot::known(format!("H^{}(X,A)", top + 1), 0).with_degree(top as i64 + 1));

    ExactSequenceTemplate::with_maps(slots, maps)
        .expect("pair sequence slots and maps are consistent by construction")
}

#[cfg(test)]
mod tests {
    use super::super::models;
    use super::*;
    use crate::lesolve::{alternating_sum_check, check_exact};

    #[test]
    fn point_has_trivial_cohomology() {
        let pt = SimplicialComplex::from_maximal(vec![vec![0]]).unwrap();
        assert_eq!(cohomology(&pt).dims, GradedDims::from_vec(&[1]));
    }

    #[test]
    fn empty_complex_has_no_cohomology() {
        assert!(cohomology(&SimplicialComplex::empty()).dims.is_zero());
    }

    #[test]
    fn two_sphere_model() {
        // boundary of the 3-simplex
        let s2 = models::sphere(2);
        assert_eq!(cohomology(&s2).dims, GradedDims::from_vec(&[1, 0, 1]));
    }

    #[test]
    fn projective_plane_is_rationally_trivial() {
        let rp2 = models::projective_plane();
        assert_eq!(cohomology(&rp2).dims, GradedDims::from_vec(&[1, 0, 0]));
    }

    #[test]
    fn circle_and_torus_models() {
        assert_eq!(
            cohomology(&models::circle(3)).dims,
            GradedDims::from_vec(&[1, 1])
        );
        assert_eq!(
            cohomology(&models::torus()).dims,
            GradedDims::from_vec(&[1, 2, 1])
        );
    }

    #[test]
    fn four_points() {
        let four = models::discrete_points(4);
        assert_eq!(cohomology(&four).dims, GradedDims::from_vec(&[4]));
    }

    #[test]
    fn disjoint_union_adds_dims() {
        let pt = models::discrete_points(1);
        assert_eq!(
            cohomology(&pt.disjoint_union(&pt)).dims,
            GradedDims::from_vec(&[2])
        );
        let s2 = models::sphere(2);
        let both = s2.disjoint_union(&s2);
        assert_eq!(cohomology(&both).dims, GradedDims::from_vec(&[2, 0, 2]));
    }

    #[test]
    fn relative_of_empty_sub_is_absolute() {
        let x = models::sphere(2);
        let pair = SimplicialPair::new(x.clone(), SimplicialComplex::empty()).unwrap();
        assert_eq!(relative_cohomology(&pair).dims, cohomology(&x).dims);
    }

    #[test]
    fn relative_of_full_sub_vanishes() {
        let x = models::sphere(2);
        let pair = SimplicialPair::new(x.clone(), x).unwrap();
        assert!(relative_cohomology(&pair).dims.is_zero());
    }

    #[test]
    fn relative_interval_mod_endpoints() {
        let pair = models::interval_pair();
        assert_eq!(
            relative_cohomology(&pair).dims,
            GradedDims::from_vec(&[0, 1])
        );
    }

    #[test]
    fn excision_surrogate_on_interval_pair() {
        // removing the open star of an endpoint changes neither side of the
        // relative complex
        let pair = models::interval_pair();
        let reduced_total = pair.total().without_open_star(1);
        let reduced_sub = pair.sub().without_open_star(1);
        let reduced = SimplicialPair::new(reduced_total, reduced_sub).unwrap();
        // the open star of vertex 1 is not inside the subcomplex (the edge
        // leaves it), so compare against the honest star condition instead:
        // use a pair where it holds
        let total = SimplicialComplex::from_maximal(vec![vec![0, 1], vec![1, 2]]).unwrap();
        let sub = SimplicialComplex::from_maximal(vec![vec![0, 1], vec![2]]).unwrap();
        let p = SimplicialPair::new(total.clone(), sub.clone()).unwrap();
        // star(0) = {0, 01} is contained in the subcomplex
        let q = SimplicialPair::new(total.without_open_star(0), sub.without_open_star(0)).unwrap();
        assert_eq!(relative_cohomology(&p).dims, relative_cohomology(&q).dims);
        // and the interval pair above still computes something sensible
        assert_eq!(
            relative_cohomology(&reduced).dims,
            GradedDims::from_vec(&[0])
        );
    }

    #[test]
    fn identity_induces_identity() {
        let x = models::sphere(2);
        let f = SimplicialMap::identity(&x);
        for (k, m) in induced_map(&f) {
            let expected = RationalMatrix::identity(cohomology(&x).dim(k));
            assert_eq!(m, expected, "degree {k}");
        }
    }

    #[test]
    fn constant_map_hits_degree_zero_only() {
        let x = models::sphere(2);
        let pt = SimplicialComplex::from_maximal(vec![vec![0]]).unwrap();
        let map = x.vertices().into_iter().map(|v| (v, 0)).collect();
        let f = SimplicialMap::new(x, pt, map).unwrap();
        let induced = induced_map(&f);
        assert_eq!(induced[&0].rank(), 1);
        for (k, m) in &induced {
            if *k > 0 {
                assert_eq!(m.rank(), 0);
            }
        }
    }

    #[test]
    fn non_simplicial_map_is_rejected() {
        let circle = models::circle(4);
        let target = models::discrete_points(2);
        // collapse the 4-cycle onto two non-adjacent points: edge {0,1}
        // maps onto {0,1}, which is not a simplex of the discrete target
        let map: BTreeMap<usize, usize> = [(0, 0), (1, 1), (2, 0), (3, 1)].into_iter().collect();
        assert!(matches!(
            SimplicialMap::new(circle, target, map),
            Err(ComplexError::NotSimplicialMap { .. })
        ));
    }

    #[test]
    fn double_cover_multiplies_fundamental_class_by_two() {
        // hexagon -> triangle, v mod 3
        let hexagon = models::circle(6);
        let triangle = models::circle(3);
        let map: BTreeMap<usize, usize> = (0..6).map(|v| (v, v % 3)).collect();
        let f = SimplicialMap::new(hexagon.clone(), triangle.clone(), map.clone()).unwrap();
        let induced = induced_map(&f);
        assert_eq!(induced[&1].rank(), 1);

        // independent oracle: pair cochains against the fundamental cycles.
        // The oriented edge cycle of the n-gon takes edge {i, i+1} with
        // coefficient +1 and the closing edge {0, n-1} with coefficient -1.
        let pairing = |x: &SimplicialComplex, cochain: &[Rational]| -> Rational {
            let edges = x.simplices_of_dim(1);
            let n = x.vertices().len();
            edges
                .iter()
                .zip(cochain)
                .map(|(e, v)| {
                    if e == &vec![0, n - 1] {
                        -v.clone()
                    } else {
                        v.clone()
                    }
                })
                .sum()
        };
        let f = SimplicialMap::new(hexagon.clone(), triangle.clone(), map).unwrap();
        let tri_cohom = cohomology(&triangle);
        let rep = &tri_cohom.representatives[&1][0];
        let pulled = f.pullback_matrix(1).apply(rep).unwrap();
        let on_triangle = pairing(&triangle, rep);
        let on_hexagon = pairing(&hexagon, &pulled);
        assert!(!on_triangle.is_zero());
        assert_eq!(on_hexagon, rat(2) * on_triangle);
    }

    #[test]
    fn les_of_pair_with_empty_sub_has_isomorphisms() {
        let x = models::sphere(2);
        let pair = SimplicialPair::new(x, SimplicialComplex::empty()).unwrap();
        let t = pair_long_exact_sequence(&pair);
        for v in check_exact(&t).unwrap() {
            assert!(v.exact, "position {} ({})", v.position, v.label);
        }
        // every H^k(A) slot is zero and every inclusion-induced map is an
        // isomorphism
        let maps = t.maps().unwrap();
        for (i, slot) in t.slots().iter().enumerate() {
            if slot.label.ends_with("(A)") {
                assert_eq!(slot.dim.known(), Some(0));
            }
            if slot.label.ends_with("(X,A)") && i + 1 < t.len() {
                let include = &maps[i];
                assert_eq!(include.rank(), include.rows());
                assert_eq!(include.rank(), include.cols());
            }
        }
    }

    #[test]
    fn les_connecting_map_of_interval_pair() {
        let t = pair_long_exact_sequence(&models::interval_pair());
        let maps = t.maps().unwrap();
        // slots: 0, H0(X,A), H0(X), H0(A), H1(X,A), H1(X), H1(A), H2(X,A)
        // the connecting map H^0(A) -> H^1(X,A) is maps[3]
        let connecting = &maps[3];
        assert_eq!(connecting.rows(), 1);
        assert_eq!(connecting.cols(), 2);
        assert_eq!(connecting.rank(), 1);
        for v in check_exact(&t).unwrap() {
            assert!(v.exact);
        }
        assert!(alternating_sum_check(&t).unwrap());
    }

    #[test]
    fn les_of_sphere_with_equator_is_exact() {
        let (sphere, equator) = models::octahedron_with_equator();
        let pair = SimplicialPair::new(sphere, equator).unwrap();
        let t = pair_long_exact_sequence(&pair);
        for v in check_exact(&t).unwrap() {
            assert!(v.exact, "position {} ({})", v.position, v.label);
        }
        assert!(alternating_sum_check(&t).unwrap());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let x = models::torus();
        let spaces = CochainSpaces::absolute(&x);
        for k in 0..spaces.max_degree() {
            let d0 = spaces.coboundary(k);
            let d1 = spaces.coboundary(k + 1);
            assert!(d1.mul(&d0).unwrap().is_zero(), "degree {k}");
        }
    }

    #[test]
    fn euler_characteristic_matches_cohomology() {
        for x in [
            models::sphere(2),
            models::circle(5),
            models::torus(),
            models::projective_plane(),
        ] {
            assert_eq!(cohomology(&x).dims.euler(), x.euler_characteristic());
        }
    }
}
