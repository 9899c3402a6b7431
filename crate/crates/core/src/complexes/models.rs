//! Small canned triangulations used by fixtures and tests.

use super::SimplicialComplex;

/// Boundary of the (d+1)-simplex: the minimal triangulation of the
/// d-sphere, on d+2 vertices.
pub fn sphere(d: usize) -> SimplicialComplex {
    let n = d + 2;
    let verts: Vec<usize> = (0..n).collect();
    let mut maximal = Vec::new();
    // all (d+1)-subsets of the vertex set
    for mask in 0u64..(1 << n) {
        if (mask.count_ones() as usize) == n - 1 {
            maximal.push(
                verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    SimplicialComplex::from_maximal(maximal).expect("sphere model is well-formed")
}

/// Cycle graph on `n >= 3` vertices, a model of the circle.
pub fn circle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a simplicial circle needs at least 3 vertices");
    let maximal = (0..n).map(|i| vec![i, (i + 1) % n]).collect::<Vec<_>>();
    SimplicialComplex::from_maximal(maximal).expect("circle model is well-formed")
}

/// `n` isolated vertices.
pub fn discrete_points(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_maximal((0..n).map(|v| vec![v]).collect::<Vec<_>>())
        .expect("points are well-formed")
}

/// Single edge on vertices 0 and 1.
pub fn interval() -> SimplicialComplex {
    SimplicialComplex::from_maximal(vec![vec![0, 1]]).expect("interval is well-formed")
}

/// The interval together with its two endpoints as subcomplex.
pub fn interval_pair() -> super::SimplicialPair {
    let sub = SimplicialComplex::from_maximal(vec![vec![0], vec![1]]).expect("endpoints");
    super::SimplicialPair::new(interval(), sub).expect("endpoints form a subcomplex")
}

/// The icosahedron boundary: 12 vertices, 20 triangles. Vertex 0 is the top
/// pole, 1..=5 the upper ring, 6..=10 the lower ring, 11 the bottom pole.
pub fn icosahedron() -> SimplicialComplex {
    let upper = |k: usize| 1 + k % 5;
    let lower = |k: usize| 6 + k % 5;
    let mut faces = Vec::new();
    for k in 0..5 {
        faces.push(vec![0, upper(k), upper(k + 1)]);
        faces.push(vec![11, lower(k), lower(k + 1)]);
        faces.push(vec![upper(k), upper(k + 1), lower(k)]);
        faces.push(vec![upper(k + 1), lower(k), lower(k + 1)]);
    }
    SimplicialComplex::from_maximal(faces).expect("icosahedron is well-formed")
}

/// The antipodal involution of [`icosahedron`], as vertex swaps.
pub fn icosahedron_antipodal_pairs() -> Vec<(usize, usize)> {
    let mut pairs = vec![(0, 11)];
    for k in 0..5 {
        // the antipode of upper-ring vertex k is lower-ring vertex k+2
        pairs.push((1 + k, 6 + (k + 2) % 5));
    }
    pairs
}

/// The minimal 6-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let faces = vec![
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![1, 5, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
        vec![2, 5, 6],
        vec![3, 4, 5],
        vec![3, 4, 6],
    ];
    SimplicialComplex::from_maximal(faces).expect("projective plane is well-formed")
}

/// The Császár 7-vertex triangulation of the torus.
pub fn torus() -> SimplicialComplex {
    let mut faces = Vec::new();
    for i in 0..7usize {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_maximal(faces).expect("torus model is well-formed")
}

/// The octahedron 2-sphere together with its equatorial square. Vertices 0
/// and 5 are the poles; 1, 2, 3, 4 form the equator cycle.
pub fn octahedron_with_equator() -> (SimplicialComplex, SimplicialComplex) {
    let equator_edges = [vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]];
    let mut faces = Vec::new();
    for e in &equator_edges {
        faces.push(vec![0, e[0], e[1]]);
        faces.push(vec![5, e[0], e[1]]);
    }
    let sphere = SimplicialComplex::from_maximal(faces).expect("octahedron is well-formed");
    let equator =
        SimplicialComplex::from_maximal(equator_edges.to_vec()).expect("equator is well-formed");
    (sphere, equator)
}
