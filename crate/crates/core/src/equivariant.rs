//! Z2-actions on simplicial complexes.
//!
//! An [`Involution`] is a simplicial automorphism of order at most two. Its
//! induced map on each cohomology group squares to the identity, so in
//! characteristic zero the group splits into the +1 (symmetric) and -1
//! (antisymmetric) eigenspaces; [`split_involution`] computes both
//! dimensions. For regular actions, [`quotient_complex`] builds the orbit
//! complex, whose cohomology equals the symmetric part.

use crate::complexes::{GradedDims, Simplex, SimplicialComplex, SimplicialMap};
use crate::exactla::{eigenspace_dim, rat};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivariantError {
    /// A swap pair names a vertex the carrier does not have.
    UnknownVertex { vertex: usize },
    /// A vertex is assigned two different images.
    ConflictingPair { vertex: usize },
    /// The vertex map does not send some simplex to a simplex.
    NotSimplicial { simplex: Simplex, image: Vec<usize> },
    /// The action identifies simplices that are not in the same orbit, or
    /// moves a simplex across itself; quotienting would change cohomology.
    /// Carries an offending simplex and the conflicting image.
    NonRegular { simplex: Simplex, image: Simplex },
    /// The involution is not defined over the expected carrier complex.
    CarrierMismatch,
}

impl fmt::Display for EquivariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivariantError::UnknownVertex { vertex } => {
                write!(f, "involution names vertex {vertex}, which the carrier lacks")
            }
            EquivariantError::ConflictingPair { vertex } => {
                write!(f, "vertex {vertex} is paired with two different vertices")
            }
            EquivariantError::NotSimplicial { simplex, image } => write!(
                f,
                "involution is not simplicial: {simplex:?} maps onto {image:?}, which is not a simplex"
            ),
            EquivariantError::NonRegular { simplex, image } => write!(
                f,
                "action is not regular on simplex {simplex:?}: a mixed assignment lands on simplex {image:?}; quotienting would be unsound (subdivide the model)"
            ),
            EquivariantError::CarrierMismatch => {
                write!(f, "involution is defined over a different carrier complex")
            }
        }
    }
}

impl std::error::Error for EquivariantError {}

/// A simplicial automorphism of order at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    carrier: SimplicialComplex,
    vertex_map: BTreeMap<usize, usize>,
}

impl Involution {
    /// Builds an involution from swapped vertex pairs; unlisted vertices are
    /// fixed. Rejects pairs naming unknown vertices, conflicting pairs, and
    /// vertex maps that fail to send simplices to simplices.
    pub fn new(
        carrier: SimplicialComplex,
        swaps: &[(usize, usize)],
    ) -> Result<Self, EquivariantError> {
        let vertices = carrier.vertices();
        let mut vertex_map: BTreeMap<usize, usize> =
            vertices.iter().map(|&v| (v, v)).collect();
        for &(a, b) in swaps {
            for v in [a, b] {
                if !vertices.contains(&v) {
                    return Err(EquivariantError::UnknownVertex { vertex: v });
                }
            }
            for (from, to) in [(a, b), (b, a)] {
                let prev = vertex_map.insert(from, to);
                if prev != Some(from) && prev != Some(to) {
                    return Err(EquivariantError::ConflictingPair { vertex: from });
                }
            }
        }
        for s in carrier.simplices() {
            let mut image: Vec<usize> = s.iter().map(|v| vertex_map[v]).collect();
            image.sort_unstable();
            let deduped = {
                let mut d = image.clone();
                d.dedup();
                d
            };
            if deduped.len() != image.len() || !carrier.contains(&image) {
                return Err(EquivariantError::NotSimplicial {
                    simplex: s.clone(),
                    image,
                });
            }
        }
        Ok(Involution {
            carrier,
            vertex_map,
        })
    }

    /// The identity involution.
    pub fn trivial(carrier: SimplicialComplex) -> Self {
        let vertex_map = carrier.vertices().into_iter().map(|v| (v, v)).collect();
        Involution {
            carrier,
            vertex_map,
        }
    }

    pub fn carrier(&self) -> &SimplicialComplex {
        &self.carrier
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.vertex_map[&v]
    }

    pub fn is_trivial(&self) -> bool {
        self.vertex_map.iter().all(|(&v, &w)| v == w)
    }

    /// The swapped pairs `(a, b)` with `a < b`.
    pub fn swapped_pairs(&self) -> Vec<(usize, usize)> {
        self.vertex_map
            .iter()
            .filter(|(&v, &w)| v < w)
            .map(|(&v, &w)| (v, w))
            .collect()
    }

    fn as_map(&self) -> SimplicialMap {
        SimplicialMap::new(
            self.carrier.clone(),
            self.carrier.clone(),
            self.vertex_map.clone(),
        )
        .expect("an involution is a simplicial self-map")
    }

    /// Checks regularity: for every simplex and every mixed application of
    /// the involution to its vertices, the resulting vertex set must not be
    /// a simplex unless it is realized by applying the involution uniformly.
    /// This is what makes the orbit complex compute the quotient space; a
    /// twice-subdivided model always satisfies it.
    fn check_regular(&self) -> Result<(), EquivariantError> {
        for s in self.carrier.simplices() {
            let moved: Vec<usize> = (0..s.len())
                .filter(|&i| self.vertex_map[&s[i]] != s[i])
                .collect();
            if moved.is_empty() {
                continue;
            }
            for mask in 1u64..(1 << s.len()) {
                let applied: Vec<usize> = (0..s.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .collect();
                let touches_moved = applied.iter().any(|i| moved.contains(i));
                let covers_moved = moved.iter().all(|i| applied.contains(i));
                if !touches_moved || covers_moved {
                    // realized by the identity or by the involution itself
                    continue;
                }
                let mut image: Vec<usize> = (0..s.len())
                    .map(|i| {
                        if mask & (1 << i) != 0 {
                            self.vertex_map[&s[i]]
                        } else {
                            s[i]
                        }
                    })
                    .collect();
                image.sort_unstable();
                image.dedup();
                if self.carrier.contains(&image) {
                    return Err(EquivariantError::NonRegular {
                        simplex: s.clone(),
                        image,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Eigenspace dimensions of an involution acting on cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCohomology {
    /// Dimensions of the +1 eigenspaces (the invariant classes).
    pub symmetric: GradedDims,
    /// Dimensions of the -1 eigenspaces.
    pub antisymmetric: GradedDims,
}

/// Splits each cohomology group of the carrier into the eigenspaces of the
/// induced involution. The two dimensions add up to the full Betti number
/// in every degree.
pub fn split_involution(inv: &Involution) -> SplitCohomology {
    let induced = crate::complexes::induced_map(&inv.as_map());
    let mut symmetric = GradedDims::new();
    let mut antisymmetric = GradedDims::new();
    for (k, m) in &induced {
        let plus = eigenspace_dim(m, &rat(1)).expect("induced matrix is square");
        let minus = eigenspace_dim(m, &rat(-1)).expect("induced matrix is square");
        debug_assert_eq!(
            plus + minus,
            m.rows(),
            "an involution on cohomology must split in characteristic zero"
        );
        symmetric.set(*k, plus);
        antisymmetric.set(*k, minus);
    }
    SplitCohomology {
        symmetric,
        antisymmetric,
    }
}

/// The orbit complex of a regular involution: vertices are orbits (labelled
/// by their smallest member) and simplices are images of simplices.
///
/// Regularity is demanded, not repaired: a non-regular action gets an error
/// naming an offending simplex, never a silent quotient.
pub fn quotient_complex(inv: &Involution) -> Result<SimplicialComplex, EquivariantError> {
    inv.check_regular()?;
    let orbit = |v: usize| v.min(inv.vertex_map[&v]);
    let simplices: Vec<Vec<usize>> = inv
        .carrier
        .simplices()
        .map(|s| s.iter().map(|&v| orbit(v)).collect())
        .collect();
    Ok(SimplicialComplex::from_simplices(simplices)
        .expect("orbit images of a regular action form a complex"))
}

/// The antisymmetric part of the cohomology of a fixed-point set carrying a
/// Z2-action. Degree bookkeeping (the degree shift used by sequence
/// assembly) is the caller's business; this returns unshifted dimensions.
pub fn antisym_of_fixed_set(
    fixed_set: &SimplicialComplex,
    inv: &Involution,
) -> Result<GradedDims, EquivariantError> {
    if inv.carrier() != fixed_set {
        return Err(EquivariantError::CarrierMismatch);
    }
    Ok(split_involution(inv).antisymmetric)
}
