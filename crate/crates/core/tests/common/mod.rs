//! Shared randomized generators for the integration suites.

#![allow(dead_code)]

use gysinseq::complexes::{SimplicialComplex, SimplicialPair};
use gysinseq::equivariant::Involution;
use gysinseq::exactla::{rat, RationalMatrix};
use rand::Rng;

/// A random face-closed complex with at most `cap` simplices, built by
/// adding random maximal simplices while they fit.
pub fn random_complex<R: Rng>(rng: &mut R, max_label: usize, cap: usize) -> SimplicialComplex {
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    let mut current = SimplicialComplex::empty();
    let attempts = rng.random_range(1..=8);
    for _ in 0..attempts {
        let size = rng.random_range(1..=4);
        let mut simplex: Vec<usize> = (0..size)
            .map(|_| rng.random_range(0..max_label))
            .collect();
        simplex.sort_unstable();
        simplex.dedup();
        let mut candidate = maximal.clone();
        candidate.push(simplex);
        let closed = SimplicialComplex::from_maximal(candidate.clone())
            .expect("deduplicated tuples are valid simplices");
        if closed.simplex_count() <= cap {
            maximal = candidate;
            current = closed;
        }
    }
    current
}

/// A random subcomplex: a random subset of the simplices, closed downward.
pub fn random_subcomplex<R: Rng>(rng: &mut R, x: &SimplicialComplex) -> SimplicialComplex {
    let chosen: Vec<Vec<usize>> = x
        .simplices()
        .filter(|_| rng.random_bool(0.4))
        .cloned()
        .collect();
    SimplicialComplex::from_maximal(chosen).expect("faces of simplices are simplices")
}

/// A random pair with at most `cap` simplices in the total complex.
pub fn random_pair<R: Rng>(rng: &mut R, max_label: usize, cap: usize) -> SimplicialPair {
    let total = random_complex(rng, max_label, cap);
    let sub = random_subcomplex(rng, &total);
    SimplicialPair::new(total, sub).expect("a downward-closed subset is a subcomplex")
}

/// Two copies of a complex with the swap involution. Always regular.
pub fn doubled_with_swap(x: &SimplicialComplex) -> Involution {
    let both = x.disjoint_union(x);
    let shift = x.max_vertex().map_or(0, |m| m + 1);
    let swaps: Vec<(usize, usize)> = x.vertices().into_iter().map(|v| (v, v + shift)).collect();
    Involution::new(both, &swaps).expect("swapping disjoint copies is simplicial")
}

/// A mirror complex: random simplices on a fixed spine `0..spine` plus a
/// moved block, unioned with their reflection. The reflection swaps the
/// moved block with a disjoint mirrored block, so the involution is
/// simplicial and regular by construction.
pub fn mirror_involution<R: Rng>(rng: &mut R, spine: usize, block: usize) -> Involution {
    let reflect = |v: usize| {
        if v < spine {
            v
        } else if v < spine + block {
            v + block
        } else {
            v - block
        }
    };
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for _ in 0..rng.random_range(1..=5) {
        let size = rng.random_range(1..=3);
        let mut simplex: Vec<usize> = (0..size)
            .map(|_| rng.random_range(0..spine + block))
            .collect();
        simplex.sort_unstable();
        simplex.dedup();
        maximal.push(simplex.clone());
        maximal.push(simplex.into_iter().map(reflect).collect());
    }
    let carrier = SimplicialComplex::from_maximal(maximal).expect("valid simplices");
    let swaps: Vec<(usize, usize)> = carrier
        .vertices()
        .into_iter()
        .filter(|&v| (spine..spine + block).contains(&v))
        .map(|v| (v, v + block))
        .collect();
    Involution::new(carrier, &swaps).expect("the reflection is simplicial by construction")
}

/// A random matrix with small integer entries.
pub fn random_matrix<R: Rng>(rng: &mut R, max_side: usize) -> RationalMatrix {
    let rows = rng.random_range(0..=max_side);
    let cols = rng.random_range(0..=max_side);
    let mut m = RationalMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rat(rng.random_range(-4..=4)));
        }
    }
    m
}

/// A random matrix that squares to the identity: a signed involutive
/// permutation (sign constancy along 2-cycles makes the square trivial).
pub fn random_involutive_matrix<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut partner: Vec<usize> = (0..n).collect();
    let mut unpaired: Vec<usize> = (0..n).collect();
    while unpaired.len() >= 2 {
        if rng.random_bool(0.5) {
            unpaired.pop();
            continue;
        }
        let a = unpaired.pop().unwrap();
        let idx = rng.random_range(0..unpaired.len());
        let b = unpaired.swap_remove(idx);
        partner[a] = b;
        partner[b] = a;
    }
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        if partner[i] == i {
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            m.set(i, i, rat(sign));
        } else if i < partner[i] {
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            m.set(partner[i], i, rat(sign));
            m.set(i, partner[i], rat(sign));
        }
    }
    m
}
