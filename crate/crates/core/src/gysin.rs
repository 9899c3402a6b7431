//! Assembly of the Gysin-type long exact sequence of an S3-action from its
//! orbit data.
//!
//! The input is combinatorial: a simplicial pair modelling the orbit space
//! with its singular part, a complex modelling the circle-fixed set, and the
//! involution the normalizer element induces on it. The assembler computes
//! the middle terms
//!
//! ```text
//! middle_i = H^{i-3}(orbit pair) + antisymmetric H^{i-2}(fixed set)
//! ```
//!
//! interleaves them with the (possibly unknown) dimensions of `H^i(M)` and
//! the orbit-space groups `H^{i+1}(Q)`, and hands the bounded template to
//! the dimension solver. All degree shifts live here; the equivariant and
//! complex modules stay shift-free.

use crate::complexes::{
    cohomology, relative_cohomology, GradedDims, SimplicialComplex, SimplicialPair,
};
use crate::equivariant::{antisym_of_fixed_set, EquivariantError, Involution};
use crate::lesolve::{solve_dims, ExactSequenceTemplate, LesolveError, Slot, SlotDim, SolveReport};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GysinError {
    /// The involution is not defined over the given fixed-set complex.
    CarrierMismatch,
    /// No fixture with that name.
    UnknownFixture { name: String },
    Equivariant(EquivariantError),
    Template(LesolveError),
}

impl fmt::Display for GysinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GysinError::CarrierMismatch => {
                write!(f, "the involution is not defined over the fixed-set complex")
            }
            GysinError::UnknownFixture { name } => write!(f, "unknown fixture \"{name}\""),
            GysinError::Equivariant(e) => write!(f, "{e}"),
            GysinError::Template(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GysinError {}

impl From<EquivariantError> for GysinError {
    fn from(e: EquivariantError) -> Self {
        match e {
            EquivariantError::CarrierMismatch => GysinError::CarrierMismatch,
            other => GysinError::Equivariant(other),
        }
    }
}

impl From<LesolveError> for GysinError {
    fn from(e: LesolveError) -> Self {
        GysinError::Template(e)
    }
}

/// Orbit data of an action: everything the sequence needs.
#[derive(Debug, Clone)]
pub struct GysinInput {
    /// Pair modelling the orbit space and the image of the singular set.
    pub orbit_pair: SimplicialPair,
    /// Model of the circle-fixed subset of the manifold.
    pub fixed_set: SimplicialComplex,
    /// The involution induced on the fixed set by the normalizer element.
    pub j_involution: Involution,
    /// Dimension of the manifold; terms of `H^*(M)` above it are zero.
    pub degree_bound: usize,
    /// Degrees of `H^*(M)` pinned to a known dimension (all others are
    /// treated as unknown and solved for).
    pub known_total: BTreeMap<usize, usize>,
}

impl GysinInput {
    pub fn new(
        orbit_pair: SimplicialPair,
        fixed_set: SimplicialComplex,
        j_involution: Involution,
        degree_bound: usize,
        known_total: BTreeMap<usize, usize>,
    ) -> Result<Self, GysinError> {
        if j_involution.carrier() != &fixed_set {
            return Err(GysinError::CarrierMismatch);
        }
        Ok(GysinInput {
            orbit_pair,
            fixed_set,
            j_involution,
            degree_bound,
            known_total,
        })
    }
}

/// The assembled sequence and everything computed along the way.
#[derive(Debug, Clone)]
pub struct GysinReport {
    pub template: ExactSequenceTemplate,
    /// Per degree i, the dimension of the middle term paired with `H^i(M)`.
    pub middle_dims: GradedDims,
    pub solve: SolveReport,
    /// Second-page rows q = 0..3: orbit-space cohomology, zero, the
    /// antisymmetric fixed-set dimensions, the relative dimensions.
    pub e2_rows: [GradedDims; 4],
    pub duality_obstructed: bool,
    /// Positions of the `H^i(M)` slots inside the template, per degree
    /// `0..=degree_bound`.
    pub total_slots: Vec<(usize, usize)>,
}

impl GysinReport {
    /// Every feasible dimension profile of `H^*(M)`, degrees
    /// `0..=degree_bound`, lexicographically sorted.
    pub fn total_profiles(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .solve
            .profiles
            .iter()
            .map(|p| self.total_slots.iter().map(|&(_, idx)| p[idx]).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The solved `H^*(M)` when the sequence determines it uniquely.
    pub fn unique_total(&self) -> Option<GradedDims> {
        let profiles = self.total_profiles();
        if profiles.len() == 1 {
            Some(GradedDims::from_vec(&profiles[0]))
        } else {
            None
        }
    }
}

fn middle_label(i: i64) -> String {
    format!("H^{}(Q,S)+A^{}", i - 3, i - 2)
}

/// Builds the bounded template from the three graded families. `None`
/// entries of `total` are unknown slots to solve for.
fn build_template(
    rel: &GradedDims,
    anti: &GradedDims,
    orbit: &GradedDims,
    degree_bound: usize,
    known_total: &BTreeMap<usize, usize>,
) -> Result<(ExactSequenceTemplate, Vec<(usize, usize)>), GysinError> {
    let n = degree_bound as i64;
    let at = |g: &GradedDims, degree: i64| -> usize {
        if degree < 0 {
            0
        } else {
            g.get(degree as usize)
        }
    };
    let mut slots = Vec::new();
    let mut total_slots = Vec::new();
    for i in -1..=n + 1 {
        let total_dim = if !(0..=n).contains(&i) {
            SlotDim::Known(0)
        } else {
            match known_total.get(&(i as usize)) {
                Some(&d) => SlotDim::Known(d),
                None => SlotDim::Unknown,
            }
        };
        if (0..=n).contains(&i) {
            total_slots.push((i as usize, slots.len()));
        }
        slots.push(Slot {
            label: format!("H^{i}(M)"),
            dim: total_dim,
            degree: Some(i),
        });
        slots.push(Slot {
            label: middle_label(i),
            dim: SlotDim::Known(at(rel, i - 3) + at(anti, i - 2)),
            degree: Some(i),
        });
        slots.push(Slot {
            label: format!("H^{}(Q)", i + 1),
            dim: SlotDim::Known(at(orbit, i + 1)),
            degree: Some(i + 1),
        });
    }
    let template = ExactSequenceTemplate::from_slots(slots)?;
    Ok((template, total_slots))
}

/// Assembles the full sequence, solves it, and reports the second-page rows
/// and the duality obstruction.
pub fn assemble(g: &GysinInput) -> Result<GysinReport, GysinError> {
    let rel = relative_cohomology(&g.orbit_pair).dims;
    let anti = antisym_of_fixed_set(&g.fixed_set, &g.j_involution)?;
    let orbit = cohomology(g.orbit_pair.total()).dims;

    let (template, total_slots) =
        build_template(&rel, &anti, &orbit, g.degree_bound, &g.known_total)?;
    let solve = solve_dims(&template)?;

    let mut middle_dims = GradedDims::new();
    for i in 0..=(g.degree_bound as i64 + 1) {
        let r = if i >= 3 { rel.get((i - 3) as usize) } else { 0 };
        let a = if i >= 2 { anti.get((i - 2) as usize) } else { 0 };
        middle_dims.set(i as usize, r + a);
    }

    let duality_obstructed = !anti.is_zero();
    Ok(GysinReport {
        template,
        middle_dims,
        solve,
        e2_rows: [orbit, GradedDims::new(), anti, rel],
        duality_obstructed,
        total_slots,
    })
}

/// The four second-page rows of the spectral sequence of the action, all
/// unshifted: q=0 is the orbit-space cohomology, q=1 vanishes, q=2 is the
/// antisymmetric part of the fixed-set cohomology, q=3 the relative
/// cohomology of the orbit pair.
pub fn e2_rows(g: &GysinInput) -> Result<[GradedDims; 4], GysinError> {
    let rel = relative_cohomology(&g.orbit_pair).dims;
    let anti = antisym_of_fixed_set(&g.fixed_set, &g.j_involution)?;
    let orbit = cohomology(g.orbit_pair.total()).dims;
    Ok([orbit, GradedDims::new(), anti, rel])
}

/// Whether the exotic term obstructs second-page duality, together with a
/// sentence naming the degrees where it is nonzero.
pub fn duality_report(g: &GysinInput) -> Result<(bool, String), GysinError> {
    let anti = antisym_of_fixed_set(&g.fixed_set, &g.j_involution)?;
    if anti.is_zero() {
        Ok((false, "exotic term vanishes in every degree".to_string()))
    } else {
        let degrees: Vec<String> = anti.iter().map(|(k, _)| k.to_string()).collect();
        Ok((
            true,
            format!(
                "exotic term nonzero in fixed-set degrees: {}",
                degrees.join(", ")
            ),
        ))
    }
}

/// The sequence with no exotic contribution: the middle term is the
/// relative cohomology of the orbit pair alone. This is the shape the
/// sequence degenerates to whenever the involution acts trivially on the
/// fixed set (semi-free actions on one hand, actions without circle-only
/// isotropy on the other).
pub fn degenerate_template(
    orbit_pair: &SimplicialPair,
    degree_bound: usize,
    known_total: &BTreeMap<usize, usize>,
) -> Result<ExactSequenceTemplate, GysinError> {
    let rel = relative_cohomology(orbit_pair).dims;
    let orbit = cohomology(orbit_pair.total()).dims;
    let (template, _) = build_template(
        &rel,
        &GradedDims::new(),
        &orbit,
        degree_bound,
        known_total,
    )?;
    Ok(template)
}

pub const FIXTURE_NAMES: [&str; 7] = [
    "cp2_sum",
    "s3_x_s1",
    "s2_x_s1_trivial",
    "s2_x_s1_twisted",
    "rp2_x_s1",
    "ineffective_s1",
    "hopf_like_free",
];

/// One-line description of a fixture's documented outcome.
pub fn fixture_note(name: &str) -> Result<&'static str, GysinError> {
    match name {
        "cp2_sum" => Ok("solves to P_M = 1 + 2t^2 + t^4; the exotic term is 2-dimensional"),
        "s3_x_s1" => Ok("solves to P_M = 1 + t + t^3 + t^4"),
        "s2_x_s1_trivial" => Ok("solves to P_M = 1 + t + t^2 + t^3"),
        "s2_x_s1_twisted" => Ok("solves to P_M = 1 + t"),
        "rp2_x_s1" => Ok("solves to P_M = 1 + t"),
        "ineffective_s1" => Ok("solves to P_M = 1 + t"),
        "hopf_like_free" => {
            Ok("underdetermined: two feasible profiles, 1 + t^7 and 1 + t^3 + t^4 + t^7")
        }
        _ => Err(GysinError::UnknownFixture {
            name: name.to_string(),
        }),
    }
}

/// Canned orbit data reproducing the worked examples.
pub fn fixture(name: &str) -> Result<GysinInput, GysinError> {
    use crate::complexes::models;

    let circle_pair_on_itself = || {
        let c = models::circle(3);
        SimplicialPair::new(c.clone(), c).expect("a complex is a subcomplex of itself")
    };
    let empty_fixed = || {
        let empty = SimplicialComplex::empty();
        (empty.clone(), Involution::trivial(empty))
    };

    match name {
        // connected sum of two complex projective planes: orbit space an
        // interval with singular endpoints, fixed set the four poles of the
        // two end spheres, swapped in pairs by the involution
        "cp2_sum" => {
            let four = models::discrete_points(4);
            let swap = Involution::new(four.clone(), &[(0, 1), (2, 3)])
                .expect("pair swaps on points are simplicial");
            GysinInput::new(
                models::interval_pair(),
                four,
                swap,
                4,
                BTreeMap::from([(0, 1), (4, 1)]),
            )
        }
        // free action with circle orbit space (3-dimensional orbits)
        "s3_x_s1" => {
            let (fixed, inv) = empty_fixed();
            let circle = models::circle(3);
            let pair = SimplicialPair::new(circle, SimplicialComplex::empty())
                .expect("empty subcomplex");
            GysinInput::new(pair, fixed, inv, 4, BTreeMap::from([(0, 1), (4, 1)]))
        }
        // 2-sphere orbits, trivial double cover: the fixed set is two
        // disjoint circles swapped by the involution
        "s2_x_s1_trivial" => {
            let circle = models::circle(3);
            let fixed = circle.disjoint_union(&circle);
            let swap = Involution::new(fixed.clone(), &[(0, 3), (1, 4), (2, 5)])
                .expect("swapping the copies is simplicial");
            GysinInput::new(
                circle_pair_on_itself(),
                fixed,
                swap,
                3,
                BTreeMap::from([(0, 1), (3, 1)]),
            )
        }
        // 2-sphere orbits, nontrivial double cover: the fixed set is one
        // hexagon circle with the half-rotation as deck involution
        "s2_x_s1_twisted" => {
            let hexagon = models::circle(6);
            let rotation = Involution::new(hexagon.clone(), &[(0, 3), (1, 4), (2, 5)])
                .expect("the half-rotation is simplicial");
            GysinInput::new(
                circle_pair_on_itself(),
                hexagon,
                rotation,
                3,
                BTreeMap::from([(0, 1)]),
            )
        }
        // projective-plane orbits: the fixed set is a circle with trivial
        // involution
        "rp2_x_s1" => {
            let fixed = models::circle(3);
            let inv = Involution::trivial(fixed.clone());
            GysinInput::new(
                circle_pair_on_itself(),
                fixed,
                inv,
                3,
                BTreeMap::from([(0, 1)]),
            )
        }
        // point orbits: the circle itself with an ineffective action
        "ineffective_s1" => {
            let fixed = models::circle(3);
            let inv = Involution::trivial(fixed.clone());
            GysinInput::new(
                circle_pair_on_itself(),
                fixed,
                inv,
                1,
                BTreeMap::from([(0, 1), (1, 1)]),
            )
        }
        // free action over the 4-sphere: deliberately underdetermined, the
        // rank of the connecting map decides between the two profiles
        "hopf_like_free" => {
            let (fixed, inv) = empty_fixed();
            let pair = SimplicialPair::new(models::sphere(4), SimplicialComplex::empty())
                .expect("empty subcomplex");
            GysinInput::new(pair, fixed, inv, 7, BTreeMap::new())
        }
        _ => Err(GysinError::UnknownFixture {
            name: name.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::models;
    use crate::lesolve::alternating_sum_check;

    #[test]
    fn cp2_sum_solves_to_its_documented_profile() {
        let report = assemble(&fixture("cp2_sum").unwrap()).unwrap();
        assert!(report.solve.consistent);
        assert_eq!(
            report.unique_total(),
            Some(GradedDims::from_vec(&[1, 0, 2, 0, 1]))
        );
        assert!(report.duality_obstructed);
        // the exotic term sits in fixed-set degree 0 with dimension 2
        assert_eq!(report.e2_rows[2], GradedDims::from_vec(&[2]));
    }

    #[test]
    fn cp2_sum_middle_dims_decompose() {
        let g = fixture("cp2_sum").unwrap();
        let report = assemble(&g).unwrap();
        let rel = relative_cohomology(&g.orbit_pair).dims;
        let anti = antisym_of_fixed_set(&g.fixed_set, &g.j_involution).unwrap();
        for i in 0..=(g.degree_bound + 1) {
            let r = if i >= 3 { rel.get(i - 3) } else { 0 };
            let a = if i >= 2 { anti.get(i - 2) } else { 0 };
            assert_eq!(report.middle_dims.get(i), r + a, "degree {i}");
        }
        assert_eq!(report.middle_dims, GradedDims::from_vec(&[0, 0, 2, 0, 1]));
    }

    #[test]
    fn e2_rows_of_cp2_sum() {
        let rows = e2_rows(&fixture("cp2_sum").unwrap()).unwrap();
        assert_eq!(rows[0], GradedDims::from_vec(&[1]));
        assert!(rows[1].is_zero());
        assert_eq!(rows[2], GradedDims::from_vec(&[2]));
        assert_eq!(rows[3], GradedDims::from_vec(&[0, 1]));
    }

    #[test]
    fn free_circle_orbit_fixture() {
        let report = assemble(&fixture("s3_x_s1").unwrap()).unwrap();
        assert_eq!(
            report.unique_total(),
            Some(GradedDims::from_vec(&[1, 1, 0, 1, 1]))
        );
        assert!(!report.duality_obstructed);
        // with no singular set, the relative row equals the orbit row
        assert_eq!(report.e2_rows[3], report.e2_rows[0]);
        // the middle and orbit rows never overlap in degree here, so the
        // solution stays unique even with nothing pinned
        let mut unpinned = fixture("s3_x_s1").unwrap();
        unpinned.known_total.clear();
        let report = assemble(&unpinned).unwrap();
        assert_eq!(
            report.unique_total(),
            Some(GradedDims::from_vec(&[1, 1, 0, 1, 1]))
        );
    }

    #[test]
    fn sphere_orbit_fixtures() {
        let trivial = assemble(&fixture("s2_x_s1_trivial").unwrap()).unwrap();
        assert_eq!(
            trivial.unique_total(),
            Some(GradedDims::from_vec(&[1, 1, 1, 1]))
        );
        let twisted = assemble(&fixture("s2_x_s1_twisted").unwrap()).unwrap();
        assert_eq!(
            twisted.unique_total(),
            Some(GradedDims::from_vec(&[1, 1, 0, 0]))
        );
        assert!(!twisted.duality_obstructed);
    }

    #[test]
    fn projective_and_ineffective_fixtures_share_outcome() {
        for name in ["rp2_x_s1", "ineffective_s1"] {
            let report = assemble(&fixture(name).unwrap()).unwrap();
            let solved = report.unique_total().unwrap();
            assert_eq!(solved.poincare_polynomial(), "1 + t", "{name}");
        }
    }

    #[test]
    fn hopf_like_fixture_is_honestly_underdetermined() {
        let report = assemble(&fixture("hopf_like_free").unwrap()).unwrap();
        assert!(report.solve.consistent);
        assert_eq!(report.unique_total(), None);
        let profiles = report.total_profiles();
        assert_eq!(
            profiles,
            vec![
                vec![1, 0, 0, 0, 0, 0, 0, 1],
                vec![1, 0, 0, 1, 1, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn degenerate_action_forces_orbit_isomorphisms() {
        // empty fixed set, singular set the whole orbit space: every middle
        // slot vanishes and H^{i+1}(Q) = H^{i+1}(M) is forced
        let q = models::sphere(2);
        let pair = SimplicialPair::new(q.clone(), q).unwrap();
        let empty = SimplicialComplex::empty();
        let g = GysinInput::new(
            pair,
            empty.clone(),
            Involution::trivial(empty),
            3,
            BTreeMap::new(),
        )
        .unwrap();
        let report = assemble(&g).unwrap();
        assert!(report.middle_dims.is_zero());
        assert_eq!(
            report.unique_total(),
            Some(GradedDims::from_vec(&[1, 0, 1, 0]))
        );
    }

    #[test]
    fn trivial_involution_matches_degenerate_template() {
        for name in ["rp2_x_s1", "ineffective_s1"] {
            let g = fixture(name).unwrap();
            assert!(g.j_involution.is_trivial());
            let report = assemble(&g).unwrap();
            let degenerate =
                degenerate_template(&g.orbit_pair, g.degree_bound, &g.known_total).unwrap();
            assert_eq!(report.template, degenerate, "{name}");
        }
    }

    #[test]
    fn solved_fixtures_pass_alternating_sum() {
        for name in FIXTURE_NAMES {
            let report = assemble(&fixture(name).unwrap()).unwrap();
            for profile in &report.solve.profiles {
                let mut filled = report.template.clone();
                for (idx, &d) in profile.iter().enumerate() {
                    filled = filled.with_dim(idx, SlotDim::Known(d));
                }
                assert!(alternating_sum_check(&filled).unwrap(), "{name}");
            }
            assert!(!report.solve.profiles.is_empty(), "{name}");
        }
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(matches!(
            fixture("nope"),
            Err(GysinError::UnknownFixture { .. })
        ));
        assert!(fixture_note("nope").is_err());
    }

    #[test]
    fn carrier_mismatch_is_rejected() {
        let g = GysinInput::new(
            models::interval_pair(),
            models::discrete_points(4),
            Involution::trivial(models::discrete_points(3)),
            4,
            BTreeMap::new(),
        );
        assert!(matches!(g, Err(GysinError::CarrierMismatch)));
    }

    #[test]
    fn duality_reports_name_degrees() {
        let (obstructed, text) = duality_report(&fixture("cp2_sum").unwrap()).unwrap();
        assert!(obstructed);
        assert!(text.contains('0'), "{text}");
        let (obstructed, _) = duality_report(&fixture("s2_x_s1_twisted").unwrap()).unwrap();
        assert!(!obstructed);
    }

    #[test]
    fn orbit_space_above_the_degree_bound_is_rejected() {
        // a 2-sphere orbit space cannot belong to a 0-dimensional manifold:
        // the sequence would end on a nonzero term
        let q = models::sphere(2);
        let pair = SimplicialPair::new(q, SimplicialComplex::empty()).unwrap();
        let empty = SimplicialComplex::empty();
        let g = GysinInput::new(pair, empty.clone(), Involution::trivial(empty), 0, BTreeMap::new())
            .unwrap();
        assert!(matches!(assemble(&g), Err(GysinError::Template(_))));
    }

    #[test]
    fn inconsistent_pinned_dims_reported_not_thrown() {
        let mut g = fixture("cp2_sum").unwrap();
        g.known_total.insert(2, 5); // contradicts the sequence
        let report = assemble(&g).unwrap();
        assert!(!report.solve.consistent);
        assert!(report.total_profiles().is_empty());
    }
}
