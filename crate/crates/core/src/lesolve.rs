//! Exact-sequence engine.
//!
//! A bounded sequence of finite-dimensional spaces is described by an
//! [`ExactSequenceTemplate`]: an ordered list of slots whose dimensions are
//! known or unknown, optionally with explicit matrices for the maps. Two
//! things can be done with a template:
//!
//! * [`check_exact`] verifies exactness position by position when all maps
//!   are explicit;
//! * [`solve_dims`] treats the template as a system of constraints on
//!   unknown dimensions. Exactness of `... -> A -> B -> C -> ...` forces
//!   `dim B = rank(A -> B) + rank(B -> C)`, so introducing one rank
//!   variable per arrow and enumerating the feasible nonnegative integer
//!   assignments yields every dimension profile compatible with exactness.

use crate::exactla::RationalMatrix;
use std::collections::BTreeSet;
use std::fmt;

/// Dimension of a slot: a known nonnegative integer or a value to solve for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotDim {
    Known(usize),
    Unknown,
}

impl SlotDim {
    pub fn known(self) -> Option<usize> {
        match self {
            SlotDim::Known(d) => Some(d),
            SlotDim::Unknown => None,
        }
    }
}

impl fmt::Display for SlotDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotDim::Known(d) => write!(f, "{d}"),
            SlotDim::Unknown => write!(f, "?"),
        }
    }
}

/// One term of the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub label: String,
    pub dim: SlotDim,
    /// Cohomological degree of the term, when there is one.
    pub degree: Option<i64>,
}

impl Slot {
    pub fn known(label: impl Into<String>, dim: usize) -> Self {
        Slot {
            label: label.into(),
            dim: SlotDim::Known(dim),
            degree: None,
        }
    }

    pub fn unknown(label: impl Into<String>) -> Self {
        Slot {
            label: label.into(),
            dim: SlotDim::Unknown,
            degree: None,
        }
    }

    pub fn with_degree(mut self, degree: i64) -> Self {
        self.degree = Some(degree);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LesolveError {
    /// Fewer than two slots; a bounded sequence needs zero slots at both ends.
    TooFewSlots,
    /// The first or last slot is not a known zero.
    BoundaryNotZero { position: usize },
    /// Explicit maps have the wrong count or the wrong shapes.
    ShapeMismatch { arrow: usize, detail: String },
    /// The requested operation needs every dimension to be known.
    UnknownDim { position: usize },
    /// The requested operation needs explicit maps.
    MissingMaps,
    /// Two consecutive unknown slots: the feasible set is infinite, so the
    /// solver refuses rather than enumerate forever.
    UnboundedUnknowns { position: usize },
}

impl fmt::Display for LesolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LesolveError::TooFewSlots => {
                write!(f, "a template needs at least the two zero end slots")
            }
            LesolveError::BoundaryNotZero { position } => {
                write!(f, "slot {position} is a sequence end but is not a known 0")
            }
            LesolveError::ShapeMismatch { arrow, detail } => {
                write!(f, "map {arrow} has mismatched shape: {detail}")
            }
            LesolveError::UnknownDim { position } => {
                write!(f, "slot {position} has unknown dimension")
            }
            LesolveError::MissingMaps => write!(f, "template carries no explicit maps"),
            LesolveError::UnboundedUnknowns { position } => write!(
                f,
                "slots {position} and {} are both unknown; the feasible set is infinite",
                position + 1
            ),
        }
    }
}

impl std::error::Error for LesolveError {}

/// An ordered, bounded sequence of slots claimed to be exact.
///
/// Both ends must be known zero slots. When `maps` are present there is one
/// matrix per consecutive pair of slots; the matrix for `slot i -> slot i+1`
/// has `dim(slot i+1)` rows and `dim(slot i)` columns.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSequenceTemplate {
    slots: Vec<Slot>,
    maps: Option<Vec<RationalMatrix>>,
}

impl ExactSequenceTemplate {
    pub fn from_slots(slots: Vec<Slot>) -> Result<Self, LesolveError> {
        if slots.len() < 2 {
            return Err(LesolveError::TooFewSlots);
        }
        for position in [0, slots.len() - 1] {
            if slots[position].dim != SlotDim::Known(0) {
                return Err(LesolveError::BoundaryNotZero { position });
            }
        }
        Ok(ExactSequenceTemplate { slots, maps: None })
    }

    pub fn with_maps(slots: Vec<Slot>, maps: Vec<RationalMatrix>) -> Result<Self, LesolveError> {
        let t = Self::from_slots(slots)?;
        if maps.len() + 1 != t.slots.len() {
            return Err(LesolveError::ShapeMismatch {
                arrow: maps.len(),
                detail: format!(
                    "{} slots need {} maps, got {}",
                    t.slots.len(),
                    t.slots.len() - 1,
                    maps.len()
                ),
            });
        }
        for (i, m) in maps.iter().enumerate() {
            let src = t.slots[i]
                .dim
                .known()
                .ok_or(LesolveError::UnknownDim { position: i })?;
            let dst = t.slots[i + 1]
                .dim
                .known()
                .ok_or(LesolveError::UnknownDim { position: i + 1 })?;
            if m.rows() != dst || m.cols() != src {
                return Err(LesolveError::ShapeMismatch {
                    arrow: i,
                    detail: format!(
                        "expected {}x{} between dims {} and {}, got {}x{}",
                        dst,
                        src,
                        src,
                        dst,
                        m.rows(),
                        m.cols()
                    ),
                });
            }
        }
        Ok(ExactSequenceTemplate {
            slots: t.slots,
            maps: Some(maps),
        })
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn maps(&self) -> Option<&[RationalMatrix]> {
        self.maps.as_deref()
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Copy of the template with one slot's dimension replaced. Maps are
    /// dropped since they may no longer match.
    pub fn with_dim(&self, position: usize, dim: SlotDim) -> Self {
        let mut slots = self.slots.clone();
        slots[position].dim = dim;
        ExactSequenceTemplate { slots, maps: None }
    }

    /// The slot dimensions, in order.
    pub fn dims(&self) -> Vec<SlotDim> {
        self.slots.iter().map(|s| s.dim).collect()
    }
}

/// Verdict of [`check_exact`] at one interior position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionVerdict {
    pub position: usize,
    pub label: String,
    pub exact: bool,
}

/// Checks exactness at every interior position of a template with explicit
/// maps: the composite of consecutive maps must vanish and the kernel of the
/// outgoing map must already lie in the image of the incoming one.
pub fn check_exact(t: &ExactSequenceTemplate) -> Result<Vec<PositionVerdict>, LesolveError> {
    let maps = t.maps().ok_or(LesolveError::MissingMaps)?;
    let mut verdicts = Vec::new();
    for pos in 1..t.len() - 1 {
        let incoming = &maps[pos - 1];
        let outgoing = &maps[pos];
        let composite_zero = outgoing
            .mul(incoming)
            .map_err(|_| LesolveError::ShapeMismatch {
                arrow: pos,
                detail: "composite undefined".into(),
            })?
            .is_zero();
        let kernel = outgoing.kernel_basis();
        let stacked = incoming
            .augment(&RationalMatrix::from_columns(incoming.rows(), kernel))
            .expect("kernel vectors live in the middle space");
        let kernel_covered = stacked.rank() == incoming.rank();
        verdicts.push(PositionVerdict {
            position: pos,
            label: t.slots[pos].label.clone(),
            exact: composite_zero && kernel_covered,
        });
    }
    Ok(verdicts)
}

/// Report of [`solve_dims`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// False when no rank assignment satisfies the constraints; in that case
    /// every feasible set below is empty.
    pub consistent: bool,
    /// Feasible dimensions per slot (a singleton for a known slot).
    pub slot_values: Vec<BTreeSet<usize>>,
    /// Feasible (min, max) range of each arrow's rank; empty when
    /// inconsistent.
    pub rank_ranges: Vec<(usize, usize)>,
    /// Every feasible full dimension profile (one entry per slot), in
    /// lexicographic order.
    pub profiles: Vec<Vec<usize>>,
}

impl SolveReport {
    /// The unique feasible dimension of a slot, if there is exactly one.
    pub fn unique_value(&self, position: usize) -> Option<usize> {
        let set = &self.slot_values[position];
        if set.len() == 1 {
            set.iter().next().copied()
        } else {
            None
        }
    }
}

/// Solves a dims-only template for its unknown dimensions.
///
/// One rank variable `r_i >= 0` is attached to each arrow; exactness at slot
/// `i` reads `dim_i = r_{i-1} + r_i` (with virtual zero ranks beyond both
/// ends). Known dimensions force ranks, unknown dimensions branch over the
/// finitely many ranks allowed by the next known slot. The enumeration is
/// exhaustive, so the reported feasible sets are exact.
pub fn solve_dims(t: &ExactSequenceTemplate) -> Result<SolveReport, LesolveError> {
    let dims: Vec<Option<usize>> = t.slots.iter().map(|s| s.dim.known()).collect();
    let n = dims.len();
    for i in 0..n - 1 {
        if dims[i].is_none() && dims[i + 1].is_none() {
            return Err(LesolveError::UnboundedUnknowns { position: i });
        }
    }

    // Depth-first enumeration over slots; state is the rank of the arrow
    // entering the current slot.
    let mut solutions: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (dims, ranks)
    let mut ranks: Vec<usize> = Vec::with_capacity(n.saturating_sub(1));
    let mut filled: Vec<usize> = Vec::with_capacity(n);

    fn descend(
        dims: &[Option<usize>],
        slot: usize,
        rank_in: usize,
        ranks: &mut Vec<usize>,
        filled: &mut Vec<usize>,
        solutions: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        let n = dims.len();
        if slot == n - 1 {
            // Last slot is a known 0 and the virtual outgoing rank is 0,
            // so the incoming rank must vanish.
            if rank_in == 0 {
                filled.push(0);
                solutions.push((filled.clone(), ranks.clone()));
                filled.pop();
            }
            return;
        }
        match dims[slot] {
            Some(d) => {
                if d < rank_in {
                    return;
                }
                let r_out = d - rank_in;
                ranks.push(r_out);
                filled.push(d);
                descend(dims, slot + 1, r_out, ranks, filled, solutions);
                filled.pop();
                ranks.pop();
            }
            None => {
                // Bounded by the next slot, which is known (checked above).
                let cap = dims[slot + 1].expect("no two adjacent unknowns");
                for r_out in 0..=cap {
                    ranks.push(r_out);
                    filled.push(rank_in + r_out);
                    descend(dims, slot + 1, r_out, ranks, filled, solutions);
                    filled.pop();
                    ranks.pop();
                }
            }
        }
    }

    descend(&dims, 0, 0, &mut ranks, &mut filled, &mut solutions);

    let consistent = !solutions.is_empty();
    let mut slot_values: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut rank_ranges: Vec<(usize, usize)> = Vec::new();
    let mut profiles: Vec<Vec<usize>> = Vec::new();
    if consistent {
        rank_ranges = vec![(usize::MAX, 0); n - 1];
        for (profile, rks) in &solutions {
            for (i, d) in profile.iter().enumerate() {
                slot_values[i].insert(*d);
            }
            for (i, r) in rks.iter().enumerate() {
                rank_ranges[i].0 = rank_ranges[i].0.min(*r);
                rank_ranges[i].1 = rank_ranges[i].1.max(*r);
            }
        }
        profiles = solutions.into_iter().map(|(p, _)| p).collect();
        profiles.sort();
        profiles.dedup();
    }
    Ok(SolveReport {
        consistent,
        slot_values,
        rank_ranges,
        profiles,
    })
}

/// Necessary condition for exactness of a bounded sequence: the alternating
/// sum of the dimensions vanishes.
pub fn alternating_sum_check(t: &ExactSequenceTemplate) -> Result<bool, LesolveError> {
    let mut sum: i64 = 0;
    for (i, slot) in t.slots.iter().enumerate() {
        let d = slot
            .dim
            .known()
            .ok_or(LesolveError::UnknownDim { position: i })?;
        let signed = d as i64;
        sum += if i % 2 == 0 { signed } else { -signed };
    }
    Ok(sum == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalMatrix;

    fn zero_slot() -> Slot {
        Slot::known("0", 0)
    }

    #[test]
    fn identity_sequence_is_exact_everywhere() {
        // 0 -> V -> V -> 0 with the identity in the middle
        let slots = vec![zero_slot(), Slot::known("V", 2), Slot::known("V", 2), zero_slot()];
        let maps = vec![
            RationalMatrix::zeros(2, 0),
            RationalMatrix::identity(2),
            RationalMatrix::zeros(0, 2),
        ];
        let t = ExactSequenceTemplate::with_maps(slots, maps).unwrap();
        let verdicts = check_exact(&t).unwrap();
        assert_eq!(verdicts.len(), 2);
        assert!(verdicts.iter().all(|v| v.exact));
    }

    #[test]
    fn lone_nonzero_slot_is_inexact() {
        let slots = vec![zero_slot(), Slot::known("V", 1), zero_slot()];
        let maps = vec![RationalMatrix::zeros(1, 0), RationalMatrix::zeros(0, 1)];
        let t = ExactSequenceTemplate::with_maps(slots, maps).unwrap();
        let verdicts = check_exact(&t).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert!(!verdicts[0].exact);
    }

    #[test]
    fn solve_all_known_identity_sequence() {
        let slots = vec![zero_slot(), Slot::known("V", 3), Slot::known("V", 3), zero_slot()];
        let t = ExactSequenceTemplate::from_slots(slots).unwrap();
        let report = solve_dims(&t).unwrap();
        assert!(report.consistent);
        assert_eq!(report.profiles, vec![vec![0, 3, 3, 0]]);
        assert_eq!(report.rank_ranges, vec![(0, 0), (3, 3), (0, 0)]);
    }

    #[test]
    fn solve_all_zero_sequence() {
        let slots = vec![zero_slot(); 5];
        let t = ExactSequenceTemplate::from_slots(slots).unwrap();
        let report = solve_dims(&t).unwrap();
        assert!(report.consistent);
        assert_eq!(report.profiles, vec![vec![0; 5]]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        // 0 -> V -> 0 with dim V = 1 cannot be exact
        let slots = vec![zero_slot(), Slot::known("V", 1), zero_slot()];
        let t = ExactSequenceTemplate::from_slots(slots).unwrap();
        let report = solve_dims(&t).unwrap();
        assert!(!report.consistent);
        assert!(report.slot_values.iter().all(BTreeSet::is_empty));
        assert!(report.profiles.is_empty());
    }

    #[test]
    fn solve_unknown_middle() {
        // 0 -> A -> ? -> C -> 0 forces dim = a + c only when the outer maps
        // are forced; here 0 -> 2 -> ? -> 1 -> 0 gives ? = 3.
        let slots = vec![
            zero_slot(),
            Slot::known("A", 2),
            Slot::unknown("B"),
            Slot::known("C", 1),
            zero_slot(),
        ];
        let t = ExactSequenceTemplate::from_slots(slots).unwrap();
        let report = solve_dims(&t).unwrap();
        assert!(report.consistent);
        assert_eq!(report.unique_value(2), Some(3));
    }

    #[test]
    fn adjacent_unknowns_are_rejected() {
        let slots = vec![zero_slot(), Slot::unknown("A"), Slot::unknown("B"), zero_slot()];
        let t = ExactSequenceTemplate::from_slots(slots).unwrap();
        assert!(matches!(
            solve_dims(&t),
            Err(LesolveError::UnboundedUnknowns { position: 1 })
        ));
    }

    #[test]
    fn boundary_must_be_zero() {
        let slots = vec![Slot::known("V", 1), zero_slot()];
        assert!(matches!(
            ExactSequenceTemplate::from_slots(slots),
            Err(LesolveError::BoundaryNotZero { position: 0 })
        ));
    }

    #[test]
    fn alternating_sum_basic() {
        let ok = ExactSequenceTemplate::from_slots(vec![
            zero_slot(),
            Slot::known("V", 2),
            Slot::known("V", 2),
            zero_slot(),
        ])
        .unwrap();
        assert!(alternating_sum_check(&ok).unwrap());
        let bad =
            ExactSequenceTemplate::from_slots(vec![zero_slot(), Slot::known("R", 1), zero_slot()])
                .unwrap();
        assert!(!alternating_sum_check(&bad).unwrap());
    }

    #[test]
    fn check_exact_requires_maps() {
        let t = ExactSequenceTemplate::from_slots(vec![zero_slot(), zero_slot()]).unwrap();
        assert!(matches!(check_exact(&t), Err(LesolveError::MissingMaps)));
    }
}
