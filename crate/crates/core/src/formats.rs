//! Text file formats consumed by the command-line tool.
//!
//! All formats are line based. Blank lines and lines starting with `#` are
//! ignored everywhere.
//!
//! * complex: one simplex per line as space-separated vertex integers; the
//!   listed simplices generate the complex (faces are added).
//! * pair: a complex, then a line `---`, then the subcomplex's maximal
//!   simplices. A missing `---` block means an empty subcomplex.
//! * involution: a complex, then a line `===`, then swap lines `a b`
//!   (unlisted vertices are fixed).
//! * sequence template: one slot per line as `label dim` with `dim` an
//!   integer or `?`; a line that is exactly `0` is a zero sentinel, and the
//!   first and last slots must be such sentinels.
//! * orbit data: five sections separated by `---` lines, in order: orbit
//!   complex, singular subcomplex, fixed-set complex, involution swap
//!   lines, and a header with `n=<degree bound>` plus optional `H<k>=<d>`
//!   lines pinning dimensions of the total space.

use crate::complexes::{SimplicialComplex, SimplicialPair};
use crate::equivariant::Involution;
use crate::gysin::GysinInput;
use crate::lesolve::{ExactSequenceTemplate, Slot, SlotDim};
use std::collections::BTreeMap;
use std::fmt;

/// A parse failure, naming the offending line (1-based; 0 for whole-file
/// problems).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Lines with content: (1-based line number, trimmed text).
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn split_sections<'a>(
    lines: &[(usize, &'a str)],
    separator: &str,
) -> Vec<Vec<(usize, &'a str)>> {
    let mut sections = vec![Vec::new()];
    for &(n, l) in lines {
        if l == separator {
            sections.push(Vec::new());
        } else {
            sections.last_mut().expect("nonempty").push((n, l));
        }
    }
    sections
}

fn parse_simplex_line(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                ParseError::new(line_no, format!("expected a vertex integer, found \"{tok}\""))
            })
        })
        .collect()
}

fn complex_from_lines(lines: &[(usize, &str)]) -> Result<SimplicialComplex, ParseError> {
    let mut maximal = Vec::new();
    for &(n, l) in lines {
        let simplex = parse_simplex_line(n, l)?;
        SimplicialComplex::from_maximal(vec![simplex.clone()])
            .map_err(|e| ParseError::new(n, e.to_string()))?;
        maximal.push(simplex);
    }
    SimplicialComplex::from_maximal(maximal).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses a complex file (maximal simplices, closed under faces).
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let lines = content_lines(text);
    if lines.iter().any(|&(_, l)| l == "---") {
        let (n, _) = lines.iter().find(|&&(_, l)| l == "---").unwrap();
        return Err(ParseError::new(
            *n,
            "a complex file has a single block; use the pair format for `---`",
        ));
    }
    complex_from_lines(&lines)
}

/// Parses a pair file: total complex, `---`, subcomplex.
pub fn parse_pair(text: &str) -> Result<SimplicialPair, ParseError> {
    let lines = content_lines(text);
    let sections = split_sections(&lines, "---");
    if sections.len() > 2 {
        return Err(ParseError::new(0, "a pair file has at most one `---` separator"));
    }
    let total = complex_from_lines(&sections[0])?;
    let sub = match sections.get(1) {
        None => SimplicialComplex::empty(),
        Some(lines) => {
            // validate line by line so subcomplex violations name their line
            for &(n, l) in lines {
                let simplex = parse_simplex_line(n, l)?;
                let mut sorted = simplex.clone();
                sorted.sort_unstable();
                if !total.contains(&sorted) {
                    return Err(ParseError::new(
                        n,
                        format!("simplex {sorted:?} of the subcomplex is not in the total complex"),
                    ));
                }
            }
            complex_from_lines(lines)?
        }
    };
    SimplicialPair::new(total, sub).map_err(|e| ParseError::new(0, e.to_string()))
}

fn swaps_from_lines(lines: &[(usize, &str)]) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut swaps = Vec::new();
    for &(n, l) in lines {
        let verts = parse_simplex_line(n, l)?;
        if verts.len() != 2 {
            return Err(ParseError::new(
                n,
                "an involution line names exactly two vertices `a b`",
            ));
        }
        swaps.push((verts[0], verts[1]));
    }
    Ok(swaps)
}

/// Parses an involution file: complex, `===`, swap lines.
pub fn parse_involution(text: &str) -> Result<Involution, ParseError> {
    let lines = content_lines(text);
    let sections = split_sections(&lines, "===");
    if sections.len() > 2 {
        return Err(ParseError::new(0, "an involution file has one `===` separator"));
    }
    let carrier = complex_from_lines(&sections[0])?;
    let swaps = match sections.get(1) {
        None => Vec::new(),
        Some(lines) => swaps_from_lines(lines)?,
    };
    let separator_line = lines
        .iter()
        .find(|&&(_, l)| l == "===")
        .map_or(0, |&(n, _)| n);
    Involution::new(carrier, &swaps).map_err(|e| ParseError::new(separator_line, e.to_string()))
}

/// Parses a sequence-template file.
pub fn parse_template(text: &str) -> Result<ExactSequenceTemplate, ParseError> {
    let lines = content_lines(text);
    if lines.len() < 2 {
        return Err(ParseError::new(
            0,
            "a template needs at least the two `0` sentinel lines",
        ));
    }
    let mut slots = Vec::new();
    for (pos, &(n, l)) in lines.iter().enumerate() {
        let is_end = pos == 0 || pos == lines.len() - 1;
        if l == "0" {
            slots.push(Slot::known("0", 0));
            continue;
        }
        if is_end {
            return Err(ParseError::new(
                n,
                "the first and last lines must be `0` sentinels",
            ));
        }
        let mut parts = l.split_whitespace().collect::<Vec<_>>();
        if parts.len() < 2 {
            return Err(ParseError::new(n, "expected `label dim` with dim an integer or `?`"));
        }
        let dim_token = parts.pop().unwrap();
        let label = parts.join(" ");
        let dim = if dim_token == "?" {
            SlotDim::Unknown
        } else {
            match dim_token.parse::<usize>() {
                Ok(d) => SlotDim::Known(d),
                Err(_) => {
                    return Err(ParseError::new(
                        n,
                        format!("dimension must be a nonnegative integer or `?`, found \"{dim_token}\""),
                    ))
                }
            }
        };
        slots.push(Slot {
            label,
            dim,
            degree: None,
        });
    }
    ExactSequenceTemplate::from_slots(slots).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses an orbit-data file into a [`GysinInput`].
pub fn parse_gysin_input(text: &str) -> Result<GysinInput, ParseError> {
    let lines = content_lines(text);
    let sections = split_sections(&lines, "---");
    if sections.len() != 5 {
        return Err(ParseError::new(
            0,
            format!(
                "orbit data has five `---`-separated sections (orbit complex, singular subcomplex, fixed set, involution, header), found {}",
                sections.len()
            ),
        ));
    }
    let orbit_total = complex_from_lines(&sections[0])?;
    let sigma = complex_from_lines(&sections[1])?;
    for &(n, l) in &sections[1] {
        let mut simplex = parse_simplex_line(n, l)?;
        simplex.sort_unstable();
        if !orbit_total.contains(&simplex) {
            return Err(ParseError::new(
                n,
                format!("singular simplex {simplex:?} is not in the orbit complex"),
            ));
        }
    }
    let orbit_pair = SimplicialPair::new(orbit_total, sigma)
        .map_err(|e| ParseError::new(0, e.to_string()))?;
    let fixed_set = complex_from_lines(&sections[2])?;
    let swaps = swaps_from_lines(&sections[3])?;
    let involution_line = sections[3].first().map_or(0, |&(n, _)| n);
    let j_involution = Involution::new(fixed_set.clone(), &swaps)
        .map_err(|e| ParseError::new(involution_line, e.to_string()))?;

    let mut degree_bound: Option<usize> = None;
    let mut known_total = BTreeMap::new();
    for &(n, l) in &sections[4] {
        if let Some(value) = l.strip_prefix("n=") {
            let bound = value.trim().parse::<usize>().map_err(|_| {
                ParseError::new(n, format!("degree bound must be an integer, found \"{value}\""))
            })?;
            if degree_bound.replace(bound).is_some() {
                return Err(ParseError::new(n, "duplicate `n=` header"));
            }
        } else if let Some(rest) = l.strip_prefix('H') {
            let (deg, dim) = rest.split_once('=').ok_or_else(|| {
                ParseError::new(n, "expected `H<k>=<d>` to pin a known dimension")
            })?;
            let deg = deg.trim().parse::<usize>().map_err(|_| {
                ParseError::new(n, format!("bad degree in \"{l}\""))
            })?;
            let dim = dim.trim().parse::<usize>().map_err(|_| {
                ParseError::new(n, format!("bad dimension in \"{l}\""))
            })?;
            known_total.insert(deg, dim);
        } else {
            return Err(ParseError::new(
                n,
                format!("unrecognized header line \"{l}\"; expected `n=<bound>` or `H<k>=<d>`"),
            ));
        }
    }
    let degree_bound = degree_bound
        .ok_or_else(|| ParseError::new(0, "missing `n=<degree bound>` header line"))?;

    GysinInput::new(orbit_pair, fixed_set, j_involution, degree_bound, known_total)
        .map_err(|e| ParseError::new(0, e.to_string()))
}
