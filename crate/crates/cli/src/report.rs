//! Report rendering: every verb produces a plain-text report and a
//! machine-readable JSON document describing the same result.
//!
//! The JSON is always serialized from a `serde_json::Value`, whose object
//! keys are sorted; re-parsing an emitted document and serializing it again
//! reproduces the bytes exactly.

use gysinseq::complexes::{GradedDims, SimplicialComplex};
use gysinseq::equivariant::{split_involution, Involution};
use gysinseq::gysin::{GysinInput, GysinReport};
use gysinseq::lesolve::{ExactSequenceTemplate, SlotDim, SolveReport};
use serde_json::{json, Value};

/// A finished report plus the exit code it implies (0 success, 2 when the
/// result itself is an inconsistency finding).
pub struct Report {
    pub text: String,
    pub machine: Value,
    pub exit_code: i32,
}

impl Report {
    fn ok(text: String, machine: Value) -> Self {
        Report {
            text,
            machine,
            exit_code: 0,
        }
    }
}

fn dims_json(g: &GradedDims) -> Value {
    Value::Array(
        g.iter()
            .map(|(k, d)| Value::Array(vec![k.into(), d.into()]))
            .collect(),
    )
}

fn simplices_json(x: &SimplicialComplex) -> Value {
    Value::Array(
        x.simplices()
            .map(|s| Value::Array(s.iter().map(|&v| v.into()).collect()))
            .collect(),
    )
}

fn complex_block(x: &SimplicialComplex) -> String {
    let maximal = x.maximal_simplices();
    if maximal.is_empty() {
        return String::new();
    }
    let mut out = String::new();
    for s in maximal {
        out.push_str(
            &s.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
    }
    out
}

pub fn cohomology_report(verb: &str, dims: &GradedDims, top_degree: usize) -> Report {
    let text = format!("{}\n", dims.dims_line(top_degree));
    let machine = json!({
        "verb": verb,
        "dims": dims_json(dims),
        "max_degree": top_degree,
        "poincare_polynomial": dims.poincare_polynomial(),
    });
    Report::ok(text, machine)
}

pub fn split_report(inv: &Involution) -> Report {
    let split = split_involution(inv);
    let top = inv.carrier().dim().unwrap_or(0);
    let text = format!(
        "symmetric: {}\nantisymmetric: {}\n",
        split.symmetric.dims_line(top),
        split.antisymmetric.dims_line(top)
    );
    let machine = json!({
        "verb": "split",
        "symmetric": dims_json(&split.symmetric),
        "antisymmetric": dims_json(&split.antisymmetric),
        "max_degree": top,
    });
    Report::ok(text, machine)
}

pub fn quotient_report(q: &SimplicialComplex) -> Report {
    // printed as maximal simplices, so the output is itself a complex file
    let text = if q.is_empty() {
        "# empty complex\n".to_string()
    } else {
        complex_block(q)
    };
    let machine = json!({
        "verb": "quotient",
        "simplices": simplices_json(q),
    });
    Report::ok(text, machine)
}

fn template_lines(t: &ExactSequenceTemplate) -> String {
    let mut out = String::new();
    for slot in t.slots() {
        out.push_str(&format!("  {} {}\n", slot.label, slot.dim));
    }
    out
}

fn template_json(t: &ExactSequenceTemplate) -> Value {
    Value::Array(
        t.slots()
            .iter()
            .map(|s| {
                json!({
                    "label": s.label,
                    "dim": match s.dim {
                        SlotDim::Known(d) => Value::from(d),
                        SlotDim::Unknown => Value::Null,
                    },
                })
            })
            .collect(),
    )
}

fn solve_json(report: &SolveReport) -> Value {
    json!({
        "consistent": report.consistent,
        "slot_values": report
            .slot_values
            .iter()
            .map(|set| Value::Array(set.iter().map(|&v| v.into()).collect()))
            .collect::<Vec<_>>(),
        "rank_ranges": report
            .rank_ranges
            .iter()
            .map(|&(lo, hi)| Value::Array(vec![lo.into(), hi.into()]))
            .collect::<Vec<_>>(),
        "profiles": report.profiles,
    })
}

pub fn les_check_report(t: &ExactSequenceTemplate, solve: &SolveReport, balanced: bool) -> Report {
    let feasible = solve.consistent;
    let mut text = String::new();
    text.push_str(&format!(
        "alternating sum: {}\n",
        if balanced { "balanced" } else { "unbalanced" }
    ));
    text.push_str(&format!(
        "exactness: {}\n",
        if feasible { "feasible" } else { "infeasible" }
    ));
    if feasible {
        for (i, &(lo, hi)) in solve.rank_ranges.iter().enumerate() {
            text.push_str(&format!(
                "rank {} -> {}: {}\n",
                t.slots()[i].label,
                t.slots()[i + 1].label,
                if lo == hi {
                    lo.to_string()
                } else {
                    format!("{lo}..{hi}")
                }
            ));
        }
    }
    let machine = json!({
        "verb": "les-check",
        "alternating_sum_balanced": balanced,
        "feasible": feasible,
        "template": template_json(t),
        "solve": solve_json(solve),
    });
    Report {
        text,
        machine,
        exit_code: if balanced && feasible { 0 } else { 2 },
    }
}

pub fn les_solve_report(t: &ExactSequenceTemplate, solve: &SolveReport) -> Report {
    let mut text = String::new();
    text.push_str(&format!(
        "consistent: {}\n",
        if solve.consistent { "yes" } else { "no" }
    ));
    if solve.consistent {
        for (i, slot) in t.slots().iter().enumerate() {
            let values = &solve.slot_values[i];
            if values.len() == 1 {
                text.push_str(&format!("{} = {}\n", slot.label, values.iter().next().unwrap()));
            } else {
                let list: Vec<String> = values.iter().map(usize::to_string).collect();
                text.push_str(&format!("{} in {{{}}}\n", slot.label, list.join(", ")));
            }
        }
        text.push_str(&format!("feasible profiles: {}\n", solve.profiles.len()));
    }
    let machine = json!({
        "verb": "les-solve",
        "template": template_json(t),
        "solve": solve_json(solve),
    });
    Report {
        text,
        machine,
        exit_code: if solve.consistent { 0 } else { 2 },
    }
}

pub fn gysin_report(source: &str, g: &GysinInput, report: &GysinReport) -> Report {
    let n = g.degree_bound;
    let mut text = String::new();
    text.push_str(&format!("input: {source}\n"));
    text.push_str(&format!("degree bound: {n}\n"));
    text.push_str("template:\n");
    text.push_str(&template_lines(&report.template));
    text.push_str(&format!(
        "middle dims: {}\n",
        report.middle_dims.dims_line(n + 1)
    ));
    text.push_str(&format!(
        "consistent: {}\n",
        if report.solve.consistent { "yes" } else { "no" }
    ));
    let profiles = report.total_profiles();
    match report.unique_total() {
        Some(total) => {
            text.push_str(&format!("P_M = {}\n", total.poincare_polynomial()));
            text.push_str(&format!("solved H^*(M): {}\n", total.dims_line(n)));
        }
        None if !profiles.is_empty() => {
            text.push_str(&format!("feasible P_M ({} profiles):\n", profiles.len()));
            for p in &profiles {
                text.push_str(&format!(
                    "  {}\n",
                    GradedDims::from_vec(p).poincare_polynomial()
                ));
            }
        }
        None => {
            text.push_str("no feasible total cohomology\n");
        }
    }
    for (q, row) in report.e2_rows.iter().enumerate() {
        text.push_str(&format!("e2 q={q}: {}\n", row.poincare_polynomial()));
    }
    text.push_str(&format!(
        "duality: {}\n",
        if report.duality_obstructed {
            "obstructed"
        } else {
            "unobstructed"
        }
    ));
    let machine = json!({
        "verb": "gysin",
        "input": source,
        "degree_bound": n,
        "template": template_json(&report.template),
        "middle_dims": dims_json(&report.middle_dims),
        "solve": solve_json(&report.solve),
        "total_profiles": profiles,
        "unique_total": report.unique_total().map(|t| dims_json(&t)),
        "e2_rows": report.e2_rows.iter().map(dims_json).collect::<Vec<_>>(),
        "duality_obstructed": report.duality_obstructed,
    });
    Report {
        text,
        machine,
        exit_code: if report.solve.consistent { 0 } else { 2 },
    }
}

pub fn e2_report(source: &str, rows: &[GradedDims; 4]) -> Report {
    let mut text = String::new();
    for (q, row) in rows.iter().enumerate() {
        text.push_str(&format!("q={q}: {}\n", row.poincare_polynomial()));
    }
    let machine = json!({
        "verb": "e2",
        "input": source,
        "rows": rows.iter().map(dims_json).collect::<Vec<_>>(),
    });
    Report::ok(text, machine)
}

pub fn duality_cli_report(source: &str, obstructed: bool, detail: &str) -> Report {
    let text = format!(
        "duality: {}\n{detail}\n",
        if obstructed { "obstructed" } else { "unobstructed" }
    );
    let machine = json!({
        "verb": "duality",
        "input": source,
        "obstructed": obstructed,
        "detail": detail,
    });
    Report::ok(text, machine)
}

/// Prints a fixture in the orbit-data file format, so the output can be fed
/// back through `gysin <file>`.
pub fn fixture_report(name: &str, note: &str, g: &GysinInput) -> Report {
    let mut text = String::new();
    text.push_str(&format!("# fixture {name}: {note}\n"));
    text.push_str(&complex_block(g.orbit_pair.total()));
    text.push_str("---\n");
    text.push_str(&complex_block(g.orbit_pair.sub()));
    text.push_str("---\n");
    text.push_str(&complex_block(&g.fixed_set));
    text.push_str("---\n");
    for (a, b) in g.j_involution.swapped_pairs() {
        text.push_str(&format!("{a} {b}\n"));
    }
    text.push_str("---\n");
    text.push_str(&format!("n={}\n", g.degree_bound));
    for (&k, &d) in &g.known_total {
        text.push_str(&format!("H{k}={d}\n"));
    }
    let machine = json!({
        "verb": "fixture",
        "name": name,
        "note": note,
        "orbit_complex": simplices_json(g.orbit_pair.total()),
        "singular_subcomplex": simplices_json(g.orbit_pair.sub()),
        "fixed_set": simplices_json(&g.fixed_set),
        "involution": g
            .j_involution
            .swapped_pairs()
            .iter()
            .map(|&(a, b)| Value::Array(vec![a.into(), b.into()]))
            .collect::<Vec<_>>(),
        "degree_bound": g.degree_bound,
        "known_total": g
            .known_total
            .iter()
            .map(|(&k, &d)| Value::Array(vec![k.into(), d.into()]))
            .collect::<Vec<_>>(),
    });
    Report::ok(text, machine)
}
