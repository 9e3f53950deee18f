//! Table and JSON renderings of reports and ensemble results.
//!
//! Column order for the analysis table is fixed: group keys, `F`, `m`,
//! `Sbar`, `pi_o`, `p_o`, `d_min`, `d`, `d_r`, `d_max`, `omega`, `contig`,
//! `adj`, `rad`. Rounding is half away from zero. Probabilities of chance
//! (`pi_o`, `p_o`) are rounded to `precision` significant digits, all other
//! numbers to `precision` decimals; trailing zeros are dropped.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::optimality::{MaxProvenance, MinMethod, Omega, SwapReport};
use crate::permutation::Alphabet;
use crate::permutohedron::Permutohedron;
use crate::rational::{
    big_to_f64, format_fixed, format_significant, format_significant_big, to_big, to_f64, Rational,
};
use crate::stats::{EnsembleResult, WilcoxonOutcome};

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub precision: u32,
    pub alphabet: Alphabet,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            precision: 2,
            alphabet: Alphabet::default(),
        }
    }
}

/// A report labelled with the group it describes.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub keys: Vec<(String, String)>,
    pub report: SwapReport,
}

fn yes_no(b: Option<bool>) -> String {
    match b {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => "-".into(),
    }
}

pub fn render_omega(o: &Omega, precision: u32) -> String {
    match o {
        Omega::Value(v) => format_fixed(v, precision),
        Omega::Undefined(_) => "undefined".into(),
    }
}

pub fn report_table(rows: &[ReportRow], opts: &RenderOptions) -> String {
    let prec = opts.precision;
    let key_names: Vec<String> = rows
        .first()
        .map(|r| r.keys.iter().map(|(k, _)| k.clone()).collect())
        .unwrap_or_default();
    let mut header: Vec<String> = key_names;
    let numeric_from = header.len();
    for h in [
        "F", "m", "Sbar", "pi_o", "p_o", "d_min", "d", "d_r", "d_max", "omega", "contig", "adj",
        "rad",
    ] {
        header.push(h.to_string());
    }
    let opt =
        |r: &Option<Rational>, f: &dyn Fn(&Rational) -> String| r.as_ref().map_or("-".into(), f);
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let r = &row.report;
            let mut cells: Vec<String> = row.keys.iter().map(|(_, v)| v.clone()).collect();
            cells.push(r.total_frequency.map_or("-".into(), |f| f.to_string()));
            cells.push(r.m.to_string());
            cells.push(format_fixed(&r.dominance, prec));
            cells.push(opt(&r.pi_o, &|x| format_significant(x, prec)));
            cells.push(opt(&r.p_o, &|x| format_significant(x, prec)));
            cells.push(format_fixed(&r.avg_d_min, prec));
            cells.push(format_fixed(&r.avg_d, prec));
            cells.push(format_fixed(&r.avg_d_random, prec));
            cells.push(format_fixed(&r.avg_d_max_global, prec));
            cells.push(render_omega(&r.omega, prec));
            cells.push(yes_no(Some(r.structure.contiguous)));
            cells.push(yes_no(r.structure.adjacency_top2));
            cells.push(yes_no(Some(r.structure.radiation)));
            cells
        })
        .collect();
    align(&header, &body, numeric_from)
}

fn align(header: &[String], body: &[Vec<String>], numeric_from: usize) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for row in body {
        for (k, c) in row.iter().enumerate() {
            widths[k] = widths[k].max(width(c));
        }
    }
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let pad = " ".repeat(widths[k] - width(c));
                if k >= numeric_from {
                    format!("{pad}{c}")
                } else {
                    format!("{c}{pad}")
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    for row in body {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// `{"num": "..", "den": "..", "float": ..}`.
pub fn exact_json(r: &Rational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "float": to_f64(r),
    })
}

fn exact_big_json(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "float": big_to_f64(r),
    })
}

/// Inverse of [`exact_json`].
pub fn parse_exact_json(v: &Value) -> Option<BigRational> {
    let num: BigInt = v.get("num")?.as_str()?.parse().ok()?;
    let den: BigInt = v.get("den")?.as_str()?.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

fn opt_exact(r: &Option<Rational>) -> Value {
    r.as_ref().map_or(Value::Null, exact_json)
}

pub fn report_json(rows: &[ReportRow], p: &Permutohedron, opts: &RenderOptions) -> Value {
    let label = |v: usize| Value::String(opts.alphabet.render(p.vertex(v)));
    let groups: Vec<Value> = rows
        .iter()
        .map(|row| {
            let r = &row.report;
            let mut keys = Map::new();
            for (k, v) in &row.keys {
                keys.insert(k.clone(), Value::String(v.clone()));
            }
            let omega = match &r.omega {
                Omega::Value(v) => exact_json(v),
                Omega::Undefined(reason) => json!({ "undefined": reason.to_string() }),
            };
            let s = &r.structure;
            let structure = json!({
                "contiguous": s.contiguous,
                "adjacency_top2": s.adjacency_top2,
                "radiation": s.radiation,
                "slash_pairs": s.slash_pairs.as_ref().map(|v| {
                    v.iter().map(|&(a, b)| json!([label(a), label(b)])).collect::<Vec<_>>()
                }),
                "wedge_triples": s.wedge_triples.as_ref().map(|v| {
                    v.iter().map(|&(a, b, c)| json!([label(a), label(b), label(c)])).collect::<Vec<_>>()
                }),
            });
            json!({
                "group": keys,
                "n": r.n,
                "d_max": r.d_max,
                "F": r.total_frequency,
                "m": r.m,
                "simpson": exact_json(&r.simpson),
                "dominance": exact_json(&r.dominance),
                "avg_d": exact_json(&r.avg_d),
                "avg_d_random": exact_json(&r.avg_d_random),
                "avg_d_min": exact_json(&r.avg_d_min),
                "min_method": match r.min_method {
                    MinMethod::ClosedFormVerified => "closed_form_verified",
                    MinMethod::ClosedForm => "closed_form",
                    MinMethod::BruteForce => "brute_force",
                },
                "avg_d_max": exact_json(&r.avg_d_max_global),
                "avg_d_max_provenance": match r.max_provenance {
                    MaxProvenance::Proven => "proven",
                    MaxProvenance::Conjectured => "unverified",
                },
                "avg_d_max_shuffle": opt_exact(&r.avg_d_max_shuffle),
                "omega": omega,
                "omega_lower": opt_exact(&r.omega_lower),
                "is_optimal": r.is_optimal,
                "distance_mass": r.distance_mass.iter().map(exact_json).collect::<Vec<_>>(),
                "z": opt_exact(&r.z),
                "bounds": { "lower": exact_json(&r.bounds.0), "upper": exact_json(&r.bounds.1) },
                "pi_o": opt_exact(&r.pi_o),
                "p_o": opt_exact(&r.p_o),
                "p_c": opt_exact(&r.p_c),
                "structure": structure,
            })
        })
        .collect();
    json!({ "groups": groups })
}

pub fn ensemble_table(e: &EnsembleResult, opts: &RenderOptions) -> String {
    let digits = opts.precision.max(2);
    let show = |r: &BigRational| format!("{} ({})", format_significant_big(r, digits), r);
    let mut lines = vec![
        format!("T     {}", e.t),
        format!("B     {}", e.b),
        format!("C     {}", e.c),
        format!("P_o   {}", show(&e.p_optimal)),
        format!("P_c   {}", show(&e.p_contiguous)),
    ];
    match &e.wilcoxon {
        WilcoxonOutcome::Tested(w) => {
            lines.push(format!("V     {}", w.v));
            lines.push(format!("P_W   {}", show(&w.p)));
        }
        WilcoxonOutcome::Undefined(reason) => {
            lines.push("V     undefined".into());
            lines.push(format!("P_W   undefined ({reason})"));
        }
    }
    let hist: Vec<String> = e.t_of_m.iter().map(|(m, t)| format!("{m}:{t}")).collect();
    lines.push(format!("T(m)  {}", hist.join(" ")));
    lines.join("\n") + "\n"
}

pub fn ensemble_json(e: &EnsembleResult) -> Value {
    let hist: Map<String, Value> = e
        .t_of_m
        .iter()
        .map(|(m, t)| (m.to_string(), json!(t)))
        .collect();
    json!({
        "T": e.t,
        "B": e.b,
        "C": e.c,
        "p_optimal": exact_big_json(&e.p_optimal),
        "p_contiguous": exact_big_json(&e.p_contiguous),
        "contiguity_by_product": e.contiguity_by_product,
        "wilcoxon": match &e.wilcoxon {
            WilcoxonOutcome::Tested(w) => json!({
                "V": exact_big_json(&to_big(&w.v)),
                "p": exact_big_json(&w.p),
                "n_used": w.n_used,
            }),
            WilcoxonOutcome::Undefined(reason) => json!({ "undefined": reason }),
        },
        "T_of_m": hist,
    })
}
