use std::fmt::Write;

use nilcayley::identities::VerificationReport;

/// Aligned plain-text rendering of a report.
pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let mut line = |key: &str, value: String| {
        let _ = writeln!(out, "{key:<12}{value}");
    };
    line("check", r.theorem.clone());
    line("backend", r.backend.clone());
    line("verdict", r.verdict.to_string());
    line("instances", format!("{} ({} failed)", r.instances, r.failures));
    let p = &r.params;
    let fields = [
        ("n", p.n.map(|v| v.to_string())),
        ("k", p.k.map(|v| v.to_string())),
        ("t", p.t.map(|v| v.to_string())),
        ("m", p.m.map(|v| v.to_string())),
        ("d", p.d.map(|v| v.to_string())),
        ("seed", p.seed.map(|v| v.to_string())),
        ("trials", p.trials.map(|v| v.to_string())),
        ("exponent", p.exponent.map(|v| v.to_string())),
        ("lift", p.lift.clone()),
    ];
    let params: Vec<String> = fields
        .iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| format!("{k}={v}")))
        .collect();
    line("params", params.join(" "));
    if let Some(d) = &r.degree_info {
        let mut s = format!(
            "level {}, polynomial degree {}, leading coefficient {}",
            d.level, d.char_poly_degree, d.leading_coefficient
        );
        if let (Some(e), Some(total)) = (d.exponent, d.power_identity_degree) {
            let _ = write!(s, ", exponent {e}, power identity degree {total}");
        }
        if let Some(direct) = d.direct_degree {
            let _ = write!(s, ", direct degree {direct}");
        }
        line("degrees", s);
    }
    if let Some(i) = &r.ideal_info {
        let index = i.nilpotency_index.map_or("not found".to_string(), |s| s.to_string());
        line(
            "ideal",
            format!("{} of rank {} in dimension {}, nilpotency index {index}", i.kind, i.rank, i.algebra_dim),
        );
    }
    if let Some(c) = &r.lifted_coefficients {
        for (i, v) in c.iter().enumerate() {
            line(if i == 0 { "lifted" } else { "" }, format!("lambda_{i} = {v}"));
        }
    }
    for n in &r.notes {
        line("note", n.clone());
    }
    for w in &r.witnesses {
        line("witness", format!("{}: {}", w.label, w.residual));
        for (k, v) in &w.inputs {
            line("", format!("{k} = {v}"));
        }
    }
    if let Some(ms) = r.elapsed_ms {
        line("elapsed", format!("{ms} ms"));
    }
    out.trim_end().to_string()
}
