use std::fmt::Write;

use crate::cache::Payload;
use crate::{Format, Output, PrimeRecord, RunOutput, Status, TableRow};

pub fn render(out: &RunOutput, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(out).expect("serializable") + "\n",
        Format::Tsv => tsv(out),
        Format::Text => text(out),
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Info => "INFO",
        Status::Error => "ERROR",
    }
}

fn join_tsv(cols: &[String]) -> String {
    cols.join("\t") + "\n"
}

/// Column values for a per-prime record, in the order of [`prime_header`].
fn prime_cols(r: &PrimeRecord) -> Vec<String> {
    let mut c = vec![r.prime.to_string()];
    match &r.report {
        Some(Payload::Census(x)) => c.extend([x.found_count, x.h, x.predicted_count].map(|v| v.to_string())),
        Some(Payload::Fricke(x)) => c.extend(
            [x.degree_found, x.linear_found, x.degree_formula, x.linear_formula].map(|v| v.to_string()),
        ),
        Some(Payload::K5p(x)) => {
            c.extend([x.degree, x.predicted_degree, x.n_p, x.n_p_from_jp].map(|v| v.to_string()));
            c.push(x.sporadic_notes.join("; "));
        }
        None => {}
    }
    c
}

fn prime_header(command: &str) -> &'static [&'static str] {
    match command {
        "census" => &["l", "N", "h(-5l)", "formula", "status"],
        "fricke" => &["p", "degree", "linear", "degree_formula", "linear_formula", "status"],
        _ => &["p", "degree", "a_p*h(-5p)", "N_p", "N_p_from_Jp", "notes", "status"],
    }
}

fn table_header(rows: &[TableRow]) -> Vec<String> {
    let mut h = vec!["table".to_string()];
    let names: [&str; 3] = if rows.iter().all(|r| r.table == 10) {
        ["p", "degree", "linear"]
    } else if rows.iter().all(|r| r.table < 10) {
        ["l", "N", "h(-5l)"]
    } else {
        ["prime", "col1", "col2"]
    };
    h.push(names[0].into());
    for suffix in ["", "_computed"] {
        h.push(format!("{}{suffix}", names[1]));
        h.push(format!("{}{suffix}", names[2]));
    }
    h.push("status".into());
    h
}

fn table_cols(r: &TableRow) -> Vec<String> {
    let mut c = vec![r.table.to_string(), r.prime.to_string()];
    c.extend(r.printed.iter().chain(&r.computed).map(|v| v.to_string()));
    c.push(status(r.status).into());
    c
}

fn tsv(out: &RunOutput) -> String {
    let mut s = String::new();
    match &out.records {
        Output::Primes(rs) => {
            let header = prime_header(&out.command);
            s += &join_tsv(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
            for r in rs {
                let mut c = prime_cols(r);
                // Errors leave the value columns empty.
                c.resize(header.len() - 1, String::new());
                c.push(status(r.status).into());
                s += &join_tsv(&c);
            }
        }
        Output::Checks(cs) => {
            s += "check\tstatus\tdetail\n";
            for c in cs {
                s += &join_tsv(&[c.name.clone(), status(pass(c.holds)).into(), c.detail.clone()]);
            }
        }
        Output::Tables(rows) => {
            s += &join_tsv(&table_header(rows));
            for r in rows {
                s += &join_tsv(&table_cols(r));
            }
        }
    }
    s
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn text(out: &RunOutput) -> String {
    let mut s = String::new();
    let (total, good) = match &out.records {
        Output::Primes(rs) => {
            for r in rs {
                let tag = if r.cached { " (cached)" } else { "" };
                match (&r.report, &r.error) {
                    (Some(p), _) => writeln!(s, "{} {}{tag}", status(r.status), describe(p)),
                    (None, Some(e)) => writeln!(s, "{} {}", status(r.status), e),
                    _ => Ok(()),
                }
                .expect("write to string");
            }
            (rs.len(), rs.iter().filter(|r| matches!(r.status, Status::Pass | Status::Info)).count())
        }
        Output::Checks(cs) => {
            for c in cs {
                let st = status(pass(c.holds));
                if c.holds {
                    writeln!(s, "{st} {}", c.name)
                } else {
                    writeln!(s, "{st} {}: {}", c.name, c.detail)
                }
                .expect("write to string");
            }
            (cs.len(), cs.iter().filter(|c| c.holds).count())
        }
        Output::Tables(rows) => {
            for r in rows {
                let (a, b) = if r.table == 10 { ("degree", "linear") } else { ("N", "h(-5l)") };
                writeln!(
                    s,
                    "{} table {} {:>4}: {a} {} (computed {}), {b} {} (computed {})",
                    status(r.status),
                    r.table,
                    r.prime,
                    r.printed[0],
                    r.computed[0],
                    r.printed[1],
                    r.computed[1]
                )
                .expect("write to string");
            }
            (rows.len(), rows.iter().filter(|r| r.status == Status::Pass).count())
        }
    };
    writeln!(s, "{}: {good}/{total} match", out.command).expect("write to string");
    s
}

fn describe(p: &Payload) -> String {
    match p {
        Payload::Census(r) => {
            format!("l={} N={} formula={} h(-5l)={} squarefree={}", r.l, r.found_count, r.predicted_count, r.h, r.squarefree)
        }
        Payload::Fricke(r) => format!(
            "p={} degree={} (formula {}) linear={} (formula {}) parametrization_agrees={}",
            r.p, r.degree_found, r.degree_formula, r.linear_found, r.linear_formula, r.parametrization_agrees
        ),
        Payload::K5p(r) => {
            let mut s = format!(
                "p={} degree={} a_p*h(-5p)={} N_p={} (from J_p {}) identity={} structure={}",
                r.p, r.degree, r.predicted_degree, r.n_p, r.n_p_from_jp, r.identity_holds, r.structure_ok
            );
            for n in &r.sporadic_notes {
                s += &format!("\n    {n}");
            }
            s
        }
    }
}
