//! Command-line front end: counting, enumeration, verification, bijections,
//! poset queries, DOT emission, and the oracle self-test.
//!
//! Exit codes: 0 success, 1 domain error (with a one-line diagnostic on
//! stderr), 2 usage error. With `--json`, success prints one well-formed
//! JSON document.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use starfact::bijection::{factorization_to_necklace, repivot, shift_preimage};
use starfact::noncross::{count_lnc, count_lncn, enumerate_lnc, enumerate_lncn, TypeVector};
use starfact::oracle::{
    brute_lnc, brute_star_factorizations, hypercube_iso, reachability_leq_oracle,
    subword_leq_oracle, OracleReport,
};
use starfact::perm::{all_permutations, Permutation};
use starfact::poset::{
    build_poset, count_boolean_above, count_boolean_below, covers_down, covers_up, interval,
    interval_nc_iso, is_boolean_interval, leq, IntervalPoset,
};
use starfact::star::{
    count_factorizations, cycle_word, enumerate_factorizations, verify_star_factorization,
    StarFactorization,
};

#[derive(Parser)]
#[command(name = "starfact", version, about = "Star factorizations, noncrossing necklaces, and the slicing poset")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of minimal transitive star factorizations of a permutation.
    Count {
        /// Permutation in cycle notation, e.g. "(13)(285)(4)(67)".
        perm: String,
        /// Ground-set size override for trailing fixed points.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List all factorizations of a permutation for one pivot.
    Enum {
        perm: String,
        #[arg(long)]
        pivot: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check that a factorization is minimal transitive for a permutation.
    Verify {
        /// Factorization text, e.g. "(6 8)(6 1)…"; may be empty for n = 1.
        factorization: String,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        n: Option<usize>,
        /// Pivot override, needed only when the factorization is empty.
        #[arg(long)]
        pivot: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Cycle word of a factorization.
    Word {
        factorization: String,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Map a factorization to the corresponding one with another pivot.
    Repivot {
        factorization: String,
        #[arg(long)]
        perm: String,
        /// Target pivot.
        #[arg(long)]
        to: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Labeled noncrossing partitions of a type, e.g. "3,4,2,2".
    Lnc {
        type_vector: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Labeled noncrossing necklaces of a type.
    Lncn {
        type_vector: String,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Order test in the slicing poset.
    Leq {
        lower: String,
        upper: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Covers of a permutation in the slicing poset.
    Covers {
        perm: String,
        /// List covered elements (merges) instead of covering ones.
        #[arg(long)]
        down: bool,
        #[arg(long)]
        n: Option<usize>,
        /// Emit the covers as a DOT diagram.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// The interval between two comparable permutations.
    Interval {
        lower: String,
        upper: String,
        #[arg(long)]
        n: Option<usize>,
        /// Verify the product-of-noncrossing-lattices certificate.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Boolean-interval test and counts.
    Boolean {
        /// Lower endpoint (together with an upper endpoint).
        lower: Option<String>,
        /// Upper endpoint.
        upper: Option<String>,
        /// Count boolean intervals with this maximal element.
        #[arg(long, conflicts_with_all = ["lower", "upper", "below"])]
        above: Option<String>,
        /// Count boolean intervals with this minimal element.
        #[arg(long, conflicts_with_all = ["lower", "upper"])]
        below: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// DOT diagram of the whole poset on S_n.
    Dot {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the oracle agreement suite; exits nonzero on any failure.
    Selftest {
        /// Cap on the symmetric-group size used by each suite.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn parse_perm(text: &str, n: Option<usize>) -> starfact::Result<Permutation> {
    Permutation::parse(text, n)
}

/// Parses factorization text, allowing the empty factorization when an
/// explicit pivot is supplied.
fn parse_factorization(
    text: &str,
    n: Option<usize>,
    pivot: Option<usize>,
) -> starfact::Result<StarFactorization> {
    if text.trim().is_empty() {
        let n = n.unwrap_or(1);
        let pivot = pivot.unwrap_or(1);
        return StarFactorization::new(n, pivot, Vec::new());
    }
    StarFactorization::parse(text, n)
}

fn emit(json_mode: bool, doc: Value, text: String) {
    if json_mode {
        println!("{doc}");
    } else if !text.is_empty() {
        println!("{text}");
    }
}

fn run(command: Command) -> starfact::Result<ExitCode> {
    match command {
        Command::Count { perm, n, json } => {
            let p = parse_perm(&perm, n)?;
            let count = count_factorizations(&p);
            emit(
                json,
                json!({"permutation": p.to_string(), "count": count.to_string()}),
                count.to_string(),
            );
        }
        Command::Enum {
            perm,
            pivot,
            n,
            json,
        } => {
            let p = parse_perm(&perm, n)?;
            let all: Vec<String> = enumerate_factorizations(&p, pivot)?
                .map(|d| d.to_string())
                .collect();
            emit(
                json,
                json!({
                    "permutation": p.to_string(),
                    "pivot": pivot,
                    "count": all.len(),
                    "factorizations": all,
                }),
                all.join("\n"),
            );
        }
        Command::Verify {
            factorization,
            perm,
            n,
            pivot,
            json,
        } => {
            let p = parse_perm(&perm, n)?;
            let delta = parse_factorization(&factorization, Some(p.n()), pivot)?;
            let ok = verify_star_factorization(&delta, &p)?;
            emit(
                json,
                json!({
                    "factorization": delta.to_string(),
                    "permutation": p.to_string(),
                    "verified": ok,
                }),
                ok.to_string(),
            );
        }
        Command::Word {
            factorization,
            perm,
            n,
            json,
        } => {
            let p = parse_perm(&perm, n)?;
            let delta = parse_factorization(&factorization, Some(p.n()), None)?;
            let word = cycle_word(&delta, &p)?;
            emit(
                json,
                json!({"word": word.to_string()}),
                word.to_string(),
            );
        }
        Command::Repivot {
            factorization,
            perm,
            to,
            n,
            json,
        } => {
            let p = parse_perm(&perm, n)?;
            let delta = parse_factorization(&factorization, Some(p.n()), None)?;
            let preimage = factorization_to_necklace(&delta, &p)?;
            let shifted = shift_preimage(&preimage, to)?;
            let result = repivot(&delta, &p, to)?;
            emit(
                json,
                json!({
                    "permutation": p.to_string(),
                    "from_pivot": delta.pivot(),
                    "to_pivot": to,
                    "preimage": preimage.to_string(),
                    "shifted": shifted.to_string(),
                    "factorization": result.to_string(),
                }),
                result.to_string(),
            );
        }
        Command::Lnc {
            type_vector,
            count,
            json,
        } => {
            let x = TypeVector::parse(&type_vector)?;
            let total = count_lnc(&x);
            if count {
                emit(
                    json,
                    json!({"type": x.to_string(), "count": total.to_string()}),
                    total.to_string(),
                );
            } else {
                let partitions: Vec<String> = enumerate_lnc(&x)?
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                emit(
                    json,
                    json!({
                        "type": x.to_string(),
                        "count": total.to_string(),
                        "partitions": partitions,
                    }),
                    partitions.join("\n"),
                );
            }
        }
        Command::Lncn {
            type_vector,
            count,
            json,
        } => {
            let x = TypeVector::parse(&type_vector)?;
            if count {
                let total = count_lncn(&x)?;
                emit(
                    json,
                    json!({"type": x.to_string(), "count": total.to_string()}),
                    total.to_string(),
                );
            } else {
                let necklaces: Vec<String> = enumerate_lncn(&x)?
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                emit(
                    json,
                    json!({
                        "type": x.to_string(),
                        "count": necklaces.len(),
                        "necklaces": necklaces,
                    }),
                    necklaces.join("\n"),
                );
            }
        }
        Command::Leq {
            lower,
            upper,
            n,
            json,
        } => {
            let (a, b) = parse_pair(&lower, &upper, n)?;
            let ok = leq(&a, &b)?;
            emit(
                json,
                json!({"lower": a.to_string(), "upper": b.to_string(), "leq": ok}),
                ok.to_string(),
            );
        }
        Command::Covers {
            perm,
            down,
            n,
            dot,
            json,
        } => {
            let p = parse_perm(&perm, n)?;
            let covers = if down { covers_down(&p) } else { covers_up(&p) };
            let shown: Vec<String> = covers.iter().map(ToString::to_string).collect();
            if dot {
                let text = covers_dot(&p, &covers, down);
                emit(json, json!({"dot": text}), text);
            } else {
                emit(
                    json,
                    json!({
                        "permutation": p.to_string(),
                        "direction": if down { "down" } else { "up" },
                        "count": shown.len(),
                        "covers": shown,
                    }),
                    shown.join("\n"),
                );
            }
        }
        Command::Interval {
            lower,
            upper,
            n,
            certify,
            dot,
            json,
        } => {
            let (a, b) = parse_pair(&lower, &upper, n)?;
            let iv = interval(&a, &b)?;
            if dot {
                let text = iv.to_dot();
                emit(json, json!({"dot": text}), text);
                return Ok(ExitCode::SUCCESS);
            }
            let mut doc = interval_json(&iv);
            let mut text = iv
                .elements()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            if certify {
                let report = interval_nc_iso(&a, &b)?;
                let factors: Vec<Value> = report
                    .factors
                    .iter()
                    .map(|f| {
                        json!({
                            "cycle": f.cycle.to_string(),
                            "excerpts": f.excerpts.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            "size": f.size(),
                        })
                    })
                    .collect();
                doc["certificate"] = json!({
                    "factors": factors,
                    "pass": report.pass,
                    "failures": report.failures,
                });
                let mut sizes: Vec<usize> = report
                    .factors
                    .iter()
                    .map(|f| f.size())
                    .filter(|&d| d >= 2)
                    .collect();
                if sizes.is_empty() {
                    sizes.push(1);
                }
                let shape = sizes
                    .iter()
                    .map(|d| format!("NC({d})"))
                    .collect::<Vec<_>>()
                    .join(" x ");
                text.push_str(&format!(
                    "\ncertificate: {} [{}]",
                    if report.pass { "pass" } else { "FAIL" },
                    shape
                ));
            }
            emit(json, doc, text);
        }
        Command::Boolean {
            lower,
            upper,
            above,
            below,
            n,
            json,
        } => match (lower, upper, above, below) {
            (None, None, Some(text), None) => {
                let p = parse_perm(&text, n)?;
                let count = count_boolean_above(&p);
                emit(
                    json,
                    json!({"permutation": p.to_string(), "boolean_above": count.to_string()}),
                    count.to_string(),
                );
            }
            (None, None, None, Some(text)) => {
                let p = parse_perm(&text, n)?;
                let count = count_boolean_below(&p);
                emit(
                    json,
                    json!({"permutation": p.to_string(), "boolean_below": count.to_string()}),
                    count.to_string(),
                );
            }
            (Some(lo), Some(hi), None, None) => {
                let (a, b) = parse_pair(&lo, &hi, n)?;
                let ok = is_boolean_interval(&a, &b)?;
                emit(
                    json,
                    json!({"lower": a.to_string(), "upper": b.to_string(), "boolean": ok}),
                    ok.to_string(),
                );
            }
            _ => {
                eprintln!("error: pass two endpoints, or --above PERM, or --below PERM");
                return Ok(ExitCode::from(2));
            }
        },
        Command::Dot { n, json } => {
            let poset = build_poset(n)?;
            if json {
                let doc = json!({
                    "n": poset.n(),
                    "vertices": poset.vertices().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "edges": poset.edges(),
                    "ranks": poset.ranks(),
                });
                println!("{doc}");
            } else {
                print!("{}", poset.to_dot());
            }
        }
        Command::Selftest { max_n, json } => {
            let reports = run_selftest(max_n)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            if json {
                let doc = json!({
                    "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                    "passed": reports.len() - failed,
                    "failed": failed,
                });
                println!("{doc}");
            } else {
                for report in &reports {
                    println!("{}", report_json(report));
                }
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_pair(
    lower: &str,
    upper: &str,
    n: Option<usize>,
) -> starfact::Result<(Permutation, Permutation)> {
    let a = Permutation::parse(lower, n)?;
    let b = Permutation::parse(upper, n)?;
    // Without an explicit override, let the pair agree on the larger
    // inferred ground set.
    if n.is_none() && a.n() != b.n() {
        let common = a.n().max(b.n());
        return Ok((
            Permutation::parse(lower, Some(common))?,
            Permutation::parse(upper, Some(common))?,
        ));
    }
    Ok((a, b))
}

fn interval_json(iv: &IntervalPoset) -> Value {
    json!({
        "n": iv.bottom().n(),
        "bottom": iv.bottom().to_string(),
        "top": iv.top().to_string(),
        "vertices": iv.elements().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "edges": iv.edges(),
        "ranks": iv.ranks(),
    })
}

fn covers_dot(perm: &Permutation, covers: &[Permutation], down: bool) -> String {
    let mut labels = vec![perm.to_string()];
    labels.extend(covers.iter().map(ToString::to_string));
    let mut dot = String::from("digraph star_poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (idx, label) in labels.iter().enumerate() {
        dot.push_str(&format!("  v{idx} [label=\"{label}\"];\n"));
    }
    for idx in 1..labels.len() {
        if down {
            dot.push_str(&format!("  v{idx} -> v0;\n"));
        } else {
            dot.push_str(&format!("  v0 -> v{idx};\n"));
        }
    }
    dot.push_str("}\n");
    dot
}

fn report_json(report: &OracleReport) -> Value {
    json!({
        "subject": report.subject,
        "instance": report.instance,
        "expected": report.expected,
        "actual": report.actual,
        "pass": report.pass,
    })
}

/// Oracle agreement suite: factorization sets against brute search, the
/// count formula against enumeration, partition counts against brute
/// filtering, the order relation against both oracle definitions, and the
/// boolean test against the hypercube check.
fn run_selftest(max_n: usize) -> starfact::Result<Vec<OracleReport>> {
    let mut reports = Vec::new();

    for n in 2..=max_n.min(4) {
        let mut mismatches = Vec::new();
        let mut instances = 0usize;
        for p in all_permutations(n) {
            for k in 1..=n {
                instances += 1;
                let brute: Vec<StarFactorization> = brute_star_factorizations(&p, k)?;
                let mut structured: Vec<StarFactorization> =
                    enumerate_factorizations(&p, k)?.collect();
                structured.sort();
                if brute != structured {
                    mismatches.push(format!("{p} pivot {k}"));
                }
            }
        }
        reports.push(OracleReport::new(
            "factorization_sets",
            format!("S_{n}: {instances} (perm, pivot) pairs"),
            "all sets equal",
            if mismatches.is_empty() {
                "all sets equal".to_string()
            } else {
                format!("mismatch at {}", mismatches.join("; "))
            },
        ));
    }

    for n in 2..=max_n.min(5) {
        let mut mismatches = Vec::new();
        for p in all_permutations(n) {
            let expected = count_factorizations(&p);
            for k in 1..=n {
                let got = enumerate_factorizations(&p, k)?.count();
                if expected != got.into() {
                    mismatches.push(format!("{p} pivot {k}: {got}"));
                }
            }
        }
        reports.push(OracleReport::new(
            "count_formula",
            format!("S_{n}, all pivots"),
            "enumeration matches formula",
            if mismatches.is_empty() {
                "enumeration matches formula".to_string()
            } else {
                format!("mismatch at {}", mismatches.join("; "))
            },
        ));
    }

    for ground in 1..=(max_n + 4).min(8) {
        let mut mismatches = Vec::new();
        for sizes in compositions(ground) {
            let x = TypeVector::new(sizes.clone())?;
            let brute = brute_lnc(&sizes)?.len();
            let formula = count_lnc(&x);
            let enumerated = enumerate_lnc(&x)?.len();
            if formula != brute.into() || brute != enumerated {
                mismatches.push(format!("type {x}"));
            }
        }
        reports.push(OracleReport::new(
            "partition_counts",
            format!("all compositions of {ground}"),
            "brute = formula = enumeration",
            if mismatches.is_empty() {
                "brute = formula = enumeration".to_string()
            } else {
                format!("mismatch at {}", mismatches.join("; "))
            },
        ));
    }

    for n in 2..=max_n.min(4) {
        let perms = all_permutations(n);
        let mut mismatches = Vec::new();
        for a in &perms {
            for b in &perms {
                let structural = leq(a, b)?;
                if reachability_leq_oracle(a, b)? != structural {
                    mismatches.push(format!("{a} vs {b} (reachability)"));
                }
                for k in 1..=n {
                    if subword_leq_oracle(a, b, k)? != structural {
                        mismatches.push(format!("{a} vs {b} pivot {k}"));
                    }
                }
            }
        }
        reports.push(OracleReport::new(
            "order_equivalence",
            format!("S_{n}: all ordered pairs, all pivots"),
            "subword = slicing-closure = reachability",
            if mismatches.is_empty() {
                "subword = slicing-closure = reachability".to_string()
            } else {
                format!("mismatch at {}", mismatches.join("; "))
            },
        ));
    }

    for n in 2..=max_n.min(5) {
        let perms = all_permutations(n);
        let mut mismatches = Vec::new();
        for a in &perms {
            for b in &perms {
                if !leq(a, b)? {
                    continue;
                }
                let iv = interval(a, b)?;
                if is_boolean_interval(a, b)? != hypercube_iso(&iv)? {
                    mismatches.push(format!("[{a}, {b}]"));
                }
            }
        }
        reports.push(OracleReport::new(
            "boolean_intervals",
            format!("S_{n}: all comparable pairs"),
            "slice criterion = hypercube check",
            if mismatches.is_empty() {
                "slice criterion = hypercube check".to_string()
            } else {
                format!("mismatch at {}", mismatches.join("; "))
            },
        ));
    }

    Ok(reports)
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
