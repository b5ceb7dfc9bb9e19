use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use qrpw_core::assocmod::{self, chern_rec, gamma_basis, projector, trace_check};
use qrpw_core::grading::{coinvariants_basis, degree_of, express_in_coinvariants, table_by_name};
use qrpw_core::ncalg::{algebras, check_morphism, check_presentation, morphism};
use qrpw_core::principal::{
    almost_free_evidence, can_inverse_check, cleft_omega, hg_preimage_search,
    hg_search_at_q, noncleft_unit_probe, verify_cleaving_map, verify_strong_connection,
    ConnectionForm, StrongConnection,
};
use qrpw_core::report::Report;
use qrpw_core::reps::{self, RepLabel, TruncatedRep};
use qrpw_core::suite::{run_suite, SuiteParams};
use qrpw_core::{Element, Error, Presentation, Rational, Sign};

#[derive(Parser)]
#[command(name = "qrpw", version, about = "Exact checks for quantum real weighted projective planes")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "QRPW_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// sigma, sigma-, sigma+, rp- or rp+.
    #[arg(long, default_value = "sigma")]
    algebra: String,
    #[arg(long, default_value_t = 1)]
    l: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Reduce {
        #[command(flatten)]
        alg: AlgebraArgs,
        expr: String,
    },
    /// Degree of an element under a named table.
    Degree {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        table: String,
        expr: String,
    },
    /// Degree-zero normal words up to an exponent bound.
    Coinv {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        table: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
        /// Also rewrite each word in the coinvariant generators.
        #[arg(long)]
        express: bool,
    },
    /// Homogeneity, star closure, confluence and normal-pattern checks.
    VerifyPresentation {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Relation and star compatibility of a named morphism.
    VerifyMorphism {
        /// embed-, embed+, fix-, fix+, coinv-, coinv+ or id-sigma.
        name: String,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// The strong connection form on `u^n`.
    Omega {
        #[arg(long, default_value = "neg")]
        case: Sign,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Axioms of the strong connection.
    StrongconnCheck {
        #[arg(long, default_value = "neg")]
        case: Sign,
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
    },
    /// The lifted canonical map inverts the strong connection.
    CanCheck {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
    },
    /// Preimage of `1 ⊗ u^target` under the lifted canonical map for `ρ_{k,l}`.
    HgSearch {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        target: i64,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Solve at a rational value of q instead of over Laurent polynomials.
        #[arg(long)]
        at_q: Option<String>,
    },
    /// Cleaving map of the positive case.
    CleftCheck {
        #[arg(long, default_value_t = 3)]
        l: u32,
        #[arg(long, default_value = "z'*")]
        candidate: String,
        #[arg(long, default_value_t = 6)]
        nmax: i64,
    },
    /// Bounded search for a degree-one unit.
    UnitProbe {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 2)]
        support: usize,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Commuting square and image of the lifted canonical map.
    AlmostFree {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: u32,
    },
    /// The projector `E[n]` with entries in `a, b, c-`.
    Projector {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        latex: bool,
    },
    /// The polynomial `c_n(a)` and its agreement with `Tr E[n]`.
    Chern {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        latex: bool,
    },
    /// Bounded basis of the degree-`n` component.
    Gamma {
        #[arg(long, default_value = "neg")]
        case: Sign,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Residuals of the defining relations in a truncated representation.
    RepCheck {
        #[arg(long, default_value = "neg")]
        case: Sign,
        #[arg(long, default_value_t = 1)]
        l: u32,
        /// Series label; omit to check every label.
        #[arg(long, conflicts_with = "theta")]
        r: Option<u32>,
        /// Phase of the one-dimensional family.
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long, default_value_t = 40)]
        dim: usize,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// Measure on the whole truncated space, boundary rows included.
        #[arg(long)]
        include_boundary: bool,
    },
    /// A named bundle of checks.
    Suite {
        /// thm-hg, thm-main, positive-trivial, chern, almost-free or reps.
        name: String,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        nmax: Option<i64>,
        #[arg(long)]
        bound: Option<u32>,
        /// Pairs `k,l`.
        #[arg(long, num_args = 1.., value_parser = parse_pair)]
        pairs: Vec<(i64, i64)>,
        #[arg(long, default_value_t = 40)]
        dim: usize,
        #[arg(long, num_args = 1..)]
        q: Vec<f64>,
        /// Record wall time per check.
        #[arg(long)]
        timings: bool,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected k,l, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

enum Outcome {
    Pass,
    Fail,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn algebra(a: &AlgebraArgs) -> Result<std::sync::Arc<Presentation>, Error> {
    algebras::by_name(&a.algebra, a.l).ok_or_else(|| usage(format!("unknown algebra `{}`", a.algebra)))
}

fn emit_report(json: bool, r: &Report) -> Outcome {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("serializable"));
    } else {
        print!("{}", r.render());
    }
    if r.passed {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn emit_value<T: Serialize>(json: bool, value: &T, text: &str) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    match cli.command {
        Command::Reduce { alg, expr } => {
            let p = algebra(&alg)?;
            let e = Element::parse(&p, &expr)?;
            emit_value(
                json,
                &json!({"algebra": p.id(), "input": expr, "normal_form": e.to_string()}),
                &e.to_string(),
            );
        }
        Command::Degree { alg, table, expr } => {
            let p = algebra(&alg)?;
            let t = table_by_name(&p, &table)?;
            let e = Element::parse(&p, &expr)?;
            let d = degree_of(&e, &t);
            emit_value(
                json,
                &json!({"algebra": p.id(), "table": t.name, "degree": d.value(), "text": d.to_string()}),
                &d.to_string(),
            );
        }
        Command::Coinv {
            alg,
            table,
            bound,
            express,
        } => {
            let p = algebra(&alg)?;
            let t = table_by_name(&p, &table)?;
            let words = coinvariants_basis(&p, &t, bound);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for w in &words {
                let mut row = json!({
                    "word": p.word_to_string(w),
                    "exponents": p.word_exponents(w),
                });
                let mut line = p.word_to_string(w);
                if express {
                    let e = Element::monomial(&p, w.clone(), qrpw_core::QPoly::one());
                    let x = express_in_coinvariants(&e, &t)?;
                    row["expressed"] = json!(x.to_string());
                    line = format!("{line} = {x}");
                }
                rows.push(row);
                lines.push(line);
            }
            emit_value(
                json,
                &json!({"algebra": p.id(), "table": t.name, "bound": bound, "words": rows}),
                &lines.join("\n"),
            );
        }
        Command::VerifyPresentation { alg, trials } => {
            let p = algebra(&alg)?;
            return Ok(emit_report(json, &check_presentation(&p, &[], trials, cli.seed)));
        }
        Command::VerifyMorphism { name, l } => {
            let m = morphism::by_name(&name, l).ok_or_else(|| {
                usage(format!(
                    "unknown morphism `{name}`, expected one of {}",
                    morphism::MORPHISM_NAMES.join(", ")
                ))
            })?;
            return Ok(emit_report(json, &check_morphism(&m)));
        }
        Command::Omega { case, l, n } => {
            let w = match case {
                Sign::Neg => StrongConnection::new(l).omega(n),
                Sign::Pos => cleft_omega(l)?.omega(n),
            };
            let pairs: Vec<(String, String)> = w
                .pairs()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
            emit_value(
                json,
                &json!({"case": case, "l": l, "n": n, "pairs": pairs, "text": w.to_string()}),
                &w.to_string(),
            );
        }
        Command::StrongconnCheck { case, l, nmax } => {
            let r = match case {
                Sign::Neg => verify_strong_connection(&StrongConnection::new(l), nmax),
                Sign::Pos => verify_strong_connection(&cleft_omega(l)?, nmax),
            };
            return Ok(emit_report(json, &r));
        }
        Command::CanCheck { l, nmax } => {
            return Ok(emit_report(json, &can_inverse_check(&StrongConnection::new(l), nmax)));
        }
        Command::HgSearch {
            k,
            l,
            target,
            bound,
            at_q,
        } => {
            if let Some(q) = at_q {
                let q0: Rational = q.parse().map_err(|_| usage(format!("bad rational `{q}`")))?;
                return Ok(emit_report(json, &hg_search_at_q(k, l, target, bound, &q0)?));
            }
            let s = hg_preimage_search(k, l, target, bound)?;
            let mut r = s.report();
            if json {
                let value = json!({
                    "k": k, "l": l, "target": target, "bound": bound,
                    "verdict": s.verdict(),
                    "cases": s.cases,
                    "report": r,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                r.log(format!("verdict: {}", s.verdict()));
                print!("{}", r.render());
            }
            return Ok(if r.passed { Outcome::Pass } else { Outcome::Fail });
        }
        Command::CleftCheck { l, candidate, nmax } => {
            return Ok(emit_report(json, &verify_cleaving_map(l, &candidate, nmax)?));
        }
        Command::UnitProbe { l, support, bound } => {
            return Ok(emit_report(json, &noncleft_unit_probe(l, support, bound)?));
        }
        Command::AlmostFree { k, l } => {
            return Ok(emit_report(json, &almost_free_evidence(k, l)?));
        }
        Command::Projector { l, n, latex } => {
            let e = projector(l, n)?;
            if latex {
                println!("{}", e.latex()?);
            } else if json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()?).expect("serializable"));
            } else {
                for row in e.expressed()? {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    println!("[ {} ]", cells.join(" | "));
                }
            }
        }
        Command::Chern { l, n, latex } => {
            let c = chern_rec(l, n);
            let r = trace_check(l, n)?;
            if latex {
                let e = qrpw_core::Element::from_terms(
                    &algebras::rp_minus(l),
                    c.coeffs().iter().enumerate().map(|(k, x)| {
                        (qrpw_core::Word::new(vec![0; k], 0), x.clone())
                    }),
                );
                println!("c_{{{n}}}(a) = {}", assocmod::element_latex(&e));
            } else if json {
                let value = json!({"l": l, "n": n, "polynomial": c.to_string(), "report": r});
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                println!("c_{n}(a) = {c}");
                print!("{}", r.render());
            }
            return Ok(if r.passed { Outcome::Pass } else { Outcome::Fail });
        }
        Command::Gamma { case, l, n, bound } => {
            let (elems, r) = gamma_basis(l, case, n, bound)?;
            let texts: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
            if json {
                let value = json!({"case": case, "l": l, "n": n, "bound": bound, "elements": texts, "report": r});
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                for t in &texts {
                    println!("{t}");
                }
                print!("{}", r.render());
            }
            return Ok(if r.passed { Outcome::Pass } else { Outcome::Fail });
        }
        Command::RepCheck {
            case,
            l,
            r,
            theta,
            dim,
            q,
            include_boundary,
        } => {
            let labels: Vec<RepLabel> = match (r, theta) {
                (Some(r), _) => vec![RepLabel::Series(r)],
                (None, Some(t)) => vec![RepLabel::Phase(t)],
                (None, None) => (1..=l).map(RepLabel::Series).collect(),
            };
            let mut report = Report::new(format!("rep-check {case} l={l} dim={dim} q={q}"));
            for label in labels {
                let rep = TruncatedRep::<f64>::build(case, l, label, dim, q)?;
                report.absorb("", reps::relation_check(&rep, include_boundary));
                report.absorb("", reps::spectrum_check(&rep));
                report.absorb("", reps::star_check(&rep, 8, cli.seed));
            }
            return Ok(emit_report(json, &report));
        }
        Command::Suite {
            name,
            l,
            nmax,
            bound,
            pairs,
            dim,
            q,
            timings,
        } => {
            let mut params = SuiteParams {
                l,
                nmax,
                bound,
                pairs,
                dim,
                seed: cli.seed,
                timings,
                ..SuiteParams::default()
            };
            if !q.is_empty() {
                params.q = q;
            }
            let s = run_suite(&name, &params)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&s).expect("serializable"));
            } else {
                print!("{}", s.render());
            }
            return Ok(if s.passed { Outcome::Pass } else { Outcome::Fail });
        }
    }
    Ok(Outcome::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::InvalidArgument(_) | Error::PresentationMismatch { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
