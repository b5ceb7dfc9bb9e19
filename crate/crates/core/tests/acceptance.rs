//! Acceptance criteria 1 to 10. Prints one line per criterion and exits
//! nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qrpw_core::assocmod::{e1_trace, gamma_basis, projector, trace_check};
use qrpw_core::ncalg::{algebras, check_morphism, check_presentation, morphism, Element};
use qrpw_core::principal::{
    almost_free_evidence, can_inverse_check, cleft_omega, hg_preimage_search, identity_lemma,
    noncleft_unit_probe, verify_cleaving_map, verify_strong_connection, StrongConnection,
};
use qrpw_core::reps::{relation_residuals, residual_suite, RepLabel, RESIDUAL_TOL};
use qrpw_core::{Rep, Sign};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_presentations() -> Outcome {
    let mut n = 0;
    for l in 1..=3 {
        for p in [
            algebras::sigma(),
            algebras::sigma_minus(l),
            algebras::sigma_plus(l),
            algebras::rp_minus(l),
            algebras::rp_plus(l),
        ] {
            let r = check_presentation(&p, &[], 500, 0);
            ensure(r.passed, || r.render())?;
            n += 1;
        }
    }
    Ok(format!("{n} presentations, 500 confluence probes each"))
}

fn c2_embeddings() -> Outcome {
    let mut checks = 0;
    for l in 1..=3 {
        for m in [
            morphism::embed_minus(l),
            morphism::embed_plus(l),
            morphism::fix_minus(l),
            morphism::fix_plus(l),
        ] {
            let r = check_morphism(&m);
            ensure(r.passed, || r.render())?;
            checks += r.checks.len();
        }
    }
    Ok(format!("12 morphisms, {checks} exact checks"))
}

fn c3_power_products() -> Outcome {
    let s = algebras::sigma();
    for m in 1..=4 {
        for n in 1..=4 {
            for z0_first in [true, false] {
                let text = if z0_first {
                    format!("z0^{m} z0*^{n}")
                } else {
                    format!("z0*^{n} z0^{m}")
                };
                let got = Element::parse(&s, &text).map_err(|e| e.to_string())?;
                let want = Element::from_terms(&s, common::power_product_closed_form(m, n, z0_first));
                ensure(got == want, || format!("{text}: got {got}, closed form {want}"))?;
            }
        }
    }
    Ok("32 products match the closed forms".into())
}

fn c4_strong_connection() -> Outcome {
    for l in 1..=3 {
        let conn = StrongConnection::new(l);
        let r = verify_strong_connection(&conn, 4);
        ensure(r.passed, || r.render())?;
        let r = can_inverse_check(&conn, 4);
        ensure(r.passed, || r.render())?;
    }
    for l in 1..=5 {
        let r = identity_lemma(l);
        ensure(r.passed, || r.render())?;
    }
    Ok("l=1..3, |n|<=4; identity for l<=5".into())
}

fn c5_hg() -> Outcome {
    let s = hg_preimage_search(1, 1, 1, 2).map_err(|e| e.to_string())?;
    ensure(s.found(), || s.report().render())?;
    for (k, l) in [(1, 2), (1, 3), (2, 1), (2, 3)] {
        let s = hg_preimage_search(k, l, 1, 6).map_err(|e| e.to_string())?;
        let r = s.report();
        ensure(s.exhausted(), || r.render())?;
        for case in 1..=3 {
            let tag = format!("({k},{l}) Case {case}");
            ensure(r.log.iter().any(|line| line.starts_with(&tag)), || {
                format!("missing log line for {tag}")
            })?;
        }
    }
    Ok("(1,1) witness; (1,2) (1,3) (2,1) (2,3) exhausted at bound 6".into())
}

fn c6_projectors() -> Outcome {
    for l in 1..=3 {
        for n in -2..=2 {
            let e = projector(l, n).map_err(|e| e.to_string())?;
            let r = e.verify();
            ensure(r.passed, || r.render())?;
            let r = trace_check(l, n).map_err(|e| e.to_string())?;
            ensure(r.passed, || r.render())?;
        }
    }
    let r = trace_check(2, 1).map_err(|e| e.to_string())?;
    ensure(
        r.checks.iter().any(|c| c.id == "trace = reference E[1] trace" && c.passed),
        || r.render(),
    )?;
    Ok(format!("l=1..3, n=-2..2; Tr E[1] = {}", e1_trace()))
}

fn c7_positive() -> Outcome {
    for l in [1, 3, 5] {
        let r = verify_cleaving_map(l, "z'*", 6).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.render())?;
        let conn = cleft_omega(l).map_err(|e| e.to_string())?;
        let r = verify_strong_connection(&conn, 6);
        ensure(r.passed, || r.render())?;
        for n in -2..=2 {
            let (_, r) = gamma_basis(l, Sign::Pos, n, 4).map_err(|e| e.to_string())?;
            ensure(r.passed, || r.render())?;
        }
    }
    Ok("l in {1,3,5}; |n|<=6; gamma free at bound 4".into())
}

fn c8_units() -> Outcome {
    for l in [2, 3] {
        let r = noncleft_unit_probe(l, 2, 4).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.render())?;
    }
    Ok("no degree-1 unit with support <= 2 at bound 4; z^n are units".into())
}

fn c9_almost_free() -> Outcome {
    for (k, l) in [(1, 2), (1, 3), (2, 3), (2, 5)] {
        let r = almost_free_evidence(k, l).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.render())?;
    }
    Ok("(1,2) (1,3) (2,3) (2,5), |m|<=3".into())
}

fn c10_numeric() -> Outcome {
    let mut worst = 0.0f64;
    for sign in [Sign::Neg, Sign::Pos] {
        for l in 1..=3 {
            for q in [0.3, 0.5, 0.9] {
                let r = residual_suite(sign, l, 40, q, 0).map_err(|e| e.to_string())?;
                ensure(r.passed, || r.render())?;
                for rr in 1..=l {
                    let rep = Rep::build(sign, l, RepLabel::Series(rr), 40, q).map_err(|e| e.to_string())?;
                    for (_, res) in relation_residuals(&rep, rep.safe_len()) {
                        worst = worst.max(res);
                    }
                }
            }
        }
    }
    ensure(worst < RESIDUAL_TOL, || format!("max residual {worst:.3e}"))?;
    Ok(format!("max relation residual {worst:.2e}, spectra within 1e-12"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("presentations", Some(Duration::from_secs(60)), c1_presentations),
        ("embeddings", Some(Duration::from_secs(60)), c2_embeddings),
        ("power products", None, c3_power_products),
        ("strong connection", Some(Duration::from_secs(300)), c4_strong_connection),
        ("hopf-galois search", Some(Duration::from_secs(600)), c5_hg),
        ("projectors and chern", Some(Duration::from_secs(120)), c6_projectors),
        ("positive case", None, c7_positive),
        ("units", None, c8_units),
        ("almost free", None, c9_almost_free),
        ("numeric", Some(Duration::from_secs(30)), c10_numeric),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(lim)) if took > *lim => Err(format!("took longer than {} s", lim.as_secs())),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if outcome.is_err() {
            failed += 1;
        }
        let detail = detail.lines().next().unwrap_or("");
        println!("criterion {:>2} {tag} {name} ({:.1} s): {detail}", i + 1, took.as_secs_f64());
        if let Err(d) = &outcome {
            for line in d.lines().skip(1).take(20) {
                println!("    {line}");
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
