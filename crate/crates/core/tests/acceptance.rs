use std::process::ExitCode;
use std::time::{Duration, Instant};

use darboux::belyi::maps::{cubic, psi3, psi4, psi4_paper_literal, psi7};
use darboux::belyi::{branching_pattern, composition_check, riemann_hurwitz_genus, BranchPattern, Fiber};
use darboux::cli::{execute, RunConfig, VariantPolicy};
use darboux::curve::{fiber_product_check, psi4_relation_check, FFElem, HypCurve, RatFunc};
use darboux::exactfield::{rat, FieldTower, Poly};
use darboux::hypergeom::{apply_hpg_operator, hpg_series, HpgParams};
use darboux::series::RadicalSeries;
use darboux::verify::{
    rank_from_proposition, registry, run_check_variant, CheckResult, Status, Variant, CURVE_CUBIC_TERM,
    PSI3_NORMALIZED_SIGN, PSI4_QUADRATIC_FACTOR, R2_QUADRATIC_COEFFICIENT,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const SERIES_ORDER: usize = 40;
const PROPOSITION_ORDER: usize = 40;
const PROPERTY_CASES: u32 = 100;

const SERIES_CHECKS: [&str; 15] = [
    "octa1",
    "octa2",
    "octa_cubic_chain",
    "klein_param",
    "quad_transform",
    "cubic_transform",
    "case7_cubic_rel",
    "case7_quad_rel",
    "case3a_theorem",
    "case3a_inverse",
    "case3a_tilde",
    "case3b_identities",
    "case4a_theorem",
    "case4a_radical",
    "case4b_identities",
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn ms(d: Duration) -> String {
    if d < Duration::from_millis(1) {
        format!("{} us", d.as_micros())
    } else {
        format!("{:.1} ms", d.as_secs_f64() * 1e3)
    }
}

fn run(name: &str, order: usize, variant: Variant) -> CheckResult {
    run_check_variant(name, order, variant).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn summary(r: &CheckResult) -> String {
    let mut s = format!("{} {} {}", r.name, r.variant.map_or("-", |v| v.as_str()), r.status.as_str());
    if let Some(m) = &r.first_mismatch {
        s += &format!(" (first mismatch {} at x^{})", m.item, m.exponent);
    } else if let Some(f) = r.failed_items.first() {
        s += &format!(" ({f})");
    }
    if let Some(e) = &r.error {
        s += &format!(" (error: {e})");
    }
    s
}

fn patterns() -> Outcome {
    let per_map = Duration::from_secs(1);
    let bracket = |m, order| -> (String, Duration) {
        let (bp, d) = timed(|| branching_pattern(&m).expect("pattern"));
        (bp.bracket(order), d)
    };
    let big = [Fiber::Infinity, Fiber::Zero, Fiber::One];
    let small = [Fiber::One, Fiber::Zero, Fiber::Infinity];
    let cases = [
        ("Psi3", bracket(psi3(), big), "[7^3 / 3^7 / 2^8 1^5]"),
        ("Psi4", bracket(psi4(), big), "[7^3 / 4^4 2^2 1 / 2^8 1^5]"),
        ("psi7", bracket(psi7(), small), "[2^2 1^3 / 3^2 1 / 7]"),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, (got, d), want) in cases {
        pass &= got == want && d < per_map;
        parts.push(format!("{name} {got} in {}", ms(d)));
    }
    let literal = branching_pattern(&psi4_paper_literal()).map(|b| b.bracket(big));
    let literal_differs = !matches!(&literal, Ok(s) if s == "[7^3 / 4^4 2^2 1 / 2^8 1^5]");
    pass &= literal_differs;
    parts.push(format!(
        "literal Psi4 factor {}",
        literal.map_or_else(|e| format!("rejected: {e}"), |s| format!("gives {s}"))
    ));
    outcome(pass, parts.join("; "))
}

fn genus() -> Outcome {
    let cases = [
        (("3^7", "2^8 1^5", "7^3"), 0),
        (("4^4 2^2 1", "2^8 1^5", "7^3"), 0),
        (("7^3", "2^8 1^5", "7^3"), 2),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for ((a, b, c), g) in cases {
        let bp = BranchPattern::parse(a, b, c).expect("pattern");
        let (found, d) = timed(|| riemann_hurwitz_genus(&bp, 21).expect("genus"));
        pass &= found == g && d < Duration::from_millis(1);
        parts.push(format!("genus {found} in {}", ms(d)));
    }
    outcome(pass, parts.join("; "))
}

fn composition() -> Outcome {
    let holds = composition_check(&psi7(), &cubic(), &psi3()).expect("composition");
    outcome(holds, format!("psi7 o cubic = Psi3: {holds}"))
}

fn fiber_product() -> Outcome {
    let corrected = fiber_product_check(&HypCurve::h7(), &psi3()).expect("corrected curve");
    let literal = fiber_product_check(&HypCurve::h7_paper_literal(), &psi3()).unwrap_or(false);
    outcome(
        corrected && !literal,
        format!("corrected curve {corrected}, literal curve {literal}"),
    )
}

fn psi4_relation() -> Outcome {
    let c = psi4_relation_check(&HypCurve::h7(), &psi4()).expect("corrected factor");
    let l = psi4_relation_check(&HypCurve::h7(), &psi4_paper_literal()).expect("literal factor");
    outcome(
        c.sigma_invariant && c.matches && !l.matches,
        format!(
            "sigma-invariant {}, corrected factor matches {}, literal factor matches {}",
            c.sigma_invariant, c.matches, l.matches
        ),
    )
}

fn series_identities() -> Outcome {
    let per_check = Duration::from_secs(60);
    let mut pass = true;
    let mut slowest = (String::new(), Duration::ZERO);
    let mut failures = Vec::new();
    let mut jobs: Vec<(&str, usize)> = SERIES_CHECKS.iter().map(|n| (*n, SERIES_ORDER)).collect();
    jobs.push(("case3a_theorem", 60));
    for (name, order) in &jobs {
        let (r, d) = timed(|| run(name, *order, Variant::Corrected));
        if r.status != Status::Pass || d >= per_check {
            pass = false;
            failures.push(format!("{} in {}", summary(&r), ms(d)));
        }
        if d > slowest.1 {
            slowest = (format!("{name} at order {order}"), d);
        }
    }
    let mut detail = format!(
        "{} runs at order {SERIES_ORDER} plus case3a_theorem at 60; slowest {} in {}",
        jobs.len() - 1,
        slowest.0,
        ms(slowest.1)
    );
    if !failures.is_empty() {
        detail += &format!("; failing: {}", failures.join(", "));
    }
    outcome(pass, detail)
}

fn split() -> Outcome {
    let c = run("case4a_split", SERIES_ORDER, Variant::Corrected);
    let l = run("case4a_split", SERIES_ORDER, Variant::PaperLiteral);
    let derived = c.notes.iter().any(|n| n.contains("13/32"));
    let reported = l.failed_items.iter().any(|f| f.contains("13/32") && f.contains("13/22"));
    outcome(
        c.status == Status::Pass && l.status == Status::Fail && derived && reported,
        format!("{}; {}", summary(&c), summary(&l)),
    )
}

fn proposition() -> Outcome {
    let rank = rank_from_proposition(PROPOSITION_ORDER).expect("rank");
    let r = run("case7_proposition", PROPOSITION_ORDER, Variant::Corrected);
    let constants = r.notes.first().cloned().unwrap_or_default();
    outcome(
        rank == 3 && r.status == Status::Pass,
        format!("rank {rank} at order {PROPOSITION_ORDER}; {}; {constants}", summary(&r)),
    )
}

fn divisors() -> Outcome {
    let r = run("divisor_norms", SERIES_ORDER, Variant::Corrected);
    outcome(r.status == Status::Pass, summary(&r))
}

fn typo_ledger() -> Outcome {
    let sign = run("psi3_sign", SERIES_ORDER, Variant::Corrected);
    let sign_literal = run("psi3_sign", SERIES_ORDER, Variant::PaperLiteral);
    let mut pass = sign.status == Status::Pass && sign_literal.status == Status::Fail;
    pass &= sign.reading.as_deref() == Some(PSI3_NORMALIZED_SIGN.corrected);

    let config = RunConfig {
        checks: vec!["fiber_product".into(), "psi4_relation".into(), "case4a_split".into()],
        order: Some(16),
        variant: VariantPolicy::Both,
        ..RunConfig::default()
    };
    let report = execute(&config).expect("report");
    let mut named = Vec::new();
    for want in [CURVE_CUBIC_TERM, PSI4_QUADRATIC_FACTOR, R2_QUADRATIC_COEFFICIENT] {
        let Some(rr) = report.readings.iter().find(|r| r.name == want.name) else {
            pass = false;
            named.push(format!("{} missing", want.name));
            continue;
        };
        let ok = !rr.outcomes.is_empty()
            && rr.outcomes.iter().all(|o| match o.variant {
                Variant::Corrected => o.status == Status::Pass,
                Variant::PaperLiteral => o.status == Status::Fail,
            })
            && rr.outcomes.iter().any(|o| o.variant == Variant::PaperLiteral);
        pass &= ok;
        let outcomes: Vec<String> = rr
            .outcomes
            .iter()
            .map(|o| format!("{} {} {}", o.check, o.variant.as_str(), o.status.as_str()))
            .collect();
        named.push(format!("{} [{}]", rr.name, outcomes.join(", ")));
    }
    outcome(
        pass,
        format!("{}; {}; readings: {}", summary(&sign), summary(&sign_literal), named.join("; ")),
    )
}

fn property_runner() -> TestRunner {
    TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn properties() -> Outcome {
    let mut results = Vec::new();

    let s7 = FieldTower::quadratic("s7", rat(7, 1)).expect("Q(s7)");
    let field = property_runner().run(&(-9i64..10, -9i64..10, 1i64..7), |(a, b, d)| {
        let x = &s7.from_int(a) + &s7.generator().scale(&rat(b, d));
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        Ok(())
    });
    results.push(("field inverse in Q(s7)", field.map_err(|e| e.to_string())));

    let upper = prop::collection::vec((1i64..20, 1i64..9), 3);
    let lower = prop::collection::vec((1i64..20, 1i64..9), 2);
    let hpg = property_runner().run(&(upper, lower), |(u, l)| {
        let Ok(p) = HpgParams::from_pairs(&u, &l) else {
            return Ok(());
        };
        let s = hpg_series(&p, 12).unwrap();
        prop_assert!(apply_hpg_operator(&p, &RadicalSeries::from_series(&s)).unwrap().is_zero());
        Ok(())
    });
    results.push(("3F2 series annihilated by its operator", hpg.map_err(|e| e.to_string())));

    let c = HypCurve::h7();
    let coeffs = || prop::collection::vec(-4i64..5, 0..4);
    let norm = property_runner().run(&(coeffs(), coeffs(), coeffs(), coeffs()), |(a1, b1, a2, b2)| {
        let f = FFElem::poly(&c, Poly::from_ints(&a1), Poly::from_ints(&b1));
        let g = FFElem::poly(&c, Poly::from_ints(&a2), Poly::from_ints(&b2));
        let (nf, ng) = (f.norm().unwrap(), g.norm().unwrap());
        let prod = RatFunc::new(&nf.num * &ng.num, &nf.den * &ng.den).unwrap();
        prop_assert!(f.mul(&g).unwrap().norm().unwrap() == prod);
        Ok(())
    });
    results.push(("norm on the curve is multiplicative", norm.map_err(|e| e.to_string())));

    let failed: Vec<String> = results
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
    let mut detail = format!(
        "{} properties x {PROPERTY_CASES} cases ({}); module suites run under cargo test",
        results.len(),
        names.join(", ")
    );
    if !failed.is_empty() {
        detail += &format!("; failing: {}", failed.join("; "));
    }
    outcome(failed.is_empty(), detail)
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion { id: 1, title: "branching patterns", budget: s(3), run: patterns },
        Criterion { id: 2, title: "Riemann-Hurwitz genera", budget: s(1), run: genus },
        Criterion { id: 3, title: "composition psi7 o cubic", budget: s(5), run: composition },
        Criterion { id: 4, title: "fiber product", budget: s(30), run: fiber_product },
        Criterion { id: 5, title: "Psi4 relation", budget: s(30), run: psi4_relation },
        Criterion { id: 6, title: "series identities", budget: s(60 * SERIES_CHECKS.len() as u64 + 60), run: series_identities },
        Criterion { id: 7, title: "case4a_split", budget: s(10), run: split },
        Criterion { id: 8, title: "proposition rank and constants", budget: s(300), run: proposition },
        Criterion { id: 9, title: "divisor norms", budget: s(5), run: divisors },
        Criterion { id: 10, title: "typo ledger", budget: s(120), run: typo_ledger },
        Criterion { id: 11, title: "property suites", budget: s(900), run: properties },
    ]
}

fn main() -> ExitCode {
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    assert!(registry().len() >= SERIES_CHECKS.len());
    let start = Instant::now();
    let mut failed = 0;
    for c in criteria() {
        if !filter.is_empty() && !filter.contains(&c.id) {
            continue;
        }
        let (o, d) = timed(c.run);
        let pass = o.pass && d < c.budget;
        failed += usize::from(!pass);
        println!(
            "criterion {:>2} {}: {} in {:.2} s (budget {} s): {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            d.as_secs_f64(),
            c.budget.as_secs(),
            o.detail
        );
    }
    println!("acceptance: {failed} failing, total {:.1} s", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
