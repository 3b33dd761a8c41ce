//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always print.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use weakberger::bruteforce::{build_matrix_rep, invariant_bilinear_forms, weak_berger_space, Catalog, Symmetry};
use weakberger::classify::{classify_sl2_partners, enumerate_irreps_with, Branch, EnumerateOptions, Stage};
use weakberger::repweights::{
    duality_and_bilinear_type, product_bilinear_type, product_weight_system, weight_system, weyl_dimension,
    BilinearType, IrrepSpec,
};
use weakberger::rootsys::parse_type;
use weakberger::screens::{
    check_pi, check_pii, check_piii, check_piv, schwachhoefer_class, sii_witness, SchwachhoeferClass, ScreenInput,
};
use weakberger::{build_root_system, Family, WeightVector};

// Set criteria are exact: zero tolerance on membership and counts.
const C1_BUDGET: Duration = Duration::from_secs(300);
const C3_BUDGET: Duration = Duration::from_secs(30);
const C6_BUDGET: Duration = Duration::from_secs(120);
const C9_MAX_DIM: usize = 20;

fn spec(t: &str, labels: &[i64]) -> IrrepSpec {
    let (f, n) = parse_type(t).unwrap();
    IrrepSpec::from_labels(Arc::new(build_root_system(f, n).unwrap()), labels).unwrap()
}

fn input_of(s: &IrrepSpec) -> ScreenInput {
    ScreenInput::from_weight_system(&weight_system(s).unwrap())
}

fn half(nums: &[i64]) -> WeightVector {
    WeightVector::from_fractions(nums, 2)
}

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

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let report = classify_sl2_partners(7, 600);
    let elapsed = t.elapsed();
    let got: BTreeSet<String> = report.admitted_names(Branch::Sl2Partner).into_iter().collect();
    let mut want: BTreeSet<String> = ["A5 ω3", "C3 ω3", "D6 ω6", "E7 ω1", "A1 ω1", "A1 3ω1"]
        .into_iter()
        .map(String::from)
        .collect();
    want.extend((2..=7).map(|n| format!("C{n} ω1")));
    let replays =
        report.admitted.iter().all(|a| a.replay().is_ok()) && report.rejected.iter().all(|r| r.replay().is_ok());
    outcome(
        got == want && replays && elapsed < C1_BUDGET,
        format!("admitted {got:?}; replay {replays}; {elapsed:.1?} (budget {C1_BUDGET:?})"),
    )
}

fn criterion_2() -> Outcome {
    let cases = [
        ("A5", vec![0, 0, 1, 0, 0], 20),
        ("C3", vec![0, 0, 1], 14),
        ("D6", vec![0, 0, 0, 0, 0, 1], 32),
        ("E7", vec![1, 0, 0, 0, 0, 0, 0], 56),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (t, l, want) in cases {
        let s = spec(t, &l);
        let got = weyl_dimension(&s).unwrap();
        let total = weight_system(&s).unwrap().total_dim();
        ok &= got == want && total == want;
        parts.push(format!("{} = {got}", s.name()));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();

    let b6 = spec("B6", &[0, 0, 0, 0, 0, 1]);
    let inp = input_of(&b6);
    let piv = check_piv(&inp);
    let target = half(&[1, 1, 1, -1, -1, -1]);
    let lambda = b6.highest_weight();
    // The stabilizer of Λ = ½(1,...,1) in W(B6) permutes coordinates.
    let sorted = |v: &WeightVector| {
        let mut c: Vec<Rational64> = v.coords().to_vec();
        c.sort();
        c
    };
    let violator = piv
        .refutations()
        .iter()
        .find(|r| &r.candidate == lambda)
        .and_then(|r| r.violators.first().cloned());
    let b6_ok =
        !piv.passed && piv.replay(&inp).is_ok() && violator.as_ref().is_some_and(|v| sorted(v) == sorted(&target));
    parts.push(format!(
        "B6 spin PIV {} against Λ, violator {}",
        if piv.passed { "PASS" } else { "FAIL" },
        violator.map(|v| v.to_string()).unwrap_or_default()
    ));

    let b5 = input_of(&spec("B5", &[0, 0, 0, 0, 1]));
    let (piv5, piii5) = (check_piv(&b5), check_piii(&b5));
    let b5_ok = piv5.passed && !piii5.passed && piv5.replay(&b5).is_ok() && piii5.replay(&b5).is_ok();
    parts.push(format!("B5 spin PIV {} PIII {}", piv5.passed, piii5.passed));

    let b2 = input_of(&spec("B2", &[1, 1]));
    let piv2 = check_piv(&b2);
    let count_ok = b2.weights().len() == 12;
    let b2_ok = count_ok && !piv2.passed;
    parts.push(format!(
        "B2 ω1+ω2 has {} weights; PIV {} (expected FAIL){}",
        b2.weights().len(),
        if piv2.passed { "PASS" } else { "FAIL" },
        if piv2.passed {
            format!(", covered by μ = {}", piv2.witness_weight().unwrap())
        } else {
            String::new()
        }
    ));
    let elapsed = t.elapsed();
    outcome(b6_ok && b5_ok && b2_ok && elapsed < C3_BUDGET, parts.join("; "))
}

fn criterion_4() -> Outcome {
    let report = classify_sl2_partners(1, 12);
    let admitted: BTreeSet<String> = report.admitted_names(Branch::Sl2Partner).into_iter().collect();
    let want: BTreeSet<String> = ["A1 ω1", "A1 3ω1"].into_iter().map(String::from).collect();
    let stage_of = |name: &str| {
        report
            .rejected
            .iter()
            .find(|r| r.candidate.name() == name)
            .map(|r| r.stage)
    };
    let sym4 = stage_of("A1 4ω1");
    let sym5 = stage_of("A1 5ω1");
    let w1 = input_of(&spec("A1", &[1])).weights().len();
    let s4 = input_of(&spec("A1", &[4]));
    let sym4_literal = check_piii(&s4).passed && check_piv(&s4).passed;
    outcome(
        admitted == want && w1 <= 4 && sym4.is_some() && sym5 == Some(Stage::PIII),
        format!(
            "admitted {admitted:?}; Sym4 rejected at {sym4:?} (orthogonal; PIII∧PIV alone {sym4_literal}); Sym5 rejected at {sym5:?}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let specs = enumerate_irreps_with(
        &Family::ALL,
        6,
        &EnumerateOptions {
            max_dim: 100,
            dedup: false,
            include_trivial: false,
        },
    );
    let mut got = BTreeSet::new();
    let mut errors = 0;
    for s in &specs {
        match schwachhoefer_class(&input_of(s)) {
            Ok(SchwachhoeferClass::Exceeds) => {}
            Ok(_) => {
                got.insert(s.name());
            }
            Err(_) => errors += 1,
        }
    }
    // A_n ω1/ωn, B_n ω1, C_n ω1, D_n ω1, and the defining modules hiding in
    // A1 2ω1 = so(3), A3 ω2 = so(6), C2 ω2 = so(5), D4 ω3/ω4 (triality).
    let mut want = BTreeSet::new();
    for n in 1..=6 {
        want.insert(format!("A{n} ω1"));
        if n > 1 {
            want.insert(format!("A{n} ω{n}"));
        }
    }
    for n in 3..=6 {
        want.insert(format!("B{n} ω1"));
    }
    for n in 2..=6 {
        want.insert(format!("C{n} ω1"));
    }
    for n in 4..=6 {
        want.insert(format!("D{n} ω1"));
    }
    for extra in ["A1 2ω1", "A3 ω2", "C2 ω2", "D4 ω3", "D4 ω4"] {
        want.insert(extra.to_string());
    }
    let missing: Vec<_> = want.difference(&got).collect();
    let extra: Vec<_> = got.difference(&want).collect();
    outcome(
        missing.is_empty() && extra.is_empty() && errors == 0,
        format!(
            "{} irreps, {} non-EXCEEDS; missing {missing:?}; unexpected {extra:?}; errors {errors}",
            specs.len(),
            got.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("so3", true),
        ("so4", true),
        ("so5", true),
        ("so6", true),
        ("sp2", true),
        ("sl2_x_sl2", true),
        ("sl2_x_sym3", true),
        ("sl2_x_sym2", false),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, want) in cases {
        let rep = build_matrix_rep(id).unwrap();
        let cert = weak_berger_space(&rep).unwrap();
        let replay = cert.replay(&rep).is_ok();
        let hit = cert.is_weak_berger == want && replay;
        ok &= hit;
        if !hit {
            parts.push(format!(
                "{id}: is_weak_berger {} (expected {want}), dim B_h {}, span {}/{}, {:?} form, replay {replay}",
                cert.is_weak_berger, cert.dim_bh, cert.span_dim, cert.dim_g, cert.form
            ));
        }
    }
    let elapsed = t.elapsed();
    ok &= elapsed < C6_BUDGET;
    if parts.is_empty() {
        parts.push("all certificates as expected and replayed".into());
    }
    parts.push(format!("{elapsed:.1?}"));
    outcome(ok, parts.join("; "))
}

fn criterion_7() -> Outcome {
    let specs = enumerate_irreps_with(
        &Family::ALL,
        7,
        &EnumerateOptions {
            max_dim: 600,
            dedup: true,
            include_trivial: false,
        },
    );
    let (mut symplectic, mut piv_pass, mut counter) = (0, 0, Vec::new());
    for s in specs
        .iter()
        .filter(|s| duality_and_bilinear_type(s) == BilinearType::Symplectic)
    {
        symplectic += 1;
        let inp = input_of(s);
        if check_piv(&inp).passed {
            piv_pass += 1;
            if !sii_witness(&inp).is_some_and(|v| v.replay(&inp).is_ok()) {
                counter.push(s.name());
            }
        }
    }
    outcome(
        counter.is_empty() && piv_pass > 0,
        format!(
            "{symplectic} symplectic irreps, {piv_pass} pass PIV, counterexamples {counter:?} ({} of rank ≥ 2)",
            counter.iter().filter(|n| !n.starts_with("A1 ")).count()
        ),
    )
}

fn criterion_8() -> Outcome {
    let (mut certified, mut counter) = (0, Vec::new());
    for e in Catalog::builtin().entries() {
        let Ok(rep) = build_matrix_rep(&e.id) else { continue };
        let cert = weak_berger_space(&rep).unwrap();
        if !cert.is_weak_berger {
            continue;
        }
        certified += 1;
        let ws = product_weight_system(&e.specs().unwrap()).unwrap();
        let inp = ScreenInput::from_weight_system(&ws);
        let (pi, pii) = (check_pi(&inp), check_pii(&inp));
        if !(pi.passed && pii.passed && pi.replay(&inp).is_ok() && pii.replay(&inp).is_ok()) {
            counter.push(e.id.clone());
        }
    }
    outcome(
        counter.is_empty() && certified > 0,
        format!("{certified} certified entries, counterexamples {counter:?}"),
    )
}

fn criterion_9() -> Outcome {
    let (mut checked, mut disagree) = (0, Vec::new());
    for e in Catalog::builtin().entries() {
        let module = Catalog::builtin().module(&e.id).unwrap();
        if module.dim_v > C9_MAX_DIM {
            continue;
        }
        checked += 1;
        let types: Vec<_> = e.specs().unwrap().iter().map(duality_and_bilinear_type).collect();
        let want = match product_bilinear_type(&types) {
            BilinearType::Orthogonal => vec![Symmetry::Symmetric],
            BilinearType::Symplectic => vec![Symmetry::Antisymmetric],
            BilinearType::NotSelfDual => vec![],
        };
        let got: Vec<_> = invariant_bilinear_forms(&module).iter().map(|f| f.symmetry).collect();
        if got != want {
            disagree.push(e.id.clone());
        }
    }
    outcome(
        disagree.is_empty() && checked > 0,
        format!("{checked} entries of dim ≤ {C9_MAX_DIM}, disagreements {disagree:?}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("final table of sl(2) partners", criterion_1),
        ("dimension checks", criterion_2),
        ("named rejections", criterion_3),
        ("sl(2) ⊕ sl(2) branch", criterion_4),
        ("Schwachhöfer trichotomy", criterion_5),
        ("brute-force certificates", criterion_6),
        ("PIV implies SII", criterion_7),
        ("weak-Berger implies PI and PII", criterion_8),
        ("bilinear-type oracle agreement", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| outcome(false, "panicked"));
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
