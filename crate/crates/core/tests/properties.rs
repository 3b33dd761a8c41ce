use std::collections::HashSet;
use std::sync::Arc;

use num_rational::Rational64;
use proptest::prelude::*;
use weakberger::repweights::{
    duality_and_bilinear_type, product_bilinear_type, product_weight_system, weight_system, weyl_dimension,
    BilinearType, Carrier, IrrepSpec,
};
use weakberger::screens::{check_pi, check_piii, check_piv, omega_alpha, sii_witness, ScreenInput};
use weakberger::{build_root_system, coroot_pairing, Family, RootSystem, WeightVector};

const SMALL_TYPES: [(Family, usize); 10] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 2),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::A, 4),
];

fn all_types() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((Family::A, n));
    }
    for n in 2..=8 {
        out.push((Family::B, n));
        out.push((Family::C, n));
    }
    for n in 3..=8 {
        out.push((Family::D, n));
    }
    out.extend([
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ]);
    out
}

// Independent table of |Δ|.
fn root_count(f: Family, n: usize) -> usize {
    match f {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E => [72, 126, 240][n - 6],
        Family::F => 48,
        Family::G => 12,
    }
}

fn rs(f: Family, n: usize) -> Arc<RootSystem> {
    Arc::new(build_root_system(f, n).unwrap())
}

#[test]
fn root_counts_match_table() {
    for (f, n) in all_types() {
        assert_eq!(rs(f, n).roots().len(), root_count(f, n), "{f:?}{n}");
    }
}

#[test]
fn reflections_permute_roots() {
    for (f, n) in all_types() {
        let r = rs(f, n);
        let set: HashSet<&WeightVector> = r.roots().iter().collect();
        for alpha in r.roots() {
            for beta in r.roots() {
                let image = RootSystem::reflect(beta, alpha).unwrap();
                assert!(set.contains(&image), "{f:?}{n}");
            }
        }
    }
}

#[test]
fn weyl_vector_pairs_to_one() {
    for (f, n) in all_types() {
        let r = rs(f, n);
        for a in r.simple_roots() {
            assert_eq!(coroot_pairing(r.weyl_vector(), a).unwrap(), Rational64::from_integer(1));
        }
    }
}

#[test]
fn product_parity_rule() {
    use BilinearType::*;
    for n in 0..5 {
        for m in 0..3 {
            let mut types = vec![Symplectic; n];
            types.extend(vec![Orthogonal; m]);
            if types.is_empty() {
                continue;
            }
            let want = if n % 2 == 0 { Orthogonal } else { Symplectic };
            assert_eq!(product_bilinear_type(&types), want);
            types.push(NotSelfDual);
            assert_eq!(product_bilinear_type(&types), NotSelfDual);
        }
    }
}

fn small_spec() -> impl Strategy<Value = IrrepSpec> {
    (0..SMALL_TYPES.len(), proptest::collection::vec(0i64..=2, 4))
        .prop_map(|(t, labels)| {
            let (f, n) = SMALL_TYPES[t];
            IrrepSpec::from_labels(rs(f, n), &labels[..n]).unwrap()
        })
        .prop_filter("dimension at most 150", |s| weyl_dimension(s).is_ok_and(|d| d <= 150))
}

fn nontrivial_spec() -> impl Strategy<Value = IrrepSpec> {
    small_spec().prop_filter("nontrivial", |s| !s.is_trivial())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_orbit_closed(spec in small_spec()) {
        let r = spec.root_system();
        let orbit = r.weyl_orbit(spec.highest_weight());
        for v in &orbit {
            for i in 0..r.rank() {
                prop_assert!(orbit.contains(&r.simple_reflection(v, i)));
            }
        }
    }

    #[test]
    fn weight_system_invariants(spec in small_spec()) {
        let ws = weight_system(&spec).unwrap();
        let r = spec.root_system();
        prop_assert_eq!(ws.multiplicity(spec.highest_weight()), 1);
        prop_assert_eq!(ws.total_dim(), weyl_dimension(&spec).unwrap());
        for e in ws.entries() {
            for i in 0..r.rank() {
                let image = r.simple_reflection(&e.weight, i);
                prop_assert_eq!(ws.multiplicity(&image), e.multiplicity);
            }
        }
        if r.family() == Family::C {
            prop_assert_ne!(duality_and_bilinear_type(&spec), BilinearType::NotSelfDual);
        }
    }

    #[test]
    fn product_dimension(a in small_spec(), b in small_spec()) {
        let ws = product_weight_system(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(ws.total_dim(), weyl_dimension(&a).unwrap() * weyl_dimension(&b).unwrap());
    }

    #[test]
    fn omega_alpha_shifts_into_omega(spec in nontrivial_spec()) {
        let ws = weight_system(&spec).unwrap();
        let input = ScreenInput::from_weight_system(&ws);
        for alpha in input.roots() {
            for w in omega_alpha(input.weights(), alpha).unwrap() {
                prop_assert!(input.contains(&(&w + alpha)));
            }
        }
    }

    #[test]
    fn product_omega_alpha_lemma(a in nontrivial_spec(), b in small_spec()) {
        let prod = product_weight_system(&[a.clone(), b.clone()]).unwrap();
        let w1 = weight_system(&a).unwrap().support();
        let w2 = weight_system(&b).unwrap().support();
        let total = prod.carrier().ambient_dim();
        let d1 = a.root_system().ambient_dim();
        let omega = prod.support();
        for alpha in a.root_system().roots() {
            let lifted = alpha.embed(0, total);
            let got: HashSet<WeightVector> = omega_alpha(&omega, &lifted).unwrap().into_iter().collect();
            let want: HashSet<WeightVector> = omega_alpha(&w1, alpha)
                .unwrap()
                .iter()
                .flat_map(|x| w2.iter().map(move |y| WeightVector::concat([x, y])))
                .collect();
            prop_assert_eq!(&got, &want);
            prop_assert!(got.iter().all(|v| v.dim() == d1 + b.root_system().ambient_dim()));
        }
    }

    #[test]
    fn passes_survive_adding_translates(spec in nontrivial_spec(), picks in proptest::collection::vec(any::<bool>(), 64)) {
        let ws = weight_system(&spec).unwrap();
        let carrier = Carrier::single(spec.root_system().clone());
        let input = ScreenInput::from_weight_system(&ws);
        let mut roots0 = input.roots().to_vec();
        roots0.push(WeightVector::zeros(carrier.ambient_dim()));
        let mut picks = picks.into_iter().cycle();

        let pi = check_pi(&input);
        if let Some(mu) = pi.witness_weight().filter(|_| pi.passed) {
            let mut weights = input.weights().to_vec();
            for b in &roots0 {
                for base in [mu.clone(), -mu] {
                    let v = &base + b;
                    if picks.next().unwrap() && !weights.contains(&v) {
                        weights.push(v);
                    }
                }
            }
            let grown = ScreenInput::from_weights(weights, &carrier).unwrap();
            prop_assert!(grown.pi_holds_for(mu));
        }

        let piii = check_piii(&input);
        if let Some(mu) = piii.witness_weight().filter(|_| piii.passed) {
            let mut weights = input.weights().to_vec();
            for b in &roots0 {
                let v = mu + b;
                if picks.next().unwrap() && !weights.contains(&v) {
                    weights.push(v);
                }
            }
            let grown = ScreenInput::from_weights(weights, &carrier).unwrap();
            prop_assert!(grown.piii_holds_for(mu));
        }
    }

    #[test]
    fn verdicts_replay(spec in nontrivial_spec()) {
        let ws = weight_system(&spec).unwrap();
        let input = ScreenInput::from_weight_system(&ws);
        for v in [check_pi(&input), check_piii(&input), check_piv(&input)] {
            prop_assert!(v.replay(&input).is_ok(), "{}", v);
        }
    }

    #[test]
    fn piv_implies_sii(spec in nontrivial_spec()) {
        // A1 5ω1 is a known counterexample, so rank 1 is skipped.
        prop_assume!(spec.root_system().rank() >= 2);
        prop_assume!(duality_and_bilinear_type(&spec) == BilinearType::Symplectic);
        let ws = weight_system(&spec).unwrap();
        let input = ScreenInput::from_weight_system(&ws);
        if check_piv(&input).passed {
            let sii = sii_witness(&input);
            prop_assert!(sii.as_ref().is_some_and(|v| v.replay(&input).is_ok()));
        }
    }
}
