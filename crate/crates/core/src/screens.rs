//! Weak-Berger screening predicates on finite weight sets.
//!
//! Each check searches its candidate witnesses in canonical order and records
//! the first one that works. A failing check records, for every candidate, the
//! evidence that defeats it, so both outcomes can be replayed by
//! [`ScreenVerdict::replay`] using nothing but set membership and rank tests.
//!
//! Hyperplane conditions reduce to rank deficiency: a set lies in a linear
//! hyperplane of `t*` iff its span has dimension below `rank`, and in an affine
//! hyperplane iff its affine hull does.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::repweights::{Carrier, WeightSystem};
use crate::rootsys::WeightVector;

fn ser_q<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Predicate {
    PI,
    PII,
    SI,
    SII,
    PIII,
    PIV,
    #[serde(rename = "SCHWACHHOEFER")]
    Schwachhoefer,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Predicate::PI => "PI",
            Predicate::PII => "PII",
            Predicate::SI => "SI",
            Predicate::SII => "SII",
            Predicate::PIII => "PIII",
            Predicate::PIV => "PIV",
            Predicate::Schwachhoefer => "SCHWACHHOEFER",
        })
    }
}

/// `{v : ⟨normal, v⟩ = offset}` with `normal` a nonzero element of `t*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub normal: WeightVector,
    #[serde(serialize_with = "ser_q")]
    pub offset: Q,
}

impl Hyperplane {
    pub fn contains(&self, v: &WeightVector) -> bool {
        self.normal.dot(v) == self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootChoice {
    pub alpha: WeightVector,
    pub mu: WeightVector,
}

/// Why one candidate witness fails: either a single uncovered weight, or a
/// set of leftover weights spanning all of `t*` (linearly or affinely).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub candidate: WeightVector,
    pub violators: Vec<WeightVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// PI, PIII and SI: the chosen weight and a hyperplane containing the leftover set.
    Hyperplane { mu: WeightVector, hyperplane: Hyperplane },
    /// PIV: the covering weight.
    Cover { mu: WeightVector },
    /// PII: one covering weight per root.
    PerRoot { choices: Vec<RootChoice> },
    /// SII: the extremal weight and the root realizing the inclusion.
    Root {
        extremal: WeightVector,
        alpha: WeightVector,
    },
    /// A failing check: evidence against every candidate. `root` is the failing
    /// root for PII.
    Refuted {
        root: Option<WeightVector>,
        refutations: Vec<Refutation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenVerdict {
    pub predicate: Predicate,
    pub passed: bool,
    pub witness: Witness,
}

impl ScreenVerdict {
    fn pass(predicate: Predicate, witness: Witness) -> Self {
        Self {
            predicate,
            passed: true,
            witness,
        }
    }

    fn fail(predicate: Predicate, root: Option<WeightVector>, refutations: Vec<Refutation>) -> Self {
        Self {
            predicate,
            passed: false,
            witness: Witness::Refuted { root, refutations },
        }
    }

    /// First violating weight of a failed verdict (against the first candidate).
    pub fn violating_weight(&self) -> Option<&WeightVector> {
        match &self.witness {
            Witness::Refuted { refutations, .. } => refutations.first()?.violators.first(),
            _ => None,
        }
    }

    pub fn refutations(&self) -> &[Refutation] {
        match &self.witness {
            Witness::Refuted { refutations, .. } => refutations,
            _ => &[],
        }
    }

    /// The weight chosen by a passing PI, PIII, PIV or SI verdict.
    pub fn witness_weight(&self) -> Option<&WeightVector> {
        match &self.witness {
            Witness::Hyperplane { mu, .. } | Witness::Cover { mu } => Some(mu),
            Witness::Root { extremal, .. } => Some(extremal),
            _ => None,
        }
    }

    /// Re-verifies the verdict against `input` from its witnesses alone.
    pub fn replay(&self, input: &ScreenInput) -> std::result::Result<(), String> {
        replay::check(self, input)
    }
}

impl fmt::Display for ScreenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{} {}", self.predicate, status)?;
        match &self.witness {
            Witness::Hyperplane { mu, hyperplane } => write!(
                f,
                " mu={mu} hyperplane: <{}, v> = {}",
                hyperplane.normal, hyperplane.offset
            ),
            Witness::Cover { mu } => write!(f, " mu={mu}"),
            Witness::PerRoot { choices } => write!(f, " ({} roots covered)", choices.len()),
            Witness::Root { extremal, alpha } => write!(f, " Lambda={extremal} alpha={alpha}"),
            Witness::Refuted { root, refutations } => {
                if let Some(a) = root {
                    write!(f, " alpha={a}")?;
                }
                if let Some(r) = refutations.first() {
                    write!(f, " against mu={}: violating {}", r.candidate, r.violators[0])?;
                    if r.violators.len() > 1 {
                        write!(f, " (+{} more)", r.violators.len() - 1)?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A weight set Ω together with the roots Δ and a basis of `t*`.
#[derive(Clone, Debug)]
pub struct ScreenInput {
    weights: Vec<WeightVector>,
    weight_set: HashSet<WeightVector>,
    roots: Vec<WeightVector>,
    roots0: HashSet<WeightVector>,
    basis: Vec<WeightVector>,
    ambient: usize,
}

impl ScreenInput {
    /// `weights` keeps its order (duplicates dropped); `basis` spans `t*`.
    pub fn new(weights: Vec<WeightVector>, roots: Vec<WeightVector>, basis: Vec<WeightVector>) -> Result<Self> {
        let ambient = basis
            .first()
            .or(weights.first())
            .map(WeightVector::dim)
            .ok_or(Error::EmptyWeightSet)?;
        if weights.is_empty() {
            return Err(Error::EmptyWeightSet);
        }
        for v in weights.iter().chain(&roots).chain(&basis) {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.dim(),
                });
            }
        }
        let mut weight_set = HashSet::new();
        let weights: Vec<_> = weights.into_iter().filter(|w| weight_set.insert(w.clone())).collect();
        let mut roots0: HashSet<_> = roots.iter().cloned().collect();
        roots0.insert(WeightVector::zeros(ambient));
        Ok(Self {
            weights,
            weight_set,
            roots,
            roots0,
            basis,
            ambient,
        })
    }

    pub fn from_weights(weights: Vec<WeightVector>, carrier: &Carrier) -> Result<Self> {
        Self::new(weights, carrier.roots(), carrier.simple_roots())
    }

    /// Ω of a weight system (multiplicities dropped) with the roots of its carrier.
    pub fn from_weight_system(ws: &WeightSystem) -> Self {
        Self::from_weights(ws.support(), ws.carrier()).expect("weight systems are nonempty")
    }

    pub fn weights(&self) -> &[WeightVector] {
        &self.weights
    }

    pub fn roots(&self) -> &[WeightVector] {
        &self.roots
    }

    /// Dimension of `t*`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.weight_set.contains(w)
    }

    pub fn in_roots0(&self, v: &WeightVector) -> bool {
        self.roots0.contains(v)
    }

    /// `λ ∈ {c + β | β ∈ Δ₀}`.
    fn near(&self, lambda: &WeightVector, center: &WeightVector) -> bool {
        self.roots0.contains(&(lambda - center))
    }

    /// `λ ∈ {c + β} ∪ {-c + β}`.
    fn near_pm(&self, lambda: &WeightVector, center: &WeightVector) -> bool {
        self.near(lambda, center) || self.roots0.contains(&(lambda + center))
    }

    pub fn omega_alpha(&self, alpha: &WeightVector) -> Vec<WeightVector> {
        self.weights
            .iter()
            .filter(|m| self.weight_set.contains(&(*m + alpha)))
            .cloned()
            .collect()
    }

    /// Weights of maximal norm: the Weyl orbit of the highest weight.
    pub fn extremal_weights(&self) -> Vec<WeightVector> {
        let max = self
            .weights
            .iter()
            .map(WeightVector::norm2)
            .max()
            .unwrap_or_else(Q::zero);
        self.weights.iter().filter(|w| w.norm2() == max).cloned().collect()
    }

    fn linear_rank(&self, set: &[WeightVector]) -> usize {
        linalg::rank_capped(set.iter().map(|v| v.coords()), self.ambient, self.rank())
    }

    fn affine_rank(&self, set: &[WeightVector]) -> usize {
        match set.split_first() {
            None => 0,
            Some((first, rest)) => {
                let diffs: Vec<WeightVector> = rest.iter().map(|v| v - first).collect();
                self.linear_rank(&diffs)
            }
        }
    }

    /// A subset of `set` spanning as much as `set` does, at most `rank` vectors.
    fn spanning_subset(&self, set: &[WeightVector]) -> Vec<WeightVector> {
        linalg::independent_subset(set.iter().map(|v| v.coords()), self.ambient)
            .into_iter()
            .take(self.rank())
            .map(|i| set[i].clone())
            .collect()
    }

    /// Points of `set` whose affine hull is as large as that of `set`.
    fn affine_spanning_subset(&self, set: &[WeightVector]) -> Vec<WeightVector> {
        let Some((first, rest)) = set.split_first() else {
            return Vec::new();
        };
        let diffs: Vec<WeightVector> = rest.iter().map(|v| v - first).collect();
        let mut out = vec![first.clone()];
        out.extend(
            linalg::independent_subset(diffs.iter().map(|v| v.coords()), self.ambient)
                .into_iter()
                .take(self.rank())
                .map(|i| rest[i].clone()),
        );
        out
    }

    /// A hyperplane through the origin containing `set`, if one exists.
    fn linear_hyperplane(&self, set: &[WeightVector]) -> Option<Hyperplane> {
        if self.linear_rank(set) >= self.rank() {
            return None;
        }
        let rows: Vec<Vec<Q>> = set
            .iter()
            .map(|v| self.basis.iter().map(|b| v.dot(b)).collect())
            .collect();
        let null = linalg::nullspace(&rows, self.rank());
        let coeffs = linalg::to_q(null.first()?)?;
        Some(Hyperplane {
            normal: self.combine_basis(&coeffs),
            offset: Q::zero(),
        })
    }

    /// An affine hyperplane containing `set`, if one exists.
    fn affine_hyperplane(&self, set: &[WeightVector]) -> Option<Hyperplane> {
        if self.affine_rank(set) >= self.rank() {
            return None;
        }
        if set.is_empty() {
            return Some(Hyperplane {
                normal: self.basis[0].clone(),
                offset: Q::zero(),
            });
        }
        let r = self.rank();
        let rows: Vec<Vec<Q>> = set
            .iter()
            .map(|v| {
                let mut row: Vec<Q> = self.basis.iter().map(|b| v.dot(b)).collect();
                row.push(-Q::from_integer(1));
                row
            })
            .collect();
        let null = linalg::nullspace(&rows, r + 1);
        let sol = linalg::to_q(null.first()?)?;
        Some(Hyperplane {
            normal: self.combine_basis(&sol[..r]),
            offset: sol[r],
        })
    }

    fn combine_basis(&self, coeffs: &[Q]) -> WeightVector {
        coeffs
            .iter()
            .zip(&self.basis)
            .fold(WeightVector::zeros(self.ambient), |acc, (c, b)| &acc + &b.scale(*c))
    }

    /// `Ω \ ({μ+β} ∪ {-μ+β})`.
    fn pi_leftover(&self, mu: &WeightVector) -> Vec<WeightVector> {
        self.weights.iter().filter(|l| !self.near_pm(l, mu)).cloned().collect()
    }

    /// `Ω \ ({μ+β} ∪ {-μ})`.
    fn piii_leftover(&self, mu: &WeightVector) -> Vec<WeightVector> {
        let minus = -mu;
        self.weights
            .iter()
            .filter(|l| !self.near(l, mu) && **l != minus)
            .cloned()
            .collect()
    }

    /// Whether `μ` witnesses PI.
    pub fn pi_holds_for(&self, mu: &WeightVector) -> bool {
        self.linear_rank(&self.pi_leftover(mu)) < self.rank()
    }

    /// Whether `μ` witnesses PIII.
    pub fn piii_holds_for(&self, mu: &WeightVector) -> bool {
        self.affine_rank(&self.piii_leftover(mu)) < self.rank()
    }

    /// Whether `μ` witnesses PIV.
    pub fn piv_holds_for(&self, mu: &WeightVector) -> bool {
        self.weights.iter().all(|l| self.near_pm(l, mu))
    }

    /// Whether `Ω_α ⊂ {μ-α+β} ∪ {-μ+β}`.
    fn covers_omega_alpha(
        &self,
        omega_alpha: &[WeightVector],
        alpha: &WeightVector,
        mu: &WeightVector,
    ) -> Option<WeightVector> {
        let shifted = mu - alpha;
        omega_alpha
            .iter()
            .find(|l| !(self.near(l, &shifted) || self.roots0.contains(&(*l + mu))))
            .cloned()
    }
}

/// `Ω_α = {μ ∈ Ω | μ+α ∈ Ω}`.
pub fn omega_alpha(omega: &[WeightVector], alpha: &WeightVector) -> Result<Vec<WeightVector>> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let set: HashSet<&WeightVector> = omega.iter().collect();
    Ok(omega.iter().filter(|m| set.contains(&(*m + alpha))).cloned().collect())
}

/// There is `μ ∈ Ω` and a linear hyperplane `U` with `Ω ⊂ {μ+β} ∪ U ∪ {-μ+β}`.
pub fn check_pi(input: &ScreenInput) -> ScreenVerdict {
    let mut refutations = Vec::new();
    for mu in &input.weights {
        let left = input.pi_leftover(mu);
        if let Some(hyperplane) = input.linear_hyperplane(&left) {
            return ScreenVerdict::pass(
                Predicate::PI,
                Witness::Hyperplane {
                    mu: mu.clone(),
                    hyperplane,
                },
            );
        }
        refutations.push(Refutation {
            candidate: mu.clone(),
            violators: input.spanning_subset(&left),
        });
    }
    ScreenVerdict::fail(Predicate::PI, None, refutations)
}

/// For every `α ∈ Δ` there is `μ_α ∈ Ω` with `Ω_α ⊂ {μ_α-α+β} ∪ {-μ_α+β}`.
pub fn check_pii(input: &ScreenInput) -> ScreenVerdict {
    let mut choices = Vec::with_capacity(input.roots.len());
    for alpha in &input.roots {
        let oa = input.omega_alpha(alpha);
        match input
            .weights
            .iter()
            .find(|mu| input.covers_omega_alpha(&oa, alpha, mu).is_none())
        {
            Some(mu) => choices.push(RootChoice {
                alpha: alpha.clone(),
                mu: mu.clone(),
            }),
            None => {
                let refutations = input
                    .weights
                    .iter()
                    .map(|mu| Refutation {
                        candidate: mu.clone(),
                        violators: vec![input.covers_omega_alpha(&oa, alpha, mu).expect("no cover")],
                    })
                    .collect();
                return ScreenVerdict::fail(Predicate::PII, Some(alpha.clone()), refutations);
            }
        }
    }
    ScreenVerdict::pass(Predicate::PII, Witness::PerRoot { choices })
}

/// SI and SII for a fixed extremal weight `Λ`.
pub fn check_si_sii(input: &ScreenInput, lambda: &WeightVector) -> Result<(ScreenVerdict, ScreenVerdict)> {
    let extremal = input.extremal_weights();
    if !extremal.contains(lambda) {
        return Err(Error::NotExtremal(lambda.to_string()));
    }
    let minus = -lambda;

    let mut si_set: Vec<WeightVector> = extremal
        .iter()
        .filter(|e| **e != *lambda && **e != minus)
        .cloned()
        .collect();
    si_set.extend(input.pi_leftover(lambda));
    let si = match input.linear_hyperplane(&si_set) {
        Some(hyperplane) => ScreenVerdict::pass(
            Predicate::SI,
            Witness::Hyperplane {
                mu: lambda.clone(),
                hyperplane,
            },
        ),
        None => ScreenVerdict::fail(
            Predicate::SI,
            None,
            vec![Refutation {
                candidate: lambda.clone(),
                violators: input.spanning_subset(&si_set),
            }],
        ),
    };

    let mut refutations = Vec::new();
    let mut sii = None;
    for alpha in &input.roots {
        let oa = input.omega_alpha(alpha);
        match input.covers_omega_alpha(&oa, alpha, lambda) {
            None => {
                sii = Some(ScreenVerdict::pass(
                    Predicate::SII,
                    Witness::Root {
                        extremal: lambda.clone(),
                        alpha: alpha.clone(),
                    },
                ));
                break;
            }
            Some(v) => refutations.push(Refutation {
                candidate: alpha.clone(),
                violators: vec![v],
            }),
        }
    }
    let sii = sii.unwrap_or_else(|| ScreenVerdict::fail(Predicate::SII, Some(lambda.clone()), refutations));
    Ok((si, sii))
}

/// The first extremal weight for which SII holds, as its passing verdict.
pub fn sii_witness(input: &ScreenInput) -> Option<ScreenVerdict> {
    input
        .extremal_weights()
        .iter()
        .filter_map(|l| check_si_sii(input, l).ok())
        .map(|(_, sii)| sii)
        .find(|v| v.passed)
}

/// There is `μ ∈ Ω` and an affine hyperplane `A` with `Ω ⊂ {μ+β} ∪ A ∪ {-μ}`.
pub fn check_piii(input: &ScreenInput) -> ScreenVerdict {
    let mut refutations = Vec::new();
    for mu in &input.weights {
        let left = input.piii_leftover(mu);
        if let Some(hyperplane) = input.affine_hyperplane(&left) {
            return ScreenVerdict::pass(
                Predicate::PIII,
                Witness::Hyperplane {
                    mu: mu.clone(),
                    hyperplane,
                },
            );
        }
        refutations.push(Refutation {
            candidate: mu.clone(),
            violators: input.affine_spanning_subset(&left),
        });
    }
    ScreenVerdict::fail(Predicate::PIII, None, refutations)
}

/// There is `μ ∈ Ω` with `Ω ⊂ {μ+β} ∪ {-μ+β}`.
pub fn check_piv(input: &ScreenInput) -> ScreenVerdict {
    let mut refutations = Vec::new();
    for mu in &input.weights {
        match input.weights.iter().find(|l| !input.near_pm(l, mu)) {
            None => return ScreenVerdict::pass(Predicate::PIV, Witness::Cover { mu: mu.clone() }),
            Some(l) => refutations.push(Refutation {
                candidate: mu.clone(),
                violators: vec![l.clone()],
            }),
        }
    }
    ScreenVerdict::fail(Predicate::PIV, None, refutations)
}

/// Shape of the sets `Ω_α` over all roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SchwachhoeferClass {
    /// Every `Ω_α` has exactly one element.
    SingletonAll,
    /// Every `Ω_α` has two elements summing to `-α`.
    PairsSumMinusAlpha,
    /// Each `Ω_α` is either `{-α/2}` or a pair summing to `-α`, and both occur.
    MixedSymplectic,
    /// Some `Ω_α` has at least three elements.
    Exceeds,
}

impl fmt::Display for SchwachhoeferClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchwachhoeferClass::SingletonAll => "SINGLETON_ALL",
            SchwachhoeferClass::PairsSumMinusAlpha => "PAIRS_SUM_MINUS_ALPHA",
            SchwachhoeferClass::MixedSymplectic => "MIXED_SYMPLECTIC",
            SchwachhoeferClass::Exceeds => "EXCEEDS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchwachhoeferReport {
    pub class: SchwachhoeferClass,
    pub max_size: usize,
    /// For `Exceeds`: the first root with `#Ω_α ≥ 3` and its `Ω_α`.
    pub exceeding: Option<(WeightVector, Vec<WeightVector>)>,
}

pub fn schwachhoefer(input: &ScreenInput) -> Result<SchwachhoeferReport> {
    let half = Q::new(1, 2);
    let mut max_size = 0;
    let (mut singletons, mut halves, mut pairs) = (0usize, 0usize, 0usize);
    for alpha in &input.roots {
        let oa = input.omega_alpha(alpha);
        max_size = max_size.max(oa.len());
        match oa.len() {
            0 => return Err(Error::NotFaithful),
            1 => {
                singletons += 1;
                if oa[0] == alpha.scale(-half) {
                    halves += 1;
                }
            }
            2 => {
                if &oa[0] + &oa[1] == -alpha {
                    pairs += 1;
                }
            }
            _ => {
                return Ok(SchwachhoeferReport {
                    class: SchwachhoeferClass::Exceeds,
                    max_size: oa.len(),
                    exceeding: Some((alpha.clone(), oa)),
                })
            }
        }
    }
    let n = input.roots.len();
    let class = if singletons == n {
        SchwachhoeferClass::SingletonAll
    } else if pairs == n {
        SchwachhoeferClass::PairsSumMinusAlpha
    } else if halves > 0 && pairs > 0 && halves + pairs == n {
        SchwachhoeferClass::MixedSymplectic
    } else {
        return Err(Error::UnrecognizedPattern { max: max_size });
    };
    Ok(SchwachhoeferReport {
        class,
        max_size,
        exceeding: None,
    })
}

pub fn schwachhoefer_class(input: &ScreenInput) -> Result<SchwachhoeferClass> {
    schwachhoefer(input).map(|r| r.class)
}

mod replay {
    use super::*;

    fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
        if cond {
            Ok(())
        } else {
            Err(msg())
        }
    }

    fn hyperplane_ok(input: &ScreenInput, h: &Hyperplane, affine: bool) -> std::result::Result<(), String> {
        ensure(!h.normal.is_zero(), || "zero normal".into())?;
        ensure(affine || h.offset.is_zero(), || "linear hyperplane with offset".into())?;
        let mut with_normal: Vec<WeightVector> = input.basis.clone();
        with_normal.push(h.normal.clone());
        ensure(input.linear_rank(&with_normal) == input.rank(), || {
            "normal outside t*".into()
        })
    }

    /// Each candidate in `candidates` has a refutation, in order.
    fn covers_candidates<'a>(
        refutations: &[Refutation],
        candidates: impl IntoIterator<Item = &'a WeightVector>,
    ) -> std::result::Result<(), String> {
        let cands: Vec<_> = candidates.into_iter().collect();
        ensure(refutations.len() == cands.len(), || {
            format!("{} refutations for {} candidates", refutations.len(), cands.len())
        })?;
        for (r, c) in refutations.iter().zip(cands) {
            ensure(r.candidate == *c, || format!("refutation out of order at {c}"))?;
        }
        Ok(())
    }

    pub(super) fn check(v: &ScreenVerdict, input: &ScreenInput) -> std::result::Result<(), String> {
        let r = input.rank();
        match (v.predicate, &v.witness) {
            (Predicate::PI, Witness::Hyperplane { mu, hyperplane }) => {
                ensure(v.passed && input.contains(mu), || "PI witness not in Ω".into())?;
                hyperplane_ok(input, hyperplane, false)?;
                for l in &input.weights {
                    ensure(input.near_pm(l, mu) || hyperplane.contains(l), || {
                        format!("{l} uncovered")
                    })?;
                }
                Ok(())
            }
            (Predicate::PIII, Witness::Hyperplane { mu, hyperplane }) => {
                ensure(v.passed && input.contains(mu), || "PIII witness not in Ω".into())?;
                hyperplane_ok(input, hyperplane, true)?;
                let minus = -mu;
                for l in &input.weights {
                    ensure(input.near(l, mu) || *l == minus || hyperplane.contains(l), || {
                        format!("{l} uncovered")
                    })?;
                }
                Ok(())
            }
            (Predicate::SI, Witness::Hyperplane { mu, hyperplane }) => {
                ensure(v.passed && input.extremal_weights().contains(mu), || {
                    "SI weight not extremal".into()
                })?;
                hyperplane_ok(input, hyperplane, false)?;
                let minus = -mu;
                for e in input.extremal_weights() {
                    ensure(e == *mu || e == minus || hyperplane.contains(&e), || {
                        format!("extremal {e} off U")
                    })?;
                }
                for l in &input.weights {
                    ensure(input.near_pm(l, mu) || hyperplane.contains(l), || {
                        format!("{l} uncovered")
                    })?;
                }
                Ok(())
            }
            (Predicate::PIV, Witness::Cover { mu }) => {
                ensure(v.passed && input.contains(mu), || "PIV witness not in Ω".into())?;
                for l in &input.weights {
                    ensure(input.near_pm(l, mu), || format!("{l} uncovered"))?;
                }
                Ok(())
            }
            (Predicate::PII, Witness::PerRoot { choices }) => {
                ensure(v.passed && choices.len() == input.roots.len(), || {
                    "PII choice count".into()
                })?;
                for (c, a) in choices.iter().zip(&input.roots) {
                    ensure(c.alpha == *a && input.contains(&c.mu), || "PII choice mismatch".into())?;
                    let oa = input.omega_alpha(a);
                    ensure(input.covers_omega_alpha(&oa, a, &c.mu).is_none(), || {
                        format!("PII fails at {a}")
                    })?;
                }
                Ok(())
            }
            (Predicate::SII, Witness::Root { extremal, alpha }) => {
                ensure(v.passed && input.extremal_weights().contains(extremal), || {
                    "SII weight not extremal".into()
                })?;
                ensure(input.roots.contains(alpha), || "SII alpha not a root".into())?;
                let oa = input.omega_alpha(alpha);
                ensure(input.covers_omega_alpha(&oa, alpha, extremal).is_none(), || {
                    "SII inclusion fails".into()
                })
            }
            (pred, Witness::Refuted { root, refutations }) => {
                ensure(!v.passed, || "refuted verdict marked as passed".into())?;
                match pred {
                    Predicate::PI => {
                        covers_candidates(refutations, &input.weights)?;
                        for rf in refutations {
                            let left: HashSet<_> = input.pi_leftover(&rf.candidate).into_iter().collect();
                            ensure(rf.violators.iter().all(|x| left.contains(x)), || {
                                "violator covered".into()
                            })?;
                            ensure(input.linear_rank(&rf.violators) == r, || "violators do not span".into())?;
                        }
                        Ok(())
                    }
                    Predicate::PIII => {
                        covers_candidates(refutations, &input.weights)?;
                        for rf in refutations {
                            let left: HashSet<_> = input.piii_leftover(&rf.candidate).into_iter().collect();
                            ensure(rf.violators.iter().all(|x| left.contains(x)), || {
                                "violator covered".into()
                            })?;
                            ensure(input.affine_rank(&rf.violators) == r, || {
                                "violators lie on a hyperplane".into()
                            })?;
                        }
                        Ok(())
                    }
                    Predicate::PIV => {
                        covers_candidates(refutations, &input.weights)?;
                        for rf in refutations {
                            let l = &rf.violators[0];
                            ensure(input.contains(l) && !input.near_pm(l, &rf.candidate), || {
                                format!("{l} is covered")
                            })?;
                        }
                        Ok(())
                    }
                    Predicate::PII => {
                        let alpha = root.as_ref().ok_or("PII refutation without root")?;
                        ensure(input.roots.contains(alpha), || "not a root".into())?;
                        covers_candidates(refutations, &input.weights)?;
                        let oa = input.omega_alpha(alpha);
                        for rf in refutations {
                            let l = &rf.violators[0];
                            ensure(oa.contains(l), || format!("{l} not in Ω_α"))?;
                            let single = [l.clone()];
                            ensure(
                                input.covers_omega_alpha(&single, alpha, &rf.candidate).is_some(),
                                || format!("{l} is covered"),
                            )?;
                        }
                        Ok(())
                    }
                    Predicate::SI => {
                        let lambda = &refutations.first().ok_or("empty SI refutation")?.candidate;
                        ensure(input.extremal_weights().contains(lambda), || {
                            "SI weight not extremal".into()
                        })?;
                        let minus = -lambda;
                        let mut allowed: HashSet<WeightVector> = input.pi_leftover(lambda).into_iter().collect();
                        allowed.extend(
                            input
                                .extremal_weights()
                                .into_iter()
                                .filter(|e| e != lambda && *e != minus),
                        );
                        let vs = &refutations[0].violators;
                        ensure(vs.iter().all(|x| allowed.contains(x)), || {
                            "SI violator not admissible".into()
                        })?;
                        ensure(input.linear_rank(vs) == r, || "SI violators do not span".into())
                    }
                    Predicate::SII => {
                        let lambda = root.as_ref().ok_or("SII refutation without extremal weight")?;
                        covers_candidates(refutations, &input.roots)?;
                        for rf in refutations {
                            let oa = input.omega_alpha(&rf.candidate);
                            let l = &rf.violators[0];
                            ensure(oa.contains(l), || format!("{l} not in Ω_α"))?;
                            let single = [l.clone()];
                            ensure(
                                input.covers_omega_alpha(&single, &rf.candidate, lambda).is_some(),
                                || format!("{l} is covered"),
                            )?;
                        }
                        Ok(())
                    }
                    Predicate::Schwachhoefer => Err("no replay for SCHWACHHOEFER".into()),
                }
            }
            (p, w) => Err(format!("witness {w:?} does not belong to {p}")),
        }
    }
}
