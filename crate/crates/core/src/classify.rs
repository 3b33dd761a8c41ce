//! Classification sweeps over candidate representations.
//!
//! Three branches, each a filter pipeline recording the first failing check:
//!
//! - pairs `g1 ⊕ g2` on `V1 ⊗ V2` with both `dim Vi ≥ 3`: parity, then `#Ω^i_α ≤ 2`;
//! - `sl(2) ⊕ g2` on `C^2 ⊗ V2` with `g2` simple: parity, then PIV, then PIII;
//! - `sl(2) ⊕ sl(2) ⊕ g3`: parity, then `#Ω^3_α ≤ 2`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::repweights::{
    duality_and_bilinear_type, product_bilinear_type, weight_system_bounded, weyl_dimension, BilinearType, IrrepSpec,
    WeightSystem,
};
use crate::rootsys::{build_root_system, Family, RootSystem, WeightVector};
use crate::screens::{check_piii, check_piv, ScreenInput, ScreenVerdict};

/// Lowest rank of each family not isomorphic to a member of an earlier family.
fn canonical_min_rank(f: Family) -> usize {
    match f {
        Family::A => 1,
        Family::B => 3,
        Family::C => 2,
        Family::D => 4,
        Family::E => 6,
        Family::F => 4,
        Family::G => 2,
    }
}

/// Pairwise non-isomorphic simple types of rank at most `max_rank`, in family order.
pub fn canonical_types(families: &[Family], max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for &f in Family::ALL.iter().filter(|f| families.contains(f)) {
        for n in canonical_min_rank(f)..=max_rank {
            if f.is_valid_rank(n) {
                out.push((f, n));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOptions {
    pub max_dim: u64,
    /// Keep one representative per orbit of diagram automorphisms.
    pub dedup: bool,
    pub include_trivial: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            max_dim: 600,
            dedup: true,
            include_trivial: true,
        }
    }
}

/// Irreducible modules of one root system with dimension at most `max_dim`, in
/// graded order: by label sum, then labels descending.
pub fn enumerate_type(rs: &Arc<RootSystem>, opts: &EnumerateOptions) -> Vec<IrrepSpec> {
    let n = rs.rank();
    let dim_of = |labels: &[i64]| -> Option<u64> {
        let spec = IrrepSpec::from_labels(rs.clone(), labels).ok()?;
        weyl_dimension(&spec).ok()
    };
    // Dimension grows strictly with every label, so increments from 0 reach everything in bounds.
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier = vec![vec![0i64; n]];
    if opts.max_dim >= 1 {
        seen.insert(frontier[0].clone());
    } else {
        frontier.clear();
    }
    while let Some(labels) = frontier.pop() {
        for i in 0..n {
            let mut next = labels.clone();
            next[i] += 1;
            if !seen.contains(&next) && dim_of(&next).is_some_and(|d| d <= opts.max_dim) {
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let autos = rs.diagram_automorphisms();
    let mut labels: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|l| opts.include_trivial || l.iter().any(|&x| x != 0))
        .filter(|l| !opts.dedup || is_canonical(rs, &autos, l))
        .collect();
    labels.sort_by(|a, b| {
        let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    labels
        .into_iter()
        .map(|l| IrrepSpec::from_labels(rs.clone(), &l).expect("enumerated labels are dominant"))
        .collect()
}

/// Whether `labels` gives the lexicographically largest highest weight among
/// its images under diagram automorphisms.
fn is_canonical(rs: &RootSystem, autos: &[Vec<usize>], labels: &[i64]) -> bool {
    let own = rs.weight_from_labels(labels).expect("labels fit rank");
    autos.iter().all(|p| {
        let mut image = vec![0; labels.len()];
        for (i, &l) in labels.iter().enumerate() {
            image[p[i]] = l;
        }
        rs.weight_from_labels(&image).expect("labels fit rank") <= own
    })
}

/// All irreducible modules of simple algebras of the given families with rank
/// at most `max_rank` and dimension at most `max_dim`, deduplicated under
/// isomorphism of types and diagram automorphisms.
pub fn enumerate_irreps(families: &[Family], max_rank: usize, max_dim: u64) -> Vec<IrrepSpec> {
    enumerate_irreps_with(
        families,
        max_rank,
        &EnumerateOptions {
            max_dim,
            ..EnumerateOptions::default()
        },
    )
}

pub fn enumerate_irreps_with(families: &[Family], max_rank: usize, opts: &EnumerateOptions) -> Vec<IrrepSpec> {
    canonical_types(families, max_rank)
        .into_par_iter()
        .map(|(f, n)| {
            let rs = Arc::new(build_root_system(f, n).expect("canonical types are valid"));
            enumerate_type(&rs, opts)
        })
        .collect::<Vec<_>>()
        .concat()
}

/// A tensor factor: a simple irrep, or a product of several acting on one space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub name: String,
    pub irreps: Vec<IrrepSpec>,
}

impl Factor {
    pub fn simple(spec: IrrepSpec) -> Self {
        Self {
            name: spec.name(),
            irreps: vec![spec],
        }
    }

    /// `so(4)` on `C^4`, as `sl(2) ⊕ sl(2)` on `C^2 ⊗ C^2`.
    pub fn so4() -> Self {
        let a1 = Arc::new(build_root_system(Family::A, 1).expect("A1"));
        let s = IrrepSpec::from_labels(a1, &[1]).expect("ω1");
        Self {
            name: "so(4) = A1 ω1 ⊗ A1 ω1".into(),
            irreps: vec![s.clone(), s],
        }
    }

    pub fn dim(&self) -> u64 {
        self.irreps
            .iter()
            .map(|s| weyl_dimension(s).expect("enumerated"))
            .product()
    }

    pub fn bilinear_type(&self) -> BilinearType {
        let types: Vec<_> = self.irreps.iter().map(duality_and_bilinear_type).collect();
        product_bilinear_type(&types)
    }

    fn weight_system(&self, max_dim: u64) -> Result<WeightSystem> {
        crate::repweights::product_weight_system_bounded(&self.irreps, max_dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateProduct {
    pub factors: Vec<Factor>,
    pub total_dim: u64,
    pub factor_types: Vec<BilinearType>,
    pub bilinear_type: BilinearType,
}

impl CandidateProduct {
    pub fn new(factors: Vec<Factor>) -> Self {
        let factor_types: Vec<_> = factors.iter().map(Factor::bilinear_type).collect();
        Self {
            total_dim: factors.iter().map(Factor::dim).product(),
            bilinear_type: product_bilinear_type(&factor_types),
            factor_types,
            factors,
        }
    }

    pub fn name(&self) -> String {
        let names: Vec<&str> = self.factors.iter().map(|f| f.name.as_str()).collect();
        names.join(" ⊗ ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `g1 ⊕ g2` on `V1 ⊗ V2`, both factors of dimension at least 3.
    Pair,
    /// `sl(2) ⊕ g2` on `C^2 ⊗ V2`; the candidate lists `g2` only.
    Sl2Partner,
    /// `sl(2) ⊕ sl(2) ⊕ g3` on `C^2 ⊗ C^2 ⊗ V3`; the candidate lists `g3` only.
    Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Parity,
    Cardinality,
    #[serde(rename = "PIV")]
    PIV,
    #[serde(rename = "PIII")]
    PIII,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Evidence {
    /// Bilinear type of the candidate versus the type the branch needs.
    Parity {
        found: BilinearType,
        required: BilinearType,
    },
    /// Largest `Ω_α` of one factor, at the first root attaining it.
    Cardinality {
        factor: usize,
        max_size: usize,
        alpha: WeightVector,
        omega_alpha: Vec<WeightVector>,
    },
    Screen {
        verdict: ScreenVerdict,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Admitted {
    pub branch: Branch,
    pub candidate: CandidateProduct,
    pub evidence: Vec<Evidence>,
    pub annotation: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rejected {
    pub branch: Branch,
    pub candidate: CandidateProduct,
    pub stage: Stage,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageNote {
    pub entry: String,
    pub note: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ClassificationReport {
    pub admitted: Vec<Admitted>,
    pub rejected: Vec<Rejected>,
    pub coverage: Vec<CoverageNote>,
    pub symmetric_space_annotations: Vec<(String, String)>,
}

enum Outcome {
    Admit(Vec<Evidence>),
    Reject(Stage, Evidence),
}

impl ClassificationReport {
    fn from_outcomes(branch: Branch, items: Vec<(CandidateProduct, Outcome)>) -> Self {
        let mut report = Self::default();
        for (candidate, outcome) in items {
            match outcome {
                Outcome::Admit(evidence) => report.admitted.push(Admitted {
                    branch,
                    annotation: annotation(branch, &candidate),
                    candidate,
                    evidence,
                }),
                Outcome::Reject(stage, evidence) => report.rejected.push(Rejected {
                    branch,
                    candidate,
                    stage,
                    evidence,
                }),
            }
        }
        report
    }

    fn merge(&mut self, other: Self) {
        self.admitted.extend(other.admitted);
        self.rejected.extend(other.rejected);
        self.coverage.extend(other.coverage);
    }

    /// Names of admitted candidates of one branch.
    pub fn admitted_names(&self, branch: Branch) -> Vec<String> {
        self.admitted
            .iter()
            .filter(|a| a.branch == branch)
            .map(|a| a.candidate.name())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn render_human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ADMITTED ({})", self.admitted.len());
        for a in &self.admitted {
            let _ = write!(
                s,
                "  {:<12} {:<40} dim {:>4}  {}",
                branch_label(a.branch),
                a.candidate.name(),
                a.candidate.total_dim,
                a.candidate.bilinear_type
            );
            if let Some(n) = &a.annotation {
                let _ = write!(s, "  [{n}]");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "REJECTED ({})", self.rejected.len());
        let mut counts: Vec<((Branch, &'static str), usize)> = Vec::new();
        for r in &self.rejected {
            let key = (r.branch, stage_label(r.stage));
            match counts.iter_mut().find(|(k, _)| *k == key) {
                Some((_, c)) => *c += 1,
                None => counts.push((key, 1)),
            }
        }
        for ((b, st), c) in counts {
            let _ = writeln!(s, "  {:<12} at {:<12} {c}", branch_label(b), st);
        }
        for r in self.rejected.iter().filter(|r| r.branch != Branch::Pair) {
            let _ = writeln!(
                s,
                "  {:<12} {:<40} dim {:>4}  {}: {}",
                branch_label(r.branch),
                r.candidate.name(),
                r.candidate.total_dim,
                stage_label(r.stage),
                evidence_summary(&r.evidence)
            );
        }
        if !self.coverage.is_empty() {
            let _ = writeln!(s, "COVERAGE");
            for c in &self.coverage {
                let _ = writeln!(s, "  {}: {}", c.entry, c.note);
            }
        }
        s
    }
}

fn branch_label(b: Branch) -> &'static str {
    match b {
        Branch::Pair => "pair",
        Branch::Sl2Partner => "sl2-partner",
        Branch::Triple => "triple",
    }
}

fn stage_label(s: Stage) -> &'static str {
    match s {
        Stage::Parity => "parity",
        Stage::Cardinality => "cardinality",
        Stage::PIV => "PIV",
        Stage::PIII => "PIII",
    }
}

fn evidence_summary(e: &Evidence) -> String {
    match e {
        Evidence::Parity { found, required } => format!("{found}, need {required}"),
        Evidence::Cardinality {
            factor,
            max_size,
            alpha,
            ..
        } => format!("#Ω_α = {max_size} in factor {factor} at α = {alpha}"),
        Evidence::Screen { verdict } => verdict.to_string(),
    }
}

/// Largest `Ω_α` over the roots of a factor.
fn cardinality(factor_index: usize, input: &ScreenInput) -> Evidence {
    let mut best: Option<(usize, &WeightVector, Vec<WeightVector>)> = None;
    for alpha in input.roots() {
        let oa = input.omega_alpha(alpha);
        if best.as_ref().is_none_or(|(m, _, _)| oa.len() > *m) {
            best = Some((oa.len(), alpha, oa));
        }
    }
    let (max_size, alpha, omega_alpha) = best.expect("factors have roots");
    Evidence::Cardinality {
        factor: factor_index,
        max_size,
        alpha: alpha.clone(),
        omega_alpha,
    }
}

fn cardinality_ok(e: &Evidence) -> bool {
    matches!(e, Evidence::Cardinality { max_size, .. } if *max_size <= 2)
}

fn parity(found: BilinearType, required: BilinearType) -> (bool, Evidence) {
    (found == required, Evidence::Parity { found, required })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_rank: usize,
    pub max_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyConfig {
    pub families: Vec<Family>,
    pub pair: Bounds,
    pub sl2_partner: Bounds,
    pub triple: Bounds,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            families: Family::ALL.to_vec(),
            pair: Bounds {
                max_rank: 7,
                max_dim: 64,
            },
            sl2_partner: Bounds {
                max_rank: 7,
                max_dim: 600,
            },
            triple: Bounds {
                max_rank: 7,
                max_dim: 600,
            },
        }
    }
}

impl ClassifyConfig {
    /// The same bounds for all branches.
    pub fn uniform(max_rank: usize, max_dim: u64) -> Self {
        let b = Bounds { max_rank, max_dim };
        Self {
            families: Family::ALL.to_vec(),
            pair: b.clone(),
            sl2_partner: b.clone(),
            triple: b,
        }
    }
}

fn nontrivial(families: &[Family], b: &Bounds) -> Vec<IrrepSpec> {
    enumerate_irreps_with(
        families,
        b.max_rank,
        &EnumerateOptions {
            max_dim: b.max_dim,
            dedup: true,
            include_trivial: false,
        },
    )
}

/// `g1 ⊕ g2` on `V1 ⊗ V2` over unordered pairs from the factor pool: nontrivial
/// simple irreps of dimension at least 3, plus `so(4)` on `C^4`.
pub fn classify_pair_products(max_rank: usize, max_dim: u64) -> ClassificationReport {
    classify_pairs_in(&Family::ALL, &Bounds { max_rank, max_dim })
}

fn classify_pairs_in(families: &[Family], b: &Bounds) -> ClassificationReport {
    let mut pool: Vec<Factor> = nontrivial(families, b)
        .into_iter()
        .filter(|s| weyl_dimension(s).is_ok_and(|d| d >= 3))
        .map(Factor::simple)
        .collect();
    if families.contains(&Family::A) && b.max_rank >= 1 && b.max_dim >= 4 {
        pool.push(Factor::so4());
    }
    let card: Vec<Evidence> = pool
        .par_iter()
        .map(|f| {
            let ws = f.weight_system(u64::MAX).expect("pool factors are in bounds");
            cardinality(0, &ScreenInput::from_weight_system(&ws))
        })
        .collect();
    let mut items = Vec::new();
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let cand = CandidateProduct::new(vec![pool[i].clone(), pool[j].clone()]);
            let outcome = match pair_outcome(cand.bilinear_type, &card[i], &card[j]) {
                Ok(ev) => Outcome::Admit(ev),
                Err((stage, ev)) => Outcome::Reject(stage, ev),
            };
            items.push((cand, outcome));
        }
    }
    ClassificationReport::from_outcomes(Branch::Pair, items)
}

type FilterResult = std::result::Result<Vec<Evidence>, (Stage, Evidence)>;

fn pair_outcome(product: BilinearType, card_a: &Evidence, card_b: &Evidence) -> FilterResult {
    let (ok, ev) = parity(product, BilinearType::Orthogonal);
    if !ok {
        return Err((Stage::Parity, ev));
    }
    let ca = with_factor(card_a, 0);
    let cb = with_factor(card_b, 1);
    if !cardinality_ok(&ca) {
        return Err((Stage::Cardinality, ca));
    }
    if !cardinality_ok(&cb) {
        return Err((Stage::Cardinality, cb));
    }
    Ok(vec![ev, ca, cb])
}

/// The pair pipeline for `a ⊕ b` on `Va ⊗ Vb`.
pub fn pair_filter(a: &Factor, b: &Factor) -> Result<FilterResult> {
    let card = |f: &Factor| -> Result<Evidence> {
        Ok(cardinality(
            0,
            &ScreenInput::from_weight_system(&f.weight_system(u64::MAX)?),
        ))
    };
    let product = product_bilinear_type(&[a.bilinear_type(), b.bilinear_type()]);
    Ok(pair_outcome(product, &card(a)?, &card(b)?))
}

fn with_factor(e: &Evidence, index: usize) -> Evidence {
    let mut e = e.clone();
    if let Evidence::Cardinality { factor, .. } = &mut e {
        *factor = index;
    }
    e
}

/// `sl(2) ⊕ g2` on `C^2 ⊗ V2` for simple `g2`: `V2` must be symplectic and pass
/// PIV and PIII.
pub fn classify_sl2_partners(max_rank: usize, max_dim: u64) -> ClassificationReport {
    classify_sl2_in(&Family::ALL, &Bounds { max_rank, max_dim })
}

fn classify_sl2_in(families: &[Family], b: &Bounds) -> ClassificationReport {
    let items = nontrivial(families, b)
        .into_par_iter()
        .map(|spec| {
            let cand = CandidateProduct::new(vec![Factor::simple(spec.clone())]);
            let (ok, ev) = parity(cand.bilinear_type, BilinearType::Symplectic);
            if !ok {
                return (cand, Outcome::Reject(Stage::Parity, ev));
            }
            let ws = weight_system_bounded(&spec, u64::MAX).expect("enumerated modules are in bounds");
            let input = ScreenInput::from_weight_system(&ws);
            let piv = check_piv(&input);
            if !piv.passed {
                return (cand, Outcome::Reject(Stage::PIV, Evidence::Screen { verdict: piv }));
            }
            let piii = check_piii(&input);
            if !piii.passed {
                return (cand, Outcome::Reject(Stage::PIII, Evidence::Screen { verdict: piii }));
            }
            let evidence = vec![
                ev,
                Evidence::Screen { verdict: piv },
                Evidence::Screen { verdict: piii },
            ];
            (cand, Outcome::Admit(evidence))
        })
        .collect();
    ClassificationReport::from_outcomes(Branch::Sl2Partner, items)
}

/// Filter for `sl(2) ⊕ sl(2) ⊕ g3` on `C^2 ⊗ C^2 ⊗ V3`; `specs` must start with
/// two copies of `A1 ω1`. Returns `Ok(evidence)` when admitted, otherwise the
/// failing stage and its evidence.
pub fn triple_product_filter(specs: &[IrrepSpec]) -> FilterResult {
    assert!(specs.len() == 3, "three factors expected");
    for s in &specs[..2] {
        assert!(
            s.root_system().name() == "A1" && s.dynkin_labels() == [1],
            "first two factors must be A1 ω1"
        );
    }
    let types: Vec<_> = specs.iter().map(duality_and_bilinear_type).collect();
    let (ok, ev) = parity(product_bilinear_type(&types), BilinearType::Orthogonal);
    if !ok {
        return Err((Stage::Parity, ev));
    }
    let ws = weight_system_bounded(&specs[2], u64::MAX).map_err(|_| (Stage::Cardinality, ev.clone()))?;
    let card = cardinality(2, &ScreenInput::from_weight_system(&ws));
    if !cardinality_ok(&card) {
        return Err((Stage::Cardinality, card));
    }
    Ok(vec![ev, card])
}

fn classify_triples_in(families: &[Family], b: &Bounds) -> ClassificationReport {
    let a1 = Arc::new(build_root_system(Family::A, 1).expect("A1"));
    let w1 = IrrepSpec::from_labels(a1, &[1]).expect("ω1");
    let items = nontrivial(families, b)
        .into_par_iter()
        .map(|spec| {
            let cand = CandidateProduct::new(vec![Factor::simple(spec.clone())]);
            let outcome = match triple_product_filter(&[w1.clone(), w1.clone(), spec]) {
                Ok(ev) => Outcome::Admit(ev),
                Err((stage, ev)) => Outcome::Reject(stage, ev),
            };
            (cand, outcome)
        })
        .collect();
    ClassificationReport::from_outcomes(Branch::Triple, items)
}

/// Entries of the final table, as (root system, labels, annotation).
const TABLE: [(&str, &[i64], &str); 6] = [
    ("A1", &[1], "CII: Sp(2)/Sp(1)·Sp(1)"),
    ("A1", &[3], "GI: G2/SU(2)·SU(2)"),
    ("A5", &[0, 0, 1, 0, 0], "EII: E6/SU(2)·SU(6)"),
    ("C3", &[0, 0, 1], "FI: F4/SU(2)·Sp(3)"),
    ("D6", &[0, 0, 0, 0, 0, 1], "EVI: E7/SU(2)·Spin(12)"),
    ("E7", &[1, 0, 0, 0, 0, 0, 0], "EIX: E8/SU(2)·E7"),
];

fn is_cn_omega1(spec: &IrrepSpec) -> bool {
    let rs = spec.root_system();
    rs.family() == Family::C
        && spec
            .dynkin_labels()
            .iter()
            .enumerate()
            .all(|(i, &l)| l == i64::from(i == 0))
}

/// Whether a simple module is `so(n)` or `sp(n)` on its defining space.
fn defining_kind(f: &Factor) -> Option<&'static str> {
    if f.irreps.len() == 2 {
        return Some("so");
    }
    let s = &f.irreps[0];
    let rs = s.root_system();
    let labels = s.dynkin_labels();
    let first_only = labels.iter().enumerate().all(|(i, &l)| l == i64::from(i == 0));
    match (rs.family(), rs.rank(), labels.as_slice()) {
        (Family::C, _, _) if first_only => Some("sp"),
        (Family::B | Family::D, _, _) if first_only => Some("so"),
        (Family::A, 1, [2]) | (Family::A, 3, [0, 1, 0]) | (Family::C, 2, [0, 1]) => Some("so"),
        _ => None,
    }
}

fn annotation(branch: Branch, cand: &CandidateProduct) -> Option<String> {
    match branch {
        Branch::Sl2Partner => {
            let spec = &cand.factors[0].irreps[0];
            if is_cn_omega1(spec) {
                let n = spec.root_system().rank();
                return Some(format!("CII: Sp({})/Sp(1)·Sp({n})", n + 1));
            }
            TABLE
                .iter()
                .find(|(t, l, _)| spec.root_system().name() == *t && spec.dynkin_labels() == *l)
                .map(|(_, _, a)| a.to_string())
        }
        Branch::Pair => {
            let kinds: Vec<_> = cand.factors.iter().map(defining_kind).collect();
            let dims: Vec<u64> = cand.factors.iter().map(Factor::dim).collect();
            match kinds.as_slice() {
                [Some("so"), Some("so")] => Some(format!(
                    "BDI: SO({})/SO({})·SO({})",
                    dims[0] + dims[1],
                    dims[0],
                    dims[1]
                )),
                [Some("sp"), Some("sp")] => Some(format!(
                    "CII: Sp({})/Sp({})·Sp({})",
                    (dims[0] + dims[1]) / 2,
                    dims[0] / 2,
                    dims[1] / 2
                )),
                _ => None,
            }
        }
        Branch::Triple => {
            let d = cand.factors[0].dim();
            Some(format!("BDI: SO({})/SO(4)·SO({d})", d + 4))
        }
    }
}

/// Table entries the bounds leave out, and the extrapolated `C_n ω1` series.
fn coverage(cfg: &ClassifyConfig) -> Vec<CoverageNote> {
    let b = &cfg.sl2_partner;
    let mut out = Vec::new();
    for (t, labels, _) in TABLE {
        let (family, rank) = crate::rootsys::parse_type(t).expect("table types parse");
        let rs = Arc::new(build_root_system(family, rank).expect("table types are valid"));
        let spec = IrrepSpec::from_labels(rs, labels).expect("table weights are dominant");
        let dim = weyl_dimension(&spec).expect("small");
        if !cfg.families.contains(&family) || rank > b.max_rank || dim > b.max_dim {
            out.push(CoverageNote {
                entry: spec.name(),
                note: format!("outside the bounds (rank {rank}, dim {dim}); the table is incomplete"),
            });
        }
    }
    let max_n = if cfg.families.contains(&Family::C) {
        (2..=b.max_rank).take_while(|n| 2 * (*n as u64) <= b.max_dim).last()
    } else {
        None
    };
    out.push(CoverageNote {
        entry: "Cn ω1".into(),
        note: match max_n {
            Some(n) => format!("verified for n = 2..{n}; larger n extrapolated"),
            None => "no instance within the bounds; series extrapolated".into(),
        },
    });
    out
}

/// All three branches, merged in the order pair, sl(2)-partner, triple.
pub fn full_report(cfg: &ClassifyConfig) -> ClassificationReport {
    let mut report = classify_pairs_in(&cfg.families, &cfg.pair);
    report.merge(classify_sl2_in(&cfg.families, &cfg.sl2_partner));
    report.merge(classify_triples_in(&cfg.families, &cfg.triple));
    report.coverage = coverage(cfg);
    let mut seen: HashMap<String, ()> = HashMap::new();
    for a in &report.admitted {
        if let Some(n) = &a.annotation {
            let key = format!("{} {}", branch_label(a.branch), a.candidate.name());
            if seen.insert(key.clone(), ()).is_none() {
                report.symmetric_space_annotations.push((key, n.clone()));
            }
        }
    }
    report
}

/// Re-derives an admission or rejection from scratch.
pub fn replay_evidence(
    branch: Branch,
    cand: &CandidateProduct,
    evidence: &Evidence,
) -> std::result::Result<(), String> {
    let ensure = |c: bool, m: &str| if c { Ok(()) } else { Err(m.to_string()) };
    match evidence {
        Evidence::Parity { found, required } => {
            let recomputed = CandidateProduct::new(cand.factors.clone()).bilinear_type;
            ensure(recomputed == *found, "bilinear type differs")?;
            let need = match branch {
                Branch::Sl2Partner => BilinearType::Symplectic,
                Branch::Pair | Branch::Triple => BilinearType::Orthogonal,
            };
            ensure(need == *required, "wrong requirement for branch")
        }
        Evidence::Cardinality {
            factor,
            max_size,
            alpha,
            omega_alpha,
        } => {
            let f = match branch {
                Branch::Pair => cand.factors.get(*factor).ok_or("factor index out of range")?,
                _ => &cand.factors[0],
            };
            let ws = f.weight_system(u64::MAX).map_err(|e| e.to_string())?;
            let input = ScreenInput::from_weight_system(&ws);
            ensure(input.omega_alpha(alpha) == *omega_alpha, "Ω_α differs")?;
            ensure(omega_alpha.len() == *max_size, "size mismatch")?;
            let true_max = input
                .roots()
                .iter()
                .map(|a| input.omega_alpha(a).len())
                .max()
                .unwrap_or(0);
            ensure(true_max == *max_size, "not the largest Ω_α")
        }
        Evidence::Screen { verdict } => {
            let ws = cand.factors[0].weight_system(u64::MAX).map_err(|e| e.to_string())?;
            verdict.replay(&ScreenInput::from_weight_system(&ws))
        }
    }
}

impl Admitted {
    pub fn replay(&self) -> std::result::Result<(), String> {
        for e in &self.evidence {
            replay_evidence(self.branch, &self.candidate, e)?;
            let passed = match e {
                Evidence::Parity { found, required } => found == required,
                Evidence::Cardinality { max_size, .. } => *max_size <= 2,
                Evidence::Screen { verdict } => verdict.passed,
            };
            if !passed {
                return Err("admitted with failing evidence".into());
            }
        }
        Ok(())
    }
}

impl Rejected {
    pub fn replay(&self) -> std::result::Result<(), String> {
        replay_evidence(self.branch, &self.candidate, &self.evidence)?;
        let failed = match &self.evidence {
            Evidence::Parity { found, required } => found != required,
            Evidence::Cardinality { max_size, .. } => *max_size > 2,
            Evidence::Screen { verdict } => !verdict.passed,
        };
        if failed {
            Ok(())
        } else {
            Err("rejected with passing evidence".into())
        }
    }
}
