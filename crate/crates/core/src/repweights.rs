//! Irreducible highest-weight modules: weight systems, dimensions and
//! invariant-form type.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::{RootSystem, WeightVector};

/// Default bound on the dimension handled by [`weight_system`].
pub const DEFAULT_MAX_DIM: u64 = 2000;

/// An irreducible module given by its dominant highest weight.
#[derive(Clone, Debug)]
pub struct IrrepSpec {
    root_system: Arc<RootSystem>,
    highest_weight: WeightVector,
    label: Option<String>,
}

impl PartialEq for IrrepSpec {
    fn eq(&self, other: &Self) -> bool {
        *self.root_system == *other.root_system && self.highest_weight == other.highest_weight
    }
}

impl Eq for IrrepSpec {}

impl IrrepSpec {
    pub fn new(root_system: Arc<RootSystem>, highest_weight: WeightVector) -> Result<Self> {
        if highest_weight.dim() != root_system.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: root_system.ambient_dim(),
                got: highest_weight.dim(),
            });
        }
        let labels = root_system.dynkin_labels(&highest_weight);
        if labels.iter().any(|l| !l.is_integer() || l.is_negative()) {
            return Err(Error::NotDominant(highest_weight.to_string()));
        }
        Ok(Self {
            root_system,
            highest_weight,
            label: None,
        })
    }

    /// Highest weight `Σ labels[i] ω_i`.
    pub fn from_labels(root_system: Arc<RootSystem>, labels: &[i64]) -> Result<Self> {
        let hw = root_system.weight_from_labels(labels)?;
        Self::new(root_system, hw)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.root_system
    }

    pub fn highest_weight(&self) -> &WeightVector {
        &self.highest_weight
    }

    pub fn dynkin_labels(&self) -> Vec<i64> {
        self.root_system
            .dynkin_labels(&self.highest_weight)
            .into_iter()
            .map(|q| q.to_integer())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_weight.is_zero()
    }

    /// Highest weight written in fundamental weights, e.g. `ω1+2ω3`.
    pub fn weight_name(&self) -> String {
        let terms: Vec<String> = self
            .dynkin_labels()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("ω{}", i + 1)
                } else {
                    format!("{c}ω{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// `"C3 ω3"`, or the explicit label when one was attached.
    pub fn name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => format!("{} {}", self.root_system.name(), self.weight_name()),
        }
    }
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for IrrepSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IrrepSpec", 3)?;
        st.serialize_field("type", &self.root_system.name())?;
        st.serialize_field("labels", &self.dynkin_labels())?;
        st.serialize_field("name", &self.name())?;
        st.end()
    }
}

/// Weyl dimension formula, `∏_{α>0} ⟨Λ+ρ,α⟩ / ⟨ρ,α⟩`.
pub fn weyl_dimension(spec: &IrrepSpec) -> Result<u64> {
    let rs = &spec.root_system;
    if !rs.is_dominant(&spec.highest_weight) || !rs.is_integral(&spec.highest_weight) {
        return Err(Error::NotDominant(spec.highest_weight.to_string()));
    }
    let shifted = &spec.highest_weight + rs.weyl_vector();
    let big = |q: Q| BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
    let mut prod = BigRational::one();
    for a in rs.positive_roots() {
        prod *= big(shifted.dot(a)) / big(rs.weyl_vector().dot(a));
    }
    assert!(prod.is_integer(), "Weyl dimension is not an integer");
    prod.to_integer().to_u64().ok_or(Error::DimensionOverflow)
}

/// Orthogonal/symplectic type of an irreducible module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BilinearType {
    NotSelfDual,
    Orthogonal,
    Symplectic,
}

impl fmt::Display for BilinearType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BilinearType::NotSelfDual => "not-self-dual",
            BilinearType::Orthogonal => "orthogonal",
            BilinearType::Symplectic => "symplectic",
        })
    }
}

/// Self-duality via `-Λ`; type via the parity of `⟨Λ, 2ρ^∨⟩`.
pub fn duality_and_bilinear_type(spec: &IrrepSpec) -> BilinearType {
    let rs = &spec.root_system;
    let dual = rs.dominant_representative(&-&spec.highest_weight);
    if dual != spec.highest_weight {
        return BilinearType::NotSelfDual;
    }
    let two = Q::from_integer(2);
    let pairing: Q = rs
        .positive_roots()
        .iter()
        .map(|a| two * spec.highest_weight.dot(a) / a.norm2())
        .sum();
    debug_assert!(pairing.is_integer());
    if pairing.to_integer() % 2 == 0 {
        BilinearType::Orthogonal
    } else {
        BilinearType::Symplectic
    }
}

/// Type of an outer tensor product: self-dual iff every factor is, and
/// symplectic iff an odd number of factors are symplectic.
pub fn product_bilinear_type(types: &[BilinearType]) -> BilinearType {
    if types.contains(&BilinearType::NotSelfDual) {
        return BilinearType::NotSelfDual;
    }
    let symplectic = types.iter().filter(|&&t| t == BilinearType::Symplectic).count();
    if symplectic % 2 == 0 {
        BilinearType::Orthogonal
    } else {
        BilinearType::Symplectic
    }
}

/// Cartan dual of a (possibly composite) semisimple algebra: an ordered list of
/// simple factors whose ambient coordinates are concatenated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    systems: Vec<Arc<RootSystem>>,
}

impl Carrier {
    pub fn new(systems: Vec<Arc<RootSystem>>) -> Self {
        Self { systems }
    }

    pub fn single(rs: Arc<RootSystem>) -> Self {
        Self { systems: vec![rs] }
    }

    pub fn systems(&self) -> &[Arc<RootSystem>] {
        &self.systems
    }

    pub fn ambient_dim(&self) -> usize {
        self.systems.iter().map(|s| s.ambient_dim()).sum()
    }

    /// Dimension of `t*`.
    pub fn rank(&self) -> usize {
        self.systems.iter().map(|s| s.rank()).sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        self.systems
            .iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += s.ambient_dim();
                Some(o)
            })
            .collect()
    }

    /// Roots of every factor, embedded in the concatenated coordinates.
    pub fn roots(&self) -> Vec<WeightVector> {
        let total = self.ambient_dim();
        self.systems
            .iter()
            .zip(self.offsets())
            .flat_map(|(s, o)| s.roots().iter().map(move |r| r.embed(o, total)))
            .collect()
    }

    /// Roots of factor `i`, embedded.
    pub fn factor_roots(&self, i: usize) -> Vec<WeightVector> {
        let total = self.ambient_dim();
        let o = self.offsets()[i];
        self.systems[i].roots().iter().map(|r| r.embed(o, total)).collect()
    }

    /// Embedded simple roots; a basis of `t*`.
    pub fn simple_roots(&self) -> Vec<WeightVector> {
        let total = self.ambient_dim();
        self.systems
            .iter()
            .zip(self.offsets())
            .flat_map(|(s, o)| s.simple_roots().iter().map(move |r| r.embed(o, total)))
            .collect()
    }

    pub fn name(&self) -> String {
        self.systems.iter().map(|s| s.name()).collect::<Vec<_>>().join("×")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEntry {
    pub weight: WeightVector,
    pub multiplicity: u64,
    /// Height of `Λ - μ` in simple roots.
    pub depth: u64,
}

/// Weights with multiplicities, ordered by depth below the highest weight and
/// then descending lexicographically.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    carrier: Carrier,
    highest_weight: WeightVector,
    entries: Vec<WeightEntry>,
    index: HashMap<WeightVector, usize>,
}

impl WeightSystem {
    fn from_entries(carrier: Carrier, highest_weight: WeightVector, mut entries: Vec<WeightEntry>) -> Self {
        entries.sort_by(|a, b| a.depth.cmp(&b.depth).then_with(|| b.weight.cmp(&a.weight)));
        let index = entries.iter().enumerate().map(|(i, e)| (e.weight.clone(), i)).collect();
        Self {
            carrier,
            highest_weight,
            entries,
            index,
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn highest_weight(&self) -> &WeightVector {
        &self.highest_weight
    }

    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.index.get(w).map_or(0, |&i| self.entries[i].multiplicity)
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.index.contains_key(w)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total_dim(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// The support Ω in canonical order, multiplicities dropped.
    pub fn support(&self) -> Vec<WeightVector> {
        self.entries.iter().map(|e| e.weight.clone()).collect()
    }
}

/// Saturated weight set below `Λ`: closure under `μ ↦ μ - kα`, `0 < k ≤ ⟨μ,α^∨⟩`.
fn saturated_set(rs: &RootSystem, top: &WeightVector) -> Vec<WeightVector> {
    let mut seen: HashSet<WeightVector> = HashSet::from([top.clone()]);
    let mut queue = VecDeque::from([top.clone()]);
    let mut out = vec![top.clone()];
    let two = Q::from_integer(2);
    while let Some(mu) = queue.pop_front() {
        for a in rs.roots() {
            let p = two * mu.dot(a) / a.norm2();
            if !p.is_positive() {
                continue;
            }
            let mut w = mu.clone();
            for _ in 0..p.to_integer() {
                w = &w - a;
                if seen.insert(w.clone()) {
                    queue.push_back(w.clone());
                    out.push(w.clone());
                }
            }
        }
    }
    out
}

/// Weight system with multiplicities, bounded by [`DEFAULT_MAX_DIM`].
pub fn weight_system(spec: &IrrepSpec) -> Result<WeightSystem> {
    weight_system_bounded(spec, DEFAULT_MAX_DIM)
}

/// Freudenthal's recursion, evaluated top-down on dominant weights and spread
/// over Weyl orbits.
pub fn weight_system_bounded(spec: &IrrepSpec, max_dim: u64) -> Result<WeightSystem> {
    let dim = weyl_dimension(spec)?;
    if dim > max_dim {
        return Err(Error::DimensionBound { dim, bound: max_dim });
    }
    let rs = spec.root_system.as_ref();
    let top = &spec.highest_weight;
    let mut weights: Vec<(u64, WeightVector)> = saturated_set(rs, top)
        .into_iter()
        .map(|w| {
            let depth = rs.height(&(top - &w));
            debug_assert!(depth.is_integer() && !depth.is_negative());
            (depth.to_integer() as u64, w)
        })
        .collect();
    weights.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

    let rho = rs.weyl_vector();
    let top_rho = top + rho;
    let top_norm = top_rho.norm2();
    let mut mult: HashMap<WeightVector, u64> = HashMap::with_capacity(weights.len());
    for (depth, mu) in &weights {
        let m = if *depth == 0 {
            1
        } else if rs.is_dominant(mu) {
            let mut sum = Q::zero();
            for a in rs.positive_roots() {
                let mut up = mu + a;
                while let Some(&m_up) = mult.get(&up) {
                    sum += up.dot(a) * Q::from_integer(m_up as i64);
                    up = &up + a;
                }
            }
            let denom = top_norm - (mu + rho).norm2();
            let value = Q::from_integer(2) * sum / denom;
            if !value.is_integer() || value.is_negative() {
                return Err(Error::NonIntegralMultiplicity {
                    weight: mu.to_string(),
                    value: value.to_string(),
                });
            }
            value.to_integer() as u64
        } else {
            let dom = rs.dominant_representative(mu);
            *mult.get(&dom).expect("dominant representative precedes its orbit")
        };
        mult.insert(mu.clone(), m);
    }

    let entries: Vec<WeightEntry> = weights
        .into_iter()
        .filter_map(|(depth, w)| {
            let m = mult[&w];
            (m > 0).then_some(WeightEntry {
                weight: w,
                multiplicity: m,
                depth,
            })
        })
        .collect();
    let ws = WeightSystem::from_entries(Carrier::single(spec.root_system.clone()), top.clone(), entries);
    assert_eq!(ws.total_dim(), dim, "multiplicities must sum to the Weyl dimension");
    Ok(ws)
}

/// Weights of an outer tensor product: the Minkowski sum of the factor
/// supports, with multiplicities summed over all decompositions.
pub fn product_weight_system(specs: &[IrrepSpec]) -> Result<WeightSystem> {
    product_weight_system_bounded(specs, DEFAULT_MAX_DIM)
}

pub fn product_weight_system_bounded(specs: &[IrrepSpec], max_dim: u64) -> Result<WeightSystem> {
    let factors = specs
        .iter()
        .map(|s| weight_system_bounded(s, max_dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(combine(&factors))
}

/// Combines factor weight systems into the weight system of their product.
pub fn combine(factors: &[WeightSystem]) -> WeightSystem {
    let systems: Vec<Arc<RootSystem>> = factors.iter().flat_map(|f| f.carrier.systems.iter().cloned()).collect();
    let carrier = Carrier::new(systems);
    let mut acc: HashMap<WeightVector, (u64, u64)> = HashMap::from([(WeightVector::zeros(0), (1, 0))]);
    for f in factors {
        let mut next = HashMap::with_capacity(acc.len() * f.len());
        for (w, (m, d)) in &acc {
            for e in &f.entries {
                let key = WeightVector::concat([w, &e.weight]);
                let slot = next.entry(key).or_insert((0u64, d + e.depth));
                slot.0 += m * e.multiplicity;
            }
        }
        acc = next;
    }
    let hw = WeightVector::concat(factors.iter().map(|f| &f.highest_weight));
    let entries = acc
        .into_iter()
        .map(|(weight, (multiplicity, depth))| WeightEntry {
            weight,
            multiplicity,
            depth,
        })
        .collect();
    WeightSystem::from_entries(carrier, hw, entries)
}
