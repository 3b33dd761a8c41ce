//! Direct verification of the weak-Berger property on explicit matrices.
//!
//! For `g ⊂ so(V, h)` the space `B_h(g)` consists of linear maps `Q: V → g`
//! with `h(Q(x)y, z) + h(Q(y)z, x) + h(Q(z)x, y) = 0`, and `g` is weak-Berger
//! when the values `Q(x)` span `g`. Writing `Q(e_x) = Σ_a c_{x,a} X_a` turns the
//! identity into a homogeneous linear system in the `c_{x,a}`, solved exactly.
//!
//! The coefficients are rational and rational nullspace dimension equals
//! complex nullspace dimension, so the exact solve gives the complex answer.

mod catalog;
mod construct;
mod forms;
mod matrix;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};

pub use catalog::{Catalog, CatalogEntry, Construction, HighestWeight};
pub use construct::ModuleMatrices;
pub use forms::{invariant_bilinear_forms, is_invariant, InvariantForm, Symmetry};
pub use matrix::QMatrix;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Q};
use crate::repweights::{product_weight_system, weyl_dimension, IrrepSpec};
use crate::screens::{check_pi, check_pii, ScreenInput, ScreenVerdict};

/// A Lie algebra acting on `C^dim_v` together with an invariant non-degenerate form.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixRep {
    pub descriptor: String,
    pub dim_v: usize,
    pub dim_g: usize,
    pub algebra_basis: Vec<QMatrix>,
    pub form_h: QMatrix,
    pub symmetry: Symmetry,
    /// One highest weight per simple factor.
    #[serde(skip)]
    pub highest_weight: Vec<IrrepSpec>,
}

impl MatrixRep {
    /// Checks closure under brackets, linear independence, invariance and
    /// non-degeneracy of the form.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRep(format!("{}: {m}", self.descriptor)));
        if self.algebra_basis.len() != self.dim_g {
            return bad("basis length differs from dim_g".into());
        }
        if self
            .algebra_basis
            .iter()
            .any(|x| x.rows() != self.dim_v || x.cols() != self.dim_v)
        {
            return bad("basis matrix of the wrong shape".into());
        }
        let span = BasisSpan::new(&self.algebra_basis);
        if span.rank() != self.dim_g {
            return bad("basis is linearly dependent".into());
        }
        for (i, a) in self.algebra_basis.iter().enumerate() {
            for b in &self.algebra_basis[i + 1..] {
                if span.coordinates(&QMatrix::commutator(a, b)).is_none() {
                    return bad("not closed under brackets".into());
                }
            }
        }
        if Symmetry::of(&self.form_h) != Some(self.symmetry) {
            return bad("form symmetry mismatch".into());
        }
        if !self.form_h.is_invertible() {
            return bad("degenerate form".into());
        }
        if !is_invariant(&self.algebra_basis, &self.form_h) {
            return bad("form is not invariant".into());
        }
        Ok(())
    }
}

/// Coordinates of matrices in the span of a basis, read off at pivot positions.
struct BasisSpan<'a> {
    basis: &'a [QMatrix],
    pivots: Vec<usize>,
    inverse: Option<Vec<Vec<Q>>>,
}

impl<'a> BasisSpan<'a> {
    fn new(basis: &'a [QMatrix]) -> Self {
        let ncols = basis.first().map_or(0, |b| b.data().len());
        let mut ech = Echelon::new(ncols);
        for b in basis {
            ech.insert_rational(b.data());
        }
        let pivots = ech.pivots().to_vec();
        let square: Vec<Vec<Q>> = (0..pivots.len())
            .map(|r| basis.iter().map(|b| b.data()[pivots[r]]).collect())
            .collect();
        let inverse = if pivots.len() == basis.len() {
            crate::linalg::inverse(&square)
        } else {
            None
        };
        Self { basis, pivots, inverse }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn coordinates(&self, m: &QMatrix) -> Option<Vec<Q>> {
        let inv = self.inverse.as_ref()?;
        let rhs: Vec<Q> = self.pivots.iter().map(|&p| m.data()[p]).collect();
        let coeffs: Vec<Q> = inv
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, b)| a * b).sum())
            .collect();
        let mut sum = QMatrix::zeros(m.rows(), m.cols());
        for (c, b) in coeffs.iter().zip(self.basis) {
            if !c.is_zero() {
                sum = &sum + &b.scale(*c);
            }
        }
        (sum == *m).then_some(coeffs)
    }
}

/// Default bound on `dim V` for building and solving.
pub const DEFAULT_MAX_DIM_V: usize = 40;
/// Default bound on the number of unknowns `dim V · dim g`.
pub const DEFAULT_MAX_UNKNOWNS: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverBounds {
    pub max_dim_v: usize,
    pub max_unknowns: usize,
}

impl Default for SolverBounds {
    fn default() -> Self {
        Self {
            max_dim_v: DEFAULT_MAX_DIM_V,
            max_unknowns: DEFAULT_MAX_UNKNOWNS,
        }
    }
}

/// Builds, checks against its weight data, and validates a catalog entry.
pub fn build_matrix_rep(id: &str) -> Result<MatrixRep> {
    build_matrix_rep_in(Catalog::builtin(), id, DEFAULT_MAX_DIM_V)
}

pub fn build_matrix_rep_in(catalog: &Catalog, id: &str, max_dim_v: usize) -> Result<MatrixRep> {
    let entry = catalog.get(id)?;
    let specs = entry.specs()?;
    let expected_v = specs
        .iter()
        .try_fold(1u64, |acc, s| Ok::<_, Error>(acc * weyl_dimension(s)?))?;
    if expected_v > max_dim_v as u64 {
        return Err(Error::DimensionBound {
            dim: expected_v,
            bound: max_dim_v as u64,
        });
    }
    let module = catalog.module(id)?;
    let expected_g: usize = specs
        .iter()
        .map(|s| s.root_system().roots().len() + s.root_system().rank())
        .sum();
    if module.dim_v as u64 != expected_v || module.basis.len() != expected_g {
        return Err(Error::Catalog(format!(
            "{id}: matrices give dim V = {}, dim g = {}; highest weights give {expected_v}, {expected_g}",
            module.dim_v,
            module.basis.len()
        )));
    }
    let form = match &module.form {
        Some(h) => h.clone(),
        None => invariant_bilinear_forms(&module)
            .into_iter()
            .map(|f| f.matrix)
            .find(QMatrix::is_invertible)
            .ok_or(Error::NoInvariantForm)?,
    };
    let symmetry = Symmetry::of(&form).ok_or_else(|| Error::InvalidRep(format!("{id}: form has no symmetry")))?;
    let rep = MatrixRep {
        descriptor: id.to_string(),
        dim_v: module.dim_v,
        dim_g: module.basis.len(),
        algebra_basis: module.basis,
        form_h: form,
        symmetry,
        highest_weight: specs,
    };
    rep.validate()?;
    Ok(rep)
}

/// Which index triples `(x, y, z)` generate the constraint system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleMode {
    /// `x < y < z`: enough when the cyclic expression is alternating (symmetric `h`).
    Increasing,
    /// `x ≤ y ≤ z`: enough when it is totally symmetric (antisymmetric `h`).
    NonDecreasing,
    /// All ordered triples.
    Ordered,
}

impl TripleMode {
    pub fn for_form(symmetry: Symmetry) -> Self {
        match symmetry {
            Symmetry::Symmetric => TripleMode::Increasing,
            Symmetry::Antisymmetric => TripleMode::NonDecreasing,
        }
    }

    fn triples(self, d: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let keep = match self {
                        TripleMode::Increasing => x < y && y < z,
                        TripleMode::NonDecreasing => x <= y && y <= z,
                        TripleMode::Ordered => true,
                    };
                    if keep {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }
}

fn ser_arrays<S: Serializer>(v: &[Vec<Vec<BigInt>>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|m| {
        m.iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakBergerCertificate {
    pub descriptor: String,
    pub dim_v: usize,
    pub dim_g: usize,
    pub dim_bh: usize,
    /// Each element is a `dim_g × dim_v` integer array `c[a][x]` with
    /// `Q(e_x) = Σ_a c[a][x] X_a`.
    #[serde(serialize_with = "ser_arrays")]
    pub basis_of_bh: Vec<Vec<Vec<BigInt>>>,
    pub span_dim: usize,
    /// `span_dim == dim_g`, for the module's own form.
    pub is_weak_berger: bool,
    /// Symmetry of `h`. Only symmetric forms make `g` an orthogonal algebra.
    pub form: Symmetry,
}

impl WeakBergerCertificate {
    /// Weak-Berger with `g` orthogonal, i.e. `h` symmetric.
    pub fn is_orthogonal_weak_berger(&self) -> bool {
        self.is_weak_berger && self.form == Symmetry::Symmetric
    }
}

/// `M_a = X_a^T H`, so `h(X_a y, z) = M_a[y][z]`, scaled to integers.
fn pairing_tensors(rep: &MatrixRep) -> Vec<Vec<BigInt>> {
    let ms: Vec<QMatrix> = rep.algebra_basis.iter().map(|x| &x.transpose() * &rep.form_h).collect();
    let lcm = ms
        .iter()
        .flat_map(|m| m.data().iter())
        .fold(1i64, |acc, q| acc.lcm(q.denom()));
    ms.iter()
        .map(|m| {
            m.data()
                .iter()
                .map(|q| BigInt::from(*q.numer()) * BigInt::from(lcm / q.denom()))
                .collect()
        })
        .collect()
}

pub fn weak_berger_space(rep: &MatrixRep) -> Result<WeakBergerCertificate> {
    weak_berger_space_with(rep, SolverBounds::default(), TripleMode::for_form(rep.symmetry))
}

pub fn weak_berger_space_with(
    rep: &MatrixRep,
    bounds: SolverBounds,
    mode: TripleMode,
) -> Result<WeakBergerCertificate> {
    let (d, g) = (rep.dim_v, rep.dim_g);
    let unknowns = d * g;
    if d > bounds.max_dim_v || unknowns > bounds.max_unknowns {
        return Err(Error::SolverBound {
            dim_v: d,
            unknowns,
            max_dim_v: bounds.max_dim_v,
            max_unknowns: bounds.max_unknowns,
        });
    }
    let m = pairing_tensors(rep);
    // nz[y*d+z] = [(a, M_a[y][z]) ≠ 0]
    let mut nz: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); d * d];
    for (a, ma) in m.iter().enumerate() {
        for (k, v) in ma.iter().enumerate() {
            if !v.is_zero() {
                nz[k].push((a, v));
            }
        }
    }
    let var = |x: usize, a: usize| x * g + a;

    let mut equations: Vec<Vec<(usize, BigInt)>> = Vec::new();
    for (x, y, z) in mode.triples(d) {
        let mut eq: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (p, r, s) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (a, v) in &nz[r * d + s] {
                *eq.entry(var(p, *a)).or_default() += *v;
            }
        }
        eq.retain(|_, v| !v.is_zero());
        if !eq.is_empty() {
            equations.push(eq.into_iter().collect());
        }
    }

    // The system splits along connected components of the unknown/equation graph.
    let mut uf = UnionFind::new(unknowns);
    for eq in &equations {
        for (u, _) in &eq[1..] {
            uf.union(eq[0].0, *u);
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for u in 0..unknowns {
        comps.entry(uf.find(u)).or_default().push(u);
    }
    let mut comp_eqs: BTreeMap<usize, Vec<&Vec<(usize, BigInt)>>> = BTreeMap::new();
    for eq in &equations {
        comp_eqs.entry(uf.find(eq[0].0)).or_default().push(eq);
    }

    let mut kernel: Vec<Vec<(usize, BigInt)>> = Vec::new();
    let mut blocks: Vec<&Vec<usize>> = comps.values().collect();
    blocks.sort_by_key(|c| c[0]);
    for members in blocks {
        let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut ech = Echelon::new(members.len());
        for eq in comp_eqs.get(&uf.find(members[0])).map(Vec::as_slice).unwrap_or(&[]) {
            let mut row = vec![BigInt::zero(); members.len()];
            for (u, v) in eq.iter() {
                row[local[u]] = v.clone();
            }
            ech.insert(row);
            if ech.rank() == members.len() {
                break;
            }
        }
        for v in ech.nullspace() {
            kernel.push(
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (members[i], c))
                    .collect(),
            );
        }
    }

    let basis_of_bh: Vec<Vec<Vec<BigInt>>> = kernel
        .iter()
        .map(|sparse| {
            let mut arr = vec![vec![BigInt::zero(); d]; g];
            for (u, c) in sparse {
                arr[u % g][u / g] = c.clone();
            }
            arr
        })
        .collect();
    let span_dim = span_of_values(&basis_of_bh, g, d);
    Ok(WeakBergerCertificate {
        descriptor: rep.descriptor.clone(),
        dim_v: d,
        dim_g: g,
        dim_bh: basis_of_bh.len(),
        basis_of_bh,
        span_dim,
        is_weak_berger: span_dim == g,
        form: rep.symmetry,
    })
}

/// `dim span{Q(e_x)}` as vectors of coefficients in the basis of `g`.
#[allow(clippy::needless_range_loop)]
fn span_of_values(basis: &[Vec<Vec<BigInt>>], g: usize, d: usize) -> usize {
    let mut ech = Echelon::new(g);
    for arr in basis {
        for x in 0..d {
            if ech.rank() == g {
                return g;
            }
            let row: Vec<BigInt> = (0..g).map(|a| arr[a][x].clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                ech.insert(row);
            }
        }
    }
    ech.rank()
}

impl WeakBergerCertificate {
    /// Checks the cyclic identity for every basis element on every ordered
    /// triple, and recomputes the span dimension.
    pub fn replay(&self, rep: &MatrixRep) -> std::result::Result<(), String> {
        let (d, g) = (rep.dim_v, rep.dim_g);
        if (self.dim_v, self.dim_g) != (d, g) || self.basis_of_bh.len() != self.dim_bh || self.form != rep.symmetry {
            return Err("certificate shape does not match the representation".into());
        }
        let m = pairing_tensors(rep);
        for (n, arr) in self.basis_of_bh.iter().enumerate() {
            if arr.len() != g || arr.iter().any(|r| r.len() != d) {
                return Err(format!("basis element {n} has the wrong shape"));
            }
            // t[x][y][z] = h(Q(e_x) e_y, e_z)
            let mut t = vec![BigInt::zero(); d * d * d];
            for (a, row) in arr.iter().enumerate() {
                for (x, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, v) in m[a].iter().enumerate() {
                        if !v.is_zero() {
                            t[x * d * d + k] += c * v;
                        }
                    }
                }
            }
            let at = |x: usize, y: usize, z: usize| &t[(x * d + y) * d + z];
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        if !(at(x, y, z) + at(y, z, x) + at(z, x, y)).is_zero() {
                            return Err(format!("basis element {n} violates the identity at ({x}, {y}, {z})"));
                        }
                    }
                }
            }
        }
        let span = span_of_values(&self.basis_of_bh, g, d);
        if span != self.span_dim || self.is_weak_berger != (span == g) {
            return Err(format!("span dimension {span} does not match the certificate"));
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Outcome of checking that a certified weak-Berger module passes PI and PII.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub descriptor: String,
    pub is_weak_berger: bool,
    /// PI and PII verdicts; empty when the module is not weak-Berger.
    pub verdicts: Vec<ScreenVerdict>,
    pub consistent: bool,
}

/// Weak-Berger implies PI and PII; anything else is an inconsistency.
pub fn cross_check_screens(rep: &MatrixRep, cert: &WeakBergerCertificate) -> Result<CrossCheck> {
    let mut out = CrossCheck {
        descriptor: rep.descriptor.clone(),
        is_weak_berger: cert.is_weak_berger,
        verdicts: Vec::new(),
        consistent: true,
    };
    if cert.is_weak_berger {
        let ws = product_weight_system(&rep.highest_weight)?;
        let input = ScreenInput::from_weight_system(&ws);
        out.verdicts = vec![check_pi(&input), check_pii(&input)];
        out.consistent = out.verdicts.iter().all(|v| v.passed);
    }
    Ok(out)
}

/// The zero algebra on `C^dim_v` with the identity form.
pub fn zero_rep(dim_v: usize) -> MatrixRep {
    MatrixRep {
        descriptor: "zero".into(),
        dim_v,
        dim_g: 0,
        algebra_basis: Vec::new(),
        form_h: QMatrix::identity(dim_v),
        symmetry: Symmetry::Symmetric,
        highest_weight: Vec::new(),
    }
}
