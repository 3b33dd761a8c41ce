use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use super::construct::ModuleMatrices;
use super::matrix::QMatrix;
use crate::linalg::{self, Echelon, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

impl Symmetry {
    pub fn of(h: &QMatrix) -> Option<Self> {
        if h.is_symmetric() {
            Some(Symmetry::Symmetric)
        } else if h.is_antisymmetric() {
            Some(Symmetry::Antisymmetric)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantForm {
    pub matrix: QMatrix,
    pub symmetry: Symmetry,
}

/// True when `X^T H + H X = 0` for every basis matrix.
pub fn is_invariant(basis: &[QMatrix], h: &QMatrix) -> bool {
    basis.iter().all(|x| (&(&x.transpose() * h) + &(h * x)).is_zero())
}

/// Basis of the invariant bilinear forms, symmetric ones first.
pub fn invariant_bilinear_forms(module: &ModuleMatrices) -> Vec<InvariantForm> {
    let mut out = solve(module, Symmetry::Symmetric);
    out.extend(solve(module, Symmetry::Antisymmetric));
    out
}

fn solve(module: &ModuleMatrices, sym: Symmetry) -> Vec<InvariantForm> {
    let d = module.dim_v;
    let (diagonal, other): (Vec<&QMatrix>, Vec<&QMatrix>) = module.basis.iter().partition(|x| x.is_diagonal());

    // Diagonal elements force H_ij = 0 unless D_ii + D_jj = 0.
    let mut vars: Vec<(usize, usize)> = Vec::new();
    for i in 0..d {
        let start = if sym == Symmetry::Symmetric { i } else { i + 1 };
        for j in start..d {
            if diagonal.iter().all(|x| (x.get(i, i) + x.get(j, j)).is_zero()) {
                vars.push((i, j));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = vars.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    // H_pq as (variable, sign).
    let entry = |p: usize, q: usize| -> Option<(usize, Q)> {
        if p <= q {
            index.get(&(p, q)).map(|&v| (v, Q::from_integer(1)))
        } else {
            let s = match sym {
                Symmetry::Symmetric => 1,
                Symmetry::Antisymmetric => -1,
            };
            index.get(&(q, p)).map(|&v| (v, Q::from_integer(s)))
        }
    };

    let mut ech = Echelon::new(vars.len());
    for x in other {
        let mut eqs: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        let mut add = |p: usize, q: usize, v: usize, c: Q| {
            eqs.entry((p, q)).or_insert_with(|| vec![Q::zero(); vars.len()])[v] += c;
        };
        // (X^T H)_pq = Σ_l X_lp H_lq and (H X)_pq = Σ_l H_pl X_lq.
        for (l, p, c) in x.nonzeros() {
            for q in 0..d {
                if let Some((v, s)) = entry(l, q) {
                    add(p, q, v, c * s);
                }
            }
        }
        for (l, q, c) in x.nonzeros() {
            for p in 0..d {
                if let Some((v, s)) = entry(p, l) {
                    add(p, q, v, c * s);
                }
            }
        }
        for row in eqs.values() {
            if ech.rank() == vars.len() {
                return Vec::new();
            }
            ech.insert_rational(row);
        }
    }

    ech.nullspace()
        .iter()
        .map(|v| {
            let coeffs = linalg::to_q(v).expect("form coefficients fit in i64");
            let mut h = QMatrix::zeros(d, d);
            for p in 0..d {
                for q in 0..d {
                    if let Some((var, s)) = entry(p, q) {
                        h.set(p, q, coeffs[var] * s);
                    }
                }
            }
            InvariantForm {
                matrix: h,
                symmetry: sym,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::construct::*;
    use super::*;

    fn forms(m: &ModuleMatrices) -> Vec<Symmetry> {
        let fs = invariant_bilinear_forms(m);
        for f in &fs {
            assert!(is_invariant(&m.basis, &f.matrix));
        }
        fs.iter().map(|f| f.symmetry).collect()
    }

    #[test]
    fn defining_modules() {
        for n in 3..=6 {
            assert_eq!(forms(&so_defining(n)), vec![Symmetry::Symmetric]);
        }
        assert_eq!(forms(&sl_defining(2)), vec![Symmetry::Antisymmetric]);
        assert!(forms(&sl_defining(3)).is_empty());
        assert_eq!(forms(&sp_defining(2)), vec![Symmetry::Antisymmetric]);
    }

    #[test]
    fn symmetric_powers_alternate() {
        for k in 1..=5 {
            let expect = if k % 2 == 0 {
                Symmetry::Symmetric
            } else {
                Symmetry::Antisymmetric
            };
            assert_eq!(forms(&sym_power(k)), vec![expect], "Sym^{k}");
        }
    }

    #[test]
    fn spin_forms() {
        assert_eq!(forms(&spin(5)), vec![Symmetry::Antisymmetric]);
        assert_eq!(forms(&spin(7)), vec![Symmetry::Symmetric]);
        assert_eq!(forms(&half_spin(8, true)), vec![Symmetry::Symmetric]);
        assert!(forms(&half_spin(10, true)).is_empty());
    }

    #[test]
    fn full_spin10_pairs_the_halves() {
        // spin(10) on both halves: the pairing between them.
        assert_eq!(forms(&spin(10)), vec![Symmetry::Symmetric, Symmetry::Antisymmetric]);
    }
}
