//! Explicit matrix realizations of the catalog modules.

use num_traits::{One, Zero};

use super::matrix::QMatrix;
use crate::linalg::Q;

/// Basis matrices of a Lie algebra acting on `C^dim_v`, with a known invariant
/// form when the construction provides one.
#[derive(Clone, Debug)]
pub struct ModuleMatrices {
    pub basis: Vec<QMatrix>,
    pub dim_v: usize,
    pub form: Option<QMatrix>,
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// `sl(n)` on `C^n`: `E_ij` for `i != j` and `E_ii - E_{i+1,i+1}`.
pub fn sl_defining(n: usize) -> ModuleMatrices {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n - 1 {
        let mut h = QMatrix::unit(n, i, i);
        h.set(i + 1, i + 1, q(-1));
        basis.push(h);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(QMatrix::unit(n, i, j));
            }
        }
    }
    ModuleMatrices {
        basis,
        dim_v: n,
        form: None,
    }
}

/// `so(n)` preserving the identity form: `E_ij - E_ji`, `i < j`.
pub fn so_defining(n: usize) -> ModuleMatrices {
    let mut basis = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = QMatrix::unit(n, i, j);
            m.set(j, i, q(-1));
            basis.push(m);
        }
    }
    ModuleMatrices {
        basis,
        dim_v: n,
        form: Some(QMatrix::identity(n)),
    }
}

/// The standard symplectic form `[[0, I], [-I, 0]]` on `C^{2n}`.
pub fn symplectic_form(n: usize) -> QMatrix {
    let mut j = QMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, q(1));
        j.set(n + i, i, q(-1));
    }
    j
}

/// `sp(n)` on `C^{2n}`: `X = -J S` for `S` running over a basis of symmetric matrices.
pub fn sp_defining(n: usize) -> ModuleMatrices {
    let d = 2 * n;
    let j = symplectic_form(n);
    let minus_j = j.scale(q(-1));
    let mut basis = Vec::with_capacity(n * (2 * n + 1));
    for a in 0..d {
        for b in a..d {
            let mut s = QMatrix::unit(d, a, b);
            s.set(b, a, q(1));
            basis.push(&minus_j * &s);
        }
    }
    ModuleMatrices {
        basis,
        dim_v: d,
        form: Some(j),
    }
}

/// `Sym^k C^2` for `sl(2)`, on the monomials `x^{k-i} y^i`.
pub fn sym_power(k: usize) -> ModuleMatrices {
    let d = k + 1;
    let mut h = QMatrix::zeros(d, d);
    let mut e = QMatrix::zeros(d, d);
    let mut f = QMatrix::zeros(d, d);
    for i in 0..d {
        h.set(i, i, q(k as i64 - 2 * i as i64));
        if i > 0 {
            e.set(i - 1, i, q(i as i64));
        }
        if i + 1 < d {
            f.set(i + 1, i, q((k - i) as i64));
        }
    }
    ModuleMatrices {
        basis: vec![h, e, f],
        dim_v: d,
        form: None,
    }
}

/// Fermionic operators on the exterior algebra of `C^m`, basis vectors indexed
/// by subset bitmasks.
struct Fock {
    m: usize,
}

impl Fock {
    fn dim(&self) -> usize {
        1 << self.m
    }

    fn sign(mask: usize, i: usize) -> Q {
        if (mask & ((1 << i) - 1)).count_ones().is_multiple_of(2) {
            Q::one()
        } else {
            -Q::one()
        }
    }

    /// Wedge with `e_i`.
    fn create(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        for s in 0..self.dim() {
            if s & (1 << i) == 0 {
                m.set(s | (1 << i), s, Self::sign(s, i));
            }
        }
        m
    }

    /// Contraction with `e_i^*`.
    fn annihilate(&self, i: usize) -> QMatrix {
        self.create(i).transpose()
    }

    /// `(-1)^degree`.
    fn parity(&self) -> QMatrix {
        QMatrix::from_fn(self.dim(), self.dim(), |a, b| {
            if a != b {
                Q::zero()
            } else if a.count_ones() % 2 == 0 {
                Q::one()
            } else {
                -Q::one()
            }
        })
    }
}

/// Spin representation of `so(n)`, `n >= 3`, from quadratic Clifford elements
/// in a Witt basis. Entries lie in `{0, ±1, ±1/2}`.
#[allow(clippy::needless_range_loop)]
pub fn spin(n: usize) -> ModuleMatrices {
    let m = n / 2;
    let fock = Fock { m };
    let cr: Vec<QMatrix> = (0..m).map(|i| fock.create(i)).collect();
    let an: Vec<QMatrix> = (0..m).map(|i| fock.annihilate(i)).collect();
    let half = QMatrix::identity(fock.dim()).scale(Q::new(1, 2));
    let mut basis = Vec::new();
    for i in 0..m {
        basis.push(&(&cr[i] * &an[i]) - &half);
    }
    for i in 0..m {
        for j in 0..m {
            if i != j {
                basis.push(&cr[i] * &an[j]);
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            basis.push(&cr[i] * &cr[j]);
            basis.push(&an[i] * &an[j]);
        }
    }
    if n % 2 == 1 {
        let p = fock.parity();
        for i in 0..m {
            basis.push(&p * &cr[i]);
            basis.push(&p * &an[i]);
        }
    }
    ModuleMatrices {
        basis,
        dim_v: fock.dim(),
        form: None,
    }
}

/// Half-spin representation of `so(2m)`: even (`plus`) or odd degree part.
pub fn half_spin(n: usize, plus: bool) -> ModuleMatrices {
    let full = spin(n);
    let want = if plus { 0 } else { 1 };
    let idx: Vec<usize> = (0..full.dim_v).filter(|s| s.count_ones() % 2 == want).collect();
    ModuleMatrices {
        basis: full.basis.iter().map(|b| b.restrict(&idx)).collect(),
        dim_v: idx.len(),
        form: None,
    }
}

/// `g1 ⊕ g2` on `V1 ⊗ V2`, with the product form when both factors have one.
pub fn tensor(a: &ModuleMatrices, b: &ModuleMatrices) -> ModuleMatrices {
    let ia = QMatrix::identity(a.dim_v);
    let ib = QMatrix::identity(b.dim_v);
    let mut basis: Vec<QMatrix> = a.basis.iter().map(|x| QMatrix::kron(x, &ib)).collect();
    basis.extend(b.basis.iter().map(|y| QMatrix::kron(&ia, y)));
    let form = match (&a.form, &b.form) {
        (Some(h1), Some(h2)) => Some(QMatrix::kron(h1, h2)),
        _ => None,
    };
    ModuleMatrices {
        basis,
        dim_v: a.dim_v * b.dim_v,
        form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anticommutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
        &(a * b) + &(b * a)
    }

    #[test]
    fn canonical_anticommutation() {
        let fock = Fock { m: 3 };
        for i in 0..3 {
            for j in 0..3 {
                let ac = anticommutator(&fock.annihilate(i), &fock.create(j));
                let expect = if i == j {
                    QMatrix::identity(8)
                } else {
                    QMatrix::zeros(8, 8)
                };
                assert_eq!(ac, expect);
                assert!(anticommutator(&fock.create(i), &fock.create(j)).is_zero());
                assert!(anticommutator(&fock.parity(), &fock.create(j)).is_zero());
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(sl_defining(4).basis.len(), 15);
        assert_eq!(so_defining(6).basis.len(), 15);
        assert_eq!(sp_defining(3).basis.len(), 21);
        for (n, dg, dv) in [(5, 10, 4), (7, 21, 8), (8, 28, 16), (11, 55, 32)] {
            let s = spin(n);
            assert_eq!((s.basis.len(), s.dim_v), (dg, dv), "spin({n})");
        }
        assert_eq!(half_spin(10, false).dim_v, 16);
    }

    #[test]
    fn sp_preserves_j() {
        let m = sp_defining(2);
        let j = m.form.as_ref().unwrap();
        for x in &m.basis {
            assert!((&(&x.transpose() * j) + &(j * x)).is_zero());
        }
    }
}
