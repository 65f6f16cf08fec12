//! Small dense complex linear algebra helpers.
//!
//! Everything spectral in this crate reduces to Hermitian eigenproblems:
//! the twisted regular representation acts by unitary matrices, so centers,
//! isotypic projections and equivariant-hom projectors are all normal, and a
//! cyclic Jacobi sweep on matrices of dimension ≤ a few hundred is accurate
//! and dependency-free.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

pub fn adjoint(m: &CMat) -> CMat {
    m.adjoint()
}

/// Frobenius (Hilbert–Schmidt) inner product ⟨a, b⟩ = Σ conj(a_ij) b_ij.
pub fn hs_inner(a: &CMat, b: &CMat) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Returns real eigenvalues in ascending order with unitary eigenvector
/// columns: `a = v · diag(vals) · v^H`.
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, CMat) {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let herm_defect = max_abs(&(a - adjoint(a)));
    let scale = max_abs(a).max(1.0);
    assert!(
        herm_defect <= 1e-9 * scale,
        "hermitian_eigen: matrix is not Hermitian (defect {herm_defect:.3e})"
    );
    let mut m = (a + adjoint(a)).map(|z| z * 0.5);
    let mut v = identity(n);
    if n <= 1 {
        return ((0..n).map(|i| m[(i, i)].re).collect(), v);
    }

    let off = |m: &CMat| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += m[(p, q)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let tol = 1e-14 * scale;
    for _sweep in 0..60 {
        if off(&m) <= tol {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= tol * 1e-2 {
                    continue;
                }
                let phase = apq / r;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Unitary rotation U: U[p][p] = c, U[p][q] = −s·phase,
                // U[q][p] = s·conj(phase), U[q][q] = c; apply m ← U^H m U.
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * c + mkq * s * phase.conj();
                    m[(k, q)] = -mkp * s * phase + mkq * c;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = mpk * c + mqk * s * phase;
                    m[(q, k)] = -mpk * s * phase.conj() + mqk * c;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c + vkq * s * phase.conj();
                    v[(k, q)] = -vkp * s * phase + vkq * c;
                }
            }
        }
    }
    debug_assert!(off(&m) <= 1e-10 * scale, "Jacobi failed to converge");

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vecs = CMat::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        vecs.set_column(new, &v.column(old));
    }
    (vals, vecs)
}

/// Groups sorted eigenvalues into clusters whose gaps exceed `tol`.
pub fn cluster_eigenvalues(vals: &[f64], tol: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=vals.len() {
        if i == vals.len() || (vals[i] - vals[i - 1]).abs() > tol {
            out.push(start..i);
            start = i;
        }
    }
    out
}

/// Orthonormal basis of the column space of `m`, found by modified
/// Gram–Schmidt with column pivoting. Exactly `rank` columns are returned;
/// panics if the numerical rank is smaller.
pub fn orthonormal_columns(m: &CMat, rank: usize, tol: f64) -> CMat {
    let mut cols: Vec<nalgebra::DVector<Complex64>> =
        (0..m.ncols()).map(|j| m.column(j).into_owned()).collect();
    let mut basis: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(rank);
    while basis.len() < rank {
        let (best, norm) = cols
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.norm()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .expect("rank exceeds available columns");
        assert!(
            norm > tol,
            "orthonormal_columns: rank deficient (needed {rank}, got {})",
            basis.len()
        );
        let mut u = cols.swap_remove(best);
        u /= Complex64::new(norm, 0.0);
        // Re-orthogonalize twice for stability.
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&u);
                u -= b * c;
            }
            let nn = u.norm();
            assert!(nn > tol, "orthonormal_columns: breakdown");
            u /= Complex64::new(nn, 0.0);
        }
        for c in cols.iter_mut() {
            let overlap = u.dotc(&*c);
            *c -= &u * overlap;
        }
        basis.push(u);
    }
    let refs: Vec<_> = basis.iter().collect();
    CMat::from_columns(&refs)
}

/// Inverse via LU; `None` when singular.
pub fn try_inverse(m: &CMat) -> Option<CMat> {
    m.clone().try_inverse()
}
