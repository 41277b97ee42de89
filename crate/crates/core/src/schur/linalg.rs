//! Small dense Hermitian eigenvalue problems.

use num_complex::Complex64;

/// Rotations stop once the off-diagonal Frobenius norm falls below this
/// fraction of the full Frobenius norm (or this absolute value for tiny matrices).
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) of the Hermitian matrix stored row-major in `a`
/// (`dim x dim`), by cyclic complex Jacobi rotations. Only the upper triangle
/// is trusted; the lower one is overwritten from it.
pub fn hermitian_eigenvalues(mut a: Vec<Complex64>, dim: usize) -> Vec<f64> {
    assert_eq!(a.len(), dim * dim, "matrix storage does not match dimension");
    for i in 0..dim {
        a[i * dim + i].im = 0.0;
        for j in i + 1..dim {
            a[j * dim + i] = a[i * dim + j].conj();
        }
    }
    let frob: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = JACOBI_OFF_DIAGONAL_TOL * frob.max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, dim) <= threshold {
            break;
        }
        for p in 0..dim {
            for q in p + 1..dim {
                rotate(&mut a, dim, p, q);
            }
        }
    }
    let mut eig: Vec<f64> = (0..dim).map(|i| a[i * dim + i].re).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

fn off_diagonal_norm(a: &[Complex64], dim: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                s += a[i * dim + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with the unitary `V` acting on the `(p, q)` plane,
/// `V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]`, `phi = arg a[p][q]`.
fn rotate(a: &mut [Complex64], dim: usize, p: usize, q: usize) {
    let apq = a[p * dim + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[p * dim + p].re;
    let aqq = a[q * dim + q].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let e = apq.conj() / r; // e^{-i phi}

    // columns: A <- A V
    for k in 0..dim {
        let akp = a[k * dim + p];
        let akq = a[k * dim + q];
        a[k * dim + p] = akp * c - akq * e * s;
        a[k * dim + q] = akp * s + akq * e * c;
    }
    // rows: A <- V^H A
    let ec = e.conj();
    for k in 0..dim {
        let apk = a[p * dim + k];
        let aqk = a[q * dim + k];
        a[p * dim + k] = apk * c - aqk * ec * s;
        a[q * dim + k] = apk * s + aqk * ec * c;
    }
    a[p * dim + q] = Complex64::new(0.0, 0.0);
    a[q * dim + p] = Complex64::new(0.0, 0.0);
    a[p * dim + p].im = 0.0;
    a[q * dim + q].im = 0.0;
}
