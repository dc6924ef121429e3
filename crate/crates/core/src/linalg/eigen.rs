//! Real eigenvalues of small dense matrices.
//!
//! Orders 1 and 2 use closed forms. Larger orders (up to
//! [`EIG_MAX_DIM`](crate::config::EIG_MAX_DIM)) reduce to upper Hessenberg
//! form by Householder similarity transforms and then run the classic
//! implicit double-shift QR iteration (the EISPACK `hqr` lineage), computing
//! eigenvalues only — no eigenvector accumulation. The iteration carries the
//! standard exceptional shifts and, unlike the textbook loop, a hard
//! iteration budget so pathological inputs fail with
//! [`Error::EigenNonConvergence`] instead of spinning.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::{Tolerances, EIG_MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// QR iterations allowed per eigenvalue before giving up. The usual
/// observation is convergence in ~2–3 iterations per eigenvalue; the
/// exceptional shifts fire at 10 and 30, so 50 is already deep in
/// "numerically hopeless" territory.
const MAX_ITER_PER_EIGENVALUE: usize = 50;

/// Eigenvalues as `(re, im)` pairs, in no particular order.
///
/// Complex eigenvalues of real matrices appear in conjugate pairs. The pairs
/// are later classified as real or complex against `tol_imag`; this function
/// reports raw iteration output.
pub(crate) fn eigenvalue_pairs(a: &DenseMatrix, _tol: &Tolerances) -> Result<Vec<(f64, f64)>> {
    let n = a.n();
    if n > EIG_MAX_DIM {
        return Err(Error::DimensionExceeded {
            limit: EIG_MAX_DIM,
            got: n,
        });
    }
    match n {
        1 => Ok(vec![(a.get(0, 0), 0.0)]),
        2 => Ok(eig2(a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1)).to_vec()),
        _ => hessenberg_qr(a),
    }
}

/// Closed-form eigenvalues of `[[a, b], [c, d]]`.
///
/// Real roots are computed in the cancellation-safe order (larger-magnitude
/// root first, the other via the determinant).
fn eig2(a: f64, b: f64, c: f64, d: f64) -> [(f64, f64); 2] {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let s = libm::sqrt(disc);
        // Root of larger magnitude, then the stable companion root.
        let big = if tr >= 0.0 { (tr + s) / 2.0 } else { (tr - s) / 2.0 };
        let small = if big != 0.0 { det / big } else { 0.0 };
        [(big, 0.0), (small, 0.0)]
    } else {
        let im = libm::sqrt(-disc) / 2.0;
        [(tr / 2.0, im), (tr / 2.0, -im)]
    }
}

/// Householder reduction to upper Hessenberg form, in place.
fn reduce_to_hessenberg(h: &mut [Vec<f64>]) {
    let n = h.len();
    let high = n - 1;
    let mut ort = vec![0.0f64; n];

    for m in 1..high {
        // Scale the column below the sub-diagonal to avoid under/overflow.
        let mut scale = 0.0;
        for row in h.iter().take(high + 1).skip(m) {
            scale += row[m - 1].abs();
        }
        if scale == 0.0 {
            continue;
        }
        // Householder vector for column m−1.
        let mut hsum = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[i][m - 1] / scale;
            hsum += ort[i] * ort[i];
        }
        let mut g = libm::sqrt(hsum);
        if ort[m] > 0.0 {
            g = -g;
        }
        hsum -= ort[m] * g;
        ort[m] -= g;

        // Apply the similarity transform H ← (I − u uᵀ/h) H (I − u uᵀ/h).
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[i][j];
            }
            f /= hsum;
            for i in m..=high {
                h[i][j] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * h[i][j];
            }
            f /= hsum;
            for j in m..=high {
                h[i][j] -= f * ort[j];
            }
        }
        h[m][m - 1] = scale * g;
    }
}

/// Implicit double-shift QR on an upper Hessenberg matrix; eigenvalues only.
#[allow(unused_assignments)] // p/q/r/z carry state between iteration phases
fn hessenberg_qr(a: &DenseMatrix) -> Result<Vec<(f64, f64)>> {
    let nn = a.n();
    let mut h: Vec<Vec<f64>> = (0..nn).map(|i| a.row(i).to_vec()).collect();
    reduce_to_hessenberg(&mut h);

    let mut re = vec![0.0f64; nn];
    let mut im = vec![0.0f64; nn];

    let eps = f64::EPSILON;
    let mut exshift = 0.0f64;
    let (mut p, mut q, mut r, mut z): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let (mut s, mut w, mut x, mut y): (f64, f64, f64, f64);

    // Norm of the Hessenberg part, the fallback scale for deflation tests.
    let mut norm = 0.0f64;
    for i in 0..nn {
        for j in i.saturating_sub(1)..nn {
            norm += h[i][j].abs();
        }
    }
    if norm == 0.0 {
        return Ok(vec![(0.0, 0.0); nn]);
    }

    let mut en: isize = nn as isize - 1;
    let mut iter = 0usize;

    while en >= 0 {
        let enu = en as usize;

        // Look for a single small sub-diagonal element.
        let mut l = enu;
        while l > 0 {
            s = h[l - 1][l - 1].abs() + h[l][l].abs();
            if s == 0.0 {
                s = norm;
            }
            if h[l][l - 1].abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == enu {
            // One root found.
            re[enu] = h[enu][enu] + exshift;
            im[enu] = 0.0;
            en -= 1;
            iter = 0;
        } else if l + 1 == enu {
            // Two roots found: solve the trailing 2×2 block directly.
            w = h[enu][enu - 1] * h[enu - 1][enu];
            p = (h[enu - 1][enu - 1] - h[enu][enu]) / 2.0;
            q = p * p + w;
            z = libm::sqrt(q.abs());
            h[enu][enu] += exshift;
            h[enu - 1][enu - 1] += exshift;
            x = h[enu][enu];
            if q >= 0.0 {
                // Real pair.
                z = if p >= 0.0 { p + z } else { p - z };
                re[enu - 1] = x + z;
                re[enu] = if z != 0.0 { x - w / z } else { re[enu - 1] };
                im[enu - 1] = 0.0;
                im[enu] = 0.0;
                // The Schur-form rotation applied here by eigenvector-accumulating
                // variants only affects the deflated rows/columns; eigenvalues
                // are already recorded, so it is omitted.
            } else {
                // Complex conjugate pair.
                re[enu - 1] = x + p;
                re[enu] = x + p;
                im[enu - 1] = z;
                im[enu] = -z;
            }
            en -= 2;
            iter = 0;
        } else {
            // No convergence yet: form a shift.
            x = h[enu][enu];
            y = 0.0;
            w = 0.0;
            if l < enu {
                y = h[enu - 1][enu - 1];
                w = h[enu][enu - 1] * h[enu - 1][enu];
            }
            if iter == 10 {
                // Exceptional shift (Wilson/Wilkinson ad hoc form).
                exshift += x;
                for i in 0..=enu {
                    h[i][i] -= x;
                }
                s = h[enu][enu - 1].abs() + h[enu - 1][enu - 2].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            if iter == 30 {
                // Second exceptional shift (MATLAB's ad hoc variant).
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = libm::sqrt(s);
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in 0..=enu {
                        h[i][i] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = 0.964;
                    w = 0.964;
                }
            }
            iter += 1;
            if iter > MAX_ITER_PER_EIGENVALUE {
                return Err(Error::EigenNonConvergence);
            }

            // Look for two consecutive small sub-diagonal elements.
            let mut m = enu - 2;
            loop {
                z = h[m][m];
                r = x - z;
                s = y - z;
                p = (r * s - w) / h[m + 1][m] + h[m][m + 1];
                q = h[m + 1][m + 1] - z - r - s;
                r = h[m + 2][m + 1];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h[m][m - 1].abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (h[m - 1][m - 1].abs() + z.abs() + h[m + 1][m + 1].abs()))
                {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=enu {
                h[i][i - 2] = 0.0;
                if i > m + 2 {
                    h[i][i - 3] = 0.0;
                }
            }

            // Double QR step on rows l..=en, columns m..=en.
            for k in m..enu {
                let notlast = k != enu - 1;
                if k != m {
                    p = h[k][k - 1];
                    q = h[k + 1][k - 1];
                    r = if notlast { h[k + 2][k - 1] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = libm::sqrt(p * p + q * q + r * r);
                if p < 0.0 {
                    s = -s;
                }
                if s != 0.0 {
                    if k != m {
                        h[k][k - 1] = -s * x;
                    } else if l != m {
                        h[k][k - 1] = -h[k][k - 1];
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;

                    // Row modification.
                    for j in k..nn {
                        p = h[k][j] + q * h[k + 1][j];
                        if notlast {
                            p += r * h[k + 2][j];
                            h[k + 2][j] -= p * z;
                        }
                        h[k][j] -= p * x;
                        h[k + 1][j] -= p * y;
                    }

                    // Column modification.
                    let imax = core::cmp::min(enu, k + 3);
                    for i in 0..=imax {
                        p = x * h[i][k] + y * h[i][k + 1];
                        if notlast {
                            p += z * h[i][k + 2];
                            h[i][k + 2] -= p * r;
                        }
                        h[i][k] -= p;
                        h[i][k + 1] -= p * q;
                    }
                }
            }
        }
    }

    Ok(re.into_iter().zip(im).collect())
}

/// Scale against which imaginary parts are judged: the largest eigenvalue
/// magnitude, plus 1 so that tiny spectra still get an absolute floor.
fn spectral_scale(pairs: &[(f64, f64)]) -> f64 {
    1.0 + pairs
        .iter()
        .map(|&(re, im)| libm::hypot(re, im))
        .fold(0.0, f64::max)
}

/// Whether every eigenvalue in `pairs` is real up to `tol_imag` (relative to
/// the spectral scale).
pub(crate) fn spectrum_is_real(pairs: &[(f64, f64)], tol: &Tolerances) -> bool {
    let thresh = tol.tol_imag * spectral_scale(pairs);
    pairs.iter().all(|&(_, im)| im.abs() <= thresh)
}

/// The real eigenvalues of `a`, sorted ascending.
///
/// Eigenvalues whose computed imaginary part exceeds
/// `tol_imag · (1 + spectral scale)` are classified as complex and excluded;
/// the result may therefore be shorter than `n` (and empty for matrices whose
/// spectrum is entirely complex, such as plane rotations).
///
/// # Errors
///
/// - [`Error::DimensionExceeded`] for orders above
///   [`EIG_MAX_DIM`](crate::config::EIG_MAX_DIM).
/// - [`Error::EigenNonConvergence`] if the QR iteration exhausts its budget.
///
/// # Examples
///
/// ```
/// use lcp_certify_core::linalg::real_eigenvalues;
/// use lcp_certify_core::{DenseMatrix, Tolerances};
///
/// let a = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
/// let ev = real_eigenvalues(&a, &Tolerances::default()).unwrap();
/// assert_eq!(ev.len(), 2);
/// assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
/// ```
pub fn real_eigenvalues(a: &DenseMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    let pairs = eigenvalue_pairs(a, tol)?;
    let thresh = tol.tol_imag * spectral_scale(&pairs);
    let mut reals: Vec<f64> = pairs
        .into_iter()
        .filter(|&(_, im)| im.abs() <= thresh)
        .map(|(re, _)| re)
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    Ok(reals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn assert_close(got: f64, want: f64, eps: f64) {
        assert!((got - want).abs() <= eps, "got {got}, want {want}");
    }

    #[test]
    fn order_one_is_the_entry() {
        let a = DenseMatrix::from_rows(&[&[5.0]]).unwrap();
        assert_eq!(real_eigenvalues(&a, &tol()).unwrap(), alloc::vec![5.0]);
    }

    #[test]
    fn symmetric_two_by_two() {
        let a = DenseMatrix::from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev.len(), 2);
        assert_close(ev[0], 1.0, 1e-12);
        assert_close(ev[1], 3.0, 1e-12);
    }

    #[test]
    fn rotation_has_no_real_eigenvalues() {
        let a = DenseMatrix::from_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert!(ev.is_empty(), "rotation spectrum is ±i, got {ev:?}");
        let pairs = eigenvalue_pairs(&a, &tol()).unwrap();
        assert!(!spectrum_is_real(&pairs, &tol()));
    }

    #[test]
    fn exchange_matrix_has_plus_minus_one() {
        let a = DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_close(ev[0], -1.0, 1e-12);
        assert_close(ev[1], 1.0, 1e-12);
    }

    #[test]
    fn near_cancelling_real_pair_is_accurate() {
        // trace ≈ discriminant: the naive small root loses digits; the
        // det/big formulation must not.
        let a = DenseMatrix::from_rows(&[&[1e8, 1.0], &[1.0, 1.0]]).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        // Char poly: λ² − (1e8+1)λ + (1e8 − 1); small root ≈ 1 − 2e−8.
        let small = ev[0];
        let resid = small * small - (1e8 + 1.0) * small + (1e8 - 1.0);
        assert!(resid.abs() < 1e-4, "char-poly residual {resid}");
    }

    #[test]
    fn triangular_spectrum_is_the_diagonal() {
        let a = DenseMatrix::from_rows(&[
            &[1.0, 4.0, 5.0],
            &[0.0, 2.0, 6.0],
            &[0.0, 0.0, 3.0],
        ])
        .unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev.len(), 3);
        for (got, want) in ev.iter().zip([1.0, 2.0, 3.0]) {
            assert_close(*got, want, 1e-9);
        }
    }

    #[test]
    fn zero_matrix_converges_to_zeros() {
        let a = DenseMatrix::from_rows(&[&[0.0; 3], &[0.0; 3], &[0.0; 3]]).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev, alloc::vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn tridiagonal_four_by_four_matches_cosine_formula() {
        // Eigenvalues of tridiag(1, 2, 1) of order n are 2 + 2cos(kπ/(n+1)).
        let a = DenseMatrix::from_rows(&[
            &[2.0, 1.0, 0.0, 0.0],
            &[1.0, 2.0, 1.0, 0.0],
            &[0.0, 1.0, 2.0, 1.0],
            &[0.0, 0.0, 1.0, 2.0],
        ])
        .unwrap();
        let mut want: Vec<f64> = (1..=4)
            .map(|k| 2.0 + 2.0 * libm::cos(k as f64 * core::f64::consts::PI / 5.0))
            .collect();
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev.len(), 4);
        for (got, w) in ev.iter().zip(want) {
            assert_close(*got, w, 1e-9);
        }
    }

    #[test]
    fn worked_example_full_matrix_has_one_real_eigenvalue() {
        // Char poly λ³ − 16λ² + 80λ − 110 has one real root (≈ 2.2333) and a
        // complex pair; the spectrum is not all-real.
        let a = DenseMatrix::from_rows(&[&[4.0, 1.0, 2.0], &[3.0, 5.0, -1.0], &[-1.0, -2.0, 7.0]])
            .unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev.len(), 1, "expected a single real eigenvalue, got {ev:?}");
        let l = ev[0];
        let resid = ((l - 16.0) * l + 80.0) * l - 110.0;
        assert!(resid.abs() < 1e-8, "char-poly residual {resid}");
        assert!(l > 2.0 && l < 2.5, "root landed at {l}");
        let pairs = eigenvalue_pairs(&a, &tol()).unwrap();
        assert!(!spectrum_is_real(&pairs, &tol()));
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let a = DenseMatrix::identity(13).unwrap();
        assert!(matches!(
            real_eigenvalues(&a, &tol()).unwrap_err(),
            Error::DimensionExceeded { limit: 12, got: 13 }
        ));
    }

    #[test]
    fn order_twelve_identity_is_all_ones() {
        let a = DenseMatrix::identity(12).unwrap();
        let ev = real_eigenvalues(&a, &tol()).unwrap();
        assert_eq!(ev.len(), 12);
        for v in ev {
            assert_close(v, 1.0, 1e-12);
        }
    }
}
