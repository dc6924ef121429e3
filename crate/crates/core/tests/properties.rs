//! Randomized invariant checks for the numerical kernels.
//!
//! Each property states a fact that must hold for *every* input in its
//! domain, not just the frozen examples in the unit tests: exact identities
//! of the plus function, norm orderings, factorization residuals, closed-form
//! eigenvalue agreement, soundness relations between the grid bounds at
//! different spacings, and generator guarantees.

use lcp_certify_core::beta::{beta_grid_enclosure, beta_objective, t_recursion_lower_bound};
use lcp_certify_core::classify::{comparison_matrix, is_p_matrix};
use lcp_certify_core::gen::{gen_matrix, Family, GenSpec};
use lcp_certify_core::linalg::{determinant, invert, real_eigenvalues};
use lcp_certify_core::{DenseMatrix, IndexSet, RealVector, Tolerances};
use proptest::prelude::*;

/// Entries that keep every computation well inside the exponent range.
fn entry() -> impl Strategy<Value = f64> {
    (-5.0..5.0f64).prop_map(|x| (x * 1e6).round() / 1e6)
}

fn square(n: usize) -> impl Strategy<Value = DenseMatrix> {
    prop::collection::vec(entry(), n * n)
        .prop_map(move |data| DenseMatrix::from_row_major(n, data).unwrap())
}

/// Row-dominant matrix with diagonal margin ≥ 0.2: always a P-matrix, always
/// well conditioned.
fn dominant(n: usize) -> impl Strategy<Value = DenseMatrix> {
    (
        prop::collection::vec(entry(), n * n),
        prop::collection::vec(0.2..1.2f64, n),
    )
        .prop_map(move |(mut data, margins)| {
            for i in 0..n {
                let off: f64 = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| data[i * n + j].abs())
                    .sum();
                data[i * n + i] = off + margins[i];
            }
            DenseMatrix::from_row_major(n, data).unwrap()
        })
}

fn vector(n: usize) -> impl Strategy<Value = RealVector> {
    prop::collection::vec(entry(), n).prop_map(|v| RealVector::new(v).unwrap())
}

/// Cofactor-expansion determinant: an independent O(n!) oracle.
fn det_cofactor(a: &DenseMatrix) -> f64 {
    fn go(n: usize, rows: &[usize], cols: &[usize], a: &DenseMatrix) -> f64 {
        if n == 1 {
            return a.get(rows[0], cols[0]);
        }
        let mut acc = 0.0;
        let mut sign = 1.0;
        for (k, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            acc += sign * a.get(rows[0], c) * go(n - 1, &rows[1..], &sub_cols, a);
            let _ = k;
            sign = -sign;
        }
        acc
    }
    let n = a.n();
    let idx: Vec<usize> = (0..n).collect();
    go(n, &idx, &idx, a)
}

proptest! {
    /// `(x₊)₊ = x₊` and `x₊ ≥ 0`, exactly.
    #[test]
    fn plus_is_idempotent_and_nonnegative(v in (1usize..6).prop_flat_map(vector)) {
        let p = v.plus();
        let pp = p.plus();
        prop_assert_eq!(pp.as_slice(), p.as_slice());
        prop_assert!(p.iter().all(|x| x >= 0.0));
    }

    /// `v − (v − w)₊ = min(v, w)` up to roundoff in the subtraction; the
    /// residual evaluator depends on this identity holding tightly.
    #[test]
    fn plus_encodes_the_componentwise_minimum(
        (v, w) in (1usize..6).prop_flat_map(|n| (vector(n), vector(n)))
    ) {
        let lhs = v.sub(&v.sub(&w).unwrap().plus()).unwrap();
        let rhs = v.min_with(&w).unwrap();
        for i in 0..lhs.len() {
            prop_assert!((lhs[i] - rhs[i]).abs() <= 1e-12,
                "component {}: {} vs {}", i, lhs[i], rhs[i]);
        }
    }

    /// `‖A‖max ≤ ‖A‖∞ ≤ n·‖A‖max`, the chain that links the two norm modes.
    #[test]
    fn norm_chain_orders_the_two_modes(a in (1usize..7).prop_flat_map(square)) {
        let em = a.norm_entrymax();
        let ind = a.norm_inf_induced();
        prop_assert!(em <= ind);
        prop_assert!(ind <= a.n() as f64 * em * (1.0 + 1e-12));
    }

    /// LU inversion leaves a residual below the verification threshold on
    /// well-conditioned inputs.
    #[test]
    fn inversion_residual_stays_small(a in (1usize..7).prop_flat_map(dominant)) {
        let tol = Tolerances::default();
        let inv = invert(&a, &tol).unwrap();
        let resid = a
            .mul_matrix(&inv)
            .unwrap()
            .sub(&DenseMatrix::identity(a.n()).unwrap())
            .unwrap();
        prop_assert!(resid.norm_entrymax() <= 1e-9);
    }

    /// LU determinant agrees with cofactor expansion (independent oracle).
    #[test]
    fn determinant_matches_cofactor_expansion(a in (1usize..5).prop_flat_map(square)) {
        let tol = Tolerances::default();
        let lu = determinant(&a, &tol);
        let co = det_cofactor(&a);
        let scale = 1.0 + co.abs().max(lu.abs());
        prop_assert!((lu - co).abs() <= 1e-9 * scale, "lu {} vs cofactor {}", lu, co);
    }

    /// 2×2 eigenvalues agree with the quadratic formula when the
    /// discriminant is safely signed.
    #[test]
    fn two_by_two_eigenvalues_match_the_quadratic_formula(
        (a, b, c, d) in (entry(), entry(), entry(), entry())
    ) {
        let m = DenseMatrix::from_rows(&[&[a, b], &[c, d]]).unwrap();
        let disc = (a - d) * (a - d) + 4.0 * b * c;
        prop_assume!(disc.abs() > 1e-6);
        let tol = Tolerances::default();
        let got = real_eigenvalues(&m, &tol).unwrap();
        if disc < 0.0 {
            prop_assert!(got.is_empty(), "complex pair classified as real: {:?}", got);
        } else {
            let root = disc.sqrt();
            let expect = [((a + d) - root) / 2.0, ((a + d) + root) / 2.0];
            prop_assert_eq!(got.len(), 2);
            for (g, e) in got.iter().zip(expect.iter()) {
                prop_assert!((g - e).abs() <= 1e-9 * (1.0 + e.abs()),
                    "{} vs {}", g, e);
            }
        }
    }

    /// The comparison construction is idempotent.
    #[test]
    fn comparison_matrix_is_idempotent(a in (1usize..6).prop_flat_map(square)) {
        let c = comparison_matrix(&a);
        let cc = comparison_matrix(&c);
        prop_assert_eq!(cc.as_row_major(), c.as_row_major());
    }

    /// The objective is even: negating the argument changes nothing, bitwise.
    /// (This is why sampling only the `+1` faces of the cube is lossless.)
    #[test]
    fn objective_is_even_bitwise(
        (a, z) in (1usize..5).prop_flat_map(|n| (square(n), prop::collection::vec(entry(), n)))
    ) {
        let neg: Vec<f64> = z.iter().map(|&x| -x).collect();
        let f1 = beta_objective(&a, &z).unwrap();
        let f2 = beta_objective(&a, &neg).unwrap();
        prop_assert_eq!(f1.to_bits(), f2.to_bits());
    }

    /// Every generator family emits P-matrices at every dimension and seed.
    #[test]
    fn generated_matrices_are_p(
        seed in any::<u64>(),
        n in 1usize..5,
        fam in prop::sample::select(&[
            Family::DiagDominant,
            Family::SymmetricPd,
            Family::Diagonal,
        ][..]),
    ) {
        let a = gen_matrix(&GenSpec::new(n, fam, seed)).unwrap();
        let tol = Tolerances::default();
        let (is_p, witness) = is_p_matrix(&a, &tol).unwrap();
        prop_assert!(is_p, "witness {:?}", witness);
    }

    /// Bitmask encoding of index sets round-trips.
    #[test]
    fn index_set_bitmask_round_trips(mask in 1u64..1024) {
        let s = IndexSet::from_bitmask(10, mask).unwrap();
        prop_assert_eq!(s.to_bitmask(), mask);
    }

    /// Recursion terms are strictly positive and nonincreasing, so the final
    /// term is always a usable (if weak) lower bound.
    #[test]
    fn recursion_terms_decrease(a in (2usize..5).prop_flat_map(dominant)) {
        let tol = Tolerances::default();
        prop_assume!(!a.is_diagonal());
        let trace = t_recursion_lower_bound(&a, 0.5, &tol).unwrap();
        prop_assert_eq!(trace.t.len(), a.n());
        for w in trace.t.windows(2) {
            prop_assert!(w[1] > 0.0 && w[1] <= w[0], "terms {:?}", trace.t);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// A grid lower bound at one spacing can never exceed the sampled
    /// minimum at another: both bracket the same continuous minimum.
    #[test]
    fn grid_bounds_are_consistent_across_spacings(a in (1usize..3).prop_flat_map(dominant)) {
        let tol = Tolerances::default();
        let coarse = beta_grid_enclosure(&a, 0.2, &tol).unwrap();
        let fine = beta_grid_enclosure(&a, 0.07, &tol).unwrap();
        prop_assert!(coarse.lo <= fine.sample_min + 1e-12);
        prop_assert!(fine.lo <= coarse.sample_min + 1e-12);
        prop_assert!(fine.lo <= fine.sample_min && coarse.lo <= coarse.sample_min);
    }
}
