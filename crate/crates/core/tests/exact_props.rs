//! Property tests and independent oracles for the linear-algebra layer.

use exholo_core::exact::{kernel_rows, rref, solve, Mat, Scalar, Solution, Subspace};
use proptest::prelude::*;

/// Independent determinant oracle: cofactor expansion for small sizes,
/// fraction-free integer elimination above. Works on integer matrices
/// and never touches the rref path it is used to check.
fn det_oracle(m: &Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n <= 4 {
        return det_cofactor(m);
    }
    det_bareiss(m.clone())
}

fn det_cofactor(m: &Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i128;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * top * det_cofactor(&minor);
    }
    acc
}

fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Deterministic linear congruential generator for the frozen test.
struct Lcg(u64);

impl Lcg {
    fn next_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + ((self.0 >> 33) % (hi - lo + 1) as u64) as i64
    }
}

#[test]
fn rref_of_invertible_10x10_is_identity() {
    let mut rng = Lcg(0x5eed);
    let mut found = 0;
    while found < 5 {
        let rows: Vec<Vec<i64>> = (0..10)
            .map(|_| (0..10).map(|_| rng.next_int(-4, 4)).collect())
            .collect();
        let as_i128: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        if det_oracle(&as_i128) == 0 {
            continue;
        }
        found += 1;
        let m = Mat::from_fn(10, 10, |i, j| Scalar::from_int(rows[i][j]));
        let (r, pivots) = rref(&m);
        assert_eq!(r, Mat::identity(10));
        assert_eq!(pivots, (0..10).collect::<Vec<_>>());
    }
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::fraction(n, d))
}

fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(small_scalar(), rows * cols)
        .prop_map(move |entries| Mat::new(rows, cols, entries))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in small_mat(4, 5)) {
        let k = kernel_rows(&m);
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
    }

    #[test]
    fn kernel_rows_are_annihilated(m in small_mat(4, 5)) {
        let k = kernel_rows(&m);
        for i in 0..k.rows() {
            let image = m.apply(k.row(i));
            prop_assert!(image.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rref_is_projector_fixed_point(m in small_mat(4, 4)) {
        let (r, _) = rref(&m);
        let (r2, _) = rref(&r);
        prop_assert_eq!(r, r2);
    }

    #[test]
    fn subspace_canonical_under_row_operations(m in small_mat(3, 5), c in small_mat(3, 3)) {
        // The span of c*m is contained in the span of m; when c is
        // invertible the two spans (and hence the canonical forms) agree.
        if c.rank() == 3 {
            let s1 = Subspace::from_rows(&m);
            let s2 = Subspace::from_rows(&(&c * &m));
            prop_assert_eq!(s1, s2);
        }
    }

    #[test]
    fn modular_dimension_law(a in small_mat(3, 6), b in small_mat(3, 6)) {
        let s1 = Subspace::from_rows(&a);
        let s2 = Subspace::from_rows(&b);
        let sum = s1.sum(&s2).unwrap();
        let meet = s1.intersect(&s2).unwrap();
        // Independent rank computations on the raw generator stacks.
        let rank_a = a.rank();
        let rank_b = b.rank();
        let rank_sum = a.stack(&b).rank();
        prop_assert_eq!(s1.dim(), rank_a);
        prop_assert_eq!(s2.dim(), rank_b);
        prop_assert_eq!(sum.dim(), rank_sum);
        prop_assert_eq!(s1.dim() + s2.dim(), sum.dim() + meet.dim());
    }

    #[test]
    fn kron_respects_products(
        a in small_mat(2, 3),
        b in small_mat(3, 2),
        x in proptest::collection::vec(small_scalar(), 3),
        y in proptest::collection::vec(small_scalar(), 2),
    ) {
        // (a (x) b)(x (x) y) = (a x) (x) (b y), expanded componentwise.
        let kron = a.kron(&b);
        let mut xy = Vec::with_capacity(6);
        for xi in &x {
            for yj in &y {
                xy.push(xi * yj);
            }
        }
        let lhs = kron.apply(&xy);
        let ax = a.apply(&x);
        let by = b.apply(&y);
        let mut rhs = Vec::with_capacity(lhs.len());
        for p in &ax {
            for q in &by {
                rhs.push(p * q);
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_agrees_with_direct_multiplication(m in small_mat(4, 4), v in proptest::collection::vec(small_scalar(), 4)) {
        match solve(&m, &v).unwrap() {
            Solution::Solvable { particular, .. } => {
                prop_assert_eq!(m.apply(&particular), v);
            }
            Solution::Unsolvable { certificate } => {
                // y a = 0 and y b != 0.
                let mut yb = Scalar::zero();
                for (yi, bi) in certificate.iter().zip(v.iter()) {
                    yb += &(yi * bi);
                }
                prop_assert!(!yb.is_zero());
                for j in 0..4 {
                    let mut ya = Scalar::zero();
                    for (yi, i) in certificate.iter().zip(0..4) {
                        ya += &(yi * m.get(i, j));
                    }
                    prop_assert!(ya.is_zero());
                }
            }
        }
    }
}
