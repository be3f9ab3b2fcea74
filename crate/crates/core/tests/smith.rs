//! Smith normal form on random integer matrices.

use braidforge_core::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x736e_6600_0000_0500;
const MATRICES: usize = 500;
const MAX_ENTRY: i64 = 20;
const MAX_DIM: usize = 12;

fn random_matrix(rng: &mut impl Rng) -> IntMatrix {
    let rows = rng.gen_range(1..=MAX_DIM);
    let cols = rng.gen_range(1..=MAX_DIM);
    // Some sparse matrices, so that rank deficiency and zero rows occur.
    let density = rng.gen_range(0.2..=1.0);
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-MAX_ENTRY..=MAX_ENTRY) } else { 0 })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&entries)
}

#[test]
fn unimodular_transforms_and_divisibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..MATRICES {
        let m = random_matrix(&mut rng);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d, "matrix {k}: U M V != D\n{m}");
        assert!(s.d.is_diagonal(), "matrix {k}");
        assert!(s.u.determinant().abs().is_one(), "matrix {k}: det U");
        assert!(s.v.determinant().abs().is_one(), "matrix {k}: det V");
        let diag = s.diagonal();
        for d in &diag {
            assert!(!d.is_negative());
        }
        for w in diag.windows(2) {
            // d_i | d_{i+1}, with zeros only at the end.
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "matrix {k}: zero before nonzero");
            } else {
                assert!(w[1].is_multiple_of(&w[0]), "matrix {k}: {} does not divide {}", w[0], w[1]);
            }
        }
    }
}

#[test]
fn determinant_is_preserved_up_to_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let rows: Vec<Vec<i64>> =
            (0..n).map(|_| (0..n).map(|_| rng.gen_range(-MAX_ENTRY..=MAX_ENTRY)).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        let prod: BigInt = smith_normal_form(&m).diagonal().iter().product();
        assert_eq!(prod, m.determinant().abs());
    }
}
