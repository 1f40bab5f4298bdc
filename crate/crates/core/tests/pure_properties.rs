mod common;

use braidcert::pure::{linking_matrix, pure_generator};
use braidcert::rank::integer_rank;
use braidcert::{BraidError, BraidWord};
use common::{random_pure, rational_rank};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn generators_are_a_basis() {
    for n in 2..=7 {
        for i in 1..=n {
            for j in i + 1..=n {
                let lk = linking_matrix(&pure_generator(i, j, n).unwrap()).unwrap();
                for (a, b, v) in lk.iter() {
                    assert_eq!(v, i64::from((a, b) == (i, j)), "A_{i}{j} at {a},{b}");
                }
            }
        }
    }
}

#[test]
fn homomorphism_inverse_and_covariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let (fu, fv) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let u = random_pure(&mut rng, n, fu, 6);
        let v = random_pure(&mut rng, n, fv, 6);
        let (lu, lv) = (linking_matrix(&u).unwrap(), linking_matrix(&v).unwrap());
        let luv = linking_matrix(&u.compose(&v).unwrap()).unwrap();
        assert_eq!(luv, &lu + &lv);
        assert_eq!(linking_matrix(&u.inverse()).unwrap(), -&lu);

        let g = { let len = rng.gen_range(0..=12); BraidWord::random(&mut rng, n, len) };
        let pi = g.permutation();
        let conj = g.inverse().compose(&u).unwrap().compose(&g).unwrap();
        let lc = linking_matrix(&conj).unwrap();
        for (i, j, val) in lu.iter() {
            assert_eq!(lc.get(pi.image(i), pi.image(j)), val);
        }
        let conj2 = g.compose(&u).unwrap().compose(&g.inverse()).unwrap();
        let lc2 = linking_matrix(&conj2).unwrap();
        for (i, j, val) in lc2.iter() {
            assert_eq!(lu.get(pi.image(i), pi.image(j)), val);
        }
    }
}

#[test]
fn rejects_non_pure() {
    assert_eq!(
        linking_matrix(&BraidWord::parse("1 2", 3).unwrap()),
        Err(BraidError::NotPure)
    );
}

#[test]
fn rank_matches_rational_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let rows = rng.gen_range(0..=7);
        let cols = rng.gen_range(1..=7);
        // low-rank products make dependence common
        let inner = rng.gen_range(1..=cols);
        let a: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..inner).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let b: Vec<Vec<i64>> = (0..inner)
            .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let m: Vec<Vec<i64>> = a
            .iter()
            .map(|r| (0..cols).map(|c| (0..inner).map(|k| r[k] * b[k][c]).sum()).collect())
            .collect();
        assert_eq!(integer_rank(&m).unwrap(), rational_rank(&m), "{m:?}");
    }
}

#[test]
fn rank_handles_large_entries() {
    let big = 1i64 << 40;
    let rows = vec![
        vec![big, big + 1, 3],
        vec![big - 1, big, 5],
        vec![2 * big - 1, 2 * big + 1, 8],
    ];
    assert_eq!(integer_rank(&rows).unwrap(), rational_rank(&rows));
    assert_eq!(integer_rank(&rows).unwrap(), 2);
}
