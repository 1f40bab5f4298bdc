use braidcert::blocks::{block_twist, blocks_preserved};
use braidcert::examples::{
    build_pa_example, build_twist_example, build_twist_example_odd, pa_trace_and_dilatation,
    sl2_image, ExampleSpec, Variant,
};
use braidcert::word_problem;
use braidcert::BraidWord;
use num_bigint::BigInt;

#[test]
fn every_example_preserves_its_blocks() {
    for m in 1..=5 {
        let params: Vec<u32> = (1..=m as u32).rev().collect();
        for variant in [Variant::TwistEven, Variant::TwistOdd, Variant::PseudoAnosov] {
            let inst = ExampleSpec::new(variant, m, params.clone()).unwrap().build();
            assert!(blocks_preserved(&inst.beta, &inst.structure).unwrap());
            assert_eq!(inst.structure.strand_count(), inst.n());
        }
    }
}

#[test]
fn twist_example_is_product_of_block_twists() {
    let a = [3u32, 1, 2];
    let inst = build_twist_example(3, &a).unwrap();
    let mut expected = BraidWord::identity(6).unwrap();
    for (i, &e) in a.iter().enumerate() {
        let t = block_twist(i + 1, &inst.structure).unwrap().pow(e as i64);
        expected = expected.compose(&t).unwrap();
    }
    assert!(word_problem::equal(&inst.beta, &expected).unwrap());
}

#[test]
fn factors_on_different_blocks_commute() {
    let inst = build_pa_example(3, &[1, 2, 3]).unwrap();
    let n = inst.n();
    let factors: Vec<BraidWord> = (0..3)
        .map(|i| {
            BraidWord::parse("1 -2", 3)
                .unwrap()
                .pow(i as i64 + 1)
                .embed(3 * i, n)
                .unwrap()
        })
        .collect();
    for x in &factors {
        for y in &factors {
            assert!(word_problem::is_identity_checked(&word_problem::commutator(x, y).unwrap()).unwrap());
        }
    }
    let odd = build_twist_example_odd(2, &[2, 1]).unwrap();
    let t1 = BraidWord::parse("1 1 1 1", 5).unwrap();
    let t2 = BraidWord::parse("3 3", 5).unwrap();
    assert!(word_problem::commutes(&t1, &t2).unwrap());
    assert!(word_problem::equal(&odd.beta, &t1.compose(&t2).unwrap()).unwrap());
}

#[test]
fn trace_recurrence_and_distinct_dilatations() {
    let base = BraidWord::parse("1 -2", 3).unwrap();
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::from(3));
    let mut last = 0.0;
    for k in 1..=30 {
        let t = pa_trace_and_dilatation(&base.pow(k)).unwrap();
        assert_eq!(t.trace, cur);
        assert!(t.is_pseudo_anosov);
        let d = t.dilatation.unwrap();
        assert!(d > last);
        last = d;
        let next = BigInt::from(3) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
}

#[test]
fn sl2_is_a_homomorphism_on_relations() {
    let pairs = [("1 2 1", "2 1 2"), ("1 -1", ""), ("2 -2 1", "1")];
    for (l, r) in pairs {
        assert_eq!(
            sl2_image(&BraidWord::parse(l, 3).unwrap()).unwrap(),
            sl2_image(&BraidWord::parse(r, 3).unwrap()).unwrap()
        );
    }
}

#[test]
fn spec_validation() {
    assert!(ExampleSpec::new(Variant::PseudoAnosov, 3, vec![1, 2, 2]).is_err());
    assert!(build_twist_example_odd(1, &[0]).is_err());
    assert_eq!(build_twist_example_odd(3, &[1, 2, 3]).unwrap().n(), 7);
}
