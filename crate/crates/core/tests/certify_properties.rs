use braidcert::certify::{
    certify, default_candidate_set, lower_bound_certificate, verify_commutation, Candidate,
    CertificateReport,
};
use braidcert::word_problem::{commutator, Engine};
use braidcert::{BraidWord, Execution, ExampleSpec, Variant};

fn spec(variant: Variant, m: usize) -> ExampleSpec {
    ExampleSpec::new(variant, m, (1..=m as u32).collect()).unwrap()
}

#[test]
fn default_rows_have_disjoint_supports() {
    for variant in [Variant::TwistEven, Variant::TwistOdd, Variant::PseudoAnosov] {
        for m in 1..=4 {
            let r = certify(&spec(variant, m), Execution::Parallel).unwrap();
            let cols = r.profile_matrix.first().map_or(0, |row| row.len());
            for c in 0..cols {
                let users = r.profile_matrix.iter().filter(|row| row[c] != 0).count();
                assert!(users <= 1, "{variant} m={m} column {c}");
            }
            assert!(r.profile_matrix.iter().all(|row| row.iter().any(|&x| x != 0)));
            assert_eq!(r.rank, r.candidates.len());
        }
    }
}

#[test]
fn rank_bounds_and_threshold() {
    for variant in [Variant::TwistEven, Variant::TwistOdd, Variant::PseudoAnosov] {
        for m in 1..=4 {
            let r = certify(&spec(variant, m), Execution::Parallel).unwrap();
            let singleton = if r.sizes.contains(&1) { m } else { 0 };
            assert!(r.rank <= m * (m + 1) / 2 + singleton);
            assert_eq!(r.conjecture_threshold, r.n - 1);
            assert_eq!(r.refuted, r.rank > r.n - 1);
            if r.refuted {
                assert!(r.checks.iter().all(|c| c.commutes && c.block_preserving));
            }
        }
    }
    for m in 3..=6 {
        assert!(certify(&spec(Variant::TwistEven, m), Execution::Parallel).unwrap().refuted);
    }
    for m in 1..=2 {
        assert!(!certify(&spec(Variant::TwistEven, m), Execution::Parallel).unwrap().refuted);
    }
}

#[test]
fn adding_candidates_never_lowers_rank() {
    let inst = spec(Variant::TwistOdd, 3).build();
    let all = default_candidate_set(&inst);
    let mut last = 0;
    for k in 1..=all.len() {
        let r = lower_bound_certificate(&inst, &all[..k], Execution::Sequential).unwrap();
        assert!(r.rank >= last);
        last = r.rank;
    }
    let mut extra = all.clone();
    extra.push(Candidate::new("beta", inst.beta.clone()));
    extra.push(Candidate::new("T1^2", all[0].word.pow(2)));
    let r = lower_bound_certificate(&inst, &extra, Execution::Sequential).unwrap();
    assert_eq!(r.rank, last);
}

#[test]
fn every_commuting_verdict_is_reproduced_by_both_engines() {
    for variant in [Variant::TwistEven, Variant::TwistOdd, Variant::PseudoAnosov] {
        let r = certify(&spec(variant, 3), Execution::Parallel).unwrap();
        let beta = BraidWord::new(r.n, r.beta.clone()).unwrap();
        for c in &r.candidates {
            let w = BraidWord::new(r.n, c.word.clone()).unwrap();
            let comm = commutator(&beta, &w).unwrap();
            for engine in Engine::ALL {
                assert!(engine.is_identity(&comm));
            }
        }
        assert!(r.audit().is_ok());
    }
}

#[test]
fn twists_commute_with_every_default_candidate() {
    let inst = spec(Variant::PseudoAnosov, 3).build();
    let cands = default_candidate_set(&inst);
    for t in cands.iter().filter(|c| c.label.starts_with('T')) {
        let v = verify_commutation(&t.word, &cands, Execution::Parallel).unwrap();
        assert!(v.iter().all(|&x| x), "{}", t.label);
    }
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = certify(&spec(Variant::TwistEven, 3), Execution::Parallel).unwrap();
    let b = certify(&spec(Variant::TwistEven, 3), Execution::Sequential).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let back = CertificateReport::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    let json = a.to_json();
    let keys = [
        "\"variant\"", "\"m\"", "\"n\"", "\"sizes\"", "\"params\"", "\"beta\"",
        "\"candidates\"", "\"checks\"", "\"profile_matrix\"", "\"rank\"", "\"lower_bound\"",
        "\"conjecture_threshold\"", "\"refuted\"", "\"assumptions\"",
    ];
    let mut at = 0;
    for k in keys {
        let pos = json[at..].find(k).unwrap_or_else(|| panic!("missing {k}")) + at;
        at = pos;
    }
    assert!(json.starts_with("{\"variant\":\"twist\",\"m\":3,\"n\":6,\"sizes\":[2,2,2],\"params\":[1,2,3],\"beta\":[1,1,3,3,3,3,5,5,5,5,5,5],"));
    assert!(json.contains("\"rank\":6,\"lower_bound\":6,\"conjecture_threshold\":5,\"refuted\":true"));
}
