use whitten::census::Census;
use whitten::group::{identify_group, match_named_subgroup_2, GroupIdLabel, Named2, WhittenElement};
use whitten::sym_filter::{sigma_prime, FilterOptions, Verdict};

fn el(s: &str) -> WhittenElement {
    WhittenElement::parse(s).unwrap()
}

fn report(name: &str, sats: bool) -> whitten::sym_filter::FilterReport {
    Census::embedded()
        .compare_to_truth(name, &FilterOptions::with_satellites(sats))
        .unwrap()
}

#[test]
fn equal_for_a_simple_link() {
    let r = report("4^2_1", false);
    assert_eq!(r.verdict, Some(Verdict::Equal));
    assert_eq!(match_named_subgroup_2(&r.sigma_prime).name, Named2::Sigma4_1);
}

#[test]
fn jones_separates_orientation_change() {
    let r = report("7^2_7", false);
    assert_eq!(r.verdict, Some(Verdict::Equal));
    assert_eq!(match_named_subgroup_2(&r.sigma_prime).name, Named2::Sigma2_1);
    let d = Census::embedded().get("7^2_7").unwrap().diagram().unwrap();
    let g = el("(-1,-1,1,e)");
    assert!(!r.sigma_prime.contains(&g));
    let j = whitten::invariants::jones(&d).unwrap();
    assert_ne!(whitten::invariants::jones(&d.apply_whitten(&g).unwrap()).unwrap(), j);
}

#[test]
fn borromean_type_gap_is_index_two() {
    let r = report("6^3_2", true);
    assert_eq!(r.verdict, Some(Verdict::ProperSuperset { index: 2 }));
}

#[test]
fn four_component_dihedral() {
    let r = report("8^4_2", true);
    assert_eq!(r.verdict, Some(Verdict::Equal));
    assert_eq!(identify_group(&r.sigma_prime), GroupIdLabel::D8);
}

#[test]
fn exchange_survives_polynomials() {
    let r = report("8^3_5", false);
    assert!(r.sigma_prime.contains(&el("(1,1,1,1,(23))")));
    assert!(matches!(r.verdict, Some(Verdict::ProperSuperset { .. })));
}

#[test]
fn satellites_decide_two_links() {
    for name in ["7^2_6", "8^2_13"] {
        let without = report(name, false);
        let with = report(name, true);
        assert!(without.sigma_prime.order() > with.sigma_prime.order(), "{name}");
        assert_eq!(with.verdict, Some(Verdict::Equal), "{name}");
    }
}

#[test]
fn stages_only_shrink_and_run_is_deterministic() {
    let c = Census::embedded();
    for name in ["2^2_1", "7^2_6", "8^3_1", "8^4_3"] {
        let d = c.get(name).unwrap().diagram().unwrap();
        let a = sigma_prime(&d, &FilterOptions::with_satellites(true)).unwrap();
        assert!(a.stages.windows(2).all(|w| w[0].remaining >= w[1].remaining), "{name}");
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| sigma_prime(&d, &FilterOptions::with_satellites(true)).unwrap());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
