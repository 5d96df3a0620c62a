use whitten::census::Census;
use whitten::group::{match_named_subgroup_2, Named2, Subgroup, WhittenElement};

fn el(s: &str) -> WhittenElement {
    WhittenElement::parse(s).unwrap()
}

fn census() -> &'static Census {
    Census::embedded()
}

#[test]
fn record_counts() {
    let c = census();
    let by_mu = |m| c.records.iter().filter(|r| r.mu == m).count();
    assert_eq!((by_mu(2), by_mu(3), by_mu(4)), (31, 14, 3));
}

#[test]
fn every_record_verifies() {
    let problems = census().verify();
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn known_groups() {
    let c = census();
    let s = c.ground_truth_sigma("5^2_1").unwrap();
    assert_eq!(s.order(), 8);
    assert_eq!(match_named_subgroup_2(&s).name, Named2::Sigma8_1);
    assert_eq!(c.ground_truth_sigma("6^3_2").unwrap().order(), 48);
    assert_eq!(c.ground_truth_sigma("8^4_3").unwrap().order(), 32);
    assert!(c
        .ground_truth_sigma("8^3_3")
        .unwrap()
        .same_elements(&c.ground_truth_sigma("6^3_1").unwrap()));
    assert!(c.ground_truth_sigma("0^2_1").unwrap().same_elements(&Subgroup::full(2).unwrap()));
}

#[test]
fn partition_by_named_group() {
    let want: &[(Named2, &[&str])] = &[
        (Named2::Trivial, &[]),
        (Named2::Sigma2_1, &["7^2_5", "7^2_7", "8^2_9", "8^2_11", "8^2_14", "8^2_16"]),
        (
            Named2::Sigma4_1,
            &["4^2_1", "6^2_1", "6^2_3", "7^2_1", "7^2_2", "8^2_1", "8^2_2", "8^2_3", "8^2_4", "8^2_5", "8^2_6", "8^2_7"],
        ),
        (Named2::Sigma4_2, &["7^2_4", "7^2_6", "7^2_8", "8^2_10", "8^2_12", "8^2_13", "8^2_15"]),
        (Named2::Sigma4_3, &[]),
        (Named2::Sigma8_1, &["5^2_1", "7^2_3"]),
        (Named2::Sigma8_2, &["2^2_1", "6^2_2", "8^2_8"]),
        (Named2::Sigma8_3, &[]),
        (Named2::Gamma2, &["0^2_1"]),
    ];
    for (name, links) in want {
        let mut got: Vec<&str> = census()
            .records
            .iter()
            .filter(|r| r.mu == 2)
            .filter(|r| {
                let m = match_named_subgroup_2(&r.sigma().unwrap());
                !m.conjugate && m.name == *name
            })
            .map(|r| r.rolfsen.as_str())
            .collect();
        got.sort();
        let mut want = links.to_vec();
        want.sort();
        assert_eq!(got, want, "{name:?}");
    }
}

#[test]
fn stored_names_match_groups() {
    for r in census().records.iter().filter(|r| r.mu == 2) {
        let m = match_named_subgroup_2(&r.sigma().unwrap());
        assert_eq!(r.sigma_name.as_deref(), Some(m.name.as_str()), "{}", r.rolfsen);
    }
}

#[test]
fn pure_exchange_and_inversion() {
    let pe = [
        "2^2_1", "4^2_1", "5^2_1", "6^2_1", "6^2_2", "6^2_3", "7^2_1", "7^2_2", "7^2_3", "8^2_1", "8^2_2", "8^2_3",
        "8^2_4", "8^2_5", "8^2_6", "8^2_7", "8^2_8",
    ];
    let c = census();
    let x = el("(1,1,1,(12))");
    let prime2: Vec<_> = c.records.iter().filter(|r| r.mu == 2 && r.crossings > 0).collect();
    assert_eq!(prime2.len(), 30);
    for r in &prime2 {
        let s = r.sigma().unwrap();
        assert_eq!(s.contains(&x), pe.contains(&r.rolfsen.as_str()), "{}", r.rolfsen);
        assert!(s.contains(&el("(1,-1,-1,e)")), "{}", r.rolfsen);
    }
    let mut without: Vec<&str> = c
        .records
        .iter()
        .filter(|r| r.crossings > 0)
        .filter(|r| !r.sigma().unwrap().contains(&WhittenElement::pure_inversion(r.mu)))
        .map(|r| r.rolfsen.as_str())
        .collect();
    without.sort();
    assert_eq!(without, ["6^3_2", "8^3_5"]);
}

#[test]
fn coset_accounting() {
    let c = census();
    let cells = [
        ((2, 2), 2),
        ((4, 2), 4),
        ((5, 2), 2),
        ((6, 2), 10),
        ((6, 3), 18),
        ((7, 2), 38),
        ((7, 3), 8),
        ((8, 2), 78),
        ((8, 3), 200),
        ((8, 4), 120),
    ];
    for ((cr, mu), n) in cells {
        assert_eq!(c.count_link_types(cr, mu).unwrap(), n, "({cr},{mu})");
    }
    let four: Vec<usize> = c.cell(8, 4).map(|r| r.sigma().unwrap().coset_index()).collect();
    assert_eq!(four, [48, 48, 24]);
}

#[test]
fn reference_matrices() {
    let c = census();
    let lk = |n: &str| c.get(n).unwrap().diagram().unwrap().linking_matrix();
    assert_eq!(lk("7^3_1").rows(), [vec![0, -1, -1], vec![-1, 0, 1], vec![-1, 1, 0]]);
    assert_eq!(lk("8^3_5").rows(), [vec![0, 0, 0], vec![0, 0, -1], vec![0, -1, 0]]);
    assert_eq!(lk("2^2_1").get(0, 1).abs(), 1);
}

#[test]
fn env_override() {
    let dir = std::env::temp_dir().join(format!("whitten-census-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let mut small = census().clone();
    small.records.truncate(3);
    std::fs::write(&path, serde_json::to_string(&small).unwrap()).unwrap();
    let loaded = whitten::census::load_census(&path).unwrap();
    assert_eq!(loaded.len(), 3);
    std::fs::write(&path, "{\"schema_version\": 2, \"records\": []}").unwrap();
    assert!(whitten::census::load_census(&path).is_err());
    std::fs::remove_dir_all(&dir).ok();
}
