use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whitten::census::Census;
use whitten::diagram::LinkDiagram;
use whitten::group::WhittenElement;
use whitten::invariants::{
    component_fingerprint, contraction, homflypt, jones, profile, state_sum, LaurentPoly, LaurentPoly2,
};

fn diagram(name: &str) -> LinkDiagram {
    Census::embedded().get(name).unwrap().diagram().unwrap()
}

fn census_diagrams() -> Vec<(String, LinkDiagram)> {
    Census::embedded()
        .records
        .iter()
        .map(|r| (r.rolfsen.clone(), r.diagram().unwrap()))
        .collect()
}

fn t_poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, 't').unwrap()
}

/// `t^{1/2} - t^{-1/2}`
fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

#[test]
fn jones_displays() {
    let cases = [
        (
            "7^2_7",
            "(-1,-1,1,e)",
            "t^{-15/2} - t^{-13/2} - t^{-9/2} - t^{-5/2}",
            "-t^{-7/2} - t^{-3/2} - t^{1/2} + t^{3/2}",
        ),
        (
            "8^2_11",
            "(-1,-1,1,e)",
            "-t^{9/2} + 3t^{7/2} - t^{-7/2} - 4t^{5/2} + t^{-5/2} + 5t^{3/2} - 4t^{-3/2} - 5t^{1/2} + 4t^{-1/2}",
            "-4t^{-9/2} + t^{-7/2} - t^{-5/2} - t^{-21/2} + 3t^{-19/2} - 4t^{-17/2} + 5t^{-15/2} - 5t^{-13/2} + 4t^{-11/2}",
        ),
        (
            "8^2_16",
            "(-1,-1,1,e)",
            "2t^{-9/2} - 2t^{-7/2} + 2t^{-5/2} - 2t^{-3/2} - 2t^{-11/2} - t^{1/2} + t^{-1/2}",
            "-2t^{-9/2} + 2t^{-7/2} - 2t^{-5/2} + 2t^{-3/2} - t^{-13/2} + t^{-11/2} - 2t^{-1/2}",
        ),
        (
            "7^2_8",
            "(-1,1,1,e)",
            "-t^{-9/2} + t^{-7/2} - 2t^{-5/2} + t^{-3/2} + t^{-11/2} - 2t^{-1/2}",
            "-t^{9/2} + t^{7/2} - 2t^{5/2} + t^{3/2} + t^{11/2} - 2t^{1/2}",
        ),
        (
            "8^2_10",
            "(-1,1,1,e)",
            "-t^{9/2} + 3t^{7/2} - t^{-7/2} - 5t^{5/2} + 2t^{-5/2} + 5t^{3/2} - 4t^{-3/2} - 6t^{1/2} + 5t^{-1/2}",
            "-t^{-9/2} - t^{7/2} + 3t^{-7/2} + 2t^{5/2} - 5t^{-5/2} - 4t^{3/2} + 5t^{-3/2} + 5t^{1/2} - 6t^{-1/2}",
        ),
        (
            "8^2_15",
            "(-1,1,1,e)",
            "-t^{-7/2} - t^{5/2} + t^{-5/2} + t^{3/2} - t^{-3/2} - 2t^{1/2} + t^{-1/2}",
            "-t^{7/2} + t^{5/2} - t^{3/2} + t^{1/2} - 2t^{-1/2} + t^{-3/2} - t^{-5/2}",
        ),
    ];
    for (name, g, base, image) in cases {
        let d = diagram(name);
        let g = WhittenElement::parse(g).unwrap();
        assert_eq!(jones(&d).unwrap(), t_poly(base), "{name}");
        assert_eq!(jones(&d.apply_whitten(&g).unwrap()).unwrap(), t_poly(image), "{name} image");
    }
}

#[test]
fn homflypt_displays() {
    let d = diagram("8^3_4");
    let base = LaurentPoly2::parse(
        "-z^6 + a^2z^4 - 5z^4 + a^-2z^4 + 3a^2z^2 - 10z^2 + 3a^-2z^2 + 4a^2 - 8 + 4a^-2 + a^2z^-2 - 2z^-2 + a^-2z^-2",
    )
    .unwrap();
    let image =
        LaurentPoly2::parse("a^4 + a^-4 - 2a^2z^2 + a^2z^-2 - 2a^-2z^2 + a^-2z^-2 + z^4 - 2z^-2 - 2").unwrap();
    let g = WhittenElement::parse("(-1,1,1,-1,e)").unwrap();
    assert_eq!(homflypt(&d).unwrap(), base);
    assert_eq!(homflypt(&d.apply_whitten(&g).unwrap()).unwrap(), image);
}

#[test]
fn stored_polynomials_reproduce() {
    for r in &Census::embedded().records {
        let d = r.diagram().unwrap();
        assert_eq!(jones(&d).unwrap(), t_poly(&r.jones), "{}", r.rolfsen);
        assert_eq!(homflypt(&d).unwrap(), LaurentPoly2::parse(&r.homflypt).unwrap(), "{}", r.rolfsen);
    }
}

#[test]
fn mirror_inverts_jones() {
    for (name, d) in census_diagrams() {
        assert_eq!(jones(&d.mirror()).unwrap(), jones(&d).unwrap().invert_variable(), "{name}");
        assert_eq!(homflypt(&d.mirror()).unwrap(), homflypt(&d).unwrap().mirror(), "{name}");
    }
}

#[test]
fn homflypt_specializes_to_jones() {
    for (name, d) in census_diagrams() {
        let h = homflypt(&d).unwrap();
        assert_eq!(h.specialize(-2, &delta()), Some(jones(&d).unwrap()), "{name}");
    }
}

fn small_diagrams(n: usize, seed: u64) -> Vec<LinkDiagram> {
    let all = census_diagrams();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let mut d = all[rng.gen_range(0..all.len())].1.clone();
        if d.crossing_count() == 0 {
            continue;
        }
        for _ in 0..rng.gen_range(0..3) {
            let e = rng.gen_range(0..d.edge_count());
            d = d.insert_kink(e, rng.gen_range(0..4));
        }
        if d.crossing_count() <= 12 {
            out.push(d);
        }
    }
    out
}

#[test]
fn contraction_agrees_with_state_sum() {
    for d in small_diagrams(10, 7) {
        assert_eq!(contraction(&d).unwrap(), state_sum(&d).unwrap(), "{}", d.crossing_count());
    }
    let cables: Vec<(String, LinkDiagram)> = census_diagrams()
        .into_iter()
        .map(|(n, d)| (n, d.cable2(0, true).unwrap()))
        .filter(|(_, c)| (14..=18).contains(&c.crossing_count()))
        .take(3)
        .collect();
    assert_eq!(cables.len(), 3);
    for (name, c) in cables {
        assert_eq!(contraction(&c).unwrap(), state_sum(&c).unwrap(), "{name}");
    }
}

#[test]
fn skein_relation_at_every_crossing() {
    // t^{-1} V(L+) - t V(L-) = (t^{1/2} - t^{-1/2}) V(L0)
    for d in small_diagrams(10, 11) {
        for x in 0..d.crossing_count() {
            let here = jones(&d).unwrap();
            let there = jones(&d.switch_crossing(x)).unwrap();
            let (plus, minus) = if d.crossings()[x].sign > 0 { (here, there) } else { (there, here) };
            let zero = jones(&d.smooth_crossing(x).unwrap()).unwrap();
            let lhs = &plus.shift(-2) - &minus.shift(2);
            assert_eq!(lhs, &delta() * &zero, "crossing {x}");
        }
    }
}

#[test]
fn fingerprints_ignore_reversal() {
    for (name, d) in census_diagrams() {
        for i in 0..d.mu() {
            let r = d.reverse(&[i]);
            assert_eq!(component_fingerprint(&r, i).unwrap(), component_fingerprint(&d, i).unwrap(), "{name}");
        }
    }
}

#[test]
fn profile_survives_reduction() {
    for (name, d) in census_diagrams() {
        let k = d.insert_kink(0, 1);
        let p = profile(&d).unwrap();
        assert_eq!(profile(&k.simplify()).unwrap(), p, "{name}");
    }
}

fn census_index() -> impl Strategy<Value = usize> {
    0..Census::embedded().records.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reidemeister_moves_keep_polynomials(
        k in census_index(),
        moves in prop::collection::vec((any::<bool>(), 0usize..64, 0usize..64, 0u8..4, any::<bool>()), 1..4),
    ) {
        let d0 = Census::embedded().records[k].diagram().unwrap();
        let mut d = d0.clone();
        for (kink, a, b, kind, over) in moves {
            let n = d.edge_count();
            if n == 0 {
                d = d.insert_kink(0, kind);
                continue;
            }
            if kink {
                d = d.insert_kink(a % n, kind);
            } else if let Some(e) = d.insert_r2(a % n, b % n, over) {
                d = e;
            }
        }
        prop_assert_eq!(jones(&d).unwrap(), jones(&d0).unwrap());
        prop_assert_eq!(homflypt(&d).unwrap(), homflypt(&d0).unwrap());
        prop_assert_eq!(jones(&d.simplify()).unwrap(), jones(&d0).unwrap());
    }
}
