use std::collections::BTreeSet;

use proptest::prelude::*;
use whitten::group::{compose, enumerate_gamma, gamma_order, WhittenElement};
use whitten::linkmat::{
    act_matrix, f3, f4, g0, stabilizer_bruteforce, stabilizer_structured_3, stabilizer_structured_4, LinkingMatrix,
    Quad4, QuadType, Triple, TripleForm,
};

fn element(mu: usize) -> impl Strategy<Value = WhittenElement> {
    (0..gamma_order(mu)).prop_map(move |i| WhittenElement::from_index(mu, i))
}

fn matrix(mu: usize) -> impl Strategy<Value = LinkingMatrix> {
    prop::collection::vec(-5i64..=5, mu * (mu - 1) / 2).prop_map(move |u| LinkingMatrix::from_upper(mu, &u).unwrap())
}

fn el(s: &str) -> WhittenElement {
    WhittenElement::parse(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn action_on_matrices_is_a_group_action(a in element(3), b in element(3), m in matrix(3)) {
        let ab = compose(&a, &b).unwrap();
        let seq = act_matrix(&a, &act_matrix(&b, &m).unwrap()).unwrap();
        prop_assert_eq!(act_matrix(&ab, &m).unwrap(), seq);
    }

    #[test]
    fn action_in_four_components(a in element(4), b in element(4), m in matrix(4)) {
        let ab = compose(&a, &b).unwrap();
        let seq = act_matrix(&a, &act_matrix(&b, &m).unwrap()).unwrap();
        prop_assert_eq!(act_matrix(&ab, &m).unwrap(), seq);
    }

    #[test]
    fn stabilizers_fix_their_matrix(m in matrix(3)) {
        let st = stabilizer_bruteforce(&m).unwrap();
        prop_assert!(st.audit());
        for g in st.elements() {
            prop_assert_eq!(&act_matrix(g, &m).unwrap(), &m);
        }
    }
}

#[test]
fn structured_triples_equal_bruteforce() {
    for a in -3..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                let m = Triple::new(a, b, c).to_matrix();
                let s = stabilizer_structured_3(&m).unwrap();
                let t = stabilizer_bruteforce(&m).unwrap();
                assert!(s.same_elements(&t), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn representative_orders() {
    let orders: Vec<usize> = TripleForm::ALL
        .iter()
        .map(|f| stabilizer_bruteforce(&f.representative().to_matrix()).unwrap().order())
        .collect();
    assert_eq!(orders, [96, 16, 8, 8, 4, 12, 12, 4, 4, 2]);
    for f in TripleForm::ALL {
        assert_eq!(f.gamma_stabilizer_order(), stabilizer_bruteforce(&f.representative().to_matrix()).unwrap().order());
    }
}

#[test]
fn f3_is_a_surjective_homomorphism() {
    let all = enumerate_gamma(3).unwrap();
    for a in &all {
        for b in &all {
            let lhs = f3(&compose(a, b).unwrap()).unwrap();
            assert_eq!(lhs, f3(a).unwrap().compose(&f3(b).unwrap()), "{a} {b}");
        }
    }
    let image: BTreeSet<String> = all.iter().map(|g| f3(g).unwrap().to_string()).collect();
    assert_eq!(image.len(), 48);
    let kernel: Vec<String> = all
        .iter()
        .filter(|g| f3(g).unwrap() == whitten::linkmat::ImageElement3::identity())
        .map(|g| g.to_string())
        .collect();
    assert_eq!(kernel, ["(1,1,1,1,e)", "(1,-1,-1,-1,e)"]);
}

#[test]
fn f4_is_a_surjective_homomorphism() {
    let g0 = g0();
    let dom: Vec<WhittenElement> = enumerate_gamma(4).unwrap().into_iter().filter(|g| g0.contains(g.perm())).collect();
    assert_eq!(dom.len(), 256);
    for a in &dom {
        for b in &dom {
            let lhs = f4(&compose(a, b).unwrap()).unwrap();
            assert_eq!(lhs, f4(a).unwrap().compose(&f4(b).unwrap()), "{a} {b}");
        }
    }
    // the sign product of an image is always 1
    let image: BTreeSet<String> = dom.iter().map(|g| f4(g).unwrap().to_string()).collect();
    assert_eq!(image.len(), 64);
    assert!(dom.iter().all(|g| f4(g).unwrap().delta.iter().product::<i8>() == 1));
    let id = f4(&WhittenElement::identity(4)).unwrap();
    let kernel: BTreeSet<WhittenElement> = dom.iter().filter(|g| f4(g).unwrap() == id).cloned().collect();
    let want: BTreeSet<WhittenElement> = ["(1,1,1,1,1,e)", "(1,-1,-1,-1,-1,e)", "(-1,-1,1,1,-1,e)", "(-1,1,-1,-1,1,e)"]
        .iter()
        .map(|s| el(s))
        .collect();
    assert_eq!(kernel, want);
}

#[test]
fn quad_types() {
    for (q, ty) in [
        (Quad4::new(1, 1, 1, 1), QuadType::AAAA),
        (Quad4::new(1, 1, -1, 1), QuadType::AAMinusAA),
        (Quad4::new(1, -1, -1, 1), QuadType::AMinusAMinusAA),
    ] {
        assert_eq!(QuadType::detect(q), Some(ty));
        let m = q.to_matrix();
        let s = stabilizer_structured_4(&m).unwrap();
        let t = stabilizer_bruteforce(&m).unwrap();
        assert_eq!(s.order(), 32);
        assert!(s.same_elements(&t), "{q:?}");
        assert!(t.elements().iter().all(|g| !swaps_13_alone(g)));
    }
}

fn swaps_13_alone(g: &WhittenElement) -> bool {
    let p = g.perm();
    p.apply(0) == 2 && p.apply(2) == 0 && !(p.apply(1) == 3 && p.apply(3) == 1)
}

#[test]
fn no_one_three_exchange_alone() {
    let vals = [-2i64, -1, 1, 2];
    for a in vals {
        for b in vals {
            for c in vals {
                for d in vals {
                    let st = stabilizer_bruteforce(&Quad4::new(a, b, c, d).to_matrix()).unwrap();
                    assert!(st.elements().iter().all(|g| !swaps_13_alone(g)), "({a},{b},{c},{d})");
                }
            }
        }
    }
}
