mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use whtors::abgroup::{cohomology_c2, homology_c2, tate_homology_c2};
use whtors::falg::{ConstraintSystem, FAlgElement, FAlgGroup, MooreComplex, TorsionFunctor};
use whtors::group_ring::{mod_inverse, special_unit_c5, special_unit_c7};
use whtors::kapp::{localize, localize_away, tor_pi_r};
use whtors::lens::{homotopy_auto_image, inertia_set, reidemeister_torsion, rt_equivalent, LensSpace};
use whtors::matrix::smith_normal_form;
use whtors::simplicial::{all_faces, enumerate_contractible_subcomplexes, Face, SubComplex};
use whtors::{
    FgAbGroup, GroupRingElement, IntMatrix, InvolutiveAbelianGroup, OrientationCharacter, ReportDocument, Stage,
    WhiteheadClass,
};

fn element(n: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec(-6i64..=6, n).prop_map(move |c| GroupRingElement::from_i64(n, &c).unwrap())
}

fn sized_element() -> impl Strategy<Value = GroupRingElement> {
    (2usize..=12).prop_flat_map(element)
}

fn characters(n: usize) -> Vec<OrientationCharacter> {
    [1i8, -1].iter().filter_map(|&s| OrientationCharacter::new(s, n).ok()).collect()
}

/// Products of powers of a known unit, its Galois conjugates and a trivial unit.
fn unit(n: usize) -> impl Strategy<Value = WhiteheadClass> {
    let base = match n {
        5 => special_unit_c5(),
        _ => special_unit_c7(),
    };
    (prop::collection::vec(-2i32..=2, 3), any::<bool>(), 0..n as i64).prop_map(move |(es, neg, k)| {
        let b = WhiteheadClass::new(base.clone()).unwrap();
        let mut acc = WhiteheadClass::new(GroupRingElement::trivial_unit(n, neg, k)).unwrap();
        for (j, e) in es.into_iter().enumerate() {
            let f = b.galois_twist(j as i64 + 1).unwrap();
            let f = if e < 0 { f.inverse() } else { f };
            for _ in 0..e.abs() {
                acc = acc.compose(&f).unwrap();
            }
        }
        acc
    })
}

fn module() -> impl Strategy<Value = InvolutiveAbelianGroup> {
    let cyclic = (0u64..=12, prop_oneof![Just(1i8), Just(-1i8)]).prop_map(|(m, s)| InvolutiveAbelianGroup::cyclic(m, s));
    let swap = (1usize..=2).prop_map(|r| {
        let mut m = InvolutiveAbelianGroup::zero();
        for _ in 0..r {
            let s = InvolutiveAbelianGroup::new(
                2,
                IntMatrix::zeros(2, 0),
                IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]),
            )
            .unwrap();
            m = m.direct_sum(&s);
        }
        m
    });
    let summand = prop_oneof![3 => cyclic, 1 => swap];
    prop::collection::vec(summand, 1..=3).prop_map(|parts| {
        parts
            .iter()
            .fold(InvolutiveAbelianGroup::zero(), |acc, m| acc.direct_sum(m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_is_an_involution(x in sized_element()) {
        for w in characters(x.order()) {
            prop_assert_eq!(x.involution(w).involution(w), x.clone());
        }
    }

    #[test]
    fn involution_is_multiplicative(n in 2usize..=12, seed in any::<u64>()) {
        let mut r = seed;
        let mut next = || { r = r.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((r >> 33) % 13) as i64 - 6 };
        let x = GroupRingElement::from_i64(n, &(0..n).map(|_| next()).collect::<Vec<_>>()).unwrap();
        let y = GroupRingElement::from_i64(n, &(0..n).map(|_| next()).collect::<Vec<_>>()).unwrap();
        for w in characters(n) {
            prop_assert_eq!((&x * &y).involution(w), &y.involution(w) * &x.involution(w));
        }
    }

    #[test]
    fn galois_twists_compose(x in sized_element(), i in 1i64..40, j in 1i64..40) {
        let n = x.order() as i64;
        prop_assume!(i.gcd(&n) == 1 && j.gcd(&n) == 1);
        prop_assert_eq!(x.galois_twist(i).unwrap().galois_twist(j).unwrap(), x.galois_twist(i * j % n).unwrap());
    }

    #[test]
    fn invertibility_matches_the_determinant(x in sized_element()) {
        let d = common::det_rational(&x.circulant().to_rows());
        prop_assert_eq!(x.invert_unit().is_ok(), d.abs().is_one());
    }

    #[test]
    fn units_have_unit_augmentation(u in unit(7)) {
        prop_assert!(u.representative().augmentation().abs().is_one());
        prop_assert!(x_times_inverse_is_one(&u));
    }

    #[test]
    fn class_equality_is_an_equivalence(a in unit(5), b in unit(5), c in unit(5)) {
        prop_assert!(a.class_equal(&a).unwrap());
        prop_assert_eq!(a.class_equal(&b).unwrap(), b.class_equal(&a).unwrap());
        if a.class_equal(&b).unwrap() && b.class_equal(&c).unwrap() {
            prop_assert!(a.class_equal(&c).unwrap());
        }
        let shifted = WhiteheadClass::new(&GroupRingElement::trivial_unit(5, true, 2) * a.representative()).unwrap();
        prop_assert!(a.class_equal(&shifted).unwrap());
    }

    #[test]
    fn smith_form_is_exact(rows in 1usize..=8, cols in 1usize..=8, seed in prop::collection::vec(-50i64..=50, 64)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 8..i * 8 + cols].to_vec()).collect();
        let m = IntMatrix::from_rows_i64(&data);
        let s = smith_normal_form(&m);
        let prod = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..rows {
            for j in 0..cols {
                let expect = if i == j && i < s.diag.len() { s.diag[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&prod[(i, j)], &expect);
            }
        }
        prop_assert!(s.left.determinant().unwrap().abs().is_one());
        prop_assert!(s.right.determinant().unwrap().abs().is_one());
        let nz: Vec<&BigInt> = s.diag.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            prop_assert!(w[1].is_multiple_of(w[0]));
        }
        prop_assert!(s.diag.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn homology_is_two_periodic(a in module(), n in 1usize..=3) {
        prop_assert_eq!(homology_c2(&a, n), homology_c2(&a, n + 2));
    }

    #[test]
    fn positive_homology_has_exponent_two(a in module(), n in 1usize..=4) {
        prop_assert!(homology_c2(&a, n).has_exponent_dividing(&BigInt::from(2)));
    }

    #[test]
    fn tate_splices_homology_and_cohomology(a in module(), n in 1i64..=4) {
        prop_assert_eq!(tate_homology_c2(&a, n), homology_c2(&a, n as usize));
        prop_assert_eq!(tate_homology_c2(&a, -n - 1), cohomology_c2(&a, n as usize));
    }

    #[test]
    fn union_and_intersection_stay_closed(
        a in prop::collection::vec(1u8..16, 1..4),
        b in prop::collection::vec(1u8..16, 1..4),
    ) {
        let gen = |v: &[u8]| {
            let faces: Vec<Face> = v.iter().map(|&m| Face::from_vertices(&(0..4).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>()).unwrap()).collect();
            SubComplex::generated_by(3, &faces).unwrap()
        };
        let (k, l) = (gen(&a), gen(&b));
        let u = k.union(&l).unwrap();
        prop_assert!(SubComplex::from_faces(3, &u.faces()).is_ok());
        if let Ok(i) = k.intersection(&l) {
            prop_assert!(SubComplex::from_faces(3, &i.faces()).is_ok());
            prop_assert!(i.is_subcomplex_of(&k).unwrap() && i.is_subcomplex_of(&l).unwrap());
        }
    }

    #[test]
    fn collapsibility_matches_homology_on_five_vertices(v in prop::collection::vec(1u8..32, 1..6)) {
        let faces: Vec<Face> = v.iter().map(|&m| Face::from_vertices(&(0..5).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>()).unwrap()).collect();
        let k = SubComplex::generated_by(4, &faces).unwrap();
        prop_assert_eq!(k.is_contractible(), common::contractible_by_homology(&k), "K = {}", k);
    }

    #[test]
    fn rt_torsion_ignores_weight_order(mut w in prop::collection::vec(1i64..7, 1..6), rot in 0usize..6) {
        let l = LensSpace::new(7, w.clone()).unwrap();
        let r = rot % w.len();
        w.rotate_left(r);
        w.reverse();
        prop_assert_eq!(reidemeister_torsion(&l), reidemeister_torsion(&LensSpace::new(7, w).unwrap()));
    }

    #[test]
    fn rt_equivalence_is_an_equivalence(a in 0usize..4, b in 0usize..4, c in 0usize..4, k in 0i64..7) {
        let sample = [vec![1, 1], vec![1, 2], vec![2, 4], vec![3, 6]];
        let t = |i: usize| reidemeister_torsion(&LensSpace::new(7, sample[i].clone()).unwrap());
        let (x, y, z) = (t(a), t(b), t(c));
        prop_assert!(rt_equivalent(&x, &x).unwrap());
        prop_assert_eq!(rt_equivalent(&x, &y).unwrap(), rt_equivalent(&y, &x).unwrap());
        if rt_equivalent(&x, &y).unwrap() && rt_equivalent(&y, &z).unwrap() {
            prop_assert!(rt_equivalent(&x, &z).unwrap());
        }
        let shifted = whtors::RTorsion { value: -&(&whtors::CyclotomicElement::zeta_power(7, k) * &x.value) };
        prop_assert!(rt_equivalent(&shifted, &x).unwrap());
    }

    #[test]
    fn inertia_is_invariant_under_trivial_units(neg in any::<bool>(), k in 0i64..7, j in 1i64..7) {
        let l = LensSpace::balanced(7, 1).unwrap();
        let u = special_unit_c7();
        let shifted = &GroupRingElement::trivial_unit(7, neg, k) * &u;
        prop_assert_eq!(inertia_set(&l, &shifted).unwrap().cardinality(), 3);
        prop_assert_eq!(inertia_set(&l, &u.galois_twist(j).unwrap()).unwrap().cardinality(), 3);
    }

    #[test]
    fn localization_splits_finite_groups(orders in prop::collection::vec(1i64..200, 1..4), l in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)]) {
        let g = FgAbGroup::from_i64(&orders);
        let a = localize(&g, l).unwrap();
        let b = localize_away(&g, l).unwrap();
        prop_assert_eq!(a.direct_sum(&b), g);
    }
}

fn x_times_inverse_is_one(u: &WhiteheadClass) -> bool {
    (u.representative() * u.inverse_representative()).is_one()
}

#[test]
fn homology_matches_closed_forms_for_cyclic_groups() {
    for m in 1u64..=12 {
        let two = m.gcd(&2);
        for sign in [1i8, -1] {
            let a = InvolutiveAbelianGroup::cyclic(m, sign);
            let h0 = if sign == 1 { m } else { two };
            assert_eq!(homology_c2(&a, 0), FgAbGroup::cyclic(h0), "m = {m}, sign = {sign}");
            for n in 1..=4 {
                assert_eq!(homology_c2(&a, n), FgAbGroup::cyclic(two), "m = {m}, sign = {sign}, n = {n}");
            }
        }
    }
}

#[test]
fn homotopy_image_contains_plus_and_minus_one() {
    for k in 1..=3 {
        let img = homotopy_auto_image(&LensSpace::balanced(7, k).unwrap());
        assert!(img.contains(1) && img.contains(6));
    }
}

#[test]
fn tor_is_two_periodic() {
    for p in [3u64, 5, 7, 11] {
        for i in 1..=4 {
            assert_eq!(tor_pi_r(p, i).unwrap(), tor_pi_r(p, i + 2).unwrap());
        }
    }
}

#[test]
fn contractible_complexes_have_euler_characteristic_one() {
    for p in 0..=3 {
        for k in enumerate_contractible_subcomplexes(p).unwrap() {
            assert_eq!(k.euler_characteristic(), 1, "K = {k}");
        }
    }
}

#[test]
fn codegeneracies_send_faces_to_faces() {
    for p in 1..=3 {
        for k in enumerate_contractible_subcomplexes(p).unwrap() {
            for j in 0..p {
                let img = k.codegeneracy_image(j).unwrap();
                if k.is_face() {
                    assert!(img.is_face(), "s^{j} of {k} is {img}");
                }
            }
        }
    }
}

/// Every element of `D_p(A)`: face data satisfying all face-horn dualities.
fn dual_functors(a: &InvolutiveAbelianGroup, p: usize) -> Vec<TorsionFunctor> {
    let mut sys = ConstraintSystem::new(p, a).unwrap();
    sys.add_all_dualities(true).unwrap();
    sys.solve().unwrap().elements().unwrap()
}

#[test]
fn torsion_is_functorial_on_chains() {
    let a: InvolutiveAbelianGroup = "z3-sign".parse().unwrap();
    for p in 1..=2 {
        let ks = enumerate_contractible_subcomplexes(p).unwrap();
        for tf in dual_functors(&a, p).iter().take(12) {
            let mut ev = tf.evaluator();
            let ctx = whtors::falg::ModuleCtx::new(tf.target());
            for k in &ks {
                for m in ks.iter().filter(|m| k.is_subcomplex_of(m).unwrap()) {
                    for l in ks.iter().filter(|l| m.is_subcomplex_of(l).unwrap()) {
                        let lhs = ev.tau(l, k).unwrap();
                        let lm = ev.tau(l, m).unwrap();
                        let mk = ev.tau(m, k).unwrap();
                        let rhs: Vec<BigInt> = lm.iter().zip(&mk).map(|(x, y)| x + y).collect();
                        assert!(ctx.eq(&lhs, &rhs));
                    }
                }
            }
        }
    }
}

#[test]
fn faces_and_subcomplexes_determine_each_other() {
    let a = InvolutiveAbelianGroup::cyclic(2, 1);
    for p in 0..=2usize {
        let faces: Vec<Face> = all_faces(p).filter(|f| *f != Face::top(p)).collect();
        for bits in 0u32..(1 << faces.len()) {
            let map = faces
                .iter()
                .enumerate()
                .map(|(i, f)| (*f, vec![BigInt::from((bits >> i) & 1)]))
                .collect();
            let tf = TorsionFunctor::new(p, &a, &map).unwrap();
            let raw = tf.to_raw().unwrap();
            assert!(raw.check_square().unwrap());
            let back = raw.restrict_to_faces().unwrap();
            assert_eq!(back, tf);
            assert_eq!(back.to_raw().unwrap(), raw);
        }
    }
}

#[test]
fn generalized_duality_holds_on_dual_functors() {
    for a in ["z2-trivial", "z3-sign", "z4-trivial"] {
        let a: InvolutiveAbelianGroup = a.parse().unwrap();
        for p in 1..=2 {
            for tf in dual_functors(&a, p) {
                let mut ev = tf.evaluator();
                for sigma in all_faces(p).filter(|f| f.dim() >= 1) {
                    let s = sigma.dim();
                    for mask in 1u32..(1 << (s + 1)) - 1 {
                        let idx: Vec<usize> = (0..=s).filter(|i| mask & (1 << i) != 0).collect();
                        assert!(ev.generalized_duality(sigma, &idx).unwrap(), "σ = {sigma}, I = {idx:?}");
                    }
                }
            }
        }
    }
}

fn same(x: &FAlgElement, y: &FAlgElement) -> bool {
    x.same_element(y)
}

#[test]
fn simplicial_identities() {
    for a in ["z2xz2-sign", "z4-sign", "z3-trivial"] {
        let a: InvolutiveAbelianGroup = a.parse().unwrap();
        for p in 0..=2usize {
            let g = FAlgGroup::new(&a, p).unwrap();
            let elems = g.elements().unwrap();
            let step = (elems.len() / 24).max(1);
            for x in elems.iter().step_by(step) {
                for j in 0..=p {
                    let s = x.degeneracy(j).unwrap();
                    assert!(FAlgElement::new(s.functor().clone()).is_ok(), "s_{j} leaves F^alg");
                    // δⱼsⱼ = δⱼ₊₁sⱼ = id
                    assert!(same(&s.face(j).unwrap(), x) && same(&s.face(j + 1).unwrap(), x));
                    for i in 0..=p + 1 {
                        if i < j {
                            if p >= 1 {
                                let lhs = s.face(i).unwrap();
                                let rhs = x.face(i).unwrap().degeneracy(j - 1).unwrap();
                                assert!(same(&lhs, &rhs), "δ{i}s{j}");
                            }
                        } else if i > j + 1 {
                            let lhs = s.face(i).unwrap();
                            let rhs = x.face(i - 1).unwrap().degeneracy(j).unwrap();
                            assert!(same(&lhs, &rhs), "δ{i}s{j}");
                        }
                    }
                    for i in 0..=j {
                        let lhs = s.degeneracy(i).unwrap();
                        let rhs = x.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
                        assert!(same(&lhs, &rhs), "s{i}s{j}");
                    }
                }
                if p >= 2 {
                    for j in 1..=p {
                        for i in 0..j {
                            let lhs = x.face(j).unwrap().face(i).unwrap();
                            let rhs = x.face(i).unwrap().face(j - 1).unwrap();
                            assert!(same(&lhs, &rhs), "δ{i}δ{j}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn moore_differential_squares_to_zero() {
    for a in ["z2xz2-trivial", "z4-sign", "z3-trivial", "z-sign"] {
        let a: InvolutiveAbelianGroup = a.parse().unwrap();
        let m = MooreComplex::new(&a, 2).unwrap();
        for n in 0..=1 {
            assert!(m.differential_squares_to_zero(n).unwrap());
        }
    }
}

#[test]
fn report_emission_is_deterministic() {
    let a = whtors::lens::theorem_a_report(1).unwrap().to_json();
    let b = whtors::lens::theorem_a_report(1).unwrap().to_json();
    assert_eq!(a, b);
    let parsed = ReportDocument::from_json(&a).unwrap();
    assert_eq!(parsed.to_json(), a);
    let mut bad = parsed.clone();
    bad.push(Stage::check("x", false, serde_json::Value::Null));
    assert_ne!(bad.exit_code(), 0);
    assert_eq!(mod_inverse(3, 7), Some(5));
}
