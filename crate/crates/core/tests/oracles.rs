//! Values checked against independent computations, then frozen.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use whtors::abgroup::{homology_c2, homology_c2_subquotient};
use whtors::cyclotomic::{cyclotomic_project, CyclotomicElement};
use whtors::falg::Extender;
use whtors::group_ring::{special_unit_c5, special_unit_c7};
use whtors::kapp::{localize, localize_away, tor_pi_r};
use whtors::lens::{reidemeister_torsion, rt_equivalent, LensSpace, RTorsion};
use whtors::matrix::cokernel;
use whtors::simplicial::{all_faces, enumerate_contractible_subcomplexes, Face, SubComplex};
use whtors::torsion::{basepoint_change_torsion, double, HCobordismSymbol, ModuleValues, ValueGroup, WhValues};
use whtors::{FgAbGroup, GroupRingElement, InvolutiveAbelianGroup, IntMatrix, WhiteheadClass};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Coefficient of `f(ξ)` in `ι_!τ(Δᵖ, K)` is `Σ_{ρ ∈ K, ρ ⊇ ξ} (−1)^{|ρ|−|ξ|}`.
fn mobius_form(k: &SubComplex) -> Vec<i64> {
    let p = k.ambient();
    let mut out = vec![0; 1 << (p + 1)];
    let faces = k.faces();
    for xi in &faces {
        out[xi.mask() as usize] = faces
            .iter()
            .filter(|rho| rho.contains(*xi))
            .map(|rho| if (rho.dim() - xi.dim()) % 2 == 0 { 1 } else { -1 })
            .sum();
    }
    out
}

#[test]
fn extension_matches_mobius_inversion() {
    for p in 0..=3 {
        let mut ext = Extender::new(p);
        for k in enumerate_contractible_subcomplexes(p).unwrap() {
            assert_eq!(ext.form(&k).unwrap(), mobius_form(&k), "K = {k}");
        }
    }
}

#[test]
fn extension_of_a_cone_over_a_triangle_boundary() {
    // ⟨012⟩ ∪ ⟨023⟩ ∪ ⟨013⟩: a disk, with the interior edges counted negatively.
    let faces: Vec<Face> = ["012", "023", "013"].iter().map(|s| Face::parse(s).unwrap()).collect();
    let k = SubComplex::generated_by(3, &faces).unwrap();
    let f = Extender::new(3).form(&k).unwrap();
    let m = |s: &str| Face::parse(s).unwrap().mask() as usize;
    let nonzero: Vec<(String, i64)> = all_faces(3)
        .filter(|x| f[x.mask() as usize] != 0)
        .map(|x| (x.to_string(), f[x.mask() as usize]))
        .collect();
    assert_eq!(
        nonzero,
        vec![
            ("0".to_string(), 1),
            ("01".to_string(), -1),
            ("02".to_string(), -1),
            ("012".to_string(), 1),
            ("03".to_string(), -1),
            ("013".to_string(), 1),
            ("023".to_string(), 1),
        ]
    );
    assert_eq!(f[m("123")], 0);
}

fn cyclotomic_poly(p: usize) -> Vec<BigInt> {
    vec![BigInt::one(); p]
}

fn integral(x: &CyclotomicElement) -> Vec<BigInt> {
    x.coeffs().iter().map(|c| c.to_integer()).collect()
}

#[test]
fn norm_is_the_resultant_with_the_cyclotomic_polynomial() {
    let samples: [&[i64]; 5] = [&[1, 1], &[0, 1, 1], &[3, -1, 0, 2], &[2, 0, 0, 0, -5], &[-1, 4, 1, 1, 0, 7]];
    for p in [3usize, 5, 7] {
        for s in samples {
            let mut c = big(s);
            c.resize(p - 1, BigInt::zero());
            c.truncate(p - 1);
            let x = CyclotomicElement::new(p, c.iter().map(|v| BigRational::from_integer(v.clone())).collect()).unwrap();
            let mut g = integral(&x);
            while g.len() > 1 && g.last().unwrap().is_zero() {
                g.pop();
            }
            let expect = if g.len() == 1 {
                num_traits::pow(g[0].clone(), p - 1)
            } else {
                common::resultant(&cyclotomic_poly(p), &g)
            };
            assert_eq!(x.norm(), BigRational::from_integer(expect), "p = {p}, x = {x}");
        }
    }
}

#[test]
fn frozen_norms() {
    for p in [3usize, 5, 7, 11] {
        let z1 = &CyclotomicElement::zeta_power(p, 1) - &CyclotomicElement::one(p);
        assert_eq!(z1.norm(), BigRational::from_integer(BigInt::from(p)));
    }
    let u = cyclotomic_project(&special_unit_c7(), 7).unwrap();
    assert_eq!(u.norm(), BigRational::one());
    let v = cyclotomic_project(&special_unit_c5(), 5).unwrap();
    assert_eq!(v.norm(), BigRational::one());
}

#[test]
fn circulant_determinant_of_the_units() {
    for u in [special_unit_c7(), special_unit_c5()] {
        let c = u.circulant();
        let rows: Vec<Vec<BigInt>> = c.to_rows();
        let d = common::det_rational(&rows);
        assert!(d == BigInt::one() || d == -BigInt::one(), "det = {d}");
        assert_eq!(c.determinant().unwrap(), d);
    }
}

#[test]
fn lens_torsion_of_l3_7_1_2() {
    let l = LensSpace::new(7, vec![1, 2]).unwrap();
    // (ζ − 1)(ζ² − 1) = 1 − ζ − ζ² + ζ³.
    assert_eq!(integral(&reidemeister_torsion(&l).value), big(&[1, -1, -1, 1, 0, 0]));
}

#[test]
fn distinct_factors_are_not_rt_equivalent() {
    let one = CyclotomicElement::one(7);
    let a = &CyclotomicElement::zeta_power(7, 1) - &one;
    let b = &CyclotomicElement::zeta_power(7, 2) - &one;
    let mut hits = 0;
    for k in 0..7 {
        let s = &CyclotomicElement::zeta_power(7, k) * &b;
        hits += usize::from(s == a) + usize::from(-&s == a);
    }
    assert_eq!(hits, 0);
    let x = RTorsion { value: a };
    let y = RTorsion { value: b };
    assert!(!rt_equivalent(&x, &y).unwrap());
}

#[test]
fn balanced_torsion_matches_the_product_formula() {
    let one = CyclotomicElement::one(7);
    let mut prod = one.clone();
    for j in 1..=6 {
        prod = &prod * &(&CyclotomicElement::zeta_power(7, j) - &one);
    }
    assert_eq!(reidemeister_torsion(&LensSpace::balanced(7, 1).unwrap()).value, prod);
    // ∏ (ζʲ − 1) over all j is the norm of ζ − 1, namely 7.
    assert_eq!(integral(&prod), big(&[7, 0, 0, 0, 0, 0]));
}

#[test]
fn l3_7_1_1_twist_by_two_is_not_equivalent() {
    let one = CyclotomicElement::one(7);
    let z = |k| &CyclotomicElement::zeta_power(7, k) - &one;
    let lhs = RTorsion { value: &z(2) * &z(4) };
    let rhs = RTorsion { value: &z(1) * &z(1) };
    assert!(!rt_equivalent(&lhs, &rhs).unwrap());
}

#[test]
fn tor_zero_is_the_direct_cokernel() {
    for p in [3usize, 5, 7, 11] {
        // Z[ζₚ]/(ζ − 1) in the power basis.
        let k = p - 1;
        let mut m = IntMatrix::zeros(k, k);
        for j in 0..k {
            m[(j, j)] = -BigInt::one();
            if j + 1 < k {
                m[(j + 1, j)] = BigInt::one();
            } else {
                for i in 0..k {
                    m[(i, j)] -= BigInt::one();
                }
            }
        }
        assert_eq!(tor_pi_r(p as u64, 0).unwrap(), cokernel(&m));
        assert_eq!(cokernel(&m), FgAbGroup::cyclic(p as u64));
    }
}

#[test]
fn localization_by_crt() {
    let g = FgAbGroup::from_i64(&[6, 9]);
    // Z/6 ⊕ Z/9 ≅ Z/2 ⊕ Z/3 ⊕ Z/9.
    assert_eq!(localize(&g, 3).unwrap(), FgAbGroup::from_i64(&[3, 9]));
    assert_eq!(localize(&g, 2).unwrap(), FgAbGroup::cyclic(2));
    assert_eq!(localize_away(&g, 3).unwrap(), FgAbGroup::cyclic(2));
}

#[test]
fn balanced_basepoint_change_is_a_double() {
    // τ(V, L) = 0, n = 2, d odd, trivial involution: the output is τ − τ̄ = 0 in H₁.
    let a = InvolutiveAbelianGroup::free(2, 1);
    let g = ModuleValues::new(a.clone());
    let tau = big(&[4, -7]);
    let out = basepoint_change_torsion(&g, &tau, &g.twist_identity(), &g.zero(), 2, 11).unwrap();
    let sq = homology_c2_subquotient(&a.action_for_dimension(11), 1);
    assert_eq!(sq.is_zero_class(&out), Some(true));
}

#[test]
fn basepoint_change_euler_coefficient() {
    // Symbolic expansion with τ(V, L) = 0 and h = id: (−1)^{n−1}(τ + (−1)^{d+n−1} τ̄).
    let a = InvolutiveAbelianGroup::new(
        2,
        IntMatrix::zeros(2, 0),
        IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]),
    )
    .unwrap();
    let g = ModuleValues::new(a);
    let tau = big(&[5, 2]);
    for (n, d, expect) in [(2, 11, [-7, -7]), (3, 11, [3, -3]), (2, 10, [-3, 3]), (3, 10, [7, 7])] {
        let out = basepoint_change_torsion(&g, &tau, &g.twist_identity(), &g.zero(), n, d).unwrap();
        assert_eq!(out, big(&expect), "n = {n}, d = {d}");
    }
}

#[test]
fn double_of_reverse_is_mirrored() {
    let g = WhValues::trivial(7);
    let u = WhiteheadClass::new(special_unit_c7()).unwrap();
    for d in [10, 11] {
        let w = HCobordismSymbol::new(d, u.clone(), 3);
        let rev = whtors::torsion::reverse(&g, &w).unwrap();
        let lhs = double(&g, &rev).unwrap().torsion;
        // τ(D(W̄)) = (−1)^d h τ̄(D(W)) expanded by hand.
        let dw = double(&g, &w).unwrap().torsion;
        let mirrored = dw.involution(Default::default()).galois_twist(3).unwrap();
        let expect = if d % 2 == 0 { mirrored } else { mirrored.inverse() };
        assert!(lhs.class_equal(&expect).unwrap(), "d = {d}");
    }
}

#[test]
fn h1_of_z_squared() {
    assert_eq!(homology_c2(&InvolutiveAbelianGroup::free(2, 1), 1), FgAbGroup::from_i64(&[2, 2]));
}

#[test]
fn unit_inverse_by_circulant_oracle() {
    let u = special_unit_c7();
    let inv = u.invert_unit().unwrap();
    let prod = &u * &inv;
    assert_eq!(prod, GroupRingElement::one(7));
    assert_eq!(inv.coeffs(), big(&[1, -2, 3, -3, 3, -2, 1]).as_slice());
}
