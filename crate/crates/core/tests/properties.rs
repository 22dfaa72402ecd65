use ckwitt::biortho::{sigma_gamma, BiorthoSystem};
use ckwitt::ck::{catalog, CkType, Family};
use ckwitt::flow::{closed_form_state, first_integrals, rhs, LambdaTriple, StateTriple};
use ckwitt::jacobi::{EllipticFn, Jacobi};
use ckwitt::modular::{kprime_value, ModularElement};
use ckwitt::witt::{bracket, VectorField};
use ckwitt::{Complex64, I};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -1.5..1.5f64).prop_map(|(x, y)| Complex64::new(x, y))
}

fn modulus() -> impl Strategy<Value = f64> {
    0.05..0.95f64
}

fn field(j: &Jacobi, f: EllipticFn, scale: Complex64) -> VectorField {
    let j1 = j.clone();
    let j2 = j.clone();
    VectorField::new(f.name(), move |z| Ok(scale * j1.eval(f, z)?))
        .with_derivative(move |z| Ok(scale * j2.derivative(f, z)?))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pythagorean_identities(k in modulus(), z in point()) {
        let j = Jacobi::new(k).unwrap();
        prop_assume!(j.pole_distance(EllipticFn::Sn, z) > 0.2);
        let [s, c, d] = j.sn_cn_dn(z).unwrap();
        let scale = 1.0 + s.norm_sqr();
        prop_assert!((s * s + c * c - 1.0).norm() <= 1e-12 * scale);
        prop_assert!((d * d + k * k * s * s - 1.0).norm() <= 1e-12 * scale);
    }

    #[test]
    fn quotients_agree_with_basic_triple(k in modulus(), z in point()) {
        let j = Jacobi::new(k).unwrap();
        prop_assume!(EllipticFn::ALL.iter().all(|f| j.pole_distance(*f, z) > 0.2));
        let [s, c, d] = j.sn_cn_dn(z).unwrap();
        let one = Complex64::new(1.0, 0.0);
        for f in EllipticFn::ALL {
            let part = |l| match l {
                ckwitt::jacobi::Letter::S => s,
                ckwitt::jacobi::Letter::C => c,
                ckwitt::jacobi::Letter::D => d,
                ckwitt::jacobi::Letter::N => one,
            };
            let (p, q) = f.letters();
            let expect = part(p) / part(q);
            let got = j.eval(f, z).unwrap();
            prop_assert!((got - expect).norm() <= 1e-13 * (1.0 + expect.norm()), "{f}");
        }
    }

    #[test]
    fn real_period(k in modulus(), z in point()) {
        let j = Jacobi::new(k).unwrap();
        prop_assume!(j.pole_distance(EllipticFn::Sn, z) > 0.2);
        let four_k = 4.0 * j.periods().real;
        let a = j.eval(EllipticFn::Sn, z).unwrap();
        let b = j.eval(EllipticFn::Sn, z + four_k).unwrap();
        prop_assert!((a - b).norm() <= 1e-11 * (1.0 + a.norm()));
    }

    #[test]
    fn interchange_matches_direct_evaluation(k in 0.2..0.95f64, z in point()) {
        let kp = ckwitt::theta::complementary(k);
        let direct = Jacobi::new(kp).unwrap();
        for f in EllipticFn::ALL {
            prop_assume!(direct.pole_distance(f, z) > 0.2);
            let want = direct.eval(f, z).unwrap();
            let got = kprime_value(f, z, k).unwrap();
            prop_assert!((got - want).norm() <= 1e-10 * (1.0 + want.norm()), "{f}");
        }
    }

    #[test]
    fn bracket_antisymmetric_and_bilinear(k in modulus(), z in point(), a in -2.0..2.0f64) {
        let j = Jacobi::new(k).unwrap();
        prop_assume!(EllipticFn::ALL.iter().all(|f| j.pole_distance(*f, z) > 0.2));
        let f = field(&j, EllipticFn::Sn, Complex64::new(1.0, 0.0));
        let g = field(&j, EllipticFn::Dc, I);
        let h = field(&j, EllipticFn::Cs, Complex64::new(0.5, -0.5));
        let fg = bracket(&f, &g).coeff(z).unwrap();
        let gf = bracket(&g, &f).coeff(z).unwrap();
        prop_assert!((fg + gf).norm() <= 1e-12 * (1.0 + fg.norm()));
        let a = Complex64::new(a, 0.0);
        let lhs = bracket(&f.scale(a).add(&g), &h).coeff(z).unwrap();
        let rhs = a * bracket(&f, &h).coeff(z).unwrap() + bracket(&g, &h).coeff(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn modular_words_compose(word in prop::collection::vec(prop::bool::ANY, 0..=6), x in -1.0..1.0f64, y in 0.5..2.0f64) {
        let letters: Vec<_> = word.iter().map(|p| if *p { ModularElement::P } else { ModularElement::Q }).collect();
        let m = ModularElement::word(&letters);
        let [a, b, c, d] = m.entries();
        prop_assert_eq!(a * d - b * c, 1);
        let tau = Complex64::new(x, y);
        let mut step = tau;
        for l in letters.iter().rev() {
            step = l.apply(step).unwrap();
        }
        let once = m.apply(tau).unwrap();
        prop_assert!((step - once).norm() <= 1e-12 * (1.0 + once.norm()));
        let back = m.inverse().apply(once).unwrap();
        prop_assert!((back - tau).norm() <= 1e-10 * (1.0 + tau.norm()));
    }

    #[test]
    fn rhs_is_quadratic(g in 0.05..0.95f64, re in -2.0..2.0f64, im in -2.0..2.0f64, f in prop::array::uniform3(-3.0..3.0f64)) {
        let l = LambdaTriple::from_gamma(g).unwrap();
        let s = StateTriple::from_real(f);
        let c = Complex64::new(re, im);
        let scaled = rhs(&l, &(s * c));
        let expect = rhs(&l, &s) * (c * c);
        prop_assert!(scaled.distance(&expect) <= 1e-12 * (1.0 + expect.max_norm()));
    }

    #[test]
    fn closed_form_keeps_integrals(g in 0.05..0.95f64, z in 0.0..6.0f64) {
        let j = Jacobi::new(g).unwrap();
        let l = LambdaTriple::from_gamma(g).unwrap();
        let ints = first_integrals(&l, &closed_form_state(&j, z).unwrap());
        let want = [-1.0, -1.0, 1.0];
        for (v, w) in ints.iter().zip(want) {
            prop_assert!((v - w).norm() <= 1e-12);
        }
    }

    #[test]
    fn gram_sweep(t in -1.5..1.5f64) {
        let b = BiorthoSystem::new(t).unwrap();
        prop_assert!(b.gram_residual() <= 1e-13 / t.cos().abs().max(0.1));
    }

    #[test]
    fn sigma_gamma_commutators(g in -0.99..0.99f64) {
        // the third relation picks up ω² = 1 - γ²
        let s: Vec<_> = (1..=3).map(|m| sigma_gamma(m, g).unwrap()).collect();
        let w2 = 1.0 - g * g;
        for (a, b, c, f) in [(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, w2)] {
            let r = s[a].commutator(&s[b]) - s[c] * (I * f);
            prop_assert!(r.max_abs() <= 1e-15);
        }
    }
}

#[test]
fn catalog_is_complete() {
    let all = catalog();
    assert_eq!(all.len(), 28);
    for t in CkType::ALL {
        for f in [
            Family::Base,
            Family::NcScDc,
            Family::NsCsDs,
            Family::NdCdSd,
            Family::Kprime,
            Family::Lambda,
            Family::Matrix,
        ] {
            assert_eq!(all.iter().filter(|e| e.ck_type == t && e.family == f).count(), 1);
        }
    }
}
