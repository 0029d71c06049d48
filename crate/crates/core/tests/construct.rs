mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use siegel_core::construct::{self, construct_forms, divide_chi5_power, gamma, order_table, reduce, Seeds};
use siegel_core::covariant;
use siegel_core::fourier::{Character, ExpansionJson, SiegelExpansion, VanishingConfig, VectorExpansion, VectorJson};
use siegel_core::Error;

const PREC: u32 = 16;

fn seeds() -> Seeds {
    Seeds::compute(PREC).unwrap()
}

fn ratio(f: &VectorExpansion<BigRational>, g: &VectorExpansion<BigRational>) -> Option<BigRational> {
    let mut r: Option<BigRational> = None;
    for (x, y) in f.entries().iter().zip(g.entries()) {
        for (a, b, c, v) in y.terms() {
            let u = x.coeff(a, b, c);
            let t = u / &v;
            match &r {
                None => r = Some(t),
                Some(s) if *s != t => return None,
                _ => {}
            }
        }
        for (a, b, c, _) in x.terms() {
            if y.coeff(a, b, c).is_zero() {
                return None;
            }
        }
    }
    r
}

#[test]
fn the_tautological_covariant_gives_chi63() {
    let s = seeds();
    let h = covariant::covariants(1, (6, 0)).unwrap();
    assert_eq!(h.len(), 1);
    let f = gamma(&h[0], &s.chi63).unwrap();
    assert_eq!((f.j(), f.k(), f.character()), (6, 3, Character::Epsilon));
    let r = ratio(&f, &s.chi63.to_rational()).expect("proportional");
    assert!(!r.is_zero());
}

#[test]
fn chi10_reduces_to_a_constant() {
    let s = seeds();
    let chi5 = s.chi5.to_rational();
    let chi10 = VectorExpansion::scalar(chi5.mul(&chi5), 10);
    let config = VanishingConfig::default();
    assert_eq!(chi10.vanishing_order(&config).unwrap(), 2);
    let r = reduce(&chi10, &chi5, &config).unwrap();
    assert_eq!(r.divisions, 2);
    assert_eq!(r.form.k(), 0);
    assert_eq!(r.form.character(), Character::Trivial);
    assert_eq!(r.form.entry(0), &SiegelExpansion::one(r.form.prec()));
    assert!(matches!(divide_chi5_power(&chi10, &chi5, 3), Err(Error::NotDivisible(_))));
}

#[test]
fn vanishing_order_needs_precision() {
    let s = seeds();
    let low = s.chi63.to_rational().truncate(6);
    assert!(matches!(
        low.vanishing_order(&VanishingConfig::default()),
        Err(Error::PrecisionFloor { .. })
    ));
}

#[test]
fn degree_two_forms_have_the_expected_weights() {
    let s = seeds();
    let config = VanishingConfig::default();
    for ((l1, l2), mult) in covariant::decomposition(2) {
        let forms = construct_forms(&s, 2, (l1, l2), false, &config).unwrap();
        assert_eq!(forms.len(), mult);
        for f in forms {
            assert_eq!(f.weight(), (l1 - l2, (l2 + 6) as i32));
            assert_eq!(f.form.j(), l1 - l2);
            assert_eq!(f.form.k(), (l2 + 6) as i32);
            assert_eq!(f.character(), Character::Trivial);
            assert_eq!(f.divisions, 0);
        }
    }
}

#[test]
fn reduced_forms_record_their_division() {
    let s = seeds();
    let config = VanishingConfig::default();
    let forms = construct_forms(&s, 3, (14, 4), true, &config).unwrap();
    let filt = order_table(&s, 3, (14, 4), config.max_order).unwrap();
    assert_eq!(forms.len(), filt.orders.len());
    for (f, o) in forms.iter().zip(&filt.orders) {
        assert_eq!(f.divisions, *o);
        assert_eq!(f.weight().1, 4 + 9 - 5 * *o as i32);
        assert_eq!(f.character(), Character::from_bit(((3 + o) % 2) as u8));
    }
}

#[test]
fn clear_denominators_is_primitive() {
    let v = vec![
        BigRational::new(1.into(), 6.into()),
        BigRational::new((-1).into(), 4.into()),
        BigRational::zero(),
    ];
    let w = construct::clear_denominators(&v);
    assert_eq!(w, vec![BigInt::from(2), BigInt::from(-3), BigInt::zero()]);
}

#[test]
fn json_round_trip() {
    let s = seeds();
    let chi5 = s.chi5.to_rational();
    let text = serde_json::to_string(&ExpansionJson::from(&chi5)).unwrap();
    let back: ExpansionJson = serde_json::from_str(&text).unwrap();
    assert_eq!(SiegelExpansion::try_from(&back).unwrap(), chi5);

    let chi63 = s.chi63.to_rational();
    let text = serde_json::to_string(&VectorJson::from(&chi63)).unwrap();
    let back: VectorJson = serde_json::from_str(&text).unwrap();
    assert_eq!(VectorExpansion::try_from(&back).unwrap(), chi63);
}

#[test]
fn malformed_json_is_rejected() {
    let bad = ExpansionJson {
        prec: 2,
        character: 0,
        coeffs: vec![(1, 1, 3, "1/1".into())],
    };
    assert!(matches!(SiegelExpansion::<BigRational>::try_from(&bad), Err(Error::Support { .. })));
    let beyond = ExpansionJson {
        prec: 2,
        character: 0,
        coeffs: vec![(2, 2, 0, "1".into())],
    };
    assert!(SiegelExpansion::<BigRational>::try_from(&beyond).is_err());
    let flag = ExpansionJson {
        prec: 2,
        character: 3,
        coeffs: vec![],
    };
    assert!(SiegelExpansion::<BigRational>::try_from(&flag).is_err());
}
