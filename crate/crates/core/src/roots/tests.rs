use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::VariableOrder;

fn p(text: &str) -> Polynomial {
    let o = Arc::new(VariableOrder::parse_list("x").unwrap());
    Polynomial::parse(text, &o).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    rational(n, d)
}

#[test]
fn sqrt_two() {
    let roots = isolate_real_roots(&p("x^2-2")).unwrap();
    assert_eq!(roots.len(), 2);
    let max = BigRational::new(BigInt::one(), BigInt::one() << 30);
    let two = q(2, 1);
    for r in &roots {
        assert!(r.exact_root.is_none());
        assert!(r.width() <= max);
        // Endpoints bracket +-sqrt 2: their squares straddle 2.
        let (a, b) = (&r.lo * &r.lo, &r.hi * &r.hi);
        assert!((a < two) != (b < two), "{r}");
    }
    assert!(roots[0].hi < BigRational::zero() && roots[1].lo > BigRational::zero());
    assert!((roots[1].midpoint_f64() - std::f64::consts::SQRT_2).abs() < 1e-8);
}

#[test]
fn exact_and_empty_cases() {
    let roots = isolate_real_roots(&p("x")).unwrap();
    assert_eq!(roots, vec![IsolatingInterval::exact(q(0, 1))]);
    assert_eq!(roots[0].to_string(), "[0, 0] = 0");
    assert!(isolate_real_roots(&p("x^2+1")).unwrap().is_empty());
    assert!(isolate_real_roots(&p("7")).unwrap().is_empty());
    assert!(isolate_real_roots(&p("0")).is_err());
    let o = Arc::new(VariableOrder::parse_list("x,y").unwrap());
    let xy = Polynomial::parse("x*y - 1", &o).unwrap();
    assert!(matches!(isolate_real_roots(&xy), Err(Error::NotUnivariate)));
    // A polynomial in the second variable only is still univariate.
    let y = Polynomial::parse("y^2 - 4", &o).unwrap();
    let roots = isolate_real_roots(&y).unwrap();
    assert_eq!(
        roots
            .iter()
            .map(|r| r.exact_root.clone().unwrap())
            .collect::<Vec<_>>(),
        [q(-2, 1), q(2, 1)]
    );
}

#[test]
fn rational_roots_are_exact() {
    let roots = isolate_real_roots(&p("(3*x-1)*(2*x+5)*(x-4)^2*(x^2-3)")).unwrap();
    let exact: Vec<_> = roots.iter().filter_map(|r| r.exact_root.clone()).collect();
    assert_eq!(exact, vec![q(-5, 2), q(1, 3), q(4, 1)]);
    assert_eq!(roots.len(), 5);
    // Close rational roots separated by bisection midpoints.
    let roots = isolate_real_roots(&p("(x-1)*(1024*x-1025)*x")).unwrap();
    let exact: Vec<_> = roots.iter().map(|r| r.exact_root.clone().unwrap()).collect();
    assert_eq!(exact, vec![q(0, 1), q(1, 1), q(1025, 1024)]);
}

#[test]
fn coarse_width_on_request() {
    let roots = isolate_real_roots_with(&p("x^3 - 2"), 4).unwrap();
    assert_eq!(roots.len(), 1);
    assert!(roots[0].width() <= q(1, 16));
}

#[test]
fn counts() {
    assert_eq!(count_real_roots(&p("x^3 - x")).unwrap(), 3);
    assert_eq!(count_real_roots(&p("x^4 + 1")).unwrap(), 0);
    assert_eq!(count_real_roots(&p("(x-1)^3*(x+2)")).unwrap(), 2);
}

/// Integer polynomial with the given integer roots times an irreducible
/// quadratic that may or may not have real roots.
fn build(roots: &[i64], c: i64) -> Polynomial {
    let mut f = p(&format!("x^2 - {c}"));
    for r in roots {
        f = &f * &p(&format!("x - ({r})"));
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isolation_is_consistent(roots in prop::collection::vec(-20i64..=20, 0..5), c in -5i64..=30) {
        let f = build(&roots, c);
        let out = isolate_real_roots(&f).unwrap();
        prop_assert_eq!(out.len(), count_real_roots(&f).unwrap());
        for w in out.windows(2) {
            prop_assert!(w[0].hi < w[1].lo);
        }
        let dense = Dense(
            dense_integer_coefficients(&squarefree_part(&f).unwrap())
                .unwrap()
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        );
        for r in &out {
            match &r.exact_root {
                Some(e) => prop_assert!(dense.eval(e).is_zero()),
                None => {
                    let (a, b) = (dense.sign_at(&r.lo), dense.sign_at(&r.hi));
                    prop_assert!(a * b < 0, "no sign change on {}", r);
                }
            }
        }
        for root in &roots {
            let v = q(*root, 1);
            prop_assert!(out.iter().any(|r| r.exact_root.as_ref() == Some(&v)));
        }
    }
}
