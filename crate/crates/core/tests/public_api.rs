use num_complex::Complex64;
use proptest::prelude::*;

use neil_core::closed_forms::{c_equals_ci, inner_distance, knese_distance_23, kobayashi_distance, reiffen_metric};
use neil_core::schur::{caratheodory_lower, reiffen_lower, OracleConfig};
use neil_core::verify::{run_suite, Suite};
use neil_core::{DiscPoint, Error, ParabolaParams};

fn dp(re: f64, im: f64) -> DiscPoint {
    DiscPoint::from_re_im(re, im).unwrap()
}

#[test]
fn invalid_inputs_are_reported() {
    assert_eq!(ParabolaParams::new(2, 4), Err(Error::NotCoprime { m: 2, n: 4 }));
    assert!(matches!(ParabolaParams::new(3, 2), Err(Error::OrderViolation { .. })));
    assert!(matches!(
        DiscPoint::new(Complex64::new(1.0, 0.0)),
        Err(Error::OutsideDisc(_))
    ));
}

#[test]
fn serde_round_trip() {
    let p = ParabolaParams::new(3, 5).unwrap();
    let back: ParabolaParams = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back, p);
    let report = run_suite(Suite::Cross, 3);
    let text = serde_json::to_string(&report).unwrap();
    assert_eq!(
        serde_json::from_str::<neil_core::verify::SuiteReport>(&text).unwrap(),
        report
    );
}

#[test]
fn oracles_bound_closed_forms_off_the_neil_parabola() {
    let config = OracleConfig {
        starts: 8,
        seed: 9,
        ..OracleConfig::default()
    };
    let p = ParabolaParams::new(3, 5).unwrap();
    let (l, u) = (dp(0.4, 0.1), dp(-0.2, 0.5));
    let lower = caratheodory_lower(&p, l, u, &config).value;
    assert!(lower <= inner_distance(&p, l, u).value + 1e-9);
    assert!(lower <= kobayashi_distance(&p, l, u) + 1e-9);

    let r = reiffen_lower(&p, l, &config);
    assert!((r.value - reiffen_metric(&p, l)).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn knese_matches_inner_exactly_when_predicted(r1 in 0.0f64..0.95, t1 in -3.1f64..3.1, r2 in 0.0f64..0.95, t2 in -3.1f64..3.1) {
        let p = ParabolaParams::new(2, 3).unwrap();
        let (l, u) = (DiscPoint::from_polar(r1, t1).unwrap(), DiscPoint::from_polar(r2, t2).unwrap());
        let c = knese_distance_23(l, u).value;
        let ci = inner_distance(&p, l, u).value;
        prop_assert!(c <= ci + 1e-10);
        if c_equals_ci(&p, l, u) {
            prop_assert!((c - ci).abs() < 1e-10);
        }
    }
}
