use num_bigint::BigInt;
use num_traits::ToPrimitive;
use partlab_core::bounds::{bo_threshold, classify, logconcavity_threshold};
use partlab_core::scanner::{minimal_logconcave_start, scan_bo, Violation};
use partlab_core::PartSystem;

fn sys(p: &[i64]) -> PartSystem {
    PartSystem::new(p).unwrap()
}

fn corpus() -> Vec<PartSystem> {
    [
        &[1i64][..],
        &[2],
        &[1, 1],
        &[1, 2],
        &[1, 3],
        &[2, 3],
        &[2, 4],
        &[1, 1, 1],
        &[1, 2, 3],
        &[1, 2, 4],
        &[1, 3, 4],
        &[2, 3, 5],
        &[2, 4, 6],
        &[1, 1, 1, 1],
        &[1, 2, 3, 4],
        &[1, 1, 2, 3],
        &[2, 2, 4, 6],
        &[1, 2, 3, 4, 5],
    ]
    .iter()
    .map(|p| sys(p))
    .collect()
}

#[test]
fn bo_thresholds_sound_at_desk_scale() {
    let mut checked = 0;
    for s in corpus() {
        let Ok(t) = bo_threshold(&s) else { continue };
        let Some(value) = t.value.to_u64().filter(|&v| v <= 300) else {
            continue;
        };
        let report = scan_bo(&s, value + 150).unwrap();
        let above: Vec<&Violation> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::Bo { b, .. } if *b >= value))
            .collect();
        assert!(above.is_empty(), "{s}: {:?}", above.first());
        checked += 1;
    }
    assert!(checked >= 8);
}

#[test]
fn coprime_pair_bound() {
    for a1 in 1u64..=5 {
        for a2 in a1 + 1..=30 {
            if a1 * a2 > 30 || num_integer::gcd(a1, a2) != 1 {
                continue;
            }
            let s = PartSystem::from_u64(&[a1, a2]).unwrap();
            let bound = 4 * a1 * a2;
            let report = scan_bo(&s, bound + 200).unwrap();
            assert!(
                report.violations.iter().all(|v| v.position() <= bound),
                "{s}"
            );
        }
    }
}

#[test]
fn failing_bo_recurs_in_every_window() {
    for s in corpus()
        .into_iter()
        .filter(|s| !classify(s).bo_holds_eventually)
    {
        let d = s.period().unwrap() as u64;
        let report = scan_bo(&s, 20 * d).unwrap();
        let mut start = 1;
        while start + 2 * d <= 20 * d {
            assert!(
                report.violations.iter().any(
                    |v| matches!(v, Violation::Bo { a, .. } if (start..start + 2 * d).contains(a))
                ),
                "{s} window {start}"
            );
            start += 2 * d;
        }
    }
}

#[test]
fn classification_matches_observed_logconcavity() {
    for s in corpus() {
        let d = s.period().unwrap() as u64;
        let c = classify(&s);
        if !c.logconcave_eventually {
            for horizon in [4 * d.max(1), 8 * d, 400] {
                let h = horizon.max(4);
                assert_eq!(
                    minimal_logconcave_start(&s, h).unwrap().start,
                    None,
                    "{s} at {h}"
                );
            }
        } else {
            let t = logconcavity_threshold(&s).unwrap();
            if t.plain.value <= BigInt::from(5000) {
                let horizon = (2 * t.plain.value.to_u64().unwrap()).max(1000);
                assert!(
                    minimal_logconcave_start(&s, horizon)
                        .unwrap()
                        .start
                        .is_some(),
                    "{s}"
                );
            }
        }
    }
}

#[test]
fn powers_of_two_variant() {
    for k in 3u32..=7 {
        let parts: Vec<i64> = (0..k).map(|i| 1 << i).collect();
        let t = bo_threshold(&sys(&parts)).unwrap();
        let factorial: u64 = (1..k as u64).product();
        let stated: BigInt = BigInt::from(2).pow(k * (k - 1) / 2 + 1) * factorial + 1u32;
        assert!(t.alternatives.iter().any(|a| a.bound
            == num_rational::BigRational::from_integer(stated.clone())
            && a.strict));
    }
}
