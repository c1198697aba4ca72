use std::time::Instant;

use hallmark_core::lieorders::grid::{run_grid, Manifest};
use hallmark_core::lieorders::{group_order, ord_mod, phi_multiplicities, Family};
use hallmark_core::numtheory::is_prime;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn shipped_grid_passes() {
    let start = Instant::now();
    let report = run_grid(&Manifest::shipped()).unwrap();
    let elapsed = start.elapsed();
    for e in &report.expression_failures {
        eprintln!("expression failure: {}", serde_json::to_string(e).unwrap());
    }
    for r in report.inconsistent.iter().take(10) {
        eprintln!("inconsistent: {}", serde_json::to_string(r).unwrap());
    }
    eprintln!(
        "{} expressions, {} replays ({} vacuous, {} hall predicted), {:?}",
        report.expressions_checked, report.replays, report.replays_vacuous, report.hall_predicted, elapsed
    );
    eprintln!("{:?}", report.cases);
    assert!(report.expressions_checked > 500);
    for case in [
        "sl-a", "sl-b", "sl-b-dim", "su-a1", "su-a2", "su-a2-dim", "su-b", "clas-a2", "clas-a3", "clas-b2", "clas-b3",
        "clas-b4",
    ] {
        assert!(report.cases.contains_key(case), "no grid point for {case}");
    }
    assert!(report.passed);
    assert!(elapsed.as_secs() < 60);
}

proptest! {
    #[test]
    fn prime_divides_order_iff_phi_factor(
        fi in 0usize..6, n in 1u32..=8, qi in 0usize..4, r in 3u64..=31,
    ) {
        prop_assume!(is_prime(r));
        let family = Family::ALL[fi];
        let q = [2u64, 3, 4, 5][qi];
        prop_assume!(!q.is_multiple_of(r));
        let order = group_order(family, n, q).unwrap();
        let k = ord_mod(r, q).unwrap();
        let mult = phi_multiplicities(family, n);
        // r | Φ_d(q) exactly when d = k r^i
        let hit = mult.iter().any(|(&d, &c)| {
            c > 0 && d % k == 0 && { let mut x = d / k; while x.is_multiple_of(r) { x /= r; } x == 1 }
        });
        prop_assert_eq!((&order % r).is_zero(), hit);
    }
}
