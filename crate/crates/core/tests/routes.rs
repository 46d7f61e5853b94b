use std::time::Instant;

use jue_core::jacobi::{correlator, Sign};
use jue_core::schur::correlator_via_schur;
use jue_core::symgroup::partitions_of;

#[test]
fn analytic_route_matches_schur_route() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            for sign in [Sign::Positive, Sign::Negative] {
                let t = Instant::now();
                let a = correlator(&mu, sign).unwrap();
                let s = correlator_via_schur(&mu, sign).unwrap();
                assert_eq!(a, s, "mu = {mu}, {sign}");
                eprintln!("{mu} {sign}: {:?}", t.elapsed());
            }
        }
    }
}
