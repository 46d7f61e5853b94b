use jue_core::exact::laurent::rescale_poly;
use jue_core::exact::{
    laurent_expand, parse_ratfun, series_divide_by_difference, Monomial, SparsePoly, TruncatedSeries, SLOT_N,
};
use jue_core::hurwitz::{count_hurwitz, Guards, HurwitzQuery};
use jue_core::jacobi::{mixed_connected, moment};
use jue_core::schur::c_lambda;
use jue_core::symgroup::partition::factorial;
use jue_core::symgroup::{character, conjugacy_class, partitions_of};
use jue_core::{Partition, Rational, RationalFunction, Sign, VarSet};
use num_bigint::BigInt;
use proptest::prelude::*;

const V: VarSet = VarSet::Jacobi;

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=2), -4i64..=4), 1..5).prop_map(|ts| {
        SparsePoly::from_terms(V, ts.into_iter().map(|((a, b, c), k)| (Monomial([a, b, c]), qi(k))))
    })
}

fn linear() -> impl Strategy<Value = SparsePoly> {
    ((-2i64..=2, -2i64..=2, -2i64..=2), -6i64..=6)
        .prop_filter("needs a variable", |((a, b, c), _)| (*a, *b, *c) != (0, 0, 0))
        .prop_map(|((a, b, c), k)| {
            let mut p = SparsePoly::from_int(V, k);
            for (slot, coeff) in [a, b, c].into_iter().enumerate() {
                p = p.add(&SparsePoly::var(V, slot).scale(&qi(coeff)));
            }
            p
        })
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), prop::collection::vec(linear(), 0..3)).prop_map(|(num, den)| {
        let factors: Vec<(SparsePoly, u32)> = den.into_iter().map(|l| (l, 1)).collect();
        RationalFunction::from_factored(num, &factors).unwrap()
    })
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Partition::new(v).unwrap())
}

fn partition_of(n: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_of(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
        }
    }

    #[test]
    fn display_round_trips(a in ratfun()) {
        let back = parse_ratfun(&a.to_string(), V).unwrap();
        prop_assert_eq!(back, a.clone());
        let split = a.split_linear_factors();
        prop_assert_eq!(split, a);
    }

    #[test]
    fn laurent_times_denominator_is_numerator(f in ratfun()) {
        prop_assume!(!f.is_zero());
        let depth = 4;
        let l = laurent_expand(&f, depth).unwrap();
        let desc = |p: &SparsePoly| -> (i64, Vec<RationalFunction>) {
            let cs = rescale_poly(p).coefficients_in(SLOT_N);
            let top = cs.len() as i64 - 1;
            (top, cs.into_iter().rev().map(RationalFunction::from_poly).collect())
        };
        let (dtop, d) = desc(&f.denom());
        let (ntop, n) = desc(f.numer());
        let zero = RationalFunction::zero(VarSet::Scaled);
        for k in 0..=depth {
            let mut acc = zero.clone();
            for i in 0..=k {
                if let Some(dj) = d.get(k - i) {
                    acc = acc.add(&l.coeffs()[i].mul(dj));
                }
            }
            let e = l.e_max() + dtop - k as i64;
            let want = if e <= ntop && e >= 0 { n[(ntop - e) as usize].clone() } else { zero.clone() };
            prop_assert_eq!(acc, want, "k = {}", k);
        }
    }

    #[test]
    fn divide_then_multiply(terms in prop::collection::vec(((0u8..4, 0u8..4, 0u8..3), -5i64..=5), 1..8)) {
        let budget = 4;
        let mut q = TruncatedSeries::zero(V, 3, budget);
        for ((a, b, c), k) in terms {
            if (a + b + c) as u32 <= budget {
                q.set(vec![a, b, c], RationalFunction::from_int(V, k));
            }
        }
        let s = q.mul_by_difference(0, 1);
        let back = series_divide_by_difference(&s, 0, 1).unwrap();
        prop_assert!(back.eq_within(&q, budget));
        prop_assert!(back.mul_by_difference(0, 1).eq_within(&s, budget + 1));
    }

    #[test]
    fn partition_text_round_trips(p in partition(9, 6)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn connected_never_exceeds_disconnected(
        n in 1u32..=4,
        g in -1i64..=1,
        seed in any::<(usize, usize, usize)>(),
    ) {
        let all = partitions_of(n);
        let pick = |i: usize| all[i % all.len()].clone();
        let mut q = HurwitzQuery::new(pick(seed.0), pick(seed.1), pick(seed.2), g, false);
        let guards = Guards::default();
        let full = count_hurwitz(&q, &guards).unwrap();
        q.connected = true;
        let conn = count_hurwitz(&q, &guards).unwrap();
        prop_assert!(conn <= full);
        if q.r() < 0 {
            prop_assert_eq!(full, 0);
        }
    }

    #[test]
    fn reflection_swaps_alpha_and_beta(k in 1u32..=6) {
        let one = Partition::new(vec![k]).unwrap();
        let mixed = mixed_connected(&Partition::empty(), &Partition::empty(), &one).unwrap();
        prop_assert_eq!(mixed, moment(k, Sign::Positive).unwrap().swap_ab());
    }

    #[test]
    fn class_sizes(lambda in partition_of(5)) {
        let class: Vec<_> = conjugacy_class(&lambda, 5).unwrap().collect();
        let want = factorial(5) / lambda.z();
        prop_assert_eq!(BigInt::from(class.len()), want);
        prop_assert!(class.iter().all(|p| p.cycle_type() == lambda));
    }
}

#[test]
fn column_orthogonality() {
    for n in 1..=6 {
        let ps = partitions_of(n);
        for mu in &ps {
            for nu in &ps {
                let s: i64 = ps.iter().map(|l| character(l, mu).unwrap() * character(l, nu).unwrap()).sum();
                let want = if mu == nu { mu.z() } else { BigInt::from(0) };
                assert_eq!(BigInt::from(s), want, "{mu} {nu}");
            }
        }
    }
}

#[test]
fn squared_dimensions_sum_to_order() {
    for n in 1..=7 {
        let s: BigInt = partitions_of(n).iter().map(|l| l.dim() * l.dim()).sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn dimension_formulas_agree() {
    for n in 1..=8 {
        for l in partitions_of(n) {
            assert_eq!(l.dim_over_factorial() * Rational::from_integer(factorial(n)), Rational::from_integer(l.dim_hook()));
        }
    }
}

#[test]
fn schur_coefficient_forms_agree_through_weight_six() {
    for l in partitions_of(6) {
        for sign in [Sign::Positive, Sign::Negative] {
            c_lambda(&l, sign).unwrap();
        }
    }
}
