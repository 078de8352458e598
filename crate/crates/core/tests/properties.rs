use num_traits::Zero;
use orbitnum::partition::{add, scale};
use orbitnum::{
    canonical_orbit_type, is_p_restricted, m_number, m_oracle, mullineux_regular,
    mullineux_restricted, orbit_number, orbit_types, p_adic_expansion, p_kostka, partitions,
    y_canonical_product, OrbitType, Partition,
};
use proptest::prelude::*;
use proptest::sample::select;

fn partition(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

fn prime() -> impl Strategy<Value = u32> {
    select(vec![2u32, 3, 5, 7])
}

fn orbit_type_of(n: u32, p: u32, pick: prop::sample::Index) -> OrbitType {
    let all = orbit_types(n, p);
    all[pick.index(all.len())].clone()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn expansion_recombines(l in partition(8, 40), p in prime()) {
        let e = p_adic_expansion(&l, p);
        prop_assert_eq!(e.recombine(), l);
        for t in &e.terms {
            prop_assert!(is_p_restricted(t, p));
        }
    }

    #[test]
    fn mullineux_is_an_involution(l in partition(10, 6), p in prime()) {
        if is_p_restricted(&l, p) {
            let m = mullineux_restricted(&l, p).unwrap();
            prop_assert_eq!(m.size(), l.size());
            prop_assert_eq!(mullineux_restricted(&m, p).unwrap(), l.clone());
        }
        let c = l.conjugate();
        if is_p_restricted(&l, p) {
            let m = mullineux_regular(&c, p).unwrap();
            prop_assert_eq!(mullineux_regular(&m, p).unwrap(), c);
        }
    }

    #[test]
    fn m_matches_oracle(l in partition(4, 4), p in select(vec![2u32, 3]), pick: prop::sample::Index) {
        let o = orbit_type_of(l.size(), p, pick);
        prop_assert_eq!(m_number(&l, &o).unwrap(), m_oracle(&l, &o).unwrap());
    }

    #[test]
    fn orbit_numbers_are_bounded_by_m(l in partition(4, 3), p in select(vec![2u32, 3]), pick: prop::sample::Index) {
        let o = orbit_type_of(l.size(), p, pick);
        let y = orbit_number(&l, &o, p).unwrap();
        let m = m_number(&l, &o).unwrap();
        prop_assert!(y <= m);
        if m.is_zero() {
            prop_assert!(y.is_zero());
        }
    }

    #[test]
    fn canonical_value_is_the_product(l in partition(4, 3), p in select(vec![2u32, 3, 5])) {
        let o = canonical_orbit_type(&l, p);
        let y = orbit_number(&l, &o, p).unwrap();
        prop_assert!(!y.is_zero());
        prop_assert_eq!(y, y_canonical_product(&l, p).unwrap());
    }

    #[test]
    fn p_kostka_splits_over_large_shifts(
        m in 0..=5u32, n in 0..=3u32, picks: [prop::sample::Index; 4], p in select(vec![2u32, 3]),
    ) {
        let (pm, pn) = (partitions(m), partitions(n));
        let (l, mu) = (picks[0].get(&pm), picks[1].get(&pm));
        let (nu, delta) = (picks[2].get(&pn), picks[3].get(&pn));
        let top = l.part(0).max(mu.part(0));
        let s = (1..).find(|&s| p.pow(s) > top).unwrap();
        let q = p.pow(s);
        let lhs = p_kostka(&add(l, &scale(nu, q)), &add(mu, &scale(delta, q)), p).unwrap();
        let rhs = p_kostka(l, mu, p).unwrap() * p_kostka(nu, delta, p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
