use proptest::prelude::*;

use branchlaw::arch_packet::{block_signs, infer_signature};
use branchlaw::compact::{expected_per_k, interlaces, per_k_epsilon, total_epsilon, CompactParams};
use branchlaw::distinguished::{chi_arch, chi_arch_pairwise, chi_general_from_epsilons, chi_tame};
use branchlaw::unitary::{distinguished_embedding, enumerate_packet, theorem31_consistency, HermitianSpace};
use branchlaw::{HalfInt, ParamPair, Side, Sign, TameChar};

fn distinct_sorted(range: std::ops::RangeInclusive<i64>, max: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(range, 0..=max).prop_map(|s| s.into_iter().rev().collect())
}

fn arch_pair() -> impl Strategy<Value = ParamPair> {
    (distinct_sorted(-9..=9, 5), distinct_sorted(-5..=5, 5)).prop_map(|(m, n)| {
        ParamPair::arch(
            m.into_iter().map(|k| HalfInt::from_twice(2 * k + 1)).collect(),
            n.into_iter().map(HalfInt::from_int).collect(),
        )
    })
}

fn tame_pair() -> impl Strategy<Value = ParamPair> {
    prop_oneof![Just(3u32), Just(5), Just(7)]
        .prop_flat_map(|q| {
            let sym = TameChar::all_conjugate_symplectic(q).unwrap();
            let orth = TameChar::all_conjugate_orthogonal(q).unwrap();
            (
                Just(sym.clone()),
                Just(orth.clone()),
                prop::sample::subsequence((0..sym.len()).collect::<Vec<_>>(), 0..=4).prop_shuffle(),
                prop::sample::subsequence((0..orth.len()).collect::<Vec<_>>(), 0..=4).prop_shuffle(),
            )
        })
        .prop_map(|(sym, orth, mi, ni)| {
            ParamPair::tame(mi.iter().map(|&i| sym[i]).collect(), ni.iter().map(|&i| orth[i]).collect())
        })
}

fn compact_params(n: usize) -> impl Strategy<Value = CompactParams> {
    let lam = prop::collection::btree_set(-5i64..=5, n);
    let mu = prop::collection::btree_set(-5i64..=5, n + 1);
    // lambda is half-integral for even n, mu has the opposite parity
    let lp = if n.is_multiple_of(2) { 1 } else { 0 };
    (lam, mu).prop_map(move |(l, m)| {
        CompactParams::new(
            l.into_iter().map(|k| HalfInt::from_twice(2 * k + lp)).collect(),
            m.into_iter().map(|k| HalfInt::from_twice(2 * k + 1 - lp)).collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn arch_paths_agree(p in arch_pair()) {
        prop_assert_eq!(chi_arch(&p).unwrap(), chi_general_from_epsilons(&p).unwrap());
    }

    #[test]
    fn arch_pairwise_matches_simple_values(p in arch_pair()) {
        let chi = chi_arch(&p).unwrap();
        for (side, signs) in [(Side::M, &chi.chi_e), (Side::N, &chi.chi_f)] {
            let r = signs.rank();
            for i in 0..r {
                for j in i..r {
                    let expected = signs.get(i) * signs.get(j);
                    prop_assert_eq!(chi_arch_pairwise(&p, side, i, j).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn tame_paths_agree_and_center_is_minus_one_to_p(p in tame_pair()) {
        let t = chi_tame(&p).unwrap();
        let g = chi_general_from_epsilons(&p).unwrap();
        prop_assert_eq!(t.in_original_order(), g.clone());
        let expected = Sign::from_parity(t.p_count as i64);
        prop_assert_eq!(g.central_m(), expected);
        prop_assert_eq!(g.central_n(), expected);
    }

    #[test]
    fn signature_is_consistent_with_block_signs(p in arch_pair()) {
        let n = p.m_summands.len();
        if n > 0 {
            let chi = chi_arch(&p).unwrap();
            let sig = infer_signature(&chi.chi_e);
            prop_assert_eq!(sig.dimension(), n);
            let blocks = block_signs(&chi.chi_e);
            let plus = blocks.iter().filter(|s| !s.is_minus()).count();
            prop_assert!(plus == sig.larger || plus == sig.smaller);
        }
    }

    #[test]
    fn compact_interlacing_iff_pattern(params in (1usize..=3).prop_flat_map(compact_params)) {
        let n = params.n();
        let pattern = (0..=n).all(|k| per_k_epsilon(&params, k).unwrap() == expected_per_k(n, k));
        prop_assert_eq!(interlaces(&params), pattern);
        if pattern {
            prop_assert_eq!(total_epsilon(&params).unwrap(), Sign::from_parity((n * (n + 1) / 2) as i64));
        }
    }

    #[test]
    fn depth_zero_quotients_match_p(p in tame_pair()) {
        let d = distinguished_embedding(&p).unwrap();
        let (w, w0) = d.quotients();
        prop_assert_eq!(w.p, d.p_count);
        prop_assert_eq!(w0.p, d.p_count);
        let (n, m) = (p.m_summands.len(), p.n_summands.len());
        if n % 2 != m % 2 {
            prop_assert!(theorem31_consistency(&p).unwrap().passed);
        } else {
            prop_assert!(theorem31_consistency(&p).is_err());
        }
    }
}

#[test]
fn packets_split_evenly_between_the_two_spaces() {
    for n in 1..=6 {
        let packet = enumerate_packet(n).unwrap();
        assert_eq!(packet.len(), 1 << n);
        let v = packet.iter().filter(|e| e.space() == HermitianSpace::V).count();
        assert_eq!(v, 1 << (n - 1));
    }
}
