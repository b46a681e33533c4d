//! The `verify-all` sweeps. Each suite reports its instance count and a
//! pass/fail row; the first failure, if any, is reported verbatim.

use branchlaw::arch_packet::{compact_general_root, compact_simple_roots, infer_signature};
use branchlaw::compact::cross_validate;
use branchlaw::distinguished::{chi_arch, chi_general_from_epsilons, chi_tame};
use branchlaw::epsilon::{arch_epsilon, conjugate_orthogonal_epsilon, tame_epsilon, tame_epsilon_by_twist};
use branchlaw::finite_gl::oracle::{oracle_term_character, restrict_to_corner};
use branchlaw::finite_gl::{
    derivative_multiset, gl_order, hom_multiplicity, oracle_derivative_dimension, oracle_hom_dimension,
    oracle_induced_character, restriction_terms, ClassFunction, ProductRep, MAX_GROUP_ORDER,
};
use branchlaw::unitary::{distinguished_embedding, theorem31_consistency};
use branchlaw::{Error, HalfInt, ParamPair, Result, Sign, SignChar, TameChar};

use crate::report::Report;

pub const DEFAULT_ARCH_BOUND: HalfInt = HalfInt::from_twice(7);
pub const DEFAULT_COMPACT_BOUND: HalfInt = HalfInt::from_twice(9);
const MAX_SUMMANDS: usize = 4;
const TAME_QS: [u32; 2] = [3, 5];

/// Outcome of one suite: instance count and the first failure.
type Suite = std::result::Result<usize, String>;

fn subsets<T: Clone>(items: &[T], max_len: usize) -> Vec<Vec<T>> {
    (0u64..(1 << items.len()))
        .filter(|m| m.count_ones() as usize <= max_len)
        .map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i].clone()).collect())
        .collect()
}

fn multisets(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        for mut rest in multisets(&values[i..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn epsilon_suite() -> Result<Suite> {
    let mut count = 0;
    for twice in (-19i64..=19).step_by(2) {
        let a = HalfInt::from_twice(twice);
        let expected = if twice > 0 { Sign::Plus } else { Sign::Minus };
        if arch_epsilon(a)? != expected {
            return Ok(Err(format!("eps(z^{a}) != {expected}")));
        }
        count += 1;
    }
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        for alpha in TameChar::all_conjugate_symplectic(q)? {
            let expected = Sign::from_parity(alpha.conductor() as i64 + 1);
            if tame_epsilon(&alpha)? != expected || tame_epsilon_by_twist(&alpha)? != expected {
                return Ok(Err(format!("q={q} alpha={alpha}: expected {expected}")));
            }
            count += 1;
        }
        for beta in TameChar::all_conjugate_orthogonal(q)? {
            if conjugate_orthogonal_epsilon(&beta)? != Sign::Plus {
                return Ok(Err(format!("q={q} beta={beta}: expected +1")));
            }
            count += 1;
        }
    }
    Ok(Ok(count))
}

fn arch_pairs(bound: HalfInt) -> Vec<ParamPair> {
    let b = bound.twice_value();
    let halves: Vec<HalfInt> = (-b..=b).filter(|t| t.rem_euclid(2) == 1).map(HalfInt::from_twice).collect();
    let ints: Vec<HalfInt> = (-b..=b).filter(|t| t.rem_euclid(2) == 0).map(HalfInt::from_twice).collect();
    let ns = subsets(&ints, MAX_SUMMANDS);
    let mut out = Vec::new();
    for m in subsets(&halves, MAX_SUMMANDS) {
        for n in &ns {
            out.push(ParamPair::arch(m.clone(), n.clone()));
        }
    }
    out
}

fn tame_pairs() -> Result<Vec<ParamPair>> {
    let mut out = Vec::new();
    for q in TAME_QS {
        let sym = TameChar::all_conjugate_symplectic(q)?;
        let orth = TameChar::all_conjugate_orthogonal(q)?;
        let ns = subsets(&orth, MAX_SUMMANDS);
        for m in subsets(&sym, MAX_SUMMANDS) {
            for n in &ns {
                let mut reversed = m.clone();
                reversed.reverse();
                out.push(ParamPair::tame(m.clone(), n.clone()));
                out.push(ParamPair::tame(reversed, n.clone()));
            }
        }
    }
    Ok(out)
}

fn dist_char_suite(arch_bound: HalfInt) -> Result<Suite> {
    let mut count = 0;
    for p in arch_pairs(arch_bound) {
        if chi_arch(&p)? != chi_general_from_epsilons(&p)? {
            return Ok(Err(format!("{p}: negative-count and root-number paths differ")));
        }
        count += 1;
    }
    for p in tame_pairs()? {
        let t = chi_tame(&p)?;
        let g = chi_general_from_epsilons(&p)?;
        if t.in_original_order() != g {
            return Ok(Err(format!("{p}: matched-pair and root-number paths differ")));
        }
        let expected = Sign::from_parity(t.p_count as i64);
        if g.central_m() != expected || g.central_n() != expected {
            return Ok(Err(format!("{p}: central values differ from (-1)^{}", t.p_count)));
        }
        count += 1;
    }
    Ok(Ok(count))
}

fn real_packet_suite() -> Result<Suite> {
    let mut count = 0;
    for n in 1..=8usize {
        for mask in 0u32..(1 << n) {
            let signs: Vec<Sign> = (0..n).map(|i| Sign::from_parity(i64::from(mask >> i & 1))).collect();
            let chi = SignChar::new("e", signs);
            let simple = compact_simple_roots(&chi);
            for i in 0..n {
                for j in i + 1..n {
                    // e_i - e_j is a sum of simple roots; it is compact iff an
                    // even number of them are noncompact.
                    let noncompact = simple[i..j].iter().filter(|&&c| !c).count();
                    if compact_general_root(&chi, i, j)? != (noncompact % 2 == 0) {
                        return Ok(Err(format!("chi={:?}: root ({i},{j}) disagrees with simple roots", chi.signs())));
                    }
                }
            }
            let sig = infer_signature(&chi);
            if sig.dimension() != n || sig.is_definite() != simple.iter().all(|&c| c) {
                return Ok(Err(format!("chi={:?}: signature {sig}", chi.signs())));
            }
            count += 1;
        }
    }
    Ok(Ok(count))
}

fn compact_suite(bound: HalfInt) -> Result<Suite> {
    let report = cross_validate(bound, &[1, 2, 3, 4])?;
    Ok(match report.counterexamples.first() {
        None => Ok(report.instances()),
        Some(c) => Err(format!(
            "{:?} at lambda={:?} mu={:?}",
            c.kind,
            c.params.lambda().iter().map(ToString::to_string).collect::<Vec<_>>(),
            c.params.mu().iter().map(ToString::to_string).collect::<Vec<_>>()
        )),
    })
}

fn in_bounds(n: usize, q: u32) -> bool {
    gl_order(n, q).is_some_and(|o| o <= MAX_GROUP_ORDER)
}

fn gl_suite() -> Result<Suite> {
    let mut count = 0;
    for q in [2u32, 3, 5] {
        let chars: Vec<u32> = (0..q - 1).collect();
        for n in (1..=4).filter(|&n| in_bounds(n, q)) {
            for mu_exps in subsets(&chars, n - 1).into_iter().filter(|s| s.len() == n - 1) {
                let mu = ProductRep::principal_series(q, &mu_exps);
                let chi_mu = oracle_induced_character(&mu_exps, q)?;
                for pi_exps in multisets(&chars, n) {
                    let pi = ProductRep::principal_series(q, &pi_exps);
                    let chi_pi = oracle_induced_character(&pi_exps, q)?;
                    let (formula, oracle) = (hom_multiplicity(&pi, &mu)?, oracle_hom_dimension(&chi_pi, &chi_mu)?);
                    if formula != oracle {
                        return Ok(Err(format!("q={q} pi={pi} mu={mu}: formula {formula}, oracle {oracle}")));
                    }
                    count += 1;
                }
            }
        }
    }
    for q in [2u32, 3] {
        let chars: Vec<u32> = (0..q - 1).collect();
        for n in 1..=3 {
            for exps in multisets(&chars, n) {
                let pi = ProductRep::principal_series(q, &exps);
                let chi = oracle_induced_character(&exps, q)?;
                let lhs = restrict_to_corner(&chi)?;
                let mut rhs = ClassFunction::zero(lhs.group().clone());
                for term in restriction_terms(&pi)? {
                    let te = term
                        .factors
                        .principal_exponents()
                        .ok_or_else(|| Error::Internal("principal series produced a non-principal term".into()))?;
                    rhs = rhs.add(&oracle_term_character(&te, term.gg_rank, q, 1)?)?;
                }
                let residue = lhs.max_residue(&rhs)?;
                if residue >= 1e-6 {
                    return Ok(Err(format!("q={q} pi={pi}: restriction residue {residue:e}")));
                }
                for k in 0..=n {
                    let symbolic: u128 = derivative_multiset(&pi, k)?.iter().map(ProductRep::dimension).sum();
                    let oracle = oracle_derivative_dimension(&chi, k, 1)?;
                    if symbolic != u128::from(oracle) {
                        return Ok(Err(format!("q={q} pi={pi} k={k}: derivative {symbolic} vs oracle {oracle}")));
                    }
                }
                count += 1;
            }
        }
    }
    Ok(Ok(count))
}

fn unitary_suite() -> Result<Suite> {
    let mut count = 0;
    for p in tame_pairs()? {
        let d = distinguished_embedding(&p)?;
        let (w, w0) = d.quotients();
        if w.p != d.p_count || w0.p != d.p_count {
            return Ok(Err(format!("{p}: quotients {w}, {w0} with p = {}", d.p_count)));
        }
        if p.m_summands.len() % 2 != p.n_summands.len() % 2 {
            let t = theorem31_consistency(&p)?;
            if !t.passed {
                return Ok(Err(format!("{p}: {}", t.detail)));
            }
        }
        count += 1;
    }
    Ok(Ok(count))
}

pub fn verify_all(bound: Option<HalfInt>, r: &mut Report) -> Result<()> {
    if bound.is_some_and(|b| b.is_negative()) {
        return Err(Error::InvalidParameter("bound must be nonnegative".into()));
    }
    let arch_bound = bound.unwrap_or(DEFAULT_ARCH_BOUND);
    let compact_bound = bound.unwrap_or(DEFAULT_COMPACT_BOUND);
    r.row("bound.arch", arch_bound, "sweep-bound");
    r.row("bound.compact", compact_bound, "sweep-bound");
    let suites: [(&str, &'static str, Result<Suite>); 6] = [
        ("epsilon", "closed-form-root-numbers", epsilon_suite()),
        ("dist-char", "path-equality+central-value", dist_char_suite(arch_bound)),
        ("real-packet", "compact-root-pattern", real_packet_suite()),
        ("compact-branch", "interlacing=alternating-pattern", compact_suite(compact_bound)),
        ("gl-branch", "multiplicity-product-rule=character-oracle", gl_suite()),
        ("unitary-depth0", "base-change-disjointness", unitary_suite()),
    ];
    let mut failures = 0;
    for (name, rule, outcome) in suites {
        match outcome? {
            Ok(count) => {
                r.row(format!("{name}.instances"), count, rule);
                r.check(name, true, rule);
            }
            Err(detail) => {
                failures += 1;
                r.row(format!("{name}.first-failure"), detail, rule);
                r.check(name, false, rule);
            }
        }
    }
    r.row("failures", failures, "summary");
    Ok(())
}
