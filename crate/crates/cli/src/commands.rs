//! Dispatch from a parsed job to the engines.

use std::collections::BTreeSet;

use branchlaw::arch_packet::ArchPacketDatum;
use branchlaw::compact::{
    check_instance, expected_per_k, interlaces, per_k_epsilon, quasi_split_sign_table, total_epsilon, CompactParams,
};
use branchlaw::distinguished::{chi_arch, chi_general_from_epsilons, chi_tame};
use branchlaw::epsilon::{arch_epsilon, conjugate_orthogonal_epsilon, tame_epsilon, tame_epsilon_by_twist};
use branchlaw::finite_gl::{
    hom_multiplicity, oracle_hom_dimension, oracle_induced_character, restriction_terms, supports_disjoint,
    CuspidalLabel, ProductRep,
};
use branchlaw::unitary::{distinguished_embedding, theorem31_consistency};
use branchlaw::{Error, ParamPair, Result, RootOfUnity, Sign, SignChar, TameChar};

use crate::job::{Command, JobSpec};
use crate::report::Report;
use crate::verify;

fn missing(key: &str) -> Error {
    Error::Internal(format!("validated job lacks {key:?}"))
}

fn to_u32(v: i64, key: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidParameter(format!("{key} = {v} must be a nonnegative integer")))
}

fn list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        return "(empty)".into();
    }
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run_job(job: &JobSpec) -> Result<Report> {
    let mut r = Report::new(job.clone());
    match job.command {
        Command::Epsilon => epsilon(job, &mut r)?,
        Command::DistChar => dist_char(job, &mut r)?,
        Command::RealPacket => real_packet(job, &mut r)?,
        Command::CompactBranch => compact_branch(job, &mut r)?,
        Command::GlBranch => gl_branch(job, &mut r)?,
        Command::UnitaryDepth0 => unitary_depth0(job, &mut r)?,
        Command::VerifyAll => verify::verify_all(job.half("bound"), &mut r)?,
    }
    Ok(r)
}

fn epsilon(job: &JobSpec, r: &mut Report) -> Result<()> {
    if job.word("case") == Some("arch") {
        let a = job.half("a").ok_or_else(|| missing("a"))?;
        r.row(format!("eps(z^{a})"), arch_epsilon(a)?, "arch-sign-rule");
        return Ok(());
    }
    let q = to_u32(job.int("q").ok_or_else(|| missing("q"))?, "q")?;
    let exp = job.int("exp").ok_or_else(|| missing("exp"))?;
    let unif = match job.word("unif") {
        Some("1") => RootOfUnity::ONE,
        _ => RootOfUnity::MINUS_ONE,
    };
    let alpha = TameChar::new(q, exp, unif)?;
    r.row("character", alpha, "tame-character");
    r.row("conductor", alpha.conductor(), "tame-conductor");
    if alpha.is_conjugate_orthogonal() {
        r.row("eps", conjugate_orthogonal_epsilon(&alpha)?, "conjugate-orthogonal-rule");
        return Ok(());
    }
    let direct = tame_epsilon(&alpha)?;
    let twist = tame_epsilon_by_twist(&alpha)?;
    r.row("eps", direct, "tame-conductor-rule");
    r.row("eps.twist", twist, "unramified-twist-rule");
    r.check("eps.agree", direct == twist, "tame-conductor-rule=unramified-twist-rule");
    Ok(())
}

fn tame_pair(job: &JobSpec) -> Result<ParamPair> {
    let q = to_u32(job.int("q").ok_or_else(|| missing("q"))?, "q")?;
    let chars = |key: &str, unif: RootOfUnity| -> Result<Vec<TameChar>> {
        job.ints(key)
            .ok_or_else(|| missing(key))?
            .iter()
            .map(|&e| TameChar::new(q, e, unif))
            .collect()
    };
    let p = ParamPair::tame(chars("m", RootOfUnity::MINUS_ONE)?, chars("n", RootOfUnity::ONE)?);
    p.ensure_valid()?;
    Ok(p)
}

fn arch_pair(job: &JobSpec) -> Result<ParamPair> {
    let m = job.halves("m").ok_or_else(|| missing("m"))?.to_vec();
    let n = job.halves("n").ok_or_else(|| missing("n"))?.to_vec();
    let p = ParamPair::arch(m, n);
    p.ensure_valid()?;
    Ok(p)
}

fn sign_rows(r: &mut Report, chi: &SignChar, rule: &'static str) {
    for (label, s) in chi.labels().iter().zip(chi.signs()) {
        r.row(format!("chi({label})"), s, rule);
    }
}

fn dist_char(job: &JobSpec, r: &mut Report) -> Result<()> {
    if job.word("case") == Some("arch") {
        let p = arch_pair(job)?;
        let chi = chi_arch(&p)?;
        sign_rows(r, &chi.chi_e, "negative-count-rule");
        sign_rows(r, &chi.chi_f, "negative-count-rule");
        r.row("chi(-1,1)", chi.central_m(), "central-value");
        r.row("chi(1,-1)", chi.central_n(), "central-value");
        let general = chi_general_from_epsilons(&p)?;
        r.check("paths.agree", general == chi, "negative-count-rule=root-number-product");
        return Ok(());
    }
    let p = tame_pair(job)?;
    let t = chi_tame(&p)?;
    let chi = t.in_original_order();
    for k in 0..t.p_count {
        r.row(
            format!("match.{k}"),
            format!("e{}*f{}=mu", t.order_m[k] + 1, t.order_n[k] + 1),
            "matched-pair-rule",
        );
    }
    sign_rows(r, &chi.chi_e, "matched-pair-rule");
    sign_rows(r, &chi.chi_f, "matched-pair-rule");
    r.row("p", t.p_count, "matched-pair-rule");
    r.row("chi(-1,1)", chi.central_m(), "central-value");
    r.row("chi(1,-1)", chi.central_n(), "central-value");
    let expected = Sign::from_parity(t.p_count as i64);
    r.check(
        "central.identity",
        chi.central_m() == expected && chi.central_n() == expected,
        "central-value=(-1)^p",
    );
    let general = chi_general_from_epsilons(&p)?;
    r.check("paths.agree", general == chi, "matched-pair-rule=root-number-product");
    Ok(())
}

fn real_packet(job: &JobSpec, r: &mut Report) -> Result<()> {
    let d = ArchPacketDatum::from_params(&arch_pair(job)?)?;
    r.row("a.sorted", list(&d.sorted_a), "descending-order");
    r.row("b.sorted", list(&d.sorted_b), "descending-order");
    sign_rows(r, &d.chi_e, "negative-count-rule");
    sign_rows(r, &d.chi_f, "negative-count-rule");
    for (side, compact) in [("e", &d.compact_simple_e), ("f", &d.compact_simple_f)] {
        for (i, &c) in compact.iter().enumerate() {
            let kind = if c { "compact" } else { "noncompact" };
            r.row(format!("root({side}{}-{side}{})", i + 1, i + 2), kind, "compact-root-pattern");
        }
    }
    r.row("signature.M", d.signature_e, "signature-from-blocks");
    r.row("signature.N", d.signature_f, "signature-from-blocks");
    Ok(())
}

fn compact_branch(job: &JobSpec, r: &mut Report) -> Result<()> {
    let lambda = job.halves("lambda").ok_or_else(|| missing("lambda"))?.to_vec();
    let mu = job.halves("mu").ok_or_else(|| missing("mu"))?.to_vec();
    if let Some(n) = job.int("n") {
        if n != lambda.len() as i64 {
            return Err(Error::InvalidParameter(format!("n = {n} but lambda has {} entries", lambda.len())));
        }
    }
    let p = CompactParams::new(lambda, mu)?;
    let n = p.n();
    r.row("interlaces", yes_no(interlaces(&p)), "interlacing");
    for k in 0..=n {
        let eps = per_k_epsilon(&p, k)?;
        r.row(format!("eps.{k}"), eps, "per-k-root-number");
        r.row(format!("eps.{k}.interlacing-value"), expected_per_k(n, k), "alternating-pattern");
    }
    r.row("eps.total", total_epsilon(&p)?, "per-k-root-number");
    r.row("sign-table", quasi_split_sign_table(n), "quasi-split-sign-table");
    r.check("interlacing<=>pattern", check_instance(&p)?.is_none(), "interlacing=alternating-pattern");
    Ok(())
}

fn labels(words: &[String], q: u32) -> Result<Vec<CuspidalLabel>> {
    words
        .iter()
        .map(|w| match w.split_once(':') {
            Some((id, d)) => {
                let degree = d.parse().map_err(|_| Error::InvalidParameter(format!("bad degree in {w}")))?;
                CuspidalLabel::new(degree, id, q)
            }
            None => CuspidalLabel::new(1, w.as_str(), q),
        })
        .collect()
}

fn gl_branch(job: &JobSpec, r: &mut Report) -> Result<()> {
    let q = job.int("q").map(|q| to_u32(q, "q")).transpose()?;
    let fq = q.unwrap_or(0);
    let pi_labels = labels(job.words("pi").ok_or_else(|| missing("pi"))?, fq)?;
    let mu_labels = labels(job.words("mu").ok_or_else(|| missing("mu"))?, fq)?;
    let pi = ProductRep::new(fq, pi_labels.clone())?;
    let mu = ProductRep::new(fq, mu_labels.clone())?;
    let mult = hom_multiplicity(&pi, &mu)?;
    r.row("pi", &pi, "input");
    r.row("mu", &mu, "input");
    r.row("supports.disjoint", yes_no(supports_disjoint(&pi, &mu)), "cuspidal-support");
    r.row("restriction.terms", restriction_terms(&pi)?.len(), "restriction-terms");
    r.row("dim.hom", mult, "multiplicity-product-rule");
    let Some(q) = q else {
        return Ok(());
    };
    if let Some(l) = pi_labels.iter().chain(&mu_labels).find(|l| l.degree != 1) {
        return Err(Error::Unsupported(format!(
            "the oracle handles principal series only; {l} has degree {}",
            l.degree
        )));
    }
    // distinct labels, in sorted order, become exponents 0, 1, 2, ...
    let distinct: BTreeSet<&str> = pi_labels.iter().chain(&mu_labels).map(|l| l.id.as_str()).collect();
    if distinct.len() > q.saturating_sub(1) as usize {
        return Err(Error::InvalidParameter(format!(
            "{} distinct characters requested but F_{q}^x has only {}",
            distinct.len(),
            q.saturating_sub(1)
        )));
    }
    let exponent = |l: &CuspidalLabel| distinct.iter().position(|&d| d == l.id).map(|i| i as u32);
    let exps = |ls: &[CuspidalLabel]| -> Vec<u32> { ls.iter().filter_map(exponent).collect() };
    for id in &distinct {
        r.row(format!("exponent({id})"), exponent(&CuspidalLabel::new(1, *id, q)?).unwrap_or(0), "label-order");
    }
    let chi_pi = oracle_induced_character(&exps(&pi_labels), q)?;
    let chi_mu = oracle_induced_character(&exps(&mu_labels), q)?;
    let oracle = oracle_hom_dimension(&chi_pi, &chi_mu)?;
    r.row("dim.hom.oracle", oracle, "character-oracle");
    r.check("dim.hom.agree", oracle == mult, "multiplicity-product-rule=character-oracle");
    Ok(())
}

fn unitary_depth0(job: &JobSpec, r: &mut Report) -> Result<()> {
    let p = tame_pair(job)?;
    let d = distinguished_embedding(&p)?;
    let (qw, qw0) = d.quotients();
    r.row("p", d.p_count, "matched-pair-rule");
    for (name, e, quot) in [("W", &d.for_w, qw), ("W0", &d.for_w0, qw0)] {
        r.row(format!("{name}.signs"), list(e.signs()), "depth-zero-embedding");
        r.row(format!("{name}.space"), e.space(), "discriminant-parity");
        r.row(format!("{name}.quotient"), quot, "reductive-quotient");
        r.row(format!("{name}.hyperspecial"), yes_no(quot.is_hyperspecial()), "reductive-quotient");
    }
    r.check("quotients.first-factor=p", qw.p == d.p_count && qw0.p == d.p_count, "reductive-quotient");
    let (n, m) = (p.m_summands.len(), p.n_summands.len());
    if n % 2 == m % 2 {
        r.row("residual.check", "not applicable (dimensions of equal parity)", "base-change-disjointness");
        return Ok(());
    }
    let t = theorem31_consistency(&p)?;
    r.row("residual.alpha", list(t.residual_alpha.labels()), "base-change-token");
    r.row("residual.beta", list(t.residual_beta.labels()), "base-change-token");
    r.row("residual.branching", t.branching, "base-change-disjointness");
    r.check("residual.parity", t.parity_ok, "shintani-parity");
    r.check("residual.disjoint", t.passed, "base-change-disjointness");
    Ok(())
}
