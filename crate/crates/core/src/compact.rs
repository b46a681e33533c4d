//! Branching for compact `U(n) ⊂ U(n+1)` against root numbers.
//!
//! A finite-dimensional representation of `U(n)` is recorded by
//! `lambda_1 < ... < lambda_n` and one of `U(n+1)` by `mu_1 < ... < mu_{n+1}`.
//! The `lambda_i` are strict half-integers for even `n` and integers for odd
//! `n`; the `mu_i` lie in the other class. Branching is nonzero exactly when
//!
//! ```text
//! mu_1 < lambda_1 < mu_2 < lambda_2 < ... < lambda_n < mu_{n+1}
//! ```
//!
//! and then `eps(chi_{mu_k} ⊗ sigma_0) = (-1)^(n-k+1)` for every `k`
//! (1-based), with total sign `(-1)^(n(n+1)/2)`. The `k` arguments below are
//! 0-based, so the per-`k` pattern reads `(-1)^(n-k)`.

use rayon::prelude::*;

use crate::epsilon::arch_epsilon;
use crate::error::{Error, Result};
use crate::half_int::HalfInt;
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactParams {
    lambda: Vec<HalfInt>,
    mu: Vec<HalfInt>,
}

impl CompactParams {
    pub fn new(lambda: Vec<HalfInt>, mu: Vec<HalfInt>) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if mu.len() != n + 1 {
            return Err(Error::InvalidParameter(format!(
                "U({}) parameter needs {} entries, got {}",
                n + 1,
                n + 1,
                mu.len()
            )));
        }
        let increasing = |v: &[HalfInt]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&lambda) || !increasing(&mu) {
            return Err(Error::InvalidParameter("entries must strictly increase".into()));
        }
        let lambda_half = n.is_multiple_of(2);
        if lambda.iter().any(|l| l.is_strict_half() != lambda_half) {
            return Err(parity_error("lambda", n, lambda_half));
        }
        if mu.iter().any(|m| m.is_strict_half() == lambda_half) {
            return Err(parity_error("mu", n, !lambda_half));
        }
        Ok(CompactParams { lambda, mu })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[HalfInt] {
        &self.lambda
    }

    pub fn mu(&self) -> &[HalfInt] {
        &self.mu
    }

    /// The parameter with every entry negated (and the lists re-sorted).
    pub fn negated(&self) -> CompactParams {
        CompactParams {
            lambda: self.lambda.iter().rev().map(|&x| -x).collect(),
            mu: self.mu.iter().rev().map(|&x| -x).collect(),
        }
    }
}

fn parity_error(name: &str, n: usize, want_half: bool) -> Error {
    let class = if want_half { "strict half-integers" } else { "integers" };
    Error::InvalidParameter(format!("for n = {n} the {name} entries must be {class}"))
}

/// `mu_1 < lambda_1 < mu_2 < ... < lambda_n < mu_{n+1}`.
pub fn interlaces(p: &CompactParams) -> bool {
    p.lambda
        .iter()
        .enumerate()
        .all(|(i, &l)| p.mu[i] < l && l < p.mu[i + 1])
}

/// The root number of `(zbar/z)^a` for `2a` odd; the same rule as
/// [`arch_epsilon`].
pub fn lemma_epsilon_char(exponent: HalfInt) -> Result<Sign> {
    if !exponent.is_strict_half() {
        return Err(Error::Precondition(format!(
            "exponent {exponent} has even double; the sign rule needs 2a odd"
        )));
    }
    arch_epsilon(exponent)
}

/// `eps(chi_{mu_k} ⊗ sigma_0) = prod_i eps(mu_k - lambda_i)`, `k` 0-based.
pub fn per_k_epsilon(p: &CompactParams, k: usize) -> Result<Sign> {
    let mu_k = *p.mu.get(k).ok_or_else(|| {
        Error::InvalidParameter(format!("k = {k} out of range 0..{}", p.mu.len()))
    })?;
    let mut s = Sign::Plus;
    for &l in &p.lambda {
        let d = mu_k - l;
        if d == HalfInt::ZERO {
            return Err(Error::Internal(format!("degenerate parameter: mu = lambda = {l}")));
        }
        s = s * arch_epsilon(d)?;
    }
    Ok(s)
}

/// The sign `(-1)^(n-k)` (0-based `k`) expected of an interlacing pair.
pub fn expected_per_k(n: usize, k: usize) -> Sign {
    Sign::from_parity(n as i64 - k as i64)
}

pub fn total_epsilon(p: &CompactParams) -> Result<Sign> {
    (0..p.mu.len()).try_fold(Sign::Plus, |acc, k| Ok(acc * per_k_epsilon(p, k)?))
}

/// `+1` for `n ≡ 0, 3 (mod 4)`, `-1` for `n ≡ 1, 2 (mod 4)`.
pub fn quasi_split_sign_table(n: usize) -> Sign {
    match n % 4 {
        0 | 3 => Sign::Plus,
        _ => Sign::Minus,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CounterexampleKind {
    /// Interlacing, but some per-k sign or the total sign is off.
    InterlacingWithoutPattern,
    /// Every per-k sign matches, yet the pair does not interlace.
    PatternWithoutInterlacing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: CompactParams,
    pub kind: CounterexampleKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RankCounts {
    pub n: usize,
    pub instances: usize,
    pub interlacing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossValidationReport {
    pub bound: HalfInt,
    pub per_rank: Vec<RankCounts>,
    pub counterexamples: Vec<Counterexample>,
}

impl CrossValidationReport {
    pub fn instances(&self) -> usize {
        self.per_rank.iter().map(|r| r.instances).sum()
    }

    pub fn interlacing(&self) -> usize {
        self.per_rank.iter().map(|r| r.interlacing).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Values `x` with `|x| <= bound` in the requested class, ascending.
fn values_in_class(bound: HalfInt, half: bool) -> Vec<HalfInt> {
    let b = bound.twice_value();
    (-b..=b)
        .filter(|t| (t.rem_euclid(2) == 1) == half)
        .map(HalfInt::from_twice)
        .collect()
}

fn increasing_tuples(values: &[HalfInt], len: usize) -> Vec<Vec<HalfInt>> {
    fn go(values: &[HalfInt], start: usize, len: usize, cur: &mut Vec<HalfInt>, out: &mut Vec<Vec<HalfInt>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = len - cur.len();
        for i in start..=values.len().saturating_sub(remaining) {
            if i >= values.len() {
                break;
            }
            cur.push(values[i]);
            go(values, i + 1, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, 0, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Checks one instance; returns a counterexample if either direction fails.
pub fn check_instance(p: &CompactParams) -> Result<Option<CounterexampleKind>> {
    let n = p.n();
    let mut pattern = true;
    for k in 0..=n {
        if per_k_epsilon(p, k)? != expected_per_k(n, k) {
            pattern = false;
        }
    }
    if interlaces(p) {
        let total_ok = total_epsilon(p)? == quasi_split_sign_table(n)
            && quasi_split_sign_table(n) == Sign::from_parity((n * (n + 1) / 2) as i64);
        if !pattern || !total_ok {
            return Ok(Some(CounterexampleKind::InterlacingWithoutPattern));
        }
    } else if pattern {
        return Ok(Some(CounterexampleKind::PatternWithoutInterlacing));
    }
    Ok(None)
}

/// Enumerates every valid parameter with entries in `[-bound, bound]` and
/// rank `n` in `ranks`, checking interlacing against the root-number pattern
/// in both directions.
pub fn cross_validate(bound: HalfInt, ranks: &[usize]) -> Result<CrossValidationReport> {
    let mut report = CrossValidationReport { bound, ..Default::default() };
    if bound.is_negative() {
        return Ok(report);
    }
    for &n in ranks {
        if n == 0 {
            return Err(Error::InvalidParameter("rank n must be positive".into()));
        }
        let lambda_half = n % 2 == 0;
        let lambdas = increasing_tuples(&values_in_class(bound, lambda_half), n);
        let mus = increasing_tuples(&values_in_class(bound, !lambda_half), n + 1);
        let results: Vec<(usize, usize, Vec<Counterexample>)> = lambdas
            .par_iter()
            .map(|lambda| -> Result<_> {
                let mut interlacing = 0;
                let mut bad = Vec::new();
                for mu in &mus {
                    let p = CompactParams::new(lambda.clone(), mu.clone())?;
                    if interlaces(&p) {
                        interlacing += 1;
                    }
                    if let Some(kind) = check_instance(&p)? {
                        bad.push(Counterexample { params: p, kind });
                    }
                }
                Ok((mus.len(), interlacing, bad))
            })
            .collect::<Result<_>>()?;
        let mut counts = RankCounts { n, ..Default::default() };
        for (inst, inter, bad) in results {
            counts.instances += inst;
            counts.interlacing += inter;
            report.counterexamples.extend(bad);
        }
        report.per_rank.push(counts);
    }
    Ok(report)
}
