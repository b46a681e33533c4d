//! The distinguished character `chi = chi_M x chi_N` on `A_M x A_N`,
//! computed from root numbers of the products `alpha_i beta_j`.

use crate::epsilon::{arch_epsilon, root_number, tame_epsilon, AdditiveCharVariant};
use crate::error::{Error, Result};
use crate::half_int::HalfInt;
use crate::params::{FieldCase, ParamPair, Side, Summand};
use crate::sign::{Sign, SignChar};
use crate::tame::product_is_mu;

/// A character of `A_M x A_N`, as its restrictions to the two factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedChar {
    pub chi_e: SignChar,
    pub chi_f: SignChar,
}

impl DistinguishedChar {
    /// `chi(-1, 1)`.
    pub fn central_m(&self) -> Sign {
        self.chi_e.evaluate_on_minus_one()
    }

    /// `chi(1, -1)`.
    pub fn central_n(&self) -> Sign {
        self.chi_f.evaluate_on_minus_one()
    }
}

/// Output of [`chi_tame`]. Generators are listed in the reordered positions;
/// `order_m[k]` / `order_n[k]` give the caller's index of position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameDistinguished {
    pub chi: DistinguishedChar,
    pub p_count: usize,
    pub order_m: Vec<usize>,
    pub order_n: Vec<usize>,
}

impl TameDistinguished {
    /// The same character with generators back in the caller's order.
    pub fn in_original_order(&self) -> DistinguishedChar {
        DistinguishedChar {
            chi_e: SignChar::new("e", unpermute(self.chi.chi_e.signs(), &self.order_m)),
            chi_f: SignChar::new("f", unpermute(self.chi.chi_f.signs(), &self.order_n)),
        }
    }
}

fn unpermute(signs: &[Sign], order: &[usize]) -> Vec<Sign> {
    let mut out = vec![Sign::Plus; signs.len()];
    for (pos, &orig) in order.iter().enumerate() {
        out[orig] = signs[pos];
    }
    out
}

fn require_case(p: &ParamPair, case: FieldCase) -> Result<()> {
    if p.field_case != case {
        return Err(Error::Precondition(format!(
            "expected a {case} parameter, got {}",
            p.field_case
        )));
    }
    p.ensure_valid()
}

fn arch_lists(p: &ParamPair) -> Result<(Vec<HalfInt>, Vec<HalfInt>)> {
    require_case(p, FieldCase::Archimedean)?;
    p.arch_exponents()
        .ok_or_else(|| Error::Internal("validated archimedean pair has tame summands".into()))
}

/// `chi(e_i) = (-1)^{#{r : a_i + b_r < 0}}`, `chi(f_j) = (-1)^{#{r : a_r + b_j < 0}}`.
pub fn chi_arch(p: &ParamPair) -> Result<DistinguishedChar> {
    let (a, b) = arch_lists(p)?;
    let negatives = |x: HalfInt, others: &[HalfInt]| {
        others
            .iter()
            .filter(|&&y| {
                let s = x + y;
                debug_assert!(s != HalfInt::ZERO, "half-integer plus integer is never zero");
                s.is_negative()
            })
            .count() as i64
    };
    let chi_e = a.iter().map(|&ai| Sign::from_parity(negatives(ai, &b))).collect();
    let chi_f = b.iter().map(|&bj| Sign::from_parity(negatives(bj, &a))).collect();
    Ok(DistinguishedChar {
        chi_e: SignChar::new("e", chi_e),
        chi_f: SignChar::new("f", chi_f),
    })
}

fn strictly_descending(v: &[HalfInt]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

/// `chi(e_i) chi(e_j) = (-1)^{m_ij}` with `m_ij = #{r : a_i + b_r > 0 > a_j + b_r}`
/// (side `M`), or the analogous `n_ij` with the roles of `a` and `b` swapped
/// (side `N`). Both lists must be strictly descending; indices are 0-based.
pub fn chi_arch_pairwise(p: &ParamPair, side: Side, i: usize, j: usize) -> Result<Sign> {
    let (a, b) = arch_lists(p)?;
    if !strictly_descending(&a) || !strictly_descending(&b) {
        return Err(Error::Precondition(
            "summands must be sorted in strictly descending order".into(),
        ));
    }
    let (this, other) = match side {
        Side::M => (&a, &b),
        Side::N => (&b, &a),
    };
    if i >= this.len() || j >= this.len() {
        return Err(Error::InvalidParameter(format!(
            "index out of range for {} generators",
            this.len()
        )));
    }
    if i > j {
        return Err(Error::Precondition(format!("expected i <= j, got ({i}, {j})")));
    }
    let count = other
        .iter()
        .filter(|&&r| (this[i] + r).is_positive() && (this[j] + r).is_negative())
        .count();
    Ok(Sign::from_parity(count as i64))
}

/// The reordering computation in the tame case: order the summands so
/// that `alpha_k beta_k = mu` exactly for `k < p`; then `chi` is `-1` on the
/// first `p` generators of each side and `+1` elsewhere.
pub fn chi_tame(p: &ParamPair) -> Result<TameDistinguished> {
    require_case(p, FieldCase::UnramifiedTame)?;
    let (alphas, betas) = p
        .tame_chars()
        .ok_or_else(|| Error::Internal("validated tame pair has archimedean summands".into()))?;

    let mut partner: Vec<Option<usize>> = vec![None; alphas.len()];
    let mut beta_taken: Vec<Option<usize>> = vec![None; betas.len()];
    for (i, a) in alphas.iter().enumerate() {
        for (j, b) in betas.iter().enumerate() {
            if !product_is_mu(a, b)? {
                continue;
            }
            if let Some(prev) = partner[i].replace(j) {
                return Err(Error::Internal(format!(
                    "M[{i}] pairs to mu with both N[{prev}] and N[{j}]"
                )));
            }
            if let Some(prev) = beta_taken[j].replace(i) {
                return Err(Error::Internal(format!(
                    "N[{j}] pairs to mu with both M[{prev}] and M[{i}]"
                )));
            }
        }
    }

    let matched: Vec<(usize, usize)> = partner
        .iter()
        .enumerate()
        .filter_map(|(i, pj)| pj.map(|j| (i, j)))
        .collect();
    let p_count = matched.len();
    let order_m: Vec<usize> = matched
        .iter()
        .map(|&(i, _)| i)
        .chain((0..alphas.len()).filter(|&i| partner[i].is_none()))
        .collect();
    let order_n: Vec<usize> = matched
        .iter()
        .map(|&(_, j)| j)
        .chain((0..betas.len()).filter(|&j| beta_taken[j].is_none()))
        .collect();

    let signs = |len: usize| -> Vec<Sign> {
        (0..len)
            .map(|k| if k < p_count { Sign::Minus } else { Sign::Plus })
            .collect()
    };
    let labels = |prefix: &str, order: &[usize]| -> Vec<String> {
        order.iter().map(|&i| format!("{prefix}{}", i + 1)).collect()
    };
    Ok(TameDistinguished {
        chi: DistinguishedChar {
            chi_e: SignChar::with_labels(signs(alphas.len()), labels("e", &order_m)),
            chi_f: SignChar::with_labels(signs(betas.len()), labels("f", &order_n)),
        },
        p_count,
        order_m,
        order_n,
    })
}

fn product_summand(x: &Summand, y: &Summand) -> Result<Summand> {
    match (x, y) {
        (Summand::Arch(a), Summand::Arch(b)) => Ok(Summand::Arch(*a + *b)),
        (Summand::Tame(a), Summand::Tame(b)) => Ok(Summand::Tame(a.checked_mul(b)?)),
        _ => Err(Error::Unsupported(format!("product of {x} and {y} mixes field cases"))),
    }
}

/// `chi(e_i) = prod_k eps(alpha_i beta_k, psi0)`, `chi(f_j) = prod_k eps(alpha_k beta_j, psi0)`,
/// one root number at a time.
pub fn chi_general_from_epsilons(p: &ParamPair) -> Result<DistinguishedChar> {
    p.ensure_valid()?;
    let psi = match p.field_case {
        FieldCase::Archimedean => AdditiveCharVariant::ARCH,
        FieldCase::UnramifiedTame => AdditiveCharVariant::TAME,
    };
    let eps = |x: &Summand, y: &Summand| -> Result<Sign> { root_number(&product_summand(x, y)?, psi) };

    let mut chi_e = Vec::with_capacity(p.m_summands.len());
    for a in &p.m_summands {
        let mut s = Sign::Plus;
        for b in &p.n_summands {
            s = s * eps(a, b)?;
        }
        chi_e.push(s);
    }
    let mut chi_f = Vec::with_capacity(p.n_summands.len());
    for b in &p.n_summands {
        let mut s = Sign::Plus;
        for a in &p.m_summands {
            s = s * eps(a, b)?;
        }
        chi_f.push(s);
    }
    Ok(DistinguishedChar {
        chi_e: SignChar::new("e", chi_e),
        chi_f: SignChar::new("f", chi_f),
    })
}

/// Root number of a single product, exposed for reporting.
pub fn product_epsilon(alpha: &Summand, beta: &Summand) -> Result<Sign> {
    match product_summand(alpha, beta)? {
        Summand::Arch(a) => arch_epsilon(a),
        Summand::Tame(t) => tame_epsilon(&t),
    }
}
