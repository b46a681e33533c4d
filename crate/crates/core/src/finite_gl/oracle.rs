//! Brute-force characters of `GL_n(F_p)`: induction from linear characters
//! of subgroups, summed over the whole group. Used to check the closed-form
//! multiplicities independently.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use super::class_fn::{exact_integer, ClassFunction};
use super::group::GlGroup;
use super::matrix::{Mat, PrimeField};
use crate::error::{Error, Result};

fn root_of_unity(num: u64, den: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (num % den) as f64 / den as f64)
}

/// `x -> exp(2 pi i e dlog(x) / (p - 1))` on `F_p^x`.
pub fn multiplicative_char(field: &PrimeField, exponent: u32, x: u8) -> Complex64 {
    let order = field.p() as u64 - 1;
    root_of_unity(exponent as u64 * field.dlog(x) as u64, order)
}

/// `x -> exp(2 pi i e x / p)` on `F_p`.
pub fn additive_char(field: &PrimeField, exponent: u32, x: u8) -> Complex64 {
    root_of_unity(exponent as u64 * x as u64, field.p() as u64)
}

/// `Ind_H^G lambda` for the subgroup `H = {g : lambda(g) is Some}` and a
/// linear character `lambda` on it:
/// `(1/|H|) sum_{x in G, x^-1 g x in H} lambda(x^-1 g x)`.
pub fn induce_linear<F>(group: &Arc<GlGroup>, lambda: F) -> Result<ClassFunction>
where
    F: Fn(&Mat) -> Option<Complex64> + Sync,
{
    let h_order = group.elements().par_iter().filter(|m| lambda(m).is_some()).count();
    if h_order == 0 {
        return Err(Error::Internal("inducing from an empty subset".into()));
    }
    let values: Vec<Complex64> = group
        .classes()
        .par_iter()
        .map(|c| {
            let g = group.element(c.rep);
            let sum: Complex64 = (0..group.order())
                .filter_map(|x| lambda(&group.conjugate(g, x)))
                .sum();
            sum / h_order as f64
        })
        .collect();
    ClassFunction::new(Arc::clone(group), values)
}

/// Character of `Ind_B^{GL_n}(chi_1 ⊗ ... ⊗ chi_n)` with `chi_i` the
/// `F_q^x`-character of exponent `exponents[i]` and `n = exponents.len()`.
pub fn oracle_induced_character(exponents: &[u32], q: u32) -> Result<ClassFunction> {
    let group = GlGroup::get(exponents.len(), q)?;
    let field = group.field().clone();
    induce_linear(&group, |m| {
        m.is_upper_triangular().then(|| {
            exponents
                .iter()
                .enumerate()
                .map(|(i, &e)| multiplicative_char(&field, e, m.get(i, i)))
                .product()
        })
    })
}

/// Character of `Ind_{Q}^{GL_{s+m}}` where `Q` is the upper-triangular
/// group whose last `m` diagonal entries are 1, with character
/// `prod_{i<s} chi_{e_i}(d_i) * psi0(sum of superdiagonal entries in the
/// last m x m block)`. This is `chi_{e_1} x ... x chi_{e_s} x Sigma[m]`, by
/// transitivity of induction.
pub fn oracle_term_character(exponents: &[u32], gg_rank: usize, q: u32, psi0_exponent: u32) -> Result<ClassFunction> {
    let s = exponents.len();
    let n = s + gg_rank;
    if gg_rank >= 2 && psi0_exponent.is_multiple_of(q) {
        return Err(Error::Precondition("psi0 must be nontrivial".into()));
    }
    let group = GlGroup::get(n, q)?;
    let field = group.field().clone();
    induce_linear(&group, |m| {
        if !m.is_upper_triangular() || (s..n).any(|i| m.get(i, i) != 1) {
            return None;
        }
        let torus: Complex64 = exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| multiplicative_char(&field, e, m.get(i, i)))
            .product();
        let super_diag = (s..n.saturating_sub(1)).map(|i| m.get(i, i + 1) as u32).sum::<u32>() % q;
        Some(torus * additive_char(&field, psi0_exponent, super_diag as u8))
    })
}

/// Character of the Gelfand-Graev representation `Ind_{N_m}^{GL_m} psi_m`,
/// `psi_m(u) = psi0(u_12 + ... + u_{m-1,m})`.
pub fn oracle_gelfand_graev_character(m: usize, q: u32, psi0_exponent: u32) -> Result<ClassFunction> {
    if psi0_exponent.is_multiple_of(q) {
        return Err(Error::Precondition("psi0 must be a nontrivial character of F_q".into()));
    }
    oracle_term_character(&[], m, q, psi0_exponent)
}

/// Restriction along `A -> diag(A, 1)` from `GL_n` to `GL_{n-1}`.
pub fn restrict_to_corner(chi: &ClassFunction) -> Result<ClassFunction> {
    let big = chi.group();
    if big.n() == 0 {
        return Err(Error::InvalidParameter("cannot restrict from GL_0".into()));
    }
    let small = GlGroup::get(big.n() - 1, big.q())?;
    let values = small
        .classes()
        .iter()
        .map(|c| {
            let e = small.element(c.rep).embed_upper_left();
            let idx = big.index_of(&e).expect("embedded element is invertible");
            chi.value_at_index(idx)
        })
        .collect();
    ClassFunction::new(small, values)
}

/// `dim Hom_{GL_{n-1}}(chi_big|, chi_small)` by summing over `GL_{n-1}`.
pub fn oracle_hom_dimension(chi_big: &ClassFunction, chi_small: &ClassFunction) -> Result<u64> {
    let (b, s) = (chi_big.group_id(), chi_small.group_id());
    if b.q != s.q || b.n != s.n + 1 {
        return Err(Error::InvalidParameter(format!("cannot pair {b} with {s}")));
    }
    let restricted = restrict_to_corner(chi_big)?;
    let d = exact_integer(restricted.inner(chi_small)?)?;
    u64::try_from(d).map_err(|_| Error::Internal(format!("negative multiplicity {d}")))
}

/// Dimension of the `k`-th derivative: the multiplicity of `psi_k` in the
/// restriction of `chi` to `V_k = {[[1_{n-k}, v], [0, z]] : z in N_k}`.
pub fn oracle_derivative_dimension(chi: &ClassFunction, k: usize, psi0_exponent: u32) -> Result<u64> {
    let group = chi.group();
    let n = group.n();
    if k > n {
        return Err(Error::InvalidParameter(format!("derivative order {k} exceeds n = {n}")));
    }
    let q = group.q();
    let r = n - k;
    let field = group.field();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut count = 0usize;
    for (i, m) in group.elements().iter().enumerate() {
        let in_vk = m.is_upper_triangular()
            && (0..n).all(|a| m.get(a, a) == 1)
            && (0..r).all(|a| (a + 1..r).all(|b| m.get(a, b) == 0));
        if !in_vk {
            continue;
        }
        let super_diag = (r..n.saturating_sub(1)).map(|a| m.get(a, a + 1) as u32).sum::<u32>() % q;
        sum += chi.value_at_index(i) * additive_char(field, psi0_exponent, super_diag as u8).conj();
        count += 1;
    }
    let d = exact_integer(sum / count as f64)?;
    u64::try_from(d).map_err(|_| Error::Internal(format!("negative dimension {d}")))
}
