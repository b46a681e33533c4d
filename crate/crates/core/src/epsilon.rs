//! Local root numbers of conjugate-symplectic characters.
//!
//! Only two closed forms are available: the archimedean one for
//! `(zbar/z)^a` with `psi0 = exp(2 pi (zbar - z))`, and the unramified one for
//! tame characters with `psi0` of level `-1`. Anything else is an error.

use std::fmt;

use crate::error::{Error, Result};
use crate::half_int::HalfInt;
use crate::params::Summand;
use crate::sign::Sign;
use crate::tame::TameChar;

/// The two fixed normalizations of the additive character `psi0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdditiveCharVariant {
    /// `psi0(z) = exp(2 pi (zbar - z))` on `C`, trivial on `R`.
    ArchimedeanStandard { scale_note: Option<(i64, i64)> },
    /// Trivial on `k0` and on the maximal ideal, nontrivial on the integers.
    UnramifiedLevelMinusOne { scale_note: Option<(i64, i64)> },
}

impl AdditiveCharVariant {
    pub const ARCH: AdditiveCharVariant = AdditiveCharVariant::ArchimedeanStandard { scale_note: None };
    pub const TAME: AdditiveCharVariant =
        AdditiveCharVariant::UnramifiedLevelMinusOne { scale_note: None };

    /// Level `n(psi0)`; only meaningful for the non-archimedean variant.
    pub fn level(&self) -> Option<i32> {
        match self {
            AdditiveCharVariant::ArchimedeanStandard { .. } => None,
            AdditiveCharVariant::UnramifiedLevelMinusOne { .. } => Some(-1),
        }
    }

    pub fn scale_note(&self) -> Option<(i64, i64)> {
        match *self {
            AdditiveCharVariant::ArchimedeanStandard { scale_note }
            | AdditiveCharVariant::UnramifiedLevelMinusOne { scale_note } => scale_note,
        }
    }
}

impl fmt::Display for AdditiveCharVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AdditiveCharVariant::ArchimedeanStandard { .. } => "arch-standard",
            AdditiveCharVariant::UnramifiedLevelMinusOne { .. } => "unramified-level-minus-one",
        };
        match self.scale_note() {
            Some((n, d)) => write!(f, "{name} (scaled by {n}/{d})"),
            None => f.write_str(name),
        }
    }
}

/// `epsilon((zbar/z)^a, psi0)`: the sign of `a`.
pub fn arch_epsilon(a: HalfInt) -> Result<Sign> {
    if !a.is_strict_half() {
        return Err(Error::Precondition(format!(
            "(zbar/z)^{a} is conjugate-orthogonal, not conjugate-symplectic"
        )));
    }
    Ok(if a.is_positive() { Sign::Plus } else { Sign::Minus })
}

/// `epsilon(alpha, psi0) = (-1)^(f(alpha) + 1)` for tame conjugate-symplectic `alpha`.
pub fn tame_epsilon(alpha: &TameChar) -> Result<Sign> {
    if !alpha.is_conjugate_symplectic() {
        return Err(Error::Precondition(format!("{alpha} is not conjugate-symplectic")));
    }
    Ok(Sign::from_parity(alpha.conductor() as i64 + 1))
}

/// `mu(pi^(f(beta) + n(psi0)))` for the unramified quadratic `mu`.
pub fn unramified_twist_epsilon(beta_conductor: u32, n_psi: i32) -> Sign {
    Sign::from_parity(beta_conductor as i64 + n_psi as i64)
}

/// Root number of a conjugate-orthogonal tame character against any `psi0`
/// trivial on `k0`.
pub fn conjugate_orthogonal_epsilon(beta: &TameChar) -> Result<Sign> {
    if !beta.is_conjugate_orthogonal() {
        return Err(Error::Precondition(format!("{beta} is not conjugate-orthogonal")));
    }
    Ok(Sign::Plus)
}

/// Second route to [`tame_epsilon`]: write `alpha = beta * mu` and apply the
/// unramified twist rule `eps(beta mu) = eps(beta) * mu(pi^(f(beta) + n(psi0)))`.
pub fn tame_epsilon_by_twist(alpha: &TameChar) -> Result<Sign> {
    if !alpha.is_conjugate_symplectic() {
        return Err(Error::Precondition(format!("{alpha} is not conjugate-symplectic")));
    }
    // mu is its own inverse.
    let beta = alpha.checked_mul(&TameChar::mu(alpha.q())?)?;
    let level = AdditiveCharVariant::TAME.level().expect("non-archimedean level");
    Ok(conjugate_orthogonal_epsilon(&beta)? * unramified_twist_epsilon(beta.conductor(), level))
}

/// Root number of a one-dimensional conjugate-symplectic summand.
pub fn root_number(s: &Summand, psi: AdditiveCharVariant) -> Result<Sign> {
    match (s, psi) {
        (Summand::Arch(a), AdditiveCharVariant::ArchimedeanStandard { .. }) => arch_epsilon(*a),
        (Summand::Tame(t), AdditiveCharVariant::UnramifiedLevelMinusOne { .. }) => tame_epsilon(t),
        _ => Err(Error::Unsupported(format!(
            "no closed form for {s} against additive character {psi}"
        ))),
    }
}
