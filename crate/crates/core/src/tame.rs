//! Tame characters of the multiplicative group of the unramified quadratic
//! extension `k` of a non-archimedean field `k0` with residue field `F_q`.
//!
//! A tame character is determined by its restriction to the residue units
//! `mu_{q^2-1}` (an exponent on a fixed generator) and its value at a fixed
//! uniformizer of `k0`, which is also a uniformizer of `k`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest residue field size accepted; keeps every unit group enumerable.
pub const MAX_Q: u32 = 9;

/// Returns `true` for prime powers `q` with `2 <= q <= MAX_Q`.
pub fn is_supported_q(q: u32) -> bool {
    matches!(q, 2 | 3 | 4 | 5 | 7 | 8 | 9)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The root of unity `exp(2 pi i num / den)`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };

    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("root of unity with order 0".into()));
        }
        let n = num.rem_euclid(den as i64) as u64;
        let g = gcd(n, den);
        Ok(RootOfUnity { num: n / g, den: den / g })
    }

    /// `(num, order)` in lowest terms.
    pub fn parts(self) -> (u64, u64) {
        (self.num, self.den)
    }

    pub fn order(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn is_minus_one(self) -> bool {
        self == Self::MINUS_ONE
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let den = self.den / gcd(self.den, rhs.den) * rhs.den;
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        RootOfUnity::new((num % den) as i64, den).expect("nonzero order")
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => f.write_str("1"),
            (1, 2) => f.write_str("-1"),
            (n, d) => write!(f, "e({n}/{d})"),
        }
    }
}

/// A tame (conductor at most one) character of `k^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameChar {
    q: u32,
    unit_exp: u32,
    unif_val: RootOfUnity,
}

impl TameChar {
    /// `unit_exp` is reduced modulo `q^2 - 1`.
    pub fn new(q: u32, unit_exp: i64, unif_val: RootOfUnity) -> Result<Self> {
        if !is_supported_q(q) {
            return Err(Error::InvalidParameter(format!(
                "q = {q} is not a prime power in 2..={MAX_Q}"
            )));
        }
        let order = (q * q - 1) as i64;
        Ok(TameChar {
            q,
            unit_exp: unit_exp.rem_euclid(order) as u32,
            unif_val,
        })
    }

    /// The unramified quadratic character: trivial on units, `-1` at the uniformizer.
    pub fn mu(q: u32) -> Result<Self> {
        Self::new(q, 0, RootOfUnity::MINUS_ONE)
    }

    pub fn trivial(q: u32) -> Result<Self> {
        Self::new(q, 0, RootOfUnity::ONE)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn unit_exp(&self) -> u32 {
        self.unit_exp
    }

    pub fn unif_val(&self) -> RootOfUnity {
        self.unif_val
    }

    /// Order of the residue unit group `mu_{q^2-1}`.
    pub fn unit_order(&self) -> u32 {
        self.q * self.q - 1
    }

    /// Value on `zeta^k` for the fixed generator `zeta` of `mu_{q^2-1}`.
    pub fn on_unit_power(&self, k: i64) -> RootOfUnity {
        let order = self.unit_order() as i64;
        RootOfUnity::new((self.unit_exp as i64 * k).rem_euclid(order), order as u64)
            .expect("nonzero order")
    }

    fn trivial_on_base_units(&self) -> bool {
        self.unit_exp.is_multiple_of(self.q - 1)
    }

    /// Trivial on `k0^x`.
    pub fn is_conjugate_orthogonal(&self) -> bool {
        self.trivial_on_base_units() && self.unif_val.is_one()
    }

    /// Restriction to `k0^x` is the unramified quadratic character of `k/k0`.
    pub fn is_conjugate_symplectic(&self) -> bool {
        self.trivial_on_base_units() && self.unif_val.is_minus_one()
    }

    /// 0 for unramified characters, 1 otherwise.
    pub fn conductor(&self) -> u32 {
        u32::from(self.unit_exp != 0)
    }

    pub fn checked_mul(&self, other: &TameChar) -> Result<TameChar> {
        if self.q != other.q {
            return Err(Error::InvalidParameter(format!(
                "characters over different residue fields (q = {} and q = {})",
                self.q, other.q
            )));
        }
        TameChar::new(
            self.q,
            self.unit_exp as i64 + other.unit_exp as i64,
            self.unif_val * other.unif_val,
        )
    }

    /// Every conjugate-orthogonal character of the residue field size `q`.
    pub fn all_conjugate_orthogonal(q: u32) -> Result<Vec<TameChar>> {
        Self::all_with_unif(q, RootOfUnity::ONE)
    }

    /// Every conjugate-symplectic character of residue field size `q`.
    pub fn all_conjugate_symplectic(q: u32) -> Result<Vec<TameChar>> {
        Self::all_with_unif(q, RootOfUnity::MINUS_ONE)
    }

    fn all_with_unif(q: u32, unif: RootOfUnity) -> Result<Vec<TameChar>> {
        if !is_supported_q(q) {
            return Err(Error::InvalidParameter(format!("unsupported q = {q}")));
        }
        (0..=q)
            .map(|j| TameChar::new(q, (j * (q - 1)) as i64, unif))
            .collect()
    }
}

impl fmt::Display for TameChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.unit_exp, self.unif_val)
    }
}

/// Whether `a * b` is the unramified quadratic character.
pub fn product_is_mu(a: &TameChar, b: &TameChar) -> Result<bool> {
    if a.q != b.q {
        return Err(Error::InvalidParameter(format!(
            "mismatched residue fields: q = {} and q = {}",
            a.q, b.q
        )));
    }
    if !a.is_conjugate_symplectic() {
        return Err(Error::Precondition(format!("{a} is not conjugate-symplectic")));
    }
    if !b.is_conjugate_orthogonal() {
        return Err(Error::Precondition(format!("{b} is not conjugate-orthogonal")));
    }
    Ok(a.checked_mul(b)? == TameChar::mu(a.q)?)
}
