//! Two-valued signs and sign characters of elementary abelian 2-groups.

use std::fmt;
use std::ops::{Mul, Neg};

/// A value in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn product<I: IntoIterator<Item = Sign>>(iter: I) -> Sign {
        iter.into_iter().fold(Sign::Plus, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A character of `A = (Z/2)^k`, given by its values on the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignChar {
    signs: Vec<Sign>,
    labels: Vec<String>,
}

impl SignChar {
    /// Labels generators `{prefix}1 .. {prefix}k`.
    pub fn new(prefix: &str, signs: Vec<Sign>) -> Self {
        let labels = (1..=signs.len()).map(|i| format!("{prefix}{i}")).collect();
        SignChar { signs, labels }
    }

    pub fn with_labels(signs: Vec<Sign>, labels: Vec<String>) -> Self {
        assert_eq!(signs.len(), labels.len(), "one label per generator");
        SignChar { signs, labels }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.signs.len()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.signs[i]
    }

    /// Value on the central element `-1`, the sum of all generators.
    pub fn evaluate_on_minus_one(&self) -> Sign {
        Sign::product(self.signs.iter().copied())
    }

    /// Value on the element whose generator coefficients are `coeffs`.
    pub fn evaluate(&self, coeffs: &[bool]) -> Sign {
        assert_eq!(coeffs.len(), self.signs.len());
        Sign::product(
            self.signs
                .iter()
                .zip(coeffs)
                .filter(|(_, &c)| c)
                .map(|(&s, _)| s),
        )
    }

    pub fn minus_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_minus()).count()
    }

    /// Reorders generators so that position `k` holds old generator `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> SignChar {
        SignChar {
            signs: order.iter().map(|&i| self.signs[i]).collect(),
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

impl fmt::Display for SignChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .labels
            .iter()
            .zip(&self.signs)
            .map(|(l, s)| format!("{l}:{s}"))
            .collect();
        write!(f, "({})", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_parity(-3), Sign::Minus);
        assert_eq!(Sign::from_parity(-2), Sign::Plus);
        assert_eq!(Sign::from_i32(0), None);
    }

    #[test]
    fn central_value_is_product_of_generators() {
        let chi = SignChar::new("e", vec![Sign::Minus, Sign::Minus, Sign::Plus]);
        assert_eq!(chi.evaluate_on_minus_one(), Sign::Plus);
        assert_eq!(chi.evaluate(&[true, true, true]), chi.evaluate_on_minus_one());
        assert_eq!(chi.evaluate(&[true, false, false]), Sign::Minus);
        assert_eq!(chi.minus_count(), 2);
        assert_eq!(SignChar::new("f", vec![]).evaluate_on_minus_one(), Sign::Plus);
    }
}
