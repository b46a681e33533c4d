//! Real-place discrete-series packet data: Harish-Chandra parameters in
//! descending order, the compactness pattern of roots read off from `chi`,
//! and the signature it determines.
//!
//! Indices are 0-based. The signature is returned as an unordered pair
//! because the compactness pattern fixes the two blocks but not which of
//! them is the positive one.

use std::fmt;

use crate::distinguished::chi_arch;
use crate::error::{Error, Result};
use crate::half_int::HalfInt;
use crate::params::{FieldCase, ParamPair};
use crate::sign::{Sign, SignChar};

/// Unordered pair `{p, q}`, stored with `larger >= smaller`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub larger: usize,
    pub smaller: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Signature { larger: p.max(q), smaller: p.min(q) }
    }

    pub fn dimension(&self) -> usize {
        self.larger + self.smaller
    }

    pub fn is_definite(&self) -> bool {
        self.smaller == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.larger, self.smaller)
    }
}

/// Entry `i` is true iff `e_i - e_{i+1}` is compact, i.e. `chi(e_i) chi(e_{i+1}) = -1`.
pub fn compact_simple_roots(chi: &SignChar) -> Vec<bool> {
    chi.signs().windows(2).map(|w| (w[0] * w[1]).is_minus()).collect()
}

/// For `i < j`, `e_i - e_j` is compact iff `chi(e_i) chi(e_j) = (-1)^(i+j)`.
pub fn compact_general_root(chi: &SignChar, i: usize, j: usize) -> Result<bool> {
    if i >= j {
        return Err(Error::InvalidParameter(format!("root e_{i} - e_{j} needs i < j")));
    }
    if j >= chi.rank() {
        return Err(Error::InvalidParameter(format!(
            "index {j} out of range for {} generators",
            chi.rank()
        )));
    }
    Ok(chi.get(i) * chi.get(j) == Sign::from_parity((i + j) as i64))
}

/// `t_i = chi(e_i) (-1)^i`; coordinates with equal `t` share a block.
pub fn block_signs(chi: &SignChar) -> Vec<Sign> {
    chi.signs()
        .iter()
        .enumerate()
        .map(|(i, &s)| s * Sign::from_parity(i as i64))
        .collect()
}

pub fn infer_signature(chi: &SignChar) -> Signature {
    let t = block_signs(chi);
    let plus = t.iter().filter(|&&s| s == Sign::Plus).count();
    Signature::new(plus, t.len() - plus)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchPacketDatum {
    pub sorted_a: Vec<HalfInt>,
    pub sorted_b: Vec<HalfInt>,
    pub chi_e: SignChar,
    pub chi_f: SignChar,
    pub compact_simple_e: Vec<bool>,
    pub compact_simple_f: Vec<bool>,
    pub signature_e: Signature,
    pub signature_f: Signature,
}

impl ArchPacketDatum {
    /// Sorts both exponent lists descending and reads off the packet data of
    /// the distinguished member.
    pub fn from_params(p: &ParamPair) -> Result<Self> {
        if p.field_case != FieldCase::Archimedean {
            return Err(Error::Precondition("real packets need an archimedean parameter".into()));
        }
        p.ensure_valid()?;
        let (mut a, mut b) = p
            .arch_exponents()
            .ok_or_else(|| Error::Internal("archimedean pair with tame summands".into()))?;
        a.sort_by(|x, y| y.cmp(x));
        b.sort_by(|x, y| y.cmp(x));
        let chi = chi_arch(&ParamPair::arch(a.clone(), b.clone()))?;
        Ok(ArchPacketDatum {
            compact_simple_e: compact_simple_roots(&chi.chi_e),
            compact_simple_f: compact_simple_roots(&chi.chi_f),
            signature_e: infer_signature(&chi.chi_e),
            signature_f: infer_signature(&chi.chi_f),
            sorted_a: a,
            sorted_b: b,
            chi_e: chi.chi_e,
            chi_f: chi.chi_f,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn chi(s: &[Sign]) -> SignChar {
        SignChar::new("e", s.to_vec())
    }

    #[test]
    fn simple_root_examples() {
        assert_eq!(compact_simple_roots(&chi(&[Plus, Minus, Plus])), [true, true]);
        assert_eq!(compact_simple_roots(&chi(&[Plus, Plus])), [false]);
        assert_eq!(compact_simple_roots(&chi(&[Minus, Minus, Plus])), [false, true]);
        assert!(compact_simple_roots(&chi(&[Plus])).is_empty());
    }

    #[test]
    fn general_root_examples() {
        assert!(compact_general_root(&chi(&[Plus, Minus]), 0, 1).unwrap());
        assert!(!compact_general_root(&chi(&[Plus, Plus]), 0, 1).unwrap());
        assert!(compact_general_root(&chi(&[Plus, Plus]), 1, 1).is_err());
        assert!(compact_general_root(&chi(&[Plus, Plus]), 1, 0).is_err());
        assert!(compact_general_root(&chi(&[Plus, Plus]), 0, 2).is_err());
    }

    #[test]
    fn signature_examples() {
        // chi(e_i) = (-1)^i in 1-based numbering: (-1, +1, -1, +1).
        assert_eq!(infer_signature(&chi(&[Minus, Plus, Minus, Plus])), Signature::new(4, 0));
        assert_eq!(infer_signature(&chi(&[Plus, Plus])), Signature::new(1, 1));
        assert_eq!(infer_signature(&chi(&[Minus])), Signature::new(1, 0));
        assert_eq!(infer_signature(&chi(&[Plus])), Signature::new(1, 0));
    }

    #[test]
    fn blocks_match_compactness_exhaustively() {
        for n in 1..=8usize {
            for mask in 0u32..(1 << n) {
                let signs: Vec<Sign> =
                    (0..n).map(|i| if mask >> i & 1 == 1 { Minus } else { Plus }).collect();
                let c = chi(&signs);
                let t = block_signs(&c);
                for j in 0..n {
                    for i in 0..j {
                        assert_eq!(compact_general_root(&c, i, j).unwrap(), t[i] == t[j]);
                    }
                    if j + 1 < n {
                        assert_eq!(
                            compact_simple_roots(&c)[j],
                            compact_general_root(&c, j, j + 1).unwrap()
                        );
                    }
                }
                let negated = SignChar::new("e", signs.iter().map(|&s| -s).collect());
                assert_eq!(infer_signature(&negated), infer_signature(&c));
                assert_eq!(infer_signature(&c).dimension(), n);
            }
        }
    }

    #[test]
    fn datum_sorts_and_checks_lengths() {
        let h = |s: &str| s.parse::<HalfInt>().unwrap();
        let p = ParamPair::arch(vec![h("-3/2"), h("1/2")], vec![h("-1"), h("1")]);
        let d = ArchPacketDatum::from_params(&p).unwrap();
        assert_eq!(d.sorted_a, [h("1/2"), h("-3/2")]);
        assert_eq!(d.sorted_b, [h("1"), h("-1")]);
        assert_eq!(d.chi_e.signs(), [Minus, Plus]);
        assert_eq!(d.compact_simple_e, [true]);
        assert_eq!(d.signature_e.dimension(), 2);
        assert_eq!(d.signature_f.dimension(), 2);
    }
}
