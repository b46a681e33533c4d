//! Joint parameters `(M, N)` of `U(W) x U(W0)`: a multiplicity-free sum of
//! conjugate-symplectic characters and one of conjugate-orthogonal characters.

use std::fmt;

use crate::error::{Error, Result};
use crate::half_int::HalfInt;
use crate::tame::TameChar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCase {
    /// `k/k0 = C/R`; summands are `(zbar/z)^a`.
    Archimedean,
    /// `k/k0` unramified non-archimedean; summands are tame characters.
    UnramifiedTame,
}

impl fmt::Display for FieldCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldCase::Archimedean => "arch",
            FieldCase::UnramifiedTame => "tame",
        })
    }
}

/// One one-dimensional summand of a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Summand {
    /// The character `(zbar/z)^a`.
    Arch(HalfInt),
    Tame(TameChar),
}

impl Summand {
    pub fn as_arch(&self) -> Option<HalfInt> {
        match self {
            Summand::Arch(a) => Some(*a),
            Summand::Tame(_) => None,
        }
    }

    pub fn as_tame(&self) -> Option<&TameChar> {
        match self {
            Summand::Tame(t) => Some(t),
            Summand::Arch(_) => None,
        }
    }

    /// `(zbar/z)^a` is conjugate-symplectic iff `a` lies in `Z + 1/2`.
    pub fn is_conjugate_symplectic(&self) -> bool {
        match self {
            Summand::Arch(a) => a.is_strict_half(),
            Summand::Tame(t) => t.is_conjugate_symplectic(),
        }
    }

    pub fn is_conjugate_orthogonal(&self) -> bool {
        match self {
            Summand::Arch(a) => a.is_integer(),
            Summand::Tame(t) => t.is_conjugate_orthogonal(),
        }
    }

    fn case(&self) -> FieldCase {
        match self {
            Summand::Arch(_) => FieldCase::Archimedean,
            Summand::Tame(_) => FieldCase::UnramifiedTame,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Arch(a) => write!(f, "{a}"),
            Summand::Tame(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The conjugate-symplectic side, generators `e_i`.
    M,
    /// The conjugate-orthogonal side, generators `f_j`.
    N,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::M => "M",
            Side::N => "N",
        })
    }
}

/// A violated invariant of a [`ParamPair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongFieldCase { side: Side, index: usize },
    NotConjugateSymplectic { index: usize },
    NotConjugateOrthogonal { index: usize },
    Duplicate { side: Side, first: usize, second: usize },
    MixedResidueFields { side: Side, index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongFieldCase { side, index } => {
                write!(f, "{side}[{index}] belongs to the other field case")
            }
            Violation::NotConjugateSymplectic { index } => {
                write!(f, "M[{index}] is not conjugate-symplectic")
            }
            Violation::NotConjugateOrthogonal { index } => {
                write!(f, "N[{index}] is not conjugate-orthogonal")
            }
            Violation::Duplicate { side, first, second } => {
                write!(f, "{side}[{first}] and {side}[{second}] coincide (distinctness)")
            }
            Violation::MixedResidueFields { side, index } => {
                write!(f, "{side}[{index}] has a different residue field size")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPair {
    pub m_summands: Vec<Summand>,
    pub n_summands: Vec<Summand>,
    pub field_case: FieldCase,
}

impl ParamPair {
    pub fn arch(m: Vec<HalfInt>, n: Vec<HalfInt>) -> Self {
        ParamPair {
            m_summands: m.into_iter().map(Summand::Arch).collect(),
            n_summands: n.into_iter().map(Summand::Arch).collect(),
            field_case: FieldCase::Archimedean,
        }
    }

    pub fn tame(m: Vec<TameChar>, n: Vec<TameChar>) -> Self {
        ParamPair {
            m_summands: m.into_iter().map(Summand::Tame).collect(),
            n_summands: n.into_iter().map(Summand::Tame).collect(),
            field_case: FieldCase::UnramifiedTame,
        }
    }

    pub fn summands(&self, side: Side) -> &[Summand] {
        match side {
            Side::M => &self.m_summands,
            Side::N => &self.n_summands,
        }
    }

    /// Archimedean exponents `(a_i)`, `(b_j)`; `None` unless every summand is archimedean.
    pub fn arch_exponents(&self) -> Option<(Vec<HalfInt>, Vec<HalfInt>)> {
        let a = self.m_summands.iter().map(Summand::as_arch).collect::<Option<Vec<_>>>()?;
        let b = self.n_summands.iter().map(Summand::as_arch).collect::<Option<Vec<_>>>()?;
        Some((a, b))
    }

    pub fn tame_chars(&self) -> Option<(Vec<TameChar>, Vec<TameChar>)> {
        let a = self.m_summands.iter().map(|s| s.as_tame().copied()).collect::<Option<Vec<_>>>()?;
        let b = self.n_summands.iter().map(|s| s.as_tame().copied()).collect::<Option<Vec<_>>>()?;
        Some((a, b))
    }

    /// Every violated invariant; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        validate_param_pair(self)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(v))
        }
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[Summand]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} M={{{}}} N={{{}}}",
            self.field_case,
            join(&self.m_summands),
            join(&self.n_summands)
        )
    }
}

/// Checks the summand-type, residue-field and distinctness invariants.
pub fn validate_param_pair(p: &ParamPair) -> Vec<Violation> {
    let mut out = Vec::new();
    let q = p
        .m_summands
        .iter()
        .chain(&p.n_summands)
        .find_map(|s| s.as_tame().map(TameChar::q));

    for side in [Side::M, Side::N] {
        let list = p.summands(side);
        for (index, s) in list.iter().enumerate() {
            if s.case() != p.field_case {
                out.push(Violation::WrongFieldCase { side, index });
                continue;
            }
            if let (Some(q), Some(t)) = (q, s.as_tame()) {
                if t.q() != q {
                    out.push(Violation::MixedResidueFields { side, index });
                }
            }
            match side {
                Side::M if !s.is_conjugate_symplectic() => {
                    out.push(Violation::NotConjugateSymplectic { index })
                }
                Side::N if !s.is_conjugate_orthogonal() => {
                    out.push(Violation::NotConjugateOrthogonal { index })
                }
                _ => {}
            }
        }
        for second in 0..list.len() {
            for first in 0..second {
                if list[first] == list[second] {
                    out.push(Violation::Duplicate { side, first, second });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tame::RootOfUnity;

    fn h(s: &str) -> HalfInt {
        s.parse().unwrap()
    }

    #[test]
    fn valid_archimedean_pair() {
        let p = ParamPair::arch(vec![h("1/2")], vec![h("0")]);
        assert!(validate_param_pair(&p).is_empty());
    }

    #[test]
    fn integer_exponent_is_not_symplectic() {
        let p = ParamPair::arch(vec![h("1")], vec![]);
        assert_eq!(
            validate_param_pair(&p),
            vec![Violation::NotConjugateSymplectic { index: 0 }]
        );
        let p = ParamPair::arch(vec![], vec![h("1/2")]);
        assert_eq!(
            validate_param_pair(&p),
            vec![Violation::NotConjugateOrthogonal { index: 0 }]
        );
    }

    #[test]
    fn duplicate_tame_summand() {
        let a = TameChar::new(3, 2, RootOfUnity::MINUS_ONE).unwrap();
        let p = ParamPair::tame(vec![a, a], vec![]);
        assert_eq!(
            validate_param_pair(&p),
            vec![Violation::Duplicate { side: Side::M, first: 0, second: 1 }]
        );
        assert!(matches!(p.ensure_valid(), Err(Error::Validation(_))));
    }

    #[test]
    fn mixed_cases_and_fields() {
        let p = ParamPair {
            m_summands: vec![Summand::Arch(h("1/2"))],
            n_summands: vec![
                Summand::Tame(TameChar::trivial(3).unwrap()),
                Summand::Tame(TameChar::trivial(5).unwrap()),
            ],
            field_case: FieldCase::UnramifiedTame,
        };
        let v = validate_param_pair(&p);
        assert!(v.contains(&Violation::WrongFieldCase { side: Side::M, index: 0 }));
        assert!(v.contains(&Violation::MixedResidueFields { side: Side::N, index: 1 }));
    }
}
