//! Branching from `GL_n(F_q)` to `GL_{n-1}(F_q)` for products of cuspidals.
//!
//! The symbolic side works with cuspidal labels only: derivatives follow the
//! Leibnitz rule with the cuspidal base case (`pi^0 = pi`, `pi^d = 1`, all
//! other derivatives vanish), restriction is a sum of
//! `pi_{i_1} x ... x pi_{i_s} x Sigma[n - 1 - deg]`, and the Hom dimension
//! into a product of distinct cuspidals `mu_1 x ... x mu_s` is
//! `prod (1 + m_i)` with `m_i` the multiplicity of `mu_i` among the `pi`'s.
//!
//! [`oracle`] recomputes the same quantities for principal series by brute
//! force over the group.

pub mod class_fn;
pub mod group;
pub mod matrix;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use class_fn::{exact_integer, ClassFunction, INTEGRALITY_TOLERANCE};
pub use group::{gl_order, GlGroup, GroupId, MAX_GROUP_ORDER};
pub use oracle::{
    oracle_derivative_dimension, oracle_gelfand_graev_character, oracle_hom_dimension,
    oracle_induced_character, oracle_term_character, restrict_to_corner,
};

/// An irreducible cuspidal representation of `GL_degree(F_q)`, identified
/// only by its label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalLabel {
    pub degree: usize,
    pub id: String,
    pub q: u32,
}

impl CuspidalLabel {
    pub fn new(degree: usize, id: impl Into<String>, q: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("cuspidal degree must be positive".into()));
        }
        Ok(CuspidalLabel { degree, id: id.into(), q })
    }

    /// The character of `F_q^x = GL_1(F_q)` with the given exponent on a
    /// fixed generator. Exponents are reduced mod `q - 1`.
    pub fn principal(q: u32, exponent: u32) -> Self {
        let e = exponent % (q - 1).max(1);
        CuspidalLabel { degree: 1, id: e.to_string(), q }
    }

    /// The exponent of a label built by [`CuspidalLabel::principal`].
    pub fn principal_exponent(&self) -> Option<u32> {
        if self.degree != 1 {
            return None;
        }
        self.id.parse().ok()
    }

    /// `prod_{j=1}^{d-1} (q^j - 1)`.
    pub fn dimension(&self) -> u128 {
        (1..self.degree as u32).map(|j| (self.q as u128).pow(j) - 1).product()
    }
}

impl fmt::Display for CuspidalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "{}", self.id)
        } else {
            write!(f, "{}:{}", self.id, self.degree)
        }
    }
}

/// `pi_1 x ... x pi_r`, stored as a sorted multiset of cuspidal labels.
/// The empty product is the trivial representation of `GL_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductRep {
    q: u32,
    factors: Vec<CuspidalLabel>,
}

impl ProductRep {
    pub fn new(q: u32, mut factors: Vec<CuspidalLabel>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.q != q) {
            return Err(Error::InvalidParameter(format!(
                "factor {f} is over F_{} but the product is over F_{q}",
                f.q
            )));
        }
        factors.sort();
        Ok(ProductRep { q, factors })
    }

    pub fn trivial(q: u32) -> Self {
        ProductRep { q, factors: Vec::new() }
    }

    pub fn principal_series(q: u32, exponents: &[u32]) -> Self {
        ProductRep::new(q, exponents.iter().map(|&e| CuspidalLabel::principal(q, e)).collect())
            .expect("uniform q")
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn factors(&self) -> &[CuspidalLabel] {
        &self.factors
    }

    /// Total degree `n`.
    pub fn n(&self) -> usize {
        self.factors.iter().map(|f| f.degree).sum()
    }

    /// Multiplicity of each distinct label.
    pub fn multiplicities(&self) -> BTreeMap<&CuspidalLabel, usize> {
        let mut m = BTreeMap::new();
        for f in &self.factors {
            *m.entry(f).or_insert(0) += 1;
        }
        m
    }

    pub fn has_distinct_factors(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] != w[1])
    }

    /// Exponents of an all-principal product, in factor order.
    pub fn principal_exponents(&self) -> Option<Vec<u32>> {
        self.factors.iter().map(CuspidalLabel::principal_exponent).collect()
    }

    /// `[GL_n : P] * prod dim(pi_i)`, where the index is
    /// `prod_{j<=n}(q^j-1) / prod_i prod_{j<=n_i}(q^j-1)`.
    pub fn dimension(&self) -> u128 {
        let q = self.q as u128;
        let qfact = |m: usize| -> u128 { (1..=m as u32).map(|j| q.pow(j) - 1).product() };
        let index = qfact(self.n()) / self.factors.iter().map(|f| qfact(f.degree)).product::<u128>();
        index * self.factors.iter().map(CuspidalLabel::dimension).product::<u128>()
    }

    fn subproduct(&self, keep: impl Fn(usize) -> bool) -> ProductRep {
        ProductRep {
            q: self.q,
            factors: (0..self.factors.len())
                .filter(|&i| keep(i))
                .map(|i| self.factors[i].clone())
                .collect(),
        }
    }
}

impl fmt::Display for ProductRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// One summand `pi_{i_1} x ... x pi_{i_s} x Sigma[gg_rank]` of a restriction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictionTerm {
    pub factors: ProductRep,
    pub gg_rank: usize,
}

impl fmt::Display for RestrictionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.factors().is_empty() {
            write!(f, "Sigma[{}]", self.gg_rank)
        } else {
            write!(f, "{} x Sigma[{}]", self.factors, self.gg_rank)
        }
    }
}

fn index_subsets(len: usize) -> impl Iterator<Item = u64> {
    assert!(len < 64, "too many factors");
    0..(1u64 << len)
}

/// Composition factors of the `k`-th derivative of `pi`: for every subset
/// of factors of total degree `k`, the product of the remaining factors.
pub fn derivative_multiset(pi: &ProductRep, k: usize) -> Result<Vec<ProductRep>> {
    if k > pi.n() {
        return Err(Error::InvalidParameter(format!(
            "derivative order {k} exceeds n = {}",
            pi.n()
        )));
    }
    let mut out: Vec<ProductRep> = index_subsets(pi.factors.len())
        .filter(|mask| {
            let deg: usize = (0..pi.factors.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pi.factors[i].degree)
                .sum();
            deg == k
        })
        .map(|mask| pi.subproduct(|i| mask >> i & 1 == 0))
        .collect();
    out.sort();
    Ok(out)
}

/// The summands of `pi|_{GL_{n-1}}`: every subsequence of factors with
/// total degree below `n`, completed by a Gelfand-Graev factor.
pub fn restriction_terms(pi: &ProductRep) -> Result<Vec<RestrictionTerm>> {
    let n = pi.n();
    if n == 0 {
        return Err(Error::InvalidParameter("cannot restrict from GL_0".into()));
    }
    let mut out: Vec<RestrictionTerm> = index_subsets(pi.factors.len())
        .filter_map(|mask| {
            let factors = pi.subproduct(|i| mask >> i & 1 == 1);
            let deg = factors.n();
            (deg < n).then(|| RestrictionTerm { factors, gg_rank: n - 1 - deg })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `dim Hom_{GL_{n-1}}(pi, mu) = prod_i (1 + m_i)` for `mu` a product of
/// pairwise distinct cuspidals of total degree `n - 1`.
pub fn hom_multiplicity(pi: &ProductRep, mu: &ProductRep) -> Result<u64> {
    if pi.q != mu.q {
        return Err(Error::InvalidParameter("pi and mu over different fields".into()));
    }
    if mu.n() + 1 != pi.n() {
        return Err(Error::InvalidParameter(format!(
            "mu has degree {} but pi has degree {}",
            mu.n(),
            pi.n()
        )));
    }
    if !mu.has_distinct_factors() {
        return Err(Error::Precondition("the factors of mu must be pairwise distinct".into()));
    }
    let mult = pi.multiplicities();
    Ok(mu
        .factors
        .iter()
        .map(|m| 1 + mult.get(m).copied().unwrap_or(0) as u64)
        .product())
}

/// `2^d` with `d = |supp(pi) ∩ supp(mu)|`; requires both sides multiplicity free.
pub fn hom_multiplicity_distinct(pi: &ProductRep, mu: &ProductRep) -> Result<u64> {
    if !pi.has_distinct_factors() {
        return Err(Error::Precondition("the factors of pi must be pairwise distinct".into()));
    }
    hom_multiplicity(pi, mu)?;
    let d = mu.factors.iter().filter(|m| pi.factors.contains(m)).count();
    Ok(1u64 << d)
}

/// Multiplicity one exactly when the supports are disjoint.
pub fn supports_disjoint(pi: &ProductRep, mu: &ProductRep) -> bool {
    !mu.factors.iter().any(|m| pi.factors.contains(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(id: &str, deg: usize) -> CuspidalLabel {
        CuspidalLabel::new(deg, id, 3).unwrap()
    }

    fn prod(f: &[(&str, usize)]) -> ProductRep {
        ProductRep::new(3, f.iter().map(|&(i, d)| lab(i, d)).collect()).unwrap()
    }

    #[test]
    fn cuspidal_derivatives() {
        let pi = prod(&[("c", 3)]);
        assert_eq!(derivative_multiset(&pi, 0).unwrap(), vec![pi.clone()]);
        assert_eq!(derivative_multiset(&pi, 3).unwrap(), vec![ProductRep::trivial(3)]);
        assert!(derivative_multiset(&pi, 1).unwrap().is_empty());
        assert!(derivative_multiset(&pi, 2).unwrap().is_empty());
        assert!(derivative_multiset(&pi, 4).is_err());
    }

    #[test]
    fn leibnitz_on_two_characters() {
        let pi = prod(&[("a", 1), ("b", 1)]);
        assert_eq!(
            derivative_multiset(&pi, 1).unwrap(),
            vec![prod(&[("a", 1)]), prod(&[("b", 1)])]
        );
        let pi = prod(&[("a", 1), ("a", 1)]);
        assert_eq!(derivative_multiset(&pi, 1).unwrap().len(), 2);
    }

    #[test]
    fn restriction_examples() {
        let pi = prod(&[("a", 1), ("b", 1)]);
        let terms = restriction_terms(&pi).unwrap();
        let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["Sigma[1]", "a x Sigma[0]", "b x Sigma[0]"]);

        let pi = prod(&[("c", 4)]);
        assert_eq!(
            restriction_terms(&pi).unwrap(),
            vec![RestrictionTerm { factors: ProductRep::trivial(3), gg_rank: 3 }]
        );

        let terms = restriction_terms(&prod(&[("a", 1)])).unwrap();
        assert_eq!(terms, vec![RestrictionTerm { factors: ProductRep::trivial(3), gg_rank: 0 }]);
    }

    #[test]
    fn restriction_term_degrees() {
        let pi = prod(&[("a", 1), ("c", 2), ("a", 1), ("d", 3)]);
        for t in restriction_terms(&pi).unwrap() {
            assert_eq!(t.factors.n() + t.gg_rank, pi.n() - 1);
        }
    }

    #[test]
    fn multiplicity_examples() {
        let a = ("a", 1);
        assert_eq!(hom_multiplicity(&prod(&[a, ("b", 1)]), &prod(&[a])).unwrap(), 2);
        assert_eq!(hom_multiplicity_distinct(&prod(&[a, ("b", 1)]), &prod(&[a])).unwrap(), 2);
        assert_eq!(hom_multiplicity(&prod(&[a, a]), &prod(&[a])).unwrap(), 3);
        assert_eq!(hom_multiplicity(&prod(&[("c", 2), ("d", 1)]), &prod(&[("e", 2)])).unwrap(), 1);
        assert!(supports_disjoint(&prod(&[("c", 2), ("d", 1)]), &prod(&[("e", 2)])));
    }

    #[test]
    fn multiplicity_preconditions() {
        let a = ("a", 1);
        assert!(matches!(
            hom_multiplicity(&prod(&[a, a, a]), &prod(&[a, a])),
            Err(Error::Precondition(_))
        ));
        assert!(hom_multiplicity(&prod(&[a, a]), &prod(&[a, a])).is_err());
        assert!(hom_multiplicity_distinct(&prod(&[a, a]), &prod(&[a])).is_err());
        let other = ProductRep::new(5, vec![CuspidalLabel::new(1, "a", 5).unwrap()]).unwrap();
        assert!(hom_multiplicity(&prod(&[a, a]), &other).is_err());
    }

    #[test]
    fn dimensions() {
        // GL_2(F_3): principal series q + 1, cuspidal q - 1.
        assert_eq!(prod(&[("a", 1), ("b", 1)]).dimension(), 4);
        assert_eq!(prod(&[("c", 2)]).dimension(), 2);
        // [GL_3 : P_{2,1}] = (q^3 - 1)/(q - 1) = 13, times dim of the cuspidal.
        assert_eq!(prod(&[("c", 2), ("a", 1)]).dimension(), 26);
        assert_eq!(ProductRep::trivial(3).dimension(), 1);
    }

    #[test]
    fn principal_labels() {
        let l = CuspidalLabel::principal(5, 6);
        assert_eq!(l.principal_exponent(), Some(2));
        assert_eq!(CuspidalLabel::principal(2, 3).principal_exponent(), Some(0));
        assert_eq!(lab("c", 2).principal_exponent(), None);
    }
}
