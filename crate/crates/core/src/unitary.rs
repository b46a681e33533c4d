//! Depth-zero packet bookkeeping for `U(V)` over a non-archimedean field and
//! the base-change disjointness criterion for `U_{n-1}(F_q) ⊂ U_n(F_q)`.
//!
//! Embeddings of the anisotropic torus `(U_1)^n` are classified by signs
//! `eps_i = (-1)^{ord <v_i, v_i>}` with `prod eps_i = (-1)^{ord disc V}`; the
//! lattice they determine has reductive quotient `U_p x U_{n-p}` where `p`
//! counts the minus signs.
//!
//! Base-change cuspidal supports are modeled as token multisets: an
//! `alpha` contributes its unit exponent, a `beta` the negated one, so two
//! tokens collide exactly when `alpha beta = mu`.

use std::collections::BTreeSet;
use std::fmt;

use crate::distinguished::chi_tame;
use crate::error::{Error, Result};
use crate::params::{FieldCase, ParamPair};
use crate::sign::{Sign, SignChar};
use crate::tame::TameChar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HermitianSpace {
    /// `(-1)^{ord disc} = +1`.
    V,
    /// `(-1)^{ord disc} = -1`.
    VPrime,
}

impl HermitianSpace {
    pub fn from_parity(s: Sign) -> Self {
        match s {
            Sign::Plus => HermitianSpace::V,
            Sign::Minus => HermitianSpace::VPrime,
        }
    }
}

impl fmt::Display for HermitianSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HermitianSpace::V => "V",
            HermitianSpace::VPrime => "V'",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    eps: Vec<Sign>,
    disc_ord_parity: Sign,
}

impl Embedding {
    pub fn new(eps: Vec<Sign>, disc_ord_parity: Sign) -> Result<Self> {
        if Sign::product(eps.iter().copied()) != disc_ord_parity {
            return Err(Error::InvalidParameter(
                "product of the signs must equal the discriminant parity".into(),
            ));
        }
        Ok(Embedding { eps, disc_ord_parity })
    }

    /// The embedding with the given signs, into whichever space they fit.
    pub fn from_signs(eps: Vec<Sign>) -> Self {
        let disc_ord_parity = Sign::product(eps.iter().copied());
        Embedding { eps, disc_ord_parity }
    }

    pub fn n(&self) -> usize {
        self.eps.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.eps
    }

    pub fn disc_ord_parity(&self) -> Sign {
        self.disc_ord_parity
    }

    pub fn space(&self) -> HermitianSpace {
        HermitianSpace::from_parity(self.disc_ord_parity)
    }

    /// `chi_f(e_i) = eps_i`.
    pub fn character(&self) -> SignChar {
        SignChar::new("e", self.eps.clone())
    }
}

/// All `2^n` torus embeddings, those into `V` first.
pub fn enumerate_packet(n: usize) -> Result<Vec<Embedding>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n >= 32 {
        return Err(Error::Resource(format!("2^{n} embeddings")));
    }
    let all: Vec<Embedding> = (0u64..1 << n)
        .map(|mask| {
            Embedding::from_signs(
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect(),
            )
        })
        .collect();
    let (mut v, vp): (Vec<_>, Vec<_>) = all.into_iter().partition(|e| e.space() == HermitianSpace::V);
    v.extend(vp);
    Ok(v)
}

/// `U_p x U_{n-p}` with `p = #{i : eps_i = -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReductiveQuotient {
    pub p: usize,
    pub rest: usize,
}

impl ReductiveQuotient {
    /// Hyperspecial iff one factor is everything.
    pub fn is_hyperspecial(&self) -> bool {
        self.p == 0 || self.rest == 0
    }
}

impl fmt::Display for ReductiveQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U_{} x U_{}", self.p, self.rest)
    }
}

pub fn reductive_quotient(e: &Embedding) -> ReductiveQuotient {
    let p = e.eps.iter().filter(|s| s.is_minus()).count();
    ReductiveQuotient { p, rest: e.n() - p }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedEmbedding {
    pub for_w: Embedding,
    pub for_w0: Embedding,
    pub p_count: usize,
}

impl DistinguishedEmbedding {
    pub fn quotients(&self) -> (ReductiveQuotient, ReductiveQuotient) {
        (reductive_quotient(&self.for_w), reductive_quotient(&self.for_w0))
    }
}

fn require_tame(p: &ParamPair) -> Result<()> {
    if p.field_case != FieldCase::UnramifiedTame {
        return Err(Error::Precondition("depth-zero packets need a tame parameter".into()));
    }
    Ok(())
}

/// Embeddings of the distinguished member, read off from `chi` via `eps_i = chi(e_i)`.
pub fn distinguished_embedding(p: &ParamPair) -> Result<DistinguishedEmbedding> {
    require_tame(p)?;
    let t = chi_tame(p)?;
    let out = DistinguishedEmbedding {
        for_w: Embedding::from_signs(t.chi.chi_e.signs().to_vec()),
        for_w0: Embedding::from_signs(t.chi.chi_f.signs().to_vec()),
        p_count: t.p_count,
    };
    let (qw, qw0) = out.quotients();
    if qw.p != t.p_count || qw0.p != t.p_count {
        return Err(Error::Internal(format!(
            "reductive quotients {qw}, {qw0} disagree with p = {}",
            t.p_count
        )));
    }
    Ok(out)
}

/// The cuspidal support of a quadratic base change, as opaque tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BaseChangeSupport {
    labels: Vec<u64>,
}

impl BaseChangeSupport {
    pub fn new(mut labels: Vec<u64>) -> Self {
        labels.sort_unstable();
        BaseChangeSupport { labels }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn dedup(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.dedup();
        BaseChangeSupport { labels }
    }

    fn as_set(&self) -> BTreeSet<u64> {
        self.labels.iter().copied().collect()
    }

    /// Support of `R(alpha)` for the unmatched `alpha`'s.
    pub fn from_symplectic(chars: &[TameChar]) -> Self {
        Self::new(chars.iter().map(|a| a.unit_exp() as u64).collect())
    }

    /// Support of the dual of `R(beta)` for the unmatched `beta`'s.
    pub fn from_orthogonal(chars: &[TameChar]) -> Self {
        Self::new(
            chars
                .iter()
                .map(|b| ((b.unit_order() - b.unit_exp()) % b.unit_order()) as u64)
                .collect(),
        )
    }
}

/// Hom dimension for `U_{n-1}(F_q) ⊂ U_n(F_q)`: 1 when the supports are
/// disjoint, 0 otherwise.
pub fn shintani_branching(s1: &BaseChangeSupport, s2: &BaseChangeSupport) -> u32 {
    u32::from(s1.as_set().is_disjoint(&s2.as_set()))
}

/// Parity consistency of `2 <chi'_1, chi'_2>_{GL ⋊ F} = gl_inner + un_inner`.
pub fn parity_argument_check(gl_inner: i64, un_inner: i64) -> bool {
    (gl_inner + un_inner).rem_euclid(2) == 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem31Report {
    pub p_count: usize,
    pub residual_alpha: BaseChangeSupport,
    pub residual_beta: BaseChangeSupport,
    pub branching: u32,
    pub parity_ok: bool,
    pub passed: bool,
    pub detail: String,
}

/// Checks the residual supports directly: the branching value must be 1,
/// and with the GL-side value 1 for disjoint supports the parity relation
/// must hold.
pub fn check_residual_supports(
    p_count: usize,
    residual_alpha: BaseChangeSupport,
    residual_beta: BaseChangeSupport,
) -> Theorem31Report {
    let branching = shintani_branching(&residual_alpha, &residual_beta);
    let gl_inner = if branching == 1 { 1 } else { 2 };
    let parity_ok = parity_argument_check(gl_inner, branching as i64);
    let passed = branching == 1 && parity_ok;
    let detail = if passed {
        "residual base-change supports are disjoint".to_string()
    } else {
        let common: Vec<String> = residual_alpha
            .as_set()
            .intersection(&residual_beta.as_set())
            .map(ToString::to_string)
            .collect();
        format!("residual supports share tokens {{{}}}", common.join(","))
    };
    Theorem31Report { p_count, residual_alpha, residual_beta, branching, parity_ok, passed, detail }
}

/// Strips the `p` matched pairs of a tame parameter and checks that the
/// remaining `R(alpha) ⊗ R(beta)` branches, i.e. that the base changes of the
/// unmatched characters have disjoint cuspidal support.
pub fn theorem31_consistency(p: &ParamPair) -> Result<Theorem31Report> {
    require_tame(p)?;
    let (n, m) = (p.m_summands.len(), p.n_summands.len());
    if n % 2 == m % 2 {
        return Err(Error::Precondition(format!(
            "dimensions {n} and {m} must have opposite parity"
        )));
    }
    let t = chi_tame(p)?;
    let (alphas, betas) = p
        .tame_chars()
        .ok_or_else(|| Error::Internal("tame pair with archimedean summands".into()))?;
    let rest_a: Vec<TameChar> = t.order_m[t.p_count..].iter().map(|&i| alphas[i]).collect();
    let rest_b: Vec<TameChar> = t.order_n[t.p_count..].iter().map(|&j| betas[j]).collect();
    Ok(check_residual_supports(
        t.p_count,
        BaseChangeSupport::from_symplectic(&rest_a),
        BaseChangeSupport::from_orthogonal(&rest_b),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tame::RootOfUnity;
    use Sign::{Minus, Plus};

    #[test]
    fn packet_counts() {
        assert_eq!(enumerate_packet(1).unwrap().len(), 2);
        let two = enumerate_packet(2).unwrap();
        let on = |s: HermitianSpace| -> Vec<Vec<Sign>> {
            two.iter().filter(|e| e.space() == s).map(|e| e.signs().to_vec()).collect()
        };
        assert_eq!(on(HermitianSpace::V), vec![vec![Plus, Plus], vec![Minus, Minus]]);
        assert_eq!(on(HermitianSpace::VPrime), vec![vec![Minus, Plus], vec![Plus, Minus]]);
        for n in 1..=10 {
            let all = enumerate_packet(n).unwrap();
            assert_eq!(all.len(), 1 << n);
            let v = all.iter().filter(|e| e.space() == HermitianSpace::V).count();
            assert_eq!(v, 1 << (n - 1));
            let chars: BTreeSet<Vec<Sign>> = all.iter().map(|e| e.character().signs().to_vec()).collect();
            assert_eq!(chars.len(), 1 << n);
            for e in &all {
                assert_eq!(e.character().evaluate_on_minus_one(), e.disc_ord_parity());
            }
        }
        assert!(enumerate_packet(0).is_err());
    }

    #[test]
    fn embedding_parity_invariant() {
        assert!(Embedding::new(vec![Plus, Minus], Plus).is_err());
        assert!(Embedding::new(vec![Plus, Minus], Minus).is_ok());
    }

    #[test]
    fn quotient_examples() {
        let q = reductive_quotient(&Embedding::from_signs(vec![Plus, Plus, Plus]));
        assert_eq!((q.p, q.rest), (0, 3));
        assert!(q.is_hyperspecial());
        let q = reductive_quotient(&Embedding::from_signs(vec![Minus, Plus, Plus]));
        assert_eq!((q.p, q.rest), (1, 2));
        assert!(!q.is_hyperspecial());
        let q = reductive_quotient(&Embedding::from_signs(vec![Minus, Minus]));
        assert_eq!((q.p, q.rest), (2, 0));
        assert!(q.is_hyperspecial());
    }

    fn tc(q: u32, e: i64, symplectic: bool) -> TameChar {
        let unif = if symplectic { RootOfUnity::MINUS_ONE } else { RootOfUnity::ONE };
        TameChar::new(q, e, unif).unwrap()
    }

    #[test]
    fn distinguished_embedding_examples() {
        let p = ParamPair::tame(
            vec![tc(5, 4, true), tc(5, 8, true), tc(5, 12, true)],
            vec![tc(5, 4, false), tc(5, 20, false), tc(5, 16, false)],
        );
        let d = distinguished_embedding(&p).unwrap();
        assert_eq!(d.p_count, 2);
        let (a, b) = d.quotients();
        assert_eq!((a.p, a.rest, b.p, b.rest), (2, 1, 2, 1));

        let p = ParamPair::tame(vec![tc(3, 2, true)], vec![tc(3, 2, false)]);
        let d = distinguished_embedding(&p).unwrap();
        assert_eq!(d.p_count, 0);
        assert!(d.quotients().0.is_hyperspecial() && d.quotients().1.is_hyperspecial());

        let p = ParamPair::tame(vec![tc(3, 2, true), tc(3, 4, true)], vec![tc(3, 6, false)]);
        let d = distinguished_embedding(&p).unwrap();
        assert_eq!(d.p_count, 1);
        let (a, b) = d.quotients();
        assert_eq!((a.p, a.rest, b.p, b.rest), (1, 1, 1, 0));
    }

    #[test]
    fn shintani_examples() {
        let s = |v: &[u64]| BaseChangeSupport::new(v.to_vec());
        assert_eq!(shintani_branching(&s(&[1, 2]), &s(&[3])), 1);
        assert_eq!(shintani_branching(&s(&[1, 2]), &s(&[2, 5])), 0);
        assert_eq!(shintani_branching(&s(&[]), &s(&[2, 5])), 1);
        assert_eq!(shintani_branching(&s(&[2, 5]), &s(&[])), 1);
        let dup = s(&[1, 1, 2]);
        assert_eq!(shintani_branching(&dup, &s(&[2])), shintani_branching(&dup.dedup(), &s(&[2])));
    }

    #[test]
    fn parity_examples() {
        assert!(parity_argument_check(1, 1));
        assert!(parity_argument_check(2, 0));
        assert!(!parity_argument_check(1, 0));
    }

    #[test]
    fn theorem31_examples() {
        // p = 0: alpha 2 and beta 2 do not pair to mu (2 + 2 != 0 mod 8).
        let p = ParamPair::tame(vec![tc(3, 2, true), tc(3, 4, true)], vec![tc(3, 2, false)]);
        let r = theorem31_consistency(&p).unwrap();
        assert_eq!(r.p_count, 0);
        assert!(r.passed);

        // Fully matched on the smaller side.
        let p = ParamPair::tame(vec![tc(3, 2, true), tc(3, 4, true)], vec![tc(3, 6, false)]);
        let r = theorem31_consistency(&p).unwrap();
        assert_eq!(r.p_count, 1);
        assert!(r.residual_beta.labels().is_empty());
        assert!(r.passed);

        let same_parity = ParamPair::tame(vec![tc(3, 2, true)], vec![tc(3, 2, false)]);
        assert!(theorem31_consistency(&same_parity).is_err());
    }

    #[test]
    fn checker_rejects_overlap() {
        let r = check_residual_supports(0, BaseChangeSupport::new(vec![2, 4]), BaseChangeSupport::new(vec![4]));
        assert!(!r.passed);
        assert_eq!(r.branching, 0);
        assert!(r.detail.contains('4'));
    }
}
