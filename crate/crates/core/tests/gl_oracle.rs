use branchlaw::finite_gl::oracle::{oracle_gelfand_graev_character, oracle_term_character, restrict_to_corner};
use branchlaw::finite_gl::{
    derivative_multiset, exact_integer, hom_multiplicity, hom_multiplicity_distinct, oracle_derivative_dimension,
    oracle_hom_dimension, oracle_induced_character, restriction_terms, supports_disjoint, ClassFunction,
    CuspidalLabel, GlGroup, ProductRep,
};

fn multisets(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        for mut rest in multisets(&values[i..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

/// The cuspidal of GL_2(F_2), as the virtual combination Sigma[2] - Ind_B(1) + 1.
fn gl2_f2_cuspidal() -> ClassFunction {
    let gg = oracle_gelfand_graev_character(2, 2, 1).unwrap();
    let borel = oracle_induced_character(&[0, 0], 2).unwrap();
    let trivial = ClassFunction::trivial(GlGroup::get(2, 2).unwrap());
    gg.add(&borel.scale(-1.0)).unwrap().add(&trivial).unwrap()
}

#[test]
fn gl2_f2_cuspidal_is_irreducible_of_degree_one() {
    let sigma = gl2_f2_cuspidal();
    assert_eq!(exact_integer(sigma.inner(&sigma).unwrap()).unwrap(), 1);
    assert_eq!(exact_integer(sigma.degree()).unwrap(), 1);
    let borel = oracle_induced_character(&[0, 0], 2).unwrap();
    assert_eq!(exact_integer(sigma.inner(&borel).unwrap()).unwrap(), 0);
}

#[test]
fn gl3_f2_disjoint_support_with_cuspidal() {
    let sigma_label = CuspidalLabel::new(2, "sigma", 2).unwrap();
    let pi = ProductRep::principal_series(2, &[0, 0, 0]);
    let mu = ProductRep::new(2, vec![sigma_label]).unwrap();
    assert!(supports_disjoint(&pi, &mu));
    assert_eq!(hom_multiplicity(&pi, &mu).unwrap(), 1);

    let chi_pi = oracle_induced_character(&[0, 0, 0], 2).unwrap();
    assert_eq!(oracle_hom_dimension(&chi_pi, &gl2_f2_cuspidal()).unwrap(), 1);
}

#[test]
fn repeated_factor_gives_three() {
    // pi = chi^2 x chi' over GL_3(F_3), mu = chi x chi'.
    let pi = ProductRep::principal_series(3, &[0, 0, 1]);
    let mu = ProductRep::principal_series(3, &[0, 1]);
    assert_eq!(hom_multiplicity(&pi, &mu).unwrap(), 6);
    let mu = ProductRep::principal_series(3, &[0]);
    let pi = ProductRep::principal_series(3, &[0, 0]);
    assert_eq!(hom_multiplicity(&pi, &mu).unwrap(), 3);
    let oracle = oracle_hom_dimension(
        &oracle_induced_character(&[0, 0], 3).unwrap(),
        &oracle_induced_character(&[0], 3).unwrap(),
    )
    .unwrap();
    assert_eq!(oracle, 3);
}

#[test]
fn distinct_formula_agrees_with_general_formula() {
    let pi = ProductRep::principal_series(5, &[0, 1, 2]);
    for mu_exps in [[0u32, 1], [0, 3], [2, 3], [1, 2]] {
        let mu = ProductRep::principal_series(5, &mu_exps);
        assert_eq!(hom_multiplicity_distinct(&pi, &mu).unwrap(), hom_multiplicity(&pi, &mu).unwrap());
    }
}

#[test]
fn derivative_dimensions_match_oracle() {
    for (q, max_n) in [(2u32, 3usize), (3, 3), (5, 2)] {
        let chars: Vec<u32> = (0..q - 1).collect();
        for n in 1..=max_n {
            for exps in multisets(&chars, n) {
                let pi = ProductRep::principal_series(q, &exps);
                let chi = oracle_induced_character(&exps, q).unwrap();
                for k in 0..=n {
                    let symbolic: u128 = derivative_multiset(&pi, k).unwrap().iter().map(ProductRep::dimension).sum();
                    let oracle = oracle_derivative_dimension(&chi, k, 1).unwrap();
                    assert_eq!(symbolic, oracle as u128, "q={q} pi={pi} k={k}");
                }
            }
        }
    }
}

#[test]
fn restriction_identity_over_f5() {
    for exps in multisets(&[0, 1, 2, 3], 2) {
        let pi = ProductRep::principal_series(5, &exps);
        let lhs = restrict_to_corner(&oracle_induced_character(&exps, 5).unwrap()).unwrap();
        let mut rhs = ClassFunction::zero(lhs.group().clone());
        for term in restriction_terms(&pi).unwrap() {
            let te = term.factors.principal_exponents().unwrap();
            rhs = rhs.add(&oracle_term_character(&te, term.gg_rank, 5, 2).unwrap()).unwrap();
        }
        assert!(lhs.max_residue(&rhs).unwrap() < 1e-9, "pi={pi}");
    }
}

#[test]
fn oracle_rejects_oversized_and_prime_power_groups() {
    assert!(GlGroup::get(3, 5).is_err());
    assert!(GlGroup::get(2, 4).is_err());
    assert!(oracle_gelfand_graev_character(2, 3, 0).is_err());
}
