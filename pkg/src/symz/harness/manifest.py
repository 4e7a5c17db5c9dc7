"""Every check name the catalog is expected to register."""

MANIFEST = (
    "partition_conjugate_involution",
    "partition_conjugate_length",
    "partition_rect",
    "exactpoly_ring_axioms",
    "exactpoly_det_vs_cofactor",
    "exactpoly_symplectic_multiplicative",
    "cheb_recurrence",
    "cheb_T_main_property",
    "cheb_U_main_property",
    "cheb_VW_main_property",
    "cheb_generating_functions",
    "cheb_explicit_forms",
    "cheb_monomial_expansions",
    "cheb_duplication",
    "cheb_V_W_and_U1",
    "cheb_sigma_closed_forms",
    "classical_EH_reciprocity",
    "classical_newton_identities",
    "classical_adjoin_variable_recurrences",
    "classical_schur_bialternant",
    "classical_sp_o_bialternant",
    "phi_laurent_oracle",
    "phi_homomorphism",
    "phi_surjectivity_witness",
    "phi_non_injective",
    "phi_worked_examples",
    "zfam_master_oracle",
    "zfam_ez_symmetry",
    "zfam_generating_functions",
    "zfam_hz_compositions_of_U",
    "zfam_hz_sum_U_over_omega",
    "zfam_low_degree_omega_sums",
    "zfam_ez_hz_as_det",
    "zfam_jt_special_shapes",
    "zfam_ez_hz_adjoin_recurrences",
    "zfam_odd_even_links",
    "zfam_hz_odd_forms",
    "zfam_pz_forms",
    "zfam_bialternant_vs_jt",
    "zfam_zero_partition_denominators",
    "zfam_duplication",
    "zfam_sz_symmetry",
    "zfam_lr_product_rule",
    "zfam_littlewood_expansion",
    "zfam_sz21_example",
    "zfam_generating_set_roundtrip",
    "omega_pz_p_basis",
    "omega_palpowersum_closed_form",
    "zfam_basis_transition",
    "toep_symbol_roundtrip",
    "toep_det_master",
    "toep_minor_shapes",
    "toep_skew_to_minor_roundtrip",
    "toep_factorizations",
    "toep_elouafi_expansions",
    "toep_adjugate",
    "toep_nullvector",
    "toep_nullvector_nonzero",
    "cauchy_identity_1",
    "cauchy_identity_2",
    "cauchy_identity_3",
    "cauchy_identity_4",
    "cauchy_identity_5",
    "cauchy_identity_6",
)
