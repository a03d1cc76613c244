//! Registry of the claims a verdict can be checked against.

/// `(id, statement)` pairs. Every verdict names exactly one of these ids.
pub const CLAIMS: &[(&str, &str)] = &[
    (
        "product_dimension",
        "For generic factors in the large or small ambient regime the product has dimension sum r_i.",
    ),
    (
        "product_degree",
        "For generic factors in the large or small ambient regime the product has degree multinomial(sum r_i; r_1..r_l) * prod d_i.",
    ),
    (
        "hilbert_function_multiplicative",
        "In the large ambient regime the Hilbert function of the product is the product of the factors' Hilbert functions.",
    ),
    (
        "hilbert_function_drop",
        "In the small ambient regime HF(1) of the product is strictly below the product of the factors' HF(1).",
    ),
    (
        "smooth_large_ambient",
        "In the large ambient regime the product of generic factors is smooth.",
    ),
    (
        "smooth_small_ambient",
        "In the small ambient regime with n at least the secant variety dimension the product is smooth.",
    ),
    (
        "singular_locus_bound",
        "In the small ambient regime below the secant variety dimension the singular locus has dimension at least 2 sum r_i - n.",
    ),
    (
        "predictor_agrees",
        "The closed-form predictor reproduces the values stated for the instance.",
    ),
    ("stated_dimension", "The stated dimension of the product."),
    ("stated_degree", "The stated degree of the product."),
    (
        "stated_degree_below_formula",
        "The product degree is strictly below the closed-form value for generic factors.",
    ),
    ("stated_smooth", "The stated smoothness of the product."),
    ("stated_singular_dimension", "The stated dimension of the singular locus."),
    ("stated_singular_degree", "The stated degree of the singular locus."),
    (
        "stated_singular_dimension_bound",
        "The stated lower bound on the dimension of the singular locus.",
    ),
    (
        "stated_hf_product_failure",
        "HF(1) of the product differs from the product of the factors' HF(1).",
    ),
    (
        "stated_m_prime_determinant",
        "The stated determinant of the product coefficient matrix.",
    ),
    ("stated_m_prime_rank", "The stated rank of the product coefficient matrix."),
    (
        "stated_center_point",
        "The stated point spanning the kernel of the product coefficient matrix, up to scale.",
    ),
    (
        "stated_center_on_segre_veronese",
        "The stated kernel point lies on the Segre-Veronese variety.",
    ),
];

/// The statement registered under `id`.
pub fn statement(id: &str) -> Option<&'static str> {
    CLAIMS.iter().find(|(k, _)| *k == id).map(|(_, s)| *s)
}
