use super::{IdentitySpec, SeriesExpr, LAURENT_ORDER};
use crate::special::BilateralSumSpec;

/// Entries whose sensitivity to a single perturbed coefficient is checked.
pub const MUTATION_TARGETS: [&str; 5] = [
    "b_3n_plus_2",
    "theta_product_relation",
    "b_7n_plus_2_modular_basis",
    "b_3n_plus_1_mod_9",
    "b_7n_plus_2_mod_7",
];

const B: &str = "f2^4/(f1^2*f4^3)";

fn n(text: &str) -> SeriesExpr {
    SeriesExpr::notation(text)
}

fn b() -> SeriesExpr {
    n(B)
}

fn lit(v: i64) -> SeriesExpr {
    SeriesExpr::literal(v)
}

fn sum(terms: Vec<SeriesExpr>) -> SeriesExpr {
    SeriesExpr::sum(terms)
}

fn prod(factors: Vec<SeriesExpr>) -> SeriesExpr {
    SeriesExpr::product(factors)
}

fn bil(spec: BilateralSumSpec) -> SeriesExpr {
    SeriesExpr::bilateral(spec)
}

/// `f6 f9^2/(f3 f18) + q f18^2/f9`, the three-dissection of `f2^2/f1`.
fn triangular_3_dissection() -> SeriesExpr {
    n("f6*f9^2/(f3*f18)").plus(n("q*f18^2/f9"))
}

/// Right side of the three-dissection of `1/f1^3`, with `q` replaced by `q^k`.
fn inverse_cube_3_dissection(k: u32) -> SeriesExpr {
    let a3 = SeriesExpr::alpha().subst(3 * k);
    let g = |d: u32| format!("f{}", d * k);
    prod(vec![
        n(&format!("{}^3/{}^10", g(9), g(3))),
        sum(vec![
            a3.clone().pow(2),
            prod(vec![n(&format!("3*q^{k}*{}^3/{}", g(9), g(3))), a3]),
            n(&format!("9*q^{}*{}^6/{}^2", 2 * k, g(9), g(3))),
        ]),
    ])
}

/// `f3 f12 f18^5/(f6^2 f9^2 f36^2) - q f9 f36/f18`, the three-dissection of `f1 f4/f2`.
fn f1_f4_over_f2_3_dissection() -> SeriesExpr {
    n("f3*f12*f18^5/(f6^2*f9^2*f36^2)").minus(n("q*f9*f36/f18"))
}

fn h_combination(c: i64) -> SeriesExpr {
    sum(vec![SeriesExpr::h_inv(), lit(c), SeriesExpr::h()])
}

/// Polynomial `sum c_i x^i` in an expression `x`.
fn poly(x: &SeriesExpr, coeffs: &[i64]) -> SeriesExpr {
    sum(coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => lit(c),
            _ => x.clone().pow(i as i64).scale(c),
        })
        .collect())
}

/// `sum_{j in {3,4,6}} q^j (dissect(f1, 7, j))(q^7)`.
fn f1_missing_7_classes() -> SeriesExpr {
    sum([3u32, 4, 6]
        .into_iter()
        .map(|j| n("f1").dissect(7, j).subst(7).shift(j as i64))
        .collect())
}

fn partition_identities() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::exact(
            "p_5n_plus_4",
            "Ramanujan: generating function of p(5n+4)",
            n("1/f1").dissect(5, 4),
            n("5*f5^5/f1^6"),
        ),
        IdentitySpec::exact(
            "p_7n_plus_5",
            "Ramanujan: generating function of p(7n+5)",
            n("1/f1").dissect(7, 5),
            n("7*f7^3/f1^4").plus(n("49*q*f7^7/f1^8")),
        ),
        IdentitySpec::exact(
            "cubic_3n_plus_2",
            "Chan: cubic partitions a(3n+2)",
            n("1/(f1*f2)").dissect(3, 2),
            n("3*f3^3*f6^3/(f1^4*f2^4)"),
        ),
        IdentitySpec::exact(
            "overcubic_3n_plus_2",
            "Kim: overcubic partitions in the class 2 mod 3",
            n("f4/(f1^2*f2)").dissect(3, 2),
            n("6*f3^6*f4^3/(f1^8*f2^3)"),
        ),
        IdentitySpec::exact(
            "lin_b_3n_plus_2",
            "Lin: b(3n+2)",
            n("f2^2/(f1*f4^3)").dissect(3, 2),
            n("3*q*f2^6*f12^6/(f1^3*f4^11)"),
        ),
        IdentitySpec::exact(
            "lin_b_3n_plus_1",
            "Lin: b(3n+1) via the cubic theta function",
            n("f2^2/(f1*f4^3)").dissect(3, 1),
            prod(vec![
                SeriesExpr::alpha().subst(4),
                n("f2^6*f12^3/(f1^3*f4^10)"),
            ]),
        ),
    ]
}

fn two_and_five() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::exact(
            "f2_5_over_f1_2_f4_2_2_dissection",
            "two-dissection of f2^5/(f1^2 f4^2)",
            n("f2^5/(f1^2*f4^2)"),
            n("f8^5/(f4^2*f16^2)").plus(n("2*q*f16^2/f8")),
        ),
        IdentitySpec::exact(
            "b_2_dissection",
            "two-dissection of the B generating function",
            b(),
            n("f8^5/(f2*f4^3*f16^2)").plus(n("2*q*f16^2/(f2*f4*f8)")),
        ),
        IdentitySpec::exact(
            "b_2n",
            "even branch of the B two-dissection",
            b().dissect(2, 0),
            n("f4^5/(f1*f2^3*f8^2)"),
        ),
        IdentitySpec::exact(
            "b_2n_plus_1",
            "odd branch of the B two-dissection",
            b().dissect(2, 1),
            n("2*f8^2/(f1*f2*f4)"),
        ),
        IdentitySpec::exact(
            "jacobi_cube_sum",
            "Jacobi: f1^3 as a sum over triangular exponents",
            n("f1^3"),
            bil(BilateralSumSpec::jacobi_cube()),
        ),
        IdentitySpec::exact(
            "triangular_sum",
            "Gauss: f2^2/f1 as the triangular-number theta series",
            n("f2^2/f1"),
            bil(BilateralSumSpec::triangular()),
        ),
        IdentitySpec::modular(
            "b_mod_5_product",
            "reduction of the B generating function modulo 5",
            5,
            b(),
            n("f10*f4^2*f1^3/(f5*f20*f2)"),
        ),
        IdentitySpec::modular(
            "b_mod_5_double_sum",
            "B modulo 5 as a double theta sum",
            5,
            b(),
            prod(vec![
                n("f10/(f5*f20)"),
                bil(BilateralSumSpec::triangular()).subst(2),
                bil(BilateralSumSpec::jacobi_cube()),
            ]),
        ),
        IdentitySpec::modular(
            "b_5n_plus_4_mod_5",
            "B(5n+4) vanishes modulo 5",
            5,
            b().dissect(5, 4),
            lit(0),
        ),
    ]
}

fn three_dissections() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::exact(
            "f2_2_over_f1_3_dissection",
            "three-dissection of f2^2/f1",
            n("f2^2/f1"),
            triangular_3_dissection(),
        ),
        IdentitySpec::exact(
            "inverse_f1_cube_3_dissection",
            "three-dissection of 1/f1^3 through the cubic theta function",
            n("1/f1^3"),
            inverse_cube_3_dissection(1),
        ),
        IdentitySpec::exact(
            "alpha_q4_relation",
            "cubic theta relation giving f2^6/f1^3",
            prod(vec![n("f6^2/f3"), SeriesExpr::alpha().subst(4)])
                .plus(n("3*q*f2*f3^2*f12^3/(f1*f4*f6)")),
            n("f2^6/f1^3"),
        ),
        IdentitySpec::exact(
            "b_3_dissection_composed",
            "B rewritten through the three-dissections of f2^2/f1 and 1/f1^3",
            b(),
            prod(vec![
                triangular_3_dissection().pow(2),
                inverse_cube_3_dissection(4),
            ]),
        ),
        IdentitySpec::exact(
            "b_3n_plus_2_expanded",
            "class 2 mod 3 of the composed B three-dissection",
            b().dissect(3, 2),
            sum(vec![
                prod(vec![
                    n("f6^4*f12^3/(f4^10*f3^2)"),
                    SeriesExpr::alpha().subst(4).pow(2),
                ]),
                prod(vec![
                    n("6*q*f2*f3*f6*f12^6/(f1*f4^11)"),
                    SeriesExpr::alpha().subst(4),
                ]),
                n("9*q^2*f2^2*f3^4*f12^9/(f1^2*f4^12*f6^2)"),
            ]),
        ),
        IdentitySpec::exact(
            "b_3n_plus_2",
            "generating function of B(3n+2)",
            b().dissect(3, 2),
            n("f2^12*f12^3/(f1^6*f4^10)"),
        ),
        IdentitySpec::exact(
            "euler_pentagonal",
            "Euler's pentagonal number theorem",
            n("f1"),
            bil(BilateralSumSpec::euler()),
        ),
        IdentitySpec::exact(
            "c_series_product",
            "the weighted series C as a product",
            prod(vec![
                b().dissect(3, 2),
                bil(BilateralSumSpec::euler()).subst(4),
            ]),
            n("f2^12*f12^3/(f1^6*f4^9)"),
        ),
        IdentitySpec::modular(
            "c_series_mod_3",
            "the C series reduced modulo 3",
            3,
            n("f2^12*f12^3/(f1^6*f4^9)"),
            n("f6^4/f3^2"),
        ),
        IdentitySpec::modular(
            "c_3n_plus_1_mod_3",
            "class 1 mod 3 of the C series vanishes",
            3,
            n("f2^12*f12^3/(f1^6*f4^9)").dissect(3, 1),
            lit(0),
        ),
        IdentitySpec::modular(
            "c_3n_plus_2_mod_3",
            "class 2 mod 3 of the C series vanishes",
            3,
            n("f2^12*f12^3/(f1^6*f4^9)").dissect(3, 2),
            lit(0),
        ),
        IdentitySpec::modular(
            "c_3n_mod_3",
            "class 0 mod 3 of the C series",
            3,
            n("f2^12*f12^3/(f1^6*f4^9)").dissect(3, 0),
            n("f2^4/f1^2"),
        ),
    ]
}

fn level_12() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::exact(
            "h_plus_inverse",
            "Cooper: 1/h + h for the level 12 continued fraction",
            h_combination(0),
            n("f3^3*f4/(q*f1*f12^3)"),
        ),
        IdentitySpec::exact(
            "h_minus_one",
            "Cooper: 1/h - 1 + h",
            h_combination(-1),
            n("f4^4*f6^2/(q*f2^2*f12^4)"),
        ),
        IdentitySpec::exact(
            "h_minus_two",
            "Cooper: 1/h - 2 + h",
            h_combination(-2),
            n("f1*f4^2*f6^9/(q*f2^3*f3^3*f12^6)"),
        ),
        IdentitySpec::exact(
            "h_minus_four",
            "Cooper: 1/h - 4 + h",
            h_combination(-4),
            n("f1^3*f4*f6^2/(q*f2^2*f3*f12^3)"),
        ),
        IdentitySpec::exact(
            "h_quotient_sum",
            "sum of the 1/h + h and 1/h - 2 + h quotients",
            n("f3^3*f4/(q*f1*f12^3)").plus(n("f1*f4^2*f6^9/(q*f2^3*f3^3*f12^6)")),
            n("2*f4^4*f6^2/(q*f2^2*f12^4)"),
        ),
        IdentitySpec::exact(
            "theta_product_relation",
            "three-term relation among level 12 eta products",
            n("f12^3*f2^3*f3^6").plus(n("f1^2*f4*f6^9")),
            n("2*f1*f2*f3^3*f4^3*f6^2*f12^2"),
        ),
    ]
}

fn alpha_q4() -> SeriesExpr {
    SeriesExpr::alpha().subst(4)
}

fn modulus_9() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec::exact(
            "alpha_eta_form",
            "Hirschhorn: the cubic theta function as eta quotients",
            SeriesExpr::alpha(),
            n("f2^6*f3/(f1^3*f6^2)").plus(n("3*q*f6^6*f1/(f3^3*f2^2)")),
        ),
        IdentitySpec::exact(
            "alpha_q4_difference",
            "Hirschhorn: alpha(q) - alpha(q^4)",
            alpha_q4(),
            SeriesExpr::alpha().minus(n("6*q*f4^2*f12^2/(f2*f6)")),
        ),
        IdentitySpec::exact(
            "alpha_q4_eta_form",
            "alpha(q^4) as a combination of eta quotients",
            alpha_q4(),
            sum(vec![
                n("f2^6*f3/(f1^3*f6^2)"),
                n("3*q*f6^6*f1/(f3^3*f2^2)"),
                n("6*q*f4^2*f12^2/(f2*f6)").scale(-1),
            ]),
        ),
        IdentitySpec::modular(
            "alpha_q4_squared_mod_9",
            "alpha(q^4)^2 reduced modulo 9",
            9,
            alpha_q4().pow(2),
            sum(vec![
                n("f2^12*f3^2/(f1^6*f6^4)"),
                n("6*q*f2^4*f6^4/(f1^2*f3^2)"),
                n("12*q*f2^5*f3*f4^2*f12^2/(f1^3*f6^3)").scale(-1),
            ]),
        ),
        IdentitySpec::modular(
            "b_3n_plus_1_alpha_mod_9",
            "class 1 mod 3 of the composed B dissection, modulo 9",
            9,
            b().dissect(3, 1),
            sum(vec![
                prod(vec![alpha_q4().pow(2), n("2*f2*f3*f6*f12^3/(f1*f4^10)")]),
                prod(vec![alpha_q4(), n("3*q*f2^2*f3^4*f12^6/(f1^2*f6^2*f4^11)")]),
            ]),
        ),
        IdentitySpec::modular(
            "b_3n_plus_1_eta_mod_9",
            "B(3n+1) modulo 9 after eliminating alpha(q^4)",
            9,
            b().dissect(3, 1),
            sum(vec![
                n("2*f2^13*f3^3*f12^3/(f1^7*f4^10*f6^3)"),
                n("3*q*f2^5*f6^5*f12^3/(f1^3*f3*f4^10)"),
                n("6*q*f2^6*f3^2*f12^5/(f1^4*f4^8*f6^2)").scale(-1),
                n("3*q*f2^8*f3^5*f12^6/(f1^5*f4^11*f6^4)"),
            ]),
        ),
        IdentitySpec::exact(
            "three_term_vanishing",
            "a vanishing combination of three eta quotients",
            sum(vec![
                n("f2^5*f6^5*f12^3/(f1^3*f3*f4^10)"),
                n("2*f2^6*f3^2*f12^5/(f1^4*f4^8*f6^2)").scale(-1),
                n("f2^8*f3^5*f12^6/(f1^5*f4^11*f6^4)"),
            ]),
            lit(0),
        ),
        IdentitySpec::modular(
            "b_3n_plus_1_mod_9",
            "generating function of B(3n+1) modulo 9",
            9,
            b().dissect(3, 1),
            n("2*f1^2*f2^4/f4"),
        ),
        IdentitySpec::modular(
            "d_series_mod_9",
            "the weighted series D modulo 9",
            9,
            prod(vec![
                b().dissect(3, 1),
                bil(BilateralSumSpec::euler()).subst(4),
            ]),
            n("2*f1^2*f2^4"),
        ),
        IdentitySpec::exact(
            "f1_f4_over_f2_3_dissection",
            "three-dissection of f1 f4/f2",
            n("f1*f4/f2"),
            f1_f4_over_f2_3_dissection(),
        ),
        IdentitySpec::exact(
            "f1_2_over_f2_3_dissection",
            "three-dissection of f1^2/f2",
            n("f1^2/f2"),
            n("f9^2/f18").minus(n("2*q*f3*f18^2/(f6*f9)")),
        ),
        IdentitySpec::modular(
            "b_3n_plus_1_dissected_mod_9",
            "B(3n+1) modulo 9 with both three-dissections inserted",
            9,
            b().dissect(3, 1),
            prod(vec![
                lit(2),
                f1_f4_over_f2_3_dissection().pow(2),
                n("f18^2/f36").minus(n("2*q^2*f6*f36^2/(f12*f18)")).pow(3),
            ]),
        ),
        IdentitySpec::modular(
            "b_9n_plus_7_four_terms_mod_9",
            "B(9n+7) modulo 9 as four eta quotients",
            9,
            b().dissect(9, 7),
            sum(vec![
                n("2*f3^2*f6^4/f12"),
                n("3*f1^2*f4*f6^13/(f2^3*f3^4*f12^4)").scale(-1),
                n("3*q*f1*f6^4*f12^2/(f3*f4)").scale(-1),
                n("2*q^2*f2^3*f3^2*f12^8/(f4^3*f6^5)"),
            ]),
        ),
        IdentitySpec::exact(
            "h_rational_eta_form",
            "a rational function of h written as eta quotients",
            sum(vec![
                n("2*f3^3*f4/(q*f1*f12^3)"),
                n("3*f1*f4^2*f6^9/(q*f2^3*f3^3*f12^6)").scale(-1),
                lit(-3),
                n("2*q*f2^3*f3^3*f12^6/(f1*f4^2*f6^9)"),
            ]),
            n("f1^2*f3^2*f4^3/(q*f2*f6^5*f12)").scale(-1),
        ),
        IdentitySpec::exact(
            "h_rational_factorization",
            "factorization of a rational function of h",
            sum(vec![
                h_combination(0).scale(2),
                h_combination(-2).scale(-3),
                lit(-3),
                h_combination(-2).pow(-1).scale(2),
            ]),
            prod(vec![
                h_combination(-4),
                h_combination(-1),
                h_combination(-2).pow(-1),
            ])
            .scale(-1),
        ),
        IdentitySpec::modular(
            "b_9n_plus_7_mod_9",
            "generating function of B(9n+7) modulo 9",
            9,
            b().dissect(9, 7),
            n("f1^3*f3*f4^2*f12/(f2*f6)").scale(-1),
        ),
        IdentitySpec::exact(
            "f1_cube_3_dissection",
            "three-dissection of f1^3 through the cubic theta function",
            n("f1^3"),
            prod(vec![SeriesExpr::alpha().subst(3), n("f3")]).minus(n("3*q*f9^3")),
        ),
        IdentitySpec::modular(
            "b_9n_plus_7_dissected_mod_9",
            "B(9n+7) modulo 9 with the three-dissections of f1^3 and f4^2/f2",
            9,
            b().dissect(9, 7),
            prod(vec![
                n("f3*f12/f6").scale(-1),
                prod(vec![SeriesExpr::alpha().subst(3), n("f3")]).minus(n("3*q*f9^3")),
                n("f12*f18^2/(f6*f36)").plus(n("q^2*f36^2/f18")),
            ]),
        ),
        IdentitySpec::modular(
            "b_27n_plus_16_mod_9",
            "generating function of B(27n+16) modulo 9",
            9,
            b().dissect(27, 16),
            n("3*f1*f3^3*f4^2*f6^2/(f2^2*f12)"),
        ),
        IdentitySpec::exact(
            "f2_5_over_f1_2_sum",
            "Hirschhorn: f2^5/f1^2 as a weighted theta sum",
            n("f2^5/f1^2"),
            bil(BilateralSumSpec::f2_5_over_f1_2()),
        ),
        IdentitySpec::modular(
            "e_series_mod_9",
            "the weighted series E modulo 9",
            9,
            prod(vec![
                b().dissect(27, 16),
                bil(BilateralSumSpec::f2_5_over_f1_2()).subst(2),
            ]),
            n("3*f1*f3^3*f4^7*f6^2/(f2^4*f12)"),
        ),
        IdentitySpec::modular(
            "e_series_dissected_mod_9",
            "the E series modulo 9 with the three-dissection of f1 f4/f2",
            9,
            n("3*f1*f3^3*f4^7*f6^2/(f2^4*f12)"),
            prod(vec![n("3*f3^3*f6*f12"), f1_f4_over_f2_3_dissection()]),
        ),
        IdentitySpec::modular(
            "e_3n_plus_2_mod_9",
            "class 2 mod 3 of the E series vanishes",
            9,
            prod(vec![
                b().dissect(27, 16),
                bil(BilateralSumSpec::f2_5_over_f1_2()).subst(2),
            ])
            .dissect(3, 2),
            lit(0),
        ),
    ]
}

/// `t`, the hauptmodul-like generator with a pole of order 3.
fn basis_x() -> SeriesExpr {
    n("f4^4*f14^2/(q^3*f2^2*f28^4)")
}

fn basis_y() -> SeriesExpr {
    n("f2*f4^2*f14^5/(q^4*f1*f7*f28^6)")
}

fn basis_z() -> SeriesExpr {
    n("f2*f4*f14^5/(q^5*f28^7)")
}

const P1: [i64; 7] = [0, -2401, -5145, 6860, 882, -175, -21];
const P2: [i64; 6] = [2401, 0, -7154, -294, 189, 14];
const P3: [i64; 6] = [0, 3430, 0, -735, -42, 1];

/// `sum F(n) q^n = (sum B(7n+2) q^n) * sum (6k+1) q^(k(3k+1))`.
fn f_series() -> SeriesExpr {
    prod(vec![
        b().dissect(7, 2),
        bil(BilateralSumSpec::f1_5_over_f2_2()).subst(2),
    ])
}

fn modulus_7() -> Vec<IdentitySpec> {
    let x = basis_x();
    vec![
        IdentitySpec::exact(
            "b_7n_plus_2_modular_basis",
            "B(7n+2) in the algebra basis 1, Y, Z over X on the level 28 group",
            prod(vec![
                n("f1^6*f4^19*f14^13/(q^20*f2^11*f28^26)"),
                b().dissect(7, 2),
            ]),
            sum(vec![
                poly(&x, &P1),
                prod(vec![basis_y(), poly(&x, &P2)]),
                prod(vec![basis_z(), poly(&x, &P3)]),
            ]),
        )
        .with_order(LAURENT_ORDER),
        IdentitySpec::modular(
            "b_7n_plus_2_basis_mod_7",
            "reduction of the modular-basis expansion of B(7n+2) modulo 7",
            7,
            b().dissect(7, 2),
            prod(vec![
                n("q^20*f2^11*f28^26/(f1^6*f4^19*f14^13)"),
                basis_z(),
                x.clone().pow(5),
            ]),
        ),
        IdentitySpec::modular(
            "b_7n_plus_2_mod_7",
            "generating function of B(7n+2) modulo 7",
            7,
            b().dissect(7, 2),
            n("f1*f2^2*f4^2*f14^2/(f7*f28)"),
        ),
        IdentitySpec::exact(
            "f1_5_over_f2_2_sum",
            "Hirschhorn: f1^5/f2^2 as a weighted pentagonal sum",
            n("f1^5/f2^2"),
            bil(BilateralSumSpec::f1_5_over_f2_2()),
        ),
        IdentitySpec::modular(
            "f_series_mod_7",
            "the weighted series F modulo 7",
            7,
            f_series(),
            n("f1*f14^3/(f7*f28)"),
        ),
        IdentitySpec::exact(
            "f1_7_dissection_gaps",
            "the seven-dissection of f1 has no classes 3, 4, 6",
            f1_missing_7_classes(),
            lit(0),
        ),
        IdentitySpec::modular(
            "f_7n_plus_3_mod_7",
            "class 3 mod 7 of the F series vanishes",
            7,
            f_series().dissect(7, 3),
            lit(0),
        ),
        IdentitySpec::modular(
            "f_7n_plus_4_mod_7",
            "class 4 mod 7 of the F series vanishes",
            7,
            f_series().dissect(7, 4),
            lit(0),
        ),
        IdentitySpec::modular(
            "f_7n_plus_6_mod_7",
            "class 6 mod 7 of the F series vanishes",
            7,
            f_series().dissect(7, 6),
            lit(0),
        ),
        IdentitySpec::modular(
            "f_7n_plus_2_mod_7",
            "class 2 mod 7 of the F series",
            7,
            f_series().dissect(7, 2),
            n("f2^3*f7/(f1*f4)").scale(-1),
        ),
        IdentitySpec::modular(
            "f_7n_plus_2_sum_mod_7",
            "class 2 mod 7 of the F series as a signed pentagonal sum",
            7,
            f_series().dissect(7, 2),
            prod(vec![n("f7"), bil(BilateralSumSpec::f2_3_over_f1_f4())]).scale(-1),
        ),
        IdentitySpec::exact(
            "f2_3_over_f1_f4_sum",
            "Euler's theorem with q replaced by -q",
            n("f2^3/(f1*f4)"),
            bil(BilateralSumSpec::f2_3_over_f1_f4()),
        ),
    ]
}

/// Every identity, in a fixed order.
pub fn registry() -> Vec<IdentitySpec> {
    let mut out = partition_identities();
    out.extend(two_and_five());
    out.extend(three_dissections());
    out.extend(level_12());
    out.extend(modulus_9());
    out.extend(modulus_7());
    out
}
