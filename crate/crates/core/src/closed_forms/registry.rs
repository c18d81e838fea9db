use std::sync::OnceLock;

use super::misc;
use super::umbral::fk_closed_form;
use super::{ClosedFormIdentity as Id, Group, SignPattern, Status, Vanishing};
use crate::error::{Error, Result};
use crate::exact::{rat, Poly, Rational, Term};
use crate::sequences::names::{alt_power_sums, diff_sum, power_sums, umbral};
use crate::sequences::{normalize, parse_spec, SequenceSpec, Sign};

/// `(sequence, a, b(l), a label, b label, citation)`.
type PolyRow = (&'static str, Poly, fn(u64) -> Poly, &'static str, &'static str, &'static str);

fn seq(name: &str) -> SequenceSpec {
    parse_spec(name).unwrap_or_else(|e| panic!("built-in sequence `{name}`: {e}"))
}

fn r(v: u64) -> Rational {
    Rational::from(v)
}

fn sc(v: Rational) -> Term {
    Term::Scalar(v)
}

/// `c (x^2 - d)`.
fn x2_minus(c: Rational, d: Rational) -> Poly {
    (&Poly::monomial(Rational::one(), 2) - &Poly::constant(d)).scale(&c)
}

fn konst(v: Rational) -> impl Fn(u64) -> Term + Send + Sync + 'static {
    move |_| sc(v.clone())
}

fn scalar_b(f: fn(u64) -> Rational) -> impl Fn(u64) -> Term + Send + Sync + 'static {
    move |l| sc(f(l))
}

fn custom(id: &str, sequence: &str, f: fn(u64) -> Rational) -> Id {
    Id::custom(id, seq(sequence), move |n| sc(f(n)))
}

/// Nonzero all-`n` rows.
fn table_all_n() -> Vec<Id> {
    use SignPattern::*;
    type Row = (&'static str, SignPattern, Rational, fn(u64) -> Rational, &'static str, &'static str, &'static str);
    let rows: Vec<Row> = vec![
        ("B_k", BinomN1, rat(1, 1), |l| r(l).pow(4) / r(4 * (2 * l + 1) * (2 * l - 1)), "l^4/(4(2l+1)(2l-1))", "1", "[Kr, (3.56)]"),
        ("B_{k+1}", BinomN2, rat(1, 2), |l| r(l * l * (l + 1) * (l + 1)) / r(4 * (2 * l + 1) * (2 * l + 1)), "l^2(l+1)^2/(4(2l+1)^2)", "1/2", "[Kr, (3.57)]"),
        ("B_{k+2}", BinomN1, rat(1, 6), |l| r(l * (l + 1) * (l + 1) * (l + 2)) / r(4 * (2 * l + 1) * (2 * l + 3)), "l(l+1)^2(l+2)/(4(2l+1)(2l+3))", "1/6", "[Kr, (2.38)]"),
        ("B_{2k+2}", Zero, rat(1, 6), |l| r(l.pow(3) * (l + 1) * (2 * l - 1) * (2 * l + 1).pow(3)) / r((4 * l - 1) * (4 * l + 1).pow(2) * (4 * l + 3)), "l^3(l+1)(2l-1)(2l+1)^3/((4l-1)(4l+1)^2(4l+3))", "1/6", "[Kr, (3.59)]"),
        ("B_{2k+4}", NPlus1, rat(1, 30), |l| r(l * (l + 1).pow(3) * (2 * l + 1).pow(3) * (2 * l + 3)) / r((4 * l + 1) * (4 * l + 3).pow(2) * (4 * l + 5)), "l(l+1)^3(2l+1)^3(2l+3)/((4l+1)(4l+3)^2(4l+5))", "1/30", "[Kr, (3.60)]"),
        ("B_{2k}(1/2)", Zero, rat(1, 1), |l| r(l.pow(4) * (2 * l - 1).pow(4)) / r((4 * l - 3) * (4 * l - 1).pow(2) * (4 * l + 1)), "l^4(2l-1)^4/((4l-3)(4l-1)^2(4l+1))", "1", "[Ch, (41)]"),
        ("(2^{2k+2}-1)B_{2k+2}", Zero, rat(1, 2), |l| r(l.pow(3) * (l + 1)), "l^3(l+1)", "1/2", "derivative method, E_{2k+2}((1+x)/2) at x = 1"),
        ("(2k+1)B_{2k}(1/2)", Zero, rat(1, 1), |l| r(l.pow(6)) / r(4 * (2 * l + 1) * (2 * l - 1)), "l^6/(4(2l+1)(2l-1))", "1", "derivative method, B_{2k+1}((1+x)/2) at x = 0"),
        ("(2k+3)B_{2k+2}", Zero, rat(1, 2), |l| r(l.pow(3) * (l + 1).pow(3)) / r(4 * (2 * l + 1).pow(2)), "l^3(l+1)^3/(4(2l+1)^2)", "1/2", "shifted sequences, B_{2k+3}((1+x)/2) at x = -1"),
        ("E_k", BinomN1, rat(1, 1), |l| r(l * l), "l^2", "1", "[AC, (4.2)]"),
        ("E_{k+1}(1)", BinomN1, rat(1, 2), |l| r(l * (l + 1)) / r(4), "l(l+1)/4", "1/2", "[Ha, (H4)]"),
        ("E_{2k}", Zero, rat(1, 1), |l| r((2 * l - 1).pow(2) * (2 * l).pow(2)), "(2l-1)^2(2l)^2", "1", "[Kr, (3.52)]"),
        ("E_{2k+1}(1)", Zero, rat(1, 2), |l| r(l * l * (2 * l - 1) * (2 * l + 1)) / r(4), "l^2(2l-1)(2l+1)/4", "1/2", "[Mi, (4.56)]"),
        ("E_{2k+2}", NPlus1, rat(1, 1), |l| r((2 * l).pow(2) * (2 * l + 1).pow(2)), "(2l)^2(2l+1)^2", "1", "[Kr, (3.53)]"),
        ("E_{2k+3}(1)", NPlus1, rat(1, 4), |l| r(l * (l + 1) * (2 * l + 1).pow(2)) / r(4), "l(l+1)(2l+1)^2/4", "1/4", "[Mi, (4.57)]"),
        ("(2k+1)E_{2k}", Zero, rat(1, 1), |l| r((2 * l).pow(4)), "(2l)^4", "1", "derivative method, E_{2k+1}((1+x)/2) at x = 0"),
        ("(2k+2)E_{2k+1}(1)", Zero, rat(1, 1), |l| r(l.pow(3) * (l + 1)), "l^3(l+1)", "1", "derivative method, E_{2k+2}((1+x)/2) at x = 1"),
        ("E_{k+1}(1)/(k+1)!", BinomN1, rat(1, 2), |l| rat(1, 1) / r(4 * (2 * l - 1) * (2 * l + 1)), "1/(4(2l-1)(2l+1))", "1/2", "[Ha, (H12)]"),
        ("E_{2k+1}(1)/(2k+1)!", Zero, rat(1, 2), |l| rat(1, 1) / r(16 * (4 * l - 3) * (4 * l - 1).pow(2) * (4 * l + 1)), "1/(16(4l-3)(4l-1)^2(4l+1))", "1/2", "[Ha, (H13)]"),
        ("E_{2k+3}(1)/(2k+3)!", NPlus1, rat(1, 24), |l| rat(1, 1) / r(16 * (4 * l - 1) * (4 * l + 1).pow(2) * (4 * l + 3)), "1/(16(4l-1)(4l+1)^2(4l+3))", "1/24", "[Ha, (H22)]"),
    ];
    let mut out: Vec<Id> = rows
        .into_iter()
        .map(|(name, sign, a, b, b_label, a_label, cite)| {
            Id::all_n(format!("all:{name}"), seq(name), sign, konst(a), scalar_b(b))
                .formula(format!("(-1)^({}) ({a_label})^(n+1) prod_(l=1..n) ({b_label})^(n+1-l)", sign.label()))
                .cite(cite)
                .group(Group::TableAllN)
                .cells(sign.label(), a_label, b_label)
        })
        .collect();

    let poly_rows: Vec<PolyRow> = vec![
        (
            "E_k(x)",
            Poly::one(),
            |l| Poly::constant(r(l * l) / r(4)),
            "1",
            "l^2/4",
            "[AC, (5.2)]",
        ),
        (
            "B_{2k+1}((x+1)/2)",
            Poly::monomial(rat(1, 2), 1),
            |l| x2_minus(r(l.pow(4)) / r(4 * (2 * l + 1) * (2 * l - 1)), r(l * l)),
            "x/2",
            "l^4(x^2-l^2)/(4(2l+1)(2l-1))",
            "odd-index Bernoulli polynomials at (1+x)/2",
        ),
        (
            "E_{2k}((x+1)/2)",
            Poly::one(),
            |l| x2_minus(r(l * l) / r(4), r((2 * l - 1).pow(2))),
            "1",
            "l^2/4 (x^2-(2l-1)^2)",
            "Euler polynomials at (1+x)/2, nu = 0",
        ),
        (
            "E_{2k+1}((x+1)/2)",
            Poly::monomial(rat(1, 2), 1),
            |l| x2_minus(r(l * l) / r(4), r((2 * l).pow(2))),
            "x/2",
            "l^2/4 (x^2-(2l)^2)",
            "Euler polynomials at (1+x)/2, nu = 1",
        ),
        (
            "E_{2k+2}((x+1)/2)",
            x2_minus(rat(1, 4), rat(1, 1)),
            |l| x2_minus(r(l * l) / r(4), r((2 * l + 1).pow(2))),
            "(x^2-1)/4",
            "l^2/4 (x^2-(2l+1)^2)",
            "Euler polynomials at (1+x)/2, nu = 2",
        ),
    ];
    for (name, a, b, a_label, b_label, cite) in poly_rows {
        let a = Term::Poly(a);
        out.push(
            Id::all_n(format!("all:{name}"), seq(name), SignPattern::BinomN1, move |_| a.clone(), move |l| Term::Poly(b(l)))
                .formula(format!("(-1)^(C(n+1,2)) ({a_label})^(n+1) prod_(l=1..n) ({b_label})^(n+1-l)"))
                .cite(cite)
                .group(Group::TableAllN)
                .cells("C(n+1,2)", a_label, b_label),
        );
    }
    out
}

/// Odd-only rows with fixed sequences.
fn table_odd_only() -> Vec<Id> {
    type Row = (&'static str, Rational, fn(u64) -> Rational, &'static str, &'static str, &'static str);
    let rows: Vec<Row> = vec![
        ("E_{k+1}", rat(1, 1), |l| r((2 * l).pow(2) * (2 * l + 1).pow(2)), "1", "(2l)^2(2l+1)^2", "[Ha, (H8)]"),
        ("E_{k+2}(1)", rat(1, 4), |l| r(l * (l + 1) * (2 * l + 1).pow(2)) / r(4), "1/4", "l(l+1)(2l+1)^2/4", "[Ha, (H11)]"),
        ("(0,E_1(1),E_2(1),...)", rat(1, 2), |l| r(l * l * (2 * l - 1) * (2 * l + 1)) / r(4), "1/2", "l^2(2l-1)(2l+1)/4", "[Ha, (H9)]"),
        ("kE_{k-1}", rat(1, 1), |l| r((2 * l).pow(4)), "1", "(2l)^4", "derivative of E_k(x) at x = 0"),
        ("(0,E_1(1)/1!,E_2(1)/2!,...)", rat(1, 2), |l| rat(1, 1) / r(16 * (4 * l - 3) * (4 * l - 1).pow(2) * (4 * l + 1)), "1/2", "1/(16(4l-3)(4l-1)^2(4l+1))", "[Ha, (H15)]"),
        ("E_{k+2}(1)/(k+2)!", rat(1, 24), |l| rat(1, 1) / r(16 * (4 * l - 1) * (4 * l + 1).pow(2) * (4 * l + 3)), "1/24", "1/(16(4l-1)(4l+1)^2(4l+3))", "[Ha, (H14)]"),
    ];
    let mut out: Vec<Id> = rows
        .into_iter()
        .map(|(name, a, b, a_label, b_label, cite)| {
            let id = Id::odd_only(format!("odd:{name}"), seq(name), konst(a), scalar_b(b))
                .formula(format!("H_(2m+1) = (-1)^(m+1) ({a_label})^(2m+2) prod_(l=1..m) ({b_label})^(2(m+1-l))"))
                .cite(cite)
                .group(Group::TableOddOnly)
                .cells("m+1", a_label, b_label);
            if name == "E_{k+2}(1)" {
                id.status(Status::ReportOnly)
            } else {
                id
            }
        })
        .collect();
    out.push(
        Id::odd_only("odd:kE_{k-1}(x)", seq("kE_{k-1}(x)"), |_| Term::Poly(Poly::one()), |l| Term::Poly(Poly::constant(r(l.pow(4)))))
            .formula("H_(2m+1) = (-1)^(m+1) prod_(l=1..m) (l^4)^(2(m+1-l))")
            .cite("derivative of E_k(x)")
            .group(Group::TableOddOnly)
            .cells("m+1", "1", "l^4")
            .max(7),
    );
    out
}

/// Parameter sets used for the difference and sum families.
pub const DIFF_PARAMS: [(u64, u64, u64); 6] = [(1, 0, 1), (1, 0, 3), (2, 0, 1), (3, 1, 2), (4, 1, 3), (6, 1, 5)];

fn diff_families() -> Vec<Id> {
    let mut out = Vec::new();
    for (q, r_, s) in DIFF_PARAMS {
        let d = s - r_;
        let params = |id: Id| id.param("q", q).param("r", r_).param("s", s);

        let qr = r(q);
        let vanish = Vanishing { odd_from: (d % q == 0).then_some(d / q), ..Vanishing::odd_only() };
        let id = Id::odd_only(
            format!("odd:diffB(q={q},r={r_},s={s})"),
            diff_sum(false, Sign::Minus, q, r_, s).expect("valid parameters"),
            move |m| sc(r(d) / qr.pow(m as i64 + 1)),
            move |l| sc(r(l.pow(4)) * (r(d * d) - r(q * l).pow(2)) / r(4 * (2 * l - 1) * (2 * l + 1))),
        )
        .formula("H_(2m+1) = (-1)^(m+1) ((s-r)/q^(m+1))^(2m+2) prod_(l=1..m) (l^4((s-r)^2-(ql)^2)/(4(2l-1)(2l+1)))^(2(m+1-l))")
        .cite("differences of Bernoulli polynomials, B_k((x+r)/q) - B_k((x+s)/q)")
        .group(Group::TableOddOnly)
        .cells("m+1", "(s-r)/q^(m+1)", "l^4((s-r)^2-(ql)^2)/(4(2l-1)(2l+1))")
        .vanishing(vanish)
        .max(7);
        out.push(params(id));

        let rho = r(d) / r(q);
        let rho2 = rho.pow(2);
        let even_rho = (d % (2 * q) == 0).then_some(d / (2 * q));
        let id = Id::odd_only(
            format!("odd:diffE(q={q},r={r_},s={s})"),
            diff_sum(true, Sign::Minus, q, r_, s).expect("valid parameters"),
            konst(rho.clone()),
            move |l| sc(r(l * l) / r(4) * (&rho2 - r(2 * l).pow(2))),
        )
        .formula("H_(2m+1) = (-1)^(m+1) ((s-r)/q)^(2m+2) prod_(l=1..m) (l^2/4 (((s-r)/q)^2-(2l)^2))^(2(m+1-l))")
        .cite("differences of Euler polynomials, E_k((x+r)/q) - E_k((x+s)/q)")
        .group(Group::TableOddOnly)
        .cells("m+1", "(s-r)/q", "l^2((s-r)^2-(2ql)^2)/(4q^2)")
        .vanishing(Vanishing { odd_from: even_rho, ..Vanishing::odd_only() })
        .max(7);
        out.push(params(id));

        let rho_sum = rho.clone();
        let odd_rho = (d % q == 0 && (d / q) % 2 == 1).then_some(d / q);
        let id = Id::custom(
            format!("H_sumE(q={q},r={r_},s={s})"),
            diff_sum(true, Sign::Plus, q, r_, s).expect("valid parameters"),
            move |n| sc(misc::euler_sum(&rho_sum, n)),
        )
        .formula(
            "H_(2m) = (-1)^m 2^(2m+1)/m!^2 prod_(l=1..m) (l^2/4 (rho^2-(2l-1)^2))^(2(m+1-l)); \
             H_(2m+1) = prod_(l=0..m) l!^4/16^l (rho^2-(2l+1)^2)^(2(m-l)+1); rho = (s-r)/q",
        )
        .cite("sums of Euler polynomials, E_k((x+r)/q) + E_k((x+s)/q)")
        .vanishing(Vanishing {
            even_from: odd_rho.map(|p| p.div_ceil(2)),
            odd_from: odd_rho.map(|p| (p - 1) / 2),
            nonzero_otherwise: true,
        })
        .max(7);
        out.push(params(id));
    }
    out
}

fn theorems() -> Vec<Id> {
    let mut out = vec![
        custom("Hn_Ek", "E_k", misc::euler_numbers)
            .formula("(-1)^(C(n+1,2)) prod_(l=1..n) l!^2")
            .cite("[AC, (4.2)]"),
        custom("H_kEk-1", "kE_{k-1}", misc::derivative_euler_numbers)
            .formula("H_(2m) = 0; H_(2m+1) = (-1)^(m+1) 2^(4m(m+1)) prod_(l=1..m) l!^8")
            .cite("derivative of E_k(x) at x = 0")
            .vanishing(Vanishing::odd_only())
            .max(7),
        Id::custom("H_kEk-1(x)", seq("kE_{k-1}(x)"), |n| Term::Poly(Poly::constant(misc::derivative_euler_polys(n))))
            .formula("H_(2m) = 0; H_(2m+1) = (-1)^(m+1) prod_(l=1..m) l!^8")
            .cite("derivative of E_k(x)")
            .vanishing(Vanishing::odd_only()),
        Id::all_n(
            "Hn_B2k+1_poly",
            seq("B_{2k+1}((x+1)/2)"),
            SignPattern::BinomN1,
            |_| Term::Poly(Poly::monomial(rat(1, 2), 1)),
            |l| Term::Poly(x2_minus(r(l.pow(4)) / r(4 * (2 * l + 1) * (2 * l - 1)), r(l * l))),
        )
        .formula("(-1)^(C(n+1,2)) (x/2)^(n+1) prod_(l=1..n) (l^4(x^2-l^2)/(4(2l+1)(2l-1)))^(n+1-l)")
        .cite("odd-index Bernoulli polynomials at (1+x)/2"),
    ];
    for nu in 0..=2u64 {
        out.push(
            Id::custom(
                format!("Hn_E2k+nu_poly(nu={nu})"),
                seq(&format!("E_{{2k+{nu}}}((x+1)/2)")),
                move |n| Term::Poly(misc::euler_half_shift(nu, n)),
            )
            .formula("(-1)^(C(n+1,2)) E_nu((x+1)/2)^(n+1) prod_(l=1..n) (l^2/4 (x^2-(2l+nu-1)^2))^(n+1-l)")
            .cite("Euler polynomials at (1+x)/2")
            .param("nu", nu),
        );
    }
    out
}

fn characters() -> Vec<Id> {
    let mut out = Vec::new();
    for q in [3u64, 4, 6] {
        let label = if q == 3 { "chi3" } else if q == 4 { "chi4" } else { "chi6" };
        let qr = r(q);
        let q2 = q - 2;
        out.push(
            Id::odd_only(
                format!("H_Bchi(q={q})"),
                seq(&format!("B_{{k,{label}}}")),
                move |m| sc(qr.pow(m as i64 - 1) * r(q2)),
                move |l| sc(r(l.pow(4)) * (r(q2 * q2) - r(q * l).pow(2)) / r(4 * (2 * l + 1) * (2 * l - 1))),
            )
            .formula("H_(2m+1) = (-1)^(m+1) (q^(m-1)(q-2))^(2m+2) prod_(l=1..m) (l^4((q-2)^2-(ql)^2)/(4(2l+1)(2l-1)))^(2(m+1-l))")
            .cite("generalized Bernoulli numbers, two-valued character")
            .group(Group::Character)
            .param("q", q)
            .max(7),
        );
    }
    for q in [4u64, 6] {
        let qr = r(q);
        let qt2 = (r(q - 2) / r(q)).pow(2);
        out.push(
            Id::odd_only(
                format!("H_chi2q1(q={q})"),
                seq(&format!("B_{{k+1,chi{}_1}}(x)/(k+1)", 2 * q)),
                move |m| sc(r(q - 2) / r(2) * qr.pow(2 * m as i64)),
                move |l| sc(r(l * l) / r(4) * (&qt2 - r(4 * l * l))),
            )
            .formula("H_(2m+1) = (-1)^(m+1) ((q-2)/2 q^(2m))^(2m+2) prod_(l=1..m) (l^2/4 (qt^2-4l^2))^(2(m+1-l)); qt = (q-2)/q")
            .cite("generalized Bernoulli polynomials, first character modulo 2q")
            .group(Group::Character)
            .param("q", q)
            .max(7),
        );
        out.push(
            Id::custom(
                format!("H_chi2q2(q={q})"),
                seq(&format!("B_{{k+1,chi{}_2}}(x)/(k+1)", 2 * q)),
                move |n| Term::Poly(Poly::constant(misc::char_sum_family(q, n))),
            )
            .formula(
                "H_(2m) = (-1)^(m+1) q^(2m(2m+1))/m!^2 prod_(l=1..m) (l^2/4 (qt^2-(2l-1)^2))^(2(m+1-l)); \
                 H_(2m+1) = (q^(2m+1)/2)^(2m+2) prod_(l=0..m) l!^4/16^l (qt^2-(2l+1)^2)^(2(m-l)+1)",
            )
            .cite("generalized Bernoulli polynomials, second character modulo 2q")
            .group(Group::Character)
            .param("q", q)
            .max(7),
        );
    }
    out
}

fn power_sum_family() -> Vec<Id> {
    let mut out = Vec::new();
    for s in 1..=4u64 {
        let s2 = r(s * s);
        out.push(
            Id::odd_only(
                format!("H_Sk(s={s})"),
                power_sums(s).expect("s >= 1"),
                move |_| sc(r(s)),
                move |l| sc(r(l.pow(4)) * (&s2 - r(l * l)) / r(4 * (2 * l + 1) * (2 * l - 1))),
            )
            .formula("H_(2m+1) = (-s^2)^(m+1) prod_(l=1..m) (l^4(s^2-l^2)/(4(2l+1)(2l-1)))^(2(m+1-l))")
            .cite("power sums S_k(s) = k(1^(k-1) + ... + s^(k-1))")
            .group(Group::PowerSum)
            .vanishing(Vanishing { odd_from: Some(s), ..Vanishing::odd_only() })
            .param("s", s),
        );
        let id = if s % 2 == 0 {
            let t = s / 2;
            Id::odd_only(
                format!("H_Tk(s={s})"),
                alt_power_sums(s).expect("s >= 1"),
                move |_| sc(r(t)),
                move |l| sc(r(l * l) * (r(t * t) - r(l * l))),
            )
            .formula("s = 2t: H_(2m+1) = (-1)^(m+1) t^(2m+2) prod_(l=1..m) (l^2(t^2-l^2))^(2(m+1-l))")
            .vanishing(Vanishing { odd_from: Some(t), ..Vanishing::odd_only() })
        } else {
            Id::custom(format!("H_Tk(s={s})"), alt_power_sums(s).expect("s >= 1"), move |n| {
                sc(misc::alt_power_sum_odd(s, n))
            })
            .formula(
                "s odd: H_(2m) = (-1)^m/m!^2 prod_(l=1..m) (l^2/4 (s^2-(2l-1)^2))^(2(m+1-l)); \
                 H_(2m+1) = 4^(-(m+1)) prod_(l=0..m) l!^4/16^l (s^2-(2l+1)^2)^(2(m-l)+1)",
            )
            .vanishing(Vanishing { even_from: Some(s.div_ceil(2)), odd_from: Some((s - 1) / 2), nonzero_otherwise: true })
        };
        out.push(
            id.max(9)
                .cite("alternating power sums T_k(s) = 1 - 2^k + ... + (-1)^(s-1) s^k")
                .group(Group::PowerSum)
                .param("s", s),
        );
    }
    out
}

fn derivative_corollaries() -> Vec<Id> {
    type Row = (&'static str, fn(u64) -> Rational, &'static str, &'static str);
    let rows: Vec<Row> = vec![
        ("(2k+1)E_{2k}", misc::odd_euler_derivative, "2^(2n(n+1)) prod_(l=1..n) l!^4", "E_{2k+1}((1+x)/2) at x = 0"),
        ("(2^{2k+2}-1)B_{2k+2}", misc::even_euler_derivative, "(n+1)!/2^(n+1) prod_(l=1..n) l!^4", "E_{2k+2}((1+x)/2) at x = 1"),
        ("(2k+1)B_{2k}(1/2)", misc::odd_bernoulli_derivative, "prod_(l=1..n) l!^8/((2l)!(2l+1)!)", "B_{2k+1}((1+x)/2) at x = 0"),
        (
            "(2k+3)B_{2k+2}",
            misc::shifted_bernoulli_derivative,
            "2^(-(n+1)) prod_(l=1..n) (l^3(l+1)^3/(4(2l+1)^2))^(n+1-l)",
            "B_{2k+3}((1+x)/2) at x = -1",
        ),
    ];
    rows.into_iter()
        .map(|(name, f, formula, family)| {
            custom(&format!("deriv:{name}"), name, f)
                .formula(formula)
                .cite(format!("derivative method, {family}"))
                .group(Group::Derivative)
        })
        .collect()
}

fn misc_identities() -> Vec<Id> {
    type Row = (&'static str, fn(u64) -> Rational, &'static str, &'static str);
    let rows: Vec<Row> = vec![
        ("B_k/k!", misc::bernoulli_over_factorial, "(-1)^(C(n+1,2)) (n+1) prod_(l=1..n) (1/(4(2l-1)(2l+1)))^(n+1-l)", "[AW]"),
        ("B_{2k+2}/(2k+2)!", misc::even_bernoulli_over_factorial_2, "(1/4)^((n+1)^2) prod_(l=1..2n+1) (1/(2l+1))^(2n+2-l)", "[Kr]"),
        ("B_{2k+4}/(2k+4)!", misc::even_bernoulli_over_factorial_4, "(-1/36)^(n+1) (1/4)^((n+1)^2) prod_(l=1..2n+1) (1/(2l+3))^(2n+2-l)", "[Kr]"),
        (
            "B_{2k+6}/(2k+6)!",
            misc::even_bernoulli_over_factorial_6,
            "(n+2)(2n+5)/(3 60^(2n+2)) (1/4)^((n+1)^2) prod_(l=1..2n+1) (1/(2l+5))^(2n+2-l)",
            "[Kr]",
        ),
        (
            "E_{k+3}(1)/(k+3)!",
            misc::euler_one_over_factorial_3,
            "(-1)^(C(n+2,2)) (1/24)^(n+1) prod_(l=1..n) (1/(4(2l+1)(2l+3)))^(n+1-l) times C(n+3,2) (n odd) or C(n+2,2) (n even)",
            "[Ha, (H21)]",
        ),
        (
            "E_{2k+5}(1)/(2k+5)!",
            misc::euler_one_over_factorial_5,
            "(1/(2 6!))^(n+1) C(2n+4,2) prod_(l=1..n) (1/(16(4l+1)(4l+3)^2(4l+5)))^(n+1-l)",
            "[Ha, (H23)]",
        ),
        (
            "E_{2k+7}(1)/(2k+7)!",
            misc::euler_one_over_factorial_7,
            "(-1/(5 8!))^(n+1) (4n^2+18n+17)/3 C(2n+6,4) prod_(l=1..n) (1/(16(4l+3)(4l+5)^2(4l+7)))^(n+1-l)",
            "[Ha, (H24)]",
        ),
        (
            "B_{k+2}(-1)",
            misc::bernoulli_at_minus_one,
            "(-1)^(C(n+1,2)) (1/6)^(n+1) ((n+1)(n+2)^2(n+3)+1) prod_(l=1..n) (l(l+1)^2(l+2)/(4(2l+1)(2l+3)))^(n+1-l)",
            "[FK]",
        ),
        (
            "B_k-2B_{k+1}+B_{k+2}",
            misc::bernoulli_at_minus_one,
            "same value as for B_{k+2}(-1)",
            "[FK]",
        ),
    ];
    rows.into_iter()
        .map(|(name, f, formula, cite)| custom(&format!("misc:{name}"), name, f).formula(formula).cite(cite).group(Group::Misc))
        .collect()
}

fn umbral_family() -> Vec<Id> {
    let mut out = Vec::new();
    for a in 1..=2u64 {
        for b in 1..=2u64 {
            for c in 0..=2u64 {
                for d in 0..=2u64 {
                    out.push(
                        Id::custom(
                            format!("fk(a={a},b={b},c={c},d={d})"),
                            umbral(a, b, c, d).expect("valid parameters"),
                            move |n| sc(fk_closed_form(a, b, c, d, n).expect("valid parameters")),
                        )
                        .formula(
                            "(-1)^(C(n+1,2)) ((a+c-1)!(b+c-1)!(a+d-1)!(b+d-1)!/(S-1)!)^(n+1) prod_(l=1..n) \
                             (l(a+c+l-1)(b+c+l-1)(a+d+l-1)(b+d+l-1)(S+l-2)/((S+2l-3)(S+2l-2)^2(S+2l-1)))^(n+1-l); \
                             S = a+b+c+d",
                        )
                        .cite("[FK]")
                        .group(Group::Umbral)
                        .param("a", a)
                        .param("b", b)
                        .param("c", c)
                        .param("d", d)
                        .max(6),
                    );
                }
            }
        }
    }
    out
}

fn build() -> Vec<Id> {
    let mut v = table_all_n();
    v.extend(table_odd_only());
    v.extend(diff_families());
    v.extend(theorems());
    v.extend(characters());
    v.extend(power_sum_family());
    v.extend(derivative_corollaries());
    v.extend(misc_identities());
    v.extend(umbral_family());
    v
}

fn cached() -> &'static [Id] {
    static REGISTRY: OnceLock<Vec<Id>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

/// Every registered identity, in catalog order.
pub fn registry() -> Vec<Id> {
    cached().to_vec()
}

/// Looks up an identity by id. Whitespace, `_`, `{` and `}` are ignored
/// when the exact id is not found.
pub fn identity(id: &str) -> Result<Id> {
    let all = cached();
    if let Some(found) = all.iter().find(|i| i.id == id) {
        return Ok(found.clone());
    }
    let key = normalize(id);
    all.iter()
        .find(|i| normalize(&i.id) == key)
        .cloned()
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique() {
        let all = registry();
        assert!(all.len() >= 50, "{}", all.len());
        let ids: BTreeSet<_> = all.iter().map(|i| i.id.clone()).collect();
        assert_eq!(ids.len(), all.len());
        let keys: BTreeSet<_> = all.iter().map(|i| normalize(&i.id)).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn table_counts() {
        let all = registry();
        assert_eq!(all.iter().filter(|i| i.group == Group::TableAllN).count(), 25);
        let odd: Vec<_> = all.iter().filter(|i| i.group == Group::TableOddOnly).collect();
        assert_eq!(odd.len(), 7 + 2 * DIFF_PARAMS.len());
        assert!(odd.iter().any(|i| i.id.starts_with("odd:diffB(")));
        assert!(odd.iter().any(|i| i.id.starts_with("odd:diffE(")));
    }

    #[test]
    fn worked_values() {
        assert_eq!(identity("Hn_Ek").unwrap().eval(2).unwrap(), sc(rat(-4, 1)));
        assert_eq!(identity("H_kEk-1").unwrap().eval(3).unwrap(), sc(rat(256, 1)));
        let expected = Poly::monomial(rat(-1, 4), 2) * &x2_minus(rat(1, 12), rat(1, 1));
        assert_eq!(identity("Hn_B2k+1_poly").unwrap().eval(1).unwrap(), Term::Poly(expected));
        assert_eq!(identity("odd:E_{k+2}(1)").unwrap().status, Status::ReportOnly);
        assert!(identity("nope").is_err());
        assert!(identity("Hn_Ek").unwrap().eval(201).is_err());
    }

    #[test]
    fn odd_only_rows_vanish_at_even_index() {
        for id in registry().iter().filter(|i| i.format == super::super::Format::OddOnly) {
            assert!(id.eval(4).unwrap().as_scalar().unwrap().is_zero(), "{}", id.id);
        }
    }
}
