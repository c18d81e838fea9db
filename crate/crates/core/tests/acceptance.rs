//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use appell_hankel::closed_forms::{identity, misc, registry, Group, Status};
use appell_hankel::exact::{cancel_and_eval_limit, rat, Domain, Poly, Rational, Term};
use appell_hankel::hankel::{
    checkerboard_split, det_matrix, hankel_det, hankel_det_of, shift_factor_dn, shift_relation_check, Algorithm,
};
use appell_hankel::orthopoly::{builtin_recurrence_bern_odd, derivative_families};
use appell_hankel::sequences::numbers::{binomial, factorial};
use appell_hankel::sequences::{
    bernoulli_number, bernoulli_poly, euler_number, euler_poly, parse_spec, tangent_number, zigzag_number,
};
use appell_hankel::verify::{to_plain, verify_identity};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

/// Verifies `id` on `0..=max` and requires a pass.
fn asserted(id: &str, max: usize) -> std::result::Result<(), String> {
    let r = verify_identity(id, Some(max), &[]).map_err(|e| format!("{id}: {e}"))?;
    if !r.passed {
        return fail(to_plain(&[r]).trim_end().to_string());
    }
    Ok(())
}

fn all(ids: &[String], max: usize) -> std::result::Result<(), String> {
    ids.iter().try_for_each(|id| asserted(id, max))
}

fn spec_det(name: &str, n: usize) -> std::result::Result<Term, String> {
    let spec = parse_spec(name).map_err(|e| e.to_string())?;
    hankel_det(&spec, n).map(|d| d.value).map_err(|e| format!("{name} n={n}: {e}"))
}

fn eq_or<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        fail(format!("{what}: got {got}, expected {want}"))
    }
}

fn r(v: u64) -> Rational {
    Rational::from(v)
}

fn fact(n: u64) -> Rational {
    Rational::from(factorial(n))
}

fn euler_numbers() -> Check {
    for n in 0..=8u64 {
        let want = Rational::sign_power(n * (n + 1) / 2) * (1..=n).map(|l| fact(l).pow(2)).product::<Rational>();
        eq_or(&format!("H_{n}(E_k)"), spec_det("E_k", n as usize)?, Term::Scalar(want))?;
    }
    asserted("Hn_Ek", 8)?;
    Ok("n = 0..8".into())
}

fn derivative_sequence() -> Check {
    for m in 0..=3u64 {
        eq_or(&format!("H_{}(kE_(k-1))", 2 * m), spec_det("kE_{k-1}", 2 * m as usize)?, Term::Scalar(Rational::zero()))?;
        let want = Rational::sign_power(m + 1)
            * r(2).pow(4 * (m * (m + 1)) as i64)
            * (1..=m).map(|l| fact(l).pow(8)).product::<Rational>();
        eq_or(&format!("H_{}(kE_(k-1))", 2 * m + 1), spec_det("kE_{k-1}", 2 * m as usize + 1)?, Term::Scalar(want))?;
    }
    asserted("H_kEk-1", 7)?;
    asserted("odd:kE_{k-1}", 7)?;
    asserted("H_kEk-1(x)", 5)?;
    asserted("odd:kE_{k-1}(x)", 5)?;
    Ok("m = 0..3; polynomial version n = 0..5".into())
}

fn bernoulli_half_shift() -> Check {
    asserted("Hn_B2k+1_poly", 5)?;
    asserted("all:B_{2k+1}((x+1)/2)", 5)?;
    Ok("polynomial identity, n = 0..5".into())
}

fn euler_half_shift() -> Check {
    for nu in 0..=2 {
        asserted(&format!("Hn_E2k+nu_poly(nu={nu})"), 5)?;
        let row = if nu == 0 { "all:E_{2k}((x+1)/2)".to_string() } else { format!("all:E_{{2k+{nu}}}((x+1)/2)") };
        asserted(&row, 5)?;
    }
    Ok("nu = 0, 1, 2; n = 0..5".into())
}

const PARAMS: [(u64, u64, u64); 6] = [(1, 0, 1), (1, 0, 3), (2, 0, 1), (3, 1, 2), (4, 1, 3), (6, 1, 5)];

fn bernoulli_differences() -> Check {
    let mut onsets = Vec::new();
    for (q, rr, s) in PARAMS {
        let id = format!("odd:diffB(q={q},r={rr},s={s})");
        asserted(&id, 7)?;
        let spec = parse_spec(&format!("diffB(q={q},r={rr},s={s})")).map_err(|e| e.to_string())?;
        let zeros: Vec<u64> = (0..=3u64)
            .filter(|m| hankel_det(&spec, 2 * *m as usize + 1).map(|d| d.value.to_poly().is_zero()).unwrap_or(false))
            .collect();
        let d = s - rr;
        let expected: Vec<u64> = if d % q == 0 { (d / q..=3).collect() } else { Vec::new() };
        if zeros != expected {
            return fail(format!("{id}: zero H_(2m+1) at m = {zeros:?}, expected {expected:?}"));
        }
        onsets.push(format!("({q},{rr},{s}):{}", expected.first().map_or("none".into(), |m| format!("m>={m}"))));
    }
    Ok(format!("m = 0..3; zero onsets {}", onsets.join(" ")))
}

fn euler_differences() -> Check {
    for (q, rr, s) in PARAMS {
        asserted(&format!("odd:diffE(q={q},r={rr},s={s})"), 7)?;
        asserted(&format!("H_sumE(q={q},r={rr},s={s})"), 7)?;
    }
    Ok("e^- and e^+, m = 0..3".into())
}

fn characters() -> Check {
    let mut ids: Vec<String> = [3, 4, 6].iter().map(|q| format!("H_Bchi(q={q})")).collect();
    for q in [4, 6] {
        ids.push(format!("H_chi2q1(q={q})"));
        ids.push(format!("H_chi2q2(q={q})"));
    }
    all(&ids, 7)?;
    Ok("q = 3, 4, 6 and moduli 8, 12; n = 0..7".into())
}

fn power_sums() -> Check {
    for s in 1..=4 {
        asserted(&format!("H_Sk(s={s})"), 9)?;
        asserted(&format!("H_Tk(s={s})"), 9)?;
    }
    // the onsets themselves, read off the oracle
    for s in 1..=4u64 {
        let spec = parse_spec(&format!("S_k(s={s})")).map_err(|e| e.to_string())?;
        for m in 0..=4u64 {
            let z = hankel_det(&spec, 2 * m as usize + 1).map_err(|e| e.to_string())?.value.to_poly().is_zero();
            if z != (m >= s) {
                return fail(format!("S_k(s={s}): H_(2m+1) zero = {z} at m = {m}"));
            }
        }
        let spec = parse_spec(&format!("T_k(s={s})")).map_err(|e| e.to_string())?;
        for m in 0..=4u64 {
            let even = hankel_det(&spec, 2 * m as usize).map_err(|e| e.to_string())?.value.to_poly().is_zero();
            let odd = hankel_det(&spec, 2 * m as usize + 1).map_err(|e| e.to_string())?.value.to_poly().is_zero();
            let (want_even, want_odd) = if s % 2 == 0 { (true, m >= s / 2) } else { (m >= s.div_ceil(2), m >= (s - 1) / 2) };
            if even != want_even || odd != want_odd {
                return fail(format!("T_k(s={s}) m = {m}: zeros ({even}, {odd}), expected ({want_even}, {want_odd})"));
            }
        }
    }
    Ok("s = 1..4, m = 0..4, onsets observed".into())
}

fn derivative_method() -> Check {
    for f in derivative_families() {
        let id = format!("deriv:{}", f.target);
        let closed = identity(&id).map_err(|e| e.to_string())?;
        for n in 0..=5 {
            let direct = spec_det(f.target, n)?;
            let limit = f.hankel_via_limit(n).map_err(|e| format!("{id} n={n}: {e}"))?;
            let cf = closed.eval(n).map_err(|e| e.to_string())?;
            eq_or(&format!("{id} limit vs direct, n={n}"), Term::Scalar(limit), direct.clone())?;
            eq_or(&format!("{id} closed form vs direct, n={n}"), cf, direct)?;
        }
    }
    Ok("four families, n = 0..5, direct = limit = closed form".into())
}

fn shift_machinery() -> Check {
    for (name, max) in [("B_k", 4), ("E_k", 4), ("B_{2k+1}((x+1)/2)", 3)] {
        let spec = parse_spec(name).map_err(|e| e.to_string())?;
        for n in 0..=max {
            let c = shift_relation_check(&spec, n).map_err(|e| format!("{name} n={n}: {e}"))?;
            if !c.holds {
                return fail(format!("{name} n={n}: H_n(c_(k+1)) = {} but d_n H_n(c_k) = {}", c.shifted, c.dn.times(&c.base)));
            }
        }
    }
    let coeffs = builtin_recurrence_bern_odd(6);
    let den = Poly::from_ints(&[-1, 0, 1]);
    for n in 2..=6 {
        let dn = shift_factor_dn(&coeffs, n).map_err(|e| e.to_string())?.to_poly();
        let lim = cancel_and_eval_limit(&dn, &den, &rat(-1, 1)).map_err(|e| e.to_string())?;
        eq_or(&format!("limit n={n}"), lim.clone(), misc::shift_limit(n as u64))?;
        match n {
            2 => eq_or("limit n=2", lim, rat(3, 10))?,
            3 => eq_or("limit n=3", lim, rat(-36, 35))?,
            _ => {}
        }
    }
    Ok("relation holds; limits 3/10, -36/35; product formula n = 2..6".into())
}

fn tables() -> Check {
    let reg = registry();
    let mut rows_all = 0;
    let mut rows_odd = 0;
    let mut report = String::new();
    for id in &reg {
        match id.group {
            Group::TableAllN => {
                rows_all += 1;
                asserted(&id.id, if id.sequence.is_polynomial() { 4 } else { 6 })?;
            }
            Group::TableOddOnly => {
                rows_odd += 1;
                let r = verify_identity(&id.id, Some(7), &[]).map_err(|e| e.to_string())?;
                if id.status == Status::ReportOnly {
                    let agree: Vec<String> = r
                        .records
                        .iter()
                        .map(|rec| format!("{}:{}", rec.index, if rec.ok() { "agree" } else { "differ" }))
                        .collect();
                    report = format!("{} report-only [{}]", id.id, agree.join(" "));
                } else if !r.passed {
                    return fail(to_plain(&[r]).trim_end().to_string());
                }
            }
            _ => {}
        }
    }
    if rows_all != 25 {
        return fail(format!("{rows_all} all-n rows, expected 25"));
    }
    Ok(format!("{rows_all} all-n rows, {rows_odd} odd-only rows; {report}"))
}

fn misc_and_umbral() -> Check {
    let ids: Vec<String> = registry().iter().filter(|i| i.group == Group::Misc).map(|i| i.id.clone()).collect();
    all(&ids, 5)?;
    let mut fk = Vec::new();
    for a in 1..=2 {
        for b in 1..=2 {
            for c in 0..=2 {
                for d in 0..=2 {
                    fk.push(format!("fk(a={a},b={b},c={c},d={d})"));
                }
            }
        }
    }
    all(&fk, 3)?;
    let terms = |name: &str| parse_spec(name).and_then(|s| s.terms(8)).map_err(|e| e.to_string());
    eq_or("fk(1,1,0,0) terms = B_k", format!("{:?}", terms("fk(a=1,b=1,c=0,d=0)")?), format!("{:?}", terms("B_k")?))?;
    eq_or("fk(1,1,1,1) terms = B_{k+2}", format!("{:?}", terms("fk(a=1,b=1,c=1,d=1)")?), format!("{:?}", terms("B_{k+2}")?))?;
    let neg: Vec<Term> = terms("B_{k+1}")?.iter().map(|t| -t).collect();
    eq_or("fk(1,1,1,0) terms = -B_{k+1}", format!("{:?}", terms("fk(a=1,b=1,c=1,d=0)")?), format!("{neg:?}"))?;
    for n in 0..=3 {
        let eval = |id: &str| identity(id).and_then(|i| i.eval(n)).map_err(|e| e.to_string());
        eq_or(&format!("(1,1,0,0) vs B_k row, n={n}"), eval("fk(a=1,b=1,c=0,d=0)")?, eval("all:B_k")?)?;
        eq_or(&format!("(1,1,1,1) vs B_(k+2) row, n={n}"), eval("fk(a=1,b=1,c=1,d=1)")?, eval("all:B_{k+2}")?)?;
        let sign = Rational::sign_power(n as u64 + 1);
        eq_or(&format!("(1,1,1,0) vs B_(k+1) row, n={n}"), eval("fk(a=1,b=1,c=1,d=0)")?, eval("all:B_{k+1}")?.scale(&sign))?;
    }
    for n in 0..=5 {
        eq_or(&format!("B_k-2B_(k+1)+B_(k+2) vs B_(k+2)(-1), n={n}"), spec_det("B_k-2B_{k+1}+B_{k+2}", n)?, spec_det("B_{k+2}(-1)", n)?)?;
    }
    Ok(format!("{} misc identities n = 0..5; 36 umbral cases n = 0..3; reductions hold", ids.len()))
}

fn structural() -> Check {
    let x = Poly::x();
    // scaling
    for name in ["B_k", "E_k"] {
        let spec = parse_spec(name).map_err(|e| e.to_string())?;
        for n in 0..=3usize {
            let scaled: Vec<Term> = spec
                .terms(2 * n as u64)
                .map_err(|e| e.to_string())?
                .iter()
                .enumerate()
                .map(|(k, c)| Term::Poly(x.pow(k as u32).scale(&c.as_scalar().unwrap())))
                .collect();
            let lhs = hankel_det_of(&scaled).map_err(|e| e.to_string())?;
            let rhs = Term::Poly(x.pow((n * (n + 1)) as u32)).times(&spec_det(name, n)?);
            eq_or(&format!("scaling {name} n={n}"), lhs, rhs)?;
        }
    }
    // binomial transform invariance and its two consequences
    for n in 0..=5usize {
        let b: Vec<Rational> = (0..=2 * n).map(bernoulli_number).collect();
        let transformed: Vec<Term> = (0..=2 * n)
            .map(|k| {
                let mut p = Poly::zero();
                for (j, bj) in b.iter().enumerate().take(k + 1) {
                    p = &p + &x.pow((k - j) as u32).scale(&(bj * Rational::from(binomial(k as u64, j as u64))));
                }
                Term::Poly(p)
            })
            .collect();
        let h = hankel_det_of(&transformed).map_err(|e| e.to_string())?;
        eq_or(&format!("binomial transform n={n}"), h, spec_det("B_k", n)?)?;
        eq_or(&format!("H_n(B_k(x)) n={n}"), spec_det("B_k(x)", n)?, spec_det("B_k", n)?)?;
        let e = spec_det("E_k", n)?.scale(&r(2).pow(-((n * (n + 1)) as i64)));
        eq_or(&format!("H_n(E_k(x)) n={n}"), spec_det("E_k(x)", n)?, e)?;
    }
    // checkerboard split against plain elimination, both parities
    for (name, max) in [("E_k", 8), ("kE_{k-1}", 8), ("E_{k+1}", 8), ("E_k(1/2)", 8)] {
        let spec = parse_spec(name).map_err(|e| e.to_string())?;
        for n in 0..=max {
            let rows = appell_hankel::hankel::hankel_matrix(&spec, n).map_err(|e| e.to_string())?.rows();
            let split = checkerboard_split(&rows).map_err(|e| format!("{name} n={n}: {e}"))?;
            let plain = det_matrix(&rows, Algorithm::FractionFreeBareiss).map_err(|e| e.to_string())?.value;
            eq_or(&format!("checkerboard {name} n={n}"), split.total, plain)?;
        }
    }
    // product conversions
    for n in 0..=10u64 {
        let lhs: Rational = (1..=n).map(fact).product();
        let rhs: Rational = (1..=n).map(|l| r(l).pow((n + 1 - l) as i64)).product();
        eq_or(&format!("factorial product n={n}"), lhs, rhs)?;
        for nu in 0..=2u64 {
            let lhs: Rational = (1..=n).map(|l| fact(2 * l + nu)).product();
            let rhs = fact(nu).pow(n as i64)
                * (1..=n).map(|l| r((2 * l - 1 + nu) * (2 * l + nu)).pow((n + 1 - l) as i64)).product::<Rational>();
            eq_or(&format!("(2l+{nu})! product n={n}"), lhs, rhs)?;
        }
        for nu in 0..=3u64 {
            let lhs: Rational = (1..=n).map(|l| fact(4 * l + nu)).product();
            let rhs = fact(nu).pow(n as i64)
                * (1..=n)
                    .map(|l| r((4 * l - 3 + nu) * (4 * l - 2 + nu) * (4 * l - 1 + nu) * (4 * l + nu)).pow((n + 1 - l) as i64))
                    .product::<Rational>();
            eq_or(&format!("(4l+{nu})! product n={n}"), lhs, rhs)?;
        }
    }
    Ok("scaling, binomial invariance, checkerboard sign, product conversions".into())
}

fn bridges() -> Check {
    let half = rat(1, 2);
    for n in 1..=12usize {
        // E_{n-1}(x) = 2^n/n (B_n((x+1)/2) - B_n(x/2))
        let bn = bernoulli_poly(n);
        let diff = &bn.affine_substitute(&half, &half) - &bn.affine_substitute(&half, &Rational::zero());
        eq_or(&format!("E_(n-1)(x) via B_n, n={n}"), diff.scale(&(r(2).pow(n as i64) / r(n as u64))), euler_poly(n - 1))?;
        let e1 = euler_poly(n).eval(&Rational::one());
        eq_or(
            &format!("(n+1)E_n(1), n={n}"),
            r(n as u64 + 1) * &e1,
            r(2) * (r(2).pow(n as i64 + 1) - Rational::one()) * bernoulli_number(n + 1),
        )?;
        eq_or(&format!("E_n(1), n={n}"), e1, r(2) / r(n as u64 + 1) * (r(2).pow(n as i64 + 1) - Rational::one()) * bernoulli_number(n + 1))?;
    }
    for k in 0..=6usize {
        eq_or(
            &format!("(2k+1)E_2k, k={k}"),
            r(2 * k as u64 + 1) * euler_number(2 * k),
            r(2).pow(4 * k as i64 + 2) * bernoulli_poly(2 * k + 1).eval(&rat(3, 4)),
        )?;
        eq_or(
            &format!("B_2k(1/2), k={k}"),
            bernoulli_poly(2 * k).eval(&half),
            (r(2).pow(1 - 2 * k as i64) - Rational::one()) * bernoulli_number(2 * k),
        )?;
        eq_or(
            &format!("(2^(2k+2)-1)B_(2k+2), k={k}"),
            (r(2).pow(2 * k as i64 + 2) - Rational::one()) * bernoulli_number(2 * k + 2),
            r(k as u64 + 1) * euler_poly(2 * k + 1).eval(&Rational::one()),
        )?;
        eq_or(&format!("zigzag even, k={k}"), zigzag_number(2 * k), Rational::sign_power(k as u64) * euler_number(2 * k))?;
        if 2 * k < 12 {
            eq_or(
                &format!("zigzag odd, k={k}"),
                zigzag_number(2 * k + 1),
                Rational::sign_power(k as u64) * r(2).pow(2 * k as i64 + 1) * euler_poly(2 * k + 1).eval(&Rational::one()),
            )?;
            eq_or(&format!("tangent, k={}", k + 1), tangent_number(k + 1), zigzag_number(2 * k + 1))?;
        }
    }
    Ok("indices <= 12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("Euler numbers", euler_numbers),
        ("derivative sequence kE_(k-1)", derivative_sequence),
        ("odd Bernoulli polynomials at (x+1)/2", bernoulli_half_shift),
        ("Euler polynomials at (x+1)/2", euler_half_shift),
        ("Bernoulli differences", bernoulli_differences),
        ("Euler differences and sums", euler_differences),
        ("character Bernoulli numbers and polynomials", characters),
        ("power sums and alternating power sums", power_sums),
        ("derivative-method corollaries", derivative_method),
        ("shift machinery", shift_machinery),
        ("catalog tables", tables),
        ("misc identities and umbral family", misc_and_umbral),
        ("structural properties", structural),
        ("cross-family bridges", bridges),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
