//! Canonical sequence names and the parser behind them.
//!
//! Names are LaTeX-flavoured ASCII (`B_{2k+1}((x+1)/2)`, `kE_{k-1}`).
//! Lookup ignores whitespace, underscores and braces, so `E_k`, `Ek` and
//! `E_{k}` all name the same sequence.
//!
//! Besides the fixed catalog, these forms are parsed:
//!
//! * `B_{ak+b}`, `E_{ak+b}` with an optional argument `(p/q)`, `(x)`,
//!   `((x+r)/q)`, an optional prefix `(ak+b)` or `(2^{ak+b}-1)` and an
//!   optional suffix `/(ak+b)!`
//! * `diffB(q=..,r=..,s=..)`, `sumB(..)`, `diffE(..)`, `sumE(..)`, with an
//!   optional `x=p/q` to fix the free variable
//! * `S_k(s=..)`, `T_k(s=..)`, `fk(a=..,b=..,c=..,d=..)`
//! * `B_{k,chi4}`, `B_{k,chi4}(x)`, `B_{k+1,chi8_1}(x)/(k+1)`

use std::collections::BTreeMap;

use super::character::DirichletCharacter;
use super::spec::{Arg, Base, Multiplier, SequenceSpec, Sign};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};

pub fn normalize(name: &str) -> String {
    name.chars().filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}')).collect()
}

fn spec(name: &str, base: Base, a: u64, b: u64) -> SequenceSpec {
    SequenceSpec::new(name, base).index(a, b).expect("catalog index maps are valid")
}

fn half_shift() -> Arg {
    Arg::affine(rat(1, 2), rat(1, 2))
}

/// Every built-in named sequence.
pub fn catalog() -> Vec<SequenceSpec> {
    use Base::*;
    use Multiplier::*;
    let one = || Arg::point(Rational::one());
    let half = || Arg::point(rat(1, 2));
    let zero = || vec![Rational::zero()];
    let mut v = vec![
        spec("B_k", BernoulliNumber, 1, 0),
        spec("B_{k+1}", BernoulliNumber, 1, 1),
        spec("B_{k+2}", BernoulliNumber, 1, 2),
        spec("B_{2k}", BernoulliNumber, 2, 0),
        spec("B_{2k+2}", BernoulliNumber, 2, 2),
        spec("B_{2k+4}", BernoulliNumber, 2, 4),
        spec("B_{2k}(1/2)", Bernoulli(half()), 2, 0),
        spec("(2^{2k+2}-1)B_{2k+2}", BernoulliNumber, 2, 2).times(PowMinusOne { base: 2, a: 2, b: 2 }),
        spec("(2k+1)B_{2k}(1/2)", Bernoulli(half()), 2, 0).times(Multiplier::Linear { a: 2, b: 1 }),
        spec("(2k+3)B_{2k+2}", BernoulliNumber, 2, 2).times(Multiplier::Linear { a: 2, b: 3 }),
        spec("B_{2k+1}((x+1)/2)", Bernoulli(half_shift()), 2, 1),
        spec("B_{2k+3}((x+1)/2)", Bernoulli(half_shift()), 2, 3),
        spec("B_k(x)", Bernoulli(Arg::x()), 1, 0),
        spec("E_k", EulerNumber, 1, 0),
        spec("E_k(x)", Euler(Arg::x()), 1, 0),
        spec("E_{k+1}(1)", Euler(one()), 1, 1),
        spec("E_{2k}", EulerNumber, 2, 0),
        spec("E_{2k+1}(1)", Euler(one()), 2, 1),
        spec("E_{2k+2}", EulerNumber, 2, 2),
        spec("E_{2k+3}(1)", Euler(one()), 2, 3),
        spec("(2k+1)E_{2k}", EulerNumber, 2, 0).times(Multiplier::Linear { a: 2, b: 1 }),
        spec("(2k+2)E_{2k+1}(1)", Euler(one()), 2, 1).times(Multiplier::Linear { a: 2, b: 2 }),
        spec("E_{k+1}(1)/(k+1)!", Euler(one()), 1, 1).times(InvFactorial { a: 1, b: 1 }),
        spec("E_{2k+1}(1)/(2k+1)!", Euler(one()), 2, 1).times(InvFactorial { a: 2, b: 1 }),
        spec("E_{2k+3}(1)/(2k+3)!", Euler(one()), 2, 3).times(InvFactorial { a: 2, b: 3 }),
        spec("E_{2k}((x+1)/2)", Euler(half_shift()), 2, 0),
        spec("E_{2k+1}((x+1)/2)", Euler(half_shift()), 2, 1),
        spec("E_{2k+2}((x+1)/2)", Euler(half_shift()), 2, 2),
        spec("E_{k+1}", EulerNumber, 1, 1),
        spec("E_{k+2}(1)", Euler(one()), 1, 2),
        spec("(0,E_1(1),E_2(1),...)", Euler(one()), 1, 1).prepend(zero()),
        spec("kE_{k-1}(x)", Euler(Arg::x()), 1, 0).prepend(zero()).times(Multiplier::Linear { a: 1, b: 1 }),
        spec("kE_{k-1}", EulerNumber, 1, 0).prepend(zero()).times(Multiplier::Linear { a: 1, b: 1 }),
        spec("(0,E_1(1)/1!,E_2(1)/2!,...)", Euler(one()), 1, 1)
            .prepend(zero())
            .times(InvFactorial { a: 1, b: 1 }),
        spec("E_{k+2}(1)/(k+2)!", Euler(one()), 1, 2).times(InvFactorial { a: 1, b: 2 }),
        spec("B_k/k!", BernoulliNumber, 1, 0).times(InvFactorial { a: 1, b: 0 }),
        spec("B_{2k+2}/(2k+2)!", BernoulliNumber, 2, 2).times(InvFactorial { a: 2, b: 2 }),
        spec("B_{2k+4}/(2k+4)!", BernoulliNumber, 2, 4).times(InvFactorial { a: 2, b: 4 }),
        spec("B_{2k+6}/(2k+6)!", BernoulliNumber, 2, 6).times(InvFactorial { a: 2, b: 6 }),
        spec("E_{k+3}(1)/(k+3)!", Euler(one()), 1, 3).times(InvFactorial { a: 1, b: 3 }),
        spec("E_{2k+5}(1)/(2k+5)!", Euler(one()), 2, 5).times(InvFactorial { a: 2, b: 5 }),
        spec("E_{2k+7}(1)/(2k+7)!", Euler(one()), 2, 7).times(InvFactorial { a: 2, b: 7 }),
        spec("B_{k+2}(-1)", Bernoulli(Arg::point(rat(-1, 1))), 1, 2),
        SequenceSpec::new(
            "B_k-2B_{k+1}+B_{k+2}",
            Base::Linear(vec![
                (rat(1, 1), spec("B_k", BernoulliNumber, 1, 0)),
                (rat(-2, 1), spec("B_{k+1}", BernoulliNumber, 1, 1)),
                (rat(1, 1), spec("B_{k+2}", BernoulliNumber, 1, 2)),
            ]),
        ),
        spec("Z_k", Zigzag, 1, 0),
        spec("tan_{k+1}", Tangent, 1, 1),
    ];
    for q in [3, 4, 6] {
        let chi = DirichletCharacter::two_valued(q).expect("q in {3,4,6}");
        v.push(char_numbers(&chi));
    }
    for q in [4u64, 6] {
        for which in [1, 2] {
            let chi = DirichletCharacter::builtin(&format!("chi{}_{which}", 2 * q)).expect("built in");
            v.push(char_shifted_poly(&chi));
        }
    }
    v
}

/// `B_{k,chi}`.
pub fn char_numbers(chi: &DirichletCharacter) -> SequenceSpec {
    SequenceSpec::new(
        format!("B_{{k,{}}}", chi.label()),
        Base::GenBernoulli { chi: chi.clone(), arg: Arg::point(Rational::zero()) },
    )
}

/// `B_{k+1,chi}(x)/(k+1)`.
pub fn char_shifted_poly(chi: &DirichletCharacter) -> SequenceSpec {
    SequenceSpec::new(
        format!("B_{{k+1,{}}}(x)/(k+1)", chi.label()),
        Base::GenBernoulli { chi: chi.clone(), arg: Arg::x() },
    )
    .index(1, 1)
    .expect("valid index")
    .times(Multiplier::Reciprocal { a: 1, b: 1 })
}

/// `b_k^±(q,r,s;x)` or `e_k^±(q,r,s;x)` with symbolic `x`.
pub fn diff_sum(euler: bool, sign: Sign, q: u64, r: u64, s: u64) -> Result<SequenceSpec> {
    let prefix = match (sign, euler) {
        (Sign::Minus, false) => "diffB",
        (Sign::Plus, false) => "sumB",
        (Sign::Minus, true) => "diffE",
        (Sign::Plus, true) => "sumE",
    };
    let name = format!("{prefix}(q={q},r={r},s={s})");
    let base = if euler {
        Base::EulerDiffSum { q, r, s, sign, arg: Arg::x() }
    } else {
        Base::BernDiffSum { q, r, s, sign, arg: Arg::x() }
    };
    let spec = SequenceSpec::new(name, base);
    spec.resolve(0)?;
    Ok(spec)
}

pub fn power_sums(s: u64) -> Result<SequenceSpec> {
    let spec = SequenceSpec::new(format!("S_k(s={s})"), Base::PowerSum { s });
    spec.resolve(0)?;
    Ok(spec)
}

pub fn alt_power_sums(s: u64) -> Result<SequenceSpec> {
    let spec = SequenceSpec::new(format!("T_k(s={s})"), Base::AltPowerSum { s });
    spec.resolve(0)?;
    Ok(spec)
}

pub fn umbral(a: u64, b: u64, c: u64, d: u64) -> Result<SequenceSpec> {
    let spec = SequenceSpec::new(format!("fk(a={a},b={b},c={c},d={d})"), Base::Umbral { a, b, c, d });
    spec.resolve(0)?;
    Ok(spec)
}

/// Looks up a catalog entry or parses one of the parametric forms.
pub fn parse_spec(name: &str) -> Result<SequenceSpec> {
    let key = normalize(name);
    if let Some(s) = catalog().into_iter().find(|s| normalize(&s.name) == key) {
        return Ok(s);
    }
    if let Some(s) = parse_parametric(&key)? {
        return Ok(s);
    }
    if let Some(s) = parse_character(&key)? {
        return Ok(s);
    }
    parse_simple(&key)?.ok_or_else(|| Error::UnknownSequence(name.to_string()))
}

/// `key=value` pairs inside `head(...)`.
pub fn parse_params(inner: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in inner.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn int_param(p: &BTreeMap<String, String>, key: &str) -> Result<u64> {
    p.get(key)
        .ok_or_else(|| Error::Parse(format!("missing parameter `{key}`")))?
        .parse()
        .map_err(|_| Error::Parse(format!("parameter `{key}` must be a nonnegative integer")))
}

fn split_call(key: &str) -> Option<(&str, &str)> {
    let open = key.find('(')?;
    let inner = key[open + 1..].strip_suffix(')')?;
    Some((&key[..open], inner))
}

fn parse_parametric(key: &str) -> Result<Option<SequenceSpec>> {
    let Some((head, inner)) = split_call(key) else {
        return Ok(None);
    };
    if !inner.contains('=') {
        return Ok(None);
    }
    let p = parse_params(inner)?;
    let spec = match head {
        "diffB" | "sumB" | "diffE" | "sumE" => {
            let sign = if head.starts_with("diff") { Sign::Minus } else { Sign::Plus };
            let s = diff_sum(head.ends_with('E'), sign, int_param(&p, "q")?, int_param(&p, "r")?, int_param(&p, "s")?)?;
            match p.get("x") {
                Some(x) => s.at(&x.parse()?),
                None => s,
            }
        }
        "Sk" => power_sums(int_param(&p, "s")?)?,
        "Tk" => alt_power_sums(int_param(&p, "s")?)?,
        "fk" => umbral(int_param(&p, "a")?, int_param(&p, "b")?, int_param(&p, "c")?, int_param(&p, "d")?)?,
        _ => return Ok(None),
    };
    Ok(Some(spec))
}

fn find_character(label: &str) -> Option<DirichletCharacter> {
    DirichletCharacter::builtin_labels()
        .iter()
        .find(|l| normalize(l) == label)
        .and_then(|l| DirichletCharacter::builtin(l))
}

fn parse_character(key: &str) -> Result<Option<SequenceSpec>> {
    if let Some(rest) = key.strip_prefix("Bk,") {
        let (label, symbolic) = match rest.strip_suffix("(x)") {
            Some(l) => (l, true),
            None => (rest, false),
        };
        let Some(chi) = find_character(label) else { return Ok(None) };
        let arg = if symbolic { Arg::x() } else { Arg::point(Rational::zero()) };
        let name = format!("B_{{k,{}}}{}", chi.label(), if symbolic { "(x)" } else { "" });
        return Ok(Some(SequenceSpec::new(name, Base::GenBernoulli { chi, arg })));
    }
    if let Some(rest) = key.strip_prefix("Bk+1,") {
        if let Some(label) = rest.strip_suffix("(x)/(k+1)") {
            return Ok(find_character(label).map(|chi| char_shifted_poly(&chi)));
        }
    }
    Ok(None)
}

/// `ak+b` (also `k`, `2k`, `k+3`).
fn parse_index(s: &str) -> Option<(u64, u64)> {
    let (a, rest) = s.split_once('k')?;
    let a = if a.is_empty() { 1 } else { a.parse().ok()? };
    let b = if rest.is_empty() { 0 } else { rest.strip_prefix('+')?.parse().ok()? };
    Some((a, b))
}

/// `p/q`, `x`, `x+b`, `(x+b)/q`, `x/q`, `(x-b)/q`.
fn parse_arg(s: &str) -> Option<Arg> {
    if let Ok(v) = s.parse::<Rational>() {
        return Some(Arg::point(v));
    }
    let (body, q) = match s.rsplit_once('/') {
        Some((body, q)) if body.contains('x') => (body, q.parse::<Rational>().ok()?),
        _ => (s, Rational::one()),
    };
    let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
    let rest = body.strip_prefix('x')?;
    let beta = if rest.is_empty() { Rational::zero() } else { rest.strip_prefix('+').unwrap_or(rest).parse().ok()? };
    let inv = q.recip().ok()?;
    Some(Arg::affine(inv.clone(), beta * inv))
}

fn parse_simple(key: &str) -> Result<Option<SequenceSpec>> {
    let mut rest = key;
    let mut mults = Vec::new();
    if let Some(r) = rest.strip_prefix("(2^") {
        let close = r.find("-1)").ok_or_else(|| Error::Parse(format!("bad prefix in `{key}`")))?;
        let Some((a, b)) = parse_index(&r[..close]) else { return Ok(None) };
        mults.push(Multiplier::PowMinusOne { base: 2, a, b });
        rest = &r[close + 3..];
    } else if let Some(r) = rest.strip_prefix('(') {
        let close = r.find(')').ok_or_else(|| Error::Parse(format!("unbalanced `(` in `{key}`")))?;
        let Some((a, b)) = parse_index(&r[..close]) else { return Ok(None) };
        mults.push(Multiplier::Linear { a: a as i64, b: b as i64 });
        rest = &r[close + 1..];
    }
    let euler = match rest.chars().next() {
        Some('B') => false,
        Some('E') => true,
        _ => return Ok(None),
    };
    rest = &rest[1..];
    if let Some(open) = rest.rfind("/(") {
        if let Some(inner) = rest[open + 2..].strip_suffix(")!") {
            let Some((a, b)) = parse_index(inner) else { return Ok(None) };
            mults.push(Multiplier::InvFactorial { a, b });
            rest = &rest[..open];
        }
    }
    let (index, arg) = match rest.find('(') {
        Some(open) => {
            let inner = rest[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced argument in `{key}`")))?;
            let Some(arg) = parse_arg(inner) else { return Ok(None) };
            (&rest[..open], Some(arg))
        }
        None => (rest, None),
    };
    let Some((a, b)) = parse_index(index) else { return Ok(None) };
    let base = match (euler, arg) {
        (false, None) => Base::BernoulliNumber,
        (true, None) => Base::EulerNumber,
        (false, Some(arg)) => Base::Bernoulli(arg),
        (true, Some(arg)) => Base::Euler(arg),
    };
    let mut s = SequenceSpec::new(key, base).index(a, b)?;
    for m in mults {
        s = s.times(m);
    }
    Ok(Some(s))
}
