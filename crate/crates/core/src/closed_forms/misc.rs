//! Closed forms that do not fit the two product shapes.

use crate::exact::{rat, Poly, Rational, Term};
use crate::sequences::numbers::{binomial, factorial};

fn r(v: u64) -> Rational {
    Rational::from(v)
}

fn fact(n: u64) -> Rational {
    Rational::from(factorial(n))
}

fn choose(n: u64, k: u64) -> Rational {
    Rational::from(binomial(n, k))
}

/// `prod_{l=lo}^{hi} f(l)`.
fn prod(lo: u64, hi: u64, f: impl Fn(u64) -> Rational) -> Rational {
    (lo..=hi).map(f).product()
}

/// `(-1)^{C(n+1,2)} prod_{l=1}^{n} l!^2`.
pub fn euler_numbers(n: u64) -> Rational {
    Rational::sign_power(n * (n + 1) / 2) * prod(1, n, |l| fact(l).pow(2))
}

/// `H_{2m+1} = (-1)^{m+1} 2^{4m(m+1)} prod_{l=1}^{m} l!^8`, zero at even
/// index.
pub fn derivative_euler_numbers(n: u64) -> Rational {
    if n.is_multiple_of(2) {
        return Rational::zero();
    }
    let m = n / 2;
    Rational::sign_power(m + 1) * r(2).pow(4 * (m * (m + 1)) as i64) * prod(1, m, |l| fact(l).pow(8))
}

/// `H_{2m+1} = (-1)^{m+1} prod_{l=1}^{m} l!^8`, zero at even index; the
/// value does not depend on `x`.
pub fn derivative_euler_polys(n: u64) -> Rational {
    if n.is_multiple_of(2) {
        return Rational::zero();
    }
    let m = n / 2;
    Rational::sign_power(m + 1) * prod(1, m, |l| fact(l).pow(8))
}

/// `(-1)^{C(n+1,2)} E_nu((x+1)/2)^{n+1} prod (l^2/4 (x^2 - (2l+nu-1)^2))^{n+1-l}`.
pub fn euler_half_shift(nu: u64, n: u64) -> Poly {
    let e = crate::sequences::euler_poly(nu as usize).affine_substitute(&rat(1, 2), &rat(1, 2));
    let mut acc = e.pow(n as u32 + 1).scale(&Rational::sign_power(n * (n + 1) / 2));
    for l in 1..=n {
        let c = r(2 * l + nu - 1).pow(2);
        let f = (&Poly::monomial(Rational::one(), 2) - &Poly::constant(c)).scale(&(r(l * l) / r(4)));
        acc = &acc * &f.pow((n + 1 - l) as u32);
    }
    acc
}

/// `H_{2m}(e^+) = (-1)^m 2^{2m+1}/m!^2 prod (l^2/4 (rho^2 - (2l-1)^2))^{2(m+1-l)}` and
/// `H_{2m+1}(e^+) = prod_{l=0}^{m} l!^4/16^l (rho^2 - (2l+1)^2)^{2(m-l)+1}`.
pub fn euler_sum(rho: &Rational, n: u64) -> Rational {
    let rho2 = rho.pow(2);
    let m = n / 2;
    if n.is_multiple_of(2) {
        Rational::sign_power(m) * r(2).pow(2 * m as i64 + 1) / fact(m).pow(2)
            * prod(1, m, |l| (r(l * l) / r(4) * (&rho2 - r(2 * l - 1).pow(2))).pow(2 * (m + 1 - l) as i64))
    } else {
        prod(0, m, |l| {
            fact(l).pow(4) / r(16).pow(l as i64) * (&rho2 - r(2 * l + 1).pow(2)).pow((2 * (m - l) + 1) as i64)
        })
    }
}

/// Second modulus-`2q` character family, `q` in {4, 6}, `qt = (q-2)/q`:
/// `H_{2m} = (-1)^{m+1} q^{2m(2m+1)}/m!^2 prod (l^2/4 (qt^2 - (2l-1)^2))^{2(m+1-l)}`,
/// `H_{2m+1} = (q^{2m+1}/2)^{2m+2} prod_{l=0}^{m} l!^4/16^l (qt^2 - (2l+1)^2)^{2(m-l)+1}`.
pub fn char_sum_family(q: u64, n: u64) -> Rational {
    let qt2 = (r(q - 2) / r(q)).pow(2);
    let qr = r(q);
    let m = n / 2;
    if n.is_multiple_of(2) {
        Rational::sign_power(m + 1) * qr.pow((2 * m * (2 * m + 1)) as i64) / fact(m).pow(2)
            * prod(1, m, |l| (r(l * l) / r(4) * (&qt2 - r(2 * l - 1).pow(2))).pow(2 * (m + 1 - l) as i64))
    } else {
        (qr.pow(2 * m as i64 + 1) / r(2)).pow(2 * m as i64 + 2)
            * prod(0, m, |l| {
                fact(l).pow(4) / r(16).pow(l as i64) * (&qt2 - r(2 * l + 1).pow(2)).pow((2 * (m - l) + 1) as i64)
            })
    }
}

/// Alternating power sums with odd `s`:
/// `H_{2m} = (-1)^m/m!^2 prod (l^2/4 (s^2 - (2l-1)^2))^{2(m+1-l)}`,
/// `H_{2m+1} = 4^{-(m+1)} prod_{l=0}^{m} l!^4/16^l (s^2 - (2l+1)^2)^{2(m-l)+1}`.
pub fn alt_power_sum_odd(s: u64, n: u64) -> Rational {
    let s2 = r(s * s);
    let m = n / 2;
    if n.is_multiple_of(2) {
        Rational::sign_power(m) / fact(m).pow(2)
            * prod(1, m, |l| (r(l * l) / r(4) * (&s2 - r(2 * l - 1).pow(2))).pow(2 * (m + 1 - l) as i64))
    } else {
        r(4).pow(-(m as i64 + 1))
            * prod(0, m, |l| {
                fact(l).pow(4) / r(16).pow(l as i64) * (&s2 - r(2 * l + 1).pow(2)).pow((2 * (m - l) + 1) as i64)
            })
    }
}

/// `H_n((2k+1)E_{2k}) = 2^{2n(n+1)} prod_{l=1}^{n} l!^4`.
pub fn odd_euler_derivative(n: u64) -> Rational {
    r(2).pow((2 * n * (n + 1)) as i64) * prod(1, n, |l| fact(l).pow(4))
}

/// `H_n((2^{2k+2}-1)B_{2k+2}) = (n+1)!/2^{n+1} prod_{l=1}^{n} l!^4`.
pub fn even_euler_derivative(n: u64) -> Rational {
    fact(n + 1) / r(2).pow(n as i64 + 1) * prod(1, n, |l| fact(l).pow(4))
}

/// `H_n((2k+1)B_{2k}(1/2)) = prod_{l=1}^{n} l!^8/((2l)!(2l+1)!)`.
pub fn odd_bernoulli_derivative(n: u64) -> Rational {
    prod(1, n, |l| fact(l).pow(8) / (fact(2 * l) * fact(2 * l + 1)))
}

/// `H_n((2k+3)B_{2k+2}) = 2^{-(n+1)} prod (l^3 (l+1)^3/(4(2l+1)^2))^{n+1-l}`.
pub fn shifted_bernoulli_derivative(n: u64) -> Rational {
    r(2).pow(-(n as i64 + 1))
        * prod(1, n, |l| (r(l).pow(3) * r(l + 1).pow(3) / (r(4) * r(2 * l + 1).pow(2))).pow((n + 1 - l) as i64))
}

/// `lim_{x -> -1} d_n(x)/(x^2-1) =
/// (-1)^n 2^{n-2}/3^n prod_{l=2}^{n} ((l+1)^2(2l-1)/(l(l-1)(2l+1)))^{n+1-l}`, `n >= 2`.
pub fn shift_limit(n: u64) -> Rational {
    Rational::sign_power(n) * r(2).pow(n as i64 - 2) / r(3).pow(n as i64)
        * prod(2, n, |l| (r((l + 1) * (l + 1) * (2 * l - 1)) / r(l * (l - 1) * (2 * l + 1))).pow((n + 1 - l) as i64))
}

/// `H_n(B_k/k!) = (-1)^{C(n+1,2)} (n+1) prod (1/(4(2l-1)(2l+1)))^{n+1-l}`.
pub fn bernoulli_over_factorial(n: u64) -> Rational {
    Rational::sign_power(n * (n + 1) / 2)
        * r(n + 1)
        * prod(1, n, |l| (r(1) / r(4 * (2 * l - 1) * (2 * l + 1))).pow((n + 1 - l) as i64))
}

/// `(1/4)^{(n+1)^2} prod_{l=1}^{2n+1} (1/(2l+shift))^{2n+2-l}`.
fn even_bernoulli_core(n: u64, shift: u64) -> Rational {
    r(4).pow(-(((n + 1) * (n + 1)) as i64)) * prod(1, 2 * n + 1, |l| r(2 * l + shift).pow(-((2 * n + 2 - l) as i64)))
}

/// `H_n(B_{2k+2}/(2k+2)!)`.
pub fn even_bernoulli_over_factorial_2(n: u64) -> Rational {
    even_bernoulli_core(n, 1)
}

/// `H_n(B_{2k+4}/(2k+4)!) = (-1/36)^{n+1} (...)`.
pub fn even_bernoulli_over_factorial_4(n: u64) -> Rational {
    rat(-1, 36).pow(n as i64 + 1) * even_bernoulli_core(n, 3)
}

/// `H_n(B_{2k+6}/(2k+6)!) = (n+2)(2n+5)/(3 60^{2n+2}) (...)`.
pub fn even_bernoulli_over_factorial_6(n: u64) -> Rational {
    r((n + 2) * (2 * n + 5)) / (r(3) * r(60).pow(2 * n as i64 + 2)) * even_bernoulli_core(n, 5)
}

/// `H_n(E_{k+3}(1)/(k+3)!)`.
pub fn euler_one_over_factorial_3(n: u64) -> Rational {
    let extra = if n % 2 == 1 { choose(n + 3, 2) } else { choose(n + 2, 2) };
    Rational::sign_power((n + 1) * (n + 2) / 2)
        * rat(1, 24).pow(n as i64 + 1)
        * prod(1, n, |l| (r(1) / r(4 * (2 * l + 1) * (2 * l + 3))).pow((n + 1 - l) as i64))
        * extra
}

/// `H_n(E_{2k+5}(1)/(2k+5)!)`.
pub fn euler_one_over_factorial_5(n: u64) -> Rational {
    (r(1) / r(2 * 720)).pow(n as i64 + 1)
        * choose(2 * n + 4, 2)
        * prod(1, n, |l| {
            (r(1) / r(16 * (4 * l + 1) * (4 * l + 3) * (4 * l + 3) * (4 * l + 5))).pow((n + 1 - l) as i64)
        })
}

/// `H_n(E_{2k+7}(1)/(2k+7)!)`.
pub fn euler_one_over_factorial_7(n: u64) -> Rational {
    Rational::sign_power(n + 1)
        * (r(1) / r(5 * 40320)).pow(n as i64 + 1)
        * r(4 * n * n + 18 * n + 17)
        / r(3)
        * choose(2 * n + 6, 4)
        * prod(1, n, |l| {
            (r(1) / r(16 * (4 * l + 3) * (4 * l + 5) * (4 * l + 5) * (4 * l + 7))).pow((n + 1 - l) as i64)
        })
}

/// `H_n(B_{k+2}(-1)) = (-1)^{C(n+1,2)} (1/6)^{n+1} ((n+1)(n+2)^2(n+3)+1)
/// prod (l(l+1)^2(l+2)/(4(2l+1)(2l+3)))^{n+1-l}`.
pub fn bernoulli_at_minus_one(n: u64) -> Rational {
    Rational::sign_power(n * (n + 1) / 2)
        * rat(1, 6).pow(n as i64 + 1)
        * r((n + 1) * (n + 2) * (n + 2) * (n + 3) + 1)
        * prod(1, n, |l| {
            (r(l * (l + 1) * (l + 1) * (l + 2)) / r(4 * (2 * l + 1) * (2 * l + 3))).pow((n + 1 - l) as i64)
        })
}

/// Wraps a scalar closed form as a constant polynomial term.
pub fn as_poly(v: Rational) -> Term {
    Term::Poly(Poly::constant(v))
}
