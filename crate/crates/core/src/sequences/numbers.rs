use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{Poly, Rational};

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static EULER_EVEN: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static BERNOULLI_POLYS: RwLock<Vec<Poly>> = RwLock::new(Vec::new());
static EULER_POLYS: RwLock<Vec<Poly>> = RwLock::new(Vec::new());

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Extends a write-once memo table up to index `n` with `next`, which sees
/// the table built so far.
fn memo<T: Clone>(table: &RwLock<Vec<T>>, n: usize, next: impl Fn(&[T]) -> T) -> T {
    if let Some(v) = table.read().unwrap().get(n) {
        return v.clone();
    }
    let mut t = table.write().unwrap();
    while t.len() <= n {
        let v = next(&t);
        t.push(v);
    }
    t[n].clone()
}

/// Bernoulli number `B_n` (with `B_1 = -1/2`), from
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0`.
pub fn bernoulli_number(n: usize) -> Rational {
    memo(&BERNOULLI, n, |prev| {
        let m = prev.len() as u64;
        if m == 0 {
            return Rational::one();
        }
        let s: Rational = prev
            .iter()
            .enumerate()
            .map(|(j, b)| b * Rational::from(binomial(m + 1, j as u64)))
            .sum();
        -s / Rational::from(m + 1)
    })
}

/// Euler number `E_n` (coefficients of `sech t`). Odd indices vanish; even
/// ones come from `sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0`.
pub fn euler_number(n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    memo(&EULER_EVEN, n / 2, |prev| {
        let m = prev.len() as u64;
        if m == 0 {
            return Rational::one();
        }
        let s: Rational = prev
            .iter()
            .enumerate()
            .map(|(k, e)| e * Rational::from(binomial(2 * m, 2 * k as u64)))
            .sum();
        -s
    })
}

/// `B_n(x) = sum_j C(n, j) B_j x^{n-j}`.
pub fn bernoulli_poly(n: usize) -> Poly {
    memo(&BERNOULLI_POLYS, n, |prev| {
        let n = prev.len();
        Poly::new(
            (0..=n)
                .map(|i| bernoulli_number(n - i) * Rational::from(binomial(n as u64, i as u64)))
                .collect(),
        )
    })
}

/// `E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^{n-j}`.
pub fn euler_poly(n: usize) -> Poly {
    memo(&EULER_POLYS, n, |prev| {
        let n = prev.len();
        let centered = Poly::new(
            (0..=n)
                .map(|i| {
                    let j = n - i;
                    euler_number(j) * Rational::from(binomial(n as u64, j as u64))
                        / Rational::from(2).pow(j as i64)
                })
                .collect(),
        );
        centered.affine_substitute(&Rational::one(), &Rational::new(-1, 2))
    })
}

/// Snapshot of the memoized Bernoulli numbers.
pub fn bernoulli_table() -> Vec<Rational> {
    BERNOULLI.read().unwrap().clone()
}

/// Snapshot of the memoized even-index Euler numbers `E_0, E_2, ...`.
pub fn euler_even_table() -> Vec<Rational> {
    EULER_EVEN.read().unwrap().clone()
}

/// Seeds the Bernoulli memo with previously computed values `B_0..`.
/// Ignored if the memo already holds at least as many entries.
pub fn preload_bernoulli(values: Vec<Rational>) {
    let mut t = BERNOULLI.write().unwrap();
    if values.len() > t.len() {
        *t = values;
    }
}

/// Seeds the Euler memo with `E_0, E_2, E_4, ...`.
pub fn preload_euler_even(values: Vec<Rational>) {
    let mut t = EULER_EVEN.write().unwrap();
    if values.len() > t.len() {
        *t = values;
    }
}

/// Zigzag (up/down) number, the coefficient sequence of `tan t + sec t`,
/// by the Seidel boustrophedon.
pub fn zigzag_number(n: usize) -> Rational {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::from(0); i + 1];
        for j in 1..=i {
            next[j] = &next[j - 1] + &row[i - j];
        }
        row = next;
    }
    Rational::from(row[n].clone())
}

/// Tangent number `T_k = (-1)^{k-1} 2^{2k} (2^{2k} - 1) B_{2k} / (2k)`, `k >= 1`.
pub fn tangent_number(k: usize) -> Rational {
    assert!(k >= 1, "tangent numbers start at k = 1");
    let two = Rational::from(2);
    Rational::sign_power(k as u64 - 1)
        * two.pow(2 * k as i64)
        * (two.pow(2 * k as i64) - Rational::one())
        * bernoulli_number(2 * k)
        / Rational::from(2 * k)
}

/// `S_k(s) = k (1^{k-1} + 2^{k-1} + ... + s^{k-1})`, with `S_0(s) = 0`.
pub fn power_sum(s: u64, k: usize) -> Rational {
    if k == 0 {
        return Rational::zero();
    }
    let sum: BigInt = (1..=s).map(|j| BigInt::from(j).pow(k as u32 - 1)).sum();
    Rational::from(sum * BigInt::from(k))
}

/// `T_k(s) = 1 - 2^k + 3^k - ... + (-1)^{s-1} s^k`.
pub fn alt_power_sum(s: u64, k: usize) -> Rational {
    let sum: BigInt = (1..=s)
        .map(|j| {
            let t = BigInt::from(j).pow(k as u32);
            if j % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum();
    Rational::from(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(6), rat(1, 42));
        assert_eq!(bernoulli_number(5), Rational::zero());
        for n in (3..40).step_by(2) {
            assert!(bernoulli_number(n).is_zero());
        }
    }

    #[test]
    fn euler_values() {
        let expected = [1, 0, -1, 0, 5, 0, -61, 0, 1385];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(euler_number(n), rat(*e, 1));
        }
        for n in 0..30 {
            assert!(euler_number(n).is_integer());
        }
    }

    #[test]
    fn euler_by_brute_series() {
        // Independent oracle: invert the series of cosh t term by term.
        // cosh t * sech t = 1  =>  E_{2m} = -sum_{k<m} C(2m,2k) E_{2k}
        // written out for 2m = 8 by hand: 1 + 28*(-1) + 70*5 + 28*(-61) + E_8 = 0
        let e8 = -(1 - 28 + 70 * 5 - 28 * 61);
        assert_eq!(e8, 1385);
        assert_eq!(euler_number(8), rat(e8, 1));
    }

    #[test]
    fn polynomial_table() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        let b2 = Poly::new(vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
        assert_eq!(bernoulli_poly(2), b2);
        let b6 = Poly::new(vec![
            rat(1, 42),
            rat(0, 1),
            rat(-1, 2),
            rat(0, 1),
            rat(5, 2),
            rat(-3, 1),
            rat(1, 1),
        ]);
        assert_eq!(bernoulli_poly(6), b6);
        assert_eq!(euler_poly(1), Poly::new(vec![rat(-1, 2), rat(1, 1)]));
        assert_eq!(euler_poly(3), Poly::new(vec![rat(1, 4), rat(0, 1), rat(-3, 2), rat(1, 1)]));
        let e5 = Poly::new(vec![rat(-1, 2), rat(0, 1), rat(5, 2), rat(0, 1), rat(-5, 2), rat(1, 1)]);
        assert_eq!(euler_poly(5), e5);
    }

    #[test]
    fn zigzag_and_tangent() {
        let expected = [1, 1, 1, 2, 5, 16, 61, 272, 1385];
        for (n, z) in expected.iter().enumerate() {
            assert_eq!(zigzag_number(n), rat(*z, 1));
        }
        for n in 0..=20 {
            let z = zigzag_number(n);
            assert!(z.is_integer() && !z.is_negative() && !z.is_zero());
        }
        assert_eq!(tangent_number(1), rat(1, 1));
        assert_eq!(tangent_number(2), rat(2, 1));
        assert_eq!(tangent_number(3), rat(16, 1));
        for k in 1..=10 {
            let via_euler = Rational::sign_power(k as u64 - 1)
                * Rational::from(2).pow(2 * k as i64 - 1)
                * euler_poly(2 * k - 1).eval(&Rational::one());
            assert_eq!(tangent_number(k), via_euler);
            assert_eq!(tangent_number(k), zigzag_number(2 * k - 1));
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(2, 0), Rational::zero());
        assert_eq!(power_sum(2, 1), rat(2, 1));
        assert_eq!(power_sum(2, 2), rat(6, 1));
        for k in 0..10 {
            assert_eq!(power_sum(1, k), Rational::from(k));
            assert_eq!(alt_power_sum(1, k), Rational::one());
        }
        assert_eq!(alt_power_sum(2, 0), Rational::zero());
        assert_eq!(alt_power_sum(2, 1), rat(-1, 1));
        assert_eq!(alt_power_sum(2, 2), rat(-3, 1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
