//! Exact integer arithmetic used by the factorization: divisibility, gcd with
//! Bézout coefficients, trial-division primality and prime powers.
//!
//! All arguments are bounded by [`NAT_LIMIT`]; anything larger is rejected.

use crate::error::{domain, Error, Result};

/// Upper bound on every natural-number argument.
pub const NAT_LIMIT: u64 = 1 << 31;

fn guard(n: u64) -> Result<u64> {
    if n > NAT_LIMIT {
        return Err(Error::TooLarge { order: n, limit: NAT_LIMIT });
    }
    Ok(n)
}

/// Multiplies two naturals, failing past [`NAT_LIMIT`].
pub fn checked_product(a: u64, b: u64) -> Result<u64> {
    match a.checked_mul(b) {
        Some(v) => guard(v),
        None => Err(Error::TooLarge { order: u64::MAX, limit: NAT_LIMIT }),
    }
}

pub fn divides(d: u64, n: u64) -> Result<bool> {
    guard(d)?;
    guard(n)?;
    if d == 0 {
        return domain("divisor must be positive");
    }
    Ok(n % d == 0)
}

/// Returns `(g, r, s)` with `g = gcd(m, n)` and `r*n + s*m = g`.
pub fn gcd_bezout(m: u64, n: u64) -> Result<(u64, i64, i64)> {
    guard(m)?;
    guard(n)?;
    if m == 0 || n == 0 {
        return domain(format!("gcd-bezout needs positive arguments, got ({m}, {n})"));
    }
    // Extended Euclid on (n, m): old_r = old_s*n + old_t*m throughout.
    let (mut old_r, mut r) = (n as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    Ok((old_r as u64, old_s, old_t))
}

pub fn gcd(m: u64, n: u64) -> u64 {
    let (mut a, mut b) = (m, n);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn least_prime_divisor(n: u64) -> Result<u64> {
    guard(n)?;
    if n < 2 {
        return domain(format!("least prime divisor of {n} is undefined"));
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return Ok(d);
        }
        d += 1;
    }
    Ok(n)
}

fn require_prime(p: u64) -> Result<()> {
    guard(p)?;
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    Ok(())
}

/// True iff `n = p^k` for some `k >= 0`.
pub fn powerp(n: u64, p: u64) -> Result<bool> {
    require_prime(p)?;
    guard(n)?;
    if n == 0 {
        return domain("powerp needs n >= 1");
    }
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    Ok(n == 1)
}

/// Largest power of the prime `p` dividing `n`.
pub fn max_power_dividing(p: u64, n: u64) -> Result<u64> {
    require_prime(p)?;
    guard(n)?;
    if n == 0 {
        return domain("max-power-dividing needs n >= 1");
    }
    let mut power = 1;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        power *= p;
    }
    Ok(power)
}

/// Distinct prime divisors of `n` in increasing order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = n;
    while rest >= 2 {
        let p = least_prime_divisor(rest).expect("rest is in range");
        out.push(p);
        while rest % p == 0 {
            rest /= p;
        }
    }
    out
}
