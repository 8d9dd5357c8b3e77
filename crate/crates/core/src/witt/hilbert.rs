//! Hilbert symbols (a, b)_p over ℚ for odd primes, p = 2 (the 8-adic unit
//! formula) and the real place, plus the Hasse invariant of a diagonal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::factor_integer;

/// Legendre symbol (n|p) for odd p; 0 when p | n.
pub fn legendre(n: &BigInt, p: u64) -> i8 {
    let m = n.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    let v = digits.first().copied().unwrap_or(0);
    if v == 0 {
        return 0;
    }
    let mut acc: u64 = 1;
    let mut base = v % p;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn ord_in(n: &BigInt, p: u64) -> (u64, BigInt) {
    let big_p = BigInt::from(p);
    let mut m = n.clone();
    let mut ord = 0u64;
    while !m.is_zero() && (&m % &big_p).is_zero() {
        m /= &big_p;
        ord += 1;
    }
    (ord, m)
}

/// p-adic valuation and unit part of a nonzero rational: r = p^ord · (m/n)
/// with p ∤ mn; the unit part is returned as the integer m·n (which lies in
/// the same square class as m/n and has the same residue character).
fn ord_and_unit(r: &BigRational, p: u64) -> (i64, BigInt) {
    let (on, mn) = ord_in(r.numer(), p);
    let (od, md) = ord_in(r.denom(), p);
    (on as i64 - od as i64, mn * md)
}

/// Hilbert symbol (a, b)_p over ℚ_p, for odd p and p = 2.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, p: u64) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (alpha, u) = ord_and_unit(a, p);
    let (beta, v) = ord_and_unit(b, p);
    if p == 2 {
        let eps = |m: &BigInt| -> i64 {
            // (m − 1)/2 mod 2 for odd m, additive in m.
            let r = m.mod_floor(&BigInt::from(4));
            i64::from(r == BigInt::from(3))
        };
        let omega = |m: &BigInt| -> i64 {
            // (m² − 1)/8 mod 2 for odd m.
            let r = m.mod_floor(&BigInt::from(8));
            i64::from(r == BigInt::from(3) || r == BigInt::from(5))
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        Ok(if e % 2 == 0 { 1 } else { -1 })
    } else {
        let eps_p = i64::from((p - 1) / 2 % 2 == 1);
        let mut sign = if (alpha * beta * eps_p).rem_euclid(2) == 1 {
            -1i8
        } else {
            1
        };
        if beta % 2 != 0 {
            sign *= legendre(&u, p);
        }
        if alpha % 2 != 0 {
            sign *= legendre(&v, p);
        }
        Ok(sign)
    }
}

/// Hilbert symbol at the real place: −1 iff both arguments are negative.
pub fn hilbert_symbol_real(a: &BigRational, b: &BigRational) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(if a.is_negative() && b.is_negative() {
        -1
    } else {
        1
    })
}

/// 2 together with every odd prime dividing some entry's numerator or
/// denominator, sorted.
pub fn relevant_primes(entries: &[BigRational], bound: u64) -> Result<Vec<u64>> {
    let mut primes = vec![2u64];
    for e in entries {
        for n in [e.numer(), e.denom()] {
            for (p, _) in factor_integer(n, bound)? {
                let (_, digits) = p.to_u64_digits();
                let pv = digits.first().copied().unwrap_or(0);
                if pv > 2 && !primes.contains(&pv) {
                    primes.push(pv);
                }
            }
        }
    }
    primes.sort_unstable();
    Ok(primes)
}

/// Hasse invariant ∏_{i<j} (aᵢ, aⱼ)_p of a diagonal form.
pub fn hasse_invariant(entries: &[BigRational], p: u64) -> Result<i8> {
    let mut acc = 1i8;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            acc *= hilbert_symbol(&entries[i], &entries[j], p)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn legendre_small_table() {
        // Squares mod 7: {1, 2, 4}.
        for (n, expect) in [(1, 1), (2, 1), (3, -1), (4, 1), (5, -1), (6, -1)] {
            assert_eq!(legendre(&BigInt::from(n), 7), expect, "({n}|7)");
        }
        assert_eq!(legendre(&BigInt::from(14), 7), 0);
        assert_eq!(legendre(&BigInt::from(-1), 7), -1);
    }

    #[test]
    fn hilbert_symbol_known_values() {
        // (−1, −1)₂ = −1 and (−1, −1)_p = 1 for odd p.
        assert_eq!(hilbert_symbol(&q(-1, 1), &q(-1, 1), 2).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(-1, 1), &q(-1, 1), 3).unwrap(), 1);
        assert_eq!(hilbert_symbol(&q(-1, 1), &q(-1, 1), 5).unwrap(), 1);
        // (2, 3)₃: 3 = 3¹·1, so the symbol is (2|3) = −1.
        assert_eq!(hilbert_symbol(&q(2, 1), &q(3, 1), 3).unwrap(), -1);
        // (p, p)_p = (−1, p)_p · ... sanity: (3, 3)₃ = (−1|3) = −1.
        assert_eq!(hilbert_symbol(&q(3, 1), &q(3, 1), 3).unwrap(), -1);
        // (2, 7)₂: ω(7) = 0, ε(1)... = (−1)^{α·ω(7)} with 2 = 2¹: ω(7) = 0 → 1.
        assert_eq!(hilbert_symbol(&q(2, 1), &q(7, 1), 2).unwrap(), 1);
        // (2, 3)₂: ω(3) = 1 → −1.
        assert_eq!(hilbert_symbol(&q(2, 1), &q(3, 1), 2).unwrap(), -1);
    }

    #[test]
    fn symbols_are_symmetric_and_bilinear() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let primes = [2u64, 3, 5, 7];
        for _ in 0..60 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| loop {
                let n = rng.gen_range(-30i64..31);
                if n != 0 {
                    return q(n, rng.gen_range(1i64..12));
                }
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            let c = pick(&mut rng);
            for &p in &primes {
                let ab = hilbert_symbol(&a, &b, p).unwrap();
                let ba = hilbert_symbol(&b, &a, p).unwrap();
                assert_eq!(ab, ba, "symmetry at {p}: a={a} b={b}");
                let ac = hilbert_symbol(&a, &c, p).unwrap();
                let a_bc = hilbert_symbol(&a, &(&b * &c), p).unwrap();
                assert_eq!(a_bc, ab * ac, "bilinearity at {p}: a={a} b={b} c={c}");
            }
        }
    }

    #[test]
    fn hilbert_reciprocity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..80 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| loop {
                let n = rng.gen_range(-40i64..41);
                if n != 0 {
                    return BigRational::from_integer(BigInt::from(n));
                }
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            let primes = relevant_primes(&[a.clone(), b.clone()], 1000).unwrap();
            let mut prod = hilbert_symbol_real(&a, &b).unwrap() as i32;
            for p in primes {
                prod *= hilbert_symbol(&a, &b, p).unwrap() as i32;
            }
            assert_eq!(prod, 1, "reciprocity for a={a}, b={b}");
        }
    }

    #[test]
    fn relevant_primes_include_two_and_support() {
        let ps = relevant_primes(&[q(18, 5)], 100).unwrap();
        assert_eq!(ps, vec![2, 3, 5]);
        assert!(BigRational::one().is_one());
    }
}
