//! Integer helpers: Miller-Rabin primality, prime-power decomposition and
//! divisor enumeration.

use num_bigint::{BigInt, BigUint, RandBigInt};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Witness set that makes Miller-Rabin deterministic below
/// `DETERMINISTIC_LIMIT` (Sorenson and Webster, 2015).
const DETERMINISTIC_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// 3317044064679887385961981, the first strong pseudoprime to all of
/// `DETERMINISTIC_BASES`.
const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";

/// Extra random bases used above the deterministic range. Each round has
/// false-positive probability at most 1/4, so a composite survives all of
/// them with probability at most 4^-32.
const PROBABILISTIC_ROUNDS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Primality {
    pub is_prime: bool,
    /// True when the answer relied on random witnesses.
    pub probabilistic: bool,
}

fn strong_probable_prime(n: &BigUint, d: &BigUint, s: u32, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut x = base.modpow(d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

pub fn primality(n: &BigInt) -> Primality {
    let exact = |is_prime| Primality {
        is_prime,
        probabilistic: false,
    };
    if n < &BigInt::from(2) {
        return exact(false);
    }
    let n = n.magnitude();
    for &b in &DETERMINISTIC_BASES {
        let b = BigUint::from(b);
        if n == &b {
            return exact(true);
        }
        if (n % &b).is_zero() {
            return exact(false);
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().expect("n - 1 > 0") as u32;
    let d = &n_minus_one >> s;
    for &b in &DETERMINISTIC_BASES {
        if !strong_probable_prime(n, &d, s, &BigUint::from(b)) {
            return exact(false);
        }
    }
    let limit: BigUint = DETERMINISTIC_LIMIT.parse().expect("constant");
    if n < &limit {
        return exact(true);
    }
    // Seeded from n so that the verdict is reproducible.
    let seed = n.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15u64, |acc, w| {
        acc.rotate_left(17) ^ w.wrapping_mul(0xff51_afd7_ed55_8ccd)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    for _ in 0..PROBABILISTIC_ROUNDS {
        let base = rng.gen_biguint_range(&two, &n_minus_one);
        if !strong_probable_prime(n, &d, s, &base) {
            return exact(false);
        }
    }
    Primality {
        is_prime: true,
        probabilistic: true,
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).is_prime
}

/// `c = p^u` with `p` prime and `u >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerForm {
    #[serde(with = "crate::decimal::plain")]
    pub p: BigInt,
    pub u: u32,
    #[serde(default)]
    pub probabilistic: bool,
}

impl PrimePowerForm {
    pub fn value(&self) -> BigInt {
        num_traits::pow(self.p.clone(), self.u as usize)
    }
}

/// Writes `c >= 2` as `p^u` if possible.
///
/// The largest `k` for which `c` is an exact `k`-th power gives the base
/// `r`; `c` is a prime power exactly when that `r` is prime.
pub fn prime_power_decompose(c: &BigInt) -> Result<Option<PrimePowerForm>> {
    if c < &BigInt::from(2) {
        return Err(Error::InvalidArgument(format!(
            "prime-power decomposition needs c >= 2, got {c}"
        )));
    }
    let max_k = c.bits() as u32;
    for k in (1..=max_k).rev() {
        let r = c.nth_root(k);
        if r < BigInt::from(2) || num_traits::pow(r.clone(), k as usize) != *c {
            continue;
        }
        let pr = primality(&r);
        return Ok(pr.is_prime.then_some(PrimePowerForm {
            p: r,
            u: k,
            probabilistic: pr.probabilistic,
        }));
    }
    unreachable!("k = 1 always gives an exact root")
}

/// Positive divisors of `n != 0` in increasing order, by trial division up
/// to `sqrt(|n|)`.
pub fn positive_divisors(n: u64) -> Vec<u64> {
    assert!(n != 0, "divisors of zero are unbounded");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
