//! Coefficient rings: the integers and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// A prime number, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes up to and including `bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Ground ring of every algebra and complex in the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Fp(Prime),
}

impl Ring {
    pub fn fp(p: u64) -> Result<Self, Error> {
        Ok(Ring::Fp(Prime::new(p)?))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Ring::Integers => 0,
            Ring::Fp(p) => p.get(),
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Fp(_))
    }

    /// Canonical representative: unchanged over Z, in `[0, p)` over F_p.
    pub fn reduce(self, c: BigInt) -> BigInt {
        match self {
            Ring::Integers => c,
            Ring::Fp(p) => c.mod_floor(&BigInt::from(p.get())),
        }
    }

    pub fn reduce_i64(self, c: i64) -> BigInt {
        self.reduce(BigInt::from(c))
    }

    pub fn one(self) -> BigInt {
        self.reduce(BigInt::one())
    }

    pub fn is_zero(self, c: &BigInt) -> bool {
        match self {
            Ring::Integers => c.is_zero(),
            Ring::Fp(p) => (c % BigInt::from(p.get())).is_zero(),
        }
    }

    /// `(-1)^e` as a coefficient.
    pub fn sign(self, e: i64) -> BigInt {
        if e.rem_euclid(2) == 0 {
            self.one()
        } else {
            self.reduce(-BigInt::one())
        }
    }

    pub fn neg(self, c: &BigInt) -> BigInt {
        self.reduce(-c)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Accepts `Z` or `Fp:<p>` (also `F<p>`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "Z" || s == "z" {
            return Ok(Ring::Integers);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("fp:"))
            .or_else(|| s.strip_prefix('F'));
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => Ring::fp(p),
            None => Err(Error::InvalidRing(s.to_string())),
        }
    }
}
