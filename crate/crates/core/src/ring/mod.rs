//! Exact commutative rings: ℤ, ℚ, ℤ_p and ℤ[x_1, …, x_m].
//!
//! A [`Scalar`] carries its ring. Arithmetic between scalars of different rings is
//! rejected: the `try_*` methods return [`RingError::Mismatch`] and the operator
//! impls panic. Matrix-level operations check ring agreement up front, so the
//! operator impls are only reached once both operands are known to agree.

mod modp;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use modp::{is_prime, Fp};
pub use poly::{Monomial, Polynomial};

use crate::report::{Report, Witness};

/// Identifies one of the supported rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Int,
    Rat,
    /// Integers modulo a prime.
    Zp(u64),
    Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("mixed-ring arithmetic: {left} vs {right}")]
    Mismatch { left: Ring, right: Ring },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("unknown ring `{0}` (expected int, rat, zp:<p> or poly)")]
    UnknownRing(String),
    #[error("cannot parse `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
    #[error("sample count must be at least 1")]
    NoSamples,
}

impl Ring {
    /// ℤ_p, refusing composite moduli.
    pub fn prime_field(p: u64) -> Result<Ring, RingError> {
        if is_prime(p) {
            Ok(Ring::Zp(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// `Ok(())` if both rings are the same ring.
    pub fn ensure_same(self, other: Ring) -> Result<(), RingError> {
        if self == other {
            Ok(())
        } else {
            Err(RingError::Mismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "int"),
            Ring::Rat => write!(f, "rat"),
            Ring::Zp(p) => write!(f, "zp:{p}"),
            Ring::Poly => write!(f, "poly"),
        }
    }
}

impl FromStr for Ring {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "int" | "Z" => Ok(Ring::Int),
            "rat" | "Q" => Ok(Ring::Rat),
            "poly" => Ok(Ring::Poly),
            other => {
                let p = other
                    .strip_prefix("zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| RingError::UnknownRing(other.to_string()))?;
                Ring::prime_field(p)
            }
        }
    }
}

/// An element of one of the supported rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Zp(Fp),
    Poly(Polynomial),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Int,
            Scalar::Rat(_) => Ring::Rat,
            Scalar::Zp(x) => Ring::Zp(x.modulus()),
            Scalar::Poly(_) => Ring::Poly,
        }
    }

    pub fn from_i64(ring: Ring, v: i64) -> Scalar {
        Scalar::from_bigint(ring, BigInt::from(v))
    }

    pub fn from_bigint(ring: Ring, v: BigInt) -> Scalar {
        match ring {
            Ring::Int => Scalar::Int(v),
            Ring::Rat => Scalar::Rat(BigRational::from_integer(v)),
            Ring::Zp(p) => {
                let r = (v % BigInt::from(p))
                    .to_i128()
                    .expect("residue fits in i128");
                Scalar::Zp(Fp::from_i128(r, p))
            }
            Ring::Poly => Scalar::Poly(Polynomial::constant(v)),
        }
    }

    /// The indeterminate `name` in ℤ[…].
    pub fn var(name: &str) -> Scalar {
        Scalar::Poly(Polynomial::var(name))
    }

    /// `num/den` in ℚ, reduced. Fails on a zero denominator.
    pub fn rational(num: i64, den: i64) -> Result<Scalar, RingError> {
        if den == 0 {
            return Err(RingError::Parse {
                literal: format!("{num}/{den}"),
                reason: "zero denominator".into(),
            });
        }
        Ok(Scalar::Rat(BigRational::new(num.into(), den.into())))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Zp(x) => x.value() == 0,
            Scalar::Poly(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match self {
            Scalar::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, RingError> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Zp(a), Scalar::Zp(b)) if a.modulus() == b.modulus() => Scalar::Zp(a.add(*b)),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, RingError> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Zp(a), Scalar::Zp(b)) if a.modulus() == b.modulus() => Scalar::Zp(a.mul(*b)),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Zp(a) => Scalar::Zp(a.neg()),
            Scalar::Poly(a) => Scalar::Poly(a.neg()),
        }
    }

    /// `self` multiplied by itself `k` times; `x^0 = 1`.
    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(-1)^k * self`.
    pub fn signed(&self, k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Parses a literal for `ring`. Accepts the canonical rendering produced by
    /// `Display` as well as bare integers in every ring.
    pub fn parse(ring: Ring, s: &str) -> Result<Scalar, RingError> {
        let lit = s.trim();
        let bad = |reason: &str| RingError::Parse {
            literal: lit.to_string(),
            reason: reason.to_string(),
        };
        let int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| bad("not an integer"))
        };
        match ring {
            Ring::Int => Ok(Scalar::Int(int(lit)?)),
            Ring::Rat => match lit.split_once('/') {
                Some((n, d)) => {
                    let d = int(d)?;
                    if d.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    Ok(Scalar::Rat(BigRational::new(int(n)?, d)))
                }
                None => Ok(Scalar::Rat(BigRational::from_integer(int(lit)?))),
            },
            Ring::Zp(p) => {
                let v = match lit.split_once("mod") {
                    Some((v, m)) => {
                        if int(m)? != BigInt::from(p) {
                            return Err(bad("modulus does not match the ring"));
                        }
                        int(v)?
                    }
                    None => int(lit)?,
                };
                Ok(Scalar::from_bigint(ring, v))
            }
            Ring::Poly => Ok(Scalar::Poly(Polynomial::parse(lit)?)),
        }
    }

    fn mismatch(&self, other: &Scalar) -> RingError {
        RingError::Mismatch {
            left: self.ring(),
            right: other.ring(),
        }
    }
}

/// `x^k`.
pub fn scalar_pow(x: &Scalar, k: u32) -> Scalar {
    x.pow(k)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(x) => write!(f, "{x}"),
            Scalar::Rat(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Scalar::Zp(x) => write!(f, "{x}"),
            Scalar::Poly(x) => write!(f, "{x}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Draws a random element. Integers and numerators come from `[-bound, bound]`,
/// denominators from `[1, bound]`; ℤ_p draws uniformly; polynomials get up to
/// three terms in `x`, `y` of degree at most 2.
pub fn random_scalar<R: Rng + ?Sized>(ring: Ring, rng: &mut R, bound: u64) -> Scalar {
    let b = bound as i64;
    match ring {
        Ring::Int => Scalar::from_i64(ring, rng.gen_range(-b..=b)),
        Ring::Rat => {
            let num = rng.gen_range(-b..=b);
            let den = rng.gen_range(1..=b.max(1));
            Scalar::Rat(BigRational::new(num.into(), den.into()))
        }
        Ring::Zp(p) => Scalar::Zp(Fp::from_i128(rng.gen_range(0..p) as i128, p)),
        Ring::Poly => {
            let mut acc = Polynomial::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let ex = rng.gen_range(0..=2u32);
                let ey = rng.gen_range(0..=(2 - ex));
                let c = BigInt::from(rng.gen_range(-b..=b));
                acc = acc.add(&Polynomial::monomial(
                    c,
                    Monomial::from_powers(&[("x", ex), ("y", ey)]),
                ));
            }
            Scalar::Poly(acc)
        }
    }
}

/// Randomized check of the commutative-ring axioms on `samples` triples.
pub fn ring_axiom_check(ring_id: &str, samples: usize, seed: u64) -> Result<Report, RingError> {
    let ring: Ring = ring_id.parse()?;
    if samples == 0 {
        return Err(RingError::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = ring.zero();
    let one = ring.one();
    for _ in 0..samples {
        let x = random_scalar(ring, &mut rng, 9);
        let y = random_scalar(ring, &mut rng, 9);
        let z = random_scalar(ring, &mut rng, 9);
        let laws: [(&str, Scalar, Scalar); 8] = [
            ("add-commutative", &x + &y, &y + &x),
            ("mul-commutative", &x * &y, &y * &x),
            ("add-associative", &(&x + &y) + &z, &x + &(&y + &z)),
            ("mul-associative", &(&x * &y) * &z, &x * &(&y * &z)),
            ("distributive", &x * &(&y + &z), &(&x * &y) + &(&x * &z)),
            ("additive-identity", &x + &zero, x.clone()),
            ("multiplicative-identity", &x * &one, x.clone()),
            ("additive-inverse", &x + &x.neg(), zero.clone()),
        ];
        for (law, lhs, rhs) in laws {
            if lhs != rhs {
                let mut report =
                    Report::compare("ring-axioms", 0, ring, &lhs, &rhs).with_seed(seed);
                report.witness = Some(Witness::note(format!(
                    "{law} fails for x = {x}, y = {y}, z = {z}"
                )));
                return Ok(report);
            }
        }
    }
    Ok(Report::new(
        "ring-axioms",
        0,
        ring,
        true,
        samples.to_string(),
        samples.to_string(),
    )
    .with_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_examples() {
        assert_eq!(
            Scalar::from_i64(Ring::Int, 2).pow(3),
            Scalar::from_i64(Ring::Int, 8)
        );
        assert_eq!(Scalar::var("x").pow(0), Ring::Poly.one());
        // 3^4 = 81 = 16*5 + 1
        let three = Scalar::from_i64(Ring::Zp(5), 3);
        assert_eq!(three.pow(4), Scalar::from_i64(Ring::Zp(5), 81 % 5));
        assert_eq!(scalar_pow(&three, 4).to_string(), "1 mod 5");
    }

    #[test]
    fn ring_ids_parse_and_reject() {
        assert_eq!("zp:97".parse::<Ring>().unwrap(), Ring::Zp(97));
        assert_eq!("poly".parse::<Ring>().unwrap(), Ring::Poly);
        assert_eq!("zp:91".parse::<Ring>(), Err(RingError::NotPrime(91)));
        assert!(matches!(
            "real".parse::<Ring>(),
            Err(RingError::UnknownRing(_))
        ));
    }

    #[test]
    fn mixed_ring_is_rejected() {
        let a = Scalar::from_i64(Ring::Int, 1);
        let b = Scalar::from_i64(Ring::Zp(7), 1);
        let c = Scalar::from_i64(Ring::Zp(11), 1);
        assert!(matches!(a.try_add(&b), Err(RingError::Mismatch { .. })));
        assert!(matches!(b.try_mul(&c), Err(RingError::Mismatch { .. })));
    }

    #[test]
    fn rationals_are_canonical() {
        let a = Scalar::rational(4, -6).unwrap();
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(a, Scalar::parse(Ring::Rat, "-2/3").unwrap());
        assert_eq!(
            Scalar::parse(Ring::Rat, "6/9").unwrap(),
            Scalar::rational(2, 3).unwrap()
        );
        assert!(Scalar::parse(Ring::Rat, "1/0").is_err());
    }

    #[test]
    fn literals_round_trip_through_display() {
        for (ring, lit) in [
            (Ring::Int, "-17"),
            (Ring::Rat, "5/1"),
            (Ring::Zp(97), "96 mod 97"),
            (Ring::Poly, "a12*a34 - a13*a24 + a14*a23"),
        ] {
            assert_eq!(Scalar::parse(ring, lit).unwrap().to_string(), lit);
        }
        assert_eq!(
            Scalar::parse(Ring::Zp(7), "-1").unwrap().to_string(),
            "6 mod 7"
        );
        assert!(Scalar::parse(Ring::Zp(7), "3 mod 5").is_err());
    }

    #[test]
    fn axioms_hold_in_every_ring() {
        for (id, n, seed) in [
            ("int", 100, 7),
            ("zp:7", 100, 7),
            ("poly", 50, 1),
            ("rat", 50, 3),
        ] {
            let r = ring_axiom_check(id, n, seed).unwrap();
            assert!(r.pass, "{id}: {r:?}");
        }
        assert!(matches!(
            ring_axiom_check("gf4", 10, 0),
            Err(RingError::UnknownRing(_))
        ));
        assert_eq!(ring_axiom_check("int", 0, 0), Err(RingError::NoSamples));
    }
}
