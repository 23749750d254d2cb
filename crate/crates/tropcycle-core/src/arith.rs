//! Exact scalars: arbitrary-precision rationals and the min-plus semiring.
//!
//! The tropical semiring used throughout is **min-plus**: `⊕ = min`,
//! `⊙ = +`, with `+∞` as the additive identity and `0` as the
//! multiplicative identity. Max-plus data can be fed through
//! [`TropNum::negated`], which is the semiring isomorphism `x ↦ -x`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. This is the wire format for rationals.
pub fn rat_from_str(s: &str) -> Result<Rat, ParseRatError> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = numer.parse().map_err(|_| ParseRatError::bad(s))?;
    let d: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| ParseRatError::bad(s))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ParseRatError::zero_denominator(s));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn rat_to_string(x: &Rat) -> String {
    use alloc::string::ToString;
    x.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    input: String,
    zero_denominator: bool,
}

impl ParseRatError {
    fn bad(s: &str) -> Self {
        ParseRatError { input: String::from(s), zero_denominator: false }
    }

    fn zero_denominator(s: &str) -> Self {
        ParseRatError { input: String::from(s), zero_denominator: true }
    }
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero_denominator {
            write!(f, "rational `{}` has a zero denominator", self.input)
        } else {
            write!(f, "`{}` is not a rational of the form p/q or p", self.input)
        }
    }
}

impl core::error::Error for ParseRatError {}

/// A min-plus scalar: a rational or `+∞`.
///
/// `Inf` is the additive identity (`min(∞, x) = x`) and absorbs under
/// multiplication (`∞ + x = ∞`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TropNum {
    Finite(Rat),
    Inf,
}

impl TropNum {
    pub fn finite(numer: i64, denom: i64) -> Self {
        TropNum::Finite(rat(numer, denom))
    }

    /// Additive identity of the semiring.
    pub fn zero() -> Self {
        TropNum::Inf
    }

    /// Multiplicative identity of the semiring.
    pub fn one() -> Self {
        TropNum::Finite(Rat::zero())
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, TropNum::Inf)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            TropNum::Finite(x) => Some(x),
            TropNum::Inf => None,
        }
    }

    /// Tropical addition: `min` under the total order with `∞` largest.
    pub fn trop_add(&self, other: &TropNum) -> TropNum {
        core::cmp::min(self, other).clone()
    }

    /// Tropical multiplication: ordinary `+`, with `∞` absorbing.
    pub fn trop_mul(&self, other: &TropNum) -> TropNum {
        match (self, other) {
            (TropNum::Finite(a), TropNum::Finite(b)) => TropNum::Finite(a + b),
            _ => TropNum::Inf,
        }
    }

    /// The involution `x ↦ -x` carrying max-plus data into min-plus form
    /// (and back). Fixes `Inf`, which plays `-∞` on the max-plus side.
    pub fn negated(&self) -> TropNum {
        match self {
            TropNum::Finite(a) => TropNum::Finite(-a),
            TropNum::Inf => TropNum::Inf,
        }
    }
}

impl PartialOrd for TropNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropNum::Inf, TropNum::Inf) => Ordering::Equal,
            (TropNum::Inf, TropNum::Finite(_)) => Ordering::Greater,
            (TropNum::Finite(_), TropNum::Inf) => Ordering::Less,
            (TropNum::Finite(a), TropNum::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rat> for TropNum {
    fn from(x: Rat) -> Self {
        TropNum::Finite(x)
    }
}

/// `+` is tropical addition (min); see module docs.
impl Add for TropNum {
    type Output = TropNum;
    fn add(self, rhs: TropNum) -> TropNum {
        self.trop_add(&rhs)
    }
}

/// `*` is tropical multiplication (ordinary sum); see module docs.
impl Mul for TropNum {
    type Output = TropNum;
    fn mul(self, rhs: TropNum) -> TropNum {
        self.trop_mul(&rhs)
    }
}

impl fmt::Display for TropNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropNum::Finite(x) => write!(f, "{}", x),
            TropNum::Inf => write!(f, "inf"),
        }
    }
}

/// Parses the wire format: `"inf"` or a rational string.
pub fn trop_from_str(s: &str) -> Result<TropNum, ParseRatError> {
    if s == "inf" {
        Ok(TropNum::Inf)
    } else {
        rat_from_str(s).map(TropNum::Finite)
    }
}

/// Dot product of a rational vector with an integer vector.
pub fn dot_int(x: &[Rat], e: &[i64]) -> Rat {
    debug_assert_eq!(x.len(), e.len());
    let mut acc = Rat::zero();
    for (xi, &ei) in x.iter().zip(e.iter()) {
        if ei != 0 {
            acc += xi * rat_int(ei);
        }
    }
    acc
}

/// Dot product of two rational vectors.
pub fn dot(x: &[Rat], y: &[Rat]) -> Rat {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Rat::zero();
    for (xi, yi) in x.iter().zip(y.iter()) {
        acc += xi * yi;
    }
    acc
}

/// Integer floor of a rational.
pub fn rat_floor(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Fractional part in `[0, 1)`.
pub fn rat_fract(x: &Rat) -> Rat {
    x - Rat::from_integer(rat_floor(x))
}

/// True when the rational is an integer.
pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// gcd helper on machine integers, always nonnegative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b).abs()
}

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Returns `None` for the zero vector.
pub fn primitive_from_rat(v: &[Rat]) -> Option<Vec<i64>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num_integer::Integer::lcm(&lcm, x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::Integer::gcd(&g, x);
    }
    Some(
        ints.iter()
            .map(|x| {
                let q = x / &g;
                i64::try_from(&q).expect("lattice coordinate exceeds i64")
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: i64, d: i64) -> TropNum {
        TropNum::finite(n, d)
    }

    #[test]
    fn trop_add_examples() {
        assert_eq!(t(3, 1).trop_add(&t(5, 1)), t(3, 1));
        assert_eq!(TropNum::Inf.trop_add(&t(7, 2)), t(7, 2));
        assert_eq!(t(-1, 3).trop_add(&t(-1, 3)), t(-1, 3));
    }

    #[test]
    fn trop_mul_examples() {
        assert_eq!(t(3, 1).trop_mul(&t(5, 1)), t(8, 1));
        assert_eq!(TropNum::Inf.trop_mul(&t(5, 1)), TropNum::Inf);
        // 0 is the multiplicative identity
        assert_eq!(TropNum::one().trop_mul(&t(9, 4)), t(9, 4));
        assert_eq!(TropNum::one().trop_mul(&TropNum::Inf), TropNum::Inf);
    }

    #[test]
    fn wire_format() {
        assert_eq!(rat_to_string(&rat(3, 4)), "3/4");
        assert_eq!(rat_to_string(&rat(-6, 8)), "-3/4");
        assert_eq!(rat_to_string(&rat_int(5)), "5");
        assert_eq!(rat_from_str("3/4").unwrap(), rat(3, 4));
        assert_eq!(rat_from_str("-7").unwrap(), rat_int(-7));
        assert_eq!(rat_from_str("4/-6").unwrap(), rat(-2, 3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("a/b").is_err());
        assert_eq!(trop_from_str("inf").unwrap(), TropNum::Inf);
        assert_eq!(trop_from_str("2/3").unwrap(), t(2, 3));
    }

    #[test]
    fn negation_is_max_plus_bridge() {
        // max(a, b) = -min(-a, -b)
        let a = t(2, 1);
        let b = t(5, 1);
        let max = a.negated().trop_add(&b.negated()).negated();
        assert_eq!(max, t(5, 1));
        assert_eq!(TropNum::Inf.negated(), TropNum::Inf);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive_from_rat(&[rat(1, 2), rat(1, 3)]), Some(vec![3, 2]));
        assert_eq!(primitive_from_rat(&[rat(-4, 1), rat(6, 1)]), Some(vec![-2, 3]));
        assert_eq!(primitive_from_rat(&[rat(0, 1), rat(0, 1)]), None);
    }

    fn arb_trop() -> impl Strategy<Value = TropNum> {
        prop_oneof![
            5 => (-50i64..50, 1i64..12).prop_map(|(n, d)| TropNum::finite(n, d)),
            1 => Just(TropNum::Inf),
        ]
    }

    proptest! {
        #[test]
        fn semiring_laws(a in arb_trop(), b in arb_trop(), c in arb_trop()) {
            // commutativity
            prop_assert_eq!(a.trop_add(&b), b.trop_add(&a));
            prop_assert_eq!(a.trop_mul(&b), b.trop_mul(&a));
            // associativity
            prop_assert_eq!(a.trop_add(&b).trop_add(&c), a.trop_add(&b.trop_add(&c)));
            prop_assert_eq!(a.trop_mul(&b).trop_mul(&c), a.trop_mul(&b.trop_mul(&c)));
            // idempotency of ⊕
            prop_assert_eq!(a.trop_add(&a), a.clone());
            // identities
            prop_assert_eq!(a.trop_add(&TropNum::zero()), a.clone());
            prop_assert_eq!(a.trop_mul(&TropNum::one()), a.clone());
            // distributivity of ⊙ over ⊕
            prop_assert_eq!(
                a.trop_mul(&b.trop_add(&c)),
                a.trop_mul(&b).trop_add(&a.trop_mul(&c))
            );
        }

        #[test]
        fn rat_addition_matches_cross_multiplication(
            (p1, q1, p2, q2) in (-100i64..100, 1i64..60, -100i64..100, 1i64..60)
        ) {
            let a = rat(p1, q1);
            let b = rat(p2, q2);
            // independent cross-multiplication oracle
            let oracle = rat(p1 * q2 + p2 * q1, q1 * q2);
            prop_assert_eq!(a + b, oracle);
        }

        #[test]
        fn rat_string_roundtrip(p in -10_000i64..10_000, q in 1i64..500) {
            let x = rat(p, q);
            prop_assert_eq!(rat_from_str(&rat_to_string(&x)).unwrap(), x);
        }
    }
}
