//! Exact values in the rational span of `{1, √2, √3, √6}`.
//!
//! Every edge cost of a chemical graph lies in this four-dimensional
//! space over `Q`, so AG values, bounds and move deltas are all represented
//! exactly. Comparison is decided symbolically: the sign of
//! `a + b√2 + c√3 + d√6` is reduced to signs of elements of `Q(√2)`, which
//! are in turn reduced to signs of rationals. Floats are only used for display.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `a + b√2 + c√3 + d√6` with rational coefficients.
///
/// The basis is linearly independent over the rationals, so two values are
/// equal iff their coefficients are equal, and the derived `Eq`/`Hash` agree
/// with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactValue {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn ratio(p: i64, q: i64) -> BigRational {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl ExactValue {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        ExactValue { a, b, c, d }
    }

    /// Builds a value from four `(numerator, denominator)` pairs.
    pub fn from_ratios(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        ExactValue {
            a: ratio(a.0, a.1),
            b: ratio(b.0, b.1),
            c: ratio(c.0, c.1),
            d: ratio(d.0, d.1),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(1, 1)
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(k, 1)
    }

    pub fn rational(p: i64, q: i64) -> Self {
        ExactValue {
            a: ratio(p, q),
            ..Self::default()
        }
    }

    /// `(p/q)·√2`
    pub fn sqrt2(p: i64, q: i64) -> Self {
        ExactValue {
            b: ratio(p, q),
            ..Self::default()
        }
    }

    /// `(p/q)·√3`
    pub fn sqrt3(p: i64, q: i64) -> Self {
        ExactValue {
            c: ratio(p, q),
            ..Self::default()
        }
    }

    /// `(p/q)·√6`
    pub fn sqrt6(p: i64, q: i64) -> Self {
        ExactValue {
            d: ratio(p, q),
            ..Self::default()
        }
    }

    /// Coefficients `(a, b, c, d)` of `a + b√2 + c√3 + d√6`.
    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Nearest-double projection, for display and for float cross-checks.
    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.a)
            + f(&self.b) * std::f64::consts::SQRT_2
            + f(&self.c) * 3f64.sqrt()
            + f(&self.d) * 6f64.sqrt()
    }

    /// Exact sign of the value.
    pub fn signum(&self) -> Ordering {
        // x = P + Q√3 with P = a + b√2 and Q = c + d√2.
        let sp = sign_q2(&self.a, &self.b);
        let sq = sign_q2(&self.c, &self.d);
        match (sp, sq) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // signs disagree: compare P² against 3Q² inside Q(√2)
                let two = BigRational::from_integer(BigInt::from(2));
                let three = BigRational::from_integer(BigInt::from(3));
                let six = BigRational::from_integer(BigInt::from(6));
                let rat = &self.a * &self.a + &two * &self.b * &self.b
                    - &three * &self.c * &self.c
                    - &six * &self.d * &self.d;
                let irr = &two * &self.a * &self.b - &six * &self.c * &self.d;
                match sign_q2(&rat, &irr) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                }
            }
        }
    }

    /// Exact comparison; equality iff all four coefficients agree.
    pub fn exact_cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum()
    }

    /// Fixed-point rendering of the float projection.
    pub fn format_float(&self, decimals: usize) -> String {
        format!("{:.*}", decimals, self.to_f64())
    }

    /// Space-separated rational coefficients, e.g. `15/2 0 11/6 0`.
    pub fn coefficient_string(&self) -> String {
        self.coefficients()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Sign of `p + q√2`.
fn sign_q2(p: &BigRational, q: &BigRational) -> Ordering {
    let sp = sign_of(p);
    let sq = sign_of(q);
    match (sp, sq) {
        (s, Ordering::Equal) => s,
        (Ordering::Equal, s) => s,
        (s, t) if s == t => s,
        (s, _) => {
            let two = BigRational::from_integer(BigInt::from(2));
            let diff = p * p - two * q * q;
            match sign_of(&diff) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => s,
                Ordering::Less => s.reverse(),
            }
        }
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_positive() {
        Ordering::Greater
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exact_cmp(other)
    }
}

impl Add<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn add(self, rhs: &ExactValue) -> ExactValue {
        ExactValue {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Add for ExactValue {
    type Output = ExactValue;
    fn add(self, rhs: ExactValue) -> ExactValue {
        &self + &rhs
    }
}

impl Add<&ExactValue> for ExactValue {
    type Output = ExactValue;
    fn add(self, rhs: &ExactValue) -> ExactValue {
        &self + rhs
    }
}

impl AddAssign<&ExactValue> for ExactValue {
    fn add_assign(&mut self, rhs: &ExactValue) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl Sub<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn sub(self, rhs: &ExactValue) -> ExactValue {
        ExactValue {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Sub for ExactValue {
    type Output = ExactValue;
    fn sub(self, rhs: ExactValue) -> ExactValue {
        &self - &rhs
    }
}

impl Sub<&ExactValue> for ExactValue {
    type Output = ExactValue;
    fn sub(self, rhs: &ExactValue) -> ExactValue {
        &self - rhs
    }
}

impl SubAssign<&ExactValue> for ExactValue {
    fn sub_assign(&mut self, rhs: &ExactValue) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        ExactValue {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl Mul<&BigRational> for &ExactValue {
    type Output = ExactValue;
    fn mul(self, k: &BigRational) -> ExactValue {
        ExactValue {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }
}

impl Mul<i64> for &ExactValue {
    type Output = ExactValue;
    fn mul(self, k: i64) -> ExactValue {
        self * &BigRational::from_integer(BigInt::from(k))
    }
}

impl Mul<i64> for ExactValue {
    type Output = ExactValue;
    fn mul(self, k: i64) -> ExactValue {
        &self * k
    }
}

impl Sum for ExactValue {
    fn sum<I: Iterator<Item = ExactValue>>(iter: I) -> Self {
        iter.fold(ExactValue::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactValue> for ExactValue {
    fn sum<I: Iterator<Item = &'a ExactValue>>(iter: I) -> Self {
        iter.fold(ExactValue::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Display for ExactValue {
    /// Closed form such as `15/2 + 11/6√3`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.a, ""),
            (&self.b, "√2"),
            (&self.c, "√3"),
            (&self.d, "√6"),
        ];
        let mut first = true;
        for (coef, unit) in terms {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            let body = if !unit.is_empty() && mag.is_one() {
                unit.to_string()
            } else {
                format!("{mag}{unit}")
            };
            match (first, coef.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactValue({self} ≈ {:.6})", self.to_f64())
    }
}

// JSON: {"a":[p,q],"b":[p,q],"c":[p,q],"d":[p,q],"float":x}. Integers that do
// not fit in an i64 are written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_bigint(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(x) => IntRepr::Small(x),
            None => IntRepr::Big(v.to_string()),
        }
    }

    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            IntRepr::Small(x) => Some(BigInt::from(*x)),
            IntRepr::Big(s) => s.parse().ok(),
        }
    }
}

fn ratio_repr(r: &BigRational) -> [IntRepr; 2] {
    [
        IntRepr::from_bigint(r.numer()),
        IntRepr::from_bigint(r.denom()),
    ]
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactValue", 5)?;
        s.serialize_field("a", &ratio_repr(&self.a))?;
        s.serialize_field("b", &ratio_repr(&self.b))?;
        s.serialize_field("c", &ratio_repr(&self.c))?;
        s.serialize_field("d", &ratio_repr(&self.d))?;
        s.serialize_field("float", &self.to_f64())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct ExactRepr {
    a: [IntRepr; 2],
    b: [IntRepr; 2],
    c: [IntRepr; 2],
    d: [IntRepr; 2],
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ExactRepr::deserialize(deserializer)?;
        let conv = |pair: &[IntRepr; 2]| -> Result<BigRational, D::Error> {
            let p = pair[0]
                .to_bigint()
                .ok_or_else(|| D::Error::custom("bad numerator"))?;
            let q = pair[1]
                .to_bigint()
                .ok_or_else(|| D::Error::custom("bad denominator"))?;
            if q.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            Ok(BigRational::new(p, q))
        };
        Ok(ExactValue {
            a: conv(&repr.a)?,
            b: conv(&repr.b)?,
            c: conv(&repr.c)?,
            d: conv(&repr.d)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_iff_all_coefficients_zero() {
        assert!(ExactValue::zero().is_zero());
        assert_eq!(ExactValue::zero().signum(), Ordering::Equal);
        let v = ExactValue::sqrt2(1, 1) - ExactValue::sqrt2(1, 1);
        assert!(v.is_zero());
        assert!(!ExactValue::sqrt6(1, 1000).is_zero());
    }

    #[test]
    fn sign_of_near_cancellations() {
        // 99/70 is a convergent of √2: √2 - 99/70 ≈ -7.2e-5
        let v = ExactValue::sqrt2(1, 1) - ExactValue::rational(99, 70);
        assert_eq!(v.signum(), Ordering::Less);
        // 1393/985 undershoots √2 by ~3.6e-7
        let w = ExactValue::sqrt2(1, 1) - ExactValue::rational(1393, 985);
        assert_eq!(w.signum(), Ordering::Greater);
        // √2 + √3 vs √6 + 1/2: 3.1463 vs 2.9495
        let x = ExactValue::sqrt2(1, 1) + ExactValue::sqrt3(1, 1)
            - ExactValue::sqrt6(1, 1)
            - ExactValue::rational(1, 2);
        assert_eq!(x.signum(), Ordering::Greater);
        // 5/4 - 3√2 + 7/4√3 ≈ 0.0384, terms of size ~4 cancelling
        let y = ExactValue::rational(5, 4) - ExactValue::sqrt2(3, 1) + ExactValue::sqrt3(7, 4);
        assert_eq!(y.signum(), Ordering::Greater);
        assert_eq!((-y).signum(), Ordering::Less);
    }

    #[test]
    fn display_closed_forms() {
        assert_eq!(ExactValue::zero().to_string(), "0");
        let v = ExactValue::rational(15, 2) + ExactValue::sqrt3(11, 6);
        assert_eq!(v.to_string(), "15/2 + 11/6√3");
        let w = ExactValue::rational(5, 4) - ExactValue::sqrt2(3, 1) + ExactValue::sqrt3(7, 4);
        assert_eq!(w.to_string(), "5/4 - 3√2 + 7/4√3");
        assert_eq!(ExactValue::sqrt6(-1, 1).to_string(), "-√6");
    }

    #[test]
    fn json_shape() {
        let v = ExactValue::rational(11, 1) + ExactValue::sqrt2(3, 2);
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["a"], serde_json::json!([11, 1]));
        assert_eq!(json["b"], serde_json::json!([3, 2]));
        assert_eq!(json["c"], serde_json::json!([0, 1]));
        assert_eq!(json["d"], serde_json::json!([0, 1]));
        assert!((json["float"].as_f64().unwrap() - 13.1213).abs() < 5e-5);
        let back: ExactValue = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn json_big_integers_fall_back_to_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(10);
        let v = ExactValue::new(
            BigRational::from_integer(big.clone()),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        );
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains(&format!("\"{big}\"")));
        let back: ExactValue = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    fn small_value() -> impl Strategy<Value = ExactValue> {
        let r = (-60i64..60, 1i64..13);
        (r.clone(), r.clone(), r.clone(), r)
            .prop_map(|(a, b, c, d)| ExactValue::from_ratios(a, b, c, d))
    }

    proptest! {
        // Oracle: the float projection decides the sign whenever it is far
        // from zero relative to the magnitude of the terms.
        #[test]
        fn sign_agrees_with_float_when_unambiguous(v in small_value()) {
            let x = v.to_f64();
            if x.abs() > 1e-9 {
                let expect = if x > 0.0 { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(v.signum(), expect);
            }
        }

        #[test]
        fn ordering_is_antisymmetric_and_translation_invariant(
            x in small_value(), y in small_value(), z in small_value()
        ) {
            prop_assert_eq!(x.exact_cmp(&y), y.exact_cmp(&x).reverse());
            prop_assert_eq!((&x + &z).exact_cmp(&(&y + &z)), x.exact_cmp(&y));
        }

        #[test]
        fn negation_flips_sign(x in small_value()) {
            prop_assert_eq!((-x.clone()).signum(), x.signum().reverse());
        }
    }
}
