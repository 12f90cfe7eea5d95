//! Arbitrary precision integer with an inline `i64` fast path.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

/// Exact integer. Values that fit in an `i64` are stored inline.
#[derive(Clone)]
pub struct Int(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64),
    Big(BigInt),
}

impl Int {
    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int(Repr::Small(v)),
            None => Int(Repr::Big(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v > 0,
            Repr::Big(b) => b.sign() == Sign::Plus,
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.sign() == Sign::Minus,
        }
    }

    pub fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() { -self } else { self.clone() }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                let g = a.unsigned_abs().gcd(&b.unsigned_abs());
                match i64::try_from(g) {
                    Ok(v) => Int(Repr::Small(v)),
                    Err(_) => Int::from_big(BigInt::from(g)),
                }
            }
            _ => Int::from_big(self.to_bigint().gcd(&other.to_bigint())),
        }
    }

    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::zero();
        }
        (self / &self.gcd(other) * other).abs()
    }

    /// Floor division.
    pub fn div_floor(&self, other: &Int) -> Int {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                Int(Repr::Small(a.div_floor(b)))
            }
            _ => Int::from_big(self.to_bigint().div_floor(&other.to_bigint())),
        }
    }

    /// Remainder with the sign of the divisor.
    pub fn mod_floor(&self, other: &Int) -> Int {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                Int(Repr::Small(a.mod_floor(b)))
            }
            _ => Int::from_big(self.to_bigint().mod_floor(&other.to_bigint())),
        }
    }

    pub fn div_ceil(&self, other: &Int) -> Int {
        -(&(-self)).div_floor(other)
    }

    pub fn divides(&self, other: &Int) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        (other % self).is_zero()
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut r = Int::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int(Repr::Small(v))
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Int {
        Int(Repr::Small(v as i64))
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Int {
        match i64::try_from(v) {
            Ok(v) => Int(Repr::Small(v)),
            Err(_) => Int::from_big(BigInt::from(v)),
        }
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Int {
        match i64::try_from(v) {
            Ok(v) => Int(Repr::Small(v)),
            Err(_) => Int::from_big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Int) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl PartialEq<i64> for Int {
    fn eq(&self, other: &i64) -> bool {
        matches!(self.0, Repr::Small(v) if v == *other)
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialOrd<i64> for Int {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(match &self.0 {
            Repr::Small(a) => a.cmp(other),
            Repr::Big(b) => b.cmp(&BigInt::from(*other)),
        })
    }
}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(v) => v.hash(state),
            Repr::Big(b) => b.hash(state),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Int, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int(Repr::Small(v)));
        }
        s.parse::<BigInt>().map(Int::from_big)
    }
}

fn add_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(v) = x.checked_add(*y) {
            return Int(Repr::Small(v));
        }
    }
    Int::from_big(a.to_bigint() + b.to_bigint())
}

fn sub_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(v) = x.checked_sub(*y) {
            return Int(Repr::Small(v));
        }
    }
    Int::from_big(a.to_bigint() - b.to_bigint())
}

fn mul_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(v) = x.checked_mul(*y) {
            return Int(Repr::Small(v));
        }
    }
    Int::from_big(a.to_bigint() * b.to_bigint())
}

fn div_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(v) = x.checked_div(*y) {
            return Int(Repr::Small(v));
        }
    }
    Int::from_big(a.to_bigint() / b.to_bigint())
}

fn rem_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(v) = x.checked_rem(*y) {
            return Int(Repr::Small(v));
        }
    }
    Int::from_big(a.to_bigint() % b.to_bigint())
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Int> for &Int {
            type Output = Int;
            fn $m(self, rhs: &Int) -> Int {
                $f(self, rhs)
            }
        }
        impl $tr<Int> for &Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                $f(self, &rhs)
            }
        }
        impl $tr<&Int> for Int {
            type Output = Int;
            fn $m(self, rhs: &Int) -> Int {
                $f(&self, rhs)
            }
        }
        impl $tr<Int> for Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                $f(&self, &rhs)
            }
        }
        impl $tr<i64> for &Int {
            type Output = Int;
            fn $m(self, rhs: i64) -> Int {
                $f(self, &Int::from(rhs))
            }
        }
        impl $tr<i64> for Int {
            type Output = Int;
            fn $m(self, rhs: i64) -> Int {
                $f(&self, &Int::from(rhs))
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);
binop!(Rem, rem, rem_ref);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = add_ref(self, rhs);
    }
}

impl AddAssign<Int> for Int {
    fn add_assign(&mut self, rhs: Int) {
        *self = add_ref(self, &rhs);
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = sub_ref(self, rhs);
    }
}

impl SubAssign<Int> for Int {
    fn sub_assign(&mut self, rhs: Int) {
        *self = sub_ref(self, &rhs);
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        *self = mul_ref(self, rhs);
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Int(Repr::Small(n)),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Int::from_big(-b.clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Int> for Int {
    fn sum<I: Iterator<Item = &'a Int>>(iter: I) -> Int {
        iter.fold(Int::zero(), |a, b| a + b)
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int(Repr::Small(0))
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Int {
        Int(Repr::Small(1))
    }
}

impl Num for Int {
    type FromStrRadixErr = num_bigint::ParseBigIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Int, Self::FromStrRadixErr> {
        BigInt::from_str_radix(s, radix).map(Int::from_big)
    }
}

impl Signed for Int {
    fn abs(&self) -> Int {
        Int::abs(self)
    }
    fn abs_sub(&self, other: &Int) -> Int {
        if self <= other { Int::zero() } else { self - other }
    }
    fn signum(&self) -> Int {
        Int::from(Int::signum(self) as i64)
    }
    fn is_positive(&self) -> bool {
        Int::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Int::is_negative(self)
    }
}

impl Integer for Int {
    fn div_floor(&self, other: &Int) -> Int {
        Int::div_floor(self, other)
    }
    fn mod_floor(&self, other: &Int) -> Int {
        Int::mod_floor(self, other)
    }
    fn gcd(&self, other: &Int) -> Int {
        Int::gcd(self, other)
    }
    fn lcm(&self, other: &Int) -> Int {
        Int::lcm(self, other)
    }
    fn is_multiple_of(&self, other: &Int) -> bool {
        other.divides(self)
    }
    fn is_even(&self) -> bool {
        (self % 2).is_zero()
    }
    fn is_odd(&self) -> bool {
        !(self % 2).is_zero()
    }
    fn div_rem(&self, other: &Int) -> (Int, Int) {
        (self / other, self % other)
    }
}

impl ToPrimitive for Int {
    fn to_i64(&self) -> Option<i64> {
        Int::to_i64(self)
    }
    fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => u64::try_from(*v).ok(),
            Repr::Big(b) => b.to_u64(),
        }
    }
}

impl serde::Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => s.serialize_i64(*v),
            Repr::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}

/// Integer vector helpers.
pub type IntVec = Vec<Int>;

pub fn ivec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = 0i64;
    let mut big: Option<Int> = None;
    for (x, y) in a.iter().zip(b) {
        if let (Some(xs), Some(ys)) = (x.to_i64(), y.to_i64()) {
            if let Some(p) = xs.checked_mul(ys).and_then(|p| acc.checked_add(p)) {
                acc = p;
                continue;
            }
        }
        let s = big.take().unwrap_or_else(Int::zero) + Int::from(acc) + x * y;
        acc = 0;
        big = Some(s);
    }
    match big {
        Some(b) => b + Int::from(acc),
        None => Int::from(acc),
    }
}

pub fn vec_add(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Int], k: &Int) -> IntVec {
    a.iter().map(|x| x * k).collect()
}

pub fn vec_gcd(a: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in a {
        if !x.is_zero() {
            g = g.gcd(x);
            if g == 1 {
                break;
            }
        }
    }
    g
}

/// Divides by the content, keeping orientation.
pub fn make_primitive(a: &mut [Int]) {
    let g = vec_gcd(a);
    if !g.is_zero() && g != 1 {
        for x in a.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn fmt_vec(a: &[Int]) -> String {
    a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::from(i64::MAX);
        let b = &a + &Int::one();
        assert_eq!(b.to_bigint(), BigInt::from(i64::MAX) + 1);
        let c = &b - &Int::one();
        assert_eq!(c, a);
        assert!(c.to_i64().is_some());
        let m = &a * &a;
        assert_eq!(m.to_bigint(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(&m / &a, a);
        assert_eq!(-Int::from(i64::MIN), Int::from(BigInt::from(i64::MIN) * -1));
    }

    #[test]
    fn floor_ops() {
        assert_eq!(Int::from(-7).div_floor(&Int::from(2)), Int::from(-4));
        assert_eq!(Int::from(-7).mod_floor(&Int::from(2)), Int::from(1));
        assert_eq!(Int::from(7).div_ceil(&Int::from(2)), Int::from(4));
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
        assert_eq!(Int::from(4).lcm(&Int::from(6)), Int::from(12));
    }

    #[test]
    fn dot_overflow() {
        let a = vec![Int::from(i64::MAX), Int::from(i64::MAX)];
        let b = ivec(&[1, 1]);
        assert_eq!(dot(&a, &b).to_bigint(), BigInt::from(i64::MAX) * 2);
    }
}
