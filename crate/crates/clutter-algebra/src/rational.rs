use crate::int::Int;
use num_traits::{One, Zero};

pub type Rational = num_rational::Ratio<Int>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn from_int(n: &Int) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn floor(r: &Rational) -> Int {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> Int {
    r.numer().div_ceil(r.denom())
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Renders as `p/q`, or `p` when integral.
pub fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) }
}

pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Splits a rational vector into (integer vector, common denominator).
pub fn clear_denominators(v: &[Rational]) -> (Vec<Int>, Int) {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let out = v.iter().map(|x| x.numer() * &(&l / x.denom())).collect();
    (out, l)
}

pub fn sum(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |a, b| a + b)
}

pub fn serialize_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(r))
}

pub fn serialize_rats<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rat))
}
