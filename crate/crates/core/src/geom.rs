//! Exact rational points and the predicates built on them.
//!
//! Nothing in this module rounds. Every comparison is decided on
//! [`BigRational`] values, so the answers are exact for any input that can be
//! written down in the drawing format.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-2/7"`, `"0.125"` or `"-1.5e-3"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(joined.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Ok(if negative { -value } else { value })
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn zero() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn mirrored(&self) -> Point {
        Point::new(self.x.clone(), -&self.y)
    }

    /// Point on the segment `a -> b` at parameter `t`.
    pub fn lerp(a: &Point, b: &Point, t: &Rational) -> Point {
        a.add(&b.sub(a).scale(t))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

pub fn cross(u: &Point, v: &Point) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

pub fn dot(u: &Point, v: &Point) -> Rational {
    &u.x * &v.x + &u.y * &v.y
}

/// `Greater` when `a, b, c` turn counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Rational::zero())
}

/// Does `p` lie on the closed segment `a b`?
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient(a, b, p) != Ordering::Equal {
        return false;
    }
    let d = b.sub(a);
    let t = dot(&p.sub(a), &d);
    !t.is_negative() && t <= dot(&d, &d)
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentContact {
    None,
    /// Transversal crossing in the relative interior of both segments.
    Proper {
        point: Point,
        s: Rational,
        t: Rational,
    },
    /// A single common point that is an endpoint of at least one segment.
    Touch {
        point: Point,
        s: Rational,
        t: Rational,
    },
    /// Collinear with a common piece of positive length.
    Overlap,
}

/// Classifies the intersection of `a0 a1` with `b0 b1`. `s` and `t` are the
/// parameters of the common point along each segment.
pub fn segment_contact(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> SegmentContact {
    let da = a1.sub(a0);
    let db = b1.sub(b0);
    let denom = cross(&da, &db);
    let w = b0.sub(a0);
    let zero = Rational::zero();
    let one = Rational::one();
    if !denom.is_zero() {
        let s = cross(&w, &db) / &denom;
        let t = cross(&w, &da) / &denom;
        if s < zero || s > one || t < zero || t > one {
            return SegmentContact::None;
        }
        let point = Point::lerp(a0, a1, &s);
        let interior = s > zero && s < one && t > zero && t < one;
        return if interior {
            SegmentContact::Proper { point, s, t }
        } else {
            SegmentContact::Touch { point, s, t }
        };
    }
    if !cross(&w, &da).is_zero() {
        return SegmentContact::None;
    }
    let len2 = dot(&da, &da);
    let t0 = dot(&w, &da) / &len2;
    let t1 = dot(&b1.sub(a0), &da) / &len2;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = if lo < zero { zero.clone() } else { lo };
    let hi = if hi > one { one.clone() } else { hi };
    match lo.cmp(&hi) {
        Ordering::Greater => SegmentContact::None,
        Ordering::Less => SegmentContact::Overlap,
        Ordering::Equal => {
            let point = Point::lerp(a0, a1, &lo);
            let t = dot(&point.sub(b0), &db) / dot(&db, &db);
            SegmentContact::Touch { point, s: lo, t }
        }
    }
}

fn upper_half(v: &Point) -> bool {
    v.y.is_positive() || (v.y.is_zero() && v.x.is_positive())
}

/// Orders nonzero direction vectors by their angle in `[0, 2pi)`.
pub fn cmp_angle(u: &Point, v: &Point) -> Ordering {
    match (upper_half(u), upper_half(v)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => Rational::zero().cmp(&cross(u, v)),
    }
}

/// `v * conj(u)`: a vector whose angle is the counterclockwise angle from `u`
/// to `v`. Lets angle differences be compared without square roots.
pub fn relative_direction(u: &Point, v: &Point) -> Point {
    Point::new(&v.x * &u.x + &v.y * &u.y, &v.y * &u.x - &v.x * &u.y)
}

/// Shoelace sum, twice the signed area of the closed chain.
pub fn twice_signed_area(points: &[Point]) -> Rational {
    let mut acc = Rational::zero();
    for (i, p) in points.iter().enumerate() {
        let q = &points[(i + 1) % points.len()];
        acc += cross(p, q);
    }
    acc
}
