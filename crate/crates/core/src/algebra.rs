//! Exact integer quaternions and the sixteen-letter symbol alphabet.
//!
//! Everything here is integral. The absolute value is never taken; code that
//! needs a magnitude uses [`Quaternion::norm_sq`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// `a + b·i + c·j + d·k` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0, 0, 0, 0);
    pub const ONE: Quaternion = Quaternion::new(1, 0, 0, 0);
    pub const I: Quaternion = Quaternion::new(0, 1, 0, 0);
    pub const J: Quaternion = Quaternion::new(0, 0, 1, 0);
    pub const K: Quaternion = Quaternion::new(0, 0, 0, 1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub const fn real(a: i64) -> Self {
        Quaternion::new(a, 0, 0, 0)
    }

    pub fn components(self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn from_components(c: [i64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    /// Scalar part preserved, vector part negated.
    pub fn conj(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    /// `a² + b² + c² + d²`, the squared absolute value.
    pub fn norm_sq(self) -> i64 {
        self.real_dot(self)
    }

    /// Euclidean inner product of the coefficient vectors. Equal to the
    /// scalar part of `conj(self) * other`.
    pub fn real_dot(self, other: Quaternion) -> i64 {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn scalar(self) -> i64 {
        self.a
    }

    pub fn scale(self, k: i64) -> Self {
        Quaternion::new(self.a * k, self.b * k, self.c * k, self.d * k)
    }
}

/// Hamilton product: `i² = j² = k² = ijk = −1`.
pub fn qmul(p: Quaternion, q: Quaternion) -> Quaternion {
    Quaternion {
        a: p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        b: p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        c: p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        d: p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    }
}

pub fn qconj(q: Quaternion) -> Quaternion {
    q.conj()
}

pub fn qnorm_sq(q: Quaternion) -> i64 {
    q.norm_sq()
}

pub fn real_dot(p: Quaternion, q: Quaternion) -> i64 {
    p.real_dot(q)
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        qmul(self, rhs)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a - rhs.a,
            self.b - rhs.b,
            self.c - rhs.c,
            self.d - rhs.d,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        self.scale(-1)
    }
}

const UNITS: [&str; 4] = ["", "i", "j", "k"];

/// Renders as `1+i+j+k`, `-1-i+j-k`, `2-3j`, or `0`. Terms appear in the
/// order 1, i, j, k and unit coefficients are omitted.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, unit) in self.components().into_iter().zip(UNITS) {
            if coef == 0 {
                continue;
            }
            if coef < 0 {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            let mag = coef.unsigned_abs();
            if mag != 1 || unit.is_empty() {
                write!(f, "{mag}")?;
            }
            f.write_str(unit)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    /// Accepts what `Display` produces: signed terms, each an optional
    /// magnitude followed by an optional unit, every unit at most once.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownSymbol(s.to_string());
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(bad());
        }
        let mut comps = [0i64; 4];
        let mut seen = [false; 4];
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1;
            match bytes[pos] {
                b'-' => {
                    sign = -1;
                    pos += 1;
                }
                b'+' if pos > 0 => pos += 1,
                _ if pos > 0 => return Err(bad()),
                _ => {}
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &s[start..pos];
            let unit = match bytes.get(pos) {
                Some(b'i') => 1,
                Some(b'j') => 2,
                Some(b'k') => 3,
                _ => 0,
            };
            if unit != 0 {
                pos += 1;
            }
            let mag: i64 = if digits.is_empty() {
                if unit == 0 {
                    return Err(bad());
                }
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            if seen[unit] {
                return Err(bad());
            }
            seen[unit] = true;
            comps[unit] = sign * mag;
        }
        Ok(Quaternion::from_components(comps))
    }
}

/// A quaternion whose four components are each 0 or 1.
///
/// Stored as a 4-bit mask: bit 0 is the scalar part, bits 1..=3 are the
/// coefficients of i, j, k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0b0000);
    pub const ONE: Symbol = Symbol(0b0001);
    pub const I: Symbol = Symbol(0b0010);
    pub const J: Symbol = Symbol(0b0100);
    pub const K: Symbol = Symbol(0b1000);

    pub fn from_mask(mask: u8) -> Result<Symbol> {
        if mask > 0b1111 {
            return Err(Error::Domain(format!("symbol mask {mask} exceeds 4 bits")));
        }
        Ok(Symbol(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn value(self) -> Quaternion {
        let bit = |n: u8| i64::from((self.0 >> n) & 1);
        Quaternion::new(bit(0), bit(1), bit(2), bit(3))
    }

    /// Count of unit components.
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Every one of the 16 symbols, ordered by mask.
    pub fn all() -> impl Iterator<Item = Symbol> {
        (0u8..16).map(Symbol)
    }
}

impl TryFrom<Quaternion> for Symbol {
    type Error = Error;

    fn try_from(q: Quaternion) -> Result<Symbol> {
        let mut mask = 0u8;
        for (n, c) in q.components().into_iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << n,
                _ => return Err(Error::Domain(format!("{q} is not a 0/1 symbol"))),
            }
        }
        Ok(Symbol(mask))
    }
}

impl From<Symbol> for Quaternion {
    fn from(s: Symbol) -> Quaternion {
        s.value()
    }
}

pub fn symbol_from_mask(mask: u8) -> Result<Symbol> {
    Symbol::from_mask(mask)
}

pub fn mask_from_symbol(s: Symbol) -> u8 {
    s.mask()
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        Symbol::all()
            .find(|sym| sym.to_string() == s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }
}

pub fn symbol_to_text(s: Symbol) -> String {
    s.to_string()
}

pub fn parse_symbol(text: &str) -> Result<Symbol> {
    text.parse()
}
