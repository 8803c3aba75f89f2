//! Integer coordinate encodings: unary, quaternary and quaternion codewords.
//!
//! The ladder schemes order their alphabet on a fixed ladder. A codeword of
//! length `l` is a run of `ladder[t]` followed by a run of `ladder[t + 1]`, so
//! consecutive integers differ in exactly one position by one ladder step.
//! With `A` nonzero ladder symbols there are `A·l + 1` such codewords, and a
//! range of `C` integers uses the first `C` of them.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Symbol;
use crate::error::{domain, Error, Result};

/// Mask order of the quaternion ladder:
/// 0, 1, i, j, k, 1+i, 1+j, 1+k, i+j, j+k, i+k, 1+i+j, 1+j+k, 1+i+k, i+j+k, 1+i+j+k.
const QUATERNION_LADDER: [u8; 16] = [
    0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1100, 0b1010, 0b0111,
    0b1101, 0b1011, 0b1110, 0b1111,
];
const QUATERNARY_LADDER: [u8; 4] = [0b0000, 0b0001, 0b0010, 0b0011];
const UNARY_LADDER: [u8; 2] = [0b0000, 0b0001];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Unary,
    Quaternary,
    Quaternion,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Unary, Scheme::Quaternary, Scheme::Quaternion];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Unary => "unary",
            Scheme::Quaternary => "quaternary",
            Scheme::Quaternion => "quaternion",
        }
    }

    /// Number of binary channels a symbol of this scheme can occupy.
    pub fn dim(self) -> usize {
        match self {
            Scheme::Unary => 1,
            Scheme::Quaternary => 2,
            Scheme::Quaternion => 4,
        }
    }

    /// Count of nonzero ladder symbols.
    pub fn arity(self) -> usize {
        self.ladder_masks().len() - 1
    }

    fn ladder_masks(self) -> &'static [u8] {
        match self {
            Scheme::Unary => &UNARY_LADDER,
            Scheme::Quaternary => &QUATERNARY_LADDER,
            Scheme::Quaternion => &QUATERNION_LADDER,
        }
    }

    pub fn ladder(self) -> Vec<Symbol> {
        self.ladder_masks()
            .iter()
            .map(|&m| ladder_symbol(m))
            .collect()
    }

    fn ladder_index(self, s: Symbol) -> Option<usize> {
        self.ladder_masks().iter().position(|&m| m == s.mask())
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.ladder_index(s).is_some()
    }

    /// Length of one coordinate codeword for a range of `range` integers.
    pub fn codeword_len(self, range: usize) -> Result<usize> {
        match self {
            Scheme::Unary => {
                check_range(range)?;
                Ok(range)
            }
            _ => codeword_length(range, self),
        }
    }
}

fn ladder_symbol(mask: u8) -> Symbol {
    Symbol::from_mask(mask).expect("ladder masks are 4-bit")
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scheme> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown scheme `{s}`")))
    }
}

/// An ordered symbol sequence encoding one integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword(pub Vec<Symbol>);

impl Codeword {
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Symbols joined by `,`, e.g. `1+j,1+k`.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, s) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Codeword> {
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<Symbol>>>()
            .map(Codeword)
    }
}

fn check_range(range: usize) -> Result<()> {
    if range < 2 {
        return domain(format!("range must cover at least 2 values, got {range}"));
    }
    Ok(())
}

fn check_value(value: usize, range: usize) -> Result<()> {
    if !(1..=range).contains(&value) {
        return domain(format!("value {value} outside 1..={range}"));
    }
    Ok(())
}

/// `l = ceil((C − 1) / A)` for the ladder schemes.
pub fn codeword_length(range: usize, scheme: Scheme) -> Result<usize> {
    check_range(range)?;
    if scheme == Scheme::Unary {
        return domain("codeword_length applies to ladder schemes; unary uses encode_unary");
    }
    Ok((range - 1).div_ceil(scheme.arity()))
}

/// Encodes `value` in `1..=range`. Unary is delegated to [`encode_unary`].
pub fn encode_value(value: usize, range: usize, scheme: Scheme) -> Result<Codeword> {
    if scheme == Scheme::Unary {
        return encode_unary(value, range);
    }
    let len = codeword_length(range, scheme)?;
    check_value(value, range)?;
    let u = value - 1;
    let (t, rmd) = (u / len, u % len);
    let masks = scheme.ladder_masks();
    let mut symbols = vec![ladder_symbol(masks[t]); len - rmd];
    if rmd > 0 {
        symbols.extend(std::iter::repeat_n(ladder_symbol(masks[t + 1]), rmd));
    }
    Ok(Codeword(symbols))
}

/// `value` ones followed by `range − value` zeros.
pub fn encode_unary(value: usize, range: usize) -> Result<Codeword> {
    check_range(range)?;
    check_value(value, range)?;
    let mut symbols = vec![Symbol::ONE; value];
    symbols.resize(range, Symbol::ZERO);
    Ok(Codeword(symbols))
}

/// Inverse of [`encode_value`].
pub fn decode_value(cw: &Codeword, range: usize, scheme: Scheme) -> Result<usize> {
    let len = scheme.codeword_len(range)?;
    let syms = cw.symbols();
    if syms.len() != len {
        return Err(Error::Decode(format!(
            "expected {len} symbols, got {}",
            syms.len()
        )));
    }
    let value = match scheme {
        Scheme::Unary => {
            let ones = syms.iter().take_while(|&&s| s == Symbol::ONE).count();
            if ones == 0 || syms[ones..].iter().any(|&s| s != Symbol::ZERO) {
                return Err(Error::Decode(format!(
                    "`{cw}` is not a ones-prefix unary code"
                )));
            }
            ones
        }
        _ => {
            let index = |s: Symbol| {
                scheme
                    .ladder_index(s)
                    .ok_or_else(|| Error::Decode(format!("`{s}` is not in the {scheme} alphabet")))
            };
            let t = index(syms[0])?;
            let lead = syms.iter().take_while(|&&s| s == syms[0]).count();
            let rmd = len - lead;
            if rmd > 0 {
                let next = index(syms[lead])?;
                if next != t + 1 || syms[lead..].iter().any(|&s| s != syms[lead]) {
                    return Err(Error::Decode(format!(
                        "`{cw}` is not a single-step ladder run"
                    )));
                }
            }
            t * len + rmd + 1
        }
    };
    if value > range {
        return Err(Error::Decode(format!(
            "`{cw}` encodes {value}, beyond range {range}"
        )));
    }
    Ok(value)
}

/// Concatenated row and column codewords, without the bias symbol.
pub fn encode_point(row: usize, col: usize, range: usize, scheme: Scheme) -> Result<Vec<Symbol>> {
    let mut v = encode_value(row, range, scheme)?.0;
    v.extend(encode_value(col, range, scheme)?.0);
    Ok(v)
}

/// Network input for the point `(row, col)`: row codeword, column codeword,
/// then the constant bias symbol `1`.
pub fn build_input(row: usize, col: usize, range: usize, scheme: Scheme) -> Result<Vec<Symbol>> {
    let mut v = encode_point(row, col, range, scheme)?;
    v.push(Symbol::ONE);
    Ok(v)
}
