//! A∞ modules of framed solid tori. Chords are stored without a side; the
//! pairing decides which copy of the algebra they act through.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Chord, Idempotent};
use crate::error::{Error, Result};
use crate::structures::{AModule, Family};

/// Default repetition cap for the ∞-framed module.
pub const DEFAULT_INFINITY_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolidTorusSlope {
    Infinity,
    Framed(u32),
}

impl SolidTorusSlope {
    pub fn framed(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "framing must be a positive integer".into(),
            ));
        }
        Ok(Self::Framed(m))
    }

    pub fn module(self) -> Result<AModule> {
        match self {
            Self::Infinity => Ok(build_cfa_infinity(DEFAULT_INFINITY_CAP)),
            Self::Framed(m) => build_cfa_framed(m),
        }
    }
}

impl fmt::Display for SolidTorusSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinity => f.write_str("inf"),
            Self::Framed(m) => write!(f, "{m}"),
        }
    }
}

impl FromStr for SolidTorusSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Self::Infinity);
        }
        let bad = || {
            Error::InvalidParameter(format!(
                "slope `{s}` is neither `inf` nor a positive integer"
            ))
        };
        if !s.bytes().all(|b| b.is_ascii_digit()) || s.is_empty() {
            return Err(bad());
        }
        Self::framed(s.parse().map_err(|_| bad())?).map_err(|_| bad())
    }
}

/// One generator `w` with `m(w, 3, 23^k, 2) = w` for all `k >= 0`; pairings
/// may use instances up to `k = cap`.
pub fn build_cfa_infinity(cap: usize) -> AModule {
    let mut m = AModule::new();
    m.add_generator("w", Idempotent::One).expect("fresh module");
    m.add_family(Family {
        source: "w".into(),
        prefix: vec![Chord::C3],
        repeat: vec![Chord::C23],
        suffix: vec![Chord::C2],
        min_repeat: 0,
        cap,
        target: "w".into(),
    })
    .expect("family is coherent");
    m
}

/// Generators `q, p_1..p_m` with `m(q, 2) = p_1`,
/// `m(p_i, 3, 23^j, 2) = p_{i+j+1}` for `i + j + 1 <= m`, and `m(p_m, 3, 2, 1) = q`.
pub fn build_cfa_framed(m: u32) -> Result<AModule> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "framing must be a positive integer".into(),
        ));
    }
    let m = m as usize;
    let mut a = AModule::new();
    a.add_generator("q", Idempotent::Two)?;
    for i in 1..=m {
        a.add_generator(format!("p{i}"), Idempotent::One)?;
    }
    a.add_operation("q", &[Chord::C2], "p1")?;
    for i in 1..=m {
        for j in 0..m - i {
            let mut seq = vec![Chord::C3];
            seq.extend(std::iter::repeat_n(Chord::C23, j));
            seq.push(Chord::C2);
            a.add_operation(&format!("p{i}"), &seq, &format!("p{}", i + j + 1))?;
        }
    }
    a.add_operation(&format!("p{m}"), &[Chord::C3, Chord::C2, Chord::C1], "q")?;
    Ok(a)
}
