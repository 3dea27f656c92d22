//! The genus-1 torus algebra over F2.
//!
//! Basis: two idempotents and six Reeb chords on the 4-marked boundary circle.
//! Chords concatenate when the first ends where the second begins; idempotents
//! record the arc a chord starts from and ends on:
//!
//! ```text
//!   rho1   = i1 rho1   i2      rho12  = i1 rho12  i1
//!   rho2   = i2 rho2   i1      rho23  = i2 rho23  i2
//!   rho3   = i1 rho3   i2      rho123 = i1 rho123 i2
//! ```
//!
//! The same algebra appears on both boundaries of a doubly bordered manifold;
//! [`Side`] only changes how elements are printed (`r`/`i` on the left,
//! `s`/`j` on the right).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which boundary an algebra element lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    fn idem_prefix(self) -> char {
        match self {
            Side::Left => 'i',
            Side::Right => 'j',
        }
    }

    fn chord_prefix(self) -> char {
        match self {
            Side::Left => 'r',
            Side::Right => 's',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::UnknownToken(s.to_string())),
        }
    }
}

/// One of the two orthogonal idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Idempotent {
    One,
    Two,
}

impl Idempotent {
    pub const ALL: [Idempotent; 2] = [Idempotent::One, Idempotent::Two];

    pub fn index(self) -> u8 {
        match self {
            Idempotent::One => 1,
            Idempotent::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Idempotent> {
        match i {
            1 => Some(Idempotent::One),
            2 => Some(Idempotent::Two),
            _ => None,
        }
    }

    pub fn token(self, side: Side) -> String {
        format!("{}{}", side.idem_prefix(), self.index())
    }
}

/// A nonconstant Reeb chord, named by the intervals it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chord {
    C1,
    C2,
    C3,
    C12,
    C23,
    C123,
}

impl Chord {
    pub const ALL: [Chord; 6] = [
        Chord::C1,
        Chord::C2,
        Chord::C3,
        Chord::C12,
        Chord::C23,
        Chord::C123,
    ];

    pub fn interval(self) -> &'static str {
        match self {
            Chord::C1 => "1",
            Chord::C2 => "2",
            Chord::C3 => "3",
            Chord::C12 => "12",
            Chord::C23 => "23",
            Chord::C123 => "123",
        }
    }

    pub fn from_interval(s: &str) -> Option<Chord> {
        Chord::ALL.into_iter().find(|c| c.interval() == s)
    }

    /// The idempotent `i` with `i * c = c`.
    pub fn left_idem(self) -> Idempotent {
        match self {
            Chord::C2 | Chord::C23 => Idempotent::Two,
            Chord::C1 | Chord::C3 | Chord::C12 | Chord::C123 => Idempotent::One,
        }
    }

    /// The idempotent `i` with `c * i = c`.
    pub fn right_idem(self) -> Idempotent {
        match self {
            Chord::C2 | Chord::C12 => Idempotent::One,
            Chord::C1 | Chord::C3 | Chord::C23 | Chord::C123 => Idempotent::Two,
        }
    }

    /// Concatenation `self` then `next`, if the chords abut.
    pub fn concat(self, next: Chord) -> Option<Chord> {
        match (self, next) {
            (Chord::C1, Chord::C2) => Some(Chord::C12),
            (Chord::C2, Chord::C3) => Some(Chord::C23),
            (Chord::C1, Chord::C23) => Some(Chord::C123),
            (Chord::C12, Chord::C3) => Some(Chord::C123),
            _ => None,
        }
    }

    pub fn token(self, side: Side) -> String {
        format!("{}{}", side.chord_prefix(), self.interval())
    }
}

/// `left_idem(c)`: the idempotent fixing `c` from the left.
pub fn left_idem(c: Chord) -> Idempotent {
    c.left_idem()
}

/// `right_idem(c)`: the idempotent fixing `c` from the right.
pub fn right_idem(c: Chord) -> Idempotent {
    c.right_idem()
}

/// One of the eight basis elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Idem(Idempotent),
    Chord(Chord),
}

impl Basis {
    pub const ALL: [Basis; 8] = [
        Basis::Idem(Idempotent::One),
        Basis::Idem(Idempotent::Two),
        Basis::Chord(Chord::C1),
        Basis::Chord(Chord::C2),
        Basis::Chord(Chord::C3),
        Basis::Chord(Chord::C12),
        Basis::Chord(Chord::C23),
        Basis::Chord(Chord::C123),
    ];

    pub fn is_idempotent(self) -> bool {
        matches!(self, Basis::Idem(_))
    }

    pub fn chord(self) -> Option<Chord> {
        match self {
            Basis::Chord(c) => Some(c),
            Basis::Idem(_) => None,
        }
    }

    pub fn left_idem(self) -> Idempotent {
        match self {
            Basis::Idem(i) => i,
            Basis::Chord(c) => c.left_idem(),
        }
    }

    pub fn right_idem(self) -> Idempotent {
        match self {
            Basis::Idem(i) => i,
            Basis::Chord(c) => c.right_idem(),
        }
    }

    /// Product of two basis elements; `None` is zero.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Basis) -> Option<Basis> {
        match (self, other) {
            (Basis::Idem(a), Basis::Idem(b)) => (a == b).then_some(self),
            (Basis::Idem(a), Basis::Chord(c)) => (c.left_idem() == a).then_some(other),
            (Basis::Chord(c), Basis::Idem(b)) => (c.right_idem() == b).then_some(self),
            (Basis::Chord(a), Basis::Chord(b)) => a.concat(b).map(Basis::Chord),
        }
    }

    /// True when `from * self * to == self`.
    pub fn runs_between(self, from: Idempotent, to: Idempotent) -> bool {
        self.left_idem() == from && self.right_idem() == to
    }

    pub fn token(self, side: Side) -> String {
        match self {
            Basis::Idem(i) => i.token(side),
            Basis::Chord(c) => c.token(side),
        }
    }

    /// Parses `i1`, `j2`, `r12`, `s123`, ...
    pub fn parse_token(token: &str) -> Result<(Side, Basis)> {
        let unknown = || Error::UnknownToken(token.to_string());
        let mut chars = token.chars();
        let head = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        let (side, is_idem) = match head {
            'i' => (Side::Left, true),
            'j' => (Side::Right, true),
            'r' => (Side::Left, false),
            's' => (Side::Right, false),
            _ => return Err(unknown()),
        };
        let basis = if is_idem {
            let i: u8 = rest.parse().map_err(|_| unknown())?;
            Basis::Idem(Idempotent::from_index(i).ok_or_else(unknown)?)
        } else {
            Basis::Chord(Chord::from_interval(rest).ok_or_else(unknown)?)
        };
        Ok((side, basis))
    }

    /// Parses a token and insists on the given side.
    pub fn parse_on(token: &str, side: Side) -> Result<Basis> {
        let (s, b) = Basis::parse_token(token)?;
        if s != side {
            return Err(Error::SideMismatch);
        }
        Ok(b)
    }
}

/// An F2-linear combination of basis elements on one side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    side: Side,
    support: BTreeSet<Basis>,
}

impl AlgebraElement {
    pub fn zero(side: Side) -> Self {
        Self {
            side,
            support: BTreeSet::new(),
        }
    }

    /// `i1 + i2`.
    pub fn unit(side: Side) -> Self {
        Self::from_basis(side, Basis::Idem(Idempotent::One))
            + Self::from_basis(side, Basis::Idem(Idempotent::Two))
    }

    pub fn from_basis(side: Side, b: Basis) -> Self {
        Self {
            side,
            support: BTreeSet::from([b]),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn support(&self) -> &BTreeSet<Basis> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Toggles one basis element (adding it mod 2).
    pub fn toggle(&mut self, b: Basis) {
        if !self.support.remove(&b) {
            self.support.insert(b);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        let support = self
            .support
            .symmetric_difference(&other.support)
            .copied()
            .collect();
        Ok(Self {
            side: self.side,
            support,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        let mut out = Self::zero(self.side);
        for a in &self.support {
            for b in &other.support {
                if let Some(p) = a.mul(*b) {
                    out.toggle(p);
                }
            }
        }
        Ok(out)
    }
}

/// `mul(a, b)` on algebra elements; fails when the sides differ.
pub fn mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.try_mul(b)
}

impl std::ops::Add for AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on a side mismatch; use [`AlgebraElement::try_add`] to handle it.
    fn add(self, rhs: Self) -> Self::Output {
        self.try_add(&rhs)
            .expect("adding elements of different sides")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        let tokens: Vec<String> = self.support.iter().map(|b| b.token(self.side)).collect();
        f.write_str(&tokens.join("+"))
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('+').map(str::trim).collect();
        let mut side = None;
        let mut support = BTreeSet::new();
        for p in parts {
            let (sd, b) = Basis::parse_token(p)?;
            if side.is_some_and(|x| x != sd) {
                return Err(Error::SideMismatch);
            }
            side = Some(sd);
            if !support.remove(&b) {
                support.insert(b);
            }
        }
        let side = side.ok_or_else(|| Error::UnknownToken(s.to_string()))?;
        Ok(Self { side, support })
    }
}
