//! Region combinatorics of the arced Heegaard diagram for the (2,2n) torus link.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Integer multiplicities on the regions `Q0..Q5`, `P1..P_{2n-3}`, `R1..R_{2n-3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionVector {
    n: usize,
    q: [i64; 6],
    p: Vec<i64>,
    r: Vec<i64>,
}

impl RegionVector {
    pub fn zero(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "n must be at least 1, got {n}"
            )));
        }
        let len = (2 * n).saturating_sub(3);
        Ok(Self {
            n,
            q: [0; 6],
            p: vec![0; len],
            r: vec![0; len],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self, i: usize) -> i64 {
        self.q[i]
    }

    /// `P_i`, 1-based.
    pub fn p(&self, i: usize) -> i64 {
        self.p[i - 1]
    }

    /// `R_i`, 1-based.
    pub fn r(&self, i: usize) -> i64 {
        self.r[i - 1]
    }

    /// All coordinates in the order `Q0..Q5, P.., R..`, with their names.
    pub fn entries(&self) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = self
            .q
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("Q{i}"), *c))
            .collect();
        out.extend(
            self.p
                .iter()
                .enumerate()
                .map(|(i, c)| (format!("P{}", i + 1), *c)),
        );
        out.extend(
            self.r
                .iter()
                .enumerate()
                .map(|(i, c)| (format!("R{}", i + 1), *c)),
        );
        out
    }

    fn coords(&self) -> Vec<i64> {
        self.q
            .iter()
            .chain(&self.p)
            .chain(&self.r)
            .copied()
            .collect()
    }

    pub fn combine(&self, a: i64, other: &Self, b: i64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StructureMismatch(format!(
                "region vectors for n = {} and n = {}",
                self.n, other.n
            )));
        }
        let lin = |x: &[i64], y: &[i64]| {
            x.iter()
                .zip(y)
                .map(|(u, v)| a * u + b * v)
                .collect::<Vec<_>>()
        };
        let q = lin(&self.q, &other.q);
        Ok(Self {
            n: self.n,
            q: [q[0], q[1], q[2], q[3], q[4], q[5]],
            p: lin(&self.p, &other.p),
            r: lin(&self.r, &other.r),
        })
    }
}

impl fmt::Display for RegionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The two periodic domains `D1`, `D2`.
pub fn periodic_domains(n: usize) -> Result<(RegionVector, RegionVector)> {
    let mut d1 = RegionVector::zero(n)?;
    let mut d2 = RegionVector::zero(n)?;
    let n_i = n as i64;
    d1.q[3] = 1;
    d1.q[5] = 1;
    d1.q[1] = n_i + 2;
    d1.q[4] = n_i + 2;
    d1.q[2] = n_i + 3;
    for i in 1..=d1.p.len() {
        d1.p[i - 1] = i as i64 + 1;
        d1.r[i - 1] = i as i64 + 1;
    }
    d2.q[3] = 1;
    d2.q[5] = -1;
    d2.q[4] = 1;
    d2.q[1] = -1;
    for i in 1..=d2.p.len() {
        let even = i64::from(i % 2 == 0);
        d2.p[i - 1] = even;
        d2.r[i - 1] = -even;
    }
    Ok((d1, d2))
}

fn rank_two(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).any(|i| (i + 1..a.len()).any(|j| a[i] * b[j] != a[j] * b[i]))
}

/// Whether the two vectors span a rank-2 lattice.
pub fn independent(v1: &RegionVector, v2: &RegionVector) -> bool {
    v1.n == v2.n && rank_two(&v1.coords(), &v2.coords())
}

/// No nonzero combination `a D1 + b D2` vanishes on every `Q` region, so no
/// periodic domain is supported on the `P`/`R` regions alone.
pub fn provincially_admissible(n: usize) -> Result<bool> {
    let (d1, d2) = periodic_domains(n)?;
    Ok(rank_two(&d1.q, &d2.q))
}

/// Inputs of the index formula for a domain with chord sequences on both sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexData {
    pub euler_measure: Rational,
    pub n_x: Rational,
    pub n_y: Rational,
    pub left_chords: u32,
    pub right_chords: u32,
    pub left_linking: Rational,
    pub right_linking: Rational,
}

/// `e + n_x + n_y + |ρ_L| + |ρ_R| + ι(ρ_L) + ι(ρ_R)`.
pub fn index(d: &IndexData) -> Rational {
    let mut total = Rational::zero();
    for term in [
        d.euler_measure,
        d.n_x,
        d.n_y,
        Rational::from_integer(d.left_chords.into()),
        Rational::from_integer(d.right_chords.into()),
        d.left_linking,
        d.right_linking,
    ] {
        total += term;
    }
    total
}

/// `χ - convex/4 + concave/4`.
pub fn euler_measure(chi: i64, convex_corners: i64, concave_corners: i64) -> Rational {
    Rational::from_integer(chi) - Rational::new(convex_corners, 4)
        + Rational::new(concave_corners, 4)
}
