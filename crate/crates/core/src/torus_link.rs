//! Type-DD bimodule of the (2,2n) torus link complement: the full form read off
//! the genus-2 diagram, the simplified form, and the equivalence between them.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Basis, Chord, Idempotent};
use crate::error::{Error, Result};
use crate::structures::{DDLabel, DDStructure, DoubleSided, Morphism};

/// Generator classes. `a`/`x` record the left occupancy, `b`/`y` the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusLinkGenerator {
    Ab,
    /// `a y_j`, j even
    AY(usize),
    /// `x_i b`, i even
    XB(usize),
    /// `x_i y_j`, i ≡ j mod 2
    XY(usize, usize),
    /// `a y_j`, j odd; lives in the -1 summand
    AYOdd(usize),
    /// `x_i b`, i odd; lives in the +1 summand
    XBOdd(usize),
}

impl TorusLinkGenerator {
    pub fn name(self) -> String {
        match self {
            Self::Ab => "ab".to_string(),
            Self::AY(j) | Self::AYOdd(j) => format!("a_y{j}"),
            Self::XB(i) | Self::XBOdd(i) => format!("x{i}_b"),
            Self::XY(i, j) => xy(i, j),
        }
    }

    pub fn summand(self) -> i8 {
        match self {
            Self::AYOdd(_) => -1,
            Self::XBOdd(_) => 1,
            _ => 0,
        }
    }

    pub fn idempotents(self) -> (Idempotent, Idempotent) {
        use Idempotent::{One, Two};
        match self {
            Self::Ab => (One, One),
            Self::AY(_) | Self::AYOdd(_) => (One, Two),
            Self::XB(_) | Self::XBOdd(_) => (Two, One),
            Self::XY(..) => (Two, Two),
        }
    }
}

impl fmt::Display for TorusLinkGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn xy(i: usize, j: usize) -> String {
    format!("x{i}y{j}")
}

fn check_n(n: usize, least: usize) -> Result<()> {
    if n < least {
        return Err(Error::InvalidParameter(format!(
            "n must be at least {least}, got {n}"
        )));
    }
    Ok(())
}

/// All `2n² + 2n` generators with their idempotent summand.
pub fn enumerate_generators(n: usize) -> Result<Vec<(TorusLinkGenerator, i8)>> {
    check_n(n, 1)?;
    use TorusLinkGenerator::*;
    let top = 2 * n - 1;
    let mut out = vec![Ab];
    for k in 1..n {
        out.push(AY(2 * k));
        out.push(XB(2 * k));
    }
    for i in 1..=top {
        for j in (1..=top).filter(|j| (i + j) % 2 == 0) {
            out.push(XY(i, j));
        }
    }
    for j in (1..=top).step_by(2) {
        out.push(AYOdd(j));
        out.push(XBOdd(j));
    }
    Ok(out.into_iter().map(|g| (g, g.summand())).collect())
}

use Chord::{C1, C123, C2, C23, C3};

fn ch(c: Chord) -> Basis {
    Basis::Chord(c)
}

const I2: Basis = Basis::Idem(Idempotent::Two);

/// One arrow family of the full structure, for the build log.
struct FamilyRecord {
    name: &'static str,
    label: &'static str,
    range: String,
    provenance: &'static str,
    arrows: usize,
}

struct Builder {
    s: DDStructure,
    log: Vec<FamilyRecord>,
}

impl Builder {
    /// Emits `source -> label -> t` once for each distinct target.
    fn emit(&mut self, source: &str, label: DDLabel, targets: &[String]) -> usize {
        let distinct: BTreeSet<&String> = targets.iter().collect();
        for t in &distinct {
            self.s
                .add_arrow(source, label, t)
                .expect("family arrow is coherent");
        }
        distinct.len()
    }

    fn record(
        &mut self,
        name: &'static str,
        label: &'static str,
        range: String,
        provenance: &'static str,
        arrows: usize,
    ) {
        self.log.push(FamilyRecord {
            name,
            label,
            range,
            provenance,
            arrows,
        });
    }
}

const TRANSCRIBED: &str = "transcribed";
const FORCED: &str = "derived: structure equation";

fn full_builder(n: usize, with_summands: bool) -> Result<Builder> {
    check_n(n, 1)?;
    let mut s = DDStructure::empty();
    for (g, summand) in enumerate_generators(n)? {
        if summand == 0 || with_summands {
            s.add_generator(g.name(), g.idempotents())?;
        }
    }
    let mut b = Builder { s, log: Vec::new() };
    let top = 2 * n - 1;
    let ks = 1..n;

    let mut count = 0;
    for i in 1..=top {
        for j in (1..=top).filter(|j| (i + j) % 2 == 0) {
            let targets = match (i, j) {
                (i, j) if j > i + 2 => vec![xy(j - 1, i + 1), xy(i + 1, j - 1)],
                (i, j) if j == i + 2 => vec![xy(i + 1, j - 1)],
                (i, j) if i > j + 2 => vec![xy(j + 1, i - 1), xy(i - 1, j + 1)],
                (i, j) if i == j + 2 => vec![xy(i - 1, j + 1)],
                _ => vec![],
            };
            count += b.emit(&xy(i, j), DDLabel::new(I2, I2), &targets);
        }
    }
    b.record(
        "F1",
        "1",
        format!("x_i y_j, 1 <= i, j <= {top}"),
        TRANSCRIBED,
        count,
    );

    type Ends = fn(usize, usize) -> [String; 2];
    let simple: [(&str, &str, bool, Chord, Ends); 4] = [
        ("F2", "r1", true, C1, |k, _| {
            [xy(1, 2 * k - 1), xy(2 * k - 1, 1)]
        }),
        ("F3", "s1", false, C1, |k, _| {
            [xy(2 * k - 1, 1), xy(1, 2 * k - 1)]
        }),
        ("F4", "r3", true, C3, |k, top| {
            [xy(2 * k + 1, top), xy(top, 2 * k + 1)]
        }),
        ("F5", "s3", false, C3, |k, top| {
            [xy(top, 2 * k + 1), xy(2 * k + 1, top)]
        }),
    ];
    for (name, label, from_a, chord, targets) in simple {
        let mut count = 0;
        for k in ks.clone() {
            let (source, l) = if from_a {
                (format!("a_y{}", 2 * k), DDLabel::new(ch(chord), I2))
            } else {
                (format!("x{}_b", 2 * k), DDLabel::new(I2, ch(chord)))
            };
            count += b.emit(&source, l, &targets(k, top));
        }
        b.record(name, label, format!("k = 1..{}", n - 1), TRANSCRIBED, count);
    }

    let c = b.emit(
        &xy(top, top),
        DDLabel::new(ch(C2), ch(C2)),
        &["ab".to_string()],
    );
    b.record("F6", "r2 s2", format!("x{top}y{top}"), TRANSCRIBED, c);

    let ends = [xy(1, top), xy(top, 1)];
    let c = b.emit("ab", DDLabel::new(ch(C3), ch(C1)), &ends)
        + b.emit("ab", DDLabel::new(ch(C1), ch(C3)), &ends);
    b.record("F7", "r3 s1 + r1 s3", "ab".to_string(), TRANSCRIBED, c);

    let mut count = 0;
    for k in ks.clone() {
        count += b.emit(
            &xy(2 * k - 1, top),
            DDLabel::new(ch(C23), ch(C2)),
            &[format!("x{}_b", 2 * k)],
        );
    }
    b.record(
        "F8",
        "r23 s2",
        format!("k = 1..{}", n - 1),
        TRANSCRIBED,
        count,
    );

    let mut count = 0;
    for l in ks.clone() {
        count += b.emit(
            &xy(top, 2 * l - 1),
            DDLabel::new(ch(C2), ch(C23)),
            &[format!("a_y{}", 2 * l)],
        );
    }
    b.record(
        "F9",
        "r2 s23",
        format!("l = 1..{}", n - 1),
        TRANSCRIBED,
        count,
    );

    let both23 = DDLabel::new(ch(C23), ch(C23));
    let (mut c10, mut c11) = (0, 0);
    for k in ks.clone() {
        for l in ks.clone() {
            c10 += b.emit(&xy(2 * k - 1, 2 * l - 1), both23, &[xy(2 * k, 2 * l)]);
            c11 += b.emit(&xy(2 * k, 2 * l), both23, &[xy(2 * k + 1, 2 * l + 1)]);
        }
    }
    b.record(
        "F10",
        "r23 s23",
        format!("k, l = 1..{}, odd to even", n - 1),
        TRANSCRIBED,
        c10,
    );
    b.record(
        "F11",
        "r23 s23",
        format!("k, l = 1..{}, even to odd", n - 1),
        FORCED,
        c11,
    );

    let (mut c12, mut c13) = (0, 0);
    for j in ks.clone() {
        c12 += b.emit(
            &format!("a_y{}", 2 * j),
            DDLabel::new(ch(C123), ch(C23)),
            &[xy(2 * j + 1, 1)],
        );
        c13 += b.emit(
            &format!("x{}_b", 2 * j),
            DDLabel::new(ch(C23), ch(C123)),
            &[xy(1, 2 * j + 1)],
        );
    }
    b.record(
        "F12",
        "r123 s23",
        format!("j = 1..{}", n - 1),
        TRANSCRIBED,
        c12,
    );
    b.record(
        "F13",
        "r23 s123",
        format!("j = 1..{}", n - 1),
        TRANSCRIBED,
        c13,
    );

    let c = b.emit("ab", DDLabel::new(ch(C123), ch(C123)), &[xy(1, 1)]);
    b.record("F14", "r123 s123", "ab".to_string(), TRANSCRIBED, c);
    Ok(b)
}

/// The full type-DD structure on the summand-0 generators.
pub fn build_cfdd_full(n: usize) -> Result<DDStructure> {
    Ok(full_builder(n, false)?.s)
}

/// As [`build_cfdd_full`], optionally adding the ±1 summand generators (no arrows).
pub fn build_cfdd_full_with(n: usize, include_other_summands: bool) -> Result<DDStructure> {
    Ok(full_builder(n, include_other_summands)?.s)
}

/// Plain-text build log: one line per arrow family with its index range,
/// provenance and the number of arrows emitted.
pub fn build_log(n: usize) -> Result<String> {
    let b = full_builder(n, false)?;
    let mut out = format!(
        "# full type-DD structure, n = {n}: {} generators, {} arrows\n",
        b.s.len(),
        b.s.arrows().len()
    );
    for r in &b.log {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\tarrows={}\n",
            r.name, r.label, r.range, r.provenance, r.arrows
        ));
    }
    Ok(out)
}

fn u_xy(k: usize) -> String {
    format!("u_x{k}y{k}")
}

/// The simplified structure on `4n - 2` generators; names carry a `u_` prefix.
pub fn build_cfdd_simplified(n: usize) -> Result<DDStructure> {
    check_n(n, 2)?;
    let top = 2 * n - 1;
    let mut s = DDStructure::empty();
    s.add_generator("u_ab", (Idempotent::One, Idempotent::One))?;
    for k in 1..n {
        s.add_generator(
            format!("u_a_y{}", 2 * k),
            (Idempotent::One, Idempotent::Two),
        )?;
        s.add_generator(
            format!("u_x{}_b", 2 * k),
            (Idempotent::Two, Idempotent::One),
        )?;
    }
    for k in 1..=top {
        s.add_generator(u_xy(k), (Idempotent::Two, Idempotent::Two))?;
    }
    s.add_arrow("u_ab", DDLabel::new(ch(C123), ch(C123)), &u_xy(1))?;
    s.add_arrow("u_ab", DDLabel::new(ch(C1), ch(C3)), &u_xy(n))?;
    s.add_arrow("u_ab", DDLabel::new(ch(C3), ch(C1)), &u_xy(n))?;
    for k in 1..n {
        let ay = format!("u_a_y{}", 2 * k);
        let xb = format!("u_x{}_b", 2 * k);
        s.add_arrow(&ay, DDLabel::new(ch(C1), I2), &u_xy(k))?;
        s.add_arrow(&ay, DDLabel::new(ch(C3), I2), &u_xy(n + k))?;
        s.add_arrow(&xb, DDLabel::new(I2, ch(C1)), &u_xy(k))?;
        s.add_arrow(&xb, DDLabel::new(I2, ch(C3)), &u_xy(n + k))?;
        s.add_arrow(&xb, DDLabel::new(ch(C23), ch(C123)), &u_xy(k + 1))?;
    }
    for k in n..top {
        let m = 2 * (k - n + 1);
        s.add_arrow(
            &u_xy(k),
            DDLabel::new(ch(C2), ch(C23)),
            &format!("u_a_y{m}"),
        )?;
        s.add_arrow(
            &u_xy(k),
            DDLabel::new(ch(C23), ch(C2)),
            &format!("u_x{m}_b"),
        )?;
    }
    s.add_arrow(&u_xy(top), DDLabel::new(ch(C2), ch(C2)), "u_ab")?;
    Ok(s)
}

/// `F: full -> simplified`, `G: simplified -> full`, `H: full -> full`.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub full: DDStructure,
    pub simplified: DDStructure,
    pub f: Morphism<DoubleSided>,
    pub g: Morphism<DoubleSided>,
    pub h: Morphism<DoubleSided>,
}

/// Both orders of an off-diagonal pair, one name on the diagonal.
fn xy_sym(i: usize, j: usize) -> Vec<String> {
    if i == j {
        vec![xy(i, j)]
    } else {
        vec![xy(i, j), xy(j, i)]
    }
}

pub fn build_equivalence(n: usize) -> Result<Equivalence> {
    check_n(n, 3)?;
    let full = build_cfdd_full(n)?;
    let simplified = build_cfdd_simplified(n)?;
    let top = 2 * n - 1;
    let unit = |l: Idempotent, r: Idempotent| DDLabel::new(Basis::Idem(l), Basis::Idem(r));
    let (i11, i12, i21, i22) = (
        unit(Idempotent::One, Idempotent::One),
        unit(Idempotent::One, Idempotent::Two),
        unit(Idempotent::Two, Idempotent::One),
        unit(Idempotent::Two, Idempotent::Two),
    );
    let both23 = DDLabel::new(ch(C23), ch(C23));

    // F lists x1 y_{2n-1} -> u_x_n y_n under two headings; it is one arrow.
    let mut f_arrows: BTreeSet<(String, DDLabel, String)> = BTreeSet::new();
    f_arrows.insert(("ab".into(), i11, "u_ab".into()));
    for k in 1..n {
        f_arrows.insert((format!("a_y{}", 2 * k), i12, format!("u_a_y{}", 2 * k)));
        f_arrows.insert((format!("x{}_b", 2 * k), i21, format!("u_x{}_b", 2 * k)));
        f_arrows.insert((
            xy(2 * k, 2 * n - 2),
            DDLabel::new(ch(C2), ch(C23)),
            format!("u_a_y{}", 2 * k),
        ));
    }
    for k in 1..=n {
        f_arrows.insert((xy(1, 2 * k - 1), i22, u_xy(k)));
        f_arrows.insert((xy(2 * k - 1, top), i22, u_xy(k + n - 1)));
    }
    let mut f = Morphism::zero(&full, &simplified);
    for (s, l, t) in &f_arrows {
        f.add_arrow(s, *l, t)?;
    }

    let mut g = Morphism::zero(&simplified, &full);
    g.add_arrow("u_ab", i11, "ab")?;
    for k in 1..n {
        g.add_arrow(&format!("u_a_y{}", 2 * k), i12, &format!("a_y{}", 2 * k))?;
        g.add_arrow(&format!("u_x{}_b", 2 * k), i21, &format!("x{}_b", 2 * k))?;
    }
    g.add_arrow(&u_xy(1), i22, &xy(1, 1))?;
    g.add_arrow(&u_xy(1), both23, &xy(3, 1))?;
    for k in 2..n {
        g.add_arrow(&u_xy(k), i22, &xy(1, 2 * k - 1))?;
        g.add_arrow(&u_xy(k), i22, &xy(2 * k - 1, 1))?;
        g.add_arrow(&u_xy(k), both23, &xy(2 * k + 1, 1))?;
    }
    for k in n..top {
        let i = 2 * k - 2 * n + 1;
        g.add_arrow(&u_xy(k), i22, &xy(i, top))?;
        g.add_arrow(&u_xy(k), i22, &xy(top, i))?;
    }
    g.add_arrow(&u_xy(top), i22, &xy(top, top))?;

    let mut h = Morphism::zero(&full, &full);
    let r3 = DDLabel::new(ch(C3), I2);
    let s3 = DDLabel::new(I2, ch(C3));
    for k in 1..n - 1 {
        for t in [xy(2 * k + 1, top), xy(top, 2 * k + 1)] {
            h.add_arrow(&format!("a_y{}", 2 * k), r3, &t)?;
            h.add_arrow(&format!("x{}_b", 2 * k), s3, &t)?;
        }
    }
    h.add_arrow(&format!("a_y{}", 2 * n - 2), r3, &xy(top, top))?;
    h.add_arrow(&format!("x{}_b", 2 * n - 2), s3, &xy(top, top))?;
    for i in 1..=top {
        for j in (1..=top).filter(|j| (i + j) % 2 == 0) {
            let x = xy(i, j);
            let mut units = Vec::new();
            let mut twisted = Vec::new();
            if i < j {
                units = xy_sym(i + 1, j - 1);
                if i != 1 && j != top {
                    units.push(xy(j + 1, i - 1));
                }
            } else if i > j {
                units = xy_sym(i - 1, j + 1);
                if j == 1 && 3 <= i && i + 2 <= top {
                    twisted = xy_sym(i + 1, j + 1);
                }
            } else if i == 1 {
                twisted = vec![xy(2, 2)];
            } else if i != top {
                units = vec![xy(i + 1, j - 1)];
            }
            for t in units {
                h.add_arrow(&x, i22, &t)?;
            }
            for t in twisted {
                h.add_arrow(&x, both23, &t)?;
            }
        }
    }
    Ok(Equivalence {
        full,
        simplified,
        f,
        g,
        h,
    })
}
