//! JSON serialization. Output is deterministic: generators sorted by name,
//! arrows by (source, target, label), pretty-printed with a trailing newline.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Basis, Chord, Idempotent, Side};
use crate::error::{Error, Result};
use crate::structures::{AModule, ChainComplexF2, DDLabel, DDStructure, DStructure, Family};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Serialized {
    DD(DDStructure),
    D(DStructure),
    A(AModule),
    Complex(ChainComplexF2),
}

impl Serialized {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::DD(_) => "DD",
            Self::D(_) => "D",
            Self::A(_) => "A",
            Self::Complex(_) => "complex",
        }
    }
}

impl From<DDStructure> for Serialized {
    fn from(s: DDStructure) -> Self {
        Self::DD(s)
    }
}

impl From<DStructure> for Serialized {
    fn from(s: DStructure) -> Self {
        Self::D(s)
    }
}

impl From<AModule> for Serialized {
    fn from(s: AModule) -> Self {
        Self::A(s)
    }
}

impl From<ChainComplexF2> for Serialized {
    fn from(s: ChainComplexF2) -> Self {
        Self::Complex(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorRecord {
    name: String,
    idempotents: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowRecord {
    source: String,
    labels: Vec<String>,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureDoc {
    schema_version: u32,
    kind: String,
    sides: Vec<Side>,
    generators: Vec<GeneratorRecord>,
    arrows: Vec<ArrowRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleGenerator {
    name: String,
    class: u8,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperationRecord {
    source: String,
    chords: Vec<String>,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyRecord {
    source: String,
    prefix: Vec<String>,
    repeat: Vec<String>,
    suffix: Vec<String>,
    min_repeat: usize,
    cap: usize,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    schema_version: u32,
    kind: String,
    generators: Vec<ModuleGenerator>,
    operations: Vec<OperationRecord>,
    families: Vec<FamilyRecord>,
}

impl serde::Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Side {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn chords_out(c: &[Chord]) -> Vec<String> {
    c.iter().map(|c| c.interval().to_string()).collect()
}

fn chords_in(c: &[String]) -> Result<Vec<Chord>> {
    c.iter()
        .map(|s| Chord::from_interval(s).ok_or_else(|| Error::UnknownToken(s.clone())))
        .collect()
}

fn idem_on(token: &str, side: Side) -> Result<Idempotent> {
    match Basis::parse_on(token, side)? {
        Basis::Idem(i) => Ok(i),
        Basis::Chord(_) => Err(Error::Format(format!("`{token}` is not an idempotent"))),
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn to_json(doc: &Serialized) -> String {
    let structure = |kind: &str, sides: Vec<Side>, generators, arrows| {
        pretty(&StructureDoc {
            schema_version: SCHEMA_VERSION,
            kind: kind.to_string(),
            sides,
            generators,
            arrows,
        })
    };
    match doc {
        Serialized::DD(s) => structure(
            "DD",
            vec![Side::Left, Side::Right],
            s.generators()
                .iter()
                .map(|(n, (l, r))| GeneratorRecord {
                    name: n.clone(),
                    idempotents: vec![l.token(Side::Left), r.token(Side::Right)],
                })
                .collect(),
            s.arrows()
                .iter()
                .map(|a| ArrowRecord {
                    source: a.source.clone(),
                    labels: vec![
                        a.label.left.token(Side::Left),
                        a.label.right.token(Side::Right),
                    ],
                    target: a.target.clone(),
                })
                .collect(),
        ),
        Serialized::D(s) => structure(
            "D",
            vec![s.side()],
            s.generators()
                .iter()
                .map(|(n, i)| GeneratorRecord {
                    name: n.clone(),
                    idempotents: vec![i.token(s.side())],
                })
                .collect(),
            s.arrows()
                .iter()
                .map(|a| ArrowRecord {
                    source: a.source.clone(),
                    labels: vec![a.label.token(s.side())],
                    target: a.target.clone(),
                })
                .collect(),
        ),
        Serialized::Complex(c) => structure(
            "complex",
            vec![],
            c.generators()
                .keys()
                .map(|n| GeneratorRecord {
                    name: n.clone(),
                    idempotents: vec![],
                })
                .collect(),
            c.arrows()
                .iter()
                .map(|a| ArrowRecord {
                    source: a.source.clone(),
                    labels: vec![],
                    target: a.target.clone(),
                })
                .collect(),
        ),
        Serialized::A(m) => pretty(&ModuleDoc {
            schema_version: SCHEMA_VERSION,
            kind: "A".into(),
            generators: m
                .generators()
                .iter()
                .map(|(n, c)| ModuleGenerator {
                    name: n.clone(),
                    class: c.index(),
                })
                .collect(),
            operations: m
                .operations()
                .iter()
                .map(|o| OperationRecord {
                    source: o.source.clone(),
                    chords: chords_out(&o.chords),
                    target: o.target.clone(),
                })
                .collect(),
            families: m
                .families()
                .iter()
                .map(|f| FamilyRecord {
                    source: f.source.clone(),
                    prefix: chords_out(&f.prefix),
                    repeat: chords_out(&f.repeat),
                    suffix: chords_out(&f.suffix),
                    min_repeat: f.min_repeat,
                    cap: f.cap,
                    target: f.target.clone(),
                })
                .collect(),
        }),
    }
}

fn expect_len<T>(v: &[T], n: usize, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::Format(format!(
            "expected {n} {what}, found {}",
            v.len()
        )));
    }
    Ok(())
}

fn structure_from(doc: StructureDoc) -> Result<Serialized> {
    match (doc.kind.as_str(), doc.sides.as_slice()) {
        ("DD", [Side::Left, Side::Right]) => {
            let mut s = DDStructure::empty();
            for g in &doc.generators {
                expect_len(&g.idempotents, 2, "idempotents")?;
                s.add_generator(
                    &g.name,
                    (
                        idem_on(&g.idempotents[0], Side::Left)?,
                        idem_on(&g.idempotents[1], Side::Right)?,
                    ),
                )?;
            }
            for a in &doc.arrows {
                expect_len(&a.labels, 2, "labels")?;
                let label = DDLabel::new(
                    Basis::parse_on(&a.labels[0], Side::Left)?,
                    Basis::parse_on(&a.labels[1], Side::Right)?,
                );
                s.add_arrow(&a.source, label, &a.target)?;
            }
            Ok(Serialized::DD(s))
        }
        ("D", [side]) => {
            let mut s = DStructure::over(*side);
            for g in &doc.generators {
                expect_len(&g.idempotents, 1, "idempotents")?;
                s.add_generator(&g.name, idem_on(&g.idempotents[0], *side)?)?;
            }
            for a in &doc.arrows {
                expect_len(&a.labels, 1, "labels")?;
                s.add_arrow(&a.source, Basis::parse_on(&a.labels[0], *side)?, &a.target)?;
            }
            Ok(Serialized::D(s))
        }
        ("complex", []) => {
            let mut c = ChainComplexF2::empty();
            for g in &doc.generators {
                expect_len(&g.idempotents, 0, "idempotents")?;
                c.add_generator(&g.name, ())?;
            }
            for a in &doc.arrows {
                expect_len(&a.labels, 0, "labels")?;
                c.add_arrow(&a.source, (), &a.target)?;
            }
            Ok(Serialized::Complex(c))
        }
        (kind, sides) => Err(Error::Format(format!(
            "kind `{kind}` does not fit sides {sides:?}"
        ))),
    }
}

fn module_from(doc: ModuleDoc) -> Result<Serialized> {
    let mut m = AModule::new();
    for g in &doc.generators {
        let class = Idempotent::from_index(g.class)
            .ok_or_else(|| Error::Format(format!("class {} is not 1 or 2", g.class)))?;
        m.add_generator(&g.name, class)?;
    }
    for o in &doc.operations {
        m.add_operation(&o.source, &chords_in(&o.chords)?, &o.target)?;
    }
    for f in doc.families {
        m.add_family(Family {
            prefix: chords_in(&f.prefix)?,
            repeat: chords_in(&f.repeat)?,
            suffix: chords_in(&f.suffix)?,
            source: f.source,
            min_repeat: f.min_repeat,
            cap: f.cap,
            target: f.target,
        })?;
    }
    Ok(Serialized::A(m))
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn from_json(text: &str) -> Result<Serialized> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    let version = value.get("schema_version").and_then(Value::as_u64);
    if version != Some(u64::from(SCHEMA_VERSION)) {
        return Err(Error::Format(format!(
            "unsupported schema_version {version:?}"
        )));
    }
    match value.get("kind").and_then(Value::as_str) {
        Some("A") => module_from(serde_json::from_value(value).map_err(json_err)?),
        Some("DD" | "D" | "complex") => {
            structure_from(serde_json::from_value(value).map_err(json_err)?)
        }
        Some(other) => Err(Error::Format(format!("unknown kind `{other}`"))),
        None => Err(Error::Format("missing `kind`".into())),
    }
}
