//! JSON wire formats for surfaces, spin structures, framings, orbit keys,
//! and generator words.
//!
//! Integers are unbounded: values are emitted as JSON numbers of arbitrary
//! size and accepted either as numbers or as decimal strings. The zeroth
//! boundary rotation number is never an input requirement; it is derived and
//! echoed on output (and validated when present on input).

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::framing::{Framing, Generator, OrbitKey, Sign};
use crate::rel::{BoundaryData, RelFraming, RelGenerator};
use crate::spin::QuadForm;
use crate::surface::SurfaceSig;
use crate::Error;

/// Errors raised while reading documents: malformed shapes are distinguished
/// from domain-level infeasibility so callers can map them to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

/// An arbitrary-precision integer on the wire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        if let Some(v) = self.0.to_i64() {
            s.serialize_i64(v)
        } else {
            let n: serde_json::Number = self
                .0
                .to_string()
                .parse()
                .map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match &v {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s.trim().to_string(),
            other => {
                return Err(D::Error::custom(format!(
                    "expected an integer or decimal string, got {other}"
                )))
            }
        };
        BigInt::from_str(&text)
            .map(JsonInt)
            .map_err(|_| D::Error::custom(format!("not an integer: {text:?}")))
    }
}

fn ints(vals: &[BigInt]) -> Vec<JsonInt> {
    vals.iter().cloned().map(JsonInt).collect()
}

fn bigints(vals: &[JsonInt]) -> Vec<BigInt> {
    vals.iter().map(|v| v.0.clone()).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceDoc {
    pub genus: usize,
    pub boundary: usize,
}

impl SurfaceDoc {
    pub fn from_sig(sig: &SurfaceSig) -> Self {
        SurfaceDoc {
            genus: sig.genus(),
            boundary: sig.boundary_count(),
        }
    }

    pub fn to_sig(&self) -> Result<SurfaceSig, JsonError> {
        Ok(SurfaceSig::new(self.genus, self.boundary)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadFormDoc {
    pub surface: SurfaceDoc,
    pub base: Vec<u8>,
}

impl QuadFormDoc {
    pub fn from_form(w: &QuadForm) -> Self {
        QuadFormDoc {
            surface: SurfaceDoc::from_sig(w.sig()),
            base: w.base().to_vec(),
        }
    }

    pub fn to_form(&self) -> Result<QuadForm, JsonError> {
        let sig = self.surface.to_sig()?;
        Ok(QuadForm::new(sig, self.base.clone())?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FramingDoc {
    pub surface: SurfaceDoc,
    pub rot_alpha: Vec<JsonInt>,
    pub rot_beta: Vec<JsonInt>,
    pub rot_boundary: Vec<JsonInt>,
    /// Derived on load, echoed on output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rot_boundary_0: Option<JsonInt>,
}

impl FramingDoc {
    pub fn from_framing(f: &Framing) -> Self {
        FramingDoc {
            surface: SurfaceDoc::from_sig(f.sig()),
            rot_alpha: ints(f.rot_a()),
            rot_beta: ints(f.rot_b()),
            rot_boundary: ints(f.rot_d()),
            rot_boundary_0: Some(JsonInt(f.rot_boundary_0())),
        }
    }

    pub fn to_framing(&self) -> Result<Framing, JsonError> {
        let sig = self.surface.to_sig()?;
        let f = Framing::new(
            sig,
            bigints(&self.rot_alpha),
            bigints(&self.rot_beta),
            bigints(&self.rot_boundary),
        )?;
        if let Some(given) = &self.rot_boundary_0 {
            let derived = f.rot_boundary_0();
            if given.0 != derived {
                return Err(JsonError::Malformed(format!(
                    "rot_boundary_0 = {} but the boundary rotation numbers force {}",
                    given.0, derived
                )));
            }
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelFramingDoc {
    pub surface: SurfaceDoc,
    pub rot_alpha: Vec<JsonInt>,
    pub rot_beta: Vec<JsonInt>,
    pub arc_ceil: Vec<JsonInt>,
    /// Boundary profile of the fixed boundary framing, entries `nu_0 ..= nu_n`.
    pub delta_nu: Vec<JsonInt>,
    /// Redundant with `delta_nu` (entry `j` is `nu_{j+1} - 1`); validated
    /// when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rot_boundary: Option<Vec<JsonInt>>,
}

impl RelFramingDoc {
    pub fn from_rel(f: &RelFraming) -> Self {
        let nu = f.boundary().nu();
        let rot_boundary: Vec<JsonInt> = nu[1..].iter().map(|v| JsonInt(v - 1)).collect();
        RelFramingDoc {
            surface: SurfaceDoc::from_sig(f.sig()),
            rot_alpha: ints(f.rot_a()),
            rot_beta: ints(f.rot_b()),
            arc_ceil: ints(f.arc_ceil()),
            delta_nu: ints(nu),
            rot_boundary: Some(rot_boundary),
        }
    }

    pub fn to_rel(&self) -> Result<RelFraming, JsonError> {
        let sig = self.surface.to_sig()?;
        let boundary = BoundaryData::new(sig, bigints(&self.delta_nu))?;
        if let Some(rots) = &self.rot_boundary {
            if rots.len() != sig.n() {
                return Err(JsonError::Malformed(format!(
                    "rot_boundary has {} entries, surface needs {}",
                    rots.len(),
                    sig.n()
                )));
            }
            for (j, r) in rots.iter().enumerate() {
                let expected = &boundary.nu()[j + 1] - 1;
                if r.0 != expected {
                    return Err(JsonError::Malformed(format!(
                        "rot_boundary[{j}] = {} but delta_nu forces {}",
                        r.0, expected
                    )));
                }
            }
        }
        Ok(RelFraming::new(
            boundary,
            bigints(&self.rot_alpha),
            bigints(&self.rot_beta),
            bigints(&self.arc_ceil),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryDataDoc {
    pub surface: SurfaceDoc,
    pub delta_nu: Vec<JsonInt>,
}

impl BoundaryDataDoc {
    pub fn from_boundary(b: &BoundaryData) -> Self {
        BoundaryDataDoc {
            surface: SurfaceDoc::from_sig(b.sig()),
            delta_nu: ints(b.nu()),
        }
    }

    pub fn to_boundary(&self) -> Result<BoundaryData, JsonError> {
        let sig = self.surface.to_sig()?;
        Ok(BoundaryData::new(sig, bigints(&self.delta_nu))?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKeyDoc {
    Genus0 {
        nu: Vec<JsonInt>,
    },
    Genus1 {
        nu: Vec<JsonInt>,
        a_tilde: JsonInt,
    },
    GenusHigh {
        nu: Vec<JsonInt>,
        arf: Option<u8>,
    },
}

impl OrbitKeyDoc {
    pub fn from_key(key: &OrbitKey) -> Self {
        match key {
            OrbitKey::Genus0 { nu } => OrbitKeyDoc::Genus0 { nu: ints(nu) },
            OrbitKey::Genus1 { nu, a_tilde } => OrbitKeyDoc::Genus1 {
                nu: ints(nu),
                a_tilde: JsonInt(a_tilde.clone()),
            },
            OrbitKey::GenusHigh { nu, arf } => OrbitKeyDoc::GenusHigh {
                nu: ints(nu),
                arf: *arf,
            },
        }
    }

    pub fn to_key(&self) -> OrbitKey {
        match self {
            OrbitKeyDoc::Genus0 { nu } => OrbitKey::Genus0 { nu: bigints(nu) },
            OrbitKeyDoc::Genus1 { nu, a_tilde } => OrbitKey::Genus1 {
                nu: bigints(nu),
                a_tilde: a_tilde.0.clone(),
            },
            OrbitKeyDoc::GenusHigh { nu, arf } => OrbitKey::GenusHigh {
                nu: bigints(nu),
                arf: *arf,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelOrbitKeyDoc {
    RelGenus1 { a_tilde: JsonInt, gen_arf: u8 },
    RelGenusHigh { gen_arf: u8 },
}

impl RelOrbitKeyDoc {
    pub fn from_key(key: &crate::rel::RelOrbitKey) -> Self {
        match key {
            crate::rel::RelOrbitKey::RelGenus1 { a_tilde, gen_arf } => RelOrbitKeyDoc::RelGenus1 {
                a_tilde: JsonInt(a_tilde.clone()),
                gen_arf: *gen_arf,
            },
            crate::rel::RelOrbitKey::RelGenusHigh { gen_arf } => RelOrbitKeyDoc::RelGenusHigh {
                gen_arf: *gen_arf,
            },
        }
    }
}

fn sign_to_i8(sign: Sign) -> i8 {
    match sign {
        Sign::Pos => 1,
        Sign::Neg => -1,
    }
}

fn sign_from_i8(v: i8) -> Result<Sign, JsonError> {
    match v {
        1 => Ok(Sign::Pos),
        -1 => Ok(Sign::Neg),
        other => Err(JsonError::Malformed(format!(
            "generator sign must be 1 or -1, got {other}"
        ))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "snake_case")]
pub enum GeneratorDoc {
    TwistA { i: usize, sign: i8 },
    TwistB { i: usize, sign: i8 },
    EvenShiftA { i: usize, sign: i8 },
    EvenShiftB { i: usize, sign: i8 },
    MixBoundary { j: usize, sign: i8 },
}

impl GeneratorDoc {
    pub fn from_generator(g: &Generator) -> Self {
        match *g {
            Generator::TwistA { i, sign } => GeneratorDoc::TwistA { i, sign: sign_to_i8(sign) },
            Generator::TwistB { i, sign } => GeneratorDoc::TwistB { i, sign: sign_to_i8(sign) },
            Generator::EvenShiftA { i, sign } => {
                GeneratorDoc::EvenShiftA { i, sign: sign_to_i8(sign) }
            }
            Generator::EvenShiftB { i, sign } => {
                GeneratorDoc::EvenShiftB { i, sign: sign_to_i8(sign) }
            }
            Generator::MixBoundary { j, sign } => {
                GeneratorDoc::MixBoundary { j, sign: sign_to_i8(sign) }
            }
        }
    }

    pub fn to_generator(&self) -> Result<Generator, JsonError> {
        Ok(match *self {
            GeneratorDoc::TwistA { i, sign } => Generator::TwistA { i, sign: sign_from_i8(sign)? },
            GeneratorDoc::TwistB { i, sign } => Generator::TwistB { i, sign: sign_from_i8(sign)? },
            GeneratorDoc::EvenShiftA { i, sign } => {
                Generator::EvenShiftA { i, sign: sign_from_i8(sign)? }
            }
            GeneratorDoc::EvenShiftB { i, sign } => {
                Generator::EvenShiftB { i, sign: sign_from_i8(sign)? }
            }
            GeneratorDoc::MixBoundary { j, sign } => {
                Generator::MixBoundary { j, sign: sign_from_i8(sign)? }
            }
        })
    }

    pub fn word_from(word: &[Generator]) -> Vec<GeneratorDoc> {
        word.iter().map(GeneratorDoc::from_generator).collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "gen", rename_all = "snake_case")]
pub enum RelGeneratorDoc {
    Tau,
    TwistA { i: usize, sign: i8 },
    TwistB { i: usize, sign: i8 },
    BoundaryTwist { j: usize, sign: i8 },
    PantsTwist { j1: usize, j2: usize, sign: i8 },
    Psi { j: usize, sign: i8 },
    PsiPrime { j: usize, sign: i8 },
    MixBoundary { j: usize, sign: i8 },
}

impl RelGeneratorDoc {
    pub fn from_generator(g: &RelGenerator) -> Self {
        match *g {
            RelGenerator::Tau => RelGeneratorDoc::Tau,
            RelGenerator::TwistA { i, sign } => {
                RelGeneratorDoc::TwistA { i, sign: sign_to_i8(sign) }
            }
            RelGenerator::TwistB { i, sign } => {
                RelGeneratorDoc::TwistB { i, sign: sign_to_i8(sign) }
            }
            RelGenerator::BoundaryTwist { j, sign } => {
                RelGeneratorDoc::BoundaryTwist { j, sign: sign_to_i8(sign) }
            }
            RelGenerator::PantsTwist { j1, j2, sign } => {
                RelGeneratorDoc::PantsTwist { j1, j2, sign: sign_to_i8(sign) }
            }
            RelGenerator::Psi { j, sign } => RelGeneratorDoc::Psi { j, sign: sign_to_i8(sign) },
            RelGenerator::PsiPrime { j, sign } => {
                RelGeneratorDoc::PsiPrime { j, sign: sign_to_i8(sign) }
            }
            RelGenerator::MixBoundary { j, sign } => {
                RelGeneratorDoc::MixBoundary { j, sign: sign_to_i8(sign) }
            }
        }
    }

    pub fn to_generator(&self) -> Result<RelGenerator, JsonError> {
        Ok(match *self {
            RelGeneratorDoc::Tau => RelGenerator::Tau,
            RelGeneratorDoc::TwistA { i, sign } => {
                RelGenerator::TwistA { i, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::TwistB { i, sign } => {
                RelGenerator::TwistB { i, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::BoundaryTwist { j, sign } => {
                RelGenerator::BoundaryTwist { j, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::PantsTwist { j1, j2, sign } => {
                RelGenerator::PantsTwist { j1, j2, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::Psi { j, sign } => {
                RelGenerator::Psi { j, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::PsiPrime { j, sign } => {
                RelGenerator::PsiPrime { j, sign: sign_from_i8(sign)? }
            }
            RelGeneratorDoc::MixBoundary { j, sign } => {
                RelGenerator::MixBoundary { j, sign: sign_from_i8(sign)? }
            }
        })
    }

    pub fn word_from(word: &[RelGenerator]) -> Vec<RelGeneratorDoc> {
        word.iter().map(RelGeneratorDoc::from_generator).collect()
    }
}
