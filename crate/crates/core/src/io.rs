//! JSON input formats. Rationals travel as `"p/q"` strings (plain integers are accepted).

use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rat::{parse_rat, Rat, RatVec, Weight};
use crate::rep_weights::WeightMultiset;
use crate::root_datum::GroupDatum;

pub fn ser_rat<S: Serializer>(x: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn ser_ratvec<S: Serializer>(x: &RatVec, s: S) -> std::result::Result<S::Ok, S::Error> {
    x.to_strings().serialize(s)
}

pub fn ser_opt_ratvec<S: Serializer>(x: &Option<RatVec>, s: S) -> std::result::Result<S::Ok, S::Error> {
    x.as_ref().map(RatVec::to_strings).serialize(s)
}

pub fn ser_rats<S: Serializer>(x: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    x.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
}

/// A rational as it appears in input files.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RatInput {
    Int(i64),
    Str(String),
}

impl RatInput {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            RatInput::Int(n) => Ok(Rat::from_integer((*n).into())),
            RatInput::Str(s) => parse_rat(s),
        }
    }
}

pub fn to_ratvec(v: &[RatInput]) -> Result<RatVec> {
    v.iter().map(RatInput::to_rat).collect::<Result<Vec<_>>>().map(RatVec)
}

pub fn ratvec_input(v: &RatVec) -> Vec<RatInput> {
    v.0.iter().map(|x| RatInput::Str(x.to_string())).collect()
}

/// On-disk representation file.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: GroupDatum,
    pub weights: Vec<Weight>,
    /// Add the dual of every weight.
    #[serde(default)]
    pub symplectic: bool,
    /// Add the adjoint representation.
    #[serde(default)]
    pub adjoin_adjoint: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<Vec<RatInput>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<RatInput>>,
}

/// A representation with its construction flags resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    pub name: Option<String>,
    pub group: GroupDatum,
    /// Weights of `X` (after symplectic doubling, before the adjoint).
    pub x_weights: Vec<Weight>,
    /// Whether the adjoint representation is adjoined.
    pub adjoint: bool,
    pub ell: Option<RatVec>,
    pub delta: Option<RatVec>,
}

impl RepSpec {
    pub fn new(group: GroupDatum, x_weights: Vec<Weight>, adjoint: bool) -> Result<Self> {
        WeightMultiset::new(group.clone(), x_weights.clone())?;
        Ok(RepSpec { name: None, group, x_weights, adjoint, ell: None, delta: None })
    }

    pub fn base(&self) -> WeightMultiset {
        WeightMultiset { group: self.group.clone(), weights: self.x_weights.clone() }
    }

    /// The representation windows are built from: `X`, or `X + g` when the adjoint is adjoined.
    pub fn full(&self) -> WeightMultiset {
        let b = self.base();
        if self.adjoint {
            b.adjoin_adjoint()
        } else {
            b
        }
    }

    pub fn from_file(f: RepFile) -> Result<Self> {
        if f.gl_zero() {
            return Err(Error::parse("GL factor of size 0"));
        }
        let mut ms = WeightMultiset::new(f.group.clone(), f.weights)?;
        if f.symplectic {
            ms = ms.symplectic_double();
        }
        let vec_of = |v: &Option<Vec<RatInput>>| -> Result<Option<RatVec>> {
            match v {
                None => Ok(None),
                Some(v) => {
                    let r = to_ratvec(v)?;
                    f.group.check_dim(r.len())?;
                    Ok(Some(r))
                }
            }
        };
        Ok(RepSpec {
            name: f.name.clone(),
            group: f.group.clone(),
            x_weights: ms.weights,
            adjoint: f.adjoin_adjoint,
            ell: vec_of(&f.ell)?,
            delta: vec_of(&f.delta)?,
        })
    }

    pub fn to_file(&self) -> RepFile {
        RepFile {
            name: self.name.clone(),
            group: self.group.clone(),
            weights: self.x_weights.clone(),
            symplectic: false,
            adjoin_adjoint: self.adjoint,
            ell: self.ell.as_ref().map(ratvec_input),
            delta: self.delta.as_ref().map(ratvec_input),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        let f: RepFile = serde_json::from_str(json).map_err(|e| Error::parse(e.to_string()))?;
        Self::from_file(f)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read(path)?)
    }
}

impl RepFile {
    fn gl_zero(&self) -> bool {
        self.group.gl_factors.contains(&0)
    }
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))
}
