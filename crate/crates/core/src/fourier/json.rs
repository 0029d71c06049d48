//! Serialized form: `{"prec": N, "character": 0|1, "coeffs": [[a,b,c,"num/den"], ...]}`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::siegel::SiegelExpansion;
use super::vector::VectorExpansion;
use super::Character;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};

pub type CoeffRow = (u32, u32, i32, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub prec: u32,
    pub character: u8,
    pub coeffs: Vec<CoeffRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub prec: u32,
    pub character: u8,
    pub j: u32,
    pub k: i32,
    pub entries: Vec<Vec<CoeffRow>>,
}

fn rows(f: &SiegelExpansion<BigRational>) -> Vec<CoeffRow> {
    f.terms()
        .into_iter()
        .map(|(a, b, c, v)| (a, b, c, format_rational(&v)))
        .collect()
}

fn parse_rows(
    prec: u32,
    character: Character,
    rows: &[CoeffRow],
) -> Result<SiegelExpansion<BigRational>> {
    let terms = rows
        .iter()
        .map(|(a, b, c, v)| {
            parse_rational(v)
                .map(|q| (*a, *b, *c, q))
                .ok_or_else(|| Error::Format(format!("bad rational {v:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if terms.iter().any(|t| t.0 + t.1 > prec) {
        return Err(Error::Format("coefficient beyond the recorded precision".into()));
    }
    SiegelExpansion::from_terms(prec, character, terms)
}

fn parse_character(bit: u8) -> Result<Character> {
    match bit {
        0 | 1 => Ok(Character::from_bit(bit)),
        other => Err(Error::Format(format!("character flag {other} is not 0 or 1"))),
    }
}

impl From<&SiegelExpansion<BigRational>> for ExpansionJson {
    fn from(f: &SiegelExpansion<BigRational>) -> Self {
        ExpansionJson {
            prec: f.prec(),
            character: f.character().bit(),
            coeffs: rows(f),
        }
    }
}

impl TryFrom<&ExpansionJson> for SiegelExpansion<BigRational> {
    type Error = Error;

    fn try_from(j: &ExpansionJson) -> Result<Self> {
        parse_rows(j.prec, parse_character(j.character)?, &j.coeffs)
    }
}

impl From<&VectorExpansion<BigRational>> for VectorJson {
    fn from(f: &VectorExpansion<BigRational>) -> Self {
        VectorJson {
            prec: f.prec(),
            character: f.character().bit(),
            j: f.j(),
            k: f.k(),
            entries: f.entries().iter().map(rows).collect(),
        }
    }
}

impl TryFrom<&VectorJson> for VectorExpansion<BigRational> {
    type Error = Error;

    fn try_from(v: &VectorJson) -> Result<Self> {
        if v.entries.len() != v.j as usize + 1 {
            return Err(Error::Format(format!(
                "{} entries recorded for j = {}",
                v.entries.len(),
                v.j
            )));
        }
        let character = parse_character(v.character)?;
        let entries = v
            .entries
            .iter()
            .map(|r| parse_rows(v.prec, character, r))
            .collect::<Result<Vec<_>>>()?;
        VectorExpansion::new(v.k, character, entries)
    }
}
