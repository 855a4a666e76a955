//! TOML presentation files.
//!
//! ```toml
//! rank = 2
//! weights = [[-1, 0, 1, 2], [2, 1, 0, -1]]   # rows; column i is ξ_i
//! theta = [1, 1]
//! roots = [[1, -1], [-1, 1]]
//! weyl_generators = [[[0, 1], [1, 0]]]
//! g_effective = [[1, 4], [1, 3], [2, 4], [2, 3]]   # or "torus"
//! restriction = [["1", "1"]]
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::scalar::parse_rational;
use crate::error::{Error, Result};
use crate::presentation::{CiEffective, GEffective, Labels, Presentation};
use crate::Rational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    rank: usize,
    weights: Vec<Vec<i64>>,
    theta: Vec<i64>,
    #[serde(default)]
    roots: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    e_weights: Vec<Vec<i64>>,
    #[serde(default)]
    weyl_generators: Vec<Vec<Vec<i64>>>,
    g_effective: RawSets,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    restriction: Option<Vec<Vec<RawRational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ci_effective: Option<RawSets>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    extended: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<RawLabels>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawSets {
    Keyword(String),
    Sets(Vec<Vec<usize>>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabels {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    weights: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sectors: BTreeMap<String, String>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Rows to columns, checking that every row has the same length.
fn columns(key: &str, rows: &[Vec<i64>], rank: usize) -> Result<Vec<Vec<i64>>> {
    if rows.len() != rank {
        return Err(parse_err(format!("`{key}` has {} rows, rank is {rank}", rows.len())));
    }
    let width = rows.first().map_or(0, |r| r.len());
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(parse_err(format!("`{key}` row {} has length {}, row 1 has length {width}", i + 1, r.len())));
        }
    }
    Ok((0..width).map(|j| rows.iter().map(|r| r[j]).collect()).collect())
}

fn rows_of(cols: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    (0..rank).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

fn index_sets(key: &str, sets: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    sets.into_iter()
        .map(|s| {
            s.into_iter()
                .map(|i| i.checked_sub(1).ok_or_else(|| parse_err(format!("`{key}` indices are 1-based"))))
                .collect::<Result<Vec<usize>>>()
                .map(|mut v| {
                    v.sort_unstable();
                    v
                })
        })
        .collect()
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|i| i + 1).collect()).collect()
}

/// Parse without validating.
pub fn parse_unchecked(text: &str) -> Result<Presentation> {
    let raw: RawPresentation = toml::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let rank = raw.rank;
    let weights = columns("weights", &raw.weights, rank)?;
    let e_weights = if raw.e_weights.is_empty() { Vec::new() } else { columns("e_weights", &raw.e_weights, rank)? };
    let g_effective = match raw.g_effective {
        RawSets::Keyword(k) if k == "torus" => GEffective::Torus,
        RawSets::Keyword(k) => return Err(parse_err(format!("`g_effective`: unknown keyword {k:?}"))),
        RawSets::Sets(s) => GEffective::Explicit(index_sets("g_effective", s)?),
    };
    let ci_effective = match raw.ci_effective {
        None => None,
        Some(RawSets::Keyword(k)) if k == "all" => Some(CiEffective::All),
        Some(RawSets::Keyword(k)) => return Err(parse_err(format!("`ci_effective`: unknown keyword {k:?}"))),
        Some(RawSets::Sets(s)) => Some(CiEffective::Anticones(index_sets("ci_effective", s)?)),
    };
    let restriction = match raw.restriction {
        None => {
            (0..rank).map(|i| (0..rank).map(|j| Rational::from_integer(((i == j) as i64).into())).collect()).collect()
        }
        Some(rows) => {
            rows.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|v| match v {
                            RawRational::Int(n) => Ok(Rational::from_integer(n.into())),
                            RawRational::Text(s) => parse_rational(&s)
                                .ok_or_else(|| parse_err(format!("`restriction`: bad rational {s:?}"))),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    let labels = raw.labels.unwrap_or_default();
    Ok(Presentation {
        rank,
        weights,
        theta: raw.theta,
        roots: raw.roots,
        e_weights,
        weyl_generators: raw.weyl_generators,
        g_effective,
        restriction,
        ci_effective,
        labels: Labels { weights: labels.weights, sectors: labels.sectors },
        extended: raw.extended,
    })
}

/// Parse and validate a presentation file.
pub fn parse_config(text: &str) -> Result<Presentation> {
    parse_unchecked(text)?.validated()
}

pub fn to_toml(p: &Presentation) -> String {
    let raw = RawPresentation {
        rank: p.rank,
        weights: rows_of(&p.weights, p.rank),
        theta: p.theta.clone(),
        roots: p.roots.clone(),
        e_weights: if p.e_weights.is_empty() { Vec::new() } else { rows_of(&p.e_weights, p.rank) },
        weyl_generators: p.weyl_generators.clone(),
        g_effective: match &p.g_effective {
            GEffective::Torus => RawSets::Keyword("torus".into()),
            GEffective::Explicit(s) => RawSets::Sets(one_based(s)),
        },
        restriction: Some(
            p.restriction.iter().map(|r| r.iter().map(|q| RawRational::Text(q.to_string())).collect()).collect(),
        ),
        ci_effective: p.ci_effective.as_ref().map(|c| match c {
            CiEffective::All => RawSets::Keyword("all".into()),
            CiEffective::Anticones(s) => RawSets::Sets(one_based(s)),
        }),
        extended: p.extended,
        labels: (!p.labels.weights.is_empty() || !p.labels.sectors.is_empty())
            .then(|| RawLabels { weights: p.labels.weights.clone(), sectors: p.labels.sectors.clone() }),
    };
    toml::to_string(&raw).expect("presentation serializes")
}
