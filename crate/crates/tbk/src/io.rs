//! JSON and CSV formats for matroids, fans, diagrams and extension maps.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tbk_core::bundle::TropicalBundle;
use tbk_core::fan::Fan;
use tbk_core::matroid::{ExtensionMap, Field, Matroid};
use tbk_core::Set;

use crate::CliError;

/// A matroid by name (`"fano"`, `"vamos"`, `"uniform:2,4"`) or explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidSpec {
    Named(String),
    Bases {
        labels: Vec<String>,
        bases: Vec<Vec<String>>,
    },
    Circuits {
        labels: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
    /// Column matroid; `prime` selects GF(p), rationals otherwise.
    Matrix {
        labels: Vec<String>,
        matrix: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prime: Option<u64>,
    },
}

/// A fan by name (`"p1"`, `"p2"`, `"pn:3"`, `"p1xp1"`, `"perm:4"`) or explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FanSpec {
    Named(String),
    Explicit {
        dim: usize,
        rays: Vec<Vec<i64>>,
        cones: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDoc {
    pub matroid: MatroidSpec,
    pub fan: FanSpec,
    pub diagram: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDoc {
    pub source: MatroidSpec,
    pub target: MatroidSpec,
    pub map: Vec<usize>,
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, CliError> {
        Ok(match self {
            MatroidSpec::Named(n) => Matroid::named(n)?,
            MatroidSpec::Bases { labels, bases } => {
                let index = |l: &String| labels.iter().position(|x| x == l).ok_or_else(|| tbk_core::Error::UnknownLabel(l.clone()));
                let bases = bases.iter().map(|b| b.iter().map(index).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
                Matroid::from_bases(labels.clone(), &bases)?
            }
            MatroidSpec::Circuits { labels, circuits } => {
                let index = |l: &String| labels.iter().position(|x| x == l).ok_or_else(|| tbk_core::Error::UnknownLabel(l.clone()));
                let circuits = circuits.iter().map(|c| c.iter().map(index).collect::<Result<Set, _>>()).collect::<Result<Vec<_>, _>>()?;
                Matroid::from_circuits(labels.clone(), circuits)?
            }
            MatroidSpec::Matrix { labels, matrix, prime } => {
                let field = prime.map_or(Field::Rational, Field::Prime);
                Matroid::linear(labels.clone(), matrix, field)?
            }
        })
    }

    /// Explicit basis list, bases in lex order.
    pub fn canonical(m: &Matroid) -> MatroidSpec {
        MatroidSpec::Bases { labels: m.labels().to_vec(), bases: m.bases().iter().map(|b| b.iter().map(|e| m.labels()[e].clone()).collect()).collect() }
    }

    /// A name given on the command line, or a JSON file holding a spec.
    pub fn from_arg(arg: &str) -> Result<MatroidSpec, CliError> {
        if Path::new(arg).is_file() {
            parse_json(&read(arg)?, arg)
        } else {
            Ok(MatroidSpec::Named(arg.to_string()))
        }
    }
}

impl FanSpec {
    pub fn build(&self) -> Result<Fan, CliError> {
        Ok(match self {
            FanSpec::Named(n) => Fan::named(n)?,
            FanSpec::Explicit { dim, rays, cones, labels } => {
                let fan = Fan::new(*dim, rays.clone(), cones.clone())?;
                match labels {
                    Some(l) => fan.with_ray_labels(l.clone())?,
                    None => fan,
                }
            }
        })
    }

    pub fn canonical(f: &Fan) -> FanSpec {
        FanSpec::Explicit { dim: f.dim(), rays: f.rays().to_vec(), cones: f.max_cones().to_vec(), labels: f.ray_labels().map(|l| l.to_vec()) }
    }

    pub fn from_arg(arg: &str) -> Result<FanSpec, CliError> {
        if Path::new(arg).is_file() {
            parse_json(&read(arg)?, arg)
        } else {
            Ok(FanSpec::Named(arg.to_string()))
        }
    }
}

impl BundleDoc {
    pub fn build(&self) -> Result<TropicalBundle, CliError> {
        Ok(TropicalBundle::new(self.matroid.build()?, self.fan.build()?, self.diagram.clone())?)
    }

    pub fn canonical(b: &TropicalBundle) -> BundleDoc {
        BundleDoc { matroid: MatroidSpec::canonical(b.matroid()), fan: FanSpec::canonical(b.fan()), diagram: b.diagram().to_vec() }
    }
}

impl ExtensionDoc {
    pub fn build(&self) -> Result<ExtensionMap, CliError> {
        Ok(ExtensionMap { source: self.source.build()?, target: self.target.build()?, map: self.map.clone() })
    }

    pub fn canonical(e: &ExtensionMap) -> ExtensionDoc {
        ExtensionDoc { source: MatroidSpec::canonical(&e.source), target: MatroidSpec::canonical(&e.target), map: e.map.clone() }
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Diagram CSV: header `ray,<labels in ground order>`, one row per ray index.
pub fn read_diagram_csv(text: &str, m: &Matroid, rays: usize) -> Result<Vec<Vec<i64>>, CliError> {
    let bad = |msg: String| CliError::Input(format!("diagram csv: {msg}"));
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    let cols: Vec<&str> = header.iter().skip(1).collect();
    if cols != m.labels().iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(bad(format!("columns {cols:?} do not match the ground set {:?}", m.labels())));
    }
    let mut rows: Vec<Option<Vec<i64>>> = vec![None; rays];
    for rec in rdr.records() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let idx: usize = rec[0].parse().map_err(|_| bad(format!("bad ray index {:?}", &rec[0])))?;
        if idx >= rays || rows[idx].is_some() {
            return Err(bad(format!("ray index {idx} out of range or repeated")));
        }
        let vals = rec.iter().skip(1).map(|v| v.parse::<i64>().map_err(|_| bad(format!("bad entry {v:?}")))).collect::<Result<Vec<_>, _>>()?;
        rows[idx] = Some(vals);
    }
    rows.into_iter().enumerate().map(|(i, r)| r.ok_or_else(|| bad(format!("missing ray {i}")))).collect()
}

pub fn write_diagram_csv(b: &TropicalBundle) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["ray".to_string()];
    header.extend(b.matroid().labels().iter().cloned());
    w.write_record(&header).unwrap();
    for (i, row) in b.diagram().iter().enumerate() {
        let mut rec = vec![i.to_string()];
        rec.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&rec).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// Labels of a set, sorted as strings.
pub fn labels(m: &Matroid, s: Set) -> Vec<String> {
    let mut v: Vec<String> = m.labels_of(s).into_iter().map(str::to_string).collect();
    v.sort();
    v
}

pub fn label_set(m: &Matroid, labels: &[String]) -> Result<Set, CliError> {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    Ok(m.set_of(&refs)?)
}
