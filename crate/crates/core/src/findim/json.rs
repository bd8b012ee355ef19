//! JSON import/export of structure constants:
//! `{dim, labels, unit, table: [[i, j, k, "c"], ...]}` plus optional `name` and
//! named `generators`.

use serde::{Deserialize, Serialize};

use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::ringcore::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<Rational>,
    pub table: Vec<(usize, usize, usize, Rational)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub coords: Vec<Rational>,
}

impl From<&StructureAlgebra> for AlgebraJson {
    fn from(alg: &StructureAlgebra) -> Self {
        AlgebraJson {
            name: Some(alg.name().to_string()),
            dim: alg.dim(),
            labels: alg.labels().to_vec(),
            unit: alg.unit_coords().to_vec(),
            table: alg.table_triples(),
            generators: alg
                .generator_coords()
                .iter()
                .map(|(name, coords)| GeneratorJson {
                    name: name.clone(),
                    coords: coords.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<AlgebraJson> for StructureAlgebra {
    type Error = Error;

    fn try_from(j: AlgebraJson) -> Result<Self> {
        if j.labels.len() != j.dim {
            return Err(Error::InvalidAlgebra(format!(
                "{} labels for dimension {}",
                j.labels.len(),
                j.dim
            )));
        }
        super::check_dim(j.dim)?;
        let mut table = vec![Vec::new(); j.dim * j.dim];
        for (i, jj, k, c) in j.table {
            if i >= j.dim || jj >= j.dim || k >= j.dim {
                return Err(Error::InvalidAlgebra(format!("triple ({i}, {jj}, {k}) out of range")));
            }
            table[i * j.dim + jj].push((k, c));
        }
        // Without named generators every non-unit basis element generates.
        let generators = if j.generators.is_empty() {
            (0..j.dim)
                .filter(|&i| {
                    !(j.unit[i].is_one() && j.unit.iter().filter(|q| !q.is_zero()).count() == 1)
                })
                .map(|i| {
                    let mut c = vec![Rational::zero(); j.dim];
                    c[i] = Rational::one();
                    (format!("b{i}"), c)
                })
                .collect()
        } else {
            j.generators.into_iter().map(|g| (g.name, g.coords)).collect()
        };
        StructureAlgebra::new(
            j.name.unwrap_or_else(|| "imported".to_string()),
            j.labels,
            table,
            j.unit,
            generators,
        )
    }
}

pub fn to_json(alg: &StructureAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from(alg)).expect("serializable")
}

pub fn from_json(text: &str) -> Result<StructureAlgebra> {
    let j: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if j.unit.len() != j.dim {
        return Err(Error::InvalidAlgebra("unit has wrong length".into()));
    }
    StructureAlgebra::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{from_grassmann, upper_triangular};
    use crate::ringcore::Ring;

    #[test]
    fn round_trip_preserves_table() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        let text = to_json(&u);
        let back = from_json(&text).unwrap();
        assert_eq!(back.dim(), u.dim());
        assert_eq!(back.labels(), u.labels());
        assert_eq!(back.table_triples(), u.table_triples());
        assert_eq!(back.generators(), u.generators());
        assert_eq!(back.name(), u.name());
    }

    #[test]
    fn minimal_document() {
        let text = r#"{"dim": 2, "labels": ["1", "e"], "unit": ["1", "0"],
            "table": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"]]}"#;
        let alg = from_json(text).unwrap();
        let e = alg.generator("b1").unwrap();
        assert!(alg.mul(&e, &e).is_zero());
        assert!(from_json(r#"{"dim": 1, "labels": ["1"], "unit": ["1"], "table": [[0,0,3,"1"]]}"#).is_err());
        assert!(matches!(from_json("{"), Err(Error::Json(_))));
    }
}
