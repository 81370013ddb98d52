//! File and JSON documents read and written by the commands.

use std::fs;
use std::io::Read;

use dihedral_core::{
    Condition, DenseMatrix, FeasibilityReport, MarginPair, MarginVector, MatrixClass, Scalar, SubgroupId,
};
use serde::{Deserialize, Serialize};

/// A scalar as it appears in JSON: a string such as `"3/2"`, or a bare integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    fn parse(&self) -> Result<Scalar, String> {
        match self {
            ScalarText::Text(s) => s.parse().map_err(|e: dihedral_core::Error| e.to_string()),
            ScalarText::Int(v) => Ok(Scalar::from_integer(*v)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceDocument {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub class: String,
    pub subgroup: String,
}

#[derive(Clone, Debug, Deserialize)]
struct RawInstance {
    rows: Vec<ScalarText>,
    cols: Vec<ScalarText>,
    class: String,
    subgroup: String,
}

/// A parsed instance, ready for the solvers.
pub struct Instance {
    pub pair: MarginPair,
    pub class: MatrixClass,
    pub subgroup: SubgroupId,
}

impl Instance {
    pub fn document(&self) -> InstanceDocument {
        InstanceDocument {
            rows: strings(self.pair.rows().entries()),
            cols: strings(self.pair.cols().entries()),
            class: self.class.name().to_string(),
            subgroup: self.subgroup.name().to_string(),
        }
    }
}

pub fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn vector(v: &[ScalarText]) -> Result<MarginVector, String> {
    let entries = v.iter().map(ScalarText::parse).collect::<Result<Vec<_>, _>>()?;
    MarginVector::new(entries).map_err(|e| e.to_string())
}

pub fn instance(rows: &MarginVector, cols: &MarginVector, class: &str, subgroup: &str) -> Result<Instance, String> {
    let pair = MarginPair::new(rows.clone(), cols.clone()).map_err(|e| e.to_string())?;
    let class = class.parse().map_err(|e: dihedral_core::Error| e.to_string())?;
    let subgroup = subgroup.parse().map_err(|e: dihedral_core::Error| e.to_string())?;
    Ok(Instance { pair, class, subgroup })
}

pub fn instance_from_value(v: serde_json::Value) -> Result<Instance, String> {
    let raw: RawInstance = serde_json::from_value(v).map_err(|e| format!("bad instance document: {e}"))?;
    instance(&vector(&raw.rows)?, &vector(&raw.cols)?, &raw.class, &raw.subgroup)
}

/// Reads a path, with `-` meaning standard input.
pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

#[derive(Serialize)]
struct ConditionDocument<'a> {
    label: &'a str,
    holds: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    instance: InstanceDocument,
    theorem: &'a str,
    decision: String,
    conditions: Vec<ConditionDocument<'a>>,
    witness: Option<Vec<Vec<String>>>,
}

pub fn report_json(inst: &Instance, r: &FeasibilityReport) -> String {
    let doc = ReportDocument {
        instance: inst.document(),
        theorem: r.theorem,
        decision: r.decision.to_string(),
        conditions: r
            .conditions
            .iter()
            .map(|c: &Condition| ConditionDocument { label: c.label, holds: c.holds, detail: &c.detail })
            .collect(),
        witness: r.witness.as_ref().map(matrix_strings),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn report_text(inst: &Instance, r: &FeasibilityReport) -> String {
    let mut out = format!(
        "instance: rows={} cols={} subgroup={} class={}\ntheorem: {}\ndecision: {}\n",
        inst.pair.rows(),
        inst.pair.cols(),
        inst.subgroup,
        inst.class,
        r.theorem,
        r.decision
    );
    for c in &r.conditions {
        out.push_str(&format!("  {c}\n"));
    }
    if let Some(w) = &r.witness {
        out.push_str("witness:\n");
        out.push_str(&matrix_text(w));
    }
    out
}

pub fn matrix_strings(a: &DenseMatrix<Scalar>) -> Vec<Vec<String>> {
    (0..a.rows()).map(|i| strings(a.row(i))).collect()
}

pub fn matrix_text(a: &DenseMatrix<Scalar>) -> String {
    matrix_strings(a).iter().map(|row| row.join(" ") + "\n").collect()
}

/// What a matrix file may carry besides the matrix itself.
pub struct MatrixDocument {
    pub matrix: DenseMatrix<Scalar>,
    pub instance: Option<serde_json::Value>,
}

/// Parses whitespace text (one row per line), a JSON array of rows, or a
/// JSON solve report, whose witness and instance are both used.
pub fn parse_matrix(text: &str) -> Result<MatrixDocument, String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))?;
        let (rows, instance) = match v {
            serde_json::Value::Object(mut o) => {
                let w = o.remove("witness").ok_or("JSON document has no witness")?;
                if w.is_null() {
                    return Err("report has no witness".into());
                }
                (w, o.remove("instance"))
            }
            rows => (rows, None),
        };
        let rows: Vec<Vec<ScalarText>> = serde_json::from_value(rows).map_err(|e| format!("bad matrix: {e}"))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(ScalarText::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let matrix = DenseMatrix::from_rows(rows).map_err(|e| e.to_string())?;
        return Ok(MatrixDocument { matrix, instance });
    }
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<Scalar>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = DenseMatrix::from_rows(rows).map_err(|e| e.to_string())?;
    Ok(MatrixDocument { matrix, instance: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_matrix() {
        let d = parse_matrix("0 1/2\n1 0\n\n").unwrap();
        assert_eq!(d.matrix.rows(), 2);
        assert_eq!(*d.matrix.get(0, 1), Scalar::new(1, 2));
    }

    #[test]
    fn ragged_text_is_rejected() {
        assert!(parse_matrix("1 0\n1\n").is_err());
    }

    #[test]
    fn json_rows_accept_numbers_and_strings() {
        let d = parse_matrix(r#"[[1, "0"], ["3/2", 2]]"#).unwrap();
        assert_eq!(*d.matrix.get(1, 0), Scalar::new(3, 2));
        assert!(d.instance.is_none());
    }

    #[test]
    fn instance_round_trip() {
        let v = serde_json::json!({"rows": ["1", 2], "cols": ["3"], "class": "real", "subgroup": "h"});
        let inst = instance_from_value(v).unwrap();
        assert_eq!(inst.document().rows, vec!["1", "2"]);
        assert_eq!(inst.subgroup, SubgroupId::ReflH);
    }
}
