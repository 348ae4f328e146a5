//! JSON file formats for algebras and modules. Scalars are strings in the
//! field's canonical format.

use serde::{Deserialize, Serialize};

use super::algebra::GradedAlgebra;
use super::linalg::Matrix;
use super::module::GradedModule;
use crate::error::{Error, Result};
use crate::exactmath::{make_field, Field, FieldSpec, FinAbGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: String,
    #[serde(default)]
    pub group: Vec<u64>,
    pub basis: Vec<String>,
    pub degrees: Vec<Vec<u64>>,
    pub mult: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    /// Path of the algebra file, relative to the module file.
    pub algebra: String,
    pub degrees: Vec<Vec<u64>>,
    /// One matrix (list of rows) per algebra basis element.
    pub action: Vec<Vec<Vec<String>>>,
}

pub fn json_error(source: &str, e: &serde_json::Error) -> Error {
    Error::Parse(format!("{source}:{}:{}: {e}", e.line(), e.column()))
}

pub fn parse_field(text: &str) -> Result<Field> {
    make_field(text.parse::<FieldSpec>()?)
}

pub(crate) fn degree_index(group: &FinAbGroup, g: &[u64], what: &str) -> Result<usize> {
    if !group.contains(g) {
        return Err(Error::Parse(format!("{what}: {g:?} is not an element of {group}")));
    }
    Ok(group.index_of(g))
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<GradedAlgebra> {
    let field = parse_field(&file.field)?;
    let group = FinAbGroup::new(file.group.clone())?;
    let degrees = file
        .degrees
        .iter()
        .enumerate()
        .map(|(i, g)| degree_index(&group, g, &format!("degree of basis element {i}")))
        .collect::<Result<Vec<_>>>()?;
    let mult = file
        .mult
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, field.parse(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let unit = match &file.unit {
        Some(u) => Some(u.iter().map(|c| field.parse(c)).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    GradedAlgebra::new(field, group, file.basis.clone(), degrees, mult, unit)
}

pub fn algebra_to_file(a: &GradedAlgebra) -> AlgebraFile {
    let group = a.group();
    AlgebraFile {
        field: a.field().spec().to_string(),
        group: group.factors().to_vec(),
        basis: a.names().to_vec(),
        degrees: a.degrees().iter().map(|&g| group.element(g)).collect(),
        mult: a
            .triples()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, c.to_string()))
            .collect(),
        unit: Some(a.unit().iter().map(ToString::to_string).collect()),
    }
}

pub fn parse_algebra(text: &str, source: &str) -> Result<GradedAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    algebra_from_file(&file)
}

pub fn parse_module_file(text: &str, source: &str) -> Result<ModuleFile> {
    serde_json::from_str(text).map_err(|e| json_error(source, &e))
}

pub fn module_from_file(file: &ModuleFile, algebra: &GradedAlgebra) -> Result<GradedModule> {
    let field = algebra.field();
    let group = algebra.group();
    let degrees = file
        .degrees
        .iter()
        .enumerate()
        .map(|(i, g)| degree_index(group, g, &format!("degree of module basis vector {i}")))
        .collect::<Result<Vec<_>>>()?;
    let n = degrees.len();
    let action = file
        .action
        .iter()
        .map(|rows| parse_matrix(field, rows, n, n))
        .collect::<Result<Vec<_>>>()?;
    GradedModule::new(algebra, degrees, action)
}

pub fn module_to_file(m: &GradedModule, algebra_path: &str) -> ModuleFile {
    let group = m.algebra().group();
    ModuleFile {
        algebra: algebra_path.to_string(),
        degrees: m.degrees().iter().map(|&g| group.element(g)).collect(),
        action: m.actions().iter().map(matrix_to_strings).collect(),
    }
}

pub fn parse_matrix(field: Field, rows: &[Vec<String>], nrows: usize, ncols: usize) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse(format!("expected a {nrows}x{ncols} matrix")));
    }
    let data = rows
        .iter()
        .map(|r| r.iter().map(|c| field.parse(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, data, ncols))
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}
