use std::path::Path;

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::exact::{parse_form, FieldSpec, HomogeneousForm, VARIABLES};
use crate::shapes::MonadShape;
use crate::spectrum::Spectrum;
use crate::twist::TwistList;

/// On-disk form of a monad instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default)]
    pub field: FieldSpec,
    pub variables: Vec<String>,
    pub a: Vec<i64>,
    pub middle_twists: Vec<i64>,
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_spectrum: Option<String>,
}

/// A monad `⊕O(-a_i-1) --β--> ⊕O(c_j) --α--> ⊕O(a_i)` with explicit matrices.
///
/// Row `i` of α and column `i` of β belong to `a[i]`; column `j` of α and
/// row `j` of β belong to `middle[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadInstance {
    pub label: Option<String>,
    pub description: Option<String>,
    pub field: FieldSpec,
    pub a: Vec<i64>,
    pub middle: TwistList,
    pub alpha: Vec<Vec<HomogeneousForm>>,
    pub beta: Vec<Vec<HomogeneousForm>>,
    pub expected_spectrum: Option<Spectrum>,
    shape: MonadShape,
}

/// Checks that `middle` is `{b_j, -b_j-1}` and returns the `b_j`.
pub(crate) fn b_of_middle(middle: &[i64]) -> Result<Vec<i64>, VerifyError> {
    let mut pos: Vec<i64> = middle.iter().copied().filter(|&c| c >= 0).collect();
    let mut neg: Vec<i64> = middle.iter().copied().filter(|&c| c < 0).map(|c| -c - 1).collect();
    pos.sort_unstable();
    neg.sort_unstable();
    if pos != neg {
        return Err(VerifyError::Unpairable(middle.to_vec()));
    }
    Ok(pos)
}

impl MonadInstance {
    pub fn new(
        field: FieldSpec,
        a: Vec<i64>,
        middle: Vec<i64>,
        alpha: Vec<Vec<HomogeneousForm>>,
        beta: Vec<Vec<HomogeneousForm>>,
    ) -> Result<Self, VerifyError> {
        field.validate()?;
        let s = a.len();
        if middle.len() != 2 * s + 2 {
            return Err(VerifyError::Malformed(format!(
                "{} middle twists for {} right-hand summands (need {})",
                middle.len(),
                s,
                2 * s + 2
            )));
        }
        if alpha.len() != s || alpha.iter().any(|r| r.len() != middle.len()) {
            return Err(VerifyError::Malformed(format!("alpha must be {} x {}", s, middle.len())));
        }
        if beta.len() != middle.len() || beta.iter().any(|r| r.len() != s) {
            return Err(VerifyError::Malformed(format!("beta must be {} x {}", middle.len(), s)));
        }
        if alpha.iter().chain(beta.iter()).flatten().any(|f| f.field() != field) {
            return Err(VerifyError::Malformed("entry over a different field".into()));
        }
        let b = b_of_middle(&middle)?;
        let shape = MonadShape::new(a.clone(), b)?;
        Ok(MonadInstance {
            label: None,
            description: None,
            field,
            a,
            middle: TwistList::new(middle),
            alpha,
            beta,
            expected_spectrum: None,
            shape,
        })
    }

    pub fn from_file_data(file: InstanceFile) -> Result<Self, VerifyError> {
        let expected: Vec<String> = VARIABLES.iter().map(|c| c.to_string()).collect();
        if file.variables != expected {
            return Err(VerifyError::Malformed(format!(
                "variables must be {:?}, got {:?}",
                expected, file.variables
            )));
        }
        file.field.validate()?;
        let parse = |rows: &[Vec<String>]| -> Result<Vec<Vec<HomogeneousForm>>, VerifyError> {
            rows.iter()
                .map(|r| r.iter().map(|s| Ok(parse_form(s, file.field)?)).collect())
                .collect()
        };
        let alpha = parse(&file.alpha)?;
        let beta = parse(&file.beta)?;
        let mut m = MonadInstance::new(file.field, file.a, file.middle_twists, alpha, beta)?;
        m.label = file.label;
        m.description = file.description;
        m.expected_spectrum = match file.expected_spectrum {
            Some(s) => Some(Spectrum::parse_r(&s)?),
            None => None,
        };
        Ok(m)
    }

    pub fn from_json(src: &str) -> Result<Self, VerifyError> {
        let file: InstanceFile = serde_json::from_str(src)?;
        Self::from_file_data(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, VerifyError> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path)
            .map_err(|e| VerifyError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&src)
    }

    pub fn to_file_data(&self) -> InstanceFile {
        let show = |rows: &[Vec<HomogeneousForm>]| -> Vec<Vec<String>> {
            rows.iter().map(|r| r.iter().map(|f| f.to_string()).collect()).collect()
        };
        InstanceFile {
            label: self.label.clone(),
            description: self.description.clone(),
            field: self.field,
            variables: VARIABLES.iter().map(|c| c.to_string()).collect(),
            a: self.a.clone(),
            middle_twists: self.middle.0.clone(),
            alpha: show(&self.alpha),
            beta: show(&self.beta),
            expected_spectrum: self.expected_spectrum.as_ref().map(|x| x.r_ascii()),
        }
    }

    pub fn shape(&self) -> &MonadShape {
        &self.shape
    }

    pub fn s(&self) -> usize {
        self.a.len()
    }

    pub fn middle_twists(&self) -> &[i64] {
        &self.middle.0
    }

    /// Grid degree of `α[i][j]`.
    pub fn alpha_degree(&self, i: usize, j: usize) -> i64 {
        self.a[i] - self.middle.0[j]
    }

    /// Grid degree of `β[j][i]`.
    pub fn beta_degree(&self, j: usize, i: usize) -> i64 {
        self.middle.0[j] + self.a[i] + 1
    }

    pub fn display_name(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.shape.to_string())
    }
}
