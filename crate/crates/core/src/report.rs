use serde::{Deserialize, Serialize};

/// Outcome of one numerical check: the worst residual against its tolerance.
///
/// `pass` holds exactly when `max_abs <= tol`; a NaN anywhere fails the check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub max_abs: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<Detail>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub label: String,
    pub value: f64,
}

impl Report {
    pub fn from_samples<I>(check: impl Into<String>, tol: f64, samples: I) -> Self
    where
        I: IntoIterator<Item = (String, f64)>,
    {
        let detail: Vec<Detail> = samples.into_iter().map(|(label, value)| Detail { label, value }).collect();
        let max_abs = detail.iter().map(|d| d.value).fold(0.0f64, |a, v| if v.is_nan() || a.is_nan() { f64::NAN } else { a.max(v) });
        Self { check: check.into(), max_abs, tol, pass: max_abs <= tol, error: None, detail }
    }

    /// A check that passes iff `value <= tol`, without per-sample detail.
    pub fn single(check: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { check: check.into(), max_abs: value, tol, pass: value <= tol, error: None, detail: Vec::new() }
    }

    /// A check that could not be evaluated.
    pub fn failure(check: impl Into<String>, tol: f64, error: &crate::Error) -> Self {
        Self {
            check: check.into(),
            max_abs: f64::NAN,
            tol,
            pass: false,
            error: Some(format!("{}: {error}", error.kind())),
            detail: Vec::new(),
        }
    }

    pub fn without_detail(mut self) -> Self {
        self.detail.clear();
        self
    }

    pub fn renamed(mut self, check: impl Into<String>) -> Self {
        self.check = check.into();
        self
    }
}
