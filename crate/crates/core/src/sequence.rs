//! Realizations of discrete-time processes.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SequenceError {
    #[error("vector-valued sequence rows must all have width {expected}, found {found}")]
    RaggedRows { expected: usize, found: usize },
    #[error("sequence holds {kind} values, not {requested}")]
    WrongKind { kind: &'static str, requested: &'static str },
}

/// The outcomes of one realization; all entries share one kind.
#[derive(Debug, Clone, PartialEq)]
pub enum SequenceValues {
    Real(Vec<f64>),
    Integer(Vec<i64>),
    /// Fixed-width integer vectors (e.g. one-hot draw indicators).
    IntegerVector { width: usize, rows: Vec<Vec<i64>> },
}

impl SequenceValues {
    pub fn len(&self) -> usize {
        match self {
            SequenceValues::Real(v) => v.len(),
            SequenceValues::Integer(v) => v.len(),
            SequenceValues::IntegerVector { rows, .. } => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn kind(&self) -> &'static str {
        match self {
            SequenceValues::Real(_) => "real",
            SequenceValues::Integer(_) => "integer",
            SequenceValues::IntegerVector { .. } => "integer-vector",
        }
    }
}

/// One realization of a discrete-time process, tagged with the model that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSample {
    model_id: String,
    values: SequenceValues,
}

impl SequenceSample {
    pub fn real(model_id: impl Into<String>, values: Vec<f64>) -> Self {
        Self { model_id: model_id.into(), values: SequenceValues::Real(values) }
    }

    pub fn integer(model_id: impl Into<String>, values: Vec<i64>) -> Self {
        Self { model_id: model_id.into(), values: SequenceValues::Integer(values) }
    }

    pub fn integer_vector(
        model_id: impl Into<String>,
        width: usize,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self, SequenceError> {
        for row in &rows {
            if row.len() != width {
                return Err(SequenceError::RaggedRows { expected: width, found: row.len() });
            }
        }
        Self::integer_vector_unchecked(model_id, width, rows)
    }

    fn integer_vector_unchecked(
        model_id: impl Into<String>,
        width: usize,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self, SequenceError> {
        Ok(Self {
            model_id: model_id.into(),
            values: SequenceValues::IntegerVector { width, rows },
        })
    }

    pub fn model_id(&self) -> &str {
        &self.model_id
    }

    pub fn values(&self) -> &SequenceValues {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_real(&self) -> Result<&[f64], SequenceError> {
        match &self.values {
            SequenceValues::Real(v) => Ok(v),
            other => Err(SequenceError::WrongKind { kind: other.kind(), requested: "real" }),
        }
    }

    pub fn as_integer(&self) -> Result<&[i64], SequenceError> {
        match &self.values {
            SequenceValues::Integer(v) => Ok(v),
            other => Err(SequenceError::WrongKind { kind: other.kind(), requested: "integer" }),
        }
    }

    pub fn as_integer_vector(&self) -> Result<(usize, &[Vec<i64>]), SequenceError> {
        match &self.values {
            SequenceValues::IntegerVector { width, rows } => Ok((*width, rows)),
            other => {
                Err(SequenceError::WrongKind { kind: other.kind(), requested: "integer-vector" })
            }
        }
    }

    /// Scalar entries as `f64`, for histogram and moment machinery.
    /// Vector-valued samples are refused.
    pub fn scalar_values(&self) -> Result<Vec<f64>, SequenceError> {
        match &self.values {
            SequenceValues::Real(v) => Ok(v.clone()),
            SequenceValues::Integer(v) => Ok(v.iter().map(|x| *x as f64).collect()),
            other => Err(SequenceError::WrongKind { kind: other.kind(), requested: "scalar" }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_vector_rows_rejected() {
        let err = SequenceSample::integer_vector("m", 3, vec![vec![1, 0, 0], vec![0, 1]]);
        assert!(err.is_err());
    }

    #[test]
    fn kind_accessors() {
        let s = SequenceSample::integer("m", vec![0, 1, 1]);
        assert_eq!(s.as_integer().unwrap(), &[0, 1, 1]);
        assert!(s.as_real().is_err());
        assert_eq!(s.scalar_values().unwrap(), vec![0.0, 1.0, 1.0]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.model_id(), "m");
    }
}
