use crate::exact::{Matrix, Tensor};

/// Outcome of checking one identity: the identity's name, the verdict, and
/// the exact defect (zero iff the identity holds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub relation: String,
    pub holds: bool,
    pub defect: Tensor,
}

impl RelationReport {
    pub fn from_tensor(relation: impl Into<String>, defect: Tensor) -> Self {
        Self { relation: relation.into(), holds: defect.is_zero(), defect }
    }

    pub fn from_matrix(relation: impl Into<String>, defect: &Matrix) -> Self {
        Self::from_tensor(relation, defect.to_tensor())
    }
}
