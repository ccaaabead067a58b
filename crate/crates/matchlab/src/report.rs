use serde::{Deserialize, Serialize};

/// Per-type and total loss: the fraction of agents that perish.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LossReport {
    /// `per_type[k]` is the loss of type `A_k`.
    pub per_type: Vec<f64>,
    /// Arrival-weighted total loss.
    pub total: f64,
}

impl LossReport {
    pub fn hard_types(&self) -> usize {
        self.per_type.len() - 1
    }
}
