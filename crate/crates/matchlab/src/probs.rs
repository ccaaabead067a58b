//! Closed-form matching and perishing probabilities for a pool snapshot.
//!
//! `match_prob(state, k, k', alpha)` is the probability that a mover of
//! type `A_k` (an arrival under Greedy, a critical agent under Patient)
//! is matched to a pool agent of type `A_{k'}`, given the candidate pool
//! `state` and fresh Bernoulli(alpha) compatibility draws, with hard
//! partners prioritized over easy ones and ties between nonempty hard
//! types broken uniformly at random.
//!
//! The probabilities are smooth in the pool sizes, so the same code
//! evaluates the mean-field vector fields at real-valued states.

use crate::error::{Error, Result};
use crate::pool::PoolState;

/// Hard cap on exact subset enumeration: `2^(p-1)` terms.
pub const SUBSET_ENUMERATION_CAP: usize = 20;

/// `(1-alpha)^x` evaluated as `exp(x * ln(1-alpha))` with `ln_1p` so small
/// `alpha` and large `x` keep full precision. `x == 0` returns exactly 1.
#[inline]
pub fn q_pow(alpha: f64, x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    (x * (-alpha).ln_1p()).exp()
}

fn check_alpha(alpha: f64) -> Result<()> {
    // (0,1]: alpha = 1 is the deterministic-compatibility degenerate case
    // used by limit checks; MarketParams validation is stricter.
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { alpha })
    }
}

fn check_type(state: &PoolState, k: usize) -> Result<()> {
    if k <= state.hard_types() {
        Ok(())
    } else {
        Err(Error::TypeIndexOutOfRange { index: k, p: state.hard_types() })
    }
}

/// Probability that the mover of type `A_k` is matched with an `A_{k'}`
/// pool agent.
///
/// Cost is O(p) when all hard sizes are equal (exchangeable shortcut) and
/// O(p * 2^(p-1)) otherwise, capped at `p <= SUBSET_ENUMERATION_CAP`.
pub fn match_prob(state: &PoolState, k: usize, k_prime: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_type(state, k)?;
    check_type(state, k_prime)?;
    let value = match (k, k_prime) {
        (0, 0) => pi_easy_easy(state, alpha),
        (0, j) => pi_easy_hard(state, j, alpha)?,
        (j, 0) => pi_hard_easy(state, j, alpha),
        (j, jp) if j == jp => pi_hard_same(state, j, alpha),
        // distinct hard types are incompatible
        _ => 0.0,
    };
    Ok(value)
}

/// pi*(A_0, A_0) = [1 - (1-a)^{s_0}] (1-a)^{sum_hard}.
fn pi_easy_easy(state: &PoolState, alpha: f64) -> f64 {
    let no_easy = q_pow(alpha, state.size(0));
    (1.0 - no_easy) * q_pow(alpha, state.hard_total())
}

/// pi*(A_j, A_0) = [1 - (1-a)^{s_0}] (1-a)^{s_j}.
fn pi_hard_easy(state: &PoolState, j: usize, alpha: f64) -> f64 {
    (1.0 - q_pow(alpha, state.size(0))) * q_pow(alpha, state.size(j))
}

/// pi*(A_j, A_j) = 1 - (1-a)^{s_j}.
fn pi_hard_same(state: &PoolState, j: usize, alpha: f64) -> f64 {
    1.0 - q_pow(alpha, state.size(j))
}

/// pi*(A_0, A_j): the mover sees some set of hard types with at least one
/// compatible agent and picks one uniformly; summing over which other
/// types join that set gives the subset sum with 1/(k+1) weights.
fn pi_easy_hard(state: &PoolState, j: usize, alpha: f64) -> Result<f64> {
    if state.hard_sizes_equal() {
        return Ok(pi_easy_hard_symmetric(state, alpha));
    }
    let p = state.hard_types();
    if p > SUBSET_ENUMERATION_CAP {
        return Err(Error::TooManyHardTypes { p, cap: SUBSET_ENUMERATION_CAP });
    }
    Ok(pi_easy_hard_general(state, j, alpha))
}

/// Exchangeable case: all hard sizes equal `s`, so the subset sum
/// telescopes to [1 - (1-a)^{p s}] / p independently of `j`.
fn pi_easy_hard_symmetric(state: &PoolState, alpha: f64) -> f64 {
    let p = state.hard_types() as f64;
    (1.0 - q_pow(alpha, state.hard_total())) / p
}

/// Exact subset enumeration over the other hard types.
fn pi_easy_hard_general(state: &PoolState, j: usize, alpha: f64) -> f64 {
    let p = state.hard_types();
    let others: Vec<usize> = (1..=p).filter(|&l| l != j).collect();
    // Per hard type l: probability that at least one / no A_l agent is
    // compatible with the mover.
    let hit: Vec<f64> = others.iter().map(|&l| 1.0 - q_pow(alpha, state.size(l))).collect();
    let miss: Vec<f64> = others.iter().map(|&l| q_pow(alpha, state.size(l))).collect();

    let mut sum = 0.0;
    for mask in 0u32..(1u32 << others.len()) {
        let mut beta = 1.0;
        for (bit, (&h, &ms)) in hit.iter().zip(miss.iter()).enumerate() {
            beta *= if mask >> bit & 1 == 1 { h } else { ms };
        }
        let k = mask.count_ones() as f64;
        sum += beta / (k + 1.0);
    }
    (1.0 - q_pow(alpha, state.size(j))) * sum
}

/// Residual of the identity `(1-a)^{|S|} = 1 - sum_k pi*(A_0, A_k)`;
/// should be ~0 for every valid state.
pub fn match_prob_identity_residual(state: &PoolState, alpha: f64) -> Result<f64> {
    let mut sum = 0.0;
    for k in 0..=state.hard_types() {
        sum += match_prob(state, 0, k, alpha)?;
    }
    Ok(q_pow(alpha, state.total()) - (1.0 - sum))
}

/// Probability that a critical agent of type `A_k` has no compatible
/// partner in the candidate pool: `(1-a)^{|S|}` for the easy type,
/// `(1-a)^{s_0 + s_j}` for hard type `j`.
pub fn perish_prob(state: &PoolState, k: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_type(state, k)?;
    let exponent = if k == 0 {
        state.total()
    } else {
        state.size(0) + state.size(k)
    };
    Ok(q_pow(alpha, exponent))
}

/// Log of [`perish_prob`]; exact even where the linear value underflows.
pub fn ln_perish_prob(state: &PoolState, k: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_type(state, k)?;
    let exponent = if k == 0 {
        state.total()
    } else {
        state.size(0) + state.size(k)
    };
    Ok(exponent * (-alpha).ln_1p())
}

/// All ordered pairs `pi*(A_k, A_{k'})` at one state.
#[derive(Debug, Clone)]
pub struct MatchProbTable {
    p: usize,
    pi: Vec<f64>,
}

impl MatchProbTable {
    pub fn get(&self, k: usize, k_prime: usize) -> f64 {
        self.pi[k * (self.p + 1) + k_prime]
    }

    /// Sum over partners for a fixed mover type; at most 1.
    pub fn row_sum(&self, k: usize) -> f64 {
        (0..=self.p).map(|kp| self.get(k, kp)).sum()
    }
}

pub fn match_prob_table(state: &PoolState, alpha: f64) -> Result<MatchProbTable> {
    let p = state.hard_types();
    let mut pi = Vec::with_capacity((p + 1) * (p + 1));
    for k in 0..=p {
        for kp in 0..=p {
            pi.push(match_prob(state, k, kp, alpha)?);
        }
    }
    Ok(MatchProbTable { p, pi })
}
