//! Existence searches for NSC quasi-orthogonal / quasi-unitary matrices.
//!
//! A scaled Vandermonde B = V * diag(lambda) on distinct nodes is NSC for
//! every nonzero scaling, so the search only has to make the leading
//! principal minors of the Gram nonzero. A greedy sweep locks scalings one
//! at a time; a seeded randomized restart covers dead ends, and the final
//! certificate is verified in full either way.

use super::congruence::{lower_quasi_orthogonalize, lower_quasi_unitarize};
use super::{CongruenceCertificate, Form};
use crate::ffield::{FieldElement, FieldSpec};
use crate::matrix::FMatrix;
use crate::{Error, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Seed and attempt budget for the randomized fallback.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub seed: u64,
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 1,
            budget: 20_000,
        }
    }
}

/// k x k NSC quasi-unitary matrix over GF(q^2), for k < q.
pub fn nsc_quasi_unitary(
    spec: &FieldSpec,
    k: usize,
    config: SearchConfig,
) -> Result<CongruenceCertificate> {
    let q = spec.base_q()?;
    if k == 0 || k as u64 >= q {
        return Err(Error::Precondition(format!(
            "need 1 <= k < q, got k={k}, q={q}"
        )));
    }
    let b = search_scaled_vandermonde(spec, k, Form::Hermitian, config)?;
    lower_quasi_unitarize(&b)
}

/// Euclidean analogue over GF(q) for k <= q. Existence is not guaranteed
/// here, so the search may honestly exhaust its budget.
pub fn nsc_quasi_orthogonal(
    spec: &FieldSpec,
    k: usize,
    config: SearchConfig,
) -> Result<CongruenceCertificate> {
    if k == 0 || k as u64 > spec.q() {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= q, got k={k}, q={}",
            spec.q()
        )));
    }
    let b = search_scaled_vandermonde(spec, k, Form::Euclidean, config)?;
    lower_quasi_orthogonalize(&b)
}

fn leading_minors_nonzero(b: &FMatrix, form: Form, upto: usize) -> Result<bool> {
    let g = b.mul(&b.adjoint(form.is_hermitian())?)?;
    let idx: Vec<usize> = (0..b.rows()).collect();
    for i in 1..=upto {
        if g.submatrix(&idx[..i], &idx[..i]).det()?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn search_scaled_vandermonde(
    spec: &FieldSpec,
    k: usize,
    form: Form,
    config: SearchConfig,
) -> Result<FMatrix> {
    // Nodes: the first k field elements in enumeration order.
    let nodes: Vec<FieldElement> = spec.elements().take(k).collect();
    let nonzero: Vec<FieldElement> = spec.elements().filter(|e| !e.is_zero()).collect();
    let mut lambdas = vec![spec.one(); k];

    // Greedy sweep: lambda_1 = 1 fixed; lock lambda_i at the first value
    // keeping minors 1..=i nonzero with the provisional all-ones tail.
    let mut greedy_ok = true;
    for i in 1..k {
        let mut locked = false;
        for cand in &nonzero {
            lambdas[i] = cand.clone();
            let b = FMatrix::vandermonde(&nodes, &lambdas)?;
            if leading_minors_nonzero(&b, form, i + 1)? {
                locked = true;
                break;
            }
        }
        if !locked {
            greedy_ok = false;
            break;
        }
    }
    if greedy_ok {
        let b = FMatrix::vandermonde(&nodes, &lambdas)?;
        if leading_minors_nonzero(&b, form, k)? {
            return Ok(b);
        }
    }

    // Randomized restart with a recorded seed.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.budget {
        lambdas[0] = spec.one();
        for l in lambdas.iter_mut().skip(1) {
            *l = nonzero[rng.gen_range(0..nonzero.len())].clone();
        }
        let b = FMatrix::vandermonde(&nodes, &lambdas)?;
        if leading_minors_nonzero(&b, form, k)? {
            return Ok(b);
        }
    }
    Err(Error::SearchExhausted {
        what: format!(
            "{form} scaled-vandermonde leading minors, k={k}, q={}",
            spec.q()
        ),
        attempts: config.budget,
    })
}
