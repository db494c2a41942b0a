//! Sum-of-norms matrices: 2^m x 2^m matrices S with prescribed first row and
//! two-sided scalar Gram S S^adj = S^adj S = c I, where c is the quadratic
//! (or Hermitian-norm) sum of the first row.

use super::Form;
use crate::ffield::FieldElement;
use crate::matrix::FMatrix;
use crate::{Error, Result};

/// Euclidean version: c = sum c_i^2 and transposes in the assembly.
pub fn quadratic_sum_matrix(cs: &[FieldElement]) -> Result<FMatrix> {
    build_sum_matrix(cs, Form::Euclidean)
}

/// Hermitian version over GF(q^2): c = sum c_i^(q+1) and conjugate
/// transposes in the assembly.
pub fn hermitian_sum_matrix(cs: &[FieldElement]) -> Result<FMatrix> {
    if cs.is_empty() {
        return Err(Error::NotPowerOfTwo);
    }
    cs[0].spec().base_q()?;
    build_sum_matrix(cs, Form::Hermitian)
}

fn build_sum_matrix(cs: &[FieldElement], form: Form) -> Result<FMatrix> {
    let n = cs.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo);
    }
    let spec = cs[0].spec().clone();
    for c in cs {
        if c.spec() != &spec {
            return Err(Error::SpecMismatch);
        }
    }
    if cs.iter().all(|c| c.is_zero()) {
        return Ok(FMatrix::zero(&spec, n, n));
    }
    Ok(recurse(cs, form))
}

fn norm_sum(cs: &[FieldElement], form: Form) -> FieldElement {
    let spec = cs[0].spec().clone();
    let mut acc = spec.zero();
    for c in cs {
        let sq = if form.is_hermitian() {
            c.mul(&c.conj().expect("quadratic spec checked"))
        } else {
            c.mul(c)
        };
        acc = acc.add(&sq);
    }
    acc
}

fn recurse(cs: &[FieldElement], form: Form) -> FMatrix {
    let n = cs.len();
    let spec = cs[0].spec().clone();
    if n == 1 {
        return FMatrix::from_rows(&spec, vec![vec![cs[0].clone()]]).expect("1x1");
    }
    let h = n / 2;
    let a_mat = recurse(&cs[..h], form);
    let b_mat = recurse(&cs[h..], form);
    let a = norm_sum(&cs[..h], form);
    let b = norm_sum(&cs[h..], form);
    let hermitian = form.is_hermitian();
    let adj = |m: &FMatrix| m.adjoint(hermitian).expect("spec checked");
    let (bottom_left, bottom_right) = if !a.is_zero() {
        // [[A, B], [-a^{-1} A^adj B^adj A, A^adj]]
        let x = adj(&a_mat)
            .mul(&adj(&b_mat))
            .and_then(|m| m.mul(&a_mat))
            .expect("square blocks");
        let x = x.scale(&a.inv().expect("nonzero").neg());
        (x, adj(&a_mat))
    } else if !b.is_zero() {
        // [[A, B], [B^adj, -b^{-1} B^adj A^adj B]] keeps the first row.
        let y = adj(&b_mat)
            .mul(&adj(&a_mat))
            .and_then(|m| m.mul(&b_mat))
            .expect("square blocks");
        let y = y.scale(&b.inv().expect("nonzero").neg());
        (adj(&b_mat), y)
    } else {
        // Both halves have zero Gram; [[A, B], [A, -B]] keeps both two-sided
        // identities because every cross term carries a zero block Gram.
        (a_mat.clone(), b_mat.scale(&spec.one().neg()))
    };
    FMatrix::from_fn(&spec, n, n, |r, c| match (r < h, c < h) {
        (true, true) => a_mat.at(r, c).clone(),
        (true, false) => b_mat.at(r, c - h).clone(),
        (false, true) => bottom_left.at(r - h, c).clone(),
        (false, false) => bottom_right.at(r - h, c - h).clone(),
    })
}
