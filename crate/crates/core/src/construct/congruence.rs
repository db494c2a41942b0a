//! Unitriangular congruence reduction of Gram matrices and the
//! symmetric / Hermitian form diagonalizations.
//!
//! The lower reduction peels the last row and column of each leading block,
//! exactly as the constructive proof does, so the intermediate factors and
//! the final transform reproduce the worked examples factor by factor.
//! Leading principal blocks are untouched by the peeling, which is why the
//! preconditions can be checked on the original Gram.

use super::{CertKind, CongruenceCertificate, Flavor, Form};
use crate::ffield::FieldElement;
use crate::matrix::{FMatrix, NSC_ORDER_CAP};
use crate::{Error, Result};

/// Gram matrix A * A^T or A * A^dagger.
fn gram(a: &FMatrix, form: Form) -> Result<FMatrix> {
    a.mul(&a.adjoint(form.is_hermitian())?)
}

fn adjoint_scalar(e: &FieldElement, form: Form) -> Result<FieldElement> {
    if form.is_hermitian() {
        e.conj()
    } else {
        Ok(e.clone())
    }
}

/// Bottom-up peeling: returns (L, diagonal, factors). The factors are the
/// per-step unitriangular matrices, largest block first, with
/// L = factors[k-2] * ... * factors[0].
pub(crate) fn lower_reduce_factors(
    a: &FMatrix,
    form: Form,
) -> Result<(FMatrix, Vec<FieldElement>, Vec<FMatrix>)> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let k = a.rows();
    let spec = a.spec().clone();
    let g = gram(a, form)?;
    let minors = g.leading_principal_minors()?;
    for (i, m) in minors.iter().enumerate() {
        if m.is_zero() {
            return Err(Error::ZeroLeadingMinor { index: i + 1 });
        }
    }
    let mut transform = FMatrix::identity(&spec, k);
    let mut factors = Vec::new();
    let idx: Vec<usize> = (0..k).collect();
    for s in (2..=k).rev() {
        // Leading s x s block of the original Gram: [[A_{s-1}, h],[h^adj, c]].
        let block = g.submatrix(&idx[..s - 1], &idx[..s - 1]);
        let block_inv = block.inverse()?;
        let h: Vec<FieldElement> = (0..s - 1).map(|r| g.at(r, s - 1).clone()).collect();
        let mut factor = FMatrix::identity(&spec, k);
        for j in 0..s - 1 {
            let mut acc = spec.zero();
            for (t, ht) in h.iter().enumerate() {
                acc = acc.add(&adjoint_scalar(ht, form)?.mul(block_inv.at(t, j)));
            }
            factor.set(s - 1, j, acc.neg());
        }
        transform = factor.mul(&transform)?;
        factors.push(factor);
    }
    let result = transform.mul(a)?;
    let d = gram(&result, form)?;
    let mut diagonal = Vec::with_capacity(k);
    for r in 0..k {
        for c in 0..k {
            if r != c && !d.at(r, c).is_zero() {
                return Err(Error::CertificateInvalid(
                    "reduction did not diagonalize the gram".into(),
                ));
            }
        }
        diagonal.push(d.at(r, r).clone());
    }
    Ok((transform, diagonal, factors))
}

fn lower_certificate(a: &FMatrix, form: Form) -> Result<CongruenceCertificate> {
    let (transform, gram_diagonal, _) = lower_reduce_factors(a, form)?;
    let result = transform.mul(a)?;
    // Prefix-row column-subset minors agree between A and LA, so NSC
    // transfers from the source; verified on the result regardless.
    let nsc_verified = if a.rows() <= NSC_ORDER_CAP {
        let source_nsc = a.is_nsc()?.is_nsc();
        let result_nsc = result.is_nsc()?.is_nsc();
        if source_nsc && !result_nsc {
            return Err(Error::CertificateInvalid(
                "NSC source produced a non-NSC result".into(),
            ));
        }
        result_nsc
    } else {
        false
    };
    Ok(CongruenceCertificate {
        kind: CertKind::QuasiGram,
        form,
        flavor: Flavor::LowerUnitriangular,
        transform,
        result,
        gram_diagonal,
        nsc_verified,
        degenerate: false,
    })
}

/// L * A is quasi-orthogonal for a lower unitriangular L, provided every
/// leading principal minor of A*A^T is nonzero. NSC sources give NSC results.
pub fn lower_quasi_orthogonalize(a: &FMatrix) -> Result<CongruenceCertificate> {
    lower_certificate(a, Form::Euclidean)
}

/// Hermitian analogue over GF(q^2): L * A is quasi-unitary and the Gram
/// diagonal lands in the base subfield.
pub fn lower_quasi_unitarize(a: &FMatrix) -> Result<CongruenceCertificate> {
    a.spec().base_q()?;
    let cert = lower_certificate(a, Form::Hermitian)?;
    for d in &cert.gram_diagonal {
        if !d.in_base_subfield()? {
            return Err(Error::CertificateInvalid(
                "hermitian gram entry outside the base subfield".into(),
            ));
        }
    }
    Ok(cert)
}

fn upper_certificate(a: &FMatrix, form: Form) -> Result<CongruenceCertificate> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let k = a.rows();
    let spec = a.spec().clone();
    let g = gram(a, form)?;
    let idx: Vec<usize> = (0..k).collect();
    // Trailing principal blocks of the Gram must all be non-singular.
    for i in 1..=k {
        let block = g.submatrix(&idx[k - i..], &idx[k - i..]);
        if block.det()?.is_zero() {
            return Err(Error::SingularTrailingBlock { index: i });
        }
    }
    let mut transform = FMatrix::identity(&spec, k);
    for off in 0..k.saturating_sub(1) {
        let block = g.submatrix(&idx[off + 1..], &idx[off + 1..]);
        let block_inv = block.inverse()?;
        let gcol: Vec<FieldElement> = (off + 1..k).map(|r| g.at(r, off).clone()).collect();
        let mut factor = FMatrix::identity(&spec, k);
        for j in 0..k - off - 1 {
            let mut acc = spec.zero();
            for (t, gt) in gcol.iter().enumerate() {
                acc = acc.add(&adjoint_scalar(gt, form)?.mul(block_inv.at(t, j)));
            }
            factor.set(off, off + 1 + j, acc.neg());
        }
        transform = factor.mul(&transform)?;
    }
    let result = transform.mul(a)?;
    let d = gram(&result, form)?;
    let mut gram_diagonal = Vec::with_capacity(k);
    for r in 0..k {
        for c in 0..k {
            if r != c && !d.at(r, c).is_zero() {
                return Err(Error::CertificateInvalid(
                    "reduction did not diagonalize the gram".into(),
                ));
            }
        }
        gram_diagonal.push(d.at(r, r).clone());
    }
    // No NSC transfer from the source here; record what the result is.
    let nsc_verified = k <= NSC_ORDER_CAP && result.is_nsc()?.is_nsc();
    Ok(CongruenceCertificate {
        kind: CertKind::QuasiGram,
        form,
        flavor: Flavor::UpperUnitriangular,
        transform,
        result,
        gram_diagonal,
        nsc_verified,
        degenerate: false,
    })
}

/// Upper unitriangular variant; needs every trailing principal block of the
/// Gram non-singular and carries no NSC guarantee.
pub fn upper_quasi_orthogonalize(a: &FMatrix) -> Result<CongruenceCertificate> {
    upper_certificate(a, Form::Euclidean)
}

pub fn upper_quasi_unitarize(a: &FMatrix) -> Result<CongruenceCertificate> {
    a.spec().base_q()?;
    upper_certificate(a, Form::Hermitian)
}

/// Symmetric Gaussian congruence in odd characteristic: returns a
/// certificate with transform T and T * A * T^T diagonal (zeros allowed for
/// singular input). The e_i + c*e_j pivot repair makes a nonzero diagonal
/// entry whenever the trailing block still has a nonzero entry in its first
/// row.
pub fn symmetric_diagonalize(a: &FMatrix) -> Result<CongruenceCertificate> {
    if a.spec().p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    congruence_diagonalize(a, Form::Euclidean)
}

/// Hermitian congruence over GF(q^2): transform T with T * H * T^dagger
/// diagonal over the base subfield. The pivot repair picks c with
/// Tr(c * h_ji) nonzero: c = h_ji^{-1} contributes 2 in odd characteristic,
/// and an enumeration search covers even characteristic.
pub fn hermitian_diagonalize(h: &FMatrix) -> Result<CongruenceCertificate> {
    h.spec().base_q()?;
    congruence_diagonalize(h, Form::Hermitian)
}

fn congruence_diagonalize(a: &FMatrix, form: Form) -> Result<CongruenceCertificate> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let k = a.rows();
    let spec = a.spec().clone();
    let hermitian = form.is_hermitian();
    // Input must equal its own adjoint.
    let adj = a.adjoint(hermitian)?;
    if &adj != a {
        return Err(if hermitian {
            Error::NotHermitian
        } else {
            Error::NotSymmetric
        });
    }
    let mut h = a.clone();
    let mut transform = FMatrix::identity(&spec, k);

    // Row op "row_i += c * row_j" mirrored by the adjoint column op.
    let add_row = |h: &mut FMatrix, t: &mut FMatrix, i: usize, j: usize, c: &FieldElement| {
        for col in 0..k {
            let v = h.at(i, col).add(&c.mul(h.at(j, col)));
            h.set(i, col, v);
            let tv = t.at(i, col).add(&c.mul(t.at(j, col)));
            t.set(i, col, tv);
        }
        let cc = adjoint_scalar(c, form).expect("spec checked");
        for row in 0..k {
            let v = h.at(row, i).add(&cc.mul(h.at(row, j)));
            h.set(row, i, v);
        }
    };
    let swap_rows = |h: &mut FMatrix, t: &mut FMatrix, i: usize, j: usize| {
        for col in 0..k {
            let (x, y) = (h.at(i, col).clone(), h.at(j, col).clone());
            h.set(i, col, y);
            h.set(j, col, x);
            let (x, y) = (t.at(i, col).clone(), t.at(j, col).clone());
            t.set(i, col, y);
            t.set(j, col, x);
        }
        for row in 0..k {
            let (x, y) = (h.at(row, i).clone(), h.at(row, j).clone());
            h.set(row, i, y);
            h.set(row, j, x);
        }
    };

    for t in 0..k {
        if h.at(t, t).is_zero() {
            if let Some(r) = (t + 1..k).find(|&r| !h.at(r, r).is_zero()) {
                swap_rows(&mut h, &mut transform, t, r);
            } else if let Some(j) = (t + 1..k).find(|&j| !h.at(t, j).is_zero()) {
                // All trailing diagonal entries vanish; repair the pivot by
                // adding c * (row/col j) into slot t.
                let c = match form {
                    Form::Euclidean => {
                        // New pivot is 2c*a_tj + c^2*a_jj; c = 1 unless that
                        // vanishes, in which case c = 2 gives 4(a_tj + a_jj),
                        // nonzero whenever 2a_tj + a_jj = 0 in odd
                        // characteristic.
                        let two = spec.from_int(2);
                        let candidate = two.mul(h.at(t, j)).add(h.at(j, j));
                        if candidate.is_zero() {
                            two
                        } else {
                            spec.one()
                        }
                    }
                    Form::Hermitian => {
                        // New pivot is Tr(c * h_jt) since h_jj = 0 here.
                        let entry = h.at(j, t).clone();
                        repair_coefficient(&entry)?
                    }
                };
                add_row(&mut h, &mut transform, t, j, &c);
                if h.at(t, t).is_zero() {
                    return Err(Error::CertificateInvalid(
                        "pivot repair failed to produce a nonzero pivot".into(),
                    ));
                }
            } else {
                // Row t is zero on the trailing block: a zero diagonal slot.
                continue;
            }
        }
        let pivot = h.at(t, t).clone();
        let pivot_inv = pivot.inv().expect("pivot nonzero");
        for r in t + 1..k {
            if !h.at(r, t).is_zero() {
                let c = h.at(r, t).mul(&pivot_inv).neg();
                add_row(&mut h, &mut transform, r, t, &c);
            }
        }
    }

    let mut gram_diagonal = Vec::with_capacity(k);
    for r in 0..k {
        for c in 0..k {
            if r != c && !h.at(r, c).is_zero() {
                return Err(Error::CertificateInvalid(
                    "congruence did not diagonalize".into(),
                ));
            }
        }
        gram_diagonal.push(h.at(r, r).clone());
    }
    if hermitian {
        for d in &gram_diagonal {
            if !d.is_zero() && !d.in_base_subfield()? {
                return Err(Error::CertificateInvalid(
                    "hermitian diagonal entry outside the base subfield".into(),
                ));
            }
        }
    }
    let result = transform.mul(a)?;
    let degenerate = gram_diagonal.iter().any(|d| d.is_zero());
    Ok(CongruenceCertificate {
        kind: CertKind::Congruence,
        form,
        flavor: Flavor::General,
        transform,
        result,
        gram_diagonal,
        nsc_verified: false,
        degenerate,
    })
}

/// Coefficient c with Tr(c * entry) nonzero: the inverse contributes
/// Tr(1) = 2 in odd characteristic; even characteristic falls back to an
/// enumeration search (the trace map is onto, so one exists).
fn repair_coefficient(entry: &FieldElement) -> Result<FieldElement> {
    let spec = entry.spec().clone();
    if entry.is_zero() {
        return Err(Error::CertificateInvalid("repair on zero entry".into()));
    }
    if spec.p() != 2 {
        return entry.inv();
    }
    for c in spec.elements() {
        if c.is_zero() {
            continue;
        }
        if !c.mul(entry).trace_to_base()?.is_zero() {
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted {
        what: "hermitian pivot repair coefficient".into(),
        attempts: spec.q(),
    })
}

/// Full unitarization: diagonalize A * A^dagger, then rescale each row
/// by the inverse norm preimage so the result is unitary (Gram = identity).
pub fn unitarize(a: &FMatrix) -> Result<CongruenceCertificate> {
    let spec = a.spec().clone();
    spec.base_q()?;
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    if a.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let g = gram(a, Form::Hermitian)?;
    let base = hermitian_diagonalize(&g)?;
    // base.transform * G * base.transform^dagger = diag(r_i), all nonzero
    // because A is non-singular.
    let mut scale = Vec::with_capacity(a.rows());
    for r in &base.gram_diagonal {
        if r.is_zero() {
            return Err(Error::Singular);
        }
        scale.push(r.norm_preimage()?.inv()?);
    }
    let d = FMatrix::diagonal(&spec, &scale);
    let transform = d.mul(&base.transform)?;
    let result = transform.mul(a)?;
    let check = gram(&result, Form::Hermitian)?;
    let k = a.rows();
    let mut gram_diagonal = Vec::with_capacity(k);
    for r in 0..k {
        for c in 0..k {
            let want = if r == c { spec.one() } else { spec.zero() };
            if check.at(r, c) != &want {
                return Err(Error::CertificateInvalid("unitarization failed".into()));
            }
        }
        gram_diagonal.push(spec.one());
    }
    let nsc_verified = k <= NSC_ORDER_CAP && result.is_nsc()?.is_nsc();
    Ok(CongruenceCertificate {
        kind: CertKind::QuasiGram,
        form: Form::Hermitian,
        flavor: Flavor::General,
        transform,
        result,
        gram_diagonal,
        nsc_verified,
        degenerate: false,
    })
}
