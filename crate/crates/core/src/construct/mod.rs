//! Matrix construction algorithms: unitriangular congruence reduction,
//! quadratic/Hermitian form diagonalization, quadratic-sum recursion,
//! Hadamard builders, the cyclic-group Vandermonde families and the
//! scaled-Vandermonde existence searches.
//!
//! Every construction returns (or can be wrapped into) a
//! [`CongruenceCertificate`] that re-verifies from its own contents alone.

mod congruence;
mod families;
mod hadamard;
mod search;
mod sums;

pub use congruence::{
    hermitian_diagonalize, lower_quasi_orthogonalize, lower_quasi_unitarize, symmetric_diagonalize,
    unitarize, upper_quasi_orthogonalize, upper_quasi_unitarize,
};
pub use families::{
    a_gamma, a_gamma_tau, explicit_family, family_membership, family_parameter, family_set_members,
    u_qk, unitary_vandermonde,
};
pub use hadamard::{paley_hadamard, reduce_to_field, sylvester_double, IntMatrix};
pub use search::{nsc_quasi_orthogonal, nsc_quasi_unitary, SearchConfig};
pub use sums::{hermitian_sum_matrix, quadratic_sum_matrix};

use crate::ffield::FieldElement;
use crate::matrix::FMatrix;
use crate::{Error, Result};
use std::fmt;

/// Which bilinear form a construction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Euclidean,
    Hermitian,
}

impl Form {
    pub fn is_hermitian(self) -> bool {
        matches!(self, Form::Hermitian)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Euclidean => write!(f, "euclidean"),
            Form::Hermitian => write!(f, "hermitian"),
        }
    }
}

/// Structural shape of the certified transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    LowerUnitriangular,
    UpperUnitriangular,
    General,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::LowerUnitriangular => write!(f, "lower"),
            Flavor::UpperUnitriangular => write!(f, "upper"),
            Flavor::General => write!(f, "general"),
        }
    }
}

/// Which identity the certificate asserts.
///
/// `QuasiGram`: result = transform * A for some source A, and
/// result * result^adj = diag(gram_diagonal) — the result is
/// quasi-orthogonal / quasi-unitary.
///
/// `Congruence`: the source matrix was itself symmetric / Hermitian and the
/// certificate asserts transform * source * transform^adj =
/// diag(gram_diagonal), recovered as result * transform^adj since
/// result = transform * source. Zero diagonal entries are allowed there
/// (singular inputs diagonalize with zeros).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    QuasiGram,
    Congruence,
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertKind::QuasiGram => write!(f, "quasi-gram"),
            CertKind::Congruence => write!(f, "congruence"),
        }
    }
}

/// A self-contained, re-verifiable record of a congruence construction.
#[derive(Clone, Debug)]
pub struct CongruenceCertificate {
    pub kind: CertKind,
    pub form: Form,
    pub flavor: Flavor,
    pub transform: FMatrix,
    pub result: FMatrix,
    pub gram_diagonal: Vec<FieldElement>,
    /// True when the result was verified non-singular by columns.
    pub nsc_verified: bool,
    /// True when a zero Gram scalar was accepted (degenerate sum matrices);
    /// the diagonal-nonzero requirement is then waived.
    pub degenerate: bool,
}

impl CongruenceCertificate {
    /// Re-runs every check the certificate claims. Returns the list of
    /// human-readable check lines; fails with the first broken claim.
    pub fn verify(&self) -> Result<Vec<String>> {
        let mut report = Vec::new();
        let k = self.result.rows();
        if !self.result.is_square() || !self.transform.is_square() || self.transform.rows() != k {
            return Err(Error::CertificateInvalid("shape mismatch".into()));
        }
        if self.gram_diagonal.len() != k {
            return Err(Error::CertificateInvalid("gram diagonal length".into()));
        }
        let spec = self.result.spec();
        match self.flavor {
            Flavor::LowerUnitriangular | Flavor::UpperUnitriangular => {
                let lower = self.flavor == Flavor::LowerUnitriangular;
                for r in 0..k {
                    for c in 0..k {
                        let e = self.transform.at(r, c);
                        if r == c && !e.is_one() {
                            return Err(Error::CertificateInvalid(
                                "transform diagonal must be 1".into(),
                            ));
                        }
                        let off = if lower { c > r } else { c < r };
                        if off && !e.is_zero() {
                            return Err(Error::CertificateInvalid(format!(
                                "transform is not {} unitriangular",
                                self.flavor
                            )));
                        }
                    }
                }
                report.push(format!("transform shape: {} unitriangular", self.flavor));
            }
            Flavor::General => {
                if self.transform.det()?.is_zero() {
                    return Err(Error::CertificateInvalid("transform is singular".into()));
                }
                report.push("transform shape: non-singular".into());
            }
        }
        let hermitian = self.form.is_hermitian();
        if hermitian && !spec.is_quadratic() {
            return Err(Error::CertificateInvalid(
                "hermitian form over non-quadratic spec".into(),
            ));
        }
        let gram = match self.kind {
            CertKind::QuasiGram => self.result.mul(&self.result.adjoint(hermitian)?)?,
            CertKind::Congruence => self.result.mul(&self.transform.adjoint(hermitian)?)?,
        };
        for r in 0..k {
            for c in 0..k {
                let want = if r == c {
                    self.gram_diagonal[r].clone()
                } else {
                    spec.zero()
                };
                if gram.at(r, c) != &want {
                    return Err(Error::CertificateInvalid(format!(
                        "gram mismatch at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        report.push(format!("gram identity: diagonal of order {k}"));
        if !self.degenerate && self.kind == CertKind::QuasiGram {
            if self.gram_diagonal.iter().any(|d| d.is_zero()) {
                return Err(Error::CertificateInvalid("gram diagonal has a zero".into()));
            }
            report.push("gram diagonal: all nonzero".into());
        }
        if hermitian {
            for d in &self.gram_diagonal {
                if !d.is_zero() && !d.in_base_subfield()? {
                    return Err(Error::CertificateInvalid(
                        "gram entry outside the base subfield".into(),
                    ));
                }
            }
            report.push("gram diagonal: base subfield".into());
        }
        if self.nsc_verified {
            if !self.result.is_nsc()?.is_nsc() {
                return Err(Error::CertificateInvalid("result is not NSC".into()));
            }
            report.push("result: NSC".into());
        }
        Ok(report)
    }

    /// Certificate file format: header, field spec line, kind/form/flavor
    /// lines, flags, then transform, result and gram diagonal as matrix
    /// text blocks.
    pub fn to_text(&self) -> String {
        let spec = self.result.spec();
        let mut out = String::new();
        out.push_str("certificate v1\n");
        out.push_str(&format!("{spec}\n"));
        out.push_str(&format!("kind {}\n", self.kind));
        out.push_str(&format!("form {}\n", self.form));
        out.push_str(&format!("flavor {}\n", self.flavor));
        out.push_str(&format!("nsc {}\n", self.nsc_verified));
        out.push_str(&format!("degenerate {}\n", self.degenerate));
        out.push_str("transform\n");
        out.push_str(&self.transform.to_text());
        out.push_str("result\n");
        out.push_str(&self.result.to_text());
        out.push_str("gram\n");
        let diag =
            FMatrix::from_rows(spec, vec![self.gram_diagonal.clone()]).expect("gram diagonal row");
        out.push_str(&diag.to_text());
        out
    }

    pub fn from_text(text: &str) -> Result<CongruenceCertificate> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty certificate".into()))?;
        if header != "certificate v1" {
            return Err(Error::Parse("missing certificate header".into()));
        }
        let _field = lines
            .next()
            .ok_or_else(|| Error::Parse("missing field".into()))?;
        let mut kind = None;
        let mut form = None;
        let mut flavor = None;
        let mut nsc = false;
        let mut degenerate = false;
        let mut sections: Vec<(String, Vec<String>)> = Vec::new();
        for line in lines {
            match line.split_once(' ') {
                Some(("kind", v)) => {
                    kind = Some(match v {
                        "quasi-gram" => CertKind::QuasiGram,
                        "congruence" => CertKind::Congruence,
                        _ => return Err(Error::Parse(format!("bad kind {v}"))),
                    })
                }
                Some(("form", v)) => {
                    form = Some(match v {
                        "euclidean" => Form::Euclidean,
                        "hermitian" => Form::Hermitian,
                        _ => return Err(Error::Parse(format!("bad form {v}"))),
                    })
                }
                Some(("flavor", v)) => {
                    flavor = Some(match v {
                        "lower" => Flavor::LowerUnitriangular,
                        "upper" => Flavor::UpperUnitriangular,
                        "general" => Flavor::General,
                        _ => return Err(Error::Parse(format!("bad flavor {v}"))),
                    })
                }
                Some(("nsc", v)) => nsc = v == "true",
                Some(("degenerate", v)) => degenerate = v == "true",
                _ => {
                    if line == "transform" || line == "result" || line == "gram" {
                        sections.push((line.to_string(), Vec::new()));
                    } else if let Some(last) = sections.last_mut() {
                        last.1.push(line.to_string());
                    } else {
                        return Err(Error::Parse(format!("unexpected line: {line}")));
                    }
                }
            }
        }
        let mut transform = None;
        let mut result = None;
        let mut gram = None;
        for (name, body) in sections {
            let m = FMatrix::from_text(&body.join("\n"))?;
            match name.as_str() {
                "transform" => transform = Some(m),
                "result" => result = Some(m),
                "gram" => gram = Some(m),
                _ => unreachable!(),
            }
        }
        let (Some(kind), Some(form), Some(flavor)) = (kind, form, flavor) else {
            return Err(Error::Parse("certificate missing kind/form/flavor".into()));
        };
        let (Some(transform), Some(result), Some(gram)) = (transform, result, gram) else {
            return Err(Error::Parse("certificate missing a matrix section".into()));
        };
        if gram.rows() != 1 {
            return Err(Error::Parse("gram section must be a single row".into()));
        }
        Ok(CongruenceCertificate {
            kind,
            form,
            flavor,
            transform,
            result,
            gram_diagonal: gram.row(0).to_vec(),
            nsc_verified: nsc,
            degenerate,
        })
    }

    /// Wraps a matrix whose Gram is already diagonal (transform = identity),
    /// e.g. the quadratic-sum outputs. Degenerate (zero) Grams are accepted
    /// and flagged.
    pub fn for_quasi_result(result: FMatrix, form: Form) -> Result<CongruenceCertificate> {
        let hermitian = form.is_hermitian();
        let gram = result.mul(&result.adjoint(hermitian)?)?;
        let k = result.rows();
        let spec = result.spec().clone();
        let mut diag = Vec::with_capacity(k);
        for r in 0..k {
            for c in 0..k {
                if r != c && !gram.at(r, c).is_zero() {
                    return Err(Error::Precondition("gram is not diagonal".into()));
                }
            }
            diag.push(gram.at(r, r).clone());
        }
        let degenerate = diag.iter().any(|d| d.is_zero());
        let nsc_verified =
            !degenerate && k <= crate::matrix::NSC_ORDER_CAP && result.is_nsc()?.is_nsc();
        Ok(CongruenceCertificate {
            kind: CertKind::QuasiGram,
            form,
            flavor: Flavor::General,
            transform: FMatrix::identity(&spec, k),
            result,
            gram_diagonal: diag,
            nsc_verified,
            degenerate,
        })
    }
}
