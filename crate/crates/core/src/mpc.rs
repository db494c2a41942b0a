//! Matrix-product codes [C_1, ..., C_k]A and the oracles that check the
//! duality and associativity identities on concrete instances.

use crate::ffield::FieldSpec;
use crate::lincode::{DualKind, LinearCode};
use crate::matrix::FMatrix;
use crate::{Error, Result};
use std::path::Path;

/// A matrix-product code: k constituent codes of common length n mixed by a
/// row-full-rank k x l defining matrix. The derived code of length l*n is
/// generated by the block matrix with (i, j) block a_ij * G_i.
#[derive(Clone, Debug)]
pub struct MatrixProductCode {
    constituents: Vec<LinearCode>,
    defining: FMatrix,
    derived: LinearCode,
}

impl MatrixProductCode {
    pub fn build(constituents: Vec<LinearCode>, defining: FMatrix) -> Result<MatrixProductCode> {
        if constituents.is_empty() {
            return Err(Error::Precondition("at least one constituent code".into()));
        }
        let spec = constituents[0].spec().clone();
        let n = constituents[0].len();
        for c in &constituents {
            if c.spec() != &spec {
                return Err(Error::SpecMismatch);
            }
            if c.len() != n {
                return Err(Error::ShapeMismatch(
                    "constituent codes of different length".into(),
                ));
            }
        }
        if defining.spec() != &spec {
            return Err(Error::SpecMismatch);
        }
        if defining.rows() != constituents.len() {
            return Err(Error::ShapeMismatch(format!(
                "defining matrix has {} rows for {} codes",
                defining.rows(),
                constituents.len()
            )));
        }
        if defining.rows() > defining.cols() {
            return Err(Error::ShapeMismatch("defining matrix needs k <= l".into()));
        }
        if defining.rank() != defining.rows() {
            return Err(Error::RankDeficient);
        }
        let gen = block_generator(&constituents, &defining);
        let derived = LinearCode::new(gen)?;
        Ok(MatrixProductCode {
            constituents,
            defining,
            derived,
        })
    }

    pub fn constituents(&self) -> &[LinearCode] {
        &self.constituents
    }
    pub fn defining(&self) -> &FMatrix {
        &self.defining
    }
    pub fn derived(&self) -> &LinearCode {
        &self.derived
    }
    pub fn len(&self) -> usize {
        self.derived.len()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn dim(&self) -> usize {
        self.derived.dim()
    }

    /// The profile lower bound min_i D_i(A) * d_i on the derived minimum
    /// distance, with both factors computed by brute force.
    pub fn distance_bound(&self, cap: u128) -> Result<u64> {
        let profile = self.defining.di_profile_bruteforce(cap)?;
        let mut best = u64::MAX;
        for (i, c) in self.constituents.iter().enumerate() {
            let d = c.min_distance(cap)?;
            best = best.min(profile[i] * d);
        }
        Ok(best)
    }
}

/// Raw block generator G(A); no rank requirement, so it also serves the
/// set-identity oracles on degenerate inputs.
pub fn block_generator(constituents: &[LinearCode], a: &FMatrix) -> FMatrix {
    let spec = constituents[0].spec().clone();
    let n = constituents[0].len();
    let l = a.cols();
    let total_rows: usize = constituents.iter().map(|c| c.dim()).sum();
    let mut rows = Vec::with_capacity(total_rows);
    for (i, code) in constituents.iter().enumerate() {
        for r in 0..code.dim() {
            let mut row = Vec::with_capacity(l * n);
            for j in 0..l {
                let aij = a.at(i, j);
                for t in 0..n {
                    row.push(aij.mul(code.generator().at(r, t)));
                }
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return FMatrix::zero(&spec, 0, l * n);
    }
    FMatrix::from_rows(&spec, rows).expect("block rows share shape")
}

/// Applies a block mixing matrix W (l x l') to a matrix whose rows are
/// l blocks of length n, producing rows of l' blocks.
pub fn block_mix(m: &FMatrix, w: &FMatrix, n: usize) -> Result<FMatrix> {
    if m.spec() != w.spec() {
        return Err(Error::SpecMismatch);
    }
    if m.cols() != w.rows() * n {
        return Err(Error::ShapeMismatch(format!(
            "block mix: {} cols vs {} blocks of {}",
            m.cols(),
            w.rows(),
            n
        )));
    }
    let spec = m.spec().clone();
    if m.rows() == 0 {
        return Ok(FMatrix::zero(&spec, 0, w.cols() * n));
    }
    Ok(FMatrix::from_fn(&spec, m.rows(), w.cols() * n, |r, c| {
        let jp = c / n;
        let t = c % n;
        let mut acc = spec.zero();
        for j in 0..w.rows() {
            acc = acc.add(&m.at(r, j * n + t).mul(w.at(j, jp)));
        }
        acc
    }))
}

/// Oracle for the mixing associativity [C_1..C_k]VW = ([C_1..C_k]V)W:
/// compares the two generator rowspaces by mutual containment.
pub fn associativity_check(constituents: &[LinearCode], v: &FMatrix, w: &FMatrix) -> Result<bool> {
    if constituents.is_empty() {
        return Err(Error::Precondition("at least one constituent code".into()));
    }
    if v.rows() != constituents.len() || v.cols() != w.rows() {
        return Err(Error::ShapeMismatch("associativity shapes".into()));
    }
    let n = constituents[0].len();
    let vw = v.mul(w)?;
    let lhs = block_generator(constituents, &vw);
    let rhs = block_mix(&block_generator(constituents, v), w, n)?;
    rowspace_equal(&lhs, &rhs)
}

fn rowspace_equal(a: &FMatrix, b: &FMatrix) -> Result<bool> {
    let ra = a.rank();
    let rb = b.rank();
    if ra != rb {
        return Ok(false);
    }
    if a.rows() == 0 || b.rows() == 0 {
        return Ok(ra == rb);
    }
    Ok(a.stack(b)?.rank() == ra)
}

/// Verifies the dual identity dual(C(A)) = [duals](A^-1)^T (Euclidean) or
/// with the conjugate transpose (Hermitian) by rank-based mutual
/// containment; a test oracle for square non-singular defining matrices.
pub fn dual_formula_check(mpc: &MatrixProductCode, kind: DualKind) -> Result<bool> {
    let a = mpc.defining();
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let a_inv = a.inverse()?;
    let mix = a_inv.adjoint(kind == DualKind::Hermitian)?;
    let duals: Vec<LinearCode> = mpc
        .constituents()
        .iter()
        .map(|c| c.dual_of_kind(kind))
        .collect::<Result<_>>()?;
    let rhs_gen = block_generator(&duals, &mix);
    let lhs = mpc.derived().dual_of_kind(kind)?;
    rowspace_equal(lhs.generator(), &rhs_gen)
}

/// Loads the CLI-facing description file: k lines `code <path>` then one
/// line `matrix <path>`, with relative paths resolved against the file.
pub fn load_description(path: &Path) -> Result<(Vec<LinearCode>, FMatrix)> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut codes = Vec::new();
    let mut matrix = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(p) = line.strip_prefix("code ") {
            let code_text = std::fs::read_to_string(dir.join(p.trim()))?;
            codes.push(LinearCode::from_text(&code_text)?);
        } else if let Some(p) = line.strip_prefix("matrix ") {
            let mat_text = std::fs::read_to_string(dir.join(p.trim()))?;
            matrix = Some(FMatrix::from_text(&mat_text)?);
        } else {
            return Err(Error::Parse(format!("bad description line: {line}")));
        }
    }
    let matrix = matrix.ok_or_else(|| Error::Parse("description has no matrix line".into()))?;
    if codes.is_empty() {
        return Err(Error::Parse("description has no code lines".into()));
    }
    let spec: &FieldSpec = codes[0].spec();
    if matrix.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    Ok((codes, matrix))
}
