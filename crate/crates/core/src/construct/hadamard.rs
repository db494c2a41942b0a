//! Hadamard matrices: the Paley construction from the quadratic character,
//! Sylvester doubling, and the reduction into odd-characteristic fields.
//!
//! Hadamard matrices are integer-valued artifacts; the reduction step is
//! explicit so the integer identity H H^T = n I and the field-level Gram do
//! not get conflated.

use crate::ffield::FieldSpec;
use crate::matrix::FMatrix;
use crate::{Error, Result};
use std::fmt;

/// A +-1 integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<IntMatrix> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::ShapeMismatch("integer matrix must be square".into()));
            }
            if r.iter().any(|&v| v != 1 && v != -1) {
                return Err(Error::Precondition("entries must be +1 or -1".into()));
            }
        }
        Ok(IntMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    /// Integer identity H H^T = n I.
    pub fn is_hadamard(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let dot: i64 = (0..self.n).map(|t| self.at(i, t) * self.at(j, t)).sum();
                let want = if i == j { self.n as i64 } else { 0 };
                if dot != want {
                    return false;
                }
            }
        }
        true
    }

    /// Hadamard file format: `hadamard <n>` then rows of 1 / -1.
    pub fn to_text(&self) -> String {
        let mut out = format!("hadamard {}\n", self.n);
        for r in 0..self.n {
            let line: Vec<String> = (0..self.n).map(|c| self.at(r, c).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<IntMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty hadamard file".into()))?;
        let n: usize = header
            .strip_prefix("hadamard ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse("hadamard header".into()))?;
        let mut rows = Vec::with_capacity(n);
        for line in lines {
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(t.into())))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse("hadamard row count mismatch".into()));
        }
        IntMatrix::from_rows(rows)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Paley construction: for q = 3 mod 4 the (q+1) x (q+1) matrix bordered by
/// ones, with -1 on the core diagonal and eta(a_j - a_i) off it, is
/// Hadamard. Field elements are taken in canonical enumeration order.
pub fn paley_hadamard(spec: &FieldSpec) -> Result<IntMatrix> {
    let q = spec.q();
    if q % 4 != 3 {
        return Err(Error::BadResidue(q));
    }
    let elems: Vec<_> = spec.elements().collect();
    let n = q as usize + 1;
    let mut rows = vec![vec![1i64; n]];
    for i in 1..n {
        let mut row = Vec::with_capacity(n);
        row.push(1);
        for j in 1..n {
            if i == j {
                row.push(-1);
            } else {
                let diff = elems[j - 1].sub(&elems[i - 1]);
                row.push(diff.quadratic_character()? as i64);
            }
        }
        rows.push(row);
    }
    let h = IntMatrix::from_rows(rows)?;
    debug_assert!(h.is_hadamard());
    Ok(h)
}

/// Applies w rounds of Sylvester doubling [[H, H], [H, -H]]; rejects
/// non-Hadamard input.
pub fn sylvester_double(h: &IntMatrix, w: u32) -> Result<IntMatrix> {
    if !h.is_hadamard() {
        return Err(Error::NotHadamard);
    }
    let mut cur = h.clone();
    for _ in 0..w {
        let n = cur.order();
        let mut rows = Vec::with_capacity(2 * n);
        for r in 0..n {
            let mut row: Vec<i64> = (0..n).map(|c| cur.at(r, c)).collect();
            row.extend((0..n).map(|c| cur.at(r, c)));
            rows.push(row);
        }
        for r in 0..n {
            let mut row: Vec<i64> = (0..n).map(|c| cur.at(r, c)).collect();
            row.extend((0..n).map(|c| -cur.at(r, c)));
            rows.push(row);
        }
        cur = IntMatrix::from_rows(rows)?;
    }
    Ok(cur)
}

/// Reduces a Hadamard matrix into an odd-characteristic field; returns the
/// field matrix and the Gram scalar n mod p, which the caller must check for
/// zero before quasi-orthogonal use.
pub fn reduce_to_field(
    h: &IntMatrix,
    spec: &FieldSpec,
) -> Result<(FMatrix, crate::ffield::FieldElement)> {
    if spec.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !h.is_hadamard() {
        return Err(Error::NotHadamard);
    }
    let m = FMatrix::from_fn(spec, h.order(), h.order(), |r, c| spec.from_int(h.at(r, c)));
    let scalar = spec.from_int(h.order() as i64);
    Ok((m, scalar))
}
