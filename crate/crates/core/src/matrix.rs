//! Exact dense linear algebra over a [`FieldSpec`].
//!
//! Row reduction pivots on the first nonzero entry in column order; with
//! exact arithmetic there is no pivot-magnitude concern and determinism is
//! what matters. Enumeration-heavy checks (NSC, distance profiles) carry
//! explicit caps.

use crate::ffield::{FieldElement, FieldSpec};
use crate::{Error, Result};
use std::fmt;

/// Hard cap for the NSC submatrix sweep: sum over i of C(k,i) determinants.
pub const NSC_ORDER_CAP: usize = 16;
/// Default cap for brute-force enumerations (q^k steps).
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// Dense row-major matrix over one field spec. Zero-row matrices are allowed
/// (they generate the zero code); zero-column matrices are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FMatrix {
    pub fn from_rows(spec: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<FMatrix> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if ncols == 0 && !rows.is_empty() {
            return Err(Error::ShapeMismatch("rows must be nonempty".into()));
        }
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for e in r {
                if e.spec() != spec {
                    return Err(Error::SpecMismatch);
                }
            }
        }
        Ok(FMatrix {
            spec: spec.clone(),
            rows: rows.len(),
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        spec: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> FMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        FMatrix {
            spec: spec.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Integer literal constructor, mainly for tests and golden values.
    pub fn from_ints(spec: &FieldSpec, rows: &[&[i64]]) -> FMatrix {
        FMatrix::from_fn(
            spec,
            rows.len(),
            rows.first().map_or(0, |r| r.len()),
            |r, c| spec.from_int(rows[r][c]),
        )
    }

    pub fn zero(spec: &FieldSpec, rows: usize, cols: usize) -> FMatrix {
        FMatrix::from_fn(spec, rows, cols, |_, _| spec.zero())
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> FMatrix {
        FMatrix::from_fn(
            spec,
            n,
            n,
            |r, c| {
                if r == c {
                    spec.one()
                } else {
                    spec.zero()
                }
            },
        )
    }

    pub fn diagonal(spec: &FieldSpec, entries: &[FieldElement]) -> FMatrix {
        FMatrix::from_fn(spec, entries.len(), entries.len(), |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                spec.zero()
            }
        })
    }

    /// The k x k matrix with entry (r, j) = lambda_j * x_j^r (0-based r).
    /// Distinct nodes and nonzero scalings make it NSC.
    pub fn vandermonde(xs: &[FieldElement], lambdas: &[FieldElement]) -> Result<FMatrix> {
        let k = xs.len();
        if k == 0 || lambdas.len() != k {
            return Err(Error::ShapeMismatch(
                "vandermonde needs equal nonzero lengths".into(),
            ));
        }
        let spec = xs[0].spec().clone();
        if k as u64 > spec.q() {
            return Err(Error::Precondition(format!(
                "vandermonde order {k} exceeds field size {}",
                spec.q()
            )));
        }
        for i in 0..k {
            for j in i + 1..k {
                if xs[i] == xs[j] {
                    return Err(Error::Precondition(
                        "vandermonde nodes must be distinct".into(),
                    ));
                }
            }
        }
        if lambdas.iter().any(|l| l.is_zero()) {
            return Err(Error::Precondition(
                "vandermonde scalings must be nonzero".into(),
            ));
        }
        let mut rows = Vec::with_capacity(k);
        let mut current = lambdas.to_vec();
        for _ in 0..k {
            rows.push(current.clone());
            current = current.iter().zip(xs).map(|(c, x)| c.mul(x)).collect();
        }
        FMatrix::from_rows(&spec, rows)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(v.spec() == &self.spec, "spec mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(FMatrix::from_fn(
            &self.spec,
            self.rows,
            other.cols,
            |r, c| {
                let mut acc = self.spec.zero();
                for t in 0..self.cols {
                    acc = acc.add(&self.at(r, t).mul(other.at(t, c)));
                }
                acc
            },
        ))
    }

    pub fn add(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("add".into()));
        }
        Ok(FMatrix::from_fn(
            &self.spec,
            self.rows,
            self.cols,
            |r, c| self.at(r, c).add(other.at(r, c)),
        ))
    }

    pub fn scale(&self, s: &FieldElement) -> FMatrix {
        FMatrix::from_fn(&self.spec, self.rows, self.cols, |r, c| {
            self.at(r, c).mul(s)
        })
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(&self.spec, self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    /// Conjugate transpose over a quadratic extension.
    pub fn conj_transpose(&self) -> Result<FMatrix> {
        self.spec.base_q()?;
        Ok(FMatrix::from_fn(
            &self.spec,
            self.cols,
            self.rows,
            |r, c| self.at(c, r).conj().expect("quadratic spec checked"),
        ))
    }

    /// Entrywise Frobenius a -> a^q over the base subfield.
    pub fn frobenius(&self) -> Result<FMatrix> {
        self.spec.base_q()?;
        Ok(FMatrix::from_fn(
            &self.spec,
            self.rows,
            self.cols,
            |r, c| self.at(r, c).conj().expect("quadratic spec checked"),
        ))
    }

    /// Transpose for the Euclidean form, conjugate transpose for Hermitian.
    pub fn adjoint(&self, hermitian: bool) -> Result<FMatrix> {
        if hermitian {
            self.conj_transpose()
        } else {
            Ok(self.transpose())
        }
    }

    pub fn stack(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("stack".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(FMatrix {
            spec: self.spec.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FMatrix {
        FMatrix::from_fn(&self.spec, rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    /// In-place reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            if lead >= self.rows {
                break;
            }
            let pivot_row = (lead..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != lead {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, lead * self.cols + c);
                }
            }
            let inv = self.at(lead, col).inv().expect("pivot nonzero");
            for c in 0..self.cols {
                let v = self.at(lead, c).mul(&inv);
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for c in 0..self.cols {
                        let v = self.at(r, c).sub(&f.mul(self.at(lead, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.spec.one());
        }
        let mut m = self.clone();
        let mut det = self.spec.one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot_row else {
                return Ok(self.spec.zero());
            };
            if pr != col {
                for c in 0..n {
                    m.data.swap(pr * n + c, col * n + c);
                }
                det = det.neg();
            }
            det = det.mul(m.at(col, col));
            let inv = m.at(col, col).inv().expect("pivot nonzero");
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let f = m.at(r, col).mul(&inv);
                    for c in col..n {
                        let v = m.at(r, c).sub(&f.mul(m.at(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<FMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut aug = FMatrix::from_fn(&self.spec, n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                self.spec.one()
            } else {
                self.spec.zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        Ok(FMatrix::from_fn(&self.spec, n, n, |r, c| {
            aug.at(r, n + c).clone()
        }))
    }

    /// Basis of the right kernel { x : M x^T = 0 } as a (cols - rank) x cols
    /// matrix.
    pub fn null_space(&self) -> FMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.spec.zero(); self.cols];
            v[f] = self.spec.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.at(i, f).neg();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return FMatrix::zero(&self.spec, 0, self.cols);
        }
        FMatrix::from_rows(&self.spec, rows).expect("kernel basis is well formed")
    }

    /// Determinants of the leading principal 1x1, 2x2, ..., kxk blocks.
    pub fn leading_principal_minors(&self) -> Result<Vec<FieldElement>> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        (1..=self.rows)
            .map(|i| self.submatrix(&idx[..i], &idx[..i]).det())
            .collect()
    }

    /// Non-singular-by-columns test with a witness on failure: for every i
    /// and every i-column subset of the first i rows, the square submatrix
    /// must be non-singular. Subsets are scanned in lexicographic order so
    /// the reported witness is deterministic.
    pub fn is_nsc(&self) -> Result<NscOutcome> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let k = self.rows;
        if k > NSC_ORDER_CAP {
            return Err(Error::NscOrderCap(NSC_ORDER_CAP));
        }
        let rows: Vec<usize> = (0..k).collect();
        for i in 1..=k {
            let mut cols: Vec<usize> = (0..i).collect();
            loop {
                let sub = self.submatrix(&rows[..i], &cols);
                if sub.det()?.is_zero() {
                    return Ok(NscOutcome::Fails {
                        i,
                        cols: cols.iter().map(|&c| c + 1).collect(),
                    });
                }
                if !next_combination(&mut cols, k) {
                    break;
                }
            }
        }
        Ok(NscOutcome::Nsc)
    }

    /// D_i profile by brute force: for i = 1..=rows, the minimum Hamming
    /// weight over all nonzero combinations of the first i rows. Rectangular
    /// matrices are allowed (the profile lives on length-cols vectors).
    pub fn di_profile_bruteforce(&self, cap: u128) -> Result<Vec<u64>> {
        let q = self.spec.q() as u128;
        let k = self.rows;
        let total: u128 = (1..=k)
            .try_fold(0u128, |acc, i| {
                q.checked_pow(i as u32).and_then(|t| acc.checked_add(t))
            })
            .ok_or(Error::EnumerationCap {
                needed: u128::MAX,
                cap,
            })?;
        if total > cap {
            return Err(Error::EnumerationCap { needed: total, cap });
        }
        let mut out = Vec::with_capacity(k);
        let mut best = u64::MAX;
        for i in 1..=k {
            // Only combinations with a nonzero coefficient on row i-1 are new.
            let sub = self.submatrix(
                &(0..i).collect::<Vec<_>>(),
                &(0..self.cols).collect::<Vec<_>>(),
            );
            best = best.min(min_weight_with_last_nonzero(&sub));
            out.push(best);
        }
        Ok(out)
    }

    /// Splits a monomial matrix into D * P_tau; fails with the offending
    /// line when some row or column does not have exactly one nonzero entry.
    pub fn monomial_decompose(&self) -> Result<MonomialParts> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let k = self.rows;
        let mut diag = vec![None; k];
        let mut image = vec![usize::MAX; k];
        for (j, slot) in image.iter_mut().enumerate() {
            let mut hit = None;
            for i in 0..k {
                if !self.at(i, j).is_zero() {
                    if hit.is_some() {
                        return Err(Error::NotMonomial(format!(
                            "column {} has two nonzero entries",
                            j + 1
                        )));
                    }
                    hit = Some(i);
                }
            }
            let i = hit.ok_or_else(|| Error::NotMonomial(format!("column {} is zero", j + 1)))?;
            *slot = i;
            diag[i] = Some(self.at(i, j).clone());
        }
        for i in 0..k {
            let nonzeros = (0..k).filter(|&j| !self.at(i, j).is_zero()).count();
            if nonzeros != 1 {
                return Err(Error::NotMonomial(format!(
                    "row {} has {} nonzero entries",
                    i + 1,
                    nonzeros
                )));
            }
        }
        let perm = Permutation::from_image(image)?;
        let diag = diag.into_iter().map(|d| d.expect("rows covered")).collect();
        Ok(MonomialParts { diag, perm })
    }

    /// Cauchy-Binet identity check, used as a test oracle: the (rowset,
    /// colset) u x u minor of X*Y must equal the sum of paired minors over
    /// all u-subsets of the inner index range.
    pub fn cauchy_binet_check(
        x: &FMatrix,
        y: &FMatrix,
        u: usize,
        rowset: &[usize],
        colset: &[usize],
    ) -> Result<bool> {
        if x.spec != y.spec {
            return Err(Error::SpecMismatch);
        }
        if x.cols != y.rows {
            return Err(Error::ShapeMismatch("cauchy-binet inner dimension".into()));
        }
        if rowset.len() != u || colset.len() != u {
            return Err(Error::ShapeMismatch("index set sizes must equal u".into()));
        }
        if rowset.iter().any(|&r| r >= x.rows) || colset.iter().any(|&c| c >= y.cols) {
            return Err(Error::ShapeMismatch("index out of range".into()));
        }
        let n = x.cols;
        let prod = x.mul(y)?;
        let lhs = prod.submatrix(rowset, colset).det()?;
        if u > n {
            return Ok(lhs.is_zero());
        }
        let mut sum = x.spec.zero();
        let mut inner: Vec<usize> = (0..u).collect();
        loop {
            let dx = x.submatrix(rowset, &inner).det()?;
            let dy = y.submatrix(&inner, colset).det()?;
            sum = sum.add(&dx.mul(&dy));
            if !next_combination(&mut inner, n) {
                break;
            }
        }
        Ok(lhs == sum)
    }

    /// Bit-exact matrix text format: field spec line, then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.spec);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the matrix text format produced by [`FMatrix::to_text`].
    pub fn from_text(text: &str) -> Result<FMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let spec_line = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let spec = FieldSpec::parse(spec_line)?;
        let mut rows = Vec::new();
        for line in lines {
            let row: Vec<FieldElement> = line
                .split_whitespace()
                .map(|tok| FieldElement::parse(&spec, tok))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("matrix file has no rows".into()));
        }
        FMatrix::from_rows(&spec, rows)
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Plain odometer over all q^t coefficient vectors of the rows of `m`,
/// maintained incrementally: advancing one digit adds a precomputed
/// difference row, so each combination costs O(cols) additions. `visit`
/// receives the combination and the digit vector; returning false stops.
pub(crate) fn for_each_row_combination(
    m: &FMatrix,
    mut visit: impl FnMut(&[FieldElement], &[u64]) -> bool,
) {
    let spec = m.spec().clone();
    let q = spec.q() as usize;
    let t = m.rows();
    let n = m.cols();
    let elems: Vec<FieldElement> = spec.elements().collect();
    // diff[r][d] = (elems[d+1] - elems[d]) * row_r; wrap[r] undoes a full
    // cycle: (elems[0] - elems[q-1]) * row_r.
    let mut diff = Vec::with_capacity(t);
    let mut wrap = Vec::with_capacity(t);
    for r in 0..t {
        let row = m.row(r);
        let mut per_digit = Vec::with_capacity(q - 1);
        for d in 0..q - 1 {
            let step = elems[d + 1].sub(&elems[d]);
            per_digit.push(row.iter().map(|e| step.mul(e)).collect::<Vec<_>>());
        }
        let back = elems[0].sub(&elems[q - 1]);
        wrap.push(row.iter().map(|e| back.mul(e)).collect::<Vec<_>>());
        diff.push(per_digit);
    }
    let mut digits = vec![0u64; t];
    let mut current = vec![spec.zero(); n];
    loop {
        if !visit(&current, &digits) {
            return;
        }
        let mut pos = 0;
        loop {
            if pos == t {
                return;
            }
            let d = digits[pos] as usize;
            if d + 1 < q {
                for (cur, delta) in current.iter_mut().zip(&diff[pos][d]) {
                    *cur = cur.add(delta);
                }
                digits[pos] += 1;
                break;
            }
            for (cur, delta) in current.iter_mut().zip(&wrap[pos]) {
                *cur = cur.add(delta);
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Minimum Hamming weight over combinations of all rows of `m` whose
/// coefficient on the last row is nonzero.
fn min_weight_with_last_nonzero(m: &FMatrix) -> u64 {
    let i = m.rows();
    let mut best = u64::MAX;
    for_each_row_combination(m, |current, digits| {
        if digits[i - 1] != 0 {
            let w = current.iter().filter(|e| !e.is_zero()).count() as u64;
            // Dependent rows can produce the zero vector, which is not a
            // nonzero codeword; skip it.
            if w > 0 && w < best {
                best = w;
            }
        }
        true
    });
    best
}

/// Advances `cols` to the next k-subset of {0..n-1} in lexicographic order.
pub(crate) fn next_combination(cols: &mut [usize], n: usize) -> bool {
    let k = cols.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if cols[i] < n - (k - i) {
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Outcome of the NSC sweep; the witness names the first failing submatrix
/// (row count i, 1-based column subset).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NscOutcome {
    Nsc,
    Fails { i: usize, cols: Vec<usize> },
}

impl NscOutcome {
    pub fn is_nsc(&self) -> bool {
        matches!(self, NscOutcome::Nsc)
    }
}

/// Permutation of {1..k}, stored 0-based: `image[j] = tau(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Permutation {
        Permutation {
            image: (0..k).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Permutation> {
        let k = image.len();
        let mut seen = vec![false; k];
        for &i in &image {
            if i >= k || seen[i] {
                return Err(Error::Precondition("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { image })
    }

    /// From a 1-based image list.
    pub fn from_one_based(image: &[usize]) -> Result<Permutation> {
        if image.contains(&0) {
            return Err(Error::Precondition("1-based image contains 0".into()));
        }
        Permutation::from_image(image.iter().map(|&i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// tau(j), 0-based.
    pub fn apply(&self, j: usize) -> usize {
        self.image[j]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (j, &i) in self.image.iter().enumerate() {
            inv[i] = j;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &i)| i == j)
    }

    pub fn one_based_image(&self) -> Vec<usize> {
        self.image.iter().map(|&i| i + 1).collect()
    }

    /// The permutation matrix P_tau with `P[tau(j)][j] = 1`: row tau(j) of the
    /// identity is replaced with row j.
    pub fn matrix(&self, spec: &FieldSpec) -> FMatrix {
        let k = self.image.len();
        FMatrix::from_fn(spec, k, k, |r, c| {
            if r == self.image[c] {
                spec.one()
            } else {
                spec.zero()
            }
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let img: Vec<String> = self
            .one_based_image()
            .iter()
            .map(|i| i.to_string())
            .collect();
        write!(f, "({})", img.join(","))
    }
}

/// Diagonal-times-permutation split of a monomial matrix. `diag[i]` is the
/// unique nonzero entry of row i, so reassembly is exactly D * P_tau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialParts {
    pub diag: Vec<FieldElement>,
    pub perm: Permutation,
}

impl MonomialParts {
    pub fn reassemble(&self) -> FMatrix {
        let spec = self.diag[0].spec().clone();
        let d = FMatrix::diagonal(&spec, &self.diag);
        d.mul(&self.perm.matrix(&spec)).expect("square shapes")
    }
}
