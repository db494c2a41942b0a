//! Linear codes over a [`FieldSpec`]: duals, Hermitian duals, exhaustive
//! minimum distance, containment tests and the GRS constructors.
//!
//! Codes compare by codeword set through rank computations, never by matrix
//! equality; many generator matrices describe one code.

use crate::ffield::{FieldElement, FieldSpec};
use crate::matrix::{FMatrix, DEFAULT_ENUM_CAP};
use crate::{Error, Result};
use std::sync::OnceLock;

/// Which inner product a dual or containment test refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    Euclidean,
    Hermitian,
}

impl std::fmt::Display for DualKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DualKind::Euclidean => write!(f, "euclidean"),
            DualKind::Hermitian => write!(f, "hermitian"),
        }
    }
}

/// An [n, t] linear code given by a row-full-rank generator matrix.
/// Zero-dimensional codes carry a 0 x n generator.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: FMatrix,
    min_dist: OnceLock<u64>,
}

impl LinearCode {
    /// Wraps a generator matrix; rejects rank-deficient input.
    pub fn new(gen: FMatrix) -> Result<LinearCode> {
        if gen.cols() == 0 {
            return Err(Error::ShapeMismatch("code length must be positive".into()));
        }
        if gen.rank() != gen.rows() {
            return Err(Error::RankDeficient);
        }
        Ok(LinearCode {
            gen,
            min_dist: OnceLock::new(),
        })
    }

    pub fn full_space(spec: &FieldSpec, n: usize) -> LinearCode {
        LinearCode::new(FMatrix::identity(spec, n)).expect("identity is full rank")
    }

    pub fn zero_code(spec: &FieldSpec, n: usize) -> LinearCode {
        LinearCode::new(FMatrix::zero(spec, 0, n)).expect("empty generator")
    }

    pub fn spec(&self) -> &FieldSpec {
        self.gen.spec()
    }
    pub fn len(&self) -> usize {
        self.gen.cols()
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn dim(&self) -> usize {
        self.gen.rows()
    }
    pub fn generator(&self) -> &FMatrix {
        &self.gen
    }

    /// Exact minimum nonzero codeword weight by plain-odometer message
    /// enumeration (q^t - 1 codewords). Fails when q^t exceeds `cap` and on
    /// the zero code, which has no nonzero codeword.
    pub fn min_distance(&self, cap: u128) -> Result<u64> {
        if let Some(&d) = self.min_dist.get() {
            return Ok(d);
        }
        let t = self.dim();
        if t == 0 {
            return Err(Error::Precondition(
                "zero code has no minimum distance".into(),
            ));
        }
        let q = self.spec().q() as u128;
        let needed = q.checked_pow(t as u32).ok_or(Error::EnumerationCap {
            needed: u128::MAX,
            cap,
        })?;
        if needed > cap {
            return Err(Error::EnumerationCap { needed, cap });
        }
        let mut best = u64::MAX;
        crate::matrix::for_each_row_combination(&self.gen, |word, digits| {
            if digits.iter().all(|&d| d == 0) {
                return true;
            }
            let w = word.iter().filter(|e| !e.is_zero()).count() as u64;
            if w < best {
                best = w;
            }
            best > 1
        });
        let _ = self.min_dist.set(best);
        Ok(best)
    }

    /// All codewords, for small-scale set oracles.
    pub fn codewords(&self, cap: u128) -> Result<Vec<Vec<FieldElement>>> {
        let t = self.dim();
        let q = self.spec().q() as u128;
        let needed = q.checked_pow(t as u32).ok_or(Error::EnumerationCap {
            needed: u128::MAX,
            cap,
        })?;
        if needed > cap {
            return Err(Error::EnumerationCap { needed, cap });
        }
        let mut out = Vec::with_capacity(needed as usize);
        crate::matrix::for_each_row_combination(&self.gen, |word, _| {
            out.push(word.to_vec());
            true
        });
        Ok(out)
    }

    /// Euclidean dual: the right kernel of the generator.
    pub fn dual(&self) -> LinearCode {
        LinearCode::new(self.gen.null_space()).expect("kernel basis is full rank")
    }

    /// The code { c^q : c in C }, generated by the entrywise Frobenius image
    /// of the generator.
    pub fn frobenius_image(&self) -> Result<LinearCode> {
        LinearCode::new(self.gen.frobenius()?)
    }

    /// Hermitian dual over GF(q^2): the kernel under (x,y)_H = sum x_i y_i^q,
    /// computed as the Euclidean dual of the Frobenius image.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        Ok(self.frobenius_image()?.dual())
    }

    pub fn dual_of_kind(&self, kind: DualKind) -> Result<LinearCode> {
        match kind {
            DualKind::Euclidean => Ok(self.dual()),
            DualKind::Hermitian => self.hermitian_dual(),
        }
    }

    /// Rowspace containment: rank([self; other]) == rank(self).
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        if self.spec() != other.spec() {
            return Err(Error::SpecMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch("codes of different length".into()));
        }
        if other.dim() == 0 {
            return Ok(true);
        }
        let stacked = self.gen.stack(&other.gen)?;
        Ok(stacked.rank() == self.dim())
    }

    pub fn same_codeword_set(&self, other: &LinearCode) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.contains(other)?)
    }

    pub fn is_dual_containing(&self, kind: DualKind) -> Result<bool> {
        let dual = self.dual_of_kind(kind)?;
        self.contains(&dual)
    }

    /// Code file format: `code n=<n> k=<t>` header plus the matrix text
    /// format (field line, then t generator rows).
    pub fn to_text(&self) -> String {
        let mut out = format!("code n={} k={}\n{}\n", self.len(), self.dim(), self.spec());
        for r in 0..self.dim() {
            let line: Vec<String> = self.gen.row(r).iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<LinearCode> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty code file".into()))?;
        let rest = header
            .strip_prefix("code ")
            .ok_or_else(|| Error::Parse("code file must start with 'code n=... k=...'".into()))?;
        let mut n = None;
        let mut k = None;
        for tok in rest.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = Some(v.parse::<usize>().map_err(|_| Error::Parse(tok.into()))?);
            } else if let Some(v) = tok.strip_prefix("k=") {
                k = Some(v.parse::<usize>().map_err(|_| Error::Parse(tok.into()))?);
            }
        }
        let (n, k) = match (n, k) {
            (Some(n), Some(k)) => (n, k),
            _ => return Err(Error::Parse("code header needs n= and k=".into())),
        };
        let spec_line = lines
            .next()
            .ok_or_else(|| Error::Parse("code file missing field spec".into()))?;
        let spec = FieldSpec::parse(spec_line)?;
        let mut rows = Vec::new();
        for line in lines {
            let row: Vec<FieldElement> = line
                .split_whitespace()
                .map(|tok| FieldElement::parse(&spec, tok))
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "generator row has {} entries, expected {}",
                    row.len(),
                    n
                )));
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(Error::Parse(format!(
                "generator has {} rows, header says k={}",
                rows.len(),
                k
            )));
        }
        let gen = if rows.is_empty() {
            FMatrix::zero(&spec, 0, n)
        } else {
            FMatrix::from_rows(&spec, rows)?
        };
        LinearCode::new(gen)
    }
}

/// Generalized Reed-Solomon code: generator row r, column j is
/// v_j * a_j^(r-1). The points must be distinct and the scalings nonzero;
/// the result is an [n, k] MDS code.
pub fn grs(a: &[FieldElement], v: &[FieldElement], k: usize) -> Result<LinearCode> {
    let n = a.len();
    if n == 0 || v.len() != n {
        return Err(Error::ShapeMismatch(
            "grs needs equal nonzero lengths".into(),
        ));
    }
    let spec = a[0].spec().clone();
    if k == 0 || k > n || n as u64 > spec.q() {
        return Err(Error::Precondition(format!(
            "grs needs 1 <= k <= n <= q, got k={k}, n={n}, q={}",
            spec.q()
        )));
    }
    for i in 0..n {
        for j in i + 1..n {
            if a[i] == a[j] {
                return Err(Error::Precondition("grs points must be distinct".into()));
            }
        }
    }
    if v.iter().any(|x| x.is_zero()) {
        return Err(Error::Precondition("grs scalings must be nonzero".into()));
    }
    let mut rows = Vec::with_capacity(k);
    let mut current = v.to_vec();
    for _ in 0..k {
        rows.push(current.clone());
        current = current.iter().zip(a).map(|(c, x)| c.mul(x)).collect();
    }
    LinearCode::new(FMatrix::from_rows(&spec, rows)?)
}

/// Extended GRS code of length n+1: the extra coordinate carries the
/// coefficient of x^(k-1), so only the last generator row ends in 1.
pub fn extended_grs(a: &[FieldElement], v: &[FieldElement], k: usize) -> Result<LinearCode> {
    let base = grs(a, v, k)?;
    let spec = base.spec().clone();
    let n = a.len();
    let gen = FMatrix::from_fn(&spec, k, n + 1, |r, c| {
        if c < n {
            base.generator().at(r, c).clone()
        } else if r == k - 1 {
            spec.one()
        } else {
            spec.zero()
        }
    });
    LinearCode::new(gen)
}

/// Hamming weight of a vector.
pub fn weight(v: &[FieldElement]) -> u64 {
    v.iter().filter(|e| !e.is_zero()).count() as u64
}

/// Hamming distance between vectors of equal length.
pub fn hamming_distance(u: &[FieldElement], v: &[FieldElement]) -> Result<u64> {
    if u.len() != v.len() {
        return Err(Error::ShapeMismatch("hamming distance lengths".into()));
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a != b).count() as u64)
}

/// Convenience wrapper using the default enumeration cap.
pub fn min_distance_default(c: &LinearCode) -> Result<u64> {
    c.min_distance(DEFAULT_ENUM_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DEFAULT_ENUM_CAP;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, m: usize) -> FieldSpec {
        FieldSpec::new(p, m, None).unwrap()
    }

    fn code(spec: &FieldSpec, rows: &[&[i64]]) -> LinearCode {
        LinearCode::new(FMatrix::from_ints(spec, rows)).unwrap()
    }

    fn hamming74(spec: &FieldSpec) -> LinearCode {
        code(
            spec,
            &[
                &[1, 0, 0, 0, 0, 1, 1],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 1, 1, 0],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        )
    }

    #[test]
    fn min_distance_examples() {
        let f5 = gf(5, 1);
        let a: Vec<_> = (0..4).map(|i| f5.from_int(i)).collect();
        let v = vec![f5.one(); 4];
        let c = grs(&a, &v, 2).unwrap();
        assert_eq!(c.min_distance(DEFAULT_ENUM_CAP).unwrap(), 3);
        let full = LinearCode::full_space(&f5, 3);
        assert_eq!(full.min_distance(DEFAULT_ENUM_CAP).unwrap(), 1);
        let f2 = gf(2, 1);
        assert_eq!(hamming74(&f2).min_distance(DEFAULT_ENUM_CAP).unwrap(), 3);
        // Cap errors out rather than guessing.
        assert!(matches!(
            hamming74(&f2).min_distance(8),
            Err(crate::Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn dual_examples() {
        let f5 = gf(5, 1);
        let full = LinearCode::full_space(&f5, 3);
        assert_eq!(full.dual().dim(), 0);
        let zero = LinearCode::zero_code(&f5, 3);
        assert_eq!(zero.dual().dim(), 3);
        // Self-dual: rows orthogonal to themselves and each other since
        // 1 + 2*2 = 0 mod 5.
        let c = code(&f5, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]);
        assert!(c.same_codeword_set(&c.dual()).unwrap());
        assert!(c.contains(&c.dual()).unwrap());
    }

    #[test]
    fn dual_dimension_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for spec in [gf(5, 1), gf(2, 2), gf(3, 2)] {
            let els: Vec<_> = spec.elements().collect();
            for _ in 0..20 {
                let n = rng.gen_range(2..6);
                let t = rng.gen_range(1..=n);
                let gen = loop {
                    let m = FMatrix::from_fn(&spec, t, n, |_, _| {
                        els[rng.gen_range(0..els.len())].clone()
                    });
                    if m.rank() == t {
                        break m;
                    }
                };
                let c = LinearCode::new(gen).unwrap();
                let d = c.dual();
                assert_eq!(c.dim() + d.dim(), n);
                for r in 0..d.dim() {
                    for s in 0..c.dim() {
                        let mut acc = spec.zero();
                        for i in 0..n {
                            acc = acc.add(&d.generator().at(r, i).mul(c.generator().at(s, i)));
                        }
                        assert!(acc.is_zero());
                    }
                }
                // Double dual has the same codeword set.
                assert!(c.same_codeword_set(&d.dual()).unwrap());
            }
        }
    }

    #[test]
    fn hermitian_dual_examples() {
        let f4 = gf(2, 2);
        let full = LinearCode::full_space(&f4, 2);
        assert_eq!(full.hermitian_dual().unwrap().dim(), 0);
        // (1, alpha) is Hermitian-isotropic: 1 + alpha^3 = 0 in GF(4).
        let alpha = f4.element(&[0, 1]).unwrap();
        let c =
            LinearCode::new(FMatrix::from_rows(&f4, vec![vec![f4.one(), alpha]]).unwrap()).unwrap();
        let hd = c.hermitian_dual().unwrap();
        assert!(hd.contains(&c).unwrap());
        assert!(matches!(
            LinearCode::full_space(&gf(5, 1), 2).hermitian_dual(),
            Err(crate::Error::NotQuadratic)
        ));
    }

    #[test]
    fn hermitian_dual_matches_frobenius_route_and_defining_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for spec in [gf(2, 2), gf(3, 2)] {
            let els: Vec<_> = spec.elements().collect();
            let q = spec.base_q().unwrap() as i64;
            for _ in 0..50 {
                let n = rng.gen_range(2..5);
                let t = rng.gen_range(1..=n);
                let gen = loop {
                    let m = FMatrix::from_fn(&spec, t, n, |_, _| {
                        els[rng.gen_range(0..els.len())].clone()
                    });
                    if m.rank() == t {
                        break m;
                    }
                };
                let c = LinearCode::new(gen).unwrap();
                let hd = c.hermitian_dual().unwrap();
                assert_eq!(hd.dim(), n - t);
                // Defining property, evaluated directly: (x, y)_H = 0 for
                // every generator pair.
                for r in 0..hd.dim() {
                    for s in 0..c.dim() {
                        let mut acc = spec.zero();
                        for i in 0..n {
                            let y = c.generator().at(s, i).pow(q).unwrap();
                            acc = acc.add(&hd.generator().at(r, i).mul(&y));
                        }
                        assert!(acc.is_zero());
                    }
                }
                let alt = c.frobenius_image().unwrap().dual();
                assert!(hd.same_codeword_set(&alt).unwrap());
            }
        }
    }

    #[test]
    fn containment_tests() {
        let f5 = gf(5, 1);
        let c = code(&f5, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]);
        assert!(c.contains(&c).unwrap());
        let full = LinearCode::full_space(&f5, 4);
        assert!(full.contains(&c).unwrap());
        assert!(!c.contains(&full).unwrap());
        assert!(c.contains(&c.dual()).unwrap());
        let other_len = LinearCode::full_space(&f5, 3);
        assert!(c.contains(&other_len).is_err());
    }

    #[test]
    fn dual_containing_tests() {
        let f2 = gf(2, 1);
        assert!(hamming74(&f2)
            .is_dual_containing(DualKind::Euclidean)
            .unwrap());
        // [4,1] repetition code: its dual is the even-weight [4,3] code.
        let rep = code(&f2, &[&[1, 1, 1, 1]]);
        assert!(!rep.is_dual_containing(DualKind::Euclidean).unwrap());
        let full = LinearCode::full_space(&f2, 4);
        assert!(full.is_dual_containing(DualKind::Euclidean).unwrap());
    }

    #[test]
    fn grs_examples() {
        let f5 = gf(5, 1);
        let a: Vec<_> = (0..4).map(|i| f5.from_int(i)).collect();
        let v = vec![f5.one(); 4];
        let c = grs(&a, &v, 2).unwrap();
        assert_eq!(
            *c.generator(),
            FMatrix::from_ints(&f5, &[&[1, 1, 1, 1], &[0, 1, 2, 3]])
        );
        assert_eq!(c.min_distance(DEFAULT_ENUM_CAP).unwrap(), 3);
        let cn = grs(&a, &v, 4).unwrap();
        assert_eq!(cn.min_distance(DEFAULT_ENUM_CAP).unwrap(), 1);
        let c1 = grs(&a, &v, 1).unwrap();
        assert_eq!(c1.min_distance(DEFAULT_ENUM_CAP).unwrap(), 4);
        // Precondition failures.
        let dup = vec![f5.one(), f5.one()];
        assert!(grs(&dup, &v[..2], 1).is_err());
        assert!(grs(&a, &v, 5).is_err());
    }

    #[test]
    fn extended_grs_examples() {
        let f5 = gf(5, 1);
        let a: Vec<_> = (0..4).map(|i| f5.from_int(i)).collect();
        let v = vec![f5.one(); 4];
        let c = extended_grs(&a, &v, 2).unwrap();
        assert_eq!(
            *c.generator(),
            FMatrix::from_ints(&f5, &[&[1, 1, 1, 1, 0], &[0, 1, 2, 3, 1]])
        );
        assert_eq!(c.min_distance(DEFAULT_ENUM_CAP).unwrap(), 4);
        // k = 1: the single generator row is (v, 1) because the extra
        // coordinate carries the top coefficient, which for constants is the
        // constant itself; the code is [n+1, 1, n+1] MDS.
        let c1 = extended_grs(&a, &v, 1).unwrap();
        assert!(c1.generator().at(0, 4).is_one());
        assert_eq!(c1.min_distance(DEFAULT_ENUM_CAP).unwrap(), 5);
    }

    #[test]
    fn extended_grs_random_mds() {
        let f7 = gf(7, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let els: Vec<_> = f7.elements().collect();
        for _ in 0..20 {
            let n = rng.gen_range(2..7);
            let k = rng.gen_range(1..=n);
            let mut pts = els.clone();
            use rand::seq::SliceRandom;
            pts.shuffle(&mut rng);
            pts.truncate(n);
            let nonzero: Vec<_> = f7.elements().filter(|e| !e.is_zero()).collect();
            let v: Vec<_> = (0..n)
                .map(|_| nonzero[rng.gen_range(0..nonzero.len())].clone())
                .collect();
            let c = extended_grs(&pts, &v, k).unwrap();
            assert_eq!(
                c.min_distance(DEFAULT_ENUM_CAP).unwrap(),
                (n + 2 - k) as u64
            );
        }
    }

    #[test]
    fn grs_is_mds_at_small_scale() {
        // All lengths up to 8 (field permitting), dimensions capped so the
        // enumeration stays cheap.
        for (p, m) in [(5u64, 1usize), (7, 1), (3, 2), (2, 3)] {
            let spec = gf(p, m);
            let els: Vec<_> = spec.elements().collect();
            for n in 2..=8usize.min(spec.q() as usize) {
                for k in 1..=n {
                    if (spec.q() as u128).pow(k as u32) > 200_000 {
                        continue;
                    }
                    let v = vec![spec.one(); n];
                    let c = grs(&els[..n], &v, k).unwrap();
                    assert_eq!(
                        c.min_distance(DEFAULT_ENUM_CAP).unwrap(),
                        (n + 1 - k) as u64,
                        "grs [{n},{k}] over {spec}"
                    );
                    let e = extended_grs(&els[..n], &v, k).unwrap();
                    assert_eq!(
                        e.min_distance(DEFAULT_ENUM_CAP).unwrap(),
                        (n + 2 - k) as u64,
                        "extended grs [{},{k}] over {spec}",
                        n + 1
                    );
                }
            }
        }
    }

    #[test]
    fn singleton_bound_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for spec in [gf(5, 1), gf(2, 2)] {
            let els: Vec<_> = spec.elements().collect();
            for _ in 0..20 {
                let n = rng.gen_range(2..6);
                let t = rng.gen_range(1..=n);
                let gen = loop {
                    let m = FMatrix::from_fn(&spec, t, n, |_, _| {
                        els[rng.gen_range(0..els.len())].clone()
                    });
                    if m.rank() == t {
                        break m;
                    }
                };
                let c = LinearCode::new(gen).unwrap();
                assert!(c.min_distance(DEFAULT_ENUM_CAP).unwrap() <= (n - t + 1) as u64);
            }
        }
    }

    #[test]
    fn hamming_metric_axioms() {
        let f9 = gf(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let els: Vec<_> = f9.elements().collect();
        for _ in 0..100 {
            let n = rng.gen_range(1..6);
            let pick = |rng: &mut ChaCha8Rng| -> Vec<FieldElement> {
                (0..n)
                    .map(|_| els[rng.gen_range(0..els.len())].clone())
                    .collect()
            };
            let u = pick(&mut rng);
            let v = pick(&mut rng);
            let w = pick(&mut rng);
            let duv = hamming_distance(&u, &v).unwrap();
            assert_eq!(duv == 0, u == v);
            assert_eq!(duv, hamming_distance(&v, &u).unwrap());
            assert!(duv <= hamming_distance(&u, &w).unwrap() + hamming_distance(&w, &v).unwrap());
            // d_H(u, v) = w_H(u - v).
            let diff: Vec<_> = u.iter().zip(&v).map(|(a, b)| a.sub(b)).collect();
            assert_eq!(duv, weight(&diff));
        }
    }

    #[test]
    fn code_file_round_trip() {
        let f9 = gf(3, 2);
        let c = LinearCode::new(FMatrix::from_ints(&f9, &[&[1, 0, 2], &[0, 1, 1]])).unwrap();
        let text = c.to_text();
        let back = LinearCode::from_text(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert!(back.same_codeword_set(&c).unwrap());
        // Zero code round-trips too.
        let z = LinearCode::zero_code(&f9, 3);
        let back = LinearCode::from_text(&z.to_text()).unwrap();
        assert_eq!(back.dim(), 0);
        assert_eq!(back.len(), 3);
        // Rank validation on load.
        let bad = "code n=2 k=2\nGF(5)\n1 1\n2 2\n";
        assert!(LinearCode::from_text(bad).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn dual_dim_complement(seed in 0u64..) {
            let spec = FieldSpec::new(5, 1, None).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let els: Vec<_> = spec.elements().collect();
            let n = rng.gen_range(1..7);
            let t = rng.gen_range(0..=n);
            let gen = if t == 0 {
                FMatrix::zero(&spec, 0, n)
            } else {
                loop {
                    let m = FMatrix::from_fn(&spec, t, n, |_, _| {
                        els[rng.gen_range(0..els.len())].clone()
                    });
                    if m.rank() == t { break m; }
                }
            };
            let c = LinearCode::new(gen).unwrap();
            prop_assert_eq!(c.dim() + c.dual().dim(), n);
        }
    }
}
