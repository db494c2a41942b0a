//! Exact arithmetic in GF(p^m).
//!
//! A [`FieldSpec`] fixes the characteristic, the extension degree and the
//! irreducible modulus polynomial; elements are canonical coefficient
//! vectors. Specs with even degree are automatically usable as quadratic
//! extensions GF(q^2) over GF(q) with q = p^(m/2), which unlocks the
//! conjugation x -> x^q, the Hermitian trace and the norm machinery.

use crate::{Error, Result};
use std::fmt;
use std::sync::{Arc, OnceLock};

const MAX_Q: u64 = 1 << 16;
const DLOG_TABLE_MAX_Q: u64 = 1 << 12;

#[derive(Debug)]
struct FieldData {
    p: u64,
    m: usize,
    /// Monic modulus, coefficients low-to-high, length m+1.
    modulus: Vec<u64>,
    q: u64,
    /// p^(m/2) when m is even; the spec then doubles as GF(base_q^2).
    base_q: Option<u64>,
    primitive: OnceLock<Vec<u64>>,
    /// dlog[index(a)] = e with g^e = a, g the canonical primitive element.
    dlog: OnceLock<Option<Vec<u32>>>,
}

/// A finite field GF(p^m) with a fixed modulus polynomial.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<FieldData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `b`, both low-to-high mod p.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    while let Some(&lead) = a.last() {
        if a.len() < b.len() {
            break;
        }
        if lead == 0 {
            a.pop();
            continue;
        }
        let shift = a.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let idx = shift + i;
            a[idx] = (a[idx] + p * p - (lead * bc) % p) % p;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let m = poly.len() - 1;
    if m == 1 {
        return true;
    }
    if m <= 3 {
        // A reducible quadratic or cubic has a linear factor, hence a root.
        for r in 0..p {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = (acc * r + c) % p;
            }
            if acc == 0 {
                return false;
            }
        }
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=m/2.
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut v = t;
            for _ in 0..d {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            if poly_rem(poly.to_vec(), &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest-coefficient-tuple monic irreducible of degree m over GF(p).
fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m as u32);
    for t in 0..count {
        // Tuple (c_0, ..., c_{m-1}) ordered lexicographically with c_0 major.
        let mut f = vec![0u64; m + 1];
        let mut v = t;
        for i in (0..m).rev() {
            f[i] = v % p;
            v /= p;
        }
        f[m] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist for every degree");
}

impl FieldSpec {
    /// Builds GF(p^m). When `modulus` is omitted the lexicographically
    /// smallest monic irreducible of degree m is selected, so the
    /// representation is reproducible.
    pub fn new(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q128 = (0..m).fold(1u128, |acc, _| acc.saturating_mul(p as u128));
        if q128 > MAX_Q as u128 {
            return Err(Error::FieldTooLarge(q128.min(u64::MAX as u128) as u64));
        }
        let q = q128 as u64;
        let modulus = match modulus {
            Some(md) => {
                if md.len() != m + 1 || md[m] != 1 || md.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus);
                }
                if !is_irreducible(&md, p) {
                    return Err(Error::BadModulus);
                }
                md
            }
            None => smallest_irreducible(p, m),
        };
        let base_q = if m.is_multiple_of(2) {
            Some(p.pow((m / 2) as u32))
        } else {
            None
        };
        Ok(FieldSpec(Arc::new(FieldData {
            p,
            m,
            modulus,
            q,
            base_q,
            primitive: OnceLock::new(),
            dlog: OnceLock::new(),
        })))
    }

    /// Prime field shorthand.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn m(&self) -> usize {
        self.0.m
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Base-field cardinality q when this spec doubles as GF(q^2).
    pub fn base_q(&self) -> Result<u64> {
        self.0.base_q.ok_or(Error::NotQuadratic)
    }

    pub fn is_quadratic(&self) -> bool {
        self.0.base_q.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.0.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Embeds an integer (possibly negative) through reduction mod p.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        let mut coeffs = vec![0; self.0.m];
        coeffs[0] = (n.rem_euclid(p)) as u64;
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// Element from a coefficient slice (low-to-high, reduced mod p).
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.m {
            return Err(Error::Parse(format!(
                "element needs at most {} coefficients, got {}",
                self.0.m,
                coeffs.len()
            )));
        }
        let p = self.0.p as i64;
        let mut c = vec![0u64; self.0.m];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v.rem_euclid(p) as u64;
        }
        Ok(FieldElement {
            spec: self.clone(),
            coeffs: c,
        })
    }

    /// All q elements in canonical enumeration order: coefficient tuples
    /// (c_0, ..., c_{m-1}) compared lexicographically with c_0 major.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.0.q;
        (0..q).map(move |t| self.element_by_index(t))
    }

    fn element_by_index(&self, t: u64) -> FieldElement {
        let p = self.0.p;
        let m = self.0.m;
        let mut coeffs = vec![0u64; m];
        let mut v = t;
        for i in (0..m).rev() {
            coeffs[i] = v % p;
            v /= p;
        }
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    fn index_of(&self, a: &FieldElement) -> u64 {
        let p = self.0.p;
        a.coeffs.iter().fold(0u64, |acc, &c| acc * p + c)
    }

    /// Enumeration-smallest element of multiplicative order q-1.
    pub fn primitive_element(&self) -> FieldElement {
        let coeffs = self.0.primitive.get_or_init(|| {
            let factors = prime_factors(self.0.q - 1);
            for a in self.elements() {
                if a.is_zero() {
                    continue;
                }
                if self.0.q == 2 {
                    return a.coeffs;
                }
                let primitive = factors
                    .iter()
                    .all(|&f| !a.pow((self.0.q as i64 - 1) / f as i64).unwrap().is_one());
                if primitive {
                    return a.coeffs;
                }
            }
            unreachable!("every finite field has a primitive element")
        });
        FieldElement {
            spec: self.clone(),
            coeffs: coeffs.clone(),
        }
    }

    /// Discrete log base the canonical primitive element; None for zero.
    pub fn dlog(&self, a: &FieldElement) -> Option<u64> {
        assert_eq!(self, &a.spec, "dlog: element from another spec");
        if a.is_zero() {
            return None;
        }
        if self.0.q <= DLOG_TABLE_MAX_Q {
            let table = self.0.dlog.get_or_init(|| {
                let g = self.primitive_element();
                let mut table = vec![0u32; self.0.q as usize];
                let mut x = self.one();
                for e in 0..self.0.q - 1 {
                    table[self.index_of(&x) as usize] = e as u32;
                    x = &x * &g;
                }
                Some(table)
            });
            return table.as_ref().map(|t| t[self.index_of(a) as usize] as u64);
        }
        let g = self.primitive_element();
        let mut x = self.one();
        for e in 0..self.0.q - 1 {
            if &x == a {
                return Some(e);
            }
            x = &x * &g;
        }
        unreachable!("nonzero element must be a power of the primitive element")
    }

    /// Parses "GF(p)" or "GF(p^m;c0,c1,...,1)".
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad field spec: {s}")))?;
        if let Some((head, tail)) = inner.split_once(';') {
            let (p, m) = head
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("bad field spec: {s}")))?;
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            let m: usize = m.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            let coeffs: Vec<u64> = tail
                .split(',')
                .map(|c| c.trim().parse().map_err(|_| Error::Parse(s.into())))
                .collect::<Result<_>>()?;
            FieldSpec::new(p, m, Some(coeffs))
        } else if let Some((p, m)) = inner.split_once('^') {
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            let m: usize = m.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            FieldSpec::new(p, m, None)
        } else {
            let p: u64 = inner.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            FieldSpec::prime(p)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "GF({}^{};{})", self.0.p, self.0.m, coeffs.join(","))
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of a [`FieldSpec`], stored as a fully reduced coefficient
/// vector so every element has exactly one representation.
#[derive(Clone, Debug)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn assert_same_spec(&self, other: &FieldElement) {
        assert!(
            self.spec == other.spec,
            "field elements from different specs: {} vs {}",
            self.spec,
            other.spec
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_spec(other);
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_spec(other);
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_spec(other);
        let p = self.spec.p();
        let m = self.spec.m();
        if m == 1 {
            return FieldElement {
                spec: self.spec.clone(),
                coeffs: vec![(self.coeffs[0] * other.coeffs[0]) % p],
            };
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let modulus = self.spec.modulus();
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..m {
                prod[i - m + j] = (prod[i - m + j] + p * p - (c * modulus[j]) % p) % p;
            }
        }
        prod.truncate(m);
        FieldElement {
            spec: self.spec.clone(),
            coeffs: prod,
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.pow(self.spec.q() as i64 - 2)
    }

    /// Repeated-product power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e < 0 {
            if self.is_zero() {
                return Err(Error::NegativePowerOfZero);
            }
            return self.inv()?.pow(-e);
        }
        let mut result = self.spec.one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(result)
    }

    /// The conjugate a^q over the declared base subfield GF(q).
    pub fn conj(&self) -> Result<FieldElement> {
        let q = self.spec.base_q()?;
        self.pow(q as i64)
    }

    /// True when conjugation fixes the element (a in GF(q)).
    pub fn in_base_subfield(&self) -> Result<bool> {
        Ok(self.conj()? == *self)
    }

    /// Trace onto the base subfield: a + a^q.
    pub fn trace_to_base(&self) -> Result<FieldElement> {
        Ok(self.add(&self.conj()?))
    }

    /// Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self) -> Result<i32> {
        if self.spec.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if self.is_zero() {
            return Ok(0);
        }
        let e = self.pow((self.spec.q() as i64 - 1) / 2)?;
        Ok(if e.is_one() { 1 } else { -1 })
    }

    /// For nonzero r in the base subfield of GF(q^2), returns s with
    /// s^(q+1) = r; deterministically s = g^j for the smallest j >= 0 with
    /// (g^(q+1))^j = r, g the canonical primitive element.
    pub fn norm_preimage(&self) -> Result<FieldElement> {
        let q = self.spec.base_q()?;
        if self.is_zero() || !self.in_base_subfield()? {
            return Err(Error::NotInBaseSubfield);
        }
        let g = self.spec.primitive_element();
        if let Some(e) = self.spec.dlog(self) {
            // r = g^e with (q+1) | e for base-subfield r; j = e/(q+1).
            debug_assert_eq!(e % (q + 1), 0);
            return g.pow((e / (q + 1)) as i64);
        }
        let h = g.pow(q as i64 + 1)?;
        let mut x = self.spec.one();
        for j in 0..q {
            if &x == self {
                return g.pow(j as i64);
            }
            x = x.mul(&h);
        }
        unreachable!("norm map is onto the base subfield")
    }

    /// Parses "3" (prime field) or "poly:[c0,c1,...]" (extension).
    pub fn parse(spec: &FieldSpec, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("poly:[") {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("bad element: {s}")))?;
            let coeffs: Vec<i64> = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|c| c.trim().parse().map_err(|_| Error::Parse(s.into())))
                    .collect::<Result<_>>()?
            };
            if coeffs.len() != spec.m() {
                return Err(Error::Parse(format!(
                    "element of {spec} needs {} coefficients",
                    spec.m()
                )));
            }
            spec.element(&coeffs)
        } else {
            if spec.m() != 1 {
                return Err(Error::Parse(format!(
                    "extension field element must use poly:[...] form: {s}"
                )));
            }
            let v: i64 = s.parse().map_err(|_| Error::Parse(s.into()))?;
            spec.element(&[v])
        }
    }

    /// Optional "g^k" rendering against the canonical primitive element.
    pub fn display_power(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        match self.spec.dlog(self) {
            Some(0) => "1".into(),
            Some(e) => format!("g^{e}"),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.m() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "poly:[{}]", cs.join(","))
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $meth:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $meth(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$meth(self, rhs)
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $meth(self, rhs: FieldElement) -> FieldElement {
                FieldElement::$meth(&self, &rhs)
            }
        }
    };
}
impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, m: usize) -> FieldSpec {
        FieldSpec::new(p, m, None).unwrap()
    }

    #[test]
    fn make_field_selects_smallest_modulus() {
        assert_eq!(gf(5, 1).modulus(), &[0, 1]);
        // Enumerate all 9 monic quadratics over GF(3): x^2 + 1 is the first
        // with no root.
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        // Only irreducible monic quadratic over GF(2).
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
    }

    #[test]
    fn make_field_rejects_bad_input() {
        assert!(matches!(
            FieldSpec::new(6, 1, None),
            Err(Error::NotPrime(6))
        ));
        assert!(matches!(FieldSpec::new(5, 0, None), Err(Error::ZeroDegree)));
        // x^2 + 1 = (x+2)(x+3) over GF(5): reducible.
        assert!(matches!(
            FieldSpec::new(5, 2, Some(vec![1, 0, 1])),
            Err(Error::BadModulus)
        ));
        assert!(matches!(
            FieldSpec::new(2, 17, None),
            Err(Error::FieldTooLarge(_))
        ));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = gf(7, 1);
        assert_eq!(f7.from_int(2).mul(&f7.from_int(3)), f7.from_int(6));
        // 3 * 5 = 15 = 1 mod 7, checked exhaustively.
        let inv3 = (0..7)
            .map(|x| f7.from_int(x))
            .find(|x| f7.from_int(3).mul(x).is_one())
            .unwrap();
        assert_eq!(inv3, f7.from_int(5));
        assert_eq!(f7.from_int(3).inv().unwrap(), f7.from_int(5));
        assert_eq!(f7.from_int(3).pow(2).unwrap(), f7.from_int(2));
    }

    #[test]
    fn extension_arithmetic() {
        let f9 = gf(3, 2);
        let x = f9.element(&[0, 1]).unwrap();
        // x^2 = -1 = 2 under the modulus x^2 + 1.
        assert_eq!(x.mul(&x), f9.from_int(2));
        assert_eq!(x.pow(4).unwrap(), f9.one());
    }

    #[test]
    fn pow_edge_cases() {
        let f5 = gf(5, 1);
        assert_eq!(f5.from_int(2).pow(4).unwrap(), f5.one());
        assert_eq!(f5.from_int(0).pow(0).unwrap(), f5.one());
        assert!(matches!(f5.zero().pow(-1), Err(Error::NegativePowerOfZero)));
        let f9 = gf(3, 2);
        for g in f9.elements().filter(|g| !g.is_zero()) {
            assert!(g.pow(8).unwrap().is_one());
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(gf(5, 1).primitive_element(), gf(5, 1).from_int(2));
        assert_eq!(gf(7, 1).primitive_element(), gf(7, 1).from_int(3));
        // x has order 4 in GF(9), so the first primitive element is x + 1.
        let f9 = gf(3, 2);
        assert_eq!(f9.primitive_element(), f9.element(&[1, 1]).unwrap());
    }

    #[test]
    fn primitive_element_enumerates_all_nonzero() {
        for spec in [gf(5, 1), gf(7, 1), gf(2, 2), gf(3, 2), gf(2, 4)] {
            let g = spec.primitive_element();
            let mut seen = std::collections::HashSet::new();
            for i in 0..spec.q() as i64 - 1 {
                seen.insert(g.pow(i).unwrap().coeffs().to_vec());
            }
            assert_eq!(seen.len() as u64, spec.q() - 1);
        }
    }

    #[test]
    fn conjugation() {
        let f4 = gf(2, 2);
        let alpha = f4.element(&[0, 1]).unwrap();
        // alpha^2 = alpha + 1 mod x^2 + x + 1.
        assert_eq!(alpha.conj().unwrap(), f4.element(&[1, 1]).unwrap());
        let f9 = gf(3, 2);
        let x = f9.element(&[0, 1]).unwrap();
        assert_eq!(x.conj().unwrap(), f9.element(&[0, 2]).unwrap());
        // Base subfield elements are exactly the fixed points.
        let fixed = f9.elements().filter(|a| a.conj().unwrap() == *a).count() as u64;
        assert_eq!(fixed, f9.base_q().unwrap());
        for a in f9.elements() {
            assert_eq!(a.conj().unwrap().conj().unwrap(), a);
        }
        assert!(matches!(gf(5, 1).one().conj(), Err(Error::NotQuadratic)));
    }

    #[test]
    fn quadratic_character_values() {
        let f7 = gf(7, 1);
        // 2^3 = 8 = 1 mod 7 and 3^3 = 27 = -1 mod 7.
        assert_eq!(f7.from_int(2).quadratic_character().unwrap(), 1);
        assert_eq!(f7.from_int(3).quadratic_character().unwrap(), -1);
        assert_eq!(f7.zero().quadratic_character().unwrap(), 0);
        assert!(matches!(
            gf(2, 2).one().quadratic_character(),
            Err(Error::EvenCharacteristic)
        ));
    }

    #[test]
    fn quadratic_character_multiplicative() {
        for spec in [gf(7, 1), gf(3, 2), gf(11, 1)] {
            let nonzero: Vec<_> = spec.elements().filter(|a| !a.is_zero()).collect();
            for a in &nonzero {
                for b in &nonzero {
                    let lhs = a.mul(b).quadratic_character().unwrap();
                    let rhs = a.quadratic_character().unwrap() * b.quadratic_character().unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn norm_preimage_rule() {
        let f9 = gf(3, 2);
        assert_eq!(f9.one().norm_preimage().unwrap(), f9.one());
        // g^{q+1} = g^4 = -1 = 2 for the canonical primitive g, so the
        // smallest-exponent preimage of 2 is g itself.
        let g = f9.primitive_element();
        assert_eq!(g.pow(4).unwrap(), f9.from_int(2));
        assert_eq!(f9.from_int(2).norm_preimage().unwrap(), g);
        let f4 = gf(2, 2);
        assert_eq!(f4.one().norm_preimage().unwrap(), f4.one());
        // Errors: zero and non-subfield arguments.
        assert!(f9.zero().norm_preimage().is_err());
        let x = f9.element(&[0, 1]).unwrap();
        assert!(x.norm_preimage().is_err());
    }

    #[test]
    fn norm_preimage_covers_base_subfield() {
        for spec in [gf(3, 2), gf(2, 2), gf(5, 2), gf(2, 4), gf(7, 2)] {
            let q = spec.base_q().unwrap() as i64;
            for r in spec.elements() {
                if r.is_zero() || !r.in_base_subfield().unwrap() {
                    continue;
                }
                let s = r.norm_preimage().unwrap();
                assert_eq!(s.pow(q + 1).unwrap(), r, "norm preimage in {spec}");
            }
        }
    }

    #[test]
    fn supplied_modulus_override() {
        // x^2 + x + 2 is irreducible over GF(3) (no roots) and differs from
        // the canonical x^2 + 1; arithmetic must follow the chosen modulus.
        let canon = gf(3, 2);
        let alt = FieldSpec::new(3, 2, Some(vec![2, 1, 1])).unwrap();
        assert_ne!(alt, canon);
        let x = alt.element(&[0, 1]).unwrap();
        // x^2 = -x - 2 = 2x + 1.
        assert_eq!(x.mul(&x), alt.element(&[1, 2]).unwrap());
        let s = alt.to_string();
        assert_eq!(s, "GF(3^2;2,1,1)");
        assert_eq!(FieldSpec::parse(&s).unwrap(), alt);
        // Field axioms hold in the alternative representation too.
        for a in alt.elements() {
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn concurrent_shared_reads() {
        let spec = std::sync::Arc::new(gf(3, 2));
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let spec = spec.clone();
                std::thread::spawn(move || {
                    let g = spec.primitive_element();
                    let mut acc = spec.one();
                    for _ in 0..100 {
                        acc = acc.mul(&g);
                    }
                    // dlog cache is built once and shared.
                    (spec.dlog(&acc).unwrap(), i)
                })
            })
            .collect();
        for h in handles {
            let (e, _) = h.join().unwrap();
            assert_eq!(e, 100 % 8);
        }
    }

    #[test]
    fn spec_string_round_trip() {
        for spec in [gf(5, 1), gf(3, 2), gf(2, 4)] {
            let s = spec.to_string();
            let back = FieldSpec::parse(&s).unwrap();
            assert_eq!(back, spec);
            assert_eq!(back.to_string(), s);
        }
        assert_eq!(gf(5, 1).to_string(), "GF(5)");
        assert_eq!(gf(3, 2).to_string(), "GF(3^2;1,0,1)");
        assert!(FieldSpec::parse("GF[5]").is_err());
    }

    #[test]
    fn element_string_round_trip() {
        for spec in [gf(7, 1), gf(3, 2)] {
            for a in spec.elements() {
                let s = a.to_string();
                assert_eq!(FieldElement::parse(&spec, &s).unwrap(), a);
            }
        }
        let f9 = gf(3, 2);
        assert_eq!(f9.element(&[1, 2]).unwrap().to_string(), "poly:[1,2]");
        assert_eq!(f9.primitive_element().display_power(), "g^1");
    }

    proptest! {
        #[test]
        fn field_axioms(pm in prop::sample::select(vec![(5u64, 1usize), (7, 1), (2, 2), (3, 2), (2, 4), (13, 1)]),
                        ai in 0u64.., bi in 0u64.., ci in 0u64..) {
            let spec = FieldSpec::new(pm.0, pm.1, None).unwrap();
            let els: Vec<_> = spec.elements().collect();
            let q = els.len() as u64;
            let a = &els[(ai % q) as usize];
            let b = &els[(bi % q) as usize];
            let c = &els[(ci % q) as usize];
            // Associativity, commutativity, distributivity.
            prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
            prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
            prop_assert_eq!(a.add(b), b.add(a));
            prop_assert_eq!(a.mul(b), b.mul(a));
            prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
            // Inverses.
            prop_assert!(a.add(&a.neg()).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn frobenius_is_a_field_automorphism(pm in prop::sample::select(vec![(2u64, 2usize), (3, 2), (5, 2), (2, 4)]),
                                             ai in 0u64.., bi in 0u64..) {
            let spec = FieldSpec::new(pm.0, pm.1, None).unwrap();
            let els: Vec<_> = spec.elements().collect();
            let q = els.len() as u64;
            let a = &els[(ai % q) as usize];
            let b = &els[(bi % q) as usize];
            prop_assert_eq!(a.add(b).conj().unwrap(), a.conj().unwrap().add(&b.conj().unwrap()));
            prop_assert_eq!(a.mul(b).conj().unwrap(), a.conj().unwrap().mul(&b.conj().unwrap()));
            prop_assert_eq!(a.conj().unwrap().conj().unwrap(), a.clone());
        }
    }
}
