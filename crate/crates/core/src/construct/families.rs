//! Explicit matrix families with monomial or diagonal Grams: the cyclic
//! Vandermonde A_gamma over GF(q), the roots-of-unity U_{q,k} and the
//! unitary Vandermonde over GF(q^2), and the closed-form 2x2 / 3x3 / 4x4
//! NSC quasi-unitary families with their parameter membership sets.

use super::{CertKind, CongruenceCertificate, Flavor, Form};
use crate::ffield::{FieldElement, FieldSpec};
use crate::matrix::{FMatrix, Permutation};
use crate::{Error, Result};

/// The k x k matrix with entry (r, j) = (gamma * beta_{j-1})^(r-1), where
/// beta_i = alpha^(i(q-1)/k) runs over the order-k cyclic subgroup. Its Gram
/// is the monomial matrix diag(k, gamma^k k, ..., gamma^k k) * P_tau with
/// tau fixing 1 and reversing 2..k.
pub fn a_gamma(spec: &FieldSpec, k: usize, gamma: &FieldElement) -> Result<FMatrix> {
    let q = spec.q();
    if gamma.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    if gamma.is_zero() {
        return Err(Error::Precondition("gamma must be nonzero".into()));
    }
    if k == 0 || k as u64 >= q - 1 || !(q - 1).is_multiple_of(k as u64) {
        return Err(Error::Divisibility(format!(
            "need 1 <= k < q-1 with k | q-1, got k={k}, q={q}"
        )));
    }
    if (k as u64).is_multiple_of(spec.p()) {
        return Err(Error::Divisibility(format!(
            "k = {k} vanishes in characteristic {}",
            spec.p()
        )));
    }
    let alpha = spec.primitive_element();
    let step = (q as i64 - 1) / k as i64;
    let nodes: Vec<FieldElement> = (0..k)
        .map(|i| alpha.pow(step * i as i64).map(|b| gamma.mul(&b)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(k);
    let mut current = vec![spec.one(); k];
    for _ in 0..k {
        rows.push(current.clone());
        current = current.iter().zip(&nodes).map(|(c, x)| c.mul(x)).collect();
    }
    FMatrix::from_rows(spec, rows)
}

/// The permutation paired with `a_gamma`: 1 -> 1 and j -> k+2-j for j >= 2.
pub fn a_gamma_tau(k: usize) -> Permutation {
    let image: Vec<usize> = (0..k).map(|j| if j == 0 { 0 } else { k - j }).collect();
    Permutation::from_image(image).expect("involution on 1..k")
}

/// Roots-of-unity Vandermonde over GF(q^2) for k | q^2-1 with k not
/// dividing q+1: U U^dagger = k * P_sigma where sigma sends s+1 to j_s+1,
/// j_s the unique solution of s + q x = 0 mod k. The identity is verified
/// before returning.
pub fn u_qk(spec: &FieldSpec, k: usize) -> Result<(FMatrix, Permutation)> {
    let q = spec.base_q()?;
    let q2 = spec.q();
    if k == 0 || !(q2 - 1).is_multiple_of(k as u64) {
        return Err(Error::Divisibility(format!(
            "k = {k} must divide q^2-1 = {}",
            q2 - 1
        )));
    }
    if (q + 1) % k as u64 == 0 {
        return Err(Error::Divisibility(format!(
            "k = {k} must not divide q+1 = {}",
            q + 1
        )));
    }
    if (k as u64).is_multiple_of(spec.p()) {
        return Err(Error::Divisibility(format!(
            "k = {k} vanishes in characteristic {}",
            spec.p()
        )));
    }
    let matrix = roots_of_unity_vandermonde(spec, k)?;
    let image: Vec<usize> = (0..k)
        .map(|s| {
            (0..k as u64)
                .find(|&x| (s as u64 + q * x).is_multiple_of(k as u64))
                .expect("q is invertible mod k") as usize
        })
        .collect();
    let sigma = Permutation::from_image(image)?;
    let gram = matrix.mul(&matrix.conj_transpose()?)?;
    let expected = sigma.matrix(spec).scale(&spec.from_int(k as i64));
    if gram != expected {
        return Err(Error::CertificateInvalid(
            "U_{q,k} gram is not k * P_sigma".into(),
        ));
    }
    Ok((matrix, sigma))
}

/// For k | q+1 the same Vandermonde is unitary up to the scalar k:
/// M M^dagger = k I, and M is NSC. Both facts are verified.
pub fn unitary_vandermonde(spec: &FieldSpec, k: usize) -> Result<FMatrix> {
    let q = spec.base_q()?;
    if k == 0 || (q + 1) % k as u64 != 0 {
        return Err(Error::Divisibility(format!(
            "k = {k} must divide q+1 = {}",
            q + 1
        )));
    }
    if (k as u64).is_multiple_of(spec.p()) {
        return Err(Error::Divisibility(format!(
            "k = {k} vanishes in characteristic {}",
            spec.p()
        )));
    }
    let matrix = roots_of_unity_vandermonde(spec, k)?;
    let gram = matrix.mul(&matrix.conj_transpose()?)?;
    let expected = FMatrix::identity(spec, k).scale(&spec.from_int(k as i64));
    if gram != expected {
        return Err(Error::CertificateInvalid("gram is not k * I".into()));
    }
    Ok(matrix)
}

fn roots_of_unity_vandermonde(spec: &FieldSpec, k: usize) -> Result<FMatrix> {
    let q2 = spec.q();
    let alpha = spec.primitive_element();
    let step = (q2 as i64 - 1) / k as i64;
    let nodes: Vec<FieldElement> = (0..k)
        .map(|i| alpha.pow(step * i as i64))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(k);
    let mut current = vec![spec.one(); k];
    for _ in 0..k {
        rows.push(current.clone());
        current = current.iter().zip(&nodes).map(|(c, x)| c.mul(x)).collect();
    }
    FMatrix::from_rows(spec, rows)
}

/// Defining inequations of the parameter sets R_1, R_2, R_3 for the
/// explicit 2x2 / 3x3 / 4x4 families. Returns the first failed condition.
pub fn family_membership(order: u8, a: &FieldElement) -> Result<()> {
    let spec = a.spec().clone();
    let q = spec.base_q()? as i64;
    let fail = |cond: &str| Err(Error::Membership(format!("R_{}: {cond}", order - 1)));
    let one = spec.one();
    if a.is_zero() {
        return fail("x != 0");
    }
    let norm = a.pow(q + 1)?;
    match order {
        2 => {
            if a.mul(a) == one {
                return fail("x^2 != 1");
            }
            if norm == one.neg() {
                return fail("x^(q+1) != -1");
            }
        }
        3 => {
            if a == &one {
                return fail("x != 1");
            }
            if norm.add(&spec.from_int(2)).is_zero() {
                return fail("x^(q+1) + 2 != 0");
            }
            let expr = norm.sub(&a.conj()?).sub(a).add(&spec.from_int(3));
            if expr.is_zero() {
                return fail("x^(q+1) - x^q - x + 3 != 0");
            }
        }
        4 => {
            if q < 5 {
                return Err(Error::Precondition("order-4 family needs q >= 5".into()));
            }
            if a == &one || a == &one.neg() || a == &spec.from_int(3) {
                return fail("x not in {1, -1, 3}");
            }
            if norm.add(&spec.from_int(3)).is_zero() {
                return fail("x^(q+1) + 3 != 0");
            }
            if spec.from_int(2).mul(&norm).add(&spec.from_int(9)).is_zero() {
                return fail("2x^(q+1) + 9 != 0");
            }
            let three = spec.from_int(3);
            let expr = norm
                .sub(&three.mul(&a.conj()?))
                .sub(&three.mul(a))
                .add(&spec.from_int(15));
            if expr.is_zero() {
                return fail("x^(q+1) - 3x^q - 3x + 15 != 0");
            }
        }
        _ => return Err(Error::Precondition("order must be 2, 3 or 4".into())),
    }
    Ok(())
}

/// All members of the order's parameter set, in enumeration order.
pub fn family_set_members(spec: &FieldSpec, order: u8) -> Result<Vec<FieldElement>> {
    spec.base_q()?;
    let mut out = Vec::new();
    for a in spec.elements() {
        match family_membership(order, &a) {
            Ok(()) => out.push(a),
            Err(Error::Membership(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// The enumeration-smallest member of the parameter set.
pub fn family_parameter(spec: &FieldSpec, order: u8) -> Result<FieldElement> {
    family_set_members(spec, order)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Membership(format!("parameter set for order {order} is empty")))
}

/// Builds the closed-form NSC quasi-unitary family of the given order with
/// parameter `a`, returning a fully verified certificate. The transform is
/// the closed-form lower unitriangular matrix and the Gram diagonal is the
/// closed-form evaluation; both are checked against the actual product.
pub fn explicit_family(order: u8, a: &FieldElement) -> Result<CongruenceCertificate> {
    family_membership(order, a)?;
    let spec = a.spec().clone();
    let q = spec.base_q()? as i64;
    let one = spec.one();
    let zero = spec.zero();
    let aq = a.pow(q)?;
    let norm = aq.mul(a);
    let (source, transform, diag) = match order {
        2 => {
            let source = FMatrix::from_rows(
                &spec,
                vec![vec![one.clone(), a.clone()], vec![a.clone(), one.clone()]],
            )?;
            let denom = one.add(&norm).inv()?;
            let l21 = aq.add(a).mul(&denom).neg();
            let transform = FMatrix::from_rows(
                &spec,
                vec![vec![one.clone(), zero.clone()], vec![l21, one.clone()]],
            )?;
            let d2 = one.sub(&a.mul(a)).mul(&one.sub(&aq.mul(&aq))).mul(&denom);
            (source, transform, vec![one.add(&norm), d2])
        }
        3 => {
            let source = FMatrix::from_rows(
                &spec,
                vec![
                    vec![one.clone(), one.clone(), a.clone()],
                    vec![one.clone(), zero.clone(), one.clone()],
                    vec![zero.clone(), zero.clone(), one.clone()],
                ],
            )?;
            let s = norm.add(&spec.from_int(2));
            let s_inv = s.inv()?;
            let p1 = norm.sub(&aq).sub(a).add(&spec.from_int(3)).inv()?;
            let transform = FMatrix::from_rows(
                &spec,
                vec![
                    vec![one.clone(), zero.clone(), zero.clone()],
                    vec![aq.add(&one).mul(&s_inv).neg(), one.clone(), zero.clone()],
                    vec![
                        one.sub(&aq).mul(&p1),
                        aq.sub(&spec.from_int(2)).mul(&p1),
                        one.clone(),
                    ],
                ],
            )?;
            let diag = vec![s.clone(), s_inv.mul(&p1.inv()?), p1];
            (source, transform, diag)
        }
        4 => {
            let three = spec.from_int(3);
            let source = FMatrix::from_rows(
                &spec,
                vec![
                    vec![one.clone(), one.clone(), one.clone(), a.clone()],
                    vec![one.clone(), zero.clone(), one.neg(), one.clone()],
                    vec![zero.clone(), zero.clone(), one.clone(), one.clone()],
                    vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
                ],
            )?;
            let p2 = norm
                .sub(&three.mul(&aq))
                .sub(&three.mul(a))
                .add(&spec.from_int(15))
                .inv()?;
            let p3 = spec.from_int(2).mul(&norm).add(&spec.from_int(9)).inv()?;
            let p4 = norm.add(&three).inv()?;
            let p5 = aq.add(&one);
            let p35 = p3.mul(&p5);
            let transform = FMatrix::from_rows(
                &spec,
                vec![
                    vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
                    vec![aq.mul(&p4).neg(), one.clone(), zero.clone(), zero.clone()],
                    vec![
                        three.mul(&p35).neg(),
                        a.mul(&p35),
                        one.clone(),
                        zero.clone(),
                    ],
                    vec![
                        three.sub(&aq).mul(&p2),
                        aq.sub(&spec.from_int(5)).mul(&p2),
                        spec.from_int(2).mul(&aq).sub(&spec.from_int(9)).mul(&p2),
                        one.clone(),
                    ],
                ],
            )?;
            let diag = vec![p4.inv()?, p4.mul(&p3.inv()?), p3.mul(&p2.inv()?), p2];
            (source, transform, diag)
        }
        _ => return Err(Error::Precondition("order must be 2, 3 or 4".into())),
    };
    let result = transform.mul(&source)?;
    let cert = CongruenceCertificate {
        kind: CertKind::QuasiGram,
        form: Form::Hermitian,
        flavor: Flavor::LowerUnitriangular,
        transform,
        result: result.clone(),
        gram_diagonal: diag,
        nsc_verified: result.is_nsc()?.is_nsc(),
        degenerate: false,
    };
    cert.verify()?;
    if !cert.nsc_verified {
        return Err(Error::CertificateInvalid(
            "explicit family result is not NSC".into(),
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DEFAULT_ENUM_CAP;

    fn gf(p: u64, m: usize) -> FieldSpec {
        FieldSpec::new(p, m, None).unwrap()
    }

    #[test]
    fn a_gamma_worked_example() {
        let f7 = gf(7, 1);
        let a = a_gamma(&f7, 3, &f7.one()).unwrap();
        assert_eq!(
            a,
            FMatrix::from_ints(&f7, &[&[1, 1, 1], &[1, 2, 4], &[1, 4, 2]])
        );
        let gram = a.mul(&a.transpose()).unwrap();
        assert_eq!(
            gram,
            FMatrix::from_ints(&f7, &[&[3, 0, 0], &[0, 0, 3], &[0, 3, 0]])
        );
        let parts = gram.monomial_decompose().unwrap();
        assert_eq!(parts.perm.one_based_image(), vec![1, 3, 2]);
        assert_eq!(parts.diag, vec![f7.from_int(3); 3]);
    }

    #[test]
    fn a_gamma_gram_structure_across_parameters() {
        for (q, k, g) in [(7u64, 3usize, 1i64), (13, 3, 2), (13, 4, 1), (11, 5, 1)] {
            let spec = gf(q, 1);
            let gamma = spec.from_int(g);
            let a = a_gamma(&spec, k, &gamma).unwrap();
            let gram = a.mul(&a.transpose()).unwrap();
            let parts = gram.monomial_decompose().unwrap();
            assert_eq!(parts.perm, a_gamma_tau(k), "tau for q={q}, k={k}");
            let kf = spec.from_int(k as i64);
            let gk = gamma.pow(k as i64).unwrap();
            assert_eq!(parts.diag[0], kf);
            for d in &parts.diag[1..] {
                assert_eq!(d, &gk.mul(&kf));
            }
            // a_gamma is the generator of a GRS code on the scaled subgroup,
            // so it is NSC.
            assert!(a.is_nsc().unwrap().is_nsc());
        }
    }

    #[test]
    fn a_gamma_k1_and_errors() {
        let f7 = gf(7, 1);
        let a = a_gamma(&f7, 1, &f7.one()).unwrap();
        assert_eq!(a, FMatrix::identity(&f7, 1));
        assert!(a_gamma(&f7, 4, &f7.one()).is_err()); // 4 does not divide 6
        assert!(a_gamma(&f7, 6, &f7.one()).is_err()); // k = q - 1 excluded
        assert!(a_gamma(&f7, 3, &f7.zero()).is_err());
        // k = p would vanish in characteristic p.
        let f13 = gf(13, 1);
        assert!(a_gamma(&f13, 13, &f13.one()).is_err());
    }

    #[test]
    fn u_qk_38_permutation() {
        let f9 = gf(3, 2);
        let (u, sigma) = u_qk(&f9, 8).unwrap();
        // j_s = 5s mod 8 solves s + 3x = 0 mod 8.
        assert_eq!(sigma.one_based_image(), vec![1, 6, 3, 8, 5, 2, 7, 4]);
        let gram = u.mul(&u.conj_transpose().unwrap()).unwrap();
        let parts = gram.monomial_decompose().unwrap();
        assert_eq!(parts.perm, sigma);
        for d in &parts.diag {
            assert_eq!(d, &f9.from_int(8));
        }
        // k | q+1 must be rejected here.
        assert!(matches!(u_qk(&f9, 4), Err(crate::Error::Divisibility(_))));
        assert!(matches!(u_qk(&f9, 2), Err(crate::Error::Divisibility(_))));
        // k = 3 vanishes in characteristic 3.
        assert!(matches!(u_qk(&f9, 3), Err(crate::Error::Divisibility(_))));
    }

    #[test]
    fn u_qk_54_gram() {
        // q = 5: k = 4 divides q^2 - 1 = 24 but not q + 1 = 6.
        let f25 = gf(5, 2);
        let (u, sigma) = u_qk(&f25, 4).unwrap();
        let gram = u.mul(&u.conj_transpose().unwrap()).unwrap();
        assert_eq!(gram, sigma.matrix(&f25).scale(&f25.from_int(4)));
        // sigma solves s + 5x = 0 mod 4, i.e. x = 3s mod 4.
        assert_eq!(sigma.one_based_image(), vec![1, 4, 3, 2]);
    }

    #[test]
    fn unitary_vandermonde_cases() {
        let f4 = gf(2, 2);
        let m = unitary_vandermonde(&f4, 3).unwrap();
        let alpha = f4.primitive_element();
        let a2 = alpha.mul(&alpha);
        assert_eq!(
            m,
            FMatrix::from_rows(
                &f4,
                vec![
                    vec![f4.one(), f4.one(), f4.one()],
                    vec![f4.one(), alpha.clone(), a2.clone()],
                    vec![f4.one(), a2, alpha],
                ]
            )
            .unwrap()
        );
        // 3 = 1 in characteristic 2, so M M^dag = I here.
        let gram = m.mul(&m.conj_transpose().unwrap()).unwrap();
        assert_eq!(gram, FMatrix::identity(&f4, 3));
        assert!(m.is_nsc().unwrap().is_nsc());

        let f25 = gf(5, 2);
        let m = unitary_vandermonde(&f25, 3).unwrap();
        let gram = m.mul(&m.conj_transpose().unwrap()).unwrap();
        assert_eq!(gram, FMatrix::identity(&f25, 3).scale(&f25.from_int(3)));
        assert!(m.is_nsc().unwrap().is_nsc());

        let k1 = unitary_vandermonde(&f25, 1).unwrap();
        assert_eq!(k1, FMatrix::identity(&f25, 1));
        assert!(unitary_vandermonde(&f25, 4).is_err());
    }

    #[test]
    fn family_membership_sets() {
        let f9 = gf(3, 2);
        let g = f9.primitive_element();
        // g^2 satisfies both order-2 inequations: (g^2)^2 = -1 != 1 and
        // (g^2)^4 = 1 != -1.
        assert!(family_membership(2, &g.mul(&g)).is_ok());
        assert!(family_membership(2, &f9.one()).is_err());
        assert!(family_membership(2, &f9.zero()).is_err());
        // The order-3 set over GF(9) equals the step (c) set: x^4 != 1 and
        // x^4 - x^3 - x != 0.
        let members = family_set_members(&f9, 3).unwrap();
        let expected: Vec<_> = f9
            .elements()
            .filter(|x| {
                !x.is_zero()
                    && !x.pow(4).unwrap().is_one()
                    && !x.pow(4).unwrap().sub(&x.pow(3).unwrap()).sub(x).is_zero()
            })
            .collect();
        assert_eq!(members, expected);
        assert!(!members.is_empty());
        // Order 4 needs q >= 5.
        assert!(matches!(
            family_membership(4, &g),
            Err(crate::Error::Precondition(_))
        ));
    }

    #[test]
    fn explicit_family_order2_gf9() {
        let f9 = gf(3, 2);
        let g = f9.primitive_element();
        let a = g.mul(&g);
        let cert = explicit_family(2, &a).unwrap();
        assert!(cert.nsc_verified);
        // diag(1 + a^4, (1 - a^2)(1 - a^6)(1 + a^4)^{-1}).
        let norm = a.pow(4).unwrap();
        let d1 = f9.one().add(&norm);
        let d2 = f9
            .one()
            .sub(&a.mul(&a))
            .mul(&f9.one().sub(&a.pow(6).unwrap()))
            .mul(&d1.inv().unwrap());
        assert_eq!(cert.gram_diagonal, vec![d1, d2]);
        cert.verify().unwrap();
    }

    #[test]
    fn explicit_family_all_members_all_orders() {
        // Every member of every parameter set yields a verified NSC
        // quasi-unitary certificate.
        for (p, m, orders) in [(3u64, 2usize, vec![2u8, 3]), (5, 2, vec![2, 3, 4])] {
            let spec = gf(p, m);
            for order in orders {
                let members = family_set_members(&spec, order).unwrap();
                assert!(
                    !members.is_empty(),
                    "empty set for order {order} over {spec}"
                );
                for a in members {
                    let cert = explicit_family(order, &a).unwrap();
                    assert!(cert.nsc_verified);
                    cert.verify().unwrap();
                }
            }
        }
    }

    #[test]
    fn family_parameter_is_enumeration_smallest() {
        let f9 = gf(3, 2);
        let a = family_parameter(&f9, 2).unwrap();
        let first = f9
            .elements()
            .find(|x| family_membership(2, x).is_ok())
            .unwrap();
        assert_eq!(a, first);
    }

    #[test]
    fn explicit_family_distance_profile() {
        // NSC means the distance profile is exactly (k, ..., 1).
        let f9 = gf(3, 2);
        let a = family_parameter(&f9, 3).unwrap();
        let cert = explicit_family(3, &a).unwrap();
        assert_eq!(
            cert.result.di_profile_bruteforce(DEFAULT_ENUM_CAP).unwrap(),
            vec![3, 2, 1]
        );
    }
}
