//! Golden parameter tables: fixed constituent codes mixed through the
//! certified defining matrices must reproduce exact [[n, k, >=d]]_q rows.
//! Every distance entering a formula is recomputed by enumeration first, so
//! the frozen expectations are self-checking.

use mpqc_core::construct::{explicit_family, family_parameter, u_qk, Form};
use mpqc_core::lincode::{DualKind, LinearCode};
use mpqc_core::matrix::DEFAULT_ENUM_CAP;
use mpqc_core::quantum::pipeline;
use mpqc_core::{FMatrix, FieldSpec};

fn gf(p: u64, m: usize) -> FieldSpec {
    FieldSpec::new(p, m, None).unwrap()
}

fn code(spec: &FieldSpec, rows: &[&[i64]]) -> LinearCode {
    LinearCode::new(FMatrix::from_ints(spec, rows)).unwrap()
}

/// [n, 1] code spanned by a single Hermitian-self-dual vector (1, s) with
/// s^(q+1) = -1; minimum distance 2.
fn hermitian_self_dual_pair(spec: &FieldSpec) -> LinearCode {
    let s = spec.from_int(-1).norm_preimage().unwrap();
    let gen = FMatrix::from_rows(spec, vec![vec![spec.one(), s]]).unwrap();
    let c = LinearCode::new(gen).unwrap();
    assert!(c.is_dual_containing(DualKind::Hermitian).unwrap());
    assert_eq!(c.min_distance(DEFAULT_ENUM_CAP).unwrap(), 2);
    c
}

#[test]
fn gf5_two_constituents_row() {
    // Defining matrix: the certified 2x2 NSC quasi-orthogonal golden value.
    let f5 = gf(5, 1);
    let la = FMatrix::from_ints(&f5, &[&[2, 3], &[4, 4]]);
    let full = LinearCode::full_space(&f5, 4);
    let selfdual = code(&f5, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]);
    assert_eq!(selfdual.min_distance(DEFAULT_ENUM_CAP).unwrap(), 2);
    let (_, params, cert) =
        pipeline(&[full, selfdual], &la, Form::Euclidean, DEFAULT_ENUM_CAP).unwrap();
    // d = min(2*d_1, d_2) = min(2, 2) = 2.
    assert_eq!(params.display(), "[[8, 4, >=2]]_5");
    assert_eq!(cert.exact_d, Some(2));
    println!("GOLDEN GF(5)  k=2: {}", params.display());
}

#[test]
fn gf7_three_constituents_row() {
    // Defining matrix: the certified 3x3 NSC quasi-orthogonal golden value.
    let f7 = gf(7, 1);
    let la = FMatrix::from_ints(&f7, &[&[1, 3, 4], &[2, 0, 3], &[3, 4, 5]]);
    // (1,1,1,2) is isotropic over GF(7) with no zero coordinate, so its
    // kernel is a [4,3,2] dual-containing code.
    let iso = code(&f7, &[&[1, 1, 1, 2]]);
    let c3 = iso.dual();
    assert!(c3.is_dual_containing(DualKind::Euclidean).unwrap());
    let d3 = c3.min_distance(DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(d3, 2);
    let full = LinearCode::full_space(&f7, 4);
    let (_, params, _) = pipeline(
        &[full.clone(), full, c3],
        &la,
        Form::Euclidean,
        DEFAULT_ENUM_CAP,
    )
    .unwrap();
    // d = min(3*1, 2*1, d_3) = min(3, 2, d_3).
    assert_eq!(params.d_lower, 2.min(d3));
    assert_eq!((params.n, params.k_dim, params.base_q), (12, 10, 7));
    assert_eq!(params.display(), "[[12, 10, >=2]]_7");
    println!("GOLDEN GF(7)  k=3: {}", params.display());
}

#[test]
fn gf9_closed_family_row() {
    // 2x2 closed-form NSC quasi-unitary defining matrix over GF(9).
    let f9 = gf(3, 2);
    let a = family_parameter(&f9, 2).unwrap();
    let cert = explicit_family(2, &a).unwrap();
    let full = LinearCode::full_space(&f9, 2);
    let sd = hermitian_self_dual_pair(&f9);
    let (_, params, _) = pipeline(
        &[full, sd],
        &cert.result,
        Form::Hermitian,
        DEFAULT_ENUM_CAP,
    )
    .unwrap();
    // d = min(2*1, 2) = 2; dimensions 2(2+1) - 4 = 2 over the base field.
    assert_eq!(params.display(), "[[4, 2, >=2]]_3");
    println!("GOLDEN GF(9)  k=2: {}", params.display());
}

#[test]
fn gf49_closed_family_rows() {
    // 3x3 and 4x4 closed-form NSC quasi-unitary defining matrices over
    // GF(49), feeding quantum codes over GF(7).
    let f49 = gf(7, 2);
    let full = LinearCode::full_space(&f49, 2);
    let sd = hermitian_self_dual_pair(&f49);

    let c3 = explicit_family(3, &family_parameter(&f49, 3).unwrap()).unwrap();
    let (_, params, _) = pipeline(
        &[full.clone(), full.clone(), sd.clone()],
        &c3.result,
        Form::Hermitian,
        DEFAULT_ENUM_CAP,
    )
    .unwrap();
    // d = min(3*1, 2*1, 2) = 2; k = 2(2+2+1) - 6 = 4.
    assert_eq!(params.display(), "[[6, 4, >=2]]_7");
    println!("GOLDEN GF(49) k=3: {}", params.display());

    let c4 = explicit_family(4, &family_parameter(&f49, 4).unwrap()).unwrap();
    let (_, params, _) = pipeline(
        &[full.clone(), full, sd.clone(), sd],
        &c4.result,
        Form::Hermitian,
        DEFAULT_ENUM_CAP,
    )
    .unwrap();
    // d = min(4*1, 3*1, 2*2, 2) = 2; k = 2(2+2+1+1) - 8 = 4.
    assert_eq!(params.display(), "[[8, 4, >=2]]_7");
    println!("GOLDEN GF(49) k=4: {}", params.display());
}

#[test]
fn gf9_roots_of_unity_row() {
    // The 8x8 roots-of-unity defining matrix over GF(9) with the swap
    // pattern sigma = (1)(3)(5)(7)(2 6)(4 8).
    let f9 = gf(3, 2);
    let (u, sigma) = u_qk(&f9, 8).unwrap();
    assert_eq!(sigma.one_based_image(), vec![1, 6, 3, 8, 5, 2, 7, 4]);
    let sd = hermitian_self_dual_pair(&f9);
    // Fixed points take the self-dual pair code; each 2-cycle takes a
    // one-dimensional code and its Hermitian dual.
    let e1 = code(&f9, &[&[1, 0]]);
    let e2 = e1.hermitian_dual().unwrap();
    let codes = vec![
        sd.clone(),  // 1 fixed
        e1.clone(),  // 2 <-> 6
        sd.clone(),  // 3 fixed
        e1.clone(),  // 4 <-> 8
        sd.clone(),  // 5 fixed
        e2.clone(),  // 6
        sd.clone(),  // 7 fixed
        e2.clone(),  // 8
    ];
    let (_, params, cert) = pipeline(&codes, &u, Form::Hermitian, DEFAULT_ENUM_CAP).unwrap();
    assert!(cert.dual_containing);
    assert_eq!(cert.defining_nsc, Some(true));
    // All eight dimensions are 1, so k = 2*8 - 16 = 0; the profile is
    // (8, ..., 1) and the weakest slot is the last: d = min_i (9-i)*d_i = 1.
    assert_eq!((params.n, params.k_dim, params.base_q), (16, 0, 3));
    assert_eq!(params.d_lower, 1);
    println!("GOLDEN GF(9)  k=8: {}", params.display());
}
