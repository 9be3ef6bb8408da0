use omatrix_core::exact::{embed_pair, frac, int, parse_scalar, render, HSeries, Matrix, Scalar, Slot, Tensor};
use omatrix_core::Error;
use proptest::prelude::*;

#[test]
fn parse_and_render() {
    assert_eq!(parse_scalar("3").unwrap(), int(3));
    assert_eq!(parse_scalar(" -6/4 ").unwrap(), frac(-3, 2));
    assert_eq!(parse_scalar("4/-8").unwrap(), frac(-1, 2));
    assert_eq!(render(&frac(6, -4)), "-3/2");
    assert_eq!(render(&frac(8, 4)), "2");
    assert!(matches!(parse_scalar("1/0"), Err(Error::ZeroDenominator)));
    assert!(matches!(parse_scalar("x"), Err(Error::Parse(_))));
    assert!(matches!(parse_scalar("1.5"), Err(Error::Parse(_))));
    let big = "123456789012345678901234567891/2";
    assert_eq!(render(&parse_scalar(big).unwrap()), big);
}

#[test]
fn tensor_product_examples() {
    let one = Tensor::from_entries(&[1, 1], [(vec![0, 0], int(1))]).unwrap();
    let t = Tensor::from_entries(&[2, 3], [(vec![0, 2], frac(1, 2)), (vec![1, 0], int(-4))]).unwrap();
    let ot = one.outer(&t);
    assert_eq!(ot.shape(), &[1, 1, 2, 3]);
    assert_eq!(ot.nnz(), 2);
    assert_eq!(ot.get(&[0, 0, 1, 0]), int(-4));

    let id = Matrix::identity(2);
    assert_eq!(id.kron(&id), Matrix::identity(4));

    let e1 = Tensor::from_entries(&[2], [(vec![0], int(1))]).unwrap();
    let e2 = Tensor::from_entries(&[2], [(vec![1], int(1))]).unwrap();
    let p = e1.outer(&e2);
    assert_eq!(p.rank(), 2);
    assert_eq!(p.iter().map(|(k, v)| (k.clone(), v.clone())).collect::<Vec<_>>(), vec![(vec![0, 1], int(1))]);
}

#[test]
fn tensor_never_stores_zeros() {
    let mut t = Tensor::zeros(&[2, 2]);
    t.add_at(&[0, 1], &int(3));
    t.add_at(&[0, 1], &int(-3));
    assert!(t.is_zero());
    t.set(&[1, 1], int(0));
    assert_eq!(t.nnz(), 0);
    assert!(Tensor::from_entries(&[2], [(vec![2], int(1))]).is_err());
    let a = Tensor::from_entries(&[2, 2], [(vec![1, 0], int(5)), (vec![0, 1], int(2))]).unwrap();
    let keys: Vec<Vec<usize>> = a.iter().map(|(k, _)| k.clone()).collect();
    assert_eq!(keys, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(a.permute_axes(&[1, 0]).unwrap().get(&[0, 1]), int(5));
    assert_eq!(a.witnesses(1), vec![(vec![0, 1], "2".to_string())]);
}

#[test]
fn commutator_examples() {
    let e12 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let e21 = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
    assert_eq!(e12.commutator(&e21).unwrap(), Matrix::from_ints(&[&[1, 0], &[0, -1]]));
    assert!(e12.commutator(&e12).unwrap().is_zero());
    assert!(Matrix::identity(2).commutator(&e21).unwrap().is_zero());
    assert!(e12.commutator(&Matrix::identity(3)).is_err());
}

#[test]
fn inverse_and_nullspace() {
    let m = Matrix::from_ints(&[&[2, 1], &[5, 3]]);
    let inv = m.inverse().unwrap();
    assert_eq!(inv, Matrix::from_ints(&[&[3, -1], &[-5, 2]]));
    let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
    assert!(matches!(s.inverse(), Err(Error::Singular)));
    assert_eq!(s.rank(), 1);
    let ns = s.nullspace();
    assert_eq!(ns.len(), 1);
    assert!(s.apply(&ns[0]).unwrap().iter().all(|x| *x == int(0)));
}

#[test]
fn embeddings_of_identity_are_identity() {
    for slot in [Slot::S12, Slot::S13, Slot::S23] {
        assert_eq!(embed_pair(&Matrix::identity(9), slot).unwrap(), Matrix::identity(27));
    }
    assert!(embed_pair(&Matrix::identity(5), Slot::S12).is_err());
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(arb_scalar(), n * n).prop_map(move |v| Matrix::from_vec(n, n, v).unwrap())
}

fn arb_series(n: usize) -> impl Strategy<Value = HSeries> {
    (arb_matrix(n), arb_matrix(n), arb_matrix(n)).prop_map(|(a, b, c)| HSeries::new(a, b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_render_roundtrip(x in arb_scalar()) {
        prop_assert_eq!(parse_scalar(&render(&x)).unwrap(), x);
    }

    #[test]
    fn scalars_are_reduced(n in -1000i64..1000, d in 1i64..1000) {
        let x = frac(n, d);
        let g = num_integer::gcd(x.numer().clone(), x.denom().clone());
        prop_assert!(g == 1.into() || n == 0);
        prop_assert!(*x.denom() > 0.into());
    }

    #[test]
    fn matrix_product_is_associative(a in arb_matrix(3), b in arb_matrix(3), c in arb_matrix(3)) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inverse_is_two_sided(a in arb_matrix(3)) {
        match a.inverse() {
            Ok(inv) => {
                prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3));
                prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(3));
            }
            Err(e) => {
                prop_assert!(matches!(e, Error::Singular));
                prop_assert!(a.rank() < 3);
            }
        }
    }

    #[test]
    fn kron_is_bilinear_and_multiplicative(a in arb_matrix(2), b in arb_matrix(2), c in arb_matrix(2), d in arb_matrix(2)) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_jacobi(a in arb_matrix(2), b in arb_matrix(2), c in arb_matrix(2)) {
        let br = |x: &Matrix, y: &Matrix| x.commutator(y).unwrap();
        let s = br(&br(&a, &b), &c).add(&br(&br(&b, &c), &a)).unwrap().add(&br(&br(&c, &a), &b)).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn tensor_roundtrip_and_transpose(a in arb_matrix(3)) {
        prop_assert_eq!(Matrix::from_tensor(&a.to_tensor()).unwrap(), a.clone());
        prop_assert_eq!(a.to_tensor().permute_axes(&[1, 0]).unwrap(), a.transpose().to_tensor());
    }

    #[test]
    fn series_product_is_associative(a in arb_series(2), b in arb_series(2), c in arb_series(2)) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        for k in 0..3 {
            prop_assert_eq!(l.coeff(k), r.coeff(k));
        }
    }

    #[test]
    fn series_truncates_at_h_cubed(a in arb_matrix(2), b in arb_matrix(2)) {
        let z = Matrix::zeros(2, 2);
        let x = HSeries::new(z.clone(), a.clone(), z.clone()).unwrap();
        let y = HSeries::new(z.clone(), b.clone(), z.clone()).unwrap();
        let p = x.mul(&y).unwrap();
        prop_assert_eq!(p.coeff(2), &a.mul(&b).unwrap());
        let q = p.mul(&x).unwrap();
        for k in 0..3 {
            prop_assert!(q.coeff(k).is_zero());
        }
    }
}
