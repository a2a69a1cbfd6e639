use supersmooth::local::{default_order, hilbert_function, smooth_test, truncated_quotient, Verdict};
use supersmooth::{parse_source, ClosedPoint, GenIndex, Parity, SuperDim};

fn load(text: &str) -> (supersmooth::Presentation, ClosedPoint) {
    let src = parse_source(text).unwrap();
    (src.presentation, src.point.unwrap())
}

#[test]
fn product_of_odd_coordinates_is_singular_everywhere() {
    let (x, _) = load("evens x y\nodds xi eta\nideal xi*eta\npoint 0 0\n");
    for p in [[0, 0], [1, -2], [3, 5]] {
        let v = smooth_test(&x, &ClosedPoint::from_ints(&p), 6).unwrap();
        let Verdict::NotSmooth(cert) = v.verdict else {
            panic!("expected NotSmooth at {p:?}");
        };
        assert_eq!(cert.witness_degree, Some(2));
        assert_eq!(
            cert.failed_generator,
            Some(GenIndex {
                parity: Parity::Even,
                index: 0
            })
        );
    }
    // Degree d is spanned by x^a y^b, x^a y^b ξ and x^a y^b η: 3d + 1.
    let ring = truncated_quotient(&x, &ClosedPoint::from_ints(&[0, 0]), 5).unwrap();
    let h: Vec<usize> = (0..=5).map(|d| hilbert_function(&ring, d).unwrap()).collect();
    assert_eq!(h, vec![1, 4, 7, 10, 13, 16]);
}

#[test]
fn odd_relation_is_smooth_off_the_origin() {
    let (x, origin) = load("evens x y\nodds xi eta\nideal x*xi + y*eta\npoint 0 0\n");
    let v = smooth_test(&x, &ClosedPoint::from_ints(&[1, 0]), default_order(&x)).unwrap();
    assert_eq!(v.verdict, Verdict::SmoothExact);
    assert_eq!(v.dim, SuperDim::new(2, 1));
    assert!(v.complete_intersection);

    let v = smooth_test(&x, &origin, default_order(&x)).unwrap();
    assert!(v.verdict.is_not_smooth());
    assert_eq!(v.dim, SuperDim::new(2, 2));
}

#[test]
fn smooth_curve_through_a_complex_point() {
    let (x, p) = load("evens x y\nodds\nideal x^2 + y^2 + 1\npoint i 0\n");
    let v = smooth_test(&x, &p, default_order(&x)).unwrap();
    assert_eq!(v.verdict, Verdict::SmoothExact);
    assert_eq!(v.dim, SuperDim::new(1, 0));
}

#[test]
fn point_off_the_variety_is_rejected() {
    let (x, _) = load("evens x\nodds\nideal x - 1\npoint 1\n");
    assert!(smooth_test(&x, &ClosedPoint::from_ints(&[0]), 4).is_err());
}
