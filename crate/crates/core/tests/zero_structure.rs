use sedenion_core::algebra::{parse_sedenion, ExactElement};
use sedenion_core::slice::{
    random_hyper_pair, random_sedenion, random_unit_imaginary_octonion, seeded_rng, SliceUnit, WPoint,
};
use sedenion_core::zero::{
    c8, is_special_triple, is_zero_divisor, kernel_of_left_mult, ortho_decompose, pq_project,
    zero_product_characterization, Subspace,
};
use sedenion_core::{CDElement, ComplexPoint};

fn el(text: &str) -> CDElement {
    parse_sedenion(text).unwrap().to_sedenion()
}

fn oct(text: &str) -> CDElement {
    parse_sedenion(text).unwrap().promote(3).unwrap()
}

#[test]
fn kernels_of_basic_elements() {
    let k = kernel_of_left_mult(&el("e1-e10"));
    let expected = Subspace::span(&[el("e4+e15"), el("e5-e14"), el("e6+e13"), el("e7-e12")]);
    assert_eq!(k.dim(), 4);
    assert!(k.max_angle(&expected) < 1e-10);
    assert_eq!(kernel_of_left_mult(&el("e1")).dim(), 0);
    assert_eq!(kernel_of_left_mult(&CDElement::zero(4)).dim(), 16);
}

#[test]
fn zero_divisor_examples() {
    assert!(is_zero_divisor(&el("e1-e10")));
    assert!(is_zero_divisor(&el("e4+e15")));
    assert!(!is_zero_divisor(&el("e3+e5")));
    assert!(!is_zero_divisor(&CDElement::zero(4)));
}

#[test]
fn special_triples() {
    assert!(is_special_triple(&el("e1"), &el("e2"), &el("e4")));
    assert!(!is_special_triple(&el("e1"), &el("e2"), &el("e3")));
    assert!(!is_special_triple(&el("e1"), &el("e2"), &el("2e4")));
}

#[test]
fn zero_product_examples() {
    let verdict = zero_product_characterization(&oct("e1"), &oct("-e2"), &oct("e4"), &oct("e7")).unwrap();
    assert!(verdict.is_zero);
    assert!(verdict.certificate.unwrap().special_triple);
    let verdict = zero_product_characterization(&oct("e1"), &oct("e1"), &oct("e2"), &oct("0")).unwrap();
    assert!(!verdict.is_zero);
    let verdict = zero_product_characterization(&oct("1"), &oct("e3"), &oct("e5"), &oct("e6")).unwrap();
    assert!(!verdict.is_zero);
}

#[test]
fn zero_products_from_random_special_triples() {
    let mut rng = seeded_rng(21);
    let mut found = 0;
    for _ in 0..200 {
        let i = random_unit_imaginary_octonion(&mut rng);
        let j = random_unit_imaginary_octonion(&mut rng);
        let k = random_unit_imaginary_octonion(&mut rng);
        let d = i * (j * k);
        let verdict = zero_product_characterization(&i, &j, &k, &d).unwrap();
        found += usize::from(verdict.is_zero);
    }
    assert!(found < 200);
}

#[test]
fn conjugation_by_e8() {
    assert_eq!(c8(&el("e1+e10")), el("e1-e10"));
    assert_eq!(c8(&el("e3")), el("e3"));
    let k = kernel_of_left_mult(&c8(&el("e1-e10")));
    let expected = Subspace::span(&[el("e4-e15"), el("e5+e14"), el("e6-e13"), el("e7+e12")]);
    assert!(k.max_angle(&expected) < 1e-10);
    assert!(k.max_angle(&kernel_of_left_mult(&el("e1+e10"))) < 1e-10);
}

#[test]
fn orthogonal_decompositions() {
    let p = el("e1-e10");
    let d = ortho_decompose(&el("e4+e15"), &p).unwrap();
    assert!(d.o_part.norm() < 1e-12 && d.kerc_part.norm() < 1e-12);
    let d = ortho_decompose(&CDElement::one(4), &p).unwrap();
    assert!(d.o_part.dist(&CDElement::one(4)) < 1e-12);
    let x = random_sedenion(&mut seeded_rng(22));
    let d = ortho_decompose(&x, &p).unwrap();
    let dims: Vec<usize> = d.subspaces.iter().map(Subspace::dim).collect();
    assert_eq!(dims, [8, 4, 4]);
    assert!((d.o_part + d.ker_part + d.kerc_part).dist(&x) < 1e-9);
    assert!(d.o_part.inner(&d.ker_part).abs() < 1e-9);
    assert!(d.ker_part.inner(&d.kerc_part).abs() < 1e-9);
}

#[test]
fn pq_projection_examples() {
    let p = WPoint::new(&el("1+2e1")).unwrap();
    let q = WPoint::on_slice(ComplexPoint::new(0.5, 1.0), &SliceUnit::basis(10));
    let parts = pq_project(&el("e4+e15"), &p, &q);
    assert!(parts.eq_part.dist(&el("e4+e15")) < 1e-12 && parts.perp_part.norm() < 1e-12);
    let parts = pq_project(&CDElement::one(4), &p, &q);
    assert!(parts.eq_part.norm() < 1e-12 && parts.perp_part.dist(&CDElement::one(4)) < 1e-12);
    let d = random_sedenion(&mut seeded_rng(23));
    let parts = pq_project(&d, &WPoint::real(1.0), &q);
    assert_eq!(parts.eq_part, CDElement::zero(4));
    assert_eq!(parts.perp_part, d);
}

#[test]
fn opposite_kernels_are_orthogonal() {
    let mut rng = seeded_rng(24);
    for _ in 0..100 {
        let (j1, j2) = random_hyper_pair(&mut rng);
        let minus = kernel_of_left_mult(&(j1.value() - j2.value()));
        let plus = kernel_of_left_mult(&(j1.value() + j2.value()));
        assert_eq!(minus.dim(), 4);
        assert!(minus.is_orthogonal_to(&plus, 1e-9));
    }
}

#[test]
fn one_is_orthogonal_to_the_kernel_exactly() {
    let basis = [[(4, 1), (15, 1)], [(5, 1), (14, -1)], [(6, 1), (13, 1)], [(7, 1), (12, -1)]];
    for pair in basis {
        let mut c = [0i64; 16];
        for (i, v) in pair {
            c[i] = v;
        }
        let k = ExactElement::new(4, &c).unwrap();
        assert_eq!(k.coeffs()[0], 0);
    }
}

fn random_special_triple(rng: &mut impl rand::Rng) -> (CDElement, CDElement, CDElement) {
    let i = random_unit_imaginary_octonion(rng);
    let raw = random_unit_imaginary_octonion(rng);
    let j = (raw - i.scale(raw.inner(&i))).normalized(1e-9).unwrap();
    let blocked = Subspace::span(&[CDElement::one(3), i, j, i * j]);
    let raw = random_unit_imaginary_octonion(rng);
    let k = (raw - blocked.project(&raw).demote(3).unwrap()).normalized(1e-9).unwrap();
    (i, j, k)
}

fn from_halves(lower: &CDElement, upper: &CDElement) -> CDElement {
    CDElement::from_halves(lower, upper).unwrap()
}

#[test]
fn special_triples_give_four_dimensional_kernels() {
    let mut rng = seeded_rng(27);
    for _ in 0..100 {
        let (i, j, k) = random_special_triple(&mut rng);
        assert!(is_special_triple(&i, &j, &k));
        let s = from_halves(&i, &(-j));
        assert!(is_zero_divisor(&s));
        assert_eq!(kernel_of_left_mult(&s).dim(), 4);
        assert_eq!(kernel_of_left_mult(&random_sedenion(&mut rng)).dim(), 0);
    }
}

#[test]
fn left_factors_share_inner_products() {
    let mut rng = seeded_rng(25);
    for _ in 0..100 {
        let (j1, j2) = random_hyper_pair(&mut rng);
        let c = kernel_of_left_mult(&(j1.value() - j2.value())).basis()[0];
        let left_kernel = kernel_of_left_mult(&c.conj());
        assert_eq!(left_kernel.dim(), 4);
        let x1 = left_kernel.project(&random_sedenion(&mut rng)).conj();
        let x2 = left_kernel.project(&random_sedenion(&mut rng)).conj();
        assert!((x1 * c).norm() < 1e-9 && (x2 * c).norm() < 1e-9);
        let (a1, b1, a2, b2) = (x1.lower(), x1.upper(), x2.lower(), x2.upper());
        assert!((a1.inner(&a2) - b1.inner(&b2)).abs() < 1e-9);
    }
}

#[test]
fn rotated_special_triples_stay_special() {
    let mut rng = seeded_rng(28);
    let mut triples = vec![(oct("e1"), oct("e2"), oct("e4"))];
    triples.extend((0..30).map(|_| random_special_triple(&mut rng)));
    for (i, j, k) in triples {
        for n in 0..12 {
            let t = n as f64 * 0.5;
            let i2 = i.scale(t.cos()) + j.scale(t.sin());
            let j2 = j.scale(t.cos()) - i.scale(t.sin());
            assert!(is_special_triple(&i2, &j2, &k));
            assert!(is_special_triple(&i2, &(-j2), &k));
        }
    }
}

#[test]
fn conjugating_by_e8_maps_kernels_onto_kernels() {
    let mut rng = seeded_rng(26);
    for _ in 0..100 {
        let (j1, j2) = random_hyper_pair(&mut rng);
        let p = j1.value() - j2.value();
        let image: Vec<CDElement> = kernel_of_left_mult(&p).basis().iter().map(c8).collect();
        let direct = kernel_of_left_mult(&c8(&p));
        assert_eq!(direct.dim(), image.len());
        let angle = direct.max_angle(&Subspace::span(&image));
        assert!(angle < 1e-10);
    }
}
