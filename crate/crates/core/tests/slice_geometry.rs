use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use sedenion_core::algebra::parse_sedenion;
use sedenion_core::slice::{
    cker_curve_point, cker_membership, find_companion, iota_frame, is_hyper_solution, is_slice_unit, kernel_zeta, phi,
    polar, psi, random_companion, random_frame, random_hyper_pair, random_sedenion, random_slice_unit, seeded_rng,
    Frame, HyperSolution, SliceUnit, WPoint,
};
use sedenion_core::zero::kernel_of_left_mult;
use sedenion_core::{CDElement, ComplexPoint, Error};

fn el(text: &str) -> CDElement {
    parse_sedenion(text).unwrap().to_sedenion()
}

fn unit(text: &str) -> SliceUnit {
    SliceUnit::new(&el(text)).unwrap()
}

fn oct(i: usize) -> CDElement {
    CDElement::unit(i).promote(3).unwrap()
}

fn example_pair() -> HyperSolution {
    HyperSolution::new(&unit("e1"), &unit("e10")).unwrap()
}

#[test]
fn slice_unit_recognition() {
    for text in ["e1", "e8", "-e8", "e10", "e15", "0.6e1+0.8e2"] {
        assert!(is_slice_unit(&el(text)), "{text}");
    }
    for text in ["1", "0", "e1+e10", "2e1"] {
        assert!(!is_slice_unit(&el(text)), "{text}");
    }
    assert!(matches!(SliceUnit::new(&el("e1+e10")), Err(Error::NotSliceUnit(_))));
}

#[test]
fn polar_coordinates_of_basis_units() {
    let p = polar(&el("e1")).unwrap();
    assert!((p.alpha - FRAC_PI_2).abs() < 1e-12 && p.theta.abs() < 1e-12);
    assert!(p.jmath.dist(&oct(1)) < 1e-12);

    let p = polar(&el("e10")).unwrap();
    assert!((p.alpha - FRAC_PI_2).abs() < 1e-12 && (p.theta - FRAC_PI_2).abs() < 1e-12);
    assert!(p.jmath.dist(&oct(2)) < 1e-12);

    let p = polar(&el("e8")).unwrap();
    assert!(p.alpha.abs() < 1e-12 && p.theta == 0.0);
    let p = polar(&el("-e8")).unwrap();
    assert!((p.alpha - PI).abs() < 1e-12);

    assert!(polar(&el("e1+e2")).is_err());
}

#[test]
fn psi_examples() {
    let frame = Frame::new(&oct(1), &oct(2)).unwrap();
    assert!(psi(FRAC_PI_2, 0.0, &frame).unwrap().value().dist(&el("e1")) < 1e-12);
    assert!(psi(FRAC_PI_2, FRAC_PI_2, &frame).unwrap().value().dist(&el("e10")) < 1e-12);
    assert!(psi(0.0, 1.0, &frame).unwrap().value().dist(&el("e8")) < 1e-12);
    assert!(Frame::new(&oct(1), &oct(1)).is_err());
    assert!(Frame::new(&oct(1), &CDElement::one(3)).is_err());
}

#[test]
fn polar_round_trip() {
    let mut rng = seeded_rng(31);
    for _ in 0..500 {
        let s = random_slice_unit(&mut rng);
        let p = s.polar();
        assert!((0.0..=PI).contains(&p.alpha));
        assert!((0.0..PI).contains(&p.theta));
        let frame = random_frame(&mut rng);
        let rebuilt = psi(p.alpha, p.theta, &frame).unwrap();
        assert!((rebuilt.alpha() - p.alpha).abs() < 1e-9);
        let direct = {
            let kappa = p.jmath;
            let (sa, ca) = p.alpha.sin_cos();
            let lower = kappa.scale(sa * p.theta.cos());
            let upper = CDElement::real(3, ca) + kappa.scale(sa * p.theta.sin());
            CDElement::from_halves(&lower, &upper).unwrap()
        };
        assert!(direct.dist(&s.value()) < 1e-10);
    }
}

#[test]
fn polar_recovers_psi_coordinates() {
    let mut rng = seeded_rng(36);
    for n in 0..500 {
        let alpha = 0.01 + (PI - 0.02) * ((n * 37 % 500) as f64 / 500.0);
        let theta = PI * ((n * 91 % 500) as f64 / 500.0);
        let unit = psi(alpha, theta, &random_frame(&mut rng)).unwrap();
        assert!((unit.alpha() - alpha).abs() < 1e-9, "alpha {alpha}");
        assert!((unit.theta() - theta).abs() < 1e-9, "theta {theta}");
    }
}

#[test]
fn example_frame() {
    let (frame, alpha) = iota_frame(&unit("e1"), &unit("e10")).unwrap();
    assert_eq!(frame.i1, oct(1));
    assert_eq!(frame.i2, oct(2));
    assert!((alpha - FRAC_PI_2).abs() < 1e-15);

    let (swapped, _) = iota_frame(&unit("e10"), &unit("e1")).unwrap();
    assert!(swapped.i1.dist(&oct(1)) < 1e-12 && swapped.i2.dist(&oct(2)) < 1e-12);

    assert!(matches!(iota_frame(&unit("e1"), &unit("e2")), Err(Error::NotHyperSolution(..))));
    assert!(iota_frame(&unit("e1"), &unit("e1")).is_err());
}

#[test]
fn hyper_solution_examples() {
    assert!(is_hyper_solution(&unit("e1"), &unit("e10")).unwrap());
    assert!(!is_hyper_solution(&unit("e1"), &unit("e2")).unwrap());
    assert!(!is_hyper_solution(&unit("e8"), &unit("e1")).unwrap());
    assert!(is_hyper_solution(&unit("e3"), &unit("e3")).is_err());
}

#[test]
fn random_pairs_share_alpha() {
    let mut rng = seeded_rng(32);
    for _ in 0..200 {
        let (j1, j2) = random_hyper_pair(&mut rng);
        assert!(is_hyper_solution(&j1, &j2).unwrap());
        assert!((j1.alpha() - j2.alpha()).abs() < 1e-9);
        assert!((j1.theta() - j2.theta()).abs() > 1e-9);
        let j = HyperSolution::new(&j1, &j2).unwrap();
        assert_eq!(j.kernel().dim(), 4);
    }
}

#[test]
fn kernel_curve_of_the_example() {
    let j = example_pair();
    assert!(cker_curve_point(&j, 0.0).unwrap().value().dist(&el("e1")) < 1e-12);
    assert!(cker_curve_point(&j, FRAC_PI_2).unwrap().value().dist(&el("e10")) < 1e-12);
    assert!(cker_curve_point(&j, PI - 1e-9).unwrap().value().dist(&el("e1")) < 1e-8);
    for n in 0..24 {
        let k = cker_curve_point(&j, n as f64 * PI / 24.0).unwrap();
        assert!(cker_membership(&k, &j));
    }
    assert!(!cker_membership(&unit("e3"), &j));
    assert!(!cker_membership(&unit("-e1"), &j));
}

#[test]
fn curve_units_share_the_kernel() {
    let mut rng = seeded_rng(33);
    for _ in 0..50 {
        let (j1, j2) = random_hyper_pair(&mut rng);
        let j = HyperSolution::new(&j1, &j2).unwrap();
        let theta = (j1.theta() + FRAC_PI_3) % PI;
        let k = cker_curve_point(&j, theta).unwrap();
        assert!(cker_membership(&k, &j));
        let kernel = kernel_of_left_mult(&(j1.value() - k.value()));
        assert!(kernel.max_angle(j.kernel()) < 1e-7);
    }
}

#[test]
fn kernel_zeta_pairs_solve_both_equations() {
    let (j1, j2) = (unit("e1"), unit("e10"));
    let pairs = kernel_zeta(&j1, &j2);
    assert_eq!(pairs.len(), 4);
    for (x, y) in pairs {
        assert!((x + j1.value() * y).norm() < 1e-12);
        assert!((x + j2.value() * y).norm() < 1e-12);
    }
    assert!(kernel_zeta(&j1, &unit("e2")).is_empty());
}

#[test]
fn companions() {
    let i = unit("e1");
    let k = find_companion(&i, &el("e4+e15")).unwrap();
    assert!(k.value().dist(&el("e10")) < 1e-12);
    assert!(find_companion(&i, &CDElement::one(4)).is_none());
    assert!(find_companion(&i, &CDElement::zero(4)).is_none());
    assert!(find_companion(&unit("e8"), &el("e4+e15")).is_none());
    assert!(find_companion(&i, &random_sedenion(&mut seeded_rng(34))).is_none());
}

#[test]
fn random_companions_annihilate_their_kernel() {
    let mut rng = seeded_rng(35);
    for _ in 0..100 {
        let i = random_slice_unit(&mut rng);
        let Some(k) = random_companion(&i, &mut rng) else { continue };
        assert!(is_hyper_solution(&i, &k).unwrap());
        let c = kernel_of_left_mult(&(i.value() - k.value())).basis()[0];
        let found = find_companion(&i, &c).unwrap();
        assert!(cker_membership(&found, &HyperSolution::new(&i, &k).unwrap()));
    }
}

#[test]
fn phi_rejects_bad_input() {
    assert!(phi(&unit("e8"), &oct(1), 0.0).is_err());
    assert!(phi(&unit("e1"), &oct(1), 0.0).is_err());
    let k = phi(&unit("e1"), &oct(2), FRAC_PI_2).unwrap();
    assert!(k.value().dist(&el("e10")) < 1e-12);
}

#[test]
fn cone_points() {
    let w = WPoint::new(&el("2+3e1")).unwrap();
    assert_eq!((w.re(), w.im()), (2.0, 3.0));
    assert!(w.axis().approx_eq(&unit("e1")));
    assert_eq!(w.z(), ComplexPoint::new(2.0, 3.0));

    let w = WPoint::new(&el("1-2e1")).unwrap();
    assert_eq!(w.z(), ComplexPoint::new(1.0, 2.0));
    assert!(w.axis().approx_eq(&unit("-e1")));

    let real = WPoint::new(&el("5")).unwrap();
    assert!(real.is_real() && real.im() == 0.0);
    assert!(real.axis().approx_eq(&SliceUnit::base()));

    let mut rng = seeded_rng(37);
    for _ in 0..100 {
        let axis = random_slice_unit(&mut rng);
        let x = random_sedenion(&mut rng);
        let w = WPoint::on_slice(ComplexPoint::new(x.coeff(0), x.coeff(1)), &axis);
        assert!(w.im() >= 0.0);
        let rebuilt = CDElement::real(4, w.re()) + w.axis().value().scale(w.im());
        assert!(rebuilt.dist(&w.value()) < 1e-12);
        let parsed = WPoint::new(&w.value()).unwrap();
        assert!((parsed.im() - w.im()).abs() < 1e-12 && parsed.axis().approx_eq(w.axis()));
    }
    assert!(WPoint::new(&el("e1+e10")).is_err());
    let on = WPoint::on_slice(ComplexPoint::new(0.5, 1.0), &unit("e10"));
    assert_eq!(on.value(), el("0.5+e10"));
}
