use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linalg::Rational;

fn iv(v: &[i64]) -> IntVector {
    IntVector::from_i64s(v)
}

fn cone(n: usize, eqs: &[&[i64]], ineqs: &[&[i64]]) -> Cone {
    let e: Vec<_> = eqs.iter().map(|v| iv(v)).collect();
    let i: Vec<_> = ineqs.iter().map(|v| iv(v)).collect();
    Cone::new(n, &e, &i).unwrap()
}

fn orthant2() -> Cone {
    cone(2, &[], &[&[1, 0], &[0, 1]])
}

#[test]
fn canonicalize_examples() {
    let c = cone(2, &[], &[&[1, 0], &[-1, 0]]);
    assert_eq!(c.equations(), &[iv(&[1, 0])]);
    assert!(c.inequalities().is_empty());

    let c = cone(2, &[], &[&[1, 0], &[1, 1], &[0, 1]]);
    assert_eq!(c.inequalities(), &[iv(&[0, 1]), iv(&[1, 0])]);
}

#[test]
fn inequalities_are_reduced_modulo_equations() {
    // w1 = 0 and w1 + w2 >= 0 is the same cone as w1 = 0, w2 >= 0
    let a = cone(2, &[&[1, 0]], &[&[1, 1]]);
    let b = cone(2, &[&[2, 0]], &[&[0, 3]]);
    assert_eq!(a, b);
    assert_eq!(a.inequalities(), &[iv(&[0, 1])]);
}

#[test]
fn extreme_ray_examples() {
    assert_eq!(extreme_rays(&orthant2()), vec![iv(&[0, 1]), iv(&[1, 0])]);

    let half = cone(2, &[], &[&[0, 1]]);
    assert_eq!(extreme_rays(&half), vec![iv(&[0, 1])]);
    assert_eq!(half.lineality(), &[iv(&[1, 0])]);

    let square = cone(3, &[], &[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
    assert_eq!(square.rays().len(), 4);
    assert_eq!(square.inequalities().len(), 4);
}

#[test]
fn relative_interior_examples() {
    assert_eq!(relative_interior_point(&orthant2()), iv(&[1, 1]));
    let ray = Cone::from_generators(2, &[iv(&[1, 2])], &[]).unwrap();
    assert_eq!(relative_interior_point(&ray), iv(&[1, 2]));
    assert_eq!(relative_interior_point(&Cone::origin(3)), iv(&[0, 0, 0]));
}

#[test]
fn intersect_examples() {
    let o = orthant2();
    let axis = cone(2, &[&[1, 0]], &[]);
    let face = intersect(&o, &axis).unwrap();
    assert_eq!(face.rays(), &[iv(&[0, 1])]);
    assert_eq!(face.dim(), 1);
    assert_eq!(intersect(&o, &o).unwrap(), o);
    assert!(intersect(&o, &Cone::full_space(3)).is_err());
}

#[test]
fn refinement_examples() {
    let f = Fan::new(2, vec![orthant2(), cone(2, &[], &[&[-1, 0]])]).unwrap();
    let ff = common_refinement(&f, &f).unwrap();
    for w in [iv(&[1, 1]), iv(&[-3, 2]), iv(&[0, -1])] {
        assert_eq!(ff.contains(&w), f.contains(&w));
    }
    let l1 = Fan::new(2, vec![cone(2, &[&[1, 0]], &[])]).unwrap();
    let l2 = Fan::new(2, vec![cone(2, &[&[0, 1]], &[])]).unwrap();
    let r = common_refinement(&l1, &l2).unwrap();
    assert_eq!(r.cones(), &[Cone::origin(2)]);
}

#[test]
fn facet_examples() {
    let fs = facets(&orthant2());
    assert_eq!(fs.len(), 2);
    assert!(fs.iter().all(|f| f.dim() == 1 && f.rays().len() == 1));

    let half = cone(3, &[], &[&[0, 0, 1]]);
    let fs = facets(&half);
    assert_eq!(fs, vec![cone(3, &[&[0, 0, 1]], &[])]);

    let simplex = cone(3, &[], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(facets(&simplex).len(), 3);
}

#[test]
fn statistics_examples() {
    let ray = Cone::from_generators(2, &[iv(&[1, 0])], &[]).unwrap();
    let s = fan_statistics(&Fan::new(2, vec![ray]).unwrap(), 0);
    assert_eq!(s.f_vector, vec![1]);
    assert!(s.simplicial);

    let simplex = cone(3, &[], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let s = fan_statistics(&Fan::new(3, vec![simplex]).unwrap(), 0);
    assert_eq!(s.f_vector, vec![3, 3, 1]);

    let square = cone(3, &[], &[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
    let s = fan_statistics(&Fan::new(3, vec![square]).unwrap(), 0);
    assert_eq!(s.f_vector, vec![4, 4, 1]);
    assert!(!s.simplicial);
}

#[test]
fn restriction_examples() {
    let ray = Cone::from_generators(3, &[iv(&[1, 2, -3])], &[]).unwrap();
    let p = restrict_to_unit_first_coordinate(&Fan::new(3, vec![ray]).unwrap()).unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].dim(), 0);
    assert!(p[0].contains(&[Rational::from_int(2), Rational::from_int(-3)]));

    let south = Cone::from_generators(2, &[iv(&[-1, 0]), iv(&[0, 1])], &[]).unwrap();
    assert!(restrict_to_unit_first_coordinate(&Fan::new(2, vec![south]).unwrap()).unwrap().is_empty());

    let half = cone(2, &[], &[&[0, 1]]);
    let p = restrict_to_unit_first_coordinate(&Fan::new(2, vec![half]).unwrap()).unwrap();
    assert_eq!(p.len(), 1);
    assert!(p[0].contains(&[Rational::from_int(5)]));
    assert!(!p[0].contains(&[Rational::from_int(-1)]));
}

#[test]
fn permuted_cone_is_canonical() {
    let c = cone(3, &[&[1, 1, 0]], &[&[0, 0, 1], &[1, -1, 0]]);
    let images = [2, 0, 1];
    let p = c.permuted(&images);
    let e: Vec<_> = c.equations().iter().map(|v| v.permuted(&images)).collect();
    let i: Vec<_> = c.inequalities().iter().map(|v| v.permuted(&images)).collect();
    assert_eq!(p, Cone::new(3, &e, &i).unwrap());
    assert_eq!(p.rays(), Cone::new(3, &e, &i).unwrap().rays());
}

#[test]
fn generic_points_are_interior() {
    let c = cone(4, &[&[1, 1, 1, 1]], &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        assert!(c.contains_in_relative_interior(&c.generic_relative_interior_point(&mut rng)));
    }
}
