use std::sync::OnceLock;

use k3omega::cone::{theorem13_bound, ClassTriple, ConeCertifier};
use k3omega::geometry::{build_model, lambda_slope, pluecker, GeometryModel, DT, EP, ES};
use k3omega::lattice::{apply_map, pair, pair_curve_rational, pair_rational, push_curve, DivClass};
use k3omega::lp::{
    feasibility, lp_optimize, Feasibility, IneqSystem, LinearFunctional, LpOutcome, Relation, Row, Sense,
};
use k3omega::positivity::{cubic_f, discriminant_resultant, sample_region};
use k3omega::q;
use k3omega::resultant::{resultant_univariate, resultant_x};
use k3omega::sturm::sturm_isolate;
use k3omega::{Poly1, Poly2, Rational};
use proptest::prelude::*;

fn model() -> &'static GeometryModel {
    static MODEL: OnceLock<GeometryModel> = OnceLock::new();
    MODEL.get_or_init(build_model)
}

fn cubic() -> &'static Poly2 {
    static F: OnceLock<Poly2> = OnceLock::new();
    F.get_or_init(|| cubic_f(model()).unwrap())
}

fn bound_system() -> &'static IneqSystem {
    static S: OnceLock<IneqSystem> = OnceLock::new();
    S.get_or_init(|| theorem13_bound(model()).unwrap().system)
}

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| q!(n, d))
}

fn y_class() -> impl Strategy<Value = DivClass> {
    prop::collection::vec(rat(), 3).prop_map(|c| DivClass::from_rationals(model().y.space(), c).unwrap())
}

fn poly1() -> impl Strategy<Value = Poly1> {
    prop::collection::vec(rat(), 1..6).prop_map(Poly1::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pairing_is_symmetric_and_multilinear(a in y_class(), b in y_class(), c in y_class(), d in y_class(), s in rat()) {
        let y = &model().y;
        let p = |u: &DivClass, v: &DivClass, w: &DivClass| pair_rational(y, &[u, v, w]).unwrap();
        let abc = p(&a, &b, &c);
        prop_assert_eq!(&abc, &p(&b, &a, &c));
        prop_assert_eq!(&abc, &p(&c, &b, &a));
        prop_assert_eq!(&abc, &p(&a, &c, &b));
        prop_assert_eq!(p(&(&a + &d), &b, &c), &abc + &p(&d, &b, &c));
        prop_assert_eq!(p(&a.scale(&s), &b, &c), &abc * &s);
    }

    #[test]
    fn poly_eval_is_multiplicative(p in poly1(), r in poly1(), t in rat()) {
        prop_assert_eq!((&p * &r).eval(&t), p.eval(&t) * r.eval(&t));
    }

    #[test]
    fn bivariate_eval_is_multiplicative(a in prop::collection::vec(rat(), 6), b in prop::collection::vec(rat(), 6), x in rat(), y in rat()) {
        let mk = |c: &[Rational]| Poly2::new([(0u32, 0u32), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)].into_iter().zip(c.iter().cloned()));
        let (p, r) = (mk(&a), mk(&b));
        prop_assert_eq!((&p * &r).eval_at(&x, &y), p.eval_at(&x, &y) * r.eval_at(&x, &y));
        prop_assert_eq!(p.eval_at(&x, &y), p.eval_horner(&x, &y));
    }

    #[test]
    fn projection_formula_on_random_classes(a in y_class()) {
        let m = model();
        // Restriction to E_S and E_P against the ruling curves.
        let on_es = apply_map(&m.restrict_es, &a).unwrap();
        let l_s = m.class(ES, "l_S").unwrap();
        prop_assert_eq!(pair_rational(&m.es, &[&on_es, l_s]).unwrap(), m.y_curve("l_S", &a));
        let on_ep = apply_map(&m.restrict_ep, &a).unwrap();
        let n_ep = m.class(EP, "N").unwrap();
        prop_assert_eq!(pair_rational(&m.ep, &[&on_ep, n_ep]).unwrap(), m.y_curve("N", &a));
        // Pull-back to D~ against both exceptional families.
        let pulled = apply_map(&m.nu_pull, &a).unwrap();
        for name in ["l_node", "l_cusp"] {
            let g = m.class(DT, name).unwrap();
            prop_assert_eq!(pair_rational(&m.dt, &[&pulled, g]).unwrap(), m.y_curve("l_P", &a));
        }
        prop_assert_eq!(pair_curve_rational(&m.l_p_via_cusp, &a).unwrap(), m.y_curve("l_P", &a));
        // Ruling additivity.
        let three_phi = m.yc("phi*L").scale(&q!(3));
        let sum = m.yc("E_P") + m.yc("E_S");
        for c in m.curves() {
            prop_assert_eq!(pair_curve_rational(c, &sum).unwrap(), pair_curve_rational(c, &three_phi).unwrap());
        }
    }

    #[test]
    fn restriction_compatibility(a in y_class(), b in y_class()) {
        let m = model();
        let r = |c: &DivClass| apply_map(&m.restrict_es, c).unwrap();
        prop_assert_eq!(pair_rational(&m.es, &[&r(&a), &r(&b)]).unwrap(), m.y_triple(&a, &b, m.yc("E_S")));
        let r = |c: &DivClass| apply_map(&m.restrict_ep, c).unwrap();
        prop_assert_eq!(pair_rational(&m.ep, &[&r(&a), &r(&b)]).unwrap(), m.y_triple(&a, &b, m.yc("E_P")));
        let r = |c: &DivClass| apply_map(&m.nu_pull, c).unwrap();
        prop_assert_eq!(pair_rational(&m.dt, &[&r(&a), &r(&b)]).unwrap(), m.y_triple(&a, &b, m.yc("D")));
    }

    #[test]
    fn slope_on_the_ray_of_d(k in 1i64..500, den in 1i64..20) {
        let t = q!(k, den);
        let triple = ClassTriple::new(&t * &q!(30), q!(0), &t * &q!(2));
        prop_assert_eq!(lambda_slope(&triple.a, &triple.b, &triple.m).unwrap(), q!(9, 5));
        let cert = ConeCertifier::new(model()).unwrap();
        prop_assert!(!cert.extremality_test(&triple).unwrap());
    }

    #[test]
    fn lower_bound_invariant_under_row_scaling(s in prop::collection::vec((1i64..50, 1i64..50), 4)) {
        let system = bound_system();
        let rows: Vec<Row> = system.rows().iter().zip(&s).map(|(r, (n, d))| {
            let c = q!(*n, *d);
            Row::new(r.label.clone(), r.coeffs.iter().map(|v| v * &c).collect(), &r.constant * &c, r.relation)
        }).collect();
        let scaled = IneqSystem::new(system.vars().to_vec(), rows).unwrap();
        let obj = LinearFunctional::new(vec![q!(0), q!(1)]);
        match lp_optimize(&scaled, &obj, Sense::Min).unwrap() {
            LpOutcome::Optimal { value, vertex, attained } => {
                prop_assert!(attained);
                prop_assert_eq!(value, q!(-3, 11));
                prop_assert_eq!(vertex, vec![q!(35, 11), q!(-3, 11)]);
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn lp_vertices_and_certificates_replay(c in prop::collection::vec(rat(), 2), d in rat(), strict in any::<bool>()) {
        prop_assume!(c.iter().any(|v| !v.is_zero()));
        let rel = if strict { Relation::Gt } else { Relation::Ge };
        let vars = vec!["u".to_string(), "v".to_string()];
        // A row and its negation shifted so that the pair is contradictory.
        let infeasible = IneqSystem::new(vars.clone(), vec![
            Row::new("r", c.clone(), d.clone(), rel),
            Row::new("-r", c.iter().map(|v| -v).collect(), -&d - q!(1), Relation::Ge),
        ]).unwrap();
        match feasibility(&infeasible) {
            Feasibility::Infeasible(cert) => prop_assert!(cert.replay(&infeasible).is_ok()),
            Feasibility::Feasible(p) => prop_assert!(false, "feasible at {:?}", p),
        }
        let box_sys = IneqSystem::new(vars, vec![
            Row::new("r", c.clone(), d.clone(), rel),
            Row::new("u <= 5", vec![q!(-1), q!(0)], q!(5), Relation::Ge),
            Row::new("u >= -5", vec![q!(1), q!(0)], q!(5), Relation::Ge),
            Row::new("v <= 5", vec![q!(0), q!(-1)], q!(5), Relation::Ge),
            Row::new("v >= -5", vec![q!(0), q!(1)], q!(5), Relation::Ge),
        ]).unwrap();
        let obj = LinearFunctional::new(c.clone());
        match lp_optimize(&box_sys, &obj, Sense::Max).unwrap() {
            LpOutcome::Optimal { vertex, attained, .. } => {
                prop_assert!(box_sys.closure().is_satisfied_by(&vertex));
                if attained {
                    prop_assert!(box_sys.is_satisfied_by(&vertex));
                }
            }
            LpOutcome::Infeasible(cert) => prop_assert!(cert.replay(&box_sys).is_ok()),
            LpOutcome::Unbounded { .. } => prop_assert!(false, "bounded box reported unbounded"),
        }
    }

    #[test]
    fn cubic_constant_term_and_specialisation(eta in rat(), x in rat()) {
        let m = model();
        let f = cubic();
        prop_assert_eq!(f.eval_at(&q!(0), &eta), q!(18));
        let c = m.yc("E_S") + &m.yc("D").scale_poly(&Poly2::x());
        let g = pair(&m.y, &[&c, &c, &c]).unwrap();
        prop_assert_eq!(f.eval_at(&x, &q!(0)), g.eval_at(&x, &q!(0)));
    }

    #[test]
    fn sturm_brackets_verify(roots in prop::collection::btree_set(-20i64..20, 1..5), lead in 1i64..5) {
        let mut p = Poly1::constant(q!(lead));
        for r in &roots {
            p = &p * &Poly1::from_ints(&[-*r, 1]);
        }
        let brackets = sturm_isolate(&p, &q!(-25), &q!(25)).unwrap();
        prop_assert_eq!(brackets.len(), roots.len());
        for (b, r) in brackets.iter().zip(&roots) {
            prop_assert!(b.verify().is_ok());
            prop_assert!(b.contains(&q!(*r)));
            let fine = b.refine(&q!(1, 1000)).unwrap();
            prop_assert!(fine.verify().is_ok());
            prop_assert!(fine.width() <= q!(1, 1000));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn resultant_commutes_with_specialisation(eta in rat()) {
        let f = cubic();
        let fx = f.derivative_x();
        static RES: OnceLock<Poly1> = OnceLock::new();
        let res = RES.get_or_init(|| discriminant_resultant(f).unwrap());
        let lead = f.coeffs_in_x()[3].eval(&eta);
        prop_assume!(!lead.is_zero());
        let direct = resultant_univariate(&f.specialize_y(&eta), &fx.specialize_y(&eta)).unwrap();
        prop_assert_eq!(res.eval(&eta), direct);
        let g = Poly2::from_ints(&[(2, 0, 1), (1, 1, 3), (0, 2, -2), (0, 0, 5)]);
        let h = Poly2::from_ints(&[(1, 0, 2), (0, 1, 1), (0, 0, -1)]);
        let r = resultant_x(&g, &h).unwrap();
        prop_assert_eq!(r.eval(&eta), resultant_univariate(&g.specialize_y(&eta), &h.specialize_y(&eta)).unwrap());
    }

    #[test]
    fn grid_signs_agree_with_horner(n in 2usize..8) {
        let f = cubic();
        let samples = sample_region(f, &(q!(0), q!(1, 2)), &(q!(-1, 5), q!(1, 10)), n).unwrap();
        for s in samples {
            prop_assert_eq!(s.sign, f.eval_horner(&s.x, &s.eta).signum());
        }
    }
}

#[test]
fn pluecker_identities() {
    for d in 2..=8 {
        let p = pluecker(d).unwrap();
        // The dual of the dual is the curve: class formula for the dual.
        assert_eq!(d, p.dual_degree * (p.dual_degree - 1) - 2 * p.bitangents - 3 * p.flexes, "d = {d}");
        // Genus from the dual curve with nodes and cusps.
        assert_eq!(p.genus, (p.dual_degree - 1) * (p.dual_degree - 2) / 2 - p.bitangents - p.flexes, "d = {d}");
        assert_eq!(p.genus, (d - 1) * (d - 2) / 2);
    }
    let six = pluecker(6).unwrap();
    assert_eq!((six.dual_degree, six.bitangents, six.flexes, six.genus), (30, 324, 72, 10));
}

#[test]
fn zeta_plus_twice_l_cubes_vanish() {
    let m = model();
    let z = m.class(k3omega::geometry::POS, "zeta_S").unwrap()
        + &m.class(k3omega::geometry::POS, "pi*L").unwrap().scale(&q!(2));
    assert_eq!(pair_rational(&m.pos, &[&z, &z, &z]).unwrap(), q!(0));
    let me = m.yc("M") + m.yc("E_S");
    assert_eq!(m.y_triple(&me, &me, &me), q!(0));
    assert_eq!(apply_map(&m.mu_s_pull, &z).unwrap(), me);
}

#[test]
fn curves_from_other_surfaces_agree() {
    let m = model();
    // N from D~ and from E_P.
    for name in ["M", "E_S", "E_P", "D"] {
        let a = m.yc(name);
        assert_eq!(pair_curve_rational(&m.n_via_ep, a).unwrap(), m.y_curve("N", a));
    }
    // l_D pushed again from D~ agrees with the stored curve.
    let l_d = push_curve(&m.nu_pull, &m.dt, m.class(DT, "l_D").unwrap(), "l_D").unwrap();
    assert_eq!(l_d.pairing(), m.curve("l_D").unwrap().pairing());
}
