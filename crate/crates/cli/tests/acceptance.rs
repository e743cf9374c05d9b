//! Acceptance criteria 1-9, one line each. Runs without the libtest harness
//! so the lines always appear in the test output.

use std::process::Command;
use std::time::{Duration, Instant};

use k3omega::cone::{theorem13_bound, ConeCertifier};
use k3omega::geometry::{build_model, pluecker, GeometryModel, DT, EP, ES, POS, T};
use k3omega::lattice::{apply_map, pair, pair_curve_rational, pair_rational, push_curve, DivClass};
use k3omega::lp::{feasibility, Feasibility, IneqSystem, Relation};
use k3omega::positivity::{corollary48_check, critical_eta, cubic_f, printed_cubic};
use k3omega::report::{known_discrepancy, Report, Status};
use k3omega::{q, Poly2, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Runtime ceilings per criterion.
const LIMIT_TABLES: Duration = Duration::from_secs(1);
const LIMIT_CUBIC: Duration = Duration::from_secs(1);
const LIMIT_LOWER: Duration = Duration::from_secs(1);
const LIMIT_UPPER: Duration = Duration::from_secs(5);
const LIMIT_NODAL: Duration = Duration::from_secs(1);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(5);
/// Bracket width for the critical parameter.
const TOLERANCE_DEN: i64 = 10_000_000;
/// Printed upper bound and the slack allowed above it.
const PRINTED_LAMBDA: (i64, i64) = (17_952_024, 10_000_000);
const LAMBDA_SLACK: (i64, i64) = (1, 10_000_000);
const PROPERTY_CASES: u32 = 100;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    match limit {
        Some(l) if took > l => Err(format!("{detail}; took {took:.2?}, limit {l:?}")),
        Some(l) => Ok(format!("{detail}; {took:.2?} (limit {l:?})")),
        None => Ok(format!("{detail}; {took:.2?}")),
    }
}

/// Trilinear form on Y built directly from the ten primary triples, in the
/// basis (M, E_S, E_P). Serves as an oracle independent of the lattice code.
fn hand_triple(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    let t = |i: usize, j: usize, k: usize| -> i64 {
        let mut v = [i, j, k];
        v.sort();
        match v {
            [0, 0, 0] => 0,
            [0, 0, 1] => 6,
            [0, 1, 1] => -12,
            [0, 0, 2] => 0,
            [0, 2, 2] => -30,
            [0, 1, 2] => 30,
            [1, 1, 1] => 18,
            [1, 1, 2] => -36,
            [1, 2, 2] => 54,
            [2, 2, 2] => -72,
            _ => unreachable!(),
        }
    };
    let mut s = 0;
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            for (k, ck) in c.iter().enumerate() {
                s += ai * bj * ck * t(i, j, k);
            }
        }
    }
    s
}

fn row<'a>(rep: &'a Report, quantity: &str) -> Result<&'a k3omega::report::CheckRow, String> {
    rep.find(quantity).ok_or_else(|| format!("no row `{quantity}`"))
}

fn criterion_1(m: &GeometryModel) -> Outcome {
    let reports = [k3omega::geometry::verify_tables(m), k3omega::geometry::numerology(m), corollary48_check(m)];
    let rows: Vec<_> = reports.iter().flat_map(|r| r.rows.iter()).collect();
    let pass = rows.iter().filter(|r| r.status == Status::Pass).count();
    let fail: Vec<_> = rows.iter().filter(|r| r.status == Status::Fail).map(|r| r.quantity.clone()).collect();
    ensure(fail.is_empty(), format!("unexpected FAIL rows: {fail:?}"))?;
    ensure(pass >= 40, format!("only {pass} PASS rows"))?;
    let disc: Vec<&str> = rows.iter().filter(|r| r.status == Status::Discrepant).map(|r| r.quantity.as_str()).collect();
    ensure(disc == ["(D+4E_S)^3"], format!("discrepant rows {disc:?}"))?;
    ensure(disc.iter().all(|d| known_discrepancy(d).is_some()), "discrepancy not allowlisted")?;

    // Independent oracle for the triple products.
    let (mm, es, ep, d) = ([1, 0, 0], [0, 1, 0], [0, 0, 1], [30, 0, -2]);
    let ev = |a, b, c| q!(hand_triple(a, b, c));
    let tables = &reports[0];
    for (name, value) in [
        ("D^3", ev(d, d, d)),
        ("D^2.E_S", ev(d, d, es)),
        ("D.E_S^2", ev(d, es, es)),
        ("D^2.E_P", ev(d, d, ep)),
        ("D.E_P^2", ev(d, ep, ep)),
        ("D.E_P.E_S", ev(d, ep, es)),
        ("M*E_S*E_P", ev(mm, es, ep)),
    ] {
        let r = row(tables, name)?;
        ensure(
            r.derived == value.to_string() && r.printed == r.derived,
            format!("{name}: {} vs oracle {value}", r.derived),
        )?;
    }
    // Named values from the surfaces and the curve N.
    let checks: [(&str, &str, Rational); 8] = [
        ("surface T", "zeta_T^2 via c1^2.p2^*(R^dual)", q!(-90)),
        ("surface T", "R_T^2", q!(-18)),
        ("surface T", "B_T^2", q!(864)),
        ("surface D~", "N_Dbar^2 = 2 R_T^2", q!(-36)),
        ("class of N", "E_S.N", q!(0)),
        ("class of N", "E_P.N", q!(36)),
        ("class of N", "M.N", q!(60)),
        ("class of N", "D.N", q!(1728)),
    ];
    for (_, name, value) in &checks {
        let r = row(tables, name)?;
        ensure(r.status == Status::Pass && r.derived == value.to_string(), format!("{name}: {}", r.derived))?;
    }
    ensure(row(tables, "B_T")?.derived == "4*zeta_T + 288*l_T", "B_T class")?;
    ensure(m.pair_named(T, &["B_T", "B_T"]).map_err(|e| e.to_string())? == q!(864), "B_T^2 recomputation")?;
    // All ten rows of the pull-back to D~ against Y.
    let pulled = tables.rows.iter().filter(|r| r.group == "pull-back to D~" && r.status == Status::Pass).count();
    ensure(pulled >= 10, format!("{pulled} pull-back rows"))?;
    Ok(format!("{pass} PASS, 0 FAIL, discrepant = {disc:?}"))
}

fn criterion_2(m: &GeometryModel) -> Outcome {
    let f = cubic_f(m).map_err(|e| e.to_string())?;
    ensure(f == printed_cubic(), "cubic differs from the printed one")?;
    // Oracle: expand (E_S + xD + eta x E_P)^3 with the hand trilinear form.
    let mut g = Poly2::zero();
    let basis: [([i64; 3], Poly2); 3] =
        [([0, 1, 0], Poly2::one()), ([30, 0, -2], Poly2::x()), ([0, 0, 1], &Poly2::x() * &Poly2::y())];
    for (a, pa) in &basis {
        for (b, pb) in &basis {
            for (c, pc) in &basis {
                g = &g + &(&(pa * pb) * pc).scale(&q!(hand_triple(*a, *b, *c)));
            }
        }
    }
    ensure(g == f, "hand expansion differs")?;
    Ok(format!(
        "identity exact, {} nonzero coefficients (the criterion text counts 13; the printed polynomial has 10)",
        f.num_terms()
    ))
}

fn criterion_3(m: &GeometryModel) -> Outcome {
    let c = &(m.yc("E_S") + &m.yc("D").scale_poly(&Poly2::x())) + &m.yc("E_P").scale_poly(&Poly2::y());
    let lhs = pair(&m.y, &[&c, &c, m.yc("E_S")]).map_err(|e| e.to_string())?;
    let a = Poly2::from_ints(&[(0, 0, 1), (1, 0, -4), (0, 1, -3)]);
    let b = Poly2::from_ints(&[(0, 0, 1), (1, 0, -28), (0, 1, -1)]);
    let rhs = (&a * &b).scale(&q!(18));
    ensure(lhs == rhs, format!("{lhs} != {rhs}"))?;
    Ok("(E_S+xD+yE_P)^2.E_S = 18(1-4x-3y)(1-28x-y)".into())
}

fn criterion_4(m: &GeometryModel) -> Outcome {
    let b = theorem13_bound(m).map_err(|e| e.to_string())?;
    ensure(b.lambda_min == q!(39, 22), format!("lambda_min = {}", b.lambda_min))?;
    ensure(b.vertex == (q!(11, 35), q!(-3, 35)), format!("vertex {:?}", b.vertex))?;
    for (name, value) in [("alpha.C_node,t", "0"), ("alpha.nu^*E_S", "360")] {
        let r = row(&b.report, name)?;
        ensure(r.status == Status::Pass && r.derived == value, format!("{name} = {}", r.derived))?;
    }
    let r = row(&b.report, "alpha.nu^*eta = 72(5 - 8x + 29y)")?;
    let expect = Poly2::from_ints(&[(0, 0, 360), (1, 0, -576), (0, 1, 2088)]);
    ensure(r.status == Status::Pass && r.derived == expect.to_string(), format!("alpha.nu^*eta = {}", r.derived))?;
    // Oracle: 39/22 is the slope 9/5 + r/10 of the class at r = y/x = -3/11.
    ensure(q!(9, 5) + q!(-3, 11) / q!(10) == b.lambda_min, "slope oracle")?;
    Ok(format!("lambda >= {} at ({}, {})", b.lambda_min, b.vertex.0, b.vertex.1))
}

fn criterion_5(m: &GeometryModel) -> Outcome {
    let tol = q!(1, TOLERANCE_DEN);
    let c = critical_eta(m, &tol).map_err(|e| e.to_string())?;
    let (lo, hi) = &c.lambda_star_bracket;
    ensure(c.bracket.width() <= tol, "eta bracket wider than the tolerance")?;
    ensure(c.bracket.verify().is_ok(), "eta bracket does not verify")?;
    let cap = q!(PRINTED_LAMBDA.0, PRINTED_LAMBDA.1) + q!(LAMBDA_SLACK.0, LAMBDA_SLACK.1);
    ensure(lo <= &cap, format!("lambda* bracket starts at {lo} > {cap}"))?;
    ensure(&q!(39, 22) < lo && hi < &q!(9, 5), "sandwich 39/22 < lambda* < 9/5 fails")?;
    ensure(lo.to_decimal_trunc(7) == "1.7952024" && hi.to_decimal_trunc(7) == "1.7952024", "lambda* digits")?;
    let (el, eu) = (&c.bracket.lower, &c.bracket.upper);
    ensure(el.to_decimal_round(6) == "-0.047976" && eu.to_decimal_round(6) == "-0.047976", "eta* digits")?;
    ensure(c.exclusion.certified(), "exclusion below eta* not certified")?;
    Ok(format!(
        "lambda* in [{}, {}], eta* in [{}, {}]",
        lo.to_decimal_floor(10),
        hi.to_decimal_ceil(10),
        el.to_decimal_floor(10),
        eu.to_decimal_ceil(10)
    ))
}

fn criterion_6(m: &GeometryModel) -> Outcome {
    let cert = ConeCertifier::new(m).map_err(|e| e.to_string())?;
    let sys = cert.nodal_system().map_err(|e| e.to_string())?;
    let farkas = cert.nodal_infeasibility().map_err(|e| e.to_string())?;
    farkas.replay(&sys).map_err(|e| e.to_string())?;
    // Oracle: the four rows exactly as stated, built by hand.
    let v = |a: i64, b: i64, m: i64| [("a", q!(a, 10)), ("b", q!(b, 10)), ("m", q!(m, 10))];
    let stated = IneqSystem::builder(&["a", "b", "m"])
        .row("a/5 + b < 3m", &v(-2, -10, 30), q!(0), Relation::Gt)
        .row("a/2 + b >= 9m/2", &v(5, 10, -45), q!(0), Relation::Ge)
        .row("b >= 2m", &v(0, 10, -20), q!(0), Relation::Ge)
        .row("a > 0", &v(10, 0, 0), q!(0), Relation::Gt)
        .build()
        .map_err(|e| e.to_string())?;
    let stated_cert = match feasibility(&stated) {
        Feasibility::Infeasible(c) => c,
        Feasibility::Feasible(p) => return Err(format!("stated system feasible at {p:?}")),
    };
    stated_cert.replay(&stated).map_err(|e| e.to_string())?;
    let relaxed = stated.without_row(2);
    ensure(matches!(feasibility(&relaxed), Feasibility::Feasible(_)), "relaxed system infeasible")?;
    ensure(relaxed.is_satisfied_by(&[q!(30), q!(0), q!(3)]), "(30, 0, 3) violates the relaxed system")?;
    ensure(sys.without_row(2).is_satisfied_by(&[q!(30), q!(0), q!(3)]), "(30, 0, 3) violates the model system")?;
    Ok(format!("{farkas}; stated system: {stated_cert}; witness (30, 0, 3) without b >= 2m"))
}

fn criterion_7(m: &GeometryModel) -> Outcome {
    let r = corollary48_check(m);
    let cube = row(&r, "(D+4E_S)^3")?;
    ensure(cube.status == Status::Discrepant, format!("status {}", cube.status))?;
    ensure(cube.printed == "10242" && cube.derived == "1296", "cube values")?;
    let ls = row(&r, "(D+4E_S).l_S")?;
    ensure(ls.derived == "24" && ls.status == Status::Pass, "fibre degree")?;
    let c = [30, 4, -2];
    ensure(hand_triple(c, c, c) == 1296, "oracle cube")?;
    ensure(
        r.rows.iter().any(|row| row.quantity.starts_with("sign conclusion") && row.status == Status::Pass),
        "sign conclusion",
    )?;
    Ok("printed 10242 vs derived 1296 flagged; (D+4E_S).l_S = 24 > 0 and cube > 0".into())
}

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| q!(n, d))
}

fn criterion_8(m: &GeometryModel) -> Outcome {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let v = || prop::collection::vec(rat(), 3);
    runner
        .run(&(v(), v(), v(), v(), rat()), |(a, b, c, d, s)| {
            let mk = |c: Vec<Rational>| DivClass::from_rationals(m.y.space(), c).unwrap();
            let (a, b, c, d) = (mk(a), mk(b), mk(c), mk(d));
            let p = |u: &DivClass, v: &DivClass, w: &DivClass| pair_rational(&m.y, &[u, v, w]).unwrap();
            let abc = p(&a, &b, &c);
            prop_assert_eq!(&abc, &p(&b, &a, &c));
            prop_assert_eq!(&abc, &p(&c, &b, &a));
            prop_assert_eq!(p(&(&a + &d), &b, &c), &abc + &p(&d, &b, &c));
            prop_assert_eq!(p(&a.scale(&s), &b, &c), &abc * &s);
            Ok(())
        })
        .map_err(|e| format!("pairing: {e}"))?;

    // Projection formula: every divisor against every curve family, through
    // each surface the family lives on.
    let err = |e: k3omega::Error| e.to_string();
    let mut pairs = 0;
    for (space, name) in m.class_names() {
        if space != k3omega::geometry::Y {
            continue;
        }
        let z = m.yc(&name);
        let on_es = apply_map(&m.restrict_es, z).map_err(err)?;
        let on_ep = apply_map(&m.restrict_ep, z).map_err(err)?;
        let on_dt = apply_map(&m.nu_pull, z).map_err(err)?;
        let via: [(&str, Rational); 5] = [
            ("l_S", pair_rational(&m.es, &[&on_es, m.class(ES, "l_S").map_err(err)?]).map_err(err)?),
            ("N", pair_rational(&m.ep, &[&on_ep, m.class(EP, "N").map_err(err)?]).map_err(err)?),
            ("l_P", pair_rational(&m.dt, &[&on_dt, m.class(DT, "l_node").map_err(err)?]).map_err(err)?),
            ("l_P", pair_curve_rational(&m.l_p_via_cusp, z).map_err(err)?),
            ("l_D", pair_rational(&m.dt, &[&on_dt, m.class(DT, "l_D").map_err(err)?]).map_err(err)?),
        ];
        for (curve, value) in via {
            ensure(m.y_curve(curve, z) == value, format!("{name}.{curve}: {} vs {value}", m.y_curve(curve, z)))?;
            pairs += 1;
        }
        ensure(pair_curve_rational(&m.n_via_ep, z).map_err(err)? == m.y_curve("N", z), format!("{name}.N via E_P"))?;
    }
    let l_d = push_curve(&m.nu_pull, &m.dt, m.class(DT, "l_D").map_err(err)?, "l_D").map_err(err)?;
    ensure(l_d.pairing() == m.curve("l_D").map_err(err)?.pairing(), "l_D push")?;

    for d in 2..=8 {
        let p = pluecker(d).map_err(err)?;
        ensure(
            d == p.dual_degree * (p.dual_degree - 1) - 2 * p.bitangents - 3 * p.flexes,
            format!("class formula d = {d}"),
        )?;
        ensure(p.genus == (d - 1) * (d - 2) / 2, format!("genus d = {d}"))?;
        ensure(
            p.genus == (p.dual_degree - 1) * (p.dual_degree - 2) / 2 - p.bitangents - p.flexes,
            format!("dual genus d = {d}"),
        )?;
    }
    let six = pluecker(6).map_err(err)?;
    ensure((six.dual_degree, six.bitangents, six.flexes, six.genus) == (30, 324, 72, 10), "sextic numbers")?;

    let z = m.class(POS, "zeta_S").map_err(err)? + &m.class(POS, "pi*L").map_err(err)?.scale(&q!(2));
    ensure(pair_rational(&m.pos, &[&z, &z, &z]).map_err(err)?.is_zero(), "(zeta_S+2pi*L)^3")?;
    let me = m.yc("M") + m.yc("E_S");
    ensure(m.y_triple(&me, &me, &me).is_zero(), "(M+E_S)^3")?;
    ensure(apply_map(&m.mu_s_pull, &z).map_err(err)? == me, "pull-back of zeta_S+2pi*L")?;
    Ok(format!("{PROPERTY_CASES} random class tuples, {pairs} projection pairs, Pluecker d = 2..8, (M+E_S)^3 = 0"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_k3omega"))
        .args(args)
        .env_remove("K3OMEGA_OUT_DIR")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("`{}` exited with {:?}", args.join(" "), out.status.code()))?;
    Ok(out.stdout)
}

fn criterion_9() -> Outcome {
    let input = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/verify_input.json");
    let runs: [&[&str]; 12] = [
        &["tables"],
        &["tables", "--format", "json"],
        &["tables", "--format", "csv"],
        &["verify"],
        &["verify", "--input", input, "--format", "json"],
        &["bound-lower"],
        &["bound-lower", "--format", "json"],
        &["bound-upper"],
        &["bound-upper", "--format", "csv"],
        &["figure"],
        &["figure", "--format", "csv", "--grid", "12"],
        &["report", "--format", "json"],
    ];
    for args in runs {
        let a = run_cli(args)?;
        let b = run_cli(args)?;
        ensure(!a.is_empty() && a == b, format!("`{}` differs between runs", args.join(" ")))?;
    }
    Ok(format!("{} invocations byte-identical across two runs", runs.len()))
}

fn main() {
    let m = build_model();
    let criteria: [(&str, Check<'_>); 9] = [
        ("table reproduction", Box::new(|| timed(Some(LIMIT_TABLES), || criterion_1(&m)))),
        ("cubic identity", Box::new(|| timed(Some(LIMIT_CUBIC), || criterion_2(&m)))),
        ("factorisation identity", Box::new(|| timed(None, || criterion_3(&m)))),
        ("lower bound 39/22", Box::new(|| timed(Some(LIMIT_LOWER), || criterion_4(&m)))),
        ("critical parameter and upper bound", Box::new(|| timed(Some(LIMIT_UPPER), || criterion_5(&m)))),
        ("nodal Farkas certificate", Box::new(|| timed(Some(LIMIT_NODAL), || criterion_6(&m)))),
        ("discrepancy detection", Box::new(|| timed(None, || criterion_7(&m)))),
        ("property suites", Box::new(|| timed(Some(LIMIT_PROPERTIES), || criterion_8(&m)))),
        ("determinism", Box::new(|| timed(None, criterion_9))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
