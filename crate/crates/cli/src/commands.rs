//! One function per subcommand, each producing a [`Document`].

use anyhow::{bail, Context, Result};
use k3omega::cone::{cone_report, run_input, theorem13_bound, ConeCertifier, ConeInput};
use k3omega::geometry::{numerology, verify_tables, GeometryModel};
use k3omega::lp::{feasibility, Feasibility, Relation, Row};
use k3omega::positivity::{
    conditional_bound, corollary48_check, critical_eta, cubic_f, cubic_xy, eta_window, positivity_report,
    sample_region, samples_to_csv,
};
use k3omega::report::{Report, Status};
use k3omega::svg::{render_figure, FigureConfig};
use k3omega::{q, Rational};

use crate::output::Document;

/// `p/q = d…` with the decimal truncated to four places.
fn exact_and_decimal(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} = {}…", r.to_decimal_trunc(4))
    }
}

pub fn tables(model: &GeometryModel) -> Document {
    let mut doc = Document::new("tables");
    doc.reports = vec![verify_tables(model), numerology(model), corollary48_check(model)];
    let count = |s| doc.reports.iter().map(|r| r.count(s)).sum::<usize>();
    let (pass, fail, disc) = (count(Status::Pass), count(Status::Fail), count(Status::Discrepant));
    doc.line("rows", format!("{pass} PASS, {fail} FAIL, {disc} DISCREPANT"));
    doc
}

pub fn verify(model: &GeometryModel, input: Option<&ConeInput>) -> Result<Document> {
    let cert = ConeCertifier::new(model)?;
    let mut doc = Document::new("verify");
    doc.reports.push(cone_report(&cert)?);
    let Some(input) = input else {
        return Ok(doc);
    };
    let out = run_input(&cert, input)?;
    let mut rep = Report::new("Input");
    for (k, t) in out.triples.iter().enumerate() {
        let g = format!("triple {} = ({}, {}, {})", k + 1, t.triple.a, t.triple.b, t.triple.m);
        for row in &t.verdict.rows {
            let state = if row.satisfied { "satisfied" } else { "violated" };
            rep.push(&g, &row.name, String::new(), row.slack.to_string(), Status::Info, "input", state);
        }
        rep.push(&g, "necessary conditions", String::new(), t.verdict.overall.to_string(), Status::Info, "input", "");
        if let Some(s) = &t.slope {
            rep.push(&g, "slope", String::new(), s.to_string(), Status::Info, "input", "");
        }
        if let Some(e) = t.extremal {
            rep.push(&g, "passes extremality test", String::new(), e.to_string(), Status::Info, "input", "");
        }
    }
    for s in &out.systems {
        let g = format!("system {}", s.name);
        let derived = match &s.feasibility {
            Feasibility::Feasible(p) => format!("feasible at ({})", join(p)),
            Feasibility::Infeasible(c) => format!("infeasible: {c}"),
        };
        rep.push(&g, "feasibility", String::new(), derived, Status::Info, "input", "");
        if let Some(o) = &s.optimum {
            rep.push(&g, "optimum", String::new(), serde_json::to_string(o)?, Status::Info, "input", "");
        }
    }
    doc.line("triples", out.triples.len().to_string());
    doc.line("systems", out.systems.len().to_string());
    doc.reports.push(rep);
    doc.data = Some(serde_json::to_value(&out)?);
    Ok(doc)
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Lower-bound lines and reports; shared by `bound-lower` and `report`.
fn lower(model: &GeometryModel, doc: &mut Document) -> Result<Rational> {
    let bound = theorem13_bound(model)?;
    let cert = ConeCertifier::new(model)?;
    doc.line("lambda lower bound", exact_and_decimal(&bound.lambda_min));
    doc.line("vertex (x, y)", format!("({}, {})", bound.vertex.0, bound.vertex.1));
    doc.line("min y/x", bound.ratio.to_string());
    for l in bound.system.render() {
        doc.line("constraint (t = 1/x, r = y/x)", l);
    }

    // Optimality: adding r < min y/x makes the system infeasible.
    let mut rep = Report::new("Certificates");
    let cut = Row::new("r < min y/x", vec![q!(0), q!(-1)], bound.ratio.clone(), Relation::Gt);
    let below = bound.system.with_row(cut)?;
    match feasibility(&below) {
        Feasibility::Infeasible(c) => {
            let replay = c.replay(&below);
            doc.line("optimality certificate", c.to_string());
            rep.push(
                "lower bound",
                "Farkas certificate for r < min y/x replays",
                "true".into(),
                replay.is_ok().to_string(),
                if replay.is_ok() { Status::Pass } else { Status::Fail },
                "theorem-main1-3",
                "",
            );
        }
        Feasibility::Feasible(p) => rep.push(
            "lower bound",
            "Farkas certificate for r < min y/x replays",
            "true".into(),
            format!("feasible at ({})", join(&p)),
            Status::Fail,
            "theorem-main1-3",
            "",
        ),
    }
    let nodal = cert.nodal_infeasibility()?;
    let replay = nodal.replay(&cert.nodal_system()?);
    doc.line("nodal certificate", nodal.to_string());
    rep.push(
        "nodal corollary",
        "Farkas certificate replays",
        "true".into(),
        replay.is_ok().to_string(),
        if replay.is_ok() { Status::Pass } else { Status::Fail },
        "corollarynodal",
        "",
    );
    doc.reports.push(bound.report);
    doc.reports.push(cone_report(&cert)?);
    doc.reports.push(rep);
    Ok(bound.lambda_min)
}

pub fn bound_lower(model: &GeometryModel) -> Result<Document> {
    let mut doc = Document::new("bound-lower");
    lower(model, &mut doc)?;
    Ok(doc)
}

/// Upper-bound lines and reports; shared by `bound-upper` and `report`.
fn upper(model: &GeometryModel, tolerance: &Rational, lambda_min: &Rational, doc: &mut Document) -> Result<()> {
    let crit = critical_eta(model, tolerance)?;
    let digits = decimal_digits(tolerance);
    let (el, eu) = crit.eta_decimals(digits);
    let (ll, lu) = crit.lambda_decimals(digits);
    doc.line("tolerance", tolerance.to_string());
    doc.line("eta* bracket", format!("[{}, {}]", crit.bracket.lower, crit.bracket.upper));
    doc.line("eta* bracket (decimal)", format!("[{el}, {eu}]"));
    doc.line("lambda* bracket", format!("[{}, {}]", crit.lambda_star_bracket.0, crit.lambda_star_bracket.1));
    doc.line("lambda* bracket (decimal)", format!("[{ll}, {lu}]"));
    doc.line("lambda upper bound", format!("lambda <= {lu}"));
    let sandwich = lambda_min < &crit.lambda_star_bracket.0 && crit.lambda_star_bracket.1 < q!(9, 5);
    doc.line("sandwich", format!("{lambda_min} <= lambda_extremal <= lambda* <= {lu} < 9/5"));

    let mut rep = Report::new("Sandwich");
    rep.push(
        "sandwich",
        "lower bound < lambda* bracket < 9/5",
        "true".into(),
        sandwich.to_string(),
        if sandwich { Status::Pass } else { Status::Fail },
        "theorem-main1",
        "",
    );
    doc.reports.push(positivity_report(model, &crit)?);
    doc.reports.push(conditional_bound(model)?.1);
    doc.reports.push(rep);
    Ok(())
}

/// Enough decimal places to resolve a bracket of width `tol`, plus two.
fn decimal_digits(tol: &Rational) -> u32 {
    let mut d = 0;
    let mut scale = Rational::one();
    while &scale > tol && d < 30 {
        scale = &scale / &q!(10);
        d += 1;
    }
    d + 2
}

pub fn bound_upper(model: &GeometryModel, tolerance: &Rational) -> Result<Document> {
    let mut doc = Document::new("bound-upper");
    let lambda_min = theorem13_bound(model)?.lambda_min;
    doc.line("lambda lower bound", exact_and_decimal(&lambda_min));
    upper(model, tolerance, &lambda_min, &mut doc)?;
    Ok(doc)
}

pub fn report(model: &GeometryModel, tolerance: &Rational) -> Result<Document> {
    let mut doc = tables(model);
    doc.command = "report".into();
    let lambda_min = lower(model, &mut doc)?;
    upper(model, tolerance, &lambda_min, &mut doc)?;
    Ok(doc)
}

pub fn figure_svg(model: &GeometryModel, cfg: &FigureConfig) -> Result<String> {
    let g = cubic_xy(model)?;
    Ok(render_figure(&g, cfg)?)
}

/// Exact signs of the cubic on `x-range` times the eta window.
pub fn figure_samples(model: &GeometryModel, cfg: &FigureConfig) -> Result<String> {
    cfg.validate()?;
    let f = cubic_f(model)?;
    let samples = sample_region(&f, &cfg.x_range, &eta_window(), cfg.grid)?;
    Ok(samples_to_csv(&samples)?)
}

pub fn read_input(path: &str) -> Result<ConeInput> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    let input: ConeInput = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    if input.triples.is_empty() && input.systems.is_empty() {
        bail!("{path}: input lists no triples and no systems");
    }
    for s in &input.systems {
        if let Some(c) = &s.objective {
            if c.len() != s.system.num_vars() {
                bail!(
                    "{path}: objective of `{}` has {} entries for {} variables",
                    s.name,
                    c.len(),
                    s.system.num_vars()
                );
            }
        }
    }
    Ok(input)
}
