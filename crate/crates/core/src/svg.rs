//! SVG rendering of the zero set of the bigness cubic in the `(x, y = eta x)`
//! plane, by marching squares over exact signs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::Poly2;
use crate::q;
use crate::rational::Rational;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 48.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureConfig {
    pub x_range: (Rational, Rational),
    pub y_range: (Rational, Rational),
    pub grid: usize,
    /// Vertical line `x = threshold_x`.
    pub threshold_x: Rational,
    /// Line `y = critical_slope * x`.
    pub critical_slope: Rational,
}

impl Default for FigureConfig {
    fn default() -> Self {
        FigureConfig {
            x_range: (q!(-1, 20), q!(7, 20)),
            y_range: (q!(-1, 20), q!(1, 20)),
            grid: 160,
            threshold_x: q!(3577, 100_000),
            critical_slope: q!(-47976, 1_000_000),
        }
    }
}

impl FigureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid < 2 {
            return Err(Error::InvalidArgument(format!("grid must be at least 2, got {}", self.grid)));
        }
        for (name, r) in [("x", &self.x_range), ("y", &self.y_range)] {
            if r.0 >= r.1 {
                return Err(Error::InvalidArgument(format!("degenerate {name} range {}..{}", r.0, r.1)));
            }
        }
        Ok(())
    }
}

/// A contour segment in plane coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub from: (Rational, Rational),
    pub to: (Rational, Rational),
}

fn lerp(a: &Rational, b: &Rational, t: &Rational) -> Rational {
    a + &(t * &(b - a))
}

/// Zero crossing on the edge between `p0` (value `v0`) and `p1` (value `v1`).
fn crossing(
    p0: &(Rational, Rational),
    p1: &(Rational, Rational),
    v0: &Rational,
    v1: &Rational,
) -> (Rational, Rational) {
    let t = v0 / &(v0 - v1);
    (lerp(&p0.0, &p1.0, &t), lerp(&p0.1, &p1.1, &t))
}

/// Marching-squares segments of `f = 0`. Grid values are exact; a vertex
/// counts as inside when `f > 0`.
pub fn contour_segments(f: &Poly2, cfg: &FigureConfig) -> Result<Vec<Segment>> {
    cfg.validate()?;
    let n = cfg.grid;
    let steps = q!(n as i64 - 1);
    let xs: Vec<Rational> = (0..n).map(|i| lerp(&cfg.x_range.0, &cfg.x_range.1, &(q!(i as i64) / &steps))).collect();
    let ys: Vec<Rational> = (0..n).map(|j| lerp(&cfg.y_range.0, &cfg.y_range.1, &(q!(j as i64) / &steps))).collect();
    let rows: Vec<Vec<Rational>> = ys
        .iter()
        .map(|y| {
            let p = f.specialize_y(y);
            xs.iter().map(|x| p.eval(x)).collect()
        })
        .collect();
    let mut out = Vec::new();
    for j in 0..n - 1 {
        for i in 0..n - 1 {
            // Corners counter-clockwise from bottom-left.
            let pts = [
                (xs[i].clone(), ys[j].clone()),
                (xs[i + 1].clone(), ys[j].clone()),
                (xs[i + 1].clone(), ys[j + 1].clone()),
                (xs[i].clone(), ys[j + 1].clone()),
            ];
            let vals = [&rows[j][i], &rows[j][i + 1], &rows[j + 1][i + 1], &rows[j + 1][i]];
            let inside: Vec<bool> = vals.iter().map(|v| v.is_positive()).collect();
            let code = inside.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | ((b as u8) << k));
            if code == 0 || code == 15 {
                continue;
            }
            let edge = |k: usize| {
                let l = (k + 1) % 4;
                crossing(&pts[k], &pts[l], vals[k], vals[l])
            };
            let crossed: Vec<usize> = (0..4).filter(|&k| inside[k] != inside[(k + 1) % 4]).collect();
            match crossed.as_slice() {
                [a, b] => out.push(Segment { from: edge(*a), to: edge(*b) }),
                [_, _, _, _] => {
                    let cx = xs[i].midpoint(&xs[i + 1]);
                    let cy = ys[j].midpoint(&ys[j + 1]);
                    let centre_inside = f.eval_at(&cx, &cy).is_positive();
                    // Pair each inside corner's edges when the centre agrees with it.
                    let pairs = if centre_inside == inside[0] { [(0, 1), (2, 3)] } else { [(3, 0), (1, 2)] };
                    for (a, b) in pairs {
                        out.push(Segment { from: edge(a), to: edge(b) });
                    }
                }
                _ => unreachable!("a square has an even number of sign changes"),
            }
        }
    }
    Ok(out)
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Renders the figure as a standalone SVG 1.1 document.
pub fn render_figure(f: &Poly2, cfg: &FigureConfig) -> Result<String> {
    let segments = contour_segments(f, cfg)?;
    let fr = Frame {
        x0: cfg.x_range.0.to_f64(),
        x1: cfg.x_range.1.to_f64(),
        y0: cfg.y_range.0.to_f64(),
        y1: cfg.y_range.1.to_f64(),
    };
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        WIDTH, HEIGHT, WIDTH, HEIGHT
    );
    let _ = writeln!(w, "<title>Zero set of (E_S + xD + yE_P)^3</title>");
    let (l, r, t, b) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        w,
        r#"<defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        num(l),
        num(t),
        num(r - l),
        num(b - t)
    );
    let _ = writeln!(w, r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##);
    let _ = writeln!(
        w,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#444444" stroke-width="1"/>"##,
        num(l),
        num(t),
        num(r - l),
        num(b - t)
    );

    let _ = writeln!(w, r##"<g id="axes" stroke="#999999" stroke-width="0.8" clip-path="url(#plot)">"##);
    if fr.x0 < 0.0 && fr.x1 > 0.0 {
        let _ = writeln!(w, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, num(fr.px(0.0)), num(t), num(b));
    }
    if fr.y0 < 0.0 && fr.y1 > 0.0 {
        let _ = writeln!(w, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, num(fr.py(0.0)), num(l), num(r));
    }
    let _ = writeln!(w, "</g>");

    let _ = writeln!(w, r##"<g id="contour" stroke="#d00000" stroke-width="1.6" fill="none" clip-path="url(#plot)">"##);
    let mut d = String::new();
    for seg in &segments {
        let _ = write!(
            d,
            "M{} {}L{} {}",
            num(fr.px(seg.from.0.to_f64())),
            num(fr.py(seg.from.1.to_f64())),
            num(fr.px(seg.to.0.to_f64())),
            num(fr.py(seg.to.1.to_f64()))
        );
    }
    if !d.is_empty() {
        let _ = writeln!(w, r#"<path d="{d}"/>"#);
    }
    let _ = writeln!(w, "</g>");

    let tx = fr.px(cfg.threshold_x.to_f64());
    let _ = writeln!(w, r##"<g id="threshold" stroke="#0030d0" stroke-width="1.2" clip-path="url(#plot)">"##);
    let _ = writeln!(w, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, num(tx), num(t), num(b));
    let _ = writeln!(w, "</g>");

    let k = cfg.critical_slope.to_f64();
    let _ = writeln!(w, r##"<g id="critical" stroke="#008a00" stroke-width="1.2" clip-path="url(#plot)">"##);
    let _ = writeln!(
        w,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        num(fr.px(fr.x0)),
        num(fr.py(k * fr.x0)),
        num(fr.px(fr.x1)),
        num(fr.py(k * fr.x1))
    );
    let _ = writeln!(w, "</g>");

    let origin_sign = f.eval_at(&Rational::zero(), &Rational::zero()).signum();
    let _ = writeln!(w, r#"<g id="origin">"#);
    if fr.x0 <= 0.0 && fr.x1 >= 0.0 && fr.y0 <= 0.0 && fr.y1 >= 0.0 {
        let (ox, oy) = (fr.px(0.0), fr.py(0.0));
        let _ = writeln!(w, r##"<circle cx="{}" cy="{}" r="3" fill="#000000"/>"##, num(ox), num(oy));
        let label = if origin_sign > 0 { "origin, f > 0" } else { "origin" };
        let _ = writeln!(
            w,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">{label}</text>"#,
            num(ox + 5.0),
            num(oy - 6.0)
        );
    }
    let _ = writeln!(w, "</g>");

    let _ = writeln!(w, r#"<g id="legend" font-family="sans-serif" font-size="12">"#);
    let entries = [
        ("#d00000", "(E_S + xD + yE_P)^3 = 0".to_string()),
        ("#0030d0", format!("x = {}", cfg.threshold_x.to_decimal_round(5))),
        ("#008a00", format!("y = {}x", cfg.critical_slope.to_decimal_round(6))),
    ];
    for (idx, (colour, text)) in entries.iter().enumerate() {
        let y = t + 16.0 + 18.0 * idx as f64;
        let _ = writeln!(
            w,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="2"/>"#,
            num(r - 200.0),
            num(y - 4.0),
            num(r - 176.0),
            num(y - 4.0)
        );
        let _ = writeln!(w, r#"<text x="{}" y="{}">{text}</text>"#, num(r - 170.0), num(y));
    }
    let _ = writeln!(w, "</g>");

    let _ = writeln!(w, r##"<g id="ticks" font-family="sans-serif" font-size="11" fill="#333333">"##);
    let _ = writeln!(w, r#"<text x="{}" y="{}">{}</text>"#, num(l), num(b + 16.0), cfg.x_range.0.to_decimal_round(3));
    let _ = writeln!(
        w,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
        num(r),
        num(b + 16.0),
        cfg.x_range.1.to_decimal_round(3)
    );
    let _ = writeln!(
        w,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
        num(l - 4.0),
        num(b),
        cfg.y_range.0.to_decimal_round(3)
    );
    let _ = writeln!(
        w,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
        num(l - 4.0),
        num(t + 10.0),
        cfg.y_range.1.to_decimal_round(3)
    );
    let _ = writeln!(w, r#"<text x="{}" y="{}" text-anchor="middle">x</text>"#, num((l + r) / 2.0), num(b + 30.0));
    let _ = writeln!(w, r#"<text x="{}" y="{}" text-anchor="middle">y</text>"#, num(l - 30.0), num((t + b) / 2.0));
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    Ok(s)
}
