//! Braid diagram as SVG: the graphs of `h_k(t) = sin(2πq(t+k)/N)` over one
//! period, with the strand behind broken at each crossing.

use std::fmt::Write;

use minknot::braidgen::Crossing;
use minknot::oracle::CurveSampler;
use minknot::params::{epsilon_offset, KnotParams};

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 24.0;
const SAMPLES: usize = 1200;
const COLORS: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

fn to_f64(r: minknot::Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn render(params: &KnotParams, crossings: &[Crossing]) -> String {
    let sampler = CurveSampler::new(*params);
    let eps = to_f64(epsilon_offset(params.strands, params.q));
    let x = |t: f64| MARGIN + (t - eps) * (WIDTH - 2.0 * MARGIN);
    let y = |h: f64| HEIGHT / 2.0 - h * (HEIGHT / 2.0 - MARGIN);
    // Half-width of the gap, in t.
    let gap = 0.15 / (params.q as f64 * params.strands as f64);

    // (strand, time) pairs where the strand passes behind
    let unders: Vec<(u32, f64)> = crossings
        .iter()
        .map(|c| {
            let t = to_f64(c.time);
            let under = if sampler.re(c.k, t) > sampler.re(c.l, t) { c.l } else { c.k };
            (under, t)
        })
        .collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "  <title>braid diagram of {params}</title>");
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    for k in 0..params.strands {
        let mut d = String::new();
        let mut pen_down = false;
        for i in 0..=SAMPLES {
            let t = eps + i as f64 / SAMPLES as f64;
            let hidden = unders.iter().any(|&(s, tc)| s == k && (t - tc).abs() < gap);
            if hidden {
                pen_down = false;
                continue;
            }
            let cmd = if pen_down { 'L' } else { 'M' };
            let _ = write!(d, "{cmd}{:.2},{:.2} ", x(t), y(sampler.im(k, t)));
            pen_down = true;
        }
        let _ = writeln!(
            out,
            r#"  <path d="{}" fill="none" stroke="{}" stroke-width="2.5"/>"#,
            d.trim_end(),
            COLORS[k as usize % COLORS.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}
