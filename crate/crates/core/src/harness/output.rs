use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::stats::LearningCurve;
use crate::error::{Error, Result};

/// Which direction of the y-axis is good.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Fewer steps per episode is better (grid tasks).
    LowerBetter,
    /// More steps per episode is better (cart-pole).
    HigherBetter,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::LowerBetter => "lower is better",
            Orientation::HigherBetter => "higher is better",
        }
    }

    /// Whether AUC `a` beats AUC `b`.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Orientation::LowerBetter => a < b,
            Orientation::HigherBetter => a > b,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// `episode,mean,stderr,auc_total` with one row per episode. Floats use Rust's
/// shortest round-trip formatting, so parsing a cell gives back the exact value.
pub fn curve_csv(curve: &LearningCurve) -> String {
    let auc = curve.auc();
    let mut out = String::from("episode,mean,stderr,auc_total\n");
    for (e, (m, s)) in curve.mean().iter().zip(curve.stderr()).enumerate() {
        let _ = writeln!(out, "{},{},{},{}", e + 1, m, s, auc);
    }
    out
}

pub fn emit_csv(curve: &LearningCurve, path: &Path) -> Result<()> {
    write_file(path, &curve_csv(curve))
}

/// Mean column of a file written by [`emit_csv`].
pub fn read_csv_means(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "episode,mean,stderr,auc_total")) => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                msg: "missing curve header".into(),
            })
        }
    }
    lines
        .map(|(i, line)| {
            line.split(',')
                .nth(1)
                .and_then(|m| m.parse::<f64>().ok())
                .ok_or_else(|| Error::Parse {
                    line: i + 1,
                    msg: format!("bad row `{line}`"),
                })
        })
        .collect()
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn nice_ticks(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let span = (hi - lo).max(f64::EPSILON);
    let raw = span / count as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| span / s <= count as f64)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() * step;
    (0..)
        .map(|i| first + i as f64 * step)
        .take_while(|t| *t <= hi + step * 1e-9)
        .collect()
}

/// Renders mean episode length against episode for each named curve as SVG,
/// with a translucent band of one standard error either side of the mean.
pub fn plot_svg(curves: &[(String, LearningCurve)], title: &str, orientation: Orientation) -> Result<String> {
    if curves.is_empty() {
        return Err(Error::EmptyPlot);
    }
    let (width, height) = (760.0, 460.0);
    let (left, right, top, bottom) = (70.0, 190.0, 40.0, 50.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;

    let series: Vec<(Vec<f64>, Vec<f64>)> = curves.iter().map(|(_, c)| (c.mean(), c.stderr())).collect();
    let episodes = curves.iter().map(|(_, c)| c.episodes()).max().unwrap_or(1);
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for (m, s) in &series {
        for (m, s) in m.iter().zip(s) {
            y_lo = y_lo.min(m - s);
            y_hi = y_hi.max(m + s);
        }
    }
    y_lo = y_lo.min(0.0);
    if y_hi <= y_lo {
        y_hi = y_lo + 1.0;
    }
    let x_max = episodes.max(2) as f64;
    let px = |e: f64| left + (e - 1.0) / (x_max - 1.0) * plot_w;
    let py = |v: f64| top + (1.0 - (v - y_lo) / (y_hi - y_lo)) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        left + plot_w / 2.0,
        escape(title)
    );

    // axes and ticks
    let _ = writeln!(
        svg,
        r#"<g stroke="black" fill="none"><line x1="{left}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{left}" y1="{top}" x2="{left}" y2="{y0}"/></g>"#,
        y0 = top + plot_h,
        x1 = left + plot_w
    );
    for t in nice_ticks(1.0, x_max, 6) {
        let x = px(t);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{y0}" x2="{x:.2}" y2="{y1}" stroke="black"/><text x="{x:.2}" y="{ty}" text-anchor="middle">{t}</text>"#,
            y0 = top + plot_h,
            y1 = top + plot_h + 5.0,
            ty = top + plot_h + 18.0
        );
    }
    for t in nice_ticks(y_lo, y_hi, 6) {
        let y = py(t);
        let _ = writeln!(
            svg,
            r#"<line x1="{x0}" y1="{y:.2}" x2="{left}" y2="{y:.2}" stroke="black"/><text x="{tx}" y="{ty:.2}" text-anchor="end">{t}</text>"#,
            x0 = left - 5.0,
            tx = left - 8.0,
            ty = y + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">episode</text>"#,
        left + plot_w / 2.0,
        height - 12.0
    );
    let _ = writeln!(
        svg,
        r#"<text transform="translate(18 {}) rotate(-90)" text-anchor="middle">steps per episode ({})</text>"#,
        top + plot_h / 2.0,
        orientation.label()
    );

    for (i, ((name, _), (mean, se))) in curves.iter().zip(&series).enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut band = String::new();
        for (e, (m, s)) in mean.iter().zip(se).enumerate() {
            let _ = write!(band, "{:.2},{:.2} ", px(e as f64 + 1.0), py(m + s));
        }
        for (e, (m, s)) in mean.iter().zip(se).enumerate().rev() {
            let _ = write!(band, "{:.2},{:.2} ", px(e as f64 + 1.0), py(m - s));
        }
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="{color}" fill-opacity="0.2" stroke="none"/>"#,
            band.trim_end()
        );
        let line: Vec<String> = mean
            .iter()
            .enumerate()
            .map(|(e, m)| format!("{:.2},{:.2}", px(e as f64 + 1.0), py(*m)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            line.join(" ")
        );
        let ly = top + 10.0 + 20.0 * i as f64;
        let lx = left + plot_w + 15.0;
        let _ = writeln!(
            svg,
            r#"<g class="legend-entry"><rect x="{lx}" y="{}" width="14" height="4" fill="{color}"/><text x="{}" y="{}">{}</text></g>"#,
            ly - 2.0,
            lx + 20.0,
            ly + 4.0,
            escape(name)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_plot(curves: &[(String, LearningCurve)], path: &Path, title: &str, orientation: Orientation) -> Result<()> {
    write_file(path, &plot_svg(curves, title, orientation)?)
}
