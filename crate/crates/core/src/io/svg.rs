//! Minimal deterministic SVG line plots and heatmaps.

use std::fmt::Write;

const W: f64 = 640.0;
const H: f64 = 420.0;
const PAD: f64 = 56.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub struct Series<'a> {
    pub name: &'a str,
    pub points: &'a [(f64, f64)],
}

fn bounds(it: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = it
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if hi - lo < 1e-300 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn header(s: &mut String, title: &str, xlabel: &str, ylabel: &str) {
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#,
        W / 2.0,
        esc(title)
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        W / 2.0,
        H - 12.0,
        esc(xlabel)
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>"#,
        H / 2.0,
        H / 2.0,
        esc(ylabel)
    );
}

fn axes_box(s: &mut String, x: (f64, f64), y: (f64, f64)) {
    let _ = writeln!(
        s,
        r#"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        W - 2.0 * PAD,
        H - 2.0 * PAD
    );
    for (v, px, py, anchor) in [
        (x.0, PAD, H - PAD + 16.0, "start"),
        (x.1, W - PAD, H - PAD + 16.0, "end"),
        (y.0, PAD - 4.0, H - PAD, "end"),
        (y.1, PAD - 4.0, PAD + 10.0, "end"),
    ] {
        let _ = writeln!(s, r#"<text x="{px}" y="{py}" text-anchor="{anchor}">{:.4}</text>"#, v);
    }
}

fn esc(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn line_plot(title: &str, xlabel: &str, ylabel: &str, series: &[Series]) -> String {
    let x = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let y = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)));
    let sx = |v: f64| PAD + (v - x.0) / (x.1 - x.0) * (W - 2.0 * PAD);
    let sy = |v: f64| H - PAD - (v - y.0) / (y.1 - y.0) * (H - 2.0 * PAD);
    let mut s = String::new();
    header(&mut s, title, xlabel, ylabel);
    axes_box(&mut s, x, y);
    for (i, ser) in series.iter().enumerate() {
        let c = COLORS[i % COLORS.len()];
        let pts: Vec<String> = ser
            .points
            .iter()
            .filter(|p| p.0.is_finite() && p.1.is_finite())
            .map(|p| format!("{:.2},{:.2}", sx(p.0), sy(p.1)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{c}" stroke-width="1.5" points="{}"/>"#,
            pts.join(" ")
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" fill="{c}">{}</text>"#,
            W - PAD - 4.0,
            PAD + 14.0 + 14.0 * i as f64,
            esc(ser.name)
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Grey-scale heatmap of `values[iy * nx + ix]` over `x_range × y_range`.
#[allow(clippy::too_many_arguments)]
pub fn heatmap(
    title: &str,
    xlabel: &str,
    ylabel: &str,
    nx: usize,
    ny: usize,
    values: &[f64],
    x_range: (f64, f64),
    y_range: (f64, f64),
) -> String {
    let (lo, hi) = bounds(values.iter().copied());
    let mut s = String::new();
    header(&mut s, title, xlabel, ylabel);
    let (cw, ch) = ((W - 2.0 * PAD) / nx as f64, (H - 2.0 * PAD) / ny as f64);
    for iy in 0..ny {
        for ix in 0..nx {
            let v = values[iy * nx + ix];
            let level = if v.is_finite() {
                (255.0 * (1.0 - (v - lo) / (hi - lo))).round() as u8
            } else {
                255
            };
            let _ = writeln!(
                s,
                r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="rgb({level},{level},{level})"/>"#,
                PAD + ix as f64 * cw,
                H - PAD - (iy + 1) as f64 * ch,
                cw + 0.05,
                ch + 0.05
            );
        }
    }
    axes_box(&mut s, x_range, y_range);
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plots_are_well_formed_and_deterministic() {
        let pts = [(0.0, 1.0), (1.0, 2.0), (2.0, f64::NAN)];
        let a = line_plot(
            "t",
            "x",
            "y",
            &[Series {
                name: "a<b",
                points: &pts,
            }],
        );
        assert_eq!(
            a,
            line_plot(
                "t",
                "x",
                "y",
                &[Series {
                    name: "a<b",
                    points: &pts
                }]
            )
        );
        assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>") && a.contains("a&lt;b"));
        let h = heatmap("h", "x", "y", 2, 2, &[0.0, 1.0, 2.0, 3.0], (0.0, 1.0), (0.0, 1.0));
        assert_eq!(h.matches("<rect").count(), 2 + 4);
    }
}
