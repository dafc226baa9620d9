//! SVG rendering of trace CSV rows.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::export::TraceRow;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 24.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// Renders components as polylines in the plane, singletons as circled
/// markers and inner endpoints of discontinuities as filled markers, with
/// dashed circles at the discontinuity moduli.
pub fn render_svg(rows: &[TraceRow]) -> String {
    let mut comps: BTreeMap<usize, Vec<&TraceRow>> = BTreeMap::new();
    for row in rows {
        comps.entry(row.component_id).or_default().push(row);
    }
    for pts in comps.values_mut() {
        pts.sort_by(|a, b| a.r.partial_cmp(&b.r).unwrap());
    }
    let extent = rows.iter().map(|r| r.r).fold(0.0, f64::max).max(1e-12) * 1.05;
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let px = |x: f64| SIZE / 2.0 + x * scale;
    let py = |y: f64| SIZE / 2.0 - y * scale;

    let mut moduli: Vec<f64> = comps
        .values()
        .filter(|pts| !pts[0].censored_inner)
        .map(|pts| pts[0].r)
        .collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).unwrap());
    moduli.dedup_by(|a, b| (*a - *b).abs() <= 1e-6 * b.abs());

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (lo, hi) = (MARGIN / 2.0, SIZE - MARGIN / 2.0);
    let c = SIZE / 2.0;
    let _ = writeln!(
        svg,
        r##"<g stroke="#888" stroke-width="0.8"><line x1="{lo}" y1="{c}" x2="{hi}" y2="{c}"/><line x1="{c}" y1="{lo}" x2="{c}" y2="{hi}"/></g>"##
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-size="11" font-family="sans-serif">{extent:.3}</text>"#,
        hi - 40.0,
        c - 4.0
    );
    for m in &moduli {
        let _ = writeln!(
            svg,
            r##"<circle class="modulus" cx="{c}" cy="{c}" r="{:.3}" fill="none" stroke="#bbb" stroke-dasharray="4 3"/>"##,
            m * scale
        );
    }
    for (i, (id, pts)) in comps.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        if pts[0].is_singleton {
            let (x, y) = (px(pts[0].x), py(pts[0].y));
            let _ = writeln!(
                svg,
                r#"<circle class="singleton" data-component="{id}" cx="{x:.3}" cy="{y:.3}" r="6" fill="none" stroke="{colour}" stroke-width="1.5"/>"#
            );
            let _ = writeln!(
                svg,
                r#"<circle cx="{x:.3}" cy="{y:.3}" r="1.5" fill="{colour}"/>"#
            );
            continue;
        }
        let points: Vec<String> = pts
            .iter()
            .map(|p| format!("{:.3},{:.3}", px(p.x), py(p.y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="component" data-component="{id}" points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
            points.join(" ")
        );
        if !pts[0].censored_inner {
            let _ = writeln!(
                svg,
                r#"<circle class="endpoint" data-component="{id}" cx="{:.3}" cy="{:.3}" r="3.5" fill="{colour}"/>"#,
                px(pts[0].x),
                py(pts[0].y)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(id: usize, r: f64, theta: f64, inner: bool, single: bool) -> TraceRow {
        TraceRow {
            component_id: id,
            r,
            theta,
            x: r * theta.cos(),
            y: r * theta.sin(),
            modulus_value: 1.0,
            censored_inner: inner,
            censored_outer: false,
            is_singleton: single,
        }
    }

    #[test]
    fn markers_by_kind() {
        let rows = vec![
            row(0, 0.25, std::f64::consts::PI, true, false),
            row(0, 0.5, std::f64::consts::PI, true, false),
            row(1, 0.5, 0.0, false, false),
            row(1, 1.0, 0.0, false, false),
            row(2, 0.75, 0.0, false, true),
        ];
        let svg = render_svg(&rows);
        assert_eq!(svg.matches(r#"class="component""#).count(), 2);
        assert_eq!(svg.matches(r#"class="endpoint""#).count(), 1);
        assert_eq!(svg.matches(r#"class="singleton""#).count(), 1);
        assert_eq!(svg.matches(r#"class="modulus""#).count(), 2);
    }
}
