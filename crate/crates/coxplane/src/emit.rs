//! CSV, JSON and SVG writers for planar point sets.
//!
//! Output depends only on the point set and the style, so repeated runs are
//! byte-identical.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use coxplane_core::pointset::Normalizer;
use coxplane_core::{GoldenRational, PlanarPoint, Plane, PointSet2D};
use serde::{Deserialize, Serialize};

use crate::config::SvgStyle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        }
    }
}

/// Shortest text that parses back to `x`; `-0` is written as `0`.
pub fn float_text(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x}")
}

/// `x` rounded to six decimals, for drawing coordinates.
fn coord_text(x: f64) -> String {
    float_text((x * 1e6).round() / 1e6)
}

pub fn to_csv(points: &PointSet2D) -> String {
    let mut out = String::from("x,y\n");
    for p in &points.points {
        let _ = writeln!(out, "{},{}", float_text(p.fx), float_text(p.fy));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonNormalizer {
    name: String,
    norm_squared: GoldenRational,
    negative: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonPoint {
    plane: Plane,
    x: GoldenRational,
    y: GoldenRational,
    x_normalizer: String,
    y_normalizer: String,
    fx: f64,
    fy: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDoc {
    metadata: Vec<(String, String)>,
    normalizers: Vec<JsonNormalizer>,
    collisions: usize,
    points: Vec<JsonPoint>,
}

fn normalizer_pair(plane: Plane) -> [Normalizer; 2] {
    let (a, b) = Normalizer::for_plane(plane);
    [a, b]
}

pub fn to_json(points: &PointSet2D) -> String {
    let normalizers = [Plane::Parallel, Plane::Perpendicular]
        .into_iter()
        .flat_map(normalizer_pair)
        .map(|n| JsonNormalizer { name: n.name.into(), norm_squared: n.norm_squared, negative: n.sign.is_negative() })
        .collect();
    let doc = JsonDoc {
        metadata: points.metadata.clone(),
        normalizers,
        collisions: points.collisions,
        points: points
            .points
            .iter()
            .map(|p| {
                let [nx, ny] = normalizer_pair(p.plane);
                JsonPoint {
                    plane: p.plane,
                    x: p.x.clone(),
                    y: p.y.clone(),
                    x_normalizer: nx.name.into(),
                    y_normalizer: ny.name.into(),
                    fx: p.fx + 0.0,
                    fy: p.fy + 0.0,
                }
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("point sets serialize");
    s.push('\n');
    s
}

/// Inverse of [`to_json`].
pub fn from_json(text: &str) -> Result<PointSet2D> {
    let doc: JsonDoc = serde_json::from_str(text).context("parsing point set JSON")?;
    let points =
        doc.points.into_iter().map(|p| PlanarPoint { plane: p.plane, x: p.x, y: p.y, fx: p.fx, fy: p.fy }).collect();
    Ok(PointSet2D { points, metadata: doc.metadata, collisions: doc.collisions })
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn to_svg(points: &PointSet2D, style: &SvgStyle) -> String {
    // SVG y grows downwards.
    let xs = points.points.iter().map(|p| p.fx);
    let ys = points.points.iter().map(|p| -p.fy);
    let bounds = |it: &mut dyn Iterator<Item = f64>| {
        it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    };
    let (x0, x1) = bounds(&mut xs.clone());
    let (y0, y1) = bounds(&mut ys.clone());
    let (x0, x1, y0, y1) = if points.is_empty() { (-1.0, 1.0, -1.0, 1.0) } else { (x0, x1, y0, y1) };
    let extent = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = style.margin * extent;
    let r = style.point_radius * extent;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="{} {} {} {}">"#,
        coord_text(x0 - pad),
        coord_text(y0 - pad),
        coord_text(x1 - x0 + 2.0 * pad),
        coord_text(y1 - y0 + 2.0 * pad),
        s = style.size,
    );
    if !points.metadata.is_empty() {
        out.push_str("<metadata>");
        for (k, v) in &points.metadata {
            let _ = write!(out, "{}={};", xml_escape(k), xml_escape(v));
        }
        out.push_str("</metadata>\n");
    }
    let _ = writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
        coord_text(x0 - pad),
        coord_text(y0 - pad),
        coord_text(x1 - x0 + 2.0 * pad),
        coord_text(y1 - y0 + 2.0 * pad),
        xml_escape(&style.background),
    );
    let _ = writeln!(
        out,
        r#"<g fill="{}" stroke="{}" stroke-width="{}">"#,
        xml_escape(&style.fill),
        xml_escape(&style.stroke),
        coord_text(style.stroke_width * extent),
    );
    for p in &points.points {
        let _ =
            writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, coord_text(p.fx), coord_text(-p.fy), coord_text(r));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render(points: &PointSet2D, format: Format, style: &SvgStyle) -> String {
    match format {
        Format::Csv => to_csv(points),
        Format::Json => to_json(points),
        Format::Svg => to_svg(points, style),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn origin_set() -> PointSet2D {
        PointSet2D::new(vec![PlanarPoint::origin(Plane::Parallel)], vec![("cmd".into(), "test".into())])
    }

    #[test]
    fn csv_of_origin() {
        assert_eq!(to_csv(&origin_set()), "x,y\n0,0\n");
        assert_eq!(to_csv(&PointSet2D::empty()), "x,y\n");
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(float_text(-0.0), "0");
        assert_eq!(float_text(0.1), "0.1");
        assert_eq!(float_text(-1.5), "-1.5");
    }

    #[test]
    fn json_round_trip() {
        let p =
            PlanarPoint::new(Plane::Perpendicular, GoldenRational::from_fractions(1, 3, -2, 7), GoldenRational::tau());
        let set = PointSet2D::new(vec![p, PlanarPoint::origin(Plane::Perpendicular)], vec![("k".into(), "v".into())]);
        assert_eq!(from_json(&to_json(&set)).unwrap(), set);
        assert_eq!(from_json(&to_json(&PointSet2D::empty())).unwrap(), PointSet2D::empty());
    }

    #[test]
    fn svg_is_well_formed_for_empty_and_single_sets() {
        let style = SvgStyle::default();
        for set in [PointSet2D::empty(), origin_set()] {
            let s = to_svg(&set, &style);
            assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
            assert_eq!(s.matches("<circle").count(), set.len());
        }
    }

    #[test]
    fn svg_escapes_metadata() {
        let set = PointSet2D::new(vec![], vec![("a<b".into(), "\"x\"&".into())]);
        let s = to_svg(&set, &SvgStyle::default());
        assert!(s.contains("a&lt;b=&quot;x&quot;&amp;;"));
    }
}
