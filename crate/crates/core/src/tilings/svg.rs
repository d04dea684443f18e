use std::collections::HashSet;
use std::fmt::Write;

use super::family::{extract_family, Direction};
use super::geometry::{Lozenge, TriPoint};
use super::region::Region;
use super::Tiling;

const SCALE: f64 = 40.0;
const MARGIN: f64 = 10.0;
const LIGHT: &str = "#d9d9d9";
const DARK: &str = "#8c8c8c";
const BOTH: &str = "#6e6e6e";

/// Which rhombus-path families to shade when a tiling is drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Shading {
    /// Light fill on the single −π/3 path.
    pub path_a: bool,
    /// Dark fill on the π/3 paths.
    pub paths_b: bool,
}

impl Shading {
    pub const NONE: Shading = Shading { path_a: false, paths_b: false };
    pub const A: Shading = Shading { path_a: true, paths_b: false };
    pub const B: Shading = Shading { path_a: false, paths_b: true };
    pub const BOTH: Shading = Shading { path_a: true, paths_b: true };
}

fn family_set(tiling: &Tiling, direction: Direction) -> HashSet<Lozenge> {
    extract_family(tiling, direction).map(|f| f.lozenges().copied().collect()).unwrap_or_default()
}

/// Renders the region contour and, optionally, a tiling as an SVG 1.1
/// document. Output depends only on the arguments.
pub fn render_svg(region: &Region, overlay: Option<&Tiling>, shading: Shading) -> String {
    let mut points: Vec<TriPoint> = region.boundary().to_vec();
    if let Some(t) = overlay {
        points.extend(t.lozenges().iter().flat_map(|l| l.corners()));
    }
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    if points.is_empty() {
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1\" height=\"1\" viewBox=\"0 0 1 1\">\n</svg>\n",
        );
        return out;
    }
    let cart: Vec<(f64, f64)> = points.iter().map(|p| p.cartesian()).collect();
    let min_x = cart.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_x = cart.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = cart.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_y = cart.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;
    let project = |p: TriPoint| {
        let (x, y) = p.cartesian();
        ((x - min_x) * SCALE + MARGIN, (max_y - y) * SCALE + MARGIN)
    };
    let polygon = |corners: &[TriPoint]| {
        corners
            .iter()
            .map(|&p| {
                let (x, y) = project(p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.3}\" height=\"{height:.3}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
    );
    if let Some(tiling) = overlay {
        let light = if shading.path_a { family_set(tiling, Direction::A) } else { HashSet::new() };
        let dark = if shading.paths_b { family_set(tiling, Direction::B) } else { HashSet::new() };
        out.push_str("  <g id=\"lozenges\" stroke=\"#000000\" stroke-width=\"1\">\n");
        for l in tiling.lozenges() {
            let fill = match (light.contains(l), dark.contains(l)) {
                (true, true) => BOTH,
                (true, false) => LIGHT,
                (false, true) => DARK,
                (false, false) => "#ffffff",
            };
            let _ = writeln!(
                out,
                "    <polygon class=\"{}\" points=\"{}\" fill=\"{fill}\"/>",
                l.kind.name(),
                polygon(&l.corners())
            );
        }
        out.push_str("  </g>\n");
    }
    let _ = writeln!(
        out,
        "  <polygon id=\"contour\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"/>",
        polygon(region.boundary())
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_shape;
    use crate::tilings::{enumerate_tilings, region_from_shape};

    #[test]
    fn empty_region_is_valid_svg() {
        let svg = render_svg(&Region::empty(), None, Shading::NONE);
        assert!(svg.contains("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn deterministic_and_shaded() {
        let r = region_from_shape(&parse_shape("9,7,6,2/3,1").unwrap());
        let t = &enumerate_tilings(&r, 1000).unwrap()[0];
        let first = render_svg(&r, Some(t), Shading::BOTH);
        assert_eq!(first, render_svg(&r, Some(t), Shading::BOTH));
        assert_eq!(first.matches("<polygon class=").count(), t.len());
        assert!(first.contains(LIGHT) && first.contains(DARK) && first.contains(BOTH));
        let plain = render_svg(&r, Some(t), Shading::NONE);
        assert!(!plain.contains(LIGHT) && !plain.contains(DARK));
        assert!(plain.contains("id=\"contour\""));
    }
}
