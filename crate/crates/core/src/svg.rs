//! Static SVG pictures of planar point sets, their hulls and nearest points.

use std::fmt::Write;

use crate::convex::{Ambient, MinNormResult, PointSet};
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// How points are mapped to the drawing plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Orthonormal coordinates on the sum-zero plane of `Q^3`.
    SumZeroPlane,
    /// Two chosen coordinates.
    Axes(usize, usize),
}

impl Projection {
    /// Default choice: the sum-zero plane for three coordinates in that
    /// ambient, raw coordinates for planar sets.
    pub fn for_set(set: &PointSet) -> Result<Self> {
        match (set.dim(), set.ambient()) {
            (3, Ambient::SumZero) => Ok(Projection::SumZeroPlane),
            (2, Ambient::Full) => Ok(Projection::Axes(0, 1)),
            _ => Err(Error::InvalidArgument(
                "pictures need a 2-dimensional character space or explicit axes".into(),
            )),
        }
    }

    fn apply(&self, p: &[Rational]) -> (f64, f64) {
        match *self {
            Projection::SumZeroPlane => {
                let (a, b, c) = (to_f64(&p[0]), to_f64(&p[1]), to_f64(&p[2]));
                ((a - b) / 2f64.sqrt(), (a + b - 2.0 * c) / 6f64.sqrt())
            }
            Projection::Axes(i, j) => (to_f64(&p[i]), to_f64(&p[j])),
        }
    }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain hull of the projected points, for drawing only.
fn hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 1e-12 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 1e-12 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Draws the points, hull edges, origin and the segment to the nearest point.
pub fn render(set: &PointSet, nearest: Option<&MinNormResult>, projection: Projection) -> Result<String> {
    if let Projection::Axes(i, j) = projection {
        if i >= set.dim() || j >= set.dim() || i == j {
            return Err(Error::InvalidArgument("invalid projection axes".into()));
        }
    }
    let pts: Vec<(f64, f64)> = set.points().iter().map(|p| projection.apply(p)).collect();
    let near = nearest.map(|r| projection.apply(&r.point));
    let extent = pts
        .iter()
        .chain(near.iter())
        .flat_map(|&(x, y)| [x.abs(), y.abs()])
        .fold(1.0f64, f64::max)
        * 1.15;
    let size = 400.0;
    let scale = size / (2.0 * extent);
    let to_px = |(x, y): (f64, f64)| (size / 2.0 + x * scale, size / 2.0 - y * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let (ox, oy) = to_px((0.0, 0.0));
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{oy:.2}" x2="{size}" y2="{oy:.2}" stroke="#dddddd"/><line x1="{ox:.2}" y1="0" x2="{ox:.2}" y2="{size}" stroke="#dddddd"/>"##
    );
    let h = hull(pts.clone());
    if h.len() >= 2 {
        let path: Vec<String> = h
            .iter()
            .map(|&p| {
                let (x, y) = to_px(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.2" stroke="#4a90d9" stroke-width="1.5"/>"##,
            path.join(" ")
        );
    }
    for &p in &pts {
        let (x, y) = to_px(p);
        let _ = writeln!(s, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#1f4e8c"/>"##);
    }
    let _ = writeln!(s, r##"<circle cx="{ox:.2}" cy="{oy:.2}" r="3" fill="#000000"/>"##);
    if let Some(p) = near {
        let (x, y) = to_px(p);
        let _ = writeln!(
            s,
            r##"<line x1="{ox:.2}" y1="{oy:.2}" x2="{x:.2}" y2="{y:.2}" stroke="#d9534f" stroke-width="2"/><circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#d9534f"/>"##
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::min_norm_point;
    use crate::rational::{frac, vec_of};

    #[test]
    fn renders_plane_and_projection() {
        let set = PointSet::new(vec![vec_of(&[1, 0]), vec_of(&[0, 1]), vec_of(&[2, 2])]).unwrap();
        let near = min_norm_point(&set);
        let svg = render(&set, Some(&near), Projection::for_set(&set).unwrap()).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(svg.contains("<polygon"));

        let tri = PointSet::sum_zero(vec![
            vec![frac(2, 3), frac(-1, 3), frac(-1, 3)],
            vec![frac(-1, 3), frac(2, 3), frac(-1, 3)],
        ])
        .unwrap();
        assert_eq!(Projection::for_set(&tri).unwrap(), Projection::SumZeroPlane);
        assert!(render(&tri, None, Projection::Axes(0, 0)).is_err());
        let line = PointSet::new(vec![vec_of(&[1])]).unwrap();
        assert!(Projection::for_set(&line).is_err());
    }
}
