//! Planar geometry shared by the simulator, the generator and metrics.

use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// 2D vector / point in meters (world or ego frame depending on context).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at the given heading angle.
    pub fn from_angle(theta: f64) -> Self {
        Vec2 {
            x: theta.cos(),
            y: theta.sin(),
        }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn dist_sq(self, o: Vec2) -> f64 {
        (self - o).norm_sq()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2 {
            x: -self.y,
            y: self.x,
        }
    }

    /// Rotate by `theta` radians counter-clockwise.
    pub fn rotated(self, theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2 {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = a % two_pi;
    if r <= -PI {
        r += two_pi;
    } else if r > PI {
        r -= two_pi;
    }
    r
}

/// Squared distance from `p` to the segment `a..b`.
pub fn point_segment_dist_sq(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.dist_sq(a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.dist_sq(a + ab * t)
}

/// Minimum distance from `p` to a polyline (point for a 1-point input).
pub fn point_polyline_dist(p: Vec2, pts: &[Vec2]) -> f64 {
    debug_assert!(!pts.is_empty());
    if pts.len() == 1 {
        return p.dist(pts[0]);
    }
    let mut best = f64::INFINITY;
    for w in pts.windows(2) {
        let d = point_segment_dist_sq(p, w[0], w[1]);
        if d < best {
            best = d;
        }
    }
    best.sqrt()
}

/// Polyline with cumulative arc-length lookup, used for route following
/// and for route-progress projection.
#[derive(Clone, Debug)]
pub struct ArcLengthPath {
    pts: Vec<Vec2>,
    cum: Vec<f64>,
}

impl ArcLengthPath {
    pub fn new(pts: Vec<Vec2>) -> Self {
        assert!(!pts.is_empty(), "path needs at least one point");
        let mut cum = Vec::with_capacity(pts.len());
        let mut s = 0.0;
        cum.push(0.0);
        for w in pts.windows(2) {
            s += w[0].dist(w[1]);
            cum.push(s);
        }
        ArcLengthPath { pts, cum }
    }

    pub fn total_len(&self) -> f64 {
        *self.cum.last().unwrap()
    }

    pub fn points(&self) -> &[Vec2] {
        &self.pts
    }

    pub fn is_degenerate(&self) -> bool {
        self.total_len() <= 0.0
    }

    /// Heading of the segment containing arc-length `s` (final segment
    /// heading beyond the end; zero vector paths return +x).
    pub fn direction_at(&self, s: f64) -> Vec2 {
        if self.pts.len() < 2 || self.is_degenerate() {
            return Vec2::new(1.0, 0.0);
        }
        let i = self.segment_index(s);
        let d = self.pts[i + 1] - self.pts[i];
        let n = d.norm();
        if n > 0.0 {
            d * (1.0 / n)
        } else {
            Vec2::new(1.0, 0.0)
        }
    }

    /// Point at arc-length `s`; extends along the first/last segment
    /// heading when `s` is outside `[0, total_len]`.
    pub fn point_at(&self, s: f64) -> Vec2 {
        if self.pts.len() == 1 {
            return self.pts[0];
        }
        if s <= 0.0 {
            return self.pts[0] + self.direction_at(0.0) * s;
        }
        let total = self.total_len();
        if s >= total {
            return *self.pts.last().unwrap() + self.direction_at(total) * (s - total);
        }
        let i = self.segment_index(s);
        let d = self.pts[i + 1] - self.pts[i];
        let seg_len = self.cum[i + 1] - self.cum[i];
        self.pts[i] + d * ((s - self.cum[i]) / seg_len)
    }

    fn segment_index(&self, s: f64) -> usize {
        let last_seg = self.pts.len().saturating_sub(2);
        if s >= self.total_len() {
            return last_seg;
        }
        match self.cum.binary_search_by(|c| c.partial_cmp(&s).unwrap()) {
            Ok(i) => i.min(last_seg),
            Err(i) => i.saturating_sub(1).min(last_seg),
        }
    }

    /// Project `p` onto the polyline: returns `(arc_length, distance)`.
    /// Ties resolve to the smallest arc-length.
    pub fn project(&self, p: Vec2) -> (f64, f64) {
        if self.pts.len() == 1 {
            return (0.0, p.dist(self.pts[0]));
        }
        let mut best_d = f64::INFINITY;
        let mut best_s = 0.0;
        for (i, w) in self.pts.windows(2).enumerate() {
            let ab = w[1] - w[0];
            let len_sq = ab.norm_sq();
            let t = if len_sq == 0.0 {
                0.0
            } else {
                ((p - w[0]).dot(ab) / len_sq).clamp(0.0, 1.0)
            };
            let q = w[0] + ab * t;
            let d = p.dist_sq(q);
            if d < best_d {
                best_d = d;
                best_s = self.cum[i] + (self.cum[i + 1] - self.cum[i]) * t;
            }
        }
        (best_s, best_d.sqrt())
    }

    /// Like [`project`](Self::project) but the path is extended past its
    /// final point along the final heading, so points beyond the end map
    /// to arc-lengths `> total_len` (overshoot).
    pub fn project_extended(&self, p: Vec2) -> (f64, f64) {
        let (s, d) = self.project(p);
        let total = self.total_len();
        if self.pts.len() < 2 || total <= 0.0 {
            return (s, d);
        }
        let end = *self.pts.last().unwrap();
        let dir = self.direction_at(total);
        let t = (p - end).dot(dir);
        if t > 0.0 {
            let q = end + dir * t;
            let dd = p.dist(q);
            if dd < d || (s >= total && dd <= d) {
                return (total + t, dd);
            }
        }
        (s, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn wrap_angle_range() {
        assert_abs_diff_eq!(wrap_angle(PI), PI);
        assert_abs_diff_eq!(wrap_angle(-PI), PI);
        assert_abs_diff_eq!(wrap_angle(3.0 * PI), PI);
        assert_abs_diff_eq!(wrap_angle(0.1), 0.1);
        assert_abs_diff_eq!(wrap_angle(2.0 * PI + 0.25), 0.25, epsilon = 1e-12);
        for k in -20..20 {
            let a = 0.37 + k as f64 * 2.0 * PI;
            assert_abs_diff_eq!(wrap_angle(a), 0.37, epsilon = 1e-9);
        }
    }

    #[test]
    fn segment_distance() {
        let a = Vec2::new(0.0, 0.0);
        let b = Vec2::new(10.0, 0.0);
        assert_abs_diff_eq!(point_segment_dist_sq(Vec2::new(5.0, 2.0), a, b), 4.0);
        assert_abs_diff_eq!(point_segment_dist_sq(Vec2::new(-3.0, 4.0), a, b), 25.0);
        assert_abs_diff_eq!(point_segment_dist_sq(Vec2::new(12.0, 0.0), a, b), 4.0);
    }

    #[test]
    fn path_projection_and_lookup() {
        let path = ArcLengthPath::new(vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(10.0, 0.0),
            Vec2::new(10.0, 10.0),
        ]);
        assert_abs_diff_eq!(path.total_len(), 20.0);
        let p = path.point_at(15.0);
        assert_abs_diff_eq!(p.x, 10.0);
        assert_abs_diff_eq!(p.y, 5.0);
        let (s, d) = path.project(Vec2::new(5.0, 1.0));
        assert_abs_diff_eq!(s, 5.0);
        assert_abs_diff_eq!(d, 1.0);
        // Beyond the end along final heading: extended projection overshoots.
        let (s, d) = path.project_extended(Vec2::new(10.0, 14.0));
        assert_abs_diff_eq!(s, 24.0);
        assert_abs_diff_eq!(d, 0.0);
        // Plain projection clamps to the end.
        let (s, _) = path.project(Vec2::new(10.0, 14.0));
        assert_abs_diff_eq!(s, 20.0);
    }

    #[test]
    fn rotation_roundtrip() {
        let v = Vec2::new(3.0, -2.0);
        let r = v.rotated(0.7).rotated(-0.7);
        assert_abs_diff_eq!(r.x, v.x, epsilon = 1e-12);
        assert_abs_diff_eq!(r.y, v.y, epsilon = 1e-12);
    }
}
