//! Brute-force search for the smallest-area triangle containing the unit
//! square, used as an independent check on the cube cross-section argument.
//!
//! A candidate triangle is parametrized by the outward normal angles of its
//! three sides. For fixed angles the cheapest containing triangle pushes each
//! side until it supports the square, so the search space is just the three
//! angles: a 1-degree grid pass followed by golden-section refinement of each
//! angle.

use crate::polyhedron::Polygon2;
use crate::scalar::Real;
use crate::vec::Point2;

/// A containing triangle and its area.
#[derive(Clone, Debug)]
pub struct TriangleFit<T> {
    pub area: T,
    pub triangle: Polygon2<T>,
}

const GRID_STEP_DEG: usize = 1;

/// Corners of the unit square `[0,1]^2`.
pub fn unit_square_corners<T: Real>() -> [Point2<T>; 4] {
    let z = T::zero();
    let o = T::one();
    [
        Point2::new(z, z),
        Point2::new(o, z),
        Point2::new(o, o),
        Point2::new(z, o),
    ]
}

/// Support value of the unit square in direction `u`.
fn square_support<T: Real>(u: Point2<T>) -> T {
    unit_square_corners()
        .iter()
        .map(|c| u.dot(*c))
        .fold(T::neg_infinity(), T::max)
}

/// Area of the triangle whose sides have outward normal angles `angles` and
/// support the unit square. `None` when the normals do not positively span
/// the plane (the region would be unbounded) or two sides are parallel.
pub fn triangle_area_for_angles<T: Real>(angles: [T; 3]) -> Option<T> {
    corners_for_angles(angles).map(|c| triangle_area(&c))
}

fn triangle_area<T: Real>(c: &[Point2<T>; 3]) -> T {
    ((c[1] - c[0]).cross(c[2] - c[0]) / T::from_f64_lossy(2.0)).abs()
}

fn corners_for_angles<T: Real>(angles: [T; 3]) -> Option<[Point2<T>; 3]> {
    let u: Vec<Point2<T>> = angles
        .iter()
        .map(|&a| Point2::new(a.cos(), a.sin()))
        .collect();
    // Bounded intersection needs the three normals to positively span the
    // plane: every consecutive gap below pi once sorted.
    let tau = T::PI() * T::from_f64_lossy(2.0);
    let mut sorted = angles.map(|a| {
        let mut x = a % tau;
        if x < T::zero() {
            x += tau;
        }
        x
    });
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite angle"));
    let gaps = [
        sorted[1] - sorted[0],
        sorted[2] - sorted[1],
        tau - (sorted[2] - sorted[0]),
    ];
    let eps = T::from_f64_lossy(1e-9);
    if gaps.iter().any(|&g| g >= T::PI() - eps || g <= eps) {
        return None;
    }
    let h: Vec<T> = u.iter().map(|&d| square_support(d)).collect();
    let corner = |i: usize, j: usize| -> Option<Point2<T>> {
        let det = u[i].cross(u[j]);
        if det.abs() <= T::from_f64_lossy(1e-12) {
            return None;
        }
        Some(Point2::new(
            (h[i] * u[j].y - h[j] * u[i].y) / det,
            (u[i].x * h[j] - u[j].x * h[i]) / det,
        ))
    };
    Some([corner(1, 2)?, corner(2, 0)?, corner(0, 1)?])
}

/// Smallest-area triangle about the unit square found by grid search plus
/// golden-section refinement. The known optimum is 2; the search recovers it
/// to a few parts in a million without assuming it.
pub fn min_triangle_about_unit_square<T: Real>() -> TriangleFit<T> {
    let deg = T::PI() / T::from_f64_lossy(180.0);
    let n = 360 / GRID_STEP_DEG;
    let step = deg * T::from_f64_lossy(GRID_STEP_DEG as f64);
    // Precompute normals and supports along the grid.
    let table: Vec<(Point2<T>, T)> = (0..n)
        .map(|i| {
            let a = step * T::from_usize(i).expect("grid index fits scalar");
            let u = Point2::new(a.cos(), a.sin());
            (u, square_support(u))
        })
        .collect();
    let mut best = (T::infinity(), [T::zero(); 3]);
    for i in 0..n {
        for j in (i + 1)..n {
            let gap_ij = j - i;
            if gap_ij >= n / 2 {
                // Larger j only widens this gap past half a turn.
                break;
            }
            for k in (j + 1)..n {
                let gap_jk = k - j;
                let gap_ki = n - (k - i);
                if gap_jk >= n / 2 || gap_ki >= n / 2 {
                    continue;
                }
                if let Some(area) = grid_area(&table, [i, j, k]) {
                    if area < best.0 {
                        let idx_to_angle =
                            |x: usize| step * T::from_usize(x).expect("grid index fits scalar");
                        best = (area, [idx_to_angle(i), idx_to_angle(j), idx_to_angle(k)]);
                    }
                }
            }
        }
    }
    // Golden-section refinement of one angle at a time, shrinking brackets.
    let mut angles = best.1;
    let mut bracket = step * T::from_f64_lossy(1.5);
    for _ in 0..6 {
        for axis in 0..3 {
            let eval = |x: T| {
                let mut a = angles;
                a[axis] = x;
                triangle_area_for_angles(a).unwrap_or_else(T::infinity)
            };
            angles[axis] = golden_section_min(
                eval,
                angles[axis] - bracket,
                angles[axis] + bracket,
                T::from_f64_lossy(1e-12),
            );
        }
        bracket = bracket * T::from_f64_lossy(0.5);
    }
    let corners = corners_for_angles(angles).expect("refined triangle is bounded");
    let area = triangle_area(&corners);
    let triangle = ccw_triangle(corners);
    TriangleFit { area, triangle }
}

fn grid_area<T: Real>(table: &[(Point2<T>, T)], idx: [usize; 3]) -> Option<T> {
    let corner = |i: usize, j: usize| -> Option<Point2<T>> {
        let (ui, hi) = table[idx[i]];
        let (uj, hj) = table[idx[j]];
        let det = ui.cross(uj);
        if det.abs() <= T::from_f64_lossy(1e-12) {
            return None;
        }
        Some(Point2::new(
            (hi * uj.y - hj * ui.y) / det,
            (ui.x * hj - uj.x * hi) / det,
        ))
    };
    let c = [corner(1, 2)?, corner(2, 0)?, corner(0, 1)?];
    Some(triangle_area(&c))
}

fn ccw_triangle<T: Real>(mut corners: [Point2<T>; 3]) -> Polygon2<T> {
    if (corners[1] - corners[0]).cross(corners[2] - corners[0]) < T::zero() {
        corners.swap(1, 2);
    }
    Polygon2::new(corners.to_vec()).expect("triangle corners form a valid polygon")
}

fn golden_section_min<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, tol: T) -> T {
    let inv_phi = (T::from_f64_lossy(5.0).sqrt() - T::one()) / T::from_f64_lossy(2.0);
    let mut c = hi - (hi - lo) * inv_phi;
    let mut d = lo + (hi - lo) * inv_phi;
    let mut fc = f(c);
    let mut fd = f(d);
    while (hi - lo).abs() > tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}
