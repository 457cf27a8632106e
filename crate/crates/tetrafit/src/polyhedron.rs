//! Convex polyhedra as vertex lists plus face index cycles, and the plane
//! polygons produced by slicing them.
//!
//! Faces are stored counterclockwise as seen from outside; face planes are
//! derived on demand so the index cycles stay the single source of truth.

use std::collections::BTreeMap;

use crate::error::GeomError;
use crate::rotation::Rotation3;
use crate::scalar::{geom_tol, Real};
use crate::vec::{Point2, Vector3};

/// A convex polyhedron: vertices plus face cycles (CCW from outside).
#[derive(Clone, Debug)]
pub struct ConvexPolyhedron<T> {
    vertices: Vec<Vector3<T>>,
    faces: Vec<Vec<usize>>,
}

/// A face's supporting plane: unit outward normal and offset, with
/// `normal . x = offset` on the plane.
#[derive(Clone, Copy, Debug)]
pub struct FacePlane<T> {
    pub normal: Vector3<T>,
    pub offset: T,
}

impl<T: Real> ConvexPolyhedron<T> {
    /// Validates and builds a closed convex mesh.
    ///
    /// Checks index sanity, two-manifold edges with consistent winding, the
    /// Euler count V - E + F = 2, face planarity, convexity, and outward
    /// orientation of every face cycle.
    pub fn new(vertices: Vec<Vector3<T>>, faces: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let p = Self { vertices, faces };
        p.validate()?;
        Ok(p)
    }

    /// Builds without validation. For internal use on data that is
    /// well-formed by construction (rigid transforms of validated meshes).
    pub(crate) fn from_raw_parts(vertices: Vec<Vector3<T>>, faces: Vec<Vec<usize>>) -> Self {
        Self { vertices, faces }
    }

    pub fn vertices(&self) -> &[Vector3<T>] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Unique undirected edges, as ordered index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeMap::new();
        for face in &self.faces {
            for (a, b) in cycle_pairs(face) {
                let key = if a < b { (a, b) } else { (b, a) };
                *set.entry(key).or_insert(0usize) += 1;
            }
        }
        set.into_keys().collect()
    }

    pub fn edge_lengths(&self) -> Vec<T> {
        self.edges()
            .into_iter()
            .map(|(a, b)| self.vertices[a].distance(self.vertices[b]))
            .collect()
    }

    /// Mean of the vertices. Inside the body for any convex mesh.
    pub fn centroid(&self) -> Vector3<T> {
        Vector3::centroid(&self.vertices)
    }

    /// Supporting plane of face `i` (unit outward normal, offset).
    pub fn face_plane(&self, i: usize) -> FacePlane<T> {
        let cycle = &self.faces[i];
        let pts: Vec<Vector3<T>> = cycle.iter().map(|&k| self.vertices[k]).collect();
        let c = Vector3::centroid(&pts);
        // Newell's method around the face centroid.
        let mut n = Vector3::zero();
        for i in 0..pts.len() {
            let a = pts[i] - c;
            let b = pts[(i + 1) % pts.len()] - c;
            n += a.cross(b);
        }
        let normal = n.normalized().unwrap_or(Vector3::zero());
        FacePlane {
            normal,
            offset: normal.dot(c),
        }
    }

    /// Largest distance of a face vertex from the face's best plane.
    fn face_planarity_residual(&self, i: usize) -> T {
        let plane = self.face_plane(i);
        self.faces[i]
            .iter()
            .map(|&k| (plane.normal.dot(self.vertices[k]) - plane.offset).abs())
            .fold(T::zero(), T::max)
    }

    /// Signed volume by the divergence theorem over fan-triangulated faces.
    /// Positive for outward-oriented face cycles.
    pub fn volume(&self) -> Result<T, GeomError> {
        let tol = geom_tol::<T>();
        for i in 0..self.faces.len() {
            let residual = self.face_planarity_residual(i);
            if residual > tol {
                return Err(GeomError::NonPlanarFace {
                    face: i,
                    residual: residual.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let six = T::from_f64_lossy(6.0);
        let mut vol = T::zero();
        for face in &self.faces {
            let v0 = self.vertices[face[0]];
            for w in face[1..].windows(2) {
                vol += v0.dot(self.vertices[w[0]].cross(self.vertices[w[1]]));
            }
        }
        Ok(vol / six)
    }

    /// True iff `q` is within `tol` of the inside of every face half-space.
    pub fn contains_point(&self, q: Vector3<T>, tol: T) -> bool {
        (0..self.faces.len()).all(|i| {
            let plane = self.face_plane(i);
            plane.normal.dot(q) <= plane.offset + tol
        })
    }

    /// Vertices mapped `v -> s * r(v) + t`; faces unchanged.
    pub fn transform(
        &self,
        r: Rotation3<T>,
        t: Vector3<T>,
        s: T,
    ) -> Result<ConvexPolyhedron<T>, GeomError> {
        if !(s > T::zero()) {
            return Err(GeomError::InvalidScale(s.to_f64().unwrap_or(f64::NAN)));
        }
        let vertices = self
            .vertices
            .iter()
            .map(|&v| r.apply(v) * s + t)
            .collect();
        Ok(Self::from_raw_parts(vertices, self.faces.clone()))
    }

    /// The convex polygon cut by the horizontal plane at height `z`,
    /// projected to the xy-plane and ordered counterclockwise about its
    /// centroid.
    pub fn cross_section_z(&self, z: T) -> Result<Polygon2<T>, GeomError> {
        let tol = geom_tol::<T>();
        let mut pts: Vec<Point2<T>> = Vec::new();
        let mut push = |p: Point2<T>| {
            if !pts.iter().any(|q| q.distance(p) <= tol) {
                pts.push(p);
            }
        };
        for (a, b) in self.edges() {
            let (va, vb) = (self.vertices[a], self.vertices[b]);
            let (da, db) = (va.z - z, vb.z - z);
            if da.abs() <= tol {
                push(Point2::new(va.x, va.y));
            }
            if db.abs() <= tol {
                push(Point2::new(vb.x, vb.y));
            }
            if da.abs() > tol && db.abs() > tol && (da * db) < T::zero() {
                let t = da / (da - db);
                let p = va + (vb - va) * t;
                push(Point2::new(p.x, p.y));
            }
        }
        if pts.len() < 3 {
            return Err(GeomError::NoSection);
        }
        let n = T::from_usize(pts.len()).expect("section size fits scalar");
        let mut cx = T::zero();
        let mut cy = T::zero();
        for p in &pts {
            cx += p.x;
            cy += p.y;
        }
        let center = Point2::new(cx / n, cy / n);
        pts.sort_by(|a, b| {
            let ta = (a.y - center.y).atan2(a.x - center.x);
            let tb = (b.y - center.y).atan2(b.x - center.x);
            ta.partial_cmp(&tb).expect("finite angles")
        });
        let poly = Polygon2::new(pts)?;
        if poly.area() <= tol {
            return Err(GeomError::NoSection);
        }
        Ok(poly)
    }

    fn validate(&self) -> Result<(), GeomError> {
        let nv = self.vertices.len();
        if nv < 4 {
            return Err(GeomError::malformed(format!(
                "need at least 4 vertices, got {nv}"
            )));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(GeomError::malformed(format!("vertex {i} is not finite")));
            }
        }
        let mut faces_per_vertex = vec![0usize; nv];
        let mut edge_windings: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(GeomError::malformed(format!(
                    "face {fi} has fewer than 3 vertices"
                )));
            }
            let mut seen = face.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != face.len() {
                return Err(GeomError::malformed(format!(
                    "face {fi} repeats a vertex index"
                )));
            }
            for &k in face {
                if k >= nv {
                    return Err(GeomError::malformed(format!(
                        "face {fi} references vertex {k} out of range"
                    )));
                }
                faces_per_vertex[k] += 1;
            }
            for (a, b) in cycle_pairs(face) {
                let entry = if a < b {
                    edge_windings.entry((a, b)).or_insert((0, 0))
                } else {
                    edge_windings.entry((b, a)).or_insert((0, 0))
                };
                if a < b {
                    entry.0 += 1;
                } else {
                    entry.1 += 1;
                }
            }
        }
        for (k, &count) in faces_per_vertex.iter().enumerate() {
            if count < 3 {
                return Err(GeomError::malformed(format!(
                    "vertex {k} belongs to {count} faces, need at least 3"
                )));
            }
        }
        for (&(a, b), &(fwd, rev)) in &edge_windings {
            if fwd != 1 || rev != 1 {
                return Err(GeomError::malformed(format!(
                    "edge ({a},{b}) is not shared by exactly two consistently wound faces"
                )));
            }
        }
        let ne = edge_windings.len();
        let nf = self.faces.len();
        if nv + nf != ne + 2 {
            return Err(GeomError::malformed(format!(
                "Euler count failed: V={nv} E={ne} F={nf}"
            )));
        }
        let tol = geom_tol::<T>();
        for fi in 0..nf {
            let residual = self.face_planarity_residual(fi);
            if residual > tol {
                return Err(GeomError::NonPlanarFace {
                    face: fi,
                    residual: residual.to_f64().unwrap_or(f64::NAN),
                });
            }
            let plane = self.face_plane(fi);
            for (k, v) in self.vertices.iter().enumerate() {
                if plane.normal.dot(*v) > plane.offset + tol {
                    return Err(GeomError::malformed(format!(
                        "vertex {k} lies outside the plane of face {fi}: not convex \
                         or face wound inward"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Convex polygon in the plane, counterclockwise.
#[derive(Clone, Debug)]
pub struct Polygon2<T> {
    points: Vec<Point2<T>>,
}

impl<T: Real> Polygon2<T> {
    /// Validates a counterclockwise convex cycle.
    pub fn new(points: Vec<Point2<T>>) -> Result<Self, GeomError> {
        if points.len() < 3 {
            return Err(GeomError::malformed("polygon needs at least 3 points"));
        }
        let tol = geom_tol::<T>();
        let n = points.len();
        for i in 0..n {
            let a = points[i];
            let b = points[(i + 1) % n];
            let c = points[(i + 2) % n];
            if (b - a).cross(c - b) < -tol {
                return Err(GeomError::malformed(
                    "polygon is not convex and counterclockwise",
                ));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    /// Shoelace area; positive for counterclockwise cycles.
    pub fn area(&self) -> T {
        let mut acc = T::zero();
        let n = self.points.len();
        for i in 0..n {
            acc += self.points[i].cross(self.points[(i + 1) % n]);
        }
        acc / T::from_f64_lossy(2.0)
    }

    pub fn side_lengths(&self) -> Vec<T> {
        let n = self.points.len();
        (0..n)
            .map(|i| self.points[i].distance(self.points[(i + 1) % n]))
            .collect()
    }

    /// True iff `q` is within `tol` of the inside of every edge half-plane.
    pub fn contains_point(&self, q: Point2<T>, tol: T) -> bool {
        let n = self.points.len();
        (0..n).all(|i| {
            let a = self.points[i];
            let b = self.points[(i + 1) % n];
            let e = b - a;
            let len = e.norm();
            if len <= T::zero() {
                return true;
            }
            // Signed distance of q to the left of edge a->b.
            e.cross(q - a) / len >= -tol
        })
    }
}

fn cycle_pairs(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..face.len()).map(move |i| (face[i], face[(i + 1) % face.len()]))
}

/// Flips any face cycle whose Newell normal points toward the body centroid.
/// Convenience for hand-entered tables; the result still goes through
/// [`ConvexPolyhedron::new`].
pub(crate) fn orient_outward<T: Real>(
    vertices: &[Vector3<T>],
    faces: &mut [Vec<usize>],
) {
    let body = Vector3::centroid(vertices);
    for face in faces.iter_mut() {
        let pts: Vec<Vector3<T>> = face.iter().map(|&k| vertices[k]).collect();
        let c = Vector3::centroid(&pts);
        let mut n = Vector3::zero();
        for i in 0..pts.len() {
            let a = pts[i] - c;
            let b = pts[(i + 1) % pts.len()] - c;
            n += a.cross(b);
        }
        if n.dot(c - body) < T::zero() {
            face.reverse();
        }
    }
}
