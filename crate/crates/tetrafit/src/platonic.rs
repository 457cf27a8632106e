//! Exact-coordinate generators for the five Platonic solids with unit edge,
//! their closed-form metrics, and face-center duality.
//!
//! Canonical orientations (all centered on the origin):
//!
//! * tetrahedron: outward face normals along the four reference directions
//!   `(1,1,1)/sqrt(3)`-type used by [`crate::regtetra`];
//! * cube: axis-aligned;
//! * octahedron: vertices on the coordinate axes;
//! * icosahedron: golden-rectangle frame, vertices in the families
//!   `(0, ±1, ±phi)/2`, `(±phi, 0, ±1)/2`, `(±1, ±phi, 0)/2`;
//! * dodecahedron: dual of the icosahedron above, rescaled to unit edge.

use std::fmt;
use std::str::FromStr;

use crate::error::GeomError;
use crate::polyhedron::{orient_outward, ConvexPolyhedron};
use crate::rotation::Rotation3;
use crate::scalar::{geom_tol, Real};
use crate::vec::Vector3;

/// The five Platonic solids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolidKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
}

impl SolidKind {
    pub const ALL: [SolidKind; 5] = [
        SolidKind::Tetrahedron,
        SolidKind::Cube,
        SolidKind::Octahedron,
        SolidKind::Icosahedron,
        SolidKind::Dodecahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Cube => "cube",
            SolidKind::Octahedron => "octahedron",
            SolidKind::Icosahedron => "icosahedron",
            SolidKind::Dodecahedron => "dodecahedron",
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolidKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" | "tetra" => Ok(SolidKind::Tetrahedron),
            "cube" => Ok(SolidKind::Cube),
            "octahedron" | "octa" => Ok(SolidKind::Octahedron),
            "icosahedron" | "icosa" => Ok(SolidKind::Icosahedron),
            "dodecahedron" | "dodeca" => Ok(SolidKind::Dodecahedron),
            other => Err(format!("unknown solid '{other}'")),
        }
    }
}

/// Closed-form measurements of a unit-edge solid.
#[derive(Clone, Copy, Debug)]
pub struct SolidMetrics<T> {
    pub edge: T,
    pub volume: T,
    pub circumradius: T,
    pub inradius: T,
}

/// The golden ratio `(1 + sqrt 5) / 2`.
pub fn golden_ratio<T: Real>() -> T {
    (T::one() + T::from_f64_lossy(5.0).sqrt()) / T::from_f64_lossy(2.0)
}

/// Unit-edge solid in its canonical orientation, centroid at the origin.
pub fn unit_solid<T: Real>(kind: SolidKind) -> ConvexPolyhedron<T> {
    let (vertices, mut faces) = match kind {
        SolidKind::Tetrahedron => tetrahedron_parts(),
        SolidKind::Cube => cube_parts(),
        SolidKind::Octahedron => octahedron_parts(),
        SolidKind::Icosahedron => icosahedron_parts(),
        SolidKind::Dodecahedron => {
            let icosa = unit_solid::<T>(SolidKind::Icosahedron);
            let raw = dual(&icosa).expect("icosahedron dual is well-formed");
            let edge = raw.edge_lengths()[0];
            let unit = raw
                .transform(Rotation3::identity(), Vector3::zero(), T::one() / edge)
                .expect("rescale with positive factor");
            return ConvexPolyhedron::new(unit.vertices().to_vec(), unit.faces().to_vec())
                .expect("unit dodecahedron is valid");
        }
    };
    orient_outward(&vertices, &mut faces);
    ConvexPolyhedron::new(vertices, faces).expect("canonical solid is valid")
}

fn tetrahedron_parts<T: Real>() -> (Vec<Vector3<T>>, Vec<Vec<usize>>) {
    // Vertices opposite the reference normals, at circumradius sqrt(6)/4.
    let a = T::from_f64_lossy(2.0).sqrt() / T::from_f64_lossy(4.0);
    let vertices = vec![
        Vector3::new(-a, -a, -a),
        Vector3::new(-a, a, a),
        Vector3::new(a, -a, a),
        Vector3::new(a, a, -a),
    ];
    let faces = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
    (vertices, faces)
}

fn cube_parts<T: Real>() -> (Vec<Vector3<T>>, Vec<Vec<usize>>) {
    let h = T::from_f64_lossy(0.5);
    let vertices = (0..8)
        .map(|i| {
            Vector3::new(
                if i & 1 == 0 { -h } else { h },
                if (i >> 1) & 1 == 0 { -h } else { h },
                if (i >> 2) & 1 == 0 { -h } else { h },
            )
        })
        .collect();
    let faces = vec![
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ];
    (vertices, faces)
}

fn octahedron_parts<T: Real>() -> (Vec<Vector3<T>>, Vec<Vec<usize>>) {
    let a = T::from_f64_lossy(2.0).sqrt() / T::from_f64_lossy(2.0);
    let z = T::zero();
    let vertices = vec![
        Vector3::new(a, z, z),
        Vector3::new(-a, z, z),
        Vector3::new(z, a, z),
        Vector3::new(z, -a, z),
        Vector3::new(z, z, a),
        Vector3::new(z, z, -a),
    ];
    let faces = vec![
        vec![0, 2, 4],
        vec![2, 1, 4],
        vec![1, 3, 4],
        vec![3, 0, 4],
        vec![2, 0, 5],
        vec![1, 2, 5],
        vec![3, 1, 5],
        vec![0, 3, 5],
    ];
    (vertices, faces)
}

fn icosahedron_parts<T: Real>() -> (Vec<Vector3<T>>, Vec<Vec<usize>>) {
    // Golden-rectangle corners (0, ±1, ±phi) and cyclic shifts give edge 2;
    // halving them gives the unit-edge solid.
    let phi = golden_ratio::<T>();
    let one = T::one();
    let z = T::zero();
    let mut vertices = Vec::with_capacity(12);
    for &sy in &[one, -one] {
        for &sz in &[phi, -phi] {
            vertices.push(Vector3::new(z, sy, sz));
        }
    }
    for &sx in &[phi, -phi] {
        for &sz in &[one, -one] {
            vertices.push(Vector3::new(sx, z, sz));
        }
    }
    for &sx in &[one, -one] {
        for &sy in &[phi, -phi] {
            vertices.push(Vector3::new(sx, sy, z));
        }
    }
    let half = T::from_f64_lossy(0.5);
    for v in &mut vertices {
        *v = *v * half;
    }
    // The triangles of the icosahedral graph are exactly its faces, so
    // collect vertex triples that are mutually one edge apart.
    let tol = geom_tol::<T>();
    let mut faces = Vec::with_capacity(20);
    for i in 0..12 {
        for j in (i + 1)..12 {
            if (vertices[i].distance(vertices[j]) - one).abs() > tol {
                continue;
            }
            for k in (j + 1)..12 {
                if (vertices[i].distance(vertices[k]) - one).abs() <= tol
                    && (vertices[j].distance(vertices[k]) - one).abs() <= tol
                {
                    faces.push(vec![i, j, k]);
                }
            }
        }
    }
    debug_assert_eq!(faces.len(), 20);
    (vertices, faces)
}

/// Face-center dual: vertices at the face centroids of `p`, one face per
/// vertex of `p` connecting the centroids of its incident faces. Returned at
/// natural scale; callers rescale.
pub fn dual<T: Real>(p: &ConvexPolyhedron<T>) -> Result<ConvexPolyhedron<T>, GeomError> {
    let tol = geom_tol::<T>();
    let body = p.centroid();
    let mut centroids = Vec::with_capacity(p.face_count());
    for (fi, face) in p.faces().iter().enumerate() {
        let pts: Vec<Vector3<T>> = face.iter().map(|&k| p.vertices()[k]).collect();
        let c = Vector3::centroid(&pts);
        let mut n = Vector3::zero();
        for i in 0..pts.len() {
            let a = pts[i] - c;
            let b = pts[(i + 1) % pts.len()] - c;
            n += a.cross(b);
        }
        if n.norm() <= tol {
            return Err(GeomError::malformed(format!("face {fi} has zero area")));
        }
        centroids.push(c);
    }
    let mut faces = Vec::with_capacity(p.vertex_count());
    for (vi, &v) in p.vertices().iter().enumerate() {
        let axis = (v - body)
            .normalized()
            .ok_or_else(|| GeomError::malformed(format!("vertex {vi} sits at the centroid")))?;
        let pick = if axis.x.abs() < T::from_f64_lossy(0.9) {
            Vector3::new(T::one(), T::zero(), T::zero())
        } else {
            Vector3::new(T::zero(), T::one(), T::zero())
        };
        let u = axis.cross(pick).normalized().expect("basis vector");
        let w = axis.cross(u);
        let mut incident: Vec<usize> = p
            .faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&vi))
            .map(|(fi, _)| fi)
            .collect();
        if incident.len() < 3 {
            return Err(GeomError::malformed(format!(
                "vertex {vi} has fewer than 3 incident faces"
            )));
        }
        incident.sort_by(|&fa, &fb| {
            let da = centroids[fa] - body;
            let db = centroids[fb] - body;
            let ta = w.dot(da).atan2(u.dot(da));
            let tb = w.dot(db).atan2(u.dot(db));
            ta.partial_cmp(&tb).expect("finite angles")
        });
        faces.push(incident);
    }
    orient_outward(&centroids, &mut faces);
    ConvexPolyhedron::new(centroids, faces)
}

/// Closed-form metrics of the unit-edge solid.
pub fn metrics<T: Real>(kind: SolidKind) -> SolidMetrics<T> {
    let f = T::from_f64_lossy;
    let sqrt = |x: f64| f(x.sqrt());
    let s5 = 5.0_f64.sqrt();
    let (volume, circumradius, inradius) = match kind {
        SolidKind::Tetrahedron => (
            sqrt(2.0) / f(12.0),
            sqrt(6.0) / f(4.0),
            sqrt(6.0) / f(12.0),
        ),
        SolidKind::Cube => (T::one(), sqrt(3.0) / f(2.0), f(0.5)),
        SolidKind::Octahedron => (
            sqrt(2.0) / f(3.0),
            sqrt(2.0) / f(2.0),
            sqrt(6.0) / f(6.0),
        ),
        SolidKind::Icosahedron => (
            f(5.0 * (3.0 + s5) / 12.0),
            sqrt(10.0 + 2.0 * s5) / f(4.0),
            f((3.0 + s5) / 4.0) / sqrt(3.0),
        ),
        SolidKind::Dodecahedron => (
            f((15.0 + 7.0 * s5) / 4.0),
            sqrt(3.0) * f((1.0 + s5) / 4.0),
            sqrt((25.0 + 11.0 * s5) / 10.0) / f(2.0),
        ),
    };
    SolidMetrics {
        edge: T::one(),
        volume,
        circumradius,
        inradius,
    }
}

/// Fixed rotation taking the canonical icosahedron to its "on point" frame:
/// the major axis through the vertex `(0, 1, phi)/2` and its antipode becomes
/// vertical.
pub fn on_point_rotation<T: Real>() -> Rotation3<T> {
    let phi = golden_ratio::<T>();
    Rotation3::between(
        Vector3::new(T::zero(), T::one(), phi),
        Vector3::new(T::zero(), T::zero(), T::one()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(kind: SolidKind) -> (usize, usize, usize) {
        let p = unit_solid::<f64>(kind);
        (p.vertex_count(), p.edge_count(), p.face_count())
    }

    #[test]
    fn vertex_edge_face_counts() {
        assert_eq!(counts(SolidKind::Tetrahedron), (4, 6, 4));
        assert_eq!(counts(SolidKind::Cube), (8, 12, 6));
        assert_eq!(counts(SolidKind::Octahedron), (6, 12, 8));
        assert_eq!(counts(SolidKind::Icosahedron), (12, 30, 20));
        assert_eq!(counts(SolidKind::Dodecahedron), (20, 30, 12));
    }

    #[test]
    fn unit_edges_everywhere() {
        for kind in SolidKind::ALL {
            let p = unit_solid::<f64>(kind);
            let lengths = p.edge_lengths();
            let min = lengths.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = lengths.iter().cloned().fold(0.0, f64::max);
            assert!((max / min - 1.0).abs() <= 1e-12, "{kind}: {min}..{max}");
            assert!((max - 1.0).abs() <= 1e-12, "{kind} edge {max}");
        }
    }

    #[test]
    fn centered_at_origin() {
        for kind in SolidKind::ALL {
            let c = unit_solid::<f64>(kind).centroid();
            assert!(c.norm() < 1e-12, "{kind} centroid {c:?}");
        }
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = golden_ratio::<f64>();
        assert!((phi * phi - (phi + 1.0)).abs() < 1e-14);
    }

    #[test]
    fn icosahedron_keeps_golden_rectangle_corners() {
        let p = unit_solid::<f64>(SolidKind::Icosahedron);
        let phi = golden_ratio::<f64>();
        let doubled: Vec<_> = p.vertices().iter().map(|&v| v * 2.0).collect();
        for &(y, z) in &[(1.0, phi), (1.0, -phi), (-1.0, phi), (-1.0, -phi)] {
            let corner = Vector3::new(0.0, y, z);
            assert!(
                doubled.iter().any(|&v| (v - corner).norm() < 1e-12),
                "missing corner {corner:?}"
            );
        }
    }

    #[test]
    fn icosahedron_circumradius_value() {
        let p = unit_solid::<f64>(SolidKind::Icosahedron);
        let r = p.vertices()[0].norm();
        assert!((r - 0.95106).abs() < 1e-4);
        assert!((r - metrics::<f64>(SolidKind::Icosahedron).circumradius).abs() < 1e-12);
    }

    #[test]
    fn metrics_match_measured_volume() {
        for kind in SolidKind::ALL {
            let closed = metrics::<f64>(kind).volume;
            let measured = unit_solid::<f64>(kind).volume().unwrap();
            assert!(
                ((closed - measured) / closed).abs() < 1e-10,
                "{kind}: closed {closed} measured {measured}"
            );
        }
    }

    #[test]
    fn metrics_radii_are_ordered() {
        for kind in SolidKind::ALL {
            let m = metrics::<f64>(kind);
            assert!(m.volume > 0.0 && m.circumradius > m.inradius && m.inradius > 0.0);
        }
    }

    #[test]
    fn dual_swaps_counts() {
        let cube = unit_solid::<f64>(SolidKind::Cube);
        let octa = dual(&cube).unwrap();
        assert_eq!(octa.vertex_count(), 6);
        assert_eq!(octa.face_count(), 8);
        let tetra = unit_solid::<f64>(SolidKind::Tetrahedron);
        let d = dual(&tetra).unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.face_count(), 4);
    }

    #[test]
    fn dual_of_dual_is_similar_icosahedron() {
        let icosa = unit_solid::<f64>(SolidKind::Icosahedron);
        let dd = dual(&dual(&icosa).unwrap()).unwrap();
        assert_eq!(dd.vertex_count(), 12);
        let lengths = dd.edge_lengths();
        let min = lengths.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = lengths.iter().cloned().fold(0.0, f64::max);
        assert!((max / min - 1.0).abs() < 1e-12);
        // Shrink factor phi^3 / (3 sqrt 5), about 0.63148.
        let expected = (5.0 + 2.0 * 5.0_f64.sqrt()) / 15.0;
        assert!((max - expected).abs() < 1e-12, "ratio {max} vs {expected}");
    }

    #[test]
    fn dual_rejects_degenerate_face() {
        let cube = unit_solid::<f64>(SolidKind::Cube);
        let mut vertices = cube.vertices().to_vec();
        // Collapse one face to a segment.
        let f0 = cube.faces()[0].clone();
        vertices[f0[1]] = vertices[f0[0]];
        vertices[f0[2]] = vertices[f0[3]];
        let broken =
            crate::polyhedron::ConvexPolyhedron::from_raw_parts(vertices, cube.faces().to_vec());
        assert!(matches!(dual(&broken), Err(GeomError::Malformed(_))));
    }

    #[test]
    fn on_point_frame_has_vertical_major_axis() {
        let r = on_point_rotation::<f64>();
        let p = unit_solid::<f64>(SolidKind::Icosahedron);
        let top = r.apply(Vector3::new(0.0, 0.5, golden_ratio::<f64>() / 2.0));
        assert!(top.x.abs() < 1e-12 && top.y.abs() < 1e-12);
        assert!((top.z - metrics::<f64>(SolidKind::Icosahedron).circumradius).abs() < 1e-12);
        // Rotation preserves the solid's size.
        let turned = p.transform(r, Vector3::zero(), 1.0).unwrap();
        assert!((turned.volume().unwrap() - p.volume().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn solid_names_round_trip() {
        for kind in SolidKind::ALL {
            assert_eq!(kind.name().parse::<SolidKind>().unwrap(), kind);
        }
        assert!("nosuch".parse::<SolidKind>().is_err());
    }

    #[test]
    fn kernel_instantiates_at_f32() {
        let p = unit_solid::<f32>(SolidKind::Icosahedron);
        assert_eq!(p.vertex_count(), 12);
        let v = p.volume().unwrap();
        assert!((v - 2.181695).abs() < 1e-4, "f32 icosahedron volume {v}");
        let m = metrics::<f32>(SolidKind::Dodecahedron);
        assert!((m.volume - 7.6631).abs() < 1e-3);
    }
}
