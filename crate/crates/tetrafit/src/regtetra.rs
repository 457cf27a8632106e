//! Regular tetrahedra as poses (centroid, rotation, edge), containment, and
//! the closed-form minimal edge for a fixed orientation.
//!
//! The orientation fit is the kernel the optimizer evaluates at every sampled
//! rotation, so it stays allocation-free.

use crate::error::GeomError;
use crate::polyhedron::{orient_outward, ConvexPolyhedron};
use crate::rotation::Rotation3;
use crate::scalar::Real;
use crate::vec::Vector3;

/// Outward unit face normals of the reference regular tetrahedron:
/// the four `(±1, ±1, ±1)/sqrt(3)` directions with an even number of minus
/// signs. They sum to zero and pairwise dot to -1/3.
pub fn canonical_normals<T: Real>() -> [Vector3<T>; 4] {
    let a = T::one() / T::from_f64_lossy(3.0).sqrt();
    [
        Vector3::new(a, a, a),
        Vector3::new(a, -a, -a),
        Vector3::new(-a, a, -a),
        Vector3::new(-a, -a, a),
    ]
}

/// A regular tetrahedron in pose form.
#[derive(Clone, Copy, Debug)]
pub struct RegularTetra<T> {
    pub centroid: Vector3<T>,
    pub rotation: Rotation3<T>,
    pub edge: T,
}

impl<T: Real> RegularTetra<T> {
    pub fn new(centroid: Vector3<T>, rotation: Rotation3<T>, edge: T) -> Result<Self, GeomError> {
        if !(edge > T::zero()) {
            return Err(GeomError::invalid_input("tetrahedron edge must be > 0"));
        }
        Ok(Self {
            centroid,
            rotation,
            edge,
        })
    }

    /// Reference orientation, centered at the origin.
    pub fn canonical(edge: T) -> Result<Self, GeomError> {
        Self::new(Vector3::zero(), Rotation3::identity(), edge)
    }

    /// Distance from the centroid to each face plane: `edge * sqrt(6) / 12`.
    pub fn inradius(&self) -> T {
        self.edge * T::from_f64_lossy(6.0).sqrt() / T::from_f64_lossy(12.0)
    }

    /// Distance from the centroid to each vertex: `edge * sqrt(6) / 4`.
    pub fn circumradius(&self) -> T {
        self.edge * T::from_f64_lossy(6.0).sqrt() / T::from_f64_lossy(4.0)
    }

    /// Outward unit face normals in the posed orientation.
    pub fn face_normals(&self) -> [Vector3<T>; 4] {
        canonical_normals().map(|n| self.rotation.apply(n))
    }

    /// The four corners; each sits opposite the same-index face normal.
    pub fn vertices(&self) -> [Vector3<T>; 4] {
        let r = self.circumradius();
        self.face_normals().map(|n| self.centroid - n * r)
    }

    /// True iff every point satisfies all four face half-space tests within
    /// `tol`.
    pub fn contains(&self, points: &[Vector3<T>], tol: T) -> bool {
        let r = self.inradius();
        let normals = self.face_normals();
        points.iter().all(|&p| {
            let d = p - self.centroid;
            normals.iter().all(|&n| n.dot(d) <= r + tol)
        })
    }

    /// Explicit mesh form (four triangular faces).
    pub fn to_polyhedron(&self) -> ConvexPolyhedron<T> {
        let vertices = self.vertices().to_vec();
        let mut faces = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        orient_outward(&vertices, &mut faces);
        ConvexPolyhedron::new(vertices, faces).expect("posed tetrahedron is valid")
    }
}

/// The tightest fit of a regular tetrahedron with a prescribed orientation
/// around a point set.
#[derive(Clone, Copy, Debug)]
pub struct OrientedFit<T> {
    pub edge: T,
    pub centroid: Vector3<T>,
    /// Support values of the point set along the four rotated normals.
    pub support: [T; 4],
}

impl<T: Real> OrientedFit<T> {
    pub fn tetra(&self, rotation: Rotation3<T>) -> RegularTetra<T> {
        RegularTetra {
            centroid: self.centroid,
            rotation,
            edge: self.edge,
        }
    }
}

/// Minimal enclosing regular tetrahedron with face normals fixed to the
/// rotated reference directions.
///
/// With normals `n_i` and support values `M_i = max_j n_i . p_j`, the mean
/// gap `d = (M_1 + ... + M_4) / 4` is the smallest achievable inradius
/// (the four slacks sum to a translation-independent constant because the
/// normals sum to zero, and equalizing them is always solvable). That gives
/// `edge = 2 sqrt(6) d` with the equalizing centroid
/// `c = 3/4 * sum_i (M_i - d) n_i`, and every face touching the set.
pub fn min_edge_for_orientation<T: Real>(
    points: &[Vector3<T>],
    rotation: Rotation3<T>,
) -> Result<OrientedFit<T>, GeomError> {
    if points.is_empty() {
        return Err(GeomError::invalid_input(
            "cannot fit a tetrahedron around an empty point set",
        ));
    }
    let normals = canonical_normals().map(|n| rotation.apply(n));
    let mut support = [T::zero(); 4];
    for (m, n) in support.iter_mut().zip(normals.iter()) {
        *m = points
            .iter()
            .map(|&p| n.dot(p))
            .fold(T::neg_infinity(), T::max);
    }
    let quarter = T::from_f64_lossy(0.25);
    let d = (support[0] + support[1] + support[2] + support[3]) * quarter;
    // Nonnegative up to rounding noise; clamp the noise away.
    let d = d.max(T::zero());
    let edge = T::from_f64_lossy(2.0) * T::from_f64_lossy(6.0).sqrt() * d;
    let mut centroid = Vector3::zero();
    for (&m, &n) in support.iter().zip(normals.iter()) {
        centroid += n * (m - d);
    }
    centroid = centroid * T::from_f64_lossy(0.75);
    Ok(OrientedFit {
        edge,
        centroid,
        support,
    })
}

/// Volume of a regular tetrahedron: `sqrt(2) * edge^3 / 12`.
pub fn tetra_volume<T: Real>(edge: T) -> Result<T, GeomError> {
    if !(edge > T::zero()) {
        return Err(GeomError::invalid_input("tetrahedron edge must be > 0"));
    }
    Ok(T::from_f64_lossy(2.0).sqrt() * edge * edge * edge / T::from_f64_lossy(12.0))
}

/// Edge of the regular tetrahedron whose insphere has radius `r`:
/// `edge = 2 sqrt(6) r`.
pub fn edge_for_inradius<T: Real>(r: T) -> T {
    T::from_f64_lossy(2.0) * T::from_f64_lossy(6.0).sqrt() * r
}
