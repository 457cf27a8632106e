//! Proper rotations of 3-space, stored as unit quaternions.
//!
//! The optimizer walks rotation space through the rotation-vector chart
//! ([`Rotation3::from_rotation_vector`] / [`Rotation3::to_rotation_vector`]),
//! which is the usual axis-times-angle exponential map.

use crate::scalar::Real;
use crate::vec::Vector3;

/// A proper rotation (orthogonal, determinant +1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation3<T> {
    w: T,
    x: T,
    y: T,
    z: T,
}

impl<T: Real> Rotation3<T> {
    pub fn identity() -> Self {
        Self {
            w: T::one(),
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    /// Rotation by `angle` radians about `axis`. A zero axis gives the identity.
    pub fn from_axis_angle(axis: Vector3<T>, angle: T) -> Self {
        match axis.normalized() {
            None => Self::identity(),
            Some(u) => {
                let half = angle * T::from_f64_lossy(0.5);
                let s = half.sin();
                Self {
                    w: half.cos(),
                    x: u.x * s,
                    y: u.y * s,
                    z: u.z * s,
                }
                .renormalized()
            }
        }
    }

    /// Exponential map: `v` points along the axis with `|v|` radians of turn.
    pub fn from_rotation_vector(v: Vector3<T>) -> Self {
        let angle = v.norm();
        // sin(angle/2)/angle, continuously extended through zero.
        let half = angle * T::from_f64_lossy(0.5);
        let factor = if angle < T::from_f64_lossy(1e-8) {
            T::from_f64_lossy(0.5) - angle * angle * T::from_f64_lossy(1.0 / 48.0)
        } else {
            half.sin() / angle
        };
        Self {
            w: half.cos(),
            x: v.x * factor,
            y: v.y * factor,
            z: v.z * factor,
        }
        .renormalized()
    }

    /// Logarithm map, inverse of [`Self::from_rotation_vector`].
    /// The returned angle is in `[0, pi]`.
    pub fn to_rotation_vector(self) -> Vector3<T> {
        // Flip sign so w >= 0, putting the angle in [0, pi].
        let (w, v) = if self.w < T::zero() {
            (-self.w, Vector3::new(-self.x, -self.y, -self.z))
        } else {
            (self.w, Vector3::new(self.x, self.y, self.z))
        };
        let s = v.norm();
        if s < T::from_f64_lossy(1e-12) {
            return v * T::from_f64_lossy(2.0);
        }
        let angle = T::from_f64_lossy(2.0) * s.atan2(w);
        v * (angle / s)
    }

    /// Rotation taking unit vector `from` to unit vector `to` along the
    /// great circle between them. Antiparallel inputs pick an arbitrary
    /// perpendicular axis.
    pub fn between(from: Vector3<T>, to: Vector3<T>) -> Self {
        let f = from.normalized().expect("from must be nonzero");
        let t = to.normalized().expect("to must be nonzero");
        let c = f.dot(t).max(-T::one()).min(T::one());
        let axis = f.cross(t);
        if let Some(u) = axis.normalized() {
            Self::from_axis_angle(u, c.acos())
        } else if c > T::zero() {
            Self::identity()
        } else {
            // 180 degrees: any axis orthogonal to f works.
            let pick = if f.x.abs() < T::from_f64_lossy(0.9) {
                Vector3::new(T::one(), T::zero(), T::zero())
            } else {
                Vector3::new(T::zero(), T::one(), T::zero())
            };
            let u = f.cross(pick).normalized().expect("perpendicular axis");
            Self::from_axis_angle(u, T::PI())
        }
    }

    /// Build from Shoemake's subgroup-algorithm parametrization of the
    /// uniform distribution on SO(3). Feeding it three independent
    /// uniform-[0,1) samples yields a Haar-uniform rotation; the caller owns
    /// the random stream so results stay reproducible.
    pub fn from_uniform_sample(u1: T, u2: T, u3: T) -> Self {
        let two_pi = T::PI() * T::from_f64_lossy(2.0);
        let r1 = (T::one() - u1).sqrt();
        let r2 = u1.sqrt();
        let (a, b) = (two_pi * u2, two_pi * u3);
        Self {
            w: r1 * a.sin(),
            x: r1 * a.cos(),
            y: r2 * b.sin(),
            z: r2 * b.cos(),
        }
        .renormalized()
    }

    pub fn apply(self, v: Vector3<T>) -> Vector3<T> {
        // v' = v + 2 q x (q x v + w v), with q the vector part.
        let q = Vector3::new(self.x, self.y, self.z);
        let t = q.cross(v) + v * self.w;
        v + q.cross(t) * T::from_f64_lossy(2.0)
    }

    /// Composition: the result applies `other` first, then `self`.
    pub fn compose(self, other: Self) -> Self {
        Self {
            w: self.w * other.w - self.x * other.x - self.y * other.y - self.z * other.z,
            x: self.w * other.x + self.x * other.w + self.y * other.z - self.z * other.y,
            y: self.w * other.y - self.x * other.z + self.y * other.w + self.z * other.x,
            z: self.w * other.z + self.x * other.y - self.y * other.x + self.z * other.w,
        }
        .renormalized()
    }

    pub fn inverse(self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    fn renormalized(self) -> Self {
        let n = (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt();
        Self {
            w: self.w / n,
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ortho_tol;

    type R = Rotation3<f64>;
    type V = Vector3<f64>;

    fn z_axis() -> V {
        V::new(0.0, 0.0, 1.0)
    }

    #[test]
    fn preserves_dot_products() {
        let r = R::from_axis_angle(V::new(1.0, 2.0, -0.5), 1.234);
        let a = V::new(0.3, -1.7, 2.2);
        let b = V::new(-2.0, 0.1, 0.9);
        let before = a.dot(b);
        let after = r.apply(a).dot(r.apply(b));
        assert!((before - after).abs() < ortho_tol::<f64>());
    }

    #[test]
    fn determinant_is_plus_one() {
        let r = R::from_rotation_vector(V::new(0.7, -0.2, 2.9));
        let ex = r.apply(V::new(1.0, 0.0, 0.0));
        let ey = r.apply(V::new(0.0, 1.0, 0.0));
        let ez = r.apply(z_axis());
        let det = ex.cross(ey).dot(ez);
        assert!((det - 1.0).abs() < ortho_tol::<f64>());
    }

    #[test]
    fn compose_then_invert_is_identity() {
        let a = R::from_axis_angle(z_axis(), 0.8);
        let b = R::from_axis_angle(V::new(1.0, 1.0, 0.0), -1.1);
        let c = a.compose(b).compose(b.inverse()).compose(a.inverse());
        let v = V::new(0.2, 0.4, -1.0);
        assert!((c.apply(v) - v).norm() < 1e-14);
    }

    #[test]
    fn rotation_vector_round_trip() {
        for v in [
            V::zero(),
            V::new(1e-10, 0.0, 0.0),
            V::new(0.3, -0.4, 0.5),
            V::new(2.0, 1.0, -2.5),
        ] {
            let r = R::from_rotation_vector(v);
            let w = r.to_rotation_vector();
            let r2 = R::from_rotation_vector(w);
            let probe = V::new(0.33, -0.91, 0.25);
            assert!(
                (r.apply(probe) - r2.apply(probe)).norm() < 1e-12,
                "round trip changed the rotation for {v:?}"
            );
        }
    }

    #[test]
    fn thirty_six_degrees_about_z() {
        let r = R::from_axis_angle(z_axis(), 36.0_f64.to_radians());
        let v = r.apply(V::new(1.0, 0.0, 0.0));
        assert!((v.x - 36.0_f64.to_radians().cos()).abs() < 1e-15);
        assert!((v.y - 36.0_f64.to_radians().sin()).abs() < 1e-15);
        // Ten such turns come back around.
        let mut acc = R::identity();
        for _ in 0..10 {
            acc = r.compose(acc);
        }
        assert!((acc.apply(v) - v).norm() < 1e-13);
    }

    #[test]
    fn between_maps_from_to_to() {
        let from = V::new(0.0, 1.0, 1.6180339887498949);
        let r = R::between(from, z_axis());
        let mapped = r.apply(from);
        assert!((mapped.normalized().unwrap() - z_axis()).norm() < 1e-14);
        // Antiparallel case still produces a proper rotation.
        let flip = R::between(z_axis(), V::new(0.0, 0.0, -1.0));
        assert!((flip.apply(z_axis()) + z_axis()).norm() < 1e-14);
    }

    #[test]
    fn uniform_sample_is_unit() {
        let r = R::from_uniform_sample(0.37, 0.91, 0.04);
        let v = V::new(1.0, 2.0, 3.0);
        assert!((r.apply(v).norm() - v.norm()).abs() < 1e-12);
    }
}
