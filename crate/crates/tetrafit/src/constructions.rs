//! Analytic enclosing constructions: each one emits a [`Scene`] holding the
//! solid, the enclosing tetrahedron in an explicit pose, the closed-form
//! volume, and a trace of the derivation's named intermediate scalars.
//!
//! All scenes use unit-edge solids; callers rescale whole scenes if needed.

use std::collections::BTreeMap;

use crate::error::GeomError;
use crate::mintriangle::{min_triangle_about_unit_square, unit_square_corners};
use crate::platonic::{golden_ratio, metrics, on_point_rotation, unit_solid, SolidKind};
use crate::polyhedron::{orient_outward, ConvexPolyhedron};
use crate::regtetra::{edge_for_inradius, tetra_volume, RegularTetra};
use crate::rotation::Rotation3;
use crate::vec::Vector3;

type Vec3 = Vector3<f64>;
type Polyhedron = ConvexPolyhedron<f64>;
type Rotation = Rotation3<f64>;

/// Names of the intermediate scalars a construction may record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKey {
    /// `h`: height of a tetrahedron above its base.
    Height,
    /// `m`: slope of a slant face against the base.
    Slope,
    /// `RS`: side of the cross-section triangle at height 1.
    SectionSide,
    /// `gap`: overhang of the square's corners past that section.
    Gap,
    /// `a`: leg length of the corner tetrahedron's base.
    BaseSide,
    /// `r`: a relevant inradius or circumradius, context-dependent.
    Inradius,
    /// `R`: circumradius of the enclosed solid.
    Circumradius,
    /// `t`: edge of the enclosing tetrahedron, in scene scale.
    TetraEdge,
    /// `octaEdge`: edge of the golden octahedron around the edge-2 icosahedron.
    OctaEdge,
    /// `tetraEdge`: edge of the tetrahedron around that octahedron.
    GoldenTetraEdge,
    /// `icosaEdge`: edge of the icosahedron surrounding a dodecahedron.
    IcosaEdge,
    /// `referenceVolume`: previously reported volume kept for comparison.
    ReferenceVolume,
}

impl TraceKey {
    pub const ALL: [TraceKey; 12] = [
        TraceKey::Height,
        TraceKey::Slope,
        TraceKey::SectionSide,
        TraceKey::Gap,
        TraceKey::BaseSide,
        TraceKey::Inradius,
        TraceKey::Circumradius,
        TraceKey::TetraEdge,
        TraceKey::OctaEdge,
        TraceKey::GoldenTetraEdge,
        TraceKey::IcosaEdge,
        TraceKey::ReferenceVolume,
    ];

    /// Looks the serialized name up in the fixed vocabulary.
    pub fn parse(name: &str) -> Option<TraceKey> {
        TraceKey::ALL.into_iter().find(|k| k.as_str() == name)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TraceKey::Height => "h",
            TraceKey::Slope => "m",
            TraceKey::SectionSide => "RS",
            TraceKey::Gap => "gap",
            TraceKey::BaseSide => "a",
            TraceKey::Inradius => "r",
            TraceKey::Circumradius => "R",
            TraceKey::TetraEdge => "t",
            TraceKey::OctaEdge => "octaEdge",
            TraceKey::GoldenTetraEdge => "tetraEdge",
            TraceKey::IcosaEdge => "icosaEdge",
            TraceKey::ReferenceVolume => "referenceVolume",
        }
    }
}

/// Named intermediate scalars of a construction, keyed by the fixed
/// [`TraceKey`] vocabulary.
#[derive(Clone, Debug, Default)]
pub struct DerivationTrace {
    entries: BTreeMap<&'static str, f64>,
}

impl DerivationTrace {
    pub fn set(&mut self, key: TraceKey, value: f64) {
        assert!(value.is_finite(), "trace value for {key:?} must be finite");
        self.entries.insert(key.as_str(), value);
    }

    pub fn get(&self, key: TraceKey) -> Option<f64> {
        self.entries.get(key.as_str()).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A solid, its enclosing tetrahedron, the claimed volume, and the trace.
#[derive(Clone, Debug)]
pub struct Scene {
    pub label: String,
    pub solid: Polyhedron,
    pub enclosure: Polyhedron,
    /// Edge of the enclosing tetrahedron when it is regular.
    pub enclosure_edge: Option<f64>,
    pub claimed_volume: f64,
    pub trace: DerivationTrace,
}

/// CLI-facing names of the constructions, in presentation order.
pub const CONSTRUCTION_NAMES: [&str; 7] = [
    "right-corner-cube",
    "standard-cube",
    "octa",
    "icosa-insphere",
    "icosa-golden",
    "dodeca-dual",
    "dodeca-rotated",
];

/// Builds the construction with the given CLI name.
pub fn scene_by_name(name: &str) -> Option<Scene> {
    match name {
        "right-corner-cube" => Some(right_corner_cube()),
        "standard-cube" => Some(standard_position_cube()),
        "octa" => Some(tetra_around_octahedron()),
        "icosa-insphere" => Some(icosa_insphere_tetra()),
        "icosa-golden" => Some(icosa_golden_tetra()),
        "dodeca-dual" => Some(dodeca_dual_tetra()),
        "dodeca-rotated" => Some(dodeca_rotated_tetra()),
        _ => None,
    }
}

/// All seven constructions in presentation order.
pub fn all_scenes() -> Vec<Scene> {
    CONSTRUCTION_NAMES
        .iter()
        .map(|n| scene_by_name(n).expect("known name"))
        .collect()
}

/// Axis-aligned cube with the given corner and side.
fn axis_cube(corner: Vec3, side: f64) -> Polyhedron {
    let vertices: Vec<Vec3> = (0..8)
        .map(|i| {
            Vec3::new(
                corner.x + (i & 1) as f64 * side,
                corner.y + ((i >> 1) & 1) as f64 * side,
                corner.z + ((i >> 2) & 1) as f64 * side,
            )
        })
        .collect();
    let mut faces = vec![
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ];
    orient_outward(&vertices, &mut faces);
    Polyhedron::new(vertices, faces).expect("axis cube is valid")
}

fn tetra_from_vertices(vertices: [Vec3; 4]) -> Polyhedron {
    let vertices = vertices.to_vec();
    let mut faces = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
    orient_outward(&vertices, &mut faces);
    Polyhedron::new(vertices, faces).expect("tetrahedron is valid")
}

/// Regular tetrahedron of the given edge resting on the plane z = 0: base
/// vertices A, B on the line y = -edge*sqrt(3)/6 (AB along x), C across on
/// the y-axis, apex straight above the base centroid.
pub fn regular_tetra_on_base(edge: f64) -> Polyhedron {
    let s = edge;
    let sqrt3 = 3.0_f64.sqrt();
    let h = s * 6.0_f64.sqrt() / 3.0;
    tetra_from_vertices([
        Vec3::new(-s / 2.0, -s * sqrt3 / 6.0, 0.0),
        Vec3::new(s / 2.0, -s * sqrt3 / 6.0, 0.0),
        Vec3::new(0.0, s * sqrt3 / 3.0, 0.0),
        Vec3::new(0.0, 0.0, h),
    ])
}

/// Octahedron `|x| + |y| + |z| <= icosa_edge * phi^2 / 2`, the one whose
/// three equatorial squares enclose the golden rectangles of an icosahedron
/// with the given edge (canonical frame).
pub fn golden_enclosing_octahedron(icosa_edge: f64) -> Polyhedron {
    let a = icosa_edge * golden_ratio::<f64>().powi(2) / 2.0;
    let z = 0.0;
    let vertices = vec![
        Vec3::new(a, z, z),
        Vec3::new(-a, z, z),
        Vec3::new(z, a, z),
        Vec3::new(z, -a, z),
        Vec3::new(z, z, a),
        Vec3::new(z, z, -a),
    ];
    let mut faces = vec![
        vec![0, 2, 4],
        vec![2, 1, 4],
        vec![1, 3, 4],
        vec![3, 0, 4],
        vec![2, 0, 5],
        vec![1, 2, 5],
        vec![3, 1, 5],
        vec![0, 3, 5],
    ];
    orient_outward(&vertices, &mut faces);
    Polyhedron::new(vertices, faces).expect("golden octahedron is valid")
}

/// Corners `(±x, ±x, ±x)` with an even number of minus signs, where
/// `x = icosa_edge * phi^2 / 2`: the regular tetrahedron carrying alternate
/// faces of the golden octahedron above.
fn golden_enclosing_tetra_vertices(icosa_edge: f64) -> [Vec3; 4] {
    let x = icosa_edge * golden_ratio::<f64>().powi(2) / 2.0;
    [
        Vec3::new(x, x, x),
        Vec3::new(x, -x, -x),
        Vec3::new(-x, x, -x),
        Vec3::new(-x, -x, x),
    ]
}

/// The icosahedron rotated "on point" (major axis vertical) at the given
/// edge length.
pub fn on_point_icosahedron(edge: f64) -> Polyhedron {
    unit_solid::<f64>(SolidKind::Icosahedron)
        .transform(on_point_rotation(), Vec3::zero(), edge)
        .expect("positive scale")
}

/// Corner tetrahedron with legs 3 on the positive axes and the unit cube
/// tucked into the corner; the cube's far corner (1,1,1) lies in the slant
/// face x + y + z = 3.
pub fn right_corner_cube() -> Scene {
    let enclosure = tetra_from_vertices([
        Vec3::new(0.0, 0.0, 0.0),
        Vec3::new(3.0, 0.0, 0.0),
        Vec3::new(0.0, 3.0, 0.0),
        Vec3::new(0.0, 0.0, 3.0),
    ]);
    let solid = axis_cube(Vec3::zero(), 1.0);
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::Height, 3.0);
    trace.set(TraceKey::BaseSide, 3.0);
    Scene {
        label: "right-corner-cube".into(),
        solid,
        enclosure,
        enclosure_edge: None,
        claimed_volume: 4.5,
        trace,
    }
}

/// Minimal regular tetrahedron around the unit cube in standard position:
/// the cube rests on the base, one top edge touches a slant face, and the
/// z = 1 cross-section is the smallest equilateral triangle about the unit
/// square (side 1 + 2 sqrt(3)/3). Growing it back down the slant gives the
/// edge 1 + 2 sqrt(3)/3 + sqrt(6)/2.
pub fn standard_position_cube() -> Scene {
    let sqrt3 = 3.0_f64.sqrt();
    let sqrt6 = 6.0_f64.sqrt();
    let edge = 1.0 + 2.0 * sqrt3 / 3.0 + sqrt6 / 2.0;
    let enclosure = regular_tetra_on_base(edge);
    // At height 1 the section triangle has side `edge - sqrt(6)/2`; its -y
    // side lies in the slant face through the base edge AB, so the cube's
    // top edge sits on that face with the cube centered on the y-axis.
    let section_side = edge - sqrt6 / 2.0;
    let y_touch = -section_side * sqrt3 / 6.0;
    let solid = axis_cube(Vec3::new(-0.5, y_touch, 0.0), 1.0);

    // Intermediates of the edge-3 trial that motivates the enlargement.
    let trial_section = 3.0 - sqrt6 / 2.0;
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::Height, sqrt6);
    trace.set(TraceKey::Slope, 2.0 * 2.0_f64.sqrt());
    trace.set(TraceKey::SectionSide, trial_section);
    trace.set(TraceKey::Gap, (trial_section - 1.0) * sqrt3 / 2.0);
    trace.set(TraceKey::TetraEdge, edge);
    Scene {
        label: "standard-cube".into(),
        solid,
        enclosure,
        enclosure_edge: Some(edge),
        claimed_volume: tetra_volume(edge).expect("positive edge"),
        trace,
    }
}

/// Regular tetrahedron of edge 2 whose six edge midpoints are the unit
/// octahedron's vertices (tetrahedra glued to alternate faces).
pub fn tetra_around_octahedron() -> Scene {
    let solid = unit_solid::<f64>(SolidKind::Octahedron);
    let enclosure = RegularTetra::canonical(2.0)
        .expect("positive edge")
        .to_polyhedron();
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::TetraEdge, 2.0);
    Scene {
        label: "octa".into(),
        solid,
        enclosure,
        enclosure_edge: Some(2.0),
        claimed_volume: tetra_volume(2.0).expect("positive edge"),
        trace,
    }
}

/// Tetrahedron whose insphere is the unit icosahedron's circumsphere:
/// edge 2 sqrt(6) times the circumradius sqrt(10 + 2 sqrt(5))/4.
pub fn icosa_insphere_tetra() -> Scene {
    let solid = unit_solid::<f64>(SolidKind::Icosahedron);
    let circumradius = metrics::<f64>(SolidKind::Icosahedron).circumradius;
    let edge = edge_for_inradius(circumradius);
    let enclosure = RegularTetra::canonical(edge)
        .expect("positive edge")
        .to_polyhedron();
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::Circumradius, circumradius);
    trace.set(TraceKey::Inradius, circumradius);
    trace.set(TraceKey::TetraEdge, edge);
    Scene {
        label: "icosa-insphere".into(),
        solid,
        enclosure,
        enclosure_edge: Some(edge),
        claimed_volume: tetra_volume(edge).expect("positive edge"),
        trace,
    }
}

/// The tight golden-frame fit: squares around the three golden rectangles
/// span an octahedron of edge sqrt(2) phi^2 (for the edge-2 icosahedron),
/// and the tetrahedron over its alternate faces has twice that edge. Scaled
/// to the unit icosahedron the enclosing edge is sqrt(2) phi^2.
pub fn icosa_golden_tetra() -> Scene {
    let phi_sq = golden_ratio::<f64>().powi(2);
    let solid = unit_solid::<f64>(SolidKind::Icosahedron);
    let enclosure = tetra_from_vertices(golden_enclosing_tetra_vertices(1.0));
    let octa_edge_for_edge2 = 2.0_f64.sqrt() * phi_sq;
    let edge = octa_edge_for_edge2; // unit-icosa enclosure edge equals it
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::OctaEdge, octa_edge_for_edge2);
    trace.set(TraceKey::GoldenTetraEdge, 2.0 * octa_edge_for_edge2);
    trace.set(TraceKey::TetraEdge, edge);
    Scene {
        label: "icosa-golden".into(),
        solid,
        enclosure,
        enclosure_edge: Some(edge),
        claimed_volume: tetra_volume(edge).expect("positive edge"),
        trace,
    }
}

/// Duality route for the unit dodecahedron: the icosahedron with the dodeca's
/// vertices at its face centers has edge 3 (sqrt(5) - 1)/2, and the
/// tetrahedron whose insphere is that icosahedron's circumsphere encloses
/// everything.
pub fn dodeca_dual_tetra() -> Scene {
    let solid = unit_solid::<f64>(SolidKind::Dodecahedron);
    let icosa_edge = 3.0 / golden_ratio::<f64>();
    let r = icosa_edge * metrics::<f64>(SolidKind::Icosahedron).circumradius;
    let edge = edge_for_inradius(r);
    let enclosure = RegularTetra::canonical(edge)
        .expect("positive edge")
        .to_polyhedron();
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::IcosaEdge, icosa_edge);
    trace.set(TraceKey::Inradius, r);
    trace.set(TraceKey::TetraEdge, edge);
    Scene {
        label: "dodeca-dual".into(),
        solid,
        enclosure,
        enclosure_edge: Some(edge),
        claimed_volume: tetra_volume(edge).expect("positive edge"),
        trace,
    }
}

/// Edge of the on-point icosahedron around the 36-degree-rotated unit
/// dodecahedron: `(15 + sqrt(5)) / 10`.
pub fn rotated_surrounding_icosa_edge() -> f64 {
    (15.0 + 5.0_f64.sqrt()) / 10.0
}

/// The tighter dodecahedron fit: icosahedron on point, unit dodecahedron
/// with horizontal opposite faces turned +36 degrees about the vertical
/// axis, surrounding icosahedron of edge (15 + sqrt(5))/10, then the golden
/// construction applied to that icosahedron.
///
/// The claimed volume is the constructed enclosure's own volume (about
/// 30.63); the trace keeps the separately reported reference value 27.39802
/// for comparison by the optimizer.
pub fn dodeca_rotated_tetra() -> Scene {
    let icosa_edge = rotated_surrounding_icosa_edge();
    let on_point = on_point_rotation::<f64>();
    let turn = Rotation::from_axis_angle(Vec3::new(0.0, 0.0, 1.0), 36.0_f64.to_radians());
    let solid = unit_solid::<f64>(SolidKind::Dodecahedron)
        .transform(turn.compose(on_point), Vec3::zero(), 1.0)
        .expect("positive scale");
    let corners = golden_enclosing_tetra_vertices(icosa_edge).map(|v| on_point.apply(v));
    let enclosure = tetra_from_vertices(corners);
    let edge = icosa_edge * 2.0_f64.sqrt() * golden_ratio::<f64>().powi(2);
    let mut trace = DerivationTrace::default();
    trace.set(TraceKey::IcosaEdge, icosa_edge);
    trace.set(TraceKey::TetraEdge, edge);
    trace.set(TraceKey::ReferenceVolume, 27.39802);
    Scene {
        label: "dodeca-rotated".into(),
        solid,
        enclosure,
        enclosure_edge: Some(edge),
        claimed_volume: tetra_volume(edge).expect("positive edge"),
        trace,
    }
}

/// Volume of an `s x s x s` tetrahedron (base an s-by-s right triangle,
/// height s): `s^3 / 6`.
pub fn sxsxs_volume(s: f64) -> Result<f64, GeomError> {
    if !(s > 0.0) {
        return Err(GeomError::invalid_input("sxsxs side must be > 0"));
    }
    Ok(s.powi(3) / 6.0)
}

/// Measured pieces of the cross-section minimality argument.
#[derive(Clone, Debug)]
pub struct CrossSectionReport {
    /// Area of the z = 1 slice of the 3x3x3 corner tetrahedron.
    pub slice_area: f64,
    /// Whether that slice contains the unit square at 1e-9.
    pub slice_contains_square: bool,
    /// Result of the independent 2D triangle search.
    pub min_triangle_area: f64,
    pub passed: bool,
}

/// Numerically verifies the cross-section chain: the z = 1 slice of the
/// 3x3x3 corner tetrahedron is a 2x2 right triangle of area 2, it contains
/// the square's top face, and 2 matches the independent minimal-triangle
/// search.
pub fn cross_section_argument_check() -> CrossSectionReport {
    let scene = right_corner_cube();
    let slice = scene
        .enclosure
        .cross_section_z(1.0)
        .expect("plane z=1 cuts the corner tetrahedron");
    let slice_area = slice.area();
    let slice_contains_square = unit_square_corners::<f64>()
        .iter()
        .all(|&c| slice.contains_point(c, 1e-9));
    let min_triangle_area = min_triangle_about_unit_square::<f64>().area;
    let passed = (slice_area - 2.0).abs() <= 1e-9
        && slice_contains_square
        && (min_triangle_area - slice_area).abs() <= 1e-4;
    CrossSectionReport {
        slice_area,
        slice_contains_square,
        min_triangle_area,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec::Vector3;

    fn contains_all(enclosure: &Polyhedron, solid: &Polyhedron, tol: f64) -> bool {
        solid
            .vertices()
            .iter()
            .all(|&v| enclosure.contains_point(v, tol))
    }

    #[test]
    fn scenes_contain_their_solids() {
        for scene in all_scenes() {
            let tol = match scene.label.as_str() {
                "standard-cube" | "dodeca-rotated" => 1e-6,
                _ => 1e-9,
            };
            assert!(
                contains_all(&scene.enclosure, &scene.solid, tol),
                "{} containment fails",
                scene.label
            );
        }
    }

    #[test]
    fn claimed_volumes_match_measured() {
        for scene in all_scenes() {
            let measured = scene.enclosure.volume().unwrap();
            let rel = ((measured - scene.claimed_volume) / scene.claimed_volume).abs();
            assert!(rel < 1e-3, "{}: measured {measured}", scene.label);
        }
    }

    #[test]
    fn right_corner_numbers() {
        let scene = right_corner_cube();
        assert!((scene.enclosure.volume().unwrap() - 4.5).abs() < 1e-12);
        assert!(scene.enclosure_edge.is_none());
        // K = (1,1,1) lies in the slant plane x + y + z = 3.
        let k = Vec3::new(1.0, 1.0, 1.0);
        assert_eq!(k.x + k.y + k.z - 3.0, 0.0);
        assert!(scene.enclosure.contains_point(k, 1e-12));
        let slice = scene.enclosure.cross_section_z(1.0).unwrap();
        let mut sides = slice.side_lengths();
        sides.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((sides[0] - 2.0).abs() < 1e-12 && (sides[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn standard_cube_numbers() {
        let scene = standard_position_cube();
        let edge = scene.enclosure_edge.unwrap();
        assert!((edge - 3.37945).abs() < 1e-5);
        assert!((scene.claimed_volume - 4.5485).abs() < 5e-3);
        assert!(contains_all(&scene.enclosure, &scene.solid, 1e-6));
        assert!((scene.trace.get(TraceKey::Height).unwrap() - 6.0_f64.sqrt()).abs() < 1e-12);
        assert!(
            (scene.trace.get(TraceKey::Slope).unwrap() - 2.0 * 2.0_f64.sqrt()).abs() < 1e-12
        );
        assert!((scene.trace.get(TraceKey::SectionSide).unwrap() - 1.775).abs() < 1e-3);
        assert!((scene.trace.get(TraceKey::Gap).unwrap() - 0.671).abs() < 1e-3);
        // Enlarged section side from the trace: t - sqrt(6)/2 = 1 + 2 sqrt(3)/3.
        let enlarged = scene.trace.get(TraceKey::TetraEdge).unwrap() - 6.0_f64.sqrt() / 2.0;
        assert!((enlarged - (1.0 + 2.0 * 3.0_f64.sqrt() / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn standard_cube_touches_slant_face() {
        // The cube's top -y edge must lie in the slant plane through AB.
        let scene = standard_position_cube();
        let edge = scene.enclosure_edge.unwrap();
        let cube = &scene.solid;
        let y_min = cube
            .vertices()
            .iter()
            .map(|v| v.y)
            .fold(f64::INFINITY, f64::min);
        let touching: Vec<Vec3> = cube
            .vertices()
            .iter()
            .copied()
            .filter(|v| (v.y - y_min).abs() < 1e-12 && (v.z - 1.0).abs() < 1e-12)
            .collect();
        assert_eq!(touching.len(), 2);
        // Slant face through A, B: find the enclosure face whose plane holds both.
        let mut found = false;
        for i in 0..scene.enclosure.face_count() {
            let plane = scene.enclosure.face_plane(i);
            if touching
                .iter()
                .all(|&p| (plane.normal.dot(p) - plane.offset).abs() < 1e-12)
            {
                found = true;
            }
        }
        assert!(found, "top edge does not touch any slant face");
        let _ = edge;
    }

    #[test]
    fn octahedron_scene_numbers() {
        let scene = tetra_around_octahedron();
        assert!((scene.claimed_volume - 0.94281).abs() < 1e-5);
        let octa_volume = scene.solid.volume().unwrap();
        assert!((octa_volume - 0.47140).abs() < 1e-5);
        assert!((octa_volume / scene.claimed_volume - 0.5).abs() < 1e-9);
    }

    #[test]
    fn octahedron_sits_on_edge_midpoints() {
        let scene = tetra_around_octahedron();
        let tetra = &scene.enclosure;
        for &v in scene.solid.vertices() {
            let close_to_midpoint = tetra.edges().iter().any(|&(a, b)| {
                let mid = (tetra.vertices()[a] + tetra.vertices()[b]) * 0.5;
                (mid - v).norm() <= 1e-12
            });
            assert!(close_to_midpoint, "vertex {v:?} is not an edge midpoint");
        }
    }

    #[test]
    fn octahedron_faces_flush_or_parallel() {
        let scene = tetra_around_octahedron();
        for i in 0..scene.solid.face_count() {
            let fp = scene.solid.face_plane(i);
            let mut matched = false;
            for j in 0..scene.enclosure.face_count() {
                let tp = scene.enclosure.face_plane(j);
                let align = fp.normal.dot(tp.normal);
                if align > 1.0 - 1e-9 {
                    assert!((fp.offset - tp.offset).abs() < 1e-9, "face {i} not flush");
                    matched = true;
                } else if align < -1.0 + 1e-9 {
                    matched = true;
                }
            }
            assert!(matched, "octa face {i} neither flush nor parallel");
        }
    }

    #[test]
    fn icosa_insphere_numbers() {
        let scene = icosa_insphere_tetra();
        let edge = scene.enclosure_edge.unwrap();
        assert!((edge - 4.65921).abs() < 1e-5);
        assert!((scene.claimed_volume - 11.91982).abs() < 1e-4);
        let insphere = edge * 6.0_f64.sqrt() / 12.0;
        let circum = metrics::<f64>(SolidKind::Icosahedron).circumradius;
        assert!((insphere - circum).abs() < 1e-12);
    }

    #[test]
    fn icosa_golden_numbers() {
        let scene = icosa_golden_tetra();
        assert!((scene.trace.get(TraceKey::OctaEdge).unwrap() - 3.7025).abs() < 1e-4);
        assert!((scene.trace.get(TraceKey::GoldenTetraEdge).unwrap() - 7.4049).abs() < 1e-4);
        assert!((scene.claimed_volume - 5.9816).abs() < 2e-3);
    }

    #[test]
    fn icosa_vertices_on_golden_octahedron_faces() {
        let octa = golden_enclosing_octahedron(1.0);
        let icosa = unit_solid::<f64>(SolidKind::Icosahedron);
        for &v in icosa.vertices() {
            let min_gap = (0..octa.face_count())
                .map(|i| {
                    let p = octa.face_plane(i);
                    (p.offset - p.normal.dot(v)).abs()
                })
                .fold(f64::INFINITY, f64::min);
            assert!(min_gap <= 1e-9, "vertex {v:?} misses all face planes");
            assert!(octa.contains_point(v, 1e-9));
        }
    }

    #[test]
    fn dodeca_dual_numbers() {
        let scene = dodeca_dual_tetra();
        assert!((scene.trace.get(TraceKey::IcosaEdge).unwrap() - 1.8541).abs() < 1e-4);
        assert!((scene.trace.get(TraceKey::Inradius).unwrap() - 1.76336).abs() < 1e-5);
        assert!((scene.enclosure_edge.unwrap() - 8.63864).abs() < 1e-4);
        assert!((scene.claimed_volume - 75.9749).abs() < 0.01);
    }

    #[test]
    fn dodeca_dual_duality_alignment() {
        // The surrounding icosahedron's face centers are the dodeca vertices.
        let scene = dodeca_dual_tetra();
        let icosa_edge = scene.trace.get(TraceKey::IcosaEdge).unwrap();
        let icosa = unit_solid::<f64>(SolidKind::Icosahedron)
            .transform(Rotation::identity(), Vec3::zero(), icosa_edge)
            .unwrap();
        let centers: Vec<Vec3> = (0..icosa.face_count())
            .map(|i| {
                let f = &icosa.faces()[i];
                Vector3::centroid(&f.iter().map(|&k| icosa.vertices()[k]).collect::<Vec<_>>())
            })
            .collect();
        for &v in scene.solid.vertices() {
            assert!(
                centers.iter().any(|&c| (c - v).norm() < 1e-9),
                "dodeca vertex {v:?} is not an icosa face center"
            );
        }
    }

    #[test]
    fn dodeca_rotated_numbers() {
        let scene = dodeca_rotated_tetra();
        let icosa_edge = scene.trace.get(TraceKey::IcosaEdge).unwrap();
        assert!((icosa_edge - 1.7236).abs() < 1e-4);
        assert!((scene.trace.get(TraceKey::ReferenceVolume).unwrap() - 27.39802).abs() < 1e-9);
        // The constructed enclosure is noticeably larger than the reference.
        assert!(scene.claimed_volume > 30.0 && scene.claimed_volume < 31.0);
    }

    #[test]
    fn dodeca_rotated_fits_surrounding_icosahedron() {
        let scene = dodeca_rotated_tetra();
        let icosa = on_point_icosahedron(rotated_surrounding_icosa_edge());
        for &v in scene.solid.vertices() {
            assert!(
                icosa.contains_point(v, 1e-6),
                "dodeca vertex {v:?} escapes the surrounding icosahedron"
            );
        }
        // And the icosahedron's golden tetra is the scene enclosure.
        for &v in icosa.vertices() {
            assert!(scene.enclosure.contains_point(v, 1e-9));
        }
    }

    #[test]
    fn sxsxs_values() {
        assert!((sxsxs_volume(3.0).unwrap() - 4.5).abs() < 1e-15);
        assert!((sxsxs_volume(1.0).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((sxsxs_volume(2.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(sxsxs_volume(0.0).is_err());
        assert!(sxsxs_volume(-1.0).is_err());
    }

    #[test]
    fn cross_section_chain_holds() {
        let report = cross_section_argument_check();
        assert!((report.slice_area - 2.0).abs() <= 1e-9);
        assert!(report.slice_contains_square);
        assert!((report.min_triangle_area - report.slice_area).abs() <= 1e-4);
        assert!(report.passed);
    }
}
