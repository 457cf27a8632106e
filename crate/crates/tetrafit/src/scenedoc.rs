//! Scene documents: a self-describing JSON form of [`Scene`] plus optional
//! optimizer output.
//!
//! Serialization is hand-rendered so every number carries exactly 12
//! significant digits and re-serializing a parsed document is byte-identical;
//! parsing goes through serde so malformed files get line/column diagnostics.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::constructions::{DerivationTrace, Scene, TraceKey};
use crate::error::GeomError;
use crate::optimizer::EnclosureResult;
use crate::polyhedron::ConvexPolyhedron;
use crate::rotation::Rotation3;
use crate::vec::Vector3;

pub const SCHEMA_VERSION: u64 = 1;

/// Vertex/face arrays of one mesh.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshData {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

impl MeshData {
    pub fn from_polyhedron(p: &ConvexPolyhedron<f64>) -> Self {
        Self {
            vertices: p.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(),
            faces: p.faces().to_vec(),
        }
    }

    pub fn to_polyhedron(&self) -> Result<ConvexPolyhedron<f64>, GeomError> {
        let vertices = self
            .vertices
            .iter()
            .map(|&[x, y, z]| Vector3::new(x, y, z))
            .collect();
        ConvexPolyhedron::new(vertices, self.faces.clone())
    }
}

/// Optimizer output attached to a document.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct OptimizerDocument {
    /// Rotation-vector (axis times angle) form of the best orientation.
    pub rotation: [f64; 3],
    pub edge: f64,
    pub centroid: [f64; 3],
    pub volume: f64,
    pub evaluations: u64,
    pub converged: bool,
    pub coplanar_input: bool,
}

impl OptimizerDocument {
    pub fn from_result(r: &EnclosureResult) -> Self {
        let v = r.rotation.to_rotation_vector();
        Self {
            rotation: [v.x, v.y, v.z],
            edge: r.edge,
            centroid: [r.centroid.x, r.centroid.y, r.centroid.z],
            volume: r.volume,
            evaluations: r.evaluations,
            converged: r.converged,
            coplanar_input: r.coplanar_input,
        }
    }

    pub fn to_result(&self) -> EnclosureResult {
        EnclosureResult {
            rotation: Rotation3::from_rotation_vector(Vector3::new(
                self.rotation[0],
                self.rotation[1],
                self.rotation[2],
            )),
            edge: self.edge,
            centroid: Vector3::new(self.centroid[0], self.centroid[1], self.centroid[2]),
            volume: self.volume,
            evaluations: self.evaluations,
            converged: self.converged,
            coplanar_input: self.coplanar_input,
        }
    }
}

/// JSON form of a scene.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SceneDocument {
    pub schema_version: u64,
    pub label: String,
    pub solid: MeshData,
    pub enclosure: MeshData,
    pub enclosure_edge: Option<f64>,
    pub claimed_volume: f64,
    pub trace: BTreeMap<String, f64>,
    #[serde(default)]
    pub optimizer_result: Option<OptimizerDocument>,
}

impl SceneDocument {
    pub fn from_scene(scene: &Scene) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            label: scene.label.clone(),
            solid: MeshData::from_polyhedron(&scene.solid),
            enclosure: MeshData::from_polyhedron(&scene.enclosure),
            enclosure_edge: scene.enclosure_edge,
            claimed_volume: scene.claimed_volume,
            trace: scene
                .trace
                .iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            optimizer_result: None,
        }
    }

    /// Rebuilds the scene, re-validating both meshes and the trace keys.
    pub fn to_scene(&self) -> Result<Scene, GeomError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(GeomError::invalid_input(format!(
                "unsupported schemaVersion {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let mut trace = DerivationTrace::default();
        for (name, &value) in &self.trace {
            let key = TraceKey::parse(name).ok_or_else(|| {
                GeomError::invalid_input(format!("unknown trace key '{name}'"))
            })?;
            trace.set(key, value);
        }
        Ok(Scene {
            label: self.label.clone(),
            solid: self.solid.to_polyhedron()?,
            enclosure: self.enclosure.to_polyhedron()?,
            enclosure_edge: self.enclosure_edge,
            claimed_volume: self.claimed_volume,
            trace,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Deterministic JSON: fixed key order, 12 significant digits, newline
    /// terminated.
    pub fn to_json(&self) -> String {
        let mut w = JsonWriter::new();
        w.open("{");
        w.field("schemaVersion", &self.schema_version.to_string());
        w.field("label", &json_string(&self.label));
        w.key("solid");
        write_mesh_json(&mut w, &self.solid);
        w.finish_field();
        w.key("enclosure");
        write_mesh_json(&mut w, &self.enclosure);
        w.finish_field();
        w.field(
            "enclosureEdge",
            &match self.enclosure_edge {
                Some(e) => fmt_sig12(e),
                None => "null".to_string(),
            },
        );
        w.field("claimedVolume", &fmt_sig12(self.claimed_volume));
        w.key("trace");
        w.open("{");
        let n = self.trace.len();
        for (i, (k, v)) in self.trace.iter().enumerate() {
            w.line(&format!(
                "{}: {}{}",
                json_string(k),
                fmt_sig12(*v),
                comma(i, n)
            ));
        }
        w.close("}");
        w.finish_field();
        if let Some(opt) = &self.optimizer_result {
            w.key("optimizerResult");
            w.open("{");
            w.field("rotation", &vec3_json(opt.rotation));
            w.field("edge", &fmt_sig12(opt.edge));
            w.field("centroid", &vec3_json(opt.centroid));
            w.field("volume", &fmt_sig12(opt.volume));
            w.field("evaluations", &opt.evaluations.to_string());
            w.field("converged", &opt.converged.to_string());
            w.last_field("coplanarInput", &opt.coplanar_input.to_string());
            w.close("}");
            w.finish_last_field();
        } else {
            w.make_previous_field_last();
        }
        w.close("}");
        w.out.push('\n');
        w.out
    }
}

fn write_mesh_json(w: &mut JsonWriter, mesh: &MeshData) {
    w.open("{");
    w.key("vertices");
    w.open("[");
    let nv = mesh.vertices.len();
    for (i, v) in mesh.vertices.iter().enumerate() {
        w.line(&format!("{}{}", vec3_json(*v), comma(i, nv)));
    }
    w.close("]");
    w.finish_field();
    w.key("faces");
    w.open("[");
    let nf = mesh.faces.len();
    for (i, f) in mesh.faces.iter().enumerate() {
        let idx: Vec<String> = f.iter().map(|k| k.to_string()).collect();
        w.line(&format!("[{}]{}", idx.join(", "), comma(i, nf)));
    }
    w.close("]");
    w.finish_last_field();
    w.close("}");
}

fn vec3_json(v: [f64; 3]) -> String {
    format!(
        "[{}, {}, {}]",
        fmt_sig12(v[0]),
        fmt_sig12(v[1]),
        fmt_sig12(v[2])
    )
}

fn comma(i: usize, n: usize) -> &'static str {
    if i + 1 == n {
        ""
    } else {
        ","
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Minimal indenting writer for the fixed document schema.
struct JsonWriter {
    out: String,
    indent: usize,
}

impl JsonWriter {
    fn new() -> Self {
        Self {
            out: String::new(),
            indent: 0,
        }
    }

    fn pad(&mut self) {
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
    }

    fn open(&mut self, bracket: &str) {
        // An opener either starts the document or follows a key.
        if self.out.ends_with(": ") || self.out.is_empty() {
            self.out.push_str(bracket);
        } else {
            self.pad();
            self.out.push_str(bracket);
        }
        self.out.push('\n');
        self.indent += 1;
    }

    fn close(&mut self, bracket: &str) {
        self.indent -= 1;
        self.pad();
        self.out.push_str(bracket);
    }

    fn key(&mut self, name: &str) {
        self.pad();
        self.out.push_str(&json_string(name));
        self.out.push_str(": ");
    }

    fn field(&mut self, name: &str, value: &str) {
        self.key(name);
        self.out.push_str(value);
        self.out.push_str(",\n");
    }

    fn last_field(&mut self, name: &str, value: &str) {
        self.key(name);
        self.out.push_str(value);
        self.out.push('\n');
    }

    fn line(&mut self, content: &str) {
        self.pad();
        self.out.push_str(content);
        self.out.push('\n');
    }

    /// Ends a nested value that has siblings after it.
    fn finish_field(&mut self) {
        self.out.push_str(",\n");
    }

    /// Ends the final nested value of an object.
    fn finish_last_field(&mut self) {
        self.out.push('\n');
    }

    /// Rewrites the trailing ",\n" of the previous field into "\n".
    fn make_previous_field_last(&mut self) {
        if self.out.ends_with(",\n") {
            self.out.truncate(self.out.len() - 2);
            self.out.push('\n');
        }
    }
}

/// Formats with exactly 12 significant digits, plain decimal notation, and
/// no locale dependence. Stable under parse-and-reformat.
pub fn fmt_sig12(x: f64) -> String {
    assert!(x.is_finite(), "document numbers must be finite");
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 12);
    let mut out = String::with_capacity(20);
    if neg {
        out.push('-');
    }
    if exp >= 0 {
        let ip = exp as usize + 1;
        if ip >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat('0').take(ip - digits.len()));
        } else {
            out.push_str(&digits[..ip]);
            out.push('.');
            out.push_str(&digits[ip..]);
        }
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-exp - 1) as usize));
        out.push_str(&digits);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{all_scenes, tetra_around_octahedron};

    #[test]
    fn fmt_sig12_samples() {
        assert_eq!(fmt_sig12(0.0), "0.00000000000");
        assert_eq!(fmt_sig12(-0.0), "0.00000000000");
        assert_eq!(fmt_sig12(1.0), "1.00000000000");
        assert_eq!(fmt_sig12(0.5), "0.500000000000");
        assert_eq!(fmt_sig12(-2.0), "-2.00000000000");
        assert_eq!(fmt_sig12(27.39802), "27.3980200000");
        assert_eq!(fmt_sig12(1e-3), "0.00100000000000");
    }

    #[test]
    fn fmt_sig12_is_reparse_stable() {
        for &x in &[
            1.0,
            -7.0 / 3.0,
            0.1,
            4.54852297331,
            75.9749087486,
            1e-7,
            123456.789,
            9.99999999999951,
        ] {
            let s1 = fmt_sig12(x);
            let y: f64 = s1.parse().unwrap();
            let s2 = fmt_sig12(y);
            assert_eq!(s1, s2, "unstable formatting for {x}");
        }
    }

    #[test]
    fn document_round_trip_is_byte_identical() {
        for scene in all_scenes() {
            let doc = SceneDocument::from_scene(&scene);
            let json = doc.to_json();
            let parsed = SceneDocument::from_json(&json).expect("parse back");
            assert_eq!(parsed.to_json(), json, "round trip for {}", scene.label);
        }
    }

    #[test]
    fn document_rebuilds_scene() {
        let scene = tetra_around_octahedron();
        let doc = SceneDocument::from_scene(&scene);
        let rebuilt = doc.to_scene().expect("valid scene");
        assert_eq!(rebuilt.label, scene.label);
        assert!(
            (rebuilt.enclosure.volume().unwrap() - scene.enclosure.volume().unwrap()).abs()
                < 1e-10
        );
        assert_eq!(rebuilt.trace.len(), scene.trace.len());
    }

    #[test]
    fn unknown_trace_keys_are_rejected() {
        let scene = tetra_around_octahedron();
        let mut doc = SceneDocument::from_scene(&scene);
        doc.trace.insert("bogus".into(), 1.0);
        assert!(doc.to_scene().is_err());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = SceneDocument::from_json("{\"schemaVersion\": }").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "diagnostic lacks position: {msg}");
    }

    #[test]
    fn optimizer_block_round_trips() {
        let scene = tetra_around_octahedron();
        let mut doc = SceneDocument::from_scene(&scene);
        let result = crate::optimizer::min_enclosing_regular_tetra(
            scene.solid.vertices(),
            &crate::optimizer::SearchConfig {
                coarse_samples: 500,
                ..Default::default()
            },
        )
        .unwrap();
        doc.optimizer_result = Some(OptimizerDocument::from_result(&result));
        let json = doc.to_json();
        let parsed = SceneDocument::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        assert!(parsed.optimizer_result.is_some());
    }
}
