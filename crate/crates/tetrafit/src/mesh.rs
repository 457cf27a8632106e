//! Plain text mesh export/import: `v x y z` vertex lines and `f i j k ...`
//! face lines with 1-based indices, the common denominator of mesh viewers.

use crate::error::GeomError;
use crate::polyhedron::ConvexPolyhedron;
use crate::scenedoc::fmt_sig12;
use crate::vec::Vector3;

type Polyhedron = ConvexPolyhedron<f64>;

/// Renders vertex lines then face lines, 12 significant digits.
pub fn write_mesh(p: &Polyhedron) -> String {
    let mut out = String::new();
    for v in p.vertices() {
        out.push_str(&format!(
            "v {} {} {}\n",
            fmt_sig12(v.x),
            fmt_sig12(v.y),
            fmt_sig12(v.z)
        ));
    }
    for face in p.faces() {
        out.push('f');
        for &i in face {
            out.push_str(&format!(" {}", i + 1));
        }
        out.push('\n');
    }
    out
}

/// Parses the `v`/`f` format back into a validated polyhedron. Blank lines
/// and `#` comments are ignored.
pub fn read_mesh(text: &str) -> Result<Polyhedron, GeomError> {
    let mut vertices: Vec<Vector3<f64>> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let coords: Vec<f64> = parts
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|e| {
                        GeomError::invalid_input(format!("line {}: bad vertex: {e}", lineno + 1))
                    })?;
                if coords.len() != 3 {
                    return Err(GeomError::invalid_input(format!(
                        "line {}: vertex needs 3 coordinates",
                        lineno + 1
                    )));
                }
                vertices.push(Vector3::new(coords[0], coords[1], coords[2]));
            }
            Some("f") => {
                let idx: Vec<usize> = parts
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|e| {
                        GeomError::invalid_input(format!("line {}: bad face: {e}", lineno + 1))
                    })?;
                if idx.iter().any(|&i| i == 0) {
                    return Err(GeomError::invalid_input(format!(
                        "line {}: face indices are 1-based",
                        lineno + 1
                    )));
                }
                faces.push(idx.iter().map(|&i| i - 1).collect());
            }
            Some(other) => {
                return Err(GeomError::invalid_input(format!(
                    "line {}: unsupported record '{other}'",
                    lineno + 1
                )));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    Polyhedron::new(vertices, faces)
}
