//! The reference-value regression table: every headline quantity of the
//! constructions, computed fresh and compared against its quoted decimal at
//! a per-row tolerance.

use crate::constructions::{
    dodeca_dual_tetra, icosa_golden_tetra, icosa_insphere_tetra, right_corner_cube,
    standard_position_cube, tetra_around_octahedron, TraceKey,
};
use crate::constructions::dodeca_rotated_tetra;
use crate::mintriangle::min_triangle_about_unit_square;
use crate::optimizer::{min_enclosing_regular_tetra, SearchConfig};
use crate::platonic::{metrics, unit_solid, SolidKind};
use crate::regtetra::tetra_volume;
use crate::scenedoc::fmt_sig12;

/// One comparison between a quoted reference decimal and the freshly
/// computed value.
#[derive(Clone, Debug)]
pub struct VerificationRow {
    pub name: &'static str,
    pub reference: f64,
    pub computed: f64,
    pub relative_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn row(name: &'static str, reference: f64, computed: f64, tolerance: f64) -> VerificationRow {
    let relative_error = ((computed - reference) / reference).abs();
    VerificationRow {
        name,
        reference,
        computed,
        relative_error,
        tolerance,
        pass: relative_error <= tolerance,
    }
}

/// Quoted decimals carry 4-5 digits, so closed-form rows use 1e-3 relative.
const CLOSED_FORM_TOL: f64 = 1e-3;

/// Rows that need no optimizer run; a fraction of a second altogether.
pub fn closed_form_rows() -> Vec<VerificationRow> {
    let t = CLOSED_FORM_TOL;
    let right = right_corner_cube();
    let standard = standard_position_cube();
    let octa = tetra_around_octahedron();
    let insphere = icosa_insphere_tetra();
    let golden = icosa_golden_tetra();
    let dual = dodeca_dual_tetra();
    let rotated = dodeca_rotated_tetra();
    let volume = |s: &crate::constructions::Scene| s.enclosure.volume().expect("valid scene");
    let trace = |s: &crate::constructions::Scene, k: TraceKey| s.trace.get(k).expect("traced");

    vec![
        row("right-corner-volume", 4.5, volume(&right), t),
        row(
            "tetra-edge3-volume",
            3.182,
            tetra_volume(3.0).expect("positive edge"),
            t,
        ),
        row(
            "cube-min-tetra-edge",
            3.37945,
            standard.enclosure_edge.expect("regular"),
            t,
        ),
        row("cube-min-tetra-volume", 4.5485, volume(&standard), t),
        row("octa-tetra-volume", 0.94281, volume(&octa), t),
        row(
            "octa-volume",
            0.47140,
            octa.solid.volume().expect("valid solid"),
            t,
        ),
        row(
            "icosa-circumradius",
            0.95106,
            metrics::<f64>(SolidKind::Icosahedron).circumradius,
            t,
        ),
        row(
            "icosa-insphere-tetra-edge",
            4.65921,
            insphere.enclosure_edge.expect("regular"),
            t,
        ),
        row("icosa-insphere-tetra-volume", 11.91982, volume(&insphere), t),
        row(
            "icosa-golden-octa-edge",
            3.7025,
            trace(&golden, TraceKey::OctaEdge),
            t,
        ),
        row(
            "icosa-golden-tetra-edge",
            7.4049,
            trace(&golden, TraceKey::GoldenTetraEdge),
            t,
        ),
        row("icosa-golden-volume", 5.9816, volume(&golden), t),
        row(
            "dodeca-icosa-edge",
            1.8541,
            trace(&dual, TraceKey::IcosaEdge),
            t,
        ),
        row(
            "dodeca-icosa-circumradius",
            1.76336,
            trace(&dual, TraceKey::Inradius),
            t,
        ),
        row(
            "dodeca-tetra-edge",
            8.63864,
            dual.enclosure_edge.expect("regular"),
            t,
        ),
        row("dodeca-dual-volume", 75.9749, volume(&dual), t),
        row(
            "dodeca-volume",
            7.6631,
            unit_solid::<f64>(SolidKind::Dodecahedron)
                .volume()
                .expect("valid solid"),
            t,
        ),
        row(
            "dodeca-rotated-icosa-edge",
            1.7236,
            trace(&rotated, TraceKey::IcosaEdge),
            t,
        ),
        row(
            "square-min-triangle-area",
            2.0,
            min_triangle_about_unit_square::<f64>().area,
            1e-4,
        ),
    ]
}

/// Cross-checks that run the rotation-space minimizer on each solid.
pub fn optimizer_rows(cfg: &SearchConfig) -> Vec<VerificationRow> {
    let optimize = |kind: SolidKind| {
        min_enclosing_regular_tetra(unit_solid::<f64>(kind).vertices(), cfg)
            .expect("nonempty vertex set")
            .volume
    };
    vec![
        row(
            "octa-optimized-volume",
            0.94281,
            optimize(SolidKind::Octahedron),
            1e-3,
        ),
        row(
            "cube-optimized-volume",
            4.5485,
            optimize(SolidKind::Cube),
            1e-2,
        ),
        row(
            "icosa-optimized-volume",
            5.9816,
            optimize(SolidKind::Icosahedron),
            1e-2,
        ),
        // Reported optimum for the dodecahedron; pass/fail is stated either
        // way rather than hidden.
        row(
            "dodeca-rotated-reference",
            27.39802,
            optimize(SolidKind::Dodecahedron),
            2e-2,
        ),
    ]
}

/// The full table: closed-form rows plus optimizer cross-checks.
pub fn all_rows(cfg: &SearchConfig) -> Vec<VerificationRow> {
    let mut rows = closed_form_rows();
    rows.extend(optimizer_rows(cfg));
    rows
}

pub fn all_pass(rows: &[VerificationRow]) -> bool {
    rows.iter().all(|r| r.pass)
}

pub fn render_table(rows: &[VerificationRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<28} {:>14} {:>18} {:>12} {:>9} {:>7}\n",
        "quantity", "reference", "computed", "rel-error", "tol", "status"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<28} {:>14} {:>18} {:>12} {:>9} {:>7}\n",
            r.name,
            format!("{:.6}", r.reference),
            format!("{:.10}", r.computed),
            format!("{:.3e}", r.relative_error),
            format!("{:.0e}", r.tolerance),
            if r.pass { "pass" } else { "FAIL" }
        ));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    out.push_str(&format!("{} of {} rows pass\n", passed, rows.len()));
    out
}

pub fn render_json(rows: &[VerificationRow]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!(
            "  {{\"quantity\": {}, \"reference\": {}, \"computed\": {}, \
             \"relativeError\": {}, \"tolerance\": {}, \"status\": \"{}\"}}{}\n",
            serde_json::to_string(r.name).expect("strings serialize"),
            fmt_sig12(r.reference),
            fmt_sig12(r.computed),
            fmt_sig12(r.relative_error),
            fmt_sig12(r.tolerance),
            if r.pass { "pass" } else { "fail" },
            if i + 1 == rows.len() { "" } else { "," }
        ));
    }
    out.push_str("]\n");
    out
}

pub fn render_csv(rows: &[VerificationRow]) -> String {
    let mut out = String::from("quantity,reference,computed,relativeError,tolerance,status\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.name,
            fmt_sig12(r.reference),
            fmt_sig12(r.computed),
            fmt_sig12(r.relative_error),
            fmt_sig12(r.tolerance),
            if r.pass { "pass" } else { "fail" }
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_rows_all_pass() {
        let rows = closed_form_rows();
        assert_eq!(rows.len(), 19);
        for r in &rows {
            assert!(
                r.pass,
                "{}: reference {} computed {} rel {}",
                r.name, r.reference, r.computed, r.relative_error
            );
        }
    }

    #[test]
    fn renders_are_deterministic() {
        let rows = closed_form_rows();
        assert_eq!(render_table(&rows), render_table(&rows));
        assert!(render_json(&rows).contains("\"status\": \"pass\""));
        let csv = render_csv(&rows);
        assert_eq!(csv.lines().count(), rows.len() + 1);
    }
}
