//! Golden reference tables, the verification harness, and serialization.
//!
//! Four read-only tables transcribe the reference lists this engine
//! re-derives: the compact stabilizer list per simple group
//! ([`TableId::CompactList`]), the low-dimensional `SO(p,q)` diagonal
//! stabilizers ([`TableId::SoDiagonalList`]), the class II master table
//! ([`TableId::TableI`]) and the sphere-bundle exception list
//! ([`TableId::ExceptionList`]).  [`verify`] recomputes each table from
//! the live modules and reports exact multiset differences; transcription
//! corrections applied to the source rows are kept in an explicit
//! known-discrepancy list so a clean run never hides them.

use crate::noncompact::{self, HomogeneousSpaceRecord};
use crate::orbits::{self, MinimalOrbitRecord, SphereBundle};
use crate::rootsys::{Family, SemisimpleType, SimpleType};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown table id: {0}")]
    UnknownTable(String),
}

/// Identifier of a golden table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// Stabilizers `H_α` of the minimal orbits of every compact simple
    /// group in scope.
    CompactList,
    /// Twisted-diagonal `SO(p,q)` stabilizers in low dimension.
    SoDiagonalList,
    /// The nine class II manifolds of simple noncompact groups, `d ≤ 11`.
    TableI,
    /// Sphere bundles of compact rank-one symmetric spaces.
    ExceptionList,
}

impl TableId {
    pub fn all() -> [TableId; 4] {
        [
            TableId::CompactList,
            TableId::SoDiagonalList,
            TableId::TableI,
            TableId::ExceptionList,
        ]
    }

    pub fn id(&self) -> &'static str {
        match self {
            TableId::CompactList => "compact",
            TableId::SoDiagonalList => "so-diagonal",
            TableId::TableI => "table1",
            TableId::ExceptionList => "exceptions",
        }
    }

    pub fn parse(s: &str) -> Result<TableId, CatalogError> {
        TableId::all()
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| CatalogError::UnknownTable(s.to_string()))
    }
}

/// Outcome of re-deriving one golden table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub table_id: TableId,
    pub matched: usize,
    /// Rows produced by the engine with no golden counterpart.
    pub computed_only: Vec<String>,
    /// Golden rows the engine did not reproduce.
    pub expected_only: Vec<String>,
    /// Annotated discrepancies that are understood and expected.
    pub known_discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Clean iff every difference row is covered by a known annotation.
    pub fn is_clean(&self) -> bool {
        self.computed_only
            .iter()
            .chain(self.expected_only.iter())
            .all(|row| self.known_discrepancies.iter().any(|k| k.contains(row.as_str())))
    }
}

fn su(p: usize) -> Option<SimpleType> {
    (p >= 2).then(|| SimpleType::new(Family::A, p - 1).unwrap())
}

fn so(q: usize) -> Option<SimpleType> {
    match q {
        0..=2 => None,
        q if q % 2 == 1 => Some(SimpleType::new(Family::B, (q - 1) / 2).unwrap()),
        q => Some(SimpleType::new(Family::D, q / 2).unwrap()),
    }
}

fn sp(m: usize) -> Option<SimpleType> {
    (m >= 1).then(|| SimpleType::new(Family::C, m).unwrap())
}

fn name_of(factors: Vec<Option<SimpleType>>) -> String {
    SemisimpleType::new(factors.into_iter().flatten().collect()).compact_name()
}

fn exceptional_names(tail: &[(Family, usize)]) -> Vec<String> {
    tail.iter()
        .map(|&(f, r)| SimpleType::new(f, r).unwrap().compact_name())
        .collect()
}

/// Golden stabilizer multiset for one compact simple group, with
/// transcription notes.
fn expected_stabilizers(group: SimpleType) -> (Vec<String>, Vec<String>) {
    use Family::*;
    let k = group.rank;
    let mut notes = Vec::new();
    let rows = match group.family {
        A => {
            // G = SU_n: H = SU_p × SU_q, p + q = n, one row per unordered
            // split.
            let n = k + 1;
            (1..=n / 2).map(|p| name_of(vec![su(p), su(n - p)])).collect()
        }
        B => {
            // G = SO_{2k+1}: H = SU_p × SO_q, 2p + q = n.
            let n = 2 * k + 1;
            (1..=k).map(|p| name_of(vec![su(p), so(n - 2 * p)])).collect()
        }
        D => {
            // G = SO_{2k}: H = SU_p × SO_q.  The source range p ≤ [n/2]
            // includes q = 2, which leaves a non-semisimple SO_2 factor and
            // no corresponding vertex; that row is dropped here.
            let n = 2 * k;
            notes.push(format!(
                "SO({n}): the q = 2 row of the source range has no semisimple \
                 realization and is omitted"
            ));
            let mut rows: Vec<String> = (1..=k)
                .filter(|&p| p != k - 1)
                .map(|p| name_of(vec![su(p), so(n - 2 * p)]))
                .collect();
            if k == 4 {
                // Triality identifies the p = 1 (SO_6 ≅ SU_4) and p = 4
                // rows; keep one.
                rows.retain(|r| r != "SU_4");
                rows.push("SU_4".to_string());
                rows.dedup();
                let before = (1..=k).filter(|&p| p != k - 1).count();
                if rows.len() < before {
                    notes.push(
                        "SO(8): the SO_6 and SU_4 rows coincide under triality; \
                         one representative kept"
                            .to_string(),
                    );
                }
            }
            rows
        }
        C => {
            // G = Sp_n: the source spells the row Sp_p × Sp_q, which has the
            // wrong rank for every interior vertex; the stabilizers are
            // SU_j × Sp_{n-j} (vertex j), transcribed in corrected form.
            notes.push(format!(
                "Sp({k}): source row 'Sp_p x Sp_q' corrected to SU_j x Sp_(n-j)"
            ));
            (1..=k).map(|j| name_of(vec![su(j), sp(k - j)])).collect()
        }
        G => exceptional_names(&[(A, 1), (A, 1)]),
        F => vec![
            name_of(vec![sp(3)]),
            name_of(vec![su(3), su(2)]),
            name_of(vec![su(2), su(3)]),
            SimpleType::new(B, 3).unwrap().compact_name(),
        ],
        E if k == 6 => vec![
            SimpleType::new(D, 5).unwrap().compact_name(),
            name_of(vec![su(2), su(5)]),
            name_of(vec![su(3), su(3), su(2)]),
            name_of(vec![su(6)]),
        ],
        E if k == 7 => vec![
            SimpleType::new(E, 6).unwrap().compact_name(),
            name_of(vec![su(2), Some(SimpleType::new(D, 5).unwrap())]),
            name_of(vec![su(3), su(5)]),
            name_of(vec![su(4), su(3), su(2)]),
            name_of(vec![su(6), su(2)]),
            SimpleType::new(D, 6).unwrap().compact_name(),
            name_of(vec![su(7)]),
        ],
        E => vec![
            SimpleType::new(E, 7).unwrap().compact_name(),
            name_of(vec![su(2), Some(SimpleType::new(E, 6).unwrap())]),
            name_of(vec![su(3), Some(SimpleType::new(D, 5).unwrap())]),
            name_of(vec![su(4), su(5)]),
            name_of(vec![su(5), su(3), su(2)]),
            name_of(vec![su(7), su(2)]),
            SimpleType::new(D, 7).unwrap().compact_name(),
        ],
    };
    (rows, notes)
}

/// The compact groups covered by the golden list: `SU_n` (n ≤ 8), `SO_n`
/// (5 ≤ n ≤ 16), `Sp_n` (n ≤ 8) and the five exceptional groups.
pub fn compact_scope() -> Vec<SimpleType> {
    let mut scope = Vec::new();
    for n in 2..=8 {
        scope.push(SimpleType::parse(&format!("SU{n}")).unwrap());
    }
    for n in 5..=16 {
        scope.push(SimpleType::parse(&format!("SO{n}")).unwrap());
    }
    for n in 2..=8 {
        scope.push(SimpleType::parse(&format!("Sp{n}")).unwrap());
    }
    for name in ["G2", "F4", "E6", "E7", "E8"] {
        scope.push(SimpleType::parse(name).unwrap());
    }
    scope
}

fn diff_multisets(
    mut computed: Vec<String>,
    mut expected: Vec<String>,
) -> (usize, Vec<String>, Vec<String>) {
    computed.sort();
    expected.sort();
    let mut matched = 0;
    let mut computed_only = Vec::new();
    let mut expected_only = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < computed.len() && j < expected.len() {
        match computed[i].cmp(&expected[j]) {
            std::cmp::Ordering::Equal => {
                matched += 1;
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                computed_only.push(computed[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                expected_only.push(expected[j].clone());
                j += 1;
            }
        }
    }
    computed_only.extend(computed[i..].iter().cloned());
    expected_only.extend(expected[j..].iter().cloned());
    (matched, computed_only, expected_only)
}

fn verify_compact_list() -> VerificationReport {
    let mut computed = Vec::new();
    let mut expected = Vec::new();
    let mut notes = Vec::new();
    for group in compact_scope() {
        let gname = group.compact_name();
        for rec in orbits::enumerate_compact(group) {
            computed.push(format!("{gname}: {}", rec.stabilizer.compact_name()));
        }
        let (rows, row_notes) = expected_stabilizers(group);
        for row in rows {
            expected.push(format!("{gname}: {row}"));
        }
        notes.extend(row_notes);
    }
    let (matched, computed_only, expected_only) = diff_multisets(computed, expected);
    VerificationReport {
        table_id: TableId::CompactList,
        matched,
        computed_only,
        expected_only,
        known_discrepancies: vec![
            "E_8: SU_8 — the vertex adjacent to the affine node yields an A7 \
             stabilizer absent from the source list"
                .to_string(),
        ],
        notes,
    }
}

/// Golden rows of the `SO(p,q)` twisted-diagonal list: the manifold, its
/// stabilizer, the diagonal vector and the dimension.
pub struct SoDiagonalRow {
    pub params: (usize, usize, usize, usize),
    pub h_name: &'static str,
    pub v_display: &'static str,
    pub dim_d: usize,
}

pub fn so_diagonal_golden() -> Vec<SoDiagonalRow> {
    vec![
        SoDiagonalRow {
            params: (2, 2, 2, 0),
            h_name: "SO(2)^diag",
            v_display: "e1(x)f1 + e2(x)f2",
            dim_d: 5,
        },
        SoDiagonalRow {
            params: (2, 2, 2, 1),
            h_name: "{e} x SO(2)",
            v_display: "e1(x)f1 - e2(x)f2",
            dim_d: 5,
        },
        SoDiagonalRow {
            params: (2, 3, 1, 0),
            h_name: "{e} x SO(2)",
            v_display: "e1(x)f1",
            dim_d: 9,
        },
        SoDiagonalRow {
            params: (2, 3, 2, 0),
            h_name: "SO(2)^diag",
            v_display: "e1(x)f1 +/- e2(x)f2",
            dim_d: 9,
        },
    ]
}

fn verify_so_diagonal() -> VerificationReport {
    let mut computed = Vec::new();
    let mut expected = Vec::new();
    let mut notes = Vec::new();
    for row in so_diagonal_golden() {
        let (p, q, r, minus) = row.params;
        expected.push(format!("SO({p},{q})/{} d={}", row.h_name, row.dim_d));
        match noncompact::so_pq_diagonal_stabilizer(p, q, r, minus) {
            Ok(rec) => {
                computed.push(format!("{}/{} d={}", rec.g_name, rec.h_name, rec.dim_d));
            }
            Err(e) => notes.push(format!("construction failed for {:?}: {e}", row.params)),
        }
    }
    let (matched, computed_only, expected_only) = diff_multisets(computed, expected);
    VerificationReport {
        table_id: TableId::SoDiagonalList,
        matched,
        computed_only,
        expected_only,
        known_discrepancies: Vec::new(),
        notes,
    }
}

/// One golden row of the class II master table.
pub struct TableIRow {
    pub d: usize,
    pub space: &'static str,
    pub k: &'static str,
    pub module: &'static str,
    pub m: usize,
    pub fiber: &'static str,
}

pub fn table_i_golden() -> Vec<TableIRow> {
    vec![
        TableIRow { d: 3, space: "SL(2,R)", k: "SO(2)", module: "R^2", m: 2, fiber: "S^1" },
        TableIRow { d: 5, space: "SO(1,3)/SO(2)", k: "SO(3)", module: "R^3", m: 3, fiber: "S^2" },
        TableIRow { d: 7, space: "SL(3,R)/SO(2)", k: "SO(3)", module: "S^2_0(R^3)", m: 5, fiber: "S^2" },
        TableIRow { d: 7, space: "SU(1,2)/U(1)", k: "U(2)", module: "C^2", m: 4, fiber: "S^3" },
        TableIRow { d: 7, space: "SO(1,4)/SO(3)", k: "SO(4)", module: "R^4", m: 4, fiber: "S^3" },
        TableIRow { d: 9, space: "SO(1,5)/SO(4)", k: "SO(5)", module: "R^5", m: 5, fiber: "S^4" },
        TableIRow { d: 11, space: "SU(1,3)/U(2)", k: "U(3)", module: "C^3", m: 6, fiber: "S^5" },
        TableIRow { d: 11, space: "SO(1,6)/SO(5)", k: "SO(6)", module: "R^6", m: 6, fiber: "S^5" },
        TableIRow { d: 11, space: "G2(2)/SU(2)^diag", k: "SU(2) x SU(2)", module: "C^2 (x) C^2", m: 8, fiber: "S^3" },
    ]
}

/// Display form `G/H` of a class II record (bare `G` for trivial `H`).
pub fn space_display(rec: &HomogeneousSpaceRecord) -> String {
    if rec.h_name == "{e}" {
        rec.g_name.clone()
    } else {
        format!("{}/{}", rec.g_name, rec.h_name)
    }
}

fn class_ii_row(rec: &HomogeneousSpaceRecord) -> String {
    format!(
        "{} | {} | {} | {} | {} | {}",
        rec.dim_d,
        space_display(rec),
        rec.base.k_name,
        rec.base.p_module,
        rec.base.dim_s,
        rec.fiber
    )
}

fn verify_table_i() -> VerificationReport {
    let records = noncompact::enumerate_class_ii(11);
    let mut notes = Vec::new();
    let computed: Vec<String> = records.iter().map(class_ii_row).collect();
    let expected: Vec<String> = table_i_golden()
        .iter()
        .map(|r| format!("{} | {} | {} | {} | {} | {}", r.d, r.space, r.k, r.module, r.m, r.fiber))
        .collect();
    for rec in &records {
        // Row-wise dimension identity, recomputed independently.
        if rec.dim_d != rec.base.dim_s + (rec.base.dim_k - rec.dim_h) {
            notes.push(format!(
                "dimension identity fails for {}: d = {}, m + dim(K/H) = {}",
                rec.g_name,
                rec.dim_d,
                rec.base.dim_s + (rec.base.dim_k - rec.dim_h)
            ));
        }
    }
    for rec in noncompact::class_ii_addenda(11) {
        notes.push(format!(
            "addendum: {} (d = {}) is a class II record of a simple group \
             absent from the reference table",
            space_display(&rec),
            rec.dim_d
        ));
    }
    let (matched, computed_only, expected_only) = diff_multisets(computed, expected);
    VerificationReport {
        table_id: TableId::TableI,
        matched,
        computed_only,
        expected_only,
        known_discrepancies: Vec::new(),
        notes,
    }
}

/// Sphere-bundle exception patterns, with citations into the source list.
pub struct ExceptionRow {
    pub pattern: &'static str,
    pub note: Option<&'static str>,
}

pub fn exception_golden() -> Vec<ExceptionRow> {
    vec![
        ExceptionRow { pattern: "S(S^n) = SO(n+1)/SO(n-1)", note: None },
        ExceptionRow { pattern: "Spin_7/SU_3 = S(S^7)", note: None },
        ExceptionRow {
            pattern: "S(S^3) = SU(2) x SU(2)/T^1",
            note: Some("product group; outside the simple-group enumeration"),
        },
        ExceptionRow { pattern: "S(CP^n) = SU(n+1)/SU(n)", note: None },
        ExceptionRow {
            pattern: "S(HP^m) = Sp(m+1)/Sp(1) x Sp(m-1)",
            note: Some("the source spells the last index m-2; the stated group \
                        pair forces m-1"),
        },
        ExceptionRow { pattern: "S(OP^2) = F4/Spin_7", note: None },
    ]
}

/// Exception tags expected for one group of the scope, as display strings.
fn expected_exceptions(group: SimpleType) -> Vec<String> {
    use Family::*;
    let k = group.rank;
    let mut out: Vec<SphereBundle> = Vec::new();
    match group.family {
        A if k >= 2 => out.push(SphereBundle::ComplexProjective { n: k }),
        B => {
            if k >= 2 {
                out.push(SphereBundle::Sphere { n: 2 * k });
            }
            if k == 3 {
                out.push(SphereBundle::SpinSevenOverSuThree);
            }
        }
        D if k >= 3 => out.push(SphereBundle::Sphere { n: 2 * k - 1 }),
        C if k == 2 => out.push(SphereBundle::Sphere { n: 4 }),
        C if k >= 3 => out.push(SphereBundle::QuaternionProjective { m: k - 1 }),
        F => out.push(SphereBundle::OctonionPlane),
        _ => {}
    }
    out.into_iter().map(|b| b.to_string()).collect()
}

fn verify_exceptions() -> VerificationReport {
    let mut computed = Vec::new();
    let mut expected = Vec::new();
    let mut notes = Vec::new();
    for group in compact_scope() {
        let gname = group.compact_name();
        for rec in orbits::enumerate_compact(group) {
            let metric = orbits::metric_model(&rec);
            match &rec.exceptional {
                Some(tag) => computed.push(format!("{gname}: {tag}")),
                None => {
                    // Non-exceptional records must carry the generic
                    // parameter count m(α) + 1.
                    if metric.parameter_count != Some(rec.mark as usize + 1) {
                        notes.push(format!(
                            "parameter count violation at {gname} node {}",
                            rec.deleted_node
                        ));
                    }
                }
            }
        }
        for tag in expected_exceptions(group) {
            expected.push(format!("{gname}: {tag}"));
        }
    }
    for row in exception_golden() {
        if let Some(note) = row.note {
            notes.push(format!("{}: {note}", row.pattern));
        }
    }
    let (matched, computed_only, expected_only) = diff_multisets(computed, expected);
    VerificationReport {
        table_id: TableId::ExceptionList,
        matched,
        computed_only,
        expected_only,
        known_discrepancies: Vec::new(),
        notes,
    }
}

/// Re-derives one golden table and reports the exact differences.
pub fn verify(table_id: TableId) -> VerificationReport {
    match table_id {
        TableId::CompactList => verify_compact_list(),
        TableId::SoDiagonalList => verify_so_diagonal(),
        TableId::TableI => verify_table_i(),
        TableId::ExceptionList => verify_exceptions(),
    }
}

pub fn verify_all() -> Vec<VerificationReport> {
    TableId::all().into_iter().map(verify).collect()
}

/// Pretty JSON with a trailing newline; integers stay integers and exact
/// rationals are written as `"p/q"` strings upstream.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Fixed-width plain-text table.
pub fn render_columns(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate().take(cols) {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    out.push_str(&fmt_row(&header_cells));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

/// Fixed-width rendering of compact orbit records.
pub fn orbit_table(records: &[MinimalOrbitRecord]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let metric = orbits::metric_model(r);
            vec![
                r.group.compact_name(),
                r.deleted_node.to_string(),
                r.stabilizer.compact_name(),
                r.mark.to_string(),
                r.dim_m.to_string(),
                format!(
                    "{:?}",
                    r.levels
                ),
                metric
                    .parameter_count
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".to_string()),
                r.exceptional
                    .as_ref()
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "-".to_string()),
            ]
        })
        .collect();
    render_columns(
        &["G", "node", "H", "mark", "dim M", "levels", "params", "exception"],
        &rows,
    )
}

/// Fixed-width rendering of class II records in the master-table column
/// order `d, M, K, module, m, fiber`.
pub fn class_ii_table(records: &[HomogeneousSpaceRecord]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.dim_d.to_string(),
                space_display(r),
                r.base.k_name.clone(),
                r.base.p_module.clone(),
                r.base.dim_s.to_string(),
                r.fiber.clone(),
            ]
        })
        .collect();
    render_columns(&["d", "M", "K", "module", "m", "K/H"], &rows)
}

/// Plain-text rendering of a verification report.
pub fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("table: {}\n", report.table_id.id()));
    out.push_str(&format!("matched: {}\n", report.matched));
    for row in &report.computed_only {
        out.push_str(&format!("computed only: {row}\n"));
    }
    for row in &report.expected_only {
        out.push_str(&format!("expected only: {row}\n"));
    }
    for row in &report.known_discrepancies {
        out.push_str(&format!("known: {row}\n"));
    }
    for row in &report.notes {
        out.push_str(&format!("note: {row}\n"));
    }
    out.push_str(&format!(
        "status: {}\n",
        if report.is_clean() { "clean" } else { "mismatch" }
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_list_is_clean_with_e8_annotation() {
        let report = verify(TableId::CompactList);
        assert_eq!(report.expected_only, Vec::<String>::new());
        assert_eq!(report.computed_only, vec!["E_8: SU_8".to_string()]);
        assert!(report.is_clean(), "E8 surplus must be annotated");
    }

    #[test]
    fn compact_list_e7_matches_fully() {
        let (rows, _) = expected_stabilizers(SimpleType::parse("E7").unwrap());
        let computed: Vec<String> = orbits::enumerate_compact(SimpleType::parse("E7").unwrap())
            .iter()
            .map(|r| r.stabilizer.compact_name())
            .collect();
        let (matched, conly, eonly) = diff_multisets(computed, rows);
        assert_eq!((matched, conly.len(), eonly.len()), (7, 0, 0));
    }

    #[test]
    fn table_i_is_clean() {
        let report = verify(TableId::TableI);
        assert_eq!(report.matched, 9);
        assert!(report.is_clean());
        // The omitted SO(2,3) examples are surfaced as notes.
        assert!(report.notes.iter().any(|n| n.contains("SO(2,3)")));
    }

    #[test]
    fn so_diagonal_is_clean() {
        let report = verify(TableId::SoDiagonalList);
        assert_eq!(report.matched, 4);
        assert!(report.is_clean());
    }

    #[test]
    fn exceptions_are_clean() {
        let report = verify(TableId::ExceptionList);
        assert!(report.is_clean(), "{:?}", report);
        assert!(report.computed_only.is_empty());
        assert!(report.expected_only.is_empty());
        // No parameter-count violations may be buried in the notes.
        assert!(!report.notes.iter().any(|n| n.contains("violation")));
    }

    #[test]
    fn verify_is_deterministic() {
        for id in TableId::all() {
            assert_eq!(verify(id), verify(id));
        }
    }

    #[test]
    fn json_round_trip() {
        let records = noncompact::enumerate_class_ii(11);
        let json = to_json(&records);
        let parsed: Vec<HomogeneousSpaceRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, records);

        let report = verify(TableId::TableI);
        let parsed: VerificationReport =
            serde_json::from_str(&to_json(&report)).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn table_rendering_shape() {
        let records = noncompact::enumerate_class_ii(11);
        let text = class_ii_table(&records);
        assert_eq!(text.lines().count(), 11); // header + rule + 9 rows
        assert!(text.starts_with("d "));
    }
}
