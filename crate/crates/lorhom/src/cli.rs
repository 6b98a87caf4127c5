//! Command-line front end.
//!
//! Every operation of the library is reachable as a subcommand for batch
//! use and CI.  Output is fully determined by the argument vector: tables
//! by default, schema-stable JSON with `--format json`.  Exit codes:
//! `0` success, `1` when a verification report is not clean, `2` on
//! invalid input.

use crate::catalog::{self, TableId};
use crate::linalg::rat_str;
use crate::matrixlie::{build_case, lorentz_inertia, CaseData, CaseId};
use crate::noncompact;
use crate::orbits;
use crate::rootsys::{build_root_system, SimpleType};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "lorhom",
    version,
    about = "Classification engine for minimal homogeneous Lorentzian spaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Positive roots, highest root and marks of a simple type.
    Roots { group: String },
    /// Dynkin marks of a simple type.
    Marks { group: String },
    /// Minimal-orbit records of a compact simple group, one per vertex.
    Orbits {
        group: String,
        /// Restrict to one (1-based) vertex.
        #[arg(long)]
        node: Option<usize>,
    },
    /// Minimal-orbit records up to diagram automorphism.
    EnumerateCompact { group: String },
    /// Class II records of simple noncompact groups.
    EnumerateClass2 {
        #[arg(long, default_value_t = 11)]
        max_dim: usize,
        /// Also print the records absent from the reference table.
        #[arg(long)]
        addenda: bool,
    },
    /// Compact dual of a class II record, looked up by group name.
    Dual { group: String },
    /// Exact subspace data of one matrix-realized homogeneous space.
    Case {
        #[command(subcommand)]
        which: CaseCmd,
    },
    /// Re-derive golden tables and report differences.
    Verify {
        /// Table id: compact, so-diagonal, table1, exceptions.
        table: Option<String>,
        /// Verify every table.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CaseCmd {
    /// sl(p+q,R) / so(p) + so(q).
    Sl { p: usize, q: usize },
    /// so(1,n) / so(n-1).
    Real { n: usize },
    /// su(1,n) / u(n-1).
    Complex { n: usize },
    /// sp(1,2) / sp(1) + sp(1).
    Quaternion,
    /// so(p,q) with a diagonal vector of support r, last `minus` signs
    /// flipped.
    SoDiagonal {
        p: usize,
        q: usize,
        r: usize,
        #[arg(default_value_t = 0)]
        minus: usize,
    },
}

#[derive(Serialize)]
struct RootsOutput {
    group: String,
    rank: usize,
    dimension: usize,
    positive_root_count: usize,
    highest_root: Vec<i64>,
    marks: Vec<i64>,
}

#[derive(Serialize)]
struct CaseOutput {
    label: String,
    dim_g: usize,
    dim_h: usize,
    dim_m: usize,
    dim_n: Option<usize>,
    dim_p: Option<usize>,
    dim_m_fixed: usize,
    dim_n_fixed: Option<usize>,
    dim_p_fixed: Option<usize>,
    distinguished: Vec<String>,
    /// Eigenvalues of the central action on `p'` as `(λ, complex mult)`,
    /// meaning `ad z` acts by `λ·i`; rationals rendered `p/q`.
    spectrum_of_z: Option<Vec<(String, usize)>>,
    lorentz_inertia: (usize, usize, usize),
    notes: Vec<String>,
}

fn parse_group(s: &str) -> Result<SimpleType, String> {
    SimpleType::parse(s).map_err(|e| e.to_string())
}

fn case_output(data: &CaseData) -> Result<CaseOutput, String> {
    let spectrum = if data.p_prime.is_some() {
        let spec = data
            .spectrum_on_p_prime("z")
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(l, m)| (rat_str(&l), m))
            .collect();
        Some(spec)
    } else {
        None
    };
    let inertia = lorentz_inertia(data).map_err(|e| e.to_string())?;
    Ok(CaseOutput {
        label: data.id.label(),
        dim_g: data.algebra.dim(),
        dim_h: data.h.dim(),
        dim_m: data.m.dim(),
        dim_n: data.n_part.as_ref().map(|s| s.dim()),
        dim_p: data.p_part.as_ref().map(|s| s.dim()),
        dim_m_fixed: data.m_fixed.dim(),
        dim_n_fixed: data.n_fixed.as_ref().map(|s| s.dim()),
        dim_p_fixed: data.p_fixed.as_ref().map(|s| s.dim()),
        distinguished: data.distinguished.iter().map(|(n, _)| n.clone()).collect(),
        spectrum_of_z: spectrum,
        lorentz_inertia: inertia,
        notes: data.notes.clone(),
    })
}

fn case_table(out: &CaseOutput) -> String {
    let mut s = String::new();
    s.push_str(&format!("case: {}\n", out.label));
    s.push_str(&format!("dim g: {}\n", out.dim_g));
    s.push_str(&format!("dim h: {}\n", out.dim_h));
    s.push_str(&format!("dim m: {}\n", out.dim_m));
    if let (Some(n), Some(p)) = (out.dim_n, out.dim_p) {
        s.push_str(&format!("dim n: {n}\ndim p: {p}\n"));
    }
    s.push_str(&format!("dim m^H: {}\n", out.dim_m_fixed));
    if let (Some(n), Some(p)) = (out.dim_n_fixed, out.dim_p_fixed) {
        s.push_str(&format!("dim n^H: {n}\ndim p^H: {p}\n"));
    }
    if !out.distinguished.is_empty() {
        s.push_str(&format!("vectors: {}\n", out.distinguished.join(", ")));
    }
    if let Some(spec) = &out.spectrum_of_z {
        let parts: Vec<String> = spec
            .iter()
            .map(|(l, m)| format!("{l}i (complex mult {m})"))
            .collect();
        s.push_str(&format!("spectrum of ad z on p': {}\n", parts.join(", ")));
    }
    let (neg, zero, pos) = out.lorentz_inertia;
    s.push_str(&format!("metric signature on m: ({neg}, {zero}, {pos})\n"));
    for n in &out.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s
}

fn run_cmd(cli: Cli) -> Result<(String, i32), String> {
    let json = cli.format == Format::Json;
    match cli.cmd {
        Cmd::Roots { group } => {
            let t = parse_group(&group)?;
            let rs = build_root_system(t);
            let out = RootsOutput {
                group: t.compact_name(),
                rank: t.rank,
                dimension: t.dimension(),
                positive_root_count: rs.positive_roots.len(),
                highest_root: rs.highest_root.clone(),
                marks: rs.marks.clone(),
            };
            if json {
                Ok((catalog::to_json(&out), 0))
            } else {
                let marks: Vec<String> = out.marks.iter().map(|m| m.to_string()).collect();
                let high: Vec<String> =
                    out.highest_root.iter().map(|m| m.to_string()).collect();
                Ok((
                    format!(
                        "group: {}\nrank: {}\ndimension: {}\npositive roots: {}\n\
                         highest root: {}\nmarks: {}\n",
                        out.group,
                        out.rank,
                        out.dimension,
                        out.positive_root_count,
                        high.join(" "),
                        marks.join(" ")
                    ),
                    0,
                ))
            }
        }
        Cmd::Marks { group } => {
            let t = parse_group(&group)?;
            let rs = build_root_system(t);
            if json {
                #[derive(Serialize)]
                struct MarksOutput {
                    group: String,
                    marks: Vec<i64>,
                }
                Ok((
                    catalog::to_json(&MarksOutput {
                        group: t.compact_name(),
                        marks: rs.marks.clone(),
                    }),
                    0,
                ))
            } else {
                let marks: Vec<String> = rs.marks.iter().map(|m| m.to_string()).collect();
                Ok((format!("{}\n", marks.join(" ")), 0))
            }
        }
        Cmd::Orbits { group, node } => {
            let t = parse_group(&group)?;
            let records: Vec<_> = match node {
                Some(n) => vec![orbits::minimal_orbit(t, n).map_err(|e| e.to_string())?],
                None => (1..=t.rank)
                    .map(|n| orbits::minimal_orbit(t, n).expect("node in range"))
                    .collect(),
            };
            if json {
                Ok((catalog::to_json(&records), 0))
            } else {
                Ok((catalog::orbit_table(&records), 0))
            }
        }
        Cmd::EnumerateCompact { group } => {
            let t = parse_group(&group)?;
            let records = orbits::enumerate_compact(t);
            if json {
                Ok((catalog::to_json(&records), 0))
            } else {
                Ok((catalog::orbit_table(&records), 0))
            }
        }
        Cmd::EnumerateClass2 { max_dim, addenda } => {
            let mut records = noncompact::enumerate_class_ii(max_dim);
            if addenda {
                records.extend(noncompact::class_ii_addenda(max_dim));
            }
            if json {
                Ok((catalog::to_json(&records), 0))
            } else {
                Ok((catalog::class_ii_table(&records), 0))
            }
        }
        Cmd::Dual { group } => {
            let records = [
                noncompact::enumerate_class_ii(11),
                noncompact::class_ii_addenda(11),
            ]
            .concat();
            let rec = records
                .iter()
                .find(|r| r.g_name == group || catalog::space_display(r) == group)
                .ok_or_else(|| format!("no class II record for {group}"))?;
            let dual = noncompact::duality(rec).map_err(|e| e.to_string())?;
            if json {
                Ok((catalog::to_json(&dual), 0))
            } else {
                Ok((
                    format!(
                        "{} -> {}  (H = {}, d = {})\n",
                        catalog::space_display(rec),
                        catalog::space_display(&dual),
                        dual.h_name,
                        dual.dim_d
                    ),
                    0,
                ))
            }
        }
        Cmd::Case { which } => {
            let id = match which {
                CaseCmd::Sl { p, q } => CaseId::SlQuotient { p, q },
                CaseCmd::Real { n } => CaseId::RealHyperbolic { n },
                CaseCmd::Complex { n } => CaseId::ComplexHyperbolic { n },
                CaseCmd::Quaternion => CaseId::QuaternionHyperbolic,
                CaseCmd::SoDiagonal { p, q, r, minus } => {
                    CaseId::SoTwistedDiagonal { p, q, r, minus }
                }
            };
            let data = build_case(id).map_err(|e| e.to_string())?;
            let out = case_output(&data)?;
            if json {
                Ok((catalog::to_json(&out), 0))
            } else {
                Ok((case_table(&out), 0))
            }
        }
        Cmd::Verify { table, all } => {
            let reports = if all || table.is_none() {
                catalog::verify_all()
            } else {
                vec![catalog::verify(
                    TableId::parse(table.as_deref().unwrap()).map_err(|e| e.to_string())?,
                )]
            };
            let clean = reports.iter().all(|r| r.is_clean());
            let text = if json {
                catalog::to_json(&reports)
            } else {
                reports
                    .iter()
                    .map(catalog::report_text)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok((text, if clean { 0 } else { 1 }))
        }
    }
}

/// Parses `argv` and runs; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version go to stdout with code 0; real parse errors
            // exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().expect("writing clap output");
            return code;
        }
    };
    match run_cmd(cli) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(args: &[&str]) -> (String, i32) {
        let mut argv = vec!["lorhom"];
        argv.extend(args);
        let cli = Cli::try_parse_from(argv).expect("argv parses");
        run_cmd(cli).expect("command succeeds")
    }

    #[test]
    fn marks_f4() {
        let (out, code) = capture(&["marks", "F4"]);
        assert_eq!(out, "2 3 4 2\n");
        assert_eq!(code, 0);
    }

    #[test]
    fn enumerate_class2_table_rows() {
        let (out, code) = capture(&["enumerate-class2", "--max-dim", "11"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 11);
    }

    #[test]
    fn verify_all_exits_clean() {
        let (out, code) = capture(&["verify", "--all"]);
        assert_eq!(code, 0);
        assert!(out.contains("known: E_8: SU_8"));
    }

    #[test]
    fn unknown_group_is_invalid_input() {
        let cli = Cli::try_parse_from(["lorhom", "marks", "SO4"]).unwrap();
        assert!(run_cmd(cli).is_err());
    }

    #[test]
    fn case_complex_spectrum() {
        let (out, _) = capture(&["case", "complex", "3"]);
        assert!(out.contains("spectrum of ad z on p': -2i (complex mult 2)"));
    }

    #[test]
    fn json_output_parses() {
        let (out, _) = capture(&["enumerate-class2", "--format", "json"]);
        let parsed: Vec<crate::noncompact::HomogeneousSpaceRecord> =
            serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.len(), 9);
    }
}
