//! Minimal adjoint orbits of a compact simple Lie group.
//!
//! A minimal orbit `F_α = G/H_α·T¹` corresponds to a simple root `α`; its
//! stabilizer's semisimple part `H_α` is read off the Dynkin diagram by
//! deleting the vertex `α`.  The total space `M_α = G/H_α` of the canonical
//! `T¹`-bundle over `F_α` is the candidate Lorentzian manifold.  The isotropy
//! module splits by root level,
//! `p = p_1 + ⋯ + p_m`, with `m = m(α)` the Dynkin mark, and the generic
//! invariant Lorentzian metric `g = −λθ² + π*g_F` depends on `m(α) + 1`
//! positive parameters — except for the short list of sphere bundles of
//! compact rank-one symmetric spaces, where the count is not asserted.

use crate::rootsys::{
    automorphism_node_classes, build_root_system, delete_vertex, Family, RootError, RootSystem,
    SemisimpleType, SimpleType,
};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which sphere-bundle exception a compact record falls under, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SphereBundle {
    /// `S(S^n) = SO_{n+1}/SO_{n-1}`, the unit tangent bundle of the sphere.
    Sphere { n: usize },
    /// `S(CP^n) = SU_{n+1}/SU_n`.
    ComplexProjective { n: usize },
    /// `S(HP^m) = Sp_{m+1}/Sp_1 × Sp_{m-1}`.  The reference list spells the
    /// second index `m−2`; both spellings are matched and the discrepancy is
    /// reported by the verification harness.
    QuaternionProjective { m: usize },
    /// `Spin_7/SU_3`, the 13-dimensional `S(S^7)` total space.  The source
    /// line conflates it with `S^7 × S^6`; it is matched as a single pattern.
    SpinSevenOverSuThree,
    /// `S(OP^2) = F_4/Spin_7`.
    OctonionPlane,
}

impl fmt::Display for SphereBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereBundle::Sphere { n } => write!(f, "S(S^{n})"),
            SphereBundle::ComplexProjective { n } => write!(f, "S(CP^{n})"),
            SphereBundle::QuaternionProjective { m } => write!(f, "S(HP^{m})"),
            SphereBundle::SpinSevenOverSuThree => write!(f, "Spin_7/SU_3"),
            SphereBundle::OctonionPlane => write!(f, "S(OP^2)"),
        }
    }
}

/// A compact pair `(G, H_α)` with the dimension data of `M_α = G/H_α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalOrbitRecord {
    pub group: SimpleType,
    /// 1-based Bourbaki index of the deleted vertex.
    pub deleted_node: usize,
    pub stabilizer: SemisimpleType,
    /// Dynkin mark `m(α)`.
    pub mark: i64,
    /// `dim M_α = dim G − dim H_α`.
    pub dim_m: usize,
    /// `dim F_α = dim M_α − 1`.
    pub dim_f: usize,
    /// Real dimensions of the level submodules `p_1, …, p_m`.
    pub levels: Vec<usize>,
    pub exceptional: Option<SphereBundle>,
}

/// Symbolic description of the invariant-metric parameter family on a
/// homogeneous space: one timelike direction plus scaled Riemannian blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricModel {
    /// Dimension of the timelike block (always 1: the `−λθ²` term).
    pub timelike_dim: usize,
    /// Dimensions of the scaled Riemannian blocks.
    pub riemannian_blocks: Vec<usize>,
    /// Number of positive parameters; `None` when the generic formula is not
    /// asserted (sphere-bundle exceptions).
    pub parameter_count: Option<usize>,
}

/// Real dimensions of the level submodules of the isotropy module of `F_α`:
/// level `k` collects the (2-real-dimensional) root spaces of the positive
/// roots whose coordinate at `node` equals `k`.
pub fn level_grading(rs: &RootSystem, node: usize) -> Result<Vec<usize>, RootError> {
    if node == 0 || node > rs.simple_type.rank {
        return Err(RootError::NodeOutOfRange {
            node,
            rank: rs.simple_type.rank,
        });
    }
    let mark = rs.marks[node - 1];
    let levels = (1..=mark)
        .map(|k| {
            2 * rs
                .positive_roots
                .iter()
                .filter(|r| r[node - 1] == k)
                .count()
        })
        .collect();
    Ok(levels)
}

/// The minimal-orbit record for one vertex of the Dynkin diagram.
pub fn minimal_orbit(group: SimpleType, node: usize) -> Result<MinimalOrbitRecord, RootError> {
    let rs = build_root_system(group);
    let stabilizer = delete_vertex(group, node)?;
    let levels = level_grading(&rs, node)?;
    let dim_m = group.dimension() - stabilizer.dimension();
    Ok(MinimalOrbitRecord {
        group,
        deleted_node: node,
        exceptional: exception_tag(group, node),
        mark: rs.marks[node - 1],
        dim_m,
        dim_f: dim_m - 1,
        levels,
        stabilizer,
    })
}

/// Matches `(G, α)` against the sphere-bundle list of total spaces `M_α`
/// that are unit tangent bundles of compact rank-one symmetric spaces.
fn exception_tag(group: SimpleType, node: usize) -> Option<SphereBundle> {
    let k = group.rank;
    match group.family {
        // SU_{n+1}/SU_n = S(CP^n) for n ≥ 2 (either end vertex).  A1 is
        // excluded: SU_2/{e} is not a rank-one sphere bundle and keeps the
        // generic two-parameter metric family.
        Family::A if k >= 2 && (node == 1 || node == k) => {
            Some(SphereBundle::ComplexProjective { n: k })
        }
        // SO_{2k+1}/SO_{2k-1} = S(S^{2k}).
        Family::B if k >= 2 && node == 1 => Some(SphereBundle::Sphere { n: 2 * k }),
        // Spin_7/SU_3.
        Family::B if k == 3 && node == 3 => Some(SphereBundle::SpinSevenOverSuThree),
        // SO_{2k}/SO_{2k-2} = S(S^{2k-1}).
        Family::D if k >= 3 && node == 1 => Some(SphereBundle::Sphere { n: 2 * k - 1 }),
        // Sp_2/Sp_1, locally SO_5/SO_3 = S(S^4).
        Family::C if k == 2 && node == 2 => Some(SphereBundle::Sphere { n: 4 }),
        // Sp_k/Sp_1 × Sp_{k-2} = S(HP^{k-1}).
        Family::C if k >= 3 && node == 2 => Some(SphereBundle::QuaternionProjective { m: k - 1 }),
        // F4/Spin_7 = S(OP^2).
        Family::F if node == 4 => Some(SphereBundle::OctonionPlane),
        _ => None,
    }
}

/// The invariant-metric parameter family of a compact record: one timelike
/// parameter plus one scale per level, `m(α) + 1` in total; not asserted for
/// the sphere-bundle exceptions.
pub fn metric_model(rec: &MinimalOrbitRecord) -> MetricModel {
    MetricModel {
        timelike_dim: 1,
        riemannian_blocks: rec.levels.clone(),
        parameter_count: if rec.exceptional.is_some() {
            None
        } else {
            Some(rec.mark as usize + 1)
        },
    }
}

/// All minimal-orbit records of a simple compact group, one per vertex orbit
/// of the diagram automorphism group (lowest representative node kept).
pub fn enumerate_compact(group: SimpleType) -> Vec<MinimalOrbitRecord> {
    automorphism_node_classes(group)
        .iter()
        .map(|class| minimal_orbit(group, class[0]).expect("class representative in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> SimpleType {
        SimpleType::parse(s).unwrap()
    }

    #[test]
    fn level_count_equals_mark_and_sum_matches_dimension() {
        for t in SimpleType::all_up_to_rank(8) {
            let rs = build_root_system(t);
            for node in 1..=t.rank {
                let rec = minimal_orbit(t, node).unwrap();
                assert_eq!(rec.levels.len() as i64, rs.marks[node - 1], "{t}/{node}");
                assert_eq!(
                    rec.levels.iter().sum::<usize>(),
                    t.dimension() - rec.stabilizer.dimension() - 1,
                    "{t}/{node}"
                );
                assert!(rec.levels.iter().all(|&l| l > 0), "{t}/{node}");
            }
        }
    }

    #[test]
    fn frozen_level_gradings() {
        let grading = |s: &str, node| {
            level_grading(&build_root_system(st(s)), node).unwrap()
        };
        assert_eq!(grading("A2", 1), vec![4]);
        assert_eq!(grading("A1", 1), vec![2]);
        // G2, short node (mark 3): levels bucket the six positive roots by
        // first coordinate 1, 2, 3.
        assert_eq!(grading("G2", 1), vec![4, 2, 4]);
        assert_eq!(grading("G2", 2), vec![8, 2]);
        // F4, node 1 (mark 2): the contact grading, with a 2-real-dimensional
        // top level spanned by the highest root space.
        assert_eq!(grading("F4", 1), vec![28, 2]);
    }

    #[test]
    fn known_orbit_records() {
        // SO_7 / SO_5: unit tangent bundle of S^6.
        let rec = minimal_orbit(st("B3"), 1).unwrap();
        assert_eq!(rec.stabilizer, SemisimpleType::new(vec![st("B2")]));
        assert_eq!(rec.dim_m, 11);
        assert_eq!(rec.exceptional, Some(SphereBundle::Sphere { n: 6 }));

        // SU_4 / SU_3: sphere bundle of CP^3.
        let rec = minimal_orbit(st("A3"), 1).unwrap();
        assert_eq!(rec.stabilizer, SemisimpleType::new(vec![st("A2")]));
        assert_eq!(rec.dim_m, 7);
        assert_eq!(rec.exceptional, Some(SphereBundle::ComplexProjective { n: 3 }));

        // F4 / Sp_3: generic, mark 2, three metric parameters.
        let rec = minimal_orbit(st("F4"), 1).unwrap();
        assert_eq!(rec.stabilizer, SemisimpleType::new(vec![st("C3")]));
        assert_eq!(rec.dim_m, 31);
        assert_eq!(rec.mark, 2);
        assert_eq!(rec.exceptional, None);
        assert_eq!(metric_model(&rec).parameter_count, Some(3));

        // F4 / Spin_7 is the octonion-plane sphere bundle.
        let rec = minimal_orbit(st("F4"), 4).unwrap();
        assert_eq!(rec.stabilizer, SemisimpleType::new(vec![st("B3")]));
        assert_eq!(rec.exceptional, Some(SphereBundle::OctonionPlane));
        assert_eq!(metric_model(&rec).parameter_count, None);

        // SU_2/{e}: not exceptional, two parameters.
        let rec = minimal_orbit(st("A1"), 1).unwrap();
        assert!(rec.stabilizer.is_trivial());
        assert_eq!(rec.exceptional, None);
        assert_eq!(metric_model(&rec).parameter_count, Some(2));
    }

    #[test]
    fn enumerate_g2_and_e6() {
        let g2 = enumerate_compact(st("G2"));
        assert_eq!(g2.len(), 2);
        assert!(g2.iter().all(|r| r.dim_m == 11));
        assert!(g2
            .iter()
            .all(|r| r.stabilizer == SemisimpleType::new(vec![st("A1")])));

        let e6 = enumerate_compact(st("E6"));
        let stabs: Vec<SemisimpleType> = e6.iter().map(|r| r.stabilizer.clone()).collect();
        assert_eq!(e6.len(), 4);
        assert!(stabs.contains(&SemisimpleType::new(vec![st("D5")])));
        assert!(stabs.contains(&SemisimpleType::new(vec![st("A5")])));
        assert!(stabs.contains(&SemisimpleType::new(vec![st("A1"), st("A4")])));
        assert!(stabs.contains(&SemisimpleType::new(vec![st("A1"), st("A2"), st("A2")])));
    }

    #[test]
    fn enumerate_e8_has_eight_records() {
        let e8 = enumerate_compact(st("E8"));
        assert_eq!(e8.len(), 8);
        assert!(e8
            .iter()
            .any(|r| r.stabilizer == SemisimpleType::new(vec![st("A7")])));
    }

    #[test]
    fn quaternionic_exception_indices() {
        let rec = minimal_orbit(st("C3"), 2).unwrap();
        assert_eq!(
            rec.stabilizer,
            SemisimpleType::new(vec![st("A1"), st("C1")])
        );
        assert_eq!(rec.exceptional, Some(SphereBundle::QuaternionProjective { m: 2 }));
        // Sp_2/Sp_1 matches the tangent sphere bundle of S^4 instead.
        let rec = minimal_orbit(st("C2"), 2).unwrap();
        assert_eq!(rec.exceptional, Some(SphereBundle::Sphere { n: 4 }));
    }
}
