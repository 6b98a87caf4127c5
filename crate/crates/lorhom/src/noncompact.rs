//! Noncompact semisimple groups: duality with the compact catalog, the
//! class I / class II dichotomy, the explicit families, and the
//! dimension-bounded class II enumeration.
//!
//! A record describes `M^d = G/H` together with the fibration
//! `M → S = G/K` over the noncompact symmetric space: the maximal compact
//! `K`, the splitting `m = n + p` (with `n ⊂ k` and `p` the symmetric
//! part), and the fixed-subspace dimensions `dim n^H`, `dim p^H` that
//! drive the classification — class I iff `n^H ≠ 0`, class II iff
//! `p^H ≠ 0`.

use crate::matrixlie::{build_case, CaseError, CaseId};
use crate::orbits::{self, MetricModel};
use crate::rootsys::SimpleType;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NoncompactError {
    #[error("no compact dual registered for {0}")]
    NoDual(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Case(#[from] CaseError),
}

/// Admissibility class of a homogeneous Lorentzian manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    I,
    II,
}

/// A noncompact symmetric space `S = G/K` (the base of the fibration).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSpaceRecord {
    pub g_name: String,
    pub k_name: String,
    pub dim_g: usize,
    pub dim_k: usize,
    /// `m = dim S = dim g − dim k`.
    pub dim_s: usize,
    /// Display tag for the isotropy module `p`.
    pub p_module: String,
    pub rank_one: bool,
}

/// A homogeneous space `M^d = G/H` fibered over a symmetric base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousSpaceRecord {
    pub g_name: String,
    /// Compact real form with the same complexification; duality swaps the
    /// two names.
    pub dual_g_name: String,
    pub h_name: String,
    pub dim_g: usize,
    pub dim_h: usize,
    /// `d = dim g − dim h`.
    pub dim_d: usize,
    pub class_tags: Vec<Class>,
    pub dim_n_h: usize,
    pub dim_p_h: usize,
    pub base: SymmetricSpaceRecord,
    /// Fiber `K/H` of `M → S`, display tag and dimension.
    pub fiber: String,
    pub fiber_dim: usize,
    /// Irreducible module blocks of `m` (the leading 1 is the invariant
    /// line carrying the timelike direction).
    pub module_blocks: Vec<usize>,
    pub metric: MetricModel,
    /// Whether the fixed-subspace dimensions were recomputed from a matrix
    /// realization or transcribed.
    pub computed: bool,
    pub notes: Vec<String>,
}

fn so_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

fn metric_from_blocks(blocks: &[usize]) -> MetricModel {
    MetricModel {
        timelike_dim: 1,
        riemannian_blocks: blocks[1..].to_vec(),
        parameter_count: Some(blocks.len()),
    }
}

/// Classification from the fixed-subspace dimensions; empty means not
/// admissible.
pub fn classify(rec: &HomogeneousSpaceRecord) -> Vec<Class> {
    let mut tags = Vec::new();
    if rec.dim_n_h > 0 {
        tags.push(Class::I);
    }
    if rec.dim_p_h > 0 {
        tags.push(Class::II);
    }
    tags
}

/// Swaps the real form for its compact dual, keeping `h` and every module
/// dimension; involutive by construction.
pub fn duality(rec: &HomogeneousSpaceRecord) -> Result<HomogeneousSpaceRecord, NoncompactError> {
    if rec.dual_g_name.is_empty() {
        return Err(NoncompactError::NoDual(rec.g_name.clone()));
    }
    let mut out = rec.clone();
    std::mem::swap(&mut out.g_name, &mut out.dual_g_name);
    out.base.g_name = out.g_name.clone();
    Ok(out)
}

/// `M_{p,q} = SL_{p+q}(R) / SO_p × SO_q`.
pub fn sl_family(p: usize, q: usize) -> HomogeneousSpaceRecord {
    assert!(p >= 1 && q >= 1);
    let n = p + q;
    let dim_g = n * n - 1;
    let dim_h = so_dim(p) + so_dim(q);
    let dim_k = so_dim(n);
    let dim_d = dim_g - dim_h;
    let h_name = match (p, q) {
        (1, 1) => "{e}".to_string(),
        (1, _) => format!("SO({q})"),
        (_, 1) => format!("SO({p})"),
        _ => format!("SO({p}) x SO({q})"),
    };
    let fiber_dim = dim_k - dim_h;
    let fiber = if p.min(q) == 1 {
        format!("S^{}", p.max(q))
    } else {
        format!("SO({n})/(SO({p}) x SO({q}))")
    };
    // m = R b + (U⊗W)⊗R² + S²₀U + S²₀W.
    let mut blocks = vec![1, 2 * p * q];
    if p >= 2 {
        blocks.push(p * (p + 1) / 2 - 1);
    }
    if q >= 2 {
        blocks.push(q * (q + 1) / 2 - 1);
    }
    let (dim_n_h, dim_p_h) = if (p, q) == (1, 1) {
        // h is trivial: everything is fixed.
        (1, 2)
    } else {
        (0, 1)
    };
    let base = SymmetricSpaceRecord {
        g_name: format!("SL({n},R)"),
        k_name: format!("SO({n})"),
        dim_g,
        dim_k,
        dim_s: dim_g - dim_k,
        p_module: if n == 2 {
            "R^2".to_string()
        } else {
            format!("S^2_0(R^{n})")
        },
        rank_one: n == 2,
    };
    let rec = HomogeneousSpaceRecord {
        g_name: format!("SL({n},R)"),
        dual_g_name: format!("SU({n})"),
        h_name,
        dim_g,
        dim_h,
        dim_d,
        class_tags: Vec::new(),
        dim_n_h,
        dim_p_h,
        base,
        fiber,
        fiber_dim,
        metric: metric_from_blocks(&blocks),
        module_blocks: blocks,
        computed: false,
        notes: Vec::new(),
    };
    finish(rec)
}

fn finish(mut rec: HomogeneousSpaceRecord) -> HomogeneousSpaceRecord {
    rec.class_tags = classify(&rec);
    debug_assert_eq!(rec.dim_d, rec.dim_g - rec.dim_h);
    debug_assert_eq!(rec.fiber_dim, rec.base.dim_k - rec.dim_h);
    debug_assert_eq!(rec.dim_d, rec.base.dim_s + rec.fiber_dim);
    rec
}

/// The four normed-division-algebra hyperbolic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOneKind {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

/// The minimal class II manifold fibered over `K H^n` for each division
/// algebra `K`.
pub fn rank_one_family(
    kind: RankOneKind,
    n: usize,
) -> Result<HomogeneousSpaceRecord, NoncompactError> {
    let rec = match kind {
        RankOneKind::Real => {
            // SO(1,n)/SO(n−1) over R H^n; n = 2 is covered by SL(2,R).
            if n < 3 {
                return Err(NoncompactError::Unsupported(format!(
                    "real hyperbolic family needs n >= 3, got {n}"
                )));
            }
            let dim_g = so_dim(n + 1);
            let dim_h = so_dim(n - 1);
            let dim_k = so_dim(n);
            HomogeneousSpaceRecord {
                g_name: format!("SO(1,{n})"),
                dual_g_name: format!("SO({})", n + 1),
                h_name: format!("SO({})", n - 1),
                dim_g,
                dim_h,
                dim_d: dim_g - dim_h,
                class_tags: Vec::new(),
                dim_n_h: 0,
                dim_p_h: 1,
                base: SymmetricSpaceRecord {
                    g_name: format!("SO(1,{n})"),
                    k_name: format!("SO({n})"),
                    dim_g,
                    dim_k,
                    dim_s: n,
                    p_module: format!("R^{n}"),
                    rank_one: true,
                },
                fiber: format!("S^{}", n - 1),
                fiber_dim: dim_k - dim_h,
                module_blocks: vec![1, n - 1, n - 1],
                metric: metric_from_blocks(&[1, n - 1, n - 1]),
                computed: n <= 8,
                notes: Vec::new(),
            }
        }
        RankOneKind::Complex => {
            if n < 2 {
                return Err(NoncompactError::Unsupported(format!(
                    "complex hyperbolic family needs n >= 2, got {n}"
                )));
            }
            let dim_g = (n + 1) * (n + 1) - 1;
            let dim_h = (n - 1) * (n - 1);
            let dim_k = n * n;
            HomogeneousSpaceRecord {
                g_name: format!("SU(1,{n})"),
                dual_g_name: format!("SU({})", n + 1),
                h_name: format!("U({})", n - 1),
                dim_g,
                dim_h,
                dim_d: dim_g - dim_h,
                class_tags: Vec::new(),
                dim_n_h: 1,
                dim_p_h: 2,
                base: SymmetricSpaceRecord {
                    g_name: format!("SU(1,{n})"),
                    k_name: format!("U({n})"),
                    dim_g,
                    dim_k,
                    dim_s: 2 * n,
                    p_module: format!("C^{n}"),
                    rank_one: true,
                },
                fiber: format!("S^{}", 2 * n - 1),
                fiber_dim: dim_k - dim_h,
                module_blocks: vec![1, 2 * (n - 1), 2, 2 * (n - 1)],
                metric: metric_from_blocks(&[1, 2 * (n - 1), 2, 2 * (n - 1)]),
                computed: n <= 5,
                notes: Vec::new(),
            }
        }
        RankOneKind::Quaternion => {
            if n < 2 {
                return Err(NoncompactError::Unsupported(format!(
                    "quaternionic hyperbolic family needs n >= 2, got {n}"
                )));
            }
            let dim_g = (n + 1) * (2 * n + 3);
            let dim_h = 3 + (n - 1) * (2 * n - 1);
            let dim_k = 3 + n * (2 * n + 1);
            HomogeneousSpaceRecord {
                g_name: format!("Sp(1,{n})"),
                dual_g_name: format!("Sp({})", n + 1),
                h_name: format!("Sp(1) x Sp({})", n - 1),
                dim_g,
                dim_h,
                dim_d: dim_g - dim_h,
                class_tags: Vec::new(),
                dim_n_h: 0,
                dim_p_h: 1,
                base: SymmetricSpaceRecord {
                    g_name: format!("Sp(1,{n})"),
                    k_name: format!("Sp(1) x Sp({n})"),
                    dim_g,
                    dim_k,
                    dim_s: 4 * n,
                    p_module: format!("H^{n}"),
                    rank_one: true,
                },
                fiber: format!("S^{}", 4 * n - 1),
                fiber_dim: dim_k - dim_h,
                // m = R v + sp(1)⊗R² + H^{n−1}⊗R².
                module_blocks: vec![1, 6, 8 * (n - 1)],
                metric: metric_from_blocks(&[1, 6, 8 * (n - 1)]),
                computed: n == 2,
                notes: Vec::new(),
            }
        }
        RankOneKind::Octonion => {
            if n != 2 {
                return Err(NoncompactError::Unsupported(format!(
                    "octonionic hyperbolic plane only, got n = {n}"
                )));
            }
            HomogeneousSpaceRecord {
                g_name: "F4(-20)".to_string(),
                dual_g_name: "F4".to_string(),
                h_name: "Spin(7)".to_string(),
                dim_g: 52,
                dim_h: 21,
                dim_d: 31,
                class_tags: Vec::new(),
                dim_n_h: 0,
                dim_p_h: 1,
                base: SymmetricSpaceRecord {
                    g_name: "F4(-20)".to_string(),
                    k_name: "Spin(9)".to_string(),
                    dim_g: 52,
                    dim_k: 36,
                    dim_s: 16,
                    p_module: "O^2".to_string(),
                    rank_one: true,
                },
                fiber: "S^15".to_string(),
                fiber_dim: 15,
                // p = R v + m_1^8 + m_2^7 (the symmetric part only).
                module_blocks: vec![1, 8, 7],
                metric: MetricModel {
                    timelike_dim: 1,
                    riemannian_blocks: vec![8, 7],
                    parameter_count: Some(3),
                },
                computed: false,
                notes: vec![
                    "module blocks describe the 16-dimensional symmetric part p only".to_string(),
                ],
            }
        }
    };
    Ok(finish(rec))
}

/// The split `G2` class II record; fixed-subspace data is transcribed (no
/// octonionic matrix model is built).
pub fn g2_record() -> HomogeneousSpaceRecord {
    finish(HomogeneousSpaceRecord {
        g_name: "G2(2)".to_string(),
        dual_g_name: "G2".to_string(),
        h_name: "SU(2)^diag".to_string(),
        dim_g: 14,
        dim_h: 3,
        dim_d: 11,
        class_tags: Vec::new(),
        dim_n_h: 0,
        dim_p_h: 2,
        base: SymmetricSpaceRecord {
            g_name: "G2(2)".to_string(),
            k_name: "SU(2) x SU(2)".to_string(),
            dim_g: 14,
            dim_k: 6,
            dim_s: 8,
            p_module: "C^2 (x) C^2".to_string(),
            rank_one: false,
        },
        fiber: "S^3".to_string(),
        fiber_dim: 3,
        // m = R² + su(2)^adiag + Herm⁰₂ + i·Herm⁰₂, with m^H = C·Id = R².
        module_blocks: vec![2, 3, 3, 3],
        metric: MetricModel {
            timelike_dim: 1,
            riemannian_blocks: vec![3, 3, 3],
            parameter_count: None,
        },
        computed: false,
        notes: vec!["m^H = C Id is two-dimensional".to_string()],
    })
}

/// A class I stabilizer family for `SU(1,n)`; families b and c carry their
/// parameters symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassIFamilyRecord {
    pub family: char,
    pub g_name: String,
    pub h_shape: String,
    pub dim_d: Option<usize>,
    /// For family c: instantiations of `H'` from the compact enumeration of
    /// `SU_n`.
    pub instances: Vec<String>,
    pub note: String,
}

/// The three `SU(1,n)` class I stabilizer shapes.
pub fn su_class_i_records(n: usize) -> Vec<ClassIFamilyRecord> {
    assert!(n >= 2);
    let g_name = format!("SU(1,{n})");
    let a = ClassIFamilyRecord {
        family: 'a',
        g_name: g_name.clone(),
        h_shape: format!("SU({n})"),
        dim_d: Some((n + 1) * (n + 1) - 1 - (n * n - 1)),
        instances: Vec::new(),
        note: "maximal compact semisimple stabilizer".to_string(),
    };
    let b = ClassIFamilyRecord {
        family: 'b',
        g_name: g_name.clone(),
        h_shape: format!("T^1_a · Z_SU({n})(a)"),
        dim_d: None,
        instances: Vec::new(),
        note: "a ranges over nonzero diagonal directions; the centralizer \
               shape depends on the multiplicities of a"
            .to_string(),
    };
    let su_n = SimpleType::parse(&format!("SU{n}")).expect("SU_n is a valid compact name");
    let instances = orbits::enumerate_compact(su_n)
        .into_iter()
        .map(|rec| format!("T^1_0 · ({})", rec.stabilizer.compact_name()))
        .collect();
    let c = ClassIFamilyRecord {
        family: 'c',
        g_name,
        h_shape: format!("T^1_0 · H', H' from the minimal orbits of SU({n})"),
        dim_d: None,
        instances,
        note: "H' is the semisimple part of a minimal-orbit stabilizer".to_string(),
    };
    vec![a, b, c]
}

/// Dimension data of one factor of a product group, for the two reduction
/// shapes of a semisimple (non-simple) group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductFactor {
    pub g_name: String,
    pub dim_g: usize,
    /// Semisimple part `H` of a minimal admissible stabilizer `H · T¹`.
    pub orbit_h_name: String,
    pub orbit_h_dim: usize,
    pub k_name: String,
    pub dim_k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductShape {
    pub description: String,
    pub h_name: String,
    pub dim_d: usize,
}

/// The two stabilizer shapes of a product `G₁ × G₂`: a factor-wise product
/// (maximal admissible times maximal compact, both orders) and the twisted
/// shape `h = h₁ + h₂ + R(t₁ + t₂)` with complement `m₁ + m₂ + R(t₁ − t₂)`.
pub fn product_reduction(g1: &ProductFactor, g2: &ProductFactor) -> Vec<ProductShape> {
    let twisted = ProductShape {
        description: "twisted diagonal center".to_string(),
        h_name: format!("{} + {} + R(t1+t2)", g1.orbit_h_name, g2.orbit_h_name),
        dim_d: g1.dim_g + g2.dim_g - (g1.orbit_h_dim + g2.orbit_h_dim + 1),
    };
    let left = ProductShape {
        description: "admissible x compact".to_string(),
        h_name: format!("{}·T^1 x {}", g1.orbit_h_name, g2.k_name),
        dim_d: (g1.dim_g - g1.orbit_h_dim - 1) + (g2.dim_g - g2.dim_k),
    };
    let right = ProductShape {
        description: "compact x admissible".to_string(),
        h_name: format!("{} x {}·T^1", g1.k_name, g2.orbit_h_name),
        dim_d: (g1.dim_g - g1.dim_k) + (g2.dim_g - g2.orbit_h_dim - 1),
    };
    vec![twisted, left, right]
}

/// Display names used for the small diagonal stabilizers.
fn diagonal_h_name(p: usize, q: usize, r: usize, minus: usize, dim_h: usize) -> String {
    match (p, q, r, minus) {
        (2, 2, 2, 0) => "SO(2)^diag".to_string(),
        (2, 2, 2, 1) => "{e} x SO(2)".to_string(),
        (2, 3, 1, 0) => "{e} x SO(2)".to_string(),
        (2, 3, 2, _) => "SO(2)^diag".to_string(),
        (3, 3, 3, 0) => "SO(3)^diag".to_string(),
        _ => format!("K_v (dim {dim_h})"),
    }
}

/// `SO(p,q)/K_v` for the diagonal vector with support `r` and the last
/// `minus` coefficients flipped (`D_k = diag(Id_{r−k}, −Id_k)`); everything
/// is recomputed from the exact matrix model.
pub fn so_pq_diagonal_stabilizer(
    p: usize,
    q: usize,
    r: usize,
    minus: usize,
) -> Result<HomogeneousSpaceRecord, NoncompactError> {
    if !(2..=q).contains(&p) || r == 0 || r > p.min(q) || minus > r {
        return Err(NoncompactError::Unsupported(format!(
            "so({p},{q}) diagonal support {r}, {minus} flipped"
        )));
    }
    let case = build_case(CaseId::SoTwistedDiagonal { p, q, r, minus })?;
    let dim_g = case.algebra.dim();
    let dim_h = case.h.dim();
    let dim_k = so_dim(p) + so_dim(q);
    let h_name = diagonal_h_name(p, q, r, minus, dim_h);
    let rec = HomogeneousSpaceRecord {
        g_name: format!("SO({p},{q})"),
        dual_g_name: format!("SO({})", p + q),
        h_name,
        dim_g,
        dim_h,
        dim_d: dim_g - dim_h,
        class_tags: Vec::new(),
        dim_n_h: case.n_fixed.as_ref().unwrap().dim(),
        dim_p_h: case.p_fixed.as_ref().unwrap().dim(),
        base: SymmetricSpaceRecord {
            g_name: format!("SO({p},{q})"),
            k_name: format!("SO({p}) x SO({q})"),
            dim_g,
            dim_k,
            dim_s: p * q,
            p_module: format!("R^{p} (x) R^{q}"),
            rank_one: p == 1,
        },
        fiber: format!("(SO({p}) x SO({q}))/K_v"),
        fiber_dim: dim_k - dim_h,
        module_blocks: Vec::new(),
        metric: MetricModel {
            timelike_dim: 1,
            riemannian_blocks: Vec::new(),
            parameter_count: None,
        },
        computed: true,
        notes: Vec::new(),
    };
    Ok(finish(rec))
}

/// Pairs of locally isomorphic real forms appearing in the enumeration
/// range; used only as a dedup consistency table.
pub fn local_isomorphisms() -> Vec<(&'static str, &'static str)> {
    vec![
        ("SU(1,1)", "SL(2,R)"),
        ("Sp(1,R)", "SL(2,R)"),
        ("SO(1,2)", "SL(2,R)"),
        ("Sp(1,1)", "SO(1,4)"),
        ("SO*(6)", "SU(1,3)"),
        ("Sp(2,R)", "SO(2,3)"),
    ]
}

/// All class II minimal admissible `G/H` with `G` simple noncompact and
/// `d ≤ max_dim`, one representative per local isomorphism class, ordered
/// by `(d, g_name)`.
pub fn enumerate_class_ii(max_dim: usize) -> Vec<HomogeneousSpaceRecord> {
    let mut out = Vec::new();
    // SL(p+q,R)/SO_p × SO_q.
    for n in 2..=6 {
        for p in 1..=n / 2 {
            let rec = sl_family(p, n - p);
            if rec.dim_d <= max_dim {
                out.push(rec);
            }
        }
    }
    // Rank-one families; real n starts at 3 (n = 2 is locally SL(2,R)).
    for n in 3..20 {
        let rec = rank_one_family(RankOneKind::Real, n).unwrap();
        if rec.dim_d <= max_dim {
            out.push(rec);
        }
    }
    for n in 2..10 {
        let rec = rank_one_family(RankOneKind::Complex, n).unwrap();
        if rec.dim_d <= max_dim {
            out.push(rec);
        }
    }
    for n in 2..5 {
        let rec = rank_one_family(RankOneKind::Quaternion, n).unwrap();
        if rec.dim_d <= max_dim {
            out.push(rec);
        }
    }
    if let Ok(rec) = rank_one_family(RankOneKind::Octonion, 2) {
        if rec.dim_d <= max_dim {
            out.push(rec);
        }
    }
    let g2 = g2_record();
    if g2.dim_d <= max_dim {
        out.push(g2);
    }
    // Local-isomorphism dedup: drop a record whose g_name is the left name
    // of a registered pair when the right-name representative is present.
    let iso = local_isomorphisms();
    out.retain(|rec| {
        !iso.iter()
            .any(|(dup, _)| *dup == rec.g_name)
    });
    out.sort_by(|a, b| (a.dim_d, &a.g_name).cmp(&(b.dim_d, &b.g_name)));
    out
}

/// Class II records of simple `SO(p,q)` with twisted-diagonal stabilizers
/// in the enumeration range: genuine low-dimensional examples kept apart
/// from [`enumerate_class_ii`] because the reference list omits them.
pub fn class_ii_addenda(max_dim: usize) -> Vec<HomogeneousSpaceRecord> {
    let mut out = Vec::new();
    for (p, q, r, minus, note) in [
        (2usize, 3usize, 1usize, 0usize, "support-1 diagonal vector"),
        (2, 3, 2, 0, "support-2 diagonal vector; the flipped sign gives the same dimensions"),
    ] {
        if let Ok(mut rec) = so_pq_diagonal_stabilizer(p, q, r, minus) {
            if rec.dim_d <= max_dim && !rec.class_tags.is_empty() {
                rec.notes.push(note.to_string());
                out.push(rec);
            }
        }
    }
    out.sort_by(|a, b| (a.dim_d, &a.g_name, a.dim_h).cmp(&(b.dim_d, &b.g_name, b.dim_h)));
    out
}
