//! Tropical critical points of an affine matroid `(M, 0)`.
//!
//! For `w` on `{1, ..., n}` these are the decompositions `w = x + y` with
//! `(0, x) ∈ Σ_M` and `y ∈ Σ_N`, `N = (M/0)^⊥`. Every such point lies in a
//! pair of flag cones `σ_F × (w - σ_G)` whose stratum partitions form an
//! arboreal pair, so it is the unique solution of a tree system.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bergman::{
    complete_flags, in_affine_bergman, in_bergman_fan, in_flag_cone, in_flag_cone_interior,
    AffineMatroid,
};
use crate::invariants::{beta, bnbc_bases, flag_of_basis, FlagOfFlats};
use crate::partitions::{
    generic_infeasibility_witness, intersection_graph, is_rapidly_increasing, solve_tree,
    GraphKind, SetPartition, SignedPath,
};
use crate::rational::RationalVector;
use crate::{Error, Limits, Matroid, Result, Subset};

/// Upper bound of the uniform integer entries drawn for generic weights.
pub const RANDOM_WEIGHT_MAX: i64 = 1_000_000;

/// How many degenerate draws a single generic sample may discard.
pub const MAX_RESAMPLES: usize = 32;

/// One intersection point together with the cones it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoint {
    /// Stratum minima of `flag`; a β-nbc basis with `flag = F_M(basis)`.
    pub basis: Subset,
    /// Complete flag of `M` on `{0, ..., n}`.
    pub flag: FlagOfFlats,
    /// Complete flag of `N`, in `M`'s labels `{1, ..., n}`.
    pub dual_flag: FlagOfFlats,
    pub partition: SetPartition,
    pub dual_partition: SetPartition,
    /// On `{1, ..., n}`; the special coordinate `x_0 = 0` is implicit.
    pub x: RationalVector,
    pub y: RationalVector,
    pub w: RationalVector,
    /// Signed paths to the block of `0`, one per block of `partition`.
    pub x_paths: Vec<SignedPath>,
    /// One per block of `dual_partition`.
    pub y_paths: Vec<SignedPath>,
}

impl CriticalPoint {
    /// `(0, x)` on `{0, ..., n}`.
    pub fn full_x(&self) -> RationalVector {
        self.x.with_leading_zero()
    }

    fn sort_key(&self) -> (Subset, RationalVector) {
        (self.basis, self.x.clone())
    }
}

fn sort_points(points: &mut [CriticalPoint]) {
    points.sort_by_key(|p| p.sort_key());
}

/// Solves the tree system of a flag pair, if its partitions are arboreal.
fn point_for_flags(
    flag: &FlagOfFlats,
    dual_flag: &FlagOfFlats,
    w: &RationalVector,
) -> Result<Option<(CriticalPoint, RationalVector)>> {
    let partition = flag.stratum_partition();
    let dual_partition = dual_flag.stratum_partition();
    let graph = intersection_graph(&partition, &dual_partition)?;
    if graph.classify().kind() != GraphKind::Tree {
        return Ok(None);
    }
    let sol = solve_tree(&partition, &dual_partition, w)?;
    let x = RationalVector::new(1, sol.x.values()[1..].to_vec());
    let point = CriticalPoint {
        basis: flag.stratum_minima(),
        flag: flag.clone(),
        dual_flag: dual_flag.clone(),
        partition,
        dual_partition,
        x,
        y: sol.y,
        w: w.clone(),
        x_paths: sol.x_paths,
        y_paths: sol.y_paths,
    };
    Ok(Some((point, sol.x)))
}

fn assert_point(a: &AffineMatroid, p: &CriticalPoint) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::InternalAssertionFailed(format!(
            "basis {}: {what}",
            p.basis
        )))
    };
    for i in p.w.indices() {
        if &p.x[i] + &p.y[i] != p.w[i] {
            return fail("x + y != w");
        }
    }
    if !in_flag_cone(&p.flag, &p.full_x()) {
        return fail("(0, x) outside the cone of F_M(B)");
    }
    if !in_flag_cone(&p.dual_flag, &p.y) {
        return fail("y outside the cone of F_N(B^⊥)");
    }
    if !in_affine_bergman(a, &p.x) {
        return fail("(0, x) outside the Bergman fan of M");
    }
    if !in_bergman_fan(a.dual_contraction(), &p.y) {
        return fail("y outside the Bergman fan of N");
    }
    Ok(())
}

fn check_weights(a: &AffineMatroid, w: &RationalVector) -> Result<()> {
    w.check_indices(1, a.n())
}

/// One critical point per β-nbc basis `B`, from the cones of `F_M(B)` and
/// `F_N(B^⊥)`. Requires rapidly increasing `w`; every returned point is
/// checked against the cone and Bergman fan conditions.
pub fn critical_points_fast(a: &AffineMatroid, w: &RationalVector) -> Result<Vec<CriticalPoint>> {
    check_weights(a, w)?;
    if !is_rapidly_increasing(w) {
        return Err(Error::NotRapidlyIncreasing);
    }
    let m = a.matroid();
    let n_matroid = a.dual_contraction();
    let mut points = Vec::new();
    for b in bnbc_bases(m)? {
        let flag = flag_of_basis(m, b)?;
        let co = AffineMatroid::lower(m.ground().difference(b));
        let dual_flag = flag_of_basis(n_matroid, co)?.map(|e| e + 1);
        let Some((point, _)) = point_for_flags(&flag, &dual_flag, w)? else {
            return Err(Error::InternalAssertionFailed(format!(
                "flag partitions of basis {b} are not arboreal"
            )));
        };
        if point.basis != b {
            return Err(Error::InternalAssertionFailed(format!(
                "stratum minima {} differ from basis {b}",
                point.basis
            )));
        }
        assert_point(a, &point)?;
        points.push(point);
    }
    sort_points(&mut points);
    Ok(points)
}

/// Why the oracle refused to count for a weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// A solution lies on the boundary of one of its cones.
    Boundary { flag: FlagOfFlats, dual_flag: FlagOfFlats },
    /// Every cycle of a non-arboreal pair has vanishing alternating sum.
    CycleCoincidence { flag: FlagOfFlats, dual_flag: FlagOfFlats },
    /// Two flag pairs produce the same point.
    SharedPoint { first: Box<CriticalPoint>, second: Box<CriticalPoint> },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::Boundary { flag, dual_flag } => {
                write!(f, "solution on the boundary of the cones of {flag} and {dual_flag}")
            }
            Degeneracy::CycleCoincidence { flag, dual_flag } => {
                write!(f, "cycles of the pair {flag}, {dual_flag} all have zero weight sum")
            }
            Degeneracy::SharedPoint { first, second } => write!(
                f,
                "flag pairs with minima {} and {} give the same point",
                first.basis, second.basis
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Points(Vec<CriticalPoint>),
    Degenerate(Degeneracy),
}

impl OracleOutcome {
    pub fn points(&self) -> Option<&[CriticalPoint]> {
        match self {
            OracleOutcome::Points(p) => Some(p),
            OracleOutcome::Degenerate(_) => None,
        }
    }

    pub fn count(&self) -> Option<usize> {
        self.points().map(<[_]>::len)
    }
}

/// Exhaustive search over all pairs of complete flags of `M` and `N`.
///
/// Arboreal pairs are solved and kept when the solution lies in both closed
/// cones. The answer is [`OracleOutcome::Degenerate`] when a kept solution
/// touches a cone boundary, when a cyclic pair is consistent for `w`, or when
/// two pairs give the same point.
pub fn critical_points_oracle(
    a: &AffineMatroid,
    w: &RationalVector,
    limits: &Limits,
) -> Result<OracleOutcome> {
    check_weights(a, w)?;
    let flags = complete_flags(a.matroid(), limits)?;
    let dual_flags: Vec<FlagOfFlats> = complete_flags(a.dual_contraction(), limits)?
        .iter()
        .map(|g| g.map(|e| e + 1))
        .collect();
    let mut found: BTreeMap<(RationalVector, RationalVector), CriticalPoint> = BTreeMap::new();
    for flag in &flags {
        let partition = flag.stratum_partition();
        for dual_flag in &dual_flags {
            let dual_partition = dual_flag.stratum_partition();
            let graph = intersection_graph(&partition, &dual_partition)?;
            if graph.classify().has_cycle {
                if generic_infeasibility_witness(&partition, &dual_partition, w)?.is_none() {
                    return Ok(OracleOutcome::Degenerate(Degeneracy::CycleCoincidence {
                        flag: flag.clone(),
                        dual_flag: dual_flag.clone(),
                    }));
                }
                continue;
            }
            let Some((point, full_x)) = point_for_flags(flag, dual_flag, w)? else {
                // Acyclic but disconnected cannot happen for complete flags
                // (n + 1 vertices, n edges); skip defensively.
                continue;
            };
            if !(in_flag_cone(flag, &full_x) && in_flag_cone(dual_flag, &point.y)) {
                continue;
            }
            if !(in_flag_cone_interior(flag, &full_x) && in_flag_cone_interior(dual_flag, &point.y))
            {
                return Ok(OracleOutcome::Degenerate(Degeneracy::Boundary {
                    flag: flag.clone(),
                    dual_flag: dual_flag.clone(),
                }));
            }
            let key = (point.x.clone(), point.y.clone());
            if let Some(prev) = found.get(&key) {
                return Ok(OracleOutcome::Degenerate(Degeneracy::SharedPoint {
                    first: Box::new(prev.clone()),
                    second: Box::new(point),
                }));
            }
            found.insert(key, point);
        }
    }
    let mut points: Vec<CriticalPoint> = found.into_values().collect();
    sort_points(&mut points);
    Ok(OracleOutcome::Points(points))
}

/// Integer weights with independent uniform entries in `[1, RANDOM_WEIGHT_MAX]`.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> RationalVector {
    let vals: Vec<i64> = (0..n)
        .map(|_| rng.random_range(1..=RANDOM_WEIGHT_MAX))
        .collect();
    RationalVector::from_integers(1, &vals)
}

/// The seeded generator used for all sampling (ChaCha8).
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of critical points for a random generic `w`, resampling up to
/// `trials` times while the draw is degenerate.
pub fn degree(a: &AffineMatroid, trials: usize, rng_seed: u64, limits: &Limits) -> Result<usize> {
    let mut rng = seeded_rng(rng_seed);
    for _ in 0..trials {
        let w = random_weights(&mut rng, a.n());
        if let Some(count) = critical_points_oracle(a, &w, limits)?.count() {
            return Ok(count);
        }
    }
    Err(Error::AllTrialsDegenerate(trials))
}

/// Oracle count for one generic sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOutcome {
    pub w: RationalVector,
    pub count: usize,
    /// Degenerate draws discarded before `w`.
    pub discarded: usize,
}

/// Cross-check of `β(M)`, the β-nbc construction and the flag-pair oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Special element in the input labels.
    pub special_element: usize,
    pub seed: u64,
    pub beta: Option<u64>,
    /// `(1, 10, 100, ...)`.
    pub rapid_w: Option<RationalVector>,
    pub fast_points: Option<Vec<CriticalPoint>>,
    /// Oracle run on `rapid_w`.
    pub rapid_oracle_points: Option<Vec<CriticalPoint>>,
    pub samples: Vec<SampleOutcome>,
    /// Total degenerate draws over all samples.
    pub resamples: usize,
    /// `β`, the fast count and every oracle count coincide.
    pub counts_agree: bool,
    /// Fast and oracle point sets coincide for `rapid_w`.
    pub point_sets_agree: bool,
    pub errors: Vec<Error>,
}

impl VerificationReport {
    pub fn fast_count(&self) -> Option<usize> {
        self.fast_points.as_ref().map(Vec::len)
    }

    pub fn oracle_counts(&self) -> Vec<usize> {
        self.rapid_oracle_points
            .iter()
            .map(Vec::len)
            .chain(self.samples.iter().map(|s| s.count))
            .collect()
    }

    pub fn all_agree(&self) -> bool {
        self.errors.is_empty() && self.counts_agree && self.point_sets_agree
    }
}

fn same_points(a: &[CriticalPoint], b: &[CriticalPoint]) -> bool {
    a.len() == b.len()
        && a
            .iter()
            .zip(b)
            .all(|(p, q)| p.x == q.x && p.y == q.y)
}

/// Runs every check for `(m, e)`; failures are collected in the report.
pub fn verify_theorem(
    m: &Matroid,
    e: usize,
    num_random_w: usize,
    rng_seed: u64,
    limits: &Limits,
) -> VerificationReport {
    let mut report = VerificationReport {
        special_element: e,
        seed: rng_seed,
        beta: None,
        rapid_w: None,
        fast_points: None,
        rapid_oracle_points: None,
        samples: Vec::new(),
        resamples: 0,
        counts_agree: false,
        point_sets_agree: false,
        errors: Vec::new(),
    };
    let a = match AffineMatroid::with_special(m, e) {
        Ok(a) => a,
        Err(err) => {
            report.errors.push(err);
            return report;
        }
    };
    match beta(a.matroid()) {
        Ok(b) => report.beta = Some(b),
        Err(err) => report.errors.push(err),
    }
    let w = RationalVector::powers_of_ten(a.n());
    match critical_points_fast(&a, &w) {
        Ok(p) => report.fast_points = Some(p),
        Err(err) => report.errors.push(err),
    }
    match critical_points_oracle(&a, &w, limits) {
        Ok(OracleOutcome::Points(p)) => report.rapid_oracle_points = Some(p),
        Ok(OracleOutcome::Degenerate(_)) => report
            .errors
            .push(Error::InternalAssertionFailed("(1, 10, 100, ...) is degenerate".into())),
        Err(err) => report.errors.push(err),
    }
    report.rapid_w = Some(w);

    let mut rng = seeded_rng(rng_seed);
    'samples: for _ in 0..num_random_w {
        for discarded in 0..MAX_RESAMPLES {
            let w = random_weights(&mut rng, a.n());
            match critical_points_oracle(&a, &w, limits) {
                Ok(OracleOutcome::Points(p)) => {
                    report.samples.push(SampleOutcome {
                        w,
                        count: p.len(),
                        discarded,
                    });
                    continue 'samples;
                }
                Ok(OracleOutcome::Degenerate(_)) => report.resamples += 1,
                Err(err) => {
                    report.errors.push(err);
                    break 'samples;
                }
            }
        }
        report.errors.push(Error::AllTrialsDegenerate(MAX_RESAMPLES));
    }

    if let (Some(b), Some(fast)) = (report.beta, &report.fast_points) {
        let expected = b as usize;
        report.counts_agree = fast.len() == expected
            && report.oracle_counts().iter().all(|&c| c == expected)
            && report.rapid_oracle_points.is_some()
            && report.samples.len() == num_random_w;
    }
    if let (Some(fast), Some(oracle)) = (&report.fast_points, &report.rapid_oracle_points) {
        report.point_sets_agree = same_points(fast, oracle);
    }
    report
}
