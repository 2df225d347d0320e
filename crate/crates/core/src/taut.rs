//! Chamber-wise tautological classes on the permutohedral fan.
//!
//! For each permutation `σ` of the ground set, `B_σ(M)` is the greedy basis
//! scanning `σ(0), σ(1), ...`. The classes below assign to every chamber an
//! elementary symmetric polynomial in the variables of `B_σ(M)` or its
//! complement. Two facts are checked: these assignments are continuous, and
//! `t_e` divides `[Σ_(M,e)]_σ · (c_r(S^∨_M)_σ - [-Σ_N]_σ)` on every chamber.

use itertools::Itertools;

use crate::bergman::AffineMatroid;
use crate::poly::{MultivariatePolynomial, PiecewisePolynomial};
use crate::{Error, Limits, Matroid, Result, Subset};

/// Greedy basis for the order `σ(0) < σ(1) < ...`.
pub fn lex_first_basis(m: &Matroid, sigma: &[usize]) -> Subset {
    let mut b = Subset::EMPTY;
    for &e in sigma {
        if b.len() == m.rank() {
            break;
        }
        if m.is_independent(b.with(e)) {
            b.insert(e);
        }
    }
    b
}

fn check_taut_limit(m: &Matroid, limits: &Limits) -> Result<()> {
    if m.ground_size() > limits.max_taut_ground {
        Err(Error::GroundTooLarge {
            size: m.ground_size(),
            limit: limits.max_taut_ground,
        })
    } else {
        Ok(())
    }
}

/// Permutations of `{0, ..., size-1}` in lexicographic order.
pub fn permutations(size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..size).permutations(size)
}

fn piecewise(
    m: &Matroid,
    limits: &Limits,
    f: impl Fn(&[usize], Subset) -> MultivariatePolynomial,
) -> Result<PiecewisePolynomial> {
    check_taut_limit(m, limits)?;
    let chambers = permutations(m.ground_size())
        .map(|sigma| {
            let b = lex_first_basis(m, &sigma);
            let poly = f(&sigma, b);
            (sigma, poly)
        })
        .collect();
    Ok(PiecewisePolynomial::new(chambers))
}

/// `c_i^T(S_M^∨)_σ = e_i(t_k : k ∈ B_σ(M))`.
pub fn chern_s_dual(m: &Matroid, i: usize, limits: &Limits) -> Result<PiecewisePolynomial> {
    if i > m.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: m.rank(),
        });
    }
    let k = m.ground_size();
    piecewise(m, limits, |_, b| {
        MultivariatePolynomial::elementary_symmetric(k, i, &b.iter().collect::<Vec<_>>(), 1)
    })
}

/// `c_j^T(Q_M)_σ = e_j(-t_l : l ∉ B_σ(M))`.
pub fn chern_q(m: &Matroid, j: usize, limits: &Limits) -> Result<PiecewisePolynomial> {
    let corank = m.ground_size() - m.rank();
    if j > corank {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: corank,
        });
    }
    let k = m.ground_size();
    let ground = m.ground();
    piecewise(m, limits, |_, b| {
        let rest: Vec<usize> = ground.difference(b).iter().collect();
        MultivariatePolynomial::elementary_symmetric(k, j, &rest, -1)
    })
}

/// `[Σ_(M,0)]_σ = ∏_{i ∉ B_σ(M)} (-t_i)`, checked against the top class
/// `c_{n-r}^T(Q_M)`.
pub fn class_affine_bergman(a: &AffineMatroid, limits: &Limits) -> Result<PiecewisePolynomial> {
    let m = a.matroid();
    let k = m.ground_size();
    let ground = m.ground();
    let explicit = piecewise(m, limits, |_, b| {
        MultivariatePolynomial::monomial_product(k, ground.difference(b), -1)
    })?;
    let top = chern_q(m, k - m.rank(), limits)?;
    if explicit != top {
        return Err(Error::InternalAssertionFailed(
            "affine Bergman class differs from the top Q class".into(),
        ));
    }
    Ok(explicit)
}

/// `[-Σ_N]_σ = ∏_{i ∈ B_σ(M/0 ⊕ U_{0,{0}})} t_i`, checked against the top
/// class `c_r^T(S^∨)` of `M/0 ⊕ U_{0,{0}}`.
pub fn class_inverted_dual(a: &AffineMatroid, limits: &Limits) -> Result<PiecewisePolynomial> {
    let contracted = a.matroid().contraction_with_loop(0)?;
    let k = contracted.ground_size();
    let explicit = piecewise(&contracted, limits, |_, b| {
        MultivariatePolynomial::monomial_product(k, b, 1)
    })?;
    let top = chern_s_dual(&contracted, contracted.rank(), limits)?;
    if explicit != top {
        return Err(Error::InternalAssertionFailed(
            "inverted dual class differs from the top S-dual class".into(),
        ));
    }
    Ok(explicit)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisibilityBranch {
    /// `0 ∉ B_σ(M)`: the affine Bergman factor already contains `-t_0`.
    SpecialOutsideBasis,
    /// `0 ∈ B_σ(M)`: the difference collapses to
    /// `Σ_{i ∈ B_σ - 0} ∏_{j ∈ B_σ - i} t_j`, each term containing `t_0`.
    Cancellation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberCertificate {
    pub permutation: Vec<usize>,
    pub basis: Subset,
    pub branch: DivisibilityBranch,
    /// `c_r^T(S_M^∨)_σ - [-Σ_N]_σ`.
    pub difference: MultivariatePolynomial,
    /// The full product, before division.
    pub product: MultivariatePolynomial,
    /// `product / t_0`, when exact.
    pub quotient: Option<MultivariatePolynomial>,
    /// For the cancellation branch, whether `difference` equals the
    /// collapsed sum.
    pub cancellation_identity: Option<bool>,
}

impl ChamberCertificate {
    pub fn passed(&self) -> bool {
        self.quotient.is_some() && self.cancellation_identity != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub certificates: Vec<ChamberCertificate>,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(ChamberCertificate::passed)
    }
}

/// Tests `t_0 | [Σ_(M,0)]_σ · (c_r^T(S_M^∨)_σ - [-Σ_N]_σ)` on every chamber by
/// exact division, where `r + 1` is the rank of `M`.
pub fn divisibility_check(a: &AffineMatroid, limits: &Limits) -> Result<DivisibilityReport> {
    let m = a.matroid();
    check_taut_limit(m, limits)?;
    let k = m.ground_size();
    let r = m.rank() - 1;
    let bergman = class_affine_bergman(a, limits)?;
    let s_dual = chern_s_dual(m, r, limits)?;
    let inverted = class_inverted_dual(a, limits)?;
    let mut certificates = Vec::with_capacity(bergman.chambers().len());
    for (sigma, class) in bergman.chambers() {
        let basis = lex_first_basis(m, sigma);
        let difference = s_dual.get(sigma).unwrap() - inverted.get(sigma).unwrap();
        let product = class * &difference;
        let quotient = product.divide_by_var(0);
        let (branch, cancellation_identity) = if basis.contains(0) {
            let collapsed = basis
                .without(0)
                .iter()
                .map(|i| MultivariatePolynomial::monomial_product(k, basis.without(i), 1))
                .fold(MultivariatePolynomial::zero(k), |acc, p| &acc + &p);
            (DivisibilityBranch::Cancellation, Some(collapsed == difference))
        } else {
            (DivisibilityBranch::SpecialOutsideBasis, None)
        };
        certificates.push(ChamberCertificate {
            permutation: sigma.clone(),
            basis,
            branch,
            difference,
            product,
            quotient,
            cancellation_identity,
        });
    }
    Ok(DivisibilityReport { certificates })
}
