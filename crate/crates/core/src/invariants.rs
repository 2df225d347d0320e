//! Characteristic polynomial, beta invariant, flags of bases and (β-)nbc bases.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::SetPartition;
use crate::{Error, Matroid, Result, Subset, MAX_CHAR_POLY_GROUND};

/// Polynomial in one variable `t` with exact integer coefficients;
/// `coefficients()[k]` multiplies `t^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerPolynomial {
    coeffs: Vec<i64>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial::default()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as i64 * c)
                .collect(),
        )
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Table of `rank(X)` for every subset `X`, indexed by bit mask.
fn rank_table(m: &Matroid) -> Vec<u8> {
    let size = 1usize << m.ground_size();
    let r = m.rank();
    let mut independent = vec![false; size];
    for x in (0..size).rev() {
        let s = Subset::from_bits(x as u64);
        independent[x] = m.is_basis(s)
            || (s.len() < r
                && m
                    .ground()
                    .difference(s)
                    .iter()
                    .any(|e| independent[x | 1 << e]));
    }
    let mut rank = vec![0u8; size];
    for x in 0..size {
        let s = Subset::from_bits(x as u64);
        rank[x] = if independent[x] {
            s.len() as u8
        } else {
            s.iter().map(|e| rank[x & !(1 << e)]).max().unwrap_or(0)
        };
    }
    rank
}

/// `χ_M(t) = Σ_{X ⊆ E} (-1)^{|X|} t^{r(M) - r(X)}`, summed over all subsets.
pub fn char_poly(m: &Matroid) -> Result<IntegerPolynomial> {
    if m.ground_size() > MAX_CHAR_POLY_GROUND {
        return Err(Error::GroundTooLarge {
            size: m.ground_size(),
            limit: MAX_CHAR_POLY_GROUND,
        });
    }
    let ranks = rank_table(m);
    let r = m.rank();
    let mut coeffs = vec![0i64; r + 1];
    for (x, &rx) in ranks.iter().enumerate() {
        let sign = if x.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[r - rx as usize] += sign;
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// `β(M) = |χ_M'(1)|`.
pub fn beta(m: &Matroid) -> Result<u64> {
    Ok(char_poly(m)?.derivative().eval(1).unsigned_abs())
}

/// A chain `∅ = F_0 ⊊ F_1 ⊊ ... ⊊ F_k` of subsets; `F_k` is the ground set
/// of the matroid the flag belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagOfFlats {
    flats: Vec<Subset>,
}

impl FlagOfFlats {
    /// `flats` must start with `∅` and be strictly increasing.
    pub fn new(flats: Vec<Subset>) -> Option<Self> {
        let ok = flats.first() == Some(&Subset::EMPTY)
            && flats
                .windows(2)
                .all(|w| w[0].is_subset(w[1]) && w[0] != w[1]);
        ok.then_some(FlagOfFlats { flats })
    }

    /// `F_0, ..., F_k`, including the leading empty set.
    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    /// Number of nonempty members `k`.
    pub fn len(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn top(&self) -> Subset {
        *self.flats.last().expect("flag has at least F_0")
    }

    /// `F_1 - F_0, ..., F_k - F_{k-1}` in flag order.
    pub fn strata(&self) -> Vec<Subset> {
        self.flats.windows(2).map(|w| w[1].difference(w[0])).collect()
    }

    /// The strata as a set partition of the top set.
    pub fn stratum_partition(&self) -> SetPartition {
        SetPartition::new(self.top(), self.strata()).expect("strata partition the top set")
    }

    /// Stratum minima `min(F_i - F_{i-1})`.
    pub fn stratum_minima(&self) -> Subset {
        self.strata().iter().filter_map(|s| s.first()).collect()
    }

    /// Relabels every member element-wise.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> FlagOfFlats {
        FlagOfFlats {
            flats: self.flats.iter().map(|s| s.map(&f)).collect(),
        }
    }

    /// Whether this is a complete flag of flats of `m` (in `m`'s labels).
    pub fn is_complete_flag_of(&self, m: &Matroid) -> bool {
        self.len() == m.rank()
            && self.top() == m.ground()
            && self
                .flats
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, &f)| m.is_flat(f) && m.rank_of(f) == i)
    }
}

impl fmt::Display for FlagOfFlats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.flats.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn basis_descending(m: &Matroid, b: Subset) -> Result<Vec<usize>> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis(b));
    }
    Ok(b.iter().rev().collect())
}

/// `F_M(B)`: with `b_1 > ... > b_{r+1}`, `F_i = cl{b_1, ..., b_i}`.
pub fn flag_of_basis(m: &Matroid, b: Subset) -> Result<FlagOfFlats> {
    let desc = basis_descending(m, b)?;
    let mut flats = vec![Subset::EMPTY];
    let mut prefix = Subset::EMPTY;
    for e in desc {
        prefix.insert(e);
        flats.push(m.closure(prefix));
    }
    if m.rank() == 0 {
        // The only basis is empty; the flag is just the ground set when it
        // is nonempty.
        if !m.ground().is_empty() {
            flats.push(m.ground());
        }
    }
    Ok(FlagOfFlats::new(flats).expect("closures of a growing independent chain increase"))
}

/// `B` is nbc iff `b_i = min F_i` for every member of `F_M(B)`. A loop is a
/// circuit whose broken circuit is empty, so a matroid with loops has no nbc
/// bases.
pub fn is_nbc_basis(m: &Matroid, b: Subset) -> Result<bool> {
    let desc = basis_descending(m, b)?;
    if !m.closure(Subset::EMPTY).is_empty() {
        return Ok(false);
    }
    let mut prefix = Subset::EMPTY;
    for e in desc {
        prefix.insert(e);
        if m.closure(prefix).first() != Some(e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All nbc bases in lexicographic order.
pub fn nbc_bases(m: &Matroid) -> Vec<Subset> {
    m.bases()
        .iter()
        .copied()
        .filter(|&b| is_nbc_basis(m, b).expect("iterating over bases"))
        .collect()
}

fn check_special_zero(m: &Matroid) -> Result<()> {
    if m.is_loop(0)? || m.is_coloop(0)? {
        Err(Error::LoopOrColoopSpecialElement(0))
    } else {
        Ok(())
    }
}

/// β-nbc bases with respect to the natural order and special element `0`:
/// nbc bases `B` of `M` such that `(B^⊥ ∪ 0) - 1` is an nbc basis of `M^⊥`.
/// Each contains `0` and avoids `1`.
pub fn bnbc_bases(m: &Matroid) -> Result<Vec<Subset>> {
    check_special_zero(m)?;
    let dual = m.dual();
    let ground = m.ground();
    let mut out = Vec::new();
    for &b in m.bases() {
        if !b.contains(0) || b.contains(1) {
            continue;
        }
        let co = ground.difference(b).with(0).without(1);
        if dual.is_basis(co) && is_nbc_basis(m, b)? && is_nbc_basis(&dual, co)? {
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        v.iter().collect()
    }

    fn triangle() -> Matroid {
        Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(char_poly(&u24).unwrap().coefficients(), &[3, -4, 1]);
        let with_loop = Matroid::graphic(2, &[(0, 1), (0, 0)]).unwrap();
        assert!(char_poly(&with_loop).unwrap().is_zero());
        assert_eq!(
            char_poly(&Matroid::uniform(1, 1).unwrap()).unwrap().coefficients(),
            &[-1, 1]
        );
        assert_eq!(char_poly(&u24).unwrap().to_string(), "t^2 - 4t + 3");
    }

    #[test]
    fn char_poly_rejects_large_ground() {
        let big = Matroid::uniform(1, 21).unwrap();
        assert!(matches!(char_poly(&big), Err(Error::GroundTooLarge { .. })));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&Matroid::uniform(2, 4).unwrap()).unwrap(), 2);
        assert_eq!(beta(&triangle()).unwrap(), 1);
        let with_loop = Matroid::graphic(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(beta(&with_loop).unwrap(), 0);
    }

    #[test]
    fn flag_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let f = flag_of_basis(&u24, s(&[0, 2])).unwrap();
        assert_eq!(f.flats(), &[Subset::EMPTY, s(&[2]), s(&[0, 1, 2, 3])]);
        let free = Matroid::uniform(3, 3).unwrap();
        let f = flag_of_basis(&free, s(&[0, 1, 2])).unwrap();
        assert_eq!(
            f.flats(),
            &[Subset::EMPTY, s(&[2]), s(&[1, 2]), s(&[0, 1, 2])]
        );
        assert!(f.is_complete_flag_of(&free));
        assert_eq!(flag_of_basis(&u24, s(&[0])), Err(Error::NotABasis(s(&[0]))));
    }

    #[test]
    fn nbc_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert!(is_nbc_basis(&u24, s(&[0, 2])).unwrap());
        assert!(!is_nbc_basis(&u24, s(&[1, 2])).unwrap());
        assert!(is_nbc_basis(&u24, u24.bases()[0]).unwrap());
        assert!(is_nbc_basis(&u24, s(&[1])).is_err());
    }

    #[test]
    fn bnbc_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(bnbc_bases(&u24).unwrap(), vec![s(&[0, 2]), s(&[0, 3])]);
        assert_eq!(bnbc_bases(&triangle()).unwrap(), vec![s(&[0, 2])]);
        let coloop = Matroid::uniform(3, 3).unwrap();
        assert_eq!(
            bnbc_bases(&coloop),
            Err(Error::LoopOrColoopSpecialElement(0))
        );
    }

    #[test]
    fn polynomial_helpers() {
        let p = IntegerPolynomial::new(vec![2, -3, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.derivative().coefficients(), &[-3, 2]);
        assert_eq!(p.eval(2), 0);
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
        assert_eq!(IntegerPolynomial::new(vec![0, -1]).to_string(), "-t");
    }
}
