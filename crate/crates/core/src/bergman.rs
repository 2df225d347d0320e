//! Bergman fans: circuit criterion, flag cones and complete flag enumeration.
//!
//! Vectors are matched to a matroid's elements positionally: element `i` of a
//! matroid reads coordinate `first_index + i` of the vector. Flags carry
//! absolute labels and read coordinates by label.

use std::collections::HashMap;

use crate::invariants::FlagOfFlats;
use crate::rational::RationalVector;
use crate::{Error, Limits, Matroid, Relabeling, Result, Subset};

/// A matroid `M` on `{0, ..., n}` whose special element is `0`, together with
/// `N = (M/0)^⊥`.
///
/// `N` is stored on `{0, ..., n-1}`; its element `i` is element `i + 1` of `M`.
/// [`AffineMatroid::lift`] converts `N`-labels to `M`-labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMatroid {
    matroid: Matroid,
    dual_contraction: Matroid,
    original_labels: Relabeling,
}

impl AffineMatroid {
    /// `m` is already canonical: its special element is `0`.
    pub fn new(m: Matroid) -> Result<Self> {
        let size = m.ground_size();
        AffineMatroid::build(m, Relabeling::identity(size))
    }

    /// Relabels `e ↦ 0`, keeping the relative order of the other elements.
    pub fn with_special(m: &Matroid, e: usize) -> Result<Self> {
        let (canonical, map) = m.with_special_first(e)?;
        AffineMatroid::build(canonical, map).map_err(|err| match err {
            Error::LoopOrColoopSpecialElement(_) => Error::LoopOrColoopSpecialElement(e),
            other => other,
        })
    }

    fn build(m: Matroid, original_labels: Relabeling) -> Result<Self> {
        if m.ground_size() == 0 {
            return Err(Error::InvalidElement {
                element: 0,
                ground_size: 0,
            });
        }
        if m.is_loop(0)? || m.is_coloop(0)? {
            return Err(Error::LoopOrColoopSpecialElement(0));
        }
        let (contraction, _) = m.contract(0)?;
        Ok(AffineMatroid {
            dual_contraction: contraction.dual(),
            matroid: m,
            original_labels,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// `N = (M/0)^⊥` in its own labels `{0, ..., n-1}`.
    pub fn dual_contraction(&self) -> &Matroid {
        &self.dual_contraction
    }

    /// Maps canonical labels back to the labels of the input matroid.
    pub fn original_labels(&self) -> &Relabeling {
        &self.original_labels
    }

    /// Largest element label `n`; weights live on `{1, ..., n}`.
    pub fn n(&self) -> usize {
        self.matroid.ground_size() - 1
    }

    /// `N`-labels to `M`-labels.
    pub fn lift(s: Subset) -> Subset {
        Subset::from_bits(s.bits() << 1)
    }

    /// `M`-labels (not containing `0`) to `N`-labels.
    pub fn lower(s: Subset) -> Subset {
        Subset::from_bits(s.bits() >> 1)
    }
}

/// Every circuit attains its `x`-minimum at least twice.
pub fn in_bergman_fan(m: &Matroid, x: &RationalVector) -> bool {
    let base = x.first_index();
    m.circuits().iter().all(|c| {
        let mut min = None;
        let mut count = 0;
        for e in c.iter() {
            let v = &x[base + e];
            match min {
                None => {
                    min = Some(v);
                    count = 1;
                }
                Some(m) if v < m => {
                    min = Some(v);
                    count = 1;
                }
                Some(m) if v == m => count += 1,
                _ => {}
            }
        }
        count >= 2
    })
}

/// `x ∈ Σ_{(M,0)}` for `x` on `{1, ..., n}`: `(0, x) ∈ Σ_M`.
pub fn in_affine_bergman(a: &AffineMatroid, x: &RationalVector) -> bool {
    x.check_indices(1, a.n()).is_ok() && in_bergman_fan(a.matroid(), &x.with_leading_zero())
}

fn stratum_values<'a>(flag: &FlagOfFlats, x: &'a RationalVector) -> Option<Vec<&'a crate::Rational>> {
    let mut out = Vec::with_capacity(flag.len());
    for stratum in flag.strata() {
        let mut vals = stratum.iter().map(|e| x.get(e));
        let first = vals.next()??;
        for v in vals {
            if v? != first {
                return None;
            }
        }
        out.push(first);
    }
    Some(out)
}

/// `x ∈ cone(e_{F_1}, ..., e_{F_k}) + R·1`: constant on each stratum and
/// weakly decreasing along the flag.
pub fn in_flag_cone(flag: &FlagOfFlats, x: &RationalVector) -> bool {
    stratum_values(flag, x).is_some_and(|v| v.windows(2).all(|p| p[0] >= p[1]))
}

/// Relative interior of the flag cone: stratum values strictly decreasing.
pub fn in_flag_cone_interior(flag: &FlagOfFlats, x: &RationalVector) -> bool {
    stratum_values(flag, x).is_some_and(|v| v.windows(2).all(|p| p[0] > p[1]))
}

fn check_flag_limit(m: &Matroid, limits: &Limits) -> Result<()> {
    if m.ground_size() > limits.max_flag_ground {
        Err(Error::FlagEnumerationTooLarge {
            size: m.ground_size(),
            limit: limits.max_flag_ground,
        })
    } else {
        Ok(())
    }
}

/// All complete flags of flats, in lexicographic order of their member
/// sequences. A matroid with loops has none.
pub fn complete_flags(m: &Matroid, limits: &Limits) -> Result<Vec<FlagOfFlats>> {
    check_flag_limit(m, limits)?;
    if !m.closure(Subset::EMPTY).is_empty() {
        return Ok(Vec::new());
    }
    let mut covers: HashMap<Subset, Vec<Subset>> = HashMap::new();
    let mut out = Vec::new();
    let mut chain = vec![Subset::EMPTY];
    extend_flags(m, &mut covers, &mut chain, &mut out);
    Ok(out)
}

fn extend_flags(
    m: &Matroid,
    covers: &mut HashMap<Subset, Vec<Subset>>,
    chain: &mut Vec<Subset>,
    out: &mut Vec<FlagOfFlats>,
) {
    let top = *chain.last().unwrap();
    if top == m.ground() {
        out.push(FlagOfFlats::new(chain.clone()).expect("cover chains increase"));
        return;
    }
    let next = covers.entry(top).or_insert_with(|| m.covers(top)).clone();
    for f in next {
        chain.push(f);
        extend_flags(m, covers, chain, out);
        chain.pop();
    }
}

/// Membership in the union of the flag cones, with flags in `m`'s labels
/// shifted by `x.first_index()`.
pub fn bergman_membership_via_flags(
    m: &Matroid,
    x: &RationalVector,
    limits: &Limits,
) -> Result<bool> {
    let shift = x.first_index();
    Ok(complete_flags(m, limits)?
        .iter()
        .any(|f| in_flag_cone(&f.map(|e| e + shift), x)))
}
