//! Matroids on `{0, ..., n}` given by their bases.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::{Error, Result, Subset};

/// A matroid on the ground set `{0, ..., ground_size - 1}`.
///
/// Immutable once built. Circuits and flats are computed on first use and
/// cached; the caches are thread safe.
pub struct Matroid {
    ground_size: usize,
    rank: usize,
    bases: Vec<Subset>,
    basis_set: HashSet<Subset>,
    circuits: OnceLock<Vec<Subset>>,
    flats: OnceLock<Vec<Subset>>,
}

/// Order-preserving relabeling produced by minors and canonicalization.
///
/// `old_of_new[i]` is the label in the original matroid of element `i` of the
/// new one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    old_of_new: Vec<usize>,
}

impl Relabeling {
    pub fn new(old_of_new: Vec<usize>) -> Self {
        Relabeling { old_of_new }
    }

    pub fn identity(size: usize) -> Self {
        Relabeling::new((0..size).collect())
    }

    pub fn old_of_new(&self) -> &[usize] {
        &self.old_of_new
    }

    pub fn old(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_of_new.iter().position(|&o| o == old)
    }

    pub fn subset_to_old(&self, s: Subset) -> Subset {
        s.map(|e| self.old(e))
    }
}

fn check_ground(size: usize) -> Result<()> {
    if size > Subset::CAPACITY {
        Err(Error::GroundTooLarge {
            size,
            limit: Subset::CAPACITY,
        })
    } else {
        Ok(())
    }
}

/// Removes element `e` and shifts higher elements down by one.
fn squeeze_out(s: Subset, e: usize) -> Subset {
    let bits = s.bits();
    let low = bits & ((1u64 << e) - 1);
    let high = if e + 1 >= 64 { 0 } else { (bits >> (e + 1)) << e };
    Subset::from_bits(low | high)
}

impl Matroid {
    /// Matroid on `{0, ..., n}` with the given bases; the exchange axiom is
    /// checked exhaustively.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = Subset>,
    {
        Matroid::with_ground_size(n + 1, bases)
    }

    /// Like [`Matroid::from_bases`] but takes the ground set size, so the
    /// empty ground set is representable.
    pub fn with_ground_size<I>(ground_size: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_ground(ground_size)?;
        let ground = Subset::full(ground_size);
        let bases: Vec<Subset> = bases.into_iter().collect();
        let Some(first) = bases.first() else {
            return Err(Error::EmptyBases);
        };
        for &b in &bases {
            if !b.is_subset(ground) {
                return Err(Error::SubsetOutOfRange {
                    subset: b,
                    ground_size,
                });
            }
            if b.len() != first.len() {
                return Err(Error::UnequalCardinality(first.len(), b.len()));
            }
        }
        let m = Matroid::from_valid_bases(ground_size, bases);
        m.check_exchange()?;
        Ok(m)
    }

    /// Skips validation; callers guarantee a nonempty, equicardinal family
    /// satisfying the exchange axiom.
    pub(crate) fn from_valid_bases(ground_size: usize, bases: Vec<Subset>) -> Matroid {
        let basis_set: HashSet<Subset> = bases.into_iter().collect();
        let mut bases: Vec<Subset> = basis_set.iter().copied().collect();
        bases.sort();
        let rank = bases[0].len();
        Matroid {
            ground_size,
            rank,
            bases,
            basis_set,
            circuits: OnceLock::new(),
            flats: OnceLock::new(),
        }
    }

    fn check_exchange(&self) -> Result<()> {
        for &a in &self.bases {
            for &b in &self.bases {
                for x in a.difference(b) {
                    let reduced = a.without(x);
                    let ok = b
                        .difference(a)
                        .iter()
                        .any(|y| self.basis_set.contains(&reduced.with(y)));
                    if !ok {
                        return Err(Error::ExchangeAxiomViolated { a, b, element: x });
                    }
                }
            }
        }
        Ok(())
    }

    /// `U_{r, size}`: every `r`-subset of `{0, ..., size - 1}` is a basis.
    pub fn uniform(r: usize, size: usize) -> Result<Matroid> {
        check_ground(size)?;
        if r > size {
            return Err(Error::InvalidRank {
                rank: r,
                ground_size: size,
            });
        }
        let bases = (0..size)
            .combinations(r)
            .map(|c| c.into_iter().collect())
            .collect();
        Ok(Matroid::from_valid_bases(size, bases))
    }

    /// Cycle matroid of a multigraph; edge `i` of the list is element `i`.
    /// Loops and parallel edges are allowed.
    pub fn graphic(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        check_ground(edges.len())?;
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= num_vertices {
                    return Err(Error::InvalidVertexIndex {
                        vertex,
                        num_vertices,
                    });
                }
            }
        }
        let mut forests = Vec::new();
        let mut parent: Vec<usize> = (0..num_vertices).collect();
        let target = graph_rank(num_vertices, edges);
        spanning_forests(edges, 0, target, Subset::EMPTY, &mut parent, &mut forests);
        Ok(Matroid::from_valid_bases(edges.len(), forests))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.ground_size)
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.basis_set.contains(&s)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.bases.iter().any(|&b| s.is_subset(b))
    }

    /// `max |S ∩ B|` over bases `B`.
    pub fn rank_of(&self, s: Subset) -> usize {
        let cap = s.len().min(self.rank);
        let mut best = 0;
        for b in &self.bases {
            best = best.max(s.intersection(*b).len());
            if best == cap {
                break;
            }
        }
        best
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        self.ground()
            .difference(s)
            .iter()
            .filter(|&x| self.rank_of(s.with(x)) == r)
            .fold(s, |acc, x| acc.with(x))
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// Flats covering `flat` in the lattice of flats, in lexicographic order.
    pub fn covers(&self, flat: Subset) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .ground()
            .difference(flat)
            .iter()
            .map(|e| self.closure(flat.with(e)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        out.sort();
        out
    }

    /// All flats, sorted by rank and then lexicographically.
    pub fn flats(&self) -> &[Subset] {
        self.flats.get_or_init(|| {
            let bottom = self.closure(Subset::EMPTY);
            let mut seen = HashSet::from([bottom]);
            let mut queue = VecDeque::from([bottom]);
            while let Some(f) = queue.pop_front() {
                for g in self.covers(f) {
                    if seen.insert(g) {
                        queue.push_back(g);
                    }
                }
            }
            let mut flats: Vec<Subset> = seen.into_iter().collect();
            flats.sort_by_cached_key(|&f| (self.rank_of(f), f));
            flats
        })
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        match self.rank {
            0 => Vec::new(),
            r => self
                .flats()
                .iter()
                .copied()
                .filter(|&f| self.rank_of(f) == r - 1)
                .collect(),
        }
    }

    /// Minimal dependent sets, in lexicographic order. Every circuit is the
    /// fundamental circuit of some element outside some basis.
    pub fn circuits(&self) -> &[Subset] {
        self.circuits.get_or_init(|| {
            let mut found = BTreeSet::new();
            for &b in &self.bases {
                for e in self.ground().difference(b) {
                    let c = b
                        .iter()
                        .filter(|&x| self.is_basis(b.without(x).with(e)))
                        .fold(Subset::singleton(e), |acc, x| acc.with(x));
                    found.insert(c);
                }
            }
            found.into_iter().collect()
        })
    }

    pub fn dual(&self) -> Matroid {
        let ground = self.ground();
        Matroid::from_valid_bases(
            self.ground_size,
            self.bases.iter().map(|&b| ground.difference(b)).collect(),
        )
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.ground_size {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: e,
                ground_size: self.ground_size,
            })
        }
    }

    pub fn is_loop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok(self.bases.iter().all(|b| !b.contains(e)))
    }

    pub fn is_coloop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok(self.bases.iter().all(|b| b.contains(e)))
    }

    fn removal_relabeling(&self, e: usize) -> Relabeling {
        Relabeling::new((0..self.ground_size).filter(|&i| i != e).collect())
    }

    /// `M / e` on `{0, ..., n - 1}`. Contracting a loop is deleting it.
    pub fn contract(&self, e: usize) -> Result<(Matroid, Relabeling)> {
        if self.is_loop(e)? {
            return self.delete(e);
        }
        let bases = self
            .bases
            .iter()
            .filter(|b| b.contains(e))
            .map(|&b| squeeze_out(b.without(e), e))
            .collect();
        Ok((
            Matroid::from_valid_bases(self.ground_size - 1, bases),
            self.removal_relabeling(e),
        ))
    }

    /// `M \ e` on `{0, ..., n - 1}`. Deleting a coloop is contracting it.
    pub fn delete(&self, e: usize) -> Result<(Matroid, Relabeling)> {
        let bases = if self.is_coloop(e)? {
            self.bases
                .iter()
                .map(|&b| squeeze_out(b.without(e), e))
                .collect()
        } else {
            self.bases
                .iter()
                .filter(|b| !b.contains(e))
                .map(|&b| squeeze_out(b, e))
                .collect()
        };
        Ok((
            Matroid::from_valid_bases(self.ground_size - 1, bases),
            self.removal_relabeling(e),
        ))
    }

    /// `M/e ⊕ U_{0,{e}}`: the contraction with `e` kept as a loop, on the
    /// original ground set.
    pub fn contraction_with_loop(&self, e: usize) -> Result<Matroid> {
        if self.is_loop(e)? {
            return Ok(Matroid::from_valid_bases(self.ground_size, self.bases.clone()));
        }
        let bases = self
            .bases
            .iter()
            .filter(|b| b.contains(e))
            .map(|&b| b.without(e))
            .collect();
        Ok(Matroid::from_valid_bases(self.ground_size, bases))
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        let target: Subset = perm.iter().collect();
        if perm.len() != self.ground_size || target != self.ground() {
            return Err(Error::SubsetOutOfRange {
                subset: target,
                ground_size: self.ground_size,
            });
        }
        let bases = self.bases.iter().map(|b| b.map(|e| perm[e])).collect();
        Ok(Matroid::from_valid_bases(self.ground_size, bases))
    }

    /// Relabels so that `e` becomes `0` and the other elements keep their
    /// relative order.
    pub fn with_special_first(&self, e: usize) -> Result<(Matroid, Relabeling)> {
        self.check_element(e)?;
        let old_of_new: Vec<usize> = std::iter::once(e)
            .chain((0..self.ground_size).filter(|&i| i != e))
            .collect();
        let mut new_of_old = vec![0; self.ground_size];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        Ok((self.relabel(&new_of_old)?, Relabeling::new(old_of_new)))
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn graph_rank(num_vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..num_vertices).collect();
    let mut rank = 0;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

fn spanning_forests(
    edges: &[(usize, usize)],
    idx: usize,
    target: usize,
    chosen: Subset,
    parent: &mut Vec<usize>,
    out: &mut Vec<Subset>,
) {
    if chosen.len() == target {
        out.push(chosen);
        return;
    }
    if edges.len() - idx < target - chosen.len() {
        return;
    }
    let (u, v) = edges[idx];
    let (a, b) = (find(parent, u), find(parent, v));
    if a != b {
        let saved = parent.clone();
        parent[a] = b;
        spanning_forests(edges, idx + 1, target, chosen.with(idx), parent, out);
        *parent = saved;
    }
    spanning_forests(edges, idx + 1, target, chosen, parent, out);
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            ground_size: self.ground_size,
            rank: self.rank,
            bases: self.bases.clone(),
            basis_set: self.basis_set.clone(),
            circuits: self.circuits.clone(),
            flats: self.flats.clone(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground_size == other.ground_size && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground_size", &self.ground_size)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
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
    fn from_bases_examples() {
        let u12 = Matroid::from_bases(1, [s(&[0]), s(&[1])]).unwrap();
        assert_eq!(u12, Matroid::uniform(1, 2).unwrap());
        let u24 = Matroid::from_bases(3, (0..4).combinations(2).map(|c| s(&c))).unwrap();
        assert_eq!(u24, Matroid::uniform(2, 4).unwrap());
        assert_eq!(
            Matroid::from_bases(1, [s(&[0]), s(&[0, 1])]),
            Err(Error::UnequalCardinality(1, 2))
        );
        assert_eq!(Matroid::from_bases(2, []), Err(Error::EmptyBases));
        assert!(matches!(
            Matroid::from_bases(1, [s(&[3])]),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn exchange_violation_is_reported() {
        // {0,1} and {2,3} alone: removing 0 from {0,1} cannot be repaired.
        let err = Matroid::from_bases(3, [s(&[0, 1]), s(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::ExchangeAxiomViolated { .. }));
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().bases().len(), 6);
        let u03 = Matroid::uniform(0, 3).unwrap();
        assert_eq!(u03.bases(), &[Subset::EMPTY]);
        assert!((0..3).all(|e| u03.is_loop(e).unwrap()));
        let u33 = Matroid::uniform(3, 3).unwrap();
        assert_eq!(u33.bases(), &[s(&[0, 1, 2])]);
        assert!((0..3).all(|e| u33.is_coloop(e).unwrap()));
        assert!(matches!(
            Matroid::uniform(4, 3),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn graphic_examples() {
        let t = triangle();
        assert_eq!(t, Matroid::uniform(2, 3).unwrap());
        let loop_graph = Matroid::graphic(2, &[(0, 1), (1, 1)]).unwrap();
        assert!(loop_graph.is_loop(1).unwrap());
        assert!(matches!(
            Matroid::graphic(2, &[(0, 2)]),
            Err(Error::InvalidVertexIndex { vertex: 2, .. })
        ));
        let parallel = Matroid::graphic(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(parallel, Matroid::uniform(1, 2).unwrap());
    }

    #[test]
    fn rank_and_closure() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.rank_of(s(&[0])), 1);
        assert_eq!(u24.rank_of(s(&[0, 1, 2])), 2);
        assert_eq!(triangle().rank_of(s(&[0, 1, 2])), 2);
        assert_eq!(u24.closure(s(&[2])), s(&[2]));
        assert_eq!(triangle().closure(s(&[0, 1])), s(&[0, 1, 2]));
        assert_eq!(u24.closure(u24.ground()), u24.ground());
    }

    #[test]
    fn flats_and_circuits() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let expected: Vec<Subset> = (0..4).combinations(3).map(|c| s(&c)).collect();
        assert_eq!(u24.circuits(), expected.as_slice());
        let flats = u24.flats();
        assert_eq!(flats.len(), 6);
        assert_eq!(flats[0], Subset::EMPTY);
        assert_eq!(&flats[1..5], &[s(&[0]), s(&[1]), s(&[2]), s(&[3])]);
        assert_eq!(flats[5], u24.ground());
        assert_eq!(triangle().circuits(), &[s(&[0, 1, 2])]);
    }

    #[test]
    fn dual_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.dual(), u24);
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.dual(), u12);
        assert_eq!(triangle().dual(), Matroid::uniform(1, 3).unwrap());
    }

    #[test]
    fn minors() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let (c, map) = u24.contract(0).unwrap();
        assert_eq!(c, Matroid::uniform(1, 3).unwrap());
        assert_eq!(map.old_of_new(), &[1, 2, 3]);
        let (d, _) = u24.delete(0).unwrap();
        assert_eq!(d, Matroid::uniform(2, 3).unwrap());
        let (t, _) = triangle().contract(0).unwrap();
        assert_eq!(t, Matroid::uniform(1, 2).unwrap());
        assert!(matches!(u24.contract(4), Err(Error::InvalidElement { .. })));
    }

    #[test]
    fn loop_and_coloop_minors_degenerate_gracefully() {
        let m = Matroid::graphic(2, &[(0, 1), (1, 1)]).unwrap();
        let (c, _) = m.contract(1).unwrap();
        assert_eq!(c, Matroid::uniform(1, 1).unwrap());
        let (d, _) = m.delete(0).unwrap();
        assert_eq!(d, Matroid::uniform(0, 1).unwrap());
    }

    #[test]
    fn special_first_relabeling() {
        let m = Matroid::graphic(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let (c, map) = m.with_special_first(2).unwrap();
        assert_eq!(map.old_of_new(), &[2, 0, 1]);
        // old {1,2} parallel -> new {0,2}
        assert!(!c.is_independent(s(&[0, 2])));
        assert!(c.is_basis(s(&[0, 1])));
        assert_eq!(map.new_label(1), Some(2));
    }

    #[test]
    fn loop_bit_errors() {
        assert!(matches!(
            Matroid::uniform(1, 2).unwrap().is_loop(5),
            Err(Error::InvalidElement { .. })
        ));
    }
}
