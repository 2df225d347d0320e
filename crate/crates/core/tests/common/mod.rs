//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use tropcrit::rational::int;
use tropcrit::{Matroid, Rational, RationalVector, SetPartition, Subset};

pub fn s(v: &[usize]) -> Subset {
    v.iter().collect()
}

pub enum LinearSolution {
    Inconsistent,
    /// A particular solution (free variables set to zero) and the nullity.
    Solved { values: Vec<Rational>, nullity: usize },
}

/// Gauss–Jordan elimination over the rationals.
pub fn solve_linear(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> LinearSolution {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
                rhs[i] -= &f * &pivot_rhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut values = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        values[c] = rhs[i].clone();
    }
    LinearSolution::Solved {
        values,
        nullity: cols - pivots.len(),
    }
}

/// The system `x + y = w`, `x_0 = 0`, `x` constant on blocks of `λ`, `y`
/// constant on blocks of `μ`, in unknowns `x_0..x_n, y_1..y_n`.
pub fn partition_system(
    lambda: &SetPartition,
    mu: &SetPartition,
    w: &RationalVector,
) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = w.len();
    let cols = 2 * n + 1;
    let xi = |e: usize| e;
    let yi = |e: usize| n + e;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut row = |entries: &[(usize, i64)], b: Rational| {
        let mut r = vec![Rational::zero(); cols];
        for &(c, v) in entries {
            r[c] += int(v);
        }
        rows.push(r);
        rhs.push(b);
    };
    for e in 1..=n {
        row(&[(xi(e), 1), (yi(e), 1)], w[e].clone());
    }
    row(&[(xi(0), 1)], Rational::zero());
    for b in lambda.blocks() {
        let v: Vec<usize> = b.iter().collect();
        for p in v.windows(2) {
            row(&[(xi(p[0]), 1), (xi(p[1]), -1)], Rational::zero());
        }
    }
    for b in mu.blocks() {
        let v: Vec<usize> = b.iter().collect();
        for p in v.windows(2) {
            row(&[(yi(p[0]), 1), (yi(p[1]), -1)], Rational::zero());
        }
    }
    (rows, rhs)
}

/// Splits a solution vector of [`partition_system`] into `(x on 0..n, y on 1..n)`.
pub fn split_solution(values: &[Rational], n: usize) -> (RationalVector, RationalVector) {
    (
        RationalVector::new(0, values[..=n].to_vec()),
        RationalVector::new(1, values[n + 1..].to_vec()),
    )
}

/// Random set partition of `ground` into at most `max_blocks` nonempty blocks.
pub fn random_partition<R: Rng>(rng: &mut R, ground: Subset, max_blocks: usize) -> SetPartition {
    let k = rng.random_range(1..=max_blocks.max(1));
    let mut blocks = vec![Subset::EMPTY; k];
    for e in ground.iter() {
        blocks[rng.random_range(0..k)].insert(e);
    }
    SetPartition::new(ground, blocks.into_iter().filter(|b| !b.is_empty())).unwrap()
}

/// Random partition with exactly `k` nonempty blocks.
pub fn random_partition_with_blocks<R: Rng>(rng: &mut R, ground: Subset, k: usize) -> SetPartition {
    let mut elems: Vec<usize> = ground.iter().collect();
    elems.shuffle(rng);
    let mut blocks = vec![Subset::EMPTY; k];
    for (i, &e) in elems.iter().enumerate() {
        let b = if i < k { i } else { rng.random_range(0..k) };
        blocks[b].insert(e);
    }
    SetPartition::new(ground, blocks).unwrap()
}

pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> RationalVector {
    let vals: Vec<i64> = (0..n).map(|_| rng.random_range(-1_000_000..=1_000_000)).collect();
    RationalVector::from_integers(1, &vals)
}

/// nbc by definition: no broken circuit `C - min C` inside `b`.
pub fn is_nbc_by_broken_circuits(m: &Matroid, b: Subset) -> bool {
    m.circuits()
        .iter()
        .all(|&c| !c.without(c.first().unwrap()).is_subset(b))
}

/// Characteristic polynomial by deletion and contraction, low degree first.
pub fn char_poly_deletion_contraction(m: &Matroid) -> Vec<i64> {
    fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
        let len = a.len().max(b.len());
        (0..len)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect()
    }
    fn trim(mut v: Vec<i64>) -> Vec<i64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    if m.ground_size() == 0 {
        return vec![1];
    }
    let e = m.ground_size() - 1;
    if m.is_loop(e).unwrap() {
        return Vec::new();
    }
    let (c, _) = m.contract(e).unwrap();
    let pc = char_poly_deletion_contraction(&c);
    if m.is_coloop(e).unwrap() {
        // (t - 1) χ(M/e)
        let mut shifted = vec![0];
        shifted.extend(&pc);
        return trim(sub(&shifted, &pc));
    }
    let (d, _) = m.delete(e).unwrap();
    trim(sub(&char_poly_deletion_contraction(&d), &pc))
}

/// Spanning tree count via the reduced Laplacian determinant.
pub fn spanning_tree_count(num_vertices: usize, edges: &[(usize, usize)]) -> i64 {
    let k = num_vertices - 1;
    let mut lap = vec![vec![Rational::zero(); k]; k];
    for &(u, v) in edges {
        if u == v {
            continue;
        }
        for (a, b) in [(u, v), (v, u)] {
            if a < k {
                lap[a][a] += int(1);
                if b < k {
                    lap[a][b] -= int(1);
                }
            }
        }
    }
    let mut det = Rational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !lap[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            lap.swap(p, c);
            det = -det;
        }
        det *= &lap[c][c];
        let pivot_row = lap[c].clone();
        for row in lap.iter_mut().skip(c + 1) {
            let f = &row[c] / &pivot_row[c];
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v -= &f * p;
            }
        }
    }
    det.to_integer().try_into().unwrap()
}

/// Random permutation of `0..size`.
pub fn random_permutation<R: Rng>(rng: &mut R, size: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..size).collect();
    p.shuffle(rng);
    p
}

#[derive(Debug, Default)]
pub struct PairStats {
    pub trees: usize,
    pub cyclic_witnessed: usize,
    pub cyclic_degenerate: usize,
    pub forests: usize,
}

/// Random `(λ, μ)` on `{0..n}` and `{1..n}`, checked against the
/// three-way classification. Returns a description of the first failure.
pub fn check_partition_pairs<R: Rng>(rng: &mut R, n: usize, count: usize) -> Result<PairStats, String> {
    use tropcrit::partitions::{
        generic_infeasibility_witness, intersection_graph, solve_forest, solve_tree, GraphKind,
    };
    let full = Subset::range_inclusive(0, n);
    let right = Subset::range_inclusive(1, n);
    let mut stats = PairStats::default();
    for k in 0..count {
        // Every third pair has |λ| + |μ| = n + 1 so that trees are common.
        let (lambda, mu) = if k % 3 == 0 {
            let a = rng.random_range(1..=n);
            let b = n + 1 - a;
            (
                random_partition_with_blocks(rng, full, a),
                random_partition_with_blocks(rng, right, b),
            )
        } else {
            (random_partition(rng, full, n + 1), random_partition(rng, right, n))
        };
        let w = random_weights(rng, n);
        let graph = intersection_graph(&lambda, &mu).map_err(|e| e.to_string())?;
        let class = graph.classify();
        let ctx = || format!("λ={lambda} μ={mu} w={:?}", w.to_strings());
        let edges_plus_one = lambda.len() + mu.len() == n + 1;
        if class.kind() == GraphKind::Tree && !edges_plus_one {
            return Err(format!("tree with wrong vertex count: {}", ctx()));
        }
        if edges_plus_one && (class.kind() == GraphKind::Tree) != class.connected {
            return Err(format!("tree iff connected failed: {}", ctx()));
        }
        let (rows, rhs) = partition_system(&lambda, &mu, &w);
        let reference = solve_linear(rows, rhs);
        match class.kind() {
            GraphKind::Tree => {
                let sol = solve_tree(&lambda, &mu, &w).map_err(|e| e.to_string())?;
                let LinearSolution::Solved { values, nullity } = reference else {
                    return Err(format!("reference says inconsistent: {}", ctx()));
                };
                if nullity != 0 {
                    return Err(format!("reference says not unique: {}", ctx()));
                }
                let (x, y) = split_solution(&values, n);
                if sol.x != x || sol.y != y {
                    return Err(format!("solution differs from reference: {}", ctx()));
                }
                for (i, b) in lambda.blocks().iter().enumerate() {
                    let v = &sol.x[b.first().unwrap()];
                    if sol.x_paths[i].evaluate(&w) != *v {
                        return Err(format!("x path mismatch: {}", ctx()));
                    }
                }
                for (j, b) in mu.blocks().iter().enumerate() {
                    let v = &sol.y[b.first().unwrap()];
                    if sol.y_paths[j].evaluate(&w) != *v {
                        return Err(format!("y path mismatch: {}", ctx()));
                    }
                }
                stats.trees += 1;
            }
            GraphKind::HasCycle => {
                match generic_infeasibility_witness(&lambda, &mu, &w).map_err(|e| e.to_string())? {
                    Some(cycle) => {
                        if cycle.evaluate(&w).is_zero() {
                            return Err(format!("witness with zero sum: {}", ctx()));
                        }
                        if !matches!(reference, LinearSolution::Inconsistent) {
                            return Err(format!("witness but system solvable: {}", ctx()));
                        }
                        stats.cyclic_witnessed += 1;
                    }
                    None => stats.cyclic_degenerate += 1,
                }
            }
            GraphKind::Disconnected => {
                let sol = solve_forest(&lambda, &mu, &w).map_err(|e| e.to_string())?;
                let LinearSolution::Solved { nullity, .. } = reference else {
                    return Err(format!("forest system inconsistent: {}", ctx()));
                };
                if nullity != sol.free_components.len() || nullity == 0 {
                    return Err(format!("free directions {} vs nullity {nullity}: {}", sol.free_components.len(), ctx()));
                }
                for a in &sol.free_components {
                    for r in [1i64, -2] {
                        let r = int(r);
                        let mut x = sol.x.clone();
                        let mut y = sol.y.clone();
                        for e in a.iter() {
                            x.set(e, &x[e] + &r);
                            y.set(e, &y[e] - &r);
                        }
                        let ok = x[0].is_zero()
                            && lambda.is_block_constant(&x)
                            && mu.is_block_constant(&y)
                            && (1..=n).all(|e| &x[e] + &y[e] == w[e]);
                        if !ok {
                            return Err(format!("shift family fails for A={a}: {}", ctx()));
                        }
                    }
                }
                stats.forests += 1;
            }
        }
    }
    Ok(stats)
}

/// `w_a + Σ_{i<a} ε_i w_i < w_b + Σ_{j<b} δ_j w_j` for all `a < b ≤ n` and
/// all sign patterns, with `w = (1, 10, 100, ...)`.
pub fn check_omega(n: usize) -> Result<usize, String> {
    let w: Vec<i64> = (0..n as u32).map(|k| 10i64.pow(k)).collect();
    let signed_sums = |len: usize| -> Vec<i64> {
        let mut sums = vec![0i64];
        for &wi in &w[..len] {
            sums = sums
                .iter()
                .flat_map(|&s| [s - wi, s, s + wi])
                .collect();
        }
        sums
    };
    let mut checked = 0;
    for b in 2..=n {
        let rhs = signed_sums(b - 1);
        for a in 1..b {
            let lhs = signed_sums(a - 1);
            for l in &lhs {
                for r in &rhs {
                    if w[a - 1] + l >= w[b - 1] + r {
                        return Err(format!("a={a} b={b}: {} >= {}", w[a - 1] + l, w[b - 1] + r));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Circuit criterion against flag search on random small-integer vectors,
/// with and without an added constant. Returns `(inside, outside)` counts.
pub fn check_bergman_equivalence<R: Rng>(
    rng: &mut R,
    m: &Matroid,
    count: usize,
) -> Result<(usize, usize), String> {
    use tropcrit::bergman::{bergman_membership_via_flags, in_bergman_fan};
    let limits = tropcrit::Limits::default();
    let size = m.ground_size();
    let (mut inside, mut outside) = (0, 0);
    for k in 0..count {
        // Few distinct values make ties, and so membership, common.
        let range = 1 + (k % 4) as i64;
        let vals: Vec<i64> = (0..size).map(|_| rng.random_range(0..=range)).collect();
        let x = RationalVector::from_integers(0, &vals);
        let by_circuits = in_bergman_fan(m, &x);
        let by_flags = bergman_membership_via_flags(m, &x, &limits).map_err(|e| e.to_string())?;
        if by_circuits != by_flags {
            return Err(format!("x={vals:?}: circuits {by_circuits}, flags {by_flags}"));
        }
        let c = int(rng.random_range(-50..=50));
        let shifted = x.add_constant(&c);
        if in_bergman_fan(m, &shifted) != by_circuits
            || bergman_membership_via_flags(m, &shifted, &limits).map_err(|e| e.to_string())? != by_flags
        {
            return Err(format!("x={vals:?}: not invariant under adding {c}"));
        }
        if by_circuits {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    Ok((inside, outside))
}

/// Elements that are neither loops nor coloops.
pub fn special_candidates(m: &Matroid) -> Vec<usize> {
    m.ground()
        .iter()
        .filter(|&e| !m.is_loop(e).unwrap() && !m.is_coloop(e).unwrap())
        .collect()
}

/// Every oracle point for `(1, 10, ...)` comes from a β-nbc basis: its flags
/// are `F_M(B)` and `F_N(B^⊥)`.
pub fn check_oracle_flags_from_bnbc(a: &tropcrit::AffineMatroid) -> Result<usize, String> {
    use tropcrit::critical::critical_points_oracle;
    use tropcrit::invariants::{bnbc_bases, flag_of_basis};
    let m = a.matroid();
    let w = RationalVector::powers_of_ten(a.n());
    let outcome = critical_points_oracle(a, &w, &tropcrit::Limits::default()).map_err(|e| e.to_string())?;
    let points = outcome.points().ok_or("rapidly increasing w reported degenerate")?;
    let bnbc = bnbc_bases(m).map_err(|e| e.to_string())?;
    for p in points {
        if !bnbc.contains(&p.basis) {
            return Err(format!("oracle point with non-β-nbc minima {}", p.basis));
        }
        let flag = flag_of_basis(m, p.basis).map_err(|e| e.to_string())?;
        let co = tropcrit::AffineMatroid::lower(m.ground().difference(p.basis));
        let dual_flag = flag_of_basis(a.dual_contraction(), co)
            .map_err(|e| e.to_string())?
            .map(|e| e + 1);
        if p.flag != flag || p.dual_flag != dual_flag {
            return Err(format!("flags of oracle point {} are not F(B), F(B^⊥)", p.basis));
        }
    }
    Ok(points.len())
}

/// Continuity of every chamber-wise class of `m` with special element `0`.
pub fn check_taut_continuity(m: &Matroid) -> Result<usize, String> {
    use tropcrit::taut::{chern_q, chern_s_dual, class_affine_bergman, class_inverted_dual};
    let limits = tropcrit::Limits::default();
    let mut classes = Vec::new();
    for i in 0..=m.rank() {
        classes.push((format!("c{i}(S^v)"), chern_s_dual(m, i, &limits)));
    }
    for j in 0..=m.ground_size() - m.rank() {
        classes.push((format!("c{j}(Q)"), chern_q(m, j, &limits)));
    }
    if !m.is_loop(0).unwrap() && !m.is_coloop(0).unwrap() {
        let a = tropcrit::AffineMatroid::new(m.clone()).map_err(|e| e.to_string())?;
        classes.push(("[Σ(M,0)]".into(), class_affine_bergman(&a, &limits)));
        classes.push(("[-Σ_N]".into(), class_inverted_dual(&a, &limits)));
    }
    let count = classes.len();
    for (label, class) in classes {
        let class = class.map_err(|e| format!("{label}: {e}"))?;
        if let Some(v) = class.continuity_violations().first() {
            return Err(format!("{label} jumps across {:?} at {}", v.permutation, v.position));
        }
    }
    Ok(count)
}
