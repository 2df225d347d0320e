//! Sparse integer polynomials in `t_0, ..., t_{k-1}` and piecewise
//! polynomials on the chambers of the permutohedral fan.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Exponent vector → nonzero integer coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultivariatePolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultivariatePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        MultivariatePolynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: i64) -> Self {
        let mut p = MultivariatePolynomial::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        MultivariatePolynomial::constant(num_vars, 1)
    }

    /// The variable `t_i`.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut exp = vec![0; num_vars];
        exp[i] = 1;
        let mut p = MultivariatePolynomial::zero(num_vars);
        p.add_term(exp, 1);
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += c;
        if *entry == 0 {
            // Remove the cancelled monomial.
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = MultivariatePolynomial::zero(self.num_vars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Product of `sign * t_i` over `vars`.
    pub fn monomial_product(num_vars: usize, vars: impl IntoIterator<Item = usize>, sign: i64) -> Self {
        vars.into_iter()
            .fold(MultivariatePolynomial::one(num_vars), |acc, i| {
                &acc * &MultivariatePolynomial::var(num_vars, i).scale(sign)
            })
    }

    /// The `k`-th elementary symmetric polynomial in `{sign * t_i : i ∈ vars}`.
    pub fn elementary_symmetric(num_vars: usize, k: usize, vars: &[usize], sign: i64) -> Self {
        // e[j] after processing a prefix of vars; e_j(v, rest) = e_j(rest) + v e_{j-1}(rest).
        let mut e = vec![MultivariatePolynomial::zero(num_vars); k + 1];
        e[0] = MultivariatePolynomial::one(num_vars);
        for &i in vars {
            let v = MultivariatePolynomial::var(num_vars, i).scale(sign);
            for j in (1..=k).rev() {
                let term = &e[j - 1] * &v;
                e[j] = &e[j] + &term;
            }
        }
        e.swap_remove(k)
    }

    /// Substitutes `t_from := t_to`.
    pub fn substitute(&self, from: usize, to: usize) -> Self {
        let mut out = MultivariatePolynomial::zero(self.num_vars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e[to] += e[from];
            e[from] = 0;
            out.add_term(e, c);
        }
        out
    }

    /// `self / t_i` when every monomial contains `t_i`.
    pub fn divide_by_var(&self, i: usize) -> Option<Self> {
        let mut out = MultivariatePolynomial::zero(self.num_vars);
        for (e, &c) in &self.terms {
            if e[i] == 0 {
                return None;
            }
            let mut e = e.clone();
            e[i] -= 1;
            out.add_term(e, c);
        }
        Some(out)
    }
}

impl Add for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn add(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn sub(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        self + &-rhs
    }
}

impl Neg for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn neg(self) -> MultivariatePolynomial {
        self.scale(-1)
    }
}

impl Mul for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;

    fn mul(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = MultivariatePolynomial::zero(self.num_vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl MultivariatePolynomial {
    /// Renders with variable `i` printed as `name(i)`.
    pub fn display_with<'a, F: Fn(usize) -> String + 'a>(&'a self, name: F) -> impl fmt::Display + 'a {
        Named { poly: self, name }
    }
}

struct Named<'a, F> {
    poly: &'a MultivariatePolynomial,
    name: F,
}

impl<F: Fn(usize) -> String> fmt::Display for Named<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_terms(f, &self.name)
    }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, &|i| format!("t{i}"))
    }
}

impl MultivariatePolynomial {
    fn write_terms(&self, f: &mut fmt::Formatter<'_>, name: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { name(i) } else { format!("{}^{p}", name(i)) })
                .collect();
            let a = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One polynomial per permutation of `{0, ..., k-1}`, permutations in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    chambers: Vec<(Vec<usize>, MultivariatePolynomial)>,
    index: HashMap<Vec<usize>, usize>,
}

/// Adjacent chambers whose polynomials disagree on the shared facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityViolation {
    pub permutation: Vec<usize>,
    /// The facet swaps positions `position` and `position + 1`.
    pub position: usize,
}

impl PiecewisePolynomial {
    pub fn new(chambers: Vec<(Vec<usize>, MultivariatePolynomial)>) -> Self {
        let index = chambers
            .iter()
            .enumerate()
            .map(|(k, (perm, _))| (perm.clone(), k))
            .collect();
        PiecewisePolynomial { chambers, index }
    }

    pub fn chambers(&self) -> &[(Vec<usize>, MultivariatePolynomial)] {
        &self.chambers
    }

    pub fn get(&self, perm: &[usize]) -> Option<&MultivariatePolynomial> {
        self.index.get(perm).map(|&k| &self.chambers[k].1)
    }

    /// Chambers `σ` and `σ'` that differ by swapping entries `k` and `k+1`
    /// share the facet `t_{σ(k)} = t_{σ(k+1)}`; their polynomials must agree
    /// after that substitution.
    pub fn continuity_violations(&self) -> Vec<ContinuityViolation> {
        let mut out = Vec::new();
        for (perm, f) in &self.chambers {
            for k in 0..perm.len().saturating_sub(1) {
                let mut other = perm.clone();
                other.swap(k, k + 1);
                if other < *perm {
                    continue;
                }
                let Some(g) = self.get(&other) else {
                    out.push(ContinuityViolation {
                        permutation: perm.clone(),
                        position: k,
                    });
                    continue;
                };
                let (a, b) = (perm[k], perm[k + 1]);
                if f.substitute(a, b) != g.substitute(a, b) {
                    out.push(ContinuityViolation {
                        permutation: perm.clone(),
                        position: k,
                    });
                }
            }
        }
        out
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity_violations().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let t0 = MultivariatePolynomial::var(3, 0);
        let t1 = MultivariatePolynomial::var(3, 1);
        let p = &(&t0 + &t1) * &(&t0 - &t1);
        assert_eq!(p.to_string(), "t0^2 - t1^2");
        assert!((&p - &p).is_zero());
        assert_eq!(p.substitute(1, 0), MultivariatePolynomial::zero(3));
    }

    #[test]
    fn elementary_symmetric_values() {
        let e2 = MultivariatePolynomial::elementary_symmetric(3, 2, &[0, 1, 2], 1);
        assert_eq!(e2.to_string(), "t0*t1 + t0*t2 + t1*t2");
        let e0 = MultivariatePolynomial::elementary_symmetric(3, 0, &[0, 1], -1);
        assert_eq!(e0, MultivariatePolynomial::one(3));
        let e3 = MultivariatePolynomial::elementary_symmetric(3, 3, &[0, 1], 1);
        assert!(e3.is_zero());
        let neg = MultivariatePolynomial::elementary_symmetric(3, 1, &[2], -1);
        assert_eq!(neg.to_string(), "-t2");
    }

    #[test]
    fn division_by_variable() {
        let t0 = MultivariatePolynomial::var(2, 0);
        let t1 = MultivariatePolynomial::var(2, 1);
        let p = &t0 * &(&t1 + &MultivariatePolynomial::one(2));
        assert_eq!(p.divide_by_var(0), Some(&t1 + &MultivariatePolynomial::one(2)));
        assert_eq!(p.divide_by_var(1), None);
        assert_eq!(
            MultivariatePolynomial::zero(2).divide_by_var(0),
            Some(MultivariatePolynomial::zero(2))
        );
    }
}
