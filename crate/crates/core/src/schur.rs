//! Littlewood-Richardson coefficients by counting ballot tableaux, and a
//! polynomial-arithmetic check of Schur products.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::tableau::{enumerate_ballot, enumerate_ssyt, Letter, Partition, SkewShape};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse polynomial over the integers in a fixed number of variables,
/// keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], BigInt::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.n_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_default();
        *slot += c;
        if slot.is_zero() {
            // Drop cancelled terms so equality is structural.
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let mut out = Self::zero(self.n_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Degree of every term, if all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Polynomial {
        let mut out = Self::zero(self.n_vars);
        for (e, v) in &self.terms {
            let mut f = vec![0; self.n_vars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, v.clone());
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                *acc.entry(e).or_default() += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Polynomial {
            n_vars: self.n_vars,
            terms: acc,
        }
    }
}

/// The Schur polynomial `s_lam(x_1, ..., x_n)` as the content generating
/// function of semistandard tableaux of shape `lam`.
pub fn schur_polynomial(lam: &Partition, n_vars: usize) -> Polynomial {
    let mut out = Polynomial::zero(n_vars);
    let shape = SkewShape::normal(lam.clone());
    for t in enumerate_ssyt(&shape, n_vars as Letter) {
        let mut e = vec![0u32; n_vars];
        for (_, x) in t.cells() {
            e[x as usize - 1] += 1;
        }
        out.add_term(e, BigInt::one());
    }
    out
}

/// Number of ballot tableaux of shape `lambda/mu` with content `nu`; zero
/// when the shapes do not fit.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    enumerate_ballot(&shape, nu).len() as u64
}

/// Expansion `s_mu s_nu = sum c^lambda s_lambda`, zero terms omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `sum c^lambda s_lambda` as a polynomial.
    pub fn to_polynomial(&self, n_vars: usize) -> Polynomial {
        self.terms
            .iter()
            .fold(Polynomial::zero(n_vars), |acc, (lam, &c)| {
                &acc + &schur_polynomial(lam, n_vars).scale(&BigInt::from(c))
            })
    }
}

/// One `lambda = c` term per line, largest `lambda` first.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (lam, c) in self.terms.iter().rev() {
            writeln!(f, "{lam} {c}")?;
        }
        Ok(())
    }
}

/// All `lambda` with at most `max_rows` rows and `c^lambda_{mu nu} > 0`.
pub fn schur_product(mu: &Partition, nu: &Partition, max_rows: usize) -> SchurExpansion {
    let mut terms = BTreeMap::new();
    for lam in Partition::all_of(mu.size() + nu.size()) {
        if lam.length() > max_rows || !lam.contains(mu) {
            continue;
        }
        let c = lr_coefficient(&lam, mu, nu);
        if c > 0 {
            terms.insert(lam, c);
        }
    }
    SchurExpansion { terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[])), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2, 1]), &p(&[])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[3]), &p(&[])), 0);
    }

    #[test]
    fn product_examples() {
        let e = schur_product(&p(&[]), &p(&[2, 1]), 3);
        assert_eq!(
            e.terms.into_iter().collect::<Vec<_>>(),
            vec![(p(&[2, 1]), 1)]
        );
        let e = schur_product(&p(&[1]), &p(&[1]), 2);
        assert_eq!(e.terms.len(), 2);
        assert_eq!(schur_product(&p(&[1]), &p(&[1]), 1).terms.len(), 1);
    }

    #[test]
    fn product_matches_polynomials() {
        let (mu, nu) = (p(&[2, 1]), p(&[2, 1]));
        let e = schur_product(&mu, &nu, 4);
        assert_eq!(e.terms[&p(&[3, 2, 1])], 2);
        let lhs = &schur_polynomial(&mu, 4) * &schur_polynomial(&nu, 4);
        assert_eq!(lhs, e.to_polynomial(4));
    }

    #[test]
    fn schur_polynomial_properties() {
        let s = schur_polynomial(&p(&[2, 1]), 3);
        assert_eq!(s.homogeneous_degree(), Some(3));
        assert_eq!(s.coefficient(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(s.permute(&[2, 0, 1]), s);
        assert_eq!(schur_polynomial(&p(&[]), 2), Polynomial::one(2));
        assert_eq!(schur_polynomial(&p(&[1, 1, 1]), 2), Polynomial::zero(2));
    }
}
