//! Sparse multivariate polynomials over a [`FieldSpec`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};

/// Default bound on the number of elements [`Polynomial::cone`] will materialize.
pub const DEFAULT_CONE_CAP: usize = 1_000_000;

/// An exponent vector.
///
/// `Ord` is graded lexicographic (total degree first, then lexicographic with
/// the first variable most significant). The coordinatewise partial order is
/// exposed through [`Monomial::dominates`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `self ≥ other` coordinatewise.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn strictly_dominates(&self, other: &Monomial) -> bool {
        self != other && self.dominates(other)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn with(&self, index: usize, exponent: u32) -> Monomial {
        let mut e = self.0.clone();
        e[index] = exponent;
        Monomial(e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}

/// Variable names and coefficient field shared by a family of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Arc<[String]>,
    spec: FieldSpec,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        spec: FieldSpec,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::BadVariables(format!("{v:?} is not a valid name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::BadVariables(format!("{v:?} appears twice")));
            }
        }
        Ok(Ring {
            vars: vars.into(),
            spec,
        })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: FieldValue) -> Result<Polynomial> {
        self.term(Monomial::one(self.arity()), c)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.spec.one())
            .expect("one lives in the ring's field")
    }

    /// The polynomial `x_index`.
    pub fn var(&self, index: usize) -> Result<Polynomial> {
        self.check_index(index)?;
        let m = Monomial::one(self.arity()).with(index, 1);
        self.term(m, self.spec.one())
    }

    /// `x_index - a`.
    pub fn linear(&self, index: usize, a: &FieldValue) -> Result<Polynomial> {
        self.var(index)?.sub(&self.constant(a.clone())?)
    }

    pub fn term(&self, m: Monomial, c: FieldValue) -> Result<Polynomial> {
        self.from_terms([(m, c)])
    }

    /// Sums the given terms; repeated monomials are combined and zeros dropped.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, FieldValue)>,
    ) -> Result<Polynomial> {
        let mut out = self.zero();
        for (m, c) in terms {
            if m.arity() != self.arity() {
                return Err(Error::ArityMismatch {
                    expected: self.arity(),
                    found: m.arity(),
                });
            }
            if c.spec() != self.spec {
                return Err(Error::IncompatibleField(self.spec, c.spec()));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.arity() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                arity: self.arity(),
            })
        }
    }

    fn check_point(&self, point: &[FieldValue]) -> Result<()> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: point.len(),
            });
        }
        match point.iter().find(|v| v.spec() != self.spec) {
            Some(v) => Err(Error::IncompatibleField(self.spec, v.spec())),
            None => Ok(()),
        }
    }

    fn check_same(&self, other: &Ring) -> Result<()> {
        if self.arity() != other.arity() {
            Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            })
        } else if self.spec != other.spec {
            Err(Error::IncompatibleField(self.spec, other.spec))
        } else if self.vars != other.vars {
            Err(Error::VariableMismatch)
        } else {
            Ok(())
        }
    }
}

/// A sparse polynomial: monomial → nonzero coefficient, iterated in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, FieldValue>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn spec(&self) -> FieldSpec {
        self.ring.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldValue)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: FieldValue) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldValue) -> Result<Polynomial> {
        if c.spec() != self.spec() {
            return Err(Error::IncompatibleField(self.spec(), c.spec()));
        }
        if c.is_zero() {
            return Ok(self.ring.zero());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn eval(&self, point: &[FieldValue]) -> Result<FieldValue> {
        self.ring.check_point(point)?;
        let powers: Vec<Vec<FieldValue>> = point
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut row = vec![self.spec().one()];
                for _ in 0..self.degree_in(i) {
                    let next = row.last().expect("nonempty") * a;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = self.spec().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Divides by `x_index - a`, returning `(g, h)` with `self = g·(x_index - a) + h`
    /// and `h` free of `x_index`.
    pub fn divide_by_linear(
        &self,
        index: usize,
        a: &FieldValue,
    ) -> Result<(Polynomial, Polynomial)> {
        self.ring.check_index(index)?;
        if a.spec() != self.spec() {
            return Err(Error::IncompatibleField(self.spec(), a.spec()));
        }
        // Group by the exponent vector with x_index removed; each group is a
        // univariate polynomial in x_index, handled by synthetic division.
        let mut groups: BTreeMap<Monomial, BTreeMap<u32, FieldValue>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let rest = m.with(index, 0);
            groups
                .entry(rest)
                .or_default()
                .insert(m.exponents()[index], c.clone());
        }
        let mut quotient = self.ring.zero();
        let mut remainder = self.ring.zero();
        let zero = self.spec().zero();
        for (rest, coeffs) in groups {
            let top = *coeffs.keys().next_back().expect("group is nonempty");
            let mut carry = zero.clone();
            for d in (1..=top).rev() {
                let c = coeffs.get(&d).unwrap_or(&zero);
                carry = c + &(a * &carry);
                quotient.add_term(rest.with(index, d - 1), carry.clone());
            }
            let c0 = coeffs.get(&0).unwrap_or(&zero);
            remainder.add_term(rest, c0 + &(a * &carry));
        }
        Ok((quotient, remainder))
    }

    pub fn support(&self) -> BTreeSet<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Downward closure of the support, capped at [`DEFAULT_CONE_CAP`] elements.
    pub fn cone(&self) -> Result<BTreeSet<Monomial>> {
        self.cone_with_cap(DEFAULT_CONE_CAP)
    }

    pub fn cone_with_cap(&self, cap: usize) -> Result<BTreeSet<Monomial>> {
        let mut out = BTreeSet::new();
        for top in self.terms.keys() {
            let mut cur = vec![0u32; top.arity()];
            loop {
                out.insert(Monomial(cur.clone()));
                if out.len() > cap {
                    return Err(Error::ConeTooLarge { cap });
                }
                // odometer over the box [0, top]
                let mut i = 0;
                while i < cur.len() && cur[i] == top.exponents()[i] {
                    cur[i] = 0;
                    i += 1;
                }
                if i == cur.len() {
                    break;
                }
                cur[i] += 1;
            }
        }
        Ok(out)
    }

    /// Support elements not strictly dominated by another support element, in graded-lex order.
    pub fn maximal_support_elements(&self) -> Vec<Monomial> {
        self.terms
            .keys()
            .filter(|m| !self.terms.keys().any(|o| o.strictly_dominates(m)))
            .cloned()
            .collect()
    }

    /// Whether some support element strictly dominates `alpha`. Linear in the term count.
    pub fn is_strictly_dominated(&self, alpha: &Monomial) -> bool {
        self.terms.keys().any(|m| m.strictly_dominates(alpha))
    }

    pub fn is_maximal(&self, alpha: &Monomial) -> bool {
        self.terms.contains_key(alpha) && !self.is_strictly_dominated(alpha)
    }

    /// The coefficient of `alpha` in the expansion (zero when absent).
    pub fn coefficient(&self, alpha: &Monomial) -> FieldValue {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| self.spec().zero())
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[index])
            .max()
            .unwrap_or(0)
    }

    /// Greatest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldValue)> {
        self.terms.iter().next_back()
    }

    /// Replaces `x_index` by `p`, which must live in the same ring.
    pub fn substitute(&self, index: usize, p: &Polynomial) -> Result<Polynomial> {
        self.ring.check_index(index)?;
        self.ring.check_same(&p.ring)?;
        let mut powers = vec![self.ring.one()];
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exponents()[index] as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty").mul(p)?;
                powers.push(next);
            }
            let rest = self.ring.term(m.with(index, 0), c.clone())?;
            out = out.add(&rest.mul(&powers[e])?)?;
        }
        Ok(out)
    }

    /// Moves `self` into `target`, sending variable `j` to `target` variable `mapping[j]`.
    pub fn embed(&self, target: &Ring, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: mapping.len(),
            });
        }
        if target.spec != self.spec() {
            return Err(Error::IncompatibleField(target.spec, self.spec()));
        }
        for &j in mapping {
            target.check_index(j)?;
        }
        target.from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; target.arity()];
            for (src, &dst) in mapping.iter().enumerate() {
                e[dst] += m.exponents()[src];
            }
            (Monomial(e), c.clone())
        }))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_polynomial(self))
    }
}
