//! Grid interpolation, coefficient recovery from evaluations, and witness search.
//!
//! For a grid `A_1 × … × A_n` the normalizer of a point `a` is
//! `N(a) = ∏_i ∏_{b ∈ A_i, b ≠ a_i} (a_i − b)`. When `alpha` is not strictly
//! dominated by any monomial of `f` and `|A_i| = alpha_i + 1`, the coefficient of
//! `x^alpha` equals `Σ_a f(a) / N(a)`. Nonzero coefficients of such monomials force
//! `f` to be nonzero somewhere on any grid with `|A_i| ≥ alpha_i + 1`;
//! [`find_witness_recursive`] finds that point by repeatedly dividing by
//! `x_i − a`.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, FieldValue};
use crate::poly::{Monomial, Polynomial, Ring};

/// A product `A_1 × … × A_n` of finite, duplicate-free sets, each kept in its given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    spec: FieldSpec,
    sets: Vec<Vec<FieldValue>>,
}

impl Grid {
    pub fn new(spec: FieldSpec, sets: Vec<Vec<FieldValue>>) -> Result<Grid> {
        for (i, set) in sets.iter().enumerate() {
            for (j, v) in set.iter().enumerate() {
                if v.spec() != spec {
                    return Err(Error::IncompatibleField(spec, v.spec()));
                }
                if set[..j].contains(v) {
                    return Err(Error::DuplicateGridElement {
                        set: i,
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(Grid { spec, sets })
    }

    pub fn from_ints(spec: FieldSpec, sets: &[&[i64]]) -> Result<Grid> {
        Grid::new(
            spec,
            sets.iter()
                .map(|s| s.iter().map(|&v| FieldValue::from_i64(spec, v)).collect())
                .collect(),
        )
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<FieldValue>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[FieldValue] {
        &self.sets[i]
    }

    pub fn num_points(&self) -> u128 {
        self.sets.iter().map(|s| s.len() as u128).product()
    }

    /// Points in lexicographic order of set positions, last coordinate varying fastest.
    pub fn points(&self) -> GridPoints<'_> {
        GridPoints {
            sets: &self.sets,
            cursor: if self.sets.iter().any(Vec::is_empty) {
                None
            } else {
                Some(vec![0; self.sets.len()])
            },
        }
    }

    pub fn contains(&self, point: &[FieldValue]) -> bool {
        self.locate(point).is_ok()
    }

    fn locate(&self, point: &[FieldValue]) -> Result<Vec<usize>> {
        if point.len() != self.dim() {
            return Err(Error::ArityMismatch {
                expected: self.dim(),
                found: point.len(),
            });
        }
        point
            .iter()
            .zip(&self.sets)
            .enumerate()
            .map(|(i, (a, set))| {
                set.iter()
                    .position(|b| b == a)
                    .ok_or(Error::PointNotOnGrid(i))
            })
            .collect()
    }

    fn check_arity(&self, arity: usize) -> Result<()> {
        if arity == self.dim() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: arity,
                found: self.dim(),
            })
        }
    }

    fn check_field(&self, spec: FieldSpec) -> Result<()> {
        if spec == self.spec {
            Ok(())
        } else {
            Err(Error::IncompatibleField(spec, self.spec))
        }
    }
}

pub struct GridPoints<'a> {
    sets: &'a [Vec<FieldValue>],
    cursor: Option<Vec<usize>>,
}

impl Iterator for GridPoints<'_> {
    type Item = Vec<FieldValue>;

    fn next(&mut self) -> Option<Vec<FieldValue>> {
        let cur = self.cursor.as_mut()?;
        let point = cur
            .iter()
            .zip(self.sets)
            .map(|(&j, s)| s[j].clone())
            .collect();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cursor = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.sets[i].len() {
                break;
            }
            cur[i] = 0;
        }
        Some(point)
    }
}

/// A grid point where the polynomial is nonzero, with that value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<FieldValue>,
    pub value: FieldValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub witness: Option<Witness>,
    /// Number of polynomial evaluations performed.
    pub evaluations_used: u64,
}

/// `∏_{b ∈ set, b ≠ a} (a − b)`.
fn axis_factor(set: &[FieldValue], a: &FieldValue, spec: FieldSpec) -> FieldValue {
    set.iter()
        .filter(|b| *b != a)
        .fold(spec.one(), |acc, b| &acc * &(a - b))
}

pub fn normalizer(grid: &Grid, point: &[FieldValue]) -> Result<FieldValue> {
    grid.locate(point)?;
    Ok(point
        .iter()
        .zip(grid.sets())
        .fold(grid.spec.one(), |acc, (a, set)| {
            &acc * &axis_factor(set, a, grid.spec)
        }))
}

/// The polynomial that is 1 at `point` and 0 at every other grid point.
pub fn chi_indicator(ring: &Ring, grid: &Grid, point: &[FieldValue]) -> Result<Polynomial> {
    grid.check_arity(ring.arity())?;
    grid.check_field(ring.spec())?;
    let n = normalizer(grid, point)?;
    let mut prod = ring.one();
    for (i, (a, set)) in point.iter().zip(grid.sets()).enumerate() {
        for b in set.iter().filter(|b| *b != a) {
            prod = prod.mul(&ring.linear(i, b)?)?;
        }
    }
    prod.scale(&n.inv()?)
}

/// `Σ_{a ∈ A} ∏_{b ∈ A, b ≠ a} (b − a)^{-1}`, which vanishes for every set of two or more elements.
pub fn lemma_sum(set: &[FieldValue]) -> Result<FieldValue> {
    if set.len() < 2 {
        return Err(Error::Precondition(format!(
            "set must have at least 2 elements, has {}",
            set.len()
        )));
    }
    let spec = set[0].spec();
    let grid = Grid::new(spec, vec![set.to_vec()])?;
    let mut acc = spec.zero();
    for a in grid.set(0) {
        let mut prod = spec.one();
        for b in set.iter().filter(|b| *b != a) {
            prod = &prod * &(b - a);
        }
        acc = &acc + &prod.inv()?;
    }
    Ok(acc)
}

/// `Σ_a value(a) / N(a)` over every grid point, with `value` supplied by the caller.
pub fn coefficient_from_evaluations(
    grid: &Grid,
    mut value: impl FnMut(&[FieldValue]) -> Result<FieldValue>,
) -> Result<FieldValue> {
    let spec = grid.spec;
    let inv_axis: Vec<Vec<FieldValue>> = grid
        .sets()
        .iter()
        .map(|set| {
            set.iter()
                .map(|a| axis_factor(set, a, spec).inv())
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut acc = spec.zero();
    for point in grid.points() {
        let v = value(&point)?;
        if v.is_zero() {
            continue;
        }
        let idx = grid.locate(&point)?;
        let weight = idx
            .iter()
            .enumerate()
            .fold(spec.one(), |w, (i, &j)| &w * &inv_axis[i][j]);
        acc = &acc + &(&v * &weight);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaximalityCheck {
    /// Reject `alpha` when a monomial of `f` strictly dominates it.
    #[default]
    Strict,
    /// Evaluate the sum regardless; the result need not equal the coefficient.
    Bypass,
}

/// The coefficient of `x^alpha` in `f`, recovered from the values of `f` on `grid`.
///
/// Each `A_i` must have exactly `alpha_i + 1` elements.
pub fn coefficient_via_formula(
    f: &Polynomial,
    alpha: &Monomial,
    grid: &Grid,
    check: MaximalityCheck,
) -> Result<FieldValue> {
    check_formula_grid(f.arity(), alpha, grid)?;
    grid.check_field(f.spec())?;
    if check == MaximalityCheck::Strict && f.is_strictly_dominated(alpha) {
        return Err(Error::Precondition(format!(
            "exponent {:?} is strictly dominated by a monomial of f",
            alpha.exponents()
        )));
    }
    coefficient_from_evaluations(grid, |p| f.eval(p))
}

pub(crate) fn check_formula_grid(arity: usize, alpha: &Monomial, grid: &Grid) -> Result<()> {
    grid.check_arity(arity)?;
    if alpha.arity() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: alpha.arity(),
        });
    }
    for (i, (&e, set)) in alpha.exponents().iter().zip(grid.sets()).enumerate() {
        if set.len() != e as usize + 1 {
            return Err(Error::GridSizeMismatch {
                set: i,
                expected: e as usize + 1,
                found: set.len(),
            });
        }
    }
    Ok(())
}

/// First grid point (in [`Grid::points`] order) where `f` is nonzero.
pub fn find_witness_enumerate(f: &Polynomial, grid: &Grid) -> Result<WitnessReport> {
    grid.check_arity(f.arity())?;
    grid.check_field(f.spec())?;
    let mut evaluations_used = 0;
    let witness = first_nonzero(f, grid, &mut evaluations_used)?;
    Ok(WitnessReport {
        witness,
        evaluations_used,
    })
}

fn first_nonzero(f: &Polynomial, grid: &Grid, counter: &mut u64) -> Result<Option<Witness>> {
    if f.is_zero() {
        return Ok(None);
    }
    for point in grid.points() {
        *counter += 1;
        let value = f.eval(&point)?;
        if !value.is_zero() {
            return Ok(Some(Witness { point, value }));
        }
    }
    Ok(None)
}

/// Which hypotheses of the nonvanishing theorems hold for `(f, alpha, grid)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcnReport {
    pub arity_ok: bool,
    pub in_support: bool,
    /// `alpha` is in the support and no support element strictly dominates it.
    pub maximal: bool,
    /// Indices `i` with `|A_i| < alpha_i + 1`.
    pub short_sets: Vec<usize>,
    /// `deg f = |alpha|` and the coefficient is nonzero: the total-degree version also applies.
    pub classical: bool,
}

impl GcnReport {
    pub fn sizes_sufficient(&self) -> bool {
        self.arity_ok && self.short_sets.is_empty()
    }

    pub fn applies(&self) -> bool {
        self.arity_ok && self.in_support && self.maximal && self.short_sets.is_empty()
    }

    /// Human-readable reason the hypotheses fail, if they do.
    pub fn failure(&self) -> Option<String> {
        if !self.arity_ok {
            Some("exponent, grid and polynomial arities differ".into())
        } else if !self.in_support {
            Some("exponent is not in the support".into())
        } else if !self.maximal {
            Some("exponent is in the support but not maximal".into())
        } else if !self.short_sets.is_empty() {
            Some(format!("grid sets {:?} are too small", self.short_sets))
        } else {
            None
        }
    }
}

pub fn check_gcn_preconditions(f: &Polynomial, alpha: &Monomial, grid: &Grid) -> GcnReport {
    let arity_ok = alpha.arity() == f.arity() && grid.dim() == f.arity() && grid.spec == f.spec();
    if !arity_ok {
        return GcnReport {
            arity_ok,
            in_support: false,
            maximal: false,
            short_sets: Vec::new(),
            classical: false,
        };
    }
    let in_support = !f.coefficient(alpha).is_zero();
    let maximal = in_support && !f.is_strictly_dominated(alpha);
    let short_sets = alpha
        .exponents()
        .iter()
        .zip(grid.sets())
        .enumerate()
        .filter(|(_, (&e, set))| set.len() < e as usize + 1)
        .map(|(i, _)| i)
        .collect();
    let classical = in_support && f.total_degree() == Some(alpha.degree());
    GcnReport {
        arity_ok,
        in_support,
        maximal,
        short_sets,
        classical,
    }
}

/// Finds a nonvanishing grid point by following the inductive proof.
///
/// Picks the first `i` with `alpha_i > 0` and the first `a ∈ A_i`, writes
/// `f = g·(x_i − a) + h`, and enumerates `h` on the slice `x_i = a`. If `h`
/// vanishes there, continues with `g`, `A_i ∖ {a}` and `alpha_i − 1`.
pub fn find_witness_recursive(
    f: &Polynomial,
    alpha: &Monomial,
    grid: &Grid,
) -> Result<WitnessReport> {
    let report = check_gcn_preconditions(f, alpha, grid);
    if let Some(reason) = report.failure() {
        return Err(Error::Precondition(reason));
    }
    let mut counter = 0;
    let mut current = f.clone();
    let mut exps = alpha.exponents().to_vec();
    let mut sets = grid.sets().to_vec();
    let point = loop {
        let Some(i) = exps.iter().position(|&e| e > 0) else {
            let point: Vec<FieldValue> = sets.iter().map(|s| s[0].clone()).collect();
            counter += 1;
            if current.eval(&point)?.is_zero() {
                return Err(Error::Internal(
                    "quotient reached degree zero but vanishes".into(),
                ));
            }
            break point;
        };
        let a = sets[i][0].clone();
        let (g, h) = current.divide_by_linear(i, &a)?;
        let mut slice = sets.clone();
        slice[i] = vec![a];
        let slice = Grid {
            spec: grid.spec,
            sets: slice,
        };
        if let Some(w) = first_nonzero(&h, &slice, &mut counter)? {
            break w.point;
        }
        sets[i].remove(0);
        exps[i] -= 1;
        current = g;
    };
    counter += 1;
    let value = f.eval(&point)?;
    if value.is_zero() {
        return Err(Error::Internal(format!(
            "recursion returned a zero of f at {}",
            crate::format_point(&point)
        )));
    }
    Ok(WitnessReport {
        witness: Some(Witness { point, value }),
        evaluations_used: counter,
    })
}

/// Witness search for `f(x_1, …, x_n) = g(h(x_1), x_2, …, x_n)`.
///
/// `alpha` is the target exponent of `f`; the substituted variable of `g` gets
/// exponent `⌈alpha_1 / deg h⌉`, so the first set only needs that many elements
/// plus one, provided `h` is injective on it.
pub fn substitution_witness(
    g: &Polynomial,
    h_inner: &Polynomial,
    grid: &Grid,
    alpha: &Monomial,
) -> Result<WitnessReport> {
    if h_inner.arity() != 1 {
        return Err(Error::Precondition(
            "inner polynomial must be univariate".into(),
        ));
    }
    if h_inner.spec() != g.spec() {
        return Err(Error::IncompatibleField(g.spec(), h_inner.spec()));
    }
    let k = match h_inner.total_degree() {
        Some(k) if k >= 1 => k,
        _ => {
            return Err(Error::Precondition(
                "inner polynomial must be nonconstant".into(),
            ))
        }
    };
    grid.check_arity(g.arity())?;
    grid.check_field(g.spec())?;
    if alpha.arity() != g.arity() || g.arity() == 0 {
        return Err(Error::ArityMismatch {
            expected: g.arity(),
            found: alpha.arity(),
        });
    }
    let first = grid.set(0);
    let mut images: Vec<FieldValue> = Vec::with_capacity(first.len());
    for a in first {
        let y = h_inner.eval(std::slice::from_ref(a))?;
        if let Some(j) = images.iter().position(|v| *v == y) {
            return Err(Error::Precondition(format!(
                "inner polynomial is not injective on the first set: h({}) = h({}) = {y}",
                first[j], a
            )));
        }
        images.push(y);
    }
    let reduced = (alpha.exponents()[0] as u64).div_ceil(k);
    if (first.len() as u64) < reduced + 1 {
        return Err(Error::Precondition(format!(
            "first set has {} elements, needs at least {}",
            first.len(),
            reduced + 1
        )));
    }
    let beta = alpha.with(0, reduced as u32);
    let mut sets = grid.sets().to_vec();
    sets[0] = images.clone();
    let transformed = Grid::new(grid.spec, sets)?;
    let inner = find_witness_recursive(g, &beta, &transformed)?;
    let w = inner
        .witness
        .ok_or_else(|| Error::Internal("recursive search returned no witness".into()))?;
    let pos = images
        .iter()
        .position(|y| *y == w.point[0])
        .expect("witness lies on the transformed grid");
    let mut point = w.point;
    point[0] = first[pos].clone();
    Ok(WitnessReport {
        witness: Some(Witness {
            point,
            value: w.value,
        }),
        evaluations_used: inner.evaluations_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.iter().copied(), Q).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    fn v(x: i64) -> FieldValue {
        FieldValue::from_i64(Q, x)
    }

    fn pt(xs: &[i64]) -> Vec<FieldValue> {
        xs.iter().map(|&x| v(x)).collect()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grid_rejects_duplicates_and_orders_points() {
        assert!(matches!(
            Grid::from_ints(Q, &[&[0, 1, 0]]),
            Err(Error::DuplicateGridElement { set: 0, .. })
        ));
        let g = Grid::from_ints(Q, &[&[0, 1], &[5, 6, 7]]).unwrap();
        let pts: Vec<_> = g.points().collect();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0], pt(&[0, 5]));
        assert_eq!(pts[1], pt(&[0, 6]));
        assert_eq!(pts[5], pt(&[1, 7]));
        assert_eq!(
            Grid::from_ints(Q, &[&[0], &[]]).unwrap().points().count(),
            0
        );
        assert_eq!(Grid::from_ints(Q, &[]).unwrap().points().count(), 1);
    }

    #[test]
    fn normalizer_examples() {
        let g = Grid::from_ints(Q, &[&[0, 1]]).unwrap();
        assert_eq!(normalizer(&g, &pt(&[0])).unwrap(), v(-1));
        let s = Grid::from_ints(Q, &[&[4], &[9]]).unwrap();
        assert_eq!(normalizer(&s, &pt(&[4, 9])).unwrap(), v(1));
        assert_eq!(normalizer(&g, &pt(&[3])), Err(Error::PointNotOnGrid(0)));
    }

    #[test]
    fn normalizer_matches_product_polynomial() {
        let r = ring(&["x", "y"]);
        let g = Grid::from_ints(Q, &[&[0, 2, 5], &[-1, 3]]).unwrap();
        for a in g.points() {
            let chi = chi_indicator(&r, &g, &a).unwrap();
            // N·χ is the bare product of linear factors
            let bare = chi.scale(&normalizer(&g, &a).unwrap()).unwrap();
            assert_eq!(bare.eval(&a).unwrap(), normalizer(&g, &a).unwrap());
        }
    }

    #[test]
    fn chi_is_kronecker_delta() {
        let r = ring(&["x", "y"]);
        let g = Grid::from_ints(Q, &[&[0, 1, 3], &[2, -2]]).unwrap();
        let mut sum = r.zero();
        for a in g.points() {
            let chi = chi_indicator(&r, &g, &a).unwrap();
            for b in g.points() {
                let expect = if a == b { 1 } else { 0 };
                assert_eq!(chi.eval(&b).unwrap(), v(expect));
            }
            sum = sum.add(&chi).unwrap();
        }
        for b in g.points() {
            assert_eq!(sum.eval(&b).unwrap(), v(1));
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_sum(&pt(&[0, 1])).unwrap().is_zero());
        assert!(lemma_sum(&pt(&[1, 2, 3])).unwrap().is_zero());
        assert!(matches!(lemma_sum(&pt(&[0])), Err(Error::Precondition(_))));
        assert!(lemma_sum(&pt(&[1, 1])).is_err());
    }

    #[test]
    fn formula_examples() {
        let r = ring(&["x1", "x2"]);
        let g = Grid::from_ints(Q, &[&[0, 1], &[0, 1]]).unwrap();
        let f = p(&r, "x1*x2");
        let c = coefficient_via_formula(&f, &m(&[1, 1]), &g, MaximalityCheck::Strict).unwrap();
        assert_eq!(c, v(1));
        assert_eq!(c, f.coefficient(&m(&[1, 1])));

        let z = coefficient_via_formula(&r.zero(), &m(&[1, 1]), &g, MaximalityCheck::Strict);
        assert!(z.unwrap().is_zero());

        let u = ring(&["x"]);
        let f = p(&u, "x + x^2");
        let g1 = Grid::from_ints(Q, &[&[0, 1]]).unwrap();
        assert!(matches!(
            coefficient_via_formula(&f, &m(&[1]), &g1, MaximalityCheck::Strict),
            Err(Error::Precondition(_))
        ));
        let bypass = coefficient_via_formula(&f, &m(&[1]), &g1, MaximalityCheck::Bypass).unwrap();
        assert_eq!(bypass, v(2));
        assert_eq!(f.coefficient(&m(&[1])), v(1));
    }

    #[test]
    fn formula_rejects_wrong_sizes() {
        let r = ring(&["x"]);
        let g = Grid::from_ints(Q, &[&[0, 1, 2]]).unwrap();
        assert_eq!(
            coefficient_via_formula(&p(&r, "x"), &m(&[1]), &g, MaximalityCheck::Strict),
            Err(Error::GridSizeMismatch {
                set: 0,
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn enumerate_examples() {
        let r = ring(&["x1", "x2"]);
        let g = Grid::from_ints(Q, &[&[0, 1], &[0, 1]]).unwrap();
        let w = find_witness_enumerate(&p(&r, "5"), &g).unwrap();
        assert_eq!(w.witness.unwrap().point, pt(&[0, 0]));
        let w = find_witness_enumerate(&p(&r, "x1*(x1 - 1)"), &g).unwrap();
        assert_eq!(w.witness, None);
        assert_eq!(w.evaluations_used, 4);
        let w = find_witness_enumerate(&p(&r, "x1*x2 - 1"), &g).unwrap();
        let w = w.witness.unwrap();
        assert_eq!((w.point, w.value), (pt(&[0, 0]), v(-1)));
    }

    #[test]
    fn recursive_examples() {
        let r = ring(&["x1", "x2"]);
        let g = Grid::from_ints(Q, &[&[0, 1], &[0, 1]]).unwrap();
        let w = find_witness_recursive(&p(&r, "3"), &m(&[0, 0]), &g).unwrap();
        assert_eq!(w.witness.unwrap().point, pt(&[0, 0]));

        let f = p(&r, "x1*x2 - 1");
        let w = find_witness_recursive(&f, &m(&[1, 1]), &g)
            .unwrap()
            .witness
            .unwrap();
        assert!(!w.value.is_zero());
        assert_eq!(f.eval(&w.point).unwrap(), w.value);

        let u = ring(&["x"]);
        let g3 = Grid::from_ints(Q, &[&[0, 1, 2]]).unwrap();
        assert!(matches!(
            find_witness_recursive(&p(&u, "x + x^2"), &m(&[1]), &g3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn recursive_needs_the_quotient_branch() {
        // f vanishes on the slice x1 = 0, so the search must descend into g
        let r = ring(&["x1", "x2"]);
        let f = p(&r, "x1^2*x2 + x1*x2");
        let g = Grid::from_ints(Q, &[&[0, -1, 2], &[1, 3]]).unwrap();
        let w = find_witness_recursive(&f, &m(&[2, 1]), &g)
            .unwrap()
            .witness
            .unwrap();
        assert_eq!(w.point, pt(&[2, 1]));
        assert_eq!(w.value, v(6));
    }

    #[test]
    fn precondition_reports() {
        let u = ring(&["x"]);
        let g3 = Grid::from_ints(Q, &[&[0, 1, 2]]).unwrap();
        let f = p(&u, "x + x^2");
        let rep = check_gcn_preconditions(&f, &m(&[2]), &g3);
        assert!(rep.applies() && rep.classical);
        let rep = check_gcn_preconditions(&f, &m(&[1]), &g3);
        assert!(rep.in_support && !rep.maximal);
        assert_eq!(
            rep.failure().unwrap(),
            "exponent is in the support but not maximal"
        );

        let r = ring(&["x1", "x2"]);
        let g = Grid::from_ints(Q, &[&[0, 1], &[0, 1]]).unwrap();
        let rep = check_gcn_preconditions(&p(&r, "x1*x2 + x1^3"), &m(&[1, 1]), &g);
        assert!(rep.applies());
        assert!(!rep.classical);

        let small = Grid::from_ints(Q, &[&[0], &[0, 1]]).unwrap();
        let rep = check_gcn_preconditions(&p(&r, "x1*x2"), &m(&[1, 1]), &small);
        assert_eq!(rep.short_sets, vec![0]);
        assert!(!rep.sizes_sufficient());
    }

    #[test]
    fn substitution_examples() {
        let r = ring(&["y", "x2"]);
        let g = p(&r, "y*x2");
        let u = ring(&["x"]);
        let square = p(&u, "x^2");
        let grid = Grid::from_ints(Q, &[&[0, 1, 2], &[0, 1]]).unwrap();
        let w = substitution_witness(&g, &square, &grid, &m(&[2, 1]))
            .unwrap()
            .witness
            .unwrap();
        let x1 = w.point[0].clone();
        assert!(x1 == v(1) || x1 == v(2));
        let f = g.substitute(0, &p(&r, "y^2")).unwrap();
        assert_eq!(f.eval(&w.point).unwrap(), w.value);
        assert!(!w.value.is_zero());

        let bad = Grid::from_ints(Q, &[&[-1, 1], &[0, 1]]).unwrap();
        let err = substitution_witness(&g, &square, &bad, &m(&[2, 1])).unwrap_err();
        assert!(err.to_string().contains("not injective"), "{err}");

        let ident = p(&u, "x");
        let a = substitution_witness(&g, &ident, &grid, &m(&[1, 1])).unwrap();
        let b = find_witness_recursive(&g, &m(&[1, 1]), &grid).unwrap();
        assert_eq!(a.witness, b.witness);

        assert!(substitution_witness(&g, &p(&u, "4"), &grid, &m(&[1, 1])).is_err());
    }
}
