//! Exact linear algebra over a [`Scalar`]: solving equality systems into an
//! affine parametrisation, rank, vertex enumeration and a feasibility LP.

mod dd;
mod lp;

pub use dd::polytope_vertices;
pub use lp::{find_nonnegative_solution, PivotOrder};

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A sparse linear equation `constant + Σ coeff·x_var = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation<S> {
    pub constant: S,
    pub terms: Vec<(usize, S)>,
}

impl<S: Scalar> Equation<S> {
    /// `x_var = value`.
    pub fn fix(var: usize, value: S) -> Self {
        Self {
            constant: -value,
            terms: vec![(var, S::one())],
        }
    }
}

/// Solution set of an equality system in `n` unknowns, written as
/// `x_i = offset_i + Σ_j dirs[i][j]·t_j` where `t_j = x_{free[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParam<S> {
    pub offset: Vec<S>,
    pub dirs: Vec<Vec<S>>,
    pub free: Vec<usize>,
}

impl<S: Scalar> AffineParam<S> {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn len(&self) -> usize {
        self.offset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offset.is_empty()
    }

    /// The point with parameters `t`.
    pub fn point(&self, t: &[S]) -> Vec<S> {
        self.offset
            .iter()
            .zip(&self.dirs)
            .map(|(c, row)| {
                row.iter()
                    .zip(t)
                    .fold(c.clone(), |acc, (m, tj)| acc + m.clone() * tj.clone())
            })
            .collect()
    }

    /// Parameters of `x`; `x` is assumed to lie in the solution set.
    pub fn coordinates(&self, x: &[S]) -> Vec<S> {
        self.free.iter().map(|&i| x[i].clone()).collect()
    }
}

// Pivot rows are kept fully reduced: every expression mentions free
// variables only.
struct Reducer<S> {
    n: usize,
    pivots: BTreeMap<usize, (S, BTreeMap<usize, S>)>,
}

impl<S: Scalar> Reducer<S> {
    fn substitute(&self, eq: &Equation<S>) -> (S, BTreeMap<usize, S>) {
        let mut constant = eq.constant.clone();
        let mut terms: BTreeMap<usize, S> = BTreeMap::new();
        let accumulate = |terms: &mut BTreeMap<usize, S>, var: usize, c: S| {
            if c.is_zero() {
                return;
            }
            let slot = terms.entry(var).or_insert_with(S::zero);
            *slot = slot.clone() + c;
            if slot.is_zero() {
                terms.remove(&var);
            }
        };
        for (var, coeff) in &eq.terms {
            assert!(*var < self.n, "variable out of range");
            match self.pivots.get(var) {
                Some((c, expr)) => {
                    constant = constant + coeff.clone() * c.clone();
                    for (v, m) in expr {
                        accumulate(&mut terms, *v, coeff.clone() * m.clone());
                    }
                }
                None => accumulate(&mut terms, *var, coeff.clone()),
            }
        }
        (constant, terms)
    }

    // false when the equation contradicts the earlier ones
    fn add(&mut self, eq: &Equation<S>) -> bool {
        let (constant, mut terms) = self.substitute(eq);
        let Some((&p, _)) = terms.iter().next_back() else {
            return constant.is_zero();
        };
        let a = terms.remove(&p).expect("present");
        let scale = -(S::one() / a);
        let c = constant * scale.clone();
        let expr: BTreeMap<usize, S> = terms.into_iter().map(|(v, m)| (v, m * scale.clone())).collect();
        for (pc, pexpr) in self.pivots.values_mut() {
            if let Some(m) = pexpr.remove(&p) {
                *pc = pc.clone() + m.clone() * c.clone();
                for (v, e) in &expr {
                    let slot = pexpr.entry(*v).or_insert_with(S::zero);
                    *slot = slot.clone() + m.clone() * e.clone();
                    if slot.is_zero() {
                        pexpr.remove(v);
                    }
                }
            }
        }
        self.pivots.insert(p, (c, expr));
        true
    }
}

/// Solves the system exactly. `None` when it is inconsistent.
pub fn solve_equalities<S: Scalar>(n: usize, equations: &[Equation<S>]) -> Option<AffineParam<S>> {
    let mut reducer = Reducer {
        n,
        pivots: BTreeMap::new(),
    };
    for eq in equations {
        if !reducer.add(eq) {
            return None;
        }
    }
    let free: Vec<usize> = (0..n).filter(|i| !reducer.pivots.contains_key(i)).collect();
    let column: BTreeMap<usize, usize> = free.iter().enumerate().map(|(j, &v)| (v, j)).collect();
    let mut offset = vec![S::zero(); n];
    let mut dirs = vec![vec![S::zero(); free.len()]; n];
    for (j, &v) in free.iter().enumerate() {
        dirs[v][j] = S::one();
    }
    for (p, (c, expr)) in reducer.pivots {
        offset[p] = c;
        for (v, m) in expr {
            dirs[p][column[&v]] = m;
        }
    }
    Some(AffineParam { offset, dirs, free })
}

/// Rank of a dense matrix given by rows.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / pivot.clone();
            let (top, rest) = m.split_at_mut(i);
            for (x, p) in rest[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Dimension of the affine hull of `points`; -1 for no points.
pub fn affine_dimension<S: Scalar>(points: &[Vec<S>]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<S>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    rank(&diffs) as isize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BigRational as Q;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn eq(constant: Q, terms: &[(usize, i64)]) -> Equation<Q> {
        Equation {
            constant,
            terms: terms.iter().map(|&(v, c)| (v, Q::from_int(c))).collect(),
        }
    }

    #[test]
    fn solves_a_half() {
        // x0 = 0, x2 = 1, x1 + x1 = x2
        let sys = vec![
            Equation::fix(0, q(0, 1)),
            Equation::fix(2, q(1, 1)),
            eq(q(0, 1), &[(2, 1), (1, -2)]),
        ];
        let param = solve_equalities(3, &sys).unwrap();
        assert_eq!(param.dim(), 0);
        assert_eq!(param.offset, vec![q(0, 1), q(1, 2), q(1, 1)]);
    }

    #[test]
    fn detects_inconsistency() {
        let sys = vec![Equation::fix(0, q(1, 1)), Equation::fix(0, q(1, 2))];
        assert!(solve_equalities(1, &sys).is_none());
    }

    #[test]
    fn parametrises_free_variables() {
        // x0 + x1 = 1
        let sys = vec![eq(q(-1, 1), &[(0, 1), (1, 1)])];
        let param = solve_equalities(2, &sys).unwrap();
        assert_eq!(param.free, vec![0]);
        let x = param.point(&[q(1, 3)]);
        assert_eq!(x, vec![q(1, 3), q(2, 3)]);
        assert_eq!(param.coordinates(&x), vec![q(1, 3)]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![q(1, 1), q(2, 1), q(3, 1)],
            vec![q(2, 1), q(4, 1), q(6, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1)],
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank::<Q>(&[]), 0);
        assert_eq!(affine_dimension::<Q>(&[]), -1);
        assert_eq!(affine_dimension(&rows[..1]), 0);
    }
}
