use crate::scalar::Scalar;

/// Column order used by Bland's rule. Both orders terminate; they can reach
/// different solutions when the feasible set is not a single point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PivotOrder {
    #[default]
    Forward,
    Reverse,
}

/// Some `x >= 0` with `a·x = b`, found by phase one of the simplex method
/// with Bland's anti-cycling rule and exact arithmetic. `a` is given by rows.
/// `None` when no such `x` exists.
pub fn find_nonnegative_solution<S: Scalar>(a: &[Vec<S>], b: &[S], order: PivotOrder) -> Option<Vec<S>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per row");
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let width = k + m;

    // rank of a column under the chosen order; artificials always come last
    let rank = |j: usize| match order {
        PivotOrder::Forward => j,
        PivotOrder::Reverse if j < k => k - 1 - j,
        PivotOrder::Reverse => j,
    };

    let mut tab: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut rhs: Vec<S> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), k, "ragged matrix");
        let flip = bi.is_negative();
        let mut t: Vec<S> = row
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        t.resize(width, S::zero());
        t[k + i] = S::one();
        tab.push(t);
        rhs.push(bi.abs());
    }
    let mut basis: Vec<usize> = (k..width).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<S> = vec![S::zero(); width];
    for j in 0..k {
        cost[j] = -tab.iter().fold(S::zero(), |acc, row| acc + row[j].clone());
    }
    let mut objective = rhs.iter().fold(S::zero(), |acc, x| acc + x.clone());

    loop {
        let entering = (0..k).filter(|&j| cost[j].is_negative()).min_by_key(|&j| rank(j));
        let Some(e) = entering else { break };

        let mut leave: Option<(usize, S)> = None;
        for i in 0..m {
            if !tab[i][e].is_positive() {
                continue;
            }
            let ratio = rhs[i].clone() / tab[i][e].clone();
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && rank(basis[i]) < rank(basis[*li])),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("phase one is bounded below");

        let pivot = tab[r][e].clone();
        for x in tab[r].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        rhs[r] = rhs[r].clone() / pivot;
        let prow = tab[r].clone();
        let prhs = rhs[r].clone();
        for i in 0..m {
            if i == r || tab[i][e].is_zero() {
                continue;
            }
            let f = tab[i][e].clone();
            for (x, p) in tab[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            rhs[i] = rhs[i].clone() - f * prhs.clone();
        }
        let f = cost[e].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
        objective = objective + f * prhs;
        basis[r] = e;
    }

    if !objective.is_zero() {
        return None;
    }
    let mut x = vec![S::zero(); k];
    for (i, &j) in basis.iter().enumerate() {
        if j < k {
            x[j] = rhs[i].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::scalar::BigRational as Q;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn residual_ok(a: &[Vec<Q>], b: &[Q], x: &[Q]) -> bool {
        x.iter().all(|v| !v.is_negative())
            && a.iter()
                .zip(b)
                .all(|(row, bi)| row.iter().zip(x).fold(q(0, 1), |acc, (r, xi)| acc + r * xi) == *bi)
    }

    #[test]
    fn barycentric_on_a_triangle() {
        // columns are the vertices (0,0), (1,0), (0,1); last row sums weights
        let a = vec![
            vec![q(0, 1), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(0, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1)],
        ];
        let b = vec![q(1, 4), q(1, 2), q(1, 1)];
        for order in [PivotOrder::Forward, PivotOrder::Reverse] {
            let x = find_nonnegative_solution(&a, &b, order).unwrap();
            assert_eq!(x, vec![q(1, 4), q(1, 4), q(1, 2)]);
        }
    }

    #[test]
    fn infeasible() {
        let a = vec![vec![q(1, 1), q(1, 1)]];
        assert!(find_nonnegative_solution(&a, &[q(-1, 1)], PivotOrder::Forward).is_none());
    }

    #[test]
    fn square_center_has_many_solutions() {
        // vertices of the unit square; both orders must produce valid weights
        let a = vec![
            vec![q(0, 1), q(1, 1), q(0, 1), q(1, 1)],
            vec![q(0, 1), q(0, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1), q(1, 1)],
        ];
        let b = vec![q(1, 2), q(1, 2), q(1, 1)];
        for order in [PivotOrder::Forward, PivotOrder::Reverse] {
            let x = find_nonnegative_solution(&a, &b, order).unwrap();
            assert!(residual_ok(&a, &b, &x));
        }
    }

    #[test]
    fn redundant_rows() {
        let a = vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(2, 1), q(2, 1)],
            vec![q(1, 1), q(0, 1)],
        ];
        let b = vec![q(1, 1), q(2, 1), q(1, 3)];
        let x = find_nonnegative_solution(&a, &b, PivotOrder::Reverse).unwrap();
        assert_eq!(x, vec![q(1, 3), q(2, 3)]);
    }
}
