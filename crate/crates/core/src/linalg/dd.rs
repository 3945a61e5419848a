use fixedbitset::FixedBitSet;

use crate::scalar::Scalar;

struct Ray<S> {
    v: Vec<S>,
    zero: FixedBitSet,
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn axpy<S: Scalar>(y: &[S], alpha: &S, x: &[S]) -> Vec<S> {
    y.iter()
        .zip(x)
        .map(|(yi, xi)| yi.clone() + alpha.clone() * xi.clone())
        .collect()
}

// Scale so the first nonzero entry has absolute value 1.
fn normalise<S: Scalar>(v: &mut [S]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x = x.clone() / lead.clone();
            }
        }
    }
}

/// Vertices of the bounded polytope `{t ∈ Q^dim : b + a·t >= 0 for every
/// (b, a) in ineqs}` by the double description method on the homogenised
/// cone `{(x0, t) : x0 >= 0, b·x0 + a·t >= 0}`. Extreme rays are tracked with
/// their zero sets and new rays are only formed from combinatorially
/// adjacent pairs. Returns the vertices in no particular order; an empty
/// polytope yields no vertices.
pub fn polytope_vertices<S: Scalar>(dim: usize, ineqs: &[(S, Vec<S>)]) -> Vec<Vec<S>> {
    let k = dim + 1;
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(ineqs.len() + 1);
    let mut x0 = vec![S::zero(); k];
    x0[0] = S::one();
    rows.push(x0);
    for (b, a) in ineqs {
        assert_eq!(a.len(), dim, "inequality has the wrong dimension");
        let mut row = Vec::with_capacity(k);
        row.push(b.clone());
        row.extend(a.iter().cloned());
        rows.push(row);
    }
    let m = rows.len();

    let mut lineality: Vec<Vec<S>> = (0..k)
        .map(|i| {
            let mut e = vec![S::zero(); k];
            e[i] = S::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray<S>> = Vec::new();

    for (c, h) in rows.iter().enumerate() {
        if let Some(li) = lineality.iter().position(|l| !dot(h, l).is_zero()) {
            let mut l = lineality.swap_remove(li);
            let mut hl = dot(h, &l);
            if hl.is_negative() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                hl = -hl;
            }
            for other in lineality.iter_mut() {
                let f = -(dot(h, other) / hl.clone());
                *other = axpy(other, &f, &l);
            }
            for ray in rays.iter_mut() {
                let f = -(dot(h, &ray.v) / hl.clone());
                ray.v = axpy(&ray.v, &f, &l);
                normalise(&mut ray.v);
                ray.zero.insert(c);
            }
            let mut zero = FixedBitSet::with_capacity(m);
            zero.insert_range(..c);
            normalise(&mut l);
            rays.push(Ray { v: l, zero });
            continue;
        }

        let values: Vec<S> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (ray, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    ray.zero.insert(c);
                }
            }
            continue;
        }

        // two adjacent extreme rays share at least this many tight constraints
        let need = (k - lineality.len()).saturating_sub(2);
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let mut common = rays[p].zero.clone();
                common.intersect_with(&rays[n].zero);
                if common.count_ones(..) < need {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != n && common.is_subset(&ray.zero));
                if blocked {
                    continue;
                }
                let (hp, hn) = (values[p].clone(), values[n].clone());
                let mut v: Vec<S> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| hp.clone() * xn.clone() - hn.clone() * xp.clone())
                    .collect();
                normalise(&mut v);
                common.insert(c);
                created.push(Ray { v, zero: common });
            }
        }
        let mut kept: Vec<Ray<S>> = Vec::with_capacity(rays.len() + created.len());
        for (ray, val) in rays.into_iter().zip(&values) {
            if val.is_negative() {
                continue;
            }
            let mut ray = ray;
            if val.is_zero() {
                ray.zero.insert(c);
            }
            kept.push(ray);
        }
        kept.extend(created);
        rays = kept;
    }

    rays.into_iter()
        .filter(|r| r.v[0].is_positive())
        .map(|r| {
            let x0 = r.v[0].clone();
            r.v[1..].iter().map(|x| x.clone() / x0.clone()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BigRational as Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn sorted(mut v: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
        v.sort();
        v
    }

    // 0 <= t_i <= 1
    fn cube(dim: usize) -> Vec<(Q, Vec<Q>)> {
        let mut ineqs = Vec::new();
        for i in 0..dim {
            let mut a = vec![q(0); dim];
            a[i] = q(1);
            ineqs.push((q(0), a.clone()));
            a[i] = q(-1);
            ineqs.push((q(1), a));
        }
        ineqs
    }

    #[test]
    fn unit_square() {
        let v = sorted(polytope_vertices(2, &cube(2)));
        assert_eq!(
            v,
            vec![
                vec![q(0), q(0)],
                vec![q(0), q(1)],
                vec![q(1), q(0)],
                vec![q(1), q(1)]
            ]
        );
    }

    #[test]
    fn cube_has_eight_vertices() {
        assert_eq!(polytope_vertices(3, &cube(3)).len(), 8);
    }

    #[test]
    fn simplex_cut_from_square() {
        let mut ineqs = cube(2);
        // t0 + t1 <= 1
        ineqs.push((q(1), vec![q(-1), q(-1)]));
        let v = sorted(polytope_vertices(2, &ineqs));
        assert_eq!(v, vec![vec![q(0), q(0)], vec![q(0), q(1)], vec![q(1), q(0)]]);
    }

    #[test]
    fn empty_and_point() {
        let mut ineqs = cube(1);
        ineqs.push((q(-2), vec![q(1)]));
        assert!(polytope_vertices(1, &ineqs).is_empty());
        // zero-dimensional: feasible and infeasible constants
        assert_eq!(
            polytope_vertices::<Q>(0, &[(q(1), vec![])]),
            vec![Vec::<Q>::new()]
        );
        assert!(polytope_vertices::<Q>(0, &[(q(-1), vec![])]).is_empty());
    }

    #[test]
    fn degenerate_pyramid() {
        // square base at t2 = 0, apex at (1/2, 1/2, 1): four facets meet at the apex
        let half = Q::ratio(1, 2);
        let ineqs = vec![
            (q(0), vec![q(0), q(0), q(1)]),
            (q(0), vec![q(1), q(0), -half.clone()]),
            (q(0), vec![q(0), q(1), -half.clone()]),
            (q(1), vec![q(-1), q(0), -half.clone()]),
            (q(1), vec![q(0), q(-1), -half.clone()]),
        ];
        let v = sorted(polytope_vertices(3, &ineqs));
        assert_eq!(v.len(), 5);
        assert!(v.contains(&vec![half.clone(), half, q(1)]));
    }
}
