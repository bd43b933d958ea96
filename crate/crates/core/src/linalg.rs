//! Dense exact linear algebra over any [`Field`].

use crate::scalars::{Field, RatFunc};

/// Heuristic size of a scalar, used to pick cheap pivots.
pub trait PivotCost {
    fn pivot_cost(&self) -> usize {
        0
    }
}

impl PivotCost for RatFunc {
    fn pivot_cost(&self) -> usize {
        self.num().coeffs().len() + self.den().coeffs().len()
    }
}

impl PivotCost for num_rational::BigRational {}
impl PivotCost for crate::scalars::Cyclotomic {
    fn pivot_cost(&self) -> usize {
        self.coords()
            .iter()
            .filter(|c| !num_traits::Zero::is_zero(*c))
            .count()
    }
}
impl PivotCost for crate::scalars::Scalar {}

pub trait Scalarlike: Field + PivotCost {}
impl<T: Field + PivotCost> Scalarlike for T {}

/// Reduced row echelon form, in place. Columns are visited in the order
/// given by `col_order` (all columns when `None`). Zero rows are dropped and
/// the returned vector lists the pivot column of each remaining row.
pub fn rref<F: Scalarlike>(rows: &mut Vec<Vec<F>>, col_order: Option<&[usize]>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let default_order: Vec<usize>;
    let order = match col_order {
        Some(o) => o,
        None => {
            default_order = (0..ncols).collect();
            &default_order
        }
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in order {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].pivot_cost(), i));
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Scalarlike>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, None).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Scalarlike>(m: &[Vec<F>], ctx: &F::Ctx) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    F::one_in(ctx)
                } else {
                    F::zero_in(ctx)
                }
            }));
            r
        })
        .collect();
    let order: Vec<usize> = (0..n).collect();
    let piv = rref(&mut aug, Some(&order));
    if piv.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// One solution of `A x = b`, or `None` if inconsistent.
pub fn solve<F: Scalarlike>(a: &[Vec<F>], b: &[F], ctx: &F::Ctx) -> Option<Vec<F>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let order: Vec<usize> = (0..=ncols).collect();
    let piv = rref(&mut aug, Some(&order));
    if piv.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::zero_in(ctx); ncols];
    for (row, &c) in aug.iter().zip(&piv) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : A x = 0}`.
pub fn kernel<F: Scalarlike>(a: &[Vec<F>], ncols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m, None);
    let mut is_pivot = vec![false; ncols];
    for &p in &piv {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero_in(ctx); ncols];
        v[free] = F::one_in(ctx);
        for (row, &p) in m.iter().zip(&piv) {
            v[p] = row[free].neg();
        }
        out.push(v);
    }
    out
}

pub fn mat_vec<F: Field>(a: &[Vec<F>], v: &[F], ctx: &F::Ctx) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(F::zero_in(ctx), |acc, (x, y)| {
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    acc.add(&x.mul(y))
                }
            })
        })
        .collect()
}

/// Incrementally built subspace of `F^dim`, kept in echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Scalarlike> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn residual(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.residual(v).iter().all(Field::is_zero)
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.residual(v);
        let Some(p) = (0..self.dim)
            .filter(|&i| !r[i].is_zero())
            .min_by_key(|&i| (r[i].pivot_cost(), i))
        else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &[F]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3, &());
        assert_eq!(k.len(), 1);
        let zero = mat_vec(&a, &k[0], &());
        assert!(zero.iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a, &()).unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]]), &()).is_none());
        let x = solve(&a, &[q(3), q(2)], &()).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1), q(2)], &()).is_none());
    }

    #[test]
    fn column_order_controls_pivots() {
        // one relation x0 + x1 + x2 = 0: the pivot lands on the first visited column
        let mut a = m(&[&[1, 1, 1]]);
        let piv = rref(&mut a, Some(&[2, 1, 0]));
        assert_eq!(piv, vec![2]);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[q(1), q(1), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(2), q(1)]));
        assert!(e.contains(&[q(2), q(0), q(-2)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }
}
