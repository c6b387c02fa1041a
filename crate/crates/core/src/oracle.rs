//! Brute-force exact ground truth for convex geometry at desk scale: point
//! membership, hull-vertex filtering, point symmetry and set equality between
//! any two representations.
//!
//! Membership is decided by a phase-1 simplex over exact rationals with
//! Bland's anti-cycling rule, so degeneracy needs no tolerances and every
//! answer is certified. Everything here is exponential or worse in some
//! parameter and guarded by [`Caps`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{point_add, point_scale, point_sub};
use crate::rep::vrep_from_points_unchecked;
use crate::util::Combinations;
use crate::{Caps, Error, Point, Rational, Rep, VRep};

/// Output of [`hull_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullResult {
    /// Deduplicated hull vertices in lexicographic order.
    pub hull: VRep,
    /// One flag per input point: whether its value is a hull vertex.
    pub is_vertex: Vec<bool>,
}

fn check_point_caps(count: usize, dim: usize, caps: &Caps) -> Result<(), Error> {
    if count > caps.max_points {
        return Err(Error::CapExceeded {
            cap: caps.max_points,
            needed: count,
        });
    }
    if dim > caps.max_dim {
        return Err(Error::CapExceeded {
            cap: caps.max_dim,
            needed: dim,
        });
    }
    Ok(())
}

/// Decides whether `x` is a convex combination of the points of `v`, i.e.
/// whether the system `sum_i l_i v_i = x, sum_i l_i = 1, l >= 0` is feasible.
pub fn contains_point(v: &VRep, x: &[Rational]) -> Result<bool, Error> {
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            context: "membership query point must match the vertex list dimension",
        });
    }
    let d = v.dim();
    let n = v.len();
    let mut rows = vec![vec![Rational::zero(); n]; d + 1];
    for (i, p) in v.vertices().iter().enumerate() {
        for (j, coord) in p.iter().enumerate() {
            rows[j][i] = coord.clone();
        }
        rows[d][i] = Rational::one();
    }
    let mut rhs: Vec<Rational> = x.to_vec();
    rhs.push(Rational::one());
    Ok(phase1_feasible(rows, rhs))
}

/// Independent cross-check for [`contains_point`]: by Caratheodory's theorem
/// a contained point lies in the hull of some affinely independent subset of
/// at most `d + 1` points, whose barycentric coordinates are unique and can
/// be read off a linear solve. Exhaustive over subsets, so only offered for
/// small lists.
pub fn contains_point_caratheodory(v: &VRep, x: &[Rational]) -> Result<bool, Error> {
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            context: "membership query point must match the vertex list dimension",
        });
    }
    if v.len() > 10 {
        return Err(Error::CapExceeded {
            cap: 10,
            needed: v.len(),
        });
    }
    let d = v.dim();
    for size in 1..=(d + 1).min(v.len()) {
        for subset in Combinations::new(v.len(), size) {
            let points: Vec<&Point> = subset.iter().map(|&i| &v.vertices()[i]).collect();
            if let Some(lambda) = solve_barycentric(&points, x) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Solves `sum_i l_i p_i = x, sum_i l_i = 1` exactly. Returns `None` when the
/// points are affinely dependent (no unique solution) or the system is
/// inconsistent.
fn solve_barycentric(points: &[&Point], x: &[Rational]) -> Option<Vec<Rational>> {
    let d = x.len();
    let k = points.len();
    let mut aug = vec![vec![Rational::zero(); k + 1]; d + 1];
    for (i, p) in points.iter().enumerate() {
        for (j, coord) in p.iter().enumerate() {
            aug[j][i] = coord.clone();
        }
        aug[d][i] = Rational::one();
    }
    for (j, coord) in x.iter().enumerate() {
        aug[j][k] = coord.clone();
    }
    aug[d][k] = Rational::one();

    let mut pivot_row_of_col = vec![usize::MAX; k];
    let mut rank = 0usize;
    for col in 0..k {
        let pivot = (rank..d + 1).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(rank, pivot);
        let inv = aug[rank][col].recip().expect("pivot is nonzero");
        for entry in aug[rank].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..d + 1 {
            if r != rank && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..k + 1 {
                    let delta = &aug[rank][c] * &factor;
                    aug[r][c] -= &delta;
                }
            }
        }
        pivot_row_of_col[col] = rank;
        rank += 1;
    }
    // consistency of the leftover equations
    if (rank..d + 1).any(|r| !aug[r][k].is_zero()) {
        return None;
    }
    Some(
        pivot_row_of_col
            .iter()
            .map(|&r| aug[r][k].clone())
            .collect(),
    )
}

/// Filters a point list down to the vertices of its convex hull: a point is
/// a hull vertex iff it is not a convex combination of the remaining points.
/// Duplicates are removed first; the output is sorted lexicographically.
pub fn hull_vertices(v: &VRep, caps: &Caps) -> Result<HullResult, Error> {
    check_point_caps(v.len(), v.dim(), caps)?;
    let unique: Vec<Point> = {
        let set: BTreeSet<Point> = v.vertices().iter().cloned().collect();
        set.into_iter().collect()
    };
    let mut hull_points = Vec::new();
    if unique.len() == 1 {
        hull_points.push(unique[0].clone());
    } else {
        for (i, candidate) in unique.iter().enumerate() {
            let others: Vec<Point> = unique
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let rest = vrep_from_points_unchecked(v.dim(), others);
            if !contains_point(&rest, candidate)? {
                hull_points.push(candidate.clone());
            }
        }
    }
    let hull_set: BTreeSet<&Point> = hull_points.iter().collect();
    let is_vertex = v
        .vertices()
        .iter()
        .map(|p| hull_set.contains(p))
        .collect();
    Ok(HullResult {
        hull: vrep_from_points_unchecked(v.dim(), hull_points),
        is_vertex,
    })
}

/// Exact set equality between any two representations: both sides are
/// expanded to candidate vertices, hull-filtered and compared as sorted
/// lists. Sound and complete for bounded polytopes at desk scale.
pub fn sets_equal(a: &Rep, b: &Rep, caps: &Caps) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "set equality operands must share one dimension",
        });
    }
    let hull_a = hull_vertices(&a.candidate_vertices(caps)?, caps)?.hull;
    let hull_b = hull_vertices(&b.candidate_vertices(caps)?, caps)?.hull;
    Ok(hull_a == hull_b)
}

/// Returns the symmetry center iff the hull-vertex set of `v` is invariant
/// under the reflection `x -> 2c - x` through the hull-vertex centroid.
pub fn is_point_symmetric(v: &VRep, caps: &Caps) -> Result<Option<Point>, Error> {
    let hull = hull_vertices(v, caps)?.hull;
    Ok(symmetric_center_of_extreme_points(hull.vertices()))
}

/// Symmetry check for a list of points already known to be pairwise distinct
/// extreme points (skips the hull filtering).
pub(crate) fn symmetric_center_of_extreme_points(points: &[Point]) -> Option<Point> {
    let n = points.len();
    debug_assert!(n > 0);
    let mut sum = vec![Rational::zero(); points[0].len()];
    for p in points {
        sum = point_add(&sum, p);
    }
    let centroid = point_scale(&sum, &Rational::new(1, n as i64));
    let doubled = point_scale(&centroid, &Rational::from_int(2));
    let set: BTreeSet<&Point> = points.iter().collect();
    for p in points {
        let mirrored = point_sub(&doubled, p);
        if !set.contains(&mirrored) {
            return None;
        }
    }
    Some(centroid)
}

/// Ground-truth Minkowski sum: all pairwise vertex sums, hull-filtered.
pub fn minkowski_oracle(a: &VRep, b: &VRep, caps: &Caps) -> Result<VRep, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "minkowski sum operands must share one dimension",
        });
    }
    check_point_caps(a.len() * b.len(), a.dim(), caps)?;
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for p in a.vertices() {
        for q in b.vertices() {
            sums.push(point_add(p, q));
        }
    }
    let all = vrep_from_points_unchecked(a.dim(), sums);
    Ok(hull_vertices(&all, caps)?.hull)
}

/// Ground-truth convex hull of two point sets: the union, hull-filtered.
pub fn convex_hull_oracle(a: &VRep, b: &VRep, caps: &Caps) -> Result<VRep, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            context: "convex hull operands must share one dimension",
        });
    }
    let mut points = a.vertices().to_vec();
    points.extend_from_slice(b.vertices());
    let all = vrep_from_points_unchecked(a.dim(), points);
    Ok(hull_vertices(&all, caps)?.hull)
}

/// Phase-1 simplex over exact rationals: decides feasibility of
/// `A l = b, l >= 0` by minimizing the sum of artificial variables.
/// Bland's rule (smallest eligible index enters; smallest basic variable
/// leaves on ratio ties) guarantees termination under degeneracy.
fn phase1_feasible(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> bool {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let total = n + m;

    // normalize to b >= 0, append the artificial identity and the rhs
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (r, row) in rows.drain(..).enumerate() {
        let negate = rhs[r].is_negative();
        let mut t: Vec<Rational> = row
            .into_iter()
            .map(|v| if negate { -v } else { v })
            .collect();
        t.extend((0..m).map(|k| {
            if k == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        let b = core::mem::replace(&mut rhs[r], Rational::zero());
        t.push(if negate { -b } else { b });
        tableau.push(t);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // reduced-cost row [c - 1^T A | 0 | -sum(b)] for the all-artificial basis
    let mut cost = vec![Rational::zero(); total + 1];
    for j in 0..total {
        let mut acc = if j >= n {
            Rational::one()
        } else {
            Rational::zero()
        };
        for row in &tableau {
            acc -= &row[j];
        }
        cost[j] = acc;
    }
    let mut objective_negated = Rational::zero();
    for row in &tableau {
        objective_negated -= &row[total];
    }
    cost[total] = objective_negated;

    loop {
        let entering = (0..total).find(|&j| cost[j].is_negative());
        let Some(col) = entering else {
            // optimal; feasible iff the artificial objective vanished
            return cost[total].is_zero();
        };

        let mut leaving: Option<(usize, Rational)> = None;
        for r in 0..m {
            if tableau[r][col].is_positive() {
                let ratio = &tableau[r][total] / &tableau[r][col];
                let better = match &leaving {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
        }
        let (pivot_row, _) = leaving.expect("phase-1 objective is bounded below by zero");

        let inv = tableau[pivot_row][col]
            .recip()
            .expect("pivot entry is positive");
        for entry in tableau[pivot_row].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..m {
            if r != pivot_row && !tableau[r][col].is_zero() {
                let factor = tableau[r][col].clone();
                for c in 0..=total {
                    let delta = &tableau[pivot_row][c] * &factor;
                    tableau[r][c] -= &delta;
                }
            }
        }
        if !cost[col].is_zero() {
            let factor = cost[col].clone();
            for c in 0..=total {
                let delta = &tableau[pivot_row][c] * &factor;
                cost[c] -= &delta;
            }
        }
        basis[pivot_row] = col;
    }
}
