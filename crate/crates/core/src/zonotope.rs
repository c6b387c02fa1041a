//! Zonotope construction from line segments, the vertex-count relation,
//! desk-scale zonotope detection, and the reduction algorithm that represents
//! a vertex set with fewer basis vectors whenever a maximal subset spans a
//! zonotope.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{point_add, point_scale, point_sub};
use crate::oracle::{contains_point, hull_vertices, symmetric_center_of_extreme_points};
use crate::rep::vrep_from_points_unchecked;
use crate::util::Combinations;
use crate::{Caps, Error, ExponentMatrix, MRep, Matrix, Point, Rational, SegmentList, VRep};

/// A segment decomposition of (a subset of) a point set's hull vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeDecomposition {
    /// Segments whose Minkowski sum spans the zonotope.
    pub segments: SegmentList,
    /// Sum of the segment start points; the all-zero corner of the zonotope.
    pub start_sum: Point,
    /// Indices of the input points whose values form the zonotope. The
    /// endpoint sums of `segments`, hull-filtered, reproduce exactly those
    /// points.
    pub subset_indices: Vec<usize>,
}

/// Result of [`reduce`]: the representation plus the zonotope decomposition
/// when the zonotope branch fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rep: MRep,
    pub zonotope: Option<ZonotopeDecomposition>,
}

/// M-representation of the zonotope spanned by the Minkowski sum of the given
/// segments: start `sum_i l_i1`, basis columns `l_i2 - l_i1` and the identity
/// exponent matrix. Equals the iterated Minkowski sum of the segment reps.
pub fn zonotope_from_segments(segments: &SegmentList) -> MRep {
    let dim = segments.dim();
    let mut start = vec![Rational::zero(); dim];
    let mut columns = Vec::with_capacity(segments.len());
    for (from, to) in segments.segments() {
        start = point_add(&start, from);
        columns.push(point_sub(to, from));
    }
    let basis = Matrix::from_columns(dim, &columns).expect("segment dimensions are uniform");
    MRep::new(start, basis, ExponentMatrix::identity(segments.len()))
        .expect("zonotope construction dimensions are consistent")
}

/// Vertex count of an `m`-dimensional zonotope spanned by `h` pairwise
/// distinct generators: `2 * sum_{i=0}^{min(m,h)-1} C(h-1, i)`.
///
/// The relation is exact only for generators in general position; degenerate
/// configurations can have fewer vertices.
pub fn zonotope_vertex_count(m: usize, h: usize) -> Result<u64, Error> {
    if m == 0 || h == 0 {
        return Err(Error::InvalidArgument {
            context: "vertex count needs m >= 1 and h >= 1",
        });
    }
    let mut total: u128 = 0;
    for i in 0..m.min(h) {
        total += num_integer::binomial((h - 1) as u128, i as u128);
    }
    (2 * total).try_into().map_err(|_| Error::InvalidArgument {
        context: "vertex count overflows",
    })
}

/// Decides whether the hull vertices of `v` form a zonotope and, if so,
/// returns spanning segments.
///
/// Exhaustive desk-scale search: point symmetry about the hull-vertex
/// centroid is checked first (a necessary criterion), the candidate
/// generators are the hull's edge directions oriented lexicographically
/// positive, and generator subsets are tried in increasing size. A subset is
/// accepted when its `2^h` endpoint sums, anchored at the lexicographically
/// minimal vertex, hull-filter to exactly the input hull-vertex set.
pub fn detect_zonotope(v: &VRep, caps: &Caps) -> Result<Option<ZonotopeDecomposition>, Error> {
    if v.len() > caps.max_zonotope_points {
        return Err(Error::CapExceeded {
            cap: caps.max_zonotope_points,
            needed: v.len(),
        });
    }
    let hull = hull_vertices(v, caps)?.hull;
    let Some(decomposition) = detect_on_hull(hull.vertices())? else {
        return Ok(None);
    };
    let hull_set: BTreeSet<&Point> = hull.vertices().iter().collect();
    let subset_indices = v
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, p)| hull_set.contains(p))
        .map(|(i, _)| i)
        .collect();
    Ok(Some(ZonotopeDecomposition {
        subset_indices,
        ..decomposition
    }))
}

/// Detection core over a list of pairwise distinct hull vertices; the
/// returned `subset_indices` are left empty for the caller to fill.
fn detect_on_hull(hull: &[Point]) -> Result<Option<ZonotopeDecomposition>, Error> {
    if hull.len() < 2 {
        return Ok(None); // a single point spans no segments
    }
    let Some(center) = symmetric_center_of_extreme_points(hull) else {
        return Ok(None);
    };
    let dim = hull[0].len();
    let v_min = hull
        .iter()
        .min()
        .expect("hull vertex list is nonempty")
        .clone();

    // Candidate generators: edge directions of the hull, oriented
    // lexicographically positive so that v_min is the all-zero corner.
    let mut pool: Vec<Point> = Vec::new();
    {
        let mut seen = BTreeSet::new();
        for pair in Combinations::new(hull.len(), 2) {
            let (u, w) = (&hull[pair[0]], &hull[pair[1]]);
            if !is_edge(hull, pair[0], pair[1], dim)? {
                continue;
            }
            let diff = point_sub(w, u);
            let direction = if lex_positive(&diff) {
                diff
            } else {
                diff.iter().map(|c| -c).collect()
            };
            if seen.insert(direction.clone()) {
                pool.push(direction);
            }
        }
        pool.sort();
    }

    // The generators of a spanning subset must sum to the antipode offset.
    let target = point_scale(&point_sub(&center, &v_min), &Rational::from_int(2));
    let hull_set: BTreeSet<&Point> = hull.iter().collect();
    let hull_vrep = vrep_from_points_unchecked(dim, hull.to_vec());

    // a zonotope with n vertices never needs more than n/2 pairwise distinct
    // generators, so larger subsets cannot be the first hit
    for h in 1..=pool.len().min(hull.len() / 2) {
        for subset in Combinations::new(pool.len(), h) {
            let generators: Vec<&Point> = subset.iter().map(|&i| &pool[i]).collect();
            let mut sum = vec![Rational::zero(); dim];
            for g in &generators {
                sum = point_add(&sum, g);
            }
            if sum != target {
                continue;
            }
            // endpoint sums anchored at v_min
            let mut points: BTreeSet<Point> = BTreeSet::new();
            points.insert(v_min.clone());
            for g in &generators {
                let shifted: Vec<Point> =
                    points.iter().map(|p| point_add(p, g)).collect();
                points.extend(shifted);
            }
            if !hull_set.iter().all(|p| points.contains(*p)) {
                continue;
            }
            let mut spans = true;
            for p in &points {
                if !hull_set.contains(p) && !contains_point(&hull_vrep, p)? {
                    spans = false;
                    break;
                }
            }
            if !spans {
                continue;
            }

            let mut segments = Vec::with_capacity(h);
            let mut anchor = v_min.clone();
            for g in &generators {
                let end = point_add(&anchor, g);
                segments.push((anchor.clone(), end));
                anchor = vec![Rational::zero(); dim];
            }
            let segments = SegmentList::new(segments).expect("generators are nonzero");
            return Ok(Some(ZonotopeDecomposition {
                segments,
                start_sum: v_min,
                subset_indices: Vec::new(),
            }));
        }
    }
    Ok(None)
}

/// Adjacency oracle: two hull vertices span an edge iff their midpoint is not
/// a convex combination of the remaining hull vertices.
fn is_edge(hull: &[Point], a: usize, b: usize, dim: usize) -> Result<bool, Error> {
    if hull.len() == 2 {
        return Ok(true);
    }
    let midpoint = point_scale(&point_add(&hull[a], &hull[b]), &Rational::new(1, 2));
    let others: Vec<Point> = hull
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != a && i != b)
        .map(|(_, p)| p.clone())
        .collect();
    let rest = vrep_from_points_unchecked(dim, others);
    Ok(!contains_point(&rest, &midpoint)?)
}

fn lex_positive(p: &[Rational]) -> bool {
    for c in p {
        if c.is_positive() {
            return true;
        }
        if c.is_negative() {
            return false;
        }
    }
    false
}

/// Searches the subsets of the hull vertices of `v`, largest first and in
/// lexicographic order within one size, for the first subset of more than two
/// points that spans a zonotope. Non-point-symmetric subsets are skipped
/// outright.
pub fn find_maximal_zonotope_subset(
    v: &VRep,
    caps: &Caps,
) -> Result<Option<(VRep, ZonotopeDecomposition)>, Error> {
    if v.len() > caps.max_zonotope_points {
        return Err(Error::CapExceeded {
            cap: caps.max_zonotope_points,
            needed: v.len(),
        });
    }
    let hull = hull_vertices(v, caps)?.hull;
    let n = hull.len();
    for size in (3..=n).rev() {
        for subset in Combinations::new(n, size) {
            let points: Vec<Point> = subset.iter().map(|&i| hull.vertices()[i].clone()).collect();
            if symmetric_center_of_extreme_points(&points).is_none() {
                continue;
            }
            if let Some(decomposition) = detect_on_hull(&points)? {
                let point_set: BTreeSet<&Point> = points.iter().collect();
                let subset_indices: Vec<usize> = v
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| point_set.contains(p))
                    .map(|(i, _)| i)
                    .collect();
                let subset_vrep = vrep_from_points_unchecked(v.dim(), points);
                return Ok(Some((
                    subset_vrep,
                    ZonotopeDecomposition {
                        subset_indices,
                        ..decomposition
                    },
                )));
            }
        }
    }
    Ok(None)
}

/// Reduction algorithm: if a maximal subset of the hull vertices spans a
/// zonotope, start from its segment representation and fold the remaining
/// hull vertices in one by one (each adds exactly one basis vector);
/// otherwise fall back to the chain form. The output never uses more than
/// `n - 1` basis vectors and represents exactly `conv(v)`.
pub fn reduce(v: &VRep, caps: &Caps) -> Result<Reduction, Error> {
    if v.len() > caps.max_zonotope_points {
        return Err(Error::CapExceeded {
            cap: caps.max_zonotope_points,
            needed: v.len(),
        });
    }
    let hull = hull_vertices(v, caps)?.hull;
    match find_maximal_zonotope_subset(&hull, caps)? {
        Some((subset, decomposition)) => {
            let subset_set: BTreeSet<&Point> = subset.vertices().iter().collect();
            let mut rep = zonotope_from_segments(&decomposition.segments);
            for p in hull.vertices() {
                if !subset_set.contains(p) {
                    rep = rep.convex_hull(&MRep::point(p.clone()))?;
                }
            }
            // remap the decomposition's indices to the points of `v`
            let subset_indices: Vec<usize> = v
                .vertices()
                .iter()
                .enumerate()
                .filter(|(_, p)| subset_set.contains(p))
                .map(|(i, _)| i)
                .collect();
            Ok(Reduction {
                rep,
                zonotope: Some(ZonotopeDecomposition {
                    subset_indices,
                    ..decomposition
                }),
            })
        }
        None => Ok(Reduction {
            rep: MRep::chain_from_points(&hull),
            zonotope: None,
        }),
    }
}
