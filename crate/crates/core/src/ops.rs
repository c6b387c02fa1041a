//! Constructions and closed-form operations on the three generator-based
//! representations: chain-form construction and vertex recovery, evaluation,
//! linear maps, Minkowski sums, convex hulls and the conversions between
//! M- and C-representation.
//!
//! Everything here is a pure function; operands are never mutated. The
//! closed-form operations work on the block structure of the exponent
//! matrices, so chain-form inputs keep their constant-size exponent storage.

use alloc::vec::Vec;

use crate::exponent::{compose, Band, BitMatrix, Cell};
use crate::matrix::{point_add, point_scale, point_sub};
use crate::rep::vrep_from_points_unchecked;
use crate::{Caps, CRep, Error, ExponentMatrix, MRep, Matrix, Point, Rational, Rep, VRep, ZRep};

/// A factor assignment; the allowed interval depends on the representation it
/// is evaluated against (`[0,1]` for M/C, `[-1,1]` for Z) and is checked at
/// evaluation time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector {
    values: Vec<Rational>,
}

impl AlphaVector {
    pub fn new(values: Vec<Rational>) -> Self {
        AlphaVector { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_alpha(alpha: &AlphaVector, factors: usize, lower: &Rational) -> Result<(), Error> {
    if alpha.len() != factors {
        return Err(Error::DimensionMismatch {
            context: "factor vector length must equal the representation's p",
        });
    }
    let one = Rational::one();
    if alpha.values.iter().any(|a| a < lower || *a > one) {
        return Err(Error::AlphaOutOfRange);
    }
    Ok(())
}

/// Shared evaluation core: `base + sum_i (prod_{k: E[k,i]=1} alpha_k) col_i`.
/// An exponent of zero means the factor is absent, so `0^0 = 1` by
/// construction.
fn eval_with_bits(base: &[Rational], columns: &Matrix, bits: &BitMatrix, alpha: &[Rational]) -> Point {
    let mut out: Point = base.to_vec();
    for i in 0..columns.cols() {
        let mut monomial = Rational::one();
        for (k, a) in alpha.iter().enumerate() {
            if bits.bit(k, i) {
                monomial = monomial * a;
                if monomial.is_zero() {
                    break;
                }
            }
        }
        if monomial.is_zero() {
            continue;
        }
        for (slot, value) in out.iter_mut().enumerate() {
            *value += &(columns.entry(slot, i) * &monomial);
        }
    }
    out
}

fn dedup_points(points: Vec<Point>) -> Vec<Point> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::new();
    for p in points {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

fn effective_factor_cap(caps: &Caps) -> usize {
    // 2^p enumeration is hopeless long before p = 64; the min also keeps the
    // bit masks below within u64 range.
    caps.max_factors.min(63)
}

impl MRep {
    /// Evaluates the defining sum at one factor assignment `alpha in [0,1]^p`.
    pub fn evaluate(&self, alpha: &AlphaVector) -> Result<Point, Error> {
        check_alpha(alpha, self.factors(), &Rational::zero())?;
        let bits = self.exponents().materialize();
        Ok(eval_with_bits(self.start(), self.basis(), &bits, &alpha.values))
    }

    /// Chain form of an arbitrary point list: start `v_n`, basis columns
    /// `v_i - v_{i+1}` and the lower-triangular exponent matrix `L_{n-1}`.
    ///
    /// The represented set is `conv(points)`; the construction costs `O(nd)`
    /// and never inspects hull-vertex minimality, so interior points and
    /// duplicates are fine (duplicates only produce zero basis vectors).
    pub fn chain_from_points(points: &VRep) -> MRep {
        let vs = points.vertices();
        let n = vs.len();
        let dim = points.dim();
        let mut basis = Matrix::zeros(dim, n - 1);
        for i in 0..n - 1 {
            for row in 0..dim {
                *basis.entry_mut(row, i) = &vs[i][row] - &vs[i + 1][row];
            }
        }
        MRep::new(vs[n - 1].clone(), basis, ExponentMatrix::lower_tri(n - 1))
            .expect("chain construction dimensions are consistent")
    }

    /// Recovers `[v_1, ..., v_n]` from a chain form by suffix sums:
    /// `v_n = s`, `v_i = v_{i+1} + B[:,i]`.
    pub fn chain_vertices(&self) -> Result<VRep, Error> {
        if !self.is_chain_form() {
            return Err(Error::NotChainForm);
        }
        let h = self.generators();
        let mut points = Vec::with_capacity(h + 1);
        let mut current = self.start().clone();
        points.push(current.clone());
        for i in (0..h).rev() {
            current = point_add(&current, &self.basis().column(i));
            points.push(current.clone());
        }
        points.reverse();
        Ok(vrep_from_points_unchecked(self.dim(), points))
    }

    /// Canonical representative of a factor assignment on a chain form: with
    /// `k` the largest index carrying a zero, every entry before `k` is
    /// irrelevant and is zeroed. `evaluate` is invariant under this map.
    pub fn canonical_alpha(&self, alpha: &AlphaVector) -> Result<AlphaVector, Error> {
        if !self.is_chain_form() {
            return Err(Error::NotChainForm);
        }
        check_alpha(alpha, self.factors(), &Rational::zero())?;
        let mut values = alpha.values.clone();
        if let Some(k) = values.iter().rposition(Rational::is_zero) {
            for v in &mut values[..k] {
                *v = Rational::zero();
            }
        }
        Ok(AlphaVector::new(values))
    }

    /// All candidate vertices: evaluations at `alpha in {0,1}^p`, duplicates
    /// removed. Chain forms take the `O(nd)` fast path through
    /// [`MRep::chain_vertices`]; the general path enumerates `2^p` points and
    /// is guarded by `caps.max_factors`.
    ///
    /// The result contains every vertex of the represented polytope, possibly
    /// plus interior points; hull filtering is the oracle's job.
    pub fn candidate_vertices(&self, caps: &Caps) -> Result<VRep, Error> {
        if self.is_chain_form() {
            let points = self.chain_vertices()?.into_vertices();
            return Ok(vrep_from_points_unchecked(self.dim(), dedup_points(points)));
        }
        let p = self.factors();
        let cap = effective_factor_cap(caps);
        if p > cap {
            return Err(Error::CapExceeded { cap, needed: p });
        }
        let bits = self.exponents().materialize();
        let zero = Rational::zero();
        let one = Rational::one();
        let mut points = Vec::with_capacity(1usize << p);
        for mask in 0u64..(1u64 << p) {
            let alpha: Vec<Rational> = (0..p)
                .map(|k| {
                    if mask & (1 << k) != 0 {
                        one.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect();
            points.push(eval_with_bits(self.start(), self.basis(), &bits, &alpha));
        }
        Ok(vrep_from_points_unchecked(self.dim(), dedup_points(points)))
    }

    /// Linear image `<Ms, MB, E>`; the exponent matrix is shared unchanged.
    pub fn linear_map(&self, map: &Matrix) -> Result<MRep, Error> {
        if map.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "transformation matrix columns must equal the set dimension",
            });
        }
        MRep::new(
            map.mul_point(self.start())?,
            map.mul_matrix(self.basis())?,
            self.exponents().clone(),
        )
    }

    /// Minkowski sum `<s1+s2, [B1, B2], diag(E1, E2)>`; touches `O(d)`
    /// scalars plus the block descriptors.
    pub fn minkowski(&self, other: &MRep) -> Result<MRep, Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                context: "minkowski sum operands must share one dimension",
            });
        }
        MRep::new(
            point_add(self.start(), other.start()),
            self.basis().hcat(other.basis())?,
            self.exponents().block_diag(other.exponents()),
        )
    }

    /// Convex hull `<s2, [B2, -B2, B1, s1-s2], E>` with `h = h1 + 2h2 + 1`.
    ///
    /// The operand with fewer basis vectors plays the doubled role, which
    /// minimizes the output size; on a tie the second operand does.
    pub fn convex_hull(&self, other: &MRep) -> Result<MRep, Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                context: "convex hull operands must share one dimension",
            });
        }
        let (big, small) = if self.generators() < other.generators() {
            (other, self)
        } else {
            (self, other)
        };
        let link = point_sub(big.start(), small.start());
        let basis = small
            .basis()
            .hcat(&small.basis().negated())?
            .hcat(big.basis())?
            .hcat(&Matrix::from_columns(self.dim(), &[link])?)?;
        let (e1, e2) = (big.exponents(), small.exponents());
        let exponents = compose(
            &[Band::Mat(e2), Band::Mat(e1), Band::One],
            &[Band::Mat(e2), Band::Mat(e2), Band::Mat(e1), Band::One],
            &[
                &[Cell::Mat(e2), Cell::Mat(e2), Cell::Zero, Cell::Zero],
                &[Cell::Zero, Cell::Zero, Cell::Mat(e1), Cell::Zero],
                &[Cell::Zero, Cell::Ones, Cell::Ones, Cell::Ones],
            ],
        );
        MRep::new(small.start().clone(), basis, exponents)
    }

    /// Rebuilds a chain form from the candidate vertices; with `filter_hull`
    /// the candidates are first reduced to actual hull vertices (exponential
    /// in the dimension, desk scale only). The represented set is unchanged.
    pub fn to_chain_form(&self, filter_hull: bool, caps: &Caps) -> Result<MRep, Error> {
        let candidates = self.candidate_vertices(caps)?;
        let points = if filter_hull {
            crate::oracle::hull_vertices(&candidates, caps)?.hull
        } else {
            candidates
        };
        Ok(MRep::chain_from_points(&points))
    }

    /// Drops the implied exponent matrix of a chain form and stores the
    /// all-ones evaluation as the end point.
    pub fn to_crep(&self) -> Result<CRep, Error> {
        if !self.is_chain_form() {
            return Err(Error::NotChainForm);
        }
        CRep::from_start_and_basis(self.start().clone(), self.basis().clone())
    }
}

impl CRep {
    /// Restores the explicit `<s, B, L_h>` form.
    pub fn to_mrep(&self) -> MRep {
        MRep::new(
            self.start().clone(),
            self.basis().clone(),
            ExponentMatrix::lower_tri(self.generators()),
        )
        .expect("chain representation dimensions are consistent")
    }

    /// Chain linking with `h = h1 + h2 + 1`, built from `O(d)` scalars: the
    /// output chain runs from `s1` through `e1`, across the link column
    /// `s2 - e1`, and on through the second chain to `e2`. Chain columns are
    /// ordered from the far end back to the start, so the basis reads
    /// `[B2, s2 - e1, B1]`.
    pub fn convex_hull(&self, other: &CRep) -> Result<CRep, Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                context: "convex hull operands must share one dimension",
            });
        }
        let bridge = point_sub(other.start(), self.end());
        let basis = other
            .basis()
            .hcat(&Matrix::from_columns(self.dim(), &[bridge])?)?
            .hcat(self.basis())?;
        let out = CRep::from_start_and_basis(self.start().clone(), basis)?;
        debug_assert_eq!(out.end(), other.end());
        Ok(out)
    }

    /// Linear image `<Ms, MB, Me>`; the end-point invariant is preserved by
    /// linearity.
    pub fn linear_map(&self, map: &Matrix) -> Result<CRep, Error> {
        if map.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "transformation matrix columns must equal the set dimension",
            });
        }
        CRep::new(
            map.mul_point(self.start())?,
            map.mul_matrix(self.basis())?,
            map.mul_point(self.end())?,
        )
    }
}

impl ZRep {
    /// Evaluates the defining sum at one factor assignment
    /// `alpha in [-1,1]^p`.
    pub fn evaluate(&self, alpha: &AlphaVector) -> Result<Point, Error> {
        check_alpha(alpha, self.factors(), &-Rational::one())?;
        let bits = self.exponents().materialize();
        Ok(eval_with_bits(
            self.center(),
            self.generators(),
            &bits,
            &alpha.values,
        ))
    }

    /// Evaluations at all `alpha in {-1,1}^p`, duplicates removed. Guarded by
    /// `caps.max_factors`.
    pub fn candidate_vertices(&self, caps: &Caps) -> Result<VRep, Error> {
        let p = self.factors();
        let cap = effective_factor_cap(caps);
        if p > cap {
            return Err(Error::CapExceeded { cap, needed: p });
        }
        let bits = self.exponents().materialize();
        let one = Rational::one();
        let minus_one = -Rational::one();
        let mut points = Vec::with_capacity(1usize << p);
        for mask in 0u64..(1u64 << p) {
            let alpha: Vec<Rational> = (0..p)
                .map(|k| {
                    if mask & (1 << k) != 0 {
                        one.clone()
                    } else {
                        minus_one.clone()
                    }
                })
                .collect();
            points.push(eval_with_bits(self.center(), self.generators(), &bits, &alpha));
        }
        Ok(vrep_from_points_unchecked(self.dim(), dedup_points(points)))
    }

    /// Linear image `<Mc, MG, E>`.
    pub fn linear_map(&self, map: &Matrix) -> Result<ZRep, Error> {
        if map.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "transformation matrix columns must equal the set dimension",
            });
        }
        ZRep::new(
            map.mul_point(self.center())?,
            map.mul_matrix(self.generators())?,
            self.exponents().clone(),
        )
    }

    /// Minkowski sum `<c1+c2, [G1, G2], diag(E1, E2)>`.
    pub fn minkowski(&self, other: &ZRep) -> Result<ZRep, Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                context: "minkowski sum operands must share one dimension",
            });
        }
        ZRep::new(
            point_add(self.center(), other.center()),
            self.generators().hcat(other.generators())?,
            self.exponents().block_diag(other.exponents()),
        )
    }

    /// Convex hull with `h = 2h1 + 2h2 + 1` generators and `p = p1 + p2 + 1`
    /// factors: center `(c1+c2)/2`, generators
    /// `[(c1-c2)/2, G1/2, G1/2, G2/2, -G2/2]` and the block exponent matrix
    /// that ties the extra factor to the duplicated generator groups.
    pub fn convex_hull(&self, other: &ZRep) -> Result<ZRep, Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                context: "convex hull operands must share one dimension",
            });
        }
        let half = Rational::new(1, 2);
        let center = point_scale(&point_add(self.center(), other.center()), &half);
        let spread = point_scale(&point_sub(self.center(), other.center()), &half);
        let g1 = self.generators().scaled(&half);
        let g2 = other.generators().scaled(&half);
        let generators = Matrix::from_columns(self.dim(), &[spread])?
            .hcat(&g1)?
            .hcat(&g1)?
            .hcat(&g2)?
            .hcat(&g2.negated())?;
        let (e1, e2) = (self.exponents(), other.exponents());
        let exponents = compose(
            &[Band::Mat(e1), Band::Mat(e2), Band::One],
            &[
                Band::One,
                Band::Mat(e1),
                Band::Mat(e1),
                Band::Mat(e2),
                Band::Mat(e2),
            ],
            &[
                &[
                    Cell::Zero,
                    Cell::Mat(e1),
                    Cell::Mat(e1),
                    Cell::Zero,
                    Cell::Zero,
                ],
                &[
                    Cell::Zero,
                    Cell::Zero,
                    Cell::Zero,
                    Cell::Mat(e2),
                    Cell::Mat(e2),
                ],
                &[Cell::Ones, Cell::Zero, Cell::Ones, Cell::Zero, Cell::Ones],
            ],
        );
        ZRep::new(center, generators, exponents)
    }
}

impl Rep {
    /// Candidate vertices of any representation kind; the vertex list of a
    /// `VRep` is returned deduplicated as-is.
    pub fn candidate_vertices(&self, caps: &Caps) -> Result<VRep, Error> {
        match self {
            Rep::V(v) => Ok(vrep_from_points_unchecked(
                v.dim(),
                dedup_points(v.vertices().to_vec()),
            )),
            Rep::M(m) => m.candidate_vertices(caps),
            Rep::C(c) => c.to_mrep().candidate_vertices(caps),
            Rep::Z(z) => z.candidate_vertices(caps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn pt(coords: &[i64]) -> Point {
        coords.iter().map(|&c| r(c)).collect()
    }

    fn triangle_chain() -> MRep {
        MRep::chain_from_points(&VRep::new(vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[1, 2])]).unwrap())
    }

    fn alpha(values: &[Rational]) -> AlphaVector {
        AlphaVector::new(values.to_vec())
    }

    #[test]
    fn chain_of_the_triangle() {
        let chain = triangle_chain();
        assert_eq!(chain.start(), &pt(&[1, 2]));
        assert_eq!(chain.basis().column(0), pt(&[-2, 0]));
        assert_eq!(chain.basis().column(1), pt(&[1, -2]));
        assert!(chain.is_chain_form());
        assert_eq!(chain.generators(), 2);
    }

    #[test]
    fn chain_of_five_points() {
        let v = VRep::new(vec![
            pt(&[0, 0]),
            pt(&[0, 2]),
            pt(&[2, 2]),
            pt(&[2, 0]),
            pt(&[1, 3]),
        ])
        .unwrap();
        let chain = MRep::chain_from_points(&v);
        assert_eq!(chain.generators(), 4);
        assert_eq!(chain.start(), &pt(&[1, 3]));
        let cols: Vec<Point> = chain.basis().columns().collect();
        assert_eq!(
            cols,
            vec![pt(&[0, -2]), pt(&[-2, 0]), pt(&[0, 2]), pt(&[1, -3])]
        );
    }

    #[test]
    fn evaluate_chain_endpoints() {
        let chain = triangle_chain();
        assert_eq!(
            chain.evaluate(&alpha(&[r(0), r(0)])).unwrap(),
            pt(&[1, 2])
        );
        assert_eq!(
            chain.evaluate(&alpha(&[r(1), r(1)])).unwrap(),
            pt(&[0, 0])
        );
        assert_eq!(
            chain.evaluate(&alpha(&[r(2), r(0)])),
            Err(Error::AlphaOutOfRange)
        );
        assert_eq!(
            chain.evaluate(&alpha(&[r(1)])),
            Err(Error::DimensionMismatch {
                context: "factor vector length must equal the representation's p",
            })
        );
    }

    #[test]
    fn evaluate_identity_exponent_rep() {
        let rep = MRep::new(
            pt(&[-2, -1]),
            Matrix::from_columns(2, &[pt(&[2, 0]), pt(&[2, 2])]).unwrap(),
            ExponentMatrix::identity(2),
        )
        .unwrap();
        assert_eq!(rep.evaluate(&alpha(&[r(1), r(1)])).unwrap(), pt(&[2, 1]));
    }

    #[test]
    fn chain_vertices_round_trip() {
        let chain = triangle_chain();
        let verts = chain.chain_vertices().unwrap();
        assert_eq!(verts.vertices(), &[pt(&[0, 0]), pt(&[2, 0]), pt(&[1, 2])]);
        let p = MRep::point(pt(&[7, 8]));
        assert_eq!(p.chain_vertices().unwrap().vertices(), &[pt(&[7, 8])]);
    }

    #[test]
    fn duplicate_points_make_inert_zero_basis_vectors() {
        let v = VRep::new(vec![pt(&[0, 0]), pt(&[0, 0]), pt(&[1, 1])]).unwrap();
        let chain = MRep::chain_from_points(&v);
        assert_eq!(chain.generators(), 2);
        assert!(chain.basis().column(0).iter().all(Rational::is_zero));
        assert_eq!(chain.chain_vertices().unwrap(), v);
        let cand = chain.candidate_vertices(&Caps::default()).unwrap();
        assert_eq!(cand.vertices(), &[pt(&[0, 0]), pt(&[1, 1])]);
    }

    #[test]
    fn canonical_alpha_zeroes_the_irrelevant_prefix() {
        let chain = MRep::chain_from_points(
            &VRep::new(vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[1, 2]), pt(&[5, 5])]).unwrap(),
        );
        let a = alpha(&[Rational::new(1, 2), r(0), r(1)]);
        let canon = chain.canonical_alpha(&a).unwrap();
        assert_eq!(canon.values(), &[r(0), r(0), r(1)]);
        assert_eq!(
            chain.evaluate(&a).unwrap(),
            chain.evaluate(&canon).unwrap()
        );

        let ones = alpha(&[r(1), r(1), r(1)]);
        assert_eq!(chain.canonical_alpha(&ones).unwrap(), ones);

        let a = alpha(&[Rational::new(1, 2), Rational::new(1, 3), r(0)]);
        let canon = chain.canonical_alpha(&a).unwrap();
        assert_eq!(canon.values(), &[r(0), r(0), r(0)]);
        assert_eq!(chain.evaluate(&canon).unwrap(), *chain.start());
    }

    #[test]
    fn candidate_vertices_chain_fast_path() {
        let chain = triangle_chain();
        let cand = chain.candidate_vertices(&Caps::default()).unwrap();
        assert_eq!(cand.vertices(), &[pt(&[0, 0]), pt(&[2, 0]), pt(&[1, 2])]);
        let point = MRep::point(pt(&[3, 3]));
        assert_eq!(
            point
                .candidate_vertices(&Caps::default())
                .unwrap()
                .vertices(),
            &[pt(&[3, 3])]
        );
    }

    #[test]
    fn candidate_vertices_enumerates_general_exponents() {
        let rep = MRep::new(
            pt(&[-2, -1]),
            Matrix::from_columns(2, &[pt(&[2, 0]), pt(&[2, 2])]).unwrap(),
            ExponentMatrix::identity(2),
        )
        .unwrap();
        let cand = rep.candidate_vertices(&Caps::default()).unwrap();
        let mut points = cand.vertices().to_vec();
        points.sort();
        assert_eq!(
            points,
            vec![pt(&[-2, -1]), pt(&[0, -1]), pt(&[0, 1]), pt(&[2, 1])]
        );

        let tight = Caps {
            max_factors: 1,
            ..Caps::default()
        };
        assert_eq!(
            rep.candidate_vertices(&tight),
            Err(Error::CapExceeded { cap: 1, needed: 2 })
        );
    }

    #[test]
    fn linear_map_maps_start_and_basis() {
        let chain = triangle_chain();
        let id = Matrix::identity(2);
        assert_eq!(chain.linear_map(&id).unwrap(), chain);

        let proj = Matrix::from_rows(vec![vec![r(1), r(0)]]).unwrap();
        let mapped = chain.linear_map(&proj).unwrap();
        assert_eq!(mapped.start(), &pt(&[1]));
        assert_eq!(mapped.basis().column(0), pt(&[-2]));
        assert_eq!(mapped.basis().column(1), pt(&[1]));
        assert!(mapped.is_chain_form());

        let zero = Matrix::zeros(2, 2);
        let collapsed = chain.linear_map(&zero).unwrap();
        assert_eq!(collapsed.start(), &pt(&[0, 0]));
        assert!(collapsed.basis().column_sum().iter().all(Rational::is_zero));
    }

    #[test]
    fn minkowski_of_axis_segments_is_the_unit_square() {
        let sx = MRep::chain_from_points(&VRep::new(vec![pt(&[1, 0]), pt(&[0, 0])]).unwrap());
        let sy = MRep::chain_from_points(&VRep::new(vec![pt(&[0, 1]), pt(&[0, 0])]).unwrap());
        let sum = sx.minkowski(&sy).unwrap();
        assert_eq!(sum.start(), &pt(&[0, 0]));
        assert_eq!(sum.generators(), 2);
        assert_eq!(sum.factors(), 2);
        assert!(sum.exponents().materialize().is_identity());
        assert_eq!(sum.exponents().storage_size(), 8);
        let mut cand = sum
            .candidate_vertices(&Caps::default())
            .unwrap()
            .into_vertices();
        cand.sort();
        assert_eq!(
            cand,
            vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])]
        );

        // Adding a point only shifts the start.
        let q = MRep::point(pt(&[5, 7]));
        let shifted = sum.minkowski(&q).unwrap();
        assert_eq!(shifted.start(), &pt(&[5, 7]));
        assert_eq!(shifted.basis(), sum.basis());
        assert_eq!(shifted.exponents(), sum.exponents());
    }

    #[test]
    fn convex_hull_of_two_points_is_a_segment() {
        let hull = MRep::point(pt(&[1, 1]))
            .convex_hull(&MRep::point(pt(&[0, 0])))
            .unwrap();
        assert_eq!(hull.generators(), 1);
        assert_eq!(hull.start(), &pt(&[0, 0]));
        assert_eq!(hull.basis().column(0), pt(&[1, 1]));
        let bits = hull.exponents().materialize();
        assert_eq!((bits.rows(), bits.cols()), (1, 1));
        assert!(bits.bit(0, 0));
    }

    #[test]
    fn convex_hull_reorders_to_minimize_generators() {
        let tri = triangle_chain();
        let apex = MRep::point(pt(&[9, 9]));
        let a = tri.convex_hull(&apex).unwrap();
        let b = apex.convex_hull(&tri).unwrap();
        assert_eq!(a.generators(), 3);
        assert_eq!(b.generators(), 3);
        assert_eq!(a, b);
        assert_eq!(a.start(), &pt(&[9, 9]));
        assert!(a.exponents().storage_size() <= 24);
    }

    #[test]
    fn to_chain_form_is_idempotent_on_chains() {
        let chain = triangle_chain();
        let again = chain.to_chain_form(false, &Caps::default()).unwrap();
        assert_eq!(again, chain);

        let zono = MRep::new(
            pt(&[-2, -1]),
            Matrix::from_columns(2, &[pt(&[2, 0]), pt(&[2, 2])]).unwrap(),
            ExponentMatrix::identity(2),
        )
        .unwrap();
        let chained = zono.to_chain_form(false, &Caps::default()).unwrap();
        assert!(chained.is_chain_form());
        assert_eq!(chained.generators(), 3);

        // hull filtering keeps at most the actual hull vertices
        let tri = triangle_chain();
        let apex = MRep::point(pt(&[1, 1]));
        let hull = tri.convex_hull(&apex).unwrap();
        let filtered = hull.to_chain_form(true, &Caps::default()).unwrap();
        assert!(filtered.generators() <= 3);
        assert_eq!(filtered.generators(), 2); // the apex is interior
    }

    #[test]
    fn crep_round_trip() {
        let chain = triangle_chain();
        let c = chain.to_crep().unwrap();
        assert_eq!(c.start(), &pt(&[1, 2]));
        assert_eq!(c.end(), &pt(&[0, 0]));
        let back = c.to_mrep();
        assert_eq!(back, chain);
        assert_eq!(
            back.evaluate(&alpha(&[r(1), r(1)])).unwrap().as_slice(),
            c.end().as_slice()
        );

        let p = MRep::point(pt(&[4, 2])).to_crep().unwrap();
        assert_eq!(p.start(), p.end());
        assert_eq!(p.generators(), 0);

        let zono = MRep::new(
            pt(&[0, 0]),
            Matrix::from_columns(2, &[pt(&[1, 0]), pt(&[0, 1])]).unwrap(),
            ExponentMatrix::identity(2),
        )
        .unwrap();
        assert_eq!(zono.to_crep(), Err(Error::NotChainForm));
    }

    #[test]
    fn crep_convex_hull_links_the_chains() {
        let a = MRep::point(pt(&[0, 0])).to_crep().unwrap();
        let b = MRep::point(pt(&[1, 0])).to_crep().unwrap();
        let seg = a.convex_hull(&b).unwrap();
        assert_eq!(seg.generators(), 1);

        let s1 = MRep::chain_from_points(&VRep::new(vec![pt(&[1, 0]), pt(&[0, 0])]).unwrap())
            .to_crep()
            .unwrap();
        let s2 = MRep::chain_from_points(&VRep::new(vec![pt(&[5, 1]), pt(&[5, 0])]).unwrap())
            .to_crep()
            .unwrap();
        let hull = s1.convex_hull(&s2).unwrap();
        assert_eq!(hull.generators(), 3);
        assert_eq!(hull.end(), s2.end());
    }

    #[test]
    fn crep_linear_map_preserves_the_end_invariant() {
        let c = triangle_chain().to_crep().unwrap();
        let id = Matrix::identity(2);
        assert_eq!(c.linear_map(&id).unwrap(), c);
        let proj = Matrix::from_rows(vec![vec![r(1), r(0)]]).unwrap();
        let mapped = c.linear_map(&proj).unwrap();
        assert_eq!(mapped.end(), &pt(&[0]));
        let embed = Matrix::from_rows(vec![
            vec![r(1), r(0)],
            vec![r(0), r(1)],
            vec![r(1), r(1)],
        ])
        .unwrap();
        assert_eq!(c.linear_map(&embed).unwrap().dim(), 3);
    }

    #[test]
    fn zrep_evaluation_and_candidates() {
        let p1 = ZRep::new(
            pt(&[0, 0]),
            Matrix::from_columns(2, &[pt(&[1, 0]), pt(&[-1, -1])]).unwrap(),
            ExponentMatrix::identity(2),
        )
        .unwrap();
        assert_eq!(p1.evaluate(&alpha(&[r(1), r(1)])).unwrap(), pt(&[0, -1]));
        assert_eq!(p1.evaluate(&alpha(&[r(-1), r(1)])).unwrap(), pt(&[-2, -1]));
        let mut cand = p1
            .candidate_vertices(&Caps::default())
            .unwrap()
            .into_vertices();
        cand.sort();
        assert_eq!(
            cand,
            vec![pt(&[-2, -1]), pt(&[0, -1]), pt(&[0, 1]), pt(&[2, 1])]
        );
        assert_eq!(
            ZRep::point(pt(&[3]))
                .candidate_vertices(&Caps::default())
                .unwrap()
                .vertices(),
            &[pt(&[3])]
        );
    }

    #[test]
    fn zrep_operations_follow_the_count_formulas() {
        let g = Matrix::from_columns(2, &[pt(&[1, 0])]).unwrap();
        let z1 = ZRep::new(pt(&[0, 0]), g.clone(), ExponentMatrix::identity(1)).unwrap();
        let z2 = ZRep::new(
            pt(&[0, 0]),
            Matrix::from_columns(2, &[pt(&[0, 1])]).unwrap(),
            ExponentMatrix::identity(1),
        )
        .unwrap();
        let sum = z1.minkowski(&z2).unwrap();
        assert_eq!(sum.generators_count(), 2);
        assert!(sum.is_zonotope());

        let hull = z1.convex_hull(&z2).unwrap();
        assert_eq!(hull.generators_count(), 5);
        assert_eq!(hull.factors(), 3);

        let points = ZRep::point(pt(&[2, 0]))
            .convex_hull(&ZRep::point(pt(&[0, 0])))
            .unwrap();
        assert_eq!(points.generators_count(), 1);
        assert_eq!(points.center(), &pt(&[1, 0]));
        assert_eq!(points.generators().column(0), pt(&[1, 0]));

        let id = Matrix::identity(2);
        assert_eq!(z1.linear_map(&id).unwrap(), z1);
    }

    #[test]
    fn representation_sizes_match_the_formulas() {
        let chain4 = MRep::chain_from_points(
            &VRep::new(vec![
                pt(&[0, 0]),
                pt(&[1, 0]),
                pt(&[2, 1]),
                pt(&[3, 3]),
                pt(&[0, 5]),
            ])
            .unwrap(),
        );
        assert_eq!(chain4.representation_size(), (4 + 1) * 2 + 2);
        assert_eq!(MRep::point(pt(&[0, 0])).representation_size(), 2);
        let crep = MRep::chain_from_points(
            &VRep::new(vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[2, 1]), pt(&[3, 3])]).unwrap(),
        )
        .to_crep()
        .unwrap();
        assert_eq!(crep.representation_size(), (3 + 2) * 2);
    }
}
