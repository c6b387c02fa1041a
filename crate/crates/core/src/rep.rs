use alloc::vec::Vec;

use crate::matrix::{point_add, point_is_zero, point_sub};
use crate::{Error, ExponentMatrix, Matrix, Point};

/// Vertex representation: a plain list of points.
///
/// The points are not required to be hull vertices; consumers that need the
/// minimal vertex set filter through [`crate::oracle::hull_vertices`].
/// Duplicates are permitted and deduplicated lazily for the same reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    dim: usize,
    vertices: Vec<Point>,
}

impl VRep {
    pub fn new(vertices: Vec<Point>) -> Result<Self, Error> {
        let dim = match vertices.first() {
            Some(p) => p.len(),
            None => return Err(Error::EmptyInput),
        };
        if vertices.iter().any(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                context: "all points of a vertex list must share one dimension",
            });
        }
        Ok(VRep { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty lists
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    /// Stored scalar count `n * d`.
    pub fn representation_size(&self) -> usize {
        self.vertices.len() * self.dim
    }
}

/// M-representation `<s, B, E>`: the set of points
/// `s + sum_i (prod_k alpha_k^(E[k,i])) B[:,i]` with `alpha in [0,1]^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MRep {
    start: Point,
    basis: Matrix,
    exponents: ExponentMatrix,
}

impl MRep {
    pub fn new(start: Point, basis: Matrix, exponents: ExponentMatrix) -> Result<Self, Error> {
        if basis.rows() != start.len() {
            return Err(Error::DimensionMismatch {
                context: "basis row count must equal the start point dimension",
            });
        }
        if exponents.cols() != basis.cols() {
            return Err(Error::DimensionMismatch {
                context: "exponent matrix must have one column per basis vector",
            });
        }
        Ok(MRep {
            start,
            basis,
            exponents,
        })
    }

    /// The single point `s` (empty basis, empty exponents).
    pub fn point(start: Point) -> Self {
        let dim = start.len();
        MRep {
            start,
            basis: Matrix::zeros(dim, 0),
            exponents: ExponentMatrix::empty(),
        }
    }

    pub fn dim(&self) -> usize {
        self.start.len()
    }

    /// Number of basis vectors `h`.
    pub fn generators(&self) -> usize {
        self.basis.cols()
    }

    /// Number of factors `p`.
    pub fn factors(&self) -> usize {
        self.exponents.rows()
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn exponents(&self) -> &ExponentMatrix {
        &self.exponents
    }

    /// True iff the exponent matrix is a single `L_h` block, i.e. the
    /// representation is the chain form produced by `chain_from_points`.
    pub fn is_chain_form(&self) -> bool {
        self.exponents.is_lower_tri_of(self.basis.cols())
    }

    /// Stored rational scalars plus the exponent storage size.
    pub fn representation_size(&self) -> usize {
        self.start.len() + self.basis.scalar_count() + self.exponents.storage_size()
    }
}

/// Chain representation `<s, B, e>`: a chain form with the `L_h` exponent
/// matrix implied and the end point stored explicitly.
///
/// The end point always equals the all-ones evaluation `s + sum_i B[:,i]`;
/// the constructor enforces this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRep {
    start: Point,
    basis: Matrix,
    end: Point,
}

impl CRep {
    pub fn new(start: Point, basis: Matrix, end: Point) -> Result<Self, Error> {
        if basis.rows() != start.len() || end.len() != start.len() {
            return Err(Error::DimensionMismatch {
                context: "chain representation components must share one dimension",
            });
        }
        if point_add(&start, &basis.column_sum()) != end {
            return Err(Error::InvalidArgument {
                context: "end point must equal start plus the sum of all basis vectors",
            });
        }
        Ok(CRep { start, basis, end })
    }

    /// Computes the end point instead of taking it on trust.
    pub fn from_start_and_basis(start: Point, basis: Matrix) -> Result<Self, Error> {
        if basis.rows() != start.len() {
            return Err(Error::DimensionMismatch {
                context: "basis row count must equal the start point dimension",
            });
        }
        let end = point_add(&start, &basis.column_sum());
        Ok(CRep { start, basis, end })
    }

    pub fn dim(&self) -> usize {
        self.start.len()
    }

    pub fn generators(&self) -> usize {
        self.basis.cols()
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn end(&self) -> &Point {
        &self.end
    }

    /// `(h + 2) * d`: start, basis and end; the exponent matrix is implied.
    pub fn representation_size(&self) -> usize {
        2 * self.start.len() + self.basis.scalar_count()
    }
}

/// Z-representation `<c, G, E>`: same algebraic form as [`MRep`] with factors
/// ranging over `[-1, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZRep {
    center: Point,
    generators: Matrix,
    exponents: ExponentMatrix,
}

impl ZRep {
    pub fn new(center: Point, generators: Matrix, exponents: ExponentMatrix) -> Result<Self, Error> {
        if generators.rows() != center.len() {
            return Err(Error::DimensionMismatch {
                context: "generator row count must equal the center dimension",
            });
        }
        if exponents.cols() != generators.cols() {
            return Err(Error::DimensionMismatch {
                context: "exponent matrix must have one column per generator",
            });
        }
        Ok(ZRep {
            center,
            generators,
            exponents,
        })
    }

    pub fn point(center: Point) -> Self {
        let dim = center.len();
        ZRep {
            center,
            generators: Matrix::zeros(dim, 0),
            exponents: ExponentMatrix::empty(),
        }
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn generators_count(&self) -> usize {
        self.generators.cols()
    }

    pub fn factors(&self) -> usize {
        self.exponents.rows()
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn generators(&self) -> &Matrix {
        &self.generators
    }

    pub fn exponents(&self) -> &ExponentMatrix {
        &self.exponents
    }

    /// True iff the exponent matrix materializes to `I_h`.
    pub fn is_zonotope(&self) -> bool {
        let bits = self.exponents.materialize();
        bits.cols() == self.generators.cols() && bits.is_identity()
    }

    pub fn representation_size(&self) -> usize {
        self.center.len() + self.generators.scalar_count() + self.exponents.storage_size()
    }
}

/// Ordered list of line segments `[l_start, l_end]` spanning a zonotope by
/// their Minkowski sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentList {
    dim: usize,
    segments: Vec<(Point, Point)>,
}

impl SegmentList {
    pub fn new(segments: Vec<(Point, Point)>) -> Result<Self, Error> {
        let dim = match segments.first() {
            Some((start, _)) => start.len(),
            None => return Err(Error::EmptyInput),
        };
        for (start, end) in &segments {
            if start.len() != dim || end.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "all segments must share one dimension",
                });
            }
            if point_is_zero(&point_sub(end, start)) {
                return Err(Error::InvalidArgument {
                    context: "segments must have nonzero direction",
                });
            }
        }
        Ok(SegmentList { dim, segments })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty lists
    }

    pub fn segments(&self) -> &[(Point, Point)] {
        &self.segments
    }
}

/// Any of the four representations; lets kind-agnostic operations such as
/// set equality take either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rep {
    V(VRep),
    M(MRep),
    C(CRep),
    Z(ZRep),
}

impl Rep {
    pub fn dim(&self) -> usize {
        match self {
            Rep::V(v) => v.dim(),
            Rep::M(m) => m.dim(),
            Rep::C(c) => c.dim(),
            Rep::Z(z) => z.dim(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Rep::V(_) => "vrep",
            Rep::M(_) => "mrep",
            Rep::C(_) => "crep",
            Rep::Z(_) => "zrep",
        }
    }

    pub fn representation_size(&self) -> usize {
        match self {
            Rep::V(v) => v.representation_size(),
            Rep::M(m) => m.representation_size(),
            Rep::C(c) => c.representation_size(),
            Rep::Z(z) => z.representation_size(),
        }
    }
}

pub(crate) fn vrep_from_points_unchecked(dim: usize, vertices: Vec<Point>) -> VRep {
    debug_assert!(!vertices.is_empty());
    debug_assert!(vertices.iter().all(|p| p.len() == dim));
    VRep { dim, vertices }
}
