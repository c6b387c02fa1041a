use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// One block of an [`ExponentMatrix`].
///
/// The structured variants store only their dimensions (two integers), which
/// is what keeps the representation size of chain-form operations constant in
/// the number of basis vectors. `Dense` is the fallback for arbitrary bit
/// patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Zero { rows: usize, cols: usize },
    AllOnes { rows: usize, cols: usize },
    /// Square lower-triangular block with 1 at `(i, j)` iff `i >= j`.
    LowerTriOnes { size: usize },
    Identity { size: usize },
    Dense { rows: usize, cols: usize, bits: Vec<bool> },
}

impl Block {
    pub fn dense(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self, Error> {
        if rows.checked_mul(cols) != Some(bits.len()) {
            return Err(Error::InvalidArgument {
                context: "dense block needs rows * cols bits",
            });
        }
        Ok(Block::Dense { rows, cols, bits })
    }

    pub fn rows(&self) -> usize {
        match *self {
            Block::Zero { rows, .. } | Block::AllOnes { rows, .. } | Block::Dense { rows, .. } => {
                rows
            }
            Block::LowerTriOnes { size } | Block::Identity { size } => size,
        }
    }

    pub fn cols(&self) -> usize {
        match *self {
            Block::Zero { cols, .. } | Block::AllOnes { cols, .. } | Block::Dense { cols, .. } => {
                cols
            }
            Block::LowerTriOnes { size } | Block::Identity { size } => size,
        }
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.rows() && col < self.cols());
        match self {
            Block::Zero { .. } => false,
            Block::AllOnes { .. } => true,
            Block::LowerTriOnes { .. } => row >= col,
            Block::Identity { .. } => row == col,
            Block::Dense { cols, bits, .. } => bits[row * cols + col],
        }
    }

    /// Stored scalars: two dimension integers for structured blocks, one bit
    /// per entry for dense blocks.
    pub fn storage_size(&self) -> usize {
        match self {
            Block::Dense { rows, cols, .. } => rows * cols,
            _ => 2,
        }
    }
}

/// Dense `{0,1}` matrix, the materialized form of an [`ExponentMatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self, Error> {
        if rows.checked_mul(cols) != Some(bits.len()) {
            return Err(Error::InvalidArgument {
                context: "bit matrix needs rows * cols bits",
            });
        }
        Ok(BitMatrix { rows, cols, bits })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.bit(i, j) == (i == j)))
    }
}

/// Block-structured `{0,1}` exponent matrix.
///
/// The matrix is a rectangular grid of [`Block`]s: block heights are uniform
/// within each grid row and block widths within each grid column. The empty
/// grid is the `0 x 0` matrix used by single-point representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    grid: Vec<Vec<Block>>,
}

impl ExponentMatrix {
    /// The `0 x 0` matrix (no factors, no generators).
    pub fn empty() -> Self {
        ExponentMatrix { grid: Vec::new() }
    }

    /// Single lower-triangular block `L_n`; the empty matrix for `n = 0`.
    pub fn lower_tri(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            ExponentMatrix {
                grid: vec![vec![Block::LowerTriOnes { size: n }]],
            }
        }
    }

    /// Single identity block `I_n`; the empty matrix for `n = 0`.
    pub fn identity(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            ExponentMatrix {
                grid: vec![vec![Block::Identity { size: n }]],
            }
        }
    }

    pub fn from_grid(grid: Vec<Vec<Block>>) -> Result<Self, Error> {
        if grid.is_empty() {
            return Ok(Self::empty());
        }
        let grid_cols = grid[0].len();
        if grid_cols == 0 || grid.iter().any(|row| row.len() != grid_cols) {
            return Err(Error::InvalidArgument {
                context: "block grid must be rectangular and nonempty per row",
            });
        }
        for row in &grid {
            let h = row[0].rows();
            if row.iter().any(|b| b.rows() != h) {
                return Err(Error::InvalidArgument {
                    context: "block heights must be uniform within a grid row",
                });
            }
        }
        for c in 0..grid_cols {
            let w = grid[0][c].cols();
            if grid.iter().any(|row| row[c].cols() != w) {
                return Err(Error::InvalidArgument {
                    context: "block widths must be uniform within a grid column",
                });
            }
        }
        Ok(ExponentMatrix { grid })
    }

    /// Single dense block holding the given bits; empty if both dims are zero.
    pub fn from_bits(bits: &BitMatrix) -> Self {
        if bits.rows() == 0 && bits.cols() == 0 {
            return Self::empty();
        }
        ExponentMatrix {
            grid: vec![vec![Block::Dense {
                rows: bits.rows,
                cols: bits.cols,
                bits: bits.bits.clone(),
            }]],
        }
    }

    pub fn grid(&self) -> &[Vec<Block>] {
        &self.grid
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.grid.iter().flatten()
    }

    pub fn block_count(&self) -> usize {
        self.grid.iter().map(Vec::len).sum()
    }

    pub fn row_heights(&self) -> Vec<usize> {
        self.grid.iter().map(|row| row[0].rows()).collect()
    }

    pub fn col_widths(&self) -> Vec<usize> {
        if self.grid.is_empty() {
            return Vec::new();
        }
        self.grid[0].iter().map(Block::cols).collect()
    }

    /// Logical row count `p` (the number of factors).
    pub fn rows(&self) -> usize {
        self.row_heights().iter().sum()
    }

    /// Logical column count `h` (the number of generators).
    pub fn cols(&self) -> usize {
        self.col_widths().iter().sum()
    }

    /// Expands every block to its bit pattern.
    pub fn materialize(&self) -> BitMatrix {
        let rows = self.rows();
        let cols = self.cols();
        let mut bits = vec![false; rows * cols];
        let mut row_off = 0;
        for grid_row in &self.grid {
            let mut col_off = 0;
            for block in grid_row {
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        bits[(row_off + i) * cols + (col_off + j)] = block.bit(i, j);
                    }
                }
                col_off += block.cols();
            }
            row_off += grid_row[0].rows();
        }
        BitMatrix { rows, cols, bits }
    }

    /// Stored-scalar count: 2 per structured block, `rows * cols` per dense
    /// block. This is the quantity the compact-size guarantees are about.
    pub fn storage_size(&self) -> usize {
        self.blocks().map(Block::storage_size).sum()
    }

    /// True iff the matrix is a single `L_h` block for the given `h` (the
    /// empty matrix counts as `L_0`).
    pub fn is_lower_tri_of(&self, h: usize) -> bool {
        if self.grid.is_empty() {
            return h == 0;
        }
        self.grid.len() == 1
            && self.grid[0].len() == 1
            && self.grid[0][0] == Block::LowerTriOnes { size: h }
    }

    /// Block-diagonal composition `[[self, 0], [0, other]]`; the zero blocks
    /// are split along both operands' band structure.
    pub fn block_diag(&self, other: &ExponentMatrix) -> ExponentMatrix {
        compose(
            &[Band::Mat(self), Band::Mat(other)],
            &[Band::Mat(self), Band::Mat(other)],
            &[
                &[Cell::Mat(self), Cell::Zero],
                &[Cell::Zero, Cell::Mat(other)],
            ],
        )
    }
}

/// One macro row or column of a block-grid composition: either all bands of
/// an existing matrix or a single band of size 1.
pub(crate) enum Band<'a> {
    Mat(&'a ExponentMatrix),
    One,
}

/// Content of one macro cell of a composition.
pub(crate) enum Cell<'a> {
    Zero,
    Ones,
    /// Copy the grid of this matrix; its row and column bands must be the
    /// ones contributed by the same matrix.
    Mat(&'a ExponentMatrix),
}

/// Builds a block grid from macro bands. Bands contributed by an empty matrix
/// vanish, so degenerate operands (single points) leave no trace in the
/// output grid.
pub(crate) fn compose(
    row_bands: &[Band<'_>],
    col_bands: &[Band<'_>],
    cells: &[&[Cell<'_>]],
) -> ExponentMatrix {
    // (macro index, index into the source grid, band size)
    fn expand(bands: &[Band<'_>], by_cols: bool) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (macro_idx, band) in bands.iter().enumerate() {
            match band {
                Band::Mat(m) => {
                    let sizes = if by_cols {
                        m.col_widths()
                    } else {
                        m.row_heights()
                    };
                    for (sub, size) in sizes.into_iter().enumerate() {
                        out.push((macro_idx, sub, size));
                    }
                }
                Band::One => out.push((macro_idx, 0, 1)),
            }
        }
        out
    }

    let rows = expand(row_bands, false);
    let cols = expand(col_bands, true);
    let mut grid = Vec::with_capacity(rows.len());
    for &(macro_r, sub_r, height) in &rows {
        let mut grid_row = Vec::with_capacity(cols.len());
        for &(macro_c, sub_c, width) in &cols {
            let block = match &cells[macro_r][macro_c] {
                Cell::Zero => Block::Zero {
                    rows: height,
                    cols: width,
                },
                Cell::Ones => Block::AllOnes {
                    rows: height,
                    cols: width,
                },
                Cell::Mat(m) => m.grid[sub_r][sub_c].clone(),
            };
            grid_row.push(block);
        }
        grid.push(grid_row);
    }
    ExponentMatrix::from_grid(grid).expect("composed grid is rectangular by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(m: &ExponentMatrix) -> Vec<Vec<bool>> {
        let d = m.materialize();
        (0..d.rows())
            .map(|i| (0..d.cols()).map(|j| d.bit(i, j)).collect())
            .collect()
    }

    #[test]
    fn lower_tri_materializes_to_its_pattern() {
        let l2 = ExponentMatrix::lower_tri(2);
        assert_eq!(bits(&l2), vec![vec![true, false], vec![true, true]]);
        let z = ExponentMatrix::from_grid(vec![vec![Block::Zero { rows: 1, cols: 3 }]]).unwrap();
        assert_eq!(bits(&z), vec![vec![false, false, false]]);
    }

    #[test]
    fn minkowski_grid_of_two_l1_blocks_is_the_identity() {
        let sum = ExponentMatrix::lower_tri(1).block_diag(&ExponentMatrix::lower_tri(1));
        assert!(sum.materialize().is_identity());
        assert_eq!(sum.block_count(), 4);
        assert_eq!(sum.storage_size(), 8);
    }

    #[test]
    fn storage_size_counts_two_per_structured_block() {
        assert_eq!(ExponentMatrix::lower_tri(99).storage_size(), 2);
        let dense = ExponentMatrix::from_bits(&BitMatrix::new(3, 5, vec![false; 15]).unwrap());
        assert_eq!(dense.storage_size(), 15);
    }

    #[test]
    fn empty_matrix_is_the_zero_by_zero_chain() {
        let e = ExponentMatrix::empty();
        assert_eq!((e.rows(), e.cols()), (0, 0));
        assert_eq!(e.storage_size(), 0);
        assert!(e.is_lower_tri_of(0));
        assert!(!e.is_lower_tri_of(1));
        assert!(e.materialize().is_identity());
    }

    #[test]
    fn grid_validation_rejects_ragged_blocks() {
        let bad = ExponentMatrix::from_grid(vec![vec![
            Block::LowerTriOnes { size: 2 },
            Block::Zero { rows: 1, cols: 1 },
        ]]);
        assert!(bad.is_err());
        let bad_cols = ExponentMatrix::from_grid(vec![
            vec![Block::Zero { rows: 1, cols: 2 }],
            vec![Block::Zero { rows: 1, cols: 3 }],
        ]);
        assert!(bad_cols.is_err());
    }

    #[test]
    fn block_diag_keeps_structured_blocks_of_nested_grids() {
        let a = ExponentMatrix::lower_tri(2).block_diag(&ExponentMatrix::lower_tri(3));
        let b = a.block_diag(&ExponentMatrix::identity(1));
        assert_eq!(b.block_count(), 9);
        assert_eq!((b.rows(), b.cols()), (6, 6));
        let d = b.materialize();
        assert!(d.bit(5, 5) && d.bit(1, 0) && !d.bit(0, 5) && !d.bit(5, 0));
        assert!(b.storage_size() <= b.rows() * b.cols() + 2 * b.block_count());
    }

    #[test]
    fn dense_dimension_overflow_is_rejected() {
        assert!(Block::dense(usize::MAX, 2, vec![false; 2]).is_err());
        assert!(BitMatrix::new(usize::MAX, usize::MAX, vec![true]).is_err());
    }
}
