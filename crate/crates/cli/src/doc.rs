//! JSON document format for the four representation kinds.
//!
//! One representation per UTF-8 file:
//!
//! ```json
//! {
//!   "schemaVersion": 1,
//!   "kind": "mrep",
//!   "payload": { "start": ["1", "2"], "basis": [["-2", "0"], ["1", "-2"]],
//!                "exponents": { "grid": [[{ "block": "L", "rows": 2, "cols": 2 }]] } }
//! }
//! ```
//!
//! Rationals are strings `"num/den"` (bare integers allowed, also as JSON
//! integers), so files round-trip without any floating-point loss. Basis and
//! generator matrices are stored as lists of columns. Exponent matrices are
//! stored block by block in grid order, mirroring the in-memory structure,
//! so the compact sizes survive a save/load cycle.

use std::fmt;

use mrep_core::{Block, CRep, ExponentMatrix, MRep, Matrix, Point, Rational, Rep, VRep, ZRep};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Anything that makes a document unreadable: bad JSON, bad rationals, an
/// unknown kind or payload that fails the representation invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError(String);

impl DocError {
    fn new(message: impl Into<String>) -> Self {
        DocError(message.into())
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocError {}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawDocument {
    schema_version: u32,
    kind: String,
    payload: serde_json::Value,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OutDocument<T> {
    schema_version: u32,
    kind: &'static str,
    payload: T,
}

/// A rational on the wire: `"num/den"`, `"num"`, or a bare JSON integer.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RatRepr {
    Int(i64),
    Str(String),
}

impl RatRepr {
    fn to_rational(&self) -> Result<Rational, DocError> {
        match self {
            RatRepr::Int(n) => Ok(Rational::from_int(*n)),
            RatRepr::Str(s) => s
                .parse()
                .map_err(|e| DocError::new(format!("bad rational: {e}"))),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        RatRepr::Str(r.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    block: String,
    rows: usize,
    cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bits: Option<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct ExponentsRepr {
    grid: Vec<Vec<BlockRepr>>,
}

#[derive(Serialize, Deserialize)]
struct VPayload {
    dim: usize,
    vertices: Vec<Vec<RatRepr>>,
}

#[derive(Serialize, Deserialize)]
struct MPayload {
    start: Vec<RatRepr>,
    basis: Vec<Vec<RatRepr>>,
    exponents: ExponentsRepr,
}

#[derive(Serialize, Deserialize)]
struct CPayload {
    start: Vec<RatRepr>,
    basis: Vec<Vec<RatRepr>>,
    end: Vec<RatRepr>,
}

#[derive(Serialize, Deserialize)]
struct ZPayload {
    center: Vec<RatRepr>,
    generators: Vec<Vec<RatRepr>>,
    exponents: ExponentsRepr,
}

fn point_from(values: &[RatRepr]) -> Result<Point, DocError> {
    values.iter().map(RatRepr::to_rational).collect()
}

fn point_to(p: &[Rational]) -> Vec<RatRepr> {
    p.iter().map(RatRepr::from_rational).collect()
}

fn columns_from(dim: usize, columns: &[Vec<RatRepr>]) -> Result<Matrix, DocError> {
    let cols: Vec<Point> = columns
        .iter()
        .map(|c| point_from(c))
        .collect::<Result<_, _>>()?;
    Matrix::from_columns(dim, &cols).map_err(|e| DocError::new(e.to_string()))
}

fn columns_to(m: &Matrix) -> Vec<Vec<RatRepr>> {
    m.columns().map(|c| point_to(&c)).collect()
}

fn block_from(repr: &BlockRepr) -> Result<Block, DocError> {
    let square = |tag: &str| -> Result<usize, DocError> {
        if repr.rows == repr.cols {
            Ok(repr.rows)
        } else {
            Err(DocError::new(format!("block {tag:?} must be square")))
        }
    };
    match repr.block.as_str() {
        "L" => Ok(Block::LowerTriOnes { size: square("L")? }),
        "I" => Ok(Block::Identity { size: square("I")? }),
        "O" => Ok(Block::Zero {
            rows: repr.rows,
            cols: repr.cols,
        }),
        "J" => Ok(Block::AllOnes {
            rows: repr.rows,
            cols: repr.cols,
        }),
        "dense" => {
            let raw = repr
                .bits
                .as_ref()
                .ok_or_else(|| DocError::new("dense block needs a bits array"))?;
            let bits = raw
                .iter()
                .map(|&b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(DocError::new(format!("bit must be 0 or 1, got {other}"))),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            Block::dense(repr.rows, repr.cols, bits).map_err(|e| DocError::new(e.to_string()))
        }
        other => Err(DocError::new(format!("unknown block tag {other:?}"))),
    }
}

fn block_to(block: &Block) -> BlockRepr {
    let (tag, bits) = match block {
        Block::LowerTriOnes { .. } => ("L", None),
        Block::Identity { .. } => ("I", None),
        Block::Zero { .. } => ("O", None),
        Block::AllOnes { .. } => ("J", None),
        Block::Dense { rows, cols, .. } => {
            let mut raw = Vec::with_capacity(rows * cols);
            for i in 0..*rows {
                for j in 0..*cols {
                    raw.push(u8::from(block.bit(i, j)));
                }
            }
            ("dense", Some(raw))
        }
    };
    BlockRepr {
        block: tag.to_string(),
        rows: block.rows(),
        cols: block.cols(),
        bits,
    }
}

fn exponents_from(repr: &ExponentsRepr) -> Result<ExponentMatrix, DocError> {
    let grid = repr
        .grid
        .iter()
        .map(|row| row.iter().map(block_from).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    ExponentMatrix::from_grid(grid).map_err(|e| DocError::new(e.to_string()))
}

fn exponents_to(e: &ExponentMatrix) -> ExponentsRepr {
    ExponentsRepr {
        grid: e
            .grid()
            .iter()
            .map(|row| row.iter().map(block_to).collect())
            .collect(),
    }
}

/// Parses any representation document.
pub fn parse_rep(text: &str) -> Result<Rep, DocError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| DocError::new(format!("bad document: {e}")))?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(DocError::new(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            raw.schema_version
        )));
    }
    let core = |e: mrep_core::Error| DocError::new(e.to_string());
    match raw.kind.as_str() {
        "vrep" => {
            let payload: VPayload = serde_json::from_value(raw.payload)
                .map_err(|e| DocError::new(format!("bad vrep payload: {e}")))?;
            let vertices = payload
                .vertices
                .iter()
                .map(|p| point_from(p))
                .collect::<Result<Vec<_>, _>>()?;
            if vertices.iter().any(|p| p.len() != payload.dim) {
                return Err(DocError::new("vertex dimension differs from declared dim"));
            }
            Ok(Rep::V(VRep::new(vertices).map_err(core)?))
        }
        "mrep" => {
            let payload: MPayload = serde_json::from_value(raw.payload)
                .map_err(|e| DocError::new(format!("bad mrep payload: {e}")))?;
            let start = point_from(&payload.start)?;
            let basis = columns_from(start.len(), &payload.basis)?;
            let exponents = exponents_from(&payload.exponents)?;
            Ok(Rep::M(MRep::new(start, basis, exponents).map_err(core)?))
        }
        "crep" => {
            let payload: CPayload = serde_json::from_value(raw.payload)
                .map_err(|e| DocError::new(format!("bad crep payload: {e}")))?;
            let start = point_from(&payload.start)?;
            let basis = columns_from(start.len(), &payload.basis)?;
            let end = point_from(&payload.end)?;
            Ok(Rep::C(CRep::new(start, basis, end).map_err(core)?))
        }
        "zrep" => {
            let payload: ZPayload = serde_json::from_value(raw.payload)
                .map_err(|e| DocError::new(format!("bad zrep payload: {e}")))?;
            let center = point_from(&payload.center)?;
            let generators = columns_from(center.len(), &payload.generators)?;
            let exponents = exponents_from(&payload.exponents)?;
            Ok(Rep::Z(ZRep::new(center, generators, exponents).map_err(core)?))
        }
        other => Err(DocError::new(format!("unknown kind {other:?}"))),
    }
}

/// Serializes a representation document; output is deterministic byte for
/// byte.
pub fn serialize_rep(rep: &Rep) -> String {
    fn emit<T: Serialize>(kind: &'static str, payload: T) -> String {
        let doc = OutDocument {
            schema_version: SCHEMA_VERSION,
            kind,
            payload,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("document serialization");
        text.push('\n');
        text
    }
    match rep {
        Rep::V(v) => emit(
            "vrep",
            VPayload {
                dim: v.dim(),
                vertices: v.vertices().iter().map(|p| point_to(p)).collect(),
            },
        ),
        Rep::M(m) => emit(
            "mrep",
            MPayload {
                start: point_to(m.start()),
                basis: columns_to(m.basis()),
                exponents: exponents_to(m.exponents()),
            },
        ),
        Rep::C(c) => emit(
            "crep",
            CPayload {
                start: point_to(c.start()),
                basis: columns_to(c.basis()),
                end: point_to(c.end()),
            },
        ),
        Rep::Z(z) => emit(
            "zrep",
            ZPayload {
                center: point_to(z.center()),
                generators: columns_to(z.generators()),
                exponents: exponents_to(z.exponents()),
            },
        ),
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rows: Vec<Vec<RatRepr>>,
}

/// Parses a transformation-matrix file: `{"rows": [[...], ...]}` with one
/// inner list per matrix row.
pub fn parse_matrix(text: &str) -> Result<Matrix, DocError> {
    let raw: MatrixFile =
        serde_json::from_str(text).map_err(|e| DocError::new(format!("bad matrix file: {e}")))?;
    let rows = raw
        .rows
        .iter()
        .map(|r| point_from(r))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| DocError::new(e.to_string()))
}
