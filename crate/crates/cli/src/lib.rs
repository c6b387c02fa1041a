//! File formats and SVG plotting behind the `mrep` command-line tool.

pub mod doc;
pub mod svg;
