//! Command-line front end for the exact polytope representations.
//!
//! Exit codes: 0 success (or sets equal), 1 sets not equal, 2 parse error,
//! 3 dimension/kind error, 4 enumeration cap exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mrep_cli::{doc, svg};
use mrep_core::ops::AlphaVector;
use mrep_core::oracle::{hull_vertices, sets_equal};
use mrep_core::zonotope::reduce;
use mrep_core::{Block, Caps, Error as CoreError, ExponentMatrix, Point, Rational, Rep, VRep};

#[derive(Parser)]
#[command(
    name = "mrep",
    version,
    about = "Exact M-, C- and Z-representations of convex bounded polytopes"
)]
struct Cli {
    /// Cap on the factor count p for 2^p enumerations (default 20)
    #[arg(long, global = true, value_name = "N")]
    cap_p: Option<usize>,
    /// Cap on point-list sizes for hull filtering and zonotope detection
    /// (defaults 64 and 12)
    #[arg(long, global = true, value_name = "N")]
    cap_points: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum HullKind {
    M,
    C,
    Z,
}

#[derive(Subcommand)]
enum Command {
    /// Build the chain-form M-representation of a vertex list
    Chain {
        /// Input vrep file
        input: PathBuf,
        /// Output mrep file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a linear map; the output kind equals the input kind
    Map {
        /// Matrix file {"rows": [[...], ...]}
        #[arg(long)]
        matrix: PathBuf,
        /// Input mrep, crep or zrep file
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minkowski sum of two representations of the same kind (m+m or z+z)
    Minkowski {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convex hull of two representations (m+m, c+c or z+z)
    Convhull {
        a: PathBuf,
        b: PathBuf,
        /// Representation to compute in
        #[arg(long, value_enum)]
        rep: HullKind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Candidate vertices of a representation, sorted lexicographically
    Vertices {
        input: PathBuf,
        /// Keep only actual hull vertices (exponential in the dimension)
        #[arg(long)]
        filter_hull: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce a vertex list to an M-representation with few basis vectors
    Reduce {
        /// Input vrep file
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare two representations as point sets (exit 0 equal, 1 not)
    Equal { a: PathBuf, b: PathBuf },
    /// Report representation size, generator/factor counts and blocks
    Size { input: PathBuf },
    /// Render the hull of a 2-D representation as an SVG file
    Plot {
        input: PathBuf,
        /// Output SVG path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Evaluate a representation at one factor assignment
    Eval {
        input: PathBuf,
        /// Comma-separated rationals, e.g. "1/2,0,1" (negatives allowed for
        /// z-representations)
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
}

enum Failure {
    Parse(String),
    Contract(String),
    Cap(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Contract(_) => 3,
            Failure::Cap(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Contract(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Contract(e.to_string()),
        }
    }
}

impl From<doc::DocError> for Failure {
    fn from(e: doc::DocError) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn read_rep(path: &Path) -> Result<Rep, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(doc::parse_rep(&text)?)
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn kind_error(context: &str) -> Failure {
    Failure::Contract(format!("kind mismatch: {context}"))
}

fn generator_count(rep: &Rep) -> usize {
    match rep {
        Rep::V(v) => v.len(),
        Rep::M(m) => m.generators(),
        Rep::C(c) => c.generators(),
        Rep::Z(z) => z.generators_count(),
    }
}

fn report_size(rep: &Rep) {
    eprintln!(
        "h = {}, size = {}",
        generator_count(rep),
        rep.representation_size()
    );
}

fn sorted_vrep(points: Vec<Point>) -> VRep {
    let mut points = points;
    points.sort();
    VRep::new(points).expect("candidate lists are never empty")
}

fn parse_alpha(raw: &str) -> Result<AlphaVector, Failure> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(AlphaVector::new(Vec::new()));
    }
    let values = trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<Rational>()
                .map_err(|e| Failure::Parse(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaVector::new(values))
}

fn format_point(p: &[Rational]) -> String {
    let coords: Vec<String> = p.iter().map(Rational::to_string).collect();
    coords.join(", ")
}

fn block_inventory(e: &ExponentMatrix) -> String {
    if e.grid().is_empty() {
        return "none".to_string();
    }
    let tags: Vec<String> = e
        .blocks()
        .map(|b| match b {
            Block::LowerTriOnes { size } => format!("L({size})"),
            Block::Identity { size } => format!("I({size})"),
            Block::Zero { rows, cols } => format!("O({rows}x{cols})"),
            Block::AllOnes { rows, cols } => format!("J({rows}x{cols})"),
            Block::Dense { rows, cols, .. } => format!("dense({rows}x{cols})"),
        })
        .collect();
    tags.join(" ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut caps = Caps::default();
    if let Some(p) = cli.cap_p {
        caps.max_factors = p;
    }
    if let Some(n) = cli.cap_points {
        caps.max_points = n;
        caps.max_zonotope_points = n;
    }

    match cli.command {
        Command::Chain { input, output } => {
            let Rep::V(v) = read_rep(&input)? else {
                return Err(kind_error("chain expects a vrep input"));
            };
            let chain = mrep_core::MRep::chain_from_points(&v);
            eprintln!(
                "h = {}, size = {}",
                chain.generators(),
                chain.representation_size()
            );
            write_output(output.as_deref(), &doc::serialize_rep(&Rep::M(chain)))?;
            Ok(0)
        }
        Command::Map {
            matrix,
            input,
            output,
        } => {
            let text = std::fs::read_to_string(&matrix)
                .map_err(|e| Failure::Parse(format!("{}: {e}", matrix.display())))?;
            let map = doc::parse_matrix(&text)?;
            let mapped = match read_rep(&input)? {
                Rep::M(m) => Rep::M(m.linear_map(&map)?),
                Rep::C(c) => Rep::C(c.linear_map(&map)?),
                Rep::Z(z) => Rep::Z(z.linear_map(&map)?),
                Rep::V(_) => return Err(kind_error("map expects an mrep, crep or zrep input")),
            };
            write_output(output.as_deref(), &doc::serialize_rep(&mapped))?;
            Ok(0)
        }
        Command::Minkowski { a, b, output } => {
            let result = match (read_rep(&a)?, read_rep(&b)?) {
                (Rep::M(x), Rep::M(y)) => Rep::M(x.minkowski(&y)?),
                (Rep::Z(x), Rep::Z(y)) => Rep::Z(x.minkowski(&y)?),
                (x, y) => {
                    return Err(kind_error(&format!(
                        "minkowski expects m+m or z+z, got {}+{}",
                        x.kind_name(),
                        y.kind_name()
                    )))
                }
            };
            report_size(&result);
            write_output(output.as_deref(), &doc::serialize_rep(&result))?;
            Ok(0)
        }
        Command::Convhull { a, b, rep, output } => {
            let result = match (rep, read_rep(&a)?, read_rep(&b)?) {
                (HullKind::M, Rep::M(x), Rep::M(y)) => Rep::M(x.convex_hull(&y)?),
                (HullKind::C, Rep::C(x), Rep::C(y)) => Rep::C(x.convex_hull(&y)?),
                (HullKind::Z, Rep::Z(x), Rep::Z(y)) => Rep::Z(x.convex_hull(&y)?),
                (_, x, y) => {
                    return Err(kind_error(&format!(
                        "convhull --rep needs matching input kinds, got {}+{}",
                        x.kind_name(),
                        y.kind_name()
                    )))
                }
            };
            report_size(&result);
            write_output(output.as_deref(), &doc::serialize_rep(&result))?;
            Ok(0)
        }
        Command::Vertices {
            input,
            filter_hull,
            output,
        } => {
            let rep = read_rep(&input)?;
            let candidates = rep.candidate_vertices(&caps)?;
            let vrep = if filter_hull {
                hull_vertices(&candidates, &caps)?.hull
            } else {
                sorted_vrep(candidates.into_vertices())
            };
            eprintln!("n = {}", vrep.len());
            write_output(output.as_deref(), &doc::serialize_rep(&Rep::V(vrep)))?;
            Ok(0)
        }
        Command::Reduce { input, output } => {
            let Rep::V(v) = read_rep(&input)? else {
                return Err(kind_error("reduce expects a vrep input"));
            };
            let reduction = reduce(&v, &caps)?;
            let branch = if reduction.zonotope.is_some() {
                "zonotope"
            } else {
                "chain fallback"
            };
            eprintln!(
                "h = {}, size = {}, branch = {branch}",
                reduction.rep.generators(),
                reduction.rep.representation_size()
            );
            write_output(
                output.as_deref(),
                &doc::serialize_rep(&Rep::M(reduction.rep)),
            )?;
            Ok(0)
        }
        Command::Equal { a, b } => {
            let (ra, rb) = (read_rep(&a)?, read_rep(&b)?);
            if sets_equal(&ra, &rb, &caps)? {
                println!("equal");
                Ok(0)
            } else {
                println!("not equal");
                Ok(1)
            }
        }
        Command::Size { input } => {
            let rep = read_rep(&input)?;
            println!("kind = {}", rep.kind_name());
            println!("dim = {}", rep.dim());
            println!("scalars = {}", rep.representation_size());
            match &rep {
                Rep::V(v) => println!("points = {}", v.len()),
                Rep::M(m) => {
                    println!("h = {}", m.generators());
                    println!("p = {}", m.factors());
                    println!("blocks = {}", block_inventory(m.exponents()));
                }
                Rep::C(c) => {
                    println!("h = {}", c.generators());
                    println!("p = {}", c.generators());
                    println!("blocks = implied L({})", c.generators());
                }
                Rep::Z(z) => {
                    println!("h = {}", z.generators_count());
                    println!("p = {}", z.factors());
                    println!("blocks = {}", block_inventory(z.exponents()));
                }
            }
            Ok(0)
        }
        Command::Plot { input, output } => {
            let rep = read_rep(&input)?;
            if rep.dim() != 2 {
                return Err(Failure::Contract(format!(
                    "plot needs a 2-D representation, got dimension {}",
                    rep.dim()
                )));
            }
            let hull = hull_vertices(&rep.candidate_vertices(&caps)?, &caps)?.hull;
            let rendered = svg::render_hull(hull.vertices());
            std::fs::write(&output, rendered)
                .map_err(|e| Failure::Parse(format!("{}: {e}", output.display())))?;
            Ok(0)
        }
        Command::Eval { input, alpha } => {
            let alpha = parse_alpha(&alpha)?;
            let point = match read_rep(&input)? {
                Rep::M(m) => m.evaluate(&alpha)?,
                Rep::C(c) => c.to_mrep().evaluate(&alpha)?,
                Rep::Z(z) => z.evaluate(&alpha)?,
                Rep::V(_) => return Err(kind_error("eval expects an mrep, crep or zrep input")),
            };
            println!("{}", format_point(&point));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
