//! End-to-end tests of the `mrep` binary: every subcommand, the exit-code
//! contract and byte-for-byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mrep"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn vrep_doc(points: &[&[i64]]) -> String {
    let dim = points.first().map_or(0, |p| p.len());
    let vertices: Vec<String> = points
        .iter()
        .map(|p| {
            let coords: Vec<String> = p.iter().map(|c| format!("\"{c}\"")).collect();
            format!("[{}]", coords.join(","))
        })
        .collect();
    format!(
        r#"{{"schemaVersion":1,"kind":"vrep","payload":{{"dim":{dim},"vertices":[{}]}}}}"#,
        vertices.join(",")
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn chain_builds_the_triangle_chain() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let out = dir.path().join("chain.json");
    let result = run(&["chain", path_str(&input), "-o", path_str(&out)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 2"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"kind\": \"mrep\""));
    assert!(text.contains("\"block\": \"L\""));

    let single = write(&dir, "pt.json", &vrep_doc(&[&[4, 5]]));
    let result = run(&["chain", path_str(&single)]);
    assert_eq!(code(&result), 0);
    assert!(stdout(&result).contains("\"basis\": []"));
}

#[test]
fn malformed_rational_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        r#"{"schemaVersion":1,"kind":"vrep","payload":{"dim":1,"vertices":[["1/0"]]}}"#,
    );
    let result = run(&["chain", path_str(&bad)]);
    assert_eq!(code(&result), 2);
    assert!(stderr(&result).contains("bad rational"));

    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["chain", path_str(&missing)])), 2);
}

#[test]
fn map_applies_matrices_and_checks_dimensions() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let chain = dir.path().join("chain.json");
    assert_eq!(code(&run(&["chain", path_str(&tri), "-o", path_str(&chain)])), 0);

    // identity map reproduces the file byte for byte
    let identity = write(&dir, "id.json", r#"{"rows":[["1","0"],["0","1"]]}"#);
    let mapped = dir.path().join("mapped.json");
    let result = run(&[
        "map",
        "--matrix",
        path_str(&identity),
        path_str(&chain),
        "-o",
        path_str(&mapped),
    ]);
    assert_eq!(code(&result), 0);
    assert_eq!(
        std::fs::read(&chain).unwrap(),
        std::fs::read(&mapped).unwrap()
    );

    // 1x2 projection gives a 1-D chain
    let proj = write(&dir, "proj.json", r#"{"rows":[["1","0"]]}"#);
    let result = run(&["map", "--matrix", path_str(&proj), path_str(&chain)]);
    assert_eq!(code(&result), 0);
    assert!(stdout(&result).contains("\"start\": [\n      \"1\"\n    ]"));

    // 3x2 embedding gives a 3-D rep
    let embed = write(
        &dir,
        "embed.json",
        r#"{"rows":[["1","0"],["0","1"],["1","1"]]}"#,
    );
    assert_eq!(
        code(&run(&["map", "--matrix", path_str(&embed), path_str(&chain)])),
        0
    );

    // wrong matrix width is a dimension error
    let wide = write(&dir, "wide.json", r#"{"rows":[["1","0","0"]]}"#);
    let result = run(&["map", "--matrix", path_str(&wide), path_str(&chain)]);
    assert_eq!(code(&result), 3);

    // vrep input is a kind error
    let result = run(&["map", "--matrix", path_str(&identity), path_str(&tri)]);
    assert_eq!(code(&result), 3);
}

#[test]
fn minkowski_of_two_segments_reports_h_two() {
    let dir = TempDir::new().unwrap();
    let sx = write(&dir, "sx.json", &vrep_doc(&[&[1, 0], &[0, 0]]));
    let sy = write(&dir, "sy.json", &vrep_doc(&[&[0, 1], &[0, 0]]));
    let (mx, my) = (dir.path().join("mx.json"), dir.path().join("my.json"));
    run(&["chain", path_str(&sx), "-o", path_str(&mx)]);
    run(&["chain", path_str(&sy), "-o", path_str(&my)]);

    let sum = dir.path().join("sum.json");
    let result = run(&["minkowski", path_str(&mx), path_str(&my), "-o", path_str(&sum)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 2"));

    let verts = run(&["vertices", path_str(&sum), "--filter-hull"]);
    assert_eq!(code(&verts), 0);
    assert!(stderr(&verts).contains("n = 4"));

    // mismatched kinds
    let result = run(&["minkowski", path_str(&mx), path_str(&sx)]);
    assert_eq!(code(&result), 3);
    assert!(stderr(&result).contains("kind mismatch"));
}

#[test]
fn convhull_counts_follow_the_formulas() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let pt = write(&dir, "pt.json", &vrep_doc(&[&[5, 5]]));
    let (mtri, mpt) = (dir.path().join("mtri.json"), dir.path().join("mpt.json"));
    run(&["chain", path_str(&tri), "-o", path_str(&mtri)]);
    run(&["chain", path_str(&pt), "-o", path_str(&mpt)]);

    let result = run(&["convhull", path_str(&mtri), path_str(&mpt), "--rep", "m"]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 3"));

    // c-representation: two triangles give h = 2 + 2 + 1 = 5
    let tri2 = write(&dir, "tri2.json", &vrep_doc(&[&[5, 5], &[7, 5], &[6, 7]]));
    let mtri2 = dir.path().join("mtri2.json");
    run(&["chain", path_str(&tri2), "-o", path_str(&mtri2)]);
    let (ctri, ctri2) = (dir.path().join("ctri.json"), dir.path().join("ctri2.json"));
    // build creps by converting the chain docs through the library format
    for (m, c) in [(&mtri, &ctri), (&mtri2, &ctri2)] {
        let text = std::fs::read_to_string(m).unwrap();
        let mrep_cli_doc = mrep_cli::doc::parse_rep(&text).unwrap();
        let mrep_core::Rep::M(mrep) = mrep_cli_doc else {
            panic!()
        };
        let crep = mrep.to_crep().unwrap();
        std::fs::write(c, mrep_cli::doc::serialize_rep(&mrep_core::Rep::C(crep))).unwrap();
    }
    let result = run(&["convhull", path_str(&ctri), path_str(&ctri2), "--rep", "c"]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 5"));

    // kind mixing is rejected
    let result = run(&["convhull", path_str(&mtri), path_str(&ctri), "--rep", "m"]);
    assert_eq!(code(&result), 3);
}

#[test]
fn vertices_of_the_parallelogram_zrep() {
    let dir = TempDir::new().unwrap();
    let p1 = write(
        &dir,
        "p1.json",
        r#"{"schemaVersion":1,"kind":"zrep","payload":{"center":["0","0"],"generators":[["1","0"],["-1","-1"]],"exponents":{"grid":[[{"block":"I","rows":2,"cols":2}]]}}}"#,
    );
    let result = run(&["vertices", path_str(&p1), "--filter-hull"]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("n = 4"));
    let text = stdout(&result);
    let positions: Vec<usize> = ["\"-2\",", "\"0\","].iter().filter_map(|m| text.find(*m)).collect();
    assert_eq!(positions.len(), 2);
    assert!(positions[0] < positions[1], "output is sorted lexicographically");

    // cap exceeded
    let result = binary()
        .args(["--cap-p", "1", "vertices", path_str(&p1)])
        .output()
        .unwrap();
    assert_eq!(code(&result), 4);

    // a chain input takes the fast path and yields exactly its points
    let tri = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let chain = dir.path().join("chain.json");
    run(&["chain", path_str(&tri), "-o", path_str(&chain)]);
    let result = run(&["vertices", path_str(&chain)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("n = 3"));

    // a single point has a single candidate vertex
    let point = write(&dir, "pt.json", &vrep_doc(&[&[1, 2]]));
    let point_chain = dir.path().join("ptc.json");
    run(&["chain", path_str(&point), "-o", path_str(&point_chain)]);
    let result = run(&["vertices", path_str(&point_chain)]);
    assert!(stderr(&result).contains("n = 1"));
}

#[test]
fn reduce_reports_the_branch_that_fired() {
    let dir = TempDir::new().unwrap();
    let five = write(
        &dir,
        "five.json",
        &vrep_doc(&[&[0, 0], &[0, 2], &[2, 2], &[2, 0], &[1, 3]]),
    );
    let result = run(&["reduce", path_str(&five)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 3"));
    assert!(stderr(&result).contains("branch = zonotope"));

    let tri = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let result = run(&["reduce", path_str(&tri)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 2"));
    assert!(stderr(&result).contains("branch = chain fallback"));

    let fig1 = write(
        &dir,
        "fig1.json",
        &vrep_doc(&[&[0, -1], &[2, 1], &[0, 1], &[-2, -1]]),
    );
    let result = run(&["reduce", path_str(&fig1)]);
    assert_eq!(code(&result), 0);
    assert!(stderr(&result).contains("h = 2"));
    assert!(stderr(&result).contains("branch = zonotope"));
}

#[test]
fn equal_distinguishes_shifted_squares() {
    let dir = TempDir::new().unwrap();
    let sq = write(
        &dir,
        "sq.json",
        &vrep_doc(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]),
    );
    let shifted = write(
        &dir,
        "shifted.json",
        &vrep_doc(&[&[1, 0], &[2, 0], &[2, 1], &[1, 1]]),
    );
    let result = run(&["equal", path_str(&sq), path_str(&shifted)]);
    assert_eq!(code(&result), 1);
    assert!(stdout(&result).contains("not equal"));
    let result = run(&["equal", path_str(&sq), path_str(&sq)]);
    assert_eq!(code(&result), 0);
    assert!(stdout(&result).contains("equal"));
}

#[test]
fn size_of_a_crep_counts_h_plus_two_columns() {
    let dir = TempDir::new().unwrap();
    let crep = write(
        &dir,
        "c.json",
        r#"{"schemaVersion":1,"kind":"crep","payload":{"start":["0","0"],"basis":[["1","0"],["0","1"],["1","1"]],"end":["2","2"]}}"#,
    );
    let result = run(&["size", path_str(&crep)]);
    assert_eq!(code(&result), 0);
    let text = stdout(&result);
    assert!(text.contains("scalars = 10"));
    assert!(text.contains("h = 3"));
}

#[test]
fn plot_writes_svg_and_rejects_other_dimensions() {
    let dir = TempDir::new().unwrap();
    let p1 = write(
        &dir,
        "p1.json",
        r#"{"schemaVersion":1,"kind":"zrep","payload":{"center":["0","0"],"generators":[["1","0"],["-1","-1"]],"exponents":{"grid":[[{"block":"I","rows":2,"cols":2}]]}}}"#,
    );
    let out = dir.path().join("p1.svg");
    let result = run(&["plot", path_str(&p1), "-o", path_str(&out)]);
    assert_eq!(code(&result), 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("<polygon"));
    for corner in ["-2,1", "0,1", "2,-1", "0,-1"] {
        assert!(svg.contains(corner), "missing corner {corner}");
    }

    let cube = write(&dir, "cube.json", &vrep_doc(&[&[0, 0, 0], &[1, 1, 1]]));
    let result = run(&["plot", path_str(&cube), "-o", path_str(&out)]);
    assert_eq!(code(&result), 3);
}

#[test]
fn eval_prints_exact_points() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", &vrep_doc(&[&[0, 0], &[2, 0], &[1, 2]]));
    let chain = dir.path().join("chain.json");
    run(&["chain", path_str(&tri), "-o", path_str(&chain)]);

    let result = run(&["eval", path_str(&chain), "--alpha", "1,1"]);
    assert_eq!(code(&result), 0);
    assert_eq!(stdout(&result).trim(), "0, 0");

    let result = run(&["eval", path_str(&chain), "--alpha", "1/2,1"]);
    assert_eq!(code(&result), 0);
    assert_eq!(stdout(&result).trim(), "1, 0");

    // z-representations evaluate over [-1, 1]
    let p1 = write(
        &dir,
        "p1.json",
        r#"{"schemaVersion":1,"kind":"zrep","payload":{"center":["0","0"],"generators":[["1","0"],["-1","-1"]],"exponents":{"grid":[[{"block":"I","rows":2,"cols":2}]]}}}"#,
    );
    let result = run(&["eval", path_str(&p1), "--alpha", "-1,1"]);
    assert_eq!(code(&result), 0);
    assert_eq!(stdout(&result).trim(), "-2, -1");
    assert_eq!(code(&run(&["eval", path_str(&chain), "--alpha", "-1,0"])), 3);

    // out of range and malformed values
    assert_eq!(code(&run(&["eval", path_str(&chain), "--alpha", "2,0"])), 3);
    assert_eq!(code(&run(&["eval", path_str(&chain), "--alpha", "x,0"])), 2);
    assert_eq!(code(&run(&["eval", path_str(&tri), "--alpha", "1"])), 3);
}

#[test]
fn identical_inputs_produce_identical_bytes() {
    let dir = TempDir::new().unwrap();
    let five = write(
        &dir,
        "five.json",
        &vrep_doc(&[&[0, 0], &[0, 2], &[2, 2], &[2, 0], &[1, 3]]),
    );
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    run(&["reduce", path_str(&five), "-o", path_str(&a)]);
    run(&["reduce", path_str(&five), "-o", path_str(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let (sa, sb) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    run(&["plot", path_str(&five), "-o", path_str(&sa)]);
    run(&["plot", path_str(&five), "-o", path_str(&sb)]);
    assert_eq!(std::fs::read(&sa).unwrap(), std::fs::read(&sb).unwrap());
}
