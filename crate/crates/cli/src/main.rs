use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use algebra3::catalog::{catalog_list, expected_invariants, Catalog, Family, Label};
use algebra3::classify::{classify, ClassifyResult};
use algebra3::document::{matrix_strings, read_documents, CatalogExport, TableDocument};
use algebra3::iso::{are_isomorphic, ff_oracle, scramble};
use algebra3::algebra::StructureTable;
use algebra3::linalg::Matrix;
use algebra3::scalar::{self, FieldMode, Scalar};
use algebra3::selftest::{self, Level};
use algebra3::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "algebra3", version, about = "Classify associative algebras of dimension at most three")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check associativity of a table document or a catalog export
    Verify { path: PathBuf },
    /// Name the class of a table ("-" reads standard input)
    Classify {
        path: PathBuf,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two tables are isomorphic
    Iso {
        left: PathBuf,
        right: PathBuf,
        /// Also search GF(p) exhaustively for a transformation matrix
        #[arg(long, value_name = "P")]
        oracle: Option<u64>,
    },
    /// Browse or export the canonical tables
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Change basis by a seeded unimodular matrix; the document goes to
    /// stdout and the matrix to stderr
    Scramble {
        /// Catalog label or path to a table document
        source: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, value_enum, default_value_t = Field::Real)]
        field: Field,
    },
    /// Run the built-in consistency checks
    Selftest {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, value_enum)]
        field: Option<Field>,
        #[arg(long)]
        dim: Option<usize>,
    },
    Show {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, value_enum, default_value_t = Field::Real)]
        field: Field,
    },
    Export { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    Real,
    Complex,
}

impl From<Field> for FieldMode {
    fn from(f: Field) -> FieldMode {
        match f {
            Field::Real => FieldMode::Real,
            Field::Complex => FieldMode::Complex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Exit status with a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NonAssociative(_) | Error::InternalContradiction(_) | Error::ProfileNotInCatalog(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { path } => verify(&path),
        Command::Classify { path, witness, trace, json } => classify_cmd(&path, witness, trace, json),
        Command::Iso { left, right, oracle } => iso(&left, &right, oracle),
        Command::Catalog { action } => catalog(action),
        Command::Scramble { source, seed, k, field } => scramble_cmd(&source, seed, k.as_deref(), field.into()),
        Command::Selftest { level } => selftest_cmd(level),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure { message: format!("{}: {e}", path.display()), ..Failure::from(e) }
}

fn load(path: &Path) -> Result<(TableDocument, StructureTable), Failure> {
    let doc = TableDocument::parse(&read_text(path)?).map_err(in_file(path))?;
    let table = doc.to_table().map_err(in_file(path))?;
    Ok((doc, table))
}

fn triples(doc: &TableDocument, bad: &[(usize, usize, usize)]) -> String {
    let n = doc.names();
    bad.iter().map(|&(i, j, k)| format!("({},{},{})", n[i], n[j], n[k])).collect::<Vec<_>>().join(" ")
}

fn verify(path: &Path) -> Outcome {
    let docs = read_documents(&read_text(path)?).map_err(in_file(path))?;
    let mut failed = 0;
    for (name, doc) in &docs {
        let table = doc.to_table().map_err(in_file(path))?;
        let bad = table.check_associativity();
        let prefix = name.as_ref().map(|n| format!("{n}: ")).unwrap_or_default();
        if bad.is_empty() {
            println!("{prefix}associative");
        } else {
            failed += 1;
            println!("{prefix}NOT associative; violations: {}", triples(doc, &bad));
        }
    }
    if docs.len() > 1 {
        println!("{} of {} tables associative", docs.len() - failed, docs.len());
    }
    Ok(u8::from(failed > 0))
}

fn witness_text(m: &Matrix<impl scalar::Field + std::fmt::Display>) -> String {
    let s = matrix_strings(m);
    let d = s.len();
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || s[i][j] == "0"));
    if diagonal {
        format!("diag({})", (0..d).map(|i| s[i][i].clone()).collect::<Vec<_>>().join(","))
    } else {
        format!("[{}]", s.iter().map(|r| format!("[{}]", r.join(","))).collect::<Vec<_>>().join(","))
    }
}

fn classify_table(doc: &TableDocument, table: &StructureTable) -> Result<ClassifyResult, Failure> {
    match classify(table) {
        Err(Error::NonAssociative(bad)) => {
            Err(Failure { code: 1, message: format!("table is not associative; violations: {}", triples(doc, &bad)) })
        }
        other => Ok(other?),
    }
}

fn classify_cmd(path: &Path, witness: bool, trace: bool, as_json: bool) -> Outcome {
    let (doc, table) = load(path)?;
    let start = Instant::now();
    let r = classify_table(&doc, &table)?;
    let elapsed = start.elapsed();
    if as_json {
        let mut out = json!({
            "label": r.label.family.name(),
            "text": r.label.to_string(),
            "profile": r.profile,
            "witness_status": r.witness_status,
        });
        if let Some(k2) = r.label.k_squared() {
            out["k_squared"] = json!(k2.to_string());
        }
        if trace {
            out["trace"] = json!(r.trace);
        }
        if witness {
            out["witness"] = json!(r.witness.as_ref().map(matrix_strings));
        }
        out["timing_ms"] = json!(elapsed.as_secs_f64() * 1e3);
        println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
        return Ok(0);
    }
    println!("{}", r.label);
    println!("profile: {}", r.profile);
    if trace {
        for step in &r.trace {
            println!("trace: {step}");
        }
    }
    if witness {
        match &r.witness {
            Some(m) => println!("witness: {}", witness_text(m)),
            None => println!("witness: omitted ({})", r.witness_status),
        }
    }
    println!("timing: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    Ok(0)
}

fn iso(left: &Path, right: &Path, oracle: Option<u64>) -> Outcome {
    let (_, a) = load(left)?;
    let (_, b) = load(right)?;
    let r = are_isomorphic(&a, &b)?;
    println!("left: {}", r.left.label);
    println!("right: {}", r.right.label);
    if r.isomorphic {
        match &r.witness {
            Some(w) => println!("isomorphic; witness {}", witness_text(w)),
            None => println!("isomorphic; witness omitted ({})", r.left.witness_status),
        }
    } else {
        println!("NOT isomorphic; separator: {}", r.separator.unwrap_or("label"));
    }
    if let Some(p) = oracle {
        match ff_oracle(&a, &b, p)? {
            Some(m) => {
                let rows: Vec<String> =
                    m.entries.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
                println!("oracle GF({p}): [{}]", rows.join(","));
            }
            None => println!("oracle GF({p}): none"),
        }
    }
    Ok(u8::from(!r.isomorphic))
}

fn parse_label(name: &str, k: Option<&str>, mode: FieldMode) -> Result<Label, Failure> {
    let family = Family::parse(name).ok_or_else(|| usage(format!("unknown label {name:?}")))?;
    if !family.available_in(mode) {
        return Err(Error::RealOnlyLabel(family.name().to_string()).into());
    }
    match (family.is_parametric(), k) {
        (true, Some(k)) => {
            let k: Scalar = k.parse().map_err(|e| usage(format!("--k: {e}")))?;
            Ok(Label::with_k(family, k))
        }
        (true, None) => Err(Error::MissingParameter(family.name().to_string()).into()),
        (false, Some(_)) => Err(usage(format!("{} takes no parameter", family.name()))),
        (false, None) => Ok(Label::fixed(family)),
    }
}

fn catalog(action: CatalogAction) -> Outcome {
    match action {
        CatalogAction::List { field, dim } => {
            let modes = match field {
                Some(f) => vec![f.into()],
                None => vec![FieldMode::Real, FieldMode::Complex],
            };
            let dims = match dim {
                Some(d @ 1..=3) => vec![d],
                Some(d) => return Err(usage(format!("no catalog for dimension {d}"))),
                None => vec![1, 2, 3],
            };
            for &mode in &modes {
                for &d in &dims {
                    println!("# {mode}, dimension {d}");
                    for label in catalog_list(mode, d) {
                        if label.is_stub() {
                            println!("{label}");
                        } else {
                            println!("{:<6} {}", label.to_string(), expected_invariants(&label, mode)?);
                        }
                    }
                }
            }
            Ok(0)
        }
        CatalogAction::Show { label, k, field } => {
            let mode = field.into();
            let label = parse_label(&label, k.as_deref(), mode)?;
            let t = Catalog::standard().table(&label, mode)?;
            print!("{}", TableDocument::from_table(&t).to_json());
            Ok(0)
        }
        CatalogAction::Export { path } => {
            let export = CatalogExport::build(Catalog::standard())?;
            fs::write(&path, export.to_json()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("wrote {} entries to {}", export.entries.len(), path.display());
            Ok(0)
        }
    }
}

fn scramble_cmd(source: &str, seed: u64, k: Option<&str>, mode: FieldMode) -> Outcome {
    let table = if Path::new(source).is_file() {
        load(Path::new(source))?.1
    } else {
        let label = parse_label(source, k, mode)?;
        Catalog::standard().table(&label, mode)?
    };
    let (t, m) = scramble(&table, seed);
    print!("{}", TableDocument::from_table(&t).to_json());
    eprintln!("matrix: {}", witness_text(&m));
    Ok(0)
}

fn selftest_cmd(level: LevelArg) -> Outcome {
    let level = match level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let checks = selftest::run(Catalog::standard(), level);
    for c in &checks {
        println!("{c} ({:.2} s)", c.elapsed.as_secs_f64());
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    if failed.is_empty() {
        println!("all {} checks passed", checks.len());
        Ok(0)
    } else {
        println!("failed: {}", failed.join(", "));
        Ok(1)
    }
}
