//! Command-line frontend for the LCD classification engine.
//!
//! Exit codes: 0 success, 1 failed verification or inequivalence, 2 bad
//! usage, 3 internal error or resource limit.

mod db;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use db::DbFile;
use lcd_core::classify::{strategy_for, ClassificationResult, Strategy};
use lcd_core::mass;
use lcd_core::{
    are_equivalent, key_and_aut, Classifier, Error, Field, FqMatrix, FqVector, LinearCode, Result,
};

#[derive(Parser)]
#[command(
    name = "lcd",
    version,
    about = "Exact classification of linear complementary dual codes over GF(2) and GF(3)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify all LCD [n,k] codes over GF(q) and write a database file
    Classify {
        /// Field order (2 or 3)
        #[arg(short)]
        q: u64,
        /// Code length
        #[arg(short)]
        n: usize,
        /// Code dimension
        #[arg(short)]
        k: usize,
        /// Override the automatically chosen enumeration strategy
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        /// Worker threads for the enumeration stream
        #[arg(long)]
        threads: Option<usize>,
        /// Directory of database files (default: $LCDDB_DIR, then ./lcddb)
        #[arg(long, value_name = "DIR")]
        db_dir: Option<PathBuf>,
        /// Write to this exact path instead of into the database directory
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Assemble a classification summary table from database files
    Table {
        #[arg(value_enum)]
        id: TableId,
        /// Largest code length to include
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Directory of database files (default: $LCDDB_DIR, then ./lcddb)
        #[arg(long, value_name = "DIR")]
        db_dir: Option<PathBuf>,
    },
    /// Re-verify everything a database file claims
    Verify { file: PathBuf },
    /// Inspect one code given by its generator rows
    Info {
        /// Field order (2 or 3)
        #[arg(short)]
        q: u64,
        /// Comma-separated generator rows as digit strings
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<String>>,
        /// Comma-separated right-hand block rows; an identity block is implied
        #[arg(short, value_delimiter = ',')]
        a: Option<Vec<String>>,
    },
    /// Print the total count of LCD generator matrices and the class lower bound
    Mass {
        /// Field order (2 or 3)
        #[arg(short)]
        q: u64,
        n: usize,
        k: usize,
        /// Print only the lower bound on the number of classes
        #[arg(long)]
        lower: bool,
    },
    /// Decide monomial equivalence of two codes
    Equiv {
        /// Field order (2 or 3)
        #[arg(short)]
        q: u64,
        /// Comma-separated generator rows of the first code
        #[arg(long, value_delimiter = ',')]
        left: Vec<String>,
        /// Comma-separated generator rows of the second code
        #[arg(long, value_delimiter = ',')]
        right: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Rowwise,
    Colwise,
    Dual,
}

impl StrategyArg {
    fn into_core(self) -> Strategy {
        match self {
            StrategyArg::Rowwise => Strategy::Rowwise,
            StrategyArg::Colwise => Strategy::ColwiseLift,
            StrategyArg::Dual => Strategy::Dual,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableId {
    /// Binary classes split by minimum and dual minimum weight
    BinaryMain,
    /// Ternary classes split by minimum and dual minimum weight
    TernaryMain,
    /// Smallest binary automorphism group order per length and dimension
    AutBinary,
    /// Smallest ternary automorphism group order per length and dimension
    AutTernary,
    /// Binary class counts in dimensions 2 and 3 beyond length 13
    #[value(name = "dim2-3")]
    Dim23,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Domain(_) => 1,
                Error::Usage(_) => 2,
                Error::Resource(_) | Error::Internal(_) => 3,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Classify { q, n, k, strategy, threads, db_dir, out } => {
            cmd_classify(q, n, k, strategy, threads, db_dir, out)
        }
        Cmd::Table { id, max_n, db_dir } => cmd_table(id, max_n, db_dir),
        Cmd::Verify { file } => cmd_verify(&file),
        Cmd::Info { q, rows, a } => cmd_info(q, rows, a),
        Cmd::Mass { q, n, k, lower } => cmd_mass(q, n, k, lower),
        Cmd::Equiv { q, left, right } => cmd_equiv(q, &left, &right),
    }
}

fn resolve_db_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("LCDDB_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("lcddb"))
}

fn db_path(dir: &Path, field: Field, n: usize, k: usize) -> PathBuf {
    dir.join(DbFile::file_name(field, n, k))
}

fn load_db(path: &Path) -> Result<DbFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    DbFile::parse(&text).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn realize_db(path: &Path) -> Result<ClassificationResult> {
    load_db(path)?.realize().map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

/// Splits the chain of shorter classifications a column-extension run reads
/// into databases that exist and databases that still have to be built, in
/// build order.
fn collect_prereqs(
    field: Field,
    n: usize,
    k: usize,
    strategy: Strategy,
    dir: &Path,
    present: &mut Vec<(usize, usize)>,
    missing: &mut Vec<(usize, usize)>,
) {
    match strategy {
        Strategy::Rowwise => {}
        Strategy::Dual => {
            let k = n - k;
            collect_prereqs(field, n, k, strategy_for(field, n, k), dir, present, missing);
        }
        Strategy::ColwiseLift => {
            if db_path(dir, field, n - 1, k).is_file() {
                present.push((n - 1, k));
            } else {
                collect_prereqs(
                    field,
                    n - 1,
                    k,
                    strategy_for(field, n - 1, k),
                    dir,
                    present,
                    missing,
                );
                missing.push((n - 1, k));
            }
        }
    }
}

fn missing_message(q: u64, missing: &[(usize, usize)]) -> String {
    let cmds = missing
        .iter()
        .map(|&(n, k)| format!("  lcd classify -q {q} -n {n} -k {k}"))
        .collect::<Vec<_>>()
        .join("\n");
    format!("missing prerequisite databases; run in order:\n{cmds}")
}

fn cmd_classify(
    q: u64,
    n: usize,
    k: usize,
    strategy: Option<StrategyArg>,
    threads: Option<usize>,
    db_dir: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<u8> {
    let field = Field::from_order(q)?;
    mass::mass(field, n, k)?;
    let dir = resolve_db_dir(db_dir);
    let chosen = strategy.map_or_else(|| strategy_for(field, n, k), StrategyArg::into_core);

    let (mut present, mut missing) = (Vec::new(), Vec::new());
    collect_prereqs(field, n, k, chosen, &dir, &mut present, &mut missing);
    if !missing.is_empty() {
        return Err(Error::Usage(missing_message(q, &missing)));
    }

    let classifier = match threads {
        Some(t) => Classifier::with_threads(t)?,
        None => Classifier::new(),
    };
    for &(pn, pk) in &present {
        classifier.insert(Arc::new(realize_db(&db_path(&dir, field, pn, pk))?));
    }

    let start = Instant::now();
    let result: Arc<ClassificationResult> = match strategy {
        Some(s) => Arc::new(classifier.classify_with(field, n, k, s.into_core())?),
        None => classifier.classify(field, n, k)?,
    };
    let elapsed = start.elapsed().as_secs_f64();

    let path = out.unwrap_or_else(|| db_path(&dir, field, n, k));
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)
            .map_err(|e| Error::Usage(format!("cannot create {}: {e}", parent.display())))?;
    }
    std::fs::write(&path, DbFile::from_result(&result).serialize())
        .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;

    let label = match result.strategy {
        Some(Strategy::Rowwise) => "rowwise",
        Some(Strategy::ColwiseLift) => "colwise+lift",
        Some(Strategy::Dual) => "dual",
        None => "loaded",
    };
    println!("strategy={label} candidates={} elapsed={elapsed:.2}s", result.candidates_examined);
    println!("wrote {}", path.display());
    println!("N={} mass={}/{} COMPLETE", result.class_count(), result.accumulated_mass, result.target_mass);
    Ok(0)
}

fn table_pairs(id: TableId, max_n: Option<usize>) -> (Field, Vec<(usize, usize)>) {
    let mut pairs = Vec::new();
    match id {
        TableId::BinaryMain | TableId::TernaryMain => {
            let default = if matches!(id, TableId::BinaryMain) { 11 } else { 8 };
            for n in 4..=max_n.unwrap_or(default) {
                for k in 2..=n / 2 {
                    pairs.push((n, k));
                }
            }
        }
        TableId::AutBinary | TableId::AutTernary => {
            let default = if matches!(id, TableId::AutBinary) { 11 } else { 8 };
            for n in 2..=max_n.unwrap_or(default) {
                for k in 1..=n / 2 {
                    pairs.push((n, k));
                }
            }
        }
        TableId::Dim23 => {
            for n in 14..=max_n.unwrap_or(14) {
                for k in [2, 3] {
                    pairs.push((n, k));
                }
            }
        }
    }
    let field = match id {
        TableId::TernaryMain | TableId::AutTernary => Field::Gf3,
        _ => Field::Gf2,
    };
    (field, pairs)
}

fn weight_columns(counts: &BTreeMap<usize, usize>) -> String {
    let max = counts.keys().last().copied().unwrap_or(0);
    (1..=max)
        .map(|w| counts.get(&w).copied().unwrap_or(0).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_table(id: TableId, max_n: Option<usize>, db_dir: Option<PathBuf>) -> Result<u8> {
    let dir = resolve_db_dir(db_dir);
    let (field, pairs) = table_pairs(id, max_n);

    let missing: Vec<(usize, usize)> = pairs
        .iter()
        .filter(|&&(n, k)| !db_path(&dir, field, n, k).is_file())
        .copied()
        .collect();
    if !missing.is_empty() {
        return Err(Error::Usage(missing_message(field.order(), &missing)));
    }

    match id {
        TableId::BinaryMain | TableId::TernaryMain => {
            println!("# (n,k)\tN | N_d by d | N_d' by dual d");
        }
        TableId::AutBinary | TableId::AutTernary => {
            println!("# (n,k)\tsmallest automorphism group order");
        }
        TableId::Dim23 => println!("# (n,k)\tN"),
    }
    for (n, k) in pairs {
        let result = realize_db(&db_path(&dir, field, n, k))?;
        match id {
            TableId::BinaryMain | TableId::TernaryMain => {
                println!(
                    "({n},{k})\t{} | {} | {}",
                    result.class_count(),
                    weight_columns(&result.count_by_min_weight()),
                    weight_columns(&result.count_by_dual_min_weight()),
                );
            }
            TableId::AutBinary | TableId::AutTernary => {
                let smallest = result
                    .smallest_aut()
                    .ok_or_else(|| Error::Internal(format!("[{n},{k}] has no classes")))?;
                println!("({n},{k})\t{smallest}");
            }
            TableId::Dim23 => println!("({n},{k})\t{}", result.class_count()),
        }
    }
    Ok(0)
}

fn cmd_verify(file: &Path) -> Result<u8> {
    let result = realize_db(file)?;
    println!(
        "VERIFIED {} over {}: N={} mass={}/{}",
        file.display(),
        result.field,
        result.class_count(),
        result.accumulated_mass,
        result.target_mass
    );
    Ok(0)
}

fn parse_rows(field: Field, rows: &[String]) -> Result<FqMatrix> {
    let parsed = rows.iter().map(|r| FqVector::parse(field, r)).collect::<Result<Vec<_>>>()?;
    FqMatrix::from_rows(parsed)
}

fn cmd_info(q: u64, rows: Option<Vec<String>>, a: Option<Vec<String>>) -> Result<u8> {
    let field = Field::from_order(q)?;
    let code = match (rows, a) {
        (Some(r), None) => LinearCode::from_generator(&parse_rows(field, &r)?)?,
        (None, Some(r)) => {
            let block = parse_rows(field, &r)?;
            LinearCode::from_standard_form(field, block.row_count(), &block)?
        }
        _ => return Err(Error::Usage("give exactly one of --rows or -a".into())),
    };
    let (_, aut) = key_and_aut(&code)?;
    println!("[{},{},{}] code over {}", code.len(), code.dim(), code.min_weight()?, field);
    let dual_min = if code.dim() == code.len() {
        "-".to_string()
    } else {
        code.dual_min_weight()?.to_string()
    };
    println!("dual minimum weight: {dual_min}");
    println!("LCD: {}", if code.is_lcd() { "yes" } else { "no" });
    println!("hull dimension: {}", code.hull_dim());
    println!("automorphism order: {aut}");
    println!("weight enumerator: {}", code.weight_enumerator()?);
    Ok(0)
}

fn cmd_mass(q: u64, n: usize, k: usize, lower: bool) -> Result<u8> {
    let field = Field::from_order(q)?;
    let bound = mass::lower_bound(field, n, k)?;
    if !lower {
        println!("T_{q}({n},{k}) = {}", mass::mass(field, n, k)?);
    }
    println!("t_{q}({n},{k}) = {bound}");
    Ok(0)
}

fn cmd_equiv(q: u64, left: &[String], right: &[String]) -> Result<u8> {
    let field = Field::from_order(q)?;
    let a = LinearCode::from_generator(&parse_rows(field, left)?)?;
    let b = LinearCode::from_generator(&parse_rows(field, right)?)?;
    if are_equivalent(&a, &b)? {
        println!("EQUIVALENT");
        Ok(0)
    } else {
        println!("INEQUIVALENT");
        Ok(1)
    }
}
