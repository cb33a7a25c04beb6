//! Batch CLI over the oddsym library: tables for the combinatorial
//! operations, singular Rouquier complex reports, and the verification
//! suites.  Reports are deterministic given the parameters and seed.

use clap::{Parser, Subcommand, ValueEnum};
use oddsym::oh::BarOH;
use oddsym::partition::{kostka_column, partitions_of, Partition};
use oddsym::perm::Perm;
use oddsym::rouquier;
use oddsym::{onh, osym, verify};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "oddsym", version, about = "odd symmetric functions, odd Grassmannian bimodules and the singular Rouquier complex, over exact scalars")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a table or a single expansion.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Build the singular Rouquier complex at (ell, k) and verify it.
    Rouquier {
        #[arg(long)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also dump the differential matrices as CSV files into the cache
        /// directory (or the working directory).
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Run an identity suite; exit code 0 iff all checks pass.
    Verify {
        /// One of: qpi, osym, onh, oh, bimod, rouquier, uqpi, all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_ell: u32,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// The signed Kostka matrix of a degree.
    Kostka {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Odd Littlewood-Richardson coefficients of s_lambda * s_mu.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expansion of the odd Schur function s_lambda in the h-monomial basis.
    SchurExpand {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The odd Schubert polynomial of a permutation (one-line, 1-indexed).
    Schubert {
        #[arg(long)]
        w: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded rank of OH_n^ell as a free module over the base ring.
    OhRank {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The specialized trace Gram matrix of the Schur basis of OH_n^ell.
    TraceGram {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_partition(s: &str) -> Partition {
    let s = s.trim();
    if s.is_empty() || s == "0" || s == "[]" {
        return Partition::empty();
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse().expect("partition parts must be integers"))
        .collect();
    Partition::new(parts)
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os("ODDSYM_CACHE_DIR").map(PathBuf::from)
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute { what } => run_compute(what),
        Command::Rouquier { ell, k, format, dump_matrices } => {
            run_rouquier(ell, k, format, dump_matrices)
        }
        Command::Verify { suite, max_ell, max_degree, seed, format } => {
            run_verify(&suite, max_ell, max_degree, seed, format)
        }
    };
    std::process::exit(code);
}

fn run_compute(what: ComputeCmd) -> i32 {
    match what {
        ComputeCmd::Kostka { degree, format } => {
            let parts = partitions_of(degree);
            let mut rows = Vec::new();
            for la in &parts {
                let mut row = Vec::new();
                for mu in &parts {
                    row.push(*kostka_column(mu).get(la).unwrap_or(&0));
                }
                rows.push(row);
            }
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "degree": degree,
                        "partitions": parts.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                        "matrix": rows,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Csv => {
                    print!("\"shape/content\"");
                    for mu in &parts {
                        print!(",\"{mu}\"");
                    }
                    println!();
                    for (i, la) in parts.iter().enumerate() {
                        print!("\"{la}\"");
                        for v in &rows[i] {
                            print!(",{v}");
                        }
                        println!();
                    }
                }
                Format::Text => {
                    println!("signed Kostka matrix at degree {degree} (rows = shapes)");
                    for (i, la) in parts.iter().enumerate() {
                        println!("{la}: {:?}", rows[i]);
                    }
                }
            }
        }
        ComputeCmd::Lr { lambda, mu, format } => {
            let la = parse_partition(&lambda);
            let m = parse_partition(&mu);
            let c = osym::lr(&la, &m);
            emit_partition_map(&c, format, &format!("s{la} * s{m}"));
        }
        ComputeCmd::SchurExpand { lambda, format } => {
            let la = parse_partition(&lambda);
            let x = osym::schur_elem(&la);
            emit_partition_map(&x.coeffs, format, &format!("s{la} in the h basis"));
        }
        ComputeCmd::Schubert { w, n, format } => {
            let one_line: Vec<usize> = w
                .split(',')
                .map(|p| p.trim().parse::<usize>().expect("permutation entries") - 1)
                .collect();
            assert_eq!(one_line.len(), n, "permutation length must equal n");
            let perm = Perm(one_line);
            let p = onh::schubert(&perm, n);
            match format {
                Format::Json => {
                    let terms: Vec<_> = p
                        .coeffs
                        .iter()
                        .map(|(e, c)| serde_json::json!({"expo": e, "coeff": c}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({"n": n, "terms": terms}))
                            .unwrap()
                    );
                }
                _ => {
                    println!("p_w^({n}) for w = {w}:");
                    for (e, c) in &p.coeffs {
                        println!("  {c} * x^{e:?}");
                    }
                }
            }
        }
        ComputeCmd::OhRank { ell, n, format } => {
            assert!(n <= ell, "need n <= ell");
            let rank = BarOH::graded_dim(n, ell);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "ell": ell, "n": n, "rank": rank.to_json(), "text": rank.text(),
                    }))
                    .unwrap()
                ),
                _ => println!("{}", rank.text()),
            }
        }
        ComputeCmd::TraceGram { ell, n, format } => {
            assert!(n <= ell, "need n <= ell");
            let basis = BarOH::basis(n, ell);
            let mut rows = Vec::new();
            for la in &basis {
                let mut row = Vec::new();
                for mu in &basis {
                    row.push(BarOH::schur(la, n, ell).mul(&BarOH::schur(mu, n, ell)).trace());
                }
                rows.push(row);
            }
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "ell": ell,
                        "n": n,
                        "basis": basis.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                        "gram": rows,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Csv => {
                    for row in &rows {
                        println!(
                            "{}",
                            row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                        );
                    }
                }
                Format::Text => {
                    println!("trace Gram matrix of OH_{n}^{ell} (Schur basis {basis:?}):");
                    for (i, la) in basis.iter().enumerate() {
                        println!("{la}: {:?}", rows[i]);
                    }
                }
            }
        }
    }
    0
}

fn emit_partition_map(
    map: &std::collections::BTreeMap<Partition, i64>,
    format: Format,
    title: &str,
) {
    match format {
        Format::Json => {
            let terms: Vec<_> = map
                .iter()
                .map(|(p, c)| serde_json::json!({"partition": p.to_json(), "coeff": c}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&serde_json::json!({ "terms": terms })).unwrap());
        }
        Format::Csv => {
            for (p, c) in map {
                println!("\"{p}\",{c}");
            }
        }
        Format::Text => {
            println!("{title}:");
            if map.is_empty() {
                println!("  0");
            }
            for (p, c) in map {
                println!("  {p}: {c}");
            }
        }
    }
}

fn run_rouquier(ell: u32, k: i32, format: Format, dump: bool) -> i32 {
    if !rouquier::admissible(ell, k) {
        eprintln!("inadmissible parameters: need |k| <= ell and k = ell (mod 2)");
        return 2;
    }
    let report = rouquier::verify_src(ell, k);
    if dump {
        let c = rouquier::build_complex(ell, k);
        let dir = cache_dir().unwrap_or_else(|| PathBuf::from("."));
        std::fs::create_dir_all(&dir).ok();
        for (i, m) in c.diff.iter().enumerate() {
            let d = c.dmin + i as u32 + 1;
            let path = dir.join(format!("rouquier_ell{ell}_k{k}_d{d}.csv"));
            let mut f = std::fs::File::create(&path).expect("create matrix dump");
            for row in m {
                let line: Vec<String> = row
                    .iter()
                    .map(|r| {
                        if r.den == 1 {
                            r.num.to_string()
                        } else {
                            format!("{}/{}", r.num, r.den)
                        }
                    })
                    .collect();
                writeln!(f, "{}", line.join(",")).unwrap();
            }
            eprintln!("wrote {}", path.display());
        }
    }
    match format {
        Format::Json => {
            // cache the JSON report when a cache directory is configured
            let text = serde_json::to_string_pretty(&report).unwrap();
            if let Some(dir) = cache_dir() {
                std::fs::create_dir_all(&dir).ok();
                let path = dir.join(format!("rouquier_ell{ell}_k{k}.json"));
                std::fs::write(&path, &text).ok();
            }
            println!("{text}");
        }
        _ => {
            println!("singular Rouquier complex at (ell, k) = ({ell}, {k}), n = {}", report.n);
            for (d, h) in &report.homology {
                println!("  H_{d} = {h}");
            }
            for c in &report.checks {
                println!(
                    "  [{}] {}{}",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    if c.detail.is_empty() || c.pass {
                        String::new()
                    } else {
                        format!(" -- {}", c.detail)
                    }
                );
            }
        }
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn run_verify(suite: &str, max_ell: u32, max_degree: u32, seed: u64, format: Format) -> i32 {
    let reports: Vec<verify::Report> = match suite {
        "qpi" => vec![verify::qpi_suite(8, seed)],
        "osym" => vec![verify::osym_suite(max_degree, seed)],
        "onh" => vec![verify::onh_suite(4, max_degree.min(10), seed)],
        "oh" => vec![verify::oh_suite(max_ell, seed)],
        "bimod" => vec![verify::bimod_suite(max_ell, seed)],
        "rouquier" => vec![verify::rouquier_suite(max_ell, seed)],
        "uqpi" => vec![verify::uqpi_suite(10, seed)],
        "all" => verify::all_suites(max_ell, max_degree, seed),
        other => {
            eprintln!("unknown suite `{other}`; expected qpi, osym, onh, oh, bimod, rouquier, uqpi or all");
            return 2;
        }
    };
    let mut all_pass = true;
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            all_pass = reports.iter().all(|r| r.pass);
        }
        _ => {
            for r in &reports {
                print!("{}", r.text());
                all_pass &= r.pass;
            }
        }
    }
    if all_pass {
        0
    } else {
        1
    }
}
