//! `kron`: extension products of Kronecker module classes, order checks,
//! embedding queries, and oracle verification sweeps.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use kronecker::ext;
use kronecker::oracle::{self, Mat, OracleCtx, Rep};
use kronecker::order;
use kronecker::partition::{parse_int_vec, Partition};
use kronecker::preinj;
use kronecker::lr;
use kronecker::symbol::{class_size, symbols_up_to, DecompSymbol, DimVector, SymbolSet};

#[derive(Parser)]
#[command(
    name = "kron",
    about = "Extension monoid products of Kronecker module classes, with a finite-field oracle",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of two symbol classes, e.g. `product "||I0" "P0||"`.
    Product { alpha: String, beta: String },
    /// Chain product {[I_an]}*...*{[I_a1]} for a partition, e.g. `chain "(2,0)"`.
    Chain { a: String },
    /// Dominance comparison of two integer vectors (prefix sums).
    Dominance {
        a: String,
        b: String,
        /// Also require equal totals.
        #[arg(long)]
        eqsum: bool,
    },
    /// Weighted dominance (i-th coordinate scaled by i).
    Wdom { a: String, b: String },
    /// Generalized majorization c < (b, a) on partitions.
    Genmaj { c: String, b: String, a: String },
    /// Monomorphism test I_b -> I_c (quotient slots from recorded lengths).
    Embed { b: String, c: String },
    /// Dominance-minimal cokernel of the embedding I_b -> I_c.
    Mincoker { b: String, c: String },
    /// Littlewood-Richardson coefficient or full expansion.
    Lr {
        lambda: String,
        mu: String,
        nu: Option<String>,
    },
    /// Number of isomorphism classes in a symbol's class over F_q.
    Classsize { symbol: String, q: u64 },
    /// Classify a representation from a matrix file to its symbol.
    Classify { file: String },
    /// Check product formulas against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated field sizes.
    #[arg(long, default_value = "2,3")]
    q: String,
    /// Dimension cap "a,b" on the total dimension vector of each pair.
    #[arg(long, default_value = "4,4")]
    maxdim: String,
    /// Worker threads for the sweep (0 = default).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Product { alpha, beta } => {
            let a: DecompSymbol = alpha.parse().map_err(usage)?;
            let b: DecompSymbol = beta.parse().map_err(usage)?;
            print_symbols(&ext::product(&a, &b), json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chain { a } => {
            let a: Partition = a.parse().map_err(usage)?;
            print_symbols(&preinj::chain_product(&a), json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dominance { a, b, eqsum } => {
            let av = parse_int_vec(&a).map_err(usage)?;
            let bv = parse_int_vec(&b).map_err(usage)?;
            let r = if eqsum {
                order::dominance_eqsum(&av, &bv)
            } else {
                order::dominance_leq(&av, &bv)
            };
            print_bool(r, json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Wdom { a, b } => {
            let av = parse_int_vec(&a).map_err(usage)?;
            let bv = parse_int_vec(&b).map_err(usage)?;
            print_bool(order::weighted_dominance(&av, &bv), json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Genmaj { c, b, a } => {
            let c: Partition = c.parse().map_err(usage)?;
            let b: Partition = b.parse().map_err(usage)?;
            let a: Partition = a.parse().map_err(usage)?;
            print_bool(order::gen_maj(&c, &b, &a), json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Embed { b, c } => {
            let b: Partition = b.parse().map_err(usage)?;
            let c: Partition = c.parse().map_err(usage)?;
            let r = c.len() >= b.len()
                && preinj::embedding_exists_genmaj(&b, &c, c.len() - b.len());
            print_bool(r, json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mincoker { b, c } => {
            let b: Partition = b.parse().map_err(usage)?;
            let c: Partition = c.parse().map_err(usage)?;
            let coker = if c.len() >= b.len() {
                preinj::minimal_cokernel(&b, &c, c.len() - b.len())
            } else {
                None
            };
            if json {
                let v = serde_json::json!({
                    "cokernel": coker.as_ref().map(|p| p.to_string()),
                });
                println!("{v}");
            } else {
                match coker {
                    Some(p) => println!("{p}"),
                    None => println!("none"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Lr { lambda, mu, nu } => {
            let lambda: Partition = lambda.parse().map_err(usage)?;
            let mu: Partition = mu.parse().map_err(usage)?;
            match nu {
                Some(nu) => {
                    let nu: Partition = nu.parse().map_err(usage)?;
                    let c = lr::lr_coeff(&lambda, &mu, &nu);
                    if json {
                        println!("{}", serde_json::json!({ "coefficient": c }));
                    } else {
                        println!("{c}");
                    }
                }
                None => {
                    let exps = lr::lr_expansions(&lambda, &mu);
                    if json {
                        let arr: Vec<_> = exps
                            .iter()
                            .map(|nu| {
                                serde_json::json!({
                                    "nu": nu.to_string(),
                                    "coefficient": lr::lr_coeff(&lambda, &mu, nu),
                                })
                            })
                            .collect();
                        println!("{}", serde_json::Value::Array(arr));
                    } else {
                        for nu in exps {
                            println!("{nu} {}", lr::lr_coeff(&lambda, &mu, &nu));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classsize { symbol, q } => {
            let s: DecompSymbol = symbol.parse().map_err(usage)?;
            let n = class_size(&s, q);
            if json {
                let v = if let Ok(small) = u64::try_from(n) {
                    serde_json::json!({ "count": small })
                } else {
                    serde_json::json!({ "count": n.to_string() })
                };
                println!("{v}");
            } else {
                println!("{n}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { file } => {
            let rep_text = read_input(&file)?;
            let (rep, q) = parse_matrix_file(&rep_text)?;
            let ctx = OracleCtx::new(q, DimVector::new(rep.a as u32, rep.b as u32))
                .map_err(|e| anyhow!("{e}"))?;
            let sym = oracle::classify(&rep, &ctx).map_err(|e| anyhow!("{e}"))?;
            if json {
                println!("{}", serde_json::json!({ "symbol": sym.to_string() }));
            } else {
                println!("{sym}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify(args) => verify(args, json),
    }
}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow!("{e}")
}

fn print_symbols(set: &SymbolSet, json: bool) {
    if json {
        println!("{}", set.to_json());
    } else {
        for s in set.iter() {
            println!("{s}");
        }
    }
}

fn print_bool(v: bool, json: bool) {
    if json {
        println!("{}", serde_json::json!({ "result": v }));
    } else {
        println!("{v}");
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Matrix file: first line "q a b", then the a x b entries of A row by row,
/// a blank line, then the entries of B. Blank lines are separators only;
/// entries are reduced mod q.
fn parse_matrix_file(text: &str) -> Result<(Rep, u32)> {
    let mut tokens = text.split_whitespace();
    let mut next_int = |what: &str| -> Result<i64> {
        tokens
            .next()
            .ok_or_else(|| anyhow!("matrix file ended early: expected {what}"))?
            .parse::<i64>()
            .with_context(|| format!("bad integer for {what}"))
    };
    let q = next_int("q")? as u32;
    let a = usize::try_from(next_int("a")?).context("a must be >= 0")?;
    let b = usize::try_from(next_int("b")?).context("b must be >= 0")?;
    let f = oracle::Fp::new(q).map_err(|e| anyhow!("{e}"))?;
    let mut read_mat = |name: &str| -> Result<Mat> {
        let mut m = Mat::zeros(a, b);
        for i in 0..a {
            for j in 0..b {
                m[(i, j)] = f.reduce(next_int(&format!("{name}[{i}][{j}]"))?);
            }
        }
        Ok(m)
    };
    let ma = read_mat("A")?;
    let mb = read_mat("B")?;
    if tokens.next().is_some() {
        bail!("trailing data after the B matrix");
    }
    Ok((Rep::new(ma, mb), q))
}

fn verify(args: VerifyArgs, json: bool) -> Result<ExitCode> {
    let qs: Vec<u32> = args
        .q
        .split(',')
        .map(|t| t.trim().parse().context("bad --q list"))
        .collect::<Result<_>>()?;
    let dims: Vec<u32> = args
        .maxdim
        .split(',')
        .map(|t| t.trim().parse().context("bad --maxdim"))
        .collect::<Result<_>>()?;
    if dims.len() != 2 {
        bail!("--maxdim wants two components, e.g. 4,4");
    }
    let cap = DimVector::new(dims[0], dims[1]);
    kronecker::configure_threads(args.jobs);

    let t0 = std::time::Instant::now();
    let reports = oracle::verify_sweep(&qs, cap).map_err(|e| anyhow!("{e}"))?;
    let total = reports.len();
    let mismatches: Vec<_> = reports.iter().filter(|r| !r.is_match()).collect();
    let all_match = mismatches.is_empty();

    if json {
        let v = serde_json::json!({
            "q": qs,
            "maxdim": cap.to_string(),
            "pairs_checked": total,
            "all_match": all_match,
            "millis": t0.elapsed().as_millis() as u64,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        println!("{v}");
    } else {
        for r in &mismatches {
            println!(
                "MISMATCH {} * {} over F_{}: missing [{}] extra [{}]",
                r.alpha, r.beta, r.q, r.missing, r.extra
            );
        }
        println!(
            "checked {} pairs (symbols up to {cap}, q in {qs:?}) in {:.2?}: {}",
            total,
            t0.elapsed(),
            if all_match { "all match" } else { "MISMATCHES FOUND" }
        );
        let n_symbols = symbols_up_to(cap).len();
        println!("symbol universe: {n_symbols} classes");
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
