use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rankcode::blockcode::{format_word, parse_word, LinearBlockCode};
use rankcode::channel::{simulate, ChannelModel};
use rankcode::concat::CrmCode;
use rankcode::lcd::{adder_split, is_lcd, trace_orthogonal_mrd, LcdCode};
use rankcode::linpoly::LinPoly;
use rankcode::mird::{
    format_ring_vec, mird_expand, mird_rank, parse_ring_vec, MirdCode, MirdDecoded, Z2m,
};
use rankcode::mrd::{Decoded, GabidulinCode, LinearRankCode, RankCode, ReceivedWord};
use rankcode::qcyclic::{poly_to_word, QCyclicCode};
use rankcode::ranklin::{ExtMatrix, PrimeMatrix};
use rankcode::Field;
use rankcode_cli::catalog;

/// Rank-metric coding workbench.
#[derive(Parser)]
#[command(name = "rankcode", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-field tables and arithmetic.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Gabidulin codes: encoding and error/erasure decoding.
    #[command(subcommand)]
    Mrd(MrdCmd),
    /// q-cyclic codes: systematic form, encoding, inversion.
    #[command(subcommand)]
    Qcyclic(QcCmd),
    /// LCD codes and the two-user adder split.
    #[command(subcommand)]
    Lcd(LcdCmd),
    /// Linear block codes over GF(p).
    #[command(subcommand)]
    Block(BlockCmd),
    /// Concatenated rank-metric codes.
    #[command(subcommand)]
    Crm(CrmCmd),
    /// Integer rank-distance codes over Z_2m.
    #[command(subcommand)]
    Mird(MirdCmd),
    /// Monte Carlo trials through a channel model.
    Simulate(SimArgs),
    /// Replays the worked-example catalog; exits nonzero on any failure.
    #[command(visible_alias = "examples")]
    PaperExamples,
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Prints the power table of a field.
    Show {
        /// Built-in name (gf2, gf4, gf8, gf32, gf256, gf27, gf81) or `p=.. n=.. poly=..`.
        field: String,
    },
    /// Applies add, sub, mul, div, inv, trace or frob to elements.
    Calc {
        field: String,
        op: String,
        a: String,
        b: Option<String>,
    },
}

#[derive(Subcommand)]
enum MrdCmd {
    /// Parameters, parity and generator matrices.
    Info {
        #[arg(long)]
        code: PathBuf,
    },
    Encode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        msg: String,
    },
    Syndrome {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Decodes a received word; `*` marks an erasure.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        word: String,
        /// Fill erasures by guessing instead of eliminating them.
        #[arg(long)]
        guess: bool,
        #[arg(long, short)]
        verbose: bool,
    },
}

#[derive(Args)]
struct QcCode {
    #[arg(long)]
    field: String,
    /// Generator polynomial, e.g. `a^24*z[0] + a^3*z[1] + a^2*z[2]`.
    #[arg(long)]
    g: String,
}

#[derive(Subcommand)]
enum QcCmd {
    Info {
        #[command(flatten)]
        code: QcCode,
    },
    Encode {
        #[command(flatten)]
        code: QcCode,
        #[arg(long)]
        msg: String,
    },
    /// Recovers the message polynomial from a parity polynomial.
    Invert {
        #[command(flatten)]
        code: QcCode,
        #[arg(long)]
        parity: String,
        /// Treat the code as shortened by this many leading symbols.
        #[arg(long)]
        t0: Option<usize>,
    },
}

#[derive(Subcommand)]
enum LcdCmd {
    /// Tests GG^T for invertibility and prints the projector.
    Check {
        #[arg(long)]
        field: String,
        /// Generator rows, `;`-separated.
        #[arg(long)]
        g: String,
    },
    /// Splits an adder output into code and dual-code parts.
    Split {
        #[arg(long)]
        field: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        r: String,
    },
    /// Builds the trace-orthogonal MRD generator of dimension k.
    TraceOrthogonal {
        #[arg(long)]
        field: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct BlockCode {
    /// Parity-check rows, e.g. `1110;0101`.
    #[arg(long)]
    h: String,
    #[arg(long, default_value_t = 2)]
    p: u32,
}

#[derive(Subcommand)]
enum BlockCmd {
    Info {
        #[command(flatten)]
        code: BlockCode,
    },
    Encode {
        #[command(flatten)]
        code: BlockCode,
        #[arg(long)]
        msg: String,
    },
    /// Coset-leader decoding; `?` marks an erasure.
    Decode {
        #[command(flatten)]
        code: BlockCode,
        #[arg(long)]
        y: String,
    },
    /// Prints the coset leaders by syndrome.
    Array {
        #[command(flatten)]
        code: BlockCode,
    },
}

#[derive(Args)]
struct CrmSpec {
    /// Outer Gabidulin code file.
    #[arg(long, conflicts_with = "outer_g")]
    outer: Option<PathBuf>,
    /// Outer generator rows over `--field`.
    #[arg(long, requires = "field")]
    outer_g: Option<String>,
    #[arg(long)]
    field: Option<String>,
    /// Inner binary parity-check rows.
    #[arg(long)]
    inner_h: String,
}

#[derive(Subcommand)]
enum CrmCmd {
    Info {
        #[command(flatten)]
        code: CrmSpec,
    },
    Encode {
        #[command(flatten)]
        code: CrmSpec,
        #[arg(long)]
        msg: String,
    },
    Decode {
        #[command(flatten)]
        code: CrmSpec,
        /// Received binary matrix, rows `;`-separated.
        #[arg(long)]
        y: String,
    },
}

#[derive(Args)]
struct MirdSpec {
    #[arg(long = "mod")]
    modulus: u64,
    #[arg(long)]
    h: String,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand)]
enum MirdCmd {
    /// Binary expansion and rank of a vector.
    Expand {
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        x: String,
    },
    Info {
        #[command(flatten)]
        code: MirdSpec,
    },
    Encode {
        #[command(flatten)]
        code: MirdSpec,
        #[arg(long)]
        info: String,
    },
    Decode {
        #[command(flatten)]
        code: MirdSpec,
        #[arg(long)]
        y: String,
    },
}

#[derive(Args)]
struct SimArgs {
    /// Gabidulin code file.
    #[arg(long, conflicts_with = "block_h")]
    code: Option<PathBuf>,
    /// Binary parity-check rows of a block code.
    #[arg(long)]
    block_h: Option<String>,
    /// `bsc:P`, `bsec:P,Q`, `rank:T` or `erase:S`.
    #[arg(long)]
    channel: String,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Field(c) => field_cmd(c)?,
        Command::Mrd(c) => mrd_cmd(c)?,
        Command::Qcyclic(c) => qc_cmd(c)?,
        Command::Lcd(c) => lcd_cmd(c)?,
        Command::Block(c) => block_cmd(c)?,
        Command::Crm(c) => crm_cmd(c)?,
        Command::Mird(c) => mird_cmd(c)?,
        Command::Simulate(a) => sim_cmd(a)?,
        Command::PaperExamples => return Ok(paper_examples()),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_field(s: &str) -> Result<Field> {
    s.parse().with_context(|| format!("field '{s}'"))
}

fn load_code(path: &PathBuf) -> Result<GabidulinCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    GabidulinCode::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn field_cmd(cmd: FieldCmd) -> Result<()> {
    match cmd {
        FieldCmd::Show { field } => {
            let f = parse_field(&field)?;
            let mut out = std::io::stdout().lock();
            writeln!(out, "{f} order={}", f.order())?;
            for a in f.elements() {
                let c: Vec<String> = f.coeffs(a).iter().map(u32::to_string).collect();
                writeln!(out, "{:>6}  [{}]", f.fmt_elem(a), c.join(","))?;
            }
        }
        FieldCmd::Calc { field, op, a, b } => {
            let f = parse_field(&field)?;
            let x = f.parse_elem(&a)?;
            let y = || -> Result<_> {
                let b = b.as_deref().context("operation needs a second operand")?;
                Ok(f.parse_elem(b)?)
            };
            let out = match op.as_str() {
                "add" => f.fmt_elem(f.add(x, y()?)),
                "sub" => f.fmt_elem(f.sub(x, y()?)),
                "mul" => f.fmt_elem(f.mul(x, y()?)),
                "div" => f.fmt_elem(f.div(x, y()?)?),
                "inv" => f.fmt_elem(f.inv(x)?),
                "trace" => f.trace(x).to_string(),
                "frob" => {
                    let i: i64 = b.as_deref().unwrap_or("1").parse().context("frob power")?;
                    f.fmt_elem(f.frob(x, i))
                }
                _ => bail!("unknown operation '{op}'"),
            };
            println!("{out}");
        }
    }
    Ok(())
}

fn mrd_cmd(cmd: MrdCmd) -> Result<()> {
    match cmd {
        MrdCmd::Info { code } => {
            let c = load_code(&code)?;
            println!("n={} k={} d={}", c.n(), c.k(), c.d());
            println!("H={}", c.parity_matrix());
            println!("G={}", c.generator_matrix()?);
        }
        MrdCmd::Encode { code, msg } => {
            let c = load_code(&code)?;
            let f = c.field();
            println!("{}", f.fmt_vec(&c.encode(&f.parse_vec(&msg)?)?));
        }
        MrdCmd::Syndrome { code, word } => {
            let c = load_code(&code)?;
            let f = c.field();
            println!("{}", f.fmt_vec(&c.syndrome(&f.parse_vec(&word)?)?));
        }
        MrdCmd::Decode {
            code,
            word,
            guess,
            verbose,
        } => {
            let c = load_code(&code)?;
            let f = c.field();
            let y = ReceivedWord::parse(f, &word)?;
            let out = if guess {
                c.decode_by_guessing(&y)?
            } else {
                c.decode_error_erasure(&y)?
            };
            match out {
                Decoded::Codeword { codeword, solution } => {
                    println!("{}", f.fmt_vec(&codeword));
                    if verbose {
                        println!("error={}", f.fmt_vec(&solution.e));
                        println!("rank={}", solution.m);
                        println!("erased={}", f.fmt_vec(&solution.f));
                        if let Some(m) = c.message_of(&codeword)? {
                            println!("message={}", f.fmt_vec(&m));
                        }
                    }
                }
                Decoded::Detected => println!("DETECTED"),
            }
        }
    }
    Ok(())
}

fn qc_code(spec: &QcCode) -> Result<QCyclicCode> {
    let f = parse_field(&spec.field)?;
    Ok(QCyclicCode::new(&f, LinPoly::parse(&f, &spec.g)?)?)
}

fn qc_cmd(cmd: QcCmd) -> Result<()> {
    match cmd {
        QcCmd::Info { code } => {
            let c = qc_code(&code)?;
            let (g, h) = c.systematic_matrices()?;
            println!("n={} k={}", c.n(), c.k());
            println!("check={}", c.check_poly());
            println!("G={g}");
            println!("H={h}");
        }
        QcCmd::Encode { code, msg } => {
            let c = qc_code(&code)?;
            let f = c.field();
            let u = c.message_poly(&f.parse_vec(&msg)?)?;
            let g = c.systematic_encode(&u)?;
            println!("{}", f.fmt_vec(&poly_to_word(&g, c.n())));
            println!("parity={}", c.parity(&u)?);
        }
        QcCmd::Invert { code, parity, t0 } => {
            let c = qc_code(&code)?;
            let p = LinPoly::parse(c.field(), &parity)?;
            println!("{}", c.invert(&p, t0)?);
        }
    }
    Ok(())
}

fn lcd_cmd(cmd: LcdCmd) -> Result<()> {
    match cmd {
        LcdCmd::Check { field, g } => {
            let f = parse_field(&field)?;
            let g = ExtMatrix::parse(&f, &g)?;
            if is_lcd(&g)? {
                println!("lcd=true");
                println!("projector={}", LcdCode::new(g)?.projector());
            } else {
                println!("lcd=false");
            }
        }
        LcdCmd::Split { field, g, r } => {
            let f = parse_field(&field)?;
            let code = LcdCode::new(ExtMatrix::parse(&f, &g)?)?;
            let (g1, g2) = adder_split(&f.parse_vec(&r)?, &code)?;
            println!("{}", f.fmt_vec(&g1));
            println!("{}", f.fmt_vec(&g2));
        }
        LcdCmd::TraceOrthogonal { field, k } => {
            let f = parse_field(&field)?;
            println!("{}", trace_orthogonal_mrd(&f, k)?.generator());
        }
    }
    Ok(())
}

fn block_code(spec: &BlockCode) -> Result<LinearBlockCode> {
    Ok(LinearBlockCode::from_parity(PrimeMatrix::parse(
        spec.p, &spec.h,
    )?)?)
}

fn block_cmd(cmd: BlockCmd) -> Result<()> {
    match cmd {
        BlockCmd::Info { code } => {
            let c = block_code(&code)?;
            println!("n={} k={}", c.n(), c.k());
            println!("G={}", c.generator());
            let info: Vec<String> = c.info_positions().iter().map(usize::to_string).collect();
            println!("info_positions={}", info.join(","));
            println!("d={}", c.min_distance()?);
        }
        BlockCmd::Encode { code, msg } => {
            let c = block_code(&code)?;
            println!(
                "{}",
                format_word(c.p(), &c.encode(&parse_word(c.p(), &msg)?)?)
            );
        }
        BlockCmd::Decode { code, y } => {
            let c = block_code(&code)?;
            if y.contains('?') {
                let word: Vec<Option<u32>> = y
                    .chars()
                    .filter(|ch| !ch.is_whitespace() && *ch != ',')
                    .map(|ch| match ch {
                        '?' => Ok(None),
                        _ => ch
                            .to_digit(10)
                            .filter(|&v| v < c.p())
                            .map(Some)
                            .context("bad symbol"),
                    })
                    .collect::<Result<_>>()?;
                match c.decode_with_erasures(&word)? {
                    Some(x) => println!("{}", format_word(c.p(), &x)),
                    None => println!("DETECTED"),
                }
            } else {
                let (x, m) = c.decode(&parse_word(c.p(), &y)?)?;
                println!("{}", format_word(c.p(), &x));
                println!("message={}", format_word(c.p(), &m));
            }
        }
        BlockCmd::Array { code } => {
            let c = block_code(&code)?;
            for (s, e) in c.standard_array()?.entries() {
                println!("{} {}", format_word(c.p(), &s), format_word(c.p(), &e));
            }
        }
    }
    Ok(())
}

fn crm_code(spec: &CrmSpec) -> Result<CrmCode> {
    let outer = match (&spec.outer, &spec.outer_g, &spec.field) {
        (Some(path), None, _) => RankCode::Gabidulin(load_code(path)?),
        (None, Some(g), Some(field)) => {
            let f = parse_field(field)?;
            RankCode::Linear(LinearRankCode::from_generator(ExtMatrix::parse(&f, g)?)?)
        }
        _ => bail!("give --outer FILE or --outer-g ROWS with --field"),
    };
    let inner = LinearBlockCode::from_parity(PrimeMatrix::parse(2, &spec.inner_h)?)?;
    Ok(CrmCode::new(outer, inner)?)
}

fn crm_cmd(cmd: CrmCmd) -> Result<()> {
    match cmd {
        CrmCmd::Info { code } => {
            let c = crm_code(&code)?;
            println!("outer n={} k={}", c.outer().n(), c.outer().k());
            println!("inner n={} k={}", c.inner().n(), c.inner().k());
            println!("d={}", c.min_distance()?);
        }
        CrmCmd::Encode { code, msg } => {
            let c = crm_code(&code)?;
            println!("{}", c.encode(&c.field().parse_vec(&msg)?)?);
        }
        CrmCmd::Decode { code, y } => {
            let c = crm_code(&code)?;
            match c.decode(&PrimeMatrix::parse(2, &y)?)? {
                Some(m) => println!("{}", c.field().fmt_vec(&m)),
                None => println!("DETECTED"),
            }
        }
    }
    Ok(())
}

fn mird_code(spec: &MirdSpec) -> Result<MirdCode> {
    let ring = Z2m::new(spec.modulus)?;
    let h = parse_ring_vec(&ring, &spec.h)?;
    Ok(MirdCode::new(&ring, h, spec.d)?)
}

fn mird_cmd(cmd: MirdCmd) -> Result<()> {
    match cmd {
        MirdCmd::Expand { modulus, x } => {
            let ring = Z2m::new(modulus)?;
            let x = parse_ring_vec(&ring, &x)?;
            println!("{}", mird_expand(&ring, &x));
            println!("rank={}", mird_rank(&ring, &x));
        }
        MirdCmd::Info { code } => {
            let c = mird_code(&code)?;
            println!("n={} k={} d={}", c.n(), c.k(), c.d());
            let rows: Vec<String> = c.parity().iter().map(|r| format_ring_vec(r)).collect();
            println!("H={}", rows.join(";"));
        }
        MirdCmd::Encode { code, info } => {
            let c = mird_code(&code)?;
            let info = parse_ring_vec(c.ring(), &info)?;
            println!("{}", format_ring_vec(&c.systematic_encode(&info)?));
        }
        MirdCmd::Decode { code, y } => {
            let c = mird_code(&code)?;
            let y = parse_ring_vec(c.ring(), &y)?;
            println!("syndrome={}", format_ring_vec(&c.syndrome(&y)?));
            match c.decode(&y)? {
                MirdDecoded::Corrected {
                    codeword,
                    error,
                    magnitudes,
                    ..
                } => {
                    println!("codeword={}", format_ring_vec(&codeword));
                    println!("error={}", format_ring_vec(&error));
                    println!("magnitudes={}", format_ring_vec(&magnitudes));
                }
                MirdDecoded::Detected => println!("DETECTED"),
            }
        }
    }
    Ok(())
}

fn sim_cmd(a: SimArgs) -> Result<()> {
    let model = ChannelModel::parse(&a.channel)?;
    let report = match (&a.code, &a.block_h) {
        (Some(path), None) => simulate(&load_code(path)?, &model, a.trials, a.seed)?,
        (None, Some(h)) => {
            let c = LinearBlockCode::from_parity(PrimeMatrix::parse(2, h)?)?;
            simulate(&c, &model, a.trials, a.seed)?
        }
        _ => bail!("give exactly one of --code or --block-h"),
    };
    println!("channel={model}");
    println!("{report}");
    Ok(())
}

fn paper_examples() -> ExitCode {
    let outcomes = catalog::run_all();
    let mut failed = 0;
    for o in &outcomes {
        match &o.result {
            Ok(()) => println!("PASS {}", o.name),
            Err(e) => {
                failed += 1;
                println!("FAIL {}: {e:#}", o.name);
            }
        }
    }
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
