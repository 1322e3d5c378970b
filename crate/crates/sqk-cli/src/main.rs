//! Command-line front end for the symmetric quandle toolkit.
//!
//! Exit codes: 0 success, 1 usage or I/O problems, 2 mathematical or
//! content validation failures.

mod repro;

use clap::{Args, Parser, Subcommand};
use sqk::cocycle::Cocycle;
use sqk::coloring::OrientationChoice;
use sqk::diagram::{build_diagram, Diagram};
use sqk::group::{abelianization, associated_presentation, symmetric_presentation, XSetAction};
use sqk::homology::ComplexVariant;
use sqk::io;
use sqk::quandle::{
    conjugation, enumerate_good_involutions, FiniteGroupTable, FiniteQuandle, Involution,
    SymmetricQuandle,
};
use sqk::surface::ColoredTriplePointData;
use sqk::DEFAULT_SIZE_CAP;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sqk",
    about = "Symmetric quandles: constructions, homology, and cocycle invariants of links and surface-links",
    version
)]
struct Cli {
    /// Cap on enumerated basis tuples (also settable via SQK_SIZE_CAP)
    #[arg(long, global = true)]
    size_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, verify and inspect quandles and good involutions
    Quandle {
        #[command(subcommand)]
        command: QuandleCmd,
    },
    /// Associated group presentations and abelianizations
    Group {
        #[command(subcommand)]
        command: GroupCmd,
    },
    /// Homology of the quotient chain complexes
    Homology(HomologyArgs),
    /// Verify cocycle files
    Cocycle {
        #[command(subcommand)]
        command: CocycleCmd,
    },
    /// Enumerate colorings of a link diagram
    Color(ColorArgs),
    /// Cocycle invariants of link diagrams
    Invariant(InvariantArgs),
    /// Chain-level surface-link computations
    Surface {
        #[command(subcommand)]
        command: SurfaceCmd,
    },
    /// Re-run the bundled verification suite
    Repro,
}

#[derive(Subcommand)]
enum QuandleCmd {
    /// Validate a quandle file (and its rho line, when present)
    Check { file: String },
    /// Write the trivial quandle of the given order
    MakeTrivial {
        order: usize,
        /// Involution: 'id' or a comma-separated value list
        #[arg(long)]
        rho: Option<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Write the dihedral quandle of the given order
    MakeDihedral {
        order: usize,
        /// Involution: id, antipodal, half-even or half-odd
        #[arg(long)]
        rho: Option<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Conjugation symmetric quandle of a finite group
    MakeConj {
        /// Cyclic group of this order
        #[arg(long, conflicts_with_all = ["symmetric", "table"])]
        cyclic: Option<usize>,
        /// Symmetric group on this many letters
        #[arg(long, conflicts_with = "table")]
        symmetric: Option<usize>,
        /// Group file with a multiplication table
        #[arg(long)]
        table: Option<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Double cover of the quandle in a file, with the copy-swapping rho
    DoubleCover {
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Enumerate all good involutions of the quandle in a file
    Involutions {
        file: String,
        /// Order cap for the brute-force enumeration
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Print the presentation of the associated group
    Present(GroupArgs),
    /// Print the abelianized associated group
    Abelianize(GroupArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Quandle file (rho line required with --sym)
    #[arg(long)]
    quandle: String,
    /// Plain associated group (conjugation relators only)
    #[arg(long, conflicts_with = "sym")]
    assoc: bool,
    /// Symmetric associated group (adds rho relators); the default
    #[arg(long)]
    sym: bool,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long)]
    quandle: String,
    /// Action: 'point', 'X' (the quandle acting on itself) or a file
    #[arg(long, default_value = "point")]
    xset: String,
    #[arg(long)]
    variant: String,
    #[arg(long)]
    degree: usize,
    /// Coefficients: Z or Z/m
    #[arg(long, default_value = "Z")]
    coeff: String,
}

#[derive(Subcommand)]
enum CocycleCmd {
    /// Verify the cocycle conditions for a cocycle file
    Check {
        file: String,
        #[arg(long)]
        quandle: String,
        #[arg(long, default_value = "point")]
        xset: String,
    },
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    pd: String,
    #[arg(long)]
    quandle: String,
    #[arg(long, default_value = "point")]
    xset: String,
    /// 'auto' or a face index in traced order
    #[arg(long, default_value = "auto")]
    unbounded_face: String,
    /// Pin the unbounded region to this action-set element
    #[arg(long)]
    base_color: Option<usize>,
    /// Print only the number of colorings
    #[arg(long)]
    count: bool,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long)]
    pd: String,
    #[arg(long)]
    quandle: String,
    #[arg(long, default_value = "point")]
    xset: String,
    #[arg(long)]
    cocycle: String,
    #[arg(long, default_value = "auto")]
    unbounded_face: String,
    #[arg(long)]
    base_color: Option<usize>,
    /// Orientation mask, one 0/1 per component (1 = reversed); computes the
    /// invariant through the oriented route
    #[arg(long)]
    orientation: Option<String>,
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Check that each coloring block of a chain file is a 3-cycle
    Check(SurfaceDataArgs),
    /// Evaluate a 3-cocycle on each coloring block
    Eval(SurfaceEvalArgs),
    /// Triple point number lower bound from a 3-cocycle
    Bound(SurfaceEvalArgs),
    /// Emit the stacked-annulus chain family
    Fn {
        #[arg(long)]
        n: usize,
        /// Color of the first strand (index or label in the order-4
        /// dihedral quandle with the antipodal involution)
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Args)]
struct SurfaceDataArgs {
    /// Triple-point data file, or '-' for stdin
    #[arg(long)]
    chain: String,
    /// Quandle file; defaults to the order-4 dihedral quandle with the
    /// antipodal involution
    #[arg(long)]
    quandle: Option<String>,
    #[arg(long, default_value = "point")]
    xset: String,
}

#[derive(Args)]
struct SurfaceEvalArgs {
    #[arg(long)]
    cocycle: String,
    /// Triple-point data file, or '-' for stdin
    #[arg(long, default_value = "-")]
    chain: String,
    #[arg(long)]
    quandle: Option<String>,
    #[arg(long, default_value = "point")]
    xset: String,
}

/// Anything that stops a run: 1 for usage and I/O, 2 for content.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<sqk::Error> for Failure {
    fn from(e: sqk::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

type RunResult = Result<(), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), Failure> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Failure::Usage(format!("writing {p}: {e}"))),
    }
}

static CAP_OVERRIDE: std::sync::OnceLock<usize> = std::sync::OnceLock::new();

fn size_cap() -> usize {
    if let Some(&cap) = CAP_OVERRIDE.get() {
        return cap;
    }
    std::env::var("SQK_SIZE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

fn load_quandle(path: &str) -> Result<io::QuandleFile, Failure> {
    Ok(io::parse_quandle_file(&read_input(path)?)?)
}

fn load_symmetric(path: &str) -> Result<(io::QuandleFile, SymmetricQuandle), Failure> {
    let qf = load_quandle(path)?;
    let sq = qf.symmetric()?;
    Ok((qf, sq))
}

fn load_action(spec: &str, sq: &SymmetricQuandle) -> Result<XSetAction, Failure> {
    match spec {
        "point" => Ok(XSetAction::singleton(sq)),
        "X" => Ok(XSetAction::quandle_action(sq)),
        path => {
            let table = io::parse_xset_file(&read_input(path)?)?;
            Ok(XSetAction::validate(sq, table)?)
        }
    }
}

fn load_cocycle(
    path: &str,
    qf: &io::QuandleFile,
    sq: &SymmetricQuandle,
    act: &XSetAction,
) -> Result<Cocycle, Failure> {
    let text = read_input(path)?;
    let (deg, coeff, variant, entries) =
        io::parse_cocycle_file(&text, qf.labels.as_deref())?;
    Ok(Cocycle::verified(
        deg,
        coeff,
        variant,
        entries,
        sq,
        act,
        size_cap(),
    )?)
}

fn load_diagram(path: &str, unbounded: &str) -> Result<Diagram, Failure> {
    let pd = sqk::pd::parse_pd(&read_input(path)?)?;
    let face = match unbounded {
        "auto" => None,
        v => Some(v.parse::<usize>().map_err(|_| {
            Failure::Usage(format!("--unbounded-face expects 'auto' or an index, got '{v}'"))
        })?),
    };
    Ok(build_diagram(&pd, face)?)
}

fn base_constraints(d: &Diagram, base_color: Option<usize>) -> BTreeMap<usize, usize> {
    match base_color {
        None => BTreeMap::new(),
        Some(y) => {
            let f = (0..d.n_faces())
                .find(|&f| d.region_of_face(f) == d.unbounded_region())
                .expect("unbounded region exists");
            BTreeMap::from([(f, y)])
        }
    }
}

fn default_surface_quandle() -> io::QuandleFile {
    let labels: Vec<String> = sqk::fixtures::R4_LABELS.iter().map(|s| s.to_string()).collect();
    io::QuandleFile {
        quandle: FiniteQuandle::dihedral(4),
        rho: Some(Involution::antipodal(4)),
        labels: Some(labels),
    }
}

fn surface_context(
    quandle: &Option<String>,
    xset: &str,
) -> Result<(io::QuandleFile, SymmetricQuandle, XSetAction), Failure> {
    let qf = match quandle {
        Some(path) => load_quandle(path)?,
        None => default_surface_quandle(),
    };
    let sq = qf.symmetric()?;
    let act = load_action(xset, &sq)?;
    Ok((qf, sq, act))
}

fn load_surface_data(
    path: &str,
    qf: &io::QuandleFile,
) -> Result<ColoredTriplePointData, Failure> {
    Ok(io::parse_surface_file(&read_input(path)?, qf.labels.as_deref())?)
}

fn run(cli: Cli) -> RunResult {
    match cli.command {
        Command::Quandle { command } => run_quandle(command),
        Command::Group { command } => run_group(command),
        Command::Homology(args) => run_homology(args),
        Command::Cocycle {
            command: CocycleCmd::Check { file, quandle, xset },
        } => {
            let (qf, sq) = load_symmetric(&quandle)?;
            let act = load_action(&xset, &sq)?;
            load_cocycle(&file, &qf, &sq, &act)?;
            println!("OK");
            Ok(())
        }
        Command::Color(args) => run_color(args),
        Command::Invariant(args) => run_invariant(args),
        Command::Surface { command } => run_surface(command),
        Command::Repro => {
            if repro::run_all() {
                Ok(())
            } else {
                Err(Failure::Math("reproduction suite failed".into()))
            }
        }
    }
}

fn parse_rho_spec(spec: &str, n: usize) -> Result<Involution, Failure> {
    match spec {
        "id" => Ok(Involution::identity(n)),
        "antipodal" => {
            if n % 2 != 0 {
                return Err(Failure::Math(format!(
                    "the antipodal map needs even order, got {n}"
                )));
            }
            Ok(Involution::antipodal(n))
        }
        "half-even" | "half-odd" => {
            if n % 4 != 0 {
                return Err(Failure::Math(format!(
                    "half-antipodal maps need order divisible by 4, got {n}"
                )));
            }
            Ok(Involution::half_antipodal(n, spec == "half-even"))
        }
        list => {
            let vals: Result<Vec<usize>, _> = list.split(',').map(|t| t.trim().parse()).collect();
            let vals = vals.map_err(|_| {
                Failure::Usage(format!(
                    "--rho expects id, antipodal, half-even, half-odd or a comma list, got '{list}'"
                ))
            })?;
            Ok(Involution::new(vals)?)
        }
    }
}

fn emit_quandle(
    q: &FiniteQuandle,
    rho: Option<&Involution>,
    labels: Option<&[String]>,
    output: Option<&str>,
) -> RunResult {
    if let Some(r) = rho {
        // constructing the pair verifies goodness
        SymmetricQuandle::new(q.clone(), r.clone())?;
    }
    write_output(output, &io::write_quandle_file(q, rho, labels))
}

fn run_quandle(cmd: QuandleCmd) -> RunResult {
    match cmd {
        QuandleCmd::Check { file } => {
            let qf = load_quandle(&file)?;
            let n = qf.quandle.order();
            match &qf.rho {
                Some(rho) => {
                    SymmetricQuandle::new(qf.quandle.clone(), rho.clone())?;
                    println!("OK quandle of order {n} with a good involution");
                }
                None => println!("OK quandle of order {n}"),
            }
            Ok(())
        }
        QuandleCmd::MakeTrivial { order, rho, output } => {
            let q = FiniteQuandle::trivial(order);
            let rho = rho.map(|s| parse_rho_spec(&s, order)).transpose()?;
            emit_quandle(&q, rho.as_ref(), None, output.as_deref())
        }
        QuandleCmd::MakeDihedral { order, rho, output } => {
            let q = FiniteQuandle::dihedral(order);
            let rho = rho.map(|s| parse_rho_spec(&s, order)).transpose()?;
            emit_quandle(&q, rho.as_ref(), None, output.as_deref())
        }
        QuandleCmd::MakeConj {
            cyclic,
            symmetric,
            table,
            output,
        } => {
            let group = match (cyclic, symmetric, table) {
                (Some(n), None, None) => FiniteGroupTable::cyclic(n),
                (None, Some(k), None) => FiniteGroupTable::symmetric(k),
                (None, None, Some(path)) => io::parse_group_file(&read_input(&path)?)?,
                _ => {
                    return Err(Failure::Usage(
                        "make-conj needs exactly one of --cyclic, --symmetric, --table".into(),
                    ))
                }
            };
            let sq = conjugation(&group);
            emit_quandle(
                sq.quandle(),
                Some(sq.rho()),
                None,
                output.as_deref(),
            )
        }
        QuandleCmd::DoubleCover { file, output } => {
            let qf = load_quandle(&file)?;
            let sq = qf.quandle.double_cover();
            emit_quandle(sq.quandle(), Some(sq.rho()), None, output.as_deref())
        }
        QuandleCmd::Involutions { file, cap } => {
            let qf = load_quandle(&file)?;
            let found = enumerate_good_involutions(&qf.quandle, cap)?;
            println!("{} good involutions", found.len());
            for rho in &found {
                let vals: Vec<String> =
                    rho.as_slice().iter().map(|v| v.to_string()).collect();
                println!("rho {}", vals.join(" "));
            }
            Ok(())
        }
    }
}

fn run_group(cmd: GroupCmd) -> RunResult {
    let (args, abelian) = match cmd {
        GroupCmd::Present(a) => (a, false),
        GroupCmd::Abelianize(a) => (a, true),
    };
    let (_qf, sq) = load_symmetric(&args.quandle)?;
    let p = if args.assoc {
        associated_presentation(&sq)
    } else {
        symmetric_presentation(&sq)
    };
    if abelian {
        println!("{}", abelianization(&p));
    } else {
        print!("{}", io::format_presentation(&p));
    }
    Ok(())
}

fn run_homology(args: HomologyArgs) -> RunResult {
    let (_qf, sq) = load_symmetric(&args.quandle)?;
    let act = load_action(&args.xset, &sq)?;
    let variant = ComplexVariant::parse(&args.variant)?;
    let coeff = parse_coeff_flag(&args.coeff)?;
    let h = sqk::homology::homology(&sq, &act, variant, args.degree, coeff, size_cap())?;
    println!(
        "H_{}^{} ({}) = {}",
        args.degree, variant, coeff, h.result.group
    );
    Ok(())
}

fn parse_coeff_flag(s: &str) -> Result<sqk::cocycle::CoefficientGroup, Failure> {
    use sqk::cocycle::CoefficientGroup;
    if s == "Z" {
        return Ok(CoefficientGroup::Integers);
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let m: u64 = m
            .parse()
            .map_err(|_| Failure::Usage(format!("bad coefficient group '{s}'")))?;
        if m >= 2 {
            return Ok(CoefficientGroup::IntegersMod(m));
        }
    }
    Err(Failure::Usage(format!(
        "--coeff expects Z or Z/m (m >= 2), got '{s}'"
    )))
}

fn run_color(args: ColorArgs) -> RunResult {
    let (_qf, sq) = load_symmetric(&args.quandle)?;
    let act = load_action(&args.xset, &sq)?;
    let d = load_diagram(&args.pd, &args.unbounded_face)?;
    let constraints = base_constraints(&d, args.base_color);
    let cols = sqk::coloring::enumerate_colorings(&d, &sq, &act, &constraints)?;
    if args.count {
        println!("{}", cols.len());
        return Ok(());
    }
    println!("{} colorings", cols.len());
    for c in &cols {
        let arcs: Vec<String> = c.arcs.iter().map(|v| v.to_string()).collect();
        let regions: Vec<String> = c.regions.iter().map(|v| v.to_string()).collect();
        println!("arcs {} | regions {}", arcs.join(" "), regions.join(" "));
    }
    Ok(())
}

fn run_invariant(args: InvariantArgs) -> RunResult {
    let (qf, sq) = load_symmetric(&args.quandle)?;
    let act = load_action(&args.xset, &sq)?;
    let theta = load_cocycle(&args.cocycle, &qf, &sq, &act)?;
    let d = load_diagram(&args.pd, &args.unbounded_face)?;
    let constraints = base_constraints(&d, args.base_color);
    let result = match &args.orientation {
        None => sqk::invariant::phi(&d, &sq, &act, &theta, &constraints)?,
        Some(mask) => {
            if mask.len() != d.n_components() || !mask.chars().all(|c| c == '0' || c == '1') {
                return Err(Failure::Usage(format!(
                    "--orientation needs one 0/1 per component ({} components)",
                    d.n_components()
                )));
            }
            let o = OrientationChoice::new(mask.chars().map(|c| c == '1').collect());
            sqk::invariant::phi_oriented(&d, &sq, &act, &theta, &o, &constraints)?
        }
    };
    println!("{result}");
    Ok(())
}

fn run_surface(cmd: SurfaceCmd) -> RunResult {
    let cap = size_cap();
    match cmd {
        SurfaceCmd::Check(args) => {
            let (qf, sq, act) = surface_context(&args.quandle, &args.xset)?;
            let data = load_surface_data(&args.chain, &qf)?;
            sqk::surface::check_surface_cycle(&data, &sq, &act, cap)?;
            println!("OK {} coloring blocks are 3-cycles", data.colorings.len());
            Ok(())
        }
        SurfaceCmd::Eval(args) => {
            let (qf, sq, act) = surface_context(&args.quandle, &args.xset)?;
            let theta = load_cocycle(&args.cocycle, &qf, &sq, &act)?;
            let data = load_surface_data(&args.chain, &qf)?;
            let values = sqk::surface::phi_surface(&data, &sq, &act, &theta, cap)?;
            println!("{values}");
            Ok(())
        }
        SurfaceCmd::Bound(args) => {
            let (qf, sq, act) = surface_context(&args.quandle, &args.xset)?;
            let theta = load_cocycle(&args.cocycle, &qf, &sq, &act)?;
            let data = load_surface_data(&args.chain, &qf)?;
            let bound = sqk::surface::triple_point_bound(&theta, &data, &sq, &act, cap)?;
            println!("t(F) >= {bound}");
            Ok(())
        }
        SurfaceCmd::Fn { n, x, y, output } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be positive".into()));
            }
            let qf = default_surface_quandle();
            let x = qf.resolve(0, &x)?;
            let y = qf.resolve(0, &y)?;
            let data = sqk::surface::fn_chain(n, x, y);
            write_output(
                output.as_deref(),
                &io::write_surface_file(&data, qf.labels.as_deref()),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // keep clap's help/version on stdout with success, errors on 1
            let kind = e.kind();
            use clap::error::ErrorKind;
            if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    if let Some(cap) = cli.size_cap {
        let _ = CAP_OVERRIDE.set(cap);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
