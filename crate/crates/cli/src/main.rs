use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "equimon", version, about = "Nerves, classifying-space homology and equivariant fixed points of finite monoids")]
struct Cli {
    /// Emit the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of a truncated simplicial set.
    Homology {
        sset: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Nerve of a monoid and its homology.
    Classify {
        monoid: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Associated monoid of a semigroupoid and the splitting S ≅ M × J.
    Semigroupoid {
        category: PathBuf,
        /// Name of the base object.
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Multiplication table of a wreath product.
    Wreath { wreath: PathBuf },
    /// Fixed monoids and the comparison of N(M^H) with N(M)^H.
    Fixed {
        gmonoid: PathBuf,
        #[command(flatten)]
        which: SubgroupChoice,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Hom-sets of the orbit category.
    OrbitCat { group: PathBuf },
    /// Naturality of the comparison between fixed nerves.
    Naturality {
        gmonoid: PathBuf,
        #[arg(long, default_value_t = 2)]
        cutoff: usize,
    },
    /// Free groupoid presentation of a graph and its rank against H_1.
    Mcduff { complex: PathBuf },
    /// Homology of the diagonal against the total complex.
    EzCheck {
        bisset: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Canonical form of a point of the realization.
    NormalizePoint {
        sset: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SubgroupChoice {
    /// Comma-separated element names of the subgroup; commas inside
    /// parentheses belong to the names.
    #[arg(long)]
    subgroup: Option<String>,
    /// Every subgroup.
    #[arg(long)]
    all: bool,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    use commands::*;
    match cli.command {
        Command::Homology { sset, max_degree } => homology(&sset, max_degree),
        Command::Classify { monoid, max_degree } => classify(&monoid, max_degree),
        Command::Semigroupoid { category, base, max_degree } => semigroupoid(&category, &base, max_degree),
        Command::Wreath { wreath } => wreath_table(&wreath),
        Command::Fixed { gmonoid, which, max_degree } => fixed(&gmonoid, which.subgroup.as_deref(), max_degree),
        Command::OrbitCat { group } => orbit_cat(&group),
        Command::Naturality { gmonoid, cutoff } => naturality(&gmonoid, cutoff),
        Command::Mcduff { complex } => mcduff(&complex),
        Command::EzCheck { bisset, max_degree } => ez(&bisset, max_degree),
        Command::NormalizePoint { sset, point } => normalize(&sset, &point),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return CliError::Usage(e.to_string().trim_end().to_string()).emit(),
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            report.print(json);
            ExitCode::SUCCESS
        }
        Err(e) => e.emit(),
    }
}
