use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heunblock::algebra::{BigRational, ExecPolicy};
use heunblock_cli::{parse_binding, run, Command, ExitStatus, Format, JobConfig, Object};

#[derive(Parser, Debug)]
#[command(name = "heunblock", version, about = "Accessory-parameter and conformal-block expansions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectArg {
    Floquet,
    Bs,
    Block,
    Classical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(clap::Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Evaluate sequentially instead of on the thread pool.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Expand an accessory parameter or block to the given order.
    Compute {
        #[arg(long, value_enum)]
        object: ObjectArg,
        /// Equation tag for floquet (HVI, HV, HIII1, HIII2, HIII3) and bs (HV, HIV).
        #[arg(long)]
        equation: Option<String>,
        /// Block kind for block/classical: regular, Nf3..Nf0, typeD, typeG.
        #[arg(long = "block-kind")]
        block_kind: Option<String>,
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Exact value for a symbol, e.g. sigma=3/10 (repeatable).
        #[arg(long = "bind", value_parser = parse_binding)]
        bind: Vec<(String, BigRational)>,
        /// Print coefficients as decimals with this many significant digits.
        #[arg(long = "float", value_name = "DIGITS", value_parser = clap::value_parser!(u16).range(1..=17))]
        float: Option<u16>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite and report exact-equality verdicts.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        order: u32,
        #[command(flatten)]
        common: Common,
    },
    /// List the potentials of the Heun family.
    Catalog {
        #[arg(long)]
        equation: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn apply(config: &mut JobConfig, common: &Common) {
    config.format = match common.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    if common.sequential {
        config.policy = ExecPolicy::Sequential;
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.command {
        Cmd::Compute {
            object,
            equation,
            block_kind,
            order,
            bind,
            float,
            common,
        } => {
            let mut c = JobConfig::new(Command::Compute);
            c.object = Some(match object {
                ObjectArg::Floquet => Object::Floquet,
                ObjectArg::Bs => Object::Bs,
                ObjectArg::Block => Object::Block,
                ObjectArg::Classical => Object::Classical,
            });
            c.equation = equation;
            c.block_kind = block_kind;
            c.order = order;
            c.bindings = bind.into_iter().collect::<BTreeMap<_, _>>();
            c.float_digits = float.map(usize::from);
            apply(&mut c, &common);
            c
        }
        Cmd::Verify { suite, order, common } => {
            let mut c = JobConfig::new(Command::Verify);
            c.suite = Some(suite);
            c.order = order;
            apply(&mut c, &common);
            c
        }
        Cmd::Catalog { equation, common } => {
            let mut c = JobConfig::new(Command::Catalog);
            c.equation = equation;
            apply(&mut c, &common);
            c
        }
    };
    let outcome = run(&config);
    if outcome.status == ExitStatus::Ok || outcome.status == ExitStatus::Mismatch {
        // A closed pipe (e.g. `| head`) is not an error of the computation.
        let _ = writeln!(std::io::stdout(), "{}", outcome.output);
    } else {
        eprintln!("{}", outcome.output);
    }
    ExitCode::from(outcome.status as u8)
}
