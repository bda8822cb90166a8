use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use supervogan::commands::{self, Format, RenderSpec};
use supervogan::Error;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Dot,
    Json,
}

/// Vogan diagrams and real forms of the basic classical Lie superalgebras.
///
/// Family specs: A(m,n), B(m,n), B(0,n), C(n), D(m,n), D(2,1;p/q), F(4), G(3).
/// Node indices are 1-based.
#[derive(Debug, Parser)]
#[command(name = "supervogan", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "ascii", global = true)]
    format: FormatArg,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Print node numbers under the ASCII chain.
    #[arg(long, global = true)]
    labels: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render the distinguished diagram.
    Diagram { spec: String },
    /// List the Vogan diagrams of a family.
    Enumerate {
        spec: String,
        /// One canonical representative per equivalence class.
        #[arg(long)]
        reduce: bool,
        /// Attach real-form names.
        #[arg(long)]
        classify: bool,
    },
    /// Reduce a painted diagram and print the flips applied.
    Reduce {
        spec: String,
        #[arg(long, value_delimiter = ',')]
        painted: Vec<usize>,
        #[arg(long)]
        involution: Option<String>,
    },
    /// Name the real form of a painted diagram.
    Classify {
        spec: String,
        #[arg(long, value_delimiter = ',')]
        painted: Vec<usize>,
        #[arg(long)]
        involution: Option<String>,
    },
    /// Computed real forms next to the embedded table; symbolic specs such
    /// as `B(m,n)` list the table row.
    Table { spec: String },
}

fn spec_of(c: &Command) -> &str {
    match c {
        Command::Diagram { spec }
        | Command::Enumerate { spec, .. }
        | Command::Reduce { spec, .. }
        | Command::Classify { spec, .. }
        | Command::Table { spec } => spec,
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let render = RenderSpec {
        format: match cli.format {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        },
        show_labels: cli.labels,
        show_realform: true,
    };
    match &cli.command {
        Command::Diagram { spec } => commands::cmd_diagram(spec, &render),
        Command::Enumerate { spec, reduce, classify } => commands::cmd_enumerate(spec, *reduce, *classify, &render),
        Command::Reduce { spec, painted, involution } => {
            commands::cmd_reduce(spec, painted, involution.as_deref(), &render)
        }
        Command::Classify { spec, painted, involution } => {
            commands::cmd_classify(spec, painted, involution.as_deref(), &render)
        }
        Command::Table { spec } => commands::cmd_table(spec, &render),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::ParseError { pos, .. } = &e {
                let spec = spec_of(&cli.command);
                eprintln!("  {spec}");
                eprintln!("  {}^", " ".repeat(spec[..*pos.min(&spec.len())].chars().count()));
            }
            ExitCode::FAILURE
        }
    }
}
