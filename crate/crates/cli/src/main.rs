//! `gentle`: exact invariants of string and band modules over gentle
//! algebras, with a self-testing example suite.

mod commands;
mod selftest;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "gentle",
    version,
    about = "String/band module invariants and cluster characters for gentle algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the gentle axioms of an algebra file; exit 1 with a report on failure.
    Validate { file: String },
    /// F-polynomial of a module.
    Fpoly {
        file: String,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// g-vector of a module (combinatorial route, homological cross-check).
    Gvec {
        file: String,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Cluster character of a module.
    Cc {
        file: String,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Auslander-Reiten translate (or inverse with --inverse).
    Tau {
        file: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// AR sequence starting at a non-injective module.
    ArSeq {
        file: String,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// dim Hom(X, Y), combinatorial and by the linear oracle.
    Hom {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Basis of Ext^1(S, X) by arrow and overlap extensions.
    Ext {
        file: String,
        /// the quotient module S
        #[arg(long)]
        from: String,
        /// the submodule X
        #[arg(long)]
        to: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Multiplication data for a pair with one-dimensional Ext^1(S, X).
    Multiply {
        file: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        s: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Emit the algebra DSL of a polygon triangulation.
    Polygon {
        #[arg(long)]
        m: usize,
        /// comma-separated vertex pairs, e.g. "0-2,2-4,0-4"
        #[arg(long)]
        diagonals: String,
    },
    /// Type-B cluster variable of a theta-orbit.
    Typeb {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        triangulation: String,
        /// orbit representative, e.g. "1-7"
        #[arg(long)]
        orbit: String,
        /// orient the diameter from its higher-numbered endpoint
        #[arg(long)]
        orient_high: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Seed-mutation oracle.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Replay the bundled example suite; --fuzz adds randomized checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        fuzz: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// BFS enumeration of cluster variables from a matrix file
    /// (whitespace-separated integer rows).
    Enumerate {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Cross-check arc modules against mutation for a polygon file emitted
    /// by `gentle polygon`.
    Check { file: String },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // usage errors exit 1; --help/--version exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Fpoly { file, module, format } => commands::fpoly(&file, &module, &format),
        Command::Gvec { file, module, format } => commands::gvec(&file, &module, &format),
        Command::Cc { file, module, format } => commands::cc(&file, &module, &format),
        Command::Tau { file, module, inverse, format } => {
            commands::tau_cmd(&file, &module, inverse, &format)
        }
        Command::ArSeq { file, module, format } => commands::ar_seq(&file, &module, &format),
        Command::Hom { file, from, to, format } => commands::hom(&file, &from, &to, &format),
        Command::Ext { file, from, to, format } => commands::ext(&file, &from, &to, &format),
        Command::Multiply { file, x, s, format } => commands::multiply(&file, &x, &s, &format),
        Command::Polygon { m, diagonals } => commands::polygon(m, &diagonals),
        Command::Typeb { m, triangulation, orbit, orient_high, format } => {
            commands::typeb(m, &triangulation, &orbit, orient_high, &format)
        }
        Command::Oracle(OracleCommand::Enumerate { matrix, cap, format }) => {
            commands::oracle_enumerate(&matrix, cap, &format)
        }
        Command::Oracle(OracleCommand::Check { file }) => commands::oracle_check(&file),
        Command::Selftest { fuzz, seed } => selftest::run(fuzz, seed),
    };
    match result {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
