mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MALFORMED: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableStyle {
    Md,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GradingChoice {
    /// Grading stored in the file, else the catalogue grading.
    Auto,
    /// Everything even.
    Trivial,
    /// First half even, second half odd.
    Natural,
}

/// Exact experiments with locally complex algebras.
///
/// ALGEBRA arguments are either a catalogue name (R, C, H, O, S, A0..A6, TO,
/// TS, J3, ...) or the path of an algebra JSON file.
#[derive(Debug, Parser)]
#[command(name = "lcalg", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,

    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = lcalg::verify::DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an algebra file: a catalogue algebra, A_{t,s} or A_{T,u}.
    Gen {
        /// Catalogue name.
        name: Option<String>,
        /// Build A_{t,s} from `t s`.
        #[arg(long = "ts", num_args = 2, value_names = ["T", "S"], conflicts_with_all = ["name", "t"])]
        ts: Option<Vec<String>>,
        /// Build A_{T,u}: rows of T separated by `;`, entries by `,`.
        #[arg(long = "T", requires = "u", conflicts_with = "name")]
        t: Option<String>,
        /// Entries of u separated by `,`.
        #[arg(long)]
        u: Option<String>,
        /// Write here instead of stdout.
        #[arg(long, short)]
        out: Option<std::path::PathBuf>,
    },
    /// Print the multiplication table.
    Table {
        algebra: String,
        #[arg(long, value_enum, default_value_t = TableStyle::Md)]
        style: TableStyle,
    },
    /// Run the property checkers. Exits 1 when a checked property fails.
    Check {
        algebra: String,
        /// all, quadratic, lc, alt, superalt or nn.
        #[arg(long, default_value = "all")]
        props: String,
        #[arg(long, value_enum, default_value_t = GradingChoice::Auto)]
        grading: GradingChoice,
        /// Random candidates for the zero-divisor search.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    /// Recognize an alternative locally complex algebra as R, C, H or O.
    Recognize { algebra: String },
    /// Classify a super-alternative locally complex algebra.
    ClassifySuper {
        algebra: String,
        #[arg(long, value_enum, default_value_t = GradingChoice::Auto)]
        grading: GradingChoice,
    },
    /// Canonical (t, s) of a three-dimensional locally complex algebra.
    Classify3 {
        #[arg(required_unless_present = "params")]
        algebra: Option<String>,
        /// Use A_{t,s} for these parameters.
        #[arg(long, num_args = 2, value_names = ["T", "S"], conflicts_with = "algebra")]
        params: Option<Vec<String>>,
    },
    /// (T, u), geometric type, division test and hyperboloid configuration.
    Classify4 {
        /// Algebra, or a JSON file `{"T": [[..]], "u": [..]}`.
        #[arg(required_unless_present = "t")]
        source: Option<String>,
        #[arg(long = "T", requires = "u", conflicts_with = "source")]
        t: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long, default_value_t = lcalg::lowdim::geometry::DEFAULT_TOL)]
        tol: f64,
    },
    /// Decide whether two four-dimensional algebras are isomorphic.
    Iso4 {
        /// First algebra or parameter file.
        #[arg(long = "a")]
        first: String,
        /// Second algebra or parameter file.
        #[arg(long = "b")]
        second: String,
        #[arg(long, default_value_t = lcalg::lowdim::geometry::DEFAULT_TOL)]
        tol: f64,
    },
    /// Division test for a four-dimensional algebra. Exits 0 either way.
    Division4 {
        #[arg(required_unless_present = "t")]
        source: Option<String>,
        #[arg(long = "T", requires = "u", conflicts_with = "source")]
        t: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long, default_value_t = lcalg::lowdim::geometry::DEFAULT_TOL)]
        tol: f64,
    },
    /// Right annihilator {y : xy = 0} of an element such as `f1 - f4`.
    Ann { algebra: String, element: String },
    /// Search for a pair of zero divisors.
    Zerodiv {
        algebra: String,
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    /// Solutions a of x^2 a = x(xa) for all x.
    Alterscalar { algebra: String },
    /// Check that a linear map is an injective unital homomorphism.
    EmbedCheck {
        /// Map file `{"matrix": [..]}`; defaults to the built-in TO -> S map.
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value = "TO")]
        from: String,
        #[arg(long, default_value = "S")]
        to: String,
    },
    /// Subalgebra generated by elements, and whether their span with 1 is
    /// already closed. Defaults to the five-element span in TS.
    Subalg {
        #[arg(default_value = "TS")]
        algebra: String,
        /// Generators; default `f1 + f14`, `f3 - f12`, `f6 - f9`, `f7 - f8`.
        elements: Vec<String>,
        /// Do not adjoin the unit.
        #[arg(long)]
        no_unit: bool,
    },
    /// Run the catalogue of computational claims.
    VerifyPaper {
        /// Run a single claim by id.
        #[arg(long)]
        claim: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { EXIT_FAILURE })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
