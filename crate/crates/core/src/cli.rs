//! Command-line front end. Every subcommand prints one JSON report.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::action;
use crate::error::{Error, Result};
use crate::flag::{self, RegularDominantChar};
use crate::invariants::{verify_kernel_basis, y_generators};
use crate::oracle::grass::{cell_verdict, Verdict};
use crate::oracle::suites::{exhaustive_check, SuiteParams};
use crate::report::{Check, Report};
use crate::schubert::{self, GrassmannElement};
use crate::weyl::Permutation;

#[derive(Debug, Parser)]
#[command(name = "schubert-torus", version, about = "Torus quotients of Schubert cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The minimal cell τ_r whose Schubert variety meets the semistable locus.
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// All cells of G_{r,n} containing semistable points.
    SemistableCells {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Inversion roots of a cell, row by row.
    Inversions(CellArgs),
    /// Invariant generators Y_{i,j} of a cell and the lattice check.
    Invariants(CellArgs),
    /// Action of s_k on the cell coordinates and on the invariants.
    Act {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long = "gen")]
        k: usize,
    },
    /// Strata of the quotient of G_{2,n}.
    Strata {
        #[arg(long)]
        n: usize,
    },
    /// Elements w of S_{n+1} with w(χ) ≤ 0.
    FlagNegative {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        chi: Vec<i64>,
    },
    /// Quotient coordinates of the cell s_1⋯s_n τ.
    FlagQuotient {
        #[arg(long)]
        n: usize,
        /// τ ∈ W_I as a word in s_1, …, s_{n-1}; empty for the identity.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        tau: Vec<usize>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        chi: Option<Vec<i64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, clap::Args)]
pub struct CellArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// The a-sequence, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<usize>,
}

impl CellArgs {
    fn cell(&self) -> Result<GrassmannElement> {
        GrassmannElement::new(self.n, self.r, self.a.clone())
    }

    fn params(&self) -> Value {
        json!({"n": self.n, "r": self.r, "a": self.a})
    }
}

fn cell_json(g: &GrassmannElement) -> Value {
    json!({"a_seq": g.a_seq(), "word": g.word(), "subset": g.subset(), "length": g.length()})
}

fn root_json(r: (usize, usize)) -> Value {
    json!([r.0, r.1])
}

fn execute(cmd: &Command) -> Result<Report> {
    Ok(match cmd {
        Command::Tau { n, r } => {
            let mut rep = Report::new("tau", json!({"n": n, "r": r}), 0);
            let g = schubert::tau_r(*n, *r)?;
            rep.results = json!({
                "a_seq": g.a_seq(),
                "word": g.word(),
                "closed_form": schubert::tau_r_closed_form(*n, *r)?,
                "closed_form_diagnostic": schubert::tau_r_diagnostic(*n, *r)?,
            });
            rep
        }
        Command::SemistableCells { n, r, seed } => {
            let mut rep = Report::new("semistable-cells", json!({"n": n, "r": r}), *seed);
            let mut cells = Vec::new();
            let mut mismatches = Vec::new();
            let seeds = [*seed, seed + 1, seed + 2];
            for g in GrassmannElement::all(*n, *r)? {
                let ours = schubert::has_semistable(&g)?;
                if ours {
                    cells.push(json!(g.a_seq()));
                }
                let v = cell_verdict(&g, &seeds);
                if v == Verdict::Inconclusive || (v == Verdict::Semistable) != ours {
                    mismatches.push(json!({"a": g.a_seq(), "oracle": format!("{v:?}")}));
                }
            }
            rep.results = json!(cells);
            rep.checks.push(Check::from_failures("oracle agrees", mismatches));
            rep
        }
        Command::Inversions(c) => {
            let g = c.cell()?;
            let arr = schubert::inversion_array(&g);
            let mut rep = Report::new("inversions", c.params(), 0);
            let rows: Vec<Vec<Value>> = (1..=g.r())
                .map(|i| (1..=g.row_len(i)).map(|col| root_json(arr.root(i, col))).collect())
                .collect();
            rep.results = json!({"cell": cell_json(&g), "rows": rows, "count": arr.len()});
            rep.checks.push(if arr.is_sum_free() {
                Check::pass("no two inversion roots sum to an inversion root")
            } else {
                Check::fail("no two inversion roots sum to an inversion root", json!(null))
            });
            rep
        }
        Command::Invariants(c) => {
            let g = c.cell()?;
            let arr = schubert::inversion_array(&g);
            let basis = y_generators(&arr)?;
            let kernel = verify_kernel_basis(&arr, g.n() - 1);
            let mut rep = Report::new("invariants", c.params(), 0);
            let gens: Vec<Value> = basis
                .indices
                .iter()
                .zip(&basis.generators)
                .map(|(ix, e)| json!({"i": ix.i, "j": ix.j, "y": action::y_in_x(&g, ix.i, ix.j).map(|f| f.to_string()).unwrap_or_default(), "exponents": e.flat()}))
                .collect();
            rep.results = json!({
                "generators": gens,
                "kernel_rank": kernel.kernel_rank,
                "change_of_basis_det": kernel.change_of_basis_det.as_ref().map(|d| d.to_string()),
            });
            rep.checks.push(if kernel.passed() {
                Check::pass("generators are a basis of the invariant lattice")
            } else {
                Check::fail("generators are a basis of the invariant lattice", json!({"kernel_rank": kernel.kernel_rank, "generators": kernel.expected_rank}))
            });
            rep
        }
        Command::Act { cell, k } => {
            let g = cell.cell()?;
            let mut params = cell.params();
            params["gen"] = json!(k);
            let mut rep = Report::new("act", params, 0);
            let x = action::x_action(*k, &g)?;
            let x_map: serde_json::Map<String, Value> =
                x.map.iter().map(|(v, f)| (v.to_string(), json!(f.to_string()))).collect();
            let mut y_map = serde_json::Map::new();
            let mut bad = Vec::new();
            if g.r() >= 2 {
                let closed = action::y_action_closed_form(*k, &g)?;
                for (i, j) in action::y_indices(&g) {
                    let var = crate::poly::Var::y(i, j);
                    let derived = action::y_action(*k, &g, &crate::poly::RationalFunction::var(var))?;
                    if derived != closed.get(var) {
                        bad.push(json!({"y": [i, j], "derived": derived.to_string()}));
                    }
                    y_map.insert(var.to_string(), json!(derived.to_string()));
                }
            }
            rep.results = json!({
                "case": action::statement_item(*k, &g)?,
                "x": x_map,
                "y": y_map,
            });
            rep.checks.push(Check::from_failures("closed form matches the derived action", bad));
            rep
        }
        Command::Strata { n } => exhaustive_check("strata", &SuiteParams { n: Some(*n), ..Default::default() })
            .map(|mut r| {
                r.command = "strata".into();
                r.params = json!({"n": n});
                r
            })?,
        Command::FlagNegative { n, chi } => {
            if chi.len() != *n {
                return Err(Error::InvalidParameters(format!("--chi needs {n} values, got {}", chi.len())));
            }
            let ch = RegularDominantChar::new(chi.clone())?;
            let ne = flag::negative_elements(&ch)?;
            let mut rep = Report::new("flag-negative", json!({"n": n, "chi": chi}), 0);
            rep.results = json!({
                "count": ne.by_weight.len(),
                "elements": ne.by_weight.iter().map(|w| json!({"one_line": w.one_line(), "word": w.reduced_word()})).collect::<Vec<_>>(),
            });
            rep.checks.push(if ne.agree() {
                Check::pass("equals s_1⋯s_n W_I")
            } else {
                Check::fail("equals s_1⋯s_n W_I", json!({"predicted": ne.predicted.len()}))
            });
            rep
        }
        Command::FlagQuotient { n, tau } => {
            if tau.iter().any(|&i| i == 0 || i >= *n) {
                return Err(Error::InvalidParameters(format!("τ must be a word in s_1..s_{}", n - 1)));
            }
            let t = Permutation::from_word(n + 1, tau)?;
            let w = flag::coxeter_prefix(*n).compose(&t)?;
            let coords = flag::pi_tau(&t)?;
            let mut rep = Report::new("flag-quotient", json!({"n": n, "tau": tau}), 0);
            let mut weights = Vec::new();
            let mut rows = Vec::new();
            for c in &coords {
                let zero = flag::root_monomial_weight(&c.expr, *n)?.is_zero();
                if !zero {
                    weights.push(root_json(c.label));
                }
                rows.push(json!({
                    "label": root_json(c.label),
                    "beta": root_json(c.beta),
                    "beta_prime": root_json(c.beta_prime),
                    "expr": c.expr.to_string(),
                }));
            }
            rep.results = json!({"w": w.one_line(), "tau": t.one_line(), "coordinates": rows});
            rep.checks.push(Check::from_failures("torus weight zero", weights));
            rep
        }
        Command::Verify { suite, n, r, chi, seed } => {
            exhaustive_check(suite, &SuiteParams { n: *n, r: *r, chi: chi.clone(), seed: *seed })?
        }
    })
}

/// Parses argv (program name first), runs the command and writes the JSON
/// report. Returns 0 when every check passes, 1 otherwise, 2 on bad input.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(rep) => {
            let _ = writeln!(out, "{}", rep.render());
            if rep.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
