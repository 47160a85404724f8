//! Command definitions and dispatch.
//!
//! Exit codes: 0 when every checked property holds / the operation
//! succeeded, 1 when a checked property fails (the report carries the
//! witness), 2 for input errors (unknown flags, unreadable or malformed
//! files).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use homnambu_core::cohomology::{
    cohomology_summary, compare_level_one_operators, generic_level_report,
};
use homnambu_core::deformation::{
    are_equivalent, check_deformation, reduce_step, trivialize, ReduceOutcome,
};
use homnambu_core::derivations::{check_der_superalgebra, derivation_space, inner_space};
use homnambu_core::superalgebra::HomNambuSuperalgebra;
use homnambu_core::{axioms, constructions};

use crate::format::{
    self, parse_algebra, parse_deformation, parse_map, serialize_algebra, serialize_automorphism,
    serialize_deformation,
};
use crate::report::{
    scalars_to_strings, CohomDto, DeformCheckDto, DerDto, DerStructureDto, FailureDto, GraphDto,
    LevelDto, ReduceFailureDto, VerifyDto,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "homnambu",
    version,
    about = "Exact-arithmetic calculator for n-ary multiplicative Hom-Nambu-Lie superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the four defining identities of an algebra file.
    Verify { algebra: PathBuf },

    /// Twist an algebra along one of its morphisms; prints the new algebra.
    Twist {
        algebra: PathBuf,
        /// Map file with the twisting endomorphism.
        #[arg(long)]
        beta: PathBuf,
    },

    /// Direct sum of two algebras of the same arity; prints the result.
    Dsum { a: PathBuf, b: PathBuf },

    /// Test a map through its graph: morphism iff the graph is a
    /// subalgebra of the direct sum.
    Graph {
        src: PathBuf,
        dst: PathBuf,
        /// Map file from the source to the target space.
        #[arg(long)]
        map: PathBuf,
    },

    /// Solve for the derivation space at a twist level and parity.
    Der {
        algebra: PathBuf,
        /// Twist level (0 gives classical derivations).
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Parity of the derivations (0 or 1).
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: u8,
        /// Also verify the derivation-superalgebra structure up to this
        /// twist level.
        #[arg(long)]
        structure: Option<usize>,
    },

    /// Deformation cohomology dimensions and the rigidity verdict; with
    /// --level, the generic complex at that level.
    Cohom {
        algebra: PathBuf,
        /// Level of the generic coboundary operator (1 to 3).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        level: Option<u8>,
    },

    /// Operations on truncated formal deformations.
    #[command(subcommand)]
    Deform(DeformCommand),
}

#[derive(Debug, Subcommand)]
pub enum DeformCommand {
    /// Verify the deformation equations through the truncation order.
    Check {
        algebra: PathBuf,
        /// Terms file (one block of bracket entries per power).
        #[arg(long)]
        terms: PathBuf,
        /// Override the truncation order of the terms file.
        #[arg(long)]
        order: Option<usize>,
    },

    /// Remove the lowest nonzero term by an automorphism, if possible.
    Reduce {
        algebra: PathBuf,
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },

    /// Iterate reductions until the deformation is trivial or stuck.
    Trivialize {
        algebra: PathBuf,
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        order: Option<usize>,
        /// Cap on the number of reduction steps (default: the order).
        #[arg(long)]
        max_steps: Option<usize>,
    },

    /// Search for an equivalence between two deformations.
    Equiv {
        algebra: PathBuf,
        #[arg(long)]
        terms: PathBuf,
        /// Terms file of the second deformation.
        #[arg(long)]
        other: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
}

/// Outcome of one dispatch: what to print and how to exit.
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            exit_code: 0,
            output,
        }
    }

    fn property_failed(output: String) -> Self {
        Outcome {
            exit_code: 1,
            output,
        }
    }

    fn input_error(message: String) -> Self {
        Outcome {
            exit_code: 2,
            output: format!("error: {message}\n"),
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Outcome> {
    std::fs::read(path)
        .map_err(|e| Outcome::input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<HomNambuSuperalgebra, Outcome> {
    let bytes = read_file(path)?;
    parse_algebra(&bytes)
        .map_err(|e| Outcome::input_error(format!("{} [{}]: {e}", path.display(), e.code())))
}

fn render<T: serde::Serialize>(format: OutputFormat, dto: &T, text: String) -> String {
    match format {
        OutputFormat::Text => text,
        OutputFormat::Structured => format::to_pretty_json(dto),
    }
}

/// Run one parsed command; never panics on user input.
pub fn execute(cli: Cli) -> Outcome {
    match run(cli) {
        Ok(outcome) => outcome,
        Err(outcome) => outcome,
    }
}

fn run(cli: Cli) -> Result<Outcome, Outcome> {
    let format = cli.format;
    match cli.command {
        Command::Verify { algebra } => {
            let alg = load_algebra(&algebra)?;
            let reports = axioms::verify(&alg);
            let dto = VerifyDto::new(&reports);
            let text = dto.text();
            let valid = dto.valid;
            let rendered = render(format, &dto, text);
            Ok(if valid {
                Outcome::ok(rendered)
            } else {
                Outcome::property_failed(rendered)
            })
        }

        Command::Twist { algebra, beta } => {
            let alg = load_algebra(&algebra)?;
            let beta_bytes = read_file(&beta)?;
            let beta_map = parse_map(&beta_bytes, alg.space()).map_err(|e| {
                Outcome::input_error(format!("{} [{}]: {e}", beta.display(), e.code()))
            })?;
            match constructions::yau_twist(&alg, &beta_map) {
                Ok(twisted) => Ok(Outcome::ok(serialize_algebra(&twisted))),
                Err(e) => {
                    let dto = FailureDto::new("twist", &format!("{e}"));
                    let text = format!("twist precondition failed: {e}\n");
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
            }
        }

        Command::Dsum { a, b } => {
            let left = load_algebra(&a)?;
            let right = load_algebra(&b)?;
            match constructions::direct_sum(&left, &right) {
                Ok(sum) => Ok(Outcome::ok(serialize_algebra(&sum))),
                Err(e) => Err(Outcome::input_error(format!("direct sum failed: {e}"))),
            }
        }

        Command::Graph { src, dst, map } => {
            let source = load_algebra(&src)?;
            let target = load_algebra(&dst)?;
            let map_bytes = read_file(&map)?;
            let f = parse_map(&map_bytes, source.space()).map_err(|e| {
                Outcome::input_error(format!("{} [{}]: {e}", map.display(), e.code()))
            })?;
            let (is_morphism, is_subalgebra) =
                constructions::graph_is_subalgebra_iff_morphism(&f, &source, &target)
                    .map_err(|e| Outcome::input_error(format!("graph test failed: {e}")))?;
            let graph = constructions::graph(&f, &source, &target)
                .map_err(|e| Outcome::input_error(format!("graph construction: {e}")))?;
            let dto = GraphDto {
                command: "graph",
                is_morphism,
                graph_is_subalgebra: is_subalgebra,
                graph_dim: graph.dim(),
                basis: graph
                    .basis()
                    .vectors()
                    .iter()
                    .map(|v| scalars_to_strings(v))
                    .collect(),
                parities: graph.parities().to_vec(),
            };
            let text = dto.text();
            let rendered = render(format, &dto, text);
            Ok(if is_morphism {
                Outcome::ok(rendered)
            } else {
                Outcome::property_failed(rendered)
            })
        }

        Command::Der {
            algebra,
            k,
            parity,
            structure,
        } => {
            let alg = load_algebra(&algebra)?;
            if let Some(k_max) = structure {
                if k_max < 1 {
                    return Err(Outcome::input_error(
                        "--structure requires a level of at least 1".into(),
                    ));
                }
                let report = check_der_superalgebra(&alg, k_max);
                let dto = DerStructureDto::new(&report);
                let text = dto.text();
                let all_hold = dto.all_hold;
                let rendered = render(format, &dto, text);
                return Ok(if all_hold {
                    Outcome::ok(rendered)
                } else {
                    Outcome::property_failed(rendered)
                });
            }
            let space = derivation_space(&alg, k, parity);
            let inner = if k >= 1 {
                Some(inner_space(&alg, k))
            } else {
                None
            };
            let dto = DerDto::new(&alg, &space, inner.as_ref());
            let text = dto.text();
            Ok(Outcome::ok(render(format, &dto, text)))
        }

        Command::Cohom { algebra, level } => {
            let alg = load_algebra(&algebra)?;
            match level {
                None => {
                    let summary = cohomology_summary(&alg);
                    let dto = CohomDto::new(&summary);
                    let text = dto.text();
                    Ok(Outcome::ok(render(format, &dto, text)))
                }
                Some(m) => {
                    let report = generic_level_report(&alg, m as usize);
                    let cmp = if m == 1 {
                        Some(compare_level_one_operators(&alg))
                    } else {
                        None
                    };
                    let dto = LevelDto::new(&report, cmp.as_ref());
                    let text = dto.text();
                    Ok(Outcome::ok(render(format, &dto, text)))
                }
            }
        }

        Command::Deform(action) => run_deform(format, action),
    }
}

fn load_deformation(
    algebra: &Path,
    terms: &Path,
    order: Option<usize>,
) -> Result<homnambu_core::deformation::FormalDeformation, Outcome> {
    let alg = load_algebra(algebra)?;
    let bytes = read_file(terms)?;
    parse_deformation(&bytes, &alg, order)
        .map_err(|e| Outcome::input_error(format!("{} [{}]: {e}", terms.display(), e.code())))
}

fn run_deform(format: OutputFormat, action: DeformCommand) -> Result<Outcome, Outcome> {
    match action {
        DeformCommand::Check {
            algebra,
            terms,
            order,
        } => {
            let d = load_deformation(&algebra, &terms, order)?;
            let report = check_deformation(&d);
            let dto = DeformCheckDto::new(&report);
            let text = dto.text();
            let valid = dto.valid;
            let rendered = render(format, &dto, text);
            Ok(if valid {
                Outcome::ok(rendered)
            } else {
                Outcome::property_failed(rendered)
            })
        }

        DeformCommand::Reduce {
            algebra,
            terms,
            order,
        } => {
            let d = load_deformation(&algebra, &terms, order)?;
            match reduce_step(&d) {
                Err(e) => {
                    let dto = FailureDto::new("deform-reduce", &format!("{e}"));
                    let text = format!("deformation invalid: {e}\n");
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
                Ok(ReduceOutcome::AlreadyTrivial) => {
                    Ok(Outcome::ok("already trivial\n".to_string()))
                }
                Ok(ReduceOutcome::Reduced {
                    deformation,
                    automorphism,
                }) => {
                    let mut out = String::new();
                    out.push_str(&serialize_deformation(&deformation));
                    out.push_str(&serialize_automorphism(&automorphism));
                    Ok(Outcome::ok(out))
                }
                Ok(ReduceOutcome::NotCoboundary {
                    order,
                    coboundary_without_twist_constraint,
                }) => {
                    let dto = ReduceFailureDto {
                        command: "deform-reduce",
                        ok: false,
                        order,
                        coboundary_without_twist_constraint,
                    };
                    let text = format!(
                        "lowest term at order {order} is not a coboundary \
                         (coboundary without the twist-commutation constraint: {})\n",
                        coboundary_without_twist_constraint
                    );
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
            }
        }

        DeformCommand::Trivialize {
            algebra,
            terms,
            order,
            max_steps,
        } => {
            let d = load_deformation(&algebra, &terms, order)?;
            let cap = max_steps.unwrap_or_else(|| d.order().max(1));
            match trivialize(&d, cap) {
                Err(e) => {
                    let dto = FailureDto::new("deform-trivialize", &format!("{e}"));
                    let text = format!("deformation invalid: {e}\n");
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
                Ok(Some(witness)) => Ok(Outcome::ok(serialize_automorphism(&witness))),
                Ok(None) => {
                    let dto = FailureDto::new("deform-trivialize", "essentially nontrivial");
                    let text = "deformation is essentially nontrivial\n".to_string();
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
            }
        }

        DeformCommand::Equiv {
            algebra,
            terms,
            other,
            order,
        } => {
            let d1 = load_deformation(&algebra, &terms, order)?;
            let d2 = load_deformation(&algebra, &other, order)?;
            let n = order.unwrap_or_else(|| d1.order().min(d2.order()));
            match are_equivalent(&d1, &d2, n) {
                Err(e) => Err(Outcome::input_error(format!("equivalence search: {e}"))),
                Ok(Some(witness)) => Ok(Outcome::ok(serialize_automorphism(&witness))),
                Ok(None) => {
                    let dto = FailureDto::new("deform-equiv", "not equivalent");
                    let text = "deformations are not equivalent\n".to_string();
                    Ok(Outcome::property_failed(render(format, &dto, text)))
                }
            }
        }
    }
}
