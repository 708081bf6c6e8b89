//! `defarg` — default-logic argumentation over JSON files.
//!
//! Reports go to stdout as key-sorted JSON (`--pretty` switches to a
//! human-readable rendering). Exit codes:
//!
//! * 0 — success
//! * 1 — I/O, parse, or construction error
//! * 2 — `map validate`: some arc label is unsatisfied
//! * 3 — `extensions --singular`: the theory is not singular
//! * 4 — argument construction failed a singularity check
//! * 5 — missing or non-atomic translation during instantiation
//! * 6 — enumeration size exceeds `DEFARG_MAX_DEFAULTS` (default 16)

mod report;

use clap::{Parser, Subcommand};
use defarg_core::argmap::io::{
    ArgmapIoError, InstantiatedMapFile, MapFile, PolicyFile, TranslationFile,
};
use defarg_core::argmap::{premise_atomic_assignment, validate_labels, ArgmapError, LabelPolicy};
use defarg_core::argument::{ArgumentSpec, ArgumentSpecError};
use defarg_core::defaults::kb::KnowledgeBaseFile;
use defarg_core::defaults::{all_extensions, DefaultTheory};
use defarg_core::relations::relation_profile;
use report::{Failure, Report};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "defarg",
    version,
    about = "Default-logic structured argumentation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Reiter extensions of a knowledge base.
    Extensions {
        /// Knowledge-base JSON file (constants/facts/defaults/schemas).
        #[arg(long)]
        kb: PathBuf,
        /// List every extension (the default behaviour, spelled out).
        #[arg(long)]
        all: bool,
        /// Exit 3 unless the theory has exactly one extension.
        #[arg(long)]
        singular: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Operations on a single default argument.
    Argument {
        #[command(subcommand)]
        command: ArgumentCommand,
    },
    /// Relation profiles between two arguments, in both directions.
    Relate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Operations on argument maps.
    Map {
        #[command(subcommand)]
        command: MapCommand,
    },
}

#[derive(Subcommand)]
enum ArgumentCommand {
    /// Build the argument and report its profile, support and
    /// consequence.
    Check {
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Subcommand)]
enum MapCommand {
    /// Assign a default argument to every node of a map.
    Instantiate {
        map: PathBuf,
        #[arg(long)]
        translation: PathBuf,
        #[arg(long, default_value = "premise-atomic")]
        method: String,
        /// Where to write the instantiated-map JSON.
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Check every arc label of an instantiated map against a policy.
    Validate {
        imap: PathBuf,
        #[arg(long)]
        policy: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Extensions {
            kb,
            all,
            singular,
            pretty,
        } => cmd_extensions(&kb, all, singular, pretty),
        Command::Argument {
            command: ArgumentCommand::Check { file, pretty },
        } => cmd_argument_check(&file, pretty),
        Command::Relate { a, b, pretty } => cmd_relate(&a, &b, pretty),
        Command::Map { command } => match command {
            MapCommand::Instantiate {
                map,
                translation,
                method,
                out,
                pretty,
            } => cmd_map_instantiate(&map, &translation, &method, &out, pretty),
            MapCommand::Validate {
                imap,
                policy,
                pretty,
            } => cmd_map_validate(&imap, policy.as_deref(), pretty),
        },
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("defarg: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Enumeration cap, from `DEFARG_MAX_DEFAULTS` (default 16).
fn max_defaults() -> usize {
    std::env::var("DEFARG_MAX_DEFAULTS")
        .ok()
        .and_then(|raw| raw.parse::<usize>().ok())
        .unwrap_or(16)
}

fn ensure_enumerable(rule_count: usize, what: &str) -> Result<(), Failure> {
    let cap = max_defaults();
    if rule_count > cap {
        return Err(Failure::new(
            6,
            format!("{what} has {rule_count} defaults, above the DEFARG_MAX_DEFAULTS cap of {cap}"),
        ));
    }
    Ok(())
}

fn load_json<T: serde::de::DeserializeOwned>(
    report: &mut Report,
    name: &str,
    path: &Path,
) -> Result<T, Failure> {
    let text = report.record_input(name, path)?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::new(1, format!("{}: invalid JSON: {e}", path.display())))
}

fn load_argument(
    report: &mut Report,
    name: &str,
    path: &Path,
) -> Result<(ArgumentSpec, defarg_core::DefaultArgument), Failure> {
    let spec: ArgumentSpec = load_json(report, name, path)?;
    ensure_enumerable(spec.implicit_premises.len(), "premise theory")?;
    ensure_enumerable(spec.implicit_claims.len(), "claim theory")?;
    let argument = spec.build().map_err(|e| {
        let code = match e {
            ArgumentSpecError::Argument(_) => 4,
            _ => 1,
        };
        Failure::new(code, format!("{}: {e}", path.display()))
    })?;
    Ok((spec, argument))
}

fn cmd_extensions(kb: &Path, all: bool, singular: bool, pretty: bool) -> Result<ExitCode, Failure> {
    let mut report = Report::new();
    let file: KnowledgeBaseFile = load_json(&mut report, "kb", kb)?;
    let theory: DefaultTheory = file
        .build()
        .map_err(|e| Failure::new(1, format!("{}: {e}", kb.display())))?;
    ensure_enumerable(theory.defaults.len(), "knowledge base")?;
    let extensions = all_extensions(&theory);
    if extensions.is_empty() {
        report.warn("the default theory has no extension");
    }
    let is_singular = extensions.len() == 1;
    let listed: Vec<serde_json::Value> = extensions
        .iter()
        .map(|e| {
            serde_json::json!({
                "base": e.base().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "generating": e.generating().iter().copied().collect::<Vec<_>>(),
                "inconsistent": e.is_inconsistent(),
            })
        })
        .collect();
    report.set_result(serde_json::json!({
        "defaults": theory.defaults.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "facts": theory.facts.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "extension_count": extensions.len(),
        "extensions": listed,
        "singular": is_singular,
        "list_all": all || !singular,
    }));
    if pretty {
        println!("defaults: {}", theory.defaults.len());
        for rule in &theory.defaults {
            println!("  {rule}");
        }
        println!("facts: {}", theory.facts);
        println!(
            "extensions: {}{}",
            extensions.len(),
            if is_singular { " (singular)" } else { "" }
        );
        for (i, e) in extensions.iter().enumerate() {
            println!("  [{}] {e}", i + 1);
        }
    } else {
        report.print()?;
    }
    if singular && !is_singular {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_argument_check(file: &Path, pretty: bool) -> Result<ExitCode, Failure> {
    let mut report = Report::new();
    let (spec, argument) = load_argument(&mut report, "argument", file)?;
    let profile = argument.profile();
    report.set_result(serde_json::json!({
        "argument": spec,
        "profile": profile,
        "support": argument.support().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "consequence": argument.consequence().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    }));
    if pretty {
        println!("argument: {argument}");
        println!("support: Cn({})", argument.support());
        println!("consequence: Cn({})", argument.consequence());
        let flags = serde_json::to_value(profile).expect("profile serializes");
        println!("profile:");
        for (name, value) in flags.as_object().expect("flat object") {
            println!("  {name}: {value}");
        }
    } else {
        report.print()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_relate(a: &Path, b: &Path, pretty: bool) -> Result<ExitCode, Failure> {
    let mut report = Report::new();
    let (_, arg_a) = load_argument(&mut report, "a", a)?;
    let (_, arg_b) = load_argument(&mut report, "b", b)?;
    let forward = relation_profile(&arg_a, &arg_b);
    let backward = relation_profile(&arg_b, &arg_a);
    report.set_result(serde_json::json!({
        "a_to_b": forward,
        "b_to_a": backward,
    }));
    if pretty {
        let fwd = serde_json::to_value(forward).expect("profile serializes");
        let bwd = serde_json::to_value(backward).expect("profile serializes");
        println!("{:<32} {:>6} {:>6}", "relation", "a->b", "b->a");
        for name in defarg_core::RelationProfile::FIELD_NAMES {
            println!(
                "{:<32} {:>6} {:>6}",
                name,
                if fwd[name].as_bool().unwrap() {
                    "yes"
                } else {
                    "-"
                },
                if bwd[name].as_bool().unwrap() {
                    "yes"
                } else {
                    "-"
                },
            );
        }
    } else {
        report.print()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn translation_failure(path: &Path, error: ArgmapIoError) -> Failure {
    let code = match &error {
        ArgmapIoError::Map(ArgmapError::MissingTranslation { .. })
        | ArgmapIoError::Map(ArgmapError::NonAtomicTranslation { .. }) => 5,
        _ => 1,
    };
    Failure::new(code, format!("{}: {error}", path.display()))
}

fn cmd_map_instantiate(
    map_path: &Path,
    translation_path: &Path,
    method: &str,
    out: &Path,
    pretty: bool,
) -> Result<ExitCode, Failure> {
    let mut report = Report::new();
    if method != "premise-atomic" {
        return Err(Failure::new(
            1,
            format!("unknown instantiation method `{method}`"),
        ));
    }
    let map_file: MapFile = load_json(&mut report, "map", map_path)?;
    let map = map_file
        .build()
        .map_err(|e| Failure::new(1, format!("{}: {e}", map_path.display())))?;
    let translation_file: TranslationFile =
        load_json(&mut report, "translation", translation_path)?;
    let table = translation_file
        .build()
        .map_err(|e| translation_failure(translation_path, e))?;
    for node in map.nodes() {
        // The claim-side theory of a node carries one rule per
        // outgoing arc.
        let out_degree = map.arcs().iter().filter(|a| a.from == node.id).count();
        ensure_enumerable(out_degree, &format!("claim rules of node {}", node.id))?;
    }
    let instantiated = premise_atomic_assignment(&map, &table)
        .map_err(|e| translation_failure(map_path, ArgmapIoError::Map(e)))?;
    let out_file = InstantiatedMapFile::from_instantiated(&instantiated);
    let json = report::to_sorted_json(&out_file)?;
    std::fs::write(out, json.as_bytes())
        .map_err(|e| Failure::new(1, format!("{}: {e}", out.display())))?;
    report.set_result(serde_json::json!({
        "out": out.display().to_string(),
        "assignment": out_file.assignment,
    }));
    if pretty {
        for node in instantiated.map().nodes() {
            println!("{}: {}", node.id, instantiated.argument(&node.id).unwrap());
        }
        println!("wrote {}", out.display());
    } else {
        report.print()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_map_validate(
    imap_path: &Path,
    policy_path: Option<&Path>,
    pretty: bool,
) -> Result<ExitCode, Failure> {
    let mut report = Report::new();
    let imap_file: InstantiatedMapFile = load_json(&mut report, "imap", imap_path)?;
    for (node, spec) in &imap_file.assignment {
        ensure_enumerable(
            spec.implicit_premises.len(),
            &format!("premises of node {node}"),
        )?;
        ensure_enumerable(
            spec.implicit_claims.len(),
            &format!("claims of node {node}"),
        )?;
    }
    let instantiated = imap_file
        .build()
        .map_err(|e| Failure::new(1, format!("{}: {e}", imap_path.display())))?;
    let policy = match policy_path {
        None => LabelPolicy::standard(),
        Some(path) => {
            let policy_file: PolicyFile = load_json(&mut report, "policy", path)?;
            policy_file
                .build()
                .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?
        }
    };
    let map_report = validate_labels(&instantiated, &policy);
    report.set_result(serde_json::to_value(&map_report).expect("report serializes"));
    if pretty {
        for arc in &map_report.arcs {
            let holding: Vec<&str> = defarg_core::RelationProfile::FIELD_NAMES
                .into_iter()
                .filter(|name| arc.profile.get(name) == Some(true))
                .collect();
            println!(
                "{} -({})-> {}: {} [{}]",
                arc.from,
                arc.label,
                arc.to,
                if arc.satisfied {
                    "satisfied"
                } else {
                    "UNSATISFIED"
                },
                holding.join(", "),
            );
        }
        println!("map valid: {}", if map_report.valid { "yes" } else { "no" });
    } else {
        report.print()?;
    }
    if map_report.valid {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
