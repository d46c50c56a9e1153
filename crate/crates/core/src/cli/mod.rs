//! Command-line front end.

mod args;

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::Parser;
use serde::Serialize;

use geodetic_forge::caps::Caps;
use geodetic_forge::error::{Error, Result};
use geodetic_forge::graph::{cayley_graph, subdivide, DotOptions, LetterPartition};
use geodetic_forge::group::{check_genset, FiniteGroup, GenSet, GroupSource};
use geodetic_forge::letter::{OrderSpec, Word};
use geodetic_forge::nabla::nabla;
use geodetic_forge::rewriting::{
    check_confluence_bounded, check_random_agreement, irreducible_words, RewritingSystem, Strategy,
};
use geodetic_forge::verify::{
    self, model::nabla_images, spheres, Factor, ModelOracle, VerificationReport,
};

pub use args::Cli;
use args::*;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Error = 1,
    NotGeodetic = 2,
    CheckFailed = 3,
}

pub fn main() -> Exit {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Error } else { Exit::Ok };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Error
        }
    }
}

fn run(cli: Cli) -> Result<Exit> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    }
    let caps = Caps::from_env()?;
    match cli.command {
        Command::CheckGeodetic(g) => check_geodetic(&g),
        Command::Nabla(a) => cmd_nabla(&a, &caps),
        Command::Subdivide(a) => cmd_subdivide(&a),
        Command::Rewrite(a) => cmd_rewrite(&a, &caps),
        Command::Confluence(a) => cmd_confluence(&a, &caps),
        Command::Verify(v) => cmd_verify(v, &caps),
        Command::ExportDot(a) => cmd_export_dot(&a),
        Command::Growth(a) => cmd_growth(&a, &caps),
    }
}

fn load_group(source: &str, gens: Option<&[String]>) -> Result<(FiniteGroup, GenSet)> {
    let (g, file_gens) = source.parse::<GroupSource>()?.load()?;
    let sigma = match (gens, file_gens) {
        (Some(tokens), _) => {
            let elements = tokens.iter().map(|t| g.resolve_element(t.trim())).collect::<Result<Vec<_>>>()?;
            check_genset(&g, &elements)?
        }
        (None, Some(elements)) => check_genset(&g, &elements)?,
        (None, None) => GenSet::all_nonidentity(&g),
    };
    Ok((g, sigma))
}

fn group_of(args: &GroupArgs) -> Result<(FiniteGroup, GenSet)> {
    load_group(&args.group, args.gens.as_deref())
}

/// Writes to stdout; a reader that has gone away (as with `| head`) is not
/// an error.
fn say(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => Ok(fs::write(p, text)?),
        None => say(text),
    }
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn check_geodetic(args: &GroupArgs) -> Result<Exit> {
    let (g, sigma) = group_of(args)?;
    let verdict = cayley_graph(&g, &sigma).is_geodetic()?;
    match verdict.witness() {
        None => {
            say("geodetic\n")?;
            Ok(Exit::Ok)
        }
        Some(w) => {
            say(&format!("not geodetic\nwitness: {w}\n"))?;
            Ok(Exit::NotGeodetic)
        }
    }
}

fn cmd_nabla(args: &NablaArgs, caps: &Caps) -> Result<Exit> {
    let (g, sigma) = group_of(&args.group)?;
    let order: OrderSpec = args.order.parse()?;
    let nab = nabla(&g, &sigma, args.n, &order, caps)?;
    if let Some(path) = &args.dot {
        let opts = DotOptions {
            name: format!("{}_n{}", g.name(), args.n),
            old_vertices: Some(g.order()),
            ..DotOptions::default()
        };
        fs::write(path, nab.graph().export_dot(&opts))?;
    }
    if let Some(path) = &args.rules {
        fs::write(path, nab.system().rules_text())?;
    }
    emit(&pretty(&nab.to_doc())?, args.output.as_deref())?;
    Ok(Exit::Ok)
}

fn cmd_subdivide(args: &SubdivideArgs) -> Result<Exit> {
    let (g, sigma) = group_of(&args.group)?;
    let gamma = cayley_graph(&g, &sigma);
    let (sub, _) = subdivide(&gamma, &LetterPartition::from_alphabet(gamma.alphabet())?, args.n)?;
    emit(&pretty(&sub.dump())?, args.output.as_deref())?;
    Ok(Exit::Ok)
}

fn load_system(path: &Path) -> Result<RewritingSystem> {
    RewritingSystem::load(&fs::read_to_string(path)?)
}

fn cmd_rewrite(args: &RewriteArgs, caps: &Caps) -> Result<Exit> {
    let sys = load_system(&args.system)?;
    let word: Word = args.word.join(" ").parse()?;
    let strategy = match args.strategy {
        StrategyArg::Leftmost => Strategy::Leftmost,
        StrategyArg::Rightmost => Strategy::Rightmost,
        StrategyArg::Random => Strategy::Random { seed: args.seed },
    };
    let nf = sys.normal_form(&word, strategy, caps.rewrite_steps)?;
    say(&format!("{}\nsteps: {}\n", nf.word, nf.steps))?;
    Ok(Exit::Ok)
}

/// A system from a file, or built from a group; the group's data is kept
/// when there is one.
fn system_of(src: &SystemSource, caps: &Caps) -> Result<(RewritingSystem, Option<geodetic_forge::nabla::NablaSystem>)> {
    match (&src.system, &src.group) {
        (Some(path), _) => Ok((load_system(path)?, None)),
        (None, Some(group)) => {
            let (g, sigma) = load_group(group, src.gens.as_deref())?;
            let nab = nabla(&g, &sigma, src.n, &src.order.parse()?, caps)?;
            Ok((nab.system().clone(), Some(nab)))
        }
        (None, None) => Err(Error::Parse("give a group or --system".into())),
    }
}

fn cmd_confluence(args: &ConfluenceArgs, caps: &Caps) -> Result<Exit> {
    let (sys, _) = system_of(&args.source, caps)?;
    let bounded = check_confluence_bounded(&sys, args.max_len, args.seed, caps.rewrite_steps)?;
    let random = check_random_agreement(&sys, args.random_words, args.random_len, args.seed, caps.rewrite_steps)?;
    let pass = bounded.is_confluent() && random.counterexample.is_none();
    let doc = serde_json::json!({
        "confluent": pass,
        "bounded": bounded,
        "random": random,
    });
    emit(&pretty(&doc)?, args.output.as_deref())?;
    Ok(if pass { Exit::Ok } else { Exit::CheckFailed })
}

fn probe(name: &str) -> Result<FiniteGroup> {
    let (g, _) = name.parse::<GroupSource>()?.load()?;
    Ok(g)
}

fn cmd_verify(cmd: VerifyCommand, caps: &Caps) -> Result<Exit> {
    let (report, out) = match cmd {
        VerifyCommand::TheoremA { group, n, probes, report } => {
            let (g, sigma) = group_of(&group)?;
            let probes = probes.iter().map(|p| probe(p)).collect::<Result<Vec<_>>>()?;
            (verify::verify_theorem_a(&g, &sigma, n, &probes, caps)?, report)
        }
        VerifyCommand::TheoremB { group, n, report } => {
            let (g, sigma) = group_of(&group)?;
            (verify::verify_theorem_b(&g, &sigma, n, caps)?, report)
        }
        VerifyCommand::Iterated { group, n, m, report } => {
            let (g, sigma) = group_of(&group)?;
            (verify::verify_iterated_subdivision(&g, &sigma, n, m)?, report)
        }
        VerifyCommand::Compose { group, with, with_gens, n, radius, seed, report } => {
            let (g, sigma) = group_of(&group)?;
            let right = match with.strip_prefix("free:") {
                Some(k) => Factor::Free(k.parse().map_err(|_| Error::Parse(format!("bad free rank in `{with}`")))?),
                None => {
                    let (h, tau) = load_group(&with, with_gens.as_deref())?;
                    Factor::Finite(h, tau)
                }
            };
            (verify::verify_free_product_composition(&Factor::Finite(g, sigma), &right, n, radius, seed, caps)?, report)
        }
        VerifyCommand::Correspondence { group, n, radius, report } => {
            let (g, sigma) = group_of(&group)?;
            (verify::verify_nabla_correspondence(&g, &sigma, n, radius, caps)?, report)
        }
    };
    write_report(report, &out)
}

fn write_report(report: VerificationReport, out: &ReportArgs) -> Result<Exit> {
    let report = if out.no_timing { report.without_timing() } else { report };
    let json = pretty(&report)?;
    if let Some(path) = &out.output {
        fs::write(path, &json)?;
    }
    if out.json {
        say(&json)?;
    } else {
        say(&report.to_string())?;
    }
    Ok(if report.pass { Exit::Ok } else { Exit::CheckFailed })
}

fn cmd_export_dot(args: &ExportDotArgs) -> Result<Exit> {
    let (g, sigma) = group_of(&args.group)?;
    let gamma = cayley_graph(&g, &sigma);
    let names: Vec<String> = (0..g.order()).map(|x| g.element_name(x)).collect();
    let text = match args.n {
        None => gamma.export_dot(&DotOptions {
            name: g.name().to_string(),
            vertex_names: Some(names),
            short_labels: true,
            ..DotOptions::default()
        }),
        Some(n) => {
            let (sub, _) = subdivide(&gamma, &LetterPartition::from_alphabet(gamma.alphabet())?, n)?;
            let mut all = names;
            if !args.hide_interior {
                all.extend((g.order()..sub.vertex_count()).map(|v| v.to_string()));
            }
            sub.export_dot(&DotOptions {
                name: format!("{}_n{n}", g.name()),
                vertex_names: Some(all),
                short_labels: false,
                old_vertices: Some(g.order()),
                hide_interior: args.hide_interior,
            })
        }
    };
    emit(&text, args.output.as_deref())?;
    Ok(Exit::Ok)
}

fn cmd_growth(args: &GrowthArgs, caps: &Caps) -> Result<Exit> {
    let (sys, nab) = system_of(&args.source, caps)?;
    let census = irreducible_words(&sys, args.radius, caps.census_words)?;
    let mut header = vec!["length", "irreducible"];
    let mut columns = vec![census.counts.clone()];
    if let Some(nab) = &nab {
        let (model, images) = nabla_images(nab.group(), nab.partition(), nab.n(), sys.alphabet());
        let (group_spheres, _) = spheres(&ModelOracle { model, images }, args.radius, caps.census_words)?;
        header.push("group_sphere");
        columns.push(group_spheres);
        let graph_spheres = nab.graph().ball_sizes(0, args.radius).into_iter().map(|s| s as u64).collect();
        header.push("graph_sphere");
        columns.push(graph_spheres);
    }
    let mut table = header.join("\t") + "\n";
    for len in 0..=args.radius {
        let row: Vec<String> = std::iter::once(len.to_string()).chain(columns.iter().map(|c| c[len].to_string())).collect();
        table += &(row.join("\t") + "\n");
    }
    say(&table)?;
    Ok(Exit::Ok)
}
