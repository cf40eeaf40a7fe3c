use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coregroups::abelian::abelianize;
use coregroups::diagram::{
    apply_move, checkerboard_color, legal_moves, parse_diagram, trace_arcs, trace_faces, Diagram, Move, RegionMode,
};
use coregroups::enumeration::{coset_enumerate, count_homomorphisms, CosetOutcome, FiniteGroup, DEFAULT_MAX_COSETS};
use coregroups::groups::{arc_core, boundary_quotient, build_group, checkerboard_graphs, GroupKind};
use coregroups::presentation::{core_functor, split_free_factor, tietze_simplify, Presentation};
use coregroups::verify::{parse_boundary_word, run_suite, Corpus, SUITES};
use coregroups::Error;

const MAX_COSETS_VAR: &str = "COREGROUPS_MAX_COSETS";
const SIMPLIFY_EFFORT: usize = 200;

#[derive(Parser)]
#[command(name = "coregroups", version, about = "Core groups of classical and virtual link diagrams")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ac,
    Rc,
    Rrc,
    Rc0,
    Wirtinger,
    Dehn,
}

impl Kind {
    fn group_kind(self) -> GroupKind {
        match self {
            Kind::Ac => GroupKind::Arc,
            Kind::Rc => GroupKind::Region,
            Kind::Rrc => GroupKind::SecondRegion,
            Kind::Rc0 => GroupKind::RegionZero,
            Kind::Wirtinger => GroupKind::Wirtinger,
            Kind::Dehn => GroupKind::Dehn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Classical,
    Virtual,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Diagram file.
    diagram: PathBuf,
    #[arg(long, value_enum, default_value = "ac")]
    kind: Kind,
    /// Region structure; defaults to classical when every piece is planar.
    #[arg(long, value_enum)]
    region_mode: Option<Mode>,
    /// Region killed by rc0 and dehn, e.g. R2.
    #[arg(long)]
    base: Option<String>,
    /// Boundary word such as "g2^-1 g1 g2 g3^-1" (ac only, repeatable).
    #[arg(long)]
    boundary: Vec<String>,
    /// Apply Tietze simplification.
    #[arg(long)]
    simplify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, genus, colorability, pieces and components of a diagram.
    Info { diagram: PathBuf },
    /// Prints a group presentation built from a diagram.
    Group(GroupArgs),
    /// Prints the abelianization of a diagram group or a presentation file.
    Abelian(GroupArgs),
    /// Counts homomorphisms into a finite group.
    Homcount {
        /// Diagram (with --kind) or presentation file (.pres).
        input: PathBuf,
        /// z<m>, s<n>, a<n>, or a file of generating permutations in cycle notation.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "ac")]
        kind: Kind,
    },
    /// Order of a finitely presented group by coset enumeration.
    Order {
        presentation: PathBuf,
        /// Coset bound; overrides the environment variable COREGROUPS_MAX_COSETS.
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Applies the core functor with the all-nontrivial parity.
    Core {
        presentation: PathBuf,
        /// Split off the free factor generated by this generator.
        #[arg(long)]
        split: Option<String>,
        #[arg(long)]
        simplify: bool,
    },
    /// Applies a Reidemeister move and prints the new diagram.
    Move {
        diagram: PathBuf,
        /// Move such as "r2- 1.2" or "r1+ 1.0 left even".
        #[arg(long, required_unless_present = "list")]
        spec: Option<String>,
        /// List every legal move instead.
        #[arg(long)]
        list: bool,
    },
    /// Runs verification suites over a corpus directory.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
    },
}

/// A failure with its exit code: 1 for computation, 2 for usage.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArg(_) | Error::UnknownRegion(_) | Error::UnknownArc(_) | Error::UnknownCrossing(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<Diagram, Failure> {
    parse_diagram(&read(path)?).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    Presentation::parse(&read(path)?).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn is_presentation(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "pres")
}

struct Out {
    format: Format,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn text(&mut self, s: &str) {
        let _ = self.stdout.write_all(s.as_bytes());
        if !s.ends_with('\n') {
            let _ = self.stdout.write_all(b"\n");
        }
    }

    fn json(&mut self, v: Value) {
        let _ = writeln!(self.stdout, "{v}");
    }

    /// Text or one JSON line, depending on the format.
    fn emit(&mut self, text: &str, v: Value) {
        match self.format {
            Format::Text => self.text(text),
            Format::JsonLines => self.json(v),
        }
    }
}

fn region_mode(d: &Diagram, m: Option<Mode>) -> RegionMode {
    match m {
        Some(Mode::Classical) => RegionMode::Classical,
        Some(Mode::Virtual) => RegionMode::Virtual,
        None => RegionMode::natural(d),
    }
}

fn presentation_json(p: &Presentation, provenance: Value) -> Value {
    let relators: Vec<String> = p.relators().iter().map(|r| p.word_to_string(r)).collect();
    json!({ "generators": p.generators(), "relators": relators, "provenance": provenance })
}

/// Edges of each arc and corners of each region, keyed by generator name.
fn provenance(d: &Diagram, kind: GroupKind, mode: RegionMode) -> Result<Value, Failure> {
    let mut map = serde_json::Map::new();
    match kind {
        GroupKind::Arc | GroupKind::Wirtinger => {
            let prefix = if kind == GroupKind::Arc { "g" } else { "x" };
            let edges = d.edges();
            for (i, a) in trace_arcs(d).arcs.iter().enumerate() {
                let val: Vec<String> = match a.loop_index {
                    Some(l) => vec![format!("loop {}", d.loops()[l])],
                    None => a
                        .edges
                        .iter()
                        .map(|&e| format!("{}-{}", d.slot_name(edges[e].0), d.slot_name(edges[e].1)))
                        .collect(),
                };
                map.insert(format!("{prefix}{}", i + 1), json!(val));
            }
        }
        _ => {
            for r in trace_faces(d, mode)?.regions {
                let corners: Vec<String> = r.corners().map(|k| d.slot_name(k)).collect();
                map.insert(r.id.clone(), json!(corners));
            }
        }
    }
    Ok(Value::Object(map))
}

fn build(args: &GroupArgs) -> Result<(Presentation, Value), Failure> {
    if is_presentation(&args.diagram) {
        let p = load_presentation(&args.diagram)?;
        return Ok((p, Value::Null));
    }
    let d = load_diagram(&args.diagram)?;
    let kind = args.kind.group_kind();
    let d = if kind == GroupKind::Wirtinger { d.with_default_orientation() } else { d };
    let mode = region_mode(&d, args.region_mode);
    if args.base.is_some() && !kind.needs_base() {
        return Err(usage("--base applies to rc0 and dehn only"));
    }
    let mut p = build_group(&d, kind, mode, args.base.as_deref())?;
    if !args.boundary.is_empty() {
        if kind != GroupKind::Arc {
            return Err(usage("--boundary applies to the ac kind only"));
        }
        let words = args.boundary.iter().map(|w| parse_boundary_word(w)).collect::<Result<Vec<_>, _>>()?;
        p = boundary_quotient(&arc_core(&d), &words)?;
    }
    let prov = provenance(&d, kind, mode)?;
    Ok((p, prov))
}

fn run(cli: Cli, out: &mut Out) -> Result<bool, Failure> {
    match cli.command {
        Command::Info { diagram } => {
            let d = load_diagram(&diagram)?;
            let mode = RegionMode::natural(&d);
            let faces = trace_faces(&d, mode)?;
            let coloring = checkerboard_color(&d, &faces).ok();
            let betas =
                coloring.as_ref().and_then(|c| checkerboard_graphs(&d, &faces, c).ok()).map(|g| (g.beta_s, g.beta_u));
            let mode_name = if mode == RegionMode::Classical { "classical" } else { "virtual" };
            let arcs = trace_arcs(&d).len();
            let text = format!(
                "crossings {}\nloops {}\narcs {arcs}\nregions {}\nregion-mode {mode_name}\ngenus {}\ncolorable {}\npieces {}\ncomponents {}{}",
                d.num_crossings(),
                d.num_loops(),
                faces.num_regions(),
                faces.total_genus(),
                coloring.is_some(),
                d.num_pieces(),
                d.num_link_components(),
                betas.map_or(String::new(), |(s, u)| format!("\nbeta-s {s}\nbeta-u {u}")),
            );
            out.emit(
                &text,
                json!({
                    "crossings": d.num_crossings(), "loops": d.num_loops(), "arcs": arcs,
                    "regions": faces.num_regions(), "region_mode": mode_name, "genus": faces.total_genus(),
                    "colorable": coloring.is_some(), "pieces": d.num_pieces(), "components": d.num_link_components(),
                    "beta_s": betas.map(|b| b.0), "beta_u": betas.map(|b| b.1),
                }),
            );
        }
        Command::Group(args) => {
            let (mut p, prov) = build(&args)?;
            if args.simplify {
                p = tietze_simplify(&p, SIMPLIFY_EFFORT);
            }
            out.emit(&p.to_string(), presentation_json(&p, prov));
        }
        Command::Abelian(args) => {
            let (p, _) = build(&args)?;
            let a = abelianize(&p);
            let (rank, divisors) = a.to_pair();
            out.emit(&a.to_string(), json!({ "group": a.to_string(), "free_rank": rank, "torsion": divisors }));
        }
        Command::Homcount { input, target, kind } => {
            let p = if is_presentation(&input) {
                load_presentation(&input)?
            } else {
                let d = load_diagram(&input)?;
                let d = if matches!(kind, Kind::Wirtinger) { d.with_default_orientation() } else { d };
                build_group(&d, kind.group_kind(), RegionMode::natural(&d), None)?
            };
            let path = Path::new(&target);
            let t = if path.is_file() {
                FiniteGroup::parse_cycles(&target, &read(path)?)?
            } else {
                FiniteGroup::named(&target)?
            };
            let n = count_homomorphisms(&p, &t);
            out.emit(&n.to_string(), json!({ "target": target, "order": t.order(), "count": n.to_string() }));
        }
        Command::Order { presentation, max_cosets } => {
            let p = load_presentation(&presentation)?;
            let bound = match max_cosets {
                Some(n) => n,
                None => match std::env::var(MAX_COSETS_VAR) {
                    Ok(v) => v
                        .trim()
                        .parse()
                        .map_err(|_| usage(format!("{MAX_COSETS_VAR} must be a positive integer, got {v:?}")))?,
                    Err(_) => DEFAULT_MAX_COSETS,
                },
            };
            match coset_enumerate(&p, &[], bound) {
                CosetOutcome::Index(n) => out.emit(&n.to_string(), json!({ "order": n })),
                CosetOutcome::Exceeded => {
                    out.emit(
                        &format!("unknown: more than {bound} cosets"),
                        json!({ "order": null, "max_cosets": bound }),
                    );
                    return Ok(false);
                }
            }
        }
        Command::Core { presentation, split, simplify } => {
            let p = load_presentation(&presentation)?;
            let mut c = core_functor(&p)?;
            if let Some(s0) = split {
                c = split_free_factor(&c, &s0)?;
            }
            if simplify {
                c = tietze_simplify(&c, SIMPLIFY_EFFORT);
            }
            out.emit(&c.to_string(), presentation_json(&c, Value::Null));
        }
        Command::Move { diagram, spec, list } => {
            let d = load_diagram(&diagram)?;
            if list {
                let moves: Vec<String> = legal_moves(&d).iter().map(|m| m.describe(&d)).collect();
                match out.format {
                    Format::Text => out.text(&moves.join("\n")),
                    Format::JsonLines => moves.iter().for_each(|m| out.json(json!({ "move": m }))),
                }
            } else {
                let spec = spec.expect("clap requires --spec without --list");
                let mv = Move::parse(&d, &spec)?;
                let e = apply_move(&d, &mv)?;
                out.emit(&e.to_string(), json!({ "move": spec, "diagram": e.to_string() }));
            }
        }
        Command::Verify { suite, corpus } => {
            if suite != "all" && !SUITES.contains(&suite.as_str()) {
                return Err(usage(format!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", "))));
            }
            let corpus = Corpus::load(&corpus)?;
            let reports = run_suite(&corpus, &suite)?;
            let mut ok = true;
            for r in &reports {
                ok &= r.passed();
                match out.format {
                    Format::Text => out.text(&r.to_string()),
                    Format::JsonLines => {
                        for v in &r.verdicts {
                            out.json(json!({ "check": r.check, "diagram": v.diagram, "status": v.status, "detail": v.detail, "data": v.data }));
                        }
                    }
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format, stdout: io::stdout().lock() };
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(code, msg)) => {
            let _ = out.stdout.flush();
            eprintln!("coregroups: {msg}");
            ExitCode::from(code)
        }
    }
}
