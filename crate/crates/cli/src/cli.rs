//! Argument parsing and command dispatch.

use crate::cxt::{emit_cxt, parse_cxt};
use crate::document::ContextDocument;
use crate::error::{CliError, Result, EXIT_INVALID};
use crate::frame_spec::FrameSpec;
use crate::fuzzy_csv::parse_fuzzy_csv;
use crate::grades::fraction;
use crate::render;
use crate::report::{
    grades, names_of_attributes, names_of_objects, AttributeEntry, Body, BooleanCheckEntry,
    BoundsEntry, CheckBody, CnBody, FactorBody, FnBody, Fp3Entry, Fp4Entry, FuzzyCheckEntry, Input,
    IntervalEntry, LatticeBody, OracleSummary, RStarEntry, ReconstructBody, Report,
};
use clap::{Parser, Subcommand, ValueEnum};
use galois_factor_core::boolean::{concepts, BooleanContext};
use galois_factor_core::factor::{
    block_bounds, cn_enumerate, factorize, rstar, BlockMask, CnLattice,
};
use galois_factor_core::fuzzy::{
    check_fp1, check_fp2, check_fp3, check_fp4, fn_enumerate, fuzzy_concepts, interval_from_pair,
    is_top_normalized, Axis, FuzzyContext, DEFAULT_BUDGET,
};
use galois_factor_core::oracle::{
    cross_check_cn, cross_check_concepts, cross_check_fn, cross_check_fuzzy_concepts, OracleReport,
};
use galois_factor_core::Error as CoreError;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "galois-factor",
    version,
    about = "Concept lattices, necessity-operator closure systems and block factorizations of formal contexts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,

    /// Cross-check every enumeration against the brute-force reference.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Maximum number of grid candidates a fuzzy enumeration may visit.
    #[arg(long, global = true, env = "GALOIS_FACTOR_BUDGET")]
    pub budget: Option<u128>,

    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Frame for fuzzy inputs: godel:m, lukasiewicz:m, dprod:m1,m2,m3, or a bare family name.
    #[arg(long, global = true, value_name = "FRAME")]
    pub frame: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Concept lattice (Boolean or multi-adjoint).
    Lattice { file: PathBuf },
    /// Closure system of the necessity operators and its atoms.
    Cn { file: PathBuf },
    /// Independent blocks, reconstruction check and R*.
    Factor { file: PathBuf },
    /// Graded necessity pairs of a fuzzy context.
    Fn { file: PathBuf },
    /// Interval bounds (Boolean) or the fp1..fp5 properties (fuzzy) of selected pairs.
    Check {
        file: PathBuf,
        /// Comma-separated subset of fp1,fp2,fp3,fp4,fp5 (fuzzy inputs only).
        #[arg(long, value_delimiter = ',', default_value = "fp1,fp2,fp3,fp4,fp5")]
        props: Vec<String>,
        /// `all`, or indices into the pair listing of `cn` / `fn`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        pairs: Vec<String>,
    },
    /// Rebuild the input from its blocks and compare.
    Reconstruct { file: PathBuf },
}

impl Command {
    fn file(&self) -> &Path {
        match self {
            Command::Lattice { file }
            | Command::Cn { file }
            | Command::Factor { file }
            | Command::Fn { file }
            | Command::Check { file, .. }
            | Command::Reconstruct { file } => file,
        }
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((report, rendered)) => {
            let code = if report.failures.is_empty() {
                0
            } else {
                EXIT_INVALID
            };
            let stdout = match &cli.out {
                None => rendered,
                Some(path) => match std::fs::write(path, rendered) {
                    Ok(()) => String::new(),
                    Err(source) => {
                        let e = CliError::Io {
                            path: path.clone(),
                            source,
                        };
                        return failure(&e);
                    }
                },
            };
            let stderr = report
                .failures
                .iter()
                .map(|f| format!("galois-factor: {f}\n"))
                .collect();
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("galois-factor: {e}\n"),
    }
}

fn execute(cli: &Cli) -> Result<(Report, String)> {
    let frame = cli
        .frame
        .as_deref()
        .map(str::parse::<FrameSpec>)
        .transpose()?;
    let doc = load(cli.command.file(), frame.as_ref())?;
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let report = match &cli.command {
        Command::Lattice { .. } => lattice(&doc, cli.oracle, budget)?,
        Command::Cn { .. } => cn(boolean(&doc, "cn")?, cli.oracle)?,
        Command::Factor { .. } => factor(boolean(&doc, "factor")?, cli.oracle)?,
        Command::Fn { .. } => fn_pairs(fuzzy(&doc, "fn")?, cli.oracle, budget)?,
        Command::Check { props, pairs, .. } => {
            let selection = Selection::parse(pairs)?;
            match &doc {
                ContextDocument::Boolean(ctx) => {
                    if props_given(props) {
                        return Err(CliError::Usage(
                            "--props applies to fuzzy inputs; Boolean pairs are checked for their interval bounds".into(),
                        ));
                    }
                    check_boolean(ctx, &selection, cli.oracle)?
                }
                ContextDocument::Fuzzy(ctx) => {
                    check_fuzzy(ctx, &Props::parse(props)?, &selection, cli.oracle, budget)?
                }
            }
        }
        Command::Reconstruct { .. } => reconstruct(boolean(&doc, "reconstruct")?, cli.oracle)?,
    };
    let rendered = match cli.emit {
        Emit::Text => render::text(&report),
        Emit::Json => report.to_json(),
        Emit::Dot => render::dot(&report)?,
    };
    Ok((report, rendered))
}

fn props_given(props: &[String]) -> bool {
    props != ["fp1", "fp2", "fp3", "fp4", "fp5"]
}

/// Reads `.cxt`, fuzzy `.csv` or a JSON document, by extension and then by content.
pub fn load(path: &Path, frame: Option<&FrameSpec>) -> Result<ContextDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let head = text.trim_start_matches('\u{feff}').trim_start();
    let doc = match ext.as_deref() {
        Some("cxt") => ContextDocument::Boolean(parse_cxt(&text)?),
        Some("json") => ContextDocument::from_json(&text)?,
        Some("csv") => ContextDocument::Fuzzy(parse_csv(&text, frame)?),
        _ if head.starts_with('{') => ContextDocument::from_json(&text)?,
        _ if head.lines().next().map(str::trim) == Some("B") => {
            ContextDocument::Boolean(parse_cxt(&text)?)
        }
        _ => ContextDocument::Fuzzy(parse_csv(&text, frame)?),
    };
    if let (ContextDocument::Fuzzy(ctx), Some(spec)) = (&doc, frame) {
        if ext.as_deref() != Some("csv") && spec.granularity.is_some() {
            let own = ctx.frame().descriptor();
            let asked = spec.build()?.descriptor();
            if own != asked {
                return Err(CliError::Usage(format!(
                    "--frame {asked} conflicts with the document's frame {own}"
                )));
            }
        }
    }
    if let (ContextDocument::Boolean(_), Some(_)) = (&doc, frame) {
        return Err(CliError::Usage(
            "--frame applies to fuzzy inputs only".into(),
        ));
    }
    Ok(doc)
}

fn parse_csv(text: &str, frame: Option<&FrameSpec>) -> Result<FuzzyContext> {
    let spec = frame.ok_or_else(|| {
        CliError::Usage("fuzzy CSV input needs --frame (for example --frame godel:4)".into())
    })?;
    parse_fuzzy_csv(text, spec)
}

fn boolean<'a>(doc: &'a ContextDocument, command: &str) -> Result<&'a BooleanContext> {
    match doc {
        ContextDocument::Boolean(c) => Ok(c),
        ContextDocument::Fuzzy(_) => Err(CliError::Usage(format!(
            "`{command}` needs a Boolean context"
        ))),
    }
}

fn fuzzy<'a>(doc: &'a ContextDocument, command: &str) -> Result<&'a FuzzyContext> {
    match doc {
        ContextDocument::Fuzzy(c) => Ok(c),
        ContextDocument::Boolean(_) => Err(CliError::Usage(format!(
            "`{command}` needs a fuzzy context"
        ))),
    }
}

fn attach(report: Report, oracle: Option<OracleReport>) -> Report {
    match oracle {
        Some(o) => report.with_oracle(OracleSummary::from(o)),
        None => report,
    }
}

pub fn lattice(doc: &ContextDocument, oracle: bool, budget: u128) -> Result<Report> {
    let input = Input::of(doc);
    Ok(match doc {
        ContextDocument::Boolean(ctx) => {
            let l = concepts(ctx);
            let check = oracle.then(|| cross_check_concepts(ctx)).transpose()?;
            attach(
                Report::new(
                    "lattice",
                    input,
                    Body::Lattice(LatticeBody::boolean(ctx, &l)),
                ),
                check,
            )
        }
        ContextDocument::Fuzzy(ctx) => {
            let l = fuzzy_concepts(ctx, budget)?;
            let check = oracle
                .then(|| cross_check_fuzzy_concepts(ctx, budget))
                .transpose()?;
            attach(
                Report::new("lattice", input, Body::Lattice(LatticeBody::fuzzy(&l))),
                check,
            )
        }
    })
}

fn enumerate_cn(ctx: &BooleanContext) -> Result<CnLattice> {
    cn_enumerate(ctx).map_err(|e| match e {
        CoreError::NotNormalized(why) => CliError::Input(format!(
            "C_N is defined for normalized contexts only ({why}); `factor` normalizes first"
        )),
        e => e.into(),
    })
}

pub fn cn(ctx: &BooleanContext, oracle: bool) -> Result<Report> {
    let lattice = enumerate_cn(ctx)?;
    let check = oracle.then(|| cross_check_cn(ctx)).transpose()?;
    Ok(attach(
        Report::new(
            "cn",
            Input::of(&ContextDocument::Boolean(ctx.clone())),
            Body::Cn(CnBody::new(ctx, &lattice)),
        ),
        check,
    ))
}

pub fn factor(ctx: &BooleanContext, oracle: bool) -> Result<Report> {
    let f = factorize(ctx);
    let core = f.core();
    let single = f.blocks().len() == 1;
    let mut bounds = Vec::with_capacity(f.blocks().len());
    let mut failures = Vec::new();
    for b in f.blocks() {
        if single {
            bounds.push(None);
            continue;
        }
        let pair = galois_factor_core::factor::NecessityPair::new(
            core,
            b.objects().clone(),
            b.attributes().clone(),
        )?;
        let bb = block_bounds(core, &pair)?;
        if !bb.all_hold() {
            failures.push(format!(
                "interval bounds of block {{{}}} fail a check",
                names_of_objects(core, b.objects()).join(",")
            ));
        }
        bounds.push(Some(bb));
    }

    let rebuilt = f.reconstruct()?;
    let exact = f.is_exact() && &rebuilt == ctx;
    if !exact {
        failures.push("blocks do not reconstruct the input".into());
    }

    let rstar_entry = if f.normalization().collapsed() {
        None
    } else {
        let atoms = enumerate_cn(core)?;
        let (mask, intersection_checked) = match rstar(core) {
            Ok(m) => (m, true),
            Err(CoreError::TooManyAtoms { .. }) => {
                (BlockMask::from_atoms(core, atoms.atoms()), false)
            }
            Err(e) => return Err(e.into()),
        };
        let covers = mask.covers_relation(core);
        if !covers {
            failures.push("R* does not contain the relation".into());
        }
        Some(RStarEntry {
            cells: mask.cell_count(),
            relation_cells: core.incidence_count(),
            covers_relation: covers,
            intersection_checked,
            rows: mask
                .rows()
                .iter()
                .map(|row| {
                    (0..core.object_count())
                        .map(|b| if row.contains(b) { '1' } else { '0' })
                        .collect()
                })
                .collect(),
        })
    };

    let check = if oracle && !f.normalization().collapsed() {
        Some(cross_check_cn(core)?)
    } else {
        None
    };
    let mut report = attach(
        Report::new(
            "factor",
            Input::of(&ContextDocument::Boolean(ctx.clone())),
            Body::Factor(FactorBody::new(&f, bounds, rstar_entry, exact)),
        ),
        check,
    );
    report.failures.extend(failures);
    Ok(report)
}

pub fn fn_pairs(ctx: &FuzzyContext, oracle: bool, budget: u128) -> Result<Report> {
    let l = fn_enumerate(ctx, budget)?;
    let check = oracle.then(|| cross_check_fn(ctx, budget)).transpose()?;
    Ok(attach(
        Report::new(
            "fn",
            Input::of(&ContextDocument::Fuzzy(ctx.clone())),
            Body::Fn(FnBody::new(&l)),
        ),
        check,
    ))
}

/// `--pairs`: everything, or explicit indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Indices(Vec<usize>),
}

impl Selection {
    pub fn parse(items: &[String]) -> Result<Self> {
        if items.iter().any(|s| s.trim() == "all") {
            return Ok(Selection::All);
        }
        items
            .iter()
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--pairs: `{s}` is not an index")))
            })
            .collect::<Result<Vec<usize>>>()
            .map(Selection::Indices)
    }

    fn resolve(&self, len: usize) -> Result<Vec<usize>> {
        match self {
            Selection::All => Ok((0..len).collect()),
            Selection::Indices(v) => {
                if let Some(&bad) = v.iter().find(|&&i| i >= len) {
                    return Err(CliError::Usage(format!(
                        "--pairs: index {bad} out of range (there are {len} pairs)"
                    )));
                }
                Ok(v.clone())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Props {
    pub fp1: bool,
    pub fp2: bool,
    pub fp3: bool,
    pub fp4: bool,
    pub fp5: bool,
}

impl Props {
    pub fn parse(items: &[String]) -> Result<Self> {
        let mut p = Props::default();
        for item in items {
            match item.trim() {
                "fp1" => p.fp1 = true,
                "fp2" => p.fp2 = true,
                "fp3" => p.fp3 = true,
                "fp4" => p.fp4 = true,
                "fp5" => p.fp5 = true,
                other => {
                    return Err(CliError::Usage(format!(
                        "--props: unknown property `{other}` (expected fp1..fp5)"
                    )))
                }
            }
        }
        Ok(p)
    }

    fn names(&self) -> Vec<String> {
        [self.fp1, self.fp2, self.fp3, self.fp4, self.fp5]
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(i, _)| format!("fp{}", i + 1))
            .collect()
    }
}

pub fn check_boolean(ctx: &BooleanContext, selection: &Selection, oracle: bool) -> Result<Report> {
    let cn = enumerate_cn(ctx)?;
    let el = cn.elements().ok_or_else(|| {
        CliError::Input(format!(
            "C_N has {} atoms, too many to index its elements",
            cn.atoms().len()
        ))
    })?;
    let mut failures = Vec::new();
    let mut pairs = Vec::new();
    for i in selection.resolve(el.pairs().len())? {
        let p = &el.pairs()[i];
        let bounds = if p.is_trivial() {
            None
        } else {
            let b = block_bounds(ctx, p)?;
            if !b.all_hold() {
                failures.push(format!("pair {i}: interval bounds fail a check"));
            }
            Some(BoundsEntry::new(ctx, &b))
        };
        pairs.push(BooleanCheckEntry {
            index: i,
            objects: names_of_objects(ctx, p.objects()),
            attributes: names_of_attributes(ctx, p.attributes()),
            bounds,
        });
    }
    let check = oracle.then(|| cross_check_cn(ctx)).transpose()?;
    let mut report = attach(
        Report::new(
            "check",
            Input::of(&ContextDocument::Boolean(ctx.clone())),
            Body::Check(CheckBody::Boolean { pairs }),
        ),
        check,
    );
    report.failures.extend(failures);
    Ok(report)
}

pub fn check_fuzzy(
    ctx: &FuzzyContext,
    props: &Props,
    selection: &Selection,
    oracle: bool,
    budget: u128,
) -> Result<Report> {
    let l = fn_enumerate(ctx, budget)?;
    let concepts = if props.fp5 {
        Some(fuzzy_concepts(ctx, budget)?)
    } else {
        None
    };
    let mut failures = Vec::new();
    let mut entries = Vec::new();
    for i in selection.resolve(l.len())? {
        let p = &l.pairs()[i];
        let mut e = FuzzyCheckEntry {
            index: i,
            g: grades(p.g()),
            f: grades(p.f()),
            ..Default::default()
        };
        if props.fp1 {
            let v = check_fp1(ctx, p)?;
            if !v {
                failures.push(format!("pair {i}: fp1 fails"));
            }
            e.fp1 = Some(v);
        }
        if props.fp2 {
            let v = check_fp2(ctx, p)?;
            if !v {
                failures.push(format!("pair {i}: fp2 fails"));
            }
            e.fp2 = Some(v);
        }
        if props.fp3 {
            let r = check_fp3(ctx, p)?;
            if r.violated() {
                failures.push(format!("pair {i}: fp3 fails although its hypotheses hold"));
            }
            e.fp3 = Some(Fp3Entry {
                holds: r.holds,
                top_normalized: r.top_normalized,
                godel: r.godel,
                violated: r.violated(),
            });
        }
        if props.fp4 {
            let r = check_fp4(ctx, p)?;
            if r.violated() {
                failures.push(format!("pair {i}: fp4 fails although its hypotheses hold"));
            }
            let l1 = ctx.frame().l1();
            let grade = |n: u32| fraction(l1.grade(n).expect("numerator on L1"));
            e.fp4 = Some(Fp4Entry {
                attributes: r
                    .per_attribute
                    .iter()
                    .enumerate()
                    .map(|(a, h)| AttributeEntry {
                        attribute: ctx.attributes()[a].clone(),
                        fp4: h.fp4,
                        fp4_prime: h.fp4_prime,
                        up: grade(h.up),
                        up_pi: grade(h.up_pi),
                    })
                    .collect(),
                hypothesis_holds: r.hypothesis_holds(),
                inequality_holds: r.inequality_holds(),
                uncovered: r
                    .uncovered()
                    .into_iter()
                    .map(|a| ctx.attributes()[a].clone())
                    .collect(),
                top_normalized: r.top_normalized,
                godel: r.godel,
                violated: r.violated(),
            });
        }
        if let Some(lattice) = &concepts {
            let iv = interval_from_pair(ctx, p)?;
            // ordering is only promised where fp4 or fp4' covers every attribute
            let r = check_fp4(ctx, p)?;
            let promised = r.top_normalized && r.godel && r.hypothesis_holds();
            if promised && !iv.ordered {
                failures.push(format!(
                    "pair {i}: interval bounds are not ordered although the fp4 hypotheses hold"
                ));
            }
            e.fp5 = Some(IntervalEntry::new(
                lattice, &iv.lower, &iv.upper, iv.ordered,
            ));
        }
        entries.push(e);
    }
    let mut check = None;
    if oracle {
        let mut r = cross_check_fn(ctx, budget)?;
        if props.fp5 {
            r.absorb(cross_check_fuzzy_concepts(ctx, budget)?);
        }
        check = Some(r);
    }
    let mut report = attach(
        Report::new(
            "check",
            Input::of(&ContextDocument::Fuzzy(ctx.clone())),
            Body::Check(CheckBody::Fuzzy {
                props: props.names(),
                top_normalized: is_top_normalized(ctx, Axis::Rows),
                pairs: entries,
            }),
        ),
        check,
    );
    report.failures.extend(failures);
    Ok(report)
}

pub fn reconstruct(ctx: &BooleanContext, oracle: bool) -> Result<Report> {
    let f = factorize(ctx);
    let rebuilt = f.reconstruct()?;
    let exact = &rebuilt == ctx;
    let check = if oracle && !f.normalization().collapsed() {
        Some(cross_check_cn(f.core())?)
    } else {
        None
    };
    let doc = ContextDocument::Boolean(rebuilt.clone());
    let mut report = attach(
        Report::new(
            "reconstruct",
            Input::of(&ContextDocument::Boolean(ctx.clone())),
            Body::Reconstruct(ReconstructBody {
                blocks: f.blocks().len(),
                exact,
                context: doc.to_value()?,
                cxt: emit_cxt(&rebuilt),
            }),
        ),
        check,
    );
    if !exact {
        report
            .failures
            .push("blocks do not reconstruct the input".into());
    }
    Ok(report)
}
