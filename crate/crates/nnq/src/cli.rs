//! The `nnq` command line.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nnq_core::{
    build_nested_table, generalized_quotient, psi_relation, rho_lemma_check, rho_relation,
    theta_relation, transitivity_report, verify_theorem, Block, Error, FiniteGroup, Limits,
    QuotientGroup, Side, Subgroup, SymmetricRelation,
};
use serde::Serialize;

use crate::{
    input::{parse_group, parse_subgroup, SpecError},
    render::{self, h_label, set_string, Format},
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Environment variable overriding the group-order cap.
pub const MAX_ORDER_VAR: &str = "NNQ_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "nnq",
    version,
    about = "Quotients of finite groups by arbitrary subgroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Catalog name (S<n>, A<n>, C<n>, D<n>, Q8) or gens:<perm>;<perm>;...
    #[arg(long)]
    pub group: String,
    /// Subgroup generators in cycle notation, separated by ';'
    #[arg(long)]
    pub subgroup: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// List every subgroup with its order and normality
    Subgroups(Common),
    /// List the distinct blocks aHbH
    Blocks(Common),
    /// Check reflexivity, symmetry and transitivity of psi, theta or rho
    Relations {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Check::Psi)]
        check: Check,
    },
    /// Print nc(H), its cosets and the quotient table
    Quotient(Common),
    /// Check S = nc(H) and the block-relation criterion
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Render the nested multiplication table
    Table(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Check {
    #[default]
    Psi,
    Theta,
    Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Subgroups,
    Blocks,
    Relations,
    Quotient,
    Verify,
    Table,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Subgroups => "subgroups",
            Command::Blocks => "blocks",
            Command::Relations => "relations",
            Command::Quotient => "quotient",
            Command::Verify => "verify",
            Command::Table => "table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub command: Command,
    pub group_spec: String,
    pub subgroup_spec: Option<String>,
    pub format: Format,
    pub check: Check,
    pub all_subgroups: bool,
}

impl From<Cli> for Invocation {
    fn from(cli: Cli) -> Self {
        let (command, common, check, all_subgroups) = match cli.command {
            CliCommand::Subgroups(c) => (Command::Subgroups, c, Check::Psi, false),
            CliCommand::Blocks(c) => (Command::Blocks, c, Check::Psi, false),
            CliCommand::Relations { common, check } => (Command::Relations, common, check, false),
            CliCommand::Quotient(c) => (Command::Quotient, c, Check::Psi, false),
            CliCommand::Verify {
                common,
                all_subgroups,
            } => (Command::Verify, common, Check::Psi, all_subgroups),
            CliCommand::Table(c) => (Command::Table, c, Check::Psi, false),
        };
        Invocation {
            command,
            group_spec: common.group,
            subgroup_spec: common.subgroup,
            format: common.format.into(),
            check,
            all_subgroups,
        }
    }
}

/// Everything a run produces; nothing is written until the run is complete.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

enum Failure {
    Spec(SpecError),
    Usage(String),
    Core(Error),
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Spec(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, message) = match self {
            Failure::Spec(e) => {
                let code = if e.error.is_cap_exceeded() {
                    EXIT_CAP
                } else {
                    EXIT_USAGE
                };
                (code, e.to_string())
            }
            Failure::Usage(m) => (EXIT_USAGE, m),
            Failure::Core(e) => {
                let code = if e.is_cap_exceeded() {
                    EXIT_CAP
                } else {
                    EXIT_USAGE
                };
                (code, e.to_string())
            }
        };
        Outcome::failure(code, message)
    }
}

/// Limits for a run, honouring `NNQ_MAX_ORDER` when it is set.
pub fn limits_from_env() -> Result<Limits, String> {
    let mut limits = Limits::default();
    if let Ok(value) = std::env::var(MAX_ORDER_VAR) {
        limits.max_order = value
            .trim()
            .parse()
            .ok()
            .filter(|&n: &usize| n > 0)
            .ok_or_else(|| format!("{MAX_ORDER_VAR} must be a positive integer, got {value:?}"))?;
    }
    Ok(limits)
}

pub fn run(inv: &Invocation, limits: &Limits) -> Outcome {
    match execute(inv, limits) {
        Ok(outcome) => outcome,
        Err(f) => f.into_outcome(),
    }
}

fn execute(inv: &Invocation, limits: &Limits) -> Result<Outcome, Failure> {
    let plain_formats = matches!(inv.format, Format::Text | Format::Json);
    let latex_ok = matches!(inv.command, Command::Quotient | Command::Table);
    if !plain_formats && !latex_ok {
        return Err(Failure::Usage(format!(
            "{} does not support --format latex",
            inv.command.name()
        )));
    }
    let group = parse_group(&inv.group_spec, limits.max_order)?;
    let needs_subgroup = !matches!(inv.command, Command::Subgroups)
        && !(inv.command == Command::Verify && inv.all_subgroups);
    let subgroup = match (&inv.subgroup_spec, needs_subgroup) {
        (Some(spec), true) => Some(parse_subgroup(spec, &group)?),
        (None, true) => {
            return Err(Failure::Usage(format!(
                "{} requires --subgroup",
                inv.command.name()
            )))
        }
        (_, false) => None,
    };
    let json = inv.format == Format::Json;
    let mut outcome = Outcome::default();
    outcome.stdout = match inv.command {
        Command::Subgroups => subgroups(&group, limits, json)?,
        Command::Blocks => blocks(subgroup.as_ref().unwrap(), json),
        Command::Relations => relations(subgroup.as_ref().unwrap(), inv.check, json),
        Command::Quotient => quotient(subgroup.as_ref().unwrap(), inv.format),
        Command::Table => {
            render::render(&build_nested_table(subgroup.as_ref().unwrap()), inv.format)
        }
        Command::Verify => {
            let list = match subgroup {
                Some(h) => vec![h],
                None => group.all_subgroups_with_cap(limits.max_subgroup_search_order)?,
            };
            let (text, failures) = verify(&list, json);
            if failures > 0 {
                outcome.code = EXIT_VERIFICATION;
                outcome.stderr = format!(
                    "error: verification failed for {failures} subgroup(s); this indicates a bug\n"
                );
            }
            text
        }
    };
    Ok(outcome)
}

fn names(g: &FiniteGroup, set: &[usize]) -> Vec<String> {
    set.iter()
        .map(|&i| g.element(i).to_cycle_string())
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct SubgroupJson {
    order: usize,
    generators: Vec<String>,
    normal: bool,
    elements: Vec<String>,
}

fn subgroups(group: &FiniteGroup, limits: &Limits, json: bool) -> Result<String, Failure> {
    let list = group.all_subgroups_with_cap(limits.max_subgroup_search_order)?;
    if json {
        let rows: Vec<SubgroupJson> = list
            .iter()
            .map(|h| SubgroupJson {
                order: h.order(),
                generators: h.generators().map(|p| p.to_cycle_string()).collect(),
                normal: h.is_normal(),
                elements: h.elements().map(|p| p.to_cycle_string()).collect(),
            })
            .collect();
        return Ok(to_json(&rows));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "subgroups of {} (order {}): {}",
        group.label(),
        group.order(),
        list.len()
    );
    let _ = writeln!(out, "{:<6} {:<7} generators", "order", "normal");
    for h in &list {
        let _ = writeln!(
            out,
            "{:<6} {:<7} {}",
            h.order(),
            h.is_normal(),
            h.generators_string()
        );
    }
    Ok(out)
}

/// `aHbH` written with the identity omitted, e.g. `H(1,2)H`.
fn block_label(g: &FiniteGroup, block: &Block) -> String {
    let (a, b) = block.rep_pair;
    format!(
        "{}{}",
        h_label(&g.element(a).to_cycle_string()),
        h_label(&g.element(b).to_cycle_string())
    )
}

#[derive(Serialize)]
struct BlockJson {
    label: String,
    rep_pair: [String; 2],
    members: Vec<String>,
}

fn blocks(h: &Subgroup<'_>, json: bool) -> String {
    let g = h.parent();
    let list = h.all_blocks();
    if json {
        let rows: Vec<BlockJson> = list
            .iter()
            .map(|b| BlockJson {
                label: block_label(g, b),
                rep_pair: [
                    g.element(b.rep_pair.0).to_cycle_string(),
                    g.element(b.rep_pair.1).to_cycle_string(),
                ],
                members: names(g, &b.members),
            })
            .collect();
        return to_json(&rows);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "blocks of H = <{}> in {}: {}",
        h.generators_string(),
        g.label(),
        list.len()
    );
    for (i, b) in list.iter().enumerate() {
        let _ = writeln!(
            out,
            "[{i}] {} = {}",
            block_label(g, b),
            set_string(&names(g, &b.members))
        );
    }
    out
}

#[derive(Serialize)]
struct RelationJson {
    relation: &'static str,
    domain: &'static str,
    size: usize,
    pairs: usize,
    reflexive: bool,
    symmetric: bool,
    transitive: bool,
    counterexample: Option<[String; 3]>,
}

fn relations(h: &Subgroup<'_>, check: Check, json: bool) -> String {
    let g = h.parent();
    let (name, domain, rel, labels): (_, _, SymmetricRelation, Vec<String>) = match check {
        Check::Psi => (
            "psi",
            "elements",
            psi_relation(h),
            g.elements().iter().map(|p| p.to_cycle_string()).collect(),
        ),
        Check::Theta => (
            "theta",
            "cosets",
            theta_relation(h),
            h.coset_partition(Side::Left)
                .classes
                .iter()
                .map(|c| h_label(&g.element(c[0]).to_cycle_string()))
                .collect(),
        ),
        Check::Rho => (
            "rho",
            "blocks",
            rho_relation(h),
            h.all_blocks().iter().map(|b| block_label(g, b)).collect(),
        ),
    };
    let report = transitivity_report(&rel);
    let witness = report
        .counterexample
        .map(|(x, y, z)| [labels[x].clone(), labels[y].clone(), labels[z].clone()]);
    let summary = RelationJson {
        relation: name,
        domain,
        size: rel.len(),
        pairs: rel.pairs().count(),
        reflexive: rel.is_reflexive(),
        symmetric: rel.is_symmetric(),
        transitive: report.transitive,
        counterexample: witness,
    };
    if json {
        return to_json(&summary);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} for H = <{}> in {}: {} {}, {} related pairs",
        summary.relation,
        h.generators_string(),
        g.label(),
        summary.size,
        summary.domain,
        summary.pairs
    );
    let _ = writeln!(out, "reflexive={}", summary.reflexive);
    let _ = writeln!(out, "symmetric={}", summary.symmetric);
    let _ = writeln!(out, "transitive={}", summary.transitive);
    if let Some([x, y, z]) = &summary.counterexample {
        let _ = writeln!(
            out,
            "counterexample: {x} ~ {y} and {y} ~ {z}, but not {x} ~ {z}"
        );
    }
    out
}

#[derive(Serialize)]
struct CosetJson {
    rep: String,
    elements: Vec<String>,
}

#[derive(Serialize)]
struct QuotientJson {
    group: String,
    subgroup_generators: Vec<String>,
    normal_closure: Vec<String>,
    cosets: Vec<CosetJson>,
    table: Vec<Vec<String>>,
}

fn quotient(h: &Subgroup<'_>, format: Format) -> String {
    let q = generalized_quotient(h);
    let g = h.parent();
    let reps: Vec<String> = (0..q.order())
        .map(|c| g.element(q.representative(c)).to_cycle_string())
        .collect();
    match format {
        Format::Json => to_json(&QuotientJson {
            group: g.label().to_owned(),
            subgroup_generators: h.generators().map(|p| p.to_cycle_string()).collect(),
            normal_closure: names(g, q.kernel.members()),
            cosets: q
                .classes
                .classes
                .iter()
                .zip(&reps)
                .map(|(c, rep)| CosetJson {
                    rep: rep.clone(),
                    elements: names(g, c),
                })
                .collect(),
            table: q
                .table
                .iter()
                .map(|row| row.iter().map(|&c| reps[c].clone()).collect())
                .collect(),
        }),
        Format::Text => quotient_text(h, &q, &reps),
        Format::Latex => quotient_latex(&q, &reps),
    }
}

fn quotient_text(h: &Subgroup<'_>, q: &QuotientGroup<'_>, reps: &[String]) -> String {
    let g = h.parent();
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", g.label());
    let _ = writeln!(out, "subgroup: <{}>", h.generators_string());
    let _ = writeln!(
        out,
        "nc(H) (order {}): {}",
        q.kernel.order(),
        set_string(&names(g, q.kernel.members()))
    );
    let _ = writeln!(out, "cosets of nc(H): {}", q.order());
    for (c, rep) in q.classes.classes.iter().zip(reps) {
        let _ = writeln!(out, "  {rep}: {}", set_string(&names(g, c)));
    }
    let _ = writeln!(out, "quotient table (order {}):", q.order());
    let width = reps.iter().map(String::len).max().unwrap_or(0);
    let mut line = format!("{:<width$} |", "");
    for rep in reps {
        let _ = write!(line, " {rep:<width$}");
    }
    let _ = writeln!(out, "{}", line.trim_end());
    let _ = writeln!(out, "{}", "-".repeat(line.trim_end().len()));
    for (i, row) in q.table.iter().enumerate() {
        let mut line = format!("{:<width$} |", reps[i]);
        for &c in row {
            let _ = write!(line, " {:<width$}", reps[c]);
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn quotient_latex(q: &QuotientGroup<'_>, reps: &[String]) -> String {
    let label = |r: &str| {
        if r == "()" {
            "$\\mathrm{nc}(H)$".to_owned()
        } else {
            format!("${r}\\mathrm{{nc}}(H)$")
        }
    };
    let mut out = format!("\\begin{{tabular}}{{r|{}}}\n", "c".repeat(q.order()));
    let header: Vec<String> = reps.iter().map(|r| label(r)).collect();
    let _ = writeln!(out, " & {} \\\\ \\hline", header.join(" & "));
    for (i, row) in q.table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|&c| label(&reps[c])).collect();
        let _ = writeln!(out, "{} & {} \\\\", label(&reps[i]), cells.join(" & "));
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[derive(Serialize)]
struct VerifyJson {
    subgroup_generators: Vec<String>,
    order: usize,
    s: Vec<String>,
    normal_closure: Vec<String>,
    equal: bool,
    partition_equal: bool,
    fixpoint_index: usize,
    rho_transitive: bool,
    union_blocks_meeting_h: Vec<String>,
    matches_nc: bool,
    consistent: bool,
}

fn verify(list: &[Subgroup<'_>], json: bool) -> (String, usize) {
    let mut failures = 0;
    let mut rows = Vec::with_capacity(list.len());
    for h in list {
        let g = h.parent();
        let report = verify_theorem(h);
        let rho = rho_lemma_check(h);
        if !report.holds() || !rho.consistent {
            failures += 1;
        }
        rows.push(VerifyJson {
            subgroup_generators: h.generators().map(|p| p.to_cycle_string()).collect(),
            order: h.order(),
            s: names(g, &report.s),
            normal_closure: names(g, &report.nc),
            equal: report.equal,
            partition_equal: report.partition_equal,
            fixpoint_index: report.fixpoint_index,
            rho_transitive: rho.rho_transitive,
            union_blocks_meeting_h: names(g, &rho.union_blocks_meeting_h),
            matches_nc: rho.matches_nc,
            consistent: rho.consistent,
        });
    }
    if json {
        return (to_json(&rows), failures);
    }
    let mut out = String::new();
    for r in &rows {
        let _ = writeln!(
            out,
            "H = <{}> (order {})",
            r.subgroup_generators.join(";"),
            r.order
        );
        let _ = writeln!(
            out,
            "  S     = {} (fixpoint at step {})",
            set_string(&r.s),
            r.fixpoint_index
        );
        let _ = writeln!(out, "  nc(H) = {}", set_string(&r.normal_closure));
        let _ = writeln!(
            out,
            "  equal={} partition_equal={}",
            r.equal, r.partition_equal
        );
        let _ = writeln!(
            out,
            "  rho_transitive={} matches_nc={} consistent={}",
            r.rho_transitive, r.matches_nc, r.consistent
        );
    }
    let _ = writeln!(
        out,
        "verified {} subgroup(s): {} passed, {} failed",
        rows.len(),
        rows.len() - failures,
        failures
    );
    (out, failures)
}
