//! Group and subgroup specifications as given on the command line.

use std::fmt;

use nnq_core::{catalog_group_with_cap, Error, FiniteGroup, ParseError, Permutation, Subgroup};

/// A rejected specification, with enough context to point at the offending column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub flag: &'static str,
    pub input: String,
    pub error: Error,
}

impl SpecError {
    fn new(flag: &'static str, input: &str, error: Error) -> Self {
        SpecError {
            flag,
            input: input.to_owned(),
            error,
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.error {
            Error::Parse(e) => {
                writeln!(f, "invalid {}: {e}", self.flag)?;
                writeln!(f, "  {}", self.input)?;
                write!(f, "  {:>width$}", "^", width = e.column)
            }
            other => write!(f, "invalid {} {:?}: {other}", self.flag, self.input),
        }
    }
}

impl std::error::Error for SpecError {}

const GENS_PREFIX: &str = "gens:";

/// `S4`, `Q8`, ... or `gens:<perm>;<perm>;...`.
pub fn parse_group(spec: &str, max_order: usize) -> Result<FiniteGroup, SpecError> {
    let fail = |e| SpecError::new("--group", spec, e);
    match spec.strip_prefix(GENS_PREFIX) {
        Some(list) => {
            let perms =
                parse_list(list, None).map_err(|e| fail(e.offset(GENS_PREFIX.len()).into()))?;
            let degree = perms.iter().map(Permutation::degree).max().unwrap_or(1);
            let perms: Vec<Permutation> = perms
                .iter()
                .map(|p| p.extend_degree(degree).expect("degree is the maximum"))
                .collect();
            FiniteGroup::generate_with_cap(&perms, spec, max_order).map_err(fail)
        }
        None => catalog_group_with_cap(spec, max_order).map_err(fail),
    }
}

/// Semicolon-separated generators, each an element of `group`.
pub fn parse_subgroup<'g>(spec: &str, group: &'g FiniteGroup) -> Result<Subgroup<'g>, SpecError> {
    let fail = |e| SpecError::new("--subgroup", spec, e);
    let perms = parse_list(spec, Some(group.degree())).map_err(|e| fail(e.into()))?;
    group.subgroup_generated(&perms).map_err(fail)
}

fn parse_list(list: &str, degree: Option<usize>) -> Result<Vec<Permutation>, ParseError> {
    let mut offset = 0;
    let mut out = Vec::new();
    for part in list.split(';') {
        out.push(Permutation::parse(part, degree).map_err(|e| e.offset(offset))?);
        offset += part.chars().count() + 1;
    }
    Ok(out)
}
