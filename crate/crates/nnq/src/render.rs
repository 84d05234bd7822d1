//! Text, JSON and LaTeX renderings of nested quotient tables.

use std::{fmt::Write, str::FromStr};

use nnq_core::NestedTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!(
                "unknown format {other:?} (expected text, json or latex)"
            )),
        }
    }
}

pub fn render(table: &NestedTable, format: Format) -> String {
    match format {
        Format::Text => render_text(table),
        Format::Json => render_json(table),
        Format::Latex => render_latex(table),
    }
}

/// Label of an `H`-coset with representative `rep`.
pub fn h_label(rep: &str) -> String {
    if rep == "()" {
        "H".into()
    } else {
        format!("{rep}H")
    }
}

fn nc_label(rep: &str) -> String {
    if rep == "()" {
        "nc(H)".into()
    } else {
        format!("{rep}nc(H)")
    }
}

pub fn set_string<S: AsRef<str>>(items: &[S]) -> String {
    let inner: Vec<&str> = items.iter().map(AsRef::as_ref).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn render_json(table: &NestedTable) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("table serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<NestedTable, serde_json::Error> {
    serde_json::from_str(text)
}

/// Aligned grid. Columns are separated by `|` between `H`-cosets; rows are separated by `-`
/// rules between `H`-cosets and `=` rules between `nc(H)`-cosets. The first grid row lists the
/// column elements and doubles as the row labels, since the identity comes first.
pub fn render_text(table: &NestedTable) -> String {
    let cell_width = table
        .cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(0);
    let groups: Vec<(usize, &[String])> = table
        .nc_cosets
        .iter()
        .enumerate()
        .flat_map(|(n, nc)| nc.h_cosets.iter().map(move |h| (n, h.elements.as_slice())))
        .collect();

    // inner width of each H-coset segment
    let mut widths: Vec<usize> = table
        .nc_cosets
        .iter()
        .flat_map(|nc| &nc.h_cosets)
        .map(|h| {
            let k = h.elements.len();
            (k * cell_width + k - 1).max(h_label(&h.rep).len())
        })
        .collect();
    let mut first = 0;
    for nc in &table.nc_cosets {
        let last = first + nc.h_cosets.len() - 1;
        let span: usize = widths[first..=last].iter().map(|w| w + 3).sum::<usize>() - 3;
        let need = nc_label(&nc.rep).len();
        if need > span {
            widths[last] += need - span;
        }
        first = last + 1;
    }

    let segment = |line: &mut String, width: usize, content: &str| {
        let _ = write!(line, "| {content:<width$} ");
    };
    let rule = |fill: char| {
        let mut line = String::new();
        for w in &widths {
            line.push('+');
            line.extend(std::iter::repeat_n(fill, w + 2));
        }
        line.push_str("+\n");
        line
    };
    let row_line = |cells: &[String]| {
        let mut line = String::new();
        let mut offset = 0;
        for (j, (_, elems)) in groups.iter().enumerate() {
            let parts: Vec<String> = cells[offset..offset + elems.len()]
                .iter()
                .map(|c| format!("{c:<cell_width$}"))
                .collect();
            segment(&mut line, widths[j], parts.join(" ").trim_end());
            offset += elems.len();
        }
        line.push_str("|\n");
        line
    };

    let mut out = String::new();
    let _ = writeln!(out, "group: {}", table.group_label);
    let _ = writeln!(out, "subgroup: <{}>", table.subgroup_gens.join(", "));
    let _ = writeln!(out, "nc(H): {}", set_string(&table.normal_closure));
    out.push('\n');

    let mut line = String::new();
    let mut first = 0;
    for nc in &table.nc_cosets {
        let last = first + nc.h_cosets.len() - 1;
        let span: usize = widths[first..=last].iter().map(|w| w + 3).sum::<usize>() - 3;
        segment(&mut line, span, &nc_label(&nc.rep));
        first = last + 1;
    }
    line.push_str("|\n");
    out.push_str(&line);

    let mut line = String::new();
    for (j, h) in table
        .nc_cosets
        .iter()
        .flat_map(|nc| &nc.h_cosets)
        .enumerate()
    {
        segment(&mut line, widths[j], &h_label(&h.rep));
    }
    line.push_str("|\n");
    out.push_str(&line);

    let labels: Vec<String> = table.order().map(str::to_owned).collect();
    out.push_str(&row_line(&labels));
    out.push_str(&rule('='));

    let mut row = 0;
    for (j, (nc, elems)) in groups.iter().enumerate() {
        for _ in 0..elems.len() {
            out.push_str(&row_line(&table.cells[row]));
            row += 1;
        }
        match groups.get(j + 1) {
            Some((next, _)) if next != nc => out.push_str(&rule('=')),
            Some(_) => out.push_str(&rule('-')),
            None => {}
        }
    }
    out
}

fn math(s: &str) -> String {
    format!("${s}$")
}

fn latex_nc(rep: &str) -> String {
    if rep == "()" {
        math("\\mathrm{nc}(H)")
    } else {
        math(&format!("{rep}\\mathrm{{nc}}(H)"))
    }
}

/// A `tabular` with `nc(H)`- and `H`-coset headers on both axes; needs the `multirow` package.
pub fn render_latex(table: &NestedTable) -> String {
    let n = table.size();
    let last_col = n + 3;
    let mut out = String::new();
    out.push_str("\\begin{tabular}{| *{3}{r|} ");
    for h in table.nc_cosets.iter().flat_map(|nc| &nc.h_cosets) {
        let _ = write!(out, "*{{{}}}{{c}} | ", h.elements.len());
    }
    let _ = writeln!(out, "}} \\cline{{4-{last_col}}}");

    let blank = "\\multicolumn{3}{c|}{}";
    let nc_headers: Vec<String> = table
        .nc_cosets
        .iter()
        .map(|nc| {
            let span: usize = nc.h_cosets.iter().map(|h| h.elements.len()).sum();
            format!("\\multicolumn{{{span}}}{{c|}}{{{}}}", latex_nc(&nc.rep))
        })
        .collect();
    let _ = writeln!(
        out,
        "{blank} & {} \\\\ \\cline{{4-{last_col}}}",
        nc_headers.join(" & ")
    );
    let h_headers: Vec<String> = table
        .nc_cosets
        .iter()
        .flat_map(|nc| &nc.h_cosets)
        .map(|h| {
            format!(
                "\\multicolumn{{{}}}{{c|}}{{{}}}",
                h.elements.len(),
                math(&h_label(&h.rep))
            )
        })
        .collect();
    let _ = writeln!(
        out,
        "{blank} & {} \\\\ \\cline{{4-{last_col}}}",
        h_headers.join(" & ")
    );
    let labels: Vec<String> = table.order().map(math).collect();
    let _ = writeln!(out, "{blank} & {} \\\\ \\hline", labels.join(" & "));

    let mut row = 0;
    for nc in &table.nc_cosets {
        let nc_rows: usize = nc.h_cosets.iter().map(|h| h.elements.len()).sum();
        for (j, h) in nc.h_cosets.iter().enumerate() {
            for (k, elem) in h.elements.iter().enumerate() {
                let first = if j == 0 && k == 0 {
                    format!("\\multirow{{{nc_rows}}}{{*}}{{{}}}", latex_nc(&nc.rep))
                } else {
                    String::new()
                };
                let second = if k == 0 {
                    format!(
                        "\\multirow{{{}}}{{*}}{{{}}}",
                        h.elements.len(),
                        math(&h_label(&h.rep))
                    )
                } else {
                    String::new()
                };
                let cells: Vec<String> = table.cells[row].iter().map(|c| math(c)).collect();
                let mut line = String::new();
                for part in [first, second, math(elem)] {
                    if part.is_empty() {
                        line.push_str("& ");
                    } else {
                        let _ = write!(line, "{part} & ");
                    }
                }
                let _ = write!(line, "{} \\\\", cells.join(" & "));
                if k + 1 == h.elements.len() {
                    if j + 1 == nc.h_cosets.len() {
                        line.push_str(" \\hline");
                    } else {
                        let _ = write!(line, " \\cline{{2-{last_col}}}");
                    }
                }
                out.push_str(&line);
                out.push('\n');
                row += 1;
            }
        }
    }
    out.push_str("\\end{tabular}\n");
    out
}
