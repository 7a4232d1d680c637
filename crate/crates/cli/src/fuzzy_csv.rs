//! Fuzzy contexts as CSV: a header of object names (after one corner cell),
//! then one row per attribute holding its name and one grade per object.

use crate::error::{CliError, Result};
use crate::frame_spec::FrameSpec;
use crate::grades::{decimal_grade, fraction, on_chain, parse_ratio, OffChain};
use galois_factor_core::fuzzy::FuzzyContext;
use galois_factor_core::grade::GradeChain;
use std::collections::HashSet;

struct Table {
    objects: Vec<String>,
    /// `(line, attribute, cells)`
    rows: Vec<(usize, String, Vec<String>)>,
}

fn read_table(text: &str) -> Result<Table> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            CliError::format(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.iter().all(str::is_empty) {
            continue;
        }
        records.push((line, rec.iter().map(str::to_string).collect::<Vec<_>>()));
    }
    let mut records = records.into_iter();
    let (header_line, header) = records
        .next()
        .ok_or_else(|| CliError::Input("empty CSV document".into()))?;
    let objects: Vec<String> = header.into_iter().skip(1).collect();
    if objects.is_empty() {
        return Err(CliError::format(header_line, "empty object set"));
    }
    unique(header_line, "object", &objects)?;
    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for (line, mut cells) in records {
        if cells.len() != objects.len() + 1 {
            return Err(CliError::format(
                line,
                format!(
                    "expected {} cells, found {}",
                    objects.len() + 1,
                    cells.len()
                ),
            ));
        }
        let name = cells.remove(0);
        if name.is_empty() {
            return Err(CliError::format(line, "empty attribute name"));
        }
        if !seen.insert(name.clone()) {
            return Err(CliError::format(
                line,
                format!("duplicate attribute `{name}`"),
            ));
        }
        rows.push((line, name, cells));
    }
    if rows.is_empty() {
        return Err(CliError::format(header_line, "empty attribute set"));
    }
    Ok(Table { objects, rows })
}

fn unique(line: usize, what: &str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if n.is_empty() {
            return Err(CliError::format(line, format!("empty {what} name")));
        }
        if !seen.insert(n) {
            return Err(CliError::format(line, format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}

/// Parses `text` on the frame `spec` describes; a bare family name is fitted
/// to the smallest chain holding every cell.
pub fn parse_fuzzy_csv(text: &str, spec: &FrameSpec) -> Result<FuzzyContext> {
    let table = read_table(text)?;
    let mut denominators = Vec::new();
    for (line, attr, cells) in &table.rows {
        for (b, cell) in cells.iter().enumerate() {
            let (_, q) = parse_ratio(cell).ok_or_else(|| {
                CliError::format(
                    *line,
                    format!(
                        "cell ({attr}, {}): `{cell}` is not a value in [0, 1]",
                        table.objects[b]
                    ),
                )
            })?;
            denominators.push(q);
        }
    }
    let spec = spec.fitted(denominators)?;
    let frame = spec.build()?;
    let p = frame.p();
    let mut relation = Vec::with_capacity(table.rows.len());
    for (line, attr, cells) in &table.rows {
        let mut row = Vec::with_capacity(cells.len());
        for (b, cell) in cells.iter().enumerate() {
            row.push(cell_on_chain(p, cell).map_err(|why| {
                CliError::format(*line, format!("cell ({attr}, {}): {why}", table.objects[b]))
            })?);
        }
        relation.push(row);
    }
    let attributes = table.rows.into_iter().map(|(_, a, _)| a).collect();
    Ok(FuzzyContext::new(
        attributes,
        table.objects,
        frame,
        &relation,
    )?)
}

fn cell_on_chain(chain: GradeChain, cell: &str) -> std::result::Result<u32, String> {
    match on_chain(chain, cell) {
        Ok(g) => Ok(g.numerator()),
        Err(OffChain::NotANumber) => Err(format!("`{cell}` is not a value in [0, 1]")),
        Err(OffChain::Between(lo, hi)) => Err(format!(
            "{cell} is not on the chain of {} grades (step 1/{}); nearest grid points are {} and {}",
            chain.len(),
            chain.m(),
            decimal_grade(lo),
            decimal_grade(hi)
        )),
    }
}

/// Cells are written as exact `i/m` fractions.
pub fn emit_fuzzy_csv(ctx: &FuzzyContext) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = std::iter::once("")
        .chain(ctx.objects().iter().map(String::as_str))
        .collect();
    writer.write_record(&header).expect("in-memory write");
    for (a, name) in ctx.attributes().iter().enumerate() {
        let mut rec = vec![name.clone()];
        rec.extend((0..ctx.object_count()).map(|b| fraction(ctx.relation(a, b))));
        writer.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
