//! Table emission in Markdown, CSV and JSON.
//!
//! Every table is built as a [`Table`] of typed cells first and rendered
//! afterwards, so the three formats always carry the same content. Output is
//! a pure function of the table kind and the options.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::array::{ArrayCode, Shape};
use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::stratify::rank_distribution;
use crate::symmetry::{classify, orbit_split, Group};

use super::bounds::lower_bounds;
use super::catalog::Catalog;
use super::partition::partition_by_ones;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Malformed(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmitOptions {
    pub format: Format,
    /// Print 2×2×2 arrays as flattenings instead of 2×4 blocks.
    pub flat: bool,
}

impl EmitOptions {
    pub fn new(format: Format) -> Self {
        EmitOptions {
            format,
            flat: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// Rank distribution for one shape and semiring.
    Strata(Shape, Semiring),
    /// Large orbits of 2×2×2 arrays.
    Table1,
    /// Rank × ones classes of 2×2×2 Boolean arrays.
    Table2,
    /// Large orbits of 2×2×2×2 arrays.
    Table3,
    /// Rank × ones classes of 2×2×2×2 Boolean arrays.
    Table4,
    /// Rank × ones classes of 2×2×2×2 integer arrays.
    Table5,
    /// Large-to-small orbit splitting.
    Split(Shape),
    LowerBounds,
    /// Small orbits of 2×2×2 arrays with the large orbit containing each.
    CubeSmallOrbits,
    Orbits(Shape, Group),
    Partition(Shape, Semiring),
}

impl TableKind {
    /// Everything the `tables` command prints, in order.
    pub fn standard() -> Vec<TableKind> {
        let mut kinds = Vec::new();
        for shape in [Shape::CUBE, Shape::TESSERACT] {
            for s in Semiring::ALL {
                kinds.push(TableKind::Strata(shape, s));
            }
        }
        kinds.extend([
            TableKind::Table1,
            TableKind::CubeSmallOrbits,
            TableKind::Table2,
            TableKind::Table3,
            TableKind::Split(Shape::TESSERACT),
            TableKind::Table4,
            TableKind::Table5,
            TableKind::LowerBounds,
        ]);
        kinds
    }

    pub fn name(&self) -> String {
        match self {
            TableKind::Strata(shape, s) => format!("strata-n{}-{}", shape.n(), s.tag()),
            TableKind::Table1 => "table1".into(),
            TableKind::Table2 => "table2".into(),
            TableKind::Table3 => "table3".into(),
            TableKind::Table4 => "table4".into(),
            TableKind::Table5 => "table5".into(),
            TableKind::Split(shape) if *shape == Shape::TESSERACT => "split".into(),
            TableKind::Split(shape) => format!("split-n{}", shape.n()),
            TableKind::LowerBounds => "lower-bounds".into(),
            TableKind::CubeSmallOrbits => "small-orbits-n3".into(),
            TableKind::Orbits(shape, g) => format!("orbits-n{}-{}", shape.n(), g.name()),
            TableKind::Partition(shape, s) => format!("partition-n{}-{}", shape.n(), s.tag()),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn parse_shape(s: &str) -> Option<Shape> {
    match s {
        "n3" => Some(Shape::CUBE),
        "n4" => Some(Shape::TESSERACT),
        _ => None,
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownTable(s.to_string());
        let parts: Vec<&str> = s.split('-').collect();
        let kind = match parts.as_slice() {
            ["table1"] => TableKind::Table1,
            ["table2"] => TableKind::Table2,
            ["table3"] => TableKind::Table3,
            ["table4"] => TableKind::Table4,
            ["table5"] => TableKind::Table5,
            ["split"] => TableKind::Split(Shape::TESSERACT),
            ["split", n] => TableKind::Split(parse_shape(n).ok_or_else(unknown)?),
            ["lower", "bounds"] => TableKind::LowerBounds,
            ["small", "orbits", "n3"] => TableKind::CubeSmallOrbits,
            ["strata", n, s] => TableKind::Strata(
                parse_shape(n).ok_or_else(unknown)?,
                s.parse().map_err(|_| unknown())?,
            ),
            ["partition", n, s] => TableKind::Partition(
                parse_shape(n).ok_or_else(unknown)?,
                s.parse().map_err(|_| unknown())?,
            ),
            ["orbits", n, g] => TableKind::Orbits(
                parse_shape(n).ok_or_else(unknown)?,
                g.parse().map_err(|_| unknown())?,
            ),
            _ => return Err(unknown()),
        };
        Ok(kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(u64::from(v))
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(kind: TableKind, title: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            name: kind.name(),
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.to_markdown(),
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
        }
    }

    fn to_markdown(&self) -> String {
        let escape = |s: String| s.replace('|', "\\|");
        let mut out = format!("### {}\n\n", self.title);
        out += &format!("| {} |\n", self.columns.join(" | "));
        out += &format!("|{}\n", "---|".repeat(self.columns.len()));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| escape(c.to_string())).collect();
            out += &format!("| {} |\n", cells.join(" | "));
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_string))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// Renders several tables as one document.
pub fn render_all(tables: &[Table], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(tables).expect("serializable") + "\n",
        _ => tables
            .iter()
            .map(|t| t.render(format))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn array_cell(a: ArrayCode, flat: bool) -> Cell {
    match a.mat() {
        Ok(rows) if !flat => Cell::Text(
            rows.iter()
                .map(|r| format!("{} {} | {} {}", r[0], r[1], r[2], r[3]))
                .collect::<Vec<_>>()
                .join(" / "),
        ),
        _ => Cell::Text(a.to_string()),
    }
}

fn shape_label(shape: Shape) -> String {
    shape.to_string().replace('x', "×")
}

pub fn build_table(kind: TableKind, catalog: &Catalog, flat: bool) -> Result<Table> {
    let table = match kind {
        TableKind::Strata(shape, s) => {
            let t = catalog.table(shape, s)?;
            let mut table = Table::new(
                kind,
                format!("Ranks of {} arrays, {s} sums", shape_label(shape)),
                &["rank", "count", "percent", "exact"],
            );
            for share in rank_distribution(&t) {
                let exact = share.exact_fraction();
                table.rows.push(vec![
                    share.rank.into(),
                    share.count.into(),
                    share.percent.into(),
                    exact.into(),
                ]);
            }
            table
        }
        TableKind::Table1 | TableKind::Table3 | TableKind::Orbits(..) => {
            let (shape, group) = match kind {
                TableKind::Table1 => (Shape::CUBE, Group::Large),
                TableKind::Table3 => (Shape::TESSERACT, Group::Large),
                TableKind::Orbits(shape, g) => (shape, g),
                _ => unreachable!(),
            };
            let t = catalog.table(shape, Semiring::Gf2)?;
            let mut table = Table::new(
                kind,
                format!(
                    "{} orbits of {} arrays over GF(2)",
                    capitalize(group.name()),
                    shape_label(shape)
                ),
                &["#", "rank", "orbit size", "ones", "canonical form"],
            );
            for (i, r) in classify(&t, group)?.iter().enumerate() {
                table.rows.push(vec![
                    (i + 1).into(),
                    r.rank.into(),
                    r.size.into(),
                    r.ones.into(),
                    array_cell(r.canonical, flat),
                ]);
            }
            table
        }
        TableKind::Table2 | TableKind::Table4 | TableKind::Table5 | TableKind::Partition(..) => {
            let (shape, s) = match kind {
                TableKind::Table2 => (Shape::CUBE, Semiring::Boolean),
                TableKind::Table4 => (Shape::TESSERACT, Semiring::Boolean),
                TableKind::Table5 => (Shape::TESSERACT, Semiring::NonNegInt),
                TableKind::Partition(shape, s) => (shape, s),
                _ => unreachable!(),
            };
            let t = catalog.table(shape, s)?;
            let mut table = Table::new(
                kind,
                format!(
                    "Ranks and minimal representatives of {} arrays, {s} sums",
                    shape_label(shape)
                ),
                &["#", "rank", "ones", "count", "representative"],
            );
            for (i, r) in partition_by_ones(&t).iter().enumerate() {
                table.rows.push(vec![
                    (i + 1).into(),
                    r.rank.into(),
                    r.ones.into(),
                    r.count.into(),
                    array_cell(r.representative, flat),
                ]);
            }
            table
        }
        TableKind::Split(shape) => {
            let t = catalog.table(shape, Semiring::Gf2)?;
            let mut table = Table::new(
                kind,
                format!(
                    "Large orbits of {} arrays split into small orbits",
                    shape_label(shape)
                ),
                &["large orbit", "rank", "size", "small orbits", "split"],
            );
            for e in orbit_split(&t)? {
                table.rows.push(vec![
                    e.large_index.into(),
                    e.rank.into(),
                    e.large_size.into(),
                    e.small_canonicals.len().into(),
                    e.to_string().into(),
                ]);
            }
            table
        }
        TableKind::CubeSmallOrbits => {
            let t = catalog.table(Shape::CUBE, Semiring::Gf2)?;
            let split = orbit_split(&t)?;
            let small = classify(&t, Group::Small)?;
            let mut table = Table::new(
                kind,
                "Small orbits of 2×2×2 arrays over GF(2)",
                &["large orbit", "rank", "small orbit size", "canonical form"],
            );
            for r in &small {
                let large = split
                    .iter()
                    .find(|e| e.small_canonicals.contains(&r.canonical))
                    .expect("every small orbit lies in a large one");
                table.rows.push(vec![
                    large.large_index.into(),
                    r.rank.into(),
                    r.size.into(),
                    array_cell(r.canonical, flat),
                ]);
            }
            table
        }
        TableKind::LowerBounds => {
            let mut table = Table::new(
                kind,
                "Lower bounds for the number of orbits",
                &["n", "small group", "large group"],
            );
            for n in 3..=6u8 {
                let (s, l) = lower_bounds(n)?;
                let cell = |v: num_bigint::BigUint| match u64::try_from(&v) {
                    Ok(x) => Cell::Int(x),
                    Err(_) => Cell::Text(v.to_string()),
                };
                table.rows.push(vec![u64::from(n).into(), cell(s), cell(l)]);
            }
            table
        }
    };
    Ok(table)
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    c.next()
        .map(|f| f.to_uppercase().chain(c).collect())
        .unwrap_or_default()
}

/// One table, rendered.
pub fn emit_table(kind: TableKind, options: EmitOptions, catalog: &Catalog) -> Result<String> {
    Ok(build_table(kind, catalog, options.flat)?.render(options.format))
}

/// Several tables, rendered as one document.
pub fn emit_tables(kinds: &[TableKind], options: EmitOptions, catalog: &Catalog) -> Result<String> {
    let tables = kinds
        .iter()
        .map(|&k| build_table(k, catalog, options.flat))
        .collect::<Result<Vec<_>>>()?;
    Ok(render_all(&tables, options.format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        let mut kinds = TableKind::standard();
        kinds.extend([
            TableKind::Split(Shape::CUBE),
            TableKind::Orbits(Shape::TESSERACT, Group::Small),
            TableKind::Partition(Shape::CUBE, Semiring::Gf2),
        ]);
        for k in kinds {
            assert_eq!(k.name().parse::<TableKind>().unwrap(), k);
        }
        assert!(matches!(
            "table6".parse::<TableKind>(),
            Err(Error::UnknownTable(_))
        ));
        assert!("strata-n5-gf2".parse::<TableKind>().is_err());
    }

    #[test]
    fn strata_csv() {
        let catalog = Catalog::new();
        let kind = TableKind::Strata(Shape::TESSERACT, Semiring::Gf2);
        let csv = emit_table(kind, EmitOptions::new(Format::Csv), &catalog).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "rank,count,percent,exact");
        let counts: Vec<&str> = lines[1..]
            .iter()
            .map(|l| l.split(',').nth(1).unwrap())
            .collect();
        assert_eq!(counts, ["1", "81", "2268", "21744", "37530", "3888", "24"]);
        assert_eq!(lines[1], "0,1,0.002,1/65536");
    }

    #[test]
    fn lower_bounds_markdown() {
        let catalog = Catalog::new();
        let md = emit_table(
            TableKind::LowerBounds,
            EmitOptions::new(Format::Markdown),
            &catalog,
        )
        .unwrap();
        let rows: Vec<&str> = md
            .lines()
            .filter(|l| l.starts_with("| ") && !l.starts_with("| n"))
            .collect();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[3], "| 6 | 395377745064077 | 549135757034 |");
    }

    #[test]
    fn table1_markdown() {
        let catalog = Catalog::new();
        let md = emit_table(
            TableKind::Table1,
            EmitOptions::new(Format::Markdown),
            &catalog,
        )
        .unwrap();
        let sizes: Vec<&str> = md
            .lines()
            .skip(4)
            .map(|l| l.split(" | ").nth(2).unwrap())
            .collect();
        assert_eq!(sizes, ["1", "27", "54", "108", "54", "12"]);
        assert!(md.contains("0 1 \\| 1 0 / 1 0 \\| 1 1"));
    }

    #[test]
    fn json_is_structured() {
        let catalog = Catalog::new();
        let json = emit_table(
            TableKind::Table2,
            EmitOptions {
                format: Format::Json,
                flat: true,
            },
            &catalog,
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["name"], "table2");
        assert_eq!(v["rows"].as_array().unwrap().len(), 17);
        assert_eq!(v["rows"][16][4], "01101011");
    }

    #[test]
    fn emission_is_deterministic() {
        let kinds = TableKind::standard();
        for format in [Format::Markdown, Format::Csv, Format::Json] {
            let a = emit_tables(&kinds, EmitOptions::new(format), &Catalog::new()).unwrap();
            let b = emit_tables(&kinds, EmitOptions::new(format), &Catalog::new()).unwrap();
            assert_eq!(a, b);
        }
    }
}
