//! Recomputes every published quantity and compares it with the embedded
//! dataset. A mismatch is reported, never raised.

use std::fmt;
use std::str::FromStr;

use crate::array::{ArrayCode, Shape};
use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::stratify::rank_distribution;
use crate::symmetry::{classify, orbit_split, Group};

use super::bounds::lower_bounds;
use super::catalog::Catalog;
use super::expected::{ExpectedDataset, PartitionEntry};
use super::partition::partition_by_ones;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Cube,
    Tesseract,
    All,
}

impl Scope {
    fn cube(self) -> bool {
        matches!(self, Scope::Cube | Scope::All)
    }

    fn tesseract(self) -> bool {
        matches!(self, Scope::Tesseract | Scope::All)
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3" | "n3" | "n=3" => Ok(Scope::Cube),
            "4" | "n4" | "n=4" => Ok(Scope::Tesseract),
            "all" => Ok(Scope::All),
            _ => Err(Error::Malformed(format!("unknown scope `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn mismatches(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    fn push(&mut self, name: impl Into<String>, expected: impl ToString, computed: impl ToString) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        });
    }

    fn push_result(&mut self, name: &str, expected: impl ToString, computed: Result<String>) {
        let computed = computed.unwrap_or_else(|e| format!("error: {e}"));
        self.push(name, expected, computed);
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "PASS {}", c.name)?;
            } else {
                writeln!(
                    f,
                    "FAIL {}: expected {}, computed {}",
                    c.name, c.expected, c.computed
                )?;
            }
        }
        let failed = self.mismatches().len();
        writeln!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn verify_all(scope: Scope, dataset: &ExpectedDataset, catalog: &Catalog) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut shapes = Vec::new();
    if scope.cube() {
        shapes.push(Shape::CUBE);
    }
    if scope.tesseract() {
        shapes.push(Shape::TESSERACT);
    }
    for &shape in &shapes {
        check_strata(&mut report, shape, dataset, catalog);
    }
    if scope.cube() {
        check_cube(&mut report, dataset, catalog);
    }
    if scope.tesseract() {
        check_tesseract(&mut report, dataset, catalog);
    }
    for row in &dataset.lower_bounds {
        let wanted = match scope {
            Scope::Cube => row.n == 3,
            Scope::Tesseract => row.n == 4,
            Scope::All => true,
        };
        if wanted {
            let computed = lower_bounds(row.n).map(|(s, l)| format!("{s}, {l}"));
            report.push_result(
                &format!("lower bounds n={}", row.n),
                format!("{}, {}", row.small, row.large),
                computed,
            );
        }
    }
    report
}

fn check_strata(
    report: &mut VerifyReport,
    shape: Shape,
    dataset: &ExpectedDataset,
    catalog: &Catalog,
) {
    for s in Semiring::ALL {
        let Some(entry) = dataset.strata_for(shape.n(), s) else {
            continue;
        };
        let label = format!("strata n={} {}", shape.n(), s.tag());
        let dist = catalog.table(shape, s).map(|t| rank_distribution(&t));
        report.push_result(
            &format!("{label} counts"),
            join(&entry.sizes),
            dist.as_ref()
                .map(|d| join(d.iter().map(|r| r.count)))
                .map_err(|e| Error::Malformed(e.to_string())),
        );
        if let Some(percents) = &entry.percents {
            report.push_result(
                &format!("{label} percentages"),
                join(percents),
                dist.map(|d| join(d.iter().map(|r| r.percent.clone()))),
            );
        }
    }
}

fn orbit_row(rank: usize, size: usize, canonical: &str) -> String {
    format!("rank {rank}, size {size}, {canonical}")
}

fn partition_row(rank: usize, ones: u32, count: u64, representative: &str) -> String {
    format!("rank {rank}, ones {ones}, count {count}, {representative}")
}

fn check_rows(
    report: &mut VerifyReport,
    name: &str,
    expected: &[String],
    computed: Result<Vec<String>>,
) {
    match computed {
        Ok(rows) => {
            report.push(format!("{name} rows"), expected.len(), rows.len());
            for (i, e) in expected.iter().enumerate() {
                let c = rows.get(i).cloned().unwrap_or_else(|| "missing".into());
                report.push(format!("{name} row {}", i + 1), e, c);
            }
        }
        Err(e) => report.push(
            format!("{name} rows"),
            expected.len(),
            format!("error: {e}"),
        ),
    }
}

fn mat_flat(mat: [[u8; 4]; 2]) -> String {
    ArrayCode::from_mat(mat)
        .map(|a| a.to_string())
        .unwrap_or_else(|e| format!("invalid block: {e}"))
}

fn check_cube(report: &mut VerifyReport, dataset: &ExpectedDataset, catalog: &Catalog) {
    let shape = Shape::CUBE;

    let same = catalog.table(shape, Semiring::Boolean).and_then(|b| {
        let nat = catalog.table(shape, Semiring::NonNegInt)?;
        let differing = (0..b.total())
            .filter(|&c| b.rank_of_code(c) != nat.rank_of_code(c))
            .count();
        Ok(if differing == 0 && b.strata() == nat.strata() {
            "identical".to_string()
        } else {
            format!("{differing} arrays differ")
        })
    });
    report.push_result("n=3 Boolean and integer strata coincide", "identical", same);

    let gf2 = catalog.table(shape, Semiring::Gf2);
    let expected: Vec<String> = dataset
        .cube_large_orbits
        .iter()
        .map(|r| orbit_row(r.rank, r.size, &mat_flat(r.mat)))
        .collect();
    let computed = gf2.as_ref().map_err(clone_err).and_then(|t| {
        Ok(classify(t, Group::Large)?
            .iter()
            .map(|r| orbit_row(r.rank, r.size, &r.canonical.to_string()))
            .collect())
    });
    check_rows(report, "table1", &expected, computed);

    let small = gf2
        .as_ref()
        .map_err(clone_err)
        .and_then(|t| classify(t, Group::Small));
    report.push_result(
        "n=3 small orbit count",
        dataset.cube_small_orbit_count,
        small.map(|s| s.len().to_string()),
    );

    let split = gf2.as_ref().map_err(clone_err).and_then(|t| orbit_split(t));
    let index = dataset.cube_split_large_index;
    let mut sorted_forms: Vec<String> = dataset
        .cube_split_forms
        .iter()
        .map(|&m| mat_flat(m))
        .collect();
    sorted_forms.sort();
    let entry = split.map(|s| s.into_iter().find(|e| e.large_index == index));
    report.push_result(
        &format!("n=3 large orbit {index} split"),
        format!(
            "{index} → {} · {}",
            dataset.cube_split_forms.len(),
            dataset.cube_split_size
        ),
        entry
            .as_ref()
            .map_err(clone_err)
            .map(|e| e.as_ref().map(|e| e.to_string()).unwrap_or_default()),
    );
    report.push_result(
        &format!("n=3 large orbit {index} small canonical forms"),
        join(sorted_forms),
        entry.map(|e| {
            e.map(|e| join(e.small_canonicals.iter()))
                .unwrap_or_default()
        }),
    );

    let expected: Vec<String> = dataset
        .cube_boolean_partition
        .iter()
        .map(|r| partition_row(r.rank, r.ones, r.count, &mat_flat(r.mat)))
        .collect();
    let computed = catalog.table(shape, Semiring::Boolean).map(|t| {
        partition_by_ones(&t)
            .iter()
            .map(|r| partition_row(r.rank, r.ones, r.count, &r.representative.to_string()))
            .collect()
    });
    check_rows(report, "table2", &expected, computed);
}

fn clone_err(e: &Error) -> Error {
    Error::Malformed(e.to_string())
}

fn check_partition(
    report: &mut VerifyReport,
    name: &str,
    semiring: Semiring,
    expected: &[PartitionEntry],
    catalog: &Catalog,
) {
    let expected: Vec<String> = expected
        .iter()
        .map(|r| partition_row(r.rank, r.ones, r.count, r.representative))
        .collect();
    let computed = catalog.table(Shape::TESSERACT, semiring).map(|t| {
        partition_by_ones(&t)
            .iter()
            .map(|r| partition_row(r.rank, r.ones, r.count, &r.representative.to_string()))
            .collect()
    });
    check_rows(report, name, &expected, computed);
}

fn check_tesseract(report: &mut VerifyReport, dataset: &ExpectedDataset, catalog: &Catalog) {
    let gf2 = catalog.table(Shape::TESSERACT, Semiring::Gf2);

    let expected: Vec<String> = dataset
        .tesseract_large_orbits
        .iter()
        .map(|r| orbit_row(r.rank, r.size, r.canonical))
        .collect();
    let computed = gf2.as_ref().map_err(clone_err).and_then(|t| {
        Ok(classify(t, Group::Large)?
            .iter()
            .map(|r| orbit_row(r.rank, r.size, &r.canonical.to_string()))
            .collect())
    });
    check_rows(report, "table3", &expected, computed);

    let small = gf2
        .as_ref()
        .map_err(clone_err)
        .and_then(|t| classify(t, Group::Small));
    report.push_result(
        "n=4 small orbit count",
        dataset.tesseract_small_orbit_count,
        small.map(|s| s.len().to_string()),
    );

    match gf2.as_ref().map_err(clone_err).and_then(|t| orbit_split(t)) {
        Ok(split) => {
            for row in &dataset.tesseract_splits {
                let computed = split
                    .iter()
                    .find(|e| e.large_index == row.large_index)
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "missing".into());
                report.push(
                    format!("split of large orbit {}", row.large_index),
                    format!("{} → {} · {}", row.large_index, row.count, row.size),
                    computed,
                );
            }
            let unlisted_splits: Vec<String> = split
                .iter()
                .filter(|e| e.is_split())
                .filter(|e| {
                    !dataset
                        .tesseract_splits
                        .iter()
                        .any(|r| r.large_index == e.large_index)
                })
                .map(|e| e.to_string())
                .collect();
            report.push(
                "large orbits missing from the split table are single small orbits",
                "none",
                if unlisted_splits.is_empty() {
                    "none".into()
                } else {
                    unlisted_splits.join("; ")
                },
            );
        }
        Err(e) => report.push("split table", "computed", format!("error: {e}")),
    }

    check_partition(
        report,
        "table4",
        Semiring::Boolean,
        &dataset.tesseract_boolean_partition,
        catalog,
    );
    check_partition(
        report,
        "table5",
        Semiring::NonNegInt,
        &dataset.tesseract_integer_partition,
        catalog,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_scope_passes() {
        let report = verify_all(
            Scope::Cube,
            &ExpectedDataset::published(),
            &Catalog::default(),
        );
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn tampered_cube_count_is_one_mismatch() {
        let mut data = ExpectedDataset::published();
        data.cube_boolean_partition[5].count += 1;
        let report = verify_all(Scope::Cube, &data, &Catalog::default());
        let bad = report.mismatches();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].name, "table2 row 6");
    }
}
