use binrank_core::reporting::{verify_all, Catalog, ExpectedDataset, Scope};

#[test]
fn published_dataset_verifies() {
    let report = verify_all(
        Scope::All,
        &ExpectedDataset::published(),
        &Catalog::default(),
    );
    assert!(report.passed(), "{report}");
    assert!(report.checks.len() > 200);
}

type Tamper = (&'static str, fn(&mut ExpectedDataset));

#[test]
fn each_tampered_value_is_one_mismatch() {
    let catalog = Catalog::default();
    let tamper: [Tamper; 5] = [
        ("table4 row 63", |d| {
            d.tesseract_boolean_partition[62].count += 1
        }),
        ("table5 row 1", |d| {
            d.tesseract_integer_partition[0].representative = "0000000000000001"
        }),
        ("table3 row 30", |d| d.tesseract_large_orbits[29].size = 12),
        ("split of large orbit 26", |d| {
            let row = d
                .tesseract_splits
                .iter_mut()
                .find(|r| r.large_index == 26)
                .unwrap();
            row.size = 107;
        }),
        ("lower bounds n=6", |d| d.lower_bounds[3].large -= 1),
    ];
    for (name, f) in tamper {
        let mut data = ExpectedDataset::published();
        f(&mut data);
        let report = verify_all(Scope::All, &data, &catalog);
        let bad: Vec<&str> = report
            .mismatches()
            .iter()
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(bad, [name]);
    }
}
