use mosaic_core::tables::{table1, table2, verify_table1_arithmetic, verify_table1_geometric, verify_table2, Source};

#[test]
fn every_table1_row_passes_arithmetic() {
    let checks = verify_table1_arithmetic();
    assert_eq!(checks.len(), 62);
    for c in &checks {
        assert!(c.ok, "{} {}: {}", c.id, c.name, c.detail);
    }
}

#[test]
fn constructible_rows_match_geometry() {
    let checks = verify_table1_geometric();
    assert_eq!(checks.len(), 16);
    for c in &checks {
        assert!(c.ok, "{} {}: {}", c.id, c.name, c.detail);
    }
}

#[test]
fn table2_with_reciprocal_column() {
    let checks = verify_table2();
    assert_eq!(checks.len(), 11);
    for c in &checks {
        assert!(c.ok, "{} {}: {}", c.id, c.name, c.detail);
    }
    assert_eq!(table2()[6].schlafli, (3, 4, 3));
}

#[test]
fn sources() {
    let t = table1();
    assert_eq!(t.iter().filter(|r| r.source() == Source::MonteCarlo).count(), 2);
    assert_eq!(t[0].source(), Source::Constructed);
    assert_eq!(t[1].source(), Source::Arithmetic);
}
