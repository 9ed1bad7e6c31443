use std::collections::BTreeSet;

use cyclic_pir::distance::DistanceOptions;
use cyclic_pir::tables::{reproduce_table, reproduce_table_with, Quantity, RowStyle, TableId, TableReport, Verdict};

fn mismatches(r: &TableReport) -> BTreeSet<(usize, &'static str, Quantity)> {
    r.cells().filter(|(_, c)| c.verdict == Verdict::Mismatch).map(|(i, c)| (i, c.column, c.quantity)).collect()
}

#[test]
fn every_row_is_self_consistent_and_dimensions_match() {
    for id in TableId::ALL {
        let r = reproduce_table(id, false).unwrap();
        for row in &r.rows {
            assert!(row.self_consistent, "table {id} row {}", row.index);
        }
        let expected: BTreeSet<_> = match id {
            TableId::Four => [(1, "stardual", Quantity::Dimension), (1, "rate", Quantity::Rate)].into(),
            _ => BTreeSet::new(),
        };
        assert_eq!(mismatches(&r), expected, "table {id}");
    }
}

#[test]
fn verbatim_readings_disagree_only_where_errata_are_recorded() {
    let one = reproduce_table_with(TableId::One, DistanceOptions::default(), false).unwrap();
    let m = mismatches(&one);
    assert_eq!(m.len(), 6);
    assert!(m.iter().all(|&(row, _, _)| row == 5), "{m:?}");

    let three = reproduce_table_with(TableId::Three, DistanceOptions::default(), false).unwrap();
    assert_eq!(mismatches(&three), [(1, "stardual", Quantity::Distance), (5, "D", Quantity::Distance)].into());

    let seven = reproduce_table_with(TableId::Seven, DistanceOptions::default(), false).unwrap();
    assert_eq!(mismatches(&seven), [(4, "D", Quantity::Distance), (5, "D", Quantity::Distance)].into());
}

#[test]
fn table_five_bold_rows_are_bounds() {
    let r = reproduce_table(TableId::Five, false).unwrap();
    for row in r.rows.iter().filter(|r| r.style == RowStyle::Bold) {
        for cell in &row.cells {
            match cell.quantity {
                Quantity::Dimension | Quantity::Rate => assert_eq!(cell.verdict, Verdict::Match, "row {}", row.index),
                Quantity::Distance if cell.printed.starts_with(">=") => {
                    assert_eq!(cell.verdict, Verdict::BoundConsistent, "row {} {}", row.index, cell.column)
                }
                _ => assert_ne!(cell.verdict, Verdict::Mismatch, "row {} {}", row.index, cell.column),
            }
        }
    }
}

#[test]
fn reed_muller_rows_are_exact() {
    for id in [TableId::Three, TableId::Five, TableId::Seven] {
        let r = reproduce_table(id, false).unwrap();
        for row in r.rows.iter().filter(|r| r.style == RowStyle::Shaded) {
            let privacy = row.cell("privacy", Quantity::Privacy).unwrap();
            assert_eq!(privacy.verdict, Verdict::Match, "table {id} row {}: {}", row.index, privacy.computed);
        }
    }
}

#[test]
fn table_seven_gap() {
    let r = reproduce_table(TableId::Seven, false).unwrap();
    let t = |i: usize| r.rows[i - 1].computed.privacy;
    assert_eq!((t(2).value(), t(3).value()), (Some(7), Some(6)));
    assert_eq!(t(6).value(), Some(14));
    assert!(t(4).lo <= 15 && 15 <= t(4).hi);
    assert!(t(4).lo > 6, "BCH alone separates the cyclic row from t = 6");
}
