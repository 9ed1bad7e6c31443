use cyclic_pir::cyclic::code_from_cosets;
use cyclic_pir::scheme::Rate;
use cyclic_pir::search::{search_pir_codes, Objective, SearchSpec};

#[test]
fn fixed_storage_code_at_63_reaches_nineteen() {
    let mut spec =
        SearchSpec::new(63, 2, Objective::MaxPrivacy { min_rate: Rate::new(6, 63), min_privacy: None }).unwrap();
    spec.fixed_c = Some(vec![21]);
    spec.max_d_cosets = 13;
    let result = search_pir_codes(&spec).unwrap();
    assert!(!result.partial);
    let best = &result.hits[0];
    assert_eq!(best.c, code_from_cosets(&[21], 63, 2).unwrap());
    assert_eq!(best.params.privacy.value(), Some(19));
    assert_eq!(best.params.rate, Rate::new(6, 63));
    assert!(best.pareto);
    assert!(result.hits.iter().all(|h| h.params.privacy.hi <= 19));
}

#[test]
fn table_one_row_one_is_among_the_hits() {
    let spec =
        SearchSpec::new(127, 2, Objective::MaxPrivacy { min_rate: Rate::new(14, 127), min_privacy: Some(9) }).unwrap();
    let result = search_pir_codes(&spec).unwrap();
    let c = code_from_cosets(&[0, 31], 127, 2).unwrap();
    let d = code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap();
    // BCH pruning drops this D (its dual's BCH bound is 4), but an equivalent pair survives.
    assert!(!result.hits.iter().any(|h| h.c == c && h.d == d));
    assert!(result
        .hits
        .iter()
        .any(|h| h.params.privacy.value() == Some(9) && h.params.rate == Rate::new(14, 127) && h.c.dim() == 8));
}
