mod common;

use common::transfer_survey;
use css_entropy::sampling::TransferRegime;

#[test]
fn predictions_match_rank_small_regime() {
    let s = transfer_survey(6, TransferRegime::SmallA, 2000, 3);
    assert_eq!(s.classified, 2000);
    assert_eq!(s.agreed, s.classified);
    assert!(s.by_case.len() >= 8, "{:?}", s.by_case);
}

#[test]
fn predictions_match_rank_large_regime() {
    let s = transfer_survey(6, TransferRegime::LargeA, 2000, 3);
    assert_eq!(s.classified, 2000);
    assert_eq!(s.agreed, s.classified);
    assert!(s.by_case.len() >= 8, "{:?}", s.by_case);
}
