use std::collections::BTreeSet;

use pseudosym::{build_family, hilbert_report, PseudoSymParams};
use serde_json::Value;

const SERIES: &str = include_str!("fixtures/series.json");

fn lines(s: &str) -> BTreeSet<String> {
    s.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

fn fixture_coeffs(example: &str, series: &str) -> Vec<i64> {
    let v: Value = serde_json::from_str(SERIES).unwrap();
    v[example][series]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_i64().unwrap())
        .collect()
}

fn check(example: &str, params: PseudoSymParams, listing: &str) {
    let fam = build_family(&params).unwrap();
    assert_eq!(lines(&fam.listing()), lines(listing));
    let r = hilbert_report(&params, 0).unwrap();
    assert_eq!(r.p.coeffs(), fixture_coeffs(example, "P").as_slice());
    assert_eq!(r.q.coeffs(), fixture_coeffs(example, "Q").as_slice());
}

#[test]
fn example1_listing_and_series() {
    check(
        "example1",
        PseudoSymParams::new(21, 11, 7, 4, 5).unwrap(),
        include_str!("fixtures/example1_basis.txt"),
    );
}

#[test]
fn example2_listing_and_series() {
    check(
        "example2",
        PseudoSymParams::new(60, 20, 8, 6, 10).unwrap(),
        include_str!("fixtures/example2_basis.txt"),
    );
}

#[test]
fn series_support() {
    let q1 = fixture_coeffs("example1", "Q");
    assert_eq!(&q1[..8], &[1, 3, 6, 10, 12, 15, 17, 17]);
    assert_eq!(q1.len() - 1, 165);
    assert_eq!(fixture_coeffs("example1", "P").len() - 1, 168);
    assert_eq!(fixture_coeffs("example2", "P").len() - 1, 503);
    assert_eq!(fixture_coeffs("example2", "Q").len() - 1, 500);
}
