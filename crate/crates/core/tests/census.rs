use std::io::BufReader;

use empty4::census::{normalize_census, read_census_file, write_census_file, FORMAT_LINE};
use empty4::{
    diff_census, enumerate, excess_report, histogram_by_volume, read_census, width1_test,
    width_histogram, write_census, Census, CensusError, CensusMeta, SearchConfig, Tuple,
};

fn full(to: u32) -> Census {
    enumerate(&SearchConfig::new(1, to).unwrap()).unwrap()
}

#[test]
fn generated_census_round_trips_through_a_file() {
    let c = enumerate(&SearchConfig::new(1, 45).unwrap().sporadic()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.txt");
    write_census_file(&c, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(FORMAT_LINE));
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let fields: Vec<u32> = line.split(' ').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 6);
        assert!(fields[1..].iter().all(|&b| b < fields[0]));
    }
    let back = read_census_file(&path).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.meta.config_hash, SearchConfig::new(1, 45).unwrap().sporadic().hash());
    for t in back.rows() {
        assert_eq!(t.tuple().canonical_form(), *t);
    }
}

#[test]
fn sporadic_census_is_the_full_census_minus_family_members() {
    let all = full(40);
    let sporadic = enumerate(&SearchConfig::new(1, 40).unwrap().sporadic()).unwrap();
    let (only_all, only_sporadic) = diff_census(&all, &sporadic);
    assert!(only_sporadic.is_empty());
    assert_eq!(only_all.len() + sporadic.len(), all.len());
    for t in &only_all {
        assert!(!empty4::family_membership(t).is_empty(), "{t}");
    }
}

#[test]
fn histograms() {
    let all = full(10);
    let h = histogram_by_volume(&all);
    assert_eq!(h.values().sum::<usize>(), all.len());
    assert_eq!(h[&1], 1);
    let widths = width_histogram(&all);
    let w1 = all.rows().iter().filter(|t| width1_test(t).is_some()).count();
    assert_eq!(widths[&1].count, w1);
    assert_eq!(widths.values().map(|s| s.count).sum::<usize>(), all.len());
}

#[test]
fn excess_of_the_unimodular_simplex() {
    let c = Census::from_tuples([Tuple::unimodular(4)], CensusMeta::default());
    let ex = excess_report(&c);
    assert_eq!((ex[0].volume_excess, ex[0].surface_excess), (0, 0));
    assert_eq!(ex[0].to_string(), "0 0 1 0 0 0 0 0");
}

#[test]
fn read_errors_carry_line_numbers() {
    let text = format!("{FORMAT_LINE}\n# rows: 2\n39 5 8 13 14 38\n39 5 8 13\n");
    match read_census(text.as_bytes()) {
        Err(CensusError::ParseError { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    match read_census("7 1 1 1 2 9\n".as_bytes()) {
        Err(CensusError::InvariantViolation { line, .. }) => assert_eq!(line, 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn foreign_lists_are_normalized_before_diffing() {
    // Same simplices as the canonical rows, written with other unit multiples and orders.
    let foreign = "65 64 3 14 23 26\n39 1 25 26 31 34\n";
    let c = normalize_census(BufReader::new(foreign.as_bytes())).unwrap();
    let mut buf = Vec::new();
    write_census(&c, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["39 5 8 13 14 38", "65 3 14 23 26 64"]);
}
