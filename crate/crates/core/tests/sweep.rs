use pseudosym::semigroup::{check_conditions, derive_generators};
use pseudosym::sweep::{read_csv, run_sweep, write_csv, Interval, Status, SweepConfig};
use pseudosym::PseudoSymParams;

fn config(jobs: usize) -> SweepConfig {
    SweepConfig {
        alpha1: Interval::new(2, 7),
        alpha2: Interval::new(2, 7),
        alpha3: Interval::new(2, 7),
        alpha4: Interval::new(2, 7),
        alpha21: Interval::new(1, 5),
        oracle_depth: 10,
        jobs,
    }
}

#[test]
fn deterministic_across_thread_counts() {
    let one = run_sweep(&config(1)).unwrap();
    let four = run_sweep(&config(4)).unwrap();
    assert_eq!(one, four);
    assert_eq!(one.iter().filter(|r| r.status == Status::Valid).count(), 50);
    assert!(one.iter().all(|r| r.status != Status::Error));
}

#[test]
fn csv_round_trip() {
    let records = run_sweep(&config(2)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    write_csv(std::fs::File::create(&path).unwrap(), &records).unwrap();
    let back = read_csv(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(back, records);
}

#[test]
fn empty_valid_set() {
    let mut c = config(1);
    c.alpha2 = Interval::new(2, 2);
    c.alpha21 = Interval::new(1, 1);
    let records = run_sweep(&c).unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r.status == Status::Invalid));
}

#[test]
fn non_coprime_tuples_are_rejected() {
    let cases = [
        ((5, 4, 2, 2, 2), Some([9, 12, 15, 30])),
        ((6, 5, 4, 2, 1), None),
        ((7, 5, 4, 2, 1), None),
        ((7, 7, 2, 2, 4), None),
        ((60, 20, 8, 6, 10), Some([801, 831, 5010, 8610])),
    ];
    for ((a1, a2, a3, a4, a21), gens) in cases {
        let p = PseudoSymParams::new(a1, a2, a3, a4, a21).unwrap();
        let g = derive_generators(&p).unwrap();
        if let Some(expected) = gens {
            assert_eq!(g.as_array(), expected);
        }
        let report = check_conditions(&p).unwrap();
        assert!(report.hypotheses_hold(), "{p}");
        assert_eq!(report.failing(), vec!["coprime"], "{p}");
        assert!(g.gcd() > 1);
    }
    let records = run_sweep(&config(1)).unwrap();
    let coprime: Vec<_> = records
        .iter()
        .filter(|r| r.tag == "coprime")
        .map(|r| (r.alpha1, r.alpha2, r.alpha3, r.alpha4, r.alpha21))
        .collect();
    assert_eq!(
        coprime,
        vec![
            (5, 4, 2, 2, 2),
            (6, 5, 4, 2, 1),
            (7, 5, 4, 2, 1),
            (7, 7, 2, 2, 4)
        ]
    );
}

#[test]
fn ordering_implies_first_three_conditions() {
    for p in config(1).tuples() {
        if p.validate().is_err() {
            continue;
        }
        let r = check_conditions(&p).unwrap();
        if r.ordered {
            assert!(r.cond1 && r.cond2 && r.cond3, "{p}");
        }
    }
}
