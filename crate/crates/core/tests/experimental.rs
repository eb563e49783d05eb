use std::fs;

use chinos_core::metric::{metric_matrix, JointOrder, PairIndex, BLOCK_ORDER, SETS};
use chinos_core::shots::{
    admissible_pairs, bundled_experimental, error_report, ingest_experimental, parse_experimental,
};
use chinos_core::ChinosError;

const THEORY_G0: &str = include_str!("../../../data/g_theory_theta0.csv");

fn set_of(q: PairIndex) -> usize {
    SETS.iter().position(|s| s.contains(&q)).unwrap()
}

#[test]
fn bundled_theory_table_is_the_theta_zero_metric() {
    let table = parse_experimental(THEORY_G0, "theory").unwrap();
    let g = metric_matrix(0.0, JointOrder::BobFirst).unwrap();
    for &r in &BLOCK_ORDER {
        for &c in &BLOCK_ORDER {
            assert!((g.get(r, c).re - table.get(r, c)).abs() < 1e-12, "{r},{c}");
            assert!(g.get(r, c).im.abs() < 1e-12);
        }
    }
    let rep = error_report(&g, &table);
    assert!(rep.max_err < 1e-12);
}

#[test]
fn measured_table_has_block_structure() {
    let exp = bundled_experimental();
    for &r in &BLOCK_ORDER {
        for &c in &BLOCK_ORDER {
            let v = exp.get(r, c).abs();
            if set_of(r) == set_of(c) {
                assert!(v >= 0.95, "{r},{c} = {v}");
            } else {
                assert!(v <= 0.3, "{r},{c} = {v}");
            }
        }
    }
}

#[test]
fn admissible_pairs_drop_the_noisy_cross_set_entries() {
    let exp = bundled_experimental();
    let pairs = admissible_pairs(&exp, 0.25);
    assert_eq!(pairs.len(), 184);
    assert!(pairs.iter().all(|&(r, c)| set_of(r) != set_of(c)));
    let excluded: Vec<(PairIndex, PairIndex)> =
        ["13,00", "01,00", "02,11", "20,03", "10,03", "33,10", "03,10", "21,02"]
            .iter()
            .map(|s| {
                let (a, b) = s.split_once(',').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
    for e in &excluded {
        assert!(!pairs.contains(e), "{e:?}");
        assert!(exp.get(e.0, e.1) > 0.25);
    }
    let cross = BLOCK_ORDER
        .iter()
        .flat_map(|&r| BLOCK_ORDER.iter().map(move |&c| (r, c)))
        .filter(|&(r, c)| set_of(r) != set_of(c))
        .count();
    assert_eq!(cross, pairs.len() + excluded.len());
}

#[test]
fn error_bands_against_theory() {
    let g = metric_matrix(0.0, JointOrder::BobFirst).unwrap();
    let rep = error_report(&g, &bundled_experimental());
    assert!((rep.avg_err_on_units - 0.031_09).abs() < 1e-4);
    assert!((0.10..=0.24).contains(&rep.avg_err_on_zeros));
    assert!((rep.max_err - 0.28).abs() < 1e-12);
    assert_eq!(rep.deltas.len(), 16);
}

#[test]
fn ingest_accepts_both_delimiters() {
    let dir = std::env::temp_dir().join(format!("chinos-ingest-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let exp = bundled_experimental();
    let mut text = String::new();
    for &r in &BLOCK_ORDER {
        let row: Vec<String> = BLOCK_ORDER.iter().map(|&c| exp.get(r, c).to_string()).collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    let plain = dir.join("plain.csv");
    fs::write(&plain, &text).unwrap();
    let back = ingest_experimental(&plain).unwrap();
    assert_eq!(back.entries(), exp.entries());

    let short = dir.join("short.csv");
    fs::write(&short, text.lines().take(15).collect::<Vec<_>>().join("\n")).unwrap();
    assert!(matches!(ingest_experimental(&short), Err(ChinosError::Shape { .. })));
    assert!(matches!(
        ingest_experimental(dir.join("missing.csv")),
        Err(ChinosError::Io(_))
    ));
    fs::remove_dir_all(&dir).unwrap();
}
