use std::path::PathBuf;

use ziptensor::render::{parse_text, to_text, TextStyle};
use ziptensor::{build_tensor, Tensor};

fn golden(k: u32, i: u32) -> String {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "tests",
        "golden",
        &format!("t{k}_{i}.txt"),
    ]
    .iter()
    .collect();
    std::fs::read_to_string(path).unwrap()
}

const CASES: [(u32, u32); 20] = [
    (3, 1),
    (3, 2),
    (3, 3),
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 4),
    (5, 1),
    (5, 2),
    (5, 3),
    (5, 4),
    (5, 5),
    (6, 3),
    (6, 4),
    (7, 3),
    (7, 4),
    (7, 5),
    (8, 3),
    (8, 4),
    (9, 4),
];

fn check(k: u32, i: u32) -> Tensor {
    let t = build_tensor(k, i).unwrap();
    let expected = golden(k, i);
    assert_eq!(
        to_text(&t, TextStyle::Digits) + "\n",
        expected,
        "T({k},{i})"
    );
    t
}

#[test]
fn digits_match_golden_files() {
    for (k, i) in CASES {
        check(k, i);
    }
}

#[test]
fn golden_files_parse_back() {
    for (k, i) in CASES {
        let t = check(k, i);
        assert_eq!(parse_text(k, i, &golden(k, i)).unwrap(), t);
    }
}

#[test]
fn bullets_are_digits_relabelled() {
    for (k, i) in CASES {
        let bullets = to_text(&build_tensor(k, i).unwrap(), TextStyle::Bullets);
        let digits: String = bullets
            .chars()
            .map(|c| match c {
                '•' => '1',
                '∘' => '0',
                other => other,
            })
            .collect();
        assert_eq!(digits + "\n", golden(k, i));
    }
}

#[test]
fn length_two_and_its_mirror_share_a_file() {
    assert_eq!(golden(4, 2), golden(4, 3));
}
