#![allow(dead_code)]

pub mod oracle;
pub mod sweep;

use std::path::PathBuf;

use e2e_cer::{io::load_page, Baseline, Level, Line, MeasureConfig, Page};
use rand::Rng;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// The column-sorted table example: (hypothesis, ground truth).
pub fn sorted_table() -> (Page, Page) {
    let dir = fixtures().join("sorted_table");
    let hyp = load_page(dir.join("hyp/table.txt")).unwrap().page;
    let gt = load_page(dir.join("gt/table.txt")).unwrap().page;
    (hyp, gt)
}

pub fn page(lines: &[&str]) -> Page {
    Page::from_texts("p", lines).unwrap()
}

pub fn config(level: Level, r: bool, g: bool, s: bool) -> MeasureConfig {
    MeasureConfig::new(level, r, g, s)
}

/// Up to `max_lines` lines of up to `max_len` symbols from "abc" plus space,
/// trimmed so that they are valid lines.
pub fn random_lines(rng: &mut impl Rng, max_lines: usize, max_len: usize) -> Vec<String> {
    const ALPHABET: [char; 4] = ['a', 'b', 'c', ' '];
    let n = rng.gen_range(0..=max_lines);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let s: String = (0..len).map(|_| ALPHABET[rng.gen_range(0..4)]).collect();
            s.trim_matches(' ').to_string()
        })
        .collect()
}

pub fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// Two GT lines 100 px apart; the hypothesis repeats both texts but draws
/// the second one far below the page.
pub fn displaced_pair() -> (Page, Page) {
    let bl = |y| Baseline::from_coords(&[(0, y), (400, y)]).unwrap();
    let line = |t: &str, y| Line::new(t).unwrap().with_baseline(bl(y));
    let gt = Page::new(
        "g",
        vec![line("alpha beta", 100), line("gamma delta epsilon", 200)],
    );
    let hyp = Page::new(
        "g",
        vec![line("alpha beta", 100), line("gamma delta epsilon", 900)],
    );
    (hyp, gt)
}

/// A long page and a copy with about `rate` of its characters substituted,
/// deleted or doubled.
pub fn noisy_pair(rng: &mut impl Rng, lines: usize, rate: f64) -> (Page, Page) {
    let word = |rng: &mut dyn rand::RngCore| -> String {
        let len = rng.gen_range(1..=9);
        (0..len)
            .map(|_| char::from(b'a' + rng.gen_range(0..26)))
            .collect()
    };
    let gt: Vec<String> = (0..lines)
        .map(|_| {
            let n = rng.gen_range(3..=8);
            (0..n).map(|_| word(rng)).collect::<Vec<_>>().join(" ")
        })
        .collect();
    let hyp: Vec<String> = gt
        .iter()
        .map(|l| {
            let mut out = String::new();
            for c in l.chars() {
                if !rng.gen_bool(rate) {
                    out.push(c);
                    continue;
                }
                match rng.gen_range(0..3) {
                    0 => out.push(char::from(b'a' + rng.gen_range(0..26))),
                    1 => {}
                    _ => {
                        out.push(c);
                        out.push(c);
                    }
                }
            }
            out.trim_matches(' ').to_string()
        })
        .collect();
    (
        Page::from_texts("noisy", &hyp).unwrap(),
        Page::from_texts("noisy", &gt).unwrap(),
    )
}
