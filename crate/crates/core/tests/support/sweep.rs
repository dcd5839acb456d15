//! Randomised comparisons shared by the oracle tests and the acceptance run.

use e2e_cer::{
    bag_of_words, greedy_ld, solve, solve_with, AcceptAll, Level, Page, Solution, Strategy,
    TokenizerRegistry,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::oracle::{brute_force_ld, brute_force_seg, chars, words, Restrict};
use super::{config, page, random_lines, strs};

#[derive(Debug, Default)]
pub struct Sweep {
    pub cases: usize,
    pub checks: usize,
    pub skipped: usize,
    pub violations: Vec<String>,
}

impl Sweep {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.violations.len() < 20 {
            self.violations.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn run(hyp: &Page, gt: &Page, level: Level, r: bool, s: bool, strategy: Strategy) -> Solution {
    solve_with(
        hyp,
        gt,
        &config(level, r, false, s),
        None,
        strategy,
        &TokenizerRegistry::default(),
    )
    .unwrap()
}

/// Engines against brute force on tiny random pages (at most four lines of
/// at most six symbols).
pub fn oracle_sweep(seed: u64, cases: usize) -> Sweep {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sw = Sweep::default();
    for _ in 0..cases {
        sw.cases += 1;
        let h = random_lines(&mut rng, 4, 6);
        let g = random_lines(&mut rng, 4, 6);
        let (hs, gs) = (strs(&h), strs(&g));
        let (hyp, gt) = (page(&hs), page(&gs));
        let ctx = || format!("hyp={h:?} gt={g:?}");

        // R, character level.
        let r = run(
            &hyp,
            &gt,
            Level::Character,
            true,
            false,
            Strategy::ShortestPath,
        );
        let brute = brute_force_ld(&chars(&hs), &chars(&gs), Restrict::ReadingOrder, None).unwrap();
        sw.expect(r.distance as usize == brute.distance, || {
            format!(
                "R: engine {} vs brute {} for {}",
                r.distance,
                brute.distance,
                ctx()
            )
        });

        // R, word level.
        let rw = run(&hyp, &gt, Level::Word, true, false, Strategy::ShortestPath);
        let bw = brute_force_ld(&words(&hs), &words(&gs), Restrict::ReadingOrder, None).unwrap();
        sw.expect(rw.distance as usize == bw.distance, || {
            format!(
                "R words: engine {} vs brute {} for {}",
                rw.distance,
                bw.distance,
                ctx()
            )
        });

        // R,G with a random predicate.
        let allowed: Vec<Vec<bool>> = (0..h.len())
            .map(|_| (0..g.len()).map(|_| rng.gen_bool(0.6)).collect())
            .collect();
        let pred = |y: usize, x: usize| allowed[y][x];
        let rg = solve(
            &hyp,
            &gt,
            &config(Level::Character, true, true, false),
            Some(&pred),
        )
        .unwrap();
        let brute_g = brute_force_ld(
            &chars(&hs),
            &chars(&gs),
            Restrict::ReadingOrder,
            Some(&pred),
        )
        .unwrap();
        sw.expect(rg.distance as usize == brute_g.distance, || {
            format!(
                "R,G: engine {} vs brute {} for {} allowed={allowed:?}",
                rg.distance,
                brute_g.distance,
                ctx()
            )
        });
        for &(y, x) in &rg.alignment.matched {
            sw.expect(allowed[y][x], || {
                format!("R,G matched forbidden pair ({y},{x}) for {}", ctx())
            });
        }

        // R,S against the partition minimum, on the guarded subset.
        let rs = run(
            &hyp,
            &gt,
            Level::Character,
            true,
            true,
            Strategy::ShortestPath,
        );
        match brute_force_seg(&hs, &gs) {
            Some(b) => sw.expect(rs.distance as usize == b, || {
                format!("R,S: engine {} vs brute {} for {}", rs.distance, b, ctx())
            }),
            None => sw.skipped += 1,
        }

        // Greedy bounds the unrestricted minimum from above.
        let gr = greedy_ld(
            &hyp,
            &gt,
            &config(Level::Character, false, false, false),
            None,
        )
        .unwrap();
        let free = brute_force_ld(&chars(&hs), &chars(&gs), Restrict::None, None).unwrap();
        sw.expect(gr.distance as usize >= free.distance, || {
            format!(
                "greedy {} below brute {} for {}",
                gr.distance,
                free.distance,
                ctx()
            )
        });

        // Best-first searches agree with the full table.
        for (level, s) in [
            (Level::Character, false),
            (Level::Character, true),
            (Level::Word, true),
        ] {
            let full = run(&hyp, &gt, level, true, s, Strategy::FullTable).distance;
            for strategy in [Strategy::ShortestPath, Strategy::CharacterGrid] {
                let d = run(&hyp, &gt, level, true, s, strategy).distance;
                sw.expect(d == full, || {
                    format!(
                        "{strategy:?} {d} vs full table {full} ({level:?}, S={s}) for {}",
                        ctx()
                    )
                });
            }
        }
        let full_g = solve_with(
            &hyp,
            &gt,
            &config(Level::Character, true, true, true),
            Some(&pred),
            Strategy::FullTable,
            &TokenizerRegistry::default(),
        )
        .unwrap();
        let fast_g = solve(
            &hyp,
            &gt,
            &config(Level::Character, true, true, true),
            Some(&pred),
        )
        .unwrap();
        sw.expect(full_g.distance == fast_g.distance, || {
            format!(
                "R,G,S: search {} vs full table {} for {}",
                fast_g.distance,
                full_g.distance,
                ctx()
            )
        });
    }
    sw
}

fn check_solution(
    sw: &mut Sweep,
    sol: &Solution,
    n: usize,
    m: usize,
    r: bool,
    what: &str,
    ctx: &dyn Fn() -> String,
) {
    let a = &sol.alignment;
    let n = a.segmented_hyp.as_ref().map_or(n, Page::len);
    sw.expect(
        2 * a.matched.len() + a.unmatched_hyp.len() + a.unmatched_gt.len() == n + m,
        || format!("{what}: cardinality law broken for {}", ctx()),
    );
    sw.expect(a.check(n, m, r).is_ok(), || {
        format!("{what}: invalid alignment for {}", ctx())
    });
    let c = &sol.counts;
    sw.expect(c.is_consistent(), || {
        format!("{what}: inconsistent counts {c:?} for {}", ctx())
    });
    sw.expect(c.ins + c.del + c.sub == sol.distance, || {
        format!(
            "{what}: counts {c:?} do not sum to {} for {}",
            sol.distance,
            ctx()
        )
    });
}

/// Structural laws on random pages.
pub fn property_sweep(seed: u64, cases: usize) -> Sweep {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sw = Sweep::default();
    for _ in 0..cases {
        sw.cases += 1;
        let h = random_lines(&mut rng, 5, 8);
        let g = if rng.gen_bool(0.2) {
            h.clone()
        } else {
            random_lines(&mut rng, 5, 8)
        };
        let (hs, gs) = (strs(&h), strs(&g));
        let (hyp, gt) = (page(&hs), page(&gs));
        let ctx = || format!("hyp={h:?} gt={g:?}");
        let (n, m) = (h.len(), g.len());

        for level in [Level::Character, Level::Word] {
            let r = solve(&hyp, &gt, &config(level, true, false, false), None).unwrap();
            let rs = solve(&hyp, &gt, &config(level, true, false, true), None).unwrap();
            let rg = solve(
                &hyp,
                &gt,
                &config(level, true, true, false),
                Some(&AcceptAll),
            )
            .unwrap();
            let gr = greedy_ld(&hyp, &gt, &config(level, false, false, false), None).unwrap();
            let grs = greedy_ld(&hyp, &gt, &config(level, false, false, true), None).unwrap();
            check_solution(&mut sw, &r, n, m, true, "R", &ctx);
            check_solution(&mut sw, &rs, n, m, true, "R,S", &ctx);
            check_solution(&mut sw, &rg, n, m, true, "R,G", &ctx);
            check_solution(&mut sw, &gr, n, m, false, "greedy", &ctx);
            check_solution(&mut sw, &grs, n, m, false, "greedy S", &ctx);
            sw.expect(rs.distance <= r.distance, || {
                format!(
                    "{level:?}: R,S {} above R {} for {}",
                    rs.distance,
                    r.distance,
                    ctx()
                )
            });
            sw.expect(
                rg.distance == r.distance && rg.alignment == r.alignment,
                || {
                    format!(
                        "{level:?}: accept-all gate changed the result for {}",
                        ctx()
                    )
                },
            );
            if let Some(seg) = &rs.alignment.segmented_hyp {
                for &u in &rs.alignment.unmatched_hyp {
                    sw.expect(!seg.lines[u].text().contains(' '), || {
                        format!("{level:?}: unmatched segment with a space for {}", ctx())
                    });
                }
            }
        }

        // Skipping an empty line is free, so equality ignores empty lines.
        let r = solve(
            &hyp,
            &gt,
            &config(Level::Character, true, false, false),
            None,
        )
        .unwrap();
        let non_empty = |v: &[String]| {
            v.iter()
                .filter(|l| !l.is_empty())
                .cloned()
                .collect::<Vec<_>>()
        };
        let equal = non_empty(&h) == non_empty(&g);
        sw.expect((r.distance == 0) == equal, || {
            format!(
                "distance {} but pages equal = {equal} for {}",
                r.distance,
                ctx()
            )
        });
        if r.distance == 0 && h == g {
            sw.expect(
                r.alignment.matched == (0..n).map(|k| (k, k)).collect::<Vec<_>>(),
                || format!("equal pages without identity matching for {}", ctx()),
            );
        }

        let bow = bag_of_words(&hyp, &gt, "space").unwrap();
        let mut hp = h.clone();
        let mut gp = g.clone();
        hp.shuffle(&mut rng);
        gp.shuffle(&mut rng);
        // Shuffle words across lines as well.
        let mut hw: Vec<&str> = hp
            .iter()
            .flat_map(|l| l.split(' '))
            .filter(|w| !w.is_empty())
            .collect();
        hw.shuffle(&mut rng);
        let regrouped: Vec<String> = hw.chunks(2).map(|c| c.join(" ")).collect();
        let bow_lines = bag_of_words(&page(&strs(&hp)), &page(&strs(&gp)), "space").unwrap();
        let bow_words = bag_of_words(&page(&strs(&regrouped)), &gt, "space").unwrap();
        sw.expect(bow == bow_lines && bow == bow_words, || {
            format!("BOW not permutation invariant for {}", ctx())
        });
    }
    sw
}
