//! Plain Levenshtein distance with its edit script.

use e2e_cer::{levenshtein_str, EditOp};

fn main() {
    let lv = levenshtein_str("Kublbock", "Küblböck");
    println!("distance {}", lv.distance);
    for step in &lv.alignment.ops {
        if step.op != EditOp::Match {
            println!("  {:?} at hyp {} / gt {}", step.op, step.i, step.j);
        }
    }
    let c = lv.counts;
    println!("ins {} del {} sub {} cor {}", c.ins, c.del, c.sub, c.cor);
}
