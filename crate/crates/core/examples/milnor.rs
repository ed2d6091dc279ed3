//! Milnor primitives on `H^*(BV^{2l})`: `Q_i(x̄)` against the closed forms `r_i`.
//!
//! cargo run --release --example milnor -- [p] [l] [trials]

use dickson_chern::steenrod::{milnor_expansion, milnor_q, r_closed, verify_steenrod, x_class};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(3, |s| s.parse().expect("p"));
    let l: usize = args.next().map_or(1, |s| s.parse().expect("l"));
    let trials: usize = args.next().map_or(50, |s| s.parse().expect("trials"));

    let x = x_class(p, l).expect("odd prime");
    println!("x = {x}");
    for (c, word) in milnor_expansion(p as u32, 2).expect("depth") {
        println!("  Q_2 term: {c:+} {word}");
    }
    for i in 0..=3 {
        let q = milnor_q(i, &x).expect("depth");
        let r = r_closed(p, i, l).expect("closed form");
        println!(
            "Q_{i}(x) = {}   [matches r_{i}: {}]",
            q.even_to_poly().expect("even"),
            q == r
        );
    }
    print!("{}", verify_steenrod(p, l, trials, 42).to_text(false));
}
