//! Classes in `Λ[a_1..a_m] ⊗ F_p[y_1..y_m]` and the operations β, P^k and Q_i on them.
//!
//! cargo run --example steenrod -- [p] ["class"]

use dickson_chern::steenrod::{milnor_expansion, milnor_q, CohAlgebra};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(3, |s| s.parse().expect("p"));
    let text = args.next().unwrap_or_else(|| "a1*y2 + 2*a1*a2*y1^2".into());
    let alg = CohAlgebra::new(p, 2).expect("odd prime");
    let x = alg.parse(&text).expect("class");

    println!("x      = {x}");
    println!("β x    = {}", x.bockstein());
    for k in 1..=2 {
        println!("P^{k} x  = {}", x.power_op(k));
    }
    for i in 0..=2 {
        let words: Vec<String> = milnor_expansion(p as u32, i)
            .expect("small i")
            .iter()
            .map(|(c, w)| format!("{c:+} {w}"))
            .collect();
        println!("Q_{i}    = {}", words.join(" "));
        println!("Q_{i} x  = {}", milnor_q(i, &x).expect("small i"));
    }
}
