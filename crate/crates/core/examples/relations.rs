//! The quadratic polynomials `R_j` in `Y_1..Y_4`, their values at `r_1..r_4`,
//! and the relations with the Chern classes of the conjugation representation.
//!
//! cargo run --release --example relations -- [p]

use dickson_chern::relations::{r_j_poly, r_j_weight, verify_relations_suite, ALLOW_P5};

fn main() {
    let p: u64 = std::env::args().nth(1).map_or(3, |s| s.parse().expect("p"));
    for j in 0..=4 {
        let r = r_j_poly(j, p).expect("odd prime");
        println!("R_{j}: weight {}, {r}", r_j_weight(j, p));
    }
    print!("{}", verify_relations_suite(p, ALLOW_P5).to_text(false));
}
