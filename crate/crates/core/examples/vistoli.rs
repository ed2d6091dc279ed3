//! The rank-two case: `θ*(γ_{p²−p})`, `θ*(γ_{p²−1})` and the relations with `r_1, r_2`.
//!
//! cargo run --release --example vistoli -- [p]

use dickson_chern::chern::{total_conj_chern, verify_vistoli, ChernContext};

fn main() {
    let p: u64 = std::env::args().nth(1).map_or(3, |s| s.parse().expect("p"));
    let ctx = ChernContext::new(p, 1).expect("odd prime");
    let chern = total_conj_chern(&ctx).expect("small product");
    println!("gamma_{} = {}", p * p - p, chern.part(p * p - p));
    println!("gamma_{} = {}", p * p - 1, chern.part(p * p - 1));
    print!("{}", verify_vistoli(p).to_text(false));
}
