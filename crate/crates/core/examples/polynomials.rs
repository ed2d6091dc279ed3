//! Sparse polynomials over F_p: parsing, arithmetic, Frobenius, exact division
//! and determinants.
//!
//! cargo run --example polynomials -- [p]

use dickson_chern::galois::{jacobian_det, parse, PolyMatrix, PolyRing};

fn main() {
    let p: u64 = std::env::args().nth(1).map_or(5, |s| s.parse().expect("p"));
    let ring = PolyRing::new(p, &["x", "y", "z"]).expect("prime");
    let f = parse(&ring, "x^2*y + 3*y*z - 1").expect("f");
    let g = parse(&ring, "x + y + z").expect("g");

    let fg = &f * &g;
    println!("f g        = {fg}");
    println!("(f g) / g  = {}", fg.exact_div(&g).expect("exact"));
    println!("g^p        = {}", g.pow(p));
    println!("frob(g)    = {}", g.frobenius(1));

    let m = PolyMatrix::from_fn(3, 3, |r, c| ring.var(c).pow(p.pow(r as u32))).unwrap();
    println!("Moore det  = {} terms", m.determinant().unwrap().len());
    println!(
        "jacobian   = {}",
        jacobian_det(&[f, g, ring.var(2)], &[0, 1, 2]).unwrap()
    );
}
