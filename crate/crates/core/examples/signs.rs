//! Signs `ε(ρ)` and `(ρ/κ)` of 2+2 partitions of a four-element index set.
//!
//! cargo run --example signs -- [i j k l]

use dickson_chern::relations::{epsilon, partitions22, slash, verify_sign_identity, verify_signs, IndexSet4};

fn main() {
    let given: Vec<u32> = std::env::args().skip(1).map(|s| s.parse().expect("index")).collect();
    let set = match given.as_slice() {
        [a, b, c, d] => IndexSet4::new([*a, *b, *c, *d]).expect("distinct indices"),
        [] => IndexSet4::new([0, 1, 2, 3]).unwrap(),
        _ => panic!("give four indices or none"),
    };

    let parts = partitions22(set);
    for rho in &parts {
        println!("eps({rho}) = {:+}", epsilon(rho));
    }
    for rho in &parts {
        for kappa in parts.iter().filter(|k| *k != rho) {
            println!("({rho} / {kappa}) = {:+}", slash(rho, kappa).unwrap());
        }
    }
    print!("{}", verify_sign_identity(set).to_text(false));
    print!("{}", verify_signs().to_text(false));
}
