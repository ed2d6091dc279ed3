//! Extraspecial relations and the weight splitting of `M_p^{⊗l}`.
//!
//! cargo run --release --example representation -- [p] [l]

use dickson_chern::cyclo::{a_matrix, gen_matrices, verify_representation, verify_weight_basis};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(3, |s| s.parse().expect("p"));
    let l: usize = args.next().map_or(1, |s| s.parse().expect("l"));

    let (sigma, tau) = gen_matrices(p);
    println!("sigma =\n{sigma}tau =\n{tau}");
    println!("A_(1,1) =\n{}", a_matrix(1, 1 % p, p).expect("index in range"));

    match verify_weight_basis(p, l) {
        Ok(table) => {
            for (index, w) in table.entries.iter().take(p as usize) {
                println!("{index:?}: sigma weights {:?}, tau weights {:?}", w.sigma, w.tau);
            }
            if let Some(det) = &table.basis_det {
                println!("basis determinant = {det}");
            }
        }
        Err(e) => println!("weight table: {e}"),
    }
    print!("{}", verify_representation(p, l).to_text(false));
}
