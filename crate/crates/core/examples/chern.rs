//! Total Chern class of the conjugation representation restricted to `V^{2l}`,
//! split into graded parts and compared with Dickson invariants.
//!
//! cargo run --release --example chern -- [p] [l]

use dickson_chern::chern::{total_conj_chern, verify_chern, ChernContext};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(3, |s| s.parse().expect("p"));
    let l: usize = args.next().map_or(1, |s| s.parse().expect("l"));
    let ctx = ChernContext::new(p, l).expect("odd prime and 1 <= l <= 3");

    match total_conj_chern(&ctx) {
        Ok(chern) => {
            for d in chern.degrees() {
                let part = chern.part(d);
                if part.len() <= 8 {
                    println!("degree {d}: {part}");
                } else {
                    println!("degree {d}: {} terms", part.len());
                }
            }
        }
        Err(e) => println!("product: {e}"),
    }
    print!("{}", verify_chern(&ctx).to_text(false));
}
