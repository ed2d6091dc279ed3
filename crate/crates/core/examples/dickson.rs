//! Dickson invariants `C_{n,i}` computed as determinant quotients and from the
//! coefficients of `f_n`, then checked for GL-invariance.
//!
//! cargo run --release --example dickson -- [p] [n] [trials]

use dickson_chern::dickson::{dickson_all, gl_action, random_gl, verify_dickson, DicksonContext};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(3, |s| s.parse().expect("p"));
    let n: usize = args.next().map_or(2, |s| s.parse().expect("n"));
    let trials: usize = args.next().map_or(10, |s| s.parse().expect("trials"));
    let ctx = DicksonContext::new(p, n).expect("prime p, 1 <= n <= 6");

    let cs = dickson_all(&ctx).expect("exact quotients");
    for (i, c) in cs.iter().enumerate() {
        if c.len() <= 12 {
            println!("C_{n},{i} = {c}");
        } else {
            println!("C_{n},{i}: {} terms, degree {}", c.len(), c.degree().unwrap_or(0));
        }
    }

    let g = random_gl(n, ctx.p(), 7);
    let moved = gl_action(&cs[0], &g).expect("same ring");
    println!(
        "C_{n},0 fixed by a random matrix of det {}: {}",
        g.det(),
        moved == cs[0]
    );

    print!("{}", verify_dickson(&ctx, trials, 1).to_text(false));
}
