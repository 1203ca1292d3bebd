//! Prints undirected catalog sizes and timings.
//!
//! `cargo run --release -p hgo-core --example table1 [n vc ec]...`

use std::time::Instant;

use hgo_core::{Generator, Limits};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer arguments"))
        .collect();
    let types: Vec<(usize, u8, u8)> = if args.is_empty() {
        vec![
            (3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2), (3, 3, 1), (4, 1, 1), (4, 1, 2),
            (4, 2, 1), (5, 1, 1), (4, 3, 1), (4, 2, 2),
        ]
    } else {
        args.chunks_exact(3).map(|c| (c[0], c[1] as u8, c[2] as u8)).collect()
    };
    let g = Generator::new().with_limits(Limits {
        max_order: 6,
        ..Limits::default()
    });
    println!("type        graphs    orbits    time");
    for (n, vc, ec) in types {
        let t = Instant::now();
        let graphs = g.graphs(n, vc, ec, false, false).unwrap().len();
        let orbits = g.orbits(n, vc, ec, false, false).unwrap().len();
        println!(
            "({n},{vc},{ec})  {graphs:>9} {orbits:>9}    {:.2?}",
            t.elapsed()
        );
    }
}
