//! Prime cycles and the two measures.

use trefoil::graph::graph;
use trefoil::{measure, prime_cycles, Orientation, Result};

fn main() -> Result<()> {
    // a square whose sides alternate between the graphs, once in each direction
    let f = graph(
        &["a", "b", "c", "d"],
        &[
            ("ab", "a", "b"),
            ("ba", "b", "a"),
            ("cd", "c", "d"),
            ("dc", "d", "c"),
        ],
    )?;
    let g = graph(
        &["a", "b", "c", "d"],
        &[
            ("bc", "b", "c"),
            ("cb", "c", "b"),
            ("da", "d", "a"),
            ("ad", "a", "d"),
        ],
    )?;
    for orientation in [Orientation::Directed, Orientation::Unoriented] {
        println!("{orientation}: {}", measure(&f, &g, orientation));
        for class in prime_cycles(&f, &g, orientation)? {
            println!("  {}", class.flat_id());
        }
    }

    // two cycles sharing an edge: infinitely many primes, measure omega
    let f = graph(&["a", "b"], &[("e", "a", "b")])?;
    let g = graph(&["a", "b"], &[("f1", "b", "a"), ("f2", "b", "a")])?;
    println!("overlapping: {}", measure(&f, &g, Orientation::Directed));
    Ok(())
}
