//! Plugging graphs together along shared vertices.

use trefoil::graph::graph;
use trefoil::{alternating_paths, execute, Result};

fn main() -> Result<()> {
    // a -e-> b -f-> c: the shared vertex b disappears
    let f = graph(&["a", "b"], &[("e", "a", "b")])?;
    let g = graph(&["b", "c"], &[("f", "b", "c")])?;
    let fg = execute(&f, &g)?;
    println!(
        "straight line: {:?}",
        fg.edges()
            .iter()
            .map(|e| format!("{} {}->{}", e.id, e.source, e.target))
            .collect::<Vec<_>>()
    );

    // bouncing between the two graphs through the internal vertices m, n and p
    let f = graph(
        &["a", "m", "n", "p"],
        &[("in", "a", "m"), ("turn", "n", "p")],
    )?;
    let g = graph(
        &["m", "n", "p", "z"],
        &[("across", "m", "n"), ("leave", "p", "z")],
    )?;
    for p in alternating_paths(&f, &g)? {
        println!("path {} : {} -> {}", p.flat_id(), p.source(), p.target());
    }

    // a way back into the bounce gives infinitely many paths
    let f = graph(
        &["a", "m", "n", "z"],
        &[("in", "a", "m"), ("back", "n", "m"), ("out", "n", "z")],
    )?;
    let g = graph(&["m", "n"], &[("across", "m", "n")])?;
    match execute(&f, &g) {
        Ok(g) => println!("finite: {} edges", g.edges().len()),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
