//! Composition of graphs carrying group actions.

use std::collections::BTreeMap;

use trefoil::bimodular::{
    bimod_execute, check_well_defined, ActionEntry, BimodularGraph, FiniteGroup,
};
use trefoil::format::{parse_bimodular, write_bimodular};
use trefoil::graph::graph;
use trefoil::Result;

fn main() -> Result<()> {
    let parsed = parse_bimodular(include_str!("../data/z2_swap.bimod"))?;
    let (f, g) = (&parsed[0].1, &parsed[1].1);
    let fg = bimod_execute(f, g)?;
    print!("{}", write_bimodular("swap", &fg));
    println!("well defined: {}", check_well_defined(f, g)?.holds());

    // the same edges with a trivial action keep both paths
    let plain = bimod_execute(
        &BimodularGraph::trivial(f.graph().clone()),
        &BimodularGraph::trivial(g.graph().clone()),
    )?;
    println!("without the action: {} edges", plain.graph().edges().len());

    // Z3 rotating three parallel edges on the right
    let z3 = FiniteGroup::cyclic(3);
    let groups = BTreeMap::from([("m".to_string(), z3.clone())]);
    let rot = |k: &str, images: [&str; 3]| ActionEntry {
        source: "a".into(),
        target: "m".into(),
        element: k.into(),
        images: images.iter().map(|&s| s.into()).collect(),
    };
    let h = BimodularGraph::from_entries(
        graph(
            &["a", "m"],
            &[("r0", "a", "m"), ("r1", "a", "m"), ("r2", "a", "m")],
        )?,
        groups.clone(),
        &[],
        &[rot("1", ["r1", "r2", "r0"]), rot("2", ["r2", "r0", "r1"])],
    )?;
    let k =
        BimodularGraph::from_entries(graph(&["m", "b"], &[("s", "m", "b")])?, groups, &[], &[])?;
    println!(
        "Z3 orbit collapses to {} edge(s)",
        bimod_execute(&h, &k)?.graph().edges().len()
    );
    Ok(())
}
