//! From cobordisms to projects: the fundamental graph plus the circle count.

use trefoil::format::{parse_cobs, write_project};
use trefoil::functor::{check_functoriality, functor_bar, fundamental_graph};
use trefoil::project::Project;
use trefoil::Result;

fn main() -> Result<()> {
    let cobs = parse_cobs(include_str!("../data/segments_and_circles.cob"))?;
    let m = &cobs[0].1;
    let p = functor_bar(m);
    print!(
        "{}",
        write_project("image", &Project::new(p.wager, p.graph.graph().clone()))
    );
    println!("symmetric: {}", fundamental_graph(m).graph().is_symmetric());

    let pair = parse_cobs(include_str!("../data/cup_cap.cob"))?;
    let r = check_functoriality(&pair[0].1, &pair[1].1)?;
    println!(
        "circles {} = {} + {} + {} (directed would give {})",
        r.composite_circles,
        r.first_circles,
        r.second_circles,
        r.measure_unoriented,
        r.measure_directed
    );
    println!("functor law holds: {}", r.holds());
    Ok(())
}
