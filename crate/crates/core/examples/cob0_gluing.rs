//! Gluing matchings and counting closed circles.

use trefoil::cob0::{object, Cob0Morphism};
use trefoil::format::{parse_cobs, write_cob};
use trefoil::Result;

fn main() -> Result<()> {
    let text = include_str!("../data/cup_cap.cob");
    let cobs = parse_cobs(text)?;
    let glued = cobs[0].1.compose(&cobs[1].1)?;
    print!("{}", write_cob("cup;cap", &glued));

    let zigzag = parse_cobs(include_str!("../data/zigzag.cob"))?;
    let (m, n) = (&zigzag[0].1, &zigzag[1].1);
    print!("{}", write_cob("zigzag", &m.compose(n)?));
    let (a, b) = (
        m.source().iter().next().unwrap(),
        n.target().iter().next().unwrap(),
    );
    let segment = m.compose(n)?.pairs()[0].clone();
    let decomposition = m.decompose_segment(n, (&segment.0, &segment.1))?;
    println!(
        "through-segment {a} -> {b} crosses {} pieces: {:?}",
        decomposition.segments.len(),
        decomposition.tags()
    );

    for (i, j) in [(2, 2), (3, 3), (1, 5)] {
        let homs = Cob0Morphism::enumerate(
            &object((0..i).map(|k| format!("a{k}"))),
            &object((0..j).map(|k| format!("b{k}"))),
            0,
        );
        println!("{i} -> {j}: {} matchings", homs.len());
    }
    Ok(())
}
