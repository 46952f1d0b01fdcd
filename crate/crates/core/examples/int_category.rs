//! Graphs between interfaces, composed by execution.

use trefoil::int::{IntMorphism, Port};
use trefoil::{Orientation, Result};

fn dom(s: &str) -> Port {
    Port::Dom(s.into())
}

fn cod(s: &str) -> Port {
    Port::Cod(s.into())
}

fn main() -> Result<()> {
    // e crosses into g, which either leaves through d or turns back through k
    let f = IntMorphism::from_edges(
        &["a"],
        &["b", "c"],
        &[("e", dom("a"), cod("b")), ("k", cod("c"), dom("a"))],
    )?;
    let g = IntMorphism::from_edges(
        &["b", "c"],
        &["d"],
        &[("f", dom("b"), dom("c")), ("g", dom("b"), cod("d"))],
    )?;
    let fg = f.compose(&g)?;
    for e in fg.graph().edges() {
        println!("{} : {} -> {}", e.id, e.source, e.target);
    }

    let id = IntMorphism::identity(["b".to_string(), "c".to_string()]);
    let padded = f.compose(&id)?;
    println!(
        "f;id has {} edges, f has {}",
        padded.graph().edges().len(),
        f.graph().edges().len()
    );
    println!(
        "erasing identity atoms recovers f: {}",
        padded.erase_identity_atoms()? == f
    );

    // a cap followed by a cup leaves nothing but a loop
    let cap = IntMorphism::from_edges(
        &[],
        &["x", "y"],
        &[("c1", cod("x"), cod("y")), ("c2", cod("y"), cod("x"))],
    )?;
    let cup = IntMorphism::from_edges(
        &["x", "y"],
        &[],
        &[("u1", dom("y"), dom("x")), ("u2", dom("x"), dom("y"))],
    )?;
    println!(
        "loop: directed {}, unoriented {}",
        cap.interface_measure(&cup, Orientation::Directed)?,
        cap.interface_measure(&cup, Orientation::Unoriented)?
    );
    Ok(())
}
