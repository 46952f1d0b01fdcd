//! Running every verification campaign with its default sizes.

use trefoil::campaign::{run, Property};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    for p in Property::ALL {
        let cfg = trefoil::campaign::Config {
            seed,
            ..p.default_config()
        };
        print!("{}", run(p, &cfg).to_lines());
        println!();
    }
}
