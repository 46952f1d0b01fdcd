//! The image of each hom-set is injective once circles are kept.

use trefoil::cob0::object;
use trefoil::format::write_cob;
use trefoil::functor::check_faithfulness;

fn main() {
    for (a, b) in [(1, 1), (2, 2), (3, 3), (2, 4)] {
        let source = object((1..=a).map(|i| format!("a{i}")));
        let target = object((1..=b).map(|i| format!("b{i}")));
        let r = check_faithfulness(&source, &target, 2);
        println!(
            "{a} -> {b}: {} morphisms, {} images, injective {}",
            r.hom_size,
            r.distinct_images,
            r.injective()
        );
        if let Some((x, y)) = r.plain_witness.filter(|_| (a, b) == (3, 3)) {
            println!("without circles these two look the same:");
            print!("{}{}", write_cob("x", &x), write_cob("y", &y));
        }
    }
}
