//! Exhaustively generates each tree family at small n and checks the closed
//! counting formulas, then prints a few serialized records.

use pvtrees::enumerate::{count, gen_labeled, Family, DEFAULT_CEILING};
use pvtrees::record::encode;

fn main() {
    let families: &[(Family, Option<usize>)] = &[
        (Family::Tree, None),
        (Family::Forest, None),
        (Family::PlaneTree, None),
        (Family::PlaneForest, None),
        (Family::Binary, None),
        (Family::Kary, Some(3)),
    ];

    println!("{:<14} {:>6} {:>6} {:>8} {:>10}", "family", "n=2", "n=3", "n=4", "n=5");
    for &(family, k) in families {
        let row: Vec<String> = (2..=5)
            .map(|n| {
                let generated = gen_labeled(family, n, k, DEFAULT_CEILING).unwrap().len();
                let counted = count(family, n, k).unwrap();
                assert_eq!(counted.to_string(), generated.to_string());
                counted.to_string()
            })
            .collect();
        let name = match k {
            Some(k) => format!("{} (k={k})", family.name()),
            None => family.name().to_string(),
        };
        println!("{name:<14} {:>6} {:>6} {:>8} {:>10}", row[0], row[1], row[2], row[3]);
    }

    println!("\nfirst three plane forests on [3]:");
    for s in gen_labeled(Family::PlaneForest, 3, None, DEFAULT_CEILING).unwrap().iter().take(3) {
        println!("  {}", serde_json::to_string(&encode(s, None).unwrap()).unwrap());
    }
}
