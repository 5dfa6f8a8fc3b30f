//! Computes proper-vertex counting polynomials three independent ways and
//! evaluates them at their known specialization points.

use num_bigint::BigInt;
use pvtrees::enumerate::{Family, DEFAULT_CEILING};
use pvtrees::identity::{poly_brute, poly_closed, poly_recurrence, special_values};

fn show(name: &str, p: &pvtrees::Poly<BigInt>) {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c} t"),
            _ => format!("{c} t^{i}"),
        })
        .collect();
    println!("  {name} = {}", terms.join(" + "));
}

fn main() {
    println!("forests on [4], with t marking proper vertices:");
    let closed = poly_closed(Family::Forest, 4, None).unwrap();
    let brute = poly_brute(Family::Forest, 4, None, DEFAULT_CEILING).unwrap();
    show("closed form  ", &closed);
    show("enumeration  ", &brute);
    assert_eq!(closed, brute);

    println!("\nternary trees on [4]:");
    let closed = poly_closed(Family::Kary, 4, Some(3)).unwrap();
    let rec = poly_recurrence(4, 3).unwrap();
    show("closed form  ", &closed);
    show("recurrence   ", &rec);
    assert_eq!(closed, rec);

    println!("\nspecialization checks at n = 6, k = 2:");
    for c in special_values(6, 2).unwrap().checks {
        assert!(c.pass());
        println!("  {} : {} = {}", c.name, c.expected, c.got);
    }
}
