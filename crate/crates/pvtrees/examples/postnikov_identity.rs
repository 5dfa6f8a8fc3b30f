//! Evaluates the hook-length identity
//!
//!   sum over binary trees B on [n] of n!/2^n prod_v (1 + 1/h(v)) = (n+1)^(n-1)
//!
//! shape by shape, in exact rational arithmetic.

use pvtrees::enumerate::gen_binary_shapes;
use pvtrees::identity::{cayley_count, rhs_expanded, rhs_postnikov, shape_contributions, shape_weight};

fn main() {
    println!("per-shape contributions at n = 3:");
    for shape in gen_binary_shapes(3) {
        let w = shape_weight(&shape, 3).unwrap();
        println!("  hooks {:?} contribute {w}", shape.hooks());
    }
    let total: Vec<String> = shape_contributions(3).iter().map(|w| w.to_string()).collect();
    println!("  total: {} = {}", total.join(" + "), rhs_postnikov(3));
    println!();

    println!("{:>3} {:>16} {:>16} {:>20}", "n", "sum", "(n+1)^(n-1)", "2^n (n+1)^(n-1)");
    for n in 1..=8 {
        let lhs = rhs_postnikov(n);
        let cayley = cayley_count(n);
        let expanded = rhs_expanded(n).unwrap();
        assert_eq!(lhs, cayley);
        println!("{n:>3} {lhs:>16} {cayley:>16} {expanded:>20}");
    }
    println!("\nboth forms agree exactly for n = 1..8");
}
