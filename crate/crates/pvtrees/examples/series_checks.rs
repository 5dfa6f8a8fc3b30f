//! Verifies the generating-function equations satisfied by the proper-vertex
//! polynomials: an algebraic ODE symbolically in t, and a functional equation
//! against the rooted-tree series at integer specializations of t.

use pvtrees::enumerate::Family;
use pvtrees::error::Error;
use pvtrees::series::{build_series, check_functional, check_ode};

fn main() {
    let families: &[(Family, Option<usize>)] = &[
        (Family::Binary, None),
        (Family::Kary, Some(3)),
        (Family::Forest, None),
        (Family::PlaneForest, None),
    ];

    println!("EGF of forests, low-order coefficients (polynomials in t):");
    let s = build_series(Family::Forest, 4, None).unwrap();
    for i in 0..=4 {
        let cs: Vec<String> = s.coeff(i).coeffs().iter().map(|c| c.to_string()).collect();
        println!("  [x^{i}] = [{}]", cs.join(", "));
    }

    println!("\nODE checks to order 10 (symbolic in t):");
    for &(f, k) in families {
        assert!(check_ode(f, 10, k).unwrap().passed());
        println!("  {} : pass", f.name());
    }

    println!("\nfunctional equation at integer t, order 8:");
    for &(f, k) in families {
        let mut passed = Vec::new();
        let mut skipped = Vec::new();
        for t0 in -3..=5 {
            match check_functional(f, 8, t0, k) {
                Ok(outcome) => {
                    assert!(outcome.passed());
                    passed.push(t0);
                }
                Err(Error::DegenerateExponent { .. }) => skipped.push(t0),
                Err(e) => panic!("{e}"),
            }
        }
        println!("  {} : pass at t0 = {passed:?}, degenerate at {skipped:?}", f.name());
    }

    println!("\nat t = 1 the plane-forest series solves the Catalan equation B = 1 + x B^2");
    assert!(check_functional(Family::PlaneForest, 8, 1, None).unwrap().passed());
}
