//! Exact evaluation of the hook-product identity over binary shapes, the
//! labeling-count argument behind it, and the proper-vertex counting
//! polynomials with three independent computation routes (closed form,
//! exhaustive enumeration, root-decomposition recurrence).
//!
//! Everything here is exact big-integer or reduced-rational arithmetic; no
//! floating point appears anywhere.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::enumerate::{
    catalan, compositions, count, gen_binary_shapes, gen_labeled, shape_unrank, Family, ShapeIndex,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::trees::{BinaryShape, TreeLike};

pub type Rat = BigRational;
/// Integer polynomial in the proper-vertex marking variable t.
pub type PolyT = Poly<BigInt>;

pub fn big_factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact weight n!/2^n * prod_v (1 + 1/h(v)) of one unlabeled binary shape.
pub fn shape_weight(shape: &BinaryShape, n: usize) -> Result<Rat> {
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: shape.size(),
        });
    }
    let mut w = Rat::new(big_factorial(n), BigInt::from(2).pow(n as u32));
    for h in shape.hooks() {
        w *= Rat::one() + Rat::new(BigInt::one(), BigInt::from(h));
    }
    Ok(w)
}

/// Per-shape weights over all shapes of size n, in canonical shape order.
pub fn shape_contributions(n: usize) -> Vec<Rat> {
    gen_binary_shapes(n)
        .iter()
        .map(|s| shape_weight(s, n).unwrap())
        .collect()
}

/// Sum of [`shape_weight`] over all shapes of size n; equals (n+1)^(n-1).
pub fn rhs_postnikov(n: usize) -> Rat {
    shape_contributions(n).into_iter().sum()
}

/// Same sum, partitioned by shape rank ranges and reduced in parallel.
/// Exact rational reduction makes the result independent of partitioning.
pub fn rhs_postnikov_parallel(n: usize) -> Rat {
    let total = catalan(n)
        .to_u64()
        .expect("shape count exceeds u64; use a smaller n");
    let chunk = (total / 64).max(1);
    (0..total)
        .step_by(chunk as usize)
        .collect::<Vec<u64>>()
        .into_par_iter()
        .map(|start| {
            (start..(start + chunk).min(total))
                .map(|index| {
                    let shape = shape_unrank(ShapeIndex { n, index }).unwrap();
                    shape_weight(&shape, n).unwrap()
                })
                .sum::<Rat>()
        })
        .reduce(Rat::zero, |a, b| a + b)
}

/// The expanded form: sum over shapes of n! * prod_v (1 + 1/h(v)), proved
/// integral and equal to 2^n (n+1)^(n-1). Returns an internal error if the
/// exact rational sum fails to reduce to an integer.
pub fn rhs_expanded(n: usize) -> Result<BigInt> {
    let mut sum = Rat::zero();
    for shape in gen_binary_shapes(n) {
        let mut w = Rat::from_integer(big_factorial(n));
        for h in shape.hooks() {
            w *= Rat::one() + Rat::new(BigInt::one(), BigInt::from(h));
        }
        sum += w;
    }
    if !sum.is_integer() {
        return Err(Error::Internal(format!(
            "expanded hook sum is non-integral: {sum}"
        )));
    }
    Ok(sum.to_integer())
}

/// Literal subset-sum evaluation of the expanded form: for each shape, sum
/// over every vertex subset of n! * prod over the subset of 1/h(v). Kept as
/// an independent cross-check of the product expansion at small n.
pub fn rhs_expanded_subset_sum(n: usize) -> Result<Rat> {
    if n > 20 {
        return Err(Error::CeilingExceeded {
            family: "binary shape subsets".into(),
            n,
            count: format!("2^{n} subsets per shape"),
            ceiling: 1 << 20,
        });
    }
    let nf = Rat::from_integer(big_factorial(n));
    let mut sum = Rat::zero();
    for shape in gen_binary_shapes(n) {
        let hooks = shape.hooks();
        for mask in 0u64..(1 << n) {
            let mut term = nf.clone();
            for (i, &h) in hooks.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    term *= Rat::new(BigInt::one(), BigInt::from(h));
                }
            }
            sum += term;
        }
    }
    Ok(sum)
}

/// Number of labelings of `shape` whose proper set contains `alpha`, where
/// `alpha` is a set of preorder vertex positions: n! / prod_{v in alpha} h(v).
/// The division is always exact; a remainder indicates a bug.
pub fn labeling_count(shape: &BinaryShape, alpha: &BTreeSet<usize>) -> Result<BigInt> {
    let hooks = shape.hooks();
    let n = hooks.len();
    if let Some(&bad) = alpha.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidVertex(bad as u32));
    }
    let mut denom = BigInt::one();
    for &v in alpha {
        denom *= BigInt::from(hooks[v]);
    }
    let numer = big_factorial(n);
    let (q, r) = num_integer::div_rem(numer, denom);
    if !r.is_zero() {
        return Err(Error::Internal(
            "hook product does not divide n!; this is a bug".into(),
        ));
    }
    Ok(q)
}

// ---------------------------------------------------------------------------
// Proper-vertex polynomials
// ---------------------------------------------------------------------------

fn linear(a: i64, b: i64) -> PolyT {
    // b + a t
    Poly::new(vec![BigInt::from(b), BigInt::from(a)])
}

/// Closed-form proper-vertex polynomial of a family on [n].
pub fn poly_closed(family: Family, n: usize, k: Option<usize>) -> Result<PolyT> {
    if n == 0 {
        // the empty forest (of any kind) exists with no proper vertex; there
        // is no tree on zero vertices
        return Ok(match family {
            Family::Tree | Family::PlaneTree => Poly::zero(),
            _ => Poly::one(),
        });
    }
    let t = PolyT::x();
    Ok(match family {
        Family::Binary | Family::Kary => {
            let k = family.arity(k)? as i64;
            let n = n as i64;
            (1..n).fold(t, |acc, i| acc.mul(&linear(k * i - i + 1, k * (n - i))))
        }
        Family::Forest => {
            let n = n as i64;
            (1..n).fold(t, |acc, i| acc.mul(&linear(i + 1, n - i)))
        }
        Family::PlaneForest => {
            let n = n as i64;
            (1..n).fold(t, |acc, i| acc.mul(&linear(2 * i + 1, n - i)))
        }
        Family::Tree => {
            let m = n as i64 - 1;
            (0..m).fold(t, |acc, i| acc.mul(&linear(i + 1, m - i)))
        }
        Family::PlaneTree => {
            let m = n as i64 - 1;
            (0..m).fold(t, |acc, i| acc.mul(&linear(2 * i + 1, m - i)))
        }
    })
}

/// Proper-vertex polynomial by exhaustive enumeration: sum of t^pv over every
/// member of the family on [n]. Independent oracle for [`poly_closed`].
pub fn poly_brute(family: Family, n: usize, k: Option<usize>, ceiling: u64) -> Result<PolyT> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for s in gen_labeled(family, n, k, ceiling)? {
        let pv = match &s {
            crate::enumerate::Structure::Tree(t) => t.pv(),
            crate::enumerate::Structure::Forest(f) => f.pv(),
            crate::enumerate::Structure::PlaneTree(t) => t.pv(),
            crate::enumerate::Structure::PlaneForest(f) => f.pv(),
            crate::enumerate::Structure::Slotted(t) => t.pv(),
        };
        coeffs[pv] += 1;
    }
    Ok(Poly::new(coeffs))
}

fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    let mut denom = BigInt::one();
    for &p in parts {
        denom *= big_factorial(p);
    }
    big_factorial(n) / denom
}

/// k-ary proper-vertex polynomial via the root-decomposition recurrence:
/// a third route independent of both the closed form and enumeration.
pub fn poly_recurrence(n: usize, k: usize) -> Result<PolyT> {
    if k < 2 {
        return Err(Error::InvalidStructure(format!("arity k must be >= 2, got {k}")));
    }
    let t = PolyT::x();
    let mut a: Vec<PolyT> = vec![Poly::one()];
    for m in 0..n {
        // a_{m+1} from a_0..a_m by deleting the root's edges. Either the
        // smallest vertex sits in one of the k subtrees (root improper) or it
        // is the root itself (root proper, weight t).
        let mut next = Poly::zero();
        if m >= 1 {
            for i in 0..k {
                for comp in compositions(m - 1, k) {
                    // the singleton block picks the root's label from the m
                    // labels other than 1; vertex 1 itself lands in subtree i
                    let mut coeff_parts = vec![1usize];
                    coeff_parts.extend(&comp);
                    let mut parts = comp.clone();
                    parts[i] += 1;
                    let mut term = Poly::constant(multinomial(m, &coeff_parts));
                    for &p in &parts {
                        term = term.mul(&a[p]);
                    }
                    next = next.add(&term);
                }
            }
        }
        for comp in compositions(m, k) {
            let mut term = Poly::constant(multinomial(m, &comp));
            for &p in &comp {
                term = term.mul(&a[p]);
            }
            next = next.add(&term.mul(&t));
        }
        a.push(next);
    }
    Ok(a.pop().unwrap())
}

// ---------------------------------------------------------------------------
// Specialization report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SpecialCheck {
    pub name: String,
    pub expected: BigInt,
    pub got: BigInt,
}

impl SpecialCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Debug, Clone)]
pub struct SpecialReport {
    pub n: usize,
    pub k: usize,
    pub checks: Vec<SpecialCheck>,
}

impl SpecialReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(SpecialCheck::pass)
    }
}

/// Evaluates every closed-form polynomial at its known specialization points
/// and compares against the independent closed-form counts.
pub fn special_values(n: usize, k: usize) -> Result<SpecialReport> {
    let mut checks = Vec::new();
    let eval = |family: Family, m: usize, kk: Option<usize>, at: i64| -> Result<BigInt> {
        Ok(poly_closed(family, m, kk)?.eval(&BigInt::from(at)))
    };
    let to_int = |u: num_bigint::BigUint| BigInt::from(u);

    checks.push(SpecialCheck {
        name: format!("a_{n}(1) = kn(kn-1)...(kn-n+2) with k={k}"),
        expected: to_int(count(Family::Kary, n, Some(k))?),
        got: eval(Family::Kary, n, Some(k), 1)?,
    });
    if k == 2 {
        checks.push(SpecialCheck {
            name: format!("a_{n}(2) = 2^n (n+1)^(n-1) at k=2"),
            expected: BigInt::from(2).pow(n as u32)
                * BigInt::from(n as i64 + 1).pow(n.saturating_sub(1) as u32),
            got: eval(Family::Binary, n, None, 2)?,
        });
    }
    checks.push(SpecialCheck {
        name: format!("f_{n}(1) = (n+1)^(n-1)"),
        expected: to_int(count(Family::Forest, n, None)?),
        got: eval(Family::Forest, n, None, 1)?,
    });
    checks.push(SpecialCheck {
        name: format!("p_{n}(1) = n! C_n"),
        expected: to_int(count(Family::PlaneForest, n, None)?),
        got: eval(Family::PlaneForest, n, None, 1)?,
    });
    checks.push(SpecialCheck {
        name: format!("tree polynomial on [{}] at t=1 = (n+1)^n", n + 1),
        expected: to_int(count(Family::Tree, n + 1, None)?),
        got: eval(Family::Tree, n + 1, None, 1)?,
    });
    checks.push(SpecialCheck {
        name: format!("plane tree polynomial on [{}] at t=1 = (n+1)! C_n", n + 1),
        expected: to_int(count(Family::PlaneTree, n + 1, None)?),
        got: eval(Family::PlaneTree, n + 1, None, 1)?,
    });
    Ok(SpecialReport { n, k, checks })
}

/// (n+1)^(n-1) as an exact rational, for comparisons with [`rhs_postnikov`].
pub fn cayley_count(n: usize) -> Rat {
    Rat::from_integer(BigInt::from(n as i64 + 1).pow(n.saturating_sub(1) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::enumerate::DEFAULT_CEILING;
    use itertools::Itertools;

    #[test]
    fn shape_weights_n3() {
        let ws: Vec<String> = shape_contributions(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["3", "3", "4", "3", "3"]);
        assert_eq!(rhs_postnikov(3), rat(16));
    }

    #[test]
    fn shape_weight_single_vertex() {
        assert_eq!(shape_weight(&BinaryShape::leaf(), 1).unwrap(), rat(1));
        assert!(shape_weight(&BinaryShape::leaf(), 2).is_err());
    }

    #[test]
    fn postnikov_matches_cayley() {
        for n in 1..=8 {
            assert_eq!(rhs_postnikov(n), cayley_count(n), "n = {n}");
        }
        assert_eq!(rhs_postnikov(8), rat(4782969)); // 9^7
    }

    #[test]
    fn parallel_sum_agrees() {
        for n in 1..=8 {
            assert_eq!(rhs_postnikov_parallel(n), rhs_postnikov(n));
        }
    }

    #[test]
    fn expanded_identity() {
        assert_eq!(rhs_expanded(1).unwrap(), BigInt::from(2));
        assert_eq!(rhs_expanded(3).unwrap(), BigInt::from(128));
        assert_eq!(rhs_expanded(5).unwrap(), BigInt::from(41472));
        for n in 1..=5 {
            assert_eq!(
                rhs_expanded_subset_sum(n).unwrap(),
                Rat::from_integer(rhs_expanded(n).unwrap())
            );
        }
    }

    #[test]
    fn labeling_count_examples() {
        let left_comb = BinaryShape::node(
            BinaryShape::node(BinaryShape::leaf(), BinaryShape::Empty),
            BinaryShape::Empty,
        );
        assert_eq!(
            labeling_count(&left_comb, &BTreeSet::from([0, 1, 2])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            labeling_count(&left_comb, &BTreeSet::new()).unwrap(),
            BigInt::from(6)
        );
        // root alone: n!/n
        assert_eq!(
            labeling_count(&left_comb, &BTreeSet::from([0])).unwrap(),
            BigInt::from(2)
        );
    }

    /// Brute-force count of labelings whose proper set contains the given
    /// preorder positions; independent of the hook-quotient formula.
    fn labeling_count_brute(shape: &BinaryShape, alpha: &BTreeSet<usize>) -> BigInt {
        let n = shape.size();
        let labels: Vec<u32> = (1..=n as u32).collect();
        let mut count = 0u64;
        for perm in labels.iter().copied().permutations(n) {
            let tree = shape.label_preorder(&perm).unwrap();
            let proper: BTreeSet<usize> = (0..n)
                .filter(|&i| tree.is_proper(perm[i]).unwrap())
                .collect();
            if alpha.is_subset(&proper) {
                count += 1;
            }
        }
        BigInt::from(count)
    }

    #[test]
    fn labeling_count_matches_brute_force() {
        for n in 1..=4 {
            for shape in gen_binary_shapes(n) {
                for mask in 0u32..(1 << n) {
                    let alpha: BTreeSet<usize> =
                        (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    assert_eq!(
                        labeling_count(&shape, &alpha).unwrap(),
                        labeling_count_brute(&shape, &alpha)
                    );
                }
            }
        }
    }

    fn p(cs: &[i64]) -> PolyT {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(poly_closed(Family::Forest, 2, None).unwrap(), p(&[0, 1, 2]));
        assert_eq!(poly_closed(Family::Binary, 2, None).unwrap(), p(&[0, 2, 2]));
        assert_eq!(
            poly_closed(Family::PlaneForest, 2, None).unwrap(),
            p(&[0, 1, 3])
        );
        assert_eq!(poly_closed(Family::Kary, 1, Some(2)).unwrap(), p(&[0, 1]));
        assert_eq!(poly_closed(Family::Forest, 0, None).unwrap(), Poly::one());
    }

    #[test]
    fn brute_force_matches_closed_small() {
        for n in 0..=4 {
            for (family, k) in [
                (Family::Forest, None),
                (Family::PlaneForest, None),
                (Family::Binary, None),
                (Family::Kary, Some(3)),
            ] {
                let brute = poly_brute(family, n, k, DEFAULT_CEILING).unwrap();
                if n == 0 && matches!(family, Family::Forest | Family::PlaneForest) {
                    // the empty structure has pv = 0
                    assert_eq!(brute, Poly::one());
                }
                if n >= 1 {
                    assert_eq!(brute, poly_closed(family, n, k).unwrap(), "{family:?} n={n}");
                }
            }
            if n >= 1 {
                for family in [Family::Tree, Family::PlaneTree] {
                    assert_eq!(
                        poly_brute(family, n, None, DEFAULT_CEILING).unwrap(),
                        poly_closed(family, n, None).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn recurrence_matches_closed() {
        assert_eq!(poly_recurrence(0, 2).unwrap(), Poly::one());
        assert_eq!(poly_recurrence(1, 3).unwrap(), p(&[0, 1]));
        for k in 2..=4 {
            for n in 0..=6 {
                assert_eq!(
                    poly_recurrence(n, k).unwrap(),
                    poly_closed(Family::Kary, n, Some(k)).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn degree_and_top_coefficient() {
        for n in 1..=6 {
            let f = poly_closed(Family::Forest, n, None).unwrap();
            assert_eq!(f.degree(), Some(n));
            assert!(f.coeff(n).is_positive());
        }
    }

    #[test]
    fn special_value_report() {
        for n in 1..=6 {
            let report = special_values(n, 2).unwrap();
            assert!(report.all_pass(), "{:?}", report);
            let report = special_values(n, 3).unwrap();
            assert!(report.all_pass(), "{:?}", report);
        }
        let r6 = special_values(6, 2).unwrap();
        let f6 = r6.checks.iter().find(|c| c.name.starts_with("f_6")).unwrap();
        assert_eq!(f6.got, BigInt::from(16807)); // 7^5
    }
}
