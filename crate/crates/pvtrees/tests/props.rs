//! Randomized invariant checks over the structures and maps.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use pvtrees::bijection::{
    big_flip, big_flip_inv, flip_at, full_map, full_map_inv, gamma, gamma_inv, is_in_dn, is_in_en,
    phi, phi_inv,
};
use pvtrees::enumerate::{catalan, shape_unrank, ShapeIndex, Structure};
use pvtrees::record::{decode, encode};
use pvtrees::trees::{Color, Colored, ColoredBinary, Forest, Label, TreeLike};

/// Random forest on [n]: vertices are attached in a shuffled order, each to a
/// uniformly chosen earlier vertex or to the ground.
fn forest_strategy(max_n: usize) -> impl Strategy<Value = Forest> {
    (1..=max_n).prop_flat_map(|n| {
        let labels: Vec<Label> = (1..=n as Label).collect();
        (
            Just(labels).prop_shuffle(),
            proptest::collection::vec(any::<proptest::sample::Index>(), n),
        )
            .prop_map(|(order, picks)| {
                let mut parent: BTreeMap<Label, Option<Label>> = BTreeMap::new();
                for (i, &v) in order.iter().enumerate() {
                    // i + 1 options: the i vertices placed so far, or a root
                    let pick = picks[i].index(i + 1);
                    parent.insert(v, (pick < i).then(|| order[pick]));
                }
                Forest::new(parent).unwrap()
            })
    })
}

/// Random bicolored binary tree on [n]: uniform shape rank, shuffled labels
/// in preorder, independent colors.
fn colored_binary_strategy(max_n: usize) -> impl Strategy<Value = ColoredBinary> {
    (1..=max_n).prop_flat_map(|n| {
        let shapes = catalan(n).to_u64().unwrap();
        let labels: Vec<Label> = (1..=n as Label).collect();
        (Just(n), 0..shapes, Just(labels).prop_shuffle(), 0u64..(1u64 << n)).prop_map(
            |(n, index, labels, mask)| {
                let shape = shape_unrank(ShapeIndex { n, index }).unwrap();
                let tree = shape.label_preorder(&labels).unwrap();
                let colors = tree
                    .vertices()
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| {
                        (v, if mask >> i & 1 == 1 { Color::White } else { Color::Black })
                    })
                    .collect();
                Colored::new(tree, colors).unwrap()
            },
        )
    })
}

/// Projects an arbitrary bicolored binary tree into the all-improper-black
/// set by blackening its improper vertices.
fn blacken_improper(mut b: ColoredBinary) -> ColoredBinary {
    for v in b.structure.vertices() {
        if !b.structure.is_proper(v).unwrap() {
            b.colors.insert(v, Color::Black);
        }
    }
    b
}

proptest! {
    #[test]
    fn proper_vertices_carry_subtree_minimum(f in forest_strategy(9)) {
        let proper = f.proper_set();
        for v in f.vertices() {
            prop_assert_eq!(proper.contains(&v), f.subtree_min(v).unwrap() == v);
            prop_assert!(f.hook(v).unwrap() >= 1);
        }
        // roots of each component are counted by their component minima
        prop_assert_eq!(f.pv(), proper.len());
        prop_assert!(f.roots().iter().map(|&r| f.hook(r).unwrap()).sum::<usize>() == f.len());
    }

    #[test]
    fn root_deletion_roundtrips(f in forest_strategy(8)) {
        let t = gamma_inv(&f).unwrap();
        prop_assert_eq!(t.len(), f.len() + 1);
        prop_assert_eq!(gamma(&t).unwrap(), f);
    }

    #[test]
    fn flip_is_an_involution(b in colored_binary_strategy(7), pick in any::<proptest::sample::Index>()) {
        let verts = b.structure.vertices();
        let v = verts[pick.index(verts.len())];
        let once = flip_at(&b, v).unwrap();
        prop_assert_eq!(once.color_of(v).unwrap(), b.color_of(v).unwrap().toggled());
        prop_assert_eq!(flip_at(&once, v).unwrap(), b.clone());

        // flipping permutes subtrees: the hook multiset is unchanged
        let mut before: Vec<usize> = verts.iter().map(|&u| b.structure.hook(u).unwrap()).collect();
        let mut after: Vec<usize> = verts.iter().map(|&u| once.structure.hook(u).unwrap()).collect();
        before.sort_unstable();
        after.sort_unstable();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn big_flip_roundtrips_from_dn(b in colored_binary_strategy(7)) {
        let d = blacken_improper(b);
        prop_assert!(is_in_dn(&d));
        let e = big_flip(&d).unwrap();
        prop_assert!(is_in_en(&e));
        prop_assert_eq!(big_flip_inv(&e).unwrap(), d);
    }

    #[test]
    fn rotation_roundtrips(b in colored_binary_strategy(7)) {
        let q = phi(&b).unwrap();
        prop_assert_eq!(q.structure.len(), b.structure.len() + 1);
        prop_assert_eq!(phi_inv(&q).unwrap(), b);
    }

    #[test]
    fn full_map_roundtrips_and_preserves_white_count(b in colored_binary_strategy(7)) {
        let d = blacken_improper(b);
        let f = full_map(&d).unwrap();
        prop_assert_eq!(f.structure.len(), d.structure.len());
        prop_assert_eq!(full_map_inv(&f).unwrap(), d.clone());
        // white vertices in the image = white vertices of the input plus the
        // flipped right-improper set, which was all black in Dn
        let whites_in = d.colors.values().filter(|&&c| c == Color::White).count();
        let whites_out = f.colors.values().filter(|&&c| c == Color::White).count();
        prop_assert!(whites_out >= whites_in);
    }

    #[test]
    fn records_roundtrip(f in forest_strategy(9), b in colored_binary_strategy(7)) {
        let rec = encode(&Structure::Forest(f.clone()), None).unwrap();
        let (back, _) = decode(&rec).unwrap();
        prop_assert_eq!(back, Structure::Forest(f));

        let rec = encode(&Structure::Slotted(b.structure.clone()), Some(&b.colors)).unwrap();
        let (back, colors) = decode(&rec).unwrap();
        prop_assert_eq!(back, Structure::Slotted(b.structure));
        prop_assert_eq!(colors.unwrap(), b.colors);
    }
}
