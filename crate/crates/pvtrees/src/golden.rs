//! Hand-built fixture structures used as golden vectors by the test suites
//! and examples: a 9-vertex colored binary tree whose simultaneous flip and
//! rotation images are known exactly.

use std::collections::BTreeMap;

use crate::trees::{Color, ColoredBinary, ColoredPlaneTree, LabeledTree, Label, PlaneTree, SlottedTree};

fn colors(pairs: &[(Label, Color)]) -> BTreeMap<Label, Color> {
    pairs.iter().copied().collect()
}

/// 9-vertex input to the simultaneous flip: root 3, white vertices {1, 9},
/// right-improper vertices {3, 6, 7}, left-improper {5}.
pub fn flip_input() -> ColoredBinary {
    use Color::*;
    let slots = BTreeMap::from([
        (3, vec![Some(7), Some(6)]),
        (7, vec![Some(4), Some(5)]),
        (6, vec![None, Some(1)]),
        (4, vec![None, None]),
        (5, vec![Some(2), Some(9)]),
        (1, vec![None, Some(8)]),
        (2, vec![None, None]),
        (9, vec![None, None]),
        (8, vec![None, None]),
    ]);
    let tree = SlottedTree::new(2, Some(3), slots).unwrap();
    ColoredBinary::new(
        tree,
        colors(&[
            (1, White),
            (2, Black),
            (3, Black),
            (4, Black),
            (5, Black),
            (6, Black),
            (7, Black),
            (8, Black),
            (9, White),
        ]),
    )
    .unwrap()
}

/// Image of [`flip_input`] under the simultaneous flip at its right-improper
/// vertices: root 3 white, every improper vertex left improper.
pub fn flip_output() -> ColoredBinary {
    use Color::*;
    let slots = BTreeMap::from([
        (3, vec![Some(6), Some(7)]),
        (6, vec![Some(1), None]),
        (7, vec![Some(5), Some(4)]),
        (1, vec![None, Some(8)]),
        (5, vec![Some(2), Some(9)]),
        (4, vec![None, None]),
        (8, vec![None, None]),
        (2, vec![None, None]),
        (9, vec![None, None]),
    ]);
    let tree = SlottedTree::new(2, Some(3), slots).unwrap();
    ColoredBinary::new(
        tree,
        colors(&[
            (1, White),
            (2, Black),
            (3, White),
            (4, Black),
            (5, Black),
            (6, White),
            (7, White),
            (8, Black),
            (9, White),
        ]),
    )
    .unwrap()
}

/// Image of [`flip_output`] under the binary-to-plane rotation: a bicolored
/// plane tree on [10] with black root 10 and root children (3, 7, 4).
pub fn rotation_output() -> ColoredPlaneTree {
    use Color::*;
    let children = BTreeMap::from([
        (10, vec![3, 7, 4]),
        (3, vec![6]),
        (6, vec![1, 8]),
        (7, vec![5, 9]),
        (5, vec![2]),
        (4, vec![]),
        (1, vec![]),
        (8, vec![]),
        (9, vec![]),
        (2, vec![]),
    ]);
    let tree = PlaneTree::new(10, children).unwrap();
    ColoredPlaneTree::new(
        tree,
        colors(&[
            (10, Black),
            (3, White),
            (7, White),
            (4, Black),
            (6, White),
            (5, Black),
            (9, White),
            (1, White),
            (8, Black),
            (2, Black),
        ]),
    )
    .unwrap()
}

/// Path rooted at the first label, each subsequent label a child of the
/// previous one.
pub fn path_tree(labels: &[Label]) -> LabeledTree {
    let mut parent: BTreeMap<Label, Option<Label>> = BTreeMap::new();
    for (i, &v) in labels.iter().enumerate() {
        parent.insert(v, if i == 0 { None } else { Some(labels[i - 1]) });
    }
    LabeledTree::new(parent).unwrap()
}
