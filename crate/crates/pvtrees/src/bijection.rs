//! The maps between colored binary trees and bicolored forests: the single
//! flip, the simultaneous flip at all right-improper vertices, the
//! binary-to-plane rotation and its restriction, the root-deletion maps, and
//! the full composite with its inverse. Membership predicates for the four
//! constrained sets are implemented directly from their definitions,
//! independently of the maps, so bijection tests are not circular.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::trees::{
    Color, Colored, ColoredBinary, ColoredForest, ColoredPlaneTree, ColoredTree, Forest, Label,
    LabeledTree, PlaneForest, PlaneTree, Side, SlottedTree, TreeLike,
};

/// Name of one of the exposed maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Gamma,
    GammaBar,
    FlipAt,
    BigFlip,
    Phi,
    Full,
}

impl MapName {
    pub fn parse(s: &str) -> Result<MapName> {
        match s {
            "gamma" => Ok(MapName::Gamma),
            "gamma_bar" => Ok(MapName::GammaBar),
            "flip_at" | "flip" => Ok(MapName::FlipAt),
            "big_flip" => Ok(MapName::BigFlip),
            "phi" => Ok(MapName::Phi),
            "full" => Ok(MapName::Full),
            other => Err(Error::UnsupportedFamily(format!("map {other}"))),
        }
    }
}

/// True when the vertex set is exactly {1, ..., n}.
fn on_initial_segment<T: TreeLike>(t: &T) -> bool {
    t.vertices()
        .iter()
        .enumerate()
        .all(|(i, &v)| v == i as Label + 1)
}

// ---------------------------------------------------------------------------
// Membership predicates
// ---------------------------------------------------------------------------

/// Bicolored binary tree on [n] with every improper vertex black.
pub fn is_in_dn(b: &ColoredBinary) -> bool {
    b.structure.k() == 2
        && on_initial_segment(&b.structure)
        && b.structure.vertices().into_iter().all(|v| {
            b.structure.is_proper(v).unwrap() || b.colors[&v] == Color::Black
        })
}

/// Bicolored binary tree on [n] with every improper vertex left improper.
pub fn is_in_en(b: &ColoredBinary) -> bool {
    b.structure.k() == 2
        && on_initial_segment(&b.structure)
        && b.structure.vertices().into_iter().all(|v| {
            b.structure.is_proper(v).unwrap()
                || b.structure.improper_side(v).unwrap() == Side::Left
        })
}

/// Bicolored plane tree on [n+1] whose root is n+1 colored black.
pub fn is_in_qn(q: &ColoredPlaneTree) -> bool {
    let n1 = q.structure.len() as Label;
    n1 >= 1
        && on_initial_segment(&q.structure)
        && q.structure.root() == n1
        && q.colors[&n1] == Color::Black
}

/// Member of Qn whose sibling subtree minima strictly increase at every
/// vertex.
pub fn is_in_gn(q: &ColoredPlaneTree) -> bool {
    is_in_qn(q)
        && q.structure.vertices().into_iter().all(|v| {
            let cs = q.structure.children_of(v);
            cs.windows(2).all(|w| {
                q.structure.subtree_min(w[0]).unwrap() < q.structure.subtree_min(w[1]).unwrap()
            })
        })
}

// ---------------------------------------------------------------------------
// gamma and gamma-bar: root deletion
// ---------------------------------------------------------------------------

fn require_top_root<T: TreeLike>(t: &T, root: Label) -> Result<()> {
    let n1 = t.len() as Label;
    if !on_initial_segment(t) {
        return Err(Error::InvalidStructure(
            "structure is not labeled by an initial segment".into(),
        ));
    }
    if root != n1 {
        return Err(Error::Membership {
            set: "trees rooted at the top label",
            reason: format!("root must be {n1}, found {root}"),
        });
    }
    Ok(())
}

/// Deletes the root n+1 of a tree on [n+1], making its children roots.
pub fn gamma(t: &LabeledTree) -> Result<Forest> {
    require_top_root(t, t.root())?;
    let root = t.root();
    let parent = t
        .as_forest()
        .parent_map()
        .iter()
        .filter(|(&v, _)| v != root)
        .map(|(&v, &p)| (v, p.filter(|&p| p != root)))
        .collect();
    Forest::new(parent)
}

/// Reattaches every root of a forest on [n] as a child of a new root n+1.
pub fn gamma_inv(f: &Forest) -> Result<LabeledTree> {
    if !on_initial_segment(f) {
        return Err(Error::InvalidStructure(
            "forest is not labeled by an initial segment".into(),
        ));
    }
    let n1 = f.len() as Label + 1;
    let mut parent: BTreeMap<Label, Option<Label>> = f
        .parent_map()
        .iter()
        .map(|(&v, &p)| (v, p.or(Some(n1))))
        .collect();
    parent.insert(n1, None);
    LabeledTree::new(parent)
}

/// Colored [`gamma`]: the deleted root must be black; remaining colors are
/// preserved.
pub fn gamma_colored(t: &ColoredTree) -> Result<ColoredForest> {
    let root = t.structure.root();
    if t.color_of(root)? != Color::Black {
        return Err(Error::Membership {
            set: "Gn",
            reason: format!("root {root} must be black"),
        });
    }
    let forest = gamma(&t.structure)?;
    let colors = t
        .colors
        .iter()
        .filter(|(&v, _)| v != root)
        .map(|(&v, &c)| (v, c))
        .collect();
    Colored::new(forest, colors)
}

/// Colored inverse of [`gamma`]: the new root n+1 is black.
pub fn gamma_colored_inv(f: &ColoredForest) -> Result<ColoredTree> {
    let tree = gamma_inv(&f.structure)?;
    let mut colors = f.colors.clone();
    colors.insert(tree.root(), Color::Black);
    Colored::new(tree, colors)
}

/// Plane version of root deletion: the descendant subtrees of the root's
/// children, in child order.
pub fn gamma_bar(p: &PlaneTree) -> Result<PlaneForest> {
    require_top_root(p, p.root())?;
    let trees = p
        .children_of(p.root())
        .into_iter()
        .map(|c| p.subtree(c))
        .collect::<Result<Vec<_>>>()?;
    PlaneForest::new(trees)
}

/// Prepends a root n+1 whose ordered children are the forest's tree roots.
pub fn gamma_bar_inv(pf: &PlaneForest) -> Result<PlaneTree> {
    if !on_initial_segment(pf) {
        return Err(Error::InvalidStructure(
            "plane forest is not labeled by an initial segment".into(),
        ));
    }
    let n1 = pf.len() as Label + 1;
    let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    children.insert(n1, pf.roots());
    for t in pf.trees() {
        for v in t.vertices() {
            children.insert(v, t.children_of(v));
        }
    }
    PlaneTree::new(n1, children)
}

// ---------------------------------------------------------------------------
// Flips
// ---------------------------------------------------------------------------

/// Swaps the two subtrees under `v` and toggles the color of `v`.
pub fn flip_at(b: &ColoredBinary, v: Label) -> Result<ColoredBinary> {
    flip_simultaneous(b, &BTreeSet::from([v]))
}

/// Applies the flip at every vertex of `at` in one pass. Flips at distinct
/// vertices commute, so the result does not depend on any ordering.
pub fn flip_simultaneous(b: &ColoredBinary, at: &BTreeSet<Label>) -> Result<ColoredBinary> {
    if b.structure.k() != 2 {
        return Err(Error::InvalidStructure("flips act on binary trees".into()));
    }
    for &v in at {
        if !b.structure.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
    }
    let mut slots = BTreeMap::new();
    for v in b.structure.vertices() {
        let row = b.structure.slots_of(v)?;
        let row = if at.contains(&v) {
            vec![row[1], row[0]]
        } else {
            row.to_vec()
        };
        slots.insert(v, row);
    }
    let tree = SlottedTree::new(2, b.structure.root(), slots)?;
    let colors = b
        .colors
        .iter()
        .map(|(&v, &c)| (v, if at.contains(&v) { c.toggled() } else { c }))
        .collect();
    Colored::new(tree, colors)
}

/// Right-improper vertices of a binary tree.
pub fn right_improper_set(b: &SlottedTree) -> Result<BTreeSet<Label>> {
    let mut out = BTreeSet::new();
    for v in b.vertices() {
        if !b.is_proper(v)? && b.improper_side(v)? == Side::Right {
            out.insert(v);
        }
    }
    Ok(out)
}

/// White-colored improper vertices of a bicolored binary tree.
pub fn white_improper_set(b: &ColoredBinary) -> Result<BTreeSet<Label>> {
    let mut out = BTreeSet::new();
    for v in b.structure.vertices() {
        if !b.structure.is_proper(v)? && b.colors[&v] == Color::White {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Simultaneous flip at all right-improper vertices; maps Dn onto En.
pub fn big_flip(d: &ColoredBinary) -> Result<ColoredBinary> {
    if !is_in_dn(d) {
        return Err(Error::Membership {
            set: "Dn",
            reason: "an improper vertex is white or the labeling is not [n]".into(),
        });
    }
    flip_simultaneous(d, &right_improper_set(&d.structure)?)
}

/// Simultaneous flip at all white improper vertices; inverse of [`big_flip`].
pub fn big_flip_inv(e: &ColoredBinary) -> Result<ColoredBinary> {
    if !is_in_en(e) {
        return Err(Error::Membership {
            set: "En",
            reason: "an improper vertex is right improper or the labeling is not [n]".into(),
        });
    }
    flip_simultaneous(e, &white_improper_set(e)?)
}

// ---------------------------------------------------------------------------
// phi: binary <-> plane rotation
// ---------------------------------------------------------------------------

/// Chain v, right(v), right(right(v)), ... starting at an optional vertex.
fn right_chain(b: &SlottedTree, start: Option<Label>) -> Result<Vec<Label>> {
    let mut out = Vec::new();
    let mut cur = start;
    while let Some(v) = cur {
        out.push(v);
        cur = b.right(v)?;
    }
    Ok(out)
}

/// Rotation from bicolored binary trees on [n] to bicolored plane trees on
/// [n+1] with black root n+1: the root of the input becomes the first child
/// of the new root, left children become first children, right children
/// become right siblings, colors carry over. Defined for the empty input,
/// which maps to the single-vertex output.
pub fn phi(b: &ColoredBinary) -> Result<ColoredPlaneTree> {
    if b.structure.k() != 2 {
        return Err(Error::InvalidStructure("phi acts on binary trees".into()));
    }
    if !on_initial_segment(&b.structure) {
        return Err(Error::InvalidStructure(
            "binary tree is not labeled by an initial segment".into(),
        ));
    }
    let n1 = b.structure.len() as Label + 1;
    let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    children.insert(n1, right_chain(&b.structure, b.structure.root())?);
    for v in b.structure.vertices() {
        children.insert(v, right_chain(&b.structure, b.structure.left(v)?)?);
    }
    let tree = PlaneTree::new(n1, children)?;
    let mut colors = b.colors.clone();
    colors.insert(n1, Color::Black);
    Colored::new(tree, colors)
}

/// Inverse rotation; rejects inputs whose root is not a black n+1.
pub fn phi_inv(q: &ColoredPlaneTree) -> Result<ColoredBinary> {
    if !is_in_qn(q) {
        return Err(Error::Membership {
            set: "Qn",
            reason: "root must be the black top label n+1 on vertex set [n+1]".into(),
        });
    }
    let root = q.structure.root();
    let mut slots: BTreeMap<Label, Vec<Option<Label>>> = q
        .structure
        .vertices()
        .into_iter()
        .filter(|&v| v != root)
        .map(|v| (v, vec![None, None]))
        .collect();
    for v in q.structure.vertices() {
        let cs = q.structure.children_of(v);
        if v != root {
            if let Some(&first) = cs.first() {
                slots.get_mut(&v).unwrap()[0] = Some(first);
            }
        }
        for w in cs.windows(2) {
            slots.get_mut(&w[0]).unwrap()[1] = Some(w[1]);
        }
    }
    let b_root = q.structure.children_of(root).first().copied();
    let tree = SlottedTree::new(2, b_root, slots)?;
    let colors = q
        .colors
        .iter()
        .filter(|(&v, _)| v != root)
        .map(|(&v, &c)| (v, c))
        .collect();
    Colored::new(tree, colors)
}

/// [`phi`] restricted to En; the image always lies in Gn.
pub fn restricted_phi(e: &ColoredBinary) -> Result<ColoredPlaneTree> {
    if !is_in_en(e) {
        return Err(Error::Membership {
            set: "En",
            reason: "an improper vertex is right improper or the labeling is not [n]".into(),
        });
    }
    let q = phi(e)?;
    if !is_in_gn(&q) {
        return Err(Error::Internal(
            "rotation of an En member left Gn; this is a bug".into(),
        ));
    }
    Ok(q)
}

/// Inverse of [`restricted_phi`]; rejects inputs outside Gn.
pub fn restricted_phi_inv(g: &ColoredPlaneTree) -> Result<ColoredBinary> {
    if !is_in_gn(g) {
        return Err(Error::Membership {
            set: "Gn",
            reason: "sibling subtree minima must strictly increase".into(),
        });
    }
    let e = phi_inv(g)?;
    if !is_in_en(&e) {
        return Err(Error::Internal(
            "inverse rotation of a Gn member left En; this is a bug".into(),
        ));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// The full composite and its inverse
// ---------------------------------------------------------------------------

/// Orders the children of every vertex by ascending subtree minimum; this is
/// the unique plane refinement of a tree that satisfies the Gn sibling
/// condition.
pub fn order_children_by_min(t: &LabeledTree) -> PlaneTree {
    let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for v in t.vertices() {
        let mut cs = t.children_of(v);
        cs.sort_by_key(|&c| t.subtree_min(c).unwrap());
        children.insert(v, cs);
    }
    PlaneTree::new(t.root(), children).expect("reordering preserves validity")
}

/// The composite map from Dn to bicolored forests on [n]: simultaneous flip,
/// then rotation, then root deletion.
pub fn full_map(d: &ColoredBinary) -> Result<ColoredForest> {
    let e = big_flip(d)?;
    let q = restricted_phi(&e)?;
    let t = Colored::new(q.structure.forget_order(), q.colors)?;
    gamma_colored(&t)
}

/// Inverse of [`full_map`]: root attachment, canonical plane refinement,
/// inverse rotation, inverse flip.
pub fn full_map_inv(f: &ColoredForest) -> Result<ColoredBinary> {
    let t = gamma_colored_inv(f)?;
    let q = Colored::new(order_children_by_min(&t.structure), t.colors)?;
    let e = restricted_phi_inv(&q)?;
    big_flip_inv(&e)
}
