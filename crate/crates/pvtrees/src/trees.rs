//! Tree and forest families: rooted labeled trees, forests, plane (ordered)
//! trees and forests, slotted k-ary trees, bicolorings, and the vertex
//! statistics (descendant subtree, minimum label, hook, proper/improper)
//! shared by every other module.
//!
//! All types are immutable values after construction. Structural validity
//! (acyclicity, partition into components, slot uniqueness) is checked at
//! construction time; operations assume valid inputs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Label = u32;

/// Vertex color of a bicolored structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn toggled(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Black => "b",
            Color::White => "w",
        }
    }

    pub fn from_str(s: &str) -> Result<Color> {
        match s {
            "b" => Ok(Color::Black),
            "w" => Ok(Color::White),
            other => Err(Error::InvalidStructure(format!(
                "unknown color {other:?}, expected \"b\" or \"w\""
            ))),
        }
    }
}

/// Total color assignment on the vertex set of a structure.
pub type Coloring = BTreeMap<Label, Color>;

/// Minimum label of a (possibly empty) tree. The empty tree maps to
/// `Infinity`, which compares above every finite label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MinLabel {
    Finite(Label),
    Infinity,
}

impl MinLabel {
    pub fn finite(self) -> Option<Label> {
        match self {
            MinLabel::Finite(v) => Some(v),
            MinLabel::Infinity => None,
        }
    }
}

/// Side classification of an improper vertex of a binary tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Common read access for every tree family: the vertex set, the roots, and
/// the (ordered, where meaningful) children of each vertex. Vertex statistics
/// are provided on top of these three.
pub trait TreeLike {
    /// All vertex labels, ascending.
    fn vertices(&self) -> Vec<Label>;
    /// Root labels. Ordered for plane forests, ascending otherwise.
    fn roots(&self) -> Vec<Label>;
    /// Children of `v`, in child order where the family has one.
    fn children_of(&self, v: Label) -> Vec<Label>;

    fn len(&self) -> usize {
        self.vertices().len()
    }

    fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    fn contains(&self, v: Label) -> bool {
        self.vertices().binary_search(&v).is_ok()
    }

    /// Descendants of `v` including `v` itself, in DFS order.
    fn descendants(&self, v: Label) -> Result<Vec<Label>> {
        if !self.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            let mut cs = self.children_of(u);
            cs.reverse();
            stack.extend(cs);
        }
        Ok(out)
    }

    /// Number of descendants of `v`, including `v`.
    fn hook(&self, v: Label) -> Result<usize> {
        Ok(self.descendants(v)?.len())
    }

    /// Minimum label in the descendant subtree of `v`.
    fn subtree_min(&self, v: Label) -> Result<Label> {
        Ok(self.descendants(v)?.into_iter().min().unwrap())
    }

    /// A vertex is proper when it is the smallest label among its descendants.
    fn is_proper(&self, v: Label) -> Result<bool> {
        Ok(self.subtree_min(v)? == v)
    }

    fn proper_set(&self) -> BTreeSet<Label> {
        self.vertices()
            .into_iter()
            .filter(|&v| self.is_proper(v).unwrap())
            .collect()
    }

    /// Number of proper vertices.
    fn pv(&self) -> usize {
        self.proper_set().len()
    }
}

/// Minimum label of an optional tree, with the empty tree mapping to infinity.
pub fn min_label<T: TreeLike>(t: Option<&T>) -> MinLabel {
    match t {
        None => MinLabel::Infinity,
        Some(t) => match t.vertices().into_iter().min() {
            None => MinLabel::Infinity,
            Some(v) => MinLabel::Finite(v),
        },
    }
}

/// Forest of rooted labeled trees. Stored as a total map from each vertex to
/// its parent (`None` at roots); children are derived views in ascending
/// label order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    parent: BTreeMap<Label, Option<Label>>,
}

impl Forest {
    /// Builds a forest from a parent map covering the whole vertex set.
    /// Rejects cycles, dangling parents, and the empty-key-with-parent case.
    pub fn new(parent: BTreeMap<Label, Option<Label>>) -> Result<Forest> {
        for (&v, &p) in &parent {
            if let Some(p) = p {
                if !parent.contains_key(&p) {
                    return Err(Error::InvalidStructure(format!(
                        "vertex {v} has parent {p} outside the vertex set"
                    )));
                }
                if p == v {
                    return Err(Error::InvalidStructure(format!("vertex {v} is its own parent")));
                }
            }
        }
        // Every vertex must reach a root without revisiting.
        for &v in parent.keys() {
            let mut seen = BTreeSet::new();
            let mut cur = v;
            while let Some(&Some(p)) = parent.get(&cur) {
                if !seen.insert(cur) {
                    return Err(Error::InvalidStructure(format!(
                        "cycle through vertex {v}"
                    )));
                }
                cur = p;
            }
        }
        Ok(Forest { parent })
    }

    pub fn singletons(n: usize) -> Forest {
        Forest {
            parent: (1..=n as Label).map(|v| (v, None)).collect(),
        }
    }

    pub fn parent_of(&self, v: Label) -> Result<Option<Label>> {
        self.parent.get(&v).copied().ok_or(Error::InvalidVertex(v))
    }

    pub fn parent_map(&self) -> &BTreeMap<Label, Option<Label>> {
        &self.parent
    }

    /// Descendant subtree of `v`, as a rooted tree.
    pub fn subtree(&self, v: Label) -> Result<LabeledTree> {
        let verts = self.descendants(v)?;
        let set: BTreeSet<Label> = verts.iter().copied().collect();
        let parent = verts
            .into_iter()
            .map(|u| {
                let p = self.parent[&u].filter(|p| set.contains(p) && u != v);
                (u, if u == v { None } else { p })
            })
            .collect();
        LabeledTree::from_forest(Forest { parent })
    }
}

impl TreeLike for Forest {
    fn vertices(&self) -> Vec<Label> {
        self.parent.keys().copied().collect()
    }

    fn roots(&self) -> Vec<Label> {
        self.parent
            .iter()
            .filter_map(|(&v, p)| p.is_none().then_some(v))
            .collect()
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.parent
            .iter()
            .filter_map(|(&c, &p)| (p == Some(v)).then_some(c))
            .collect()
    }
}

/// Rooted labeled tree: a forest with exactly one root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledTree {
    forest: Forest,
    root: Label,
}

impl LabeledTree {
    pub fn new(parent: BTreeMap<Label, Option<Label>>) -> Result<LabeledTree> {
        LabeledTree::from_forest(Forest::new(parent)?)
    }

    pub fn from_forest(forest: Forest) -> Result<LabeledTree> {
        let roots = forest.roots();
        match roots.as_slice() {
            [r] => Ok(LabeledTree { root: *r, forest }),
            _ => Err(Error::InvalidStructure(format!(
                "a tree must have exactly one root, found {}",
                roots.len()
            ))),
        }
    }

    pub fn singleton(v: Label) -> LabeledTree {
        LabeledTree {
            forest: Forest {
                parent: BTreeMap::from([(v, None)]),
            },
            root: v,
        }
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn as_forest(&self) -> &Forest {
        &self.forest
    }

    pub fn into_forest(self) -> Forest {
        self.forest
    }

    pub fn parent_of(&self, v: Label) -> Result<Option<Label>> {
        self.forest.parent_of(v)
    }

    pub fn subtree(&self, v: Label) -> Result<LabeledTree> {
        self.forest.subtree(v)
    }
}

impl TreeLike for LabeledTree {
    fn vertices(&self) -> Vec<Label> {
        self.forest.vertices()
    }

    fn roots(&self) -> Vec<Label> {
        vec![self.root]
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.forest.children_of(v)
    }
}

/// Plane (ordered) rooted tree: each vertex carries a linearly ordered child
/// list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    root: Label,
    children: BTreeMap<Label, Vec<Label>>,
}

impl PlaneTree {
    /// `children` must have an entry (possibly empty) for every vertex, and
    /// every non-root must occur exactly once across all child lists.
    pub fn new(root: Label, children: BTreeMap<Label, Vec<Label>>) -> Result<PlaneTree> {
        if !children.contains_key(&root) {
            return Err(Error::InvalidStructure(format!(
                "root {root} missing from the children map"
            )));
        }
        let mut seen: BTreeSet<Label> = BTreeSet::new();
        for (&v, cs) in &children {
            for &c in cs {
                if c == root {
                    return Err(Error::InvalidStructure("root listed as a child".into()));
                }
                if !children.contains_key(&c) {
                    return Err(Error::InvalidStructure(format!(
                        "child {c} of {v} missing from the children map"
                    )));
                }
                if !seen.insert(c) {
                    return Err(Error::InvalidStructure(format!(
                        "vertex {c} occurs in two child lists"
                    )));
                }
            }
        }
        if seen.len() + 1 != children.len() {
            return Err(Error::InvalidStructure(
                "children map is not connected to the root".into(),
            ));
        }
        let tree = PlaneTree { root, children };
        // connectivity: every vertex reachable from the root
        if tree.descendants(root)?.len() != tree.children.len() {
            return Err(Error::InvalidStructure("disconnected children map".into()));
        }
        Ok(tree)
    }

    pub fn singleton(v: Label) -> PlaneTree {
        PlaneTree {
            root: v,
            children: BTreeMap::from([(v, Vec::new())]),
        }
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn children_map(&self) -> &BTreeMap<Label, Vec<Label>> {
        &self.children
    }

    pub fn subtree(&self, v: Label) -> Result<PlaneTree> {
        let verts = self.descendants(v)?;
        let children = verts
            .iter()
            .map(|&u| (u, self.children[&u].clone()))
            .collect();
        Ok(PlaneTree { root: v, children })
    }

    /// Drops the child order, keeping the underlying rooted tree.
    pub fn forget_order(&self) -> LabeledTree {
        let mut parent: BTreeMap<Label, Option<Label>> =
            self.children.keys().map(|&v| (v, None)).collect();
        for (&v, cs) in &self.children {
            for &c in cs {
                parent.insert(c, Some(v));
            }
        }
        LabeledTree::new(parent).expect("valid plane tree yields a valid tree")
    }
}

impl TreeLike for PlaneTree {
    fn vertices(&self) -> Vec<Label> {
        self.children.keys().copied().collect()
    }

    fn roots(&self) -> Vec<Label> {
        vec![self.root]
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.children.get(&v).cloned().unwrap_or_default()
    }
}

/// Ordered sequence of non-empty plane trees with pairwise disjoint vertex
/// sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneForest {
    trees: Vec<PlaneTree>,
}

impl PlaneForest {
    pub fn new(trees: Vec<PlaneTree>) -> Result<PlaneForest> {
        let mut seen = BTreeSet::new();
        for t in &trees {
            if t.is_empty() {
                return Err(Error::InvalidStructure("empty plane tree in forest".into()));
            }
            for v in t.vertices() {
                if !seen.insert(v) {
                    return Err(Error::InvalidStructure(format!(
                        "vertex {v} occurs in two component trees"
                    )));
                }
            }
        }
        Ok(PlaneForest { trees })
    }

    pub fn empty() -> PlaneForest {
        PlaneForest { trees: Vec::new() }
    }

    pub fn trees(&self) -> &[PlaneTree] {
        &self.trees
    }

    fn component_of(&self, v: Label) -> Result<&PlaneTree> {
        self.trees
            .iter()
            .find(|t| t.contains(v))
            .ok_or(Error::InvalidVertex(v))
    }

    pub fn subtree(&self, v: Label) -> Result<PlaneTree> {
        self.component_of(v)?.subtree(v)
    }
}

impl TreeLike for PlaneForest {
    fn vertices(&self) -> Vec<Label> {
        let mut vs: Vec<Label> = self.trees.iter().flat_map(|t| t.vertices()).collect();
        vs.sort_unstable();
        vs
    }

    fn roots(&self) -> Vec<Label> {
        self.trees.iter().map(|t| t.root()).collect()
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.trees
            .iter()
            .find(|t| t.contains(v))
            .map(|t| t.children_of(v))
            .unwrap_or_default()
    }
}

/// k-ary tree: each vertex has k child slots (1-based), each possibly empty.
/// `k = 2` is the binary case with slot 1 = left and slot 2 = right. The
/// empty tree (no vertices) is represented with `root = None`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlottedTree {
    k: usize,
    root: Option<Label>,
    slots: BTreeMap<Label, Vec<Option<Label>>>,
}

impl SlottedTree {
    /// `slots` must have an entry of length `k` for every vertex; every
    /// non-root occupies exactly one (parent, slot) pair.
    pub fn new(
        k: usize,
        root: Option<Label>,
        slots: BTreeMap<Label, Vec<Option<Label>>>,
    ) -> Result<SlottedTree> {
        if k < 2 {
            return Err(Error::InvalidStructure(format!("arity k must be >= 2, got {k}")));
        }
        match root {
            None => {
                if !slots.is_empty() {
                    return Err(Error::InvalidStructure(
                        "empty tree must have an empty slot map".into(),
                    ));
                }
            }
            Some(r) => {
                if !slots.contains_key(&r) {
                    return Err(Error::InvalidStructure(format!(
                        "root {r} missing from the slot map"
                    )));
                }
                let mut seen = BTreeSet::new();
                for (&v, row) in &slots {
                    if row.len() != k {
                        return Err(Error::InvalidStructure(format!(
                            "vertex {v} has {} slots, expected {k}",
                            row.len()
                        )));
                    }
                    for c in row.iter().flatten() {
                        if *c == r {
                            return Err(Error::InvalidStructure("root occupies a slot".into()));
                        }
                        if !slots.contains_key(c) {
                            return Err(Error::InvalidStructure(format!(
                                "child {c} of {v} missing from the slot map"
                            )));
                        }
                        if !seen.insert(*c) {
                            return Err(Error::InvalidStructure(format!(
                                "vertex {c} occupies two slots"
                            )));
                        }
                    }
                }
                if seen.len() + 1 != slots.len() {
                    return Err(Error::InvalidStructure(
                        "slot map is not connected to the root".into(),
                    ));
                }
                let t = SlottedTree {
                    k,
                    root,
                    slots: slots.clone(),
                };
                if t.descendants(r)?.len() != slots.len() {
                    return Err(Error::InvalidStructure("disconnected slot map".into()));
                }
                return Ok(t);
            }
        }
        Ok(SlottedTree { k, root, slots })
    }

    pub fn empty(k: usize) -> SlottedTree {
        SlottedTree {
            k,
            root: None,
            slots: BTreeMap::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn root(&self) -> Option<Label> {
        self.root
    }

    pub fn slots_of(&self, v: Label) -> Result<&[Option<Label>]> {
        self.slots
            .get(&v)
            .map(|r| r.as_slice())
            .ok_or(Error::InvalidVertex(v))
    }

    /// Child of `v` in 1-based slot `slot`.
    pub fn child(&self, v: Label, slot: usize) -> Result<Option<Label>> {
        let row = self.slots_of(v)?;
        row.get(slot - 1)
            .copied()
            .ok_or_else(|| Error::InvalidStructure(format!("slot {slot} out of range 1..={}", self.k)))
    }

    pub fn left(&self, v: Label) -> Result<Option<Label>> {
        self.child(v, 1)
    }

    pub fn right(&self, v: Label) -> Result<Option<Label>> {
        self.child(v, 2)
    }

    pub fn subtree(&self, v: Label) -> Result<SlottedTree> {
        let verts = self.descendants(v)?;
        let slots = verts
            .iter()
            .map(|&u| (u, self.slots[&u].clone()))
            .collect();
        Ok(SlottedTree {
            k: self.k,
            root: Some(v),
            slots,
        })
    }

    /// Descendant subtree hanging off slot `slot` of `v`; `None` when empty.
    pub fn slot_subtree(&self, v: Label, slot: usize) -> Result<Option<SlottedTree>> {
        Ok(match self.child(v, slot)? {
            None => None,
            Some(c) => Some(self.subtree(c)?),
        })
    }

    /// Minimum label in the slot-`slot` subtree of `v` (infinity when empty).
    pub fn slot_min(&self, v: Label, slot: usize) -> Result<MinLabel> {
        Ok(match self.child(v, slot)? {
            None => MinLabel::Infinity,
            Some(c) => MinLabel::Finite(self.subtree_min(c)?),
        })
    }

    /// Classifies an improper vertex of a binary tree as left or right
    /// improper by comparing the minima of its two subtrees.
    pub fn improper_side(&self, v: Label) -> Result<Side> {
        if self.k != 2 {
            return Err(Error::InvalidStructure(
                "improper_side is defined for binary trees only".into(),
            ));
        }
        if self.is_proper(v)? {
            return Err(Error::ProperVertex(v));
        }
        if self.slot_min(v, 1)? > self.slot_min(v, 2)? {
            Ok(Side::Right)
        } else {
            Ok(Side::Left)
        }
    }
}

impl TreeLike for SlottedTree {
    fn vertices(&self) -> Vec<Label> {
        self.slots.keys().copied().collect()
    }

    fn roots(&self) -> Vec<Label> {
        self.root.into_iter().collect()
    }

    fn children_of(&self, v: Label) -> Vec<Label> {
        self.slots
            .get(&v)
            .map(|row| row.iter().flatten().copied().collect())
            .unwrap_or_default()
    }
}

/// Unlabeled binary tree shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryShape {
    Empty,
    Node(Box<BinaryShape>, Box<BinaryShape>),
}

impl BinaryShape {
    pub fn leaf() -> BinaryShape {
        BinaryShape::Node(Box::new(BinaryShape::Empty), Box::new(BinaryShape::Empty))
    }

    pub fn node(left: BinaryShape, right: BinaryShape) -> BinaryShape {
        BinaryShape::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryShape::Empty => 0,
            BinaryShape::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Hook (descendant count) of every vertex, in preorder.
    pub fn hooks(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.collect_hooks(&mut out);
        out
    }

    fn collect_hooks(&self, out: &mut Vec<usize>) -> usize {
        match self {
            BinaryShape::Empty => 0,
            BinaryShape::Node(l, r) => {
                let at = out.len();
                out.push(0);
                let h = 1 + l.collect_hooks(out) + r.collect_hooks(out);
                out[at] = h;
                h
            }
        }
    }

    /// Labels the shape's vertices in preorder with `labels` (one per
    /// vertex), producing a binary `SlottedTree`.
    pub fn label_preorder(&self, labels: &[Label]) -> Result<SlottedTree> {
        if labels.len() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                got: labels.len(),
            });
        }
        let mut slots = BTreeMap::new();
        let mut pos = 0usize;
        let root = fill(self, labels, &mut pos, &mut slots);
        return SlottedTree::new(2, root, slots);

        fn fill(
            shape: &BinaryShape,
            labels: &[Label],
            pos: &mut usize,
            slots: &mut BTreeMap<Label, Vec<Option<Label>>>,
        ) -> Option<Label> {
            match shape {
                BinaryShape::Empty => None,
                BinaryShape::Node(l, r) => {
                    let v = labels[*pos];
                    *pos += 1;
                    let lc = fill(l, labels, pos, slots);
                    let rc = fill(r, labels, pos, slots);
                    slots.insert(v, vec![lc, rc]);
                    Some(v)
                }
            }
        }
    }
}

/// A structure together with a total coloring of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colored<T> {
    pub structure: T,
    pub colors: Coloring,
}

impl<T: TreeLike> Colored<T> {
    pub fn new(structure: T, colors: Coloring) -> Result<Colored<T>> {
        let verts = structure.vertices();
        if colors.len() != verts.len() || verts.iter().any(|v| !colors.contains_key(v)) {
            return Err(Error::InvalidStructure(
                "coloring is not a total map on the vertex set".into(),
            ));
        }
        Ok(Colored { structure, colors })
    }

    pub fn color_of(&self, v: Label) -> Result<Color> {
        self.colors.get(&v).copied().ok_or(Error::InvalidVertex(v))
    }

    /// All-black coloring of a structure.
    pub fn all_black(structure: T) -> Colored<T> {
        let colors = structure
            .vertices()
            .into_iter()
            .map(|v| (v, Color::Black))
            .collect();
        Colored { structure, colors }
    }
}

pub type ColoredBinary = Colored<SlottedTree>;
pub type ColoredForest = Colored<Forest>;
pub type ColoredTree = Colored<LabeledTree>;
pub type ColoredPlaneTree = Colored<PlaneTree>;
