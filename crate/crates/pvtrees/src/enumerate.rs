//! Deterministic exhaustive generators for every family at desk scale, plus
//! exact closed-form counts.
//!
//! Generators refuse sizes whose count exceeds a caller-supplied ceiling
//! ([`DEFAULT_CEILING`] by default): the contract here is exhaustive
//! verification, not large-scale sampling. Two runs of any generator produce
//! identical sequences.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bijection::{is_in_dn, is_in_en, is_in_gn, is_in_qn};
use crate::error::{Error, Result};
use crate::trees::{
    BinaryShape, Color, Colored, ColoredBinary, ColoredForest, ColoredPlaneTree, Forest, Label,
    LabeledTree, PlaneForest, PlaneTree, SlottedTree, TreeLike,
};

/// Default guardrail on the number of structures a generator will stream.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// Tree family selector. k-ary arity is carried separately where needed;
/// `Binary` is the k = 2 special case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Rooted labeled trees on [n].
    Tree,
    /// Labeled forests on [n].
    Forest,
    /// Plane (ordered) labeled trees on [n].
    PlaneTree,
    /// Ordered sequences of plane trees partitioning [n].
    PlaneForest,
    /// Binary trees on [n].
    Binary,
    /// k-ary trees on [n]; requires an explicit k >= 2.
    Kary,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Forest => "forest",
            Family::PlaneTree => "plane_tree",
            Family::PlaneForest => "plane_forest",
            Family::Binary => "binary",
            Family::Kary => "kary",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "tree" | "trees" | "rooted_tree" | "rooted_trees" => Ok(Family::Tree),
            "forest" | "forests" => Ok(Family::Forest),
            "plane_tree" | "plane_trees" => Ok(Family::PlaneTree),
            "plane_forest" | "plane_forests" => Ok(Family::PlaneForest),
            "binary" => Ok(Family::Binary),
            "kary" | "k-ary" => Ok(Family::Kary),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }

    /// Resolves the arity for slotted families; errors when `Kary` is used
    /// without an explicit k or with k < 2.
    pub fn arity(self, k: Option<usize>) -> Result<usize> {
        match self {
            Family::Binary => Ok(2),
            Family::Kary => match k {
                Some(k) if k >= 2 => Ok(k),
                Some(k) => Err(Error::InvalidStructure(format!("arity k must be >= 2, got {k}"))),
                None => Err(Error::InvalidStructure("family kary requires --k".into())),
            },
            _ => Ok(0),
        }
    }
}

/// Coloring constraint for the colored generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorConstraint {
    /// Every bicoloring of the family.
    AllBicolorings,
    /// Bicolored binary trees on [n] whose improper vertices are all black.
    Dn,
    /// Bicolored binary trees on [n] whose improper vertices are all left improper.
    En,
    /// Bicolored plane trees on [n+1] with black root n+1 whose sibling
    /// subtree minima increase left to right.
    Gn,
    /// Bicolored plane trees on [n+1] with black root n+1.
    Qn,
}

impl ColorConstraint {
    pub fn parse(s: &str) -> Result<ColorConstraint> {
        match s {
            "all" | "all-bicolorings" => Ok(ColorConstraint::AllBicolorings),
            "Dn" | "dn" => Ok(ColorConstraint::Dn),
            "En" | "en" => Ok(ColorConstraint::En),
            "Gn" | "gn" => Ok(ColorConstraint::Gn),
            "Qn" | "qn" => Ok(ColorConstraint::Qn),
            other => Err(Error::UnsupportedFamily(format!("constraint {other}"))),
        }
    }
}

/// nth Catalan number.
pub fn catalan(n: usize) -> BigUint {
    // C_0 = 1, C_{m+1} = C_m * 2(2m+1)/(m+2)
    let mut c = BigUint::one();
    for m in 0..n {
        c = c * BigUint::from(2 * (2 * m + 1)) / BigUint::from(m + 2);
    }
    c
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Exact closed-form count of a family on [n].
pub fn count(family: Family, n: usize, k: Option<usize>) -> Result<BigUint> {
    Ok(match family {
        Family::Forest => {
            if n == 0 {
                BigUint::one()
            } else {
                BigUint::from(n + 1).pow((n - 1) as u32)
            }
        }
        Family::Tree => {
            if n == 0 {
                BigUint::zero()
            } else {
                BigUint::from(n).pow((n - 1) as u32)
            }
        }
        Family::PlaneForest => factorial(n) * catalan(n),
        Family::PlaneTree => {
            if n == 0 {
                BigUint::zero()
            } else {
                factorial(n) * catalan(n - 1)
            }
        }
        Family::Binary | Family::Kary => {
            let k = family.arity(k)?;
            // kn (kn-1) ... (kn-n+2), an (n-1)-term falling product
            let mut p = BigUint::one();
            for j in 0..n.saturating_sub(1) {
                p *= BigUint::from(k * n - j);
            }
            p
        }
    })
}

fn check_ceiling(family: Family, n: usize, total: &BigUint, ceiling: u64) -> Result<()> {
    if total > &BigUint::from(ceiling) {
        return Err(Error::CeilingExceeded {
            family: family.name().to_string(),
            n,
            count: total.to_string(),
            ceiling,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Binary shapes and their canonical rank order
// ---------------------------------------------------------------------------

/// Rank of a [`BinaryShape`] within the canonical order of shapes of its
/// size: left-subtree size ascending, then left rank, then right rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeIndex {
    pub n: usize,
    pub index: u64,
}

fn catalan_u64(n: usize) -> u64 {
    catalan(n).to_u64().expect("catalan number exceeds u64 range")
}

/// All binary shapes on `n` vertices, in canonical order.
pub fn gen_binary_shapes(n: usize) -> Vec<BinaryShape> {
    let mut by_size: Vec<Vec<BinaryShape>> = vec![vec![BinaryShape::Empty]];
    for m in 1..=n {
        let mut row = Vec::new();
        for left in 0..m {
            let right = m - 1 - left;
            for ls in &by_size[left] {
                for rs in &by_size[right] {
                    row.push(BinaryShape::node(ls.clone(), rs.clone()));
                }
            }
        }
        by_size.push(row);
    }
    by_size.pop().unwrap()
}

/// Shape with the given canonical rank.
pub fn shape_unrank(idx: ShapeIndex) -> Result<BinaryShape> {
    fn go(n: usize, mut index: u64) -> BinaryShape {
        if n == 0 {
            return BinaryShape::Empty;
        }
        for left in 0..n {
            let right = n - 1 - left;
            let block = catalan_u64(left) * catalan_u64(right);
            if index < block {
                let li = index / catalan_u64(right);
                let ri = index % catalan_u64(right);
                return BinaryShape::node(go(left, li), go(right, ri));
            }
            index -= block;
        }
        unreachable!("index within catalan bound")
    }
    if BigUint::from(idx.index) >= catalan(idx.n) {
        return Err(Error::InvalidStructure(format!(
            "shape index {} out of range for n = {}",
            idx.index, idx.n
        )));
    }
    Ok(go(idx.n, idx.index))
}

/// Canonical rank of a shape.
pub fn shape_rank(shape: &BinaryShape) -> ShapeIndex {
    fn go(shape: &BinaryShape) -> (usize, u64) {
        match shape {
            BinaryShape::Empty => (0, 0),
            BinaryShape::Node(l, r) => {
                let (ln, li) = go(l);
                let (rn, ri) = go(r);
                let n = 1 + ln + rn;
                let mut index = 0u64;
                for left in 0..ln {
                    index += catalan_u64(left) * catalan_u64(n - 1 - left);
                }
                index += li * catalan_u64(rn) + ri;
                (n, index)
            }
        }
    }
    let (n, index) = go(shape);
    ShapeIndex { n, index }
}

// ---------------------------------------------------------------------------
// k-ary shapes
// ---------------------------------------------------------------------------

/// Unlabeled k-ary shape: every node has exactly k ordered slots.
#[derive(Debug, Clone, PartialEq, Eq)]
enum KShape {
    Empty,
    Node(Vec<KShape>),
}

impl KShape {
    fn size(&self) -> usize {
        match self {
            KShape::Empty => 0,
            KShape::Node(cs) => 1 + cs.iter().map(KShape::size).sum::<usize>(),
        }
    }
}

/// All weak compositions of `total` into `parts` parts, lexicographic.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn kary_shapes(n: usize, k: usize) -> Vec<KShape> {
    let mut by_size: Vec<Vec<KShape>> = vec![vec![KShape::Empty]];
    for m in 1..=n {
        let mut row = Vec::new();
        for comp in compositions(m - 1, k) {
            let pools: Vec<&Vec<KShape>> = comp.iter().map(|&c| &by_size[c]).collect();
            for combo in pools.into_iter().multi_cartesian_product() {
                row.push(KShape::Node(combo.into_iter().cloned().collect()));
            }
        }
        by_size.push(row);
    }
    by_size.pop().unwrap()
}

fn label_kshape_preorder(shape: &KShape, k: usize, labels: &[Label]) -> SlottedTree {
    fn fill(
        shape: &KShape,
        labels: &[Label],
        pos: &mut usize,
        slots: &mut BTreeMap<Label, Vec<Option<Label>>>,
    ) -> Option<Label> {
        match shape {
            KShape::Empty => None,
            KShape::Node(cs) => {
                let v = labels[*pos];
                *pos += 1;
                let row: Vec<Option<Label>> =
                    cs.iter().map(|c| fill(c, labels, pos, slots)).collect();
                slots.insert(v, row);
                Some(v)
            }
        }
    }
    debug_assert_eq!(shape.size(), labels.len());
    let mut slots = BTreeMap::new();
    let mut pos = 0;
    let root = fill(shape, labels, &mut pos, &mut slots);
    SlottedTree::new(k, root, slots).expect("preorder labeling of a shape is valid")
}

// ---------------------------------------------------------------------------
// Labeled generators
// ---------------------------------------------------------------------------

/// All parent maps on [n] with the requested number of roots (`None` = any
/// number >= 1), by recursive assignment with incremental cycle pruning.
fn gen_parent_maps(n: usize, single_root: bool) -> Vec<BTreeMap<Label, Option<Label>>> {
    fn reaches(assign: &[Option<Label>], mut from: Label, target: Label) -> bool {
        loop {
            if from == target {
                return true;
            }
            match assign.get(from as usize - 1).copied().flatten() {
                Some(p) => from = p,
                None => return false,
            }
        }
    }

    fn rec(
        n: usize,
        v: usize,
        roots_so_far: usize,
        single_root: bool,
        assign: &mut Vec<Option<Label>>,
        out: &mut Vec<BTreeMap<Label, Option<Label>>>,
    ) {
        if v > n {
            if !single_root || roots_so_far == 1 {
                out.push(
                    assign
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| (i as Label + 1, p))
                        .collect(),
                );
            }
            return;
        }
        // root choice
        if !single_root || roots_so_far == 0 {
            assign.push(None);
            rec(n, v + 1, roots_so_far + 1, single_root, assign, out);
            assign.pop();
        }
        for p in 1..=n as Label {
            if p as usize == v {
                continue;
            }
            // v -> p closes a cycle iff p already reaches v
            if reaches(assign, p, v as Label) {
                continue;
            }
            assign.push(Some(p));
            rec(n, v + 1, roots_so_far, single_root, assign, out);
            assign.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        if !single_root {
            out.push(BTreeMap::new());
        }
        return out;
    }
    let mut assign = Vec::with_capacity(n);
    rec(n, 1, 0, single_root, &mut assign, &mut out);
    out
}

/// All forests on [n].
pub fn gen_forests(n: usize, ceiling: u64) -> Result<Vec<Forest>> {
    check_ceiling(Family::Forest, n, &count(Family::Forest, n, None)?, ceiling)?;
    Ok(gen_parent_maps(n, false)
        .into_iter()
        .map(|m| Forest::new(m).expect("generated parent map is valid"))
        .collect())
}

/// All rooted trees on [n].
pub fn gen_trees(n: usize, ceiling: u64) -> Result<Vec<LabeledTree>> {
    check_ceiling(Family::Tree, n, &count(Family::Tree, n, None)?, ceiling)?;
    Ok(gen_parent_maps(n, true)
        .into_iter()
        .map(|m| LabeledTree::new(m).expect("generated parent map is valid"))
        .collect())
}

/// Every plane structure refining `forest`: all child orderings of every
/// vertex crossed with all root orderings.
fn plane_refinements(forest: &Forest) -> Vec<PlaneForest> {
    let verts = forest.vertices();
    let roots = forest.roots();
    let mut axes: Vec<Vec<Vec<Label>>> = Vec::new();
    // axis 0: root order; axes 1..: child order per vertex
    axes.push(
        roots
            .iter()
            .copied()
            .permutations(roots.len())
            .collect::<Vec<_>>(),
    );
    for &v in &verts {
        let cs = forest.children_of(v);
        axes.push(cs.iter().copied().permutations(cs.len()).collect());
    }
    let mut out = Vec::new();
    for combo in axes.iter().multi_cartesian_product() {
        let root_order = &combo[0];
        let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            children.insert(v, combo[i + 1].clone());
        }
        let trees = root_order
            .iter()
            .map(|&r| {
                let verts_r = forest.descendants(r).expect("root in forest");
                let sub = verts_r
                    .iter()
                    .map(|&u| (u, children[&u].clone()))
                    .collect::<BTreeMap<_, _>>();
                PlaneTree::new(r, sub).expect("refinement of a valid forest")
            })
            .collect();
        out.push(PlaneForest::new(trees).expect("partition preserved"));
    }
    out
}

/// All plane forests on [n].
pub fn gen_plane_forests(n: usize, ceiling: u64) -> Result<Vec<PlaneForest>> {
    check_ceiling(
        Family::PlaneForest,
        n,
        &count(Family::PlaneForest, n, None)?,
        ceiling,
    )?;
    let mut out = Vec::new();
    for f in gen_forests(n, ceiling)? {
        out.extend(plane_refinements(&f));
    }
    Ok(out)
}

/// All plane trees on [n].
pub fn gen_plane_trees(n: usize, ceiling: u64) -> Result<Vec<PlaneTree>> {
    check_ceiling(
        Family::PlaneTree,
        n,
        &count(Family::PlaneTree, n, None)?,
        ceiling,
    )?;
    let mut out = Vec::new();
    for t in gen_trees(n, ceiling)? {
        for pf in plane_refinements(t.as_forest()) {
            debug_assert_eq!(pf.trees().len(), 1);
            out.push(pf.trees()[0].clone());
        }
    }
    Ok(out)
}

/// All k-ary trees on [n]: every shape crossed with every preorder labeling.
pub fn gen_kary(n: usize, k: usize, ceiling: u64) -> Result<Vec<SlottedTree>> {
    let family = if k == 2 { Family::Binary } else { Family::Kary };
    check_ceiling(family, n, &count(Family::Kary, n, Some(k))?, ceiling)?;
    let labels: Vec<Label> = (1..=n as Label).collect();
    let mut out = Vec::new();
    for shape in kary_shapes(n, k) {
        for perm in labels.iter().copied().permutations(n) {
            out.push(label_kshape_preorder(&shape, k, &perm));
        }
    }
    Ok(out)
}

/// All binary trees on [n].
pub fn gen_binary(n: usize, ceiling: u64) -> Result<Vec<SlottedTree>> {
    gen_kary(n, 2, ceiling)
}

/// Same sequence as [`gen_kary`], produced by labeling shapes in parallel.
/// Blocks are concatenated in shape order, so the output is identical.
pub fn gen_kary_parallel(n: usize, k: usize, ceiling: u64) -> Result<Vec<SlottedTree>> {
    use rayon::prelude::*;
    let family = if k == 2 { Family::Binary } else { Family::Kary };
    check_ceiling(family, n, &count(Family::Kary, n, Some(k))?, ceiling)?;
    let labels: Vec<Label> = (1..=n as Label).collect();
    let shapes = kary_shapes(n, k);
    Ok(shapes
        .par_iter()
        .map(|shape| {
            labels
                .iter()
                .copied()
                .permutations(n)
                .map(|perm| label_kshape_preorder(shape, k, &perm))
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect())
}

/// Uniform wrapper over the typed generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Tree(LabeledTree),
    Forest(Forest),
    PlaneTree(PlaneTree),
    PlaneForest(PlaneForest),
    Slotted(SlottedTree),
}

pub fn gen_labeled(
    family: Family,
    n: usize,
    k: Option<usize>,
    ceiling: u64,
) -> Result<Vec<Structure>> {
    Ok(match family {
        Family::Tree => gen_trees(n, ceiling)?.into_iter().map(Structure::Tree).collect(),
        Family::Forest => gen_forests(n, ceiling)?
            .into_iter()
            .map(Structure::Forest)
            .collect(),
        Family::PlaneTree => gen_plane_trees(n, ceiling)?
            .into_iter()
            .map(Structure::PlaneTree)
            .collect(),
        Family::PlaneForest => gen_plane_forests(n, ceiling)?
            .into_iter()
            .map(Structure::PlaneForest)
            .collect(),
        Family::Binary | Family::Kary => gen_kary(n, family.arity(k)?, ceiling)?
            .into_iter()
            .map(Structure::Slotted)
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Colored generators
// ---------------------------------------------------------------------------

/// All 2^n colorings of a vertex set, deterministic order (vertex-ascending
/// bits, black-first).
fn all_colorings(verts: &[Label]) -> Vec<BTreeMap<Label, Color>> {
    let n = verts.len();
    (0u64..(1 << n))
        .map(|mask| {
            verts
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let c = if mask >> i & 1 == 1 { Color::White } else { Color::Black };
                    (v, c)
                })
                .collect()
        })
        .collect()
}

/// All bicolored binary trees on [n] satisfying the constraint
/// (`AllBicolorings`, `Dn`, or `En`).
pub fn gen_colored_binary(
    n: usize,
    constraint: ColorConstraint,
    ceiling: u64,
) -> Result<Vec<ColoredBinary>> {
    let candidates = count(Family::Binary, n, None)? << n;
    check_ceiling(Family::Binary, n, &candidates, ceiling)?;
    let mut out = Vec::new();
    for tree in gen_binary(n, ceiling)? {
        let verts = tree.vertices();
        for colors in all_colorings(&verts) {
            let cb = Colored::new(tree.clone(), colors).unwrap();
            let keep = match constraint {
                ColorConstraint::AllBicolorings => true,
                ColorConstraint::Dn => is_in_dn(&cb),
                ColorConstraint::En => is_in_en(&cb),
                _ => {
                    return Err(Error::UnsupportedFamily(
                        "Gn/Qn constrain plane trees, not binary trees".into(),
                    ))
                }
            };
            if keep {
                out.push(cb);
            }
        }
    }
    Ok(out)
}

/// All bicolored forests on [n].
pub fn gen_colored_forests(n: usize, ceiling: u64) -> Result<Vec<ColoredForest>> {
    let candidates = count(Family::Forest, n, None)? << n;
    check_ceiling(Family::Forest, n, &candidates, ceiling)?;
    let mut out = Vec::new();
    for f in gen_forests(n, ceiling)? {
        let verts = f.vertices();
        for colors in all_colorings(&verts) {
            out.push(Colored::new(f.clone(), colors).unwrap());
        }
    }
    Ok(out)
}

/// All bicolored plane trees on [n+1] rooted at a black n+1 (`Qn`), or the
/// subset whose sibling subtree minima increase (`Gn`).
pub fn gen_colored_plane(
    n: usize,
    constraint: ColorConstraint,
    ceiling: u64,
) -> Result<Vec<ColoredPlaneTree>> {
    let candidates = count(Family::PlaneTree, n + 1, None)? << n;
    check_ceiling(Family::PlaneTree, n + 1, &candidates, ceiling)?;
    let root = (n + 1) as Label;
    let mut out = Vec::new();
    for t in gen_plane_trees(n + 1, ceiling)? {
        if t.root() != root {
            continue;
        }
        let others: Vec<Label> = t.vertices().into_iter().filter(|&v| v != root).collect();
        for mut colors in all_colorings(&others) {
            colors.insert(root, Color::Black);
            let cp = Colored::new(t.clone(), colors).unwrap();
            let keep = match constraint {
                ColorConstraint::Qn => is_in_qn(&cp),
                ColorConstraint::Gn => is_in_gn(&cp),
                ColorConstraint::AllBicolorings => true,
                _ => {
                    return Err(Error::UnsupportedFamily(
                        "Dn/En constrain binary trees, not plane trees".into(),
                    ))
                }
            };
            if keep {
                out.push(cp);
            }
        }
    }
    Ok(out)
}
