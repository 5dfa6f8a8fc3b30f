//! Stable JSON serialization for structures and polynomials.
//!
//! Structures are encoded as a parent array (entry 0 marks a root) with the
//! plane child order and k-ary slot assignments carried in separate fields,
//! since parent arrays cannot express them. Encoding is canonical: identical
//! structures always serialize to identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::enumerate::{Family, Structure};
use crate::error::{Error, Result};
use crate::trees::{
    Color, Coloring, Forest, Label, LabeledTree, PlaneForest, PlaneTree, SlottedTree, TreeLike,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// parent[v-1] is the parent of vertex v; 0 marks a root.
    pub parent: Vec<Label>,
    /// Slotted families: slot[v-1] is the 1-based slot of v under its parent
    /// (0 at the root).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slot: Option<Vec<u32>>,
    /// Plane families: children[v-1] is the ordered child list of vertex v.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<Vec<Label>>>,
    /// Plane forests: ordered list of component roots.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trees: Option<Vec<Label>>,
    /// color[v-1] is "b" or "w".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub method: String,
    /// Decimal coefficient strings, low-to-high in t, no trailing zeros.
    pub coeffs: Vec<String>,
}

fn require_initial_segment<T: TreeLike>(t: &T) -> Result<usize> {
    let vs = t.vertices();
    if vs.iter().enumerate().any(|(i, &v)| v != i as Label + 1) {
        return Err(Error::InvalidStructure(
            "only structures labeled 1..n can be serialized".into(),
        ));
    }
    Ok(vs.len())
}

fn encode_colors(colors: Option<&Coloring>, n: usize) -> Result<Option<Vec<String>>> {
    match colors {
        None => Ok(None),
        Some(c) => {
            let mut out = Vec::with_capacity(n);
            for v in 1..=n as Label {
                let col = c.get(&v).ok_or(Error::InvalidVertex(v))?;
                out.push(col.as_str().to_string());
            }
            Ok(Some(out))
        }
    }
}

fn parent_array<T: TreeLike>(t: &T, n: usize) -> Vec<Label> {
    let mut parent = vec![0; n];
    for v in t.vertices() {
        for c in t.children_of(v) {
            parent[c as usize - 1] = v;
        }
    }
    parent
}

/// Canonical record of any structure, with an optional coloring.
pub fn encode(structure: &Structure, colors: Option<&Coloring>) -> Result<TreeRecord> {
    let (family, n, parent, slot, children, trees, k) = match structure {
        Structure::Tree(t) => {
            let n = require_initial_segment(t)?;
            ("tree", n, parent_array(t, n), None, None, None, None)
        }
        Structure::Forest(f) => {
            let n = require_initial_segment(f)?;
            ("forest", n, parent_array(f, n), None, None, None, None)
        }
        Structure::PlaneTree(t) => {
            let n = require_initial_segment(t)?;
            let children = (1..=n as Label).map(|v| t.children_of(v)).collect();
            ("plane_tree", n, parent_array(t, n), None, Some(children), None, None)
        }
        Structure::PlaneForest(f) => {
            let n = require_initial_segment(f)?;
            let children = (1..=n as Label).map(|v| f.children_of(v)).collect();
            (
                "plane_forest",
                n,
                parent_array(f, n),
                None,
                Some(children),
                Some(f.roots()),
                None,
            )
        }
        Structure::Slotted(t) => {
            let n = require_initial_segment(t)?;
            let mut slot = vec![0u32; n];
            for v in t.vertices() {
                for (i, c) in t.slots_of(v)?.iter().enumerate() {
                    if let Some(c) = c {
                        slot[*c as usize - 1] = i as u32 + 1;
                    }
                }
            }
            let (family, k) = if t.k() == 2 {
                ("binary", None)
            } else {
                ("kary", Some(t.k()))
            };
            (family, n, parent_array(t, n), Some(slot), None, None, k)
        }
    };
    Ok(TreeRecord {
        family: family.to_string(),
        n,
        k,
        parent,
        slot,
        children,
        trees,
        color: encode_colors(colors, n)?,
    })
}

fn decode_colors(record: &TreeRecord) -> Result<Option<Coloring>> {
    match &record.color {
        None => Ok(None),
        Some(cs) => {
            if cs.len() != record.n {
                return Err(Error::InvalidStructure(format!(
                    "color array has length {}, expected n = {}",
                    cs.len(),
                    record.n
                )));
            }
            let mut out = Coloring::new();
            for (i, s) in cs.iter().enumerate() {
                out.insert(i as Label + 1, Color::from_str(s)?);
            }
            Ok(Some(out))
        }
    }
}

fn parent_map_of(record: &TreeRecord) -> Result<BTreeMap<Label, Option<Label>>> {
    if record.parent.len() != record.n {
        return Err(Error::InvalidStructure(format!(
            "parent array has length {}, expected n = {}",
            record.parent.len(),
            record.n
        )));
    }
    let mut out = BTreeMap::new();
    for (i, &p) in record.parent.iter().enumerate() {
        let v = i as Label + 1;
        if p == 0 {
            out.insert(v, None);
        } else if p as usize > record.n {
            return Err(Error::InvalidStructure(format!(
                "parent {p} of vertex {v} out of range"
            )));
        } else {
            out.insert(v, Some(p));
        }
    }
    Ok(out)
}

fn children_lists(record: &TreeRecord) -> Result<&Vec<Vec<Label>>> {
    let cs = record
        .children
        .as_ref()
        .ok_or_else(|| Error::InvalidStructure("plane record requires a children field".into()))?;
    if cs.len() != record.n {
        return Err(Error::InvalidStructure(format!(
            "children array has length {}, expected n = {}",
            cs.len(),
            record.n
        )));
    }
    Ok(cs)
}

fn plane_component(
    root: Label,
    all_children: &[Vec<Label>],
    n: usize,
) -> Result<PlaneTree> {
    let mut children = BTreeMap::new();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if v as usize > n || children.contains_key(&v) {
            return Err(Error::InvalidStructure(format!("bad child reference {v}")));
        }
        let cs = all_children[v as usize - 1].clone();
        stack.extend(cs.iter().copied());
        children.insert(v, cs);
    }
    PlaneTree::new(root, children)
}

/// Decodes a record back to a structure and optional coloring, validating
/// the result.
pub fn decode(record: &TreeRecord) -> Result<(Structure, Option<Coloring>)> {
    let family = Family::parse(&record.family)?;
    let colors = decode_colors(record)?;
    let parent = parent_map_of(record)?;
    let structure = match family {
        Family::Tree => Structure::Tree(LabeledTree::new(parent)?),
        Family::Forest => Structure::Forest(Forest::new(parent)?),
        Family::PlaneTree => {
            let cs = children_lists(record)?;
            let roots: Vec<Label> = parent
                .iter()
                .filter_map(|(&v, p)| p.is_none().then_some(v))
                .collect();
            let [root] = roots.as_slice() else {
                return Err(Error::InvalidStructure(
                    "plane tree must have exactly one root".into(),
                ));
            };
            let tree = plane_component(*root, cs, record.n)?;
            if tree.len() != record.n {
                return Err(Error::InvalidStructure("disconnected plane tree".into()));
            }
            Structure::PlaneTree(tree)
        }
        Family::PlaneForest => {
            let cs = children_lists(record)?;
            let roots = record.trees.as_ref().ok_or_else(|| {
                Error::InvalidStructure("plane forest record requires a trees field".into())
            })?;
            let mut trees = Vec::new();
            let mut total = 0usize;
            for &r in roots {
                let t = plane_component(r, cs, record.n)?;
                total += t.len();
                trees.push(t);
            }
            let forest = PlaneForest::new(trees)?;
            if total != record.n {
                return Err(Error::InvalidStructure(
                    "plane forest components do not cover [n]".into(),
                ));
            }
            Structure::PlaneForest(forest)
        }
        Family::Binary | Family::Kary => {
            let k = family.arity(record.k)?;
            let slot = record
                .slot
                .as_ref()
                .ok_or_else(|| Error::InvalidStructure("slotted record requires a slot field".into()))?;
            if slot.len() != record.n {
                return Err(Error::InvalidStructure(format!(
                    "slot array has length {}, expected n = {}",
                    slot.len(),
                    record.n
                )));
            }
            let mut slots: BTreeMap<Label, Vec<Option<Label>>> = (1..=record.n as Label)
                .map(|v| (v, vec![None; k]))
                .collect();
            let mut root = None;
            for (i, (&p, &s)) in record.parent.iter().zip(slot.iter()).enumerate() {
                let v = i as Label + 1;
                if p == 0 {
                    if root.replace(v).is_some() {
                        return Err(Error::InvalidStructure("two roots in slotted record".into()));
                    }
                    continue;
                }
                if s == 0 || s as usize > k {
                    return Err(Error::InvalidStructure(format!(
                        "slot {s} of vertex {v} out of range 1..={k}"
                    )));
                }
                let row = slots.get_mut(&p).ok_or(Error::InvalidVertex(p))?;
                if row[s as usize - 1].replace(v).is_some() {
                    return Err(Error::InvalidStructure(format!(
                        "slot {s} of vertex {p} is occupied twice"
                    )));
                }
            }
            Structure::Slotted(SlottedTree::new(k, root, slots)?)
        }
    };
    // parent array must agree with the derived structure
    let roundtrip = encode(&structure, None)?;
    if roundtrip.parent != record.parent {
        return Err(Error::InvalidStructure(
            "parent array is inconsistent with the child structure".into(),
        ));
    }
    Ok((structure, colors))
}

pub fn poly_record(
    family: Family,
    n: usize,
    k: Option<usize>,
    method: &str,
    poly: &crate::identity::PolyT,
) -> PolyRecord {
    PolyRecord {
        family: family.name().to_string(),
        n,
        k,
        method: method.to_string(),
        coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}
