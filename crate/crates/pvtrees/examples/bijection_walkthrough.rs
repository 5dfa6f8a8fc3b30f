//! Walks a nine-vertex bicolored binary tree through the composite bijection
//! to a bicolored forest and back, printing every intermediate stage.

use pvtrees::bijection::{
    big_flip, full_map, full_map_inv, is_in_dn, is_in_en, is_in_gn, restricted_phi,
    right_improper_set, white_improper_set,
};
use pvtrees::enumerate::Structure;
use pvtrees::golden::flip_input;
use pvtrees::record::encode;
use pvtrees::trees::TreeLike;

fn show(label: &str, s: &Structure, colors: &pvtrees::trees::Coloring) {
    println!("{label}:\n  {}", serde_json::to_string(&encode(s, Some(colors)).unwrap()).unwrap());
}

fn main() {
    let d = flip_input();
    assert!(is_in_dn(&d), "start in the improper-implies-black set");
    show("input (every improper vertex black)", &Structure::Slotted(d.structure.clone()), &d.colors);
    println!("  proper vertices: {:?}", d.structure.proper_set());
    println!(
        "  right-improper vertices to flip: {:?}",
        right_improper_set(&d.structure).unwrap()
    );

    let e = big_flip(&d).unwrap();
    assert!(is_in_en(&e), "flip lands where improper vertices are left improper");
    show("\nafter the simultaneous flip", &Structure::Slotted(e.structure.clone()), &e.colors);
    println!(
        "  white improper vertices (the flip's footprint): {:?}",
        white_improper_set(&e).unwrap()
    );

    let g = restricted_phi(&e).unwrap();
    assert!(is_in_gn(&g), "rotation lands among increasing-sibling plane trees");
    show(
        "\nafter the rotation (plane tree, new black root 10)",
        &Structure::PlaneTree(g.structure.clone()),
        &g.colors,
    );

    let f = full_map(&d).unwrap();
    show("\nafter deleting the root: a bicolored forest on [9]", &Structure::Forest(f.structure.clone()), &f.colors);

    assert_eq!(full_map_inv(&f).unwrap(), d);
    println!("\ninverse map restores the input exactly");
}
