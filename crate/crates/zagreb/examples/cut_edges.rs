//! Finds the cut edges of a graph, splits them into pendent and internal
//! ones, and prints the block decomposition.

use zagreb::{cycle, join_by_path, k_n_s, ClassSpec, Error, Graph};

fn describe(name: &str, g: &Graph) -> Result<(), Error> {
    let report = g.classify_cut_edges()?;
    println!("{name}: n = {}, m = {}", g.n(), g.m());
    println!("  cut edges: {:?}", report.bridges);
    println!("  pendent:   {:?}", report.pendent);
    println!("  internal:  {:?}", report.internal);
    println!("  blocks:    {:?}", report.blocks);
    println!(
        "  2-connected: {}, cyclomatic number: {}",
        g.is_two_connected()?,
        g.cyclomatic_number()?
    );
    Ok(())
}

fn main() -> Result<(), Error> {
    // A dumbbell: two triangles joined by a three-edge path. The three path
    // edges are the cut edges, all internal, and the blocks are the two
    // triangles plus one K2 block per cut edge.
    let c3 = cycle(3)?;
    let dumbbell = join_by_path(&c3, 0, &c3, 0, 3)?;
    describe("dumbbell", &dumbbell)?;

    // A clique with pendent edges: every cut edge hangs off the hub.
    let kns = k_n_s(ClassSpec::new(7, 3)?);
    describe("K4 + 3 pendants", &kns)?;

    // A cycle has no cut edges at all.
    describe("C6", &cycle(6)?)?;
    Ok(())
}
