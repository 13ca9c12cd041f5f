//! Applies two of the edge surgeries behind the extremal proofs and watches
//! the indices move in the proven direction.

use zagreb::{
    complete, cycle, cycle_path_cycle_rewire, join_by_path, merge_endblocks, pi1, pi2, Error,
};

fn main() -> Result<(), Error> {
    // Two triangles joined by a two-edge path. Splicing the far cycle into
    // the near one (leaving the path pendent) strictly decreases both
    // multiplicative indices.
    let c3 = cycle(3)?;
    let dumbbell = join_by_path(&c3, 0, &c3, 0, 2)?;
    let spliced = cycle_path_cycle_rewire(&dumbbell, 0, 1, 2, 3, 4, 5)?;
    println!("cycle splice: {}", spliced.moved);
    println!(
        "  Pi1 {} -> {}, Pi2 {} -> {}",
        pi1(&dumbbell),
        pi1(&spliced.result),
        pi2(&dumbbell),
        pi2(&spliced.result)
    );
    assert!(pi1(&spliced.result) < pi1(&dumbbell));
    assert!(pi2(&spliced.result) < pi2(&dumbbell));

    // Two K4 end blocks joined by a path. Merging them into one clique
    // strictly increases Pi1.
    let k4 = complete(4)?;
    let barbell = join_by_path(&k4, 0, &k4, 0, 2)?;
    let merged = merge_endblocks(&barbell, &[0, 1, 2, 3], &[4, 5, 6, 7])?;
    println!("end-block merge: {}", merged.moved);
    println!(
        "  Pi1 {} -> {}",
        pi1(&barbell),
        pi1(&merged.result)
    );
    assert!(pi1(&merged.result) > pi1(&barbell));

    // Surgeries refuse graphs that do not match their pattern.
    let err = cycle_path_cycle_rewire(&barbell, 0, 1, 2, 4, 5, 6).unwrap_err();
    println!("wrong pattern is rejected: {err}");
    Ok(())
}
