//! Enumerates all connected graphs on up to 7 vertices, one representative
//! per isomorphism class, and partitions each order by cut-edge count.

use zagreb::{enumerate_connected, ClassSpec, Error};

fn main() -> Result<(), Error> {
    println!("connected graphs by order:");
    for n in 1..=7 {
        let stream = enumerate_connected(n)?;
        println!("  n = {n}: {}", stream.len());
    }

    println!("\nn = 7, split by number of cut edges k:");
    let all = enumerate_connected(7)?;
    let mut total = 0;
    for k in 0..7 {
        let class = all.restrict_bridges(k)?;
        total += class.len();
        let label = match k {
            k if ClassSpec::new(7, k).is_ok() => " (a valid (n, k) class)",
            _ => "",
        };
        println!("  k = {k}: {:>4}{label}", class.len());
    }
    assert_eq!(total, all.len());

    // Graphs come out canonically labeled and sorted, so two runs (or two
    // worker counts) always produce identical output.
    let smallest = enumerate_connected(5)?;
    println!("\ncanonical representatives for n = 5, k = 2:");
    for g in smallest.restrict_bridges(2)?.iter() {
        println!("  degrees {:?}", g.degree_sequence());
    }
    Ok(())
}
