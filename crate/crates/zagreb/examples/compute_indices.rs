//! Computes the four Zagreb indices for a handful of small graphs and shows
//! that the two product forms of the second multiplicative index agree.

use zagreb::{complete, cycle, m1, m2, path, pi1, pi2, pi2_edge_form, star, Error, Graph};

fn main() -> Result<(), Error> {
    let mut rows: Vec<(&str, Graph)> = vec![
        ("P5 (path)", path(5)?),
        ("C5 (cycle)", cycle(5)?),
        ("S5 (star)", star(5)?),
        ("K5 (complete)", complete(5)?),
    ];
    // A tadpole: triangle with a two-edge tail.
    rows.push((
        "triangle + tail",
        Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])?,
    ));

    println!(
        "{:<16} {:>6} {:>6} {:>10} {:>12}",
        "graph", "M1", "M2", "Pi1", "Pi2"
    );
    for (name, g) in &rows {
        println!(
            "{:<16} {:>6} {:>6} {:>10} {:>12}",
            name,
            m1(g),
            m2(g),
            pi1(g),
            pi2(g)
        );
        // Pi2 as a product over edges equals the degree-power product form.
        assert_eq!(pi2(g), pi2_edge_form(g));
    }

    // The products grow far beyond u128 even for modest graphs; values are
    // exact big integers.
    let k20 = complete(20)?;
    let value = pi2(&k20);
    println!("\nPi2(K20) has {} decimal digits: {}", value.to_decimal().len(), value);
    Ok(())
}
