//! Encodes graphs to the graph6 text format, decodes them back, and uses
//! canonical forms to recognize isomorphic graphs with different labelings.

use zagreb::{canonical_form, cycle, decode_g6, encode_g6, is_isomorphic, Error, Graph};

fn main() -> Result<(), Error> {
    let g = cycle(5)?;
    let line = encode_g6(&g)?;
    println!("C5 encodes as {line}");

    let back = decode_g6(&line)?;
    assert_eq!(g, back);
    println!("decoding returns the identical graph");

    // Two labelings of the same 4-cycle: different bytes, same canonical
    // form.
    let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;
    assert_ne!(encode_g6(&a)?, encode_g6(&b)?);
    assert_eq!(canonical_form(&a)?, canonical_form(&b)?);
    assert!(is_isomorphic(&a, &b)?);
    println!(
        "{} and {} are the same graph up to relabeling",
        encode_g6(&a)?,
        encode_g6(&b)?
    );

    // Malformed input is rejected with a line-oriented error.
    for bad in ["", "D", "Dxctrailing", "~?"] {
        let err = decode_g6(bad).unwrap_err();
        println!("decode({bad:?}) fails: {err}");
    }
    Ok(())
}
