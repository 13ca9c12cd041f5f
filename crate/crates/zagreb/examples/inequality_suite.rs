//! Runs the inequality suite: exhaustive and seeded randomized checks of the
//! monotonicity and exchange facts the extremal proofs rest on.

use zagreb::{lemma_suite, Error};

fn main() -> Result<(), Error> {
    // The seed fixes every randomized instance, so a report is reproducible
    // bit for bit; trials is the instance count per randomized check.
    let report = lemma_suite(42, 100)?;
    print!("{}", report.to_text());

    assert!(report.all_pass);
    println!("\nsame seed, same report: {}", {
        let again = lemma_suite(42, 100)?;
        again.to_json() == report.to_json()
    });
    Ok(())
}
