//! Builds the four named extremal families for several (n, k) classes and
//! checks each one against its closed-form bound.
//!
//! For connected graphs with n vertices and exactly k cut edges:
//!   CnS (cycle with k pendent edges)  minimizes Pi1,
//!   CnP (cycle with a k-edge tail)    minimizes Pi2,
//!   KnP (clique with a k-edge tail)   maximizes Pi1,
//!   KnS (clique with k pendent edges) maximizes Pi2.

use zagreb::{
    bound_thm31, bound_thm32, bound_thm41, bound_thm42, c_n_p, c_n_s, encode_g6, k_n_p, k_n_s,
    pi1, pi2, ClassSpec, Error,
};

fn main() -> Result<(), Error> {
    for spec in ClassSpec::all_up_to(7) {
        let cns = c_n_s(spec);
        let cnp = c_n_p(spec);
        let kns = k_n_s(spec);
        let knp = k_n_p(spec);

        assert_eq!(pi1(&cns), bound_thm31(spec));
        assert_eq!(pi2(&cnp), bound_thm32(spec));
        assert_eq!(pi1(&knp), bound_thm41(spec));
        assert_eq!(pi2(&kns), bound_thm42(spec));

        println!("class {spec}");
        println!("  CnS {:<10} Pi1 = {}", encode_g6(&cns)?, pi1(&cns));
        println!("  CnP {:<10} Pi2 = {}", encode_g6(&cnp)?, pi2(&cnp));
        println!("  KnP {:<10} Pi1 = {}", encode_g6(&knp)?, pi1(&knp));
        println!("  KnS {:<10} Pi2 = {}", encode_g6(&kns)?, pi2(&kns));
    }

    // The Pi2 minimum is independent of k: the bound 27 * 4^(n-2) depends
    // only on n, and the minimizing tadpole always keeps a triangle.
    let a = bound_thm32(ClassSpec::new(9, 1)?);
    let b = bound_thm32(ClassSpec::new(9, 6)?);
    assert_eq!(a, b);
    println!("\nPi2 minimum over n = 9 classes, any k: {a}");
    Ok(())
}
