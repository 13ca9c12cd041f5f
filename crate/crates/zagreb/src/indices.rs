//! The multiplicative Zagreb indices Π1 and Π2, their additive cousins M1 and
//! M2, and the two monotone ratio helpers behind the extremal proofs. All
//! values are exact: Π2 exceeds 10^80 well before n = 30, so nothing here
//! touches floating point except the explicitly approximate `ln` view.

use crate::graph::Graph;
use num::bigint::BigUint;
use num::rational::Ratio;
use num::traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul};

/// An exact nonnegative integer index value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexValue(BigUint);

impl IndexValue {
    pub fn zero() -> Self {
        IndexValue(BigUint::zero())
    }

    pub fn one() -> Self {
        IndexValue(BigUint::one())
    }

    pub fn big(&self) -> &BigUint {
        &self.0
    }

    /// Exact decimal string; this is also the `Display` output.
    pub fn to_decimal(&self) -> String {
        self.0.to_str_radix(10)
    }

    /// Natural log as a float, for readable reports only: never used in
    /// comparisons. Values far beyond f64 range are handled via bit length.
    pub fn ln(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.0.bits();
        if bits <= 64 {
            let v: u64 = (&self.0).try_into().expect("fits in u64");
            return (v as f64).ln();
        }
        let shift = bits - 64;
        let top: u64 = (&(&self.0 >> shift)).try_into().expect("64 top bits");
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

impl From<u64> for IndexValue {
    fn from(v: u64) -> Self {
        IndexValue(BigUint::from(v))
    }
}

impl From<BigUint> for IndexValue {
    fn from(v: BigUint) -> Self {
        IndexValue(v)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexValue({})", self.0)
    }
}

impl serde::Serialize for IndexValue {
    /// Serialized as an exact decimal string: values overflow every JSON
    /// number type well before n = 8.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal())
    }
}

impl Mul for IndexValue {
    type Output = IndexValue;
    fn mul(self, rhs: IndexValue) -> IndexValue {
        IndexValue(self.0 * rhs.0)
    }
}

impl Add for IndexValue {
    type Output = IndexValue;
    fn add(self, rhs: IndexValue) -> IndexValue {
        IndexValue(self.0 + rhs.0)
    }
}

/// An exact positive rational, always in lowest terms.
pub type ExactRatio = Ratio<BigUint>;

/// Π1: product over vertices of degree². Empty product is 1; an isolated
/// vertex contributes a factor 0.
pub fn pi1(g: &Graph) -> IndexValue {
    let mut acc = BigUint::one();
    for d in g.degrees() {
        acc *= BigUint::from((d * d) as u64);
    }
    IndexValue(acc)
}

/// Π2, vertex form: product over vertices of d^d, with 0^0 = 1 so the two
/// forms agree on graphs with isolated vertices.
pub fn pi2(g: &Graph) -> IndexValue {
    let mut acc = BigUint::one();
    for d in g.degrees() {
        if d > 0 {
            acc *= BigUint::from(d as u64).pow(d as u32);
        }
    }
    IndexValue(acc)
}

/// Π2, edge form: product over edges of d(u)·d(v). Empty product is 1.
/// Always equals [`pi2`].
pub fn pi2_edge_form(g: &Graph) -> IndexValue {
    let mut acc = BigUint::one();
    for (u, v) in g.edges() {
        acc *= BigUint::from((g.degree(u).unwrap() * g.degree(v).unwrap()) as u64);
    }
    IndexValue(acc)
}

/// M1: sum over vertices of degree².
pub fn m1(g: &Graph) -> IndexValue {
    IndexValue(BigUint::from(
        g.degrees().iter().map(|d| d * d).sum::<usize>() as u64,
    ))
}

/// M2: sum over edges of d(u)·d(v).
pub fn m2(g: &Graph) -> IndexValue {
    IndexValue(BigUint::from(
        g.edges()
            .iter()
            .map(|&(u, v)| g.degree(u).unwrap() * g.degree(v).unwrap())
            .sum::<usize>() as u64,
    ))
}

/// t(x) = x / (x + m), strictly increasing in x for fixed m >= 1.
pub fn ratio_t(x: u64, m: u64) -> ExactRatio {
    assert!(x >= 1 && m >= 1, "ratio_t requires x >= 1 and m >= 1");
    Ratio::new(BigUint::from(x), BigUint::from(x + m))
}

/// l(x) = x^x / (x + m)^(x + m), strictly decreasing in x for fixed m >= 1.
pub fn ratio_l(x: u64, m: u64) -> ExactRatio {
    assert!(x >= 1 && m >= 1, "ratio_l requires x >= 1 and m >= 1");
    Ratio::new(
        BigUint::from(x).pow(x as u32),
        BigUint::from(x + m).pow((x + m) as u32),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{c_n_p, c_n_s, complete, cycle, path, star, ClassSpec};
    use crate::graph::Graph;

    fn iv(v: u64) -> IndexValue {
        IndexValue::from(v)
    }

    #[test]
    fn cycle_values() {
        let c5 = cycle(5).unwrap();
        assert_eq!(pi1(&c5), iv(1024));
        assert_eq!(pi2(&c5), iv(1024));
        assert_eq!(pi2_edge_form(&c5), iv(1024));
        assert_eq!(m1(&c5), iv(20));
        assert_eq!(m2(&c5), iv(20));
    }

    #[test]
    fn complete_values() {
        let k4 = complete(4).unwrap();
        assert_eq!(pi1(&k4), iv(6561)); // 3^8
        assert_eq!(pi2(&k4), iv(531441)); // 3^12
        assert_eq!(pi2_edge_form(&k4), iv(531441));
        assert_eq!(m1(&k4), iv(36));
        assert_eq!(m2(&k4), iv(54));
    }

    #[test]
    fn star_and_path_values() {
        let s4 = star(4).unwrap();
        assert_eq!(pi2(&s4), iv(27)); // 3^3 * 1^3
        let p3 = path(3).unwrap();
        assert_eq!(m1(&p3), iv(6));
        assert_eq!(m2(&p3), iv(4));
    }

    #[test]
    fn family_values_match_closed_forms() {
        let spec = ClassSpec::new(6, 2).unwrap();
        assert_eq!(pi1(&c_n_s(spec)), iv(1024)); // 4^3 * 4^2
        assert_eq!(pi2(&c_n_p(spec)), iv(6912)); // 27 * 4^4
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::new(3, &[]).unwrap();
        assert_eq!(pi1(&g), iv(0));
        assert_eq!(pi2(&g), iv(1)); // 0^0 = 1 three times
        assert_eq!(pi2_edge_form(&g), iv(1));
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(pi1(&empty), iv(1));
    }

    #[test]
    fn ratio_values() {
        let r = |a: u64, b: u64| ExactRatio::new(a.into(), b.into());
        assert_eq!(ratio_t(1, 1), r(1, 2));
        assert_eq!(ratio_t(2, 2), r(1, 2));
        assert_eq!(ratio_t(3, 1), r(3, 4));
        assert_eq!(ratio_l(1, 1), r(1, 4));
        assert_eq!(ratio_l(2, 1), r(4, 27));
        assert_eq!(ratio_l(2, 2), r(1, 64));
    }

    #[test]
    fn ratio_monotonicity_exact() {
        for m in 1..=20u64 {
            for x in 1..50u64 {
                assert!(ratio_t(x, m) < ratio_t(x + 1, m), "t not increasing at x={x}, m={m}");
                assert!(ratio_l(x, m) > ratio_l(x + 1, m), "l not decreasing at x={x}, m={m}");
            }
        }
    }

    #[test]
    fn ln_view_tracks_magnitude() {
        let v = pi2(&complete(12).unwrap()); // 11^132, far past u64
        let expect = 132.0 * (11f64).ln();
        assert!((v.ln() - expect).abs() < 1e-9 * expect);
        assert_eq!(IndexValue::zero().ln(), f64::NEG_INFINITY);
        assert!((iv(1).ln()).abs() < 1e-12);
    }
}
