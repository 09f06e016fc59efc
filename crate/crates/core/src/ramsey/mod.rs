//! Colorings of p-sets: the Ramsey p-chromatic number and the largest
//! family colorable with `C(r,p)` colors.

mod bvalue;
mod chi;
mod coloring;
mod system;

pub use bvalue::{b_value, f_p1_exact, BReport};
pub use chi::{chi_r, ChiReport};
pub use coloring::{check_mono, PSetColoring};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::combin::binomial;
    use crate::hypercore::generate;

    #[test]
    fn chi_within_colors_iff_everything_colorable() {
        for (n, r, p) in [(4, 3, 1), (5, 3, 2), (6, 3, 2), (5, 2, 1), (4, 2, 1), (6, 3, 1)] {
            let h = generate::complete(n, r).unwrap();
            let chi = chi_r(&h, p, 10_000_000).unwrap().value as u64;
            let b = b_value(&h, p, 10_000_000).unwrap().value;
            let colors = binomial(r as u64, p as u64);
            assert_eq!(chi <= colors, b == binomial(n as u64, p as u64), "H({n},{r}), p = {p}");
        }
    }
}
