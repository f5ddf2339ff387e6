use pisum::oracle::{partial_sum, zeta_closed_table, Series};
use pisum_core::engine::alternating_even_coeff;
use pisum_core::exact::PiMonomial;

#[test]
fn eta_conversion_matches_brute_force() {
    let zeta = zeta_closed_table(12);
    for l in 0..12 {
        let exact = PiMonomial::new(alternating_even_coeff(l, &zeta).unwrap(), 2 * l as i32 + 2);
        let sum = partial_sum(Series::AltEven(l), 2_000);
        assert!(sum.overlaps(&exact.to_decimal()), "l={l}: {sum} vs {}", exact.to_decimal());
    }
}
