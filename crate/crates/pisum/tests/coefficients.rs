use num_traits::Signed;
use pisum::oracle::{integrate, integrate_mean};
use pisum::verify::{quadrature_gap, quadrature_tolerance, recurrence_holds};
use pisum_core::exact::BigRational;
use pisum_core::fourier::{fk_mean, gk_mean, Family};

fn gap(s: &BigRational, q: &BigRational) -> BigRational {
    (s - q).abs()
}

#[test]
fn symbolic_matches_quadrature() {
    let tol = quadrature_tolerance();
    for family in Family::ALL {
        for k in family.min_k()..=5 {
            for n in 1..=8 {
                let (s, q) = quadrature_gap(family, k, n).unwrap();
                assert!(
                    gap(s.value(), q.value()) < tol,
                    "{family} k={k} n={n}: {s} vs {q}"
                );
            }
        }
    }
}

#[test]
fn constant_terms_match_quadrature() {
    let tol = quadrature_tolerance();
    for k in 1..=5 {
        let q = integrate_mean(Family::FkCos, k).unwrap();
        assert!(gap(&fk_mean(k), q.value()) < tol, "fk-cos k={k}");
        let q = integrate_mean(Family::GkCos, k).unwrap();
        assert!(gap(gk_mean(k).to_decimal().value(), q.value()) < tol, "gk-cos k={k}");
    }
    assert!(integrate(Family::GkSin, 1, 0).is_err());
}

#[test]
fn recurrences_exact() {
    for family in Family::ALL {
        for k in 2..=8 {
            for n in 1..=8 {
                assert!(recurrence_holds(family, k, n), "{family} k={k} n={n}");
            }
        }
    }
}
