use heunblock::algebra::{BigInt, BigRational};
use heunblock::floquet::{cf_root_f64, floquet_expansion, mathieu_dictionary, CfEquation};
use num_traits::ToPrimitive;

/// Eigenvalues below `a` of the truncated Hill matrix `diag((ν+2n)²)`
/// with `q` off the diagonal, `|n| ≤ size`, by Sturm sequence.
fn hill_count_below(nu: f64, q: f64, a: f64, size: i32) -> usize {
    let mut count = 0;
    let mut r = 1.0;
    for (i, n) in (-size..=size).enumerate() {
        let d = (nu + 2.0 * n as f64).powi(2) - a;
        r = if i == 0 { d } else { d - q * q / r };
        if r == 0.0 {
            r = -1e-300;
        }
        if r < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest Hill eigenvalue; for `|ν| < 1` this is the branch through `ν²`.
fn hill_characteristic_value(nu: f64, q: f64) -> f64 {
    let (mut lo, mut hi) = (nu * nu - 2.0 * q.abs() - 1.0, nu * nu + 1e-12);
    assert_eq!(hill_count_below(nu, q, lo, 25), 0);
    assert_eq!(hill_count_below(nu, q, hi, 25), 1);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hill_count_below(nu, q, mid, 25) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn continued_fraction_root_matches_hill_matrix() {
    let (sigma, t) = (0.3, 0.1);
    let m = mathieu_dictionary(sigma, t);
    let e = cf_root_f64(CfEquation::HIII3, &[sigma], t, m.delta_sigma, 30).unwrap();
    let a = hill_characteristic_value(m.nu, m.q);
    assert!((m.characteristic_value(e) - a).abs() < 1e-8, "{} vs {}", m.characteristic_value(e), a);
}

pub fn weak_coupling_series_matches_hill_matrix() {
    // ν = 0.3, q = 0.1 in the standard normalization.
    let sigma = BigRational::new(BigInt::from(3), BigInt::from(20));
    let t = 0.1f64.powi(2) / 16.0;
    let x = floquet_expansion(CfEquation::HIII3, 4).unwrap();
    let e: f64 = (0..=4)
        .map(|k| {
            let c = x.coefficient(k).eval_rational(std::slice::from_ref(&sigma)).unwrap();
            c.to_f64().unwrap() * t.powi(k as i32)
        })
        .sum();
    let m = mathieu_dictionary(0.15, t);
    assert!((m.nu - 0.3).abs() < 1e-15 && (m.q - 0.1).abs() < 1e-15);
    let a = hill_characteristic_value(m.nu, m.q);
    assert!((m.characteristic_value(e) - a).abs() < 1e-8, "{} vs {}", m.characteristic_value(e), a);
}
