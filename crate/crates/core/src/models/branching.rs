/// Survival probability of a Poisson(`d`) Galton-Watson process: zero for
/// `d <= 1`, otherwise the positive root of `1 - x = exp(-d x)`.
///
/// Bisection on `[1e-12, 1 - 1e-12]` keeps clear of the trivial root at
/// zero, then Newton polishes the bracketed value. For large `d` the root
/// sits above the bracket and Newton starts from `1` instead.
pub fn survival_probability(d: f64) -> f64 {
    if d.is_nan() || d <= 1.0 {
        return 0.0;
    }
    // f(x) = 1 - x - exp(-d x), written with expm1 so tiny x keep their sign.
    let f = |x: f64| -x - (-d * x).exp_m1();
    let df = |x: f64| -1.0 + d * (-d * x).exp();
    let (mut lo, mut hi) = (1e-12, 1.0 - 1e-12);
    let mut x = if f(hi) < 0.0 {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    } else {
        1.0
    };
    for _ in 0..50 {
        let step = f(x) / df(x);
        let next = (x - step).clamp(lo, 1.0);
        if (next - x).abs() < 1e-16 {
            x = next;
            break;
        }
        x = next;
    }
    x
}

/// Approximate probability that a given colour occurs in the giant component
/// of `G_c(n, d/n)` with `c = alpha n`: `1 - (1 - g)^((1 - g/2) / alpha)`
/// where `g` is [`survival_probability`]`(d)`.
pub fn expected_colour_fraction(alpha: f64, d: f64) -> f64 {
    assert!(alpha > 0.0, "alpha must be positive");
    let g = survival_probability(d);
    1.0 - (1.0 - g).powf((1.0 - g / 2.0) / alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed_point(d: f64) -> f64 {
        let mut x = 0.5;
        for _ in 0..100_000 {
            x = 1.0 - (-d * x).exp();
        }
        x
    }

    #[test]
    fn subcritical_and_critical_are_zero() {
        assert_eq!(survival_probability(1.0), 0.0);
        assert_eq!(survival_probability(0.5), 0.0);
        assert_eq!(survival_probability(0.0), 0.0);
    }

    #[test]
    fn d_two_matches_fixed_point_iteration() {
        let oracle = fixed_point(2.0);
        assert!((oracle - 0.796812).abs() < 1e-6);
        assert!((survival_probability(2.0) - oracle).abs() < 1e-12);
    }

    #[test]
    fn residual_and_monotonicity_on_grid() {
        let grid = [1.01, 1.1, 2.0, 5.0, 20.0, 40.0];
        let mut prev = 0.0;
        for d in grid {
            let g = survival_probability(d);
            assert!((1.0 - g - (-g * d).exp()).abs() <= 1e-10, "d = {d}");
            assert!(g > prev);
            prev = g;
        }
        assert!(survival_probability(20.0) > 0.999);
    }

    #[test]
    fn colour_fraction_limits() {
        let g = survival_probability(2.0);
        let q = expected_colour_fraction(1.0, 2.0);
        assert!((q - (1.0 - (1.0 - g).powf(1.0 - g / 2.0))).abs() < 1e-15);
        assert!(expected_colour_fraction(1e9, 2.0) < 1e-8);
        assert!(expected_colour_fraction(1.0, 1.0 + 1e-9) < 1e-6);
        assert!(q < g);
    }
}
