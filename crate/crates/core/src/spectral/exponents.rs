use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Signed;

/// Exponents of the asymptotic in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponents {
    /// `T = X^α` in the contour argument.
    pub alpha: f64,
    pub main_exp: f64,
    pub error_exp: f64,
    pub ratio: f64,
    pub gap: f64,
    /// `|ℜu| + |ℜv| < 1/2`.
    pub admissible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactExponents {
    pub alpha: Ratio<i64>,
    pub main_exp: Ratio<i64>,
    pub error_exp: Ratio<i64>,
    pub ratio: Ratio<i64>,
    pub gap: Ratio<i64>,
    pub admissible: bool,
}

/// `α = (1+2|ℜu|+2|ℜv|)/(3+|ℜ(u+v)|+|ℜ(u−v)|)`, main exponent
/// `1+|ℜ(u+v)|`, error exponent `1+|ℜu|+|ℜv|−α`.
///
/// Evaluated outside the admissible range too, with `admissible = false`.
pub fn theorem_exponents(u: Complex64, v: Complex64) -> Exponents {
    let (a, b) = (u.re, v.re);
    let width = a.abs() + b.abs();
    let alpha = (1.0 + 2.0 * width) / (3.0 + (a + b).abs() + (a - b).abs());
    let main_exp = 1.0 + (a + b).abs();
    let error_exp = 1.0 + width - alpha;
    Exponents {
        alpha,
        main_exp,
        error_exp,
        ratio: error_exp / main_exp,
        gap: main_exp - error_exp,
        admissible: width < 0.5,
    }
}

/// [`theorem_exponents`] in exact arithmetic from `ℜu`, `ℜv`.
pub fn theorem_exponents_exact(re_u: Ratio<i64>, re_v: Ratio<i64>) -> ExactExponents {
    let one = Ratio::from_integer(1);
    let two = Ratio::from_integer(2);
    let three = Ratio::from_integer(3);
    let width = re_u.abs() + re_v.abs();
    let alpha = (one + two * width) / (three + (re_u + re_v).abs() + (re_u - re_v).abs());
    let main_exp = one + (re_u + re_v).abs();
    let error_exp = one + width - alpha;
    ExactExponents {
        alpha,
        main_exp,
        error_exp,
        ratio: error_exp / main_exp,
        gap: main_exp - error_exp,
        admissible: width < Ratio::new(1, 2),
    }
}
