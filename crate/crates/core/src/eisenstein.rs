//! Completed Eisenstein series through their Fourier expansions, the Fourier
//! coefficients of the product `V`, its constant-term pieces `C_𝔞`, and the
//! regularizer `R`.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, Zero};

use crate::chars::DirichletCharacter;
use crate::divsum::{sigma, ConvolutionParams, TruncatedValue};
use crate::error::{Error, Result};
use crate::lfun::completed_l;
use crate::special::{bessel_k, gamma_ratio};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const TAU: f64 = std::f64::consts::TAU;

/// Smallest `y` at which the truncation certificate is issued.
pub const MIN_CERTIFIED_Y: f64 = 0.3;

pub type Rational = Ratio<i128>;

/// `z = x + iy` with `y > 0`, optionally carrying exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    x: f64,
    y: f64,
    exact: Option<(Rational, Rational)>,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::domain(format!("({x}, {y}) is not in the upper half-plane")));
        }
        Ok(UpperHalfPoint { x, y, exact: None })
    }

    pub fn from_rational(x: Rational, y: Rational) -> Result<Self> {
        if y <= Rational::zero() {
            return Err(Error::domain(format!("y = {y} must be positive")));
        }
        Ok(UpperHalfPoint {
            x: ratio_f64(&x),
            y: ratio_f64(&y),
            exact: Some((x, y)),
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn exact(&self) -> Option<(Rational, Rational)> {
        self.exact
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    /// `σ₀z = −1/(Nz)`, in rational arithmetic when the coordinates are exact.
    pub fn fricke(&self, n: u64) -> Result<Self> {
        if let Some((x, y)) = self.exact {
            if let Some((fx, fy)) = fricke_exact(x, y, n as i128) {
                return Self::from_rational(fx, fy);
            }
        }
        let w = -1.0 / (n as f64 * self.z());
        Self::new(w.re, w.im)
    }
}

fn ratio_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn fricke_exact(x: Rational, y: Rational, n: i128) -> Option<(Rational, Rational)> {
    let norm = x.checked_mul(&x)?.checked_add(&y.checked_mul(&y)?)?;
    let den = norm.checked_mul(&Rational::from_integer(n))?;
    Some((-x.checked_div(&den)?, y.checked_div(&den)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyLabel {
    /// `E*_{𝟙,ψ̄}`
    OnePsiBar,
    /// `E*_{ψ,𝟙}`
    PsiOne,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EisensteinFamily {
    label: FamilyLabel,
    psi: DirichletCharacter,
}

impl EisensteinFamily {
    pub fn new(label: FamilyLabel, psi: DirichletCharacter) -> Result<Self> {
        if !psi.is_even_primitive() {
            return Err(Error::InvalidParams(format!(
                "Eisenstein family needs an even nontrivial character, got {psi:?}"
            )));
        }
        Ok(EisensteinFamily { label, psi })
    }

    pub fn one_psi_bar(psi: DirichletCharacter) -> Result<Self> {
        Self::new(FamilyLabel::OnePsiBar, psi)
    }

    pub fn psi_one(psi: DirichletCharacter) -> Result<Self> {
        Self::new(FamilyLabel::PsiOne, psi)
    }

    pub fn label(&self) -> FamilyLabel {
        self.label
    }

    pub fn psi(&self) -> &DirichletCharacter {
        &self.psi
    }

    fn modulus(&self) -> f64 {
        self.psi.modulus() as f64
    }

    /// Constant term at `y`.
    pub fn constant_term(&self, y: f64, s: Complex64) -> Result<Complex64> {
        let n = self.modulus();
        let pb = self.psi.conjugate();
        let tau = pb.gauss_sum();
        Ok(match self.label {
            FamilyLabel::OnePsiBar => {
                Complex64::from(n).powc(s) / tau * completed_l(2.0 * s, &pb)? * Complex64::from(y).powc(s)
            }
            FamilyLabel::PsiOne => {
                let r = 1.0 - s;
                Complex64::from(n).powc(r) / tau * completed_l(2.0 * r, &pb)? * Complex64::from(y).powc(r)
            }
        })
    }

    /// Coefficient of `y^{1/2} K_{s−1/2}(2π|n|y) e(nx)`.
    pub fn coefficient(&self, n: i64, s: Complex64) -> Complex64 {
        let m = Complex64::from(n.unsigned_abs() as f64);
        match self.label {
            FamilyLabel::OnePsiBar => 2.0 * m.powc(0.5 - s) * sigma(2.0 * s - 1.0, n, &self.psi),
            FamilyLabel::PsiOne => 2.0 * m.powc(s - 0.5) * sigma(1.0 - 2.0 * s, n, &self.psi),
        }
    }
}

/// `8 max|c_n| · y^{1/2} · √(π/(4πyT)) e^{−2πyT}`.
fn truncation_bound(max_coeff: f64, y: f64, t: u64) -> f64 {
    if t == 0 {
        return f64::INFINITY;
    }
    let tf = t as f64;
    8.0 * max_coeff * y.sqrt() * (std::f64::consts::PI / (4.0 * std::f64::consts::PI * y * tf)).sqrt()
        * (-TAU * y * tf).exp()
}

/// Same policy for series in `K_u K_v · y`, both arguments at least `2πyT`.
fn pair_bound(max_coeff: f64, y: f64, t: u64) -> f64 {
    if t == 0 {
        return f64::INFINITY;
    }
    let tf = t as f64;
    8.0 * max_coeff * y / (4.0 * y * tf) * (-2.0 * TAU * y * tf).exp()
}

fn check_certified(y: f64) -> Result<()> {
    if y < MIN_CERTIFIED_Y {
        return Err(Error::domain(format!(
            "y = {y} is below {MIN_CERTIFIED_Y}; truncation certificate unavailable"
        )));
    }
    Ok(())
}

/// `E*` at `z` from its Fourier expansion truncated at `|n| ≤ T`.
pub fn eisenstein_star(
    fam: &EisensteinFamily,
    z: &UpperHalfPoint,
    s: Complex64,
    t: u64,
) -> Result<TruncatedValue> {
    let y = z.y();
    check_certified(y)?;
    let mut value = fam.constant_term(y, s)?;
    let nu = s - 0.5;
    let mut max_c: f64 = 0.0;
    let sy = y.sqrt();
    for n in 1..=t as i64 {
        let c = fam.coefficient(n, s);
        max_c = max_c.max(c.norm());
        let k = bessel_k(nu, TAU * n as f64 * y)?;
        // e(nx) + e(−nx), coefficients even in n
        value += c * sy * k * 2.0 * (TAU * n as f64 * z.x()).cos();
    }
    Ok(TruncatedValue {
        value,
        tail_bound: truncation_bound(max_c, y, t),
    })
}

/// `|E*_{𝟙,ψ̄}(z,s) − E*_{ψ,𝟙}(z,1−s)|`.
pub fn eisenstein_functional_defect(
    psi: &DirichletCharacter,
    z: &UpperHalfPoint,
    s: Complex64,
    t: u64,
) -> Result<f64> {
    let a = eisenstein_star(&EisensteinFamily::one_psi_bar(psi.clone())?, z, s, t)?;
    let b = eisenstein_star(&EisensteinFamily::psi_one(psi.clone())?, z, 1.0 - s, t)?;
    Ok((a.value - b.value).norm())
}

/// `|E*_{𝟙,ψ̄}(σ₀z,s) − N^s τ(𝟙)/τ(ψ̄) · E*_{ψ̄,𝟙}(z,s)|`.
pub fn fricke_defect(
    psi: &DirichletCharacter,
    z: &UpperHalfPoint,
    s: Complex64,
    t: u64,
) -> Result<f64> {
    let n = psi.modulus();
    let w = z.fricke(n)?;
    let lhs = eisenstein_star(&EisensteinFamily::one_psi_bar(psi.clone())?, &w, s, t)?;
    let pb = psi.conjugate();
    let rhs = eisenstein_star(&EisensteinFamily::psi_one(pb.clone())?, z, s, t)?;
    let factor = Complex64::from(n as f64).powc(s) / pb.gauss_sum();
    Ok((lhs.value - factor * rhs.value).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cusp {
    Infinity,
    Zero,
}

impl Cusp {
    pub fn name(&self) -> &'static str {
        match self {
            Cusp::Infinity => "i∞",
            Cusp::Zero => "0",
        }
    }
}

fn cpow(base: f64, e: Complex64) -> Complex64 {
    Complex64::from(base).powc(e)
}

/// `N^{1+u+v} / (τ(χ̄)τ(ψ̄)) · Λ(1+2u,χ̄)Λ(1+2v,ψ̄)`, the coefficient of
/// `y^{1+u+v}` in the zeroth coefficient of `V`.
pub fn v_polynomial_coefficient(p: &ConvolutionParams) -> Result<Complex64> {
    let (u, v) = (p.u(), p.v());
    let cb = p.chi().conjugate();
    let pb = p.psi().conjugate();
    Ok(cpow(p.modulus() as f64, 1.0 + u + v) / (cb.gauss_sum() * pb.gauss_sum())
        * completed_l(1.0 + 2.0 * u, &cb)?
        * completed_l(1.0 + 2.0 * v, &pb)?)
}

/// `C_𝔞(y)` summed over `n ≤ T`.
pub fn c_series(p: &ConvolutionParams, cusp: Cusp, y: f64, t: u64) -> Result<TruncatedValue> {
    if !(y > 0.0) {
        return Err(Error::domain("y must be positive"));
    }
    let (u, v) = (p.u(), p.v());
    let (cu, cv, chi, psi, pre, e) = match cusp {
        Cusp::Infinity => (2.0 * u, 2.0 * v, p.chi().clone(), p.psi().clone(), Complex64::new(1.0, 0.0), -(u + v)),
        Cusp::Zero => {
            let cb = p.chi().conjugate();
            let pb = p.psi().conjugate();
            let pre = cpow(p.modulus() as f64, 1.0 + u + v) / (cb.gauss_sum() * pb.gauss_sum());
            (-2.0 * u, -2.0 * v, cb, pb, pre, u + v)
        }
    };
    let mut value = ZERO;
    let mut max_c: f64 = 0.0;
    for n in 1..=t as i64 {
        let c = 8.0 * pre * sigma(cu, n, &chi) * sigma(cv, n, &psi) * cpow(n as f64, e);
        max_c = max_c.max(c.norm());
        let arg = TAU * n as f64 * y;
        value += c * bessel_k(u, arg)? * bessel_k(v, arg)? * y;
    }
    Ok(TruncatedValue { value, tail_bound: pair_bound(max_c, y, t) })
}

/// `∫₀¹ V(z) e(−mx) dx` from the coefficient formulas, series truncated to
/// `|n| ≤ T`, `|n − m| ≤ T`.
pub fn v_fourier_coefficient(p: &ConvolutionParams, m: u64, y: f64, t: u64) -> Result<TruncatedValue> {
    check_certified(y)?;
    let (u, v) = (p.u(), p.v());
    if m == 0 {
        let poly = v_polynomial_coefficient(p)? * cpow(y, 1.0 + u + v);
        let c = c_series(p, Cusp::Infinity, y, t)?;
        return Ok(TruncatedValue { value: poly + c.value, tail_bound: c.tail_bound });
    }
    let n_mod = p.modulus() as f64;
    let cb = p.chi().conjugate();
    let pb = p.psi().conjugate();
    let mf = m as f64;
    let km = TAU * mf * y;
    let a = cpow(n_mod, 0.5 + u) / cb.gauss_sum()
        * completed_l(1.0 + 2.0 * u, &cb)?
        * 2.0
        * cpow(mf, -v)
        * sigma(2.0 * v, m as i64, p.psi())
        * bessel_k(v, km)?
        * cpow(y, 1.0 + u);
    let b = cpow(n_mod, 0.5 + v) / pb.gauss_sum()
        * completed_l(1.0 + 2.0 * v, &pb)?
        * 2.0
        * cpow(mf, -u)
        * sigma(2.0 * u, m as i64, p.chi())
        * bessel_k(u, km)?
        * cpow(y, 1.0 + v);
    let mut series = ZERO;
    let mut max_c: f64 = 0.0;
    let (ti, mi) = (t as i64, m as i64);
    for n in (mi - ti).max(-ti)..=ti.min(mi + ti) {
        if n == 0 || n == mi {
            continue;
        }
        let d = n - mi;
        let c = 4.0 * sigma(2.0 * u, n, p.chi()) * sigma(2.0 * v, d, p.psi())
            / (cpow(n.unsigned_abs() as f64, u) * cpow(d.unsigned_abs() as f64, v));
        max_c = max_c.max(c.norm());
        series += c
            * bessel_k(u, TAU * n.unsigned_abs() as f64 * y)?
            * bessel_k(v, TAU * d.unsigned_abs() as f64 * y)?
            * y;
    }
    let tail = if t <= 2 * m { f64::INFINITY } else { pair_bound(max_c, y, t - m) };
    Ok(TruncatedValue { value: a + b + series, tail_bound: tail })
}

/// Closed form of `∫₀^∞ C_𝔞(y) y^{s−1} dy/y`.
pub fn c_mellin_closed(p: &ConvolutionParams, s: Complex64, cusp: Cusp) -> Result<Complex64> {
    if !(s.re > p.width()) {
        return Err(Error::domain(format!(
            "ℜs = {} must exceed |ℜu| + |ℜv| = {}",
            s.re,
            p.width()
        )));
    }
    let (u, v) = (p.u(), p.v());
    let one = DirichletCharacter::trivial();
    let nf = p.modulus() as f64;
    let npow = cpow(nf, (s - u - v) / 2.0);
    let value = match cusp {
        Cusp::Infinity => {
            let den = npow * completed_l(2.0 * s, p.chi_psi())?;
            completed_l(s + u + v, &one)?
                * completed_l(s - u + v, p.chi())?
                * completed_l(s + u - v, p.psi())?
                * completed_l(s - u - v, p.chi_psi())?
                / nonzero(den, "Λ(2s,χψ)", s)?
        }
        Cusp::Zero => {
            let cb = p.chi().conjugate();
            let pb = p.psi().conjugate();
            let cpb = p.chi_psi().conjugate();
            let den = npow * completed_l(2.0 * s, &cpb)?;
            nf / (cb.gauss_sum() * pb.gauss_sum())
                * completed_l(s - u - v, &one)?
                * completed_l(s + u - v, &cb)?
                * completed_l(s - u + v, &pb)?
                * completed_l(s + u + v, &cpb)?
                / nonzero(den, "Λ(2s,conj χψ)", s)?
        }
    };
    Ok(value)
}

fn nonzero(x: Complex64, what: &str, at: Complex64) -> Result<Complex64> {
    if x.norm() < 1e-300 {
        return Err(Error::pole(format!("1/{what}"), at));
    }
    Ok(x)
}

/// The two Λ-ratio constants of `R`:
/// `A = τ(conj χψ)/(τ(χ̄)τ(ψ̄)) · Λ(1+2u,χ̄)Λ(1+2v,ψ̄)/Λ(2+2u+2v, conj χψ)` and
/// `B = Λ(1−2u,χ)Λ(1−2v,ψ)/Λ(2−2u−2v,χψ)`.
pub fn r_constants(p: &ConvolutionParams) -> Result<(Complex64, Complex64)> {
    let (u, v) = (p.u(), p.v());
    let cb = p.chi().conjugate();
    let pb = p.psi().conjugate();
    let cpb = p.chi_psi().conjugate();
    let w = 2.0 + 2.0 * u + 2.0 * v;
    let a = cpb.gauss_sum() / (cb.gauss_sum() * pb.gauss_sum())
        * completed_l(1.0 + 2.0 * u, &cb)?
        * completed_l(1.0 + 2.0 * v, &pb)?
        / nonzero(completed_l(w, &cpb)?, "Λ(2+2u+2v, conj χψ)", w)?;
    let w = 2.0 - 2.0 * u - 2.0 * v;
    let b = completed_l(1.0 - 2.0 * u, p.chi())? * completed_l(1.0 - 2.0 * v, p.psi())?
        / nonzero(completed_l(w, p.chi_psi())?, "Λ(2−2u−2v, χψ)", w)?;
    Ok((a, b))
}

/// `∫₀¹ R(z) e(−kx) dx` at height `y`.
pub fn r_fourier_coefficient(p: &ConvolutionParams, y: f64) -> Result<Complex64> {
    if !(y > 0.0) {
        return Err(Error::domain("y must be positive"));
    }
    let (a, b) = r_constants(p)?;
    let uv = p.u() + p.v();
    let k = p.k();
    let kf = k as f64;
    let arg = TAU * kf * y;
    let t1 = a * 2.0 * cpow(kf, -uv - 0.5) * sigma(2.0 * uv + 1.0, k as i64, p.chi_psi()) * bessel_k(uv + 0.5, arg)?;
    let t2 = b * 2.0 * cpow(kf, -uv + 0.5) * sigma(2.0 * uv - 1.0, k as i64, p.chi_psi()) * bessel_k(uv - 0.5, arg)?;
    Ok((t1 + t2) * y.sqrt())
}

/// Closed form of `∫₀^∞ r_k(y) y^{s−1} dy/y`.
pub fn r_coeff_mellin_closed(p: &ConvolutionParams, s: Complex64) -> Result<Complex64> {
    let uv = p.u() + p.v();
    if !(s.re > 1.0 + uv.re.abs()) {
        return Err(Error::domain(format!(
            "ℜs = {} must exceed 1 + |ℜ(u+v)| = {}",
            s.re,
            1.0 + uv.re.abs()
        )));
    }
    let (a, b) = r_constants(p)?;
    let k = p.k();
    let kf = k as f64;
    let pi_pow = cpow(std::f64::consts::PI, s - 0.5);
    let t1 = a * sigma(2.0 * uv + 1.0, k as i64, p.chi_psi()) / (2.0 * pi_pow * cpow(kf, s + uv))
        * gamma_ratio(&[(s + uv) / 2.0, (s - 1.0 - uv) / 2.0], &[])?;
    let t2 = b * sigma(2.0 * uv - 1.0, k as i64, p.chi_psi()) / (2.0 * pi_pow * cpow(kf, s - 1.0 + uv))
        * gamma_ratio(&[(s - uv) / 2.0, (s - 1.0 + uv) / 2.0], &[])?;
    Ok(t1 + t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn fricke_exact_point() {
        let z = UpperHalfPoint::from_rational(q(1, 10), q(2, 5)).unwrap();
        let w = z.fricke(7).unwrap();
        let (x, y) = w.exact().unwrap();
        assert_eq!(x, q(-10, 119));
        assert_eq!(y, q(40, 119));
        let f = -1.0 / (7.0 * z.z());
        assert!((w.z() - f).norm() < 1e-15);
    }

    #[test]
    fn certificate_floor() {
        let psi = DirichletCharacter::new(7, 2).unwrap();
        let fam = EisensteinFamily::one_psi_bar(psi).unwrap();
        let z = UpperHalfPoint::new(0.0, 0.2).unwrap();
        assert!(matches!(eisenstein_star(&fam, &z, c(0.4, 0.6), 10), Err(Error::Domain(_))));
        assert!(UpperHalfPoint::new(0.0, -1.0).is_err());
    }

    #[test]
    fn truncation_tail() {
        let psi = DirichletCharacter::new(7, 4).unwrap();
        let fam = EisensteinFamily::psi_one(psi).unwrap();
        let z = UpperHalfPoint::new(0.3, 1.1).unwrap();
        let s = c(0.4, 0.6);
        let a = eisenstein_star(&fam, &z, s, 3).unwrap();
        let b = eisenstein_star(&fam, &z, s, 6).unwrap();
        assert!((a.value - b.value).norm() < a.tail_bound);
    }

    #[test]
    fn fricke_relation() {
        let psi = DirichletCharacter::new(7, 2).unwrap();
        let z = UpperHalfPoint::from_rational(q(3, 10), q(1, 2)).unwrap();
        let d = fricke_defect(&psi, &z, c(0.4, 0.6), 60);
        // Im σ₀z < 0.3 here
        assert!(d.is_err());
        let z = UpperHalfPoint::from_rational(q(1, 10), q(2, 5)).unwrap();
        assert!(fricke_defect(&psi, &z, c(0.4, 0.6), 40).unwrap() < 1e-9);
    }

    #[test]
    fn r_swap_invariance() {
        let p = ConvolutionParams::new(11, 2, 4, c(0.1, 0.3), c(-0.05, 0.2), 3, 0.1).unwrap();
        let s = c(2.4, 1.0);
        let a = r_coeff_mellin_closed(&p, s).unwrap();
        let b = r_coeff_mellin_closed(&p.swapped(), s).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
    }
}
