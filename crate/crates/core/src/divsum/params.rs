use num_complex::Complex64;

use crate::chars::{is_prime, DirichletCharacter};
use crate::error::{Error, Result};

/// `(N, χ, ψ, u, v, k, ε)` with the hypotheses of the main theorem checked.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvolutionParams {
    n: u64,
    chi: DirichletCharacter,
    psi: DirichletCharacter,
    chi_psi: DirichletCharacter,
    u: Complex64,
    v: Complex64,
    k: u64,
    epsilon: f64,
}

impl ConvolutionParams {
    pub fn new(
        n: u64,
        chi_index: u64,
        psi_index: u64,
        u: Complex64,
        v: Complex64,
        k: u64,
        epsilon: f64,
    ) -> Result<Self> {
        if !is_prime(n) {
            return Err(Error::NotPrime(n));
        }
        let chi = DirichletCharacter::new(n, chi_index)?;
        let psi = DirichletCharacter::new(n, psi_index)?;
        Self::from_characters(chi, psi, u, v, k, epsilon)
    }

    pub fn from_characters(
        chi: DirichletCharacter,
        psi: DirichletCharacter,
        u: Complex64,
        v: Complex64,
        k: u64,
        epsilon: f64,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        if !chi.is_even_primitive() || !psi.is_even_primitive() {
            return bad("χ and ψ must be even and nontrivial".into());
        }
        let chi_psi = chi.product(&psi)?;
        if chi_psi.is_principal() {
            return bad("χψ must be nontrivial".into());
        }
        if u == Complex64::new(0.0, 0.0) || v == Complex64::new(0.0, 0.0) {
            return bad("u and v must be nonzero".into());
        }
        let width = u.re.abs() + v.re.abs();
        if !(width < 0.5) {
            return bad(format!("|ℜu| + |ℜv| = {width} must be < 1/2"));
        }
        if !(epsilon > 0.0 && epsilon < 0.5 - width) {
            return bad(format!("ε = {epsilon} must lie in (0, {})", 0.5 - width));
        }
        if k == 0 {
            return bad("k must be a positive integer".into());
        }
        Ok(ConvolutionParams {
            n: chi.modulus(),
            chi,
            psi,
            chi_psi,
            u,
            v,
            k,
            epsilon,
        })
    }

    /// N = 7, χ = ψ = index 2, k = 1, u = 0.10i, v = 0.07i, ε = 0.1.
    pub fn default_config() -> Self {
        Self::new(7, 2, 2, Complex64::new(0.0, 0.10), Complex64::new(0.0, 0.07), 1, 0.1)
            .expect("default configuration is admissible")
    }

    pub fn with_uv(&self, u: Complex64, v: Complex64) -> Result<Self> {
        Self::from_characters(self.chi.clone(), self.psi.clone(), u, v, self.k, self.epsilon)
    }

    pub fn with_k(&self, k: u64) -> Result<Self> {
        Self::from_characters(self.chi.clone(), self.psi.clone(), self.u, self.v, k, self.epsilon)
    }

    /// `(u, χ) ↔ (v, ψ)`.
    pub fn swapped(&self) -> Self {
        ConvolutionParams {
            chi: self.psi.clone(),
            psi: self.chi.clone(),
            u: self.v,
            v: self.u,
            ..self.clone()
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }
    pub fn chi(&self) -> &DirichletCharacter {
        &self.chi
    }
    pub fn psi(&self) -> &DirichletCharacter {
        &self.psi
    }
    pub fn chi_psi(&self) -> &DirichletCharacter {
        &self.chi_psi
    }
    pub fn u(&self) -> Complex64 {
        self.u
    }
    pub fn v(&self) -> Complex64 {
        self.v
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    /// `|ℜu| + |ℜv|`.
    pub fn width(&self) -> f64 {
        self.u.re.abs() + self.v.re.abs()
    }
}
