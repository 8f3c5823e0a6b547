//! Γ, K-Bessel of complex order, `₂F₁`, and Mellin transforms.

pub mod bessel;
pub mod gamma;
pub mod hyp2f1;
pub mod mellin;

pub use bessel::{bessel_k, bessel_k_scaled};
pub use gamma::{gamma, gamma_ratio, ln_gamma, rgamma};
pub use hyp2f1::hyp2f1;
pub use mellin::{
    bessel_mellin_closed, bessel_product_mellin_closed, mellin_quadrature, MellinQuadrature,
    QuadratureSpec, Transform,
};
