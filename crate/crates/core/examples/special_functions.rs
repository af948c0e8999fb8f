// Scalar special functions: Γ, Φ, ₂F₁ near unit argument, K(m), Ferrers P.

use pcfprod::specfun::{elliptic_k, gamma, gauss_2f1, gauss_2f1_near_unity, kummer_phi, legendre_p, HypParams};

pub fn run_example() -> pcfprod::Result<()> {
    println!("Gamma(0.5)      = {:.15}", gamma(0.5)?);
    println!("Phi(-0.3;1.5;2) = {:.15}", kummer_phi(-0.3, 1.5, 2.0)?.value);

    let f = gauss_2f1(HypParams::new(0.5, 0.5, 1.5, 0.25))?;
    println!("F(1/2,1/2;3/2;1/4) = {:.15} (pi/3 = {:.15})", f.value, std::f64::consts::FRAC_PI_3);

    // 1 - z passed exactly, so z = 1 - 1e-12 loses nothing
    let near = gauss_2f1_near_unity(HypParams::new(-0.25, -0.3, 0.775, 1.0 - 1e-12), 1e-12)?;
    println!("F(-0.25,-0.3;0.775;1-1e-12) = {:.15}", near.value);

    println!("K(0.5)          = {:.15}", elliptic_k(0.5)?);
    println!("P_-0.5^0.5(0.3) = {:.15}", legendre_p(-0.5, 0.5, 0.3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
