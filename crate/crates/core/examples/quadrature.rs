// The two quadrature shapes with singular endpoint powers.

use pcfprod::quad::{integrate, Node, QuadSpec};
use pcfprod::specfun::gamma;
use pcfprod::specfun::reductions::beta;

pub fn run_example() -> pcfprod::Result<()> {
    let one = |_: Node| -> pcfprod::Result<f64> { Ok(1.0) };

    // ∫_0^∞ e^{-t} t^{-0.9} dt = Γ(0.1)
    let q = integrate(&QuadSpec::semi_infinite(0.0, -0.9, &one))?;
    println!("Gamma(0.1): {:.15e} vs {:.15e}, {} evals", q.value, gamma(0.1)?, q.evals);

    // ∫_0^1 t^{-0.5} (1-t)^{0.7} dt = B(0.5, 1.7)
    let q = integrate(&QuadSpec::finite(0.0, 1.0, -0.5, 0.7, &one))?;
    println!("B(0.5,1.7):  {:.15e} vs {:.15e}", q.value, beta(0.5, 1.7)?);

    // the integrand sees exact distances to both ends
    let g = |n: Node| -> pcfprod::Result<f64> { Ok((n.from_lower * n.to_upper).sqrt()) };
    let q = integrate(&QuadSpec::finite(2.0, 3.0, 0.0, 0.0, &g))?;
    println!("int_2^3 sqrt((t-2)(3-t)) dt = {:.15e} (pi/8 = {:.15e})", q.value, std::f64::consts::PI / 8.0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
