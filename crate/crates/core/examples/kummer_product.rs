// D_ν(x) Φ((1-μ)/2; 3/2; y).

use pcfprod::pcf::pcf_d;
use pcfprod::products::{EvalPoint, Evaluator};
use pcfprod::specfun::kummer_phi;

pub fn run_example() -> pcfprod::Result<()> {
    let ev = Evaluator::default();
    for &(nu, mu, x, y) in &[(-0.5, 0.0, 1.0, 1.0), (-1.5, 0.9, 0.25, 2.5), (-0.1, -1.5, 2.5, 0.25)] {
        let v = ev.d_phi(EvalPoint::new(nu, mu, x, y))?;
        let direct = pcf_d(nu, x)?.value * kummer_phi((1.0 - mu) / 2.0, 1.5, y)?.value;
        println!("nu={nu:<5} mu={mu:<5} x={x:<5} y={y:<5} {:.15e}  direct {:.15e}", v.value, direct);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
