// Extended-precision direct products and Laplace-transform residuals.

use pcfprod::oracle::{direct_product, laplace_residual, LaplaceIdentity};
use pcfprod::products::EvalPoint;

pub fn run_example() -> pcfprod::Result<()> {
    let o = direct_product(-0.5, 0.5, -2.0, 1.0)?;
    println!("D_-1/2(-2) D_1/2(1) = {:.15e}, {} guaranteed digits", o.value, o.guaranteed_digits);

    let pt = EvalPoint::new(-0.5, -0.7, 1.0, 0.8);
    for id in LaplaceIdentity::ALL {
        if !id.admits(&pt) {
            println!("{id}: outside its bracket at {pt:?}");
            continue;
        }
        for &p in &[0.7, 1.0, 2.0] {
            println!("{id} p={p}: residual {:.1e}", laplace_residual(id, p, pt)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
