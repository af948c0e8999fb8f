// D_ν(z) and the identities tying it to erfc and K_{1/4}.

use std::f64::consts::PI;

use pcfprod::pcf::{pcf_d, pcf_d_extended, pcf_sum_residuals};
use pcfprod::specfun::{bessel_k, erfc};

pub fn run_example() -> pcfprod::Result<()> {
    for &z in &[-2.0, 0.0, 1.0, 5.0] {
        let d = pcf_d(-1.0, z)?;
        let closed = (z * z / 4.0).exp() * (PI / 2.0).sqrt() * erfc(z / 2f64.sqrt());
        println!("D_-1({z:>4}) = {:.15e} +- {:.1e}   erfc form {:.15e}", d.value, d.abs_err_est, closed);
    }

    let z = 1.3;
    let k = (z / (2.0 * PI)).sqrt() * bessel_k(0.25, z * z / 4.0)?;
    println!("D_-1/2(1.3) = {:.15e}   K_1/4 form {:.15e}", pcf_d(-0.5, z)?.value, k);

    // the Kummer bracket cancels heavily at large positive z
    let e = pcf_d_extended(-0.5, 8.0)?;
    println!("D_-1/2(8): cancellation {:.1e}, relative error bound {:.1e}", e.cancellation, e.abs_err / e.value.hi.abs());

    let r = pcf_sum_residuals(-1.2, 2.0)?;
    println!("sum/difference residuals at nu=-1.2, z=2: {:.1e} {:.1e}", r.sum, r.difference);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
