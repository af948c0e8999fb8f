// D_ν(x) D_μ(y) from the Gauss-function integral and its Legendre form.

use pcfprod::oracle::direct_product;
use pcfprod::products::{EvalPoint, Evaluator};

pub fn run_example() -> pcfprod::Result<()> {
    let ev = Evaluator::default();

    let v = ev.dd(EvalPoint::new(-1.0, -1.0, 0.0, 0.0))?;
    println!("D_-1(0)^2 = {:.15} (pi/2)", v.value);

    for pt in [EvalPoint::new(-0.5, 0.5, 1.0, 2.5), EvalPoint::new(0.5, -1.5, 2.0, 0.25)] {
        let a = ev.dd(pt)?;
        let b = ev.dd_legendre(pt)?;
        let o = direct_product(pt.nu, pt.mu, pt.x, pt.y)?;
        println!(
            "{:?}\n  4.1 {:.15e} (swapped {})\n  4.2 {:.15e}\n  direct {:.15e} ({} digits)",
            pt, a.value, a.swapped, b.value, o.value, o.guaranteed_digits
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
