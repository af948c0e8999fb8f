// D_ν(-x) D_μ(y) through the three-term forms, with their terms listed.

use pcfprod::oracle::direct_product;
use pcfprod::products::{EvalPoint, Evaluator};

pub fn run_example() -> pcfprod::Result<()> {
    let ev = Evaluator::default();
    let pt = EvalPoint::new(-0.5, -0.5, 1.0, 1.0);
    let target = direct_product(pt.nu, pt.mu, -pt.x, pt.y)?.value;
    println!("direct D_-1/2(-1) D_-1/2(1) = {target:.15e}");

    for b in [ev.dneg_d_43_terms(pt)?, ev.dneg_d_44_terms(pt)?] {
        println!("{}:", b.representation);
        for t in &b.terms {
            println!("  {:>4}  coef {:>+.6e}  integral {:>+.6e}  term {:>+.6e}", t.label, t.coefficient, t.integral.value, t.value());
        }
        println!("  sum {:.15e}", b.total()?.value);
    }

    let d = ev.dneg_dispatch(EvalPoint::new(-1.5, -0.5, 2.0, 0.5))?;
    println!("dispatch at nu=-1.5 picks {}: {:.15e}", d.representation, d.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
