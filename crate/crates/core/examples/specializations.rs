// K_{1/4}·K_{1/4}, erfc·erfc, D_ν·I_{1/4} and D_ν(-x)·erfc.

use pcfprod::oracle::reference;
use pcfprod::products::{EvalPoint, Evaluator, Representation};

pub fn run_example() -> pcfprod::Result<()> {
    let ev = Evaluator::default();
    let cases = [
        (Representation::KK, EvalPoint::new(0.0, 0.0, 1.0, 0.5)),
        (Representation::Erfc2, EvalPoint::new(0.0, 0.0, 0.25, 1.0)),
        (Representation::DI, EvalPoint::new(-0.5, 0.0, 0.25, 3.0)),
        (Representation::DnegErfc, EvalPoint::new(-1.0, 0.0, 1.0, 1.5)),
    ];
    for (rep, pt) in cases {
        let v = ev.eval(rep, pt)?;
        let o = reference(rep, pt)?;
        println!("{:<9} {:.15e}  direct {:.15e}  rel {:.1e}", rep.tag(), v.value, o.value, (v.value - o.value).abs() / o.value.abs());
    }
    println!("erfc(0)^2 = {:.15}", ev.erfc2(0.0, 0.0)?.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
