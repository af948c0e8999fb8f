// Run the verification suites in-process and inspect the report.

use pcfprod::cli::{run_suites, Suite};
use pcfprod::products::Evaluator;

pub fn run_example() -> pcfprod::Result<()> {
    let report = run_suites(&[Suite::Identities, Suite::Products, Suite::Laplace], &Evaluator::default(), 1e-8);
    let s = &report.summary;
    println!("{}/{} rows pass, max rel diff {:.2e}", s.passed, s.total, s.max_rel_diff);
    println!("{} audited terms, {} failed", s.audit_terms, s.audit_failed);

    let worst = report.audit.iter().filter_map(|a| a.implied_factor.map(|f| (f - 1.0).abs())).fold(0.0, f64::max);
    println!("largest |implied factor - 1| over the three-term forms: {worst:.1e}");
    for r in report.rows.iter().filter(|r| !r.pass) {
        println!("FAIL {} {:?}: {}", r.rep, (r.nu, r.mu, r.x, r.y), r.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pcfprod::Result<()> {
    run_example()
}
