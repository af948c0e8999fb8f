//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use pcfprod::cli::verify::{self, AuditRow, ReportRow};
use pcfprod::oracle::LaplaceIdentity;
use pcfprod::products::{Evaluator, Representation};

const PRODUCT_TOL: f64 = 1e-8;
const AGREEMENT_TOL: f64 = 1e-7;
const LAPLACE_TOL: f64 = 1e-8;
const GRID_BUDGET: Duration = Duration::from_secs(120);
const IDENTITY_BUDGET: Duration = Duration::from_secs(30);

struct Verdict {
    n: usize,
    what: &'static str,
    pass: bool,
    detail: String,
}

fn rows<'a>(all: &'a [ReportRow], rep: &'a str) -> Vec<&'a ReportRow> {
    all.iter().filter(|r| r.rep == rep).collect()
}

fn max_rel(rs: &[&ReportRow]) -> f64 {
    rs.iter().map(|r| r.rel_diff).fold(0.0, f64::max)
}

fn all_pass(rs: &[&ReportRow], tol: f64) -> bool {
    !rs.is_empty() && rs.iter().all(|r| r.pass && r.threshold <= tol)
}

fn failures(rs: &[&ReportRow]) -> String {
    let bad: Vec<String> = rs.iter().filter(|r| !r.pass).take(3).map(|r| format!("{} at ({}, {}, {}, {}): {}", r.rep, r.nu, r.mu, r.x, r.y, r.detail)).collect();
    if bad.is_empty() { String::new() } else { format!("; first failures: {}", bad.join(" | ")) }
}

fn grid_verdict(n: usize, what: &'static str, rs: Vec<&ReportRow>, expected: usize, tol: f64, extra: String) -> Verdict {
    let pass = all_pass(&rs, tol) && rs.len() == expected;
    Verdict { n, what, pass, detail: format!("{}/{} points, max rel diff {:.2e}{}{}", rs.iter().filter(|r| r.pass).count(), expected, max_rel(&rs), extra, failures(&rs)) }
}

fn main() {
    let ev = Evaluator::default();
    let mut out = Vec::new();

    let t0 = Instant::now();
    let products = verify::products_suite(&ev, PRODUCT_TOL);
    let products_time = t0.elapsed();

    let n41 = verify::product_grid(Representation::R41).len();
    let mut v = grid_verdict(1, "(4.1) vs direct oracle on the grid", rows(&products, "4.1"), n41, PRODUCT_TOL, format!(", product suite {:.2?}", products_time));
    v.pass &= products_time < GRID_BUDGET;
    out.push(v);

    let n42 = verify::product_grid(Representation::R42).len();
    out.push(grid_verdict(2, "(4.2) vs (4.1) on interior points", rows(&products, "4.2-vs-4.1"), n42, AGREEMENT_TOL, String::new()));

    let n43 = verify::product_grid(Representation::R43).len();
    let n44 = verify::product_grid(Representation::R44).len();
    let overlap = verify::product_grid(Representation::R44).iter().filter(|p| p.mu < 0.0).count();
    let r43 = rows(&products, "4.3");
    let r44 = rows(&products, "4.4");
    let mutual = rows(&products, "4.3-vs-4.4");
    let pass = all_pass(&r43, PRODUCT_TOL) && r43.len() == n43 && all_pass(&r44, PRODUCT_TOL) && r44.len() == n44 && all_pass(&mutual, AGREEMENT_TOL) && mutual.len() == overlap;
    out.push(Verdict {
        n: 3,
        what: "(4.3)/(4.4) vs oracle and mutual agreement",
        pass,
        detail: format!(
            "4.3 {} pts max {:.2e}, 4.4 {} pts max {:.2e}, overlap {} pts max {:.2e}{}",
            r43.len(), max_rel(&r43), r44.len(), max_rel(&r44), mutual.len(), max_rel(&mutual),
            failures(&[r43.clone(), r44.clone(), mutual.clone()].concat())
        ),
    });

    out.push(grid_verdict(4, "(5.1) vs D x Phi on the 3x3x3x3 grid", rows(&products, "5.1"), 81, PRODUCT_TOL, String::new()));

    let mut ok = true;
    let mut detail = Vec::new();
    for rep in ["kk", "erfc2", "di", "dneg-erfc"] {
        let rs = rows(&products, rep);
        ok &= all_pass(&rs, PRODUCT_TOL) && rs.len() >= 6;
        detail.push(format!("{rep} {} pts max {:.2e}", rs.len(), max_rel(&rs)));
    }
    let via = rows(&products, "kk-via-4.1");
    ok &= all_pass(&via, PRODUCT_TOL) && via.len() == 3;
    detail.push(format!("KK via (4.1) max {:.2e}", max_rel(&via)));
    let origin = rows(&products, "erfc2-origin");
    ok &= origin.len() == 1 && origin[0].pass;
    detail.push(format!("erfc2(0,0) - 1 = {:.1e}", origin.first().map_or(f64::NAN, |r| r.value - 1.0)));
    out.push(Verdict { n: 5, what: "specializations vs direct factors", pass: ok, detail: detail.join(", ") });

    let laplace = verify::laplace_suite(LAPLACE_TOL);
    let lr: Vec<&ReportRow> = laplace.iter().collect();
    let tags_covered = LaplaceIdentity::ALL.iter().all(|id| laplace.iter().filter(|r| r.rep.starts_with(&format!("{}@", id.tag())) && r.pass).count() == 9);
    out.push(Verdict {
        n: 6,
        what: "Laplace residuals, 7 identities x 3 tuples x p in {0.7, 1, 2}",
        pass: all_pass(&lr, LAPLACE_TOL) && lr.len() == 63 && tags_covered,
        detail: format!("{} residuals, max {:.2e}{}", lr.len(), max_rel(&lr), failures(&lr)),
    });

    let t0 = Instant::now();
    let identities = verify::identities_suite();
    let id_time = t0.elapsed();
    let ir: Vec<&ReportRow> = identities.iter().filter(|r| !r.rep.starts_with("quadrature-")).collect();
    let families = ["kummer-transform", "pcf-sum", "pcf-difference", "pcf-erfc", "pcf-bessel-k", "euler", "pfaff-a", "pfaff-b", "quadratic", "quadratic-ferrers", "beta-form", "three-halves-ferrers", "elliptic-k", "arcsin-form", "ferrers-equal", "one-three-halves-beta"];
    let present = families.iter().all(|f| ir.iter().any(|r| r.rep == *f));
    out.push(Verdict {
        n: 7,
        what: "special-function identity suites",
        pass: !ir.is_empty() && ir.iter().all(|r| r.pass) && present && id_time < IDENTITY_BUDGET,
        detail: format!("{} checks in {} families, worst rel {:.2e}, {:.2?}{}", ir.len(), families.len(), max_rel(&ir), id_time, failures(&ir)),
    });

    let qr: Vec<&ReportRow> = identities.iter().filter(|r| r.rep.starts_with("quadrature-")).collect();
    out.push(Verdict {
        n: 8,
        what: "quadrature Gamma/Beta exactness",
        pass: qr.len() == 20 && all_pass(&qr, 1e-12),
        detail: format!("{} integrals, max rel {:.2e}{}", qr.len(), max_rel(&qr), failures(&qr)),
    });

    let audit: Vec<AuditRow> = verify::audit(&ev, PRODUCT_TOL);
    let points = verify::product_grid(Representation::R43).iter().filter(|p| p.x > 0.0).count() + verify::product_grid(Representation::R44).iter().filter(|p| p.x > 0.0).count();
    let per_point = audit.len() == 4 * points;
    let detectable = audit.iter().filter(|a| a.factor_two_detectable).count();
    let failed = audit.iter().filter(|a| !a.pass).count();
    out.push(Verdict {
        n: 9,
        what: "per-term coefficient audit of (4.3)/(4.4)",
        pass: per_point && failed == 0 && !audit.is_empty(),
        detail: format!("{} terms over {} points, {} failed, factor-of-2 detectable in {}", audit.len(), points, failed, detectable),
    });

    for v in &out {
        println!("criterion {} [{}] {}: {}", v.n, if v.pass { "PASS" } else { "FAIL" }, v.what, v.detail);
    }
    let failed: Vec<usize> = out.iter().filter(|v| !v.pass).map(|v| v.n).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria pass", out.len());
}
