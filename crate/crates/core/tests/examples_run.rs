macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(special_functions, "special_functions.rs");
example!(parabolic_cylinder, "parabolic_cylinder.rs");
example!(quadrature, "quadrature.rs");
example!(product_dd, "product_dd.rs");
example!(negated_argument, "negated_argument.rs");
example!(kummer_product, "kummer_product.rs");
example!(specializations, "specializations.rs");
example!(oracle_laplace, "oracle_laplace.rs");
example!(verify_report, "verify_report.rs");

#[test]
fn special_functions_runs() {
    special_functions::run_example().unwrap();
}

#[test]
fn parabolic_cylinder_runs() {
    parabolic_cylinder::run_example().unwrap();
}

#[test]
fn quadrature_runs() {
    quadrature::run_example().unwrap();
}

#[test]
fn product_dd_runs() {
    product_dd::run_example().unwrap();
}

#[test]
fn negated_argument_runs() {
    negated_argument::run_example().unwrap();
}

#[test]
fn kummer_product_runs() {
    kummer_product::run_example().unwrap();
}

#[test]
fn specializations_runs() {
    specializations::run_example().unwrap();
}

#[test]
fn oracle_laplace_runs() {
    oracle_laplace::run_example().unwrap();
}

#[test]
fn verify_report_runs() {
    verify_report::run_example().unwrap();
}
