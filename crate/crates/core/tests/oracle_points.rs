//! The direct-product oracle against the committed 30-digit table.

use pcfprod::dd::Dd;
use pcfprod::oracle::direct_product;

#[test]
fn matches_committed_table_to_claimed_digits() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/oracle_points.csv");
    let mut rdr = csv::Reader::from_path(path).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["nu", "mu", "x_signed", "y", "value_30digits"]);
    let mut n = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let f = |i: usize| rec[i].parse::<f64>().unwrap();
        let want = Dd::parse(&rec[4]).unwrap_or_else(|| panic!("unparsable {}", &rec[4]));
        let o = direct_product(f(0), f(1), f(2), f(3)).unwrap();
        assert!(o.guaranteed_digits >= 12, "row {n}: only {} digits", o.guaranteed_digits);
        let diff = (o.extended - want).abs().to_f64();
        let claimed = 10f64.powi(-(o.guaranteed_digits as i32)) * want.to_f64().abs();
        assert!(diff <= claimed, "row {n}: |diff| {diff:e} exceeds the claimed {} digits", o.guaranteed_digits);
        assert!(diff <= o.abs_err, "row {n}: |diff| {diff:e} exceeds the error bound {:e}", o.abs_err);
        n += 1;
    }
    assert_eq!(n, 20);
}
