use darboux::series::RadicalSeries;
use darboux::verify::named::CompanionAtP3Root;
use darboux::verify::{rank_check, solve_connection_constants};

#[test]
fn companions_at_a_root_of_p3_lie_in_the_span_of_the_renormalized_radicals() {
    let n = 30;
    let c = CompanionAtP3Root::new(n).unwrap();
    let p3 = darboux::belyi::maps::p3().lift(&c.field).unwrap();
    assert!(p3.eval(&c.x0).unwrap().is_zero());
    let ys: Vec<RadicalSeries> = c.y.iter().map(RadicalSeries::from_series).collect();
    assert_eq!(rank_check(&ys, n).unwrap(), 3);
    let mut all = ys.clone();
    all.extend(c.companions.iter().map(RadicalSeries::from_series));
    assert_eq!(rank_check(&all, n).unwrap(), 3);
    for f in &c.companions {
        let k = solve_connection_constants(&RadicalSeries::from_series(f), &ys, 8).unwrap();
        let k = k.expect("a constant vector consistent with every coefficient");
        assert_eq!(k.len(), 3);
        assert!(k.iter().any(|x| !x.is_zero()));
    }
}

#[test]
fn companion_local_exponents_are_zero_one_three() {
    let c = CompanionAtP3Root::new(12).unwrap();
    let v: Vec<Option<usize>> = c.companions.iter().map(|f| f.valuation()).collect();
    assert_eq!(v, vec![Some(0), Some(1), Some(3)]);
}
