//! End-to-end kernels of the standard examples, compared by module equality
//! with the published generator matrices.

use ore_vmpum::expr::{parse_poly, parse_signal};
use ore_vmpum::gb::{module_equal, BaseOrder, ModuleVector, MonomialOrder, Submodule};
use ore_vmpum::modops::OpConfig;
use ore_vmpum::oracle::{difference_oracle_kernel, weyl_oracle_kernel};
use ore_vmpum::orecore::{AlgebraSpec, OrePoly};
use ore_vmpum::verify::check_annihilation;
use ore_vmpum::vmpum::{kernel_kappa, minimize_generators, vmpum_of, Minimizer, SignalSet};

fn rows(spec: &AlgebraSpec, rows: &[&[&str]]) -> Submodule {
    let gens: Vec<_> = rows
        .iter()
        .map(|r| ModuleVector(r.iter().map(|e| parse_poly(spec, e).unwrap()).collect()))
        .collect();
    Submodule::new(spec, gens[0].rank(), gens).unwrap()
}

fn single(spec: &AlgebraSpec, s: &str) -> SignalSet {
    SignalSet::from_polys(spec, vec![vec![parse_poly(spec, s).unwrap()]]).unwrap()
}

const CUSP: &str = "t1^3 - t2^2";

const WEYL_ROWS: &[&[&str]] = &[
    &["d2^3"],
    &["d1*d2"],
    &["d1^3 + 3*d2^2"],
    &["t2*d2^2 - d2"],
    &["t2*d1^2 + 3*t1*d2"],
    &["2*t1*d1 + 3*t2*d2 - 6"],
];

const DIFFERENCE_ROWS: &[&[&str]] = &[
    &["D2^3"],
    &["D1*D2"],
    &["D1^3 + 3*D2^2"],
    &["2*t2*D2^2 + D2^2 - 2*D2"],
    &["2*t2*D1^2 + D1^2 + 6*t1*D2 + 6*D2"],
    &["8*D1^2 + 21*D2^2 + 24*t1*D1 + 36*t2*D2 - 24*D1 - 18*D2 - 72"],
];

#[test]
fn cuspidal_weyl() {
    let w = AlgebraSpec::weyl(2);
    let set = single(&w, CUSP);
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    let published = rows(&w, WEYL_ROWS);
    assert!(module_equal(&r.submodule(1).unwrap(), &published).unwrap());
    assert!(check_annihilation(&r, &set).unwrap().pass);

    let min = minimize_generators(&r, Minimizer::Greedy, &OpConfig::default()).unwrap();
    assert_eq!(min.rows.len(), 3);
    assert!(module_equal(&min.submodule(1).unwrap(), &published).unwrap());
    let three = rows(&w, &[&["d1*d2"], &["d1^3 + 3*d2^2"], &["2*t1*d1 + 3*t2*d2 - 6"]]);
    assert!(module_equal(&three, &published).unwrap());

    // no row of the minimized set is redundant
    for i in 0..min.rows.len() {
        let mut rest = min.rows.clone();
        let dropped = rest.remove(i);
        assert!(!Submodule::new(&w, 1, rest).unwrap().contains(&dropped).unwrap());
    }
}

#[test]
fn cuspidal_difference() {
    let s = AlgebraSpec::difference(2);
    let set = single(&s, CUSP);
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    assert!(module_equal(&r.submodule(1).unwrap(), &rows(&s, DIFFERENCE_ROWS)).unwrap());
    assert!(check_annihilation(&r, &set).unwrap().pass);
}

#[test]
fn cuspidal_sw() {
    let sw = AlgebraSpec::sw(2);
    let set = single(&sw, CUSP);
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    let published = rows(
        &sw,
        &[
            &["D2^3"],
            &["D1*D2"],
            &["D1^3 + 3*D2^2"],
            &["2*d2 + D2^2 - 2*D2"],
            &["2*d1 + D1^2 - 2*D1 + 2*D2^2"],
            &["2*t2*D2^2 + D2^2 - 2*D2"],
            &["2*t2*D1^2 + D1^2 + 6*t1*D2 + 6*D2"],
            &["8*D1^2 + 21*D2^2 + 24*t1*D1 + 36*t2*D2 - 24*D1 - 18*D2 - 72"],
        ],
    );
    let k = r.submodule(1).unwrap();
    assert!(module_equal(&k, &published).unwrap());
    for row in DIFFERENCE_ROWS {
        let v = ModuleVector(vec![parse_poly(&sw, row[0]).unwrap()]);
        assert!(k.contains(&v).unwrap());
    }
    assert!(check_annihilation(&r, &set).unwrap().pass);

    // the reverse operator precedence gives another generating set of the same module
    let rev = OpConfig::with_order(MonomialOrder::new(&sw, BaseOrder::DegRevLex, false));
    let r2 = vmpum_of(&set, &rev).unwrap();
    assert!(module_equal(&r2.submodule(1).unwrap(), &published).unwrap());
}

#[test]
fn cuspidal_qdiff() {
    let s = AlgebraSpec::qdiff(2);
    let set = single(&s, CUSP);
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    let published = rows(
        &s,
        &[
            &["d2^2 + (-q^2 + 1)*d2"],
            &["(-q - 1)*d1 + (-q^2 - q - 1)*d2 + (q^4 + q^3 - q - 1)"],
            &["t1^3*d2 - t2^2*d2 + (q^2 - 1)*t2^2"],
        ],
    );
    assert!(module_equal(&r.submodule(1).unwrap(), &published).unwrap());
    assert!(check_annihilation(&r, &set).unwrap().pass);
}

#[test]
fn two_signal_intersection() {
    let w = AlgebraSpec::weyl(1);
    let set = SignalSet::from_polys(&w, vec![vec![parse_poly(&w, "t").unwrap()], vec![parse_poly(&w, "2*t - t^2").unwrap()]]).unwrap();
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    let expected = rows(&w, &[&["t1^2*d1^2 - 2*t1*d1 + 2"], &["d1^3"]]);
    assert!(module_equal(&r.submodule(1).unwrap(), &expected).unwrap());
    assert!(check_annihilation(&r, &set).unwrap().pass);
}

#[test]
fn vector_signal_both_routes() {
    let s = AlgebraSpec::difference(1);
    let p = [parse_poly(&s, "t^3").unwrap(), parse_poly(&s, "t").unwrap()];
    let expected = rows(&s, &[&["0", "D1^2"], &["0", "t1*D1 - 1"], &["1", "-t1^2"]]);
    let direct = kernel_kappa(&s, &p, &OpConfig::default()).unwrap();
    let oracle = difference_oracle_kernel(&s, &p, &OpConfig::default()).unwrap();
    assert!(module_equal(&direct, &expected).unwrap());
    assert!(module_equal(&oracle, &expected).unwrap());

    // the same vector over the Weyl algebra has the analogous kernel
    let w = AlgebraSpec::weyl(1);
    let pw = [parse_poly(&w, "t^3").unwrap(), parse_poly(&w, "t").unwrap()];
    let expected_w = rows(&w, &[&["0", "d1^2"], &["0", "t1*d1 - 1"], &["1", "-t1^2"]]);
    assert!(module_equal(&kernel_kappa(&w, &pw, &OpConfig::default()).unwrap(), &expected_w).unwrap());
    assert!(module_equal(&weyl_oracle_kernel(&w, &pw, &OpConfig::default()).unwrap(), &expected_w).unwrap());
}

#[test]
fn cuspidal_weyl_oracle() {
    let w = AlgebraSpec::weyl(2);
    let p = [parse_poly(&w, CUSP).unwrap()];
    let k = weyl_oracle_kernel(&w, &p, &OpConfig::default()).unwrap();
    assert!(module_equal(&k, &rows(&w, WEYL_ROWS)).unwrap());
    let s = AlgebraSpec::difference(2);
    let p = [parse_poly(&s, CUSP).unwrap()];
    let k = difference_oracle_kernel(&s, &p, &OpConfig::default()).unwrap();
    assert!(module_equal(&k, &rows(&s, DIFFERENCE_ROWS)).unwrap());
}

#[test]
fn constant_vector() {
    let w = AlgebraSpec::weyl(1);
    let consts: Vec<OrePoly> = (1..=3).map(|c| OrePoly::from_int(&w, c)).collect();
    let k = kernel_kappa(&w, &consts, &OpConfig::default()).unwrap();
    assert!(module_equal(&k, &rows(&w, &[&["0", "3", "-2"], &["3", "0", "-1"], &["0", "0", "d1"]])).unwrap());
}

#[test]
fn exponential_signal_weyl() {
    let w = AlgebraSpec::weyl(1);
    let set = SignalSet::new(&w, vec![vec![parse_signal(&w, "t1 * exp(2*t1)").unwrap()]]).unwrap();
    let r = vmpum_of(&set, &OpConfig::default()).unwrap();
    let expected = rows(&w, &[&["d1^2 - 4*d1 + 4"], &["t1*d1 - 2*t1 - 1"]]);
    assert!(module_equal(&r.submodule(1).unwrap(), &expected).unwrap());
    assert!(check_annihilation(&r, &set).unwrap().pass);
}
