use extremal_core::complexcore::MonomialIdeal;
use extremal_core::ginlab::{
    betti_via_tor, borel_check, borel_violation, compare_corners, depth_preservation_check, gin,
    gin_comparison, gin_of_monomial_ideal, monomial_generators, LinearChange, Polynomial,
};
use extremal_core::homology::PrimeField;
use extremal_core::resolutions::betti_via_koszul;

fn k() -> PrimeField {
    PrimeField::default()
}

fn polys(text: &str, n: usize) -> Vec<Polynomial> {
    text.split(',')
        .map(|t| Polynomial::parse(t.trim(), n, &k()).unwrap())
        .collect()
}

const TWO_CORNERS: &str = "x1, x0*x3, x2*x3^2, x3^2*x4, x0*x4^3";

fn corner_strings(ideal_gens: &[Polynomial], n: usize, bound: u32) -> Vec<String> {
    betti_via_tor(ideal_gens, n, &k(), bound)
        .unwrap()
        .corners()
        .iter()
        .map(|c| c.to_string())
        .collect()
}

#[test]
fn two_corner_ideal_has_the_expected_corners() {
    let gens = polys(TWO_CORNERS, 5);
    let ideal =
        MonomialIdeal::new(5, gens.iter().map(|g| g.lead_monomial().unwrap().clone())).unwrap();
    let table = betti_via_koszul(&ideal, &k()).to_quotient().coarse();
    let corners: Vec<String> = table.corners().iter().map(|c| c.to_string()).collect();
    assert_eq!(corners, ["(3,3):1", "(4,2):1"]);
    assert_eq!(corner_strings(&gens, 5, 8), corners);
}

#[test]
fn corners_survive_a_change_of_coordinates_and_passage_to_gin() {
    let gens = polys(TWO_CORNERS, 5);
    let moved = LinearChange::random(5, 77, &k())
        .apply_all(&gens, &k())
        .unwrap();
    assert_ne!(moved, gens);
    assert_eq!(corner_strings(&moved, 5, 8), ["(3,3):1", "(4,2):1"]);
    let report = compare_corners(&moved, 5, &k(), 3).unwrap();
    assert!(report.passed, "{report}");
    let cmp = gin_comparison(&moved, 5, &k(), 3).unwrap();
    assert!(!cmp.truncated);
    assert_eq!(cmp.original_corners(), cmp.generic_corners());
    assert!(depth_preservation_check(&moved, 5, &k(), 3).unwrap().passed);
}

#[test]
fn gin_is_borel_fixed_and_invariant_under_coordinates() {
    let gens = polys("x0^2 + x1*x2, x1^2 - x0*x2, x2^3", 3);
    let g = gin(&gens, 3, 5, &k()).unwrap();
    assert!(borel_violation(&g).is_none());
    assert!(borel_check(&g, k().characteristic()).unwrap());
    let moved = LinearChange::random(3, 123, &k())
        .apply_all(&gens, &k())
        .unwrap();
    assert_eq!(gin(&moved, 3, 11, &k()).unwrap(), g);
}

#[test]
fn gin_of_a_monomial_ideal_is_not_the_ideal_itself() {
    let ideal = MonomialIdeal::new(
        3,
        polys("x1*x2, x2^2", 3)
            .iter()
            .map(|p| p.lead_monomial().unwrap().clone()),
    )
    .unwrap();
    assert!(borel_violation(&ideal).is_some());
    let g = gin_of_monomial_ideal(&ideal, 1, &k()).unwrap();
    assert!(borel_violation(&g).is_none());
    assert_eq!(
        gin(&monomial_generators(&ideal, &k()), 3, 1, &k()).unwrap(),
        g
    );
}

#[test]
fn generic_tables_dominate_the_original() {
    let gens = polys("x0*x1, x2*x3", 4);
    let cmp = gin_comparison(&gens, 4, &k(), 2).unwrap();
    for (i, j, v) in cmp.original.iter() {
        assert!(cmp.generic.get(i, j) >= v, "beta_{i},{j}");
    }
    assert!(cmp.generic.totals().iter().sum::<u64>() > cmp.original.totals().iter().sum::<u64>());
}
