//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime and asserting the stated budget. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multistruct::diagram::{partitions_of, three_dim_diagram, Diagram, Partition};
use multistruct::families::{
    flatness_check, generic_fiber_ideal, special_fiber_ideal, FamilySetup,
};
use multistruct::hilbert::{hilbert_function, hilbert_polynomial, same_hilbert_function};
use multistruct::ideal::{
    diagram_from_ideal, ideal_from_diagram, ideal_intersection, ideal_sum, parse_ideal,
    s1_filtration, MonomialIdeal, VariableList,
};
use multistruct::oracle::{
    degree_table, interpolate_polynomial, k_polynomial_check, standard_monomial_count,
    DEFAULT_MONOMIAL_CAP,
};
use multistruct::resolution::{
    degree_pair, hilbert_scheme_dimension, reduce_pair, same_component, staircase_from_pair,
};
use multistruct::ExactPolynomial;

fn criterion(number: u32, label: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    println!("acceptance {number} ({label}): PASS in {elapsed:.2?} (budget {budget:?})");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn line_vars() -> VariableList {
    VariableList::from_names(&["x", "y", "z", "w"], 2).unwrap()
}

fn line_ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text, &line_vars()).unwrap()
}

/// Variables x, y, z0..zn: a codimension-two structure in P^{n+2}.
fn structure_vars(n: u32) -> VariableList {
    let mut names = vec!["x".to_string(), "y".to_string()];
    for t in 0..=n {
        names.push(format!("z{t}"));
    }
    VariableList::new(names, 2).unwrap()
}

fn nonempty_diagrams(max_boxes: u32) -> Vec<Diagram> {
    (1..=max_boxes)
        .flat_map(partitions_of)
        .map(|p| p.to_diagram())
        .collect()
}

fn random_partition(rng: &mut impl Rng) -> Partition {
    let len = rng.random_range(0..=8);
    let mut parts: Vec<u32> = (0..len).map(|_| rng.random_range(1..=8)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

#[test]
fn criterion_1_hilbert_scheme_dimensions() {
    let first = diagram_from_ideal(&line_ideal("x^5, x^4*y, y^2")).unwrap();
    let second = diagram_from_ideal(&line_ideal("x^6, x^2*y, x*y^2, y^3")).unwrap();
    criterion(1, "Hilbert-scheme dimensions 38 and 39", Duration::from_millis(1), || {
        assert_eq!(hilbert_scheme_dimension(&first, 1).unwrap(), 38);
        assert_eq!(hilbert_scheme_dimension(&second, 1).unwrap(), 39);
    });
}

#[test]
fn criterion_2_equal_polynomials_different_functions() {
    criterion(
        2,
        "equal Hilbert polynomials, different Hilbert functions",
        Duration::from_secs(1),
        || {
            let i = line_ideal("x^5, x^4*y, y^2");
            let i_prime = line_ideal("x^6, x^2*y, x*y^2, y^3");
            let t = diagram_from_ideal(&i).unwrap();
            let t_prime = diagram_from_ideal(&i_prime).unwrap();

            let nine_d_minus_11 = ExactPolynomial::from_integers(&[-11, 9]);
            assert_eq!(hilbert_polynomial(&t, 1), nine_d_minus_11);
            assert_eq!(hilbert_polynomial(&t_prime, 1), nine_d_minus_11);

            // Cross-check both polynomials by oracle interpolation on d = 6..9.
            for ideal in [&i, &i_prime] {
                let table = degree_table(ideal, 9, DEFAULT_MONOMIAL_CAP).unwrap();
                let poly = interpolate_polynomial(&table, 6, 1).unwrap();
                assert_eq!(poly, nine_d_minus_11);
                assert_eq!(
                    poly.value(9),
                    num_rational::BigRational::from_integer(table.get(9).unwrap().into())
                );
            }

            // Hilbert function values certified by the brute-force count.
            for (ideal, diagram) in [(&i, &t), (&i_prime, &t_prime)] {
                for deg in 0..=8 {
                    assert_eq!(
                        hilbert_function(diagram, 1, deg),
                        standard_monomial_count(ideal, deg).unwrap()
                    );
                }
            }
            assert_eq!(hilbert_function(&t, 1, 1), 4);
            assert_eq!(hilbert_function(&t_prime, 1, 1), 4);
            // The functions first differ in degree 2 (9 vs 10, then 16 vs 17).
            assert_eq!(hilbert_function(&t, 1, 2), 9);
            assert_eq!(hilbert_function(&t_prime, 1, 2), 10);
            assert_eq!(hilbert_function(&t, 1, 3), 16);
            assert_eq!(hilbert_function(&t_prime, 1, 3), 17);
            assert!(!same_hilbert_function(&t, &t_prime).unwrap());

            assert!(!same_component(&t, &t_prime).unwrap());
        },
    );
}

#[test]
fn criterion_3_diagram_dictionary_goldens() {
    let vars = VariableList::from_names(&["x", "y"], 2).unwrap();
    let i = parse_ideal("x^2, x*y^2, y^3", &vars).unwrap();
    let j = parse_ideal("x^4, x*y, y^2", &vars).unwrap();
    let sum_expected = parse_ideal("x^2, x*y, y^2", &vars).unwrap();
    let intersection_expected = parse_ideal("x^4, x^2*y, x*y^2, y^3", &vars).unwrap();
    criterion(3, "diagram dictionary goldens", Duration::from_millis(1), || {
        assert_eq!(ideal_sum(&i, &j).unwrap(), sum_expected);
        assert_eq!(ideal_intersection(&i, &j).unwrap(), intersection_expected);

        let filtration: Vec<Partition> = s1_filtration(&part(&[4, 1]).to_diagram())
            .iter()
            .map(|d| d.to_partition().unwrap())
            .collect();
        assert_eq!(
            filtration,
            vec![part(&[1]), part(&[2, 1]), part(&[3, 1]), part(&[4, 1])]
        );
    });
}

#[test]
fn criterion_4_degeneration_goldens() {
    let lam = part(&[4, 4, 3, 2]);
    let mu = part(&[3, 3, 1]);
    let xy = VariableList::from_names(&["x", "y"], 2).unwrap();
    let special_expected = parse_ideal("y^4, y^3*x^2, y^2*x^4, x^7", &xy).unwrap();
    criterion(4, "degeneration goldens", Duration::from_millis(10), || {
        assert_eq!(lam.partswise_sum(&mu), part(&[7, 7, 4, 2]));

        let f = FamilySetup::new(lam.clone(), mu.clone(), 1);
        assert_eq!(special_fiber_ideal(&f), special_expected);

        let intersection = three_dim_diagram(&lam, &mu);
        assert_eq!(intersection.box_count(), 27);
        let layers: Vec<Partition> = intersection
            .layers()
            .unwrap()
            .iter()
            .map(|l| l.to_partition().unwrap())
            .collect();
        assert_eq!(
            layers,
            vec![part(&[3, 3, 1]), part(&[3, 3, 1]), part(&[3, 3, 1]), part(&[3, 3])]
        );
    });
}

#[test]
fn criterion_5_hilbert_function_oracle_equivalence() {
    criterion(
        5,
        "Hilbert function = brute-force count, all diagrams <= 12 boxes",
        Duration::from_secs(60),
        || {
            let mut checked = 0u64;
            for n in 0..=2u32 {
                let vars = structure_vars(n);
                for boxes in 0..=12u32 {
                    for p in partitions_of(boxes) {
                        let d = p.to_diagram();
                        let ideal = ideal_from_diagram(&d, vars.clone()).unwrap();
                        for deg in 0..=15u32 {
                            assert_eq!(
                                hilbert_function(&d, n, deg),
                                standard_monomial_count(&ideal, deg).unwrap(),
                                "mismatch for partition {p}, n={n}, deg={deg}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
            assert_eq!(checked, 272 * 3 * 16);
        },
    );
}

#[test]
fn criterion_6_function_and_resolution_equivalence_agree() {
    criterion(
        6,
        "R and r agree on all pairs of diagrams <= 12 boxes",
        Duration::from_secs(60),
        || {
            let diagrams = nonempty_diagrams(12);
            let profiles: Vec<_> = diagrams.iter().map(|d| d.diagonal_profile()).collect();
            let reduced: Vec<_> = diagrams
                .iter()
                .map(|d| reduce_pair(&degree_pair(d).unwrap()))
                .collect();
            for a in 0..diagrams.len() {
                for b in 0..diagrams.len() {
                    assert_eq!(
                        profiles[a] == profiles[b],
                        reduced[a] == reduced[b],
                        "equivalences disagree on pair ({a}, {b})"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_7_resolution_suite() {
    criterion(
        7,
        "resolution degrees valid, reconstructible and numerator-checked, <= 14 boxes",
        Duration::from_secs(60),
        || {
            for d in nonempty_diagrams(14) {
                let pair = degree_pair(&d).unwrap();
                assert!(pair.is_valid());
                assert_eq!(pair.gen_degrees().len(), pair.syz_degrees().len() + 1);
                let rebuilt = staircase_from_pair(&pair).unwrap();
                assert_eq!(degree_pair(&rebuilt).unwrap(), pair);
                assert!(k_polynomial_check(&d, &pair));
            }
        },
    );
}

#[test]
fn criterion_8_flatness() {
    criterion(8, "flatness identity and oracle fiber comparison", Duration::from_secs(300), || {
        let mut rng = ChaCha8Rng::seed_from_u64(20260810);
        let pairs: Vec<(Partition, Partition)> = (0..500)
            .map(|_| (random_partition(&mut rng), random_partition(&mut rng)))
            .collect();

        for (lam, mu) in &pairs {
            for n in 0..=3u32 {
                let check = flatness_check(&FamilySetup::new(lam.clone(), mu.clone(), n));
                assert!(check.holds, "flatness fails for {lam} + {mu}, n = {n}");
            }
        }

        // Brute-force comparison of the two fibers beyond the stabilization
        // bound, counted in the full ambient ring x, y, z, s1..sn.
        for (lam, mu) in pairs.iter().take(50) {
            for n in 0..=1u32 {
                let mut names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
                for t in 1..=n {
                    names.push(format!("s{t}"));
                }
                let ambient = VariableList::new(names, 3).unwrap();
                let f = FamilySetup::new(lam.clone(), mu.clone(), n);
                let generic = generic_fiber_ideal(&f).with_variables(ambient.clone()).unwrap();
                let special = special_fiber_ideal(&f).with_variables(ambient).unwrap();
                let bound: u32 = generic.gens().iter().map(|g| g.total_degree()).sum();
                for d in bound..=bound + n + 3 {
                    assert_eq!(
                        standard_monomial_count(&generic, d).unwrap(),
                        standard_monomial_count(&special, d).unwrap(),
                        "fiber counts differ for {lam} + {mu}, n = {n}, degree {d}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_9_dimension_constant_on_components() {
    criterion(
        9,
        "Hilbert-scheme dimension constant on equivalence classes, <= 10 boxes",
        Duration::from_secs(60),
        || {
            for n in 0..=2u32 {
                let mut class_dims: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
                for d in nonempty_diagrams(10) {
                    let profile = d.diagonal_profile().counts().to_vec();
                    let dim = hilbert_scheme_dimension(&d, n).unwrap();
                    match class_dims.get(&profile) {
                        Some(&seen) => assert_eq!(
                            seen, dim,
                            "dimension not constant on the class of profile {profile:?}, n={n}"
                        ),
                        None => {
                            class_dims.insert(profile, dim);
                        }
                    }
                }
            }
            let a = part(&[3, 1]).to_diagram();
            let b = part(&[2, 2]).to_diagram();
            assert!(same_component(&a, &b).unwrap());
            assert_eq!(hilbert_scheme_dimension(&a, 1).unwrap(), 16);
            assert_eq!(hilbert_scheme_dimension(&b, 1).unwrap(), 16);
        },
    );
}
