//! Acceptance suite: one test per release criterion, each printing a
//! pass line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; all comparisons are exact.

mod common;

use rand::Rng;

use spinext::construct::{
    block_sum, builtin, builtin_names, genus4_computed_table, sum_verdict, GENUS4_ACTION_TABLE,
};
use spinext::extend::{arf_shortcut_counted, decide, invariant_forms, unique_form};
use spinext::gf2::Gf2Vec;
use spinext::homology::HomologySpace;
use spinext::quadform::{enumerate_all, QuadraticForm};
use spinext::twist::transvection;

fn pass(number: usize, name: &str) {
    println!("criterion {number:02} ({name}): PASS");
}

#[test]
fn criterion_01_f3_3_profile() {
    let entry = builtin("f3_3").unwrap();
    let report = decide(&entry.action).unwrap();
    assert_eq!(report.invariant_count, 2);
    assert_eq!(report.arf_zero_count, Some(2));
    assert_eq!(report.arf_one_count, Some(0));
    assert!(report.extendable);

    let family = invariant_forms(&entry.action).unwrap();
    for q in family.members() {
        assert!(!q.arf());
        assert_eq!(q.pullback(entry.action.matrix()).unwrap(), q);
    }
    pass(1, "f3_3: two invariant forms, both Arf 0, extendable");
}

#[test]
fn criterion_02_f3_7_profile() {
    let entry = builtin("f3_7").unwrap();
    let report = decide(&entry.action).unwrap();
    assert_eq!(report.invariant_count, 2);
    assert_eq!(report.arf_zero_count, Some(0));
    assert_eq!(report.arf_one_count, Some(2));
    assert!(!report.extendable);

    for q in invariant_forms(&entry.action).unwrap().members() {
        assert!(q.arf());
    }
    pass(2, "f3_7: two invariant forms, both Arf 1, not extendable");
}

#[test]
fn criterion_03_genus4_table_reproduction() {
    let computed = genus4_computed_table().unwrap();
    let mut checked = 0;
    for (i, (row, golden)) in computed.iter().zip(&GENUS4_ACTION_TABLE).enumerate() {
        for (j, (entry, expected)) in row.iter().zip(golden).enumerate() {
            assert_eq!(
                entry, expected,
                "row f4_{} column c{} differs from the golden table",
                i + 1,
                j + 1
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 96);
    pass(3, "all 96 genus-4 table entries recomputed from the words match");
}

#[test]
fn criterion_04_genus4_witnesses() {
    // Witness forms in chain values over c_1..c_8, and the catalog entries
    // each preserves.
    let chain_values: [(u8, &[usize]); 5] = [
        (0b1111_1111, &[1, 2, 5, 6, 7, 9]),
        (0b0000_0000, &[3, 4, 11]),
        (0b1001_1111, &[8]),
        (0b1100_0111, &[10]),
        (0b1110_1110, &[12]),
    ];
    let space = HomologySpace::standard(4).unwrap();
    let chain_names: Vec<String> = (1..=8).map(|k| format!("c{k}")).collect();

    let mut violations: Vec<String> = Vec::new();
    for (witness_index, (mask, indices)) in chain_values.iter().enumerate() {
        let assignments: Vec<(&str, bool)> = chain_names
            .iter()
            .enumerate()
            .map(|(k, name)| (name.as_str(), mask >> k & 1 == 1))
            .collect();
        let witness = QuadraticForm::from_curve_values(&space, &assignments).unwrap();
        assert!(!witness.arf(), "witness q{} must bound", witness_index + 1);

        for &i in *indices {
            let entry = builtin(&format!("f4_{i}")).unwrap();
            assert!(decide(&entry.action).unwrap().extendable, "f4_{i} extendable");
            if witness.pullback(entry.action.matrix()).unwrap() != witness {
                violations.push(format!("q{} is not f4_{i}-invariant", witness_index + 1));
            }
        }
    }
    assert_eq!(violations, Vec::<String>::new());
    pass(4, "all twelve genus-4 torsion classes extendable with the named witnesses");
}

#[test]
fn criterion_05_invariant_count_equals_kernel_power() {
    let mut rng = common::rng(0x05);
    for g in 1..=3 {
        let space = HomologySpace::standard(g).unwrap();
        for _ in 0..200 {
            let action = common::random_symplectic_action(&mut rng, &space);
            let brute = enumerate_all(&space)
                .unwrap()
                .filter(|q| q.pullback(action.matrix()).unwrap() == *q)
                .count() as u128;
            let difference = action.matrix() + &spinext::Gf2Mat::identity(space.dim());
            let kernel_dim = difference.kernel().len();
            let family = invariant_forms(&action).unwrap();
            assert_eq!(brute, 1u128 << kernel_dim);
            assert_eq!(brute, family.member_count());
            assert_eq!(family.d(), kernel_dim);
        }
    }
    pass(5, "invariant-form count is 2^dim ker(f-id) on 200 random actions per genus <= 3");
}

#[test]
fn criterion_06_arf_zero_tallies() {
    let expected = [3u64, 10, 36, 136];
    for (g, want) in (1..=4).zip(expected) {
        let space = HomologySpace::standard(g).unwrap();
        let zeros = enumerate_all(&space).unwrap().filter(|q| !q.arf()).count() as u64;
        assert_eq!(zeros, want, "genus {g}");
        assert_eq!(zeros, (1 << (g - 1)) * ((1 << g) + 1), "closed form at genus {g}");
    }
    pass(6, "Arf-0 tallies 3, 10, 36, 136 for genus 1..4");
}

#[test]
fn criterion_07_shortcut_agreement_and_budget() {
    let mut rng = common::rng(0x07);
    for g in 1..=4 {
        let space = HomologySpace::standard(g).unwrap();
        for _ in 0..60 {
            let action = common::random_symplectic_action(&mut rng, &space);
            let family = invariant_forms(&action).unwrap();
            let d = family.d();
            let exhaustive = family.members().any(|q| !q.arf());
            let (verdict, evaluations) = arf_shortcut_counted(&family);
            assert_eq!(verdict, exhaustive);
            assert!(evaluations <= (d * d + d + 2) / 2, "budget exceeded at d={d}");
        }
    }
    pass(7, "shortcut verdict equals exhaustive search within the (d^2+d+2)/2 budget");
}

#[test]
fn criterion_08_closed_form_matches_solver() {
    let mut rng = common::rng(0x08);
    let mut found = 0;
    let mut attempts = 0;
    while found < 50 && attempts < 5000 {
        attempts += 1;
        let g = rng.gen_range(1..=4);
        let space = HomologySpace::standard(g).unwrap();
        let action = common::random_symplectic_action(&mut rng, &space);
        let Ok(closed_form) = unique_form(&action) else {
            continue;
        };
        found += 1;
        let family = invariant_forms(&action).unwrap();
        assert_eq!(family.d(), 0);
        assert_eq!(family.base(), &closed_form);
    }
    assert!(found >= 50, "only {found} invertible-difference samples");
    pass(8, "closed-form unique invariant form matches the solver on 50 samples");
}

#[test]
fn criterion_09_non_extendable_families() {
    for g in 2..=12 {
        if g == 4 {
            continue;
        }
        let entry = builtin(&format!("hg({g})")).unwrap();
        let report = decide(&entry.action).unwrap();
        assert!(!report.extendable, "hg({g}) must not extend");
        assert_eq!(report.arf_zero_count, Some(0), "hg({g})");
    }

    let octagon = decide(&builtin("f2_octagon").unwrap().action).unwrap();
    assert_eq!(octagon.arf_zero_count, Some(0));
    assert_eq!(octagon.arf_one_count, Some(2));

    let wiman = decide(&builtin("w1_torus").unwrap().action).unwrap();
    assert!(!wiman.extendable);
    pass(9, "hg(2..12, g != 4), the octagon rotation and the torus map all refuse to extend");
}

#[test]
fn criterion_10_embedding_synthesis() {
    // Exhaustive over every bounding form through genus 3.
    let mut verified = 0;
    for g in 1..=3 {
        let space = HomologySpace::standard(g).unwrap();
        for q in enumerate_all(&space).unwrap().filter(|q| !q.arf()) {
            let recipe = spinext::embed::synthesize(&q).unwrap();
            assert!(spinext::embed::verify_recipe(&recipe), "genus {g}, values {}", q.values());
            verified += 1;
        }
    }
    assert_eq!(verified, 3 + 10 + 36);

    // 100 seeded random bounding forms through genus 6.
    let mut rng = common::rng(0x10);
    let mut produced = 0;
    while produced < 100 {
        let g = rng.gen_range(1..=6);
        let space = HomologySpace::standard(g).unwrap();
        let dim = space.dim();
        let q = QuadraticForm::new(
            space.clone(),
            Gf2Vec::from_bits(dim, rng.gen::<u64>() & ((1 << dim) - 1)),
        );
        if q.arf() {
            continue;
        }
        produced += 1;
        let recipe = spinext::embed::synthesize(&q).unwrap();
        assert!(spinext::embed::verify_recipe(&recipe));
    }

    // The genus-3 worked example emits the expected letters.
    let space = HomologySpace::standard(3).unwrap();
    let q = QuadraticForm::new(space, Gf2Vec::from_bits(6, 0b011111));
    let recipe = spinext::embed::synthesize(&q).unwrap();
    let text = recipe.word.to_text();
    assert!(text.contains("T(b3)"), "word was {text}");
    assert!(text.contains("T[a1+a2]"), "word was {text}");
    assert!(text.contains("T[b1+b2]"), "word was {text}");
    pass(10, "synthesized words pull the zero form back to every bounding target");
}

#[test]
fn criterion_11_connected_sum_consistency() {
    let catalog: Vec<_> = builtin_names()
        .iter()
        .map(|name| builtin(name).unwrap())
        .collect();
    let profiles: Vec<(bool, bool)> = catalog
        .iter()
        .map(|entry| {
            let report = decide(&entry.action).unwrap();
            (report.arf_zero_count.unwrap() > 0, report.arf_one_count.unwrap() > 0)
        })
        .collect();

    let n = catalog.len();
    let mut combos = 0;
    for i in 0..n {
        for j in i..n {
            let direct = decide(
                &block_sum(&[catalog[i].action.clone(), catalog[j].action.clone()]).unwrap(),
            )
            .unwrap()
            .extendable;
            let predicted = sum_verdict(&[profiles[i], profiles[j]]).unwrap();
            assert_eq!(direct, predicted, "pair {} + {}", catalog[i].name, catalog[j].name);
            combos += 1;
            for k in j..n {
                let direct = decide(
                    &block_sum(&[
                        catalog[i].action.clone(),
                        catalog[j].action.clone(),
                        catalog[k].action.clone(),
                    ])
                    .unwrap(),
                )
                .unwrap()
                .extendable;
                let predicted = sum_verdict(&[profiles[i], profiles[j], profiles[k]]).unwrap();
                assert_eq!(
                    direct, predicted,
                    "triple {} + {} + {}",
                    catalog[i].name, catalog[j].name, catalog[k].name
                );
                combos += 1;
            }
        }
    }
    assert_eq!(combos, n * (n + 1) / 2 + n * (n + 1) * (n + 2) / 6);
    pass(11, "sum verdict agrees with the direct decision on every 2- and 3-part combination");
}

#[test]
fn criterion_12_property_suite() {
    // Polarization identity, exhaustive through genus 2.
    for g in 1..=2 {
        let space = HomologySpace::standard(g).unwrap();
        let dim = space.dim();
        for q in enumerate_all(&space).unwrap() {
            for xb in 0..1u64 << dim {
                for yb in 0..1u64 << dim {
                    let x = Gf2Vec::from_bits(dim, xb);
                    let y = Gf2Vec::from_bits(dim, yb);
                    assert_eq!(
                        q.evaluate(&(x + y)),
                        q.evaluate(&x) ^ q.evaluate(&y) ^ space.pair(&x, &y)
                    );
                }
            }
        }
    }

    // Transvections are involutive and pairing-preserving.
    let mut rng = common::rng(0x12);
    for g in 1..=4 {
        let space = HomologySpace::standard(g).unwrap();
        let named: Vec<Gf2Vec> = space
            .curve_names()
            .map(|name| space.curve(name).unwrap())
            .collect();
        let random = (0..50).map(|_| common::random_nonzero_class(&mut rng, space.dim()));
        for c in named.into_iter().chain(random) {
            let t = transvection(&space, &c);
            assert!((&t * &t).is_identity());
            assert!(space.preserves_pairing(&t));
        }
    }

    // Arf is independent of the symplectic basis: 500 random changes.
    for round in 0..500 {
        let g = 1 + round % 4;
        let space = HomologySpace::standard(g).unwrap();
        let dim = space.dim();
        let q = QuadraticForm::new(
            space.clone(),
            Gf2Vec::from_bits(dim, rng.gen::<u64>() & ((1 << dim) - 1)),
        );
        let s = common::random_symplectic_matrix(&mut rng, &space);
        assert_eq!(q.pullback(&s).unwrap().arf(), q.arf());
    }

    // Pullback contravariance.
    for g in 1..=3 {
        let space = HomologySpace::standard(g).unwrap();
        let dim = space.dim();
        for _ in 0..50 {
            let q = QuadraticForm::new(
                space.clone(),
                Gf2Vec::from_bits(dim, rng.gen::<u64>() & ((1 << dim) - 1)),
            );
            let a = common::random_symplectic_matrix(&mut rng, &space);
            let b = common::random_symplectic_matrix(&mut rng, &space);
            assert_eq!(
                q.pullback(&(&a * &b)).unwrap(),
                q.pullback(&a).unwrap().pullback(&b).unwrap()
            );
        }
    }
    pass(12, "polarization, transvection, Arf-invariance and contravariance properties hold");
}
