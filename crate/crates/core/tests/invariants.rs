//! Cross-module invariants over small fields.

use ccc_forge_core::ccc::{measure_ccc, measure_ccc_direct, predict_composition, Subcode, Variant};
use ccc_forge_core::characters::{double_character_sum, double_character_sum_closed_form, CharacterTables};
use ccc_forge_core::codes::{
    codeword, direct_weight_histogram, predict_weight_distribution, weight_distribution, CompositionTable, DefiningSet,
};
use ccc_forge_core::ExtField;
use proptest::prelude::*;

const SMALL_FIELDS: [(u64, u32); 7] = [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)];

fn small_field() -> impl Strategy<Value = ExtField> {
    prop::sample::select(SMALL_FIELDS.to_vec()).prop_map(|(p, m)| ExtField::new(p, m).unwrap())
}

proptest! {
    #[test]
    fn codewords_are_linear(f in small_field(), a in any::<u64>(), b in any::<u64>(), alpha in 0u32..11) {
        let alpha = alpha % f.p();
        let set = DefiningSet::new(&f, alpha);
        let (x, y) = (f.element(a % f.q()), f.element(b % f.q()));
        let sum = codeword(&f, &set, &f.add(&x, &y));
        let (cx, cy) = (codeword(&f, &set, &x), codeword(&f, &set, &y));
        for ((s, u), v) in sum.symbols().iter().zip(cx.symbols()).zip(cy.symbols()) {
            prop_assert_eq!(*s, (u + v) % f.p());
        }
    }

    #[test]
    fn table_composition_counts_symbols(f in small_field(), a in any::<u64>(), alpha in 0u32..11) {
        let alpha = alpha % f.p();
        let set = DefiningSet::new(&f, alpha);
        let table = CompositionTable::build(&f, &set);
        let a = a % f.q();
        let word = codeword(&f, &set, &f.element(a));
        let mut counts = vec![0u32; f.p() as usize];
        for &s in word.symbols() {
            counts[s as usize] += 1;
        }
        prop_assert_eq!(table.composition(a), counts.as_slice());
        prop_assert_eq!(table.weight(a), word.weight());
    }

    #[test]
    fn double_sum_is_integral_and_closed(f in small_field(), a in any::<u64>(), alpha in 1u32..11) {
        let alpha = alpha % f.p();
        prop_assume!(alpha != 0);
        let a = 1 + a % (f.q() - 1);
        let x = f.element(a);
        let tr = f.trace(&f.mul(&x, &x));
        prop_assert_eq!(double_character_sum(&f, &x, alpha), double_character_sum_closed_form(f.params(), tr, alpha).unwrap());
        prop_assert_eq!(CharacterTables::new(&f).double_sum(a, alpha), double_character_sum(&f, &x, alpha));
    }
}

#[test]
fn weight_tables_hold_off_the_degenerate_point() {
    for (p, m) in SMALL_FIELDS {
        let f = ExtField::new(p, m).unwrap();
        for alpha in 1..f.p() {
            let measured = weight_distribution(&f, alpha);
            let set = DefiningSet::new(&f, alpha);
            assert_eq!(measured.weights, direct_weight_histogram(&f, &set, 0..f.q()));
            let table = predict_weight_distribution(f.params(), alpha).unwrap();
            if !table.degenerate {
                assert_eq!(table.histogram(), measured.weights, "p={p} m={m} alpha={alpha}");
                assert_eq!(table.dimension, measured.k);
            }
        }
    }
}

#[test]
fn derived_compositions_match_measurement() {
    for (p, m) in [(3, 2), (3, 4), (5, 2), (7, 2), (11, 2)] {
        let f = ExtField::new(p, m).unwrap();
        for alpha in 1..f.p() {
            let set = DefiningSet::new(&f, alpha);
            let table = CompositionTable::build(&f, &set);
            for gamma in 0..f.p() {
                let sub = Subcode::new(&f, alpha, gamma).unwrap();
                let measured = measure_ccc(&f, &table, &sub);
                assert_eq!(measured, measure_ccc_direct(&f, &set, &sub));
                if sub.is_empty() {
                    continue;
                }
                assert!(measured.constant);
                let pred = predict_composition(f.params(), alpha, gamma, Variant::Derived).unwrap();
                let omega: Vec<i64> = measured.omega.unwrap().0.iter().map(|&w| w as i64).collect();
                assert_eq!(omega, pred.omega, "p={p} m={m} alpha={alpha} gamma={gamma}");
                assert_eq!(measured.size as i64, pred.size);
            }
        }
    }
}
