mod common;

use braid_circuits::*;
use common::*;
use fib_core::{model_constants, AnyonCharge, Handedness, C64};
use fusion_basis::{representation, BraidWord, Factor, ReadingOrder, UnitaryMatrix};
use proptest::prelude::*;

/// Projector onto vacuum fusion of anyons `i, i+1`, from σ_i's two eigenvalues.
fn pair_vacuum(n: usize, sector: AnyonCharge, i: usize, h: Handedness) -> UnitaryMatrix {
    let rep = representation(n, sector, h).unwrap();
    let s = rep.generator(i, true).unwrap().to_dense();
    let m = model_constants(h);
    let (rv, rt) = (m.r(AnyonCharge::Vacuum), m.r(AnyonCharge::Tau));
    let shifted = &s - &UnitaryMatrix::identity(rep.dim()).scale(rt);
    shifted.scale((rv - rt).inv())
}

fn macro_perm(word: &BraidWord) -> [usize; 3] {
    // Where each starting macro-strand ends up.
    let mut at = [0usize, 1, 2];
    for f in ReadingOrder::PrintedLeftLast.time_order(word) {
        if f.power % 2 != 0 {
            at.swap(f.generator - 1, f.generator);
        }
    }
    let mut dest = [0usize; 3];
    for (pos, &strand) in at.iter().enumerate() {
        dest[strand] = pos;
    }
    dest
}

fn word_strategy() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1usize..=2, prop::sample::select(vec![-3, -2, -1, 1, 2, 3])), 1..8)
        .prop_map(|v| BraidWord::new(v.into_iter().map(|(g, p)| Factor::new(g, p)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn cabled_words_permute_pair_charges(word in word_strategy(), tau in any::<bool>(), left in any::<bool>()) {
        let h = if left { Handedness::Left } else { Handedness::Right };
        let sector = if tau { AnyonCharge::Tau } else { AnyonCharge::Vacuum };
        let order = ReadingOrder::PrintedLeftLast;
        let comp = StrandComposition::new(vec![2, 2, 2]).unwrap();
        let elementary = cable(&word, &comp, order).unwrap();
        prop_assert_eq!(elementary.length(), 4 * word.length());
        let rho = representation(6, sector, h).unwrap().word_matrix(&elementary, order).unwrap();
        let dest = macro_perm(&word);
        for k in 0..3 {
            let before = pair_vacuum(6, sector, 2 * k + 1, h);
            let after = pair_vacuum(6, sector, 2 * dest[k] + 1, h);
            let moved = &(&rho * &before) * &rho.adjoint();
            prop_assert!(moved.max_abs_diff(&after) < 1e-9);
        }
    }

    #[test]
    fn cable_length_is_width_product(word in word_strategy()) {
        let order = ReadingOrder::PrintedLeftLast;
        let one = StrandComposition::new(vec![1, 1, 1]).unwrap();
        prop_assert_eq!(cable(&word, &one, order).unwrap().length(), word.length());
        let quad = StrandComposition::new(vec![4, 4, 4]).unwrap();
        prop_assert_eq!(cable(&word, &quad, order).unwrap().length(), 16 * word.length());
    }
}

#[test]
fn pure_cabled_braid_commutes_with_pair_projectors() {
    let word: BraidWord = "s1^2 s2^-4 s1^2 s2^2".parse().unwrap();
    let comp = StrandComposition::new(vec![2, 2, 2]).unwrap();
    let order = ReadingOrder::PrintedLeftLast;
    let rho = representation(6, AnyonCharge::Vacuum, Handedness::Right)
        .unwrap()
        .word_matrix(&cable(&word, &comp, order).unwrap(), order)
        .unwrap();
    for i in [1, 3, 5] {
        let p = pair_vacuum(6, AnyonCharge::Vacuum, i, Handedness::Right);
        assert!((&rho * &p).max_abs_diff(&(&p * &rho)) < 1e-9);
    }
}

#[test]
fn pair_oracle_is_a_projector() {
    let p = pair_vacuum(6, AnyonCharge::Vacuum, 3, Handedness::Right);
    assert!((&p * &p).max_abs_diff(&p) < 1e-12);
    let rank: C64 = p.trace();
    // Vacuum pair in the middle of six τ anyons of total charge 1: 2 of 5 states.
    assert!((rank - C64::new(2.0, 0.0)).norm() < 1e-12);
}

#[test]
fn single_qubit_stage_numberings_agree() {
    // Mirrored numbering on anyons 2–4 and direct numbering on anyons 1–3 act
    // identically on the computational space.
    let mirrored = pinned();
    let direct = ConventionProfile { strand_numbering: StrandNumbering::Direct, ..mirrored };
    let word = w(NOT);
    for q in 1..=3 {
        let a = single_qubit_stage(&mirrored, "a", &word, q, su2_compile::gates::i_x()).unwrap();
        let b = single_qubit_stage(&direct, "b", &word, q, su2_compile::gates::i_x()).unwrap();
        let (_, enc) = encode_qubits(3).unwrap();
        let ma = stage_matrix(&a, 3, &mirrored).unwrap().submatrix(&enc.computational_indices);
        let mb = stage_matrix(&b, 3, &direct).unwrap().submatrix(&enc.computational_indices);
        assert!(su2_compile::distance(&ma, &mb).unwrap() < 1e-9, "qubit {q}");
    }
}
