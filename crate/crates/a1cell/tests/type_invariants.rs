//! Frozen per-type invariants for every irreducible type of rank <= 8:
//! longest-word length, positive-root count, deletion-index ladder, cell
//! count, tau-symbol count, the -w_0 permutation, the symplectic flag, and
//! the pi_3 left rank.

use a1cell::complexes::{build_pi1_presentation, build_pi3_complex};
use a1cell::homology::{pi3_homology, solve_pi1_symbolic, Pi1Class};
use a1cell::rootdata::{
    closed_form_positive_count, irreducible_types, make_root_datum, normalize, positive_roots,
    DynkinType, Family,
};
use a1cell::weyl::{codim2_cells, deletion_indices, inversions, longest_word, minus_w0_permutation};

struct Expected {
    label: &'static str,
    longest: usize,
    positives: usize,
    lambdas: &'static [usize],
    cells: usize,
    taus: usize,
    minus_w0: &'static [usize],
    symplectic: bool,
    left_rank: usize,
}

const EXPECTED: &[Expected] = &[
    e("A1", 1, 1, &[1], 0, 0, &[1], true, 0),
    e("A2", 3, 3, &[1, 3], 2, 1, &[2, 1], false, 2),
    e("A3", 6, 6, &[1, 3, 6], 5, 2, &[3, 2, 1], false, 5),
    e("A4", 10, 10, &[1, 3, 6, 10], 9, 3, &[4, 3, 2, 1], false, 9),
    e("A5", 15, 15, &[1, 3, 6, 10, 15], 14, 4, &[5, 4, 3, 2, 1], false, 14),
    e("A6", 21, 21, &[1, 3, 6, 10, 15, 21], 20, 5, &[6, 5, 4, 3, 2, 1], false, 20),
    e("A7", 28, 28, &[1, 3, 6, 10, 15, 21, 28], 27, 6, &[7, 6, 5, 4, 3, 2, 1], false, 27),
    e("A8", 36, 36, &[1, 3, 6, 10, 15, 21, 28, 36], 35, 7, &[8, 7, 6, 5, 4, 3, 2, 1], false, 35),
    e("B3", 9, 9, &[1, 3, 9], 5, 2, &[1, 2, 3], false, 5),
    e("B4", 16, 16, &[1, 3, 6, 16], 9, 3, &[1, 2, 3, 4], false, 9),
    e("B5", 25, 25, &[1, 3, 6, 10, 25], 14, 4, &[1, 2, 3, 4, 5], false, 14),
    e("B6", 36, 36, &[1, 3, 6, 10, 15, 36], 20, 5, &[1, 2, 3, 4, 5, 6], false, 20),
    e("B7", 49, 49, &[1, 3, 6, 10, 15, 21, 49], 27, 6, &[1, 2, 3, 4, 5, 6, 7], false, 27),
    e("B8", 64, 64, &[1, 3, 6, 10, 15, 21, 28, 64], 35, 7, &[1, 2, 3, 4, 5, 6, 7, 8], false, 35),
    e("C2", 4, 4, &[1, 4], 2, 0, &[1, 2], true, 2),
    e("C3", 9, 9, &[1, 3, 9], 5, 1, &[1, 2, 3], true, 5),
    e("C4", 16, 16, &[1, 3, 6, 16], 9, 2, &[1, 2, 3, 4], true, 9),
    e("C5", 25, 25, &[1, 3, 6, 10, 25], 14, 3, &[1, 2, 3, 4, 5], true, 14),
    e("C6", 36, 36, &[1, 3, 6, 10, 15, 36], 20, 4, &[1, 2, 3, 4, 5, 6], true, 20),
    e("C7", 49, 49, &[1, 3, 6, 10, 15, 21, 49], 27, 5, &[1, 2, 3, 4, 5, 6, 7], true, 27),
    e("C8", 64, 64, &[1, 3, 6, 10, 15, 21, 28, 64], 35, 6, &[1, 2, 3, 4, 5, 6, 7, 8], true, 35),
    e("D4", 12, 12, &[1, 3, 6, 12], 9, 3, &[1, 2, 3, 4], false, 9),
    e("D5", 20, 20, &[1, 3, 6, 10, 20], 14, 4, &[1, 2, 3, 5, 4], false, 14),
    e("D6", 30, 30, &[1, 3, 6, 10, 15, 30], 20, 5, &[1, 2, 3, 4, 5, 6], false, 20),
    e("D7", 42, 42, &[1, 3, 6, 10, 15, 21, 42], 27, 6, &[1, 2, 3, 4, 5, 7, 6], false, 27),
    e("D8", 56, 56, &[1, 3, 6, 10, 15, 21, 28, 56], 35, 7, &[1, 2, 3, 4, 5, 6, 7, 8], false, 35),
    e("E6", 36, 36, &[1, 2, 4, 10, 20, 36], 20, 5, &[6, 2, 5, 4, 3, 1], false, 20),
    e("E7", 63, 63, &[1, 2, 4, 10, 20, 36, 63], 27, 6, &[1, 2, 3, 4, 5, 6, 7], false, 27),
    e("E8", 120, 120, &[1, 2, 4, 10, 20, 36, 63, 120], 35, 7, &[1, 2, 3, 4, 5, 6, 7, 8], false, 35),
    e("F4", 24, 24, &[1, 3, 9, 24], 9, 3, &[1, 2, 3, 4], false, 9),
    e("G2", 6, 6, &[1, 6], 2, 1, &[1, 2], false, 2),
];

#[allow(clippy::too_many_arguments)]
const fn e(
    label: &'static str,
    longest: usize,
    positives: usize,
    lambdas: &'static [usize],
    cells: usize,
    taus: usize,
    minus_w0: &'static [usize],
    symplectic: bool,
    left_rank: usize,
) -> Expected {
    Expected {
        label,
        longest,
        positives,
        lambdas,
        cells,
        taus,
        minus_w0,
        symplectic,
        left_rank,
    }
}

fn parse(label: &str) -> DynkinType {
    let family = Family::from_letter(label.chars().next().unwrap()).unwrap();
    DynkinType::new(family, label[1..].parse().unwrap())
}

#[test]
fn the_type_list_is_complete() {
    let types = irreducible_types(8);
    assert_eq!(types.len(), 31);
    let labels: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    let expected: Vec<&str> = EXPECTED.iter().map(|x| x.label).collect();
    assert_eq!(labels, expected);
}

#[test]
fn weyl_and_cell_invariants_all_types() {
    for x in EXPECTED {
        let datum = make_root_datum(parse(x.label)).unwrap();
        let w0 = longest_word(&datum);
        assert_eq!(w0.len(), x.longest, "{}: longest-word length", x.label);
        assert_eq!(
            positive_roots(&datum).len(),
            x.positives,
            "{}: positive-root count",
            x.label
        );
        assert_eq!(
            closed_form_positive_count(datum.dynkin),
            x.positives,
            "{}: closed-form count",
            x.label
        );
        let (roots, len) = inversions(&datum, &w0);
        assert_eq!(len, x.longest, "{}: inversion count of w_0", x.label);
        assert_eq!(roots.len(), x.longest);
        assert_eq!(
            deletion_indices(&datum, &w0),
            x.lambdas,
            "{}: deletion ladder",
            x.label
        );
        assert_eq!(
            codim2_cells(&datum, &w0).len(),
            x.cells,
            "{}: cell count",
            x.label
        );
        let perm = minus_w0_permutation(&datum, &w0);
        assert_eq!(perm, x.minus_w0, "{}: -w_0 permutation", x.label);
        for (i, &p) in perm.iter().enumerate() {
            assert_eq!(perm[p - 1], i + 1, "{}: -w_0 is an involution", x.label);
        }
    }
}

#[test]
fn presentation_invariants_all_types() {
    for x in EXPECTED {
        let datum = make_root_datum(parse(x.label)).unwrap();
        let p = build_pi1_presentation(&datum);
        assert_eq!(p.symplectic.symplectic, x.symplectic, "{}", x.label);
        assert_eq!(p.columns.len(), x.cells, "{}: cells", x.label);
        assert_eq!(p.tau_symbols.len(), x.taus, "{}: tau symbols", x.label);
        let r = datum.rank();
        assert_eq!(p.rows.len(), r + r * (r - 1) / 2, "{}: rows", x.label);
        let res = solve_pi1_symbolic(&p);
        let expected_class = if x.symplectic {
            Pi1Class::KMW2
        } else {
            Pi1Class::KM2
        };
        assert_eq!(res.classification, expected_class, "{}", x.label);
        assert_eq!(
            res.witness_root, p.symplectic.long_root,
            "{}: witness is the canonical long root",
            x.label
        );
    }
}

#[test]
fn pi3_left_rank_all_types() {
    for x in EXPECTED.iter().filter(|x| x.left_rank > 0) {
        let datum = make_root_datum(parse(x.label)).unwrap();
        let c = build_pi3_complex(&datum).unwrap();
        let h = pi3_homology(&c).unwrap();
        assert_eq!(h.left_rank, x.left_rank, "{}", x.label);
        assert!(h.left_injective, "{}", x.label);
    }
}

#[test]
fn type_normalization() {
    use Family::*;
    let cases = [
        ((B, 2), "C2"),
        ((C, 1), "A1"),
        ((D, 3), "A3"),
        ((A, 5), "A5"),
    ];
    for ((f, r), want) in cases {
        assert_eq!(normalize(DynkinType::new(f, r)).unwrap().to_string(), want);
    }
    for (f, r) in [(A, 0), (B, 1), (D, 2), (E, 5), (E, 9), (F, 3), (G, 1)] {
        assert!(normalize(DynkinType::new(f, r)).is_err(), "{f:?}{r}");
    }
}
