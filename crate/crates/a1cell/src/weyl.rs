//! Reduced-word engine for Weyl groups: inversion-set lengths, a canonical
//! greedy longest word, exchange-condition deletion indices, and the
//! codimension-2 Bruhat cells `w_0 s_i s_j`.
//!
//! Words are read right-to-left (`w_0 = sigma_l ... sigma_1`): `letters[k]`
//! is the letter at position `k + 1`, positions numbered 1 at the right.
//! Lengths are always computed from inversion sets; the full group is never
//! enumerated (|W(E8)| ~ 7e8, but only words near the longest length occur).

use crate::rootdata::{positive_roots, Root, RootDatum, Sign};
use std::fmt;

type Matrix = Vec<Vec<i64>>;

fn identity(r: usize) -> Matrix {
    (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik != 0 {
                for j in 0..n {
                    out[i][j] += aik * b[k][j];
                }
            }
        }
    }
    out
}

fn mat_vec(m: &Matrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// A word in the simple reflections; `letters[k]` is the 1-based generator
/// index at right-to-left position `k + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with the letter at 1-based right-to-left position `pos`
    /// removed.
    pub fn delete_position(&self, pos: usize) -> WeylWord {
        assert!(
            (1..=self.len()).contains(&pos),
            "position {pos} out of range 1..={}",
            self.len()
        );
        let mut letters = self.letters.clone();
        letters.remove(pos - 1);
        WeylWord { letters }
    }
}

impl fmt::Display for WeylWord {
    /// Left-to-right product form, highest position first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, g) in self.letters.iter().rev().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "s{g}")?;
        }
        Ok(())
    }
}

/// A Weyl-group element: its exact integer-matrix action on the coroot
/// lattice (`matrix`), on the root lattice (`root_matrix`), and a reduced
/// word representative. Equality is coroot-matrix equality, independent of
/// the word.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub matrix: Matrix,
    pub root_matrix: Matrix,
    pub word: WeylWord,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}

/// A codimension-2 Bruhat cell `w = w_0 s_i s_j` together with the ordered
/// pairs producing it. Adjacent i, j give one pair per cell; non-adjacent
/// pairs commute and collapse to one cell with canonical representative
/// i < j (both orderings recorded).
#[derive(Clone, Debug)]
pub struct CellLabel {
    pub element: WeylElement,
    pub pairs: Vec<(usize, usize)>,
    /// Per ordered pair `(i, j)` of `pairs`: whether `lambda_i > lambda_j`.
    pub lambda_order: Vec<bool>,
}

impl CellLabel {
    /// The canonical ordered pair labelling this cell.
    pub fn pair(&self) -> (usize, usize) {
        self.pairs[0]
    }
}

/// Per-datum memo table: generator matrices on both lattices plus the
/// positive roots, built once and then only read.
struct Engine<'a> {
    d: &'a RootDatum,
    r: usize,
    coroot_gen: Vec<Matrix>,
    root_gen: Vec<Matrix>,
    positives: Vec<Vec<i64>>,
}

impl<'a> Engine<'a> {
    fn new(d: &'a RootDatum) -> Self {
        let r = d.rank();
        let mut coroot_gen = Vec::with_capacity(r);
        let mut root_gen = Vec::with_capacity(r);
        for i in 1..=r {
            // s_i(alpha_j^vee) = alpha_j^vee - a[i][j] alpha_i^vee
            let mut c = identity(r);
            for j in 1..=r {
                c[i - 1][j - 1] -= d.a(i, j);
            }
            coroot_gen.push(c);
            // s_i(alpha_j) = alpha_j - a[j][i] alpha_i
            let mut m = identity(r);
            for j in 1..=r {
                m[i - 1][j - 1] -= d.a(j, i);
            }
            root_gen.push(m);
        }
        let positives = positive_roots(d).into_iter().map(|p| p.coords).collect();
        Engine {
            d,
            r,
            coroot_gen,
            root_gen,
            positives,
        }
    }

    fn check_letters(&self, word: &WeylWord) {
        for &g in &word.letters {
            assert!(
                (1..=self.r).contains(&g),
                "letter {g} out of range 1..={} for {}",
                self.r,
                self.d.dynkin
            );
        }
    }

    /// Matrix products over the whole word (element = product right-to-left).
    fn word_matrices(&self, letters: &[usize]) -> (Matrix, Matrix) {
        let mut c = identity(self.r);
        let mut m = identity(self.r);
        for &g in letters {
            c = mat_mul(&self.coroot_gen[g - 1], &c);
            m = mat_mul(&self.root_gen[g - 1], &m);
        }
        (c, m)
    }

    /// Inversion count of the element with the given root-lattice matrix.
    fn length_of(&self, root_matrix: &Matrix) -> usize {
        self.positives
            .iter()
            .filter(|p| mat_vec(root_matrix, p).iter().all(|&x| x <= 0))
            .count()
    }

    fn element(&self, word: WeylWord) -> WeylElement {
        let (matrix, root_matrix) = self.word_matrices(&word.letters);
        WeylElement {
            matrix,
            root_matrix,
            word,
        }
    }

    /// Coroot matrices of all single-letter deletions of `word`, via prefix
    /// and suffix products (never re-multiplying whole words per deletion).
    fn deleted_coroot_matrices(&self, letters: &[usize]) -> Vec<Matrix> {
        let l = letters.len();
        let mut prefix = Vec::with_capacity(l + 1);
        prefix.push(identity(self.r));
        for &g in letters {
            let last = prefix.last().unwrap();
            prefix.push(mat_mul(&self.coroot_gen[g - 1], last));
        }
        let mut suffix = vec![identity(self.r); l + 1];
        for t in (0..l).rev() {
            suffix[t] = mat_mul(&suffix[t + 1], &self.coroot_gen[letters[t] - 1]);
        }
        (0..l)
            .map(|t| mat_mul(&suffix[t + 1], &prefix[t]))
            .collect()
    }
}

/// Simple reflection s_i on a vector in simple-COROOT coordinates:
/// `s_i(v) = v - sum_j v_j a[i][j] alpha_i^vee`.
pub fn act_on_coroot(datum: &RootDatum, i: usize, v: &[i64]) -> Vec<i64> {
    let r = datum.rank();
    let pairing: i64 = (1..=r).map(|j| v[j - 1] * datum.a(i, j)).sum();
    let mut out = v.to_vec();
    out[i - 1] -= pairing;
    out
}

/// The inversion set `Phi_w = { alpha > 0 : w(alpha) < 0 }` of the element
/// represented by `word` (which need not be reduced), plus its size: the
/// length of the element.
pub fn inversions(datum: &RootDatum, word: &WeylWord) -> (Vec<Root>, usize) {
    let engine = Engine::new(datum);
    engine.check_letters(word);
    let (_, root_matrix) = engine.word_matrices(&word.letters);
    let set: Vec<Root> = engine
        .positives
        .iter()
        .filter(|p| mat_vec(&root_matrix, p).iter().all(|&x| x <= 0))
        .map(|p| Root {
            coords: p.clone(),
            sign: Sign::Positive,
        })
        .collect();
    let len = set.len();
    (set, len)
}

/// The canonical reduced longest word: repeatedly append (on the left) the
/// smallest generator that increases length, until length = |Phi+|.
/// `l(s_g w) = l(w) + 1` iff `w^{-1}(alpha_g) > 0`.
pub fn longest_word(datum: &RootDatum) -> WeylWord {
    let engine = Engine::new(datum);
    let target = engine.positives.len();
    let r = engine.r;
    let mut w_inv = identity(r); // w^{-1} on the root lattice
    let mut letters = Vec::with_capacity(target);
    while letters.len() < target {
        let g = (1..=r)
            .find(|&g| (0..r).all(|k| w_inv[k][g - 1] >= 0))
            .expect("some generator must increase length below the longest");
        letters.push(g);
        w_inv = mat_mul(&w_inv, &engine.root_gen[g - 1]);
    }
    let word = WeylWord::new(letters);
    debug_assert_eq!(inversions(datum, &word).1, target);
    word
}

fn check_longest(engine: &Engine, w0: &WeylWord) {
    engine.check_letters(w0);
    let target = engine.positives.len();
    assert_eq!(
        w0.len(),
        target,
        "{}: expected a longest word of length {target}, got {}",
        engine.d.dynkin,
        w0.len()
    );
    let (_, root_matrix) = engine.word_matrices(&w0.letters);
    assert_eq!(
        engine.length_of(&root_matrix),
        target,
        "{}: word of longest length is not reduced",
        engine.d.dynkin
    );
}

/// The unique right-to-left position `lambda_i` whose deletion from the
/// reduced longest word yields a reduced expression of `w_0 s_i`. Uniqueness
/// is a theorem; it is re-verified here by exhaustive deletion.
pub fn deletion_index(datum: &RootDatum, w0: &WeylWord, i: usize) -> usize {
    let engine = Engine::new(datum);
    check_longest(&engine, w0);
    deletion_index_inner(&engine, w0, i)
}

fn deletion_index_inner(engine: &Engine, w0: &WeylWord, i: usize) -> usize {
    let (w0_mat, _) = engine.word_matrices(&w0.letters);
    let target = mat_mul(&w0_mat, &engine.coroot_gen[i - 1]);
    let matches: Vec<usize> = engine
        .deleted_coroot_matrices(&w0.letters)
        .into_iter()
        .enumerate()
        .filter(|(_, m)| *m == target)
        .map(|(t, _)| t + 1)
        .collect();
    assert_eq!(
        matches.len(),
        1,
        "{}: deletion index for generator {i} is not unique: {matches:?}",
        engine.d.dynkin
    );
    matches[0]
}

/// All deletion indices `lambda_1..lambda_r` of the canonical longest word.
pub fn deletion_indices(datum: &RootDatum, w0: &WeylWord) -> Vec<usize> {
    let engine = Engine::new(datum);
    check_longest(&engine, w0);
    (1..=engine.r)
        .map(|i| deletion_index_inner(&engine, w0, i))
        .collect()
}

/// `mu_j`: the unique deletion position in the reduced word of `w_0 s_i`
/// (obtained by deleting `lambda_i` from `w0`) that yields a reduced
/// expression of `w_0 s_i s_j`. Positions are in the shorter word's own
/// right-to-left numbering.
pub fn second_deletion_index(datum: &RootDatum, w0: &WeylWord, i: usize, j: usize) -> usize {
    let engine = Engine::new(datum);
    check_longest(&engine, w0);
    let lam_i = deletion_index_inner(&engine, w0, i);
    let word1 = w0.delete_position(lam_i);
    second_deletion_inner(&engine, &word1, i, j).0
}

fn second_deletion_inner(
    engine: &Engine,
    word1: &WeylWord,
    i: usize,
    j: usize,
) -> (usize, WeylWord) {
    let (w1_mat, _) = engine.word_matrices(&word1.letters);
    let target = mat_mul(&w1_mat, &engine.coroot_gen[j - 1]);
    let matches: Vec<usize> = engine
        .deleted_coroot_matrices(&word1.letters)
        .into_iter()
        .enumerate()
        .filter(|(_, m)| *m == target)
        .map(|(t, _)| t + 1)
        .collect();
    assert_eq!(
        matches.len(),
        1,
        "{}: second deletion index for pair ({i},{j}) is not unique: {matches:?}",
        engine.d.dynkin
    );
    (matches[0], word1.delete_position(matches[0]))
}

/// The codimension-2 cells `w_0 s_i s_j`, in lexicographic order of their
/// canonical ordered pair. Every ordered pair (i, j), i != j, is attached to
/// exactly one cell; there are r(r+1)/2 - 1 cells. Rank 1 gives none.
pub fn codim2_cells(datum: &RootDatum, w0: &WeylWord) -> Vec<CellLabel> {
    let engine = Engine::new(datum);
    check_longest(&engine, w0);
    let r = engine.r;
    let lambda: Vec<usize> = (1..=r)
        .map(|i| deletion_index_inner(&engine, w0, i))
        .collect();
    let mut cells: Vec<CellLabel> = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            if i == j {
                continue;
            }
            let adjacent = datum.adjacent(i, j);
            if !adjacent && i > j {
                continue; // collapsed into the (j, i) cell already emitted
            }
            let word1 = w0.delete_position(lambda[i - 1]);
            let (_, word2) = second_deletion_inner(&engine, &word1, i, j);
            let element = engine.element(word2);
            assert_eq!(
                engine.length_of(&element.root_matrix),
                w0.len() - 2,
                "{}: cell ({i},{j}) does not have length l(w_0) - 2",
                datum.dynkin
            );
            let (pairs, lambda_order) = if adjacent {
                (
                    vec![(i, j)],
                    vec![lambda[i - 1] > lambda[j - 1]],
                )
            } else {
                (
                    vec![(i, j), (j, i)],
                    vec![
                        lambda[i - 1] > lambda[j - 1],
                        lambda[j - 1] > lambda[i - 1],
                    ],
                )
            };
            for prev in &cells {
                assert!(
                    prev.element != element,
                    "{}: cells {:?} and ({i},{j}) coincide",
                    datum.dynkin,
                    prev.pairs
                );
            }
            cells.push(CellLabel {
                element,
                pairs,
                lambda_order,
            });
        }
    }
    if r >= 2 {
        assert_eq!(
            cells.len(),
            r * (r + 1) / 2 - 1,
            "{}: codim-2 cell count",
            datum.dynkin
        );
    }
    cells
}

/// `-w_0` permutes the simple coroots; returns the permutation p with
/// `-w_0(alpha_i^vee) = alpha_{p(i)}^vee` (1-based on both sides).
pub fn minus_w0_permutation(datum: &RootDatum, w0: &WeylWord) -> Vec<usize> {
    let engine = Engine::new(datum);
    check_longest(&engine, w0);
    let (mat, _) = engine.word_matrices(&w0.letters);
    let r = engine.r;
    (1..=r)
        .map(|i| {
            let image: Vec<i64> = (0..r).map(|k| -mat[k][i - 1]).collect();
            let ones: Vec<usize> = (1..=r).filter(|&k| image[k - 1] == 1).collect();
            assert!(
                ones.len() == 1 && image.iter().sum::<i64>() == 1,
                "{}: -w_0(alpha_{i}^vee) is not a simple coroot: {image:?}",
                datum.dynkin
            );
            ones[0]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{make_root_datum, DynkinType, Family};

    fn datum(f: Family, r: usize) -> RootDatum {
        make_root_datum(DynkinType::new(f, r)).unwrap()
    }

    #[test]
    fn coroot_action_examples() {
        let a2 = datum(Family::A, 2);
        assert_eq!(act_on_coroot(&a2, 1, &[1, 0]), vec![-1, 0]);
        assert_eq!(act_on_coroot(&a2, 2, &[1, 0]), vec![1, 1]);
        let c2 = datum(Family::C, 2);
        assert_eq!(act_on_coroot(&c2, 2, &[1, 0]), vec![1, 2]);
        // Involutive.
        let v = vec![3, -2];
        assert_eq!(act_on_coroot(&a2, 1, &act_on_coroot(&a2, 1, &v)), v);
    }

    #[test]
    fn inversion_sets() {
        let a2 = datum(Family::A, 2);
        let (set, len) = inversions(&a2, &WeylWord::new(vec![]));
        assert!(set.is_empty());
        assert_eq!(len, 0);
        let (set, len) = inversions(&a2, &WeylWord::new(vec![1, 2, 1]));
        assert_eq!(len, 3);
        assert_eq!(set.len(), 3);
        // A non-reduced word: s_1 s_1 = e.
        let (set, len) = inversions(&a2, &WeylWord::new(vec![1, 1]));
        assert!(set.is_empty());
        assert_eq!(len, 0);
    }

    #[test]
    fn canonical_longest_words() {
        assert_eq!(longest_word(&datum(Family::A, 2)).letters, vec![1, 2, 1]);
        assert_eq!(longest_word(&datum(Family::C, 2)).letters, vec![1, 2, 1, 2]);
        assert_eq!(
            longest_word(&datum(Family::G, 2)).letters,
            vec![1, 2, 1, 2, 1, 2]
        );
        assert_eq!(
            longest_word(&datum(Family::A, 3)).letters,
            vec![1, 2, 1, 3, 2, 1]
        );
        assert_eq!(
            longest_word(&datum(Family::B, 3)).letters,
            vec![1, 2, 1, 3, 2, 1, 3, 2, 3]
        );
        assert_eq!(
            longest_word(&datum(Family::D, 4)).letters,
            vec![1, 2, 1, 3, 2, 1, 4, 2, 1, 3, 2, 4]
        );
    }

    #[test]
    fn longest_word_squares_to_identity() {
        for (f, r) in [(Family::A, 3), (Family::C, 2), (Family::G, 2), (Family::F, 4)] {
            let d = datum(f, r);
            let w0 = longest_word(&d);
            let engine = Engine::new(&d);
            let (m, _) = engine.word_matrices(&w0.letters);
            assert_eq!(mat_mul(&m, &m), identity(d.rank()), "{f:?}{r}");
        }
    }

    #[test]
    fn deletion_indices_a2() {
        let d = datum(Family::A, 2);
        let w0 = longest_word(&d);
        assert_eq!(deletion_index(&d, &w0, 1), 1);
        assert_eq!(deletion_index(&d, &w0, 2), 3);
        assert_eq!(deletion_indices(&d, &w0), vec![1, 3]);
    }

    #[test]
    fn deletion_index_rank_one() {
        let d = datum(Family::A, 1);
        let w0 = longest_word(&d);
        assert_eq!(w0.letters, vec![1]);
        assert_eq!(deletion_index(&d, &w0, 1), 1);
    }

    #[test]
    fn deletion_indices_frozen() {
        for (f, r, expect) in [
            (Family::C, 3, vec![1, 3, 9]),
            (Family::F, 4, vec![1, 3, 9, 24]),
            (Family::G, 2, vec![1, 6]),
            (Family::D, 4, vec![1, 3, 6, 12]),
        ] {
            let d = datum(f, r);
            let w0 = longest_word(&d);
            assert_eq!(deletion_indices(&d, &w0), expect, "{f:?}{r}");
        }
    }

    #[test]
    fn a2_cells() {
        let d = datum(Family::A, 2);
        let w0 = longest_word(&d);
        let cells = codim2_cells(&d, &w0);
        assert_eq!(cells.len(), 2);
        assert_eq!(cells[0].pairs, vec![(1, 2)]);
        assert_eq!(cells[1].pairs, vec![(2, 1)]);
        // w_0 s_1 s_2 = s_1 and w_0 s_2 s_1 = s_2 by direct reduction.
        let engine = Engine::new(&d);
        assert_eq!(cells[0].element, engine.element(WeylWord::new(vec![1])));
        assert_eq!(cells[1].element, engine.element(WeylWord::new(vec![2])));
        // lambda_1 = 1 < lambda_2 = 3.
        assert_eq!(cells[0].lambda_order, vec![false]);
        assert_eq!(cells[1].lambda_order, vec![true]);
    }

    #[test]
    fn a3_cells_collapse_non_adjacent() {
        let d = datum(Family::A, 3);
        let cells = codim2_cells(&d, &longest_word(&d));
        assert_eq!(cells.len(), 5);
        let pairs: Vec<(usize, usize)> = cells.iter().map(|c| c.pair()).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 2)]);
        assert_eq!(cells[1].pairs, vec![(1, 3), (3, 1)]);
    }

    #[test]
    fn rank_one_has_no_cells() {
        let d = datum(Family::A, 1);
        assert!(codim2_cells(&d, &longest_word(&d)).is_empty());
    }

    #[test]
    fn minus_w0_permutations() {
        for (f, r, expect) in [
            (Family::A, 2, vec![2, 1]),
            (Family::A, 3, vec![3, 2, 1]),
            (Family::C, 2, vec![1, 2]),
            (Family::D, 4, vec![1, 2, 3, 4]),
        ] {
            let d = datum(f, r);
            let w0 = longest_word(&d);
            assert_eq!(minus_w0_permutation(&d, &w0), expect, "{f:?}{r}");
        }
    }

    #[test]
    fn word_display() {
        assert_eq!(WeylWord::new(vec![1, 2, 1, 2]).to_string(), "s2*s1*s2*s1");
        assert_eq!(WeylWord::new(vec![]).to_string(), "e");
    }
}
