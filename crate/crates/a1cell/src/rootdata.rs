//! Irreducible root data (families A-G) in Bourbaki labelling: Cartan
//! matrices, positive-root enumeration by reflection closure, and the
//! adjacency / length-class data driving every differential formula.
//!
//! Roots and coroots are kept in exact simple-(co)root integer coordinates;
//! a root index is always 1-based (the Bourbaki label).

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Self {
        DynkinType { family, rank }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

/// A root in simple-root integer coordinates; coordinates are all >= 0
/// (positive) or all <= 0 (negative), never the zero vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub coords: Vec<i64>,
    pub sign: Sign,
}

/// Cartan matrix plus length classes for one normalized irreducible type.
/// `cartan[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>` (0-based storage of the
/// 1-based Bourbaki labels).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootDatum {
    pub dynkin: DynkinType,
    pub cartan: Vec<Vec<i64>>,
    pub length_class: Vec<LengthClass>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    /// Cartan entry `a[i][j]` with 1-based root indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Are the simple roots i and j joined by an edge of the diagram?
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a(i, j) != 0
    }

    /// The simple root (equivalently coroot) `alpha_i` as a basis vector.
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.rank()];
        v[i - 1] = 1;
        v
    }
}

/// Normalize an input type: B2 -> C2 (labels swapped to the C convention),
/// C1 -> A1, D3 -> A3; reject inadmissible (family, rank) with a diagnostic
/// naming the violated constraint.
pub fn normalize(t: DynkinType) -> Result<DynkinType, String> {
    use Family::*;
    if t.rank == 0 {
        return Err(format!("{t}: rank must be >= 1"));
    }
    match (t.family, t.rank) {
        (A, _) => Ok(t),
        (B, 1) => Err("B1: family B requires rank >= 2".to_string()),
        (B, 2) => Ok(DynkinType::new(C, 2)),
        (B, _) => Ok(t),
        (C, 1) => Ok(DynkinType::new(A, 1)),
        (C, _) => Ok(t),
        (D, 1) | (D, 2) => Err(format!(
            "{t}: family D requires rank >= 4 (D3 is accepted and normalized to A3)"
        )),
        (D, 3) => Ok(DynkinType::new(A, 3)),
        (D, _) => Ok(t),
        (E, 6) | (E, 7) | (E, 8) => Ok(t),
        (E, _) => Err(format!("{t}: family E requires rank in {{6, 7, 8}}")),
        (F, 4) => Ok(t),
        (F, _) => Err(format!("{t}: family F requires rank = 4")),
        (G, 2) => Ok(t),
        (G, _) => Err(format!("{t}: family G requires rank = 2")),
    }
}

fn chain(a: &mut [Vec<i64>]) {
    let r = a.len();
    for i in 0..r.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
}

fn build_cartan(t: DynkinType) -> (Vec<Vec<i64>>, Vec<LengthClass>) {
    use Family::*;
    use LengthClass::*;
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        a[i][i] = 2;
    }
    let lengths = match t.family {
        A => {
            chain(&mut a);
            vec![Long; r]
        }
        B => {
            chain(&mut a);
            a[r - 2][r - 1] = -2;
            let mut l = vec![Long; r];
            l[r - 1] = Short;
            l
        }
        C => {
            chain(&mut a);
            a[r - 1][r - 2] = -2;
            let mut l = vec![Short; r];
            l[r - 1] = Long;
            l
        }
        D => {
            for i in 0..r - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[r - 3][r - 1] = -1;
            a[r - 1][r - 3] = -1;
            vec![Long; r]
        }
        E => {
            let mut edges = vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)];
            if r >= 7 {
                edges.push((6, 7));
            }
            if r == 8 {
                edges.push((7, 8));
            }
            for (i, j) in edges {
                a[i - 1][j - 1] = -1;
                a[j - 1][i - 1] = -1;
            }
            vec![Long; r]
        }
        F => {
            chain(&mut a);
            a[1][2] = -2;
            vec![Long, Long, Short, Short]
        }
        G => {
            a[0][1] = -1;
            a[1][0] = -3;
            vec![Short, Long]
        }
    };
    (a, lengths)
}

/// Build the root datum for a (possibly non-normalized) type.
pub fn make_root_datum(t: DynkinType) -> Result<RootDatum, String> {
    let dynkin = normalize(t)?;
    let (cartan, length_class) = build_cartan(dynkin);
    let datum = RootDatum {
        dynkin,
        cartan,
        length_class,
    };
    validate(&datum);
    Ok(datum)
}

/// Structural invariants of a well-formed irreducible datum; violations are
/// construction bugs, not user errors.
fn validate(d: &RootDatum) {
    let r = d.rank();
    let mut edges = Vec::new();
    for i in 1..=r {
        assert_eq!(d.a(i, i), 2, "{}: diagonal Cartan entry", d.dynkin);
        for j in 1..=r {
            if i == j {
                continue;
            }
            let n = -d.a(j, i);
            assert!((0..=3).contains(&n), "{}: n_{{{j}{i}}} out of range", d.dynkin);
            assert_eq!(
                d.a(i, j) == 0,
                d.a(j, i) == 0,
                "{}: asymmetric adjacency at ({i},{j})",
                d.dynkin
            );
            if i < j && d.adjacent(i, j) {
                edges.push((i, j));
            }
        }
    }
    // The diagram is a tree: rank - 1 edges and connected.
    assert_eq!(edges.len(), r - 1, "{}: diagram edge count", d.dynkin);
    let mut reached = vec![false; r + 1];
    let mut stack = vec![1usize];
    reached[1] = true;
    while let Some(i) = stack.pop() {
        for j in 1..=r {
            if j != i && d.adjacent(i, j) && !reached[j] {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    assert!(
        (1..=r).all(|i| reached[i]),
        "{}: diagram not connected",
        d.dynkin
    );
    if d.dynkin.family == Family::C {
        let long: Vec<usize> = (1..=r)
            .filter(|&i| d.length_class[i - 1] == LengthClass::Long)
            .collect();
        assert_eq!(long, vec![r], "{}: family C long-root position", d.dynkin);
        let neighbors: Vec<usize> = (1..=r).filter(|&j| d.adjacent(r, j)).collect();
        assert_eq!(neighbors.len(), 1, "{}: long root degree", d.dynkin);
        assert_eq!(-d.a(r, neighbors[0]), 2, "{}: long root double edge", d.dynkin);
    }
}

/// `n_{ji}`: the nonnegative integer with `s_j(alpha_i^vee) = alpha_i^vee +
/// n_{ji} alpha_j^vee`; equals `-a[j][i]`. 1-based indices, `i != j`.
pub fn cartan_integer(datum: &RootDatum, j: usize, i: usize) -> i64 {
    assert!(i != j, "cartan_integer requires i != j (got i = j = {i})");
    -datum.a(j, i)
}

/// Simple reflection s_i on a vector in simple-ROOT coordinates:
/// `s_i(v) = v - <v, alpha_i^vee> alpha_i` with `<alpha_j, alpha_i^vee> = a[j][i]`.
pub fn act_on_root(datum: &RootDatum, i: usize, v: &[i64]) -> Vec<i64> {
    let r = datum.rank();
    let pairing: i64 = (1..=r).map(|j| v[j - 1] * datum.a(j, i)).sum();
    let mut out = v.to_vec();
    out[i - 1] -= pairing;
    out
}

/// All positive roots, enumerated by reflection closure from the simple
/// roots, returned sorted by (height, coordinates).
pub fn positive_roots(datum: &RootDatum) -> Vec<Root> {
    let r = datum.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 1..=r {
        let v = datum.simple_root(i);
        seen.insert(v.clone());
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        for i in 1..=r {
            let w = act_on_root(datum, i, &v);
            if w.iter().all(|&x| x >= 0) && seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out.into_iter()
        .map(|coords| Root {
            coords,
            sign: Sign::Positive,
        })
        .collect()
}

/// Closed-form positive-root count per family, for independent cross-checks.
pub fn closed_form_positive_count(t: DynkinType) -> usize {
    use Family::*;
    let r = t.rank;
    match t.family {
        A => r * (r + 1) / 2,
        B | C => r * r,
        D => r * (r - 1),
        E if r == 6 => 36,
        E if r == 7 => 63,
        E => 120,
        F => 24,
        G => 6,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymplecticType {
    pub symplectic: bool,
    /// Unique long simple root when symplectic; otherwise the canonical long
    /// root (smallest Bourbaki index among long roots).
    pub long_root: usize,
}

/// Symplectic exactly for the normalized C family, including A1 = C1 (Sp_2).
pub fn symplectic_type(datum: &RootDatum) -> SymplecticType {
    let symplectic = datum.dynkin.family == Family::C
        || datum.dynkin == DynkinType::new(Family::A, 1);
    let long_root = (1..=datum.rank())
        .find(|&i| datum.length_class[i - 1] == LengthClass::Long)
        .expect("every type has a long root");
    SymplecticType {
        symplectic,
        long_root,
    }
}

/// The canonical irreducible types of rank <= `max_rank`, in table order:
/// families A-G, each by ascending rank (B starts at 3 and C at 2 because
/// B2 = C2 and C1 = A1 after normalization).
pub fn irreducible_types(max_rank: usize) -> Vec<DynkinType> {
    use Family::*;
    let mut out = Vec::new();
    let mut push_range = |family, lo: usize| {
        for r in lo..=max_rank {
            out.push(DynkinType::new(family, r));
        }
    };
    push_range(A, 1);
    push_range(B, 3);
    push_range(C, 2);
    push_range(D, 4);
    for r in [6, 7, 8] {
        if r <= max_rank {
            out.push(DynkinType::new(E, r));
        }
    }
    if max_rank >= 4 {
        out.push(DynkinType::new(F, 4));
    }
    if max_rank >= 2 {
        out.push(DynkinType::new(G, 2));
    }
    out
}
