//! Builders translating the structure theorems into explicit labeled chain
//! complexes with Milnor-Witt scalar entries: rank-one groups (SL2 / PGL2),
//! projective spaces, punctured affine spaces, the degree-<=2 presentation
//! of pi_1 of a semisimple simply connected group (mod torus), the flag
//! variety in degrees <= 2, and the integer pi_3 complex.
//!
//! Differential matrices are stored rows-by-TARGET: `differentials[d]` has
//! one row per degree d-1 generator and one column per degree d generator.

use crate::mwscalar::{n_epsilon, MWScalar, SquareClass, UnitSymbol};
use crate::rootdata::{
    cartan_integer, symplectic_type, DynkinType, RootDatum, SymplecticType,
};
use crate::weyl::{act_on_coroot, codim2_cells, deletion_indices, longest_word, CellLabel};

/// One free generator of a chain group: a cell name, its Milnor-Witt weight,
/// and whether it is a Milnor (eta = 0) quotient copy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub label: String,
    pub weight: u32,
    pub milnor_flag: bool,
}

impl Generator {
    fn new(label: impl Into<String>, weight: u32) -> Self {
        Generator {
            label: label.into(),
            weight,
            milnor_flag: false,
        }
    }

    fn milnor(label: impl Into<String>, weight: u32) -> Self {
        Generator {
            label: label.into(),
            weight,
            milnor_flag: true,
        }
    }
}

/// Which builder produced a complex; drives symbolic homology pattern
/// matching.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComplexKind {
    RankOne { simply_connected: bool },
    Projective { n: usize },
    Punctured { n: usize },
    Flag,
    Pi1,
}

/// A labeled free chain complex with per-generator weight metadata and
/// MWScalar differential entries.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub kind: ComplexKind,
    /// `degrees[d]` lists the generators in degree d.
    pub degrees: Vec<Vec<Generator>>,
    /// `differentials[d]`: rows = degree d-1 generators, columns = degree d
    /// generators; `differentials[0]` is empty.
    pub differentials: Vec<Vec<Vec<MWScalar>>>,
}

impl GradedComplex {
    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Weight bookkeeping: an entry from a weight-m column to a weight-n row
    /// has eta-exponent m - n in every atom. Violations are builder bugs.
    pub fn check_weights(&self) {
        for d in 1..self.degrees.len() {
            let rows = &self.degrees[d - 1];
            let cols = &self.degrees[d];
            let mat = &self.differentials[d];
            assert_eq!(mat.len(), rows.len(), "degree {d}: row count");
            for (ri, row) in mat.iter().enumerate() {
                assert_eq!(row.len(), cols.len(), "degree {d}: column count");
                for (ci, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let expected = cols[ci].weight as i64 - rows[ri].weight as i64;
                    assert!(
                        expected >= 0
                            && entry.min_eta_exponent() == Some(expected as u32)
                            && entry.max_eta_exponent() == Some(expected as u32),
                        "degree {d} entry ({ri},{ci}) violates weight bookkeeping: \
                         {entry} between weights {} -> {}",
                        cols[ci].weight,
                        rows[ri].weight
                    );
                }
            }
        }
    }

    /// All tau symbols occurring in any differential entry.
    pub fn tau_symbols(&self) -> Vec<UnitSymbol> {
        let mut out = std::collections::BTreeSet::new();
        for mat in &self.differentials {
            for row in mat {
                for entry in row {
                    for s in entry.symbols() {
                        if matches!(s, UnitSymbol::Tau(_)) {
                            out.insert(s);
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

/// The degree <= 1 cellular complex of a rank-one group: SL2 when simply
/// connected, PGL2 otherwise. Degree 1 = (KMW_2, KMW_1), degree 0 =
/// (KMW_1, Z); the SL2 differential is the direct sum of eta and the
/// identity, the PGL2 differential is multiplication by h.
pub fn build_rank_one(simply_connected: bool) -> GradedComplex {
    let degrees = vec![
        vec![Generator::new("KMW_1", 1), Generator::new("Z", 0)],
        vec![Generator::new("KMW_2", 2), Generator::new("KMW_1", 1)],
    ];
    let d1 = if simply_connected {
        vec![
            vec![MWScalar::eta(), MWScalar::one()],
            vec![MWScalar::zero(), MWScalar::zero()],
        ]
    } else {
        vec![
            vec![MWScalar::zero(), MWScalar::h()],
            vec![MWScalar::zero(), MWScalar::zero()],
        ]
    };
    let c = GradedComplex {
        kind: ComplexKind::RankOne { simply_connected },
        degrees,
        differentials: vec![vec![], d1],
    };
    c.check_weights();
    c
}

/// The cellular complex of P^n: one generator KMW_i in each degree
/// 0 <= i <= n, with differential 0 in odd degrees and eta in even degrees.
pub fn build_projective_space(n: usize) -> Result<GradedComplex, String> {
    if n == 0 {
        return Err("projective space requires n >= 1".to_string());
    }
    let mut degrees = vec![vec![Generator::new("Z", 0)]];
    let mut differentials: Vec<Vec<Vec<MWScalar>>> = vec![vec![]];
    for i in 1..=n {
        degrees.push(vec![Generator::new(format!("KMW_{i}"), i as u32)]);
        let entry = if i % 2 == 1 {
            MWScalar::zero()
        } else {
            MWScalar::eta()
        };
        differentials.push(vec![vec![entry]]);
    }
    let c = GradedComplex {
        kind: ComplexKind::Projective { n },
        degrees,
        differentials,
    };
    c.check_weights();
    Ok(c)
}

/// The cellular complex of A^{n+1} - {0}: degree i = (KMW_{i+1}, KMW_i) for
/// 0 <= i <= n, with differentials alternating between (eta + identity) in
/// odd degrees and (<-1> + eta) in even degrees.
pub fn build_punctured_affine(n: usize) -> Result<GradedComplex, String> {
    if n == 0 {
        return Err("punctured affine space requires n >= 1".to_string());
    }
    let mut degrees = Vec::with_capacity(n + 1);
    for i in 0..=n {
        degrees.push(vec![
            Generator::new(format!("KMW_{}", i + 1), (i + 1) as u32),
            Generator::new(format!("KMW_{i}"), i as u32),
        ]);
    }
    let mut differentials: Vec<Vec<Vec<MWScalar>>> = vec![vec![]];
    for i in 1..=n {
        let mat = if i % 2 == 1 {
            vec![
                vec![MWScalar::eta(), MWScalar::one()],
                vec![MWScalar::zero(), MWScalar::zero()],
            ]
        } else {
            vec![
                vec![MWScalar::zero(), MWScalar::bracket(SquareClass::minus_one())],
                vec![MWScalar::zero(), MWScalar::eta()],
            ]
        };
        differentials.push(mat);
    }
    let c = GradedComplex {
        kind: ComplexKind::Punctured { n },
        degrees,
        differentials,
    };
    c.check_weights();
    Ok(c)
}

/// A row of the pi_1 presentation target: a Milnor-Witt generator x_i
/// (one per simple root) or a Milnor quotient generator y_{i,j} (one per
/// unordered pair i < j).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowLabel {
    MilnorWitt(usize),
    Milnor(usize, usize),
}

impl RowLabel {
    pub fn name(&self) -> String {
        match self {
            RowLabel::MilnorWitt(i) => format!("x_{i}"),
            RowLabel::Milnor(i, j) => format!("y_{{{i},{j}}}"),
        }
    }
}

/// The degree-2 -> degree-1 presentation of pi_1 mod torus: target rows are
/// r copies of KMW_2 plus C(r,2) copies of K^M_2, columns are the
/// codimension-2 cells.
#[derive(Clone, Debug)]
pub struct Pi1Presentation {
    pub dynkin: DynkinType,
    pub symplectic: SymplecticType,
    pub rows: Vec<RowLabel>,
    pub columns: Vec<CellLabel>,
    /// `entries[row][col]`.
    pub entries: Vec<Vec<MWScalar>>,
    /// Fresh unit symbols introduced, in column order.
    pub tau_symbols: Vec<UnitSymbol>,
    /// Deletion indices lambda_1..lambda_r of the canonical longest word.
    pub lambda: Vec<usize>,
}

impl Pi1Presentation {
    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn row_index(&self, label: RowLabel) -> usize {
        self.rows
            .iter()
            .position(|r| *r == label)
            .expect("row label present")
    }

    /// Repackage as a two-degree GradedComplex (degree 1 = rows with the
    /// Milnor flag on y generators, degree 2 = cells), so the realized
    /// cokernel is homology in degree 1.
    pub fn to_complex(&self) -> GradedComplex {
        let row_gens: Vec<Generator> = self
            .rows
            .iter()
            .map(|r| match r {
                RowLabel::MilnorWitt(_) => Generator::new(r.name(), 2),
                RowLabel::Milnor(_, _) => Generator::milnor(r.name(), 2),
            })
            .collect();
        let col_gens: Vec<Generator> = self
            .columns
            .iter()
            .map(|c| {
                let (i, j) = c.pair();
                Generator::new(format!("cell({i},{j})"), 2)
            })
            .collect();
        let n_rows = row_gens.len();
        let c = GradedComplex {
            kind: ComplexKind::Pi1,
            degrees: vec![vec![], row_gens, col_gens],
            differentials: vec![vec![], vec![vec![]; 0], self.entries.clone()],
        };
        assert_eq!(c.differentials[2].len(), n_rows);
        c.check_weights();
        c
    }
}

/// Build the pi_1 presentation from the codimension-2 cells. Per cell with
/// attached ordered pair (i, j):
///
/// * the Milnor row {i, j} always receives eps (the argument-swap sign);
/// * if i, j are adjacent with n_{ji} = 2, the Milnor-Witt row j receives
///   h * eps;
/// * if adjacent with n_{ji} odd, row j receives n_eps(n_{ji}) * eps when
///   lambda_i > lambda_j, and n_eps(n_{ji}) * <tau> * eps with a fresh unit
///   symbol tau when lambda_i < lambda_j;
/// * non-adjacent cells carry only their Milnor entry.
pub fn build_pi1_presentation(datum: &RootDatum) -> Pi1Presentation {
    let r = datum.rank();
    let w0 = longest_word(datum);
    let lambda = deletion_indices(datum, &w0);
    let columns = codim2_cells(datum, &w0);

    let mut rows: Vec<RowLabel> = (1..=r).map(RowLabel::MilnorWitt).collect();
    for i in 1..=r {
        for j in (i + 1)..=r {
            rows.push(RowLabel::Milnor(i, j));
        }
    }
    let row_pos = |label: RowLabel| rows.iter().position(|x| *x == label).unwrap();

    let mut entries = vec![vec![MWScalar::zero(); columns.len()]; rows.len()];
    let mut tau_symbols = Vec::new();
    for (ci, cell) in columns.iter().enumerate() {
        let (i, j) = cell.pair();
        let milnor = RowLabel::Milnor(i.min(j), i.max(j));
        entries[row_pos(milnor)][ci] = MWScalar::eps();
        if datum.adjacent(i, j) {
            let n = cartan_integer(datum, j, i);
            let base = n_epsilon(n).mul(&MWScalar::eps());
            let entry = if n == 2 {
                base
            } else if lambda[i - 1] > lambda[j - 1] {
                base
            } else {
                let tau = UnitSymbol::Tau(tau_symbols.len() as u32 + 1);
                tau_symbols.push(tau);
                base.mul(&MWScalar::bracket(SquareClass::unit(tau)))
            };
            entries[row_pos(RowLabel::MilnorWitt(j))][ci] = entry;
        }
    }
    Pi1Presentation {
        dynkin: datum.dynkin,
        symplectic: symplectic_type(datum),
        rows,
        columns,
        entries,
        tau_symbols,
        lambda,
    }
}

/// The flag variety G/B in degrees <= 2: degree 0 = Z, degree 1 = one KMW_1
/// per simple root, degree 2 = one KMW_2 per codimension-2 cell. The first
/// differential vanishes; the component of a cell (i, j) into row j is
/// multiplication by n_eps(n_{ji}) * eta (which normalizes to eta for odd
/// n_{ji} and to 0 for n_{ji} = 2), and into row i is 0.
pub fn build_flag_low_degrees(datum: &RootDatum) -> GradedComplex {
    let r = datum.rank();
    let w0 = longest_word(datum);
    let cells = codim2_cells(datum, &w0);
    let degree0 = vec![Generator::new("pt", 0)];
    let degree1: Vec<Generator> = (1..=r)
        .map(|i| Generator::new(format!("alpha_{i}"), 1))
        .collect();
    let degree2: Vec<Generator> = cells
        .iter()
        .map(|c| {
            let (i, j) = c.pair();
            Generator::new(format!("cell({i},{j})"), 2)
        })
        .collect();
    let d1 = vec![vec![MWScalar::zero(); r]];
    let mut d2 = vec![vec![MWScalar::zero(); cells.len()]; r];
    for (ci, cell) in cells.iter().enumerate() {
        let (i, j) = cell.pair();
        if datum.adjacent(i, j) {
            let n = cartan_integer(datum, j, i);
            d2[j - 1][ci] = n_epsilon(n).mul(&MWScalar::eta());
        }
    }
    let c = GradedComplex {
        kind: ComplexKind::Flag,
        degrees: vec![degree0, degree1, degree2],
        differentials: vec![vec![], d1, d2],
    };
    c.check_weights();
    c
}

/// The integer pi_3 complex `Y^(2) -> Y (x) Y -> Lambda^2 Y` over the coroot
/// lattice Y. Columns of `left` are indexed by the codimension-2 cells; rows
/// of `left` by pairs (cell-root m, basis vector k) at index (m-1)r + (k-1).
/// `right` is the wedge map onto the lex-ordered basis e_a ^ e_b (a < b).
#[derive(Clone, Debug)]
pub struct Pi3Complex {
    pub dynkin: DynkinType,
    pub cells: Vec<CellLabel>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
    /// The relative sign chosen per cell to satisfy right * left = 0.
    pub signs: Vec<i64>,
}

/// Index of e_a ^ e_b (1-based a < b) in the lex-ordered wedge basis.
fn wedge_index(r: usize, a: usize, b: usize) -> usize {
    // pairs (1,2)..(1,r),(2,3)..: (a-1) blocks then offset.
    (a - 1) * r - (a - 1) * a / 2 + (b - a) - 1
}

/// Build the pi_3 complex; the column of a cell with pair (i, j) places the
/// coordinates of s_j(alpha_i^vee) over cell-root j and (+/-) alpha_j^vee
/// over cell-root i, the relative sign per cell being fixed by the
/// composite-zero constraint. Fails loudly if no sign works.
pub fn build_pi3_complex(datum: &RootDatum) -> Result<Pi3Complex, String> {
    let r = datum.rank();
    if r < 2 {
        return Err(format!(
            "{}: the pi3 complex requires rank >= 2 (rank 1 has no codimension-2 cells)",
            datum.dynkin
        ));
    }
    let w0 = longest_word(datum);
    let cells = codim2_cells(datum, &w0);
    let wedge_rows = r * (r - 1) / 2;

    let mut right = vec![vec![0i64; r * r]; wedge_rows];
    for m in 1..=r {
        for k in 1..=r {
            if m == k {
                continue;
            }
            let col = (m - 1) * r + (k - 1);
            if m < k {
                right[wedge_index(r, m, k)][col] = 1;
            } else {
                right[wedge_index(r, k, m)][col] = -1;
            }
        }
    }

    let mut left = vec![vec![0i64; cells.len()]; r * r];
    let mut signs = Vec::with_capacity(cells.len());
    for (ci, cell) in cells.iter().enumerate() {
        let (i, j) = cell.pair();
        let s_j_alpha_i = act_on_coroot(datum, j, &datum.simple_root(i));
        let mut column = vec![0i64; r * r];
        for k in 1..=r {
            column[(j - 1) * r + (k - 1)] += s_j_alpha_i[k - 1];
        }
        let chosen = [1i64, -1].into_iter().find(|sign| {
            let mut col = column.clone();
            col[(i - 1) * r + (j - 1)] += sign;
            right.iter().all(|row| {
                row.iter().zip(&col).map(|(a, b)| a * b).sum::<i64>() == 0
            })
        });
        let sign = chosen.ok_or_else(|| {
            format!(
                "{}: no relative sign for cell ({i},{j}) makes the wedge composite vanish",
                datum.dynkin
            )
        })?;
        column[(i - 1) * r + (j - 1)] += sign;
        signs.push(sign);
        for (k, v) in column.iter().enumerate() {
            left[k][ci] = *v;
        }
    }
    Ok(Pi3Complex {
        dynkin: datum.dynkin,
        cells,
        left,
        right,
        signs,
    })
}
