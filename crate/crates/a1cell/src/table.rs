//! The dichotomy table: one row per irreducible type up to a rank bound,
//! combining the symbolic pi_1 classification, realized fundamental groups
//! (with a sweep over the tau sign choices), the Suslin degree-1 rank, and
//! the pi_3 middle homology.

use crate::complexes::{build_pi1_presentation, build_pi3_complex};
use crate::exec::{map_items, ExecMode};
use crate::homology::{
    homology_over_realization, pi3_homology, solve_pi1_symbolic, AbGroupDescriptor, Pi1Class,
};
use crate::mwscalar::{Realization, SignAssignment, UnitSymbol};
use crate::rootdata::{irreducible_types, make_root_datum};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// Sweep policy: exhaustive when feasible, seeded random sampling beyond.
pub const EXHAUSTIVE_TAU_LIMIT: usize = 12;
pub const RANDOM_TAU_SAMPLES: usize = 256;

/// All sign assignments to sweep for the given tau symbols: every one of the
/// 2^k choices when k <= 12, otherwise 256 ChaCha20-seeded random choices.
pub fn tau_assignments(symbols: &[UnitSymbol], seed: u64) -> Vec<SignAssignment> {
    if symbols.is_empty() {
        return vec![SignAssignment::new()];
    }
    let k = symbols.len();
    if k <= EXHAUSTIVE_TAU_LIMIT {
        (0..(1u64 << k))
            .map(|bits| {
                symbols
                    .iter()
                    .enumerate()
                    .map(|(p, s)| (*s, if bits >> p & 1 == 1 { -1 } else { 1 }))
                    .collect()
            })
            .collect()
    } else {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        (0..RANDOM_TAU_SAMPLES)
            .map(|_| {
                symbols
                    .iter()
                    .map(|s| (*s, if rng.gen::<bool>() { -1 } else { 1 }))
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub type_label: String,
    pub classification: Pi1Class,
    pub witness_root: usize,
    /// pi_1 of the real points, constant across the tau sweep.
    pub real_pi1: AbGroupDescriptor,
    /// Free rank of degree-1 homology under the Milnor realization.
    pub suslin_rank: usize,
    /// pi_3 middle homology (rank-one types by the classical theorem).
    pub pi3: AbGroupDescriptor,
    pub cell_count: usize,
    pub num_tau: usize,
}

fn row_for_type(
    t: crate::rootdata::DynkinType,
    seed: u64,
) -> Result<TableRow, String> {
    let datum = make_root_datum(t)?;
    let p = build_pi1_presentation(&datum);
    let res = solve_pi1_symbolic(&p);
    let c = p.to_complex();

    let sweeps = tau_assignments(&p.tau_symbols, seed);
    let mut real_pi1: Option<AbGroupDescriptor> = None;
    let mut suslin_rank: Option<usize> = None;
    for signs in &sweeps {
        let h_real = homology_over_realization(&c, &Realization::real(), signs, 1)?;
        match &real_pi1 {
            None => real_pi1 = Some(h_real),
            Some(prev) => {
                if *prev != h_real {
                    return Err(format!(
                        "{t}: real pi_1 depends on the tau signs ({prev} vs {h_real})"
                    ));
                }
            }
        }
        let h_milnor = homology_over_realization(&c, &Realization::milnor(), signs, 1)?;
        if !h_milnor.torsion.is_empty() {
            return Err(format!("{t}: Milnor-realized degree 1 has torsion {h_milnor}"));
        }
        match suslin_rank {
            None => suslin_rank = Some(h_milnor.free_rank),
            Some(prev) => {
                if prev != h_milnor.free_rank {
                    return Err(format!("{t}: Suslin rank depends on the tau signs"));
                }
            }
        }
    }

    let pi3 = if t.rank == 1 {
        // SL_2: pi_3 = Z classically; the bilinear-form complex needs rank 2.
        AbGroupDescriptor::free(1)
    } else {
        pi3_homology(&build_pi3_complex(&datum)?)?.middle
    };

    Ok(TableRow {
        type_label: t.to_string(),
        classification: res.classification,
        witness_root: res.witness_root,
        real_pi1: real_pi1.expect("at least one sweep assignment"),
        suslin_rank: suslin_rank.expect("at least one sweep assignment"),
        pi3,
        cell_count: p.columns.len(),
        num_tau: p.tau_symbols.len(),
    })
}

/// Compute the table for every irreducible type of rank <= max_rank
/// (1 <= max_rank <= 8), in the canonical order A < B < C < D < E < F < G,
/// rank increasing within a family.
pub fn compute_table(max_rank: usize, mode: ExecMode, seed: u64) -> Result<Vec<TableRow>, String> {
    if !(1..=8).contains(&max_rank) {
        return Err(format!("max rank must be between 1 and 8, got {max_rank}"));
    }
    let types = irreducible_types(max_rank);
    map_items(mode, &types, |t| row_for_type(*t, seed))
        .into_iter()
        .collect()
}
