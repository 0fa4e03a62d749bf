use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{min_weight_coset, ClassicalCode};
use crate::error::{Error, Result};
use crate::finite_field::FieldCtx;
use crate::gf_linalg::{self, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Number of greedy attempts before giving up.
    pub restarts: usize,
    /// Enumeration budget handed to the distance certification.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            restarts: 20_000,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Randomized search for a trace-symplectic selforthogonal code of
/// F_p-dimension `target_r` whose distance is at least `target_d`.
///
/// Each attempt grows an isotropic span one vector at a time, drawing
/// uniformly from the current dual and rejecting draws already in the span.
/// The distance of the finished span is certified by exhaustive
/// enumeration. Results depend only on the arguments.
pub fn search_selforthogonal(
    field: Arc<FieldCtx>,
    n: usize,
    target_r: usize,
    target_d: usize,
    seed: u64,
    opts: &SearchOptions,
) -> Result<ClassicalCode> {
    let m = field.m() as usize;
    // Isotropic subspaces have dimension at most mn, and no weight exceeds n.
    if target_r > m * n || target_d > n {
        return Err(Error::SearchExhausted { attempts: 0 });
    }
    let p = field.p();
    let cols = 2 * n * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..opts.restarts {
        let mut code = ClassicalCode::zero(field.clone(), n);
        while code.rank() < target_r {
            let dual = code.dual();
            let drawn = loop {
                let mut v = vec![0u32; cols];
                for row in dual.fp_rows() {
                    gf_linalg::axpy(&mut v, rng.gen_range(0..p), row, p);
                }
                if !gf_linalg::in_span(p, code.fp_rows(), &v)? {
                    break v;
                }
            };
            let mut rows = code.fp_rows().to_vec();
            rows.push(drawn);
            code = ClassicalCode::from_fp_rows(field.clone(), n, &rows)?;
        }
        let report = min_weight_coset(&code, opts.budget)?;
        if report.distance.at_least(target_d) {
            return Ok(code);
        }
    }
    Err(Error::SearchExhausted {
        attempts: opts.restarts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic_code::{Distance, InnerProductKind};

    fn field(p: u32, m: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, m, None).unwrap())
    }

    #[test]
    fn finds_five_qubit_code() {
        let code = search_selforthogonal(field(2, 1), 5, 4, 3, 1, &SearchOptions::default()).unwrap();
        assert_eq!(code.rank(), 4);
        assert!(code.is_selforthogonal(InnerProductKind::TraceSymplectic));
        let rep = min_weight_coset(&code, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.distance, Distance::Finite(3));
    }

    #[test]
    fn deterministic_per_seed() {
        let a = search_selforthogonal(field(3, 1), 3, 2, 1, 42, &SearchOptions::default()).unwrap();
        let b = search_selforthogonal(field(3, 1), 3, 2, 1, 42, &SearchOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unreachable_targets_exhaust() {
        assert_eq!(
            search_selforthogonal(field(2, 1), 1, 1, 2, 0, &SearchOptions::default()),
            Err(Error::SearchExhausted { attempts: 0 })
        );
        assert_eq!(
            search_selforthogonal(field(2, 1), 2, 3, 1, 0, &SearchOptions::default()),
            Err(Error::SearchExhausted { attempts: 0 })
        );
        // [[3,1,3]]_2 does not exist; a small restart budget gives up.
        let opts = SearchOptions {
            restarts: 50,
            ..SearchOptions::default()
        };
        assert_eq!(
            search_selforthogonal(field(2, 1), 3, 2, 3, 0, &opts),
            Err(Error::SearchExhausted { attempts: 50 })
        );
    }
}
