use std::fmt;

use super::{fp_weight, ClassicalCode, SymplecticVector};
use crate::error::Result;
use crate::gf_linalg::{self, Odometer};

/// Minimum weight over `C⊥ ∖ C`; infinite when the set is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// `self ≥ target`, with infinity above every integer.
    pub fn at_least(self, target: usize) -> bool {
        match self {
            Distance::Finite(d) => d >= target,
            Distance::Infinite => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: Distance,
    /// First vector of minimum weight in `C⊥ ∖ C`, in enumeration order.
    pub witness: Option<SymplecticVector>,
    /// Minimum nonzero weight over all of `C⊥` (not a quantum distance).
    pub dual_min_weight: Option<usize>,
    /// Number of dual vectors visited.
    pub enumerated: u64,
}

/// Exhaustive minimum symplectic weight over `C⊥ ∖ C`.
///
/// The dual basis is laid out as a basis of `C ∩ C⊥` followed by a
/// complement, so a visited vector lies in `C` exactly when all complement
/// coefficients vanish. Complement digits turn fastest.
pub fn min_weight_coset(code: &ClassicalCode, budget: u64) -> Result<DistanceReport> {
    let field = code.field();
    let p = field.p();
    let (n, m) = (code.n(), field.m() as usize);
    let cols = code.fp_len();
    let dual = code.dual();
    gf_linalg::span_size(p, dual.rank(), budget)?;

    let inside = gf_linalg::intersect(p, cols, code.fp_rows(), dual.fp_rows())?;
    let complement = gf_linalg::extend_basis(p, cols, &inside, dual.fp_rows())?;
    let k = complement.len();
    let mut basis = complement;
    basis.extend(inside);

    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut dual_min: Option<usize> = None;
    let mut enumerated = 0u64;
    let mut odo = Odometer::new(p, cols, &basis);
    while odo.advance() {
        enumerated += 1;
        let v = odo.current();
        let w = fp_weight(v, n, m);
        if w == 0 {
            continue;
        }
        if dual_min.is_none_or(|d| w < d) {
            dual_min = Some(w);
        }
        let in_code = odo.digits()[..k].iter().all(|&d| d == 0);
        if !in_code && best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, v.to_vec()));
            if w == 1 {
                break;
            }
        }
    }

    let (distance, witness) = match best {
        Some((w, v)) => (Distance::Finite(w), Some(SymplecticVector::from_fp(field, n, &v))),
        None => (Distance::Infinite, None),
    };
    Ok(DistanceReport {
        distance,
        witness,
        dual_min_weight: dual_min,
        enumerated,
    })
}
