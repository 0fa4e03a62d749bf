//! Independent numerical realization of the error group.
//!
//! Operators are built as explicit complex matrices from the shift `T` and
//! phase `R` matrices, never from the symbolic multiplication rules, so the
//! comparisons here check those rules rather than restate them.

mod matrix;
mod suite;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli_algebra::PauliOperator;
use crate::stabilizer_core::{Character, StabilizerGroup};

pub use matrix::DenseOperator;
pub use suite::{code_check, identity_suite, low_weight_errors, order_law};

/// Largest dimension [`realize`] will build.
pub const REALIZE_LIMIT: u64 = 1024;
/// Largest dimension [`projector`] will build.
pub const PROJECTOR_LIMIT: u64 = 256;
/// Largest prime for [`build_tr`].
pub const MAX_DENSE_PRIME: u32 = 11;

/// Numerical thresholds for the dense checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Entrywise agreement of symbolic and dense identities.
    pub identity: f64,
    /// `PEP = cP` residual below which an error counts as detectable.
    pub proportional: f64,
    /// Residual above which an error counts as clearly undetectable.
    pub undetectable: f64,
    /// `Tr P` against `p^{mn−r}`.
    pub trace: f64,
    /// Sum of `Tr P_μ` over all characters against `p^{mn}`.
    pub partition: f64,
    /// Case-1 scalar `c` against `μ(E)`.
    pub scalar: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            identity: 1e-9,
            proportional: 1e-6,
            undetectable: 1e-3,
            trace: 1e-6,
            partition: 1e-5,
            scalar: 1e-8,
        }
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub max_error: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `max_error < tol`.
    pub fn below(name: impl Into<String>, max_error: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            max_error,
            pass: max_error < tol,
        }
    }

    /// Passes when `value > threshold`.
    pub fn above(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            max_error: value,
            pass: value > threshold,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {:.3e} {}",
            self.name,
            self.max_error,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `e^{2πik/n}` with the exponent reduced first.
pub fn root_of_unity(n: u32, k: u32) -> Complex64 {
    let k = k % n;
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

/// Complex value of a phase-ring exponent: `ι^k` for `p = 2`, `ξ^k` otherwise.
pub fn phase_value(p: u32, k: u32) -> Complex64 {
    if p == 2 {
        root_of_unity(4, k)
    } else {
        root_of_unity(p, k)
    }
}

/// Shift `T_{i,j} = δ_{i, j−1 mod p}` and phase `R_{i,j} = ξ^i δ_{i,j}`.
pub fn build_tr(p: u32) -> Result<(DenseOperator, DenseOperator)> {
    if !crate::finite_field::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p > MAX_DENSE_PRIME {
        return Err(Error::DimensionBudget {
            dim: p as u128,
            budget: MAX_DENSE_PRIME as u64,
        });
    }
    let d = p as usize;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let t = DenseOperator::from_fn(d, |i, j| if i == (j + d - 1) % d { one } else { zero });
    let r = DenseOperator::from_fn(d, |i, j| if i == j { root_of_unity(p, i as u32) } else { zero });
    Ok((t, r))
}

fn check_dim(p: u32, factors: usize, limit: u64) -> Result<usize> {
    let dim = (p as u128).checked_pow(factors as u32).unwrap_or(u128::MAX);
    if dim > limit as u128 {
        return Err(Error::DimensionBudget { dim, budget: limit });
    }
    Ok(dim as usize)
}

/// Dense matrix of `phase · E_{a,b}`: the Kronecker product of
/// `T^{a_j} R^{b_j}` over the `mn` prime-dimensional factors, systems left
/// to right and basis coordinates in order within each system.
pub fn realize(x: &PauliOperator) -> Result<DenseOperator> {
    let field = x.field();
    let p = field.p();
    check_dim(p, x.n() * field.m() as usize, REALIZE_LIMIT)?;
    let (t, r) = build_tr(p)?;
    let t_pows: Vec<DenseOperator> = (0..p as u64).map(|k| t.pow(k)).collect();
    let r_pows: Vec<DenseOperator> = (0..p as u64).map(|k| r.pow(k)).collect();
    let mut out = DenseOperator::identity(1);
    for (&ai, &bi) in x.a().iter().zip(x.b()) {
        for (ca, cb) in field.coords(ai).into_iter().zip(field.coords(bi)) {
            let factor = t_pows[ca as usize].matmul(&r_pows[cb as usize]);
            out = out.kron(&factor);
        }
    }
    Ok(out.scale(phase_value(p, x.phase())))
}

fn realize_generators(s: &StabilizerGroup) -> Result<Vec<DenseOperator>> {
    check_dim(s.field().p(), s.n() * s.field().m() as usize, PROJECTOR_LIMIT)?;
    s.generators().iter().map(realize).collect()
}

/// `P = (1/|S|) Σ_{E ∈ S} conj(μ(E)) E`, summing over all `p^{r+1}`
/// elements `ξ^j Π g_i^{c_i}` built by dense multiplication.
pub fn projector(s: &StabilizerGroup, mu: &Character) -> Result<DenseOperator> {
    s.validate_character(mu)?;
    let p = s.field().p();
    let gens = realize_generators(s)?;
    let dim = (p as usize).pow((s.n() * s.field().m() as usize) as u32);
    let powers: Vec<Vec<DenseOperator>> = gens.iter().map(|g| (0..p as u64).map(|k| g.pow(k)).collect()).collect();
    let mu_vals: Vec<Complex64> = mu.values.iter().map(|&v| phase_value(p, v)).collect();
    let xi = root_of_unity(p, 1);
    let order = (p as f64).powi(s.rank() as i32 + 1);

    let mut acc = DenseOperator::zeros(dim);
    let mut digits = vec![0usize; s.rank()];
    loop {
        let mut elem = DenseOperator::identity(dim);
        let mut mu_elem = Complex64::new(1.0, 0.0);
        for (i, &c) in digits.iter().enumerate() {
            elem = elem.matmul(&powers[i][c]);
            mu_elem *= mu_vals[i].powu(c as u32);
        }
        for j in 0..p {
            let z = xi.powu(j);
            // conj(μ(ξ^j E)) · ξ^j with μ(ξI) = ξ
            acc.add_scaled(&elem, (z * mu_elem).conj() * z);
        }
        if !advance(&mut digits, p as usize) {
            break;
        }
    }
    Ok(acc.scale(Complex64::new(1.0 / order, 0.0)))
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Product form `Π_i (1/p) Σ_j (conj(μ(g_i)) g_i)^j` of the same projector.
pub fn projector_product(s: &StabilizerGroup, mu: &Character) -> Result<DenseOperator> {
    s.validate_character(mu)?;
    let p = s.field().p();
    let gens = realize_generators(s)?;
    let dim = (p as usize).pow((s.n() * s.field().m() as usize) as u32);
    let mut acc = DenseOperator::identity(dim);
    for (g, &v) in gens.iter().zip(&mu.values) {
        let twisted = g.scale(phase_value(p, v).conj());
        let mut factor = DenseOperator::zeros(dim);
        for j in 0..p as u64 {
            factor.add_scaled(&twisted.pow(j), Complex64::new(1.0 / p as f64, 0.0));
        }
        acc = acc.matmul(&factor);
    }
    Ok(acc)
}

/// Outcome of testing `PEP = cP`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub proportional: bool,
    pub c: Option<Complex64>,
    pub residual: f64,
}

/// Computes `X = PEP`, `c = Tr(XP)/Tr P` and `max |X − cP|`.
pub fn check_detect(proj: &DenseOperator, e: &DenseOperator, tol: f64) -> Detection {
    let x = proj.matmul(e).matmul(proj);
    let tr = proj.trace().re;
    if tr.abs() < 0.5 {
        let residual = x.max_abs();
        return Detection {
            proportional: residual < tol,
            c: None,
            residual,
        };
    }
    let c = x.matmul(proj).trace() / tr;
    let residual = x.max_abs_diff(&proj.scale(c));
    Detection {
        proportional: residual < tol,
        c: Some(c),
        residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldCtx;
    use crate::symplectic_code::{ClassicalCode, SymplecticVector};
    use std::sync::Arc;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn qubit_shift_and_phase() {
        let (t, r) = build_tr(2).unwrap();
        let expect_t = DenseOperator::from_fn(2, |i, j| c(f64::from(u8::from(i != j)), 0.0));
        let expect_r = DenseOperator::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(1.0, 0.0),
            (1, 1) => c(-1.0, 0.0),
            _ => c(0.0, 0.0),
        });
        assert!(t.max_abs_diff(&expect_t) < 1e-15);
        assert!(r.max_abs_diff(&expect_r) < 1e-15);
    }

    #[test]
    fn qutrit_phase_matrix() {
        let (t, r) = build_tr(3).unwrap();
        for k in 0..3 {
            let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0);
            assert!((r.get(k, k) - z).norm() < 1e-15);
        }
        assert!(t.matmul(&t.adjoint()).max_abs_diff(&DenseOperator::identity(3)) < 1e-12);
        assert!(matches!(build_tr(13), Err(Error::DimensionBudget { .. })));
        assert!(matches!(build_tr(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn realize_examples() {
        let f2 = Arc::new(FieldCtx::new(2, 1, None).unwrap());
        let id = PauliOperator::identity(f2.clone(), 2);
        assert!(realize(&id).unwrap().max_abs_diff(&DenseOperator::identity(4)) < 1e-15);
        let y = PauliOperator::from_values(f2.clone(), &[1], &[1]).unwrap();
        let expect = DenseOperator::from_fn(2, |i, j| match (i, j) {
            (0, 1) => c(-1.0, 0.0),
            (1, 0) => c(1.0, 0.0),
            _ => c(0.0, 0.0),
        });
        assert!(realize(&y).unwrap().max_abs_diff(&expect) < 1e-15);
        let big = PauliOperator::identity(f2, 11);
        assert!(matches!(realize(&big), Err(Error::DimensionBudget { .. })));
    }

    #[test]
    fn tensor_order_convention() {
        // X on the first of two qubits is X ⊗ I: it maps |00⟩ to |10⟩,
        // i.e. basis index 0 to index 2.
        let f2 = Arc::new(FieldCtx::new(2, 1, None).unwrap());
        let x0 = realize(&PauliOperator::from_values(f2, &[1, 0], &[0, 0]).unwrap()).unwrap();
        assert_eq!(x0.get(2, 0), c(1.0, 0.0));
        assert_eq!(x0.get(1, 0), c(0.0, 0.0));
        // Within an F_4 system, coordinate 1 (the `1` component) comes first.
        let f4 = Arc::new(FieldCtx::new(2, 2, None).unwrap());
        let x_one = realize(&PauliOperator::from_values(f4, &[1], &[0]).unwrap()).unwrap();
        assert_eq!(x_one.get(2, 0), c(1.0, 0.0));
    }

    #[test]
    fn projector_examples() {
        let f2 = Arc::new(FieldCtx::new(2, 1, None).unwrap());
        let trivial = StabilizerGroup::from_code(&ClassicalCode::zero(f2.clone(), 2)).unwrap();
        let p = projector(&trivial, &trivial.default_character()).unwrap();
        assert!(p.max_abs_diff(&DenseOperator::identity(4)) < 1e-12);

        let z = ClassicalCode::new(f2, 1, &[SymplecticVector::from_values(&[0], &[1]).unwrap()]).unwrap();
        let s = StabilizerGroup::from_code(&z).unwrap();
        let p = projector(&s, &Character { values: vec![0] }).unwrap();
        let expect = DenseOperator::from_fn(2, |i, j| c(f64::from(u8::from(i == 0 && j == 0)), 0.0));
        assert!(p.max_abs_diff(&expect) < 1e-12);
        assert!(matches!(
            projector(&s, &Character { values: vec![1] }),
            Err(Error::InconsistentCharacter { .. })
        ));
    }

    #[test]
    fn detect_identity() {
        let p = DenseOperator::from_fn(2, |i, j| c(f64::from(u8::from(i == 0 && j == 0)), 0.0));
        let d = check_detect(&p, &DenseOperator::identity(2), 1e-6);
        assert!(d.proportional);
        assert!((d.c.unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    }
}
