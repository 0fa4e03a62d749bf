//! Stabilizer groups built from selforthogonal classical codes.
//!
//! A code `C` with F_p-basis `(a_i, b_i)` yields generators `E_{a_i, φ(b_i)}`;
//! together with `ξI` they generate a commutative group `S` of order
//! `p^{r+1}` whose joint eigenspaces are `[[n, mn − r]]_{p^m}` codes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_field::FieldCtx;
use crate::gf_linalg::{self, DEFAULT_BUDGET};
use crate::pauli_algebra::{phase_modulus, PauliOperator};
use crate::symplectic_code::{
    min_weight_coset, ClassicalCode, Distance, DistanceReport, InnerProductKind, SymplecticVector,
};

/// Eigenvalue assignment `μ(g_i)` on the generators, as phase-ring
/// exponents. `μ(ξI) = ξ` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<u32>,
}

/// Outcome of the three-case detectability analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetectClass {
    /// `E' ∈ S` up to a scalar; `PE'P = c P` with `c` given as a
    /// phase-ring exponent.
    InStabilizer { scalar: u32 },
    /// Fails to commute with `generator`; `PE'P = 0`.
    Anticommuting { generator: usize, exponent: u32 },
    /// Lies in `S⊥ ∖ S`: commutes with `S` but acts nontrivially on the code.
    UndetectableLogical,
}

impl DetectClass {
    pub fn is_detectable(self) -> bool {
        !matches!(self, DetectClass::UndetectableLogical)
    }
}

/// `[[n, k, d]]_q` with `k` kept as the exponent `mn − r` of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumCodeParams {
    pub p: u32,
    pub m: u32,
    pub n: usize,
    pub r: usize,
    /// `dim Q = p^{k_exponent}`.
    pub k_exponent: usize,
    /// `None` when the distance was not computed.
    pub distance: Option<Distance>,
}

impl QuantumCodeParams {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }

    /// Number of q-ary systems encoded, when `m` divides `mn − r`.
    pub fn k_qudits(&self) -> Option<usize> {
        self.k_exponent
            .is_multiple_of(self.m as usize)
            .then(|| self.k_exponent / self.m as usize)
    }
}

impl fmt::Display for QuantumCodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.k_qudits() {
            Some(k) => k.to_string(),
            None => format!("{}/{}", self.k_exponent, self.m),
        };
        let d = match self.distance {
            Some(d) => d.to_string(),
            None => "?".to_string(),
        };
        write!(f, "[[{},{},{}]]_{}", self.n, k, d, self.q())
    }
}

/// Commuting generators `E_{a_i, φ(b_i)}` of a stabilizer group.
#[derive(Debug, Clone)]
pub struct StabilizerGroup {
    field: Arc<FieldCtx>,
    n: usize,
    generators: Vec<PauliOperator>,
    generator_rows: Vec<Vec<u32>>,
    source: ClassicalCode,
}

impl StabilizerGroup {
    /// Builds `S` from a trace-symplectic selforthogonal code.
    pub fn from_code(code: &ClassicalCode) -> Result<Self> {
        if let Some((i, j, value)) = code.selforthogonality_violation(InnerProductKind::TraceSymplectic) {
            return Err(Error::NotSelforthogonal { i, j, value: value.0 });
        }
        let field = code.field().clone();
        let generators: Vec<PauliOperator> = code.basis().iter().map(|v| lift(&field, v)).collect();
        let generator_rows = generators.iter().map(|g| g.blocks().to_fp(&field)).collect();
        debug_assert!(generators
            .iter()
            .all(|g| generators.iter().all(|h| g.commutes_with(h).unwrap())));
        Ok(Self {
            field,
            n: code.n(),
            generators,
            generator_rows,
            source: code.clone(),
        })
    }

    /// Recovers `C = {(a, φ⁻¹ b) : E_{a,b} ∈ S}` from the generators.
    pub fn to_code(&self) -> ClassicalCode {
        let vecs: Vec<SymplecticVector> = self.generators.iter().map(|g| self.unlift(g)).collect();
        ClassicalCode::new(self.field.clone(), self.n, &vecs).expect("generators share the field")
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn source_code(&self) -> &ClassicalCode {
        &self.source
    }

    /// `(a, b) ↦ E_{a, φ(b)}`.
    pub fn lift(&self, v: &SymplecticVector) -> PauliOperator {
        lift(&self.field, v)
    }

    /// `ξ^κ E_{a,b} ↦ (a, φ⁻¹ b)`.
    pub fn unlift(&self, op: &PauliOperator) -> SymplecticVector {
        SymplecticVector {
            a: op.a().to_vec(),
            b: op.b().iter().map(|&x| self.field.phi_inv(x)).collect(),
        }
    }

    /// Admissible values of `μ(g_i)`: all `ξ^j` for odd `p`; for `p = 2`
    /// the two square roots of `μ(g_i²) ∈ {±1}`.
    pub fn allowed_values(&self, i: usize) -> Vec<u32> {
        let p = self.field.p();
        if p == 2 {
            let t = self.generators[i].pow(2).phase();
            vec![t / 2, t / 2 + 2]
        } else {
            (0..p).collect()
        }
    }

    /// Smallest admissible exponent for every generator.
    pub fn default_character(&self) -> Character {
        Character {
            values: (0..self.rank()).map(|i| self.allowed_values(i)[0]).collect(),
        }
    }

    pub fn validate_character(&self, mu: &Character) -> Result<()> {
        if mu.values.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: mu.values.len(),
            });
        }
        for (i, &v) in mu.values.iter().enumerate() {
            if !self.allowed_values(i).contains(&v) {
                return Err(Error::InconsistentCharacter { index: i, value: v });
            }
        }
        Ok(())
    }

    /// Number of characters with `μ(ξI) = ξ`, namely `p^r`.
    pub fn character_count(&self) -> u128 {
        (self.field.p() as u128).pow(self.rank() as u32)
    }

    /// All `p^r` characters, in odometer order (generator 0 fastest).
    pub fn characters(&self, budget: u64) -> Result<Characters> {
        if self.rank() > 20 {
            return Err(Error::BudgetExceeded {
                needed: self.character_count(),
                budget,
            });
        }
        gf_linalg::span_size(self.field.p(), self.rank(), budget)?;
        let choices = (0..self.rank()).map(|i| self.allowed_values(i)).collect();
        Ok(Characters {
            choices,
            digits: vec![0; self.rank()],
            done: false,
        })
    }

    /// Writes `op = ξ^δ Π g_i^{c_i}` (product in generator order) when the
    /// blocks of `op` lie in `S`. Returns `(c, δ)` with `δ` in the phase ring.
    pub fn decompose(&self, op: &PauliOperator) -> Result<Option<(Vec<u32>, u32)>> {
        if **op.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if op.n() != self.n {
            return Err(Error::LengthMismatch(self.n, op.n()));
        }
        let target = op.blocks().to_fp(&self.field);
        let Some(coeffs) = gf_linalg::solve_in_span(self.field.p(), &self.generator_rows, &target)? else {
            return Ok(None);
        };
        let product = self.product(&coeffs);
        let l = phase_modulus(self.field.p());
        let delta = (op.phase() + l - product.phase()) % l;
        Ok(Some((coeffs, delta)))
    }

    /// `Π g_i^{c_i}` in generator order.
    pub fn product(&self, coeffs: &[u32]) -> PauliOperator {
        self.generators
            .iter()
            .zip(coeffs)
            .fold(PauliOperator::identity(self.field.clone(), self.n), |acc, (g, &c)| {
                acc.mul(&g.pow(c as u64)).expect("same group")
            })
    }

    /// `μ(op)` as a phase-ring exponent, or `None` if `op` is not a scalar
    /// multiple of an element of `S`.
    pub fn eval_character(&self, mu: &Character, op: &PauliOperator) -> Result<Option<u32>> {
        self.validate_character(mu)?;
        let l = phase_modulus(self.field.p());
        Ok(self.decompose(op)?.map(|(coeffs, delta)| {
            coeffs
                .iter()
                .zip(&mu.values)
                .fold(delta, |acc, (&c, &v)| (acc + c * v) % l)
        }))
    }

    /// Three-case classification of an error against the code of `mu`.
    pub fn classify(&self, op: &PauliOperator, mu: &Character) -> Result<DetectClass> {
        for (i, g) in self.generators.iter().enumerate() {
            let e = op.comm_exponent(g)?;
            if e != 0 {
                return Ok(DetectClass::Anticommuting {
                    generator: i,
                    exponent: e,
                });
            }
        }
        Ok(match self.eval_character(mu, op)? {
            Some(scalar) => DetectClass::InStabilizer { scalar },
            None => DetectClass::UndetectableLogical,
        })
    }

    /// `[[n, mn − r, d]]_{p^m}` with `d` from exhaustive enumeration of
    /// `C⊥ ∖ C`. Returns the enumeration report alongside.
    pub fn params(&self, budget: u64) -> (QuantumCodeParams, Result<DistanceReport>) {
        let report = min_weight_coset(&self.source, budget);
        let mut params = self.params_without_distance();
        params.distance = report.as_ref().ok().map(|r| r.distance);
        (params, report)
    }

    pub fn params_without_distance(&self) -> QuantumCodeParams {
        let m = self.field.m();
        QuantumCodeParams {
            p: self.field.p(),
            m,
            n: self.n,
            r: self.rank(),
            k_exponent: m as usize * self.n - self.rank(),
            distance: None,
        }
    }

    /// Lift of the minimum-weight vector of `C⊥ ∖ C`, if there is one.
    pub fn distance_witness(&self) -> Result<Option<PauliOperator>> {
        let rep = min_weight_coset(&self.source, DEFAULT_BUDGET)?;
        Ok(rep.witness.map(|w| self.lift(&w)))
    }
}

fn lift(field: &Arc<FieldCtx>, v: &SymplecticVector) -> PauliOperator {
    let b = v.b.iter().map(|&x| field.phi(x)).collect();
    PauliOperator::new(field.clone(), 0, v.a.clone(), b).expect("vector over the same field")
}

/// Restartable stream of characters; see [`StabilizerGroup::characters`].
#[derive(Debug, Clone)]
pub struct Characters {
    choices: Vec<Vec<u32>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Characters {
    type Item = Character;

    fn next(&mut self) -> Option<Character> {
        if self.done {
            return None;
        }
        let out = Character {
            values: self.digits.iter().zip(&self.choices).map(|(&d, c)| c[d]).collect(),
        };
        self.done = true;
        for (d, c) in self.digits.iter_mut().zip(&self.choices) {
            *d += 1;
            if *d < c.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic_code::{search_selforthogonal, SearchOptions};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn field(p: u32, m: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, m, None).unwrap())
    }

    fn five_qubit() -> StabilizerGroup {
        let code = search_selforthogonal(field(2, 1), 5, 4, 3, 1, &SearchOptions::default()).unwrap();
        StabilizerGroup::from_code(&code).unwrap()
    }

    #[test]
    fn trivial_group() {
        let s = StabilizerGroup::from_code(&ClassicalCode::zero(field(3, 1), 2)).unwrap();
        assert_eq!(s.rank(), 0);
        assert_eq!(s.to_code().rank(), 0);
        assert_eq!(s.characters(DEFAULT_BUDGET).unwrap().count(), 1);
        assert_eq!(s.params_without_distance().k_exponent, 2);
        let id = PauliOperator::identity(s.field().clone(), 2);
        assert_eq!(
            s.classify(&id, &s.default_character()).unwrap(),
            DetectClass::InStabilizer { scalar: 0 }
        );
    }

    #[test]
    fn single_z_generator() {
        let f2 = field(2, 1);
        let code = ClassicalCode::new(f2, 1, &[SymplecticVector::from_values(&[0], &[1]).unwrap()]).unwrap();
        let s = StabilizerGroup::from_code(&code).unwrap();
        assert_eq!(s.generators()[0].to_string(), "ξ^0 E(0|1)");
        let (params, _) = s.params(DEFAULT_BUDGET);
        assert_eq!(params.to_string(), "[[1,0,inf]]_2");
    }

    #[test]
    fn rejects_non_selforthogonal() {
        let f2 = field(2, 1);
        let code = ClassicalCode::new(
            f2,
            1,
            &[
                SymplecticVector::from_values(&[1], &[0]).unwrap(),
                SymplecticVector::from_values(&[0], &[1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            StabilizerGroup::from_code(&code).unwrap_err(),
            Error::NotSelforthogonal { i: 0, j: 1, value: 1 }
        );
    }

    #[test]
    fn roundtrip_code() {
        let s = five_qubit();
        assert_eq!(s.to_code(), *s.source_code());
        let f3 = field(3, 1);
        for seed in 0..5 {
            let c = search_selforthogonal(f3.clone(), 3, 3, 1, seed, &SearchOptions::default()).unwrap();
            assert_eq!(StabilizerGroup::from_code(&c).unwrap().to_code(), c);
        }
        let f4 = field(2, 2);
        let c = search_selforthogonal(f4, 2, 3, 1, 9, &SearchOptions::default()).unwrap();
        assert_eq!(StabilizerGroup::from_code(&c).unwrap().to_code(), c);
    }

    #[test]
    fn five_qubit_params_and_classes() {
        let s = five_qubit();
        let (params, _) = s.params(DEFAULT_BUDGET);
        assert_eq!(params.to_string(), "[[5,1,3]]_2");
        let mu = s.default_character();
        // A single X error is detected by some anticommuting generator.
        let x = PauliOperator::from_values(s.field().clone(), &[1, 0, 0, 0, 0], &[0; 5]).unwrap();
        assert!(matches!(
            s.classify(&x, &mu).unwrap(),
            DetectClass::Anticommuting { .. }
        ));
        let w = s.distance_witness().unwrap().unwrap();
        assert_eq!(w.weight(), 3);
        assert_eq!(s.classify(&w, &mu).unwrap(), DetectClass::UndetectableLogical);
    }

    #[test]
    fn qudit_params_reporting() {
        let f4 = field(2, 2);
        let c = search_selforthogonal(f4.clone(), 2, 2, 1, 3, &SearchOptions::default()).unwrap();
        let s = StabilizerGroup::from_code(&c).unwrap();
        let p = s.params_without_distance();
        assert_eq!(p.k_exponent, 2);
        assert_eq!(p.k_qudits(), Some(1));
        assert!(p.to_string().starts_with("[[2,1,"));
        assert!(p.to_string().ends_with("]]_4"));
        let c = search_selforthogonal(f4, 2, 1, 1, 3, &SearchOptions::default()).unwrap();
        let p = StabilizerGroup::from_code(&c).unwrap().params_without_distance();
        assert_eq!(p.to_string(), "[[2,3/2,?]]_4");
    }

    #[test]
    fn character_enumeration() {
        let f3 = field(3, 1);
        let c = search_selforthogonal(f3, 2, 2, 1, 4, &SearchOptions::default()).unwrap();
        let s = StabilizerGroup::from_code(&c).unwrap();
        let all: HashSet<_> = s.characters(DEFAULT_BUDGET).unwrap().collect();
        assert_eq!(all.len(), 9);
        assert!(matches!(s.characters(8), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn order_four_generator_takes_imaginary_values() {
        // E_{1,φ(1)} on F_2: the generator TR squares to −I.
        let f2 = field(2, 1);
        let c = ClassicalCode::new(f2, 1, &[SymplecticVector::from_values(&[1], &[1]).unwrap()]).unwrap();
        let s = StabilizerGroup::from_code(&c).unwrap();
        assert_eq!(s.allowed_values(0), vec![1, 3]);
        assert_eq!(s.default_character().values, vec![1]);
        let vals: Vec<_> = s.characters(DEFAULT_BUDGET).unwrap().map(|c| c.values[0]).collect();
        assert_eq!(vals, vec![1, 3]);
        assert_eq!(
            s.validate_character(&Character { values: vec![0] }),
            Err(Error::InconsistentCharacter { index: 0, value: 0 })
        );
    }

    #[test]
    fn group_partition_counts() {
        // Every E_{a,b} falls in exactly one class; class sizes are
        // p^r, p^{2mn} − p^{2mn−r}, and p^{2mn−r} − p^r.
        for (p, m, n, r, seed) in [(2, 1, 3, 2, 1), (3, 1, 2, 1, 2), (2, 2, 2, 2, 5)] {
            let f = field(p, m);
            let c = search_selforthogonal(f.clone(), n, r, 1, seed, &SearchOptions::default()).unwrap();
            let s = StabilizerGroup::from_code(&c).unwrap();
            let mu = s.default_character();
            let cols = 2 * n * m as usize;
            let total = (p as u64).pow(cols as u32);
            let (mut ins, mut anti, mut logical) = (0u64, 0u64, 0u64);
            for idx in 0..total {
                let fp: Vec<u32> = (0..cols)
                    .map(|i| ((idx / (p as u64).pow(i as u32)) % p as u64) as u32)
                    .collect();
                let v = SymplecticVector::from_fp(&f, n, &fp);
                let op = PauliOperator::from_vector(f.clone(), &v).unwrap();
                match s.classify(&op, &mu).unwrap() {
                    DetectClass::InStabilizer { .. } => ins += 1,
                    DetectClass::Anticommuting { .. } => anti += 1,
                    DetectClass::UndetectableLogical => logical += 1,
                }
            }
            let pr = (p as u64).pow(r as u32);
            let pd = (p as u64).pow((cols - r) as u32);
            assert_eq!(ins, pr);
            assert_eq!(anti, total - pd);
            assert_eq!(logical, pd - pr);
        }
    }

    #[test]
    fn commutation_matches_trace_pairing() {
        // For random (not necessarily selforthogonal) codes, the generator
        // commutation exponent equals the trace-symplectic pairing.
        let f9 = field(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let u = SymplecticVector::random(&f9, 2, &mut rng);
            let v = SymplecticVector::random(&f9, 2, &mut rng);
            let gu = lift(&f9, &u);
            let gv = lift(&f9, &v);
            let t = crate::symplectic_code::pairing(&f9, InnerProductKind::TraceSymplectic, &u, &v).unwrap();
            assert_eq!(gu.comm_exponent(&gv).unwrap(), t.0);
            let code = ClassicalCode::new(f9.clone(), 2, &[u, v]).unwrap();
            assert_eq!(
                StabilizerGroup::from_code(&code).is_ok(),
                code.is_selforthogonal(InnerProductKind::TraceSymplectic)
            );
        }
    }

    #[test]
    fn scalar_of_stabilizer_elements() {
        let s = five_qubit();
        let mu = s.characters(DEFAULT_BUDGET).unwrap().last().unwrap();
        s.validate_character(&mu).unwrap();
        let g = s.generators()[0].clone();
        let v = mu.values[0];
        assert_eq!(s.classify(&g, &mu).unwrap(), DetectClass::InStabilizer { scalar: v });
        // −g has eigenvalue −μ(g).
        assert_eq!(
            s.classify(&g.clone().times_xi(1), &mu).unwrap(),
            DetectClass::InStabilizer { scalar: (v + 2) % 4 }
        );
        // g0·g1 evaluates to μ(g0)μ(g1) times the reordering phase.
        let prod = g.mul(&s.generators()[1]).unwrap();
        assert_eq!(s.eval_character(&mu, &prod).unwrap(), Some((v + mu.values[1]) % 4));
    }
}
