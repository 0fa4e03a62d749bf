//! Exact arithmetic in the error group `{ξ^i E_{a,b}}`.
//!
//! `E_{a,b}` is the tensor product over systems of `T_{a^{(i)}} R_{b^{(i)}}`.
//! Phases are integer exponents in a cyclic ring of order `ℓ`: for odd `p`
//! the exponent counts powers of `ξ = e^{2πi/p}` (`ℓ = p`), for `p = 2` it
//! counts powers of `ι` (`ℓ = 4`, `ξ = ι²`) because `(TR)² = −I` makes
//! square roots of `ξ` appear as character values.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::finite_field::{FieldCtx, FieldElement};
use crate::gf_linalg::{add_mod, dot, sub_mod};
use crate::symplectic_code::SymplecticVector;

/// Order `ℓ` of the phase ring.
pub fn phase_modulus(p: u32) -> u32 {
    if p == 2 {
        4
    } else {
        p
    }
}

/// Phase-ring exponent of `ξ^e`.
pub fn xi_phase(p: u32, e: u32) -> u32 {
    if p == 2 {
        2 * (e % 2)
    } else {
        e % p
    }
}

/// `⟨x, y⟩ = Σ_i Σ_j x^{(i)}_j y^{(i)}_j` over F_p coordinate expansions.
pub fn coord_inner(field: &FieldCtx, x: &[FieldElement], y: &[FieldElement]) -> u32 {
    let p = field.p();
    x.iter().zip(y).fold(0, |acc, (&s, &t)| {
        add_mod(acc, dot(&field.coords(s), &field.coords(t), p), p)
    })
}

/// `ι^phase E_{a,b}` (p = 2) or `ξ^phase E_{a,b}` (odd p).
#[derive(Debug, Clone)]
pub struct PauliOperator {
    field: Arc<FieldCtx>,
    phase: u32,
    a: Vec<FieldElement>,
    b: Vec<FieldElement>,
}

impl PartialEq for PauliOperator {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.phase == other.phase && self.a == other.a && self.b == other.b
    }
}

impl Eq for PauliOperator {}

impl PauliOperator {
    pub fn new(field: Arc<FieldCtx>, phase: u32, a: Vec<FieldElement>, b: Vec<FieldElement>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        if a.iter().chain(&b).any(|x| !field.contains(*x)) {
            return Err(Error::FieldMismatch);
        }
        let phase = phase % phase_modulus(field.p());
        Ok(Self { field, phase, a, b })
    }

    /// `E_{a,b}` with zero phase from raw element encodings.
    pub fn from_values(field: Arc<FieldCtx>, a: &[u32], b: &[u32]) -> Result<Self> {
        Self::new(
            field,
            0,
            a.iter().copied().map(FieldElement).collect(),
            b.iter().copied().map(FieldElement).collect(),
        )
    }

    pub fn from_vector(field: Arc<FieldCtx>, v: &SymplecticVector) -> Result<Self> {
        Self::new(field, 0, v.a.clone(), v.b.clone())
    }

    pub fn identity(field: Arc<FieldCtx>, n: usize) -> Self {
        Self {
            field,
            phase: 0,
            a: vec![FieldElement::ZERO; n],
            b: vec![FieldElement::ZERO; n],
        }
    }

    /// Uniformly random element of the group, phase included.
    pub fn random<R: Rng + ?Sized>(field: Arc<FieldCtx>, n: usize, rng: &mut R) -> Self {
        let v = SymplecticVector::random(&field, n, rng);
        let phase = rng.gen_range(0..phase_modulus(field.p()));
        Self {
            field,
            phase,
            a: v.a,
            b: v.b,
        }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Phase exponent in the ring of order [`phase_modulus`].
    pub fn phase(&self) -> u32 {
        self.phase
    }

    pub fn a(&self) -> &[FieldElement] {
        &self.a
    }

    pub fn b(&self) -> &[FieldElement] {
        &self.b
    }

    /// The `(a, b)` blocks, phase dropped.
    pub fn blocks(&self) -> SymplecticVector {
        SymplecticVector {
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn with_phase(mut self, phase: u32) -> Self {
        self.phase = phase % phase_modulus(self.field.p());
        self
    }

    /// Multiplies by `ξ^e`.
    pub fn times_xi(mut self, e: u32) -> Self {
        let l = phase_modulus(self.field.p());
        self.phase = (self.phase + xi_phase(self.field.p(), e)) % l;
        self
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.a.iter().chain(&self.b).all(|x| x.is_zero())
    }

    /// `E_{a,b}` with `a = b = 0` up to phase.
    pub fn is_scalar(&self) -> bool {
        self.a.iter().chain(&self.b).all(|x| x.is_zero())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    /// `(ξ^κ E_{a,b})(ξ^λ E_{c,d}) = ξ^{κ+λ−⟨b,c⟩} E_{a+c, b+d}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = &self.field;
        let p = f.p();
        let l = phase_modulus(p);
        let bc = coord_inner(f, &self.b, &other.a);
        let phase = (self.phase + other.phase + xi_phase(p, (p - bc) % p)) % l;
        let a = self.a.iter().zip(&other.a).map(|(&x, &y)| f.add(x, y)).collect();
        let b = self.b.iter().zip(&other.b).map(|(&x, &y)| f.add(x, y)).collect();
        Ok(Self {
            field: f.clone(),
            phase,
            a,
            b,
        })
    }

    /// `e` with `xy = ξ^e yx`, namely `⟨a, d⟩ − ⟨b, c⟩ mod p`.
    pub fn comm_exponent(&self, other: &Self) -> Result<u32> {
        self.compatible(other)?;
        let f = &self.field;
        let ad = coord_inner(f, &self.a, &other.b);
        let bc = coord_inner(f, &self.b, &other.a);
        Ok(sub_mod(ad, bc, f.p()))
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.comm_exponent(other)? == 0)
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::identity(self.field.clone(), self.n());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same group");
            }
            base = base.mul(&base).expect("same group");
            k >>= 1;
        }
        acc
    }

    /// Conjugate transpose: `(ξ^κ T_a R_b)† = ξ^{−κ} (R_b)^{p−1} (T_a)^{p−1}`.
    pub fn adjoint(&self) -> Self {
        let f = &self.field;
        let n = self.n();
        let zeros = vec![FieldElement::ZERO; n];
        let t_part = Self {
            field: f.clone(),
            phase: 0,
            a: self.a.clone(),
            b: zeros.clone(),
        };
        let r_part = Self {
            field: f.clone(),
            phase: 0,
            a: zeros,
            b: self.b.clone(),
        };
        let k = f.p() as u64 - 1;
        let l = phase_modulus(f.p());
        r_part
            .pow(k)
            .mul(&t_part.pow(k))
            .expect("same group")
            .with_phase_added((l - self.phase) % l)
    }

    fn with_phase_added(mut self, d: u32) -> Self {
        self.phase = (self.phase + d) % phase_modulus(self.field.p());
        self
    }

    /// Group inverse; equals the adjoint since every element is unitary.
    pub fn inverse(&self) -> Self {
        self.adjoint()
    }

    /// Number of tensor factors different from the identity.
    pub fn weight(&self) -> usize {
        crate::symplectic_code::symplectic_weight(&self.blocks())
    }

    /// Parses the `ξ^k E(a1,..,an|b1,..,bn)` rendering. `ι^k` (or `i^k`)
    /// is accepted for `p = 2`; `xi^k` is an ASCII alias of `ξ^k`.
    pub fn parse(field: Arc<FieldCtx>, s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("operator {s:?}: {msg}"));
        let s_trim = s.trim();
        let (prefix, body) = s_trim.split_once('E').ok_or_else(|| bad("missing E(..)"))?;
        let prefix = prefix.trim();
        let p = field.p();
        let phase = if prefix.is_empty() {
            0
        } else {
            let (base, exp) = prefix.split_once('^').ok_or_else(|| bad("expected base^k"))?;
            let k: u32 = exp.trim().parse().map_err(|_| bad("bad phase exponent"))?;
            match base.trim() {
                "ξ" | "xi" => xi_phase(p, k),
                "ι" | "i" if p == 2 => k % 4,
                _ => return Err(bad("unknown phase base")),
            }
        };
        let inner = body
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let (a, b) = inner.split_once('|').ok_or_else(|| bad("expected a|b"))?;
        let list = |t: &str| -> Result<Vec<FieldElement>> {
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map(FieldElement)
                        .map_err(|_| bad("bad element"))
                })
                .collect()
        };
        Self::new(field, phase, list(a)?, list(b)?)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[FieldElement]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.field.p() == 2 && self.phase % 2 == 1 {
            write!(f, "ι^{}", self.phase)?;
        } else if self.field.p() == 2 {
            write!(f, "ξ^{}", self.phase / 2)?;
        } else {
            write!(f, "ξ^{}", self.phase)?;
        }
        write!(f, " E({}|{})", show(&self.a), show(&self.b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn field(p: u32, m: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, m, None).unwrap())
    }

    fn e(f: &Arc<FieldCtx>, a: &[u32], b: &[u32]) -> PauliOperator {
        PauliOperator::from_values(f.clone(), a, b).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let f2 = field(2, 1);
        let x = e(&f2, &[1], &[0]);
        let z = e(&f2, &[0], &[1]);
        let id = PauliOperator::identity(f2.clone(), 1);
        assert_eq!(id.mul(&z).unwrap(), z);
        assert_eq!(x.mul(&z).unwrap(), e(&f2, &[1], &[1]));
        // ξ^{-1} = -1 = ι^2
        assert_eq!(z.mul(&x).unwrap(), e(&f2, &[1], &[1]).with_phase(2));

        let f3 = field(3, 1);
        let prod = e(&f3, &[0], &[1]).mul(&e(&f3, &[1], &[0])).unwrap();
        assert_eq!(prod, e(&f3, &[1], &[1]).with_phase(2));
    }

    #[test]
    fn commutation_examples() {
        let f2 = field(2, 1);
        let x = e(&f2, &[1], &[0]);
        let z = e(&f2, &[0], &[1]);
        assert_eq!(x.comm_exponent(&x).unwrap(), 0);
        assert_eq!(x.comm_exponent(&z).unwrap(), 1);
        let f5 = field(5, 1);
        assert_eq!(e(&f5, &[2], &[0]).comm_exponent(&e(&f5, &[0], &[3])).unwrap(), 1);
        let f3 = field(3, 1);
        assert_eq!(x.comm_exponent(&e(&f3, &[1], &[0])), Err(Error::FieldMismatch));
        assert_eq!(
            x.comm_exponent(&e(&f2, &[1, 0], &[0, 0])),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn power_examples() {
        let f2 = field(2, 1);
        let y = e(&f2, &[1], &[1]);
        assert_eq!(y.pow(2), PauliOperator::identity(f2.clone(), 1).with_phase(2));
        assert!(y.pow(0).is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [3, 5, 7] {
            let f = field(p, 1);
            for _ in 0..20 {
                let x = PauliOperator::random(f.clone(), 3, &mut rng);
                assert!(x.pow(p as u64).is_identity());
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let f2 = field(2, 1);
        let id = PauliOperator::identity(f2.clone(), 2);
        assert_eq!(id.adjoint(), id);
        let x = e(&f2, &[1], &[0]);
        assert_eq!(x.adjoint(), x);
        let f3 = field(3, 1);
        let t = e(&f3, &[1], &[0]);
        assert_eq!(t.adjoint(), t.pow(2));
    }

    #[test]
    fn weight_examples() {
        let f2 = field(2, 1);
        assert_eq!(PauliOperator::identity(f2.clone(), 3).weight(), 0);
        assert_eq!(e(&f2, &[1, 0], &[0, 0]).weight(), 1);
    }

    #[test]
    fn group_order_single_system() {
        // {ξ^i E_{a,b}} on one F_4 system has p·p^{2m} = 32 elements.
        let f4 = field(2, 2);
        let mut elems = std::collections::HashSet::new();
        for a in 0..4 {
            for b in 0..4 {
                for i in 0..2 {
                    let op = e(&f4, &[a], &[b]).times_xi(i);
                    elems.insert(format!("{op}"));
                }
            }
        }
        assert_eq!(elems.len(), 32);
        // The center is the phase subgroup: only scalars commute with all.
        let all: Vec<_> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .map(|(a, b)| e(&f4, &[a], &[b]))
            .collect();
        let central: Vec<_> = all
            .iter()
            .filter(|x| all.iter().all(|y| x.commutes_with(y).unwrap()))
            .collect();
        assert_eq!(central.len(), 1);
        assert!(central[0].is_scalar());
    }

    #[test]
    fn render_and_parse() {
        let f3 = field(3, 1);
        let op = e(&f3, &[1, 2], &[0, 1]).with_phase(2);
        assert_eq!(op.to_string(), "ξ^2 E(1,2|0,1)");
        assert_eq!(PauliOperator::parse(f3.clone(), &op.to_string()).unwrap(), op);
        assert_eq!(PauliOperator::parse(f3.clone(), "xi^2 E(1,2|0,1)").unwrap(), op);

        let f2 = field(2, 1);
        let minus = e(&f2, &[1], &[1]).with_phase(2);
        assert_eq!(minus.to_string(), "ξ^1 E(1|1)");
        let odd = e(&f2, &[1], &[1]).with_phase(3);
        assert_eq!(odd.to_string(), "ι^3 E(1|1)");
        assert_eq!(PauliOperator::parse(f2.clone(), "ι^3 E(1|1)").unwrap(), odd);
        assert!(PauliOperator::parse(f3, "ι^1 E(1|1)").is_err());
        assert!(PauliOperator::parse(f2, "ξ^1 E(1,1|1)").is_err());
    }

    fn op_strategy(p: u32, m: u32, n: usize) -> impl Strategy<Value = PauliOperator> {
        let f = field(p, m);
        let q = f.q();
        (
            0..phase_modulus(p),
            proptest::collection::vec(0..q, n),
            proptest::collection::vec(0..q, n),
        )
            .prop_map(move |(k, a, b)| e(&f, &a, &b).with_phase(k))
    }

    proptest! {
        #[test]
        fn associativity(x in op_strategy(3, 2, 2), y in op_strategy(3, 2, 2), z in op_strategy(3, 2, 2)) {
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        }

        #[test]
        fn associativity_qubits(x in op_strategy(2, 2, 3), y in op_strategy(2, 2, 3), z in op_strategy(2, 2, 3)) {
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        }

        #[test]
        fn commutation_law(x in op_strategy(5, 1, 3), y in op_strategy(5, 1, 3)) {
            let e = x.comm_exponent(&y).unwrap();
            prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap().times_xi(e));
        }

        #[test]
        fn commutation_law_qubits(x in op_strategy(2, 2, 2), y in op_strategy(2, 2, 2)) {
            let e = x.comm_exponent(&y).unwrap();
            prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap().times_xi(e));
        }

        #[test]
        fn adjoint_inverts(x in op_strategy(3, 2, 2)) {
            prop_assert!(x.adjoint().mul(&x).unwrap().is_identity());
            prop_assert_eq!(x.weight(), x.inverse().weight());
        }

        #[test]
        fn adjoint_inverts_qubits(x in op_strategy(2, 1, 4)) {
            prop_assert!(x.adjoint().mul(&x).unwrap().is_identity());
        }

        #[test]
        fn qubit_square_rule(x in op_strategy(2, 2, 3)) {
            // x² = ι^{2κ} ξ^{-⟨b,a⟩} I
            let ba = coord_inner(x.field(), x.b(), x.a());
            let expected = PauliOperator::identity(x.field().clone(), 3)
                .with_phase(2 * x.phase())
                .times_xi(ba);
            prop_assert_eq!(x.pow(2), expected);
        }
    }
}
