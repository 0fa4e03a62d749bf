//! Classical codes `C ⊆ F_{p^m}^{2n}` with their symplectic forms.
//!
//! A vector `(a, b)` is expanded into F_p coordinates as the `n·m`
//! coordinates of the a-block followed by those of the b-block. Codes are
//! F_p-linear and stored by the rref-canonical basis of that expansion, so two
//! codes are equal iff they span the same space.

mod code_file;
mod distance;
mod families;
mod search;

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::finite_field::{FieldCtx, FieldElement};
use crate::gf_linalg::{self, MatrixFp};

pub use code_file::{format_code, parse_code, read_code, write_code};
pub use distance::{min_weight_coset, Distance, DistanceReport};
pub use families::{family_params, CodeFamily, FamilyParams};
pub use search::{search_selforthogonal, SearchOptions};

/// A vector `(a, b) ∈ F_{p^m}^{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
}

impl SymplecticVector {
    pub fn new(a: Vec<FieldElement>, b: Vec<FieldElement>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(Self { a, b })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            a: vec![FieldElement::ZERO; n],
            b: vec![FieldElement::ZERO; n],
        }
    }

    /// Convenience constructor from raw integer encodings.
    pub fn from_values(a: &[u32], b: &[u32]) -> Result<Self> {
        Self::new(
            a.iter().copied().map(FieldElement).collect(),
            b.iter().copied().map(FieldElement).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|x| x.is_zero())
    }

    pub fn weight(&self) -> usize {
        symplectic_weight(self)
    }

    /// F_p expansion: coordinates of `a^{(1)}..a^{(n)}` then `b^{(1)}..b^{(n)}`.
    pub fn to_fp(&self, field: &FieldCtx) -> Vec<u32> {
        let mut out = Vec::with_capacity(2 * self.n() * field.m() as usize);
        for &x in self.a.iter().chain(&self.b) {
            field.push_coords(x, &mut out);
        }
        out
    }

    pub fn from_fp(field: &FieldCtx, n: usize, v: &[u32]) -> Self {
        let m = field.m() as usize;
        debug_assert_eq!(v.len(), 2 * n * m);
        let elems: Vec<FieldElement> = v.chunks(m).map(|c| field.from_coords(c)).collect();
        Self {
            a: elems[..n].to_vec(),
            b: elems[n..].to_vec(),
        }
    }

    /// Multiplication by a field scalar, coordinatewise.
    pub fn scale(&self, field: &FieldCtx, s: FieldElement) -> Self {
        Self {
            a: self.a.iter().map(|&x| field.mul(s, x)).collect(),
            b: self.b.iter().map(|&x| field.mul(s, x)).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(field: &FieldCtx, n: usize, rng: &mut R) -> Self {
        let mut pick = || FieldElement(rng.gen_range(0..field.q()));
        let a = (0..n).map(|_| pick()).collect();
        let b = (0..n).map(|_| pick()).collect();
        Self { a, b }
    }

    fn check_field(&self, field: &FieldCtx) -> Result<()> {
        match self.a.iter().chain(&self.b).find(|x| !field.contains(**x)) {
            Some(_) => Err(Error::FieldMismatch),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[FieldElement]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", show(&self.a), show(&self.b))
    }
}

/// `|{i : a^{(i)} ≠ 0 or b^{(i)} ≠ 0}|`.
pub fn symplectic_weight(v: &SymplecticVector) -> usize {
    v.a.iter()
        .zip(&v.b)
        .filter(|(x, y)| !x.is_zero() || !y.is_zero())
        .count()
}

/// Symplectic weight read directly off an F_p expansion.
pub(crate) fn fp_weight(v: &[u32], n: usize, m: usize) -> usize {
    let (a, b) = v.split_at(n * m);
    (0..n)
        .filter(|&i| {
            let r = i * m..(i + 1) * m;
            a[r.clone()].iter().chain(&b[r]).any(|&x| x != 0)
        })
        .count()
}

/// The three bilinear forms on `F_{p^m}^{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InnerProductKind {
    /// `⟨a, b'⟩ − ⟨a', b⟩` on F_p coordinate expansions, values in F_p.
    CoordinateSymplectic,
    /// `tr(⟨a, b'⟩_* − ⟨a', b⟩_*)`, values in F_p.
    TraceSymplectic,
    /// `⟨a, b'⟩_* − ⟨a', b⟩_*`, values in F_{p^m}.
    Bierbrauer,
}

impl InnerProductKind {
    pub const ALL: [InnerProductKind; 3] = [
        InnerProductKind::CoordinateSymplectic,
        InnerProductKind::TraceSymplectic,
        InnerProductKind::Bierbrauer,
    ];
}

impl fmt::Display for InnerProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InnerProductKind::CoordinateSymplectic => "CoordinateSymplectic",
            InnerProductKind::TraceSymplectic => "TraceSymplectic",
            InnerProductKind::Bierbrauer => "Bierbrauer",
        };
        f.write_str(s)
    }
}

fn star(field: &FieldCtx, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
    x.iter()
        .zip(y)
        .fold(FieldElement::ZERO, |acc, (&s, &t)| field.add(acc, field.mul(s, t)))
}

fn coord_dot(field: &FieldCtx, x: &[FieldElement], y: &[FieldElement]) -> u32 {
    let p = field.p();
    x.iter().zip(y).fold(0, |acc, (&s, &t)| {
        gf_linalg::add_mod(acc, gf_linalg::dot(&field.coords(s), &field.coords(t), p), p)
    })
}

/// Evaluates `u * v` under the chosen form. F_p-valued forms return an
/// element whose encoding is the residue in `[0, p)`.
pub fn pairing(
    field: &FieldCtx,
    kind: InnerProductKind,
    u: &SymplecticVector,
    v: &SymplecticVector,
) -> Result<FieldElement> {
    if u.n() != v.n() {
        return Err(Error::LengthMismatch(u.n(), v.n()));
    }
    u.check_field(field)?;
    v.check_field(field)?;
    let p = field.p();
    Ok(match kind {
        InnerProductKind::CoordinateSymplectic => {
            let x = coord_dot(field, &u.a, &v.b);
            let y = coord_dot(field, &v.a, &u.b);
            FieldElement(gf_linalg::sub_mod(x, y, p))
        }
        InnerProductKind::TraceSymplectic => {
            let s = field.sub(star(field, &u.a, &v.b), star(field, &v.a, &u.b));
            FieldElement(field.trace(s))
        }
        InnerProductKind::Bierbrauer => field.sub(star(field, &u.a, &v.b), star(field, &v.a, &u.b)),
    })
}

/// Trace-symplectic form evaluated on F_p expansions through the Gram
/// matrix: `Σ_i a_iᵀ M b'_i − a'_iᵀ M b_i`.
pub(crate) fn trace_pairing_fp(field: &FieldCtx, n: usize, u: &[u32], v: &[u32]) -> u32 {
    let p = field.p();
    let m = field.m() as usize;
    let gram = field.gram();
    let half = n * m;
    let mut acc = 0u32;
    for i in 0..n {
        let r = i * m..(i + 1) * m;
        let mv_b = gram.mul_vec(&v[half + r.start..half + r.end]).unwrap();
        let mu_b = gram.mul_vec(&u[half + r.start..half + r.end]).unwrap();
        acc = gf_linalg::add_mod(acc, gf_linalg::dot(&u[r.clone()], &mv_b, p), p);
        acc = gf_linalg::sub_mod(acc, gf_linalg::dot(&v[r], &mu_b, p), p);
    }
    acc
}

/// An F_p-linear code in `F_{p^m}^{2n}`.
#[derive(Debug, Clone)]
pub struct ClassicalCode {
    field: Arc<FieldCtx>,
    n: usize,
    rows: Vec<Vec<u32>>,
    basis: Vec<SymplecticVector>,
}

impl PartialEq for ClassicalCode {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.n == other.n && self.rows == other.rows
    }
}

impl Eq for ClassicalCode {}

impl ClassicalCode {
    /// F_p span of `vectors`, canonicalized.
    pub fn new(field: Arc<FieldCtx>, n: usize, vectors: &[SymplecticVector]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.n() != n {
                return Err(Error::LengthMismatch(n, v.n()));
            }
            v.check_field(&field)?;
            rows.push(v.to_fp(&field));
        }
        Self::from_fp_rows(field, n, &rows)
    }

    /// Span of already-expanded rows of length `2mn`.
    pub fn from_fp_rows(field: Arc<FieldCtx>, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = 2 * n * field.m() as usize;
        let rows = gf_linalg::canonical_basis(field.p(), cols, rows)?;
        let basis = rows.iter().map(|r| SymplecticVector::from_fp(&field, n, r)).collect();
        Ok(Self { field, n, rows, basis })
    }

    pub fn zero(field: Arc<FieldCtx>, n: usize) -> Self {
        Self {
            field,
            n,
            rows: Vec::new(),
            basis: Vec::new(),
        }
    }

    /// F_{p^m}-linear span: the F_p span of `α_j · v` over all basis
    /// elements `α_j` and all given `v`.
    pub fn fq_span(field: Arc<FieldCtx>, n: usize, vectors: &[SymplecticVector]) -> Result<Self> {
        let mut all = Vec::with_capacity(vectors.len() * field.m() as usize);
        for v in vectors {
            for j in 0..field.m() as usize {
                all.push(v.scale(&field, field.basis_element(j)));
            }
        }
        Self::new(field, n, &all)
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// F_p-dimension `r`; the code has `p^r` elements.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SymplecticVector] {
        &self.basis
    }

    /// Canonical basis in F_p expansion.
    pub fn fp_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Length `2mn` of the F_p expansion.
    pub fn fp_len(&self) -> usize {
        2 * self.n * self.field.m() as usize
    }

    pub fn contains(&self, v: &SymplecticVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::LengthMismatch(self.n, v.n()));
        }
        v.check_field(&self.field)?;
        gf_linalg::in_span(self.field.p(), &self.rows, &v.to_fp(&self.field))
    }

    /// True iff closed under multiplication by every element of F_{p^m}.
    pub fn is_fq_linear(&self) -> bool {
        self.basis.iter().all(|v| {
            (0..self.field.m() as usize).all(|j| {
                let w = v.scale(&self.field, self.field.basis_element(j));
                gf_linalg::in_span(self.field.p(), &self.rows, &w.to_fp(&self.field)).unwrap()
            })
        })
    }

    /// First basis pair `(i, j)` with nonzero pairing, with its value.
    pub fn selforthogonality_violation(&self, kind: InnerProductKind) -> Option<(usize, usize, FieldElement)> {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let v = pairing(&self.field, kind, &self.basis[i], &self.basis[j]).unwrap();
                if !v.is_zero() {
                    return Some((i, j, v));
                }
            }
        }
        // Alternating forms vanish on the diagonal, but check it anyway.
        for (i, u) in self.basis.iter().enumerate() {
            let v = pairing(&self.field, kind, u, u).unwrap();
            if !v.is_zero() {
                return Some((i, i, v));
            }
        }
        None
    }

    /// `u * v = 0` for all codewords; checked on basis pairs by bilinearity.
    pub fn is_selforthogonal(&self, kind: InnerProductKind) -> bool {
        self.selforthogonality_violation(kind).is_none()
    }

    /// Dual with respect to the trace-symplectic form.
    pub fn dual(&self) -> ClassicalCode {
        let cols = self.fp_len();
        let p = self.field.p();
        let mut unit = vec![0u32; cols];
        // Row c holds the functional v ↦ c * v on the unit vectors.
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|c| {
                (0..cols)
                    .map(|j| {
                        unit[j] = 1;
                        let x = trace_pairing_fp(&self.field, self.n, c, &unit);
                        unit[j] = 0;
                        x
                    })
                    .collect()
            })
            .collect();
        let kernel = if rows.is_empty() {
            (0..cols)
                .map(|j| (0..cols).map(|i| u32::from(i == j)).collect())
                .collect()
        } else {
            MatrixFp::from_rows(p, cols, &rows).unwrap().kernel()
        };
        ClassicalCode::from_fp_rows(self.field.clone(), self.n, &kernel).unwrap()
    }

    /// Same code presented with a different basis: `B' = T·B` for an
    /// invertible `T`. Canonicalization makes the result equal to `self`.
    pub fn with_basis(&self, rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_fp_rows(self.field.clone(), self.n, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32, m: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, m, None).unwrap())
    }

    #[test]
    fn pairing_examples() {
        let f4 = f(2, 2);
        let u = SymplecticVector::from_values(&[1], &[0]).unwrap();
        let v = SymplecticVector::from_values(&[0], &[1]).unwrap();
        assert_eq!(
            pairing(&f4, InnerProductKind::Bierbrauer, &u, &v).unwrap(),
            FieldElement(1)
        );
        assert_eq!(
            pairing(&f4, InnerProductKind::TraceSymplectic, &u, &v).unwrap(),
            FieldElement(0)
        );
        let f2 = f(2, 1);
        assert_eq!(
            pairing(&f2, InnerProductKind::TraceSymplectic, &u, &v).unwrap(),
            FieldElement(1)
        );
        for kind in InnerProductKind::ALL {
            assert!(pairing(&f4, kind, &u, &u).unwrap().is_zero());
        }
        let long = SymplecticVector::zero(2);
        assert_eq!(
            pairing(&f4, InnerProductKind::Bierbrauer, &u, &long),
            Err(Error::LengthMismatch(1, 2))
        );
        let bad = SymplecticVector::from_values(&[7], &[0]).unwrap();
        assert_eq!(
            pairing(&f4, InnerProductKind::Bierbrauer, &u, &bad),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn weights() {
        assert_eq!(symplectic_weight(&SymplecticVector::zero(3)), 0);
        let v = SymplecticVector::from_values(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(v.weight(), 2);
        let w = SymplecticVector::from_values(&[2], &[3]).unwrap();
        assert_eq!(w.weight(), 1);
    }

    #[test]
    fn selforthogonality_examples() {
        let f2 = f(2, 1);
        let zero = ClassicalCode::zero(f2.clone(), 1);
        for kind in InnerProductKind::ALL {
            assert!(zero.is_selforthogonal(kind));
        }
        let full = ClassicalCode::new(
            f2,
            1,
            &[
                SymplecticVector::from_values(&[1], &[0]).unwrap(),
                SymplecticVector::from_values(&[0], &[1]).unwrap(),
            ],
        )
        .unwrap();
        assert!(!full.is_selforthogonal(InnerProductKind::TraceSymplectic));
        assert_eq!(
            full.selforthogonality_violation(InnerProductKind::TraceSymplectic),
            Some((0, 1, FieldElement(1)))
        );
    }

    #[test]
    fn dual_examples() {
        let f2 = f(2, 1);
        let zero = ClassicalCode::zero(f2.clone(), 1);
        assert_eq!(zero.dual().rank(), 2);

        let z = ClassicalCode::new(f2.clone(), 1, &[SymplecticVector::from_values(&[0], &[1]).unwrap()]).unwrap();
        assert_eq!(z.dual(), z);

        let c = search_selforthogonal(f2, 5, 4, 1, 3, &SearchOptions::default()).unwrap();
        assert_eq!(c.rank(), 4);
        assert_eq!(c.dual().rank(), 6);
    }

    #[test]
    fn dual_contains_selforthogonal_code() {
        let f3 = f(3, 1);
        let c = search_selforthogonal(f3, 3, 2, 1, 11, &SearchOptions::default()).unwrap();
        let d = c.dual();
        for v in c.basis() {
            assert!(d.contains(v).unwrap());
        }
    }

    #[test]
    fn fq_linear_closure() {
        let f4 = f(2, 2);
        let v = SymplecticVector::from_values(&[1, 2], &[3, 0]).unwrap();
        let c = ClassicalCode::fq_span(f4.clone(), 2, std::slice::from_ref(&v)).unwrap();
        assert_eq!(c.rank(), 2);
        assert!(c.is_fq_linear());
        let c1 = ClassicalCode::new(f4, 2, &[v]).unwrap();
        assert!(!c1.is_fq_linear());
    }

    #[test]
    fn gram_route_matches_field_route() {
        let f9 = f(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let u = SymplecticVector::random(&f9, 3, &mut rng);
            let v = SymplecticVector::random(&f9, 3, &mut rng);
            let t = pairing(&f9, InnerProductKind::TraceSymplectic, &u, &v).unwrap();
            assert_eq!(trace_pairing_fp(&f9, 3, &u.to_fp(&f9), &v.to_fp(&f9)), t.0);
        }
    }
}
