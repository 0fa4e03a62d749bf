//! Arithmetic in F_{p^m} over the polynomial basis `1, x, …, x^{m-1}`.
//!
//! An element is a single integer whose base-p digits (little-endian) are its
//! coordinates in the polynomial basis. The field also carries the standard
//! trace `tr(a) = Σ a^{p^i}`, the Gram matrix `M_{ij} = tr(α_i α_j)` and the
//! coordinate isomorphism `φ` given by `M`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf_linalg::{add_mod, dot, mul_mod, sub_mod, MatrixFp};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;
/// Fields up to this size get log/exp and trace tables.
pub const TABLE_LIMIT: u64 = 1 << 10;

/// Element of F_{p^m}, encoded base p little-endian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomial helpers over F_p, coefficients low-degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = modulus.len() - 1;
    let lead_inv = crate::gf_linalg::inv_mod(modulus[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let f = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &c) in modulus.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(f, c, p), p);
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    out
}

/// Irreducibility by trial division against every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `m`, comparing the
/// coefficient tuple `(c_0, …, c_{m-1})` with `c_0` most significant.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let m = m as usize;
    let mut coeffs = vec![0u32; m];
    loop {
        let mut candidate = coeffs.clone();
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
        // Increment with c_{m-1} as the least significant digit.
        let mut i = m;
        loop {
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

/// The field F_{p^m} together with its trace, Gram matrix and `φ`.
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    gram: MatrixFp,
    gram_inv: MatrixFp,
    tables: Option<Tables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds F_{p^m}; with no modulus the default irreducible is used.
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        let size = (p as u64).checked_pow(m);
        if size.is_none_or(|s| s > MAX_FIELD_SIZE) {
            return Err(Error::FieldTooLarge { p, m });
        }
        let q = size.unwrap() as u32;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] % p != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m,
                        found: poly_trim(c.iter().map(|x| x % p).collect()).len().saturating_sub(1),
                    });
                }
                let c: Vec<u32> = c.iter().map(|x| x % p).collect();
                if !is_irreducible(&c, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                c
            }
            None => default_modulus(p, m),
        };
        let mut ctx = FieldCtx {
            p,
            m,
            q,
            modulus,
            gram: MatrixFp::zeros(p, 0, 0),
            gram_inv: MatrixFp::zeros(p, 0, 0),
            tables: None,
        };
        if q as u64 <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        let md = m as usize;
        let mut gram = MatrixFp::zeros(p, md, md);
        for i in 0..md {
            for j in 0..md {
                let prod = ctx.mul(ctx.basis_element(i), ctx.basis_element(j));
                gram.set(i, j, ctx.trace(prod));
            }
        }
        ctx.gram_inv = gram.inverse().expect("trace form of a finite field is nondegenerate");
        ctx.gram = gram;
        Ok(ctx)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let order = self.q as u64 - 1;
        let factors = prime_factors(order);
        let generator = (1..self.q)
            .map(FieldElement)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&f| order == 1 || self.pow_slow(g, order / f) != FieldElement::ONE)
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; q - 1];
        let mut log = vec![0u32; q];
        let mut x = FieldElement::ONE;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_poly(x, generator);
        }
        let mut tables = Tables {
            exp,
            log,
            trace: Vec::new(),
        };
        tables.trace = (0..self.q).map(|a| self.trace_direct(FieldElement(a))).collect();
        tables
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size `p^m`.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `α_{i+1} = x^i`.
    pub fn basis_element(&self, i: usize) -> FieldElement {
        FieldElement(self.p.pow(i as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m as usize);
        self.push_coords(a, &mut v);
        v
    }

    pub(crate) fn push_coords(&self, a: FieldElement, out: &mut Vec<u32>) {
        let mut x = a.0;
        for _ in 0..self.m {
            out.push(x % self.p);
            x /= self.p;
        }
    }

    pub fn from_coords(&self, c: &[u32]) -> FieldElement {
        FieldElement(c.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement(add_mod(a.0, b.0, self.p));
        }
        let (mut x, mut y, mut place, mut out) = (a.0, b.0, 1u32, 0u32);
        for _ in 0..self.m {
            out += add_mod(x % self.p, y % self.p, self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self.coords(a).iter().map(|&d| (self.p - d) % self.p).collect();
        self.from_coords(&c)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplication by a prime-field scalar.
    pub fn scale(&self, c: u32, a: FieldElement) -> FieldElement {
        let v: Vec<u32> = self.coords(a).iter().map(|&d| mul_mod(c, d, self.p)).collect();
        self.from_coords(&v)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.m == 1 {
            return FieldElement(mul_mod(a.0, b.0, self.p));
        }
        match &self.tables {
            Some(t) => {
                let n = self.q as usize - 1;
                let i = (t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize) % n;
                FieldElement(t.exp[i])
            }
            None => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly_mul(&self.coords(a), &self.coords(b), self.p);
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.m as usize, 0);
        self.from_coords(&r)
    }

    fn pow_slow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let (mut base, mut acc) = (a, FieldElement::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let (mut base, mut acc) = (a, FieldElement::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    fn trace_direct(&self, a: FieldElement) -> u32 {
        let mut acc = FieldElement::ZERO;
        let mut x = a;
        for _ in 0..self.m {
            acc = self.add(acc, x);
            x = self.pow_slow(x, self.p as u64);
        }
        debug_assert!(acc.0 < self.p, "trace must land in the prime field");
        acc.0
    }

    /// Standard trace `Σ_{i<m} a^{p^i}`, a value in `[0, p)`.
    pub fn trace(&self, a: FieldElement) -> u32 {
        match &self.tables {
            Some(t) => t.trace[a.0 as usize],
            None => self.trace_direct(a),
        }
    }

    /// `M_{ij} = tr(α_i α_j)`.
    pub fn gram(&self) -> &MatrixFp {
        &self.gram
    }

    /// `coords(φ(b)) = M · coords(b)`.
    pub fn phi(&self, b: FieldElement) -> FieldElement {
        let c = self.gram.mul_vec(&self.coords(b)).expect("square gram");
        self.from_coords(&c)
    }

    pub fn phi_inv(&self, b: FieldElement) -> FieldElement {
        let c = self.gram_inv.mul_vec(&self.coords(b)).expect("square gram");
        self.from_coords(&c)
    }

    /// `coords(a)ᵀ M coords(b)`, equal to `tr(ab)`.
    pub fn gram_form(&self, a: FieldElement, b: FieldElement) -> u32 {
        let mb = self.gram.mul_vec(&self.coords(b)).expect("square gram");
        dot(&self.coords(a), &mb, self.p)
    }

    /// Textual form `p=..,m=..,mod=c0,..,cm`.
    pub fn spec_string(&self) -> String {
        format!("p={},m={},mod={}", self.p, self.m, join(&self.modulus, ","))
    }
}

pub(crate) fn join(v: &[u32], sep: &str) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// Parsed form of `p=<int>,m=<int>[,mod=<c0,...,cm>]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        FieldCtx::new(self.p, self.m, self.modulus.clone())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("field spec {s:?}: {msg}"));
        let (head, modulus) = match s.split_once("mod=") {
            Some((h, tail)) => {
                let coeffs = tail
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad modulus coefficient"))?;
                (h, Some(coeffs))
            }
            None => (s, None),
        };
        let (mut p, mut m) = (None, None);
        for part in head.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v: u32 = v.trim().parse().map_err(|_| bad("expected an integer"))?;
            match k.trim() {
                "p" => p = Some(v),
                "m" => m = Some(v),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(FieldSpec {
            p: p.ok_or_else(|| bad("missing p"))?,
            m: m.ok_or_else(|| bad("missing m"))?,
            modulus,
        })
    }
}
