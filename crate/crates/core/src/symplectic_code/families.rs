use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::is_prime;

/// Distance-3 families obtainable from known symplectic selforthogonal codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeFamily {
    /// `[[q^r, q^r − (r+2), 3]]_q`
    PowerLength,
    /// `[[q² + 1, q² − 3, 3]]_q`
    QuadraticPlusOne,
    /// `[[(q^{r+2} − 1)/(q² − 1), n − (r+2), 3]]_q`, r even
    EvenProjective,
    /// `[[q³(q^{r−1} − 1)/(q² − 1), n − (r+2), 3]]_q`, r odd
    OddProjective,
}

impl CodeFamily {
    pub const ALL: [CodeFamily; 4] = [
        CodeFamily::PowerLength,
        CodeFamily::QuadraticPlusOne,
        CodeFamily::EvenProjective,
        CodeFamily::OddProjective,
    ];

    /// 1-based identifier, in the order the families are usually listed.
    pub fn id(self) -> u8 {
        match self {
            CodeFamily::PowerLength => 1,
            CodeFamily::QuadraticPlusOne => 2,
            CodeFamily::EvenProjective => 3,
            CodeFamily::OddProjective => 4,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn formula(self) -> &'static str {
        match self {
            CodeFamily::PowerLength => "[[q^r, q^r-(r+2), 3]]_q",
            CodeFamily::QuadraticPlusOne => "[[q^2+1, q^2-3, 3]]_q",
            CodeFamily::EvenProjective => "[[(q^(r+2)-1)/(q^2-1), n-(r+2), 3]]_q (r even)",
            CodeFamily::OddProjective => "[[q^3(q^(r-1)-1)/(q^2-1), n-(r+2), 3]]_q (r odd)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1 && is_prime(p)
}

/// Parameter arithmetic for `family` at alphabet size `q` and parameter `r`.
/// `r` is ignored by [`CodeFamily::QuadraticPlusOne`].
pub fn family_params(q: u64, family: CodeFamily, r: u32) -> Result<FamilyParams> {
    if !is_prime_power(q) {
        return Err(Error::InvalidFamily(format!("q = {q} is not a prime power")));
    }
    let overflow = || Error::InvalidFamily(format!("parameters overflow for q = {q}, r = {r}"));
    let pow = |e: u32| q.checked_pow(e).ok_or_else(overflow);
    let q2m1 = q * q - 1;
    let n = match family {
        CodeFamily::PowerLength => pow(r)?,
        CodeFamily::QuadraticPlusOne => q * q + 1,
        CodeFamily::EvenProjective => {
            if !r.is_multiple_of(2) {
                return Err(Error::ParityViolation {
                    family: family.id(),
                    r,
                    expected: "even",
                });
            }
            (pow(r + 2)? - 1) / q2m1
        }
        CodeFamily::OddProjective => {
            if r % 2 != 1 {
                return Err(Error::ParityViolation {
                    family: family.id(),
                    r,
                    expected: "odd",
                });
            }
            pow(3)?.checked_mul((pow(r - 1)? - 1) / q2m1).ok_or_else(overflow)?
        }
    };
    let redundancy = match family {
        CodeFamily::QuadraticPlusOne => 4,
        _ => r as u64 + 2,
    };
    let k = n.checked_sub(redundancy).filter(|_| n > 0).ok_or_else(|| {
        Error::InvalidFamily(format!(
            "family {} at q = {q}, r = {r} has length {n}, below its redundancy {redundancy}",
            family.id()
        ))
    })?;
    Ok(FamilyParams { n, k, d: 3, q })
}
