use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, ToPrimitive, Zero};

use super::{Integer, Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// Default bound on the total degree produced by [`FactoredCyclo::expand`].
pub const DEFAULT_DEGREE_CAP: u64 = 4096;

/// A root of unity `exp(-2 pi i * rotation)` with `rotation` in `[0, 1)`.
///
/// Storing the rotation modulo one makes `5/6` and `11/6` the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    rotation: Rational,
    order: u64,
}

impl RootOfUnity {
    pub fn from_rotation(rotation: &Rational) -> Result<Self> {
        let r = rotation - rotation.floor();
        let order = r.denom().to_u64().ok_or(Error::Overflow)?;
        Ok(RootOfUnity { rotation: r, order })
    }

    /// `exp(-2 pi i * num / den)`; `den` must be nonzero.
    pub fn from_ratio(num: &Integer, den: &Integer) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroLatticeDistance);
        }
        Self::from_rotation(&Rational::new(num.clone(), den.clone()))
    }

    /// `exp(2 pi i * s0)`, the eigenvalue attached to a pole `s0`.
    pub fn from_pole(s0: &Rational) -> Result<Self> {
        Self::from_rotation(&-s0)
    }

    /// The primitive root of unity of the given order with rotation `1/order`.
    pub fn primitive(order: u64) -> Self {
        RootOfUnity { rotation: Rational::new(Integer::one(), order.into()), order }
    }

    pub fn one() -> Self {
        RootOfUnity { rotation: Rational::zero(), order: 1 }
    }

    pub fn rotation(&self) -> &Rational {
        &self.rotation
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(-2pi i {})", self.rotation)
    }
}

/// Signed product of factors `(1 - t^M)^e`, stored as `M -> e`.
///
/// Zero exponents are never stored. Products are never expanded unless
/// asked: root multiplicities are evaluated per divisor, because `1 - t^M`
/// and `1 - t^M'` share the roots of order `gcd(M, M')`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredCyclo {
    factors: BTreeMap<u64, i64>,
}

impl FactoredCyclo {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(1 - t^order)^exponent`. Orders must be positive.
    pub fn factor(order: u64, exponent: i64) -> Self {
        let mut f = Self::one();
        f.push(order, exponent);
        f
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut f = Self::one();
        for (m, e) in pairs {
            f.push(m, e);
        }
        f
    }

    /// Multiplies in `(1 - t^order)^exponent`.
    pub fn push(&mut self, order: u64, exponent: i64) {
        assert!(order > 0, "factor order must be positive");
        if exponent == 0 {
            return;
        }
        let e = self.factors.entry(order).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&order);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&m, &e)| (m, e))
    }

    pub fn exponent(&self, order: u64) -> i64 {
        self.factors.get(&order).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &FactoredCyclo) -> FactoredCyclo {
        let mut out = self.clone();
        for (m, e) in other.iter() {
            out.push(m, e);
        }
        out
    }

    pub fn inv(&self) -> FactoredCyclo {
        self.pow(-1)
    }

    pub fn div(&self, other: &FactoredCyclo) -> FactoredCyclo {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> FactoredCyclo {
        FactoredCyclo::from_pairs(self.iter().map(|(m, e)| (m, e * k)))
    }

    /// Multiplicity of the primitive `d`-th roots of unity: the sum of the
    /// exponents of all factors whose order is divisible by `d`.
    pub fn multiplicity_at_order(&self, d: u64) -> i64 {
        self.iter().filter(|&(m, _)| m % d == 0).map(|(_, e)| e).sum()
    }

    /// Multiplicity of `t - lambda` in the product: positive for a root,
    /// negative for a pole.
    pub fn multiplicity(&self, lambda: &RootOfUnity) -> i64 {
        self.multiplicity_at_order(lambda.order())
    }

    /// True iff the product has no pole, i.e. every cyclotomic factor
    /// appears with a non-negative total exponent.
    pub fn is_polynomial(&self) -> bool {
        let mut seen = BTreeMap::new();
        for (m, _) in self.iter() {
            for d in divisors(m) {
                seen.entry(d).or_insert_with(|| self.multiplicity_at_order(d));
            }
        }
        seen.values().all(|&mult| mult >= 0)
    }

    /// Total degree `sum |e| * M` of the unreduced expansion.
    pub fn total_degree(&self) -> u64 {
        self.iter().map(|(m, e)| m.saturating_mul(e.unsigned_abs())).fold(0u64, u64::saturating_add)
    }

    pub fn expand(&self) -> Result<RationalFunction> {
        self.expand_capped(DEFAULT_DEGREE_CAP)
    }

    /// Expands into a reduced rational function in `t`.
    pub fn expand_capped(&self, cap: u64) -> Result<RationalFunction> {
        let degree = self.total_degree();
        if degree > cap {
            return Err(Error::DegreeCap { degree, cap });
        }
        let mut num = UniPoly::one();
        let mut den = UniPoly::one();
        for (m, e) in self.iter() {
            let base = one_minus_t_pow(m);
            let p = base.pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        RationalFunction::new(num, den)
    }
}

fn one_minus_t_pow(m: u64) -> UniPoly {
    let mut c = alloc::vec![Rational::zero(); m as usize + 1];
    c[0] = Rational::one();
    c[m as usize] = -Rational::one();
    UniPoly::from_coeffs(c)
}

/// Positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for FactoredCyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (m, e) in self.iter() {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            write!(f, "(1 - t^{m})^{e}")?;
        }
        Ok(())
    }
}

/// Signed integer exponent as used for `(-1)^k` in alternating products.
pub(crate) fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}
