//! Set functions on the subset lattice `2^S` and the gcd combinatorics of
//! reduced corner simplices.
//!
//! Subsets are bitmasks. The antiderivative is `φ↓(I) = Σ_{J⊆I} φ(J)` and
//! the derivative is `φ↑(I) = Σ_{J⊆I} (−1)^{|I|−|J|} φ(J)`.
//!
//! A reduced corner simplex has apex `Q = (0,…,0,k)` and edges
//! `QAᵢ = aᵢeᵢ + bᵢeₙ`. With `D = ∏aᵢ`, `Kᵢ = bᵢD/aᵢ`, `K = ΣKᵢ` and
//! `gcd_I = gcd(D, Kᵢ : i ∈ I)`, the face `τ_I = conv(Q, Aᵢ : i ∈ I)` has
//! `Vol(τ_I) = gcd_I·D_I/D` and `N(τ_I) = k·D/gcd_I`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{sign, FactoredCyclo, Integer, RootOfUnity};

pub const MAX_GROUND_SET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    size: usize,
    values: Vec<Integer>,
}

impl SetFunction {
    pub fn new(size: usize, values: Vec<Integer>) -> Result<Self> {
        if size > MAX_GROUND_SET {
            return Err(Error::Precondition("ground set larger than 20"));
        }
        if values.len() != 1 << size {
            return Err(Error::Precondition("value table must have length 2^|S|"));
        }
        Ok(SetFunction { size, values })
    }

    pub fn from_i64s(size: usize, values: &[i64]) -> Result<Self> {
        Self::new(size, values.iter().map(|&v| Integer::from(v)).collect())
    }

    pub fn from_fn(size: usize, f: impl Fn(usize) -> Integer) -> Result<Self> {
        if size > MAX_GROUND_SET {
            return Err(Error::Precondition("ground set larger than 20"));
        }
        Ok(SetFunction { size, values: (0..1usize << size).map(f).collect() })
    }

    pub fn zero(size: usize) -> Result<Self> {
        Self::from_fn(size, |_| Integer::zero())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full(&self) -> usize {
        (1 << self.size) - 1
    }

    pub fn get(&self, mask: usize) -> &Integer {
        &self.values[mask]
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    fn transform(&self, signed: bool) -> Self {
        let mut v = self.values.clone();
        for bit in 0..self.size {
            for mask in 0..v.len() {
                if mask & (1 << bit) != 0 {
                    let lower = v[mask ^ (1 << bit)].clone();
                    if signed {
                        v[mask] -= lower;
                    } else {
                        v[mask] += lower;
                    }
                }
            }
        }
        SetFunction { size: self.size, values: v }
    }

    pub fn antiderivative(&self) -> Self {
        self.transform(false)
    }

    pub fn derivative(&self) -> Self {
        self.transform(true)
    }

    /// Pointwise product. Both functions must share the ground set.
    pub fn pointwise_mul(&self, other: &SetFunction) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::Precondition("ground sets differ"));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(SetFunction { size: self.size, values })
    }

    pub fn is_fully_supermodular(&self) -> bool {
        self.derivative().values.iter().all(|v| !v.is_negative())
    }

    pub fn is_strictly_fully_supermodular(&self) -> bool {
        let d = self.derivative();
        d.values.iter().all(|v| !v.is_negative()) && d.values[self.full()].is_positive()
    }
}

/// `(φψ)↑(R) = Σ_{I∪J=R} φ↑(I)ψ↑(J)`.
pub fn product_derivative(phi: &SetFunction, psi: &SetFunction, r: usize) -> Result<Integer> {
    if phi.size != psi.size {
        return Err(Error::Precondition("ground sets differ"));
    }
    if r > phi.full() {
        return Err(Error::Precondition("subset outside the ground set"));
    }
    let (dp, dq) = (phi.derivative(), psi.derivative());
    let mut total = Integer::zero();
    let mut i = r;
    loop {
        let mut j = r;
        loop {
            if i | j == r {
                total += &dp.values[i] * &dq.values[j];
            }
            if j == 0 {
                break;
            }
            j = (j - 1) & r;
        }
        if i == 0 {
            break;
        }
        i = (i - 1) & r;
    }
    Ok(total)
}

/// One row of the corner-simplex table, for the face `τ_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRow {
    pub subset: usize,
    pub gcd: i64,
    pub d_i: i64,
    pub volume: i64,
    pub distance: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSimplexData {
    pub n: usize,
    pub k: i64,
    pub edges: Vec<(i64, i64)>,
    pub d: i64,
    pub k_i: Vec<i64>,
    pub k_sum: i64,
    /// Rows indexed by subset bitmask over `{0, …, n−2}`.
    pub rows: Vec<CornerRow>,
    /// Primitive conormal `(−K₁, …, −K_{n−1}, D)/gcd_S`.
    pub conormal: Vec<i64>,
    pub distance: i64,
    pub nu: i64,
}

pub fn corner_data(n: usize, k: i64, edges: &[(i64, i64)]) -> Result<CornerSimplexData> {
    if n < 2 || n > 8 || edges.len() != n - 1 {
        return Err(Error::Precondition("need n - 1 edges with 2 <= n <= 8"));
    }
    if k < 1 {
        return Err(Error::Precondition("apex height k must be positive"));
    }
    if edges.iter().any(|&(a, b)| a < 1 || k + b < 0) {
        return Err(Error::Precondition("edges need a >= 1 and k + b >= 0"));
    }
    let d = edges.iter().try_fold(1i64, |acc, &(a, _)| acc.checked_mul(a)).ok_or(Error::Overflow)?;
    let k_i: Vec<i64> = edges
        .iter()
        .map(|&(a, b)| b.checked_mul(d / a).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let k_sum = k_i.iter().try_fold(0i64, |acc, &x| acc.checked_add(x)).ok_or(Error::Overflow)?;
    let r = n - 1;
    let rows: Vec<CornerRow> = (0..1usize << r)
        .map(|mask| {
            let members = (0..r).filter(|i| mask & (1 << i) != 0);
            let gcd = members.clone().fold(d, |g, i| num_integer::gcd(g, k_i[i]));
            let d_i: i64 = members.map(|i| edges[i].0).product();
            let volume = gcd * d_i / d;
            let distance = (d / gcd).checked_mul(k).ok_or(Error::Overflow)?;
            Ok(CornerRow { subset: mask, gcd, d_i, volume, distance })
        })
        .collect::<Result<_>>()?;
    let gcd_s = rows[(1 << r) - 1].gcd;
    let mut conormal: Vec<i64> = k_i.iter().map(|x| -x / gcd_s).collect();
    conormal.push(d / gcd_s);
    let nu = (d - k_sum) / gcd_s;
    if nu <= 0 {
        return Err(Error::InvalidFacetOrientation);
    }
    let distance = rows[(1 << r) - 1].distance;
    Ok(CornerSimplexData { n, k, edges: edges.to_vec(), d, k_i, k_sum, rows, conormal, distance, nu })
}

impl CornerSimplexData {
    pub fn full(&self) -> usize {
        (1 << (self.n - 1)) - 1
    }

    pub fn gcd_s(&self) -> i64 {
        self.rows[self.full()].gcd
    }

    /// `λ = exp(−2πi ν/N)`.
    pub fn lambda(&self) -> RootOfUnity {
        RootOfUnity::from_ratio(&Integer::from(self.nu), &Integer::from(self.distance))
            .expect("N > 0")
    }

    /// Vertices `Q, A₁, …, A_{n−1}` in `ℤ₊ⁿ`.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut q = vec![0; n];
        q[n - 1] = self.k;
        let mut out = vec![q.clone()];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let mut v = q.clone();
            v[i] = a;
            v[n - 1] += b;
            out.push(v);
        }
        out
    }

    /// `F_τ = ∏_I ζ_I^{(−1)^{n−1−|I|}}` from the table.
    pub fn f_tau(&self) -> FactoredCyclo {
        let mut f = FactoredCyclo::one();
        for row in &self.rows {
            let e = sign(self.n - 1 - row.subset.count_ones() as usize) * row.volume;
            f.push(row.distance as u64, e);
        }
        f
    }

    fn signed_volume(&self, row: &CornerRow) -> Integer {
        Integer::from(sign(self.n - 1 - row.subset.count_ones() as usize) * row.volume)
    }
}

/// `λ` is a root of `ζ_I` iff `gcd_I | K`.
pub fn lambda_root_i(data: &CornerSimplexData, subset: usize) -> bool {
    divides(data.rows[subset].gcd, data.k_sum)
}

/// `exp(2πi m/N)` is a root of `ζ_I` iff `gcd_I | m·gcd_S`.
pub fn lambda_root_i_lodd(data: &CornerSimplexData, subset: usize, m: i64) -> bool {
    divides(data.rows[subset].gcd, m * data.gcd_s())
}

fn divides(a: i64, b: i64) -> bool {
    b % a == 0
}

/// `G = Σ_{I : gcd_I | K} (−1)^{n−1−|I|} Vol(τ_I)`.
pub fn g_sum(data: &CornerSimplexData) -> Integer {
    data.rows
        .iter()
        .filter(|r| lambda_root_i(data, r.subset))
        .map(|r| data.signed_volume(r))
        .sum()
}

/// `G_m = Σ_{I : gcd_I | m·gcd_S} (−1)^{n−1−|I|} Vol(τ_I)`.
pub fn g_m_sum(data: &CornerSimplexData, m: i64) -> Integer {
    data.rows
        .iter()
        .filter(|r| lambda_root_i_lodd(data, r.subset, m))
        .map(|r| data.signed_volume(r))
        .sum()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Primes dividing `D`; every other prime gives the constant function 1.
pub fn relevant_primes(data: &CornerSimplexData) -> Vec<u64> {
    let mut d = data.d.unsigned_abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// `p`-adic valuation, `None` for zero.
fn valuation(x: i64, p: u64) -> Option<i64> {
    if x == 0 {
        return None;
    }
    let (mut x, p) = (x.unsigned_abs(), p);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Per-prime data `(α_i, β_i − α_i)`, with `None` standing for `+∞`.
fn local_exponents(data: &CornerSimplexData, p: u64) -> Vec<(i64, Option<i64>)> {
    data.edges
        .iter()
        .map(|&(a, b)| {
            let alpha = valuation(a, p).expect("a >= 1");
            (alpha, valuation(b, p).map(|beta| beta - alpha))
        })
        .collect()
}

/// `min_{i∈I} {βᵢ − αᵢ, 0}`, which is 0 for the empty set.
fn local_min(ex: &[(i64, Option<i64>)], mask: usize) -> i64 {
    (0..ex.len())
        .filter(|i| mask & (1 << i) != 0)
        .filter_map(|i| ex[i].1)
        .fold(0, i64::min)
}

fn local_function(data: &CornerSimplexData, p: u64, bound: Option<i64>) -> Result<SetFunction> {
    let ex = local_exponents(data, p);
    let r = data.n - 1;
    SetFunction::from_fn(r, |mask| {
        let m = local_min(&ex, mask);
        if bound.is_some_and(|b| m > b) {
            return Integer::zero();
        }
        let alpha: i64 = (0..r).filter(|i| mask & (1 << i) != 0).map(|i| ex[i].0).sum();
        let e = u32::try_from(m + alpha).expect("exponent is a valuation of gcd_I·D_I/D");
        num_traits::pow(Integer::from(p), e as usize)
    })
}

/// `φ_p(I) = p^{min_I + Σ_I α}` when `min_I ≤ γ(p) = δ(p) + min_S`, else 0,
/// where `δ(p)` is the valuation of `m`.
pub fn phi_p(data: &CornerSimplexData, p: u64, m: i64) -> Result<SetFunction> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ex = local_exponents(data, p);
    let gamma = valuation(m, p).map(|delta| delta + local_min(&ex, data.full()));
    local_function(data, p, gamma)
}

/// `ψ_p(I) = p^{min_I + Σ_I α}` when `min_I ≤ μ(p) = κ(p) − Σα`, else 0,
/// where `κ(p)` is the valuation of `K`.
pub fn psi_p(data: &CornerSimplexData, p: u64) -> Result<SetFunction> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ex = local_exponents(data, p);
    let total_alpha: i64 = ex.iter().map(|e| e.0).sum();
    let mu = valuation(data.k_sum, p).map(|kappa| kappa - total_alpha);
    local_function(data, p, mu)
}

fn product_over_primes(
    data: &CornerSimplexData,
    f: impl Fn(u64) -> Result<SetFunction>,
) -> Result<SetFunction> {
    let mut acc = SetFunction::from_fn(data.n - 1, |_| Integer::one())?;
    for p in relevant_primes(data) {
        acc = acc.pointwise_mul(&f(p)?)?;
    }
    Ok(acc)
}

/// `∏_p φ_p`, whose derivative at `S` is `G_m`.
pub fn phi_product(data: &CornerSimplexData, m: i64) -> Result<SetFunction> {
    product_over_primes(data, |p| phi_p(data, p, m))
}

/// `∏_p ψ_p`, whose derivative at `S` is `G`.
pub fn psi_product(data: &CornerSimplexData) -> Result<SetFunction> {
    product_over_primes(data, |p| psi_p(data, p))
}

/// Indices sorted by `βᵢ − αᵢ` ascending, ties broken by `αᵢ` descending.
pub fn local_order(data: &CornerSimplexData, p: u64) -> Vec<usize> {
    let ex = local_exponents(data, p);
    let mut idx: Vec<usize> = (0..ex.len()).collect();
    idx.sort_by(|&i, &j| {
        let key = |t: usize| (ex[t].1.is_none(), ex[t].1.unwrap_or(0));
        key(i).cmp(&key(j)).then(ex[j].0.cmp(&ex[i].0))
    });
    idx
}

/// Closed form of `φ_p↑(I)`: walking `I` in local order, the first `q`
/// members (those below the cutoff) contribute alternating terms
/// `p^{βᵢ} ∏_{later} (p^{α} − 1)`, and when `γ ≥ 0` the tail adds
/// `(−1)^q ∏_{j>q} (p^{α} − 1)`.
pub fn phi_p_derivative_closed(data: &CornerSimplexData, p: u64, m: i64, subset: usize) -> Result<Integer> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ex = local_exponents(data, p);
    let gamma = valuation(m, p).map(|delta| delta + local_min(&ex, data.full()));
    let members: Vec<usize> = local_order(data, p).into_iter().filter(|i| subset & (1 << i) != 0).collect();
    let below = |i: usize| match (ex[i].1, gamma) {
        (None, _) => false,
        (Some(x), Some(g)) if g < 0 => x <= g,
        (Some(x), _) => x < 0,
    };
    let q = members.iter().take_while(|&&i| below(i)).count();
    let pw = |e: i64| num_traits::pow(Integer::from(p), e as usize);
    let tail = |from: usize| -> Integer {
        members[from..].iter().map(|&i| pw(ex[i].0) - 1).product()
    };
    let mut total = Integer::zero();
    for l in 0..q {
        let i = members[l];
        let beta = ex[i].1.expect("below cutoff") + ex[i].0;
        let term = pw(beta) * tail(l + 1);
        if l % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if gamma.is_none_or(|g| g >= 0) {
        let term = tail(q);
        if q % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Largest `|m|` worth checking: roots of `F_τ` have orders dividing some
/// `N(τ_I)`, all of which divide `N(τ)`.
pub fn g_m_window(data: &CornerSimplexData) -> i64 {
    data.distance
}

pub fn g_as_multiplicity(data: &CornerSimplexData) -> i64 {
    data.f_tau().multiplicity(&data.lambda())
}

pub fn to_i64(x: &Integer) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow)
}
