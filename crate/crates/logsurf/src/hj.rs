//! Hirzebruch-Jung continued fractions, cyclic quotient germs, weighted
//! blowups and the Reid-Tai canonicity test.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::rat::Rat;
use crate::{Error, Result};

/// A resolution chain [a_1, ..., a_r]: the negated self-intersections of the
/// exceptional curves, read along the chain. Entries produced by `hj_expand`
/// are all >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJChain {
    pub entries: Vec<u64>,
}

/// Cyclic quotient germ of type (m, q): the surface germ C^2 / Z_m with the
/// action (x, y) -> (e x, e^q y), e a primitive m-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicQuot {
    m: u64,
    q: u64,
}

impl CyclicQuot {
    /// q is normalized mod m into 1..=m; gcd(q, m) must be 1. (1, 1) is the
    /// smooth germ.
    pub fn new(m: u64, q: u64) -> Result<CyclicQuot> {
        if m == 0 {
            return Err(Error::OutOfRange("order m must be positive".into()));
        }
        if m == 1 {
            return Ok(CyclicQuot { m: 1, q: 1 });
        }
        let r = q % m;
        if r.gcd(&m) != 1 {
            return Err(Error::NotCoprime { m, q });
        }
        Ok(CyclicQuot { m, q: r })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Expands m/q into the chain [a_1, ..., a_r] with
/// m/q = a_1 - 1/(a_2 - 1/(...)). The smooth germ expands to the empty
/// chain.
pub fn hj_expand(c: &CyclicQuot) -> HJChain {
    let mut entries = Vec::new();
    let (mut m, mut q) = (c.m(), c.q());
    while m > 1 {
        let a = m.div_ceil(q);
        entries.push(a);
        let next_q = a * q - m;
        m = q;
        q = next_q;
    }
    HJChain { entries }
}

/// Contracts a chain back to its germ: the inverse of `hj_expand` for
/// chains with all entries >= 2. Errors with `BadEntry` on entries < 2.
pub fn hj_value(chain: &HJChain) -> Result<CyclicQuot> {
    for &a in &chain.entries {
        if a < 2 {
            return Err(Error::BadEntry(format!("chain entry {} < 2", a)));
        }
    }
    // right-to-left: [a] is (a, 1); prepending a sends (m, q) to (a m - q, m)
    let (mut m, mut q) = (1u128, 0u128);
    for &a in chain.entries.iter().rev() {
        let next = (a as u128)
            .checked_mul(m)
            .and_then(|am| am.checked_sub(q))
            .ok_or_else(|| Error::BadEntry("chain value overflows".into()))?;
        q = m;
        m = next;
    }
    let m64 = u64::try_from(m).map_err(|_| Error::BadEntry("chain value overflows u64".into()))?;
    CyclicQuot::new(m64, q as u64)
}

/// The determinant of the chain's (negated) intersection matrix, which for
/// a valid chain equals the order m of its germ.
pub fn chain_determinant(entries: &[u64]) -> BigInt {
    // tridiagonal minor recursion d_k = a_k d_{k-1} - d_{k-2}
    let mut prev = BigInt::from(0);
    let mut cur = BigInt::from(1);
    for &a in entries {
        let next = BigInt::from(a) * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Weighted blowup data on a quotient germ of order m: positive integer
/// weights, reduced mod m into 1..=m at construction (the blowup depends on
/// the chosen lifts; callers needing other lifts pass them already reduced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBlowup {
    m: u64,
    weights: Vec<u64>,
}

impl WeightedBlowup {
    /// Requires m >= 1, at least two positive weights, and gcd 1 over the
    /// reduced weights.
    pub fn new(m: u64, weights: Vec<u64>) -> Result<WeightedBlowup> {
        if m == 0 {
            return Err(Error::OutOfRange("order m must be positive".into()));
        }
        if weights.len() < 2 {
            return Err(Error::BadWeights("need at least two weights".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::BadWeights("weights must be positive".into()));
        }
        let reduced: Vec<u64> = weights.iter().map(|&w| (w - 1) % m + 1).collect();
        let g = reduced.iter().fold(0u64, |acc, &w| acc.gcd(&w));
        if g != 1 {
            return Err(Error::BadWeights(format!("weights share the factor {}", g)));
        }
        Ok(WeightedBlowup { m, weights: reduced })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// Discrepancy of the exceptional divisor: -1 + (sum of weights)/m.
pub fn wblowup_discrepancy(w: &WeightedBlowup) -> Rat {
    let sum: u64 = w.weights().iter().sum();
    Rat::new(-1, 1) + Rat::new(sum as i64, w.m() as i64)
}

/// Multiplicity of the i-th coordinate hyperplane along the exceptional
/// divisor: a_i / m.
pub fn wblowup_strict_mult(w: &WeightedBlowup, i: usize) -> Result<Rat> {
    let len = w.weights().len();
    let a = *w
        .weights()
        .get(i)
        .ok_or(Error::IndexOutOfRange { index: i, len })?;
    Ok(Rat::new(a as i64, w.m() as i64))
}

/// Reid-Tai criterion for C^n / Z_m with the diagonal action given by
/// `weights`: canonical iff every nontrivial element has age >= 1, where the
/// age of element j is (1/m) * sum of (j w_i mod m).
///
/// Errors with `QuasiReflection` when some element fixes a hyperplane
/// pointwise, and with `BadWeights` when the action is not faithful.
pub fn reid_tai_canonical(m: u64, weights: &[u64]) -> Result<bool> {
    if m == 0 {
        return Err(Error::OutOfRange("order m must be positive".into()));
    }
    if m > 10_000_000 {
        return Err(Error::OutOfRange("order m too large for the elementwise scan".into()));
    }
    if weights.is_empty() {
        return Err(Error::BadWeights("need at least one weight".into()));
    }
    if m == 1 {
        return Ok(true);
    }
    let reduced: Vec<u64> = weights.iter().map(|&w| w % m).collect();
    let g = reduced.iter().fold(m, |acc, &w| acc.gcd(&w));
    if g != 1 {
        return Err(Error::BadWeights(format!(
            "element {} acts trivially: action is not faithful",
            m / g
        )));
    }
    for j in 1..m {
        let nonzero = reduced
            .iter()
            .filter(|&&w| (j as u128 * w as u128) % m as u128 != 0)
            .count();
        if nonzero == 1 {
            return Err(Error::QuasiReflection { element: j });
        }
    }
    for j in 1..m {
        let age: u128 = reduced
            .iter()
            .map(|&w| (j as u128 * w as u128) % m as u128)
            .sum();
        if age < m as u128 {
            return Ok(false);
        }
    }
    Ok(true)
}
