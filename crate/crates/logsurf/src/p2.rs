//! Boundaries on the projective plane built from lines in general position
//! with standard coefficients 1 - 1/m: complement indices, exceptionality,
//! exhaustive enumeration of the ample range, and the delta invariant.

use num_integer::Integer;

use crate::rat::Rat;
use crate::{Error, Result};

/// Default search cap for minimal complement indices; far above the largest
/// index the ample range can realize.
pub const DEFAULT_CAP: u64 = 300;

/// Lines in general position (no triple points), carrying coefficients
/// 1 - 1/m_i. Multiplicities are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    ms: Vec<u64>,
}

impl LineArrangement {
    /// Requires every multiplicity >= 2 (an m = 1 line has coefficient 0).
    pub fn new(mut ms: Vec<u64>) -> Result<LineArrangement> {
        for &m in &ms {
            if m < 2 {
                return Err(Error::BadEntry(format!("multiplicity {} < 2", m)));
            }
        }
        ms.sort_unstable();
        Ok(LineArrangement { ms })
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.ms
    }

    pub fn coefficients(&self) -> Vec<Rat> {
        self.ms.iter().map(|&m| Rat::one() - Rat::new(1, m as i64)).collect()
    }

    /// Total boundary degree: sum of 1 - 1/m_i.
    pub fn total_degree(&self) -> Rat {
        self.ms
            .iter()
            .fold(Rat::zero(), |acc, &m| acc + Rat::one() - Rat::new(1, m as i64))
    }
}

/// Classification verdict for one arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2Verdict {
    pub compl: u64,
    pub exceptional: bool,
    pub trivial: bool,
    pub nonklt_regular_n: Option<u64>,
}

// forced numerator of 1 - 1/m at index n, in integer arithmetic:
// floor((n+1)(1 - 1/m)) = (n+1) - ceil((n+1)/m)
fn line_lower(m: u64, n: u64) -> u64 {
    let t = n + 1;
    t - t.div_ceil(m)
}

/// True iff the forced numerators fit into the anticanonical degree 3n, so
/// an n-complement exists.
pub fn p2_degree_ok(a: &LineArrangement, n: u64) -> bool {
    assert!(n >= 1, "n must be positive");
    let total: u64 = a.ms.iter().map(|&m| line_lower(m, n)).sum();
    total <= 3 * n
}

/// Least n <= cap with an n-complement. Requires total degree < 3 (the
/// boundary is in the ample range).
pub fn p2_min_compl(a: &LineArrangement, cap: u64) -> Result<u64> {
    if cap == 0 {
        return Err(Error::OutOfRange("cap must be positive".into()));
    }
    if a.total_degree() >= Rat::int(3) {
        return Err(Error::NotAmple(format!("total degree {} is not < 3", a.total_degree())));
    }
    for n in 1..=cap {
        if p2_degree_ok(a, n) {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { cap })
}

/// The least regular index n in {1, 2, 3, 4, 6} admitting a non-klt
/// n-complement: either boosting one line to coefficient 1 or adding a
/// fresh coefficient-1 line must fit into degree 3n.
pub fn p2_nonklt_regular(a: &LineArrangement) -> Result<Option<u64>> {
    if a.total_degree() >= Rat::int(3) {
        return Err(Error::NotAmple(format!("total degree {} is not < 3", a.total_degree())));
    }
    for n in [1u64, 2, 3, 4, 6] {
        let lowers: Vec<u64> = a.ms.iter().map(|&m| line_lower(m, n)).collect();
        let total: u64 = lowers.iter().sum();
        let boost = match lowers.iter().max() {
            Some(&mx) => total - mx + n <= 3 * n,
            None => false,
        };
        let fresh = total + n <= 3 * n;
        if boost || fresh {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Full verdict with the default search cap.
pub fn p2_classify(a: &LineArrangement) -> Result<P2Verdict> {
    p2_classify_capped(a, DEFAULT_CAP)
}

/// Full verdict: errors with `OverDegree` beyond total degree 3; at total
/// degree exactly 3 the unique complement is the boundary itself, so the
/// index is the lcm of the multiplicities and the arrangement is
/// exceptional.
pub fn p2_classify_capped(a: &LineArrangement, cap: u64) -> Result<P2Verdict> {
    let total = a.total_degree();
    let three = Rat::int(3);
    if total > three {
        return Err(Error::OverDegree(format!("total degree {} exceeds 3", total)));
    }
    if total == three {
        let mut lcm: u64 = 1;
        for &m in &a.ms {
            let l = (lcm as u128).lcm(&(m as u128));
            lcm = u64::try_from(l)
                .map_err(|_| Error::OutOfRange("lcm of multiplicities exceeds u64".into()))?;
        }
        return Ok(P2Verdict { compl: lcm, exceptional: true, trivial: true, nonklt_regular_n: None });
    }
    let compl = p2_min_compl(a, cap)?;
    let nonklt_regular_n = p2_nonklt_regular(a)?;
    Ok(P2Verdict { compl, exceptional: nonklt_regular_n.is_none(), trivial: false, nonklt_regular_n })
}

/// Which family `p2_enumerate` walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    /// all arrangements with total degree < 3
    Ample,
    /// all arrangements with total degree exactly 3
    Trivial,
}

/// Enumerates every arrangement of at most `max_lines` lines with
/// multiplicities <= `max_m` in the chosen range, with its verdict, sorted
/// by (complement index, multiplicities).
pub fn p2_enumerate(
    mode: EnumMode,
    max_lines: usize,
    max_m: u64,
    cap: u64,
) -> Result<Vec<(Vec<u64>, P2Verdict)>> {
    let tuples = match mode {
        EnumMode::Ample => {
            let mut tuples = Vec::new();
            let mut cur = Vec::new();
            enum_ample(&mut cur, &Rat::zero(), 2, max_lines, max_m, &mut tuples);
            tuples
        }
        EnumMode::Trivial => {
            let mut tuples = Vec::new();
            for r in 1..=max_lines {
                let mut cur = Vec::new();
                enum_unit_sum(&mut cur, r, &Rat::int(r as i64 - 3), 2, max_m, &mut tuples);
            }
            tuples
        }
    };
    let mut out = Vec::with_capacity(tuples.len());
    for t in tuples {
        let a = LineArrangement::new(t.clone())?;
        let v = p2_classify_capped(&a, cap)?;
        out.push((t, v));
    }
    out.sort_by(|x, y| (x.1.compl, &x.0).cmp(&(y.1.compl, &y.0)));
    Ok(out)
}

fn enum_ample(
    cur: &mut Vec<u64>,
    sum: &Rat,
    start: u64,
    max_lines: usize,
    max_m: u64,
    out: &mut Vec<Vec<u64>>,
) {
    for m in start..=max_m {
        let s = sum + &(Rat::one() - Rat::new(1, m as i64));
        // the partial sum grows with m: once out of range, larger m is too
        if s >= Rat::int(3) {
            break;
        }
        cur.push(m);
        out.push(cur.clone());
        if cur.len() < max_lines {
            enum_ample(cur, &s, m, max_lines, max_m, out);
        }
        cur.pop();
    }
}

// nondecreasing multisets of k multiplicities with sum of 1/m equal to
// `target` exactly
fn enum_unit_sum(
    cur: &mut Vec<u64>,
    k: usize,
    target: &Rat,
    start: u64,
    max_m: u64,
    out: &mut Vec<Vec<u64>>,
) {
    if k == 0 {
        if target.is_zero() {
            out.push(cur.clone());
        }
        return;
    }
    if !target.is_positive() {
        return;
    }
    // 1/m <= target and k/m >= target bound the search window
    let lo = (target.recip().expect("positive").ceil()).max(2.into());
    let hi_rat = Rat::int(k as i64) / target;
    let hi = hi_rat.floor().min((max_m as i64).into());
    let (Ok(lo), Ok(hi)) = (u64::try_from(lo), u64::try_from(hi)) else {
        return;
    };
    for m in lo.max(start)..=hi {
        cur.push(m);
        let rest = target - &Rat::new(1, m as i64);
        enum_unit_sum(cur, k - 1, &rest, m, max_m, out);
        cur.pop();
    }
}

/// The number of exceptional places of log discrepancy <= 1/7 over a klt
/// arrangement with the given coefficients: strict transforms of
/// coefficient >= 6/7 plus the blowup tree over each pairwise crossing.
pub fn delta_invariant(coeffs: &[Rat]) -> Result<u64> {
    let bound = Rat::new(-6, 7);
    for d in coeffs {
        if d < &Rat::zero() {
            return Err(Error::OutOfRange(format!("coefficient {} negative", d)));
        }
        if d >= &Rat::one() {
            return Err(Error::NotKlt(format!("coefficient {} >= 1", d)));
        }
    }
    let mut count: u64 = coeffs.iter().filter(|d| -(*d) <= bound).count() as u64;
    let mut budget: u64 = 1_000_000;
    for i in 0..coeffs.len() {
        for j in (i + 1)..coeffs.len() {
            count += branch_count(&-(&coeffs[i]), &-(&coeffs[j]), &bound, &mut budget)?;
        }
    }
    Ok(count)
}

// discrepancies over a transverse crossing of curves with discrepancies a
// and b: blowing up gives e = a + b + 1, and e only grows deeper, so the
// recursion stops as soon as e clears the bound
fn branch_count(a: &Rat, b: &Rat, bound: &Rat, budget: &mut u64) -> Result<u64> {
    let e = a + b + Rat::one();
    if &e > bound {
        return Ok(0);
    }
    if *budget == 0 {
        return Err(Error::OutOfRange("delta recursion exceeds the node budget".into()));
    }
    *budget -= 1;
    Ok(1 + branch_count(&e, a, bound, budget)? + branch_count(&e, b, bound, budget)?)
}
