//! Standalone numeric checks: Fano indices of polarized surfaces, Noether
//! counts, the toric rank bound, the Keel-McKernan and Nikulin bounds,
//! quasihomogeneous lc thresholds, and the two-curve case inequalities.

use num_integer::Integer;

use crate::rat::Rat;
use crate::{Error, Result};

/// Index r = 2l/H^2 - 1 of a polarized surface with dim |H| = l.
pub fn fano_index(l: u64, h2: u64) -> Result<Rat> {
    if h2 == 0 {
        return Err(Error::OutOfRange("H^2 must be positive".into()));
    }
    Ok(Rat::int(2) * Rat::from(l) / Rat::from(h2) - Rat::one())
}

/// What a surface of index r > 1 can be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanoTag {
    P2,
    /// r = 2 does not separate the smooth quadric from the quadric cone
    QuadricAmbiguous,
    ConeDegree(u64),
    Unrepresentable,
}

impl std::fmt::Display for FanoTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FanoTag::P2 => write!(f, "P2"),
            FanoTag::QuadricAmbiguous => write!(f, "quadric-ambiguous"),
            FanoTag::ConeDegree(d) => write!(f, "cone({})", d),
            FanoTag::Unrepresentable => write!(f, "unrepresentable"),
        }
    }
}

/// Matches r against the list of big-index surfaces: r = 1 + 2/d picks the
/// cone over the rational normal curve of degree d, with d = 1 the plane
/// and d = 2 the quadric.
pub fn fano_big_index_classify(r: &Rat) -> Result<FanoTag> {
    if r <= &Rat::one() {
        return Err(Error::IndexNotBig(format!("index {} is not > 1", r)));
    }
    let d = Rat::int(2) / (r - &Rat::one());
    if !d.is_integer() {
        return Ok(FanoTag::Unrepresentable);
    }
    let d = d
        .to_i64_parts()
        .map(|(n, _)| n)
        .filter(|&n| n >= 1)
        .and_then(|n| u64::try_from(n).ok());
    Ok(match d {
        Some(1) => FanoTag::P2,
        Some(2) => FanoTag::QuadricAmbiguous,
        Some(d) => FanoTag::ConeDegree(d),
        None => FanoTag::Unrepresentable,
    })
}

/// Picard number of the minimal resolution of a del Pezzo surface of
/// degree K2 with Du Val singularities: K^2 + rho = 10.
pub fn noether_rho(k2: i64) -> i64 {
    10 - k2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToricTag {
    Strict,
    /// boundary degree meets rho + 2 exactly; the pair is a toric candidate
    Equality,
    Violated,
}

impl std::fmt::Display for ToricTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ToricTag::Strict => write!(f, "strict"),
            ToricTag::Equality => write!(f, "equality"),
            ToricTag::Violated => write!(f, "violated"),
        }
    }
}

/// Compares the boundary degree with rho + 2.
pub fn toric_bound(rho_num: u64, coeffs: &[Rat]) -> Result<ToricTag> {
    if rho_num == 0 {
        return Err(Error::OutOfRange("rho must be positive".into()));
    }
    let mut total = Rat::zero();
    for d in coeffs {
        if d < &Rat::zero() || d > &Rat::one() {
            return Err(Error::OutOfRange(format!("coefficient {} outside [0, 1]", d)));
        }
        total = total + d;
    }
    let bound = Rat::from(rho_num) + Rat::int(2);
    Ok(if total < bound {
        ToricTag::Strict
    } else if total == bound {
        ToricTag::Equality
    } else {
        ToricTag::Violated
    })
}

/// Orbifold Euler bound: sum of (m - 1)/m over the singular points of the
/// boundary curve against chi(X) - chi(C).
pub fn kem_bound(mp: &[u64], chi_x: i64, chi_c: i64) -> Result<bool> {
    let mut total = Rat::zero();
    for &m in mp {
        if m < 2 {
            return Err(Error::BadEntry(format!("orbifold order {} < 2", m)));
        }
        total = total + Rat::one() - Rat::new(1, m as i64);
    }
    Ok(total <= Rat::int(chi_x - chi_c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NikulinVariant {
    Standard,
    Linear,
}

/// Bound on the number of exceptional curves on a rational surface with
/// (-e)-curves. The standard form is published only for e <= 4 (the
/// remainder term for e >= 5 is left unspecified); the linear form is
/// 352 e + 1284.
pub fn nikulin_bound(e: u64, variant: NikulinVariant) -> Result<Option<u64>> {
    if e < 2 {
        return Err(Error::OutOfRange(format!("e = {} < 2", e)));
    }
    Ok(match variant {
        NikulinVariant::Standard => match e {
            2 => Some(3141),
            3 => Some(5317),
            4 => Some(17735),
            _ => None,
        },
        NikulinVariant::Linear => Some(352 * e + 1284),
    })
}

/// Log canonical threshold of a general quasihomogeneous curve of weighted
/// degree d in weights (w1, w2): min(1, (w1 + w2)/d). The curve must be
/// reduced, which for general coefficients means the degree supports at
/// least two monomials and no variable divides all of them twice.
pub fn lct_quasihomog(w1: u64, w2: u64, d: u64) -> Result<Rat> {
    if w1 == 0 || w2 == 0 || d == 0 {
        return Err(Error::OutOfRange("weights and degree must be positive".into()));
    }
    if w1.gcd(&w2) != 1 {
        return Err(Error::NotCoprime { m: w1, q: w2 });
    }
    let mut is = Vec::new();
    let mut js = Vec::new();
    for i in 0..=d / w1 {
        let rest = d - i * w1;
        if rest % w2 == 0 {
            is.push(i);
            js.push(rest / w2);
        }
    }
    if is.len() < 2 {
        return Err(Error::NoReducedCurve(format!(
            "degree {} carries {} monomial(s) in weights ({}, {})",
            d,
            is.len(),
            w1,
            w2
        )));
    }
    let a = *is.iter().min().expect("nonempty");
    let b = *js.iter().min().expect("nonempty");
    if a > 1 || b > 1 {
        return Err(Error::NoReducedCurve(format!(
            "every monomial of degree {} is divisible by a square in weights ({}, {})",
            d, w1, w2
        )));
    }
    let c = (Rat::from(w1) + Rat::from(w2)) / Rat::from(d);
    Ok(c.min(Rat::one()))
}

/// Membership in the threshold set {2/3, 7/10, 3/4, 5/6, 1}.
pub fn lct_set_check(c: &Rat) -> Result<bool> {
    let floor = Rat::new(2, 3);
    if c < &floor {
        return Err(Error::BelowRange(format!("threshold {} is below 2/3", c)));
    }
    let set = [Rat::new(2, 3), Rat::new(7, 10), Rat::new(3, 4), Rat::new(5, 6), Rat::one()];
    Ok(set.contains(c))
}

/// The nine published two-curve cases with coefficients near 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta2Case {
    A21,
    A21p,
    A22,
    A23,
    A24,
    A25,
    A26,
    I21,
    I22,
}

impl std::str::FromStr for Delta2Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Delta2Case> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A21" => Delta2Case::A21,
            "A21P" => Delta2Case::A21p,
            "A22" => Delta2Case::A22,
            "A23" => Delta2Case::A23,
            "A24" => Delta2Case::A24,
            "A25" => Delta2Case::A25,
            "A26" => Delta2Case::A26,
            "I21" => Delta2Case::I21,
            "I22" => Delta2Case::I22,
            _ => return Err(Error::BadCase(format!("unknown case {}", s))),
        })
    }
}

/// Evaluates the published coefficient constraint of one case, together
/// with the global bound b1 + b2 < 13/7 that every two-curve boundary must
/// satisfy.
pub fn delta2_case_check(case: Delta2Case, b1: &Rat, b2: &Rat) -> Result<bool> {
    let lo = Rat::new(6, 7);
    for b in [b1, b2] {
        if b < &lo || b >= &Rat::one() {
            return Err(Error::OutOfRange(format!("coefficient {} outside [6/7, 1)", b)));
        }
    }
    if b1 + b2 >= Rat::new(13, 7) {
        return Ok(false);
    }
    let six7 = Rat::new(6, 7);
    Ok(match case {
        Delta2Case::A21 => b1 + b2 <= Rat::new(11, 6),
        Delta2Case::A21p | Delta2Case::I21 => b1 + b2 <= Rat::new(7, 4),
        Delta2Case::A22 => b1 + &(Rat::int(2) * b2) <= Rat::new(8, 3),
        Delta2Case::A23 => b1 + &(Rat::int(3) * b2) <= Rat::new(7, 2),
        Delta2Case::A24 => Rat::int(2) * b1 + Rat::int(3) * b2 <= Rat::new(9, 2),
        Delta2Case::A25 | Delta2Case::A26 | Delta2Case::I22 => b1 == &six7 && b2 == &six7,
    })
}
