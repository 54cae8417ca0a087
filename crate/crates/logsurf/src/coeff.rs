//! Coefficient-set algebra: the standard multiplicities 1 - 1/m, their
//! extension by the tail [6/7, 1], and the floor-defined sets P_n.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::rat::Rat;
use crate::{Error, Result};

/// Position of a boundary coefficient relative to the standard set.
///
/// `StandardFinite(m)` is the value 1 - 1/m (so 0 is `StandardFinite(1)`),
/// `StandardInfinite` is the value 1, `InMmOnly` covers values in [6/7, 1)
/// that are not of the form 1 - 1/m, and `Outside` is the rest of [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffClass {
    StandardFinite(u64),
    StandardInfinite,
    InMmOnly,
    Outside,
}

/// Classifies a coefficient in [0, 1]. Values outside that interval are
/// `OutOfRange`.
pub fn classify_coeff(a: &Rat) -> Result<CoeffClass> {
    check_unit_interval(a)?;
    if *a == Rat::one() {
        return Ok(CoeffClass::StandardInfinite);
    }
    // a = 1 - 1/m with m >= 1 exactly when 1/(1 - a) is a positive integer
    let t = (Rat::one() - a).recip().expect("a < 1");
    if t.is_integer() {
        let m = t.numer().to_u64().ok_or_else(|| {
            Error::OutOfRange(format!("standard index of {} exceeds u64", a))
        })?;
        return Ok(CoeffClass::StandardFinite(m));
    }
    if *a >= Rat::new(6, 7) {
        Ok(CoeffClass::InMmOnly)
    } else {
        Ok(CoeffClass::Outside)
    }
}

/// Membership in P_n: true iff 0 <= a <= 1 and floor((n + 1) a) >= n a.
/// Out-of-range values are simply not members.
pub fn in_pn(a: &Rat, n: u64) -> bool {
    assert!(n >= 1, "n must be positive");
    if a < &Rat::zero() || a > &Rat::one() {
        return false;
    }
    let fl = (Rat::from(n + 1) * a).floor();
    Rat::from_big(fl) >= Rat::from(n) * a
}

/// For a non-standard coefficient in (0, 1), the unique m with
/// 1 - 1/m < a < 1 - 1/(m + 1); `None` for standard coefficients.
pub fn msm_witness(a: &Rat) -> Result<Option<u64>> {
    match classify_coeff(a)? {
        CoeffClass::StandardFinite(_) | CoeffClass::StandardInfinite => Ok(None),
        _ => {
            let t = (Rat::one() - a).recip().expect("a < 1");
            let m = t.floor().to_u64().ok_or_else(|| {
                Error::OutOfRange(format!("witness index of {} exceeds u64", a))
            })?;
            Ok(Some(m))
        }
    }
}

/// The regular indices n in {1, 2, 3, 4, 6} whose P_n contains a. Errors
/// with `NotInMm` when a is not in the extended standard set.
pub fn mm_in_regular_pn(a: &Rat) -> Result<BTreeSet<u64>> {
    if classify_coeff(a)? == CoeffClass::Outside {
        return Err(Error::NotInMm(format!("{} is not a standard or [6/7, 1] coefficient", a)));
    }
    Ok([1u64, 2, 3, 4, 6]
        .into_iter()
        .filter(|&n| in_pn(a, n))
        .collect())
}

fn check_unit_interval(a: &Rat) -> Result<()> {
    if a < &Rat::zero() || a > &Rat::one() {
        return Err(Error::OutOfRange(format!("coefficient {} outside [0, 1]", a)));
    }
    Ok(())
}
