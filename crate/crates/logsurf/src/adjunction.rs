//! Adjunction onto a curve through a singular point: coefficients of the
//! induced boundary on the curve.

use crate::coeff::{classify_coeff, CoeffClass};
use crate::rat::Rat;
use crate::{Error, Result};

/// Data of one point of the curve: the index m of the cyclic singularity
/// the curve passes through, and for each transverse boundary curve its
/// coefficient b_j and integer weight n_j.
#[derive(Debug, Clone)]
pub struct DiffInput {
    pub index_m: u64,
    pub terms: Vec<(Rat, u64)>,
}

/// An adjunction coefficient together with the flag telling whether it
/// exceeds 1, in which case the pair cannot be log canonical there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffValue {
    pub value: Rat,
    pub over_unit: bool,
}

/// The coefficient (m - 1)/m + (1/m) sum(n_j b_j) of the point.
pub fn diff_coeff(inp: &DiffInput) -> Result<DiffValue> {
    if inp.index_m == 0 {
        return Err(Error::OutOfRange("index m must be positive".into()));
    }
    for (b, _) in &inp.terms {
        if b < &Rat::zero() || b > &Rat::one() {
            return Err(Error::OutOfRange(format!("coefficient {} outside [0, 1]", b)));
        }
    }
    let m = Rat::from(inp.index_m);
    let mut sum = Rat::zero();
    for (b, n) in &inp.terms {
        sum = sum + b * &Rat::from(*n);
    }
    let value = (&m - &Rat::one()) / &m + sum / &m;
    let over_unit = value > Rat::one();
    Ok(DiffValue { value, over_unit })
}

/// Classifies the adjunction coefficient against the standard sets; errors
/// with `OverUnit` when it exceeds 1.
pub fn diff_class(inp: &DiffInput) -> Result<CoeffClass> {
    let v = diff_coeff(inp)?;
    if v.over_unit {
        return Err(Error::OverUnit(format!("coefficient {} exceeds 1", v.value)));
    }
    classify_coeff(&v.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_quotient_point() {
        // a bare index-m point contributes (m - 1)/m
        let v = diff_coeff(&DiffInput { index_m: 4, terms: vec![] }).unwrap();
        assert_eq!(v.value, Rat::new(3, 4));
        assert!(!v.over_unit);
        assert_eq!(
            diff_class(&DiffInput { index_m: 4, terms: vec![] }).unwrap(),
            CoeffClass::StandardFinite(4)
        );
    }

    #[test]
    fn weighted_terms() {
        // (2 - 1)/2 + (1/2)(1/2) = 3/4
        let v = diff_coeff(&DiffInput {
            index_m: 2,
            terms: vec![(Rat::new(1, 2), 1)],
        })
        .unwrap();
        assert_eq!(v.value, Rat::new(3, 4));
        // a reduced curve with weight 2 through a smooth point overflows
        let v = diff_coeff(&DiffInput {
            index_m: 1,
            terms: vec![(Rat::one(), 2)],
        })
        .unwrap();
        assert!(v.over_unit);
        assert!(matches!(
            diff_class(&DiffInput { index_m: 1, terms: vec![(Rat::one(), 2)] }),
            Err(Error::OverUnit(_))
        ));
    }

    #[test]
    fn input_validation() {
        assert!(diff_coeff(&DiffInput { index_m: 0, terms: vec![] }).is_err());
        assert!(diff_coeff(&DiffInput {
            index_m: 2,
            terms: vec![(Rat::new(3, 2), 1)]
        })
        .is_err());
    }
}
