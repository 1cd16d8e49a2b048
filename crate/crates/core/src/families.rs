//! Path families, their color weights, and two ways to get their counting
//! sequences: expanding the closed-form generating function and running the
//! first-return recurrence.
//!
//! Catalan, large Schröder and Motzkin paths all decompose at their first
//! return to the axis into `F = 1 + α x F + β x^k F²`. Small Schröder paths
//! cannot take a level step on the axis, so their decomposition is linear in
//! the small series once the large one is known: `s = 1 + m x S s`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{PowerSeries, Scalar, SeriesError};
use crate::{Coefficient, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Catalan,
    SchroderLarge,
    SchroderSmall,
    Motzkin,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Catalan, Family::SchroderLarge, Family::SchroderSmall, Family::Motzkin];

    pub fn name(self) -> &'static str {
        match self {
            Family::Catalan => "catalan",
            Family::SchroderLarge => "schroder-large",
            Family::SchroderSmall => "schroder-small",
            Family::Motzkin => "motzkin",
        }
    }

    /// Whether the family has a level step at all.
    pub fn has_level_step(self) -> bool {
        self != Family::Catalan
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!("unknown family `{s}` (expected catalan, schroder-large, schroder-small or motzkin)")
            })
    }
}

/// A family together with its color counts: `m` colors on every down step,
/// `n` colors on every level step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    pub n: u32,
}

impl FamilySpec {
    pub fn new(family: Family, m: u32, n: u32) -> Self {
        Self { family, m, n }
    }

    pub fn uncolored(family: Family) -> Self {
        Self::new(family, 1, 1)
    }

    /// Catalan paths have no level step, so `n` has no effect.
    pub fn n_ignored(&self) -> bool {
        !self.family.has_level_step()
    }

    /// Small Schröder paths with colored level steps have no known closed
    /// form; their counts use the "every off-axis level step carries `n`
    /// colors" reading.
    pub fn conjectural_semantics(&self) -> bool {
        self.family == Family::SchroderSmall && self.n != 1
    }

    pub fn has_closed_form(&self) -> bool {
        self.check_closed_form().is_ok()
    }

    fn check_closed_form(&self) -> Result<(), FamilyError> {
        if self.family == Family::SchroderSmall && self.n != 1 {
            return Err(FamilyError::NoKnownClosedForm { n: self.n });
        }
        if self.m == 0 {
            return Err(FamilyError::ClosedFormAtZeroColors { family: self.family });
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} n={}", self.family, self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[serde(rename = "closed_form")]
    ClosedForm,
    Recurrence,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Recurrence => "recurrence",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("small Schröder paths are linear in the large series, not of the form F = 1 + a x F + b x^k F^2; use small_schroder_series")]
    UnsupportedShape,
    #[error("closed form for {family} divides by m and is undefined at m = 0 (removable singularity); use the recurrence or oracle method")]
    ClosedFormAtZeroColors { family: Family },
    #[error("no closed form is known for small Schröder paths with n = {n} colored level steps; only n = 1 has one. Use the recurrence or oracle method")]
    NoKnownClosedForm { n: u32 },
    #[error("internal algebra error: coefficient {index} of the {spec} closed form is {value}, not a nonnegative integer")]
    NotAPathCount { spec: FamilySpec, index: usize, value: String },
    #[error("internal algebra error in the {spec} closed form: {source}")]
    Algebra {
        spec: FamilySpec,
        #[source]
        source: SeriesError,
    },
}

/// `F = 1 + alpha·x·F + beta·x^k·F²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalEquation<T = Coefficient> {
    pub alpha: T,
    pub beta: T,
    pub k: usize,
}

impl<T: Scalar> FunctionalEquation<T> {
    /// Coefficients `c_0..=c_order` from
    /// `c_j = alpha c_{j-1} + beta sum_{i=0}^{j-k} c_i c_{j-k-i}`.
    pub fn coefficients(&self, order: usize) -> Vec<T> {
        let mut c: Vec<T> = Vec::with_capacity(order + 1);
        c.push(T::one());
        for j in 1..=order {
            let linear = self.alpha.clone() * c[j - 1].clone();
            let quadratic = if j >= self.k {
                let t = j - self.k;
                (0..=t).fold(T::zero(), |acc, i| acc + c[i].clone() * c[t - i].clone())
            } else {
                T::zero()
            };
            c.push(linear + self.beta.clone() * quadratic);
        }
        c
    }

    pub fn series(&self, order: usize) -> PowerSeries<T> {
        PowerSeries::new(self.coefficients(order))
    }
}

pub fn functional_equation_of(spec: &FamilySpec) -> Result<FunctionalEquation, FamilyError> {
    let m = Coefficient::from_integer(spec.m.into());
    let n = Coefficient::from_integer(spec.n.into());
    match spec.family {
        Family::Catalan => Ok(FunctionalEquation { alpha: Coefficient::zero(), beta: m, k: 1 }),
        Family::SchroderLarge => Ok(FunctionalEquation { alpha: n, beta: m, k: 1 }),
        Family::Motzkin => Ok(FunctionalEquation { alpha: n, beta: m, k: 2 }),
        Family::SchroderSmall => Err(FamilyError::UnsupportedShape),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SequenceMetadata {
    pub n_ignored: bool,
    pub conjectural_semantics: bool,
}

impl SequenceMetadata {
    pub fn for_spec(spec: &FamilySpec) -> Self {
        Self { n_ignored: spec.n_ignored(), conjectural_semantics: spec.conjectural_semantics() }
    }
}

/// Weighted path counts for sizes `0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceResult {
    pub spec: FamilySpec,
    pub method: Method,
    pub coefficients: Vec<BigUint>,
    pub metadata: SequenceMetadata,
}

impl SequenceResult {
    pub fn new(spec: FamilySpec, method: Method, coefficients: Vec<BigUint>) -> Self {
        Self { spec, method, coefficients, metadata: SequenceMetadata::for_spec(&spec) }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// Converts exact series coefficients to path counts, failing on anything
/// that is not a nonnegative integer.
fn into_counts(spec: &FamilySpec, coeffs: &[Coefficient]) -> Result<Vec<BigUint>, FamilyError> {
    coeffs
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let bad = || FamilyError::NotAPathCount { spec: *spec, index, value: c.to_string() };
            if !c.is_integer() {
                return Err(bad());
            }
            let int: BigInt = c.to_integer();
            match int.sign() {
                Sign::Minus => Err(bad()),
                _ => Ok(int.magnitude().clone()),
            }
        })
        .collect()
}

fn recurrence_exact(spec: &FamilySpec, order: usize) -> Series {
    match spec.family {
        Family::SchroderSmall => {
            let large = FamilySpec::new(Family::SchroderLarge, spec.m, spec.n);
            let big = functional_equation_of(&large).expect("large Schröder has a quadratic equation");
            let s = big.coefficients(order);
            let m = Coefficient::from_integer(spec.m.into());
            let mut small: Vec<Coefficient> = Vec::with_capacity(order + 1);
            small.push(Coefficient::one());
            for j in 1..=order {
                let conv = (0..j).fold(Coefficient::zero(), |acc, i| acc + &s[i] * &small[j - 1 - i]);
                small.push(&m * conv);
            }
            Series::new(small)
        }
        _ => functional_equation_of(spec).expect("quadratic family").series(order),
    }
}

/// Coefficients from the first-return recurrence. Defined for every `m, n >= 0`.
pub fn recurrence_series(spec: &FamilySpec, order: usize) -> SequenceResult {
    let exact = recurrence_exact(spec, order);
    let counts = into_counts(spec, exact.coeffs())
        .expect("recurrence with nonnegative integer weights yields nonnegative integers");
    SequenceResult::new(*spec, Method::Recurrence, counts)
}

fn int(v: i64) -> Coefficient {
    Coefficient::from_integer(v.into())
}

/// Closed-form ingredients: radicand polynomial, the polynomial part `p` of
/// the numerator `p - sqrt(radicand)`, and the denominator `scalar · x^k`.
struct ClosedForm {
    radicand: Vec<Coefficient>,
    numerator: Vec<Coefficient>,
    scalar: Coefficient,
    k: usize,
}

fn closed_form_parts(spec: &FamilySpec) -> ClosedForm {
    let m = int(spec.m.into());
    let n = int(spec.n.into());
    let two = int(2);
    match spec.family {
        // (1 - sqrt(1 - 4mx)) / (2mx)
        Family::Catalan => ClosedForm {
            radicand: vec![int(1), -(int(4) * &m)],
            numerator: vec![int(1)],
            scalar: &two * &m,
            k: 1,
        },
        // (1 - nx - sqrt(1 - 2x(n + 2m) + n²x²)) / (2mx)
        Family::SchroderLarge => ClosedForm {
            radicand: vec![int(1), -(&two * (&n + &two * &m)), &n * &n],
            numerator: vec![int(1), -n.clone()],
            scalar: &two * &m,
            k: 1,
        },
        // (1 + x - sqrt(1 - 2x(1 + 2m) + x²)) / (2x(1 + m))
        Family::SchroderSmall => ClosedForm {
            radicand: vec![int(1), -(&two * (int(1) + &two * &m)), int(1)],
            numerator: vec![int(1), int(1)],
            scalar: &two * (int(1) + &m),
            k: 1,
        },
        // (1 - nx - sqrt(1 - 2nx + x²(n² - 4m))) / (2mx²)
        Family::Motzkin => ClosedForm {
            radicand: vec![int(1), -(&two * &n), &n * &n - int(4) * &m],
            numerator: vec![int(1), -n.clone()],
            scalar: &two * &m,
            k: 2,
        },
    }
}

/// Exact expansion of the closed form, before the integrality check.
pub fn closed_form_exact(spec: &FamilySpec, order: usize) -> Result<Series, FamilyError> {
    spec.check_closed_form()?;
    let parts = closed_form_parts(spec);
    let work = order + parts.k;
    let algebra = |source| FamilyError::Algebra { spec: *spec, source };
    let root = Series::from_polynomial(&parts.radicand, work).sqrt().map_err(algebra)?;
    let numerator = Series::from_polynomial(&parts.numerator, work).sub(&root);
    numerator.div_exact(&parts.scalar, parts.k).map_err(algebra)
}

/// Coefficients from the closed-form generating function.
///
/// Requires `m >= 1`; small Schröder additionally requires `n = 1`.
pub fn closed_form_series(spec: &FamilySpec, order: usize) -> Result<SequenceResult, FamilyError> {
    let exact = closed_form_exact(spec, order)?;
    let counts = into_counts(spec, exact.coeffs())?;
    Ok(SequenceResult::new(*spec, Method::ClosedForm, counts))
}

/// Small Schröder series by solving `s = 1 + m x S s` as `s = 1 / (1 - m x S)`,
/// with `S` the large Schröder series (`n = 1`).
pub fn small_schroder_series(m: u32, order: usize) -> SequenceResult {
    small_schroder_series_colored(m, 1, order)
}

/// As [`small_schroder_series`], with `n` colors on the off-axis level steps.
pub fn small_schroder_series_colored(m: u32, n: u32, order: usize) -> SequenceResult {
    let spec = FamilySpec::new(Family::SchroderSmall, m, n);
    let large = functional_equation_of(&FamilySpec::new(Family::SchroderLarge, m, n))
        .expect("large Schröder has a quadratic equation")
        .series(order);
    let denom = Series::one(order).sub(&large.scale_shift(&int(m.into()), 1));
    let small = denom.reciprocal().expect("constant term is 1");
    let counts = into_counts(&spec, small.coeffs()).expect("weighted path counts are integers");
    SequenceResult::new(spec, Method::Recurrence, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(spec: FamilySpec, order: usize) -> Vec<u64> {
        recurrence_series(&spec, order).coefficients.iter().map(|c| c.try_into().unwrap()).collect()
    }

    fn closed(spec: FamilySpec, order: usize) -> Vec<u64> {
        closed_form_series(&spec, order)
            .unwrap()
            .coefficients
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn functional_equation_table() {
        let fe = functional_equation_of(&FamilySpec::new(Family::Catalan, 3, 7)).unwrap();
        assert_eq!((fe.alpha, fe.beta, fe.k), (int(0), int(3), 1));
        let fe = functional_equation_of(&FamilySpec::new(Family::SchroderLarge, 1, 1)).unwrap();
        assert_eq!((fe.alpha, fe.beta, fe.k), (int(1), int(1), 1));
        let fe = functional_equation_of(&FamilySpec::new(Family::Motzkin, 2, 3)).unwrap();
        assert_eq!((fe.alpha, fe.beta, fe.k), (int(3), int(2), 2));
        assert_eq!(
            functional_equation_of(&FamilySpec::new(Family::SchroderSmall, 1, 1)),
            Err(FamilyError::UnsupportedShape)
        );
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(seq(FamilySpec::new(Family::Catalan, 1, 1), 6), [1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(seq(FamilySpec::new(Family::SchroderLarge, 2, 1), 3), [1, 3, 15, 93]);
        assert_eq!(seq(FamilySpec::new(Family::Motzkin, 2, 1), 4), [1, 1, 3, 7, 21]);
        assert_eq!(seq(FamilySpec::new(Family::SchroderSmall, 1, 1), 5), [1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed(FamilySpec::new(Family::Catalan, 1, 1), 4), [1, 1, 2, 5, 14]);
        assert_eq!(closed(FamilySpec::new(Family::SchroderLarge, 1, 1), 5), [1, 2, 6, 22, 90, 394]);
        assert_eq!(closed(FamilySpec::new(Family::Motzkin, 1, 2), 4), [1, 2, 5, 14, 42]);
        assert_eq!(closed(FamilySpec::new(Family::Catalan, 2, 1), 3), [1, 2, 8, 40]);
        assert_eq!(closed(FamilySpec::new(Family::Motzkin, 1, 1), 6), [1, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn closed_form_order_zero() {
        assert_eq!(closed(FamilySpec::new(Family::Motzkin, 3, 2), 0), [1]);
    }

    #[test]
    fn closed_form_rejections() {
        let err = closed_form_series(&FamilySpec::new(Family::Catalan, 0, 1), 4).unwrap_err();
        assert_eq!(err, FamilyError::ClosedFormAtZeroColors { family: Family::Catalan });
        let err = closed_form_series(&FamilySpec::new(Family::SchroderSmall, 1, 2), 4).unwrap_err();
        assert_eq!(err, FamilyError::NoKnownClosedForm { n: 2 });
        assert!(err.to_string().contains("no closed form is known"));
        // n = 0 is still not n = 1
        assert!(!FamilySpec::new(Family::SchroderSmall, 1, 0).has_closed_form());
    }

    #[test]
    fn small_schroder_linear_solve() {
        let v = |r: SequenceResult| -> Vec<u64> {
            r.coefficients.iter().map(|c| c.try_into().unwrap()).collect()
        };
        assert_eq!(v(small_schroder_series(1, 3)), [1, 1, 3, 11]);
        assert_eq!(v(small_schroder_series(0, 5)), [1, 0, 0, 0, 0, 0]);
        assert_eq!(v(small_schroder_series(2, 3)), [1, 2, 10, 62]);
    }

    #[test]
    fn zero_colors() {
        assert_eq!(seq(FamilySpec::new(Family::Catalan, 0, 1), 4), [1, 0, 0, 0, 0]);
        assert_eq!(seq(FamilySpec::new(Family::SchroderLarge, 0, 1), 4), [1, 1, 1, 1, 1]);
        assert_eq!(seq(FamilySpec::new(Family::SchroderLarge, 0, 0), 3), [1, 0, 0, 0]);
    }

    #[test]
    fn metadata_flags() {
        let r = recurrence_series(&FamilySpec::new(Family::Catalan, 1, 4), 2);
        assert!(r.metadata.n_ignored);
        assert!(!r.metadata.conjectural_semantics);
        // n really is ignored
        assert_eq!(r.coefficients, recurrence_series(&FamilySpec::new(Family::Catalan, 1, 1), 2).coefficients);
        let r = recurrence_series(&FamilySpec::new(Family::SchroderSmall, 1, 2), 2);
        assert!(r.metadata.conjectural_semantics);
    }

    #[test]
    fn integrality_check_fires() {
        let spec = FamilySpec::new(Family::Catalan, 1, 1);
        let err = into_counts(&spec, &[int(1), Coefficient::new(1.into(), 2.into())]).unwrap_err();
        assert!(matches!(err, FamilyError::NotAPathCount { index: 1, .. }));
        let err = into_counts(&spec, &[int(-3)]).unwrap_err();
        assert!(matches!(err, FamilyError::NotAPathCount { index: 0, .. }));
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("dyck".parse::<Family>().is_err());
    }
}
