//! Subresultants of `(x - alpha)^m` and `(x - beta)^n` in linear arithmetic
//! complexity, their Bernstein-basis form, and the Bezout cofactors.
//!
//! Everything here is dispatched on the field characteristic:
//!
//! * `char = 0` or `char >= m+n-d`: the principal coefficient `s_d` comes
//!   from a product of ratios of factorials, and the remaining coefficients
//!   from a second-order recurrence running from `s_d` down to `s_0`;
//! * `char = m+n-d-1`: the subresultant is a nonzero constant;
//! * `max(m, n) <= char < m+n-d-1`: the subresultant vanishes.
//!
//! Below `max(m, n)` nothing is claimed and every entry point refuses.

use crate::combinat::{binomial, falling_product};
use crate::error::{Error, Result};
use crate::field::{Field, FieldValue, OpCounter};
use crate::poly::{DensePoly, ProblemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharCase {
    /// `char = 0` or `char >= m+n-d`.
    GenericLarge,
    /// `char = m+n-d-1`.
    BoundaryPrime,
    /// `max(m, n) <= char < m+n-d-1`.
    VanishingBand,
    /// `0 < char < max(m, n)`.
    Unsupported,
}

impl CharCase {
    /// Wire name used in JSON output.
    pub fn wire_name(&self) -> &'static str {
        match self {
            CharCase::GenericLarge => "generic",
            CharCase::BoundaryPrime => "boundary",
            CharCase::VanishingBand => "vanishing",
            CharCase::Unsupported => "unsupported",
        }
    }

    pub fn from_wire(s: &str) -> Option<CharCase> {
        Some(match s {
            "generic" => CharCase::GenericLarge,
            "boundary" => CharCase::BoundaryPrime,
            "vanishing" => CharCase::VanishingBand,
            "unsupported" => CharCase::Unsupported,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    /// `{(x - alpha)^j (x - beta)^(d-j)}` with a separate prefactor.
    Bernstein,
}

impl Basis {
    pub fn wire_name(&self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Bernstein => "bernstein",
        }
    }

    pub fn from_wire(s: &str) -> Option<Basis> {
        match s {
            "monomial" => Some(Basis::Monomial),
            "bernstein" => Some(Basis::Bernstein),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresResult {
    pub spec: ProblemSpec,
    pub basis: Basis,
    /// Monomial: `s_0..s_d` (a single constant in the boundary case).
    /// Bernstein: `c_0..c_d`.
    pub coeffs: Vec<FieldValue>,
    /// `(alpha - beta)^((m-d)(n-d))`, Bernstein basis only.
    pub prefactor: Option<FieldValue>,
    pub case: CharCase,
    pub op_count: OpCounter,
}

impl SubresResult {
    /// The subresultant as a polynomial; monomial basis only.
    pub fn to_poly(&self) -> Result<DensePoly> {
        if self.basis != Basis::Monomial {
            return Err(Error::BasisMismatch {
                expected: "monomial",
            });
        }
        DensePoly::from_coeffs(self.spec.field(), self.coeffs.clone())
    }
}

/// Bezout cofactors with `Sres_d = f_cof * (x - alpha)^m + g_cof * (x - beta)^n`,
/// `deg f_cof < n - d` and `deg g_cof < m - d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorPair {
    pub f_cof: DensePoly,
    pub g_cof: DensePoly,
}

pub fn classify(spec: &ProblemSpec) -> CharCase {
    let p = spec.field().characteristic();
    let (m, n, d) = (spec.m, spec.n, spec.d);
    if p == 0 || p >= m + n - d {
        CharCase::GenericLarge
    } else if p < m.max(n) {
        CharCase::Unsupported
    } else if p == m + n - d - 1 {
        CharCase::BoundaryPrime
    } else if d == 0 {
        // The resultant is (alpha - beta)^(mn) in every characteristic; the
        // vanishing band only exists for d >= 1.
        CharCase::GenericLarge
    } else {
        CharCase::VanishingBand
    }
}

fn check_field(spec: &ProblemSpec, field: &Field) -> Result<()> {
    if spec.field() != field.descriptor() {
        return Err(Error::FieldMismatch {
            expected: field.descriptor(),
            found: spec.field(),
        });
    }
    Ok(())
}

fn unsupported(spec: &ProblemSpec, hypothesis: &str) -> Error {
    Error::UnsupportedCharacteristic {
        characteristic: spec.field().characteristic(),
        m: spec.m,
        n: spec.n,
        d: spec.d,
        hypothesis: hypothesis.to_string(),
    }
}

/// Common entry checks: field agreement, distinct roots, a covered case.
fn dispatch(spec: &ProblemSpec, field: &Field) -> Result<CharCase> {
    check_field(spec, field)?;
    if spec.alpha == spec.beta {
        return Err(Error::EqualRoots);
    }
    match classify(spec) {
        CharCase::Unsupported => Err(unsupported(spec, "char = 0 or char >= max(m, n)")),
        case => Ok(case),
    }
}

/// `prod_{i=1}^{d} r(i)` with `r(i) = (i-1)! (m+n-d-i)! / ((m-i)! (n-i)!)`.
///
/// `r(d) = (d-1)! C(m+n-2d, m-d)` costs `O(min(m, n))`; the rest follows from
/// `r(i) = (m+n-d-i) / (i (m-i) (n-i)) * r(i+1)`.
pub(crate) fn r_product(m: u64, n: u64, d: u64, field: &Field) -> Result<FieldValue> {
    if d == 0 {
        return Ok(field.one());
    }
    let (m, n, d) = (m as i128, n as i128, d as i128);
    let mut r = falling_product(d - 1, (d - 1) as u64, field)?;
    r = field.mul(&r, &binomial((m - d) as u64, (n - d) as u64, field)?)?;
    let mut prod = r.clone();
    for i in (1..d).rev() {
        let num = field.int(m + n - d - i);
        let den = field.int_nonzero(i * (m - i) * (n - i))?;
        r = field.div(&field.mul(&r, &num)?, &den)?;
        prod = field.mul(&prod, &r)?;
    }
    Ok(prod)
}

/// The principal subresultant
/// `s_d = (alpha - beta)^((m-d)(n-d)) * prod_{i=1}^{d} r(i)`.
pub fn leading_coefficient_sd(spec: &ProblemSpec, field: &Field) -> Result<FieldValue> {
    if dispatch(spec, field)? != CharCase::GenericLarge {
        return Err(unsupported(spec, "char = 0 or char >= m+n-d"));
    }
    let diff = field.sub(&spec.alpha, &spec.beta)?;
    seed(spec, &diff, field)
}

fn seed(spec: &ProblemSpec, diff: &FieldValue, field: &Field) -> Result<FieldValue> {
    let (m, n, d) = (spec.m, spec.n, spec.d);
    let power = field.pow(diff, (m - d) * (n - d))?;
    field.mul(&power, &r_product(m, n, d, field)?)
}

/// `Sres_d((x - alpha)^m, (x - beta)^n)` in the monomial basis.
pub fn sres_fast(spec: &ProblemSpec, field: &Field) -> Result<SubresResult> {
    let case = dispatch(spec, field)?;
    let start = field.counter();
    let (m, n, d) = (spec.m, spec.n, spec.d);
    let diff = field.sub(&spec.alpha, &spec.beta)?;

    let coeffs = match case {
        _ if d == 0 => vec![field.pow(&diff, m * n)?],
        CharCase::GenericLarge => recurrence_from_seed(spec, seed(spec, &diff, field)?, field)?,
        CharCase::BoundaryPrime => {
            let c = field.pow(&diff, (m - d) * (n - d) + d)?;
            vec![field.signed(c, m * d)?]
        }
        CharCase::VanishingBand => vec![field.zero(); d as usize + 1],
        CharCase::Unsupported => unreachable!("rejected by dispatch"),
    };

    Ok(SubresResult {
        spec: spec.clone(),
        basis: Basis::Monomial,
        coeffs,
        prefactor: None,
        case,
        op_count: field.counter().since(&start),
    })
}

/// Runs, for `k = d-1, ..., 0`,
///
/// `s_k = -(k+1) (((n-k-1) alpha + (m-k-1) beta) s_{k+1} + (k+2) alpha beta s_{k+2})
///        / ((d-k)(m+n-d-k-1))`
///
/// from `s_{d+1} = 0` and the given `s_d`.
fn recurrence_from_seed(spec: &ProblemSpec, sd: FieldValue, field: &Field) -> Result<Vec<FieldValue>> {
    let (m, n, d) = (spec.m as i128, spec.n as i128, spec.d as i128);
    let (alpha, beta) = (&spec.alpha, &spec.beta);
    let ab = field.mul(alpha, beta)?;
    let mut s = vec![field.zero(); d as usize + 2];
    s[d as usize] = sd;
    for k in (0..d).rev() {
        let ku = k as usize;
        let lin = field.add(
            &field.mul(&field.int(n - k - 1), alpha)?,
            &field.mul(&field.int(m - k - 1), beta)?,
        )?;
        let first = field.mul(&lin, &s[ku + 1])?;
        let second = field.mul(&field.mul(&field.int(k + 2), &ab)?, &s[ku + 2])?;
        let num = field.mul(&field.int(-(k + 1)), &field.add(&first, &second)?)?;
        let den = field.int_nonzero((d - k) * (m + n - d - k - 1))?;
        s[ku] = field.div(&num, &den)?;
    }
    s.truncate(d as usize + 1);
    Ok(s)
}

/// The subresultant as `(alpha - beta)^((m-d)(n-d)) * sum_j c_j (x-alpha)^j (x-beta)^(d-j)`.
///
/// `c_0 = prod_{i=1}^{d} (i-1)! (m+n-d-i-1)! / ((m-i-1)! (n-i)!)` is unrolled
/// from its last factor like `r(i)`, and
/// `c_j / c_{j-1} = (d-j+1)(n-d+j-1) / (j (m-j))`.
pub fn sres_bernstein(spec: &ProblemSpec, field: &Field) -> Result<SubresResult> {
    let case = dispatch(spec, field)?;
    let (m, n, d) = (spec.m, spec.n, spec.d);
    if d > 0 && !field.descriptor().inverts_below(m + n - d) {
        return Err(unsupported(spec, "char = 0 or char >= m+n-d for the Bernstein basis"));
    }
    let start = field.counter();
    let diff = field.sub(&spec.alpha, &spec.beta)?;
    let prefactor = field.pow(&diff, (m - d) * (n - d))?;

    let (mi, ni, di) = (m as i128, n as i128, d as i128);
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    let c0 = if d == 0 {
        field.one()
    } else {
        // t(i) = (i-1)! (m+n-d-i-1)! / ((m-i-1)! (n-i)!); t(d) = (d-1)! C(m+n-2d-1, m-d-1)
        let mut t = falling_product(di - 1, d - 1, field)?;
        t = field.mul(&t, &binomial(m - d - 1, n - d, field)?)?;
        let mut prod = t.clone();
        for i in (1..di).rev() {
            let num = field.int(mi + ni - di - i - 1);
            let den = field.int_nonzero(i * (mi - i - 1) * (ni - i))?;
            t = field.div(&field.mul(&t, &num)?, &den)?;
            prod = field.mul(&prod, &t)?;
        }
        prod
    };
    coeffs.push(c0);
    for j in 1..=di {
        let num = field.int((di - j + 1) * (ni - di + j - 1));
        let den = field.int_nonzero(j * (mi - j))?;
        let prev = &coeffs[j as usize - 1];
        let next = field.div(&field.mul(prev, &num)?, &den)?;
        coeffs.push(next);
    }

    Ok(SubresResult {
        spec: spec.clone(),
        basis: Basis::Bernstein,
        coeffs,
        prefactor: Some(prefactor),
        case,
        op_count: field.counter().since(&start),
    })
}

/// Expands a Bernstein-basis result into monomial coefficients `s_0..s_d`.
pub fn bernstein_to_monomial(result: &SubresResult, field: &Field) -> Result<SubresResult> {
    if result.basis != Basis::Bernstein {
        return Err(Error::BasisMismatch {
            expected: "bernstein",
        });
    }
    check_field(&result.spec, field)?;
    let start = field.counter();
    let spec = &result.spec;
    let d = spec.d as usize;
    let u = DensePoly::power_of_linear(&spec.alpha, 1, field)?;
    let w = DensePoly::power_of_linear(&spec.beta, 1, field)?;

    // Horner in u: S = (...((c_d) u + c_{d-1} w) u + c_{d-2} w^2 ...) u + c_0 w^d
    let mut acc = DensePoly::constant(result.coeffs[d].clone());
    let mut w_pow = DensePoly::constant(field.one());
    for j in (0..d).rev() {
        w_pow = w_pow.mul(&w, field)?;
        acc = acc
            .mul(&u, field)?
            .add(&w_pow.scale(&result.coeffs[j], field)?, field)?;
    }
    let prefactor = result
        .prefactor
        .clone()
        .ok_or(Error::BasisMismatch {
            expected: "bernstein",
        })?;
    let poly = acc.scale(&prefactor, field)?;
    let mut op_count = result.op_count;
    let extra = field.counter().since(&start);
    op_count.adds += extra.adds;
    op_count.muls += extra.muls;
    op_count.divs += extra.divs;
    op_count.negs += extra.negs;

    Ok(SubresResult {
        spec: spec.clone(),
        basis: Basis::Monomial,
        coeffs: poly.padded(d + 1, field),
        prefactor: None,
        case: result.case,
        op_count,
    })
}

/// The Bezout cofactors `(F_d, G_d)`.
///
/// In the generic case both are scaled shifted Jacobi polynomials,
/// `F_d ~ P_{n-d-1}^{(-n, m)}` and `G_d ~ P_{m-d-1}^{(n, -m)}` at
/// `z = (2x - alpha - beta) / (beta - alpha)`. Their leading coefficients are
/// closed forms and the rest follows from the Jacobi differential equation
/// written in `x`, which for `P_r^{(a,b)}` gives
///
/// `y_k = (k+1) (((k+a+1) alpha + (k+b+1) beta) y_{k+1} - (k+2) alpha beta y_{k+2})
///        / ((k-r)(k+r+a+b+1))`.
pub fn cofactors(spec: &ProblemSpec, field: &Field) -> Result<CofactorPair> {
    let case = dispatch(spec, field)?;
    let (m, n, d) = (spec.m, spec.n, spec.d);
    let desc = field.descriptor();
    let diff = field.sub(&spec.alpha, &spec.beta)?;

    match case {
        CharCase::GenericLarge => {
            if d == 0 && !desc.inverts_below(m + n - 1) {
                return Err(unsupported(spec, "char = 0 or char >= m+n-1 for d = 0 cofactors"));
            }
            generic_cofactors(spec, &diff, field)
        }
        // The closed form needs d >= 1; at d = 0 the generic recurrence only
        // divides by integers below m+n-1 = char and stays valid.
        CharCase::BoundaryPrime if d == 0 => generic_cofactors(spec, &diff, field),
        CharCase::BoundaryPrime => {
            let scale = field.pow(&diff, (m - d - 1) * (n - d - 1))?;
            let f_scale = field.signed(scale.clone(), d * m + 1)?;
            let g_scale = field.signed(scale, d * m)?;
            Ok(CofactorPair {
                f_cof: DensePoly::power_of_linear(&spec.alpha, n - d - 1, field)?
                    .scale(&f_scale, field)?,
                g_cof: DensePoly::power_of_linear(&spec.beta, m - d - 1, field)?
                    .scale(&g_scale, field)?,
            })
        }
        CharCase::VanishingBand => Ok(CofactorPair {
            f_cof: DensePoly::zero(desc),
            g_cof: DensePoly::zero(desc),
        }),
        CharCase::Unsupported => unreachable!("rejected by dispatch"),
    }
}

fn generic_cofactors(spec: &ProblemSpec, diff: &FieldValue, field: &Field) -> Result<CofactorPair> {
    let (m, n, d) = (spec.m, spec.n, spec.d);
    // s_d / p_d = (alpha-beta)^((m-d)(n-d)+d) * K with K = prod r(i) / C(m+n-d-1, d);
    // after dividing by (beta-alpha)^(m + deg) only (alpha-beta)^((m-d-1)(n-d-1)) survives.
    let k = field.div(
        &r_product(m, n, d, field)?,
        &binomial(d, m + n - 2 * d - 1, field)?,
    )?;
    let base = field.mul(&k, &field.pow(diff, (m - d - 1) * (n - d - 1))?)?;
    let jacobi_lead = binomial(n - d - 1, m - d - 1, field)?;
    let lead = field.mul(&base, &jacobi_lead)?;

    let f_lead = field.signed(lead.clone(), m + d)?;
    let g_lead = field.signed(lead, m - d - 1)?;
    let (m, n, d) = (m as i128, n as i128, d as i128);
    let f_cof = jacobi_in_x(spec, f_lead, n - d - 1, -n, m, field)?;
    let g_cof = jacobi_in_x(spec, g_lead, m - d - 1, n, -m, field)?;
    Ok(CofactorPair { f_cof, g_cof })
}

/// Coefficients of `c * P_r^{(a,b)}((2x - alpha - beta) / (beta - alpha))`
/// given its `x^r` coefficient, by the differential-equation recurrence.
fn jacobi_in_x(
    spec: &ProblemSpec,
    lead: FieldValue,
    r: i128,
    a: i128,
    b: i128,
    field: &Field,
) -> Result<DensePoly> {
    let (alpha, beta) = (&spec.alpha, &spec.beta);
    let ab = field.mul(alpha, beta)?;
    let ru = r as usize;
    let mut y = vec![field.zero(); ru + 2];
    y[ru] = lead;
    for k in (0..r).rev() {
        let ku = k as usize;
        let lin = field.add(
            &field.mul(&field.int(k + a + 1), alpha)?,
            &field.mul(&field.int(k + b + 1), beta)?,
        )?;
        let first = field.mul(&lin, &y[ku + 1])?;
        let second = field.mul(&field.mul(&field.int(k + 2), &ab)?, &y[ku + 2])?;
        let num = field.mul(&field.int(k + 1), &field.sub(&first, &second)?)?;
        let den = field.int_nonzero((k - r) * (k + r + a + b + 1))?;
        y[ku] = field.div(&num, &den)?;
    }
    y.truncate(ru + 1);
    DensePoly::from_coeffs(field.descriptor(), y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::sres_oracle;

    fn spec(field: &Field, m: u64, n: u64, d: u64, a: i128, b: i128) -> ProblemSpec {
        ProblemSpec::new(m, n, d, field.int(a), field.int(b)).unwrap()
    }

    fn oracle(s: &ProblemSpec, field: &Field) -> DensePoly {
        let (f, g) = s.pair(field).unwrap();
        sres_oracle(&f, &g, s.d, field).unwrap()
    }

    #[test]
    fn classification_examples() {
        let q = Field::rationals();
        assert_eq!(classify(&spec(&q, 5, 7, 3, 1, 2)), CharCase::GenericLarge);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(classify(&spec(&f3, 3, 3, 2, 2, 1)), CharCase::BoundaryPrime);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(classify(&spec(&f5, 5, 4, 1, 1, 0)), CharCase::VanishingBand);
        assert_eq!(classify(&spec(&f5, 7, 4, 1, 1, 0)), CharCase::Unsupported);
        assert_eq!(classify(&spec(&f5, 5, 4, 0, 1, 0)), CharCase::GenericLarge);
        assert_eq!(classify(&spec(&f5, 3, 3, 0, 1, 0)), CharCase::BoundaryPrime);
    }

    #[test]
    fn principal_coefficient_examples() {
        let q = Field::rationals();
        assert_eq!(leading_coefficient_sd(&spec(&q, 2, 2, 1, 0, 1), &q).unwrap(), q.int(-2));
        assert_eq!(leading_coefficient_sd(&spec(&q, 3, 3, 2, 1, 0), &q).unwrap(), q.int(3));
        // d = 0 gives the resultant (alpha - beta)^(mn).
        assert_eq!(leading_coefficient_sd(&spec(&q, 3, 4, 0, 3, 1), &q).unwrap(), q.int(4096));
        assert_eq!(
            leading_coefficient_sd(&spec(&q, 3, 3, 2, 1, 1), &q),
            Err(Error::EqualRoots)
        );
        let f3 = Field::prime(3).unwrap();
        assert!(leading_coefficient_sd(&spec(&f3, 3, 3, 2, 2, 1), &f3).is_err());
    }

    #[test]
    fn sres_fast_examples() {
        let q = Field::rationals();
        let r = sres_fast(&spec(&q, 2, 2, 1, 0, 1), &q).unwrap();
        assert_eq!(r.coeffs, vec![q.int(1), q.int(-2)]);
        assert_eq!(r.case, CharCase::GenericLarge);

        let f3 = Field::prime(3).unwrap();
        let s = spec(&f3, 3, 3, 2, 2, 1);
        let r = sres_fast(&s, &f3).unwrap();
        assert_eq!((r.case, r.coeffs.clone()), (CharCase::BoundaryPrime, vec![f3.one()]));
        assert_eq!(r.to_poly().unwrap(), oracle(&s, &f3));

        let f5 = Field::prime(5).unwrap();
        let s = spec(&f5, 5, 4, 1, 1, 0);
        let r = sres_fast(&s, &f5).unwrap();
        assert_eq!(r.case, CharCase::VanishingBand);
        assert_eq!(r.coeffs, vec![f5.zero(), f5.zero()]);
        assert!(oracle(&s, &f5).is_zero());
    }

    #[test]
    fn sres_fast_errors() {
        let q = Field::rationals();
        assert_eq!(sres_fast(&spec(&q, 4, 4, 1, 2, 2), &q), Err(Error::EqualRoots));
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            sres_fast(&spec(&f3, 5, 4, 1, 2, 1), &f3),
            Err(Error::UnsupportedCharacteristic { .. })
        ));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            sres_fast(&spec(&q, 4, 4, 1, 2, 1), &f5),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn resultant_in_the_band_is_not_zero() {
        let f5 = Field::prime(5).unwrap();
        let s = spec(&f5, 5, 4, 0, 3, 1);
        let r = sres_fast(&s, &f5).unwrap();
        assert_eq!(r.to_poly().unwrap(), oracle(&s, &f5));
        assert!(!r.coeffs[0].is_zero());
    }

    #[test]
    fn matches_oracle_over_rationals() {
        let q = Field::rationals();
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                for d in 0..m.min(n) {
                    let s = spec(&q, m, n, d, 3, -2);
                    assert_eq!(sres_fast(&s, &q).unwrap().to_poly().unwrap(), oracle(&s, &q));
                }
            }
        }
    }

    #[test]
    fn bernstein_examples() {
        let q = Field::rationals();
        let r = sres_bernstein(&spec(&q, 4, 3, 0, 5, 2), &q).unwrap();
        assert_eq!(r.coeffs, vec![q.one()]);
        assert_eq!(r.prefactor, Some(q.int(3i128.pow(12))));

        let s = spec(&q, 2, 2, 1, 0, 1);
        let r = sres_bernstein(&s, &q).unwrap();
        assert_eq!(r.coeffs, vec![q.one(), q.one()]);
        let mono = bernstein_to_monomial(&r, &q).unwrap();
        assert_eq!(mono.coeffs, vec![q.int(1), q.int(-2)]);

        let s = spec(&q, 4, 3, 2, 7, -3);
        let r = sres_bernstein(&s, &q).unwrap();
        assert!(r.coeffs.iter().all(FieldValue::is_integral));

        let s = spec(&q, 3, 4, 2, 2, 5);
        let r = sres_bernstein(&s, &q).unwrap();
        assert_eq!(bernstein_to_monomial(&r, &q).unwrap().to_poly().unwrap(), oracle(&s, &q));
        assert!(bernstein_to_monomial(&sres_fast(&s, &q).unwrap(), &q).is_err());
    }

    fn assert_bezout(s: &ProblemSpec, field: &Field) {
        let pair = cofactors(s, field).unwrap();
        let (f, g) = s.pair(field).unwrap();
        let lhs = pair
            .f_cof
            .mul(&f, field)
            .unwrap()
            .add(&pair.g_cof.mul(&g, field).unwrap(), field)
            .unwrap();
        assert_eq!(lhs, oracle(s, field), "{s:?}");
        assert!(pair.f_cof.degree().below(s.n - s.d), "{s:?}");
        assert!(pair.g_cof.degree().below(s.m - s.d), "{s:?}");
    }

    #[test]
    fn cofactor_examples() {
        let q = Field::rationals();
        let pair = cofactors(&spec(&q, 1, 1, 0, 4, 9), &q).unwrap();
        assert_eq!(pair.f_cof, DensePoly::constant(q.int(-1)));
        assert_eq!(pair.g_cof, DensePoly::constant(q.int(1)));

        let f3 = Field::prime(3).unwrap();
        let pair = cofactors(&spec(&f3, 3, 3, 2, 2, 1), &f3).unwrap();
        assert_eq!(pair.f_cof, DensePoly::constant(f3.int(-1)));
        assert_eq!(pair.g_cof, DensePoly::constant(f3.int(1)));
    }

    #[test]
    fn bezout_identity_small_sweep() {
        let q = Field::rationals();
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                for d in 0..m.min(n) {
                    assert_bezout(&spec(&q, m, n, d, -1, 4), &q);
                }
            }
        }
        for p in [2u64, 3, 5, 7, 11] {
            let f = Field::prime(p).unwrap();
            for m in 1..=p {
                for n in 1..=p {
                    for d in 0..m.min(n) {
                        let s = spec(&f, m, n, d, 1, 3);
                        if s.alpha == s.beta || classify(&s) == CharCase::Unsupported {
                            continue;
                        }
                        if d == 0 && p < m + n - 1 {
                            assert!(cofactors(&s, &f).is_err());
                            continue;
                        }
                        assert_bezout(&s, &f);
                    }
                }
            }
        }
    }
}
