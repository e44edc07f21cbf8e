//! All principal subresultants of `(x - alpha)^m` and `(x - beta)^n` at once.
//!
//! `PSres_d = c(d) h(d)` with `h(d) = (alpha - beta)^((m-d)(n-d))` and `c(d)`
//! an integer. Both factors are chained in `d`: `c` through the ratios
//! `u(d) = c(d)/c(d-1)` and `v(d) = u(d+1)/u(d)`, the latter a rational
//! function of `d`; `h` through `gamma(d) = h(d+1)/h(d) = (alpha - beta)^(2d+1-m-n)`.

use num_bigint::BigInt;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::fastsubres::leading_coefficient_sd;
use crate::field::{Field, FieldValue};
use crate::poly::ProblemSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsresSchedule {
    pub m: u64,
    pub n: u64,
    /// `v(1)..v(min-2)`
    pub v: Vec<FieldValue>,
    /// `u(1)..u(min-1)`
    pub u: Vec<FieldValue>,
    /// `c(0)..c(min-1)`
    pub c: Vec<FieldValue>,
    /// `gamma(0)..gamma(min-2)`
    pub gamma: Vec<FieldValue>,
    /// `h(0)..h(min-1)`
    pub h: Vec<FieldValue>,
    /// `PSres_0..PSres_{min-1}`
    pub out: Vec<FieldValue>,
}

/// `v(d) = d(m-d)(n-d)(m+n-d) / ((m+n-2d-1)(m+n-2d)^2(m+n-2d+1))`.
pub fn v_ratio(m: u64, n: u64, d: u64, field: &Field) -> Result<FieldValue> {
    let (m, n, d) = (BigInt::from(m), BigInt::from(n), BigInt::from(d));
    let s = &m + &n - 2u32 * &d;
    let num = &d * (&m - &d) * (&n - &d) * (&m + &n - &d);
    let den = (&s - 1u32) * &s * &s * (&s + 1u32);
    let den = field.big(&den);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    field.div(&field.big(&num), &den)
}

fn check_inputs(m: u64, n: u64, alpha: &FieldValue, beta: &FieldValue, field: &Field) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSpec(format!("degrees must be positive, got m={m}, n={n}")));
    }
    for v in [alpha, beta] {
        if v.descriptor() != field.descriptor() {
            return Err(Error::FieldMismatch {
                expected: field.descriptor(),
                found: v.descriptor(),
            });
        }
    }
    if !field.descriptor().inverts_below(m + n) {
        return Err(Error::CharacteristicTooSmall {
            characteristic: field.characteristic(),
            requirement: format!("all principal subresultants need char = 0 or char >= m+n = {}", m + n),
        });
    }
    Ok(())
}

/// Runs the full chain and keeps every intermediate sequence.
pub fn psres_schedule(
    m: u64,
    n: u64,
    alpha: &FieldValue,
    beta: &FieldValue,
    field: &Field,
) -> Result<PsresSchedule> {
    check_inputs(m, n, alpha, beta, field)?;
    if alpha == beta {
        return Err(Error::EqualRoots);
    }
    let k = m.min(n);
    let diff = field.sub(alpha, beta)?;
    let mut s = PsresSchedule {
        m,
        n,
        v: Vec::new(),
        u: Vec::new(),
        c: vec![field.one()],
        gamma: Vec::new(),
        h: vec![field.pow(&diff, m * n)?],
        out: Vec::new(),
    };

    if k > 1 {
        for d in 1..=k - 2 {
            s.v.push(v_ratio(m, n, d, field)?);
        }
        s.u.push(binomial(m - 1, n - 1, field)?);
        for d in 2..k {
            let next = field.mul(&s.u[d as usize - 2], &s.v[d as usize - 2])?;
            s.u.push(next);
        }
        for d in 1..k as usize {
            let next = field.mul(&s.u[d - 1], &s.c[d - 1])?;
            s.c.push(next);
        }

        let sq = field.mul(&diff, &diff)?;
        s.gamma.push(field.inv(&field.pow(&diff, m + n - 1)?)?);
        for d in 1..k as usize - 1 {
            let next = field.mul(&sq, &s.gamma[d - 1])?;
            s.gamma.push(next);
        }
        for d in 1..k as usize {
            let next = field.mul(&s.gamma[d - 1], &s.h[d - 1])?;
            s.h.push(next);
        }
    }

    s.out = s
        .c
        .iter()
        .zip(&s.h)
        .map(|(c, h)| field.mul(c, h))
        .collect::<Result<_>>()?;
    Ok(s)
}

/// `[PSres_0, ..., PSres_{min(m,n)-1}]`. Equal roots give all zeros.
pub fn psres_all(m: u64, n: u64, alpha: &FieldValue, beta: &FieldValue, field: &Field) -> Result<Vec<FieldValue>> {
    check_inputs(m, n, alpha, beta, field)?;
    if alpha == beta {
        return Ok(vec![field.zero(); m.min(n) as usize]);
    }
    Ok(psres_schedule(m, n, alpha, beta, field)?.out)
}

/// `PSres_d` for the single `d` in `spec`.
pub fn psres_single(spec: &ProblemSpec, field: &Field) -> Result<FieldValue> {
    leading_coefficient_sd(spec, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::psres_oracle;

    #[test]
    fn psres_all_examples() {
        let q = Field::rationals();
        assert_eq!(psres_all(2, 2, &q.one(), &q.zero(), &q).unwrap(), vec![q.int(1), q.int(2)]);
        assert_eq!(
            psres_all(3, 3, &q.one(), &q.zero(), &q).unwrap(),
            vec![q.int(1), q.int(6), q.int(3)]
        );
        assert_eq!(psres_all(2, 2, &q.one(), &q.one(), &q).unwrap(), vec![q.zero(), q.zero()]);
        assert_eq!(psres_all(1, 5, &q.int(2), &q.zero(), &q).unwrap(), vec![q.int(32)]);
    }

    #[test]
    fn schedule_internals() {
        let q = Field::rationals();
        let s = psres_schedule(3, 3, &q.one(), &q.zero(), &q).unwrap();
        assert_eq!(s.v, vec![q.parse("1/12").unwrap()]);
        assert_eq!(s.u, vec![q.int(6), q.parse("1/2").unwrap()]);
        assert_eq!(s.c, vec![q.int(1), q.int(6), q.int(3)]);
        assert_eq!(s.h, vec![q.one(); 3]);

        let s = psres_schedule(5, 7, &q.int(3), &q.int(1), &q).unwrap();
        for (d, h) in s.h.iter().enumerate() {
            let d = d as u64;
            assert_eq!(*h, q.pow(&q.int(2), (5 - d) * (7 - d)).unwrap());
        }
        for d in 1..s.u.len() {
            assert_eq!(s.u[d], q.div(&s.c[d + 1], &s.c[d]).unwrap());
        }
    }

    #[test]
    fn precondition_errors() {
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(
            psres_all(4, 4, &f7.one(), &f7.zero(), &f7),
            Err(Error::CharacteristicTooSmall { .. })
        ));
        assert!(psres_all(4, 3, &f7.one(), &f7.zero(), &f7).is_ok());
        let q = Field::rationals();
        assert!(matches!(
            psres_all(2, 2, &f7.one(), &f7.zero(), &q),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(psres_all(0, 2, &q.one(), &q.zero(), &q).is_err());
    }

    #[test]
    fn single_examples() {
        let q = Field::rationals();
        let spec = |m, n, d, a, b| ProblemSpec::new(m, n, d, q.int(a), q.int(b)).unwrap();
        assert_eq!(psres_single(&spec(2, 2, 1, 1, 0), &q).unwrap(), q.int(2));
        assert_eq!(psres_single(&spec(3, 2, 0, 2, 1), &q).unwrap(), q.int(1));
        assert_eq!(psres_single(&spec(3, 3, 2, 1, 0), &q).unwrap(), q.int(3));
    }

    #[test]
    fn matches_oracle() {
        for field in [Field::rationals(), Field::prime(17).unwrap()] {
            for m in 1..=8u64 {
                for n in 1..=8u64 {
                    let (a, b) = (field.int(-2), field.int(5));
                    let all = psres_all(m, n, &a, &b, &field).unwrap();
                    let s = ProblemSpec::new(m, n, 0, a, b).unwrap();
                    let (f, g) = s.pair(&field).unwrap();
                    for d in 0..m.min(n) {
                        assert_eq!(all[d as usize], psres_oracle(&f, &g, d, &field).unwrap(), "m={m} n={n} d={d}");
                    }
                }
            }
        }
    }
}
