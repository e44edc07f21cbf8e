//! Jacobi polynomials with integer parameters, the cleared shifted Jacobi
//! polynomial that carries the subresultant, terminating `2F1` polynomials
//! and the Pade check built on them.

use num_bigint::BigInt;

use crate::combinat::{choose, factorial, falling_product, pochhammer};
use crate::error::{Error, Result};
use crate::fastsubres::{cofactors, sres_fast};
use crate::field::{Field, FieldValue};
use crate::poly::{DensePoly, ProblemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub r: u64,
    pub k: i64,
    pub l: i64,
}

impl JacobiParams {
    pub fn new(r: u64, k: i64, l: i64) -> Self {
        JacobiParams { r, k, l }
    }
}

/// `(x - a)^i (x - b)^j`.
fn linear_product(a: i128, i: u64, b: i128, j: u64, field: &Field) -> Result<DensePoly> {
    DensePoly::power_of_linear(&field.int(a), i, field)?
        .mul(&DensePoly::power_of_linear(&field.int(b), j, field)?, field)
}

/// `P_r^{(k,l)}(x) = sum_j (k+r-j+1)_j / j! * (l+j+1)_{r-j} / (r-j)!
///                   * ((x-1)/2)^(r-j) * ((x+1)/2)^j`.
pub fn jacobi_hypergeometric(params: JacobiParams, field: &Field) -> Result<DensePoly> {
    let JacobiParams { r, k, l } = params;
    let p = field.characteristic();
    if p == 2 || (p != 0 && p <= r) {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            requirement: format!("Jacobi polynomial of degree {r} needs char != 2 and char > {r}"),
        });
    }
    let (r_i, k, l) = (r as i128, k as i128, l as i128);
    let mut sum = DensePoly::zero(field.descriptor());
    for j in 0..=r {
        let ji = j as i128;
        let left = field.div(&pochhammer(&field.int(k + r_i - ji + 1), j, field)?, &factorial(j, field)?)?;
        let right = field.div(
            &pochhammer(&field.int(l + ji + 1), r - j, field)?,
            &factorial(r - j, field)?,
        )?;
        let term = linear_product(1, r - j, -1, j, field)?.scale(&field.mul(&left, &right)?, field)?;
        sum = sum.add(&term, field)?;
    }
    let two_r = field.pow(&field.int(2), r)?;
    sum.scale(&field.inv(&two_r)?, field)
}

/// Rodrigues' formula
/// `P_r^{(k,l)} = (-1)^r / (2^r r!) (1-x)^(-k) (1+x)^(-l) D^r [(1-x)^(k+r) (1+x)^(l+r)]`,
/// over `Q` only.
///
/// When `k+r` and `l+r` are non-negative the bracket is differentiated as a
/// polynomial and the prefactor applied by exact division. Otherwise the
/// Leibniz rule on the two powers gives
/// `D^r[..] (1-x)^(-k) (1+x)^(-l) = sum_i C(r,i) (-1)^i (k+r)^(i) (l+r)^(r-i) (1-x)^(r-i) (1+x)^i`
/// with falling factorials `a^(i)`, which is a polynomial for every integer
/// `k`, `l`.
pub fn jacobi_rodrigues(params: JacobiParams, field: &Field) -> Result<DensePoly> {
    if field.characteristic() != 0 {
        return Err(Error::UnsupportedParameters(
            "Rodrigues form is only evaluated over Q".into(),
        ));
    }
    let JacobiParams { r, k, l } = params;
    let (a, b) = (k as i128 + r as i128, l as i128 + r as i128);
    let bracket_image = if a >= 0 && b >= 0 {
        rodrigues_explicit(r, k as i128, l as i128, field)?
    } else {
        rodrigues_leibniz(r, a, b, field)?
    };
    let sign = if r % 2 == 1 { -1 } else { 1 };
    let scale = field.div(
        &field.int(sign),
        &field.mul(&field.pow(&field.int(2), r)?, &factorial(r, field)?)?,
    )?;
    bracket_image.scale(&scale, field)
}

/// `(1-x)^(-k) (1+x)^(-l) D^r [(1-x)^(k+r) (1+x)^(l+r)]` for `k+r, l+r >= 0`.
fn rodrigues_explicit(r: u64, k: i128, l: i128, field: &Field) -> Result<DensePoly> {
    let (a, b) = ((k + r as i128) as u64, (l + r as i128) as u64);
    // (1-x)^a = (-1)^a (x-1)^a
    let mut q = linear_product(1, a, -1, b, field)?;
    if a % 2 == 1 {
        q = q.neg(field)?;
    }
    for _ in 0..r {
        q = q.derivative(field)?;
    }
    q = apply_power(q, 1, k, field)?;
    apply_power(q, -1, l, field)
}

/// Multiplies by `(x - root)^(-e)` up to the sign fixing `(1-x)` against
/// `(x-1)`: divides exactly for `e > 0`, multiplies for `e < 0`.
fn apply_power(mut q: DensePoly, root: i128, e: i128, field: &Field) -> Result<DensePoly> {
    let root_v = field.int(root);
    let linear = DensePoly::power_of_linear(&root_v, 1, field)?;
    for _ in 0..e.unsigned_abs() {
        q = if e > 0 {
            q.div_linear(&root_v, field)?
        } else {
            q.mul(&linear, field)?
        };
    }
    // 1 - x = -(x - 1); 1 + x = x + 1 needs no sign.
    if root == 1 && e.rem_euclid(2) == 1 {
        q = q.neg(field)?;
    }
    Ok(q)
}

fn rodrigues_leibniz(r: u64, a: i128, b: i128, field: &Field) -> Result<DensePoly> {
    let mut sum = DensePoly::zero(field.descriptor());
    for i in 0..=r {
        let mut c = field.mul(&choose(r, i, field)?, &falling(a, i, field))?;
        c = field.mul(&c, &falling(b, r - i, field))?;
        // (1-x)^(r-i) = (-1)^(r-i) (x-1)^(r-i); combined with (-1)^i this is (-1)^r.
        c = field.signed(c, r)?;
        sum = sum.add(&linear_product(1, r - i, -1, i, field)?.scale(&c, field)?, field)?;
    }
    Ok(sum)
}

/// Falling factorial that tolerates zero factors.
fn falling(top: i128, count: u64, field: &Field) -> FieldValue {
    let mut acc = BigInt::from(1);
    for i in 0..count as i128 {
        acc *= top - i;
    }
    field.big(&acc)
}

/// `sum_j C(n-d+j-1, j) C(m-j-1, d-j) (x-alpha)^j (x-beta)^(d-j)`, which is
/// `(alpha-beta)^d P_d^{(-n,-m)}((2x-alpha-beta)/(beta-alpha))`, expanded in
/// the monomial basis. Leading coefficient `C(m+n-d-1, d)`.
pub fn shifted_jacobi(spec: &ProblemSpec, field: &Field) -> Result<DensePoly> {
    if spec.alpha == spec.beta {
        return Err(Error::EqualRoots);
    }
    let (m, n, d) = (spec.m, spec.n, spec.d);
    if !field.descriptor().inverts_below(m + n - d) {
        return Err(Error::CharacteristicTooSmall {
            characteristic: field.characteristic(),
            requirement: "shifted Jacobi polynomial needs char = 0 or char >= m+n-d".into(),
        });
    }
    let u = DensePoly::power_of_linear(&spec.alpha, 1, field)?;
    let w = DensePoly::power_of_linear(&spec.beta, 1, field)?;
    let coeff = |j: u64| -> Result<FieldValue> {
        field.mul(&choose(n - d + j - 1, j, field)?, &choose(m - j - 1, d - j, field)?)
    };
    let mut acc = DensePoly::constant(coeff(d)?);
    let mut w_pow = DensePoly::constant(field.one());
    for j in (0..d).rev() {
        w_pow = w_pow.mul(&w, field)?;
        acc = acc.mul(&u, field)?.add(&w_pow.scale(&coeff(j)?, field)?, field)?;
    }
    Ok(acc)
}

/// The subresultant rebuilt from the shifted Jacobi polynomial:
/// `(alpha-beta)^((m-d)(n-d)) * K * shifted_jacobi` with
/// `K = prod_{i=1}^{d} i! (m+n-d-i-1)! / ((m-i)! (n-i)!)`, the factorials
/// taken one by one.
pub fn sres_via_jacobi(spec: &ProblemSpec, field: &Field) -> Result<DensePoly> {
    let (m, n, d) = (spec.m, spec.n, spec.d);
    let cleared = shifted_jacobi(spec, field)?;
    let mut k = field.one();
    for i in 1..=d {
        let num = field.mul(&factorial(i, field)?, &factorial(m + n - d - i - 1, field)?)?;
        let den = field.mul(&factorial(m - i, field)?, &factorial(n - i, field)?)?;
        k = field.mul(&k, &field.div(&num, &den)?)?;
    }
    let diff = field.sub(&spec.alpha, &spec.beta)?;
    let scale = field.mul(&k, &field.pow(&diff, (m - d) * (n - d))?)?;
    cleared.scale(&scale, field)
}

/// Terminating `2F1(a, b; c; x) = sum_{i=0}^{-a} (a)_i (b)_i / ((c)_i i!) x^i`.
pub fn hyp2f1_poly(a: i64, b: i64, c: i64, field: &Field) -> Result<DensePoly> {
    if a > 0 {
        return Err(Error::UnsupportedParameters(format!(
            "2F1 needs a <= 0 to terminate, got a = {a}"
        )));
    }
    let top = a.unsigned_abs();
    let mut coeffs = Vec::with_capacity(top as usize + 1);
    let mut term = field.one();
    coeffs.push(term.clone());
    for i in 0..top as i128 {
        let den_c = c as i128 + i;
        if den_c == 0 {
            return Err(Error::UnsupportedParameters(format!(
                "2F1 denominator (c)_{} vanishes for c = {c}",
                i + 1
            )));
        }
        let num = field.mul(&field.int(a as i128 + i), &field.int(b as i128 + i))?;
        let den = field.mul(&field.int_nonzero(den_c)?, &field.int_nonzero(i + 1)?)?;
        term = field.div(&field.mul(&term, &num)?, &den)?;
        coeffs.push(term.clone());
    }
    DensePoly::from_coeffs(field.descriptor(), coeffs)
}

/// Checks that `Sres_m(x^(m+n+1), (x-1)^k)` and its cofactor `G_m` of
/// `(x-1)^k` are `lambda * 2F1(-m, -k-n; -m-n; x)` and
/// `(-1)^k lambda * 2F1(-n, k-m; -m-n; x)`, with `lambda` read off the
/// `x^m` coefficient. The pair is `(x-0)^(m+n+1)`, `(x-1)^k` with `d = m`.
///
/// For `k = m` the index equals `deg g`; there the subresultant is `g`
/// itself with cofactors `(0, 1)`.
pub fn verify_pade_identity(m: u64, n: u64, k: u64, field: &Field) -> Result<bool> {
    if field.characteristic() != 0 {
        return Err(Error::UnsupportedParameters("Pade check runs over Q".into()));
    }
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::InvalidSpec("m, n, k must be positive".into()));
    }
    if k < m {
        return Err(Error::InvalidSpec(format!("Pade check needs k >= m, got k={k}, m={m}")));
    }
    let (sres, g_cof) = if k == m {
        (
            DensePoly::power_of_linear(&field.one(), k, field)?,
            DensePoly::constant(field.one()),
        )
    } else {
        let spec = ProblemSpec::new(m + n + 1, k, m, field.zero(), field.one())?;
        (sres_fast(&spec, field)?.to_poly()?, cofactors(&spec, field)?.g_cof)
    };

    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
    let numerator = hyp2f1_poly(-mi, -ki - ni, -mi - ni, field)?;
    let denominator = hyp2f1_poly(-ni, ki - mi, -mi - ni, field)?;
    let lambda = field.div(
        &sres.coeff(m as usize, field),
        &numerator.coeff(m as usize, field),
    )?;
    if lambda.is_zero() {
        return Ok(false);
    }
    let expect_g = denominator.scale(&field.signed(lambda.clone(), k)?, field)?;
    Ok(sres == numerator.scale(&lambda, field)? && g_cof == expect_g)
}

/// `(k+1)_r / r!`, the value of `P_r^{(k,l)}` at `x = 1`.
pub fn jacobi_value_at_one(params: JacobiParams, field: &Field) -> Result<FieldValue> {
    field.div(
        &pochhammer(&field.int(params.k as i128 + 1), params.r, field)?,
        &falling_product(params.r as i128, params.r, field)?,
    )
}
