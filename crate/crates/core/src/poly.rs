//! Dense univariate polynomials, the structured input pair, and the
//! determinant-definition subresultant oracle.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, FieldValue};

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(k) => Some(k),
        }
    }

    /// `self < bound` with minus infinity below every bound.
    pub fn below(self, bound: u64) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(k) => (k as u64) < bound,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(k) => write!(f, "{k}"),
        }
    }
}

/// Polynomial with coefficients in ascending degree order. The zero
/// polynomial is the empty list; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly {
    field: FieldDescriptor,
    coeffs: Vec<FieldValue>,
}

impl DensePoly {
    pub fn zero(field: FieldDescriptor) -> Self {
        DensePoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(field: FieldDescriptor, coeffs: Vec<FieldValue>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.descriptor() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: bad.descriptor(),
            });
        }
        let mut p = DensePoly { field, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn constant(c: FieldValue) -> Self {
        let field = c.descriptor();
        let mut p = DensePoly {
            field,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> Self {
        DensePoly {
            field: field.descriptor(),
            coeffs: vec![field.zero(), field.one()],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldValue::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldValue> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize, field: &Field) -> FieldValue {
        self.coeffs.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    /// Coefficients `c_0..c_{len-1}`, zero-padded.
    pub fn padded(&self, len: usize, field: &Field) -> Vec<FieldValue> {
        (0..len).map(|k| self.coeff(k, field)).collect()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldValue> {
        self.coeffs.last()
    }

    fn check(&self, field: &Field) -> Result<()> {
        if self.field != field.descriptor() {
            return Err(Error::FieldMismatch {
                expected: field.descriptor(),
                found: self.field,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DensePoly, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        other.check(field)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => field.add(a, b)?,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            });
        }
        DensePoly::from_coeffs(self.field, out)
    }

    pub fn neg(&self, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| field.neg(c))
            .collect::<Result<Vec<_>>>()?;
        DensePoly::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, other: &DensePoly, field: &Field) -> Result<DensePoly> {
        self.add(&other.neg(field)?, field)
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &DensePoly, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        other.check(field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(DensePoly::zero(self.field));
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = field.mul(a, b)?;
                out[i + j] = field.add(&out[i + j], &t)?;
            }
        }
        DensePoly::from_coeffs(self.field, out)
    }

    pub fn scale(&self, c: &FieldValue, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| field.mul(a, c))
            .collect::<Result<Vec<_>>>()?;
        DensePoly::from_coeffs(self.field, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &FieldValue, field: &Field) -> Result<FieldValue> {
        self.check(field)?;
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.mul(&acc, at)?;
            acc = field.add(&acc, c)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| field.mul(c, &field.int(k as i128)))
            .collect::<Result<Vec<_>>>()?;
        DensePoly::from_coeffs(self.field, coeffs)
    }

    /// Exact division by `x - root`; fails if `root` is not a root.
    pub fn div_linear(&self, root: &FieldValue, field: &Field) -> Result<DensePoly> {
        self.check(field)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        // Synthetic division from the top coefficient down.
        let n = self.coeffs.len();
        let mut quot = vec![field.zero(); n - 1];
        let mut carry = field.zero();
        for k in (0..n).rev() {
            let cur = field.add(&self.coeffs[k], &carry)?;
            if k == 0 {
                if !cur.is_zero() {
                    return Err(Error::InexactDivision);
                }
            } else {
                carry = field.mul(&cur, root)?;
                quot[k - 1] = cur;
            }
        }
        DensePoly::from_coeffs(self.field, quot)
    }

    /// `(x - alpha)^e` expanded through its binomial coefficients. The
    /// binomials are exact integers injected into the field, so this works in
    /// every characteristic.
    pub fn power_of_linear(alpha: &FieldValue, e: u64, field: &Field) -> Result<DensePoly> {
        let neg_alpha = field.neg(alpha)?;
        // coefficient of x^k is C(e, k) * (-alpha)^(e-k); walk k downwards.
        let mut coeffs = vec![field.zero(); e as usize + 1];
        let mut binom = BigInt::from(1);
        let mut power = field.one();
        for i in 0..=e {
            let k = (e - i) as usize;
            coeffs[k] = field.mul(&field.big(&binom), &power)?;
            if i < e {
                binom = binom * BigInt::from(e - i) / BigInt::from(i + 1);
                power = field.mul(&power, &neg_alpha)?;
            }
        }
        DensePoly::from_coeffs(field.descriptor(), coeffs)
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// The tuple `(m, n, d, alpha, beta)` describing `Sres_d((x-alpha)^m, (x-beta)^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub alpha: FieldValue,
    pub beta: FieldValue,
}

/// Degrees are capped so that products of two of them fit in a `u64`.
pub const MAX_DEGREE: u64 = u32::MAX as u64;

impl ProblemSpec {
    pub fn new(m: u64, n: u64, d: u64, alpha: FieldValue, beta: FieldValue) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidSpec("m and n must be positive".into()));
        }
        if m > MAX_DEGREE || n > MAX_DEGREE {
            return Err(Error::InvalidSpec(format!("degrees above {MAX_DEGREE}")));
        }
        if d >= m.min(n) {
            return Err(Error::InvalidSpec(format!(
                "need 0 <= d < min(m, n), got d={d}, m={m}, n={n}"
            )));
        }
        if alpha.descriptor() != beta.descriptor() {
            return Err(Error::FieldMismatch {
                expected: alpha.descriptor(),
                found: beta.descriptor(),
            });
        }
        Ok(ProblemSpec {
            m,
            n,
            d,
            alpha,
            beta,
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.alpha.descriptor()
    }

    pub fn min_degree(&self) -> u64 {
        self.m.min(self.n)
    }

    pub fn max_degree(&self) -> u64 {
        self.m.max(self.n)
    }

    /// `((x - alpha)^m, (x - beta)^n)`.
    pub fn pair(&self, field: &Field) -> Result<(DensePoly, DensePoly)> {
        Ok((
            DensePoly::power_of_linear(&self.alpha, self.m, field)?,
            DensePoly::power_of_linear(&self.beta, self.n, field)?,
        ))
    }
}

/// Rows of the subresultant matrix: `x^{n-d-1} f, ..., f, x^{m-d-1} g, ..., g`,
/// each as `(source coefficients, shift)`.
fn matrix_rows<'a>(
    f: &'a [FieldValue],
    g: &'a [FieldValue],
    d: usize,
) -> Vec<(&'a [FieldValue], usize)> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let mut rows = Vec::with_capacity(m + n - 2 * d);
    for i in 0..n - d {
        rows.push((f, n - d - 1 - i));
    }
    for i in 0..m - d {
        rows.push((g, m - d - 1 - i));
    }
    rows
}

/// Coefficient of `x^j` in `x^shift * p`, with `p_l = 0` for `l < 0`.
fn shifted_coeff(p: &[FieldValue], shift: usize, j: usize, field: &Field) -> FieldValue {
    j.checked_sub(shift)
        .and_then(|l| p.get(l))
        .cloned()
        .unwrap_or_else(|| field.zero())
}

fn validate_pair(f: &DensePoly, g: &DensePoly, d: u64, field: &Field) -> Result<(usize, usize)> {
    f.check(field)?;
    g.check(field)?;
    let (Some(m), Some(n)) = (f.degree().finite(), g.degree().finite()) else {
        return Err(Error::InvalidSpec("input polynomials must be nonzero".into()));
    };
    if m == 0 || n == 0 {
        return Err(Error::InvalidSpec("input degrees must be at least 1".into()));
    }
    if d as usize >= m.min(n) {
        return Err(Error::InvalidSpec(format!(
            "need 0 <= d < min(deg f, deg g), got d={d}, degrees {m}, {n}"
        )));
    }
    Ok((m, n))
}

/// `Sres_d(f, g)` straight from the determinant definition.
///
/// The polynomial last column is expanded by multilinearity: the coefficient
/// of `x^k` is the determinant of the matrix whose last column holds the
/// `x^k` coefficients of the row polynomials.
pub fn sres_oracle(f: &DensePoly, g: &DensePoly, d: u64, field: &Field) -> Result<DensePoly> {
    validate_pair(f, g, d, field)?;
    sres_by_minors(f, g, d as usize, field)
}

/// Same construction, but allowing `d = min(deg f, deg g) < max(deg f, deg g)`
/// (the matrix still exists: one block has no rows).
pub(crate) fn sres_by_minors(
    f: &DensePoly,
    g: &DensePoly,
    d: usize,
    field: &Field,
) -> Result<DensePoly> {
    let (fc, gc) = (f.coeffs(), g.coeffs());
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    debug_assert!(d <= m.min(n) && d < m.max(n));
    let size = m + n - 2 * d;
    let top = m + n - d - 1;
    let rows = matrix_rows(fc, gc, d);
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let matrix: Vec<Vec<FieldValue>> = rows
            .iter()
            .map(|&(p, shift)| {
                let mut row: Vec<FieldValue> = (0..size - 1)
                    .map(|c| shifted_coeff(p, shift, top - c, field))
                    .collect();
                row.push(shifted_coeff(p, shift, k, field));
                row
            })
            .collect();
        out.push(determinant(matrix, field)?);
    }
    DensePoly::from_coeffs(field.descriptor(), out)
}

/// `PSres_d(f, g)`: the minor on the columns of `x^{m+n-d-1}, ..., x^d`.
pub fn psres_oracle(f: &DensePoly, g: &DensePoly, d: u64, field: &Field) -> Result<FieldValue> {
    let (m, n) = validate_pair(f, g, d, field)?;
    let d = d as usize;
    let size = m + n - 2 * d;
    let top = m + n - d - 1;
    let matrix: Vec<Vec<FieldValue>> = matrix_rows(f.coeffs(), g.coeffs(), d)
        .iter()
        .map(|&(p, shift)| {
            (0..size)
                .map(|c| shifted_coeff(p, shift, top - c, field))
                .collect()
        })
        .collect();
    determinant(matrix, field)
}

/// Determinant by fraction-based Gaussian elimination. The pivot is the
/// first nonzero entry of the column, scanning rows from the top.
pub fn determinant(mut a: Vec<Vec<FieldValue>>, field: &Field) -> Result<FieldValue> {
    let size = a.len();
    if a.iter().any(|row| row.len() != size) {
        return Err(Error::InvalidSpec("determinant of a non-square matrix".into()));
    }
    let mut det = field.one();
    let mut negate = false;
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return Ok(field.zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            negate = !negate;
        }
        let (upper, lower) = a.split_at_mut(col + 1);
        let prow = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = field.div(&row[col], &prow[col])?;
            for c in col + 1..size {
                let t = field.mul(&factor, &prow[c])?;
                row[c] = field.sub(&row[c], &t)?;
            }
            row[col] = field.zero();
        }
        det = field.mul(&det, &prow[col])?;
    }
    if negate {
        det = field.neg(&det)?;
    }
    Ok(det)
}
