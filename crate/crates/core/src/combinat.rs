//! Binomials, rising factorials and falling products as field elements,
//! with operation counts linear in the shorter product.

use crate::error::{Error, Result};
use crate::field::{Field, FieldValue};

/// Image of `C(k + l, k)` using the shorter of `(k+l)...(k+1)/l!` and
/// `(k+l)...(l+1)/k!`. Each step multiplies in one numerator factor and
/// divides by the step index, so at most `2*min(k, l)` field operations run.
///
/// Requires characteristic 0 or above `min(k, l)`.
pub fn binomial(k: u64, l: u64, field: &Field) -> Result<FieldValue> {
    let short = k.min(l);
    let long = k.max(l);
    let p = field.characteristic();
    if p != 0 && p <= short {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            requirement: format!("binomial C({}, {short}) needs char > {short}", k + l),
        });
    }
    let mut acc = field.one();
    for i in 1..=short {
        let top = field.int(long as i128 + i as i128);
        acc = field.mul(&acc, &top)?;
        acc = field.div(&acc, &field.int_nonzero(i as i128)?)?;
    }
    Ok(acc)
}

/// `C(top, bottom)` with the usual convention of zero outside `0..=top`.
pub fn choose(top: u64, bottom: u64, field: &Field) -> Result<FieldValue> {
    if bottom > top {
        return Ok(field.zero());
    }
    binomial(bottom, top - bottom, field)
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, with `(a)_0 = 1`.
/// Uses `j - 1` multiplications and `j - 1` additions.
pub fn pochhammer(a: &FieldValue, j: u64, field: &Field) -> Result<FieldValue> {
    if j == 0 {
        return Ok(field.one());
    }
    let one = field.one();
    let mut term = a.clone();
    let mut acc = a.clone();
    for _ in 1..j {
        term = field.add(&term, &one)?;
        acc = field.mul(&acc, &term)?;
    }
    Ok(acc)
}

/// `top (top-1) ... (top-count+1)`. Over `Z/pZ` a factor divisible by `p` is
/// an error, since callers use the result as a divisor.
pub fn falling_product(top: i128, count: u64, field: &Field) -> Result<FieldValue> {
    let mut acc = field.one();
    for i in 0..count as i128 {
        let factor = top - i;
        let v = if field.characteristic() == 0 {
            field.int(factor)
        } else {
            field.int_nonzero(factor)?
        };
        acc = field.mul(&acc, &v)?;
    }
    Ok(acc)
}

/// `N!` in the field; requires characteristic 0 or above `N`.
pub fn factorial(n: u64, field: &Field) -> Result<FieldValue> {
    falling_product(n as i128, n, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact integer binomial by Pascal's rule, independent of the field path.
    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        let q = Field::rationals();
        assert_eq!(binomial(2, 3, &q).unwrap(), q.int(10));
        assert_eq!(binomial(0, 9, &q).unwrap(), q.one());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(binomial(4, 4, &f7).unwrap(), f7.zero());
    }

    #[test]
    fn binomial_rejects_small_characteristic() {
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            binomial(3, 5, &f3),
            Err(Error::CharacteristicTooSmall { .. })
        ));
        assert_eq!(binomial(2, 5, &f3).unwrap(), f3.int(21));
    }

    #[test]
    fn binomial_matches_pascal_and_is_symmetric() {
        let rows = pascal(120);
        let q = Field::rationals();
        let f = Field::prime(101).unwrap();
        for k in 0..60u64 {
            for l in 0..60u64 {
                let exact = rows[(k + l) as usize][k as usize];
                assert_eq!(binomial(k, l, &q).unwrap(), q.int(exact as i128));
                assert_eq!(binomial(k, l, &f).unwrap(), f.int((exact % 101) as i128));
                assert_eq!(binomial(k, l, &q).unwrap(), binomial(l, k, &q).unwrap());
            }
        }
    }

    #[test]
    fn pascal_identity_in_prime_field() {
        let f = Field::prime(13).unwrap();
        for k in 1..12u64 {
            for l in 1..12u64 {
                let lhs = binomial(k, l, &f).unwrap();
                let rhs = f
                    .add(&binomial(k - 1, l, &f).unwrap(), &binomial(k, l - 1, &f).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn binomial_cost_is_linear_in_shorter_side() {
        for k in 0..=64u64 {
            for l in 0..=64u64 {
                let f = Field::prime(10007).unwrap();
                binomial(k, l, &f).unwrap();
                assert!(f.counter().total() <= 4 * k.min(l) + 2, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        let q = Field::rationals();
        assert_eq!(pochhammer(&q.one(), 4, &q).unwrap(), q.int(24));
        assert_eq!(pochhammer(&q.int(-3), 5, &q).unwrap(), q.zero());
        assert_eq!(pochhammer(&q.int(7), 0, &q).unwrap(), q.one());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(pochhammer(&f5.int(2), 3, &f5).unwrap(), f5.int(4));
        let f = Field::rationals();
        pochhammer(&f.int(2), 6, &f).unwrap();
        assert_eq!((f.counter().muls, f.counter().adds), (5, 5));
    }

    #[test]
    fn falling_product_examples() {
        let q = Field::rationals();
        assert_eq!(falling_product(5, 2, &q).unwrap(), q.int(20));
        assert_eq!(falling_product(5, 0, &q).unwrap(), q.one());
        let f11 = Field::prime(11).unwrap();
        assert_eq!(falling_product(6, 3, &f11).unwrap(), f11.int(10));
        assert!(falling_product(12, 3, &f11).is_err());
        assert_eq!(factorial(5, &q).unwrap(), q.int(120));
    }
}
