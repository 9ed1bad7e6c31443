//! Exact arithmetic in GF(p) and GF(p^s).
//!
//! Nonzero elements of GF(p^s) are handled as discrete logarithms with respect
//! to a fixed primitive element `alpha`; zero is a distinguished marker.
//! Multiplication and inversion are index arithmetic, addition goes through
//! the antilog/log tables. Extension-field elements are also available in
//! "vector" form: the integer whose base-p digits are the coefficients of the
//! polynomial-basis representation (digit i = coefficient of x^i).

use std::fmt;

use crate::error::{Error, Result};
use crate::modp;

/// Upper bound on p^s (size of the log/antilog tables).
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Primitive polynomials over GF(2) for s = 1..=16 as bit masks, leading term included.
const BINARY_PRIMITIVE: [u32; 17] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x89, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x4443,
    0x8003, 0x1100b,
];

#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    s: u32,
    order: u32,
    /// Monic primitive polynomial, lowest degree first (length s + 1).
    modulus: Vec<u32>,
    /// log index -> vector form
    antilog: Vec<u32>,
    /// vector form -> log index; entry 0 is unused
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("modulus", &self.primitive_polynomial().to_string())
            .finish()
    }
}

impl FieldSpec {
    /// Builds GF(p^s) from the built-in primitive polynomial table (p = 2, s <= 16)
    /// or, outside the table, from the lexicographically first primitive polynomial.
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !modp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = checked_order(p, s)?;
        if p == 2 && (s as usize) < BINARY_PRIMITIVE.len() {
            let mask = BINARY_PRIMITIVE[s as usize];
            let modulus = (0..=s).map(|i| (mask >> i) & 1).collect();
            return Self::with_modulus(p, modulus).map(|f| {
                debug_assert_eq!(f.order, order);
                f
            });
        }
        // search monic polynomials of degree s with nonzero constant term
        let total = (order as u64) * p as u64;
        for code in order as u64..total {
            let mut digits = to_digits(code, p, s as usize + 1);
            digits[s as usize] = 1;
            if digits[0] == 0 {
                continue;
            }
            if let Ok(f) = Self::with_modulus(p, digits) {
                return Ok(f);
            }
        }
        Err(Error::NoPrimitivePolynomial { p, s })
    }

    /// Builds GF(p^s) from an explicit monic polynomial (coefficients lowest first).
    /// Fails unless the polynomial is primitive.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !modp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let s = modulus.len().saturating_sub(1) as u32;
        if s == 0 || modulus[s as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::NoPrimitivePolynomial { p, s });
        }
        let order = checked_order(p, s)?;
        let group = (order - 1) as usize;
        let mut antilog = Vec::with_capacity(group);
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = vec![0u32; s as usize];
        cur[0] = 1;
        for i in 0..group {
            let v = from_digits(&cur, p);
            if log[v as usize] != u32::MAX {
                // x has order < p^s - 1
                return Err(Error::NoPrimitivePolynomial { p, s });
            }
            log[v as usize] = i as u32;
            antilog.push(v);
            // multiply by x modulo the polynomial
            let lead = cur[s as usize - 1];
            for j in (1..s as usize).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if lead != 0 {
                for (j, c) in cur.iter_mut().enumerate() {
                    *c = modp::sub(*c, modp::mul(lead, modulus[j], p), p);
                }
            }
        }
        if from_digits(&cur, p) != 1 {
            return Err(Error::NoPrimitivePolynomial { p, s });
        }
        Ok(Self { p, s, order, modulus, antilog, log })
    }

    /// Smallest extension of GF(p) that contains the n-th roots of unity.
    pub fn for_length(p: u32, n: u32) -> Result<Self> {
        let s = splitting_degree(p, n)?;
        Self::new(p, s)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    /// Number of elements, p^s.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the multiplicative group, p^s - 1.
    pub fn group_order(&self) -> u32 {
        self.order - 1
    }

    pub fn primitive_polynomial(&self) -> BasePolynomial {
        BasePolynomial::new(self.p, self.modulus.clone())
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, log: None }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, log: Some(0) }
    }

    /// The primitive element, a root of the primitive polynomial.
    pub fn alpha(&self) -> FieldElement<'_> {
        self.alpha_pow(1)
    }

    pub fn alpha_pow(&self, e: i64) -> FieldElement<'_> {
        let g = self.group_order() as i64;
        FieldElement { field: self, log: Some(e.rem_euclid(g) as u32) }
    }

    /// Element from its vector form.
    pub fn from_vector(&self, v: u32) -> Result<FieldElement<'_>> {
        if v >= self.order {
            return Err(Error::Dimension(format!("{v} is not an element of GF({})", self.order)));
        }
        Ok(FieldElement { field: self, log: (v != 0).then(|| self.log[v as usize]) })
    }

    /// Embeds an element of the prime field.
    pub fn from_prime(&self, c: u32) -> FieldElement<'_> {
        self.from_vector(c % self.p).expect("prime field constant")
    }

    fn vec_add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        while a != 0 || b != 0 {
            out += modp::add(a % self.p, b % self.p, self.p) * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn vec_neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut place) = (0u32, 1u32);
        while a != 0 {
            out += modp::neg(a % self.p, self.p) * place;
            a /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }
}

fn checked_order(p: u32, s: u32) -> Result<u32> {
    let order = (p as u64).checked_pow(s).filter(|&o| o <= MAX_FIELD_ORDER);
    match order {
        Some(o) if s >= 1 => Ok(o as u32),
        _ => Err(Error::FieldTooLarge { p, s }),
    }
}

/// Smallest s with n | p^s - 1, subject to the table budget.
pub fn splitting_degree(p: u32, n: u32) -> Result<u32> {
    if n == 0 || n % p == 0 {
        return Err(Error::NotCoprime { n, q: p });
    }
    let mut acc = p as u64 % n as u64;
    let mut s = 1u32;
    while acc != 1 % n as u64 {
        acc = acc * p as u64 % n as u64;
        s += 1;
        if (p as u64).checked_pow(s).is_none_or(|o| o > MAX_FIELD_ORDER) {
            return Err(Error::FieldTooLarge { p, s });
        }
    }
    checked_order(p, s)?;
    Ok(s)
}

fn to_digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

/// An element of a [`FieldSpec`], tied to it by reference.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    log: Option<u32>,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.log == other.log
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log {
            None => write!(f, "0"),
            Some(0) => write!(f, "1"),
            Some(i) => write!(f, "a^{i}"),
        }
    }
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.log.is_none()
    }

    /// Discrete log with respect to alpha; `None` for zero.
    pub fn log(&self) -> Option<u32> {
        self.log
    }

    pub fn to_vector(&self) -> u32 {
        self.log.map_or(0, |i| self.field.antilog[i as usize])
    }

    /// The value as a prime-field element, if it lies in GF(p).
    pub fn to_prime(&self) -> Option<u32> {
        let v = self.to_vector();
        (v < self.field.p).then_some(v)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        let v = self.field.vec_add(self.to_vector(), other.to_vector());
        self.field.from_vector(v)
    }

    pub fn neg(self) -> Self {
        let v = self.field.vec_neg(self.to_vector());
        self.field.from_vector(v).expect("negation stays in the field")
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        self.add(other.neg())
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        let log = match (self.log, other.log) {
            (Some(a), Some(b)) => Some(((a as u64 + b as u64) % self.field.group_order() as u64) as u32),
            _ => None,
        };
        Ok(Self { field: self.field, log })
    }

    pub fn inv(self) -> Result<Self> {
        let g = self.field.group_order();
        match self.log {
            None => Err(Error::ZeroInverse),
            Some(i) => Ok(Self { field: self.field, log: Some((g - i) % g) }),
        }
    }

    /// `self^e`; negative exponents require a nonzero base.
    pub fn pow(self, e: i64) -> Result<Self> {
        match self.log {
            None if e > 0 => Ok(self),
            None if e == 0 => Ok(self.field.one()),
            None => Err(Error::ZeroInverse),
            Some(i) => {
                let g = self.field.group_order() as i128;
                let l = (i as i128 * e as i128).rem_euclid(g);
                Ok(Self { field: self.field, log: Some(l as u32) })
            }
        }
    }
}

/// Polynomial over the prime field GF(p), lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasePolynomial {
    p: u32,
    coeffs: Vec<u32>,
}

impl BasePolynomial {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self { p, coeffs: vec![1] }
    }

    /// x^n - 1
    pub fn x_n_minus_one(p: u32, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = p - 1;
        c[n] = 1;
        Self::new(p, c)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = modp::add(out[i + j], modp::mul(a, b, p), p);
            }
        }
        Self::new(p, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = modp::inv(divisor.coeffs[dd], p).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = modp::mul(rem[i], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = modp::sub(rem[k], modp::mul(c, d, p), p);
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }
}

impl fmt::Display for BasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial over GF(p) of the n-th roots of unity indexed by one cyclotomic coset:
/// the product of (x - beta^j) over the coset, with beta = alpha^((p^s - 1) / n).
pub fn minimal_polynomial(coset: &[u32], field: &FieldSpec, n: u32) -> Result<BasePolynomial> {
    let p = field.characteristic();
    let group = field.group_order();
    if n == 0 || group % n != 0 {
        return Err(Error::LengthDoesNotDivide { n, order: group });
    }
    let first = *coset.first().ok_or(Error::NotACoset { n })?;
    let expected = crate::cyclic::cyclotomic_coset(first, n, p)?;
    let mut given: Vec<u32> = coset.iter().map(|&j| j % n).collect();
    given.sort_unstable();
    given.dedup();
    if given != expected {
        return Err(Error::NotACoset { n });
    }
    let step = (group / n) as i64;
    // coefficients in GF(p^s), lowest degree first
    let mut acc = vec![field.one()];
    for &j in &expected {
        let root = field.alpha_pow(step * j as i64);
        let mut next = vec![field.zero(); acc.len() + 1];
        for (i, &a) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].add(a)?;
            next[i] = next[i].sub(a.mul(root)?)?;
        }
        acc = next;
    }
    let coeffs = acc
        .iter()
        .map(|c| {
            c.to_prime()
                .ok_or_else(|| Error::Internal("minimal polynomial coefficient outside GF(p)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasePolynomial::new(p, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook multiplication of GF(2)[x] bit masks reduced mod `modulus`.
    fn clmul_mod(a: u32, b: u32, modulus: u32, s: u32) -> u32 {
        let mut acc = 0u64;
        for i in 0..32 {
            if (b >> i) & 1 == 1 {
                acc ^= (a as u64) << i;
            }
        }
        for bit in (s..64).rev() {
            if (acc >> bit) & 1 == 1 {
                acc ^= (modulus as u64) << (bit - s);
            }
        }
        acc as u32
    }

    #[test]
    fn gf2_is_trivial() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.alpha(), f.one());
        assert_eq!(f.one().add(f.one()).unwrap(), f.zero());
    }

    #[test]
    fn gf8_alpha_cubed() {
        let f = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f.primitive_polynomial().to_string(), "x^3 + x + 1");
        // alpha = 0b010; alpha^3 by direct polynomial multiplication
        let a3 = clmul_mod(clmul_mod(0b10, 0b10, 0b1011, 3), 0b10, 0b1011, 3);
        assert_eq!(a3, 0b011);
        assert_eq!(f.alpha_pow(3).to_vector(), a3);
        assert_eq!(f.alpha_pow(3), f.alpha().add(f.one()).unwrap());
    }

    #[test]
    fn gf128_alpha_has_order_127() {
        let f = FieldSpec::new(2, 7).unwrap();
        assert_eq!(f.primitive_polynomial().to_string(), "x^7 + x^3 + 1");
        let a = f.alpha();
        assert_eq!(a.pow(127).unwrap(), f.one());
        // 127 is prime: the only proper divisor is 1
        assert_ne!(a.pow(1).unwrap(), f.one());
        // independent check: iterate multiplication by x on the bit masks
        let mut v = 1u32;
        for k in 1..=127 {
            v = clmul_mod(v, 0b10, 0x89, 7);
            assert_eq!(v == 1, k == 127);
        }
    }

    #[test]
    fn table_entries_are_primitive() {
        for s in 1..=16 {
            let f = FieldSpec::new(2, s).unwrap();
            assert_eq!(f.order(), 1 << s);
            for (i, &v) in f.antilog.iter().enumerate() {
                assert_eq!(f.log[v as usize] as usize, i);
            }
        }
        assert_eq!(FieldSpec::new(2, 8).unwrap().primitive_polynomial().to_string(), "x^8 + x^4 + x^3 + x^2 + 1");
    }

    #[test]
    fn searched_fields() {
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        let f = FieldSpec::new(2, 17).unwrap();
        assert_eq!(f.group_order(), (1 << 17) - 1);
        assert!(matches!(FieldSpec::new(2, 21), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldSpec::new(4, 2), Err(Error::NotPrime(4))));
        assert!(FieldSpec::with_modulus(2, vec![1, 1, 1, 1, 1]).is_err()); // x^4+x^3+x^2+x+1 has order 5
    }

    #[test]
    fn gf8_operations() {
        let f = FieldSpec::new(2, 3).unwrap();
        let a = f.alpha();
        assert_eq!(a.mul(f.alpha_pow(6)).unwrap(), f.one());
        assert_eq!(a.add(f.alpha_pow(2)).unwrap(), f.alpha_pow(4));
        for i in 0..7 {
            let x = f.alpha_pow(i);
            assert_eq!(x.add(f.zero()).unwrap(), x);
            assert_eq!(x.mul(x.inv().unwrap()).unwrap(), f.one());
        }
        assert_eq!(f.zero().inv(), Err(Error::ZeroInverse));
        let g = FieldSpec::new(2, 4).unwrap();
        assert_eq!(f.one().add(g.one()), Err(Error::MixedFields));
        assert_eq!(f.one().mul(g.one()), Err(Error::MixedFields));
    }

    #[test]
    fn odd_characteristic_axioms() {
        let f = FieldSpec::new(3, 3).unwrap();
        for a in 0..27 {
            let x = f.from_vector(a).unwrap();
            assert_eq!(x.add(x.neg()).unwrap(), f.zero());
            for b in 0..27 {
                let y = f.from_vector(b).unwrap();
                assert_eq!(x.add(y).unwrap(), y.add(x).unwrap());
                assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
                for c in [0u32, 1, 5, 13, 26] {
                    let z = f.from_vector(c).unwrap();
                    let lhs = x.mul(y.add(z).unwrap()).unwrap();
                    let rhs = x.mul(y).unwrap().add(x.mul(z).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn minimal_polynomials_n7() {
        let f = FieldSpec::new(2, 3).unwrap();
        // expansion oracle: multiply out the linear factors with bit-mask arithmetic
        let expand = |roots: &[u32]| {
            let mut poly: Vec<u32> = vec![1];
            for &r in roots {
                let root = f.alpha_pow(r as i64).to_vector();
                let mut next = vec![0u32; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + 1] ^= c;
                    next[i] ^= clmul_mod(c, root, 0b1011, 3);
                }
                poly = next;
            }
            poly
        };
        let m1 = minimal_polynomial(&[1, 2, 4], &f, 7).unwrap();
        assert_eq!(m1.coefficients(), expand(&[1, 2, 4]).as_slice());
        assert_eq!(m1.to_string(), "x^3 + x + 1");
        let m3 = minimal_polynomial(&[3, 6, 5], &f, 7).unwrap();
        assert_eq!(m3.coefficients(), expand(&[3, 5, 6]).as_slice());
        assert_eq!(m3.to_string(), "x^3 + x^2 + 1");
        assert_eq!(minimal_polynomial(&[0], &f, 7).unwrap().coefficients(), &[1, 1]);
    }

    #[test]
    fn minimal_polynomial_errors() {
        let f = FieldSpec::new(2, 3).unwrap();
        assert!(matches!(minimal_polynomial(&[1, 2], &f, 7), Err(Error::NotACoset { .. })));
        assert!(matches!(minimal_polynomial(&[1, 2, 4], &f, 5), Err(Error::LengthDoesNotDivide { .. })));
    }

    #[test]
    fn product_of_minimal_polynomials_is_x_n_minus_1() {
        for (p, n) in [(2u32, 7u32), (2, 15), (2, 21), (2, 31), (2, 63), (2, 127), (2, 255), (3, 8), (3, 13), (5, 12)] {
            let f = FieldSpec::for_length(p, n).unwrap();
            let mut acc = BasePolynomial::one(p);
            for rep in crate::cyclic::coset_representatives(n, p).unwrap() {
                let coset = crate::cyclic::cyclotomic_coset(rep, n, p).unwrap();
                let m = minimal_polynomial(&coset, &f, n).unwrap();
                assert_eq!(m.degree(), Some(coset.len()));
                assert!(m.is_monic());
                acc = acc.mul(&m);
            }
            assert_eq!(acc, BasePolynomial::x_n_minus_one(p, n as usize), "p={p} n={n}");
        }
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(2, 63).unwrap(), 6);
        assert_eq!(splitting_degree(2, 21).unwrap(), 6);
        assert_eq!(splitting_degree(2, 127).unwrap(), 7);
        assert_eq!(splitting_degree(2, 1).unwrap(), 1);
        assert!(splitting_degree(2, 10).is_err());
    }

    #[test]
    fn polynomial_division() {
        let g = BasePolynomial::new(2, vec![1, 1, 0, 1]);
        let x7 = BasePolynomial::x_n_minus_one(2, 7);
        let (q, r) = x7.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q.mul(&g), x7);
        assert!(g.divides(&x7));
    }
}
