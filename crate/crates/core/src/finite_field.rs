//! Arithmetic in GF(p^k).
//!
//! Elements are polynomials over Z_p reduced modulo a monic irreducible
//! polynomial of degree `k`, stored as coefficient vectors with the constant
//! term first. Multiplication, division and powers go through exp/log tables
//! built from the smallest primitive element.
//!
//! "Smallest" for both the modulus and the primitive element means smallest
//! in the integer encoding `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, i.e.
//! coefficient vectors compared from the highest degree down. This picks the
//! conventional moduli `x^3 + x + 1`, `x^4 + x + 1`, `x^2 + 1` over Z_3, and so on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};

/// Largest field order built unless a caller asks for more.
pub const DEFAULT_ORDER_LIMIT: u64 = 1 << 20;

/// An element of GF(p^k): `k` residues mod `p`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (deg, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (d, 1) => format!("x^{d}"),
                (d, c) => format!("{c}x^{d}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The serialized form of a field: `{"p":..,"k":..,"modulus":[..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

/// A finite field with precomputed exp/log tables.
///
/// Immutable once built; share it freely between threads.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FieldSpec", into = "FieldSpec")]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    primitive: u32,
    /// exp[i] is the encoded value of g^i for 0 <= i < q - 1.
    exp: Vec<u32>,
    /// log[x] is the exponent of encoded value x; log[0] is unused.
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl TryFrom<FieldSpec> for Field {
    type Error = Error;

    fn try_from(spec: FieldSpec) -> Result<Self> {
        if spec.modulus.len() != spec.k as usize + 1 {
            return Err(Error::NotIrreducible(spec.modulus));
        }
        Field::with_modulus(spec.p, spec.modulus)
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        FieldSpec {
            p: f.p,
            k: f.k,
            modulus: f.modulus,
        }
    }
}

fn checked_order(p: u64, k: u32, limit: u64) -> Result<u64> {
    match p.checked_pow(k) {
        Some(q) if q <= limit && q <= u32::MAX as u64 => Ok(q),
        _ => Err(Error::FieldTooLarge { p, k, limit }),
    }
}

impl Field {
    /// GF(p^k) with the default order limit.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        Self::with_limit(p, k, DEFAULT_ORDER_LIMIT)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, k) = crate::arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    pub fn with_limit(p: u64, k: u32, limit: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_order(p, k, limit)?;
        let modulus = (0..q)
            .map(|low| monic_from_index(p, k, low))
            .find(|f| is_irreducible(p, f))
            .expect("an irreducible polynomial exists in every degree");
        Ok(Self::build(p, k, q, modulus))
    }

    /// GF(p^k) represented modulo a caller-chosen monic irreducible polynomial
    /// (coefficients constant term first, leading 1 included).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(Error::NotIrreducible(modulus));
        }
        let k = (modulus.len() - 1) as u32;
        let q = checked_order(p, k, DEFAULT_ORDER_LIMIT)?;
        if !is_irreducible(p, &modulus) {
            return Err(Error::NotIrreducible(modulus));
        }
        Ok(Self::build(p, k, q, modulus))
    }

    fn build(p: u64, k: u32, q: u64, modulus: Vec<u64>) -> Field {
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let g = field.smallest_primitive_index();
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for i in 0..q - 1 {
            exp.push(cur);
            log[cur as usize] = i as u32;
            cur = field.slow_mul(cur, g);
        }
        debug_assert_eq!(cur, 1);
        field.primitive = g;
        field.exp = exp;
        field.log = log;
        field
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// The modulus, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    /// The primitive element the log tables are built from.
    pub fn primitive(&self) -> FieldElement {
        self.decode(self.primitive)
    }

    /// Smallest element of multiplicative order `q - 1`, found by testing
    /// `a^((q-1)/r) != 1` for each prime `r | q - 1` without the tables.
    pub fn find_primitive(&self) -> FieldElement {
        self.decode(self.smallest_primitive_index())
    }

    pub fn zero(&self) -> FieldElement {
        self.decode(0)
    }

    pub fn one(&self) -> FieldElement {
        self.decode(1)
    }

    /// Validates a coefficient vector as an element of this field.
    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ForeignElement(coeffs));
        }
        Ok(FieldElement { coeffs })
    }

    /// The element whose integer encoding is `value` (`c_0 + c_1 p + ...`).
    pub fn from_int(&self, value: u64) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::OutOfRange(format!(
                "{value} is not below the field order {}",
                self.q
            )));
        }
        Ok(self.decode(value as u32))
    }

    /// Integer encoding of an element.
    pub fn to_int(&self, a: &FieldElement) -> Result<u64> {
        self.encode(a).map(u64::from)
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u32).map(|v| self.decode(v))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.decode(self.add_raw(self.encode(a)?, self.encode(b)?)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.decode(self.sub_raw(self.encode(a)?, self.encode(b)?)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        Ok(self.decode(self.sub_raw(0, self.encode(a)?)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.decode(self.mul_raw(self.encode(a)?, self.encode(b)?)))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let (a, b) = (self.encode(a)?, self.encode(b)?);
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.decode(self.div_raw(a, b)))
    }

    /// `a^e`; negative exponents invert, `0^0 = 1`.
    pub fn pow(&self, a: &FieldElement, e: i64) -> Result<FieldElement> {
        let a = self.encode(a)?;
        if a == 0 {
            return match e {
                0 => Ok(self.one()),
                e if e > 0 => Ok(self.zero()),
                _ => Err(Error::DivisionByZero),
            };
        }
        Ok(self.decode(self.pow_raw(a, e)))
    }

    /// Logarithm to the table base [`Field::primitive`].
    pub fn discrete_log(&self, x: &FieldElement) -> Result<u64> {
        let x = self.encode(x)?;
        if x == 0 {
            return Err(Error::LogOfZero);
        }
        Ok(self.log[x as usize] as u64)
    }

    /// Logarithm of `x` to a primitive `base`.
    pub fn log_base(&self, base: &FieldElement, x: &FieldElement) -> Result<u64> {
        if !self.is_primitive(base)? {
            return Err(Error::NotPrimitive(base.coeffs.clone()));
        }
        let n = self.q - 1;
        let lb = self.discrete_log(base)?;
        let lx = self.discrete_log(x)?;
        let inv = crate::arith::ext_gcd(lb as i64, n as i64)
            .1
            .rem_euclid(n as i64) as u64;
        Ok((lx * inv) % n)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        let a = self.encode(a)?;
        if a == 0 {
            return Err(Error::LogOfZero);
        }
        let n = self.q - 1;
        let l = self.log[a as usize] as u64;
        Ok(n / crate::arith::gcd_u64(l, n))
    }

    pub fn is_primitive(&self, a: &FieldElement) -> Result<bool> {
        let v = self.encode(a)?;
        Ok(v != 0 && self.multiplicative_order(a)? == self.q - 1)
    }

    /// All primitive elements in increasing encoding order.
    pub fn primitive_elements(&self) -> Vec<FieldElement> {
        (1..self.q as u32)
            .filter(|&v| self.is_primitive_raw(v))
            .map(|v| self.decode(v))
            .collect()
    }

    // Encoded-value arithmetic, used by the constructions' inner loops.

    pub(crate) fn encode(&self, a: &FieldElement) -> Result<u32> {
        if a.coeffs.len() != self.k as usize || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::ForeignElement(a.coeffs.clone()));
        }
        Ok(a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u32)
    }

    pub(crate) fn decode(&self, mut v: u32) -> FieldElement {
        let mut coeffs = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            coeffs.push(v as u64 % self.p);
            v /= self.p as u32;
        }
        FieldElement { coeffs }
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[e as usize]
    }

    pub(crate) fn div_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 + n - self.log[b as usize] as u64) % n;
        self.exp[e as usize]
    }

    pub(crate) fn pow_raw(&self, a: u32, e: i64) -> u32 {
        let n = (self.q - 1) as i64;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        self.exp[l as usize]
    }

    /// `g^e` for the table base `g`.
    pub(crate) fn exp_raw(&self, e: u64) -> u32 {
        self.exp[(e % (self.q - 1)) as usize]
    }

    pub(crate) fn log_raw(&self, a: u32) -> u64 {
        debug_assert!(a != 0);
        self.log[a as usize] as u64
    }

    fn is_primitive_raw(&self, a: u32) -> bool {
        let n = self.q - 1;
        a != 0 && crate::arith::gcd_u64(self.log[a as usize] as u64, n) == 1
    }

    fn digitwise(&self, mut a: u32, mut b: u32, f: impl Fn(u64, u64) -> u64) -> u32 {
        let p = self.p as u32;
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.k {
            out += f((a % p) as u64, (b % p) as u64) as u32 * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    // Table-free arithmetic, used while the tables are being built.

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.decode(a), self.decode(b));
        let prod = poly_mulmod(self.p, &a.coeffs, &b.coeffs, &self.modulus);
        self.encode(&FieldElement { coeffs: prod }).unwrap()
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn smallest_primitive_index(&self) -> u32 {
        let n = self.q - 1;
        let maximal_divisors: Vec<u64> = prime_factors(n).into_iter().map(|r| n / r).collect();
        (1..self.q as u32)
            .find(|&a| maximal_divisors.iter().all(|&d| self.slow_pow(a, d) != 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

/// Monic degree-`k` polynomial whose lower coefficients encode `low`.
fn monic_from_index(p: u64, k: u32, mut low: u64) -> Vec<u64> {
    let mut f = Vec::with_capacity(k as usize + 1);
    for _ in 0..k {
        f.push(low % p);
        low /= p;
    }
    f.push(1);
    f
}

fn trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::ext_gcd(a as i64, p as i64)
        .1
        .rem_euclid(p as i64) as u64
}

/// Remainder of `a` modulo `m` over Z_p (`m` with nonzero leading coefficient).
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm && *r.last().unwrap() != 0 {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mc % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(p, &prod, m);
    r.resize(m.len() - 1, 0);
    r
}

/// Trial division by every monic polynomial of degree at most half of `f`'s.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let k = (f.len() - 1) as u32;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        for low in 0..p.pow(d) {
            let g = monic_from_index(p, d, low);
            let r = poly_rem(p, f, &g);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &Field, c: &[u64]) -> FieldElement {
        f.element(c.to_vec()).unwrap()
    }

    #[test]
    fn prime_field_seven() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
        let three = el(&f, &[3]);
        assert_eq!(f.multiplicative_order(&three).unwrap(), 6);
        assert_eq!(f.find_primitive(), three);
        assert_eq!(f.primitive(), three);
        assert_eq!(f.pow(&three, 3).unwrap(), el(&f, &[6]));
        assert_eq!(f.discrete_log(&el(&f, &[6])).unwrap(), 3);
        assert_eq!(f.discrete_log(&f.one()).unwrap(), 0);
        // 2 has order 3
        assert_eq!(f.multiplicative_order(&el(&f, &[2])).unwrap(), 3);
    }

    #[test]
    fn smallest_field() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.find_primitive(), f.one());
        assert_eq!(f.exp, vec![1]);
    }

    #[test]
    fn gf9_with_x2_plus_1() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let beta = el(&f, &[1, 1]);
        assert_eq!(f.find_primitive(), beta);
        // powers of x + 1 computed by hand with x^2 = -1
        let mut cur = f.one();
        let mut seen = Vec::new();
        for _ in 0..8 {
            cur = f.mul(&cur, &beta).unwrap();
            seen.push(cur.clone());
        }
        assert_eq!(seen[7], f.one());
        assert!(seen[..7].iter().all(|e| *e != f.one()));
        assert_eq!(f.pow(&beta, 4).unwrap(), el(&f, &[2, 0]));
        assert_eq!(f.discrete_log(&el(&f, &[2, 0])).unwrap(), 4);
        // x alone has order 4
        assert_eq!(f.multiplicative_order(&el(&f, &[0, 1])).unwrap(), 4);
    }

    #[test]
    fn conventional_binary_moduli() {
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(6, 1), Err(Error::NotPrime(6)));
        assert_eq!(Field::new(5, 0), Err(Error::ZeroDegree));
        assert!(matches!(
            Field::new(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(Field::with_limit(2, 21, 1 << 21).is_ok());
        // x^2 + 1 factors over Z_5 as (x + 2)(x + 3)
        assert!(matches!(
            Field::with_modulus(5, vec![1, 0, 1]),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn arithmetic_errors() {
        let f = Field::new(3, 2).unwrap();
        let a = el(&f, &[1, 2]);
        assert_eq!(f.div(&a, &f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.discrete_log(&f.zero()), Err(Error::LogOfZero));
        let foreign = FieldElement { coeffs: vec![1] };
        assert!(matches!(f.add(&a, &foreign), Err(Error::ForeignElement(_))));
        let foreign = FieldElement { coeffs: vec![3, 0] };
        assert!(matches!(f.mul(&a, &foreign), Err(Error::ForeignElement(_))));
        assert_eq!(f.pow(&f.zero(), -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn identities_and_inverses() {
        for (p, k) in [(2, 3), (3, 2), (5, 1), (7, 2)] {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.mul(&a, &f.one()).unwrap(), a);
                assert_eq!(f.add(&a, &f.neg(&a).unwrap()).unwrap(), f.zero());
                assert_eq!(f.sub(&f.add(&a, &a).unwrap(), &a).unwrap(), a);
                if !a.is_zero() {
                    let inv = f.div(&f.one(), &a).unwrap();
                    assert_eq!(f.mul(&a, &inv).unwrap(), f.one());
                    assert_eq!(f.pow(&a, -1).unwrap(), inv);
                }
            }
        }
    }

    #[test]
    fn table_multiplication_matches_polynomial_product() {
        for (p, k) in [(2, 1), (2, 4), (3, 3), (5, 2), (2, 6), (7, 2)] {
            let f = Field::new(p, k).unwrap();
            for a in 0..f.q as u32 {
                for b in 0..f.q as u32 {
                    assert_eq!(f.mul_raw(a, b), f.slow_mul(a, b), "GF({p}^{k}) {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn exp_table_is_a_homomorphism() {
        for (p, k) in [(2, 1), (2, 5), (3, 3), (5, 2), (7, 1), (2, 6)] {
            let f = Field::new(p, k).unwrap();
            let n = (f.q - 1) as usize;
            assert_eq!(f.exp[0], 1);
            let mut distinct = f.exp.clone();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(distinct.len(), n);
            for i in 0..n {
                assert_eq!(f.log[f.exp[i] as usize] as usize, i);
                for j in 0..n {
                    let lhs = f.slow_mul(f.exp[i], f.exp[j]);
                    assert_eq!(lhs, f.exp[(i + j) % n]);
                }
            }
        }
    }

    #[test]
    fn log_in_other_base() {
        let f = Field::new(7, 1).unwrap();
        let five = el(&f, &[5]);
        for x in 1..7 {
            let x = el(&f, &[x]);
            let l = f.log_base(&five, &x).unwrap();
            assert_eq!(f.pow(&five, l as i64).unwrap(), x);
        }
        assert!(matches!(
            f.log_base(&el(&f, &[2]), &f.one()),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn deterministic_and_serializable() {
        let a = Field::new(2, 8).unwrap();
        let b = Field::new(2, 8).unwrap();
        assert_eq!(a, b);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"p":2,"k":8,"modulus":[1,1,0,1,1,0,0,0,1]}"#);
        let back: Field = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        let e = el(&Field::new(3, 2).unwrap(), &[1, 2]);
        assert_eq!(serde_json::to_string(&e).unwrap(), "[1,2]");
        assert!(serde_json::from_str::<Field>(r#"{"p":5,"k":2,"modulus":[1,0,1]}"#).is_err());
    }

    #[test]
    fn display() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(el(&f, &[1, 1]).to_string(), "x + 1");
        assert_eq!(el(&f, &[0, 2]).to_string(), "2x");
        assert_eq!(f.zero().to_string(), "0");
    }
}
