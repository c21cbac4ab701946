//! Finite fields GF(p^m) in a polynomial basis.
//!
//! Elements are identified with their canonical integer encoding
//! `e = c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, where `c_i` are the coefficients
//! of the residue polynomial modulo the field's defining polynomial. The
//! [`Field`] handle exposes fast arithmetic on raw `u32` encodings for the
//! enumeration kernels; [`FieldElement`] wraps an encoding together with its
//! field and refuses mixed-field arithmetic.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 24;

/// Odd extension fields up to this order get a precomputed addition table.
const ADD_TABLE_MAX: u32 = 1024;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

impl SquareClass {
    /// Class of a product, given the classes of the factors.
    pub fn mul(self, other: SquareClass) -> SquareClass {
        use SquareClass::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (a, b) if a == b => Square,
            _ => NonSquare,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareClass::Zero => "zero",
            SquareClass::Square => "square",
            SquareClass::NonSquare => "non-square",
        })
    }
}

struct Inner {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for a primitive element g, i in 0..order-1
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    // least square root, or NONE
    sqrt: Vec<u32>,
    // characteristic 2 only: least y with y^2 + y = x, or NONE
    wp_preimage: Vec<u32>,
}

/// A finite field GF(p^m). Cheap to clone; all clones share tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; mod={:?})", self.0.p, self.0.m, self.0.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// --- polynomials over GF(p), little-endian, trimmed -------------------------

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    // b is monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                let t = (lead * c as u64) % p as u64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p as u64 - t) % p as u64) as u32;
            }
        }
        r.pop();
    }
    trim(r)
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, modulus, p)
}

fn digits(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(code % p);
        code /= p;
    }
    trim(d)
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        // all monic polynomials of degree d
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut div = digits(low as u32, p, d as u32);
            div.resize(d, 0);
            div.push(1);
            if poly_rem(modulus, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `m`, comparing
/// `(c_0, ..., c_{m-1})` with `c_0` most significant.
fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(m);
    for idx in 0..count {
        let mut rest = idx;
        let mut coeffs = vec![0u32; m as usize + 1];
        for i in (0..m as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[m as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(p^m). Without an explicit modulus the lexicographically least
    /// monic irreducible polynomial of degree `m` is used.
    pub fn new(p: u64, m: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        let order = p
            .checked_pow(m)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(m)))?;
        let p = p as u32;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c.last() != Some(&1) {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        found: trim(c.clone()).len().saturating_sub(1),
                    });
                }
                if let Some(&bad) = c.iter().find(|&&x| x >= p) {
                    return Err(Error::BadCoefficient(bad));
                }
                if !is_irreducible(&c, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                c
            }
            None => default_modulus(p, m),
        };
        Ok(Field(Arc::new(build(p, m, order as u32, modulus))))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(q) with the default modulus.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, m, None)
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_char2(&self) -> bool {
        self.0.p == 2
    }

    /// Spec string that reconstructs this field, e.g. `p=3,m=2,mod=1,0,1`.
    pub fn spec_string(&self) -> String {
        let modulus: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("p={},m={},mod={}", self.0.p, self.0.m, modulus.join(","))
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        self.check(code)?;
        Ok(FieldElement {
            field: self.clone(),
            code: code as u32,
        })
    }

    pub fn check(&self, code: u64) -> Result<u32> {
        if code < self.0.order as u64 {
            Ok(code as u32)
        } else {
            Err(Error::ElementOutOfRange {
                value: code,
                order: self.0.order,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.0.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.m == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if inner.p == 2 {
            a ^ b
        } else if let Some(t) = &inner.add_table {
            t[(a * inner.order + b) as usize]
        } else {
            let (p, mut a, mut b) = (inner.p, a, b);
            let (mut r, mut place) = (0, 1);
            for _ in 0..inner.m {
                r += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            r
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 {
            a
        } else if inner.m == 1 {
            if a == 0 {
                0
            } else {
                inner.p - a
            }
        } else {
            let (p, mut a) = (inner.p, a);
            let (mut r, mut place) = (0, 1);
            for _ in 0..inner.m {
                r += ((p - a % p) % p) * place;
                a /= p;
                place *= p;
            }
            r
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        let n = inner.order - 1;
        let mut e = inner.log[a as usize] + inner.log[b as usize];
        if e >= n {
            e -= n;
        }
        inner.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let n = inner.order - 1;
        Ok(inner.exp[((n - inner.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.0;
        let n = (inner.order - 1) as u64;
        let k = (inner.log[a as usize] as u64 * (e % n)) % n;
        inner.exp[k as usize]
    }

    /// Decided by Euler's criterion in odd characteristic; every nonzero
    /// element of a field of characteristic 2 is a square.
    pub fn square_class(&self, a: u32) -> SquareClass {
        if a == 0 {
            SquareClass::Zero
        } else if self.is_char2() || self.pow(a, (self.order() as u64 - 1) / 2) == 1 {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }
    }

    /// Least square root, if any.
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        let r = self.0.sqrt[a as usize];
        (r != NONE).then_some(r)
    }

    /// Least nonzero non-square.
    pub fn nonsquare_witness(&self) -> Result<u32> {
        if self.is_char2() {
            return Err(Error::NoNonSquare);
        }
        Ok(self
            .elements()
            .find(|&x| self.square_class(x) == SquareClass::NonSquare)
            .expect("odd-characteristic fields have non-squares"))
    }

    /// `x ↦ x² + x`.
    pub fn artin_schreier(&self, x: u32) -> u32 {
        self.add(self.mul(x, x), x)
    }

    /// Whether `x` lies in the image of the Artin–Schreier map.
    pub fn in_wp_image(&self, x: u32) -> Result<bool> {
        Ok(self.wp_preimage(x)?.is_some())
    }

    /// Least `y` with `y² + y = x`.
    pub fn wp_preimage(&self, x: u32) -> Result<Option<u32>> {
        if !self.is_char2() {
            return Err(Error::WrongCharacteristic { expected: "2" });
        }
        let r = self.0.wp_preimage[x as usize];
        Ok((r != NONE).then_some(r))
    }

    /// Least element outside the Artin–Schreier image.
    pub fn wp_witness(&self) -> Result<u32> {
        if !self.is_char2() {
            return Err(Error::WrongCharacteristic { expected: "2" });
        }
        Ok(self
            .elements()
            .find(|&x| self.0.wp_preimage[x as usize] == NONE)
            .expect("the Artin-Schreier map is not surjective"))
    }

    /// The canonical non-trivial class representative: the least non-square
    /// in odd characteristic, the least element outside `℘(F)` in
    /// characteristic 2.
    pub fn lambda(&self) -> u32 {
        if self.is_char2() {
            self.wp_witness().unwrap()
        } else {
            self.nonsquare_witness().unwrap()
        }
    }

    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut d = digits(a, self.0.p, self.0.m);
        d.resize(self.0.m as usize, 0);
        d
    }
}

fn build(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Inner {
    // primitive element search by repeated multiplication in the polynomial basis
    let n = order - 1;
    let mut exp = Vec::new();
    for g in 1..order {
        let gp = digits(g, p, m);
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![1u32];
        loop {
            powers.push(undigits(&cur, p));
            cur = poly_mulmod(&cur, &gp, &modulus, p);
            if cur == [1] || powers.len() > n as usize {
                break;
            }
        }
        if powers.len() == n as usize {
            exp = powers;
            break;
        }
    }
    let mut log = vec![0u32; order as usize];
    for (i, &x) in exp.iter().enumerate() {
        log[x as usize] = i as u32;
    }
    let mut inner = Inner {
        p,
        m,
        order,
        modulus,
        exp,
        log,
        add_table: None,
        sqrt: Vec::new(),
        wp_preimage: Vec::new(),
    };
    if p != 2 && m > 1 && order <= ADD_TABLE_MAX {
        let mut table = vec![0u32; (order * order) as usize];
        for a in 0..order {
            let da = {
                let mut d = digits(a, p, m);
                d.resize(m as usize, 0);
                d
            };
            for b in 0..order {
                let mut db = digits(b, p, m);
                db.resize(m as usize, 0);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                table[(a * order + b) as usize] = undigits(&s, p);
            }
        }
        inner.add_table = Some(table);
    }
    let field = Field(Arc::new(inner));
    let mut sqrt = vec![NONE; order as usize];
    let mut wp = vec![NONE; if p == 2 { order as usize } else { 0 }];
    for y in (0..order).rev() {
        sqrt[field.mul(y, y) as usize] = y;
        if p == 2 {
            wp[field.artin_schreier(y) as usize] = y;
        }
    }
    let mut inner = Arc::try_unwrap(field.0).ok().expect("unique");
    inner.sqrt = sqrt;
    inner.wp_preimage = wp;
    inner
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q=<f>` or `p=<p>,m=<m>[,mod=<c0,c1,...,cm>]`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse(format!("field spec `{s}`: {msg}"));
        if let Some(q) = s.strip_prefix("q=") {
            let q: u64 = q.trim().parse().map_err(|_| bad("order is not an integer"))?;
            return Field::of_order(q);
        }
        let (head, modulus) = match s.find("mod=") {
            Some(i) => (&s[..i], Some(&s[i + 4..])),
            None => (s, None),
        };
        let (mut p, mut m) = (None, None);
        for part in head.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v: u64 = v.trim().parse().map_err(|_| bad("value is not an integer"))?;
            match k.trim() {
                "p" => p = Some(v),
                "m" => m = Some(v as u32),
                _ => return Err(bad("unknown key")),
            }
        }
        let p = p.ok_or_else(|| bad("missing p"))?;
        let m = m.unwrap_or(1);
        let modulus = modulus
            .map(|c| {
                c.split(',')
                    .map(|x| x.trim().parse::<u32>().map_err(|_| bad("bad modulus coefficient")))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Field::new(p, m, modulus)
    }
}

/// A field element tagged with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, code: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            code,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.code, other.code)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.div(self.code, other.code)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.code, e))
    }

    pub fn square_class(&self) -> SquareClass {
        self.field.square_class(self.code)
    }

    pub fn artin_schreier_class(&self) -> Result<bool> {
        self.field.in_wp_image(self.code)
    }
}
