//! Exact scalar fields: the rationals, cyclotomic extensions `Q(z)` with `z` a
//! primitive n-th root of unity, and prime fields `F_p`.
//!
//! Cyclotomic elements are stored as coefficient vectors of length
//! `totient(n)`, always reduced modulo the n-th cyclotomic polynomial, so
//! structural equality is field equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rationals`, `Q`, `cyclotomic:N`, `prime:P` (also `F_P`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if lower == "rationals" || lower == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let parse_num = |v: &str| -> Result<u64> {
            v.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad field parameter in {s:?}")))
        };
        if let Some(rest) = lower.strip_prefix("cyclotomic:") {
            let n = parse_num(rest)?;
            return Ok(FieldSpec::Cyclotomic(
                u32::try_from(n).map_err(|_| Error::InvalidField(format!("order {n} too large")))?,
            ));
        }
        if let Some(rest) = lower.strip_prefix("prime:").or_else(|| lower.strip_prefix("f_")) {
            return Ok(FieldSpec::Prime(parse_num(rest)?));
        }
        Err(Error::Parse(format!("unknown field {s:?}")))
    }
}

/// A validated field. Cheap to copy; all arithmetic lives on [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    spec: FieldSpec,
}

/// Largest prime modulus accepted; keeps residue products inside `u128`
/// comfortably and primality checks by trial division cheap.
const MAX_PRIME: u64 = 1 << 31;

pub fn make_field(spec: FieldSpec) -> Result<Field> {
    match spec {
        FieldSpec::Rationals => {}
        FieldSpec::Cyclotomic(n) => {
            if n == 0 {
                return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
            }
            if n > 10_000 {
                return Err(Error::InvalidField(format!("cyclotomic order {n} too large")));
            }
        }
        FieldSpec::Prime(p) => {
            if p > MAX_PRIME {
                return Err(Error::InvalidField(format!("modulus {p} exceeds {MAX_PRIME}")));
            }
            if !is_prime(p) {
                return Err(Error::NonPrimeModulus(p));
            }
        }
    }
    Ok(Field { spec })
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = phi_cache().lock().expect("cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num: Vec<i64> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_poly_div(&num, &den);
        }
    }
    let arc = Arc::new(num);
    phi_cache()
        .lock()
        .expect("cache poisoned")
        .insert(n, Arc::clone(&arc));
    arc
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

impl Field {
    pub fn rationals() -> Field {
        Field {
            spec: FieldSpec::Rationals,
        }
    }

    pub fn cyclotomic(n: u32) -> Result<Field> {
        make_field(FieldSpec::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Result<Field> {
        make_field(FieldSpec::Prime(p))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        match self.spec {
            FieldSpec::Prime(p) => p,
            _ => 0,
        }
    }

    /// Dimension over the prime field (totient for cyclotomic fields).
    pub fn degree(&self) -> usize {
        match self.spec {
            FieldSpec::Cyclotomic(n) => totient(n as u64) as usize,
            _ => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Cyclotomic(n) => Scalar::Cyclotomic {
                n,
                coeffs: vec![BigRational::zero(); self.degree()],
            },
            FieldSpec::Prime(p) => Scalar::Prime { p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    /// Image of a rational number; in `F_p` the denominator must be a unit.
    pub fn from_rational(&self, q: &BigRational) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(q.clone()),
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); self.degree()];
                coeffs[0] = q.clone();
                Scalar::Cyclotomic { n, coeffs }
            }
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().expect("reduced residue");
                let den = q.denom().mod_floor(&pb).to_u64().expect("reduced residue");
                let inv = mod_inv(den, p).expect("denominator divisible by the characteristic");
                Scalar::Prime {
                    p,
                    value: ((num as u128 * inv as u128) % p as u128) as u64,
                }
            }
        }
    }

    /// The adjoined root `z` of a cyclotomic field.
    pub fn generator(&self) -> Option<Scalar> {
        match self.spec {
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); self.degree()];
                let mut poly = vec![BigRational::zero(); 2];
                poly[1] = BigRational::one();
                if coeffs.len() >= 2 {
                    coeffs[1] = BigRational::one();
                } else {
                    // degree 1: z is rational (n = 1 gives 1, n = 2 gives -1)
                    coeffs = reduce_cyclotomic(n, poly);
                }
                Some(Scalar::Cyclotomic { n, coeffs })
            }
            _ => None,
        }
    }

    /// Order of the (cyclic) group of roots of unity in the field.
    pub fn roots_of_unity_order(&self) -> u64 {
        match self.spec {
            FieldSpec::Rationals => 2,
            FieldSpec::Cyclotomic(n) => {
                let n = n as u64;
                if n % 2 == 0 {
                    n
                } else {
                    2 * n
                }
            }
            FieldSpec::Prime(p) => p - 1,
        }
    }

    /// The designated primitive n-th root of unity.
    ///
    /// `F_p`: the smallest positive residue of exact order n.
    /// `Q(z)`, z of order m: `z^(m/n)` when n | m; for odd m and n = 2s with
    /// s | m, `-z^(m/s)`.
    pub fn primitive_root(&self, n: u64) -> Result<Scalar> {
        let missing = || Error::MissingRootOfUnity {
            n,
            field: self.spec.to_string(),
        };
        if n == 0 {
            return Err(missing());
        }
        if n == 1 {
            return Ok(self.one());
        }
        match self.spec {
            FieldSpec::Rationals => {
                if n == 2 {
                    Ok(self.from_i64(-1))
                } else {
                    Err(missing())
                }
            }
            FieldSpec::Cyclotomic(m) => {
                let m64 = m as u64;
                let z = self.generator().expect("cyclotomic generator");
                if m64 % n == 0 {
                    Ok(z.pow(m64 / n))
                } else if n % 2 == 0 && m64 % 2 == 1 && m64 % (n / 2) == 0 {
                    Ok(-z.pow(m64 / (n / 2)))
                } else {
                    Err(missing())
                }
            }
            FieldSpec::Prime(p) => {
                if (p - 1) % n != 0 {
                    return Err(missing());
                }
                let proper: Vec<u64> = divisors(n).into_iter().filter(|&d| d < n).collect();
                for a in 1..p {
                    if mod_pow(a, n, p) == 1 && proper.iter().all(|&d| mod_pow(a, d, p) != 1) {
                        return Ok(Scalar::Prime { p, value: a });
                    }
                }
                Err(missing())
            }
        }
    }

    /// Parse a scalar in this field's canonical string format.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("cannot parse scalar {s:?} in {}", self.spec));
        match self.spec {
            FieldSpec::Rationals => parse_rational(s).map(Scalar::Rational).ok_or_else(bad),
            FieldSpec::Prime(p) => {
                let q = parse_rational(s).ok_or_else(bad)?;
                if (q.denom() % BigInt::from(p)).is_zero() {
                    return Err(bad());
                }
                Ok(self.from_rational(&q))
            }
            FieldSpec::Cyclotomic(n) => {
                let terms = split_terms(s).ok_or_else(bad)?;
                let mut acc = self.zero();
                let z = self.generator().expect("generator");
                for (coef, power) in terms {
                    let c = self.from_rational(&coef);
                    acc = &acc + &(&c * &z.pow(power));
                }
                debug_assert!(matches!(acc, Scalar::Cyclotomic { n: m, .. } if m == n));
                Ok(acc)
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    let t = t.strip_prefix('+').unwrap_or(&t);
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, b),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Split `"c0 + c1*z + c2*z^2"`-style text into (coefficient, power) terms.
fn split_terms(s: &str) -> Option<Vec<(BigRational, u64)>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    let chars: Vec<char> = t.chars().collect();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..chars.len() {
        if (chars[i] == '+' || chars[i] == '-') && !matches!(chars[i - 1], '*' | '^' | '/' | '+' | '-')
        {
            pieces.push(chars[start..i].iter().collect::<String>());
            start = i;
        }
    }
    pieces.push(chars[start..].iter().collect::<String>());
    let mut out = Vec::new();
    for piece in pieces {
        let (sign, body) = if let Some(b) = piece.strip_prefix('-') {
            (-1, b.to_string())
        } else {
            (1, piece.strip_prefix('+').unwrap_or(&piece).to_string())
        };
        let (coef_text, power) = if let Some(idx) = body.find('z') {
            let (c, rest) = body.split_at(idx);
            let c = c.strip_suffix('*').unwrap_or(c);
            let power = match rest.strip_prefix("z") {
                Some("") => 1,
                Some(r) => r.strip_prefix('^')?.parse::<u64>().ok()?,
                None => return None,
            };
            (if c.is_empty() { "1".to_string() } else { c.to_string() }, power)
        } else {
            (body, 0)
        };
        let mut coef = parse_rational(&coef_text)?;
        if sign < 0 {
            coef = -coef;
        }
        out.push((coef, power));
    }
    Some(out)
}

/// Reduce a polynomial in z (lowest degree first) modulo Phi_n.
fn reduce_cyclotomic(n: u32, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            // z^k = z^(k-deg) * z^deg and z^deg = -(Phi_n - z^deg)
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    poly[k - deg + j] -= &c * BigRational::from_integer(BigInt::from(pj));
                }
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic { n: u32, coeffs: Vec<BigRational> },
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        let spec = match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Cyclotomic { n, .. } => FieldSpec::Cyclotomic(*n),
            Scalar::Prime { p, .. } => FieldSpec::Prime(*p),
        };
        Field { spec }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: mod_inv(*value, *p)?,
            },
            Scalar::Cyclotomic { n, coeffs } => Scalar::Cyclotomic {
                n: *n,
                coeffs: cyclotomic_inverse(*n, coeffs),
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "arithmetic between scalars of different fields"
        );
    }

    /// Rational value if the scalar lies in the prime subfield of a
    /// characteristic-zero field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic { coeffs, .. } => {
                if coeffs[1..].iter().all(Zero::is_zero) {
                    Some(coeffs[0].clone())
                } else {
                    None
                }
            }
            Scalar::Prime { .. } => None,
        }
    }
}

fn cyclotomic_inverse(n: u32, coeffs: &[BigRational]) -> Vec<BigRational> {
    // Solve (a * b) = 1 as a linear system in the coefficients of b.
    let deg = coeffs.len();
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); deg + 1]; deg];
    for j in 0..deg {
        let mut shifted = vec![BigRational::zero(); deg + j];
        for (i, c) in coeffs.iter().enumerate() {
            shifted[i + j] = c.clone();
        }
        let col = reduce_cyclotomic(n, shifted);
        for i in 0..deg {
            rows[i][j] = col[i].clone();
        }
    }
    rows[0][deg] = BigRational::one();
    // Gauss-Jordan on the augmented system.
    for c in 0..deg {
        let piv = (c..deg)
            .find(|&r| !rows[r][c].is_zero())
            .expect("nonzero cyclotomic element is invertible");
        rows.swap(c, piv);
        let inv = rows[c][c].recip();
        for v in rows[c].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..deg {
            if r != c && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in c..=deg {
                    let sub = &f * &rows[c][k];
                    rows[r][k] -= sub;
                }
            }
        }
    }
    rows.into_iter().map(|r| r[deg].clone()).collect()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Cyclotomic { coeffs, .. } => {
                let mut parts = Vec::new();
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    parts.push(match k {
                        0 => format!("{c}"),
                        1 => format!("{c}*z"),
                        _ => format!("{c}*z^{k}"),
                    });
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: (a + b) % p,
            },
            (Scalar::Cyclotomic { n, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                Scalar::Cyclotomic {
                    n: *n,
                    coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: (a + p - b) % p,
            },
            (Scalar::Cyclotomic { n, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                Scalar::Cyclotomic {
                    n: *n,
                    coeffs: a.iter().zip(b).map(|(x, y)| x - y).collect(),
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            (Scalar::Cyclotomic { n, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclotomic {
                    n: *n,
                    coeffs: reduce_cyclotomic(*n, prod),
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: (p - value) % p,
            },
            Scalar::Cyclotomic { n, coeffs } => Scalar::Cyclotomic {
                n: *n,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// `true` if the characteristic of `field` divides `order`.
pub fn characteristic_divides(field: Field, order: u64) -> bool {
    let c = field.characteristic();
    c != 0 && order % c == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclotomic_one_is_rationals() {
        let f = Field::cyclotomic(1).unwrap();
        assert_eq!(f.degree(), 1);
        let z = f.generator().unwrap();
        assert!(z.is_one());
        let a = f.parse("1/2").unwrap();
        assert_eq!((&a + &a), f.one());
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = Field::cyclotomic(4).unwrap();
        let z = f.generator().unwrap();
        assert_eq!(&z * &z, f.from_i64(-1));
        assert_eq!((&z * &z).to_string(), "-1");
    }

    #[test]
    fn primitive_fourth_root_in_f5_is_two() {
        let f = Field::prime(5).unwrap();
        let r = f.primitive_root(4).unwrap();
        assert_eq!(r, Scalar::Prime { p: 5, value: 2 });
        assert!(matches!(
            f.primitive_root(3),
            Err(Error::MissingRootOfUnity { n: 3, .. })
        ));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert_eq!(make_field(FieldSpec::Prime(6)), Err(Error::NonPrimeModulus(6)));
        assert!(make_field(FieldSpec::Cyclotomic(0)).is_err());
    }

    #[test]
    fn odd_cyclotomic_contains_even_roots() {
        let f = Field::cyclotomic(3).unwrap();
        let w = f.primitive_root(6).unwrap();
        assert_eq!(w.pow(6), f.one());
        assert_ne!(w.pow(3), f.one());
        assert_ne!(w.pow(2), f.one());
        assert!(f.primitive_root(4).is_err());
    }

    #[test]
    fn parse_and_print_round_trip() {
        let f = Field::cyclotomic(5).unwrap();
        for text in ["0", "1", "-1/2*z", "3 + -2*z^3", "z^4", "1/3 - z^2"] {
            let s = f.parse(text).unwrap();
            assert_eq!(f.parse(&s.to_string()).unwrap(), s, "{text}");
        }
        // z^4 = -(1 + z + z^2 + z^3) in Q(z_5)
        assert_eq!(f.parse("z^4").unwrap().to_string(), "-1 + -1*z + -1*z^2 + -1*z^3");
        let r = Field::rationals();
        assert_eq!(r.parse("6/4").unwrap(), Scalar::Rational(q(3, 2)));
        assert_eq!(r.parse("6/4").unwrap().to_string(), "3/2");
        let p = Field::prime(7).unwrap();
        assert_eq!(p.parse("-1").unwrap().to_string(), "6");
        assert_eq!(p.parse("1/2").unwrap().to_string(), "4");
    }

    #[test]
    fn cyclotomic_inverse_is_exact() {
        let f = Field::cyclotomic(7).unwrap();
        let a = f.parse("2 + z - 3*z^5").unwrap();
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn totient_values() {
        let want = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4];
        for (n, w) in (1..=10).zip(want) {
            assert_eq!(totient(n), w);
        }
    }
}
