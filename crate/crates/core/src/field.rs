//! Exact arithmetic in GF(q), q = p^m with p an odd prime.
//!
//! Elements are canonical coefficient vectors of length m over Z/p
//! (degree-ascending), which keeps prime and extension fields uniform.
//! Everything is exhaustive-search friendly: q is assumed to be desk scale.

use crate::error::{Error, Result};
use std::fmt;

/// A field element: residues mod p, degree-ascending, always length m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{:?}", self.coeffs)
        }
    }
}

/// GF(p^m) described by its characteristic, extension degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible of degree m, full coefficient list (length m+1).
    /// `None` exactly when m == 1.
    modulus: Option<Vec<u64>>,
}

impl Field {
    /// Builds GF(p^m). With `modulus` absent and m > 1, picks the
    /// lexicographically smallest monic irreducible of degree m
    /// (coefficient lists compared degree-ascending), so the same (p, m)
    /// always denotes the same field.
    pub fn new(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if p < 3 {
            return Err(Error::InvalidField(format!("p = {p} must be an odd prime >= 3")));
        }
        if p % 2 == 0 {
            return Err(Error::InvalidField(format!("p = {p} is even; odd characteristic required")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        if p >= (1 << 31) {
            return Err(Error::InvalidField(format!("p = {p} too large for exact desk-scale arithmetic")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree m must be >= 1".into()));
        }
        let q = (p as u128).checked_pow(m as u32).filter(|&q| q < (1u128 << 62)).ok_or_else(
            || Error::InvalidField(format!("q = {p}^{m} overflows the supported range")),
        )? as u64;

        let modulus = match (m, modulus) {
            (1, None) => None,
            (1, Some(_)) => {
                return Err(Error::InvalidField("modulus must be absent for a prime field".into()))
            }
            (_, Some(raw)) => {
                if raw.len() != m + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have degree {m} (expected {} coefficients, got {})",
                        m + 1,
                        raw.len()
                    )));
                }
                let reduced: Vec<u64> = raw.iter().map(|c| c % p).collect();
                if reduced[m] != 1 {
                    return Err(Error::InvalidField("modulus must be monic".into()));
                }
                if !is_irreducible(p, &reduced) {
                    return Err(Error::InvalidField(format!(
                        "modulus {reduced:?} is reducible over GF({p})"
                    )));
                }
                Some(reduced)
            }
            (_, None) => Some(canonical_modulus(p, m)),
        };

        Ok(Field { p, m, q, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Modulus coefficient list (length m+1), absent for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.m] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = v % self.p;
        FieldElement { coeffs }
    }

    /// Canonicalizes an arbitrary coefficient list of length <= m.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.m {
            return Err(Error::FieldMismatch(format!(
                "{} coefficients given, field has degree {}",
                coeffs.len(),
                self.m
            )));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|x| x % self.p).collect();
        c.resize(self.m, 0);
        Ok(FieldElement { coeffs: c })
    }

    /// Positional index of an element: sum of coeffs[i] * p^i, in [0, q).
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        self.check(a);
        let mut idx = 0u64;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Inverse of [`Field::index_of`].
    pub fn from_index(&self, mut idx: u64) -> FieldElement {
        debug_assert!(idx < self.q);
        let mut coeffs = vec![0; self.m];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FieldElement { coeffs }
    }

    /// All q elements, constant term cycling fastest; starts at 0.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.q).map(|i| self.from_index(i)).collect()
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, a: &FieldElement) {
        assert!(
            a.coeffs.len() == self.m && a.coeffs.iter().all(|&c| c < self.p),
            "element {a} does not belong to GF({}^{})",
            self.p,
            self.m
        );
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check(a);
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.m == 1 {
            return FieldElement { coeffs: vec![(a.coeffs[0] * b.coeffs[0]) % self.p] };
        }
        // Schoolbook product, then fold x^i (i >= m) down via the monic modulus.
        let modulus = self.modulus.as_ref().unwrap();
        let mut buf = vec![0u64; 2 * self.m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + x * y) % self.p;
            }
        }
        for i in (self.m..buf.len()).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for j in 0..self.m {
                buf[i - self.m + j] = (buf[i - self.m + j] + c * (self.p - modulus[j])) % self.p;
            }
        }
        buf.truncate(self.m);
        FieldElement { coeffs: buf }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::NonInvertible);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// All solutions of y^2 = a, in enumeration order; 0, 1 or 2 of them.
    /// Exhaustive by design: q is small and exactness is the contract.
    pub fn sqrt(&self, a: &FieldElement) -> Vec<FieldElement> {
        self.check(a);
        let mut roots = Vec::new();
        for i in 0..self.q {
            let y = self.from_index(i);
            if self.mul(&y, &y) == *a {
                roots.push(y);
            }
        }
        roots
    }

    /// JSON encoding used by every config/report format: prime field
    /// elements are bare integers, extension field elements are arrays.
    pub fn element_to_json(&self, a: &FieldElement) -> serde_json::Value {
        self.check(a);
        if self.m == 1 {
            serde_json::Value::from(a.coeffs[0])
        } else {
            serde_json::Value::from(a.coeffs.clone())
        }
    }

    pub fn element_from_json(&self, v: &serde_json::Value) -> Result<FieldElement> {
        match v {
            serde_json::Value::Number(n) => {
                let x = n
                    .as_u64()
                    .ok_or_else(|| Error::Config(format!("element {n} is not a nonnegative integer")))?;
                Ok(self.from_u64(x))
            }
            serde_json::Value::Array(xs) => {
                let coeffs: Vec<u64> = xs
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .ok_or_else(|| Error::Config(format!("bad coefficient {x} in element")))
                    })
                    .collect::<Result<_>>()?;
                self.from_coeffs(&coeffs)
            }
            other => Err(Error::Config(format!("cannot parse field element from {other}"))),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---- polynomial helpers over GF(p), dense coefficient slices ----

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of a by the monic divisor d, over GF(p).
fn poly_rem(p: u64, a: &[u64], d: &[u64]) -> Vec<u64> {
    let dd = poly_degree(d).expect("divisor must be nonzero");
    let mut r = a.to_vec();
    while let Some(rd) = poly_degree(&r) {
        if rd < dd {
            break;
        }
        let c = r[rd];
        for j in 0..=dd {
            r[rd - dd + j] = (r[rd - dd + j] + c * (p - d[j]) % p) % p;
        }
    }
    r.truncate(dd.max(1));
    r
}

/// Trial division by all monic polynomials of degree 1..=deg/2.
/// Exact and cheap at desk scale.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let deg = match poly_degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // Monic divisor x^d + c_{d-1} x^{d-1} + ... + c_0.
        let count = p.pow(d as u32);
        for v in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut idx = v;
            for c in div.iter_mut().take(d) {
                *c = idx % p;
                idx /= p;
            }
            div[d] = 1;
            let rem = poly_rem(p, f, &div);
            if poly_degree(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(p),
/// comparing degree-ascending coefficient lists left to right.
fn canonical_modulus(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for v in 0..count {
        let mut f = vec![0u64; m + 1];
        // Big-endian digit split so v counts in lexicographic order of
        // (c_0, c_1, ..., c_{m-1}).
        let mut idx = v;
        for i in (0..m).rev() {
            f[i] = idx % p;
            idx /= p;
        }
        f[m] = 1;
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree m exists over every GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::new(p, 1, None).unwrap()
    }

    fn gf9() -> Field {
        Field::new(3, 2, None).unwrap()
    }

    #[test]
    fn make_prime_field() {
        let f = gf(5);
        assert_eq!(f.q(), 5);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn make_gf9_selects_u2_plus_1() {
        let f = gf9();
        assert_eq!(f.q(), 9);
        // u^2 + 1 is irreducible mod 3, and is the lex-smallest choice.
        assert_eq!(f.modulus().unwrap(), &[1, 0, 1]);
    }

    #[test]
    fn explicit_gf9_modulus_accepted() {
        let f = Field::new(3, 2, Some(vec![1, 0, 1])).unwrap();
        assert_eq!(f.q(), 9);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(matches!(Field::new(4, 1, None), Err(Error::InvalidField(_))));
        assert!(matches!(Field::new(2, 1, None), Err(Error::InvalidField(_))));
        assert!(matches!(Field::new(9, 1, None), Err(Error::InvalidField(_))));
        // x^2 + 2x + 1 = (x+1)^2 is reducible mod 3.
        assert!(matches!(Field::new(3, 2, Some(vec![1, 2, 1])), Err(Error::InvalidField(_))));
        // Modulus makes no sense for m = 1.
        assert!(matches!(Field::new(5, 1, Some(vec![0, 1])), Err(Error::InvalidField(_))));
    }

    #[test]
    fn add_mul_examples() {
        let f = gf(5);
        let two = f.from_u64(2);
        let four = f.from_u64(4);
        assert_eq!(f.add(&two, &four), f.from_u64(1));
        assert_eq!(f.mul(&f.from_u64(3), &f.zero()), f.zero());

        // In GF(9) with u^2 = 2: u * u = 2.
        let f9 = gf9();
        let u = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.mul(&u, &u), f9.from_u64(2));
    }

    #[test]
    fn inversion_examples() {
        let f = gf(5);
        assert_eq!(f.inv(&f.from_u64(3)).unwrap(), f.from_u64(2));
        assert!(matches!(f.inv(&f.zero()), Err(Error::NonInvertible)));

        let f9 = gf9();
        let u = f9.from_coeffs(&[0, 1]).unwrap();
        // Exhaustive oracle: the unique x with u*x = 1.
        let by_search: Vec<_> = f9
            .enumerate()
            .into_iter()
            .filter(|x| f9.mul(&u, x) == f9.one())
            .collect();
        assert_eq!(by_search.len(), 1);
        assert_eq!(f9.inv(&u).unwrap(), by_search[0]);
        assert_eq!(f9.inv(&u).unwrap(), f9.from_coeffs(&[0, 2]).unwrap());
    }

    #[test]
    fn sqrt_examples() {
        let f = gf(5);
        let roots = f.sqrt(&f.from_u64(4));
        assert_eq!(roots, vec![f.from_u64(2), f.from_u64(3)]);
        // Squares mod 5 are {0, 1, 4}, so 2 has none.
        assert!(f.sqrt(&f.from_u64(2)).is_empty());
        assert_eq!(f.sqrt(&f.zero()), vec![f.zero()]);
    }

    #[test]
    fn sqrt_counts() {
        for field in [gf(3), gf(5), gf(7), gf(13), gf9(), Field::new(5, 2, None).unwrap()] {
            let with_root = field
                .enumerate()
                .iter()
                .filter(|a| !field.sqrt(a).is_empty())
                .count() as u64;
            assert_eq!(with_root, (field.q() + 1) / 2, "q = {}", field.q());
        }
    }

    #[test]
    fn enumerate_examples() {
        let f = gf(5);
        let all: Vec<u64> = f.enumerate().iter().map(|e| f.index_of(e)).collect();
        assert_eq!(all, vec![0, 1, 2, 3, 4]);

        let f9 = gf9();
        let elems = f9.enumerate();
        assert_eq!(elems.len(), 9);
        assert_eq!(elems[0], f9.zero());
        // Constant term fastest: second element is 1, not u.
        assert_eq!(elems[1], f9.one());

        let f3 = gf(3);
        assert_eq!(f3.enumerate().len(), 3);
    }

    #[test]
    #[should_panic(expected = "does not belong")]
    fn mismatched_elements_panic() {
        let f5 = gf(5);
        let f9 = gf9();
        let u = f9.from_coeffs(&[0, 1]).unwrap();
        let _ = f5.add(&u, &u);
    }

    #[test]
    fn json_round_trip() {
        let f = gf(5);
        let v = f.element_to_json(&f.from_u64(3));
        assert_eq!(v, serde_json::json!(3));
        assert_eq!(f.element_from_json(&v).unwrap(), f.from_u64(3));

        let f9 = gf9();
        let u = f9.from_coeffs(&[1, 2]).unwrap();
        let v = f9.element_to_json(&u);
        assert_eq!(v, serde_json::json!([1, 2]));
        assert_eq!(f9.element_from_json(&v).unwrap(), u);
    }

    proptest! {
        #[test]
        fn field_axioms(p_idx in 0usize..4, a_idx in 0u64..625, b_idx in 0u64..625, c_idx in 0u64..625) {
            let field = [gf(3), gf(5), gf9(), Field::new(5, 2, None).unwrap()][p_idx].clone();
            let q = field.q();
            let a = field.from_index(a_idx % q);
            let b = field.from_index(b_idx % q);
            let c = field.from_index(c_idx % q);

            prop_assert_eq!(field.add(&a, &b), field.add(&b, &a));
            prop_assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
            prop_assert_eq!(
                field.add(&field.add(&a, &b), &c),
                field.add(&a, &field.add(&b, &c))
            );
            prop_assert_eq!(
                field.mul(&field.mul(&a, &b), &c),
                field.mul(&a, &field.mul(&b, &c))
            );
            prop_assert_eq!(
                field.mul(&a, &field.add(&b, &c)),
                field.add(&field.mul(&a, &b), &field.mul(&a, &c))
            );
            prop_assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
            if !field.is_zero(&a) {
                prop_assert_eq!(field.mul(&a, &field.inv(&a).unwrap()), field.one());
            }
        }
    }
}
