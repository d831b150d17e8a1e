//! GF(2) and GF(3) scalar arithmetic and bit-packed coordinate vectors.
//!
//! A GF(2) vector packs one bit per coordinate into a single machine word; a
//! GF(3) vector packs two bits per coordinate across a pair of planes (`lo`
//! holds the 1-entries, `hi` the 2-entries, and `lo & hi` is forbidden).
//! Word-parallel add/sub/scale/dot come out of plane algebra: negation over
//! GF(3) is a plane swap, products and sums reduce to a handful of AND/OR/XOR
//! ops plus popcounts.

use crate::error::{domain, usage, Result};
use std::fmt;

pub const MAX_LEN: usize = 64;

/// Field identifier. Everything in this crate is over GF(2) or GF(3).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Gf3,
}

impl Field {
    pub fn from_order(q: u64) -> Result<Field> {
        match q {
            2 => Ok(Field::Gf2),
            3 => Ok(Field::Gf3),
            other => Err(usage(format!("unsupported field order {other}, expected 2 or 3"))),
        }
    }

    pub fn order(self) -> u64 {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.order() as u8
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        debug_assert!(self.valid(a) && self.valid(b));
        match self {
            Field::Gf2 => a ^ b,
            Field::Gf3 => (a + b) % 3,
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        debug_assert!(self.valid(a) && self.valid(b));
        match self {
            Field::Gf2 => a & b,
            Field::Gf3 => (a * b) % 3,
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        debug_assert!(self.valid(a));
        match self {
            Field::Gf2 => a,
            Field::Gf3 => (3 - a) % 3,
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(self, a: u8) -> Result<u8> {
        debug_assert!(self.valid(a));
        if a == 0 {
            return Err(domain("zero has no multiplicative inverse"));
        }
        // Both nonzero elements of GF(3) square to 1, so every unit is its own inverse.
        Ok(a)
    }

    fn valid(self, a: u8) -> bool {
        u64::from(a) < self.order()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// A coordinate vector of length ≤ 64 over GF(2) or GF(3), bit-packed.
///
/// Coordinate `i` lives at bit `i` of the planes. For GF(2) only `lo` is used.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FqVector {
    field: Field,
    len: u8,
    lo: u64,
    hi: u64,
}

impl FqVector {
    pub fn zero(field: Field, len: usize) -> Self {
        assert!(len <= MAX_LEN, "vector length {len} exceeds packed width {MAX_LEN}");
        FqVector { field, len: len as u8, lo: 0, hi: 0 }
    }

    pub fn from_digits(field: Field, digits: &[u8]) -> Result<Self> {
        let mut v = Self::checked_zero(field, digits.len())?;
        for (i, &d) in digits.iter().enumerate() {
            if u64::from(d) >= field.order() {
                return Err(usage(format!("digit {d} out of range for {field}")));
            }
            v.set(i, d);
        }
        Ok(v)
    }

    /// Parses a digit string, leftmost character = coordinate 0.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| usage(format!("invalid digit character {c:?}")))
            })
            .collect::<Result<_>>()?;
        Self::from_digits(field, &digits)
    }

    fn checked_zero(field: Field, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(crate::error::resource(format!(
                "vector length {len} exceeds packed width {MAX_LEN}"
            )));
        }
        Ok(Self::zero(field, len))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        let bit = 1u64 << i;
        ((self.lo >> i) & 1) as u8 + 2 * ((self.hi & bit) >> i) as u8
    }

    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(i < self.len());
        debug_assert!(u64::from(value) < self.field.order());
        let bit = 1u64 << i;
        self.lo &= !bit;
        self.hi &= !bit;
        match value {
            0 => {}
            1 => self.lo |= bit,
            _ => self.hi |= bit,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        (self.lo | self.hi).count_ones() as usize
    }

    /// Bit mask of the support (nonzero coordinates).
    pub fn support_mask(&self) -> u64 {
        self.lo | self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn digits(&self) -> Vec<u8> {
        self.iter().collect()
    }

    pub fn add(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn neg(&self) -> FqVector {
        match self.field {
            Field::Gf2 => *self,
            // Negation over GF(3) swaps 1s and 2s, i.e. the two planes.
            Field::Gf3 => FqVector { lo: self.hi, hi: self.lo, ..*self },
        }
    }

    pub fn scale(&self, c: u8) -> FqVector {
        debug_assert!(u64::from(c) < self.field.order());
        match c {
            0 => FqVector::zero(self.field, self.len()),
            1 => *self,
            _ => self.neg(),
        }
    }

    /// Standard inner product Σ uᵢvᵢ.
    pub fn dot(&self, other: &FqVector) -> Result<u8> {
        self.check_compatible(other)?;
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &FqVector) -> FqVector {
        match self.field {
            Field::Gf2 => FqVector { lo: self.lo ^ other.lo, ..*self },
            Field::Gf3 => {
                let (al, ah, bl, bh) = (self.lo, self.hi, other.lo, other.hi);
                let lo = (al & !(bl | bh)) | (bl & !(al | ah)) | (ah & bh);
                let hi = (ah & !(bl | bh)) | (bh & !(al | ah)) | (al & bl);
                FqVector { lo, hi, ..*self }
            }
        }
    }

    pub(crate) fn dot_unchecked(&self, other: &FqVector) -> u8 {
        match self.field {
            Field::Gf2 => ((self.lo & other.lo).count_ones() & 1) as u8,
            Field::Gf3 => {
                // Pointwise products land on the 1-plane when the factors match
                // and on the 2-plane when they differ.
                let ones = (self.lo & other.lo) | (self.hi & other.hi);
                let twos = (self.lo & other.hi) | (self.hi & other.lo);
                ((ones.count_ones() + 2 * twos.count_ones()) % 3) as u8
            }
        }
    }

    /// Encodes the vector as an integer in base q, coordinate 0 most significant.
    pub fn to_index(&self) -> u64 {
        let q = self.field.order();
        let mut acc = 0u64;
        for d in self.iter() {
            acc = acc * q + u64::from(d);
        }
        acc
    }

    pub fn from_index(field: Field, len: usize, mut index: u64) -> Self {
        let q = field.order();
        let mut v = Self::zero(field, len);
        for i in (0..len).rev() {
            v.set(i, (index % q) as u8);
            index /= q;
        }
        v
    }

    /// Appends a zero coordinate.
    pub fn extended(&self) -> Result<FqVector> {
        let mut v = Self::checked_zero(self.field, self.len() + 1)?;
        v.lo = self.lo;
        v.hi = self.hi;
        Ok(v)
    }

    fn check_compatible(&self, other: &FqVector) -> Result<()> {
        if self.field != other.field || self.len != other.len {
            return Err(usage(format!(
                "incompatible vectors: {} of length {} vs {} of length {}",
                self.field,
                self.len(),
                other.field,
                other.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.iter() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn scalar_tables_match_modular_arithmetic() {
        for field in [Field::Gf2, Field::Gf3] {
            let q = field.order() as u8;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(field.add(a, b), (a + b) % q);
                    assert_eq!(field.mul(a, b), (a * b) % q);
                    assert_eq!(field.sub(a, b), (a + q - b) % q);
                }
                assert_eq!(field.add(a, field.neg(a)), 0);
                if a != 0 {
                    assert_eq!(field.mul(a, field.inv(a).unwrap()), 1);
                }
            }
            assert!(field.inv(0).is_err());
        }
    }

    fn random_vec(rng: &mut ChaCha8Rng, field: Field, len: usize) -> FqVector {
        let digits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..field.order() as u8)).collect();
        FqVector::from_digits(field, &digits).unwrap()
    }

    #[test]
    fn packed_ops_match_per_digit_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for field in [Field::Gf2, Field::Gf3] {
            for _ in 0..400 {
                let len = rng.gen_range(1..=MAX_LEN);
                let u = random_vec(&mut rng, field, len);
                let v = random_vec(&mut rng, field, len);

                let sum = u.add(&v).unwrap();
                let diff = u.sub(&v).unwrap();
                let mut dot_ref = 0u8;
                let mut weight_ref = 0usize;
                for i in 0..len {
                    assert_eq!(sum.get(i), field.add(u.get(i), v.get(i)));
                    assert_eq!(diff.get(i), field.sub(u.get(i), v.get(i)));
                    dot_ref = field.add(dot_ref, field.mul(u.get(i), v.get(i)));
                    weight_ref += usize::from(u.get(i) != 0);
                }
                assert_eq!(u.dot(&v).unwrap(), dot_ref);
                assert_eq!(u.weight(), weight_ref);

                for c in field.elements() {
                    let su = u.scale(c);
                    for i in 0..len {
                        assert_eq!(su.get(i), field.mul(c, u.get(i)));
                    }
                }
            }
        }
    }

    #[test]
    fn index_roundtrip_is_monotone_in_coordinate_zero() {
        for field in [Field::Gf2, Field::Gf3] {
            let len = 4;
            let total = field.order().pow(len as u32);
            for idx in 0..total {
                let v = FqVector::from_index(field, len, idx);
                assert_eq!(v.to_index(), idx);
            }
            // Coordinate 0 is the most significant digit.
            let v = FqVector::from_index(field, len, field.order().pow(3));
            assert_eq!(v.get(0), 1);
            assert!(v.iter().skip(1).all(|d| d == 0));
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let v = FqVector::parse(Field::Gf3, "2011").unwrap();
        assert_eq!(v.to_string(), "2011");
        assert_eq!(v.weight(), 3);
        assert!(FqVector::parse(Field::Gf2, "102").is_err());
        assert!(FqVector::parse(Field::Gf2, "1x0").is_err());
    }

    #[test]
    fn extended_appends_zero() {
        let v = FqVector::parse(Field::Gf3, "21").unwrap();
        let e = v.extended().unwrap();
        assert_eq!(e.to_string(), "210");
        assert_eq!(e.weight(), v.weight());
    }

    #[test]
    fn mismatched_operands_are_usage_errors() {
        let a = FqVector::zero(Field::Gf2, 3);
        let b = FqVector::zero(Field::Gf2, 4);
        let c = FqVector::zero(Field::Gf3, 3);
        assert!(a.dot(&b).is_err());
        assert!(a.add(&c).is_err());
    }
}
