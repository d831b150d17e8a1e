//! Linear codes with the operations the LCD classification needs.
//!
//! A code is stored by its reduced-row-echelon generator matrix, so two equal
//! codes compare equal structurally. The LCD test is Massey's criterion: C is
//! complementary dual exactly when G·Gᵀ is nonsingular, and more generally
//! dim(C ∩ C⊥) = k − rank(G·Gᵀ).

use crate::error::{domain, resource, usage, Result};
use crate::field::{Field, FqVector, MAX_LEN};
use crate::matrix::FqMatrix;
use std::fmt;
use std::sync::OnceLock;

/// Largest number of codewords any full enumeration is allowed to touch.
pub const ENUMERATION_GUARD: u64 = 1 << 24;

#[derive(Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    gen: FqMatrix,
    enumerator: OnceLock<WeightEnumerator>,
    dual_min: OnceLock<usize>,
}

impl LinearCode {
    /// Builds the code generated by `(I_k | a)` where `a` is k×(n−k).
    pub fn from_standard_form(field: Field, k: usize, a: &FqMatrix) -> Result<Self> {
        if a.field() != field {
            return Err(usage("standard-form block built over the wrong field"));
        }
        if a.row_count() != k {
            return Err(usage(format!(
                "standard-form block has {} rows, expected k = {k}",
                a.row_count()
            )));
        }
        let n = k + a.col_count();
        if n > MAX_LEN {
            return Err(resource(format!("length {n} exceeds packed width {MAX_LEN}")));
        }
        let gen = FqMatrix::identity(field, k).hconcat(a)?;
        Ok(Self::from_rref_unchecked(field, n, k, gen))
    }

    /// Builds a code from independent generator rows.
    pub fn from_generator(m: &FqMatrix) -> Result<Self> {
        let (rref, pivots) = m.rref();
        if pivots.len() != m.row_count() {
            return Err(domain("generator rows are linearly dependent"));
        }
        Ok(Self::from_rref_unchecked(m.field(), m.col_count(), pivots.len(), rref))
    }

    /// Builds the code spanned by arbitrary rows; dependent rows are dropped.
    pub fn from_span(m: &FqMatrix) -> Self {
        let (rref, pivots) = m.rref();
        let k = pivots.len();
        let mut kept = FqMatrix::zero(m.field(), 0, m.col_count());
        if k > 0 {
            kept = FqMatrix::from_rows(rref.rows()[..k].to_vec()).expect("nonempty rows");
        }
        Self::from_rref_unchecked(m.field(), m.col_count(), k, kept)
    }

    pub fn zero_code(field: Field, n: usize) -> Self {
        Self::from_rref_unchecked(field, n, 0, FqMatrix::zero(field, 0, n))
    }

    pub fn full_space(field: Field, n: usize) -> Self {
        Self::from_rref_unchecked(field, n, n, FqMatrix::identity(field, n))
    }

    pub(crate) fn from_rref_unchecked(field: Field, n: usize, k: usize, gen: FqMatrix) -> Self {
        debug_assert_eq!(gen.row_count(), k);
        debug_assert_eq!(gen.col_count(), n);
        LinearCode { field, n, k, gen, enumerator: OnceLock::new(), dual_min: OnceLock::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Block length n, always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }

    /// The dual code C⊥ = { x : G·xᵀ = 0 }.
    pub fn dual(&self) -> LinearCode {
        let pivots: Vec<usize> = {
            // gen is already rref; recover its pivot columns.
            let mut p = Vec::with_capacity(self.k);
            let mut col = 0;
            for i in 0..self.k {
                while self.gen.get(i, col) == 0 {
                    col += 1;
                }
                p.push(col);
            }
            p
        };
        let mut is_pivot = vec![false; self.n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.n - self.k);
        for (f, &piv) in is_pivot.iter().enumerate() {
            if piv {
                continue;
            }
            let mut v = FqVector::zero(self.field, self.n);
            v.set(f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                v.set(p, self.field.neg(self.gen.get(i, f)));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Self::zero_code(self.field, self.n);
        }
        Self::from_span(&FqMatrix::from_rows(rows).expect("nonempty rows"))
    }

    /// Appends one always-zero coordinate.
    pub fn extend(&self) -> Result<LinearCode> {
        if self.n + 1 > MAX_LEN {
            return Err(resource(format!("length {} exceeds packed width {MAX_LEN}", self.n + 1)));
        }
        if self.k == 0 {
            return Ok(Self::zero_code(self.field, self.n + 1));
        }
        let rows: Vec<FqVector> =
            self.gen.rows().iter().map(|r| r.extended()).collect::<Result<_>>()?;
        let gen = FqMatrix::from_rows(rows)?;
        Ok(Self::from_rref_unchecked(self.field, self.n + 1, self.k, gen))
    }

    /// Massey's criterion: LCD ⇔ the Gram matrix is nonsingular.
    pub fn is_lcd(&self) -> bool {
        self.hull_dim() == 0
    }

    /// dim(C ∩ C⊥) = k − rank(G·Gᵀ).
    pub fn hull_dim(&self) -> usize {
        if self.k == 0 {
            return 0;
        }
        self.k - self.gen.gram().rank()
    }

    pub fn contains(&self, v: &FqVector) -> Result<bool> {
        if v.field() != self.field || v.len() != self.n {
            return Err(usage("membership test against a vector of the wrong shape"));
        }
        let mut rem = *v;
        let mut col = 0;
        for i in 0..self.k {
            while self.gen.get(i, col) == 0 {
                col += 1;
            }
            let c = rem.get(col);
            if c != 0 {
                rem = rem.sub(&self.gen.row(i).scale(c))?;
            }
        }
        Ok(rem.is_zero())
    }

    /// Visits every codeword (including zero) exactly once.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&FqVector)) -> Result<()> {
        let total = (self.field.order() as u128).checked_pow(self.k as u32);
        if total.is_none_or(|t| t > u128::from(ENUMERATION_GUARD)) {
            return Err(resource(format!(
                "codeword enumeration of q^{} exceeds guard {ENUMERATION_GUARD}",
                self.k
            )));
        }
        let zero = FqVector::zero(self.field, self.n);
        self.walk(0, &zero, &mut f);
        Ok(())
    }

    fn walk(&self, level: usize, acc: &FqVector, f: &mut impl FnMut(&FqVector)) {
        if level == self.k {
            f(acc);
            return;
        }
        let row = self.gen.row(level);
        self.walk(level + 1, acc, f);
        let one = acc.add_unchecked(row);
        self.walk(level + 1, &one, f);
        if self.field == Field::Gf3 {
            let two = one.add_unchecked(row);
            self.walk(level + 1, &two, f);
        }
    }

    pub fn codewords(&self) -> Result<Vec<FqVector>> {
        let mut words = Vec::new();
        self.for_each_codeword(|w| words.push(*w))?;
        Ok(words)
    }

    /// Weight distribution (A_0, …, A_n); memoized.
    pub fn weight_enumerator(&self) -> Result<&WeightEnumerator> {
        if let Some(we) = self.enumerator.get() {
            return Ok(we);
        }
        let mut coeffs = vec![0u64; self.n + 1];
        self.for_each_codeword(|w| coeffs[w.weight()] += 1)?;
        let _ = self.enumerator.set(WeightEnumerator::new(coeffs));
        Ok(self.enumerator.get().expect("just set"))
    }

    /// Minimum nonzero weight; the zero code has none.
    pub fn min_weight(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(domain("the zero code has no minimum weight"));
        }
        let we = self.weight_enumerator()?;
        we.min_positive_weight()
            .ok_or_else(|| crate::error::internal("nonzero code with empty enumerator"))
    }

    /// Minimum weight of the dual code, via the smallest fully dependent
    /// column set of the generator matrix (at most k+1 columns).
    pub fn dual_min_weight(&self) -> Result<usize> {
        if self.k == self.n {
            return Err(domain("the dual of the full space has no minimum weight"));
        }
        if let Some(&d) = self.dual_min.get() {
            return Ok(d);
        }
        let cols: Vec<FqVector> = (0..self.n).map(|j| self.gen.column(j)).collect();
        let limit = (self.k + 1).min(self.n);
        for w in 1..=limit {
            if search_dependent(self.field, &cols, w) {
                let _ = self.dual_min.set(w);
                return Ok(w);
            }
        }
        Err(crate::error::internal("no dependent column set up to k+1 columns"))
    }
}

/// Is there a choice of `w` columns and nonzero coefficients summing to zero?
/// The first coefficient is normalized to 1.
fn search_dependent(field: Field, cols: &[FqVector], w: usize) -> bool {
    fn rec(field: Field, cols: &[FqVector], remaining: usize, start: usize, acc: &FqVector) -> bool {
        if remaining == 0 {
            return acc.is_zero();
        }
        for j in start..=cols.len() - remaining {
            let with_one = acc.add_unchecked(&cols[j]);
            if rec(field, cols, remaining - 1, j + 1, &with_one) {
                return true;
            }
            if field == Field::Gf3 {
                let with_two = with_one.add_unchecked(&cols[j]);
                if rec(field, cols, remaining - 1, j + 1, &with_two) {
                    return true;
                }
            }
        }
        false
    }
    if w > cols.len() {
        return false;
    }
    let k = cols.first().map_or(0, FqVector::len);
    let zero = FqVector::zero(field, k);
    // Coefficient of the first chosen column is 1; the recursion scales the rest.
    for j in 0..=cols.len() - w {
        let acc = zero.add_unchecked(&cols[j]);
        if rec(field, cols, w - 1, j + 1, &acc) {
            return true;
        }
    }
    false
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let c = Self::from_rref_unchecked(self.field, self.n, self.k, self.gen.clone());
        if let Some(we) = self.enumerator.get() {
            let _ = c.enumerator.set(we.clone());
        }
        if let Some(&d) = self.dual_min.get() {
            let _ = c.dual_min.set(d);
        }
        c
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.k == other.k && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl std::hash::Hash for LinearCode {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.n.hash(state);
        self.k.hash(state);
        self.gen.hash(state);
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code over {}", self.n, self.k, self.field)
    }
}

/// Weight distribution of a code: `coeffs[d]` counts codewords of weight d.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightEnumerator {
    coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<u64>) -> Self {
        WeightEnumerator { coeffs }
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&d| self.coeffs[d] > 0)
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "y")?,
                (1, _) => write!(f, "{a}y")?,
                (_, 1) => write!(f, "y^{d}")?,
                _ => write!(f, "{a}y^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
