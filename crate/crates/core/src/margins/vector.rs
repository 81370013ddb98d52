use std::fmt;
use std::str::FromStr;

use super::mirror::MirrorPermutation;
use super::partition;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A row or column sum vector: a finite sequence of nonnegative exact scalars.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MarginVector(Vec<Scalar>);

impl MarginVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|x| x.is_negative()) {
            return Err(Error::NegativeEntry(bad.to_string()));
        }
        Ok(MarginVector(entries))
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Scalar::from_integer(x)).collect())
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn total(&self) -> Scalar {
        self.0.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Scalar::is_integer)
    }

    /// Entries as `i64`, failing on the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::NonInteger(x.to_string())))
            .collect()
    }

    pub fn decreasing_rearrangement(&self) -> Self {
        MarginVector(partition::sorted_desc(&self.0))
    }

    /// Conjugate of the decreasing rearrangement, viewed as an integer partition.
    pub fn conjugate(&self) -> Result<Self> {
        let ints = self.to_integers()?;
        Self::from_integers(&partition::conjugate(&ints))
    }

    pub fn majorizes(&self, other: &MarginVector) -> bool {
        partition::majorizes(&self.0, &other.0)
    }

    pub fn is_palindromic(&self) -> bool {
        partition::is_palindromic(&self.0)
    }

    pub fn reverse(&self) -> Self {
        MarginVector(partition::reversed(&self.0))
    }

    pub fn odd_count(&self) -> Result<usize> {
        Ok(partition::odd_count(&self.to_integers()?))
    }

    /// Sorts the top half into weakly decreasing order with a mirror
    /// permutation, so the result is initially nonincreasing.
    pub fn normalize_initially_nonincreasing(&self) -> Result<(Self, MirrorPermutation)> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let sigma = MirrorPermutation::sorting(&self.0);
        Ok((MarginVector(sigma.apply(&self.0)), sigma))
    }
}

impl FromStr for MarginVector {
    type Err = Error;

    /// Comma-separated scalars; the empty string is the empty vector.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(MarginVector(Vec::new()));
        }
        let entries = t.split(',').map(str::parse).collect::<Result<Vec<Scalar>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for MarginVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MarginVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A margin instance `(R, S)` with the common total `N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarginPair {
    rows: MarginVector,
    cols: MarginVector,
    total: Scalar,
}

impl MarginPair {
    pub fn new(rows: MarginVector, cols: MarginVector) -> Result<Self> {
        let (tr, tc) = (rows.total(), cols.total());
        if tr != tc {
            return Err(Error::SumMismatch { rows: tr.to_string(), cols: tc.to_string() });
        }
        Ok(MarginPair { rows, cols, total: tr })
    }

    pub fn from_integers(rows: &[i64], cols: &[i64]) -> Result<Self> {
        Self::new(MarginVector::from_integers(rows)?, MarginVector::from_integers(cols)?)
    }

    pub fn rows(&self) -> &MarginVector {
        &self.rows
    }

    pub fn cols(&self) -> &MarginVector {
        &self.cols
    }

    pub fn total(&self) -> &Scalar {
        &self.total
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    /// The pair `(S, R)`: margins of the transposed matrix.
    pub fn transpose(&self) -> Self {
        MarginPair { rows: self.cols.clone(), cols: self.rows.clone(), total: self.total.clone() }
    }

    pub fn to_integers(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        Ok((self.rows.to_integers()?, self.cols.to_integers()?))
    }

    /// Integer margins satisfying `r_i <= n` and `s_j <= m`.
    pub fn zero_one_margins(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        let (r, s) = self.to_integers()?;
        let (m, n) = (r.len() as i64, s.len() as i64);
        if let Some((i, x)) = r.iter().enumerate().find(|(_, &x)| x > n) {
            return Err(Error::BoundViolation(format!("r_{} = {x} exceeds n = {n}", i + 1)));
        }
        if let Some((j, x)) = s.iter().enumerate().find(|(_, &x)| x > m) {
            return Err(Error::BoundViolation(format!("s_{} = {x} exceeds m = {m}", j + 1)));
        }
        Ok((r, s))
    }
}

impl fmt::Display for MarginPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R={};S={}", self.rows, self.cols)
    }
}
