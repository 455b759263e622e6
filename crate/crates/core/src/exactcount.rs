//! Exact combinatorial arithmetic: binomials, the closed counting formulas,
//! path-count matrices for non-intersecting path systems, and fraction-free
//! determinants.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_signed(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts to `u64` when the count fits.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(BigCount)
            .map_err(|e| Error::InvalidParameter(format!("not a nonnegative integer: {s:?} ({e})")))
    }
}

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Square matrix of nonnegative counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    entries: Vec<Vec<BigCount>>,
}

impl CountMatrix {
    pub fn new(entries: Vec<Vec<BigCount>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 {
            return Err(Error::InvalidParameter("count matrix must have order >= 1".into()));
        }
        if entries.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidParameter("count matrix must be square".into()));
        }
        Ok(CountMatrix { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigCount>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigCount {
        &self.entries[i][j]
    }

    pub fn to_signed(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(BigCount::to_signed).collect())
            .collect()
    }
}

/// Source and destination layout of an m-path system for m x n matrices with
/// entries bounded by k. Consecutive endpoints differ by (1, -1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGVSystem {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub sources: Vec<GridPoint>,
    pub dests: Vec<GridPoint>,
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i; each division is exact
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    BigCount(acc)
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

/// Number of 2 x n weakly increasing matrices with entries in 1..=k:
/// `C(n+k-1, k-1) * C(n+k, k-1) / k`.
pub fn count_wim_closed(n: usize, k: usize) -> Result<BigCount> {
    require_positive("n", n)?;
    require_positive("k", k)?;
    let (n, k) = (n as u64, k as u64);
    let num = binomial(n + k - 1, k as i64 - 1).0 * binomial(n + k, k as i64 - 1).0;
    exact_quotient(num, BigUint::from(k))
}

/// Kekulé count of the hexagon-shaped benzenoid with sides p, q, r:
/// `prod_{i<q} C(p+r+i, r) / C(r+i, r)`.
///
/// Numerator and denominator are accumulated separately and divided once,
/// since individual factors need not be integers.
pub fn count_kekule_closed(p: usize, q: usize, r: usize) -> Result<BigCount> {
    require_positive("p", p)?;
    require_positive("q", q)?;
    let (p, q, r) = (p as u64, q as u64, r as u64);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..q {
        num *= binomial(p + r + i, r as i64).0;
        den *= binomial(r + i, r as i64).0;
    }
    exact_quotient(num, den)
}

fn exact_quotient(num: BigUint, den: BigUint) -> Result<BigCount> {
    let q = &num / &den;
    if &q * &den != num {
        return Err(Error::Internal(format!("{num} is not divisible by {den}")));
    }
    Ok(BigCount(q))
}

/// Number of up/right lattice paths from `a` to `b`.
pub fn path_count(a: GridPoint, b: GridPoint) -> BigCount {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    if dx < 0 || dy < 0 {
        return BigCount::zero();
    }
    binomial((dx + dy) as u64, dx)
}

/// Endpoint layout for the m-path system: source i at (i, -i), destination
/// i at (k-1+i, n-i), 0-based.
pub fn lgv_system(m: usize, n: usize, k: usize) -> Result<LGVSystem> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    require_positive("k", k)?;
    let sources = (0..m as i64).map(|i| GridPoint::new(i, -i)).collect();
    let dests = (0..m as i64)
        .map(|i| GridPoint::new(k as i64 - 1 + i, n as i64 - i))
        .collect();
    Ok(LGVSystem {
        m,
        n,
        k,
        sources,
        dests,
    })
}

/// Pairwise path counts: entry (i, j) counts paths from source i to destination j.
pub fn lgv_matrix(sys: &LGVSystem) -> CountMatrix {
    let entries = sys
        .sources
        .iter()
        .map(|&a| sys.dests.iter().map(|&b| path_count(a, b)).collect())
        .collect();
    CountMatrix { entries }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so the computation never leaves
/// the integers. An empty matrix has determinant 1.
pub fn determinant_exact(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("determinant requires a square matrix".into()));
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for col in 0..n {
        if a[col][col].is_zero() {
            match (col + 1..n).find(|&r| !a[r][col].is_zero()) {
                Some(r) => {
                    a.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in col + 1..n {
            for j in col + 1..n {
                let v = &a[col][col] * &a[i][j] - &a[i][col] * &a[col][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(if sign_flip { -det } else { det })
}

/// Number of m x n weakly increasing matrices with entries in 1..=k, as the
/// determinant of the path-count matrix of the shifted endpoint system.
pub fn count_wim_lgv(m: usize, n: usize, k: usize) -> Result<BigCount> {
    let sys = lgv_system(m, n, k)?;
    let det = determinant_exact(&lgv_matrix(&sys).to_signed())?;
    match det.to_biguint() {
        Some(v) => Ok(BigCount(v)),
        None => Err(Error::Internal(format!(
            "negative path-system determinant {det} for m={m}, n={n}, k={k}"
        ))),
    }
}
