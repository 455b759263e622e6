//! Weakly increasing matrices: validation, exhaustive enumeration, and the
//! decomposition of two-row matrices into chains of pulse matrices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `m * n` accepted by [`enumerate_wim`].
pub const MAX_ENUMERATION_CELLS: usize = 16;

/// An m x n matrix with entries in `1..=k`, weakly increasing along rows and
/// down columns. The bound `k` is part of the matrix identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WIMatrix {
    k: u32,
    rows: Vec<Vec<u32>>,
}

impl WIMatrix {
    pub fn new(rows: Vec<Vec<u32>>, k: u32) -> Result<Self> {
        let signed: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidMatrix("matrix must be at least 1 x 1".into()));
        }
        if k == 0 {
            return Err(Error::InvalidMatrix("bound k must be >= 1".into()));
        }
        if !validate_wim(&signed, k as i64) {
            return Err(Error::InvalidMatrix(format!(
                "{rows:?} is not weakly increasing with entries in 1..={k}"
            )));
        }
        Ok(WIMatrix { k, rows })
    }

    /// The all-ones m x n matrix with bound k.
    pub fn ones(m: usize, n: usize, k: u32) -> Result<Self> {
        WIMatrix::new(vec![vec![1; n]; m], k)
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }
}

impl fmt::Display for WIMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// True iff `rows` is a nonempty rectangular array with entries in `1..=k`
/// that weakly increases along every row and down every column.
pub fn validate_wim(rows: &[Vec<i64>], k: i64) -> bool {
    let Some(first) = rows.first() else {
        return false;
    };
    let n = first.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return false;
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v < 1 || v > k {
                return false;
            }
            if j > 0 && row[j - 1] > v {
                return false;
            }
            if i > 0 && rows[i - 1][j] > v {
                return false;
            }
        }
    }
    true
}

/// Iterator over all m x n weakly increasing matrices with entries in
/// `1..=k`, in lexicographic order of the row-major entry sequence.
#[derive(Debug, Clone)]
pub struct WimEnumeration {
    m: usize,
    n: usize,
    k: u32,
    cells: Vec<u32>,
    done: bool,
}

impl WimEnumeration {
    fn lower_bound(&self, idx: usize) -> u32 {
        let (i, j) = (idx / self.n, idx % self.n);
        let left = if j > 0 { self.cells[idx - 1] } else { 1 };
        let up = if i > 0 { self.cells[idx - self.n] } else { 1 };
        left.max(up)
    }

    /// Lexicographic successor: bump the last cell below k and reset every
    /// later cell to its smallest admissible value.
    fn advance(&mut self) {
        match self.cells.iter().rposition(|&v| v < self.k) {
            None => self.done = true,
            Some(p) => {
                self.cells[p] += 1;
                for idx in p + 1..self.cells.len() {
                    self.cells[idx] = self.lower_bound(idx);
                }
            }
        }
    }
}

impl Iterator for WimEnumeration {
    type Item = WIMatrix;

    fn next(&mut self) -> Option<WIMatrix> {
        if self.done {
            return None;
        }
        let rows = self.cells.chunks(self.n).map(<[u32]>::to_vec).collect();
        let out = WIMatrix { k: self.k, rows };
        self.advance();
        Some(out)
    }
}

/// Brute-force stream of every m x n weakly increasing matrix with entries in
/// `1..=k`. Rejects `m * n > MAX_ENUMERATION_CELLS`.
pub fn enumerate_wim(m: usize, n: usize, k: usize) -> Result<WimEnumeration> {
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::InvalidParameter("m, n and k must be >= 1".into()));
    }
    if m * n > MAX_ENUMERATION_CELLS {
        return Err(Error::budget("matrix enumeration cells", m * n, MAX_ENUMERATION_CELLS));
    }
    let k = u32::try_from(k).map_err(|_| Error::InvalidParameter("k too large".into()))?;
    Ok(WimEnumeration {
        m,
        n,
        k,
        cells: vec![1; m * n],
        done: false,
    })
}

impl WimEnumeration {
    pub fn shape(&self) -> (usize, usize, u32) {
        (self.m, self.n, self.k)
    }
}

/// A 2 x n pulse matrix, identified by the number of leading zeros in its
/// top row (`x`) and bottom row (`y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PulsePair {
    pub x: usize,
    pub y: usize,
}

impl PulsePair {
    pub const fn new(x: usize, y: usize) -> Self {
        PulsePair { x, y }
    }
}

impl From<(usize, usize)> for PulsePair {
    fn from((x, y): (usize, usize)) -> Self {
        PulsePair { x, y }
    }
}

/// Ordered pulses whose sum, plus the all-ones matrix, is a 2 x n weakly
/// increasing matrix with bound `pulses.len() + 1`.
///
/// Both coordinate sequences are nondecreasing (each pulse dominates the next
/// component-wise) and `y <= x <= n` for every pulse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PulseChain {
    n: usize,
    pulses: Vec<PulsePair>,
}

impl PulseChain {
    pub fn new(n: usize, pulses: Vec<PulsePair>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidChain("n must be >= 1".into()));
        }
        for (i, p) in pulses.iter().enumerate() {
            if p.x > n {
                return Err(Error::InvalidChain(format!("pulse {} has x = {} > n = {n}", i + 1, p.x)));
            }
            if p.y > p.x {
                return Err(Error::InvalidChain(format!("pulse {} has y = {} > x = {}", i + 1, p.y, p.x)));
            }
        }
        for (i, w) in pulses.windows(2).enumerate() {
            if w[1].x < w[0].x || w[1].y < w[0].y {
                return Err(Error::InvalidChain(format!(
                    "pulse {} = ({},{}) does not dominate pulse {} = ({},{})",
                    i + 1,
                    w[0].x,
                    w[0].y,
                    i + 2,
                    w[1].x,
                    w[1].y
                )));
            }
        }
        Ok(PulseChain { n, pulses })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pulses(&self) -> &[PulsePair] {
        &self.pulses
    }

    pub fn len(&self) -> usize {
        self.pulses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pulses.is_empty()
    }
}

/// Splits a two-row matrix into its pulse chain.
///
/// Subtracts the all-ones matrix, then repeatedly takes the 0/1 indicator of
/// the nonzero residue entries as the next pulse and subtracts it, k - 1
/// times in total.
pub fn pulse_decompose(matrix: &WIMatrix) -> Result<PulseChain> {
    if matrix.m() != 2 {
        return Err(Error::InvalidMatrix(format!(
            "pulse decomposition needs 2 rows, got {}",
            matrix.m()
        )));
    }
    let n = matrix.n();
    let mut residue: Vec<Vec<u32>> = matrix.rows().iter().map(|r| r.iter().map(|&v| v - 1).collect()).collect();
    let mut pulses = Vec::with_capacity(matrix.k() as usize - 1);
    for _ in 1..matrix.k() {
        let leading_zeros = |row: &[u32]| row.iter().take_while(|&&v| v == 0).count();
        pulses.push(PulsePair::new(leading_zeros(&residue[0]), leading_zeros(&residue[1])));
        for v in residue.iter_mut().flatten() {
            *v = v.saturating_sub(1);
        }
    }
    debug_assert!(residue.iter().flatten().all(|&v| v == 0));
    PulseChain::new(n, pulses)
}

/// Sums the all-ones matrix and the chain's pulses. The bound of the result is
/// `chain.len() + 1`.
pub fn pulse_compose(chain: &PulseChain) -> WIMatrix {
    let n = chain.n();
    let row = |sel: fn(&PulsePair) -> usize| -> Vec<u32> {
        (1..=n)
            .map(|j| 1 + chain.pulses().iter().filter(|p| sel(p) < j).count() as u32)
            .collect()
    };
    let rows = vec![row(|p| p.x), row(|p| p.y)];
    WIMatrix {
        k: chain.len() as u32 + 1,
        rows,
    }
}

/// Every valid pulse chain of `len` pulses over n columns, by filtering the
/// full product of candidate pairs. Exponential; intended as an oracle.
pub fn enumerate_pulse_chains(n: usize, len: usize) -> Vec<PulseChain> {
    let pairs: Vec<PulsePair> = (0..=n)
        .flat_map(|x| (0..=n).map(move |y| PulsePair::new(x, y)))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let pulses: Vec<PulsePair> = idx.iter().map(|&i| pairs[i]).collect();
        if let Ok(c) = PulseChain::new(n, pulses) {
            out.push(c);
        }
        // odometer
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pairs.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
