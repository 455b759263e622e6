//! Up/right lattice paths and their correspondence with weakly increasing
//! row vectors, plus tuples of non-intersecting paths for m-row matrices.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactcount::{binomial, lgv_system, GridPoint};
use crate::wim::WIMatrix;

/// Default ceiling on candidate tuples examined by
/// [`enumerate_nonintersecting_tuples`].
pub const DEFAULT_TUPLE_BUDGET: u128 = 100_000_000;

/// A unit lattice step. `Right` sorts before `Up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Right,
    Up,
}

impl Move {
    pub fn as_char(self) -> char {
        match self {
            Move::Right => 'R',
            Move::Up => 'U',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    start: GridPoint,
    moves: Vec<Move>,
}

impl LatticePath {
    pub fn new(start: GridPoint, moves: Vec<Move>) -> Self {
        LatticePath { start, moves }
    }

    /// Parses a move string over `R`/`U`.
    pub fn from_moves(start: GridPoint, moves: &str) -> Result<Self> {
        let moves = moves
            .chars()
            .map(|c| match c {
                'R' => Ok(Move::Right),
                'U' => Ok(Move::Up),
                other => Err(Error::InvalidPath(format!("unknown move {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, moves })
    }

    pub fn start(&self) -> GridPoint {
        self.start
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn move_string(&self) -> String {
        self.moves.iter().map(|m| m.as_char()).collect()
    }

    pub fn end(&self) -> GridPoint {
        *self.vertices().last().expect("a path visits its start")
    }

    /// Visited vertices, start first; `moves().len() + 1` entries.
    pub fn vertices(&self) -> Vec<GridPoint> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(p);
        for m in &self.moves {
            match m {
                Move::Right => p.x += 1,
                Move::Up => p.y += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn count(&self, mv: Move) -> usize {
        self.moves.iter().filter(|&&m| m == mv).count()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.move_string())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Move::Right),
            "U" => Ok(Move::Up),
            _ => Err(Error::InvalidPath(format!("unknown move {s:?}"))),
        }
    }
}

/// Row vector of a path with `n` up-steps and `k - 1` right-steps: entry i is
/// one plus the number of right-steps before the i-th up-step.
pub fn path_to_row_vector(path: &LatticePath, n: usize, k: usize) -> Result<Vec<u32>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let ups = path.count(Move::Up);
    let rights = path.count(Move::Right);
    if ups != n || rights != k - 1 {
        return Err(Error::InvalidPath(format!(
            "expected {n} up and {} right moves, found {ups} and {rights}",
            k - 1
        )));
    }
    let mut v = Vec::with_capacity(n);
    let mut seen_right = 0u32;
    for m in path.moves() {
        match m {
            Move::Right => seen_right += 1,
            Move::Up => v.push(1 + seen_right),
        }
    }
    Ok(v)
}

/// Inverse of [`path_to_row_vector`]: the run of right-steps before up-step i
/// is `v[i] - v[i-1]` (with `v[-1] = 1`), and the trailing run is `k - v[n-1]`.
pub fn row_vector_to_path(v: &[u32], k: usize, start: GridPoint) -> Result<LatticePath> {
    if v.is_empty() {
        return Err(Error::InvalidPath("row vector must be nonempty".into()));
    }
    let k32 = k as u32;
    if v.iter().any(|&x| x < 1 || x > k32) || v.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidPath(format!(
            "{v:?} is not weakly increasing with entries in 1..={k}"
        )));
    }
    let mut moves = Vec::with_capacity(v.len() + k - 1);
    let mut prev = 1u32;
    for &x in v {
        moves.extend(std::iter::repeat_n(Move::Right, (x - prev) as usize));
        moves.push(Move::Up);
        prev = x;
    }
    moves.extend(std::iter::repeat_n(Move::Right, (k32 - prev) as usize));
    Ok(LatticePath { start, moves })
}

/// True iff the two paths share at least one visited vertex.
pub fn paths_intersect(p: &LatticePath, q: &LatticePath) -> bool {
    let seen: HashSet<GridPoint> = p.vertices().into_iter().collect();
    q.vertices().iter().any(|v| seen.contains(v))
}

/// m paths for an (n, k) system: path i runs from (i, -i) to (k-1+i, n-i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathTuple {
    n: usize,
    k: usize,
    paths: Vec<LatticePath>,
}

impl PathTuple {
    /// Checks the endpoint layout only; intersection is checked separately.
    pub fn new(n: usize, k: usize, paths: Vec<LatticePath>) -> Result<Self> {
        if paths.is_empty() || n == 0 || k == 0 {
            return Err(Error::InvalidParameter("tuple needs m, n, k >= 1".into()));
        }
        let sys = lgv_system(paths.len(), n, k)?;
        for (i, p) in paths.iter().enumerate() {
            if p.start() != sys.sources[i] || p.end() != sys.dests[i] {
                return Err(Error::InvalidPath(format!(
                    "path {} runs {} -> {}, expected {} -> {}",
                    i + 1,
                    p.start(),
                    p.end(),
                    sys.sources[i],
                    sys.dests[i]
                )));
            }
        }
        Ok(PathTuple { n, k, paths })
    }

    pub fn m(&self) -> usize {
        self.paths.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    /// First intersecting pair (0-based), if any.
    pub fn first_intersection(&self) -> Option<(usize, usize)> {
        for i in 0..self.paths.len() {
            for j in i + 1..self.paths.len() {
                if paths_intersect(&self.paths[i], &self.paths[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_non_intersecting(&self) -> bool {
        self.first_intersection().is_none()
    }
}

/// Maps row i of a weakly increasing matrix to path i of the shifted system.
///
/// For two rows the image is always non-intersecting; for more rows this is
/// checked and an [`Error::Intersecting`] is returned if it fails.
pub fn matrix_to_path_tuple(matrix: &WIMatrix) -> Result<PathTuple> {
    let k = matrix.k() as usize;
    let sys = lgv_system(matrix.m(), matrix.n(), k)?;
    let paths = matrix
        .rows()
        .iter()
        .zip(&sys.sources)
        .map(|(row, &s)| row_vector_to_path(row, k, s))
        .collect::<Result<Vec<_>>>()?;
    let tuple = PathTuple::new(matrix.n(), k, paths)?;
    if let Some((i, j)) = tuple.first_intersection() {
        return Err(Error::Intersecting(i + 1, j + 1));
    }
    Ok(tuple)
}

/// Stacks the row vectors of a non-intersecting tuple into a matrix.
pub fn path_tuple_to_matrix(tuple: &PathTuple) -> Result<WIMatrix> {
    if let Some((i, j)) = tuple.first_intersection() {
        return Err(Error::Intersecting(i + 1, j + 1));
    }
    let rows = tuple
        .paths()
        .iter()
        .map(|p| path_to_row_vector(p, tuple.n(), tuple.k()))
        .collect::<Result<Vec<_>>>()?;
    WIMatrix::new(rows, tuple.k() as u32)
}

/// All move sequences with `rights` R's and `ups` U's, in lexicographic
/// order (R < U).
pub fn all_move_sequences(rights: usize, ups: usize) -> Vec<Vec<Move>> {
    fn rec(r: usize, u: usize, cur: &mut Vec<Move>, out: &mut Vec<Vec<Move>>) {
        if r == 0 && u == 0 {
            out.push(cur.clone());
            return;
        }
        if r > 0 {
            cur.push(Move::Right);
            rec(r - 1, u, cur, out);
            cur.pop();
        }
        if u > 0 {
            cur.push(Move::Up);
            rec(r, u - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rights, ups, &mut Vec::with_capacity(rights + ups), &mut out);
    out
}

/// Horizontal extent of a path on each row it touches, indexed by `y - y0`.
#[derive(Debug, Clone)]
struct RowSpans {
    y0: i64,
    spans: Vec<(i64, i64)>,
}

impl RowSpans {
    fn of(path: &LatticePath) -> Self {
        let verts = path.vertices();
        let y0 = verts[0].y;
        let mut spans: Vec<(i64, i64)> = Vec::new();
        for v in verts {
            let idx = (v.y - y0) as usize;
            if idx == spans.len() {
                spans.push((v.x, v.x));
            } else {
                spans[idx].1 = v.x;
            }
        }
        RowSpans { y0, spans }
    }

    /// Up/right paths visit a contiguous x-range per row, so two paths share
    /// a vertex iff some common row has overlapping ranges.
    fn meets(&self, other: &RowSpans) -> bool {
        let lo = self.y0.max(other.y0);
        let hi = (self.y0 + self.spans.len() as i64).min(other.y0 + other.spans.len() as i64);
        (lo..hi).any(|y| {
            let a = self.spans[(y - self.y0) as usize];
            let b = other.spans[(y - other.y0) as usize];
            a.0 <= b.1 && b.0 <= a.1
        })
    }
}

/// Stream of every pairwise non-intersecting tuple of the (m, n, k) system,
/// ordered lexicographically by the tuple of move strings.
pub struct TupleEnumeration {
    n: usize,
    k: usize,
    /// Candidate paths per slot, with their row spans.
    candidates: Vec<Vec<(LatticePath, RowSpans)>>,
    /// Next candidate index to try per slot; `cursor.len()` is the depth.
    cursor: Vec<usize>,
    chosen: Vec<usize>,
    done: bool,
}

impl TupleEnumeration {
    fn compatible(&self, slot: usize, idx: usize) -> bool {
        let spans = &self.candidates[slot][idx].1;
        self.chosen[..slot]
            .iter()
            .enumerate()
            .all(|(s, &c)| !self.candidates[s][c].1.meets(spans))
    }
}

impl Iterator for TupleEnumeration {
    type Item = PathTuple;

    fn next(&mut self) -> Option<PathTuple> {
        let m = self.candidates.len();
        while !self.done {
            let depth = self.cursor.len();
            if depth == 0 {
                self.done = true;
                break;
            }
            let slot = depth - 1;
            let start = self.cursor[slot];
            let found = (start..self.candidates[slot].len()).find(|&i| self.compatible(slot, i));
            match found {
                None => {
                    self.cursor.pop();
                    self.chosen.truncate(slot);
                }
                Some(i) => {
                    self.cursor[slot] = i + 1;
                    self.chosen.truncate(slot);
                    self.chosen.push(i);
                    if depth == m {
                        let paths = self
                            .chosen
                            .iter()
                            .enumerate()
                            .map(|(s, &c)| self.candidates[s][c].0.clone())
                            .collect();
                        return Some(PathTuple {
                            n: self.n,
                            k: self.k,
                            paths,
                        });
                    }
                    self.cursor.push(0);
                }
            }
        }
        None
    }
}

/// Brute-force stream of non-intersecting tuples. Rejects systems with more
/// than `budget` candidate tuples (`C(n+k-1, k-1)^m`).
pub fn enumerate_nonintersecting_tuples(m: usize, n: usize, k: usize, budget: u128) -> Result<TupleEnumeration> {
    let sys = lgv_system(m, n, k)?;
    let per_path = binomial((n + k - 1) as u64, k as i64 - 1).into_inner();
    let candidates = num_traits::pow(per_path, m);
    if candidates > BigUint::from(budget) {
        return Err(Error::budget("candidate path tuples", candidates, budget));
    }
    let moves = all_move_sequences(k - 1, n);
    let candidates = sys
        .sources
        .iter()
        .map(|&s| {
            moves
                .iter()
                .map(|mv| {
                    let p = LatticePath::new(s, mv.clone());
                    let spans = RowSpans::of(&p);
                    (p, spans)
                })
                .collect()
        })
        .collect();
    Ok(TupleEnumeration {
        n,
        k,
        candidates,
        cursor: vec![0],
        chosen: Vec::with_capacity(m),
        done: false,
    })
}
