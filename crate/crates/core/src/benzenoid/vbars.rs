use serde::{Deserialize, Serialize};

use super::graph::{BenzenoidGraph, EdgeId, EdgeKind};
use super::matching::KekuleStructure;
use crate::error::{Error, Result};
use crate::wim::{pulse_compose, pulse_decompose, PulseChain, PulsePair, WIMatrix};

/// Positions of the selected vertical edges of a Kekulé structure on
/// O{n,2,r}, encoded as two coordinate sequences of length r.
///
/// The v-bars sit at (0, x1), (1, y1), (1, x2+1), ..., (r-1, y(r-1)),
/// (r-1, xr+1), (r, yr).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VBarTuple {
    pub n: usize,
    pub r: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl VBarTuple {
    /// (row, index) label of every v-bar, top to bottom, left to right.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let r = self.r;
        let mut out = Vec::with_capacity(2 * r);
        out.push((0, self.xs[0]));
        for i in 1..r {
            out.push((i, self.ys[i - 1]));
            out.push((i, self.xs[i] + 1));
        }
        out.push((r, self.ys[r - 1]));
        out
    }

    pub fn to_chain(&self) -> Result<PulseChain> {
        let pulses = self.xs.iter().zip(&self.ys).map(|(&x, &y)| PulsePair::new(x, y)).collect();
        PulseChain::new(self.n, pulses)
    }

    pub fn from_chain(chain: &PulseChain) -> Self {
        VBarTuple {
            n: chain.n(),
            r: chain.len(),
            xs: chain.pulses().iter().map(|p| p.x).collect(),
            ys: chain.pulses().iter().map(|p| p.y).collect(),
        }
    }
}

/// True iff the tuple has r >= 1 entries per side, both sides nondecreasing
/// in `0..=n`, `y_i <= x_i`, and `y_i <= x_{i+1}`.
pub fn validate_vbar_tuple(t: &VBarTuple) -> bool {
    let r = t.r;
    r >= 1
        && t.n >= 1
        && t.xs.len() == r
        && t.ys.len() == r
        && t.xs.iter().chain(&t.ys).all(|&v| v <= t.n)
        && t.xs.windows(2).all(|w| w[0] <= w[1])
        && t.ys.windows(2).all(|w| w[0] <= w[1])
        && t.xs.iter().zip(&t.ys).all(|(x, y)| y <= x)
        && t.ys.iter().zip(t.xs.iter().skip(1)).all(|(y, x)| y <= x)
}

fn require_q2(graph: &BenzenoidGraph) -> Result<()> {
    if graph.q() != 2 {
        return Err(Error::InvalidParameter(format!(
            "v-bar analysis needs q = 2, graph has q = {}",
            graph.q()
        )));
    }
    Ok(())
}

/// Reads the v-bar tuple off a Kekulé structure of O{n,2,r}.
///
/// Expects one v-bar in the top and bottom rows and two in every middle row;
/// anything else, or a tuple failing [`validate_vbar_tuple`], is reported as a
/// [`Error::StructureViolation`].
pub fn extract_vbars(k: &KekuleStructure<'_>) -> Result<VBarTuple> {
    let g = k.graph();
    require_q2(g)?;
    let (n, r) = (g.p(), g.r());
    let mut per_row: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
    for (row, j) in k.vbars() {
        per_row[row].push(j);
    }
    let total: usize = per_row.iter().map(Vec::len).sum();
    if total != 2 * r {
        return Err(Error::StructureViolation(format!("found {total} v-bars, expected {}", 2 * r)));
    }
    let expect = |row: usize| if row == 0 || row == r { 1 } else { 2 };
    if let Some(row) = (0..=r).find(|&row| per_row[row].len() != expect(row)) {
        return Err(Error::StructureViolation(format!(
            "row {row} has {} v-bars, expected {}",
            per_row[row].len(),
            expect(row)
        )));
    }
    let mut xs = vec![per_row[0][0]];
    let mut ys = Vec::with_capacity(r);
    for row in per_row.iter().take(r).skip(1) {
        ys.push(row[0]);
        let right = row[1];
        if right == 0 {
            return Err(Error::StructureViolation("right v-bar at index 0".into()));
        }
        xs.push(right - 1);
    }
    ys.push(per_row[r][0]);
    let t = VBarTuple { n, r, xs, ys };
    if !validate_vbar_tuple(&t) {
        return Err(Error::StructureViolation(format!(
            "v-bars xs={:?} ys={:?} break the ordering constraints",
            t.xs, t.ys
        )));
    }
    Ok(t)
}

/// Builds the unique Kekulé structure of O{n,2,r} whose v-bars are exactly
/// those of `t`.
///
/// With the vertical edges decided, every remaining edge is a slant edge and
/// the slant edges form disjoint zigzag lines along the row boundaries. The
/// v-bar endpoints cut each line into runs of free vertices; each run has a
/// single perfect matching, alternating from its left end. These runs are
/// the willow arms, the caterpillars and the leftover bottom zigzag. An odd
/// run means no completion exists.
pub fn reconstruct_from_vbars<'g>(graph: &'g BenzenoidGraph, t: &VBarTuple) -> Result<KekuleStructure<'g>> {
    require_q2(graph)?;
    if !validate_vbar_tuple(t) {
        return Err(Error::InvalidVBars(format!("xs={:?} ys={:?} n={} r={}", t.xs, t.ys, t.n, t.r)));
    }
    if (graph.p(), graph.r()) != (t.n, t.r) {
        return Err(Error::InvalidVBars(format!(
            "tuple is for O{{{},2,{}}}, graph is O{{{},2,{}}}",
            t.n,
            t.r,
            graph.p(),
            graph.r()
        )));
    }
    let mut covered = vec![false; graph.vertex_count()];
    let mut selected: Vec<EdgeId> = Vec::with_capacity(graph.vertex_count() / 2);
    for (row, j) in t.positions() {
        let e = graph
            .vertical_edge(row, j)
            .ok_or_else(|| Error::InvalidVBars(format!("no vertical edge at ({row},{j})")))?;
        let edge = graph.edge(e);
        covered[edge.a] = true;
        covered[edge.b] = true;
        selected.push(e);
    }
    for line in graph.slant_lines() {
        for run in line.split(|&v| covered[v]) {
            if run.len() % 2 == 1 {
                let v = graph.vertices()[run[run.len() - 1]];
                return Err(Error::StructureViolation(format!(
                    "vertex ({},{}) is left unmatched",
                    v.x, v.y
                )));
            }
            for pair in run.chunks(2) {
                let e = graph
                    .find_edge(pair[0], pair[1])
                    .ok_or_else(|| Error::Internal("slant line is not a path".into()))?;
                debug_assert_eq!(graph.edge(e).kind, EdgeKind::Slant);
                selected.push(e);
            }
        }
    }
    KekuleStructure::new(graph, selected)
}

/// Matrix to Kekulé structure on O{n,2,k-1}: pulse chain, read as v-bar
/// coordinates, then filled in.
pub fn matrix_to_kekule<'g>(m: &WIMatrix, graph: &'g BenzenoidGraph) -> Result<KekuleStructure<'g>> {
    if m.m() != 2 {
        return Err(Error::InvalidMatrix("only 2-row matrices map to Kekulé structures".into()));
    }
    if m.k() < 2 {
        return Err(Error::InvalidParameter("k = 1 has no benzenoid counterpart".into()));
    }
    if graph.params() != (m.n(), 2, m.k() as usize - 1) {
        let (p, q, r) = graph.params();
        return Err(Error::InvalidParameter(format!(
            "matrix needs O{{{},2,{}}}, got O{{{p},{q},{r}}}",
            m.n(),
            m.k() - 1
        )));
    }
    let chain = pulse_decompose(m)?;
    reconstruct_from_vbars(graph, &VBarTuple::from_chain(&chain))
}

/// Inverse of [`matrix_to_kekule`]; the bound of the result is r + 1.
pub fn kekule_to_matrix(k: &KekuleStructure<'_>) -> Result<WIMatrix> {
    let t = extract_vbars(k)?;
    Ok(pulse_compose(&t.to_chain()?))
}

/// Every valid v-bar tuple for O{n,2,r}, via pulse chains.
pub fn enumerate_vbar_tuples(n: usize, r: usize) -> Vec<VBarTuple> {
    crate::wim::enumerate_pulse_chains(n, r)
        .iter()
        .map(VBarTuple::from_chain)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benzenoid::graph::build_benzenoid;
    use crate::benzenoid::matching::{constrained_completion, enumerate_kekule, is_kekule, DEFAULT_EDGE_BUDGET};
    use crate::wim::enumerate_wim;
    use std::collections::HashSet;

    fn w() -> WIMatrix {
        WIMatrix::new(vec![vec![1, 1, 2, 3, 6, 6], vec![1, 1, 2, 4, 6, 7]], 7).unwrap()
    }

    fn tuple(n: usize, xs: &[usize], ys: &[usize]) -> VBarTuple {
        VBarTuple {
            n,
            r: xs.len(),
            xs: xs.to_vec(),
            ys: ys.to_vec(),
        }
    }

    #[test]
    fn validation_examples() {
        assert!(validate_vbar_tuple(&tuple(6, &[2, 3, 4, 4, 4, 6], &[2, 3, 3, 4, 4, 5])));
        assert!(!validate_vbar_tuple(&tuple(3, &[1], &[2])));
        assert!(!validate_vbar_tuple(&tuple(3, &[0, 3], &[2, 3])));
        assert!(!validate_vbar_tuple(&tuple(3, &[4], &[0])));
        assert!(!validate_vbar_tuple(&tuple(3, &[2, 1], &[0, 0])));
    }

    #[test]
    fn figure_structure() {
        let g = build_benzenoid(6, 2, 6).unwrap();
        let k = matrix_to_kekule(&w(), &g).unwrap();
        assert!(is_kekule(&g, k.selected()));
        assert_eq!(
            k.vbars(),
            vec![
                (0, 2),
                (1, 2),
                (1, 4),
                (2, 3),
                (2, 5),
                (3, 3),
                (3, 5),
                (4, 4),
                (4, 5),
                (5, 4),
                (5, 7),
                (6, 5)
            ]
        );
        let t = extract_vbars(&k).unwrap();
        assert_eq!(t.xs, vec![2, 3, 4, 4, 4, 6]);
        assert_eq!(t.ys, vec![2, 3, 3, 4, 4, 5]);
        assert_eq!(kekule_to_matrix(&k).unwrap(), w());
    }

    #[test]
    fn minimum_matrix() {
        for n in 1..=4 {
            for r in 1..=4 {
                let g = build_benzenoid(n, 2, r).unwrap();
                let ones = WIMatrix::ones(2, n, r as u32 + 1).unwrap();
                let k = matrix_to_kekule(&ones, &g).unwrap();
                let t = extract_vbars(&k).unwrap();
                assert_eq!(t.xs, vec![n; r]);
                assert_eq!(t.ys, vec![n; r]);
                assert_eq!(kekule_to_matrix(&k).unwrap(), ones);
            }
        }
    }

    #[test]
    fn rejects_k1_and_wrong_graph() {
        let g = build_benzenoid(2, 2, 1).unwrap();
        assert!(matrix_to_kekule(&WIMatrix::ones(2, 2, 1).unwrap(), &g).is_err());
        assert!(matrix_to_kekule(&WIMatrix::ones(2, 2, 3).unwrap(), &g).is_err());
        assert!(reconstruct_from_vbars(&g, &tuple(2, &[1], &[2])).is_err());
    }

    #[test]
    fn every_structure_yields_a_valid_tuple() {
        let g = build_benzenoid(2, 2, 2).unwrap();
        let mut seen = HashSet::new();
        for k in enumerate_kekule(&g, DEFAULT_EDGE_BUDGET).unwrap() {
            let t = extract_vbars(&k).unwrap();
            assert!(validate_vbar_tuple(&t));
            assert_eq!(reconstruct_from_vbars(&g, &t).unwrap(), k);
            assert!(seen.insert(t));
        }
        assert_eq!(seen.len(), 20);
    }

    #[test]
    fn reconstruction_agrees_with_completion() {
        for n in 1..=2 {
            for r in 1..=2 {
                let g = build_benzenoid(n, 2, r).unwrap();
                for t in enumerate_vbar_tuples(n, r) {
                    let on: Vec<EdgeId> =
                        t.positions().iter().map(|&(i, j)| g.vertical_edge(i, j).unwrap()).collect();
                    let off: Vec<EdgeId> =
                        g.vbar_index().iter().flatten().copied().filter(|e| !on.contains(e)).collect();
                    let c = constrained_completion(&g, &on, &off, DEFAULT_EDGE_BUDGET).unwrap();
                    assert_eq!(c.len(), 1);
                    assert_eq!(c[0], reconstruct_from_vbars(&g, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn bijection_on_m_2_3() {
        let g = build_benzenoid(2, 2, 2).unwrap();
        let images: HashSet<Vec<EdgeId>> = enumerate_wim(2, 2, 3)
            .unwrap()
            .map(|m| {
                let k = matrix_to_kekule(&m, &g).unwrap();
                assert_eq!(kekule_to_matrix(&k).unwrap(), m);
                k.selected().to_vec()
            })
            .collect();
        let all: HashSet<Vec<EdgeId>> = enumerate_kekule(&g, DEFAULT_EDGE_BUDGET)
            .unwrap()
            .map(|k| k.selected().to_vec())
            .collect();
        assert_eq!(images.len(), 20);
        assert_eq!(images, all);
    }

    #[test]
    fn extract_requires_q2() {
        let g = build_benzenoid(1, 1, 1).unwrap();
        let k = enumerate_kekule(&g, DEFAULT_EDGE_BUDGET).unwrap().next().unwrap();
        assert!(extract_vbars(&k).is_err());
    }
}
