use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Lattice position of a vertex. `x` is measured in half hexagon widths and
/// `y` in half side lengths, growing downwards, so every vertex of the
/// pointy-top hexagonal lattice has integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Vertical,
    Slant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
    pub kind: EdgeKind,
    /// (row, index) for vertical edges: the hexagon row and the number of
    /// vertical edges strictly to the left in that row.
    pub label: Option<(usize, usize)>,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hexagon {
    pub row: usize,
    pub col: usize,
    /// Top, upper right, lower right, bottom, lower left, upper left.
    pub vertices: [VertexId; 6],
}

/// The hexagon-shaped benzenoid with top side p and slanted sides q and r.
///
/// Row t (from the top, `0..q+r-1`) holds `p + min(t, q-1, r-1, q+r-2-t)`
/// hexagons. The left boundary moves half a hexagon left per row for the
/// first `q - 1` rows and right afterwards. For `q = 2` this gives a top row
/// of p hexagons, middle rows of p + 1 hexagons each shifted right of the one
/// above, and a bottom row of p.
#[derive(Debug, Clone)]
pub struct BenzenoidGraph {
    p: usize,
    q: usize,
    r: usize,
    hex_rows: Vec<usize>,
    row_offsets: Vec<i64>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
    hexagons: Vec<Hexagon>,
    vbar_index: Vec<Vec<EdgeId>>,
}

pub fn build_benzenoid(p: usize, q: usize, r: usize) -> Result<BenzenoidGraph> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "benzenoid parameters must be >= 1, got ({p},{q},{r})"
        )));
    }
    let rows = q + r - 1;
    let hex_rows: Vec<usize> = (0..rows)
        .map(|t| p + t.min(q - 1).min(r - 1).min(q + r - 2 - t))
        .collect();
    let row_offsets: Vec<i64> = (0..rows)
        .map(|t| -(t.min(q - 1) as i64) + t.saturating_sub(q - 1) as i64)
        .collect();

    // hexagon corners in (x, y) before id assignment
    let corners = |t: usize, j: usize| -> [Vertex; 6] {
        let c = row_offsets[t] + 1 + 2 * j as i64;
        let y = 3 * t as i64;
        [
            Vertex { x: c, y },
            Vertex { x: c + 1, y: y + 1 },
            Vertex { x: c + 1, y: y + 3 },
            Vertex { x: c, y: y + 4 },
            Vertex { x: c - 1, y: y + 3 },
            Vertex { x: c - 1, y: y + 1 },
        ]
    };

    let mut points = BTreeSet::new();
    for (t, &w) in hex_rows.iter().enumerate() {
        for j in 0..w {
            points.extend(corners(t, j));
        }
    }
    // ids in (y, x) order: top to bottom, left to right
    let mut vertices: Vec<Vertex> = points.into_iter().collect();
    vertices.sort_by_key(|v| (v.y, v.x));
    let id_of: BTreeMap<Vertex, VertexId> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut pairs = BTreeSet::new();
    let mut hexagons = Vec::new();
    for (t, &w) in hex_rows.iter().enumerate() {
        for j in 0..w {
            let cs = corners(t, j);
            let ids = cs.map(|v| id_of[&v]);
            for s in 0..6 {
                let (a, b) = (ids[s], ids[(s + 1) % 6]);
                pairs.insert((a.min(b), a.max(b)));
            }
            hexagons.push(Hexagon {
                row: t,
                col: j,
                vertices: ids,
            });
        }
    }

    let mut edges = Vec::with_capacity(pairs.len());
    let mut vbar_index: Vec<Vec<EdgeId>> = hex_rows.iter().map(|&w| vec![usize::MAX; w + 1]).collect();
    for (a, b) in pairs {
        let (va, vb) = (vertices[a], vertices[b]);
        let id = edges.len();
        let (kind, label) = if va.x == vb.x {
            // vertical edges span y in [3t+1, 3t+3]
            let t = (va.y.min(vb.y) - 1) / 3;
            let j = (va.x - row_offsets[t as usize]) / 2;
            vbar_index[t as usize][j as usize] = id;
            (EdgeKind::Vertical, Some((t as usize, j as usize)))
        } else {
            (EdgeKind::Slant, None)
        };
        edges.push(Edge { a, b, kind, label });
    }
    debug_assert!(vbar_index.iter().flatten().all(|&e| e != usize::MAX));

    let mut incident = vec![Vec::new(); vertices.len()];
    for (id, e) in edges.iter().enumerate() {
        incident[e.a].push(id);
        incident[e.b].push(id);
    }

    Ok(BenzenoidGraph {
        p,
        q,
        r,
        hex_rows,
        row_offsets,
        vertices,
        edges,
        incident,
        hexagons,
        vbar_index,
    })
}

impl BenzenoidGraph {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.p, self.q, self.r)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Hexagon count of each row, top to bottom.
    pub fn hex_rows(&self) -> &[usize] {
        &self.hex_rows
    }

    /// x coordinate of the leftmost vertical edge of each row.
    pub fn row_offsets(&self) -> &[i64] {
        &self.row_offsets
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagons.len()
    }

    pub fn hexagons(&self) -> &[Hexagon] {
        &self.hexagons
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incident edges of `v` in increasing id order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v].len()
    }

    /// Vertical edges of hexagon row `row`, left to right.
    pub fn vertical_row(&self, row: usize) -> &[EdgeId] {
        &self.vbar_index[row]
    }

    pub fn vbar_index(&self) -> &[Vec<EdgeId>] {
        &self.vbar_index
    }

    /// The vertical edge at (row, index), if it exists.
    pub fn vertical_edge(&self, row: usize, index: usize) -> Option<EdgeId> {
        self.vbar_index.get(row)?.get(index).copied()
    }

    pub fn find_vertex(&self, x: i64, y: i64) -> Option<VertexId> {
        let target = Vertex { x, y };
        self.vertices
            .binary_search_by_key(&(y, x), |v| (v.y, v.x))
            .ok()
            .filter(|&i| self.vertices[i] == target)
    }

    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.incident
            .get(a)?
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(a) == b)
    }

    /// The zigzag lines formed by slant edges, each as its vertex sequence
    /// from left to right. Every vertex lies on exactly one line.
    pub fn slant_lines(&self) -> Vec<Vec<VertexId>> {
        let slant_nbrs = |v: VertexId| -> Vec<VertexId> {
            self.incident[v]
                .iter()
                .filter(|&&e| self.edges[e].kind == EdgeKind::Slant)
                .map(|&e| self.edges[e].other(v))
                .collect()
        };
        let mut seen = vec![false; self.vertices.len()];
        let mut lines = Vec::new();
        // leftmost-first so every line is walked from its left end
        let mut order: Vec<VertexId> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&v| (self.vertices[v].x, self.vertices[v].y));
        for start in order {
            if seen[start] {
                continue;
            }
            let mut line = vec![start];
            seen[start] = true;
            let mut cur = start;
            while let Some(next) = slant_nbrs(cur).into_iter().find(|&u| !seen[u]) {
                seen[next] = true;
                line.push(next);
                cur = next;
            }
            lines.push(line);
        }
        lines
    }
}
