//! JSON documents exchanged by the command-line tool.
//!
//! Emitters write compact JSON with fields in declaration order, so parsing a
//! canonical document and emitting it again reproduces the same bytes.

use serde::{Deserialize, Serialize};

use crate::benzenoid::{build_benzenoid, extract_vbars, reconstruct_from_vbars, BenzenoidGraph, KekuleStructure, VBarTuple};
use crate::error::{Error, Result};
use crate::exactcount::GridPoint;
use crate::lattice::{LatticePath, PathTuple};
use crate::wim::{PulseChain, WIMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub k: u32,
    pub rows: Vec<Vec<u32>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &WIMatrix) -> Self {
        MatrixDocument {
            k: m.k(),
            rows: m.rows().to_vec(),
        }
    }

    pub fn to_matrix(&self) -> Result<WIMatrix> {
        WIMatrix::new(self.rows.clone(), self.k)
    }
}

/// Pulse chain as `[[x1,y1],[x2,y2],...]`.
pub fn chain_to_json(chain: &PulseChain) -> String {
    let pairs: Vec<[usize; 2]> = chain.pulses().iter().map(|p| [p.x, p.y]).collect();
    serde_json::to_string(&pairs).expect("plain data serializes")
}

/// An edge given by the lattice coordinates of its endpoints, lower vertex
/// id first.
pub type EdgeCoords = [[i64; 2]; 2];

/// V-bar coordinates of a Kekulé structure on O{n,2,r}, plus its full list
/// of selected edges. On input `edges` may be omitted, in which case the
/// structure is rebuilt from the v-bars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KekuleDocument {
    pub n: usize,
    pub r: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeCoords>>,
}

impl KekuleDocument {
    pub fn from_structure(k: &KekuleStructure<'_>) -> Result<Self> {
        let t = extract_vbars(k)?;
        let g = k.graph();
        let edges = k
            .selected()
            .iter()
            .map(|&e| {
                let edge = g.edge(e);
                let (a, b) = (g.vertices()[edge.a], g.vertices()[edge.b]);
                [[a.x, a.y], [b.x, b.y]]
            })
            .collect();
        Ok(KekuleDocument {
            n: t.n,
            r: t.r,
            xs: t.xs,
            ys: t.ys,
            edges: Some(edges),
        })
    }

    pub fn vbar_tuple(&self) -> VBarTuple {
        VBarTuple {
            n: self.n,
            r: self.r,
            xs: self.xs.clone(),
            ys: self.ys.clone(),
        }
    }

    /// The graph O{n,2,r} this document lives on.
    pub fn graph(&self) -> Result<BenzenoidGraph> {
        build_benzenoid(self.n, 2, self.r)
    }

    /// Resolves the document against its graph. An explicit edge list must
    /// be a Kekulé structure whose v-bars agree with `xs`/`ys`.
    pub fn to_structure<'g>(&self, graph: &'g BenzenoidGraph) -> Result<KekuleStructure<'g>> {
        let t = self.vbar_tuple();
        let Some(edges) = &self.edges else {
            return reconstruct_from_vbars(graph, &t);
        };
        let ids = edges
            .iter()
            .map(|&[[ax, ay], [bx, by]]| {
                let a = graph.find_vertex(ax, ay);
                let b = graph.find_vertex(bx, by);
                a.zip(b)
                    .and_then(|(a, b)| graph.find_edge(a, b))
                    .ok_or_else(|| Error::StructureViolation(format!("no edge ({ax},{ay})-({bx},{by})")))
            })
            .collect::<Result<Vec<_>>>()?;
        let k = KekuleStructure::new(graph, ids)?;
        let found = extract_vbars(&k)?;
        if found != t {
            return Err(Error::StructureViolation(format!(
                "edge list has v-bars xs={:?} ys={:?}, document says xs={:?} ys={:?}",
                found.xs, found.ys, t.xs, t.ys
            )));
        }
        Ok(k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathDocument {
    pub start: [i64; 2],
    pub moves: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDocument {
    pub n: usize,
    pub k: usize,
    pub paths: Vec<PathDocument>,
}

impl TupleDocument {
    pub fn from_tuple(t: &PathTuple) -> Self {
        TupleDocument {
            n: t.n(),
            k: t.k(),
            paths: t
                .paths()
                .iter()
                .map(|p| PathDocument {
                    start: [p.start().x, p.start().y],
                    moves: p.move_string(),
                })
                .collect(),
        }
    }

    pub fn to_tuple(&self) -> Result<PathTuple> {
        let paths = self
            .paths
            .iter()
            .map(|p| LatticePath::from_moves(GridPoint::new(p.start[0], p.start[1]), &p.moves))
            .collect::<Result<Vec<_>>>()?;
        PathTuple::new(self.n, self.k, paths)
    }
}

pub fn to_canonical<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text.trim()).map_err(|e| Error::InvalidDocument(e.to_string()))
}
