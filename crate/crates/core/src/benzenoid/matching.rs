use std::collections::BTreeSet;

use super::graph::{BenzenoidGraph, EdgeId, VertexId};
use crate::error::{Error, Result};

/// Default ceiling on the edge count of graphs searched exhaustively.
pub const DEFAULT_EDGE_BUDGET: usize = 200;

/// A perfect matching of a benzenoid graph.
#[derive(Debug, Clone)]
pub struct KekuleStructure<'g> {
    graph: &'g BenzenoidGraph,
    selected: Vec<EdgeId>,
}

// Graphs are deterministic in their parameters, so comparing parameters
// identifies the graph.
impl PartialEq for KekuleStructure<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.graph.params() == other.graph.params() && self.selected == other.selected
    }
}

impl Eq for KekuleStructure<'_> {}

impl std::hash::Hash for KekuleStructure<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.graph.params().hash(state);
        self.selected.hash(state);
    }
}

impl<'g> KekuleStructure<'g> {
    /// Validates that `edges` is a perfect matching of `graph`.
    pub fn new(graph: &'g BenzenoidGraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        if !is_kekule(graph, &edges) {
            return Err(Error::StructureViolation("edge set is not a perfect matching".into()));
        }
        Ok(KekuleStructure { graph, selected: edges })
    }

    pub fn graph(&self) -> &'g BenzenoidGraph {
        self.graph
    }

    /// Selected edges in increasing id order.
    pub fn selected(&self) -> &[EdgeId] {
        &self.selected
    }

    pub fn is_selected(&self, e: EdgeId) -> bool {
        self.selected.binary_search(&e).is_ok()
    }

    /// Selected vertical edges as (row, index) labels, top to bottom and left
    /// to right.
    pub fn vbars(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .selected
            .iter()
            .filter_map(|&e| self.graph.edge(e).label)
            .collect();
        out.sort_unstable();
        out
    }
}

/// True iff `edges` (ids of `graph`) covers every vertex exactly once.
pub fn is_kekule(graph: &BenzenoidGraph, edges: &[EdgeId]) -> bool {
    let mut hits = vec![0u8; graph.vertex_count()];
    for &e in edges {
        if e >= graph.edge_count() {
            return false;
        }
        let edge = graph.edge(e);
        for v in [edge.a, edge.b] {
            hits[v] += 1;
            if hits[v] > 1 {
                return false;
            }
        }
    }
    hits.iter().all(|&h| h == 1)
}

struct Frame {
    vertex: VertexId,
    next: usize,
    chosen: Option<EdgeId>,
}

/// Backtracking stream of perfect matchings. The lowest-id unmatched vertex
/// is always branched on, trying its incident edges in id order.
pub struct MatchingSearch<'g> {
    graph: &'g BenzenoidGraph,
    forbidden: Vec<bool>,
    mate: Vec<Option<EdgeId>>,
    stack: Vec<Frame>,
    state: SearchState,
}

#[derive(PartialEq, Eq)]
enum SearchState {
    Fresh,
    Running,
    Done,
}

impl<'g> MatchingSearch<'g> {
    fn new(graph: &'g BenzenoidGraph, forced: &[EdgeId], forbidden_edges: &[EdgeId]) -> Self {
        let mut forbidden = vec![false; graph.edge_count()];
        for &e in forbidden_edges {
            forbidden[e] = true;
        }
        let mut mate = vec![None; graph.vertex_count()];
        let mut state = SearchState::Fresh;
        for &e in forced {
            let edge = graph.edge(e);
            if forbidden[e] || mate[edge.a].is_some() || mate[edge.b].is_some() {
                state = SearchState::Done;
                break;
            }
            mate[edge.a] = Some(e);
            mate[edge.b] = Some(e);
        }
        MatchingSearch {
            graph,
            forbidden,
            mate,
            stack: Vec::new(),
            state,
        }
    }

    fn lowest_unmatched(&self, from: VertexId) -> Option<VertexId> {
        (from..self.mate.len()).find(|&v| self.mate[v].is_none())
    }

    fn current(&self) -> KekuleStructure<'g> {
        let selected: BTreeSet<EdgeId> = self.mate.iter().map(|m| m.expect("perfect")).collect();
        KekuleStructure {
            graph: self.graph,
            selected: selected.into_iter().collect(),
        }
    }

    fn set(&mut self, e: EdgeId, on: bool) {
        let edge = self.graph.edge(e);
        let val = if on { Some(e) } else { None };
        self.mate[edge.a] = val;
        self.mate[edge.b] = val;
    }

    /// Pushes a frame for the next unmatched vertex. Returns false when the
    /// matching is complete.
    fn descend(&mut self) -> bool {
        let from = self.stack.last().map_or(0, |f| f.vertex + 1);
        match self.lowest_unmatched(from) {
            Some(v) => {
                self.stack.push(Frame {
                    vertex: v,
                    next: 0,
                    chosen: None,
                });
                true
            }
            None => false,
        }
    }
}

impl<'g> Iterator for MatchingSearch<'g> {
    type Item = KekuleStructure<'g>;

    fn next(&mut self) -> Option<KekuleStructure<'g>> {
        match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Running;
                if !self.descend() {
                    self.state = SearchState::Done;
                    return Some(self.current());
                }
            }
            SearchState::Running => {}
        }
        loop {
            let Some(frame) = self.stack.last_mut() else {
                self.state = SearchState::Done;
                return None;
            };
            let v = frame.vertex;
            let prev = frame.chosen.take();
            let start = frame.next;
            if let Some(e) = prev {
                self.set(e, false);
            }
            let options = self.graph.incident(v);
            let pick = (start..options.len()).find(|&i| {
                let e = options[i];
                !self.forbidden[e] && self.mate[self.graph.edge(e).other(v)].is_none()
            });
            match pick {
                None => {
                    self.stack.pop();
                }
                Some(i) => {
                    let e = options[i];
                    self.set(e, true);
                    let frame = self.stack.last_mut().expect("frame present");
                    frame.chosen = Some(e);
                    frame.next = i + 1;
                    if !self.descend() {
                        return Some(self.current());
                    }
                }
            }
        }
    }
}

fn check_budget(graph: &BenzenoidGraph, budget: usize) -> Result<()> {
    if graph.edge_count() > budget {
        return Err(Error::budget("matching search edges", graph.edge_count(), budget));
    }
    Ok(())
}

/// Every Kekulé structure of `graph`, in backtracking order.
pub fn enumerate_kekule(graph: &BenzenoidGraph, edge_budget: usize) -> Result<MatchingSearch<'_>> {
    check_budget(graph, edge_budget)?;
    Ok(MatchingSearch::new(graph, &[], &[]))
}

/// All perfect matchings that select every edge of `forced_selected` and
/// none of `forced_unselected`.
pub fn constrained_completion<'g>(
    graph: &'g BenzenoidGraph,
    forced_selected: &[EdgeId],
    forced_unselected: &[EdgeId],
    edge_budget: usize,
) -> Result<Vec<KekuleStructure<'g>>> {
    check_budget(graph, edge_budget)?;
    if let Some(&e) = forced_selected.iter().chain(forced_unselected).find(|&&e| e >= graph.edge_count()) {
        return Err(Error::InvalidParameter(format!("edge {e} is not in the graph")));
    }
    let sel: BTreeSet<EdgeId> = forced_selected.iter().copied().collect();
    if forced_unselected.iter().any(|e| sel.contains(e)) {
        return Err(Error::InvalidParameter("constraint sets must be disjoint".into()));
    }
    Ok(MatchingSearch::new(graph, forced_selected, forced_unselected).collect())
}
