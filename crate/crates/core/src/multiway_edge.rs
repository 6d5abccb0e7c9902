//! Polynomial-delay, polynomial-space enumeration of minimal edge multiway
//! cuts by reverse search.
//!
//! A minimal edge multiway cut is exactly an ordered partition of V into k
//! connected blocks, the i-th containing t_i. A deterministic parent
//! function makes these partitions a tree rooted at a canonical partition:
//! the pivot of a non-root partition is a canonically chosen vertex that
//! can shift into an earlier block, and the parent moves the pivot's
//! side of its block there. Depth-first traversal of that tree needs no
//! visited set; children are recovered by trying every boundary vertex
//! move and keeping the candidates whose parent is the current partition.
//! Output alternates between pre-order (even recursion depth) and
//! post-order (odd depth), which bounds the delay by a constant number of
//! tree steps per output.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::solution::{OrderedPartition, OrderedTerminals};

fn component_within(g: &Graph, allowed: &VertexSet, start: u32) -> VertexSet {
    debug_assert!(allowed.contains(start));
    let mut blocked = vec![true; g.n()];
    for v in allowed {
        blocked[v as usize] = false;
    }
    VertexSet::from_sorted(g.bfs_from(start, &blocked))
}

/// The canonical root partition: block i is the component of `t_i` after
/// removing all earlier blocks and all later terminals.
pub fn compute_root(g: &Graph, spec: &OrderedTerminals) -> Result<OrderedPartition> {
    spec.validate_for(g)?;
    if spec.k() == 0 {
        return Err(Error::TerminalSpec("at least one terminal required".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k = spec.k();
    let mut taken = vec![false; g.n()];
    let mut blocks = Vec::with_capacity(k);
    for i in 0..k {
        let mut blocked = taken.clone();
        for j in i + 1..k {
            blocked[spec.get(j) as usize] = true;
        }
        let comp = VertexSet::from_sorted(g.bfs_from(spec.get(i), &blocked));
        for v in &comp {
            taken[v as usize] = true;
        }
        blocks.push(comp);
    }
    OrderedPartition::new(blocks, g.n())
}

/// Total index displacement of `p` against the root; zero exactly at the
/// root, positive everywhere else.
pub fn depth(p: &OrderedPartition, root: &OrderedPartition) -> usize {
    assert_eq!(p.positions().len(), root.positions().len());
    let sum: i64 = p
        .positions()
        .iter()
        .zip(root.positions())
        .map(|(&a, &b)| a as i64 - b as i64)
        .sum();
    assert!(sum >= 0, "partition deeper than the root in some block");
    sum as usize
}

/// All pairs `(v, i)` where the non-terminal v sits in a block after i and
/// is adjacent to block i.
pub fn shiftable_vertices(
    g: &Graph,
    spec: &OrderedTerminals,
    p: &OrderedPartition,
) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for (i, block) in p.blocks().iter().enumerate() {
        for v in &g.neighbors_of_set(block) {
            if p.position(v) > i && !spec.contains(v) {
                out.push((v, i));
            }
        }
    }
    out
}

/// The canonical pivot of a non-root partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PivotChoice {
    pub pivot: u32,
    /// Largest block index any vertex can shift into.
    pub target: usize,
    /// Block currently holding the pivot.
    pub source: usize,
}

/// Four-step pivot selection: collect the vertices shiftable into the
/// highest receiving block, restrict to the highest source block, prefer
/// non-cut vertices of that block (otherwise discard any cut vertex that
/// separates another candidate from the block's terminal), and finally
/// keep the smallest id. Fails on the root, which has nothing shiftable.
pub fn select_pivot(
    g: &Graph,
    spec: &OrderedTerminals,
    p: &OrderedPartition,
) -> Result<PivotChoice> {
    let shiftable = shiftable_vertices(g, spec, p);
    let target = shiftable
        .iter()
        .map(|&(_, i)| i)
        .max()
        .ok_or(Error::RootPartition)?;
    let mut q: Vec<u32> = shiftable
        .iter()
        .filter(|&&(_, i)| i == target)
        .map(|&(v, _)| v)
        .collect();
    q.sort_unstable();
    q.dedup();

    if q.len() > 1 {
        let source = q.iter().map(|&v| p.position(v)).max().unwrap();
        q.retain(|&v| p.position(v) == source);
    }
    let source = p.position(q[0]);

    if q.len() > 1 {
        let block = p.block(source);
        let cut_vertices = g.articulation_points(block)?;
        if q.iter().any(|&v| !cut_vertices.contains(v)) {
            q.retain(|&v| !cut_vertices.contains(v));
        } else {
            let ts = spec.get(source);
            let blockers: Vec<u32> = q
                .iter()
                .copied()
                .filter(|&v| {
                    let reach = component_within(g, &block.without(v), ts);
                    q.iter().any(|&w| w != v && !reach.contains(w))
                })
                .collect();
            q.retain(|&v| !blockers.contains(&v));
        }
    }

    Ok(PivotChoice {
        pivot: q[0],
        target,
        source,
    })
}

/// The parent partition: the pivot's block shrinks to the component of its
/// terminal without the pivot, and everything split off (pivot included)
/// joins the target block. Strictly decreases the depth.
pub fn parent(
    g: &Graph,
    spec: &OrderedTerminals,
    p: &OrderedPartition,
) -> Result<OrderedPartition> {
    let PivotChoice {
        pivot,
        target,
        source,
    } = select_pivot(g, spec, p)?;
    let keep = component_within(g, &p.block(source).without(pivot), spec.get(source));
    let moved = p.block(source).difference(&keep);
    let mut blocks = p.blocks().to_vec();
    blocks[target] = blocks[target].union(&moved);
    blocks[source] = keep;
    let mut positions = p.positions().to_vec();
    for v in &moved {
        positions[v as usize] = target as u32;
    }
    Ok(OrderedPartition::from_parts(blocks, positions))
}

fn boundary_of(g: &Graph, spec: &OrderedTerminals, p: &OrderedPartition, i: usize) -> Vec<u32> {
    p.block(i)
        .iter()
        .filter(|&v| v != spec.get(i) && g.neighbors(v).iter().any(|&u| p.position(u) != i))
        .collect()
}

struct CurrentMove {
    v: u32,
    keep: VertexSet,
    moved: VertexSet,
    j: usize,
}

/// Resumable child generator for one partition: iterates blocks i, then
/// non-terminal boundary vertices v of block i, then later blocks j
/// adjacent to v. The split component for one (i, v) choice is computed
/// once and reused across all j. A candidate is a child exactly when its
/// parent is this partition.
pub(crate) struct ChildState {
    i: usize,
    boundary: Vec<u32>,
    v_idx: usize,
    cur: Option<CurrentMove>,
}

impl ChildState {
    pub(crate) fn new(g: &Graph, spec: &OrderedTerminals, p: &OrderedPartition) -> Self {
        ChildState {
            i: 0,
            boundary: boundary_of(g, spec, p, 0),
            v_idx: 0,
            cur: None,
        }
    }

    pub(crate) fn next(
        &mut self,
        g: &Graph,
        spec: &OrderedTerminals,
        p: &OrderedPartition,
    ) -> Option<OrderedPartition> {
        loop {
            if let Some(cur) = &mut self.cur {
                while cur.j < p.k() {
                    let j = cur.j;
                    cur.j += 1;
                    if !g.neighbors(cur.v).iter().any(|&u| p.position(u) == j) {
                        continue;
                    }
                    let mut blocks = p.blocks().to_vec();
                    blocks[self.i] = cur.keep.clone();
                    blocks[j] = blocks[j].union(&cur.moved);
                    let mut positions = p.positions().to_vec();
                    for v in &cur.moved {
                        positions[v as usize] = j as u32;
                    }
                    let candidate = OrderedPartition::from_parts(blocks, positions);
                    if parent(g, spec, &candidate)
                        .map(|par| par == *p)
                        .unwrap_or(false)
                    {
                        return Some(candidate);
                    }
                }
                self.cur = None;
                self.v_idx += 1;
                continue;
            }

            if self.v_idx >= self.boundary.len() {
                self.i += 1;
                if self.i >= p.k() {
                    return None;
                }
                self.boundary = boundary_of(g, spec, p, self.i);
                self.v_idx = 0;
                continue;
            }

            let v = self.boundary[self.v_idx];
            let keep = component_within(g, &p.block(self.i).without(v), spec.get(self.i));
            let moved = p.block(self.i).difference(&keep);
            self.cur = Some(CurrentMove {
                v,
                keep,
                moved,
                j: self.i + 1,
            });
        }
    }
}

/// The children of `p` in the reverse-search tree, lazily.
pub fn children_stream<'a>(
    g: &'a Graph,
    spec: &'a OrderedTerminals,
    p: &'a OrderedPartition,
) -> impl Iterator<Item = OrderedPartition> + 'a {
    let mut state = ChildState::new(g, spec, p);
    std::iter::from_fn(move || state.next(g, spec, p))
}

struct Frame {
    partition: OrderedPartition,
    even: bool,
    entered: bool,
    child: ChildState,
    cells: usize,
}

/// Depth-first reverse-search stream over minimal edge multiway cuts. No
/// visited set is kept; uniqueness follows from the tree structure, and the
/// retained state is one frame per tree level.
pub struct EdgeMultiwayStream {
    graph: Graph,
    spec: OrderedTerminals,
    root: Option<OrderedPartition>,
    stack: Vec<Frame>,
    started: bool,
    retained_cells: usize,
    peak_cells: usize,
    peak_frames: usize,
}

impl EdgeMultiwayStream {
    pub fn new(g: &Graph, spec: &OrderedTerminals) -> Result<Self> {
        let root = compute_root(g, spec)?;
        Ok(EdgeMultiwayStream {
            graph: g.clone(),
            spec: spec.clone(),
            root: Some(root),
            stack: Vec::new(),
            started: false,
            retained_cells: 0,
            peak_cells: 0,
            peak_frames: 0,
        })
    }

    /// Peak number of simultaneously retained stack frames.
    pub fn peak_stack_frames(&self) -> usize {
        self.peak_frames
    }

    /// Peak retained state, counted in per-frame vertex cells. Bounded by
    /// the tree depth times O(n), never by the number of outputs.
    pub fn peak_retained_cells(&self) -> usize {
        self.peak_cells
    }

    pub fn retained_bytes_estimate(&self) -> usize {
        4 * self.peak_cells
    }

    fn push_frame(&mut self, partition: OrderedPartition, even: bool) {
        let child = ChildState::new(&self.graph, &self.spec, &partition);
        let cells = 2 * partition.positions().len() + partition.k() + child.boundary.len();
        self.retained_cells += cells;
        self.peak_cells = self.peak_cells.max(self.retained_cells);
        self.stack.push(Frame {
            partition,
            even,
            entered: false,
            child,
            cells,
        });
        self.peak_frames = self.peak_frames.max(self.stack.len());
    }
}

impl Iterator for EdgeMultiwayStream {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        if !self.started {
            self.started = true;
            let root = self.root.take().expect("root present before start");
            self.push_frame(root, true);
        }
        loop {
            let Self {
                graph,
                spec,
                stack,
                retained_cells,
                ..
            } = self;
            let frame = stack.last_mut()?;
            if !frame.entered {
                frame.entered = true;
                if frame.even {
                    return Some(frame.partition.cut_edges(graph));
                }
            }
            let Frame {
                partition, child, ..
            } = frame;
            match child.next(graph, spec, partition) {
                Some(candidate) => {
                    let even = !frame.even;
                    self.push_frame(candidate, even);
                }
                None => {
                    let done = stack.pop().expect("frame present");
                    *retained_cells -= done.cells;
                    if !done.even {
                        return Some(done.partition.cut_edges(graph));
                    }
                }
            }
        }
    }
}

/// Starts the minimal edge multiway cut enumeration for `(g, terminals)`.
pub fn enumerate_minimal_edge_multiway(
    g: &Graph,
    spec: &OrderedTerminals,
) -> Result<EdgeMultiwayStream> {
    EdgeMultiwayStream::new(g, spec)
}
