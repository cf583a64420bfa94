//! Bipartite graph representation, biregularity profiling, orientations,
//! labelings, and vertex-sum evaluation.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// Which partite set a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

/// A simple bipartite graph with stable edge ids.
///
/// Edge ids are `0..edge_count()` in insertion order. Vertices on each side
/// are indexed from 0. The graph is immutable after construction.
///
/// ```
/// use antimagic::BipartiteGraph;
///
/// // K_{2,3}: both X vertices adjacent to all three Y vertices.
/// let g = BipartiteGraph::new(2, 3, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]).unwrap();
/// assert_eq!(g.edge_count(), 6);
/// assert_eq!(g.x_degree(0), 3);
/// assert_eq!(g.y_degree(2), 2);
/// ```
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    x_count: usize,
    y_count: usize,
    edges: Vec<(usize, usize)>,
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(x_count: usize, y_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(x, y) in &edges {
            if x >= x_count || y >= y_count {
                return Err(Error::VertexOutOfBounds {
                    x,
                    y,
                    x_count,
                    y_count,
                });
            }
            if !seen.insert((x, y)) {
                return Err(Error::DuplicateEdge { x, y });
            }
        }
        let mut x_adj = vec![Vec::new(); x_count];
        let mut y_adj = vec![Vec::new(); y_count];
        for (id, &(x, y)) in edges.iter().enumerate() {
            x_adj[x].push(id);
            y_adj[y].push(id);
        }
        Ok(BipartiteGraph {
            x_count,
            y_count,
            edges,
            x_adj,
            y_adj,
        })
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(x, y)` of the edge with the given id.
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Ids of edges incident to X vertex `x`, ascending.
    pub fn x_edges(&self, x: usize) -> &[usize] {
        &self.x_adj[x]
    }

    /// Ids of edges incident to Y vertex `y`, ascending.
    pub fn y_edges(&self, y: usize) -> &[usize] {
        &self.y_adj[y]
    }

    pub fn x_degree(&self, x: usize) -> usize {
        self.x_adj[x].len()
    }

    pub fn y_degree(&self, y: usize) -> usize {
        self.y_adj[y].len()
    }

    /// The same graph with the partite sets exchanged. Edge ids are preserved.
    pub fn swap_sides(&self) -> BipartiteGraph {
        let edges = self.edges.iter().map(|&(x, y)| (y, x)).collect();
        BipartiteGraph::new(self.y_count, self.x_count, edges)
            .expect("swapping sides preserves validity")
    }

    /// Parse the graph text format:
    ///
    /// ```text
    /// bipartite <x_count> <y_count> <edge_count>
    /// <x_index> <y_index>
    /// ...
    /// ```
    ///
    /// Lines starting with `#` and blank lines are ignored. Edges appear in
    /// edge-id order.
    ///
    /// ```
    /// use antimagic::BipartiteGraph;
    ///
    /// let text = "bipartite 2 2 4\n0 0\n0 1\n1 0\n1 1\n";
    /// let g = BipartiteGraph::parse(text).unwrap();
    /// assert_eq!(g.to_text(), text);
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            if header.is_none() {
                if fields.next() != Some("bipartite") {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected header `bipartite <x> <y> <edges>`".into(),
                    });
                }
                let nums: Vec<usize> = fields
                    .map(|f| {
                        f.parse().map_err(|_| Error::Parse {
                            line: lineno + 1,
                            msg: format!("bad count `{f}`"),
                        })
                    })
                    .collect::<Result<_>>()?;
                if nums.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "header needs exactly three counts".into(),
                    });
                }
                header = Some((nums[0], nums[1], nums[2]));
            } else {
                let x = parse_field(fields.next(), lineno)?;
                let y = parse_field(fields.next(), lineno)?;
                if fields.next().is_some() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "edge line has extra fields".into(),
                    });
                }
                edges.push((x, y));
            }
        }
        let (x_count, y_count, edge_count) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        if edges.len() != edge_count {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {} edges, found {}", edge_count, edges.len()),
            });
        }
        BipartiteGraph::new(x_count, y_count, edges).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    /// Serialize to the graph text format. Byte-deterministic.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "bipartite {} {} {}\n",
            self.x_count,
            self.y_count,
            self.edges.len()
        );
        for &(x, y) in &self.edges {
            out.push_str(&format!("{x} {y}\n"));
        }
        out
    }
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize> {
    let f = field.ok_or(Error::Parse {
        line: lineno + 1,
        msg: "edge line needs two indices".into(),
    })?;
    f.parse().map_err(|_| Error::Parse {
        line: lineno + 1,
        msg: format!("bad index `{f}`"),
    })
}

/// Degree profile of a biregular bipartite graph with sides canonicalized so
/// that the X degree `s` is at least the Y degree `t`.
///
/// `m`, `n`, `s`, `t` always refer to the canonical sides; `swapped` records
/// whether the input sides were exchanged to get there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphProfile {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub swapped: bool,
}

/// Check biregularity and compute the canonical profile.
///
/// If the input's X degree is smaller than its Y degree, the profile reports
/// the sides exchanged (`swapped = true`); `m·s = n·t` and `s ≥ t` hold in the
/// returned profile either way.
pub fn validate_and_profile(graph: &BipartiteGraph) -> Result<GraphProfile> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sx = uniform_degree(graph, Side::X)?;
    let sy = uniform_degree(graph, Side::Y)?;
    if sx >= sy {
        Ok(GraphProfile {
            m: graph.x_count(),
            n: graph.y_count(),
            s: sx,
            t: sy,
            swapped: false,
        })
    } else {
        Ok(GraphProfile {
            m: graph.y_count(),
            n: graph.x_count(),
            s: sy,
            t: sx,
            swapped: true,
        })
    }
}

fn uniform_degree(graph: &BipartiteGraph, side: Side) -> Result<usize> {
    let count = match side {
        Side::X => graph.x_count(),
        Side::Y => graph.y_count(),
    };
    let deg = |i| match side {
        Side::X => graph.x_degree(i),
        Side::Y => graph.y_degree(i),
    };
    let first = deg(0);
    for i in 1..count {
        if deg(i) != first {
            return Err(Error::NotBiregular {
                side,
                a: first,
                b: deg(i),
            });
        }
    }
    Ok(first)
}

/// Direction of one oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    XtoY,
    YtoX,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::XtoY => Direction::YtoX,
            Direction::YtoX => Direction::XtoY,
        }
    }
}

/// Per-edge orientation, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation(Vec<Direction>);

impl Orientation {
    pub fn all_x_to_y(edge_count: usize) -> Orientation {
        Orientation(vec![Direction::XtoY; edge_count])
    }

    pub fn from_vec(dirs: Vec<Direction>) -> Orientation {
        Orientation(dirs)
    }

    pub fn dir(&self, edge: usize) -> Direction {
        self.0[edge]
    }

    pub fn set(&mut self, edge: usize, dir: Direction) {
        self.0[edge] = dir;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reverse every edge; used when mapping back to a side-swapped input.
    pub fn flipped(&self) -> Orientation {
        Orientation(self.0.iter().map(|d| d.flipped()).collect())
    }
}

/// A total edge labeling, indexed by edge id. Construction does not check the
/// bijection property; [`crate::verify::verify_labeling`] does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling(Vec<i64>);

impl Labeling {
    pub fn from_vec(labels: Vec<i64>) -> Labeling {
        Labeling(labels)
    }

    pub fn label(&self, edge: usize) -> i64 {
        self.0[edge]
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A labeling under construction: each edge is unassigned or carries a label.
/// Merging two partial labelings fails if they overlap; converting to a
/// [`Labeling`] fails if any edge is still unassigned.
#[derive(Debug, Clone)]
pub struct PartialLabeling {
    slots: Vec<Option<i64>>,
}

impl PartialLabeling {
    pub fn new(edge_count: usize) -> PartialLabeling {
        PartialLabeling {
            slots: vec![None; edge_count],
        }
    }

    pub fn set(&mut self, edge: usize, label: i64) -> Result<()> {
        if self.slots[edge].is_some() {
            return Err(Error::LabelCollision { edge });
        }
        self.slots[edge] = Some(label);
        Ok(())
    }

    pub fn get(&self, edge: usize) -> Option<i64> {
        self.slots[edge]
    }

    pub fn merge(&mut self, other: &PartialLabeling) -> Result<()> {
        for (edge, slot) in other.slots.iter().enumerate() {
            if let Some(label) = slot {
                self.set(edge, *label)?;
            }
        }
        Ok(())
    }

    pub fn assigned(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(e, s)| s.map(|l| (e, l)))
    }

    pub fn into_labeling(self) -> Result<Labeling> {
        let mut labels = Vec::with_capacity(self.slots.len());
        for (edge, slot) in self.slots.into_iter().enumerate() {
            labels.push(slot.ok_or(Error::IncompleteLabeling { edge })?);
        }
        Ok(Labeling(labels))
    }
}

/// Oriented (or undirected) vertex sums, one per vertex on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSums {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl VertexSums {
    pub fn total(&self) -> i64 {
        self.x.iter().sum::<i64>() + self.y.iter().sum::<i64>()
    }
}

/// Oriented vertex sums: at each vertex, the sum of labels of entering arcs
/// minus the sum of labels of leaving arcs.
///
/// ```
/// use antimagic::{oriented_vertex_sums, BipartiteGraph, Labeling, Orientation};
///
/// let g = BipartiteGraph::new(1, 1, vec![(0, 0)]).unwrap();
/// let sums = oriented_vertex_sums(&g, &Orientation::all_x_to_y(1), &Labeling::from_vec(vec![1]));
/// assert_eq!((sums.x[0], sums.y[0]), (-1, 1));
/// ```
pub fn oriented_vertex_sums(
    graph: &BipartiteGraph,
    orientation: &Orientation,
    labeling: &Labeling,
) -> VertexSums {
    let mut partial = PartialLabeling::new(graph.edge_count());
    for (e, &l) in labeling.labels().iter().enumerate() {
        partial.slots[e] = Some(l);
    }
    partial_oriented_sums(graph, orientation, &partial)
}

/// The same sum kernel evaluated over just the labeled sub-edge-set of a
/// partial labeling. Unlabeled edges contribute nothing.
pub fn partial_oriented_sums(
    graph: &BipartiteGraph,
    orientation: &Orientation,
    labels: &PartialLabeling,
) -> VertexSums {
    let mut x = vec![0i64; graph.x_count()];
    let mut y = vec![0i64; graph.y_count()];
    for xv in 0..graph.x_count() {
        for &e in graph.x_edges(xv) {
            if let Some(l) = labels.get(e) {
                match orientation.dir(e) {
                    Direction::XtoY => x[xv] = checked(x[xv], -l),
                    Direction::YtoX => x[xv] = checked(x[xv], l),
                }
            }
        }
    }
    for yv in 0..graph.y_count() {
        for &e in graph.y_edges(yv) {
            if let Some(l) = labels.get(e) {
                match orientation.dir(e) {
                    Direction::XtoY => y[yv] = checked(y[yv], l),
                    Direction::YtoX => y[yv] = checked(y[yv], -l),
                }
            }
        }
    }
    VertexSums { x, y }
}

/// Undirected vertex sums of a partial labeling: at each vertex, the plain
/// sum of labels on its labeled incident edges.
pub fn undirected_sums(graph: &BipartiteGraph, labels: &PartialLabeling) -> VertexSums {
    let mut x = vec![0i64; graph.x_count()];
    let mut y = vec![0i64; graph.y_count()];
    for (e, l) in labels.assigned() {
        let (xv, yv) = graph.edge(e);
        x[xv] = checked(x[xv], l);
        y[yv] = checked(y[yv], l);
    }
    VertexSums { x, y }
}

fn checked(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("vertex sum overflowed i64; graph is beyond supported scale")
}

/// A contiguous interval of labels `[lo, hi]` a gadget must use exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelWindow {
    pub lo: i64,
    pub hi: i64,
}

impl LabelWindow {
    pub fn new(lo: i64, hi: i64) -> LabelWindow {
        assert!(hi >= lo - 1, "window upper bound below lower bound");
        LabelWindow { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }
}

impl fmt::Display for LabelWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k23() -> BipartiteGraph {
        BipartiteGraph::new(2, 3, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]).unwrap()
    }

    fn c4() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn profile_k23() {
        let p = validate_and_profile(&k23()).unwrap();
        assert_eq!(
            p,
            GraphProfile {
                m: 2,
                n: 3,
                s: 3,
                t: 2,
                swapped: false
            }
        );
    }

    #[test]
    fn profile_c4() {
        let p = validate_and_profile(&c4()).unwrap();
        assert_eq!((p.m, p.n, p.s, p.t), (2, 2, 2, 2));
        assert!(!p.swapped);
    }

    #[test]
    fn profile_rejects_path() {
        // Path on 3 vertices: degrees 2 vs {1, 1}.
        let g = BipartiteGraph::new(1, 2, vec![(0, 0), (0, 1)]).unwrap();
        let g = g.swap_sides(); // X side now has degrees 1, 1 and Y side degree 2
        let p = validate_and_profile(&g);
        assert!(p.is_ok()); // 1,1 vs 2 is biregular (s=2 after swap)
        let bad = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            validate_and_profile(&bad),
            Err(Error::NotBiregular { .. })
        ));
    }

    #[test]
    fn profile_swaps_sides() {
        // K_{3,2} presented with the 3-element side as X: X degree 2 < Y degree 3.
        let g = BipartiteGraph::new(3, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)])
            .unwrap();
        let p = validate_and_profile(&g).unwrap();
        assert_eq!((p.m, p.n, p.s, p.t, p.swapped), (2, 3, 3, 2, true));
        // Idempotence: profiling the canonicalized graph reports no swap.
        let canon = g.swap_sides();
        let p2 = validate_and_profile(&canon).unwrap();
        assert_eq!((p2.m, p2.n, p2.s, p2.t, p2.swapped), (2, 3, 3, 2, false));
    }

    #[test]
    fn profile_rejects_empty() {
        let g = BipartiteGraph::new(2, 2, vec![]).unwrap();
        assert!(matches!(validate_and_profile(&g), Err(Error::EmptyGraph)));
    }

    #[test]
    fn single_edge_sums() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0)]).unwrap();
        let sums = oriented_vertex_sums(&g, &Orientation::all_x_to_y(1), &Labeling::from_vec(vec![1]));
        assert_eq!(sums.x, vec![-1]);
        assert_eq!(sums.y, vec![1]);
    }

    #[test]
    fn c4_sign_split() {
        let g = c4();
        let sums = oriented_vertex_sums(
            &g,
            &Orientation::all_x_to_y(4),
            &Labeling::from_vec(vec![1, 2, 3, 4]),
        );
        assert!(sums.x.iter().all(|&v| v < 0));
        assert!(sums.y.iter().all(|&v| v > 0));
        assert_eq!(sums.total(), 0);
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert!(matches!(
            BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn parse_round_trip_and_comments() {
        let text = "# a comment\nbipartite 2 3 6\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n";
        let g = BipartiteGraph::parse(text).unwrap();
        assert_eq!(g.edge_count(), 6);
        let again = BipartiteGraph::parse(&g.to_text()).unwrap();
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn parse_rejects_bad_header_and_count() {
        assert!(BipartiteGraph::parse("graph 1 1 1\n0 0\n").is_err());
        assert!(BipartiteGraph::parse("bipartite 1 1 2\n0 0\n").is_err());
        assert!(BipartiteGraph::parse("bipartite 1 1 1\n0 zero\n").is_err());
    }

    fn arbitrary_instance() -> impl Strategy<Value = (BipartiteGraph, Vec<Direction>, Vec<i64>)> {
        (2usize..6, 2usize..6).prop_flat_map(|(xc, yc)| {
            let all: Vec<(usize, usize)> = (0..xc)
                .flat_map(|x| (0..yc).map(move |y| (x, y)))
                .collect();
            let count = all.len();
            (
                proptest::sample::subsequence(all, 1..=count),
                Just(xc),
                Just(yc),
            )
                .prop_flat_map(|(edges, xc, yc)| {
                    let e = edges.len();
                    let g = BipartiteGraph::new(xc, yc, edges).unwrap();
                    (
                        Just(g),
                        proptest::collection::vec(
                            prop_oneof![Just(Direction::XtoY), Just(Direction::YtoX)],
                            e,
                        ),
                        proptest::collection::vec(1i64..100, e),
                    )
                })
        })
    }

    proptest! {
        /// Every arc contributes +label at its head and -label at its tail,
        /// so the grand total is always zero.
        #[test]
        fn sums_total_zero((g, dirs, labels) in arbitrary_instance()) {
            let sums = oriented_vertex_sums(
                &g,
                &Orientation::from_vec(dirs),
                &Labeling::from_vec(labels),
            );
            prop_assert_eq!(sums.total(), 0);
        }

        /// Re-orienting a single edge with label l moves exactly two sums,
        /// by +2l and -2l.
        #[test]
        fn reorient_single_edge((g, dirs, labels) in arbitrary_instance(), idx in 0usize..64) {
            let e = idx % g.edge_count();
            let orient = Orientation::from_vec(dirs);
            let labeling = Labeling::from_vec(labels);
            let before = oriented_vertex_sums(&g, &orient, &labeling);
            let mut flipped = orient.clone();
            flipped.set(e, orient.dir(e).flipped());
            let after = oriented_vertex_sums(&g, &flipped, &labeling);
            let (xv, yv) = g.edge(e);
            let l = labeling.label(e);
            let dx = after.x[xv] - before.x[xv];
            let dy = after.y[yv] - before.y[yv];
            prop_assert_eq!(dx.abs(), 2 * l);
            prop_assert_eq!(dy.abs(), 2 * l);
            prop_assert_eq!(dx + dy, 0);
            for v in 0..g.x_count() {
                if v != xv {
                    prop_assert_eq!(after.x[v], before.x[v]);
                }
            }
            for v in 0..g.y_count() {
                if v != yv {
                    prop_assert_eq!(after.y[v], before.y[v]);
                }
            }
        }
    }
}
