//! Nerves of fully augmented links: edge-colored triangulations of the
//! sphere with exactly one red edge per face.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NerveError {
    #[error("edge ({0}, {1}) is not a red edge of the nerve")]
    NotRedEdge(usize, usize),
    #[error("no red edge has a unique crossing disk; the input is not a valid nerve")]
    NoneFound,
    #[error("invalid nerve: {0}")]
    Invalid(String),
}

fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveGraph {
    pub faces: Vec<[usize; 3]>,
    pub red_edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl NerveGraph {
    pub fn new(faces: Vec<[usize; 3]>, red_edges: Vec<[usize; 2]>) -> Self {
        NerveGraph { faces, red_edges }
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.faces.iter().flatten().copied().collect()
    }

    /// Every edge with the indices of the faces containing it.
    pub fn edge_faces(&self) -> BTreeMap<Edge, Vec<usize>> {
        let mut m: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                if a != b {
                    m.entry(edge(a, b)).or_default().push(i);
                }
            }
        }
        m
    }

    pub fn neighbors(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut m: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &(a, b) in self.edge_faces().keys() {
            m.entry(a).or_default().insert(b);
            m.entry(b).or_default().insert(a);
        }
        m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors().get(&v).map_or(0, |s| s.len())
    }

    /// Red edges, normalized and sorted.
    pub fn red_set(&self) -> BTreeSet<Edge> {
        self.red_edges.iter().map(|e| edge(e[0], e[1])).collect()
    }

    pub fn is_red(&self, a: usize, b: usize) -> bool {
        self.red_set().contains(&edge(a, b))
    }

    fn face_sets(&self) -> BTreeSet<[usize; 3]> {
        self.faces
            .iter()
            .map(|f| {
                let mut s = *f;
                s.sort_unstable();
                s
            })
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_nerve(self)
    }

    pub fn with_red_edges(&self, red: &[Edge]) -> Self {
        NerveGraph {
            faces: self.faces.clone(),
            red_edges: red.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

fn check(name: &'static str, witness: Option<String>) -> Check {
    Check {
        name: name.to_string(),
        passed: witness.is_none(),
        witness,
    }
}

/// Checks every nerve axiom and reports a witness for each failure.
pub fn validate_nerve(g: &NerveGraph) -> ValidationReport {
    let ef = g.edge_faces();
    let vertices = g.vertices();
    let nbrs = g.neighbors();
    let red = g.red_set();
    let (v, e, f) = (vertices.len(), ef.len(), g.faces.len());
    let mut checks = Vec::new();

    checks.push(check(
        "no_loops",
        g.faces
            .iter()
            .find(|t| t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            .map(|t| format!("face {t:?}")),
    ));

    let mut seen = BTreeSet::new();
    let dup = g.faces.iter().find(|t| {
        let mut s = **t;
        s.sort_unstable();
        !seen.insert(s)
    });
    checks.push(check("no_duplicate_faces", dup.map(|t| format!("face {t:?}"))));

    checks.push(check(
        "edges_in_two_faces",
        ef.iter()
            .find(|(_, fs)| fs.len() != 2)
            .map(|(e, fs)| format!("edge {e:?} lies in {} faces", fs.len())),
    ));

    let bad_link = vertices
        .iter()
        .find(|&&x| !link_is_cycle(g, x))
        .map(|x| format!("vertex {x}"));
    checks.push(check("vertex_links_are_cycles", bad_link));

    checks.push(check(
        "connected",
        (!is_connected(&nbrs)).then(|| "graph has several components".to_string()),
    ));

    let euler = v as i64 - e as i64 + f as i64;
    checks.push(check(
        "euler_characteristic",
        (euler != 2).then(|| format!("V - E + F = {euler}")),
    ));
    checks.push(check(
        "three_f_equals_two_e",
        (3 * f != 2 * e).then(|| format!("3F = {}, 2E = {}", 3 * f, 2 * e)),
    ));

    checks.push(check("has_red_edges", red.is_empty().then(|| "no red edges".to_string())));
    checks.push(check(
        "red_edges_are_edges",
        red.iter().find(|r| !ef.contains_key(r)).map(|r| format!("red edge {r:?}")),
    ));

    let bad_face = g.faces.iter().find_map(|t| {
        let k = (0..3).filter(|&i| red.contains(&edge(t[i], t[(i + 1) % 3]))).count();
        (k != 1).then(|| format!("face {t:?} has {k} red edges"))
    });
    checks.push(check("one_red_edge_per_face", bad_face));

    ValidationReport {
        vertices: v,
        edges: e,
        faces: f,
        checks,
    }
}

fn link_is_cycle(g: &NerveGraph, x: usize) -> bool {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in g.faces.iter().filter(|t| t.contains(&x)) {
        let others: Vec<usize> = t.iter().copied().filter(|&y| y != x).collect();
        if others.len() != 2 {
            return false;
        }
        adj.entry(others[0]).or_default().push(others[1]);
        adj.entry(others[1]).or_default().push(others[0]);
    }
    if adj.len() < 3 || adj.values().any(|n| n.len() != 2) {
        return false;
    }
    let start = *adj.keys().next().unwrap();
    let (mut prev, mut cur, mut steps) = (start, adj[&start][0], 1);
    while cur != start {
        let n = &adj[&cur];
        let next = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = next;
        steps += 1;
        if steps > adj.len() {
            return false;
        }
    }
    steps == adj.len()
}

fn is_connected(nbrs: &BTreeMap<usize, BTreeSet<usize>>) -> bool {
    let Some(&start) = nbrs.keys().next() else { return false };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &nbrs[&x] {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.len() == nbrs.len()
}

/// Non-trivial 3-cycles `{u, v, w}` through the red edge `uv`: `{u, v, w}` is
/// not a face and both `uw` and `vw` are plain. Each such cycle is a
/// generalized crossing disk other than the standard one.
pub fn generalized_crossing_disk_cycles(g: &NerveGraph, red_edge: Edge) -> Result<Vec<[usize; 3]>, NerveError> {
    let (u, v) = edge(red_edge.0, red_edge.1);
    let red = g.red_set();
    if !red.contains(&(u, v)) {
        return Err(NerveError::NotRedEdge(red_edge.0, red_edge.1));
    }
    let nbrs = g.neighbors();
    let faces = g.face_sets();
    let empty = BTreeSet::new();
    let (nu, nv) = (nbrs.get(&u).unwrap_or(&empty), nbrs.get(&v).unwrap_or(&empty));
    Ok(nu
        .intersection(nv)
        .filter(|&&w| !red.contains(&edge(u, w)) && !red.contains(&edge(v, w)))
        .map(|&w| {
            let mut t = [u, v, w];
            t.sort_unstable();
            t
        })
        .filter(|t| !faces.contains(t))
        .collect())
}

/// The lowest red edge whose only crossing disk is the standard one.
pub fn unique_crossing_disk_circle(g: &NerveGraph) -> Result<Edge, NerveError> {
    for r in g.red_set() {
        if generalized_crossing_disk_cycles(g, r)?.is_empty() {
            return Ok(r);
        }
    }
    Err(NerveError::NoneFound)
}

/// `sum_v (6 - deg v)`, equal to 12 on every triangulated sphere.
pub fn degree_excess_sum(g: &NerveGraph) -> i64 {
    g.neighbors().values().map(|n| 6 - n.len() as i64).sum()
}

/// The lowest vertex of degree at most 5.
pub fn low_degree_vertex(g: &NerveGraph) -> Result<usize, NerveError> {
    g.neighbors()
        .into_iter()
        .find(|(_, n)| n.len() <= 5)
        .map(|(v, _)| v)
        .ok_or_else(|| NerveError::Invalid("every vertex has degree at least 6".into()))
}

pub fn tetrahedron_faces() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]]
}

/// Nerve of the Borromean rings: the octahedral polyhedron has four white
/// faces, so its nerve is the tetrahedron, with the two crossing circles on
/// opposite edges.
pub fn borromean() -> NerveGraph {
    NerveGraph::new(tetrahedron_faces(), vec![[0, 1], [2, 3]])
}

/// Octahedron with poles 4, 5 over the equator 0-1-2-3.
pub fn octahedron_faces() -> Vec<[usize; 3]> {
    (0..4).flat_map(|i| [[4, i, (i + 1) % 4], [5, (i + 1) % 4, i]]).collect()
}

/// Octahedron with its equator red: every face meets the equator in one edge.
pub fn octahedron_red_equator() -> NerveGraph {
    NerveGraph::new(octahedron_faces(), (0..4).map(|i| [i, (i + 1) % 4]).collect())
}

pub fn icosahedron_faces() -> Vec<[usize; 3]> {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    (0..5)
        .flat_map(|i| {
            [
                [0, up(i), up(i + 1)],
                [up(i), lo(i), up(i + 1)],
                [up(i + 1), lo(i), lo(i + 1)],
                [11, lo(i + 1), lo(i)],
            ]
        })
        .collect()
}

/// Triangular bipyramid over the equator `0, 1, 2` with poles `3, 4`; red
/// edges `01`, `23`, `24`. The red edge `01` sits in the non-trivial
/// 3-cycle `012` with both other edges plain.
pub fn bipyramid_with_extra_disk() -> NerveGraph {
    let faces = vec![[3, 0, 1], [3, 1, 2], [3, 2, 0], [4, 1, 0], [4, 2, 1], [4, 0, 2]];
    NerveGraph::new(faces, vec![[0, 1], [2, 3], [2, 4]])
}

/// Random triangulation of the sphere on `n >= 4` vertices: vertex insertions
/// into faces interleaved with edge flips that keep the graph simple.
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> Vec<[usize; 3]> {
    assert!(n >= 4);
    let mut faces = tetrahedron_faces();
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        for _ in 0..2 {
            random_flip(&mut faces, rng);
        }
    }
    for _ in 0..n {
        random_flip(&mut faces, rng);
    }
    faces
}

fn random_flip<R: Rng>(faces: &mut [[usize; 3]], rng: &mut R) {
    let i = rng.gen_range(0..faces.len());
    let k = rng.gen_range(0..3);
    let (a, b, c) = (faces[i][k], faces[i][(k + 1) % 3], faces[i][(k + 2) % 3]);
    let Some(j) = (0..faces.len()).find(|&j| j != i && (0..3).any(|m| faces[j][m] == b && faces[j][(m + 1) % 3] == a)) else {
        return;
    };
    let d = *faces[j].iter().find(|&&x| x != a && x != b).unwrap();
    let g = NerveGraph::new(faces.to_vec(), vec![]);
    let nbrs = g.neighbors();
    if c == d || nbrs[&c].contains(&d) || nbrs[&a].len() <= 3 || nbrs[&b].len() <= 3 {
        return;
    }
    faces[i] = [c, a, d];
    faces[j] = [d, b, c];
}

/// A random set of red edges with exactly one per face, i.e. a perfect
/// matching of the dual graph found on a randomly shuffled copy of it.
/// `None` if none exists.
pub fn random_red_matching<R: Rng>(faces: &[[usize; 3]], rng: &mut R) -> Option<Vec<Edge>> {
    let g = NerveGraph::new(faces.to_vec(), vec![]);
    let mut dual_edges: Vec<(Edge, usize, usize)> = g
        .edge_faces()
        .into_iter()
        .filter(|(_, fs)| fs.len() == 2)
        .map(|(e, fs)| (e, fs[0], fs[1]))
        .collect();
    dual_edges.shuffle(rng);
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.shuffle(rng);
    let mut dual = UnGraph::<usize, Edge>::with_capacity(faces.len(), dual_edges.len());
    let mut node = vec![NodeIndex::new(0); faces.len()];
    for &f in &order {
        node[f] = dual.add_node(f);
    }
    for (e, f1, f2) in dual_edges {
        dual.add_edge(node[f1], node[f2], e);
    }
    let m = maximum_matching(&dual);
    if !m.is_perfect() {
        return None;
    }
    let mut chosen: Vec<Edge> = m.edges().filter_map(|(a, b)| dual.find_edge(a, b).map(|i| dual[i])).collect();
    chosen.sort_unstable();
    Some(chosen)
}

/// Every red-edge set on `faces` that puts exactly one red edge in each face.
pub fn all_red_matchings(faces: &[[usize; 3]]) -> Vec<Vec<Edge>> {
    let g = NerveGraph::new(faces.to_vec(), vec![]);
    let edges: Vec<Edge> = g.edge_faces().keys().copied().collect();
    assert!(edges.len() <= 20);
    (0u32..1 << edges.len())
        .map(|mask| {
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect::<Vec<_>>()
        })
        .filter(|red| g.with_red_edges(red).validate().is_valid())
        .collect()
}
