//! Finite simple graphs: parsing, incidence and Laplacian matrices, and
//! tree/forest counting with brute-force oracles.
//!
//! Edge-list text format: a header line with the vertex count, then one
//! "u v" pair per line, whitespace separated; '#' starts a comment.

use crate::charpoly::pseudo_det;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::minors::classical_det;
use crate::reduction::kernel_basis;
use crate::scalar::Scalar;

/// Largest edge count the brute-force counters accept.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 20;

/// Simple undirected graph on vertices 0..n-1 with sorted, deduplicated
/// edges (u, v), u < v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::GraphParse {
                    line: 0,
                    message: format!("loop edge {u} {v}"),
                });
            }
            if v >= n {
                return Err(Error::GraphParse {
                    line: 0,
                    message: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            if i > 0 && edges[i - 1] == (u, v) {
                return Err(Error::GraphParse {
                    line: 0,
                    message: format!("duplicate edge {u} {v}"),
                });
            }
        }
        Ok(Graph { n, edges })
    }

    /// Parses the edge-list text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(Error::GraphParse {
                            line: line_no,
                            message: "expected a single vertex-count header".into(),
                        });
                    }
                    n = Some(fields[0].parse().map_err(|_| Error::GraphParse {
                        line: line_no,
                        message: format!("bad vertex count {:?}", fields[0]),
                    })?);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(Error::GraphParse {
                            line: line_no,
                            message: format!("expected \"u v\", got {:?}", line),
                        });
                    }
                    let parse = |s: &str| -> Result<usize> {
                        s.parse().map_err(|_| Error::GraphParse {
                            line: line_no,
                            message: format!("bad vertex {:?}", s),
                        })
                    };
                    let (u, v) = (parse(fields[0])?, parse(fields[1])?);
                    if u == v {
                        return Err(Error::GraphParse {
                            line: line_no,
                            message: format!("loop edge {u} {v}"),
                        });
                    }
                    if u >= count || v >= count {
                        return Err(Error::GraphParse {
                            line: line_no,
                            message: format!("vertex out of range in edge {u} {v}"),
                        });
                    }
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        let n = n.ok_or(Error::GraphParse {
            line: 0,
            message: "missing vertex-count header".into(),
        })?;
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            let dup = sorted
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .unwrap();
            return Err(Error::GraphParse {
                line: 0,
                message: format!("duplicate edge {} {}", dup.0, dup.1),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, u + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Graph { n, edges }
    }

    /// Path on n vertices (n - 1 edges).
    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect(),
        }
    }

    /// Star with one hub and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph {
            n: leaves + 1,
            edges: (1..=leaves).map(|v| (0, v)).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Oriented incidence matrix, |E| x |V|: the row for edge (u, v) with
    /// u < v carries -1 at u and +1 at v.
    pub fn incidence_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.edges.len(), self.n);
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            m[(e, u)] = -Scalar::one();
            m[(e, v)] = Scalar::one();
        }
        m
    }

    /// Scalar Laplacian L = F^T F = degree matrix minus adjacency matrix.
    pub fn scalar_laplacian(&self) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m[(u, u)] += Scalar::one();
            m[(v, v)] += Scalar::one();
            m[(u, v)] = -Scalar::one();
            m[(v, u)] = -Scalar::one();
        }
        m
    }
}

/// Number of spanning trees: pseudo-determinant of the Laplacian divided by
/// the vertex count. Requires a connected graph, verified exactly through
/// the kernel dimension of L.
pub fn spanning_tree_count(g: &Graph) -> Result<Scalar> {
    let lap = g.scalar_laplacian();
    let kernel_dim = kernel_basis(&lap).len();
    if kernel_dim != 1 {
        return Err(Error::Disconnected { kernel_dim });
    }
    let det = pseudo_det(&lap)?;
    Ok(det / Scalar::from_int(g.vertex_count() as i64))
}

/// Number of rooted spanning forests: det(1 + L). Defined for any graph,
/// connected or not.
pub fn rooted_forest_count(g: &Graph) -> Scalar {
    let lap = g.scalar_laplacian();
    let shifted = &Matrix::identity(g.vertex_count()) + &lap;
    classical_det(&shifted).expect("I + L is square")
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if x and y were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

fn check_edge_budget(g: &Graph) -> Result<()> {
    if g.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::TooManyEdges {
            edges: g.edge_count(),
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    Ok(())
}

/// Counts spanning trees by enumerating all (|V|-1)-edge subsets.
pub fn brute_force_tree_count(g: &Graph) -> Result<u64> {
    check_edge_budget(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let need = n - 1;
    let m = g.edge_count();
    if need > m {
        return Ok(if need == 0 { 1 } else { 0 });
    }
    let mut count = 0u64;
    for subset in crate::minors::subsets(m, need) {
        let mut uf = UnionFind::new(n);
        let mut acyclic = true;
        for &e in &subset {
            let (u, v) = g.edges()[e];
            if !uf.union(u, v) {
                acyclic = false;
                break;
            }
        }
        // n-1 acyclic edges on n vertices always span
        if acyclic {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts rooted spanning forests: every acyclic edge subset contributes
/// the product of its tree-component sizes (one root choice per tree;
/// isolated vertices are seeds with exactly one choice).
pub fn brute_force_rooted_forest_count(g: &Graph) -> Result<u64> {
    check_edge_budget(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut total = 0u64;
    for mask in 0u32..(1u32 << m) {
        let mut uf = UnionFind::new(n);
        let mut acyclic = true;
        for e in 0..m {
            if mask & (1 << e) != 0 {
                let (u, v) = g.edges()[e];
                if !uf.union(u, v) {
                    acyclic = false;
                    break;
                }
            }
        }
        if !acyclic {
            continue;
        }
        let mut product = 1u64;
        for v in 0..n {
            if uf.find(v) == v {
                product *= uf.size[v] as u64;
            }
        }
        total += product;
    }
    Ok(total)
}
