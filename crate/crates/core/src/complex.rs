//! Clique complexes, boundary operators, the Dirac operator, form
//! Laplacians, and Betti numbers.
//!
//! Simplices are stored as strictly increasing vertex tuples, ranked by
//! dimension and ordered lexicographically within a dimension. The global
//! index is dimension-major, which makes D^2 block diagonal by form degree
//! with contiguous blocks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::reduction::rank;
use crate::scalar::Scalar;

/// Default cap on the total number of simplices of a clique complex.
pub const DEFAULT_SIMPLEX_BUDGET: usize = 100_000;

/// Clique complex of a graph: all complete subgraphs, closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// by_dim[d] lists all d-dimensional simplices ((d+1)-cliques),
    /// each sorted ascending, the list itself in lexicographic order.
    by_dim: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn dimension(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Number of simplices in each dimension (the f-vector).
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Global index of the first simplex of dimension `dim`.
    pub fn offset(&self, dim: usize) -> usize {
        self.by_dim.iter().take(dim).map(Vec::len).sum()
    }

    fn index_within_dim(&self, dim: usize, simplex: &[usize]) -> Option<usize> {
        self.by_dim[dim]
            .binary_search_by(|probe| probe.as_slice().cmp(simplex))
            .ok()
    }
}

/// Builds the clique complex by extending sorted cliques one vertex at a
/// time; fails once the simplex budget is exceeded.
pub fn clique_complex(g: &Graph, budget: usize) -> Result<SimplicialComplex> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut total = 0usize;
    let mut current: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while !current.is_empty() {
        total += current.len();
        if total > budget {
            return Err(Error::SimplexBudgetExceeded { budget });
        }
        let mut next = Vec::new();
        for s in &current {
            let last = *s.last().expect("simplices are nonempty");
            for u in last + 1..n {
                if s.iter().all(|&w| adj[w][u]) {
                    let mut ext = s.clone();
                    ext.push(u);
                    next.push(ext);
                }
            }
        }
        by_dim.push(std::mem::take(&mut current));
        current = next;
    }
    Ok(SimplicialComplex { by_dim })
}

/// One-dimensional complex of a graph: vertices and edges only, with no
/// clique completion. For triangle-free graphs this equals the clique
/// complex; the cycle closed forms are stated for this 2n-cell complex.
pub fn graph_skeleton(g: &Graph) -> SimplicialComplex {
    let vertices: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    let by_dim = if edges.is_empty() {
        vec![vertices]
    } else {
        vec![vertices, edges]
    };
    SimplicialComplex { by_dim }
}

/// Boundary operator from d-simplices to (d-1)-simplices. The column of a
/// simplex (v_0 < ... < v_d) has entry (-1)^i at the face omitting v_i.
pub fn boundary_operator(c: &SimplicialComplex, dim: usize) -> Result<Matrix> {
    let max = c.dimension();
    if dim == 0 || dim > max {
        return Err(Error::BoundaryDimension { dim, max });
    }
    let rows = c.simplices(dim - 1).len();
    let cols = c.simplices(dim).len();
    let mut m = Matrix::zeros(rows, cols);
    for (j, s) in c.simplices(dim).iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let r = c
                .index_within_dim(dim - 1, &face)
                .expect("complex is closed under faces");
            m[(r, j)] = if i % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
        }
    }
    Ok(m)
}

/// Dirac operator D = d + d^T assembled over the global simplex index:
/// a symmetric v x v matrix whose square is block diagonal by form degree.
pub fn dirac_operator(c: &SimplicialComplex) -> Matrix {
    let v = c.total_simplices();
    let mut m = Matrix::zeros(v, v);
    for dim in 1..=c.dimension() {
        let b = boundary_operator(c, dim).expect("dimension in range");
        let ro = c.offset(dim - 1);
        let co = c.offset(dim);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if b[(i, j)].is_zero() {
                    continue;
                }
                m[(ro + i, co + j)] = b[(i, j)].clone();
                m[(co + j, ro + i)] = b[(i, j)].clone();
            }
        }
    }
    m
}

/// Form Laplacian L = D^2.
pub fn form_laplacian(c: &SimplicialComplex) -> Matrix {
    let d = dirac_operator(c);
    &d * &d
}

/// Betti numbers from the Hodge identity b_k = dim ker(L_k), together with
/// the kernel dimension of the full form Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiNumbers {
    pub by_degree: Vec<usize>,
    pub laplacian_kernel_dim: usize,
}

pub fn betti_numbers(c: &SimplicialComplex) -> BettiNumbers {
    let lap = form_laplacian(c);
    let mut by_degree = Vec::with_capacity(c.dimension() + 1);
    for dim in 0..=c.dimension() {
        let count = c.simplices(dim).len();
        let off = c.offset(dim);
        let idx: Vec<usize> = (off..off + count).collect();
        let block = lap.submatrix(&idx, &idx);
        by_degree.push(count - rank(&block));
    }
    let total = c.total_simplices();
    BettiNumbers {
        by_degree,
        laplacian_kernel_dim: total - rank(&lap),
    }
}

/// Both sides of the Euler-Poincare identity: the alternating sum of Betti
/// numbers and the alternating sum of simplex counts.
pub fn euler_characteristic_check(c: &SimplicialComplex) -> (i64, i64) {
    let betti = betti_numbers(c);
    let alt = |vals: &[usize]| -> i64 {
        vals.iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    };
    (alt(&betti.by_degree), alt(&c.counts()))
}

/// Graph on all simplices of the clique complex: two simplices are adjacent
/// when their dimensions differ by one and the smaller is a face of the
/// larger.
pub fn simplex_graph(g: &Graph, budget: usize) -> Result<Graph> {
    let c = clique_complex(g, budget)?;
    let mut edges = Vec::new();
    for dim in 1..=c.dimension() {
        let off_lo = c.offset(dim - 1);
        let off_hi = c.offset(dim);
        for (j, s) in c.simplices(dim).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let r = c
                    .index_within_dim(dim - 1, &face)
                    .expect("complex is closed under faces");
                edges.push((off_lo + r, off_hi + j));
            }
        }
    }
    Graph::new(c.total_simplices(), edges)
}
