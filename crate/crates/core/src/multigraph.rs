//! Loopless multigraphs, their exact characteristic polynomials, and k-th
//! power hypergraphs.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::poly::{largest_root, IntPolynomial};

/// Root tolerance used for polynomial radii.
pub const ROOT_TOL: f64 = 1e-12;

/// Symmetric adjacency matrix with zero diagonal; entry `(i, j)` is the number
/// of parallel edges between `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    adjacency: Vec<Vec<u32>>,
}

impl Multigraph {
    /// One entry per parallel edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![vec![0u32; n]; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::contract(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::contract(format!("edge {u}-{v} outside 0..{n}")));
            }
            adjacency[u][v] += 1;
            adjacency[v][u] += 1;
        }
        Ok(Self { adjacency })
    }

    pub fn from_adjacency(adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = adjacency.len();
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != n {
                return Err(Error::contract("adjacency matrix is not square"));
            }
            if row[i] != 0 {
                return Err(Error::contract(format!("loop at vertex {i}")));
            }
            for (j, &x) in row.iter().enumerate() {
                if adjacency[j][i] != x {
                    return Err(Error::contract("adjacency matrix is not symmetric"));
                }
            }
        }
        Ok(Self { adjacency })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adjacency[u][v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .flatten()
            .map(|&x| x as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, repeated per multiplicity.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                for _ in 0..self.adjacency[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().map(|&x| x as usize).sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if self.adjacency[u][v] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn delete_vertex(&self, v: usize) -> Self {
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != v)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        Self { adjacency }
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let (a, b) = (self.n(), other.n());
        let mut adjacency = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            adjacency[i][..a].copy_from_slice(&self.adjacency[i]);
        }
        for i in 0..b {
            adjacency[a + i][a..].copy_from_slice(&other.adjacency[i]);
        }
        Self { adjacency }
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`. The merged
    /// vertex keeps label `u`; `other`'s remaining vertices follow `self`'s.
    pub fn amalgamate(&self, u: usize, other: &Self, v: usize) -> Self {
        let a = self.n();
        let map = |j: usize| -> usize {
            match j.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => a + j,
                std::cmp::Ordering::Greater => a + j - 1,
            }
        };
        let n = a + other.n() - 1;
        let mut adjacency = vec![vec![0; n]; n];
        for i in 0..a {
            adjacency[i][..a].copy_from_slice(&self.adjacency[i]);
        }
        for i in 0..other.n() {
            for j in 0..other.n() {
                adjacency[map(i)][map(j)] += other.adjacency[i][j];
            }
        }
        Self { adjacency }
    }

    /// `det(xI - A)` via the Faddeev-LeVerrier recurrence in exact integers.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n();
        let a: Vec<Vec<BigInt>> = self
            .adjacency
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for step in 1..=n {
            // M_step = A * M_{step-1} + c_{n-step+1} I
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    if a[i][l].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if !m[l][j].is_zero() {
                            next[i][j] += &a[i][l] * &m[l][j];
                        }
                    }
                }
                next[i][i] += &coeffs[n - step + 1];
            }
            m = next;
            let mut trace = BigInt::zero();
            for i in 0..n {
                for l in 0..n {
                    if !a[i][l].is_zero() {
                        trace += &a[i][l] * &m[l][i];
                    }
                }
            }
            coeffs[n - step] = -(trace / BigInt::from(step));
        }
        IntPolynomial::new(coeffs)
    }

    /// Spectral radius of the adjacency matrix.
    pub fn spectral_radius(&self) -> Result<f64> {
        if self.edge_count() == 0 {
            return Ok(0.0);
        }
        largest_root(&self.char_poly(), ROOT_TOL)
    }

    /// Blows every edge up into a k-edge with `k - 2` fresh vertices. Graph
    /// vertices keep their labels; fresh vertices follow in edge order.
    pub fn kth_power(&self, k: usize) -> Result<UniformHypergraph> {
        if k < 2 {
            return Err(Error::contract("power order k must be at least 2"));
        }
        if let Some(v) = (0..self.n()).find(|&v| self.degree(v) == 0) {
            return Err(Error::contract(format!(
                "vertex {v} is isolated; powers need every vertex covered"
            )));
        }
        let mut next = self.n();
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, v) in self.edge_list() {
            let mut e = vec![u, v];
            e.extend(next..next + k - 2);
            next += k - 2;
            edges.push(e);
        }
        UniformHypergraph::new(k, next, edges)
            .map_err(|_| Error::contract("parallel edges need k >= 3 to stay simple"))
    }

    /// `rho(G)^(2/k)`, the spectral radius of the k-th power.
    pub fn power_rho(&self, k: usize) -> Result<f64> {
        if k < 2 {
            return Err(Error::contract("power order k must be at least 2"));
        }
        Ok(self.spectral_radius()?.powf(2.0 / k as f64))
    }
}

/// Families whose squared spectral radius has a radical closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedForm {
    /// Double edge `u-v` with `a` pendent edges at `u`, `b` at `v`.
    Gab,
    /// Double edge `u-v`, edge `v-w`, `m - 3` pendent edges at `w`.
    G2,
    /// Double edge `u-v`, `m - 4` pendent edges and a path of length two at `u`.
    G3,
    /// Triple edge `u-v` with `a` pendent edges at `u`, `b` at `v`.
    Mab,
}

/// Largest root of `t^2 - s t + p`.
fn quadratic_top(s: f64, p: f64) -> f64 {
    0.5 * (s + (s * s - 4.0 * p).sqrt())
}

/// `rho^2` of the given family with `m` edges.
pub fn closed_form_rho_squared(family: ClosedForm, m: usize, a: usize, b: usize) -> Result<f64> {
    let mf = m as f64;
    match family {
        ClosedForm::Gab => {
            if m < 2 || a + b + 2 != m {
                return Err(Error::contract(format!("G(a,b) needs a + b = m - 2 (m={m})")));
            }
            Ok(quadratic_top(mf + 2.0, (a * b) as f64))
        }
        ClosedForm::Mab => {
            if m < 3 || a + b + 3 != m {
                return Err(Error::contract(format!("M(a,b) needs a + b = m - 3 (m={m})")));
            }
            Ok(quadratic_top(mf + 6.0, (a * b) as f64))
        }
        ClosedForm::G2 => {
            if m < 4 {
                return Err(Error::contract("G2 needs m >= 4"));
            }
            Ok(0.5 * (mf + 2.0 + (mf * mf - 12.0 * mf + 52.0).sqrt()))
        }
        ClosedForm::G3 => {
            if m < 4 {
                return Err(Error::contract("G3 needs m >= 4"));
            }
            Ok(0.5 * (mf + 2.0 + (mf * mf + 4.0).sqrt()))
        }
    }
}

/// Parses the `.mg` format: `n m`, then one `u v` line per parallel edge.
pub fn parse_mg(text: &str) -> Result<Multigraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let parse = |lineno: usize, line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(lineno, format!("`{t}` is not a non-negative integer")))
            })
            .collect()
    };
    let (lineno, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let [n, m] = parse(lineno, header)?[..] else {
        return Err(Error::parse(lineno, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(lineno, format!("more than {m} edge lines")));
        }
        let [u, v] = parse(lineno, line)?[..] else {
            return Err(Error::parse(lineno, "edge line must be `u v`"));
        };
        if u == v {
            return Err(Error::parse(lineno, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex outside 0..{n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count() + 1,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Multigraph::from_edges(n, &edges)
}

pub fn write_mg(g: &Multigraph) -> String {
    let edges = g.edge_list();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
