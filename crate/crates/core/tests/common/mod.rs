#![allow(dead_code)]

use hyperspec_core::{Multigraph, UniformHypergraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected simple k-graph with `m` edges: every new edge reuses
/// between 1 and `max_shared` existing vertices and fills up with fresh ones.
pub fn random_connected<R: Rng>(rng: &mut R, k: usize, m: usize, max_shared: usize) -> UniformHypergraph {
    'retry: loop {
        let mut edges: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut n = k;
        while edges.len() < m {
            let shared = rng.gen_range(1..=max_shared.min(k - 1).min(n));
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            let mut e: Vec<usize> = verts[..shared].to_vec();
            e.extend(n..n + k - shared);
            e.sort_unstable();
            if edges.contains(&e) {
                continue;
            }
            n += k - shared;
            edges.push(e);
            if edges.len() > 4 * m {
                continue 'retry;
            }
        }
        return UniformHypergraph::new(k, n, edges).unwrap();
    }
}

/// Random connected loopless multigraph on `n` vertices (spanning tree plus
/// extra parallel or new edges), multiplicities at most `max_mult`.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, max_mult: u32) -> Multigraph {
    let mut adj = vec![vec![0u32; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        adj[u][v] += 1;
        adj[v][u] += 1;
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && adj[u][v] < max_mult {
            adj[u][v] += 1;
            adj[v][u] += 1;
        }
    }
    Multigraph::from_adjacency(adj).unwrap()
}

/// Largest eigenvalue of a symmetric matrix by Jacobi rotations.
pub fn jacobi_top_eigenvalue(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut a: Vec<Vec<f64>> = a.to_vec();
    for _ in 0..200 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p][r];
                    let aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

pub fn adjacency_f64(g: &Multigraph) -> Vec<Vec<f64>> {
    g.adjacency()
        .iter()
        .map(|row| row.iter().map(|&x| x as f64).collect())
        .collect()
}
