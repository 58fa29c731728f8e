//! Brute-force oracles that share nothing with the library's BFS counting.
#![allow(dead_code)]

use cartbc::exact::rational;
use cartbc::{ExactRational, Graph};
use num_traits::Zero;

/// Floyd–Warshall hop distances; `usize::MAX` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every geodesic from `u` to `v`, as explicit vertex sequences.
pub fn geodesics(g: &Graph, dist: &[Vec<usize>], u: usize, v: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, dist: &[Vec<usize>], v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == v {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(cur) {
            if dist[w][v] + 1 == dist[cur][v] {
                path.push(w);
                walk(g, dist, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, dist, v, &mut vec![u], &mut out);
    out
}

/// Betweenness by enumerating every geodesic of every unordered pair.
pub fn betweenness_by_enumeration(g: &Graph) -> Vec<ExactRational> {
    let n = g.vertex_count();
    let dist = floyd_warshall(g);
    let mut b = vec![ExactRational::zero(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let paths = geodesics(g, &dist, u, v);
            let total = paths.len() as i64;
            let mut through = vec![0i64; n];
            for p in &paths {
                for &x in &p[1..p.len() - 1] {
                    through[x] += 1;
                }
            }
            for x in 0..n {
                if through[x] > 0 {
                    b[x] += rational(through[x], total);
                }
            }
        }
    }
    b
}

pub fn wiener_by_floyd(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .map(|(u, v)| d[u][v] as u64)
        .sum()
}
