use petgraph::algo::ford_fulkerson;
use petgraph::graph::{EdgeIndex, Graph};

use crate::symmetry::DenseMatrix;

/// Centrosymmetric (0,1)-matrix for palindromic `r`, `s` of even lengths.
///
/// The top half `H` determines the matrix (the bottom half is its half-turn),
/// and column `j` of the whole matrix sums column `j` and column `n-1-j` of
/// `H`. So `H` is a flow from top rows to column pairs, each row/pair arc
/// carrying at most 2 (one per cell). Returns `None` when the flow falls
/// short.
pub(crate) fn centrosymmetric_even(r: &[i64], s: &[i64]) -> Option<DenseMatrix<i64>> {
    let (m, n) = (r.len(), s.len());
    debug_assert!(m % 2 == 0 && n % 2 == 0);
    let (hm, hn) = (m / 2, n / 2);
    let mut g: Graph<(), u64> = Graph::new();
    let source = g.add_node(());
    let sink = g.add_node(());
    let rows: Vec<_> = (0..hm).map(|_| g.add_node(())).collect();
    let pairs: Vec<_> = (0..hn).map(|_| g.add_node(())).collect();
    let mut want = 0u64;
    for (i, &node) in rows.iter().enumerate() {
        let cap = u64::try_from(r[i]).ok()?;
        want += cap;
        g.add_edge(source, node, cap);
    }
    for (k, &node) in pairs.iter().enumerate() {
        g.add_edge(node, sink, u64::try_from(s[k]).ok()?);
    }
    let mut arcs: Vec<(usize, usize, EdgeIndex)> = Vec::with_capacity(hm * hn);
    for (i, &u) in rows.iter().enumerate() {
        for (k, &v) in pairs.iter().enumerate() {
            arcs.push((i, k, g.add_edge(u, v, 2)));
        }
    }
    let (value, flows) = ford_fulkerson(&g, source, sink);
    if value != want {
        return None;
    }
    let mut a = DenseMatrix::zeros(m, n);
    for (i, k, e) in arcs {
        let f = flows[e.index()];
        if f >= 1 {
            a.set(i, k, 1);
            a.set(m - 1 - i, n - 1 - k, 1);
        }
        if f == 2 {
            a.set(i, n - 1 - k, 1);
            a.set(m - 1 - i, k, 1);
        }
    }
    Some(a)
}
