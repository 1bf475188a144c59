//! Named graph families with fixed, documented vertex labelings.
//!
//! Every constructor lays vertices out deterministically so examples and
//! graph6 output are reproducible bit-exactly:
//!
//! * `CompleteK(n)`: vertices 0..n-1.
//! * `CycleC(n)`: edge i — (i+1) mod n.
//! * `CompleteBipartite(m, n)`: parts {0..m-1} and {m..m+n-1}.
//! * `CompleteMultipartite(sizes)`: parts laid out consecutively in order.
//! * `Crown(s)`: K_{s,s} minus the perfect matching i — s+i, parts
//!   {0..s-1} and {s..2s-1}.
//! * `KssExpand(s, t)`, `CrownExpand(s, t)`: clique expansion of
//!   K_{s,s} resp. Crown(s) by J_t; vertex v of the base graph becomes
//!   the clique {v·t .. v·t+t-1}.
//! * `ComplementCrownExpand(s, t)`: complement of `CrownExpand(s, t)`.
//! * `AGraph(l, m, n)`: independent sets L, M, N of sizes l, m, n laid
//!   out consecutively, complete joins L—M and M—N, plus one final
//!   vertex joined completely to N.
//! * `BGraph(l, m, n, p)`: independent sets L, M, N, P laid out
//!   consecutively with complete joins L—N, L—M, N—P, M—P, plus a
//!   vertex joined completely to N and then one joined completely to P.
//! * `IncidenceGraph`: bipartite point/block incidence, points 0..v-1
//!   then blocks v..v+b-1; edge iff the point lies on the block.

use super::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A constructive family plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyDescriptor {
    CompleteK(usize),
    CycleC(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Crown(usize),
    KssExpand(usize, usize),
    CrownExpand(usize, usize),
    ComplementCrownExpand(usize, usize),
    AGraph(usize, usize, usize),
    BGraph(usize, usize, usize, usize),
    /// Explicit 0/1 point-by-block incidence matrix.
    IncidenceGraph(Vec<Vec<bool>>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParameterOutOfRange {
    #[error("{family} requires {constraint}, got {got}")]
    Violated {
        family: &'static str,
        constraint: &'static str,
        got: String,
    },
}

fn violated(
    family: &'static str,
    constraint: &'static str,
    got: impl std::fmt::Debug,
) -> ParameterOutOfRange {
    ParameterOutOfRange::Violated {
        family,
        constraint,
        got: format!("{got:?}"),
    }
}

/// Build the graph named by the descriptor under its documented labeling.
pub fn construct(desc: &FamilyDescriptor) -> Result<Graph, ParameterOutOfRange> {
    use FamilyDescriptor::*;
    match desc {
        CompleteK(n) => {
            if *n < 1 {
                return Err(violated("CompleteK", "n >= 1", n));
            }
            Ok(Graph::empty(*n).complement())
        }
        CycleC(n) => {
            if *n < 3 {
                return Err(violated("CycleC", "n >= 3", n));
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::from_edges(*n, &edges))
        }
        CompleteBipartite(m, n) => {
            if *m < 1 || *n < 1 {
                return Err(violated("CompleteBipartite", "m, n >= 1", (m, n)));
            }
            construct(&CompleteMultipartite(vec![*m, *n]))
        }
        CompleteMultipartite(sizes) => {
            if sizes.len() < 2 || sizes.iter().any(|&s| s < 1) {
                return Err(violated(
                    "CompleteMultipartite",
                    ">= 2 parts, all nonempty",
                    sizes,
                ));
            }
            let n: usize = sizes.iter().sum();
            let part = part_labels(sizes);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        Crown(s) => {
            if *s < 2 {
                return Err(violated("Crown", "s >= 2", s));
            }
            let mut g = Graph::empty(2 * s);
            for i in 0..*s {
                for j in 0..*s {
                    if i != j {
                        g.add_edge(i, s + j);
                    }
                }
            }
            Ok(g)
        }
        KssExpand(s, t) => {
            if *s < 1 || *t < 1 {
                return Err(violated("KssExpand", "s, t >= 1", (s, t)));
            }
            Ok(construct(&CompleteBipartite(*s, *s))?.clique_expand(*t))
        }
        CrownExpand(s, t) => {
            if *s < 3 || *t < 1 {
                return Err(violated("CrownExpand", "s >= 3 and t >= 1", (s, t)));
            }
            Ok(construct(&Crown(*s))?.clique_expand(*t))
        }
        ComplementCrownExpand(s, t) => {
            if *s < 3 || *t < 1 {
                return Err(violated(
                    "ComplementCrownExpand",
                    "s >= 3 and t >= 1",
                    (s, t),
                ));
            }
            Ok(construct(&CrownExpand(*s, *t))?.complement())
        }
        AGraph(l, m, n) => {
            if *l < 1 || *m < 1 || *n < 1 {
                return Err(violated("AGraph", "l, m, n >= 1", (l, m, n)));
            }
            let part = part_labels(&[*l, *m, *n]);
            let total = l + m + n + 1;
            let mut g = Graph::empty(total);
            for u in 0..total - 1 {
                for v in u + 1..total - 1 {
                    if part[v] == part[u] + 1 {
                        g.add_edge(u, v);
                    }
                }
            }
            for v in l + m..l + m + n {
                g.add_edge(v, total - 1);
            }
            Ok(g)
        }
        BGraph(l, m, n, p) => {
            if *l < 1 || *m < 1 || *n < 1 || *p < 1 {
                return Err(violated("BGraph", "l, m, n, p >= 1", (l, m, n, p)));
            }
            let part = part_labels(&[*l, *m, *n, *p]);
            let total = l + m + n + p + 2;
            let mut g = Graph::empty(total);
            // 4-cycle of complete joins L-N, L-M, N-P, M-P (parts 0,1,2,3)
            let joined = [(0, 2), (0, 1), (2, 3), (1, 3)];
            for u in 0..total - 2 {
                for v in u + 1..total - 2 {
                    let pair = (part[u].min(part[v]), part[u].max(part[v]));
                    if joined.contains(&pair) {
                        g.add_edge(u, v);
                    }
                }
            }
            for v in l + m..l + m + n {
                g.add_edge(v, total - 2);
            }
            for v in l + m + n..l + m + n + p {
                g.add_edge(v, total - 1);
            }
            Ok(g)
        }
        IncidenceGraph(rows) => {
            let v = rows.len();
            if v == 0 || rows[0].is_empty() {
                return Err(violated("IncidenceGraph", "nonempty matrix", (v, 0)));
            }
            let b = rows[0].len();
            if rows.iter().any(|r| r.len() != b) {
                return Err(violated("IncidenceGraph", "rectangular matrix", v));
            }
            let mut g = Graph::empty(v + b);
            for (i, row) in rows.iter().enumerate() {
                for (j, &inc) in row.iter().enumerate() {
                    if inc {
                        g.add_edge(i, v + j);
                    }
                }
            }
            Ok(g)
        }
    }
}

fn part_labels(sizes: &[usize]) -> Vec<usize> {
    let mut part = Vec::new();
    for (idx, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(idx).take(s));
    }
    part
}

/// Parameters of a 2-(v, k, λ) block design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("design parameters must be positive")]
    NonPositive,
    #[error("vr = bk fails: {v}*{r} != {b}*{k}")]
    CountingIdentity { v: usize, r: usize, b: usize, k: usize },
    #[error("lambda(v-1) = r(k-1) fails")]
    PairIdentity,
}

impl DesignParams {
    pub fn new(v: usize, b: usize, r: usize, k: usize, lambda: usize) -> Result<Self, DesignError> {
        if v == 0 || b == 0 || r == 0 || k == 0 || lambda == 0 {
            return Err(DesignError::NonPositive);
        }
        if v * r != b * k {
            return Err(DesignError::CountingIdentity { v, r, b, k });
        }
        if lambda * (v - 1) != r * (k - 1) {
            return Err(DesignError::PairIdentity);
        }
        Ok(DesignParams { v, b, r, k, lambda })
    }

    /// Symmetric designs have r = k (and then v = b).
    pub fn is_symmetric(&self) -> bool {
        self.r == self.k
    }
}

/// Incidence matrix of the symmetric design developed from a difference
/// set: blocks are the translates D + i (mod v), point j lies on block i
/// iff j - i mod v is in D. Fano plane: v = 7, D = {0, 1, 3}.
pub fn difference_set_incidence(v: usize, ds: &[usize]) -> Vec<Vec<bool>> {
    (0..v)
        .map(|point| (0..v).map(|block| ds.contains(&((point + v - block % v) % v))).collect())
        .collect()
}
