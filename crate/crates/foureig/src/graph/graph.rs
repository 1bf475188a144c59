//! Simple undirected graphs as bit-set adjacency rows.

use crate::algebra::IntMatrix;
use num_bigint::BigInt;

const WORD: usize = 64;

/// Simple undirected graph on vertices {0..n-1}. Immutable after
/// construction; all operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

/// Connectivity, regularity and bipartiteness in one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicPredicates {
    pub is_connected: bool,
    /// Common degree when the graph is regular.
    pub is_regular: bool,
    pub degree: Option<usize>,
    pub is_bipartite: bool,
}

impl Graph {
    /// Edgeless graph on n >= 1 vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n >= 1, "graph must have at least one vertex");
        let words = n.div_ceil(WORD);
        Graph {
            n,
            rows: vec![vec![0u64; words]; n],
        }
    }

    /// Graph with the given undirected edges; endpoints must be distinct
    /// and in range, duplicates are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        self.rows[u][v / WORD] &= !(1 << (v % WORD));
        self.rows[v][u / WORD] &= !(1 << (u % WORD));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of v in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v];
        (0..self.n).filter(move |&u| row[u / WORD] >> (u % WORD) & 1 == 1)
    }

    /// All edges (u, v) with u < v in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Proper 2-coloring exists (checked per component).
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn basic_predicates(&self) -> BasicPredicates {
        let degree = self.regular_degree();
        BasicPredicates {
            is_connected: self.is_connected(),
            is_regular: degree.is_some(),
            degree,
            is_bipartite: self.is_bipartite(),
        }
    }

    /// Complement: edge iff non-edge here; involution on labeled graphs.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Clique expansion G ⊛ J_m: vertex v becomes the clique
    /// {v·m, …, v·m+m−1}; cliques are completely joined iff the original
    /// vertices are adjacent. For m = 1 this is the labeled identity.
    pub fn clique_expand(&self, m: usize) -> Graph {
        assert!(m >= 1, "expansion factor must be positive");
        let mut g = Graph::empty(self.n * m);
        for u in 0..self.n * m {
            for v in u + 1..self.n * m {
                let (bu, bv) = (u / m, v / m);
                if bu == bv || self.has_edge(bu, bv) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the other graph's vertices are shifted by self.n.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Relabeled copy: vertex v of self becomes labeling[v].
    pub fn permuted(&self, labeling: &[usize]) -> Graph {
        assert_eq!(labeling.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(labeling[u], labeling[v]);
        }
        g
    }

    /// 0/1 adjacency matrix over BigInt.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| BigInt::from((u != v && self.has_edge(u, v)) as u8))
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(rows)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
