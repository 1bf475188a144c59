//! Canonical labeling by iterated partition refinement plus backtracking
//! over individualizations, with automorphism-orbit pruning.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! bit string over the labelings the search tree reaches, so
//! `canonical_form(G) == canonical_form(H)` iff G and H are isomorphic.
//! Refinement splits cells by neighbor counts against the whole current
//! partition and orders the pieces by that invariant, so the tree itself
//! is isomorphism-invariant. Automorphisms discovered when two leaves
//! encode identically are used to skip orbit-equivalent branches.

use super::graph::Graph;
use super::graph6::graph6_encode;

/// graph6 string of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> String {
    graph6_encode(&g.permuted(&canonical_labeling(g)))
}

/// Labeling l with l[v] = canonical label of vertex v.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search {
        g,
        best_bits: None,
        best_labeling: vec![0; g.n()],
        first_leaf: None,
        autos: Vec::new(),
    };
    let cells = vec![(0..g.n()).collect::<Vec<usize>>()];
    search.descend(cells, &mut Vec::new());
    search.best_labeling
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    best_bits: Option<Vec<u64>>,
    best_labeling: Vec<usize>,
    /// (bits, labeling) of the first leaf, kept as a second automorphism
    /// anchor alongside the current best.
    first_leaf: Option<(Vec<u64>, Vec<usize>)>,
    /// Discovered automorphism generators, vertex -> vertex.
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, base: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let target = match target {
            Some(t) => t,
            None => {
                self.leaf(&cells);
                return;
            }
        };
        let candidates = cells[target].clone();
        let mut processed: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.in_processed_orbit(v, &processed, base) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            base.push(v);
            self.descend(child, base);
            base.pop();
            processed.push(v);
        }
    }

    /// True when v lies in the orbit of an already-explored candidate
    /// under the discovered automorphisms that fix the current base
    /// pointwise; such branches repeat an explored subtree.
    fn in_processed_orbit(&self, v: usize, processed: &[usize], base: &[usize]) -> bool {
        if processed.is_empty() || self.autos.is_empty() {
            return false;
        }
        let n = self.g.n();
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| base.iter().all(|&b| a[b] == b))
            .collect();
        if gens.is_empty() {
            return false;
        }
        // orbit of v by closure under the applicable generators
        let mut in_orbit = vec![false; n];
        let mut stack = vec![v];
        in_orbit[v] = true;
        while let Some(u) = stack.pop() {
            for a in &gens {
                for w in [a[u], a.iter().position(|&x| x == u).unwrap()] {
                    if !in_orbit[w] {
                        in_orbit[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        processed.iter().any(|&u| in_orbit[u])
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.n();
        let mut labeling = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let bits = encode_bits(self.g, &labeling);

        if let Some((first_bits, first_labeling)) = &self.first_leaf {
            if *first_bits == bits {
                let auto = compose_iso(&labeling, first_labeling, n);
                self.push_auto(auto);
            }
        } else {
            self.first_leaf = Some((bits.clone(), labeling.clone()));
        }

        match &self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_labeling = labeling;
            }
            Some(best) if bits < *best => {
                self.best_bits = Some(bits);
                self.best_labeling = labeling;
            }
            Some(best) if bits == *best => {
                let auto = compose_iso(&labeling, &self.best_labeling, n);
                self.push_auto(auto);
            }
            _ => {}
        }
    }

    fn push_auto(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &x)| i != x) && !self.autos.contains(&auto) {
            self.autos.push(auto);
        }
    }
}

/// The automorphism b⁻¹ ∘ a built from two labelings with equal encodings.
fn compose_iso(a: &[usize], b: &[usize], n: usize) -> Vec<usize> {
    let mut b_inv = vec![0usize; n];
    for (v, &pos) in b.iter().enumerate() {
        b_inv[pos] = v;
    }
    (0..n).map(|v| b_inv[a[v]]).collect()
}

/// Upper-triangle bits of the relabeled graph, packed for comparison.
fn encode_bits(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (v, &pos) in labeling.iter().enumerate() {
        inv[pos] = v;
    }
    let nbits = n * (n - 1) / 2;
    let mut out = vec![0u64; nbits.div_ceil(64)];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                out[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    out
}

/// Split every cell by each vertex's neighbor-count vector against the
/// whole partition, ordering the pieces by that vector; repeat to a
/// fixpoint. The result is the coarsest equitable refinement reachable
/// this way, with an isomorphism-invariant cell order.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key: Vec<usize> = cells
                        .iter()
                        .map(|c| c.iter().filter(|&&u| g.has_edge(v, u)).count())
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut piece: Vec<usize> = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 == w[1].0 {
                    piece.push(w[1].1);
                } else {
                    changed = true;
                    next.push(std::mem::take(&mut piece));
                    piece.push(w[1].1);
                }
            }
            next.push(piece);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}
