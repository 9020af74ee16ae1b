//! The left cell tree: vertices are the nontrivial elements with a unique
//! reduced expression and right descent set `{s}`, edges join elements that
//! differ by one letter on the left, and each vertex is colored by its unique
//! left descent.
//!
//! Every vertex has a singleton left descent set (the first letter of its
//! unique word) and singleton right descent set `{s}` (the last letter), and
//! stripping the first letter of a vertex gives its unique shorter neighbor,
//! so the graph built by left-extension BFS from `s` is automatically a tree.

use std::collections::HashMap;

use crate::coxeter::{CoxeterSystem, Elt, Order};
use crate::error::{Error, Result};
use crate::hecke::Hecke;

#[derive(Debug, Clone)]
pub struct CellGraph {
    base: u8,
    radius: usize,
    radius_complete: bool,
    forced_base: bool,
    categorical_override: bool,
    vertices: Vec<Elt>,
    index: HashMap<Elt, usize>,
    lengths: Vec<usize>,
    colors: Vec<u8>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl CellGraph {
    /// Builds the cell graph for base generator `s` out to word length
    /// `radius`.
    ///
    /// In a non-simply-laced system, `s` must belong to a pair with
    /// `m_{s,t} >= 4`; use [`CellGraph::build_forced`] to bypass that rule
    /// deliberately.
    pub fn build(sys: &CoxeterSystem, s: u8, radius: usize) -> Result<Self> {
        Self::build_inner(sys, s, radius, false)
    }

    /// Builds without the base-choice rule. Graphs built this way are flagged
    /// and refused by the categorical operations unless overridden.
    pub fn build_forced(sys: &CoxeterSystem, s: u8, radius: usize) -> Result<Self> {
        Self::build_inner(sys, s, radius, true)
    }

    fn build_inner(sys: &CoxeterSystem, s: u8, radius: usize, forced: bool) -> Result<Self> {
        if radius < 1 {
            return Err(Error::RadiusTooSmall(radius as i64));
        }
        if s as usize >= sys.rank() {
            return Err(Error::UnknownGenerator(format!("#{s}")));
        }
        if !forced && !sys.matrix().is_simply_laced() {
            let has_heavy_pair = (0..sys.rank() as u8).any(|t| {
                t != s
                    && match sys.matrix().order(s, t) {
                        Order::Finite(m) => m >= 4,
                        Order::Infinite => true,
                    }
            });
            if !has_heavy_pair {
                return Err(Error::BadBaseChoice(format!(
                    "in a non-simply-laced system the base must belong to a pair with m >= 4; `{}` does not",
                    sys.matrix().name(s)
                )));
            }
        }

        let mut graph = CellGraph {
            base: s,
            radius,
            radius_complete: true,
            forced_base: forced,
            categorical_override: false,
            vertices: Vec::new(),
            index: HashMap::new(),
            lengths: Vec::new(),
            colors: Vec::new(),
            adj: Vec::new(),
            edges: Vec::new(),
        };
        let root = sys.generator(s);
        graph.push_vertex(root, 1, s);
        let mut frontier = vec![0usize];
        for level in 1..radius {
            let mut next = Vec::new();
            for &vi in &frontier {
                let w = graph.vertices[vi];
                for (u, color) in Self::extensions(sys, w, graph.colors[vi])? {
                    let ui = graph.push_vertex(u, level + 1, color);
                    graph.add_edge(vi, ui);
                    next.push(ui);
                }
            }
            if next.is_empty() {
                return Ok(graph);
            }
            frontier = next;
        }
        // Vertices at full radius may have unexplored extensions.
        for &vi in &frontier {
            let w = graph.vertices[vi];
            if !Self::extensions(sys, w, graph.colors[vi])?.is_empty() {
                graph.radius_complete = false;
                break;
            }
        }
        Ok(graph)
    }

    /// Unique-reduced-expression left extensions `r * w` of a cell vertex.
    fn extensions(sys: &CoxeterSystem, w: Elt, color: u8) -> Result<Vec<(Elt, u8)>> {
        let mut out = Vec::new();
        for r in 0..sys.rank() as u8 {
            if r == color {
                continue;
            }
            let u = sys.left_mul(r, w)?;
            debug_assert!(sys.len(u) > sys.len(w));
            if sys.has_unique_reduced_word(u)? {
                out.push((u, r));
            }
        }
        Ok(out)
    }

    fn push_vertex(&mut self, w: Elt, len: usize, color: u8) -> usize {
        let i = self.vertices.len();
        self.vertices.push(w);
        self.index.insert(w, i);
        self.lengths.push(len);
        self.colors.push(color);
        self.adj.push(Vec::new());
        i
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.edges.push((a.min(b), a.max(b)));
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn radius_complete(&self) -> bool {
        self.radius_complete
    }

    pub fn forced_base(&self) -> bool {
        self.forced_base
    }

    /// Explicitly allow categorical operations over a force-based graph.
    pub fn set_categorical_override(&mut self, allow: bool) {
        self.categorical_override = allow;
    }

    /// Categorical operations run only on rule-respecting graphs, or when
    /// a forced graph has been explicitly overridden.
    pub fn categorical_allowed(&self) -> bool {
        !self.forced_base || self.categorical_override
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Elt] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex(&self, i: usize) -> Elt {
        self.vertices[i]
    }

    pub fn vertex_index(&self, w: Elt) -> Option<usize> {
        self.index.get(&w).copied()
    }

    /// The color `pi_s` of a vertex: its unique left descent.
    pub fn color(&self, i: usize) -> u8 {
        self.colors[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Neighbors of a vertex with the given color.
    pub fn colored_neighbors(&self, i: usize, r: u8) -> Vec<usize> {
        self.adj[i]
            .iter()
            .copied()
            .filter(|&j| self.colors[j] == r)
            .collect()
    }

    /// Vertices of a color, i.e. `pi_s^{-1}(r)`.
    pub fn color_class(&self, r: u8) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&i| self.colors[i] == r)
            .collect()
    }

    /// True if the neighbor set of `i` may be incomplete because the vertex
    /// sits on the boundary of a radius-limited graph.
    pub fn at_incomplete_boundary(&self, i: usize) -> bool {
        !self.radius_complete && self.lengths[i] >= self.radius
    }

    /// Connectedness plus the edge count of a tree.
    pub fn is_tree(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        if self.edges.len() != self.vertices.len() - 1 {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Compares the stored edge set with the Kazhdan-Lusztig description:
    /// `{x, y}` is an edge iff the colors differ and `mu(x, y) != 0`, in
    /// which case `mu(x, y) = 1`.
    pub fn check_mu_edges(&self, hecke: &Hecke) -> Result<bool> {
        let mut expected = Vec::new();
        for i in 0..self.vertex_count() {
            for j in (i + 1)..self.vertex_count() {
                let mu = hecke.mu(self.vertices[i], self.vertices[j])?;
                let mu_edge = self.colors[i] != self.colors[j] && mu != 0.into();
                if mu_edge && mu != 1.into() {
                    return Ok(false);
                }
                if mu_edge {
                    expected.push((i, j));
                }
            }
        }
        let mut stored = self.edges.clone();
        stored.sort_unstable();
        expected.sort_unstable();
        Ok(stored == expected)
    }

    /// Structured-text export: vertices with colors, then edges.
    pub fn export(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "cellgraph base={} radius={} complete={}\n",
            sys.matrix().name(self.base),
            self.radius,
            self.radius_complete
        ));
        for i in 0..self.vertex_count() {
            out.push_str(&format!(
                "vertex [{}] color={} len={}\n",
                sys.display(self.vertices[i]),
                sys.matrix().name(self.colors[i]),
                self.lengths[i]
            ));
        }
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        for (a, b) in edges {
            out.push_str(&format!(
                "edge [{}] -- [{}]\n",
                sys.display(self.vertices[a]),
                sys.display(self.vertices[b])
            ));
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn corrupt_drop_edge(&mut self) {
        let (a, b) = self.edges.pop().expect("graph has an edge");
        self.adj[a].retain(|&j| j != b);
        self.adj[b].retain(|&j| j != a);
    }
}
