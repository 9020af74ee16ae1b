//! The perverse filtration on minimal complexes: the diagonal index
//! `n - m` (cohomological degree minus internal shift), perverse cohomology
//! layers, the grid table, and anchor detection.
//!
//! An object `B_w(m)` in cohomological degree `n` enters the filtration at
//! `j = n - m`; the layer `pH^j` is the subquotient on objects with
//! `n - m = j`, renormalized onto the diagonal `n = m`. A vertex `w` is an
//! anchor when, at the top layer, some copy of `B_w(m)` can be freed of all
//! incoming differential components by an automorphism, i.e. the scalar
//! matrix of incoming edge components has a nonzero left null space.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cellgraph::CellGraph;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::zigzag::{minimize, tensor_f, MorKind, ZComplex, ZObject};

/// The diagonal index of an object: `n - m`.
pub fn perverse_degree_of(o: &ZObject) -> i32 {
    o.degree - o.shift
}

/// The grid of a minimal complex: rows are shifts, columns are degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerverseTable {
    /// `(degree, shift) -> vertices` with multiplicity, sorted.
    entries: BTreeMap<(i32, i32), Vec<usize>>,
}

impl PerverseTable {
    pub fn from_complex(c: &ZComplex) -> Self {
        let mut entries: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
        for o in c.objects() {
            entries
                .entry((o.degree, o.shift))
                .or_default()
                .push(o.vertex);
        }
        for cell in entries.values_mut() {
            cell.sort_unstable();
        }
        PerverseTable { entries }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i32, i32), &[usize])> {
        self.entries.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// ASCII grid with the perverse diagonal marked by `*`.
    pub fn render(&self, sys: &CoxeterSystem, graph: &CellGraph) -> String {
        if self.entries.is_empty() {
            return "(empty complex)\n".to_string();
        }
        let degrees: Vec<i32> = {
            let lo = self.entries.keys().map(|&(n, _)| n).min().unwrap();
            let hi = self.entries.keys().map(|&(n, _)| n).max().unwrap();
            (lo..=hi).collect()
        };
        let shifts: Vec<i32> = {
            let lo = self.entries.keys().map(|&(_, m)| m).min().unwrap();
            let hi = self.entries.keys().map(|&(_, m)| m).max().unwrap();
            (lo..=hi).collect()
        };
        let cell_text = |n: i32, m: i32| -> String {
            let mark = if n == m { "*" } else { "" };
            match self.entries.get(&(n, m)) {
                None => mark.to_string(),
                Some(vs) => {
                    let body = vs
                        .iter()
                        .map(|&v| format!("[{}]", sys.display(graph.vertex(v))))
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("{mark}{body}")
                }
            }
        };
        let mut widths: Vec<usize> = degrees.iter().map(|&n| n.to_string().len()).collect();
        for (ci, &n) in degrees.iter().enumerate() {
            for &m in &shifts {
                widths[ci] = widths[ci].max(cell_text(n, m).len());
            }
        }
        let row_head = shifts
            .iter()
            .map(|m| m.to_string().len())
            .max()
            .unwrap()
            .max(3);
        let mut out = String::new();
        let _ = write!(out, "{:>row_head$} |", "m\\n");
        for (ci, &n) in degrees.iter().enumerate() {
            let _ = write!(out, " {:>w$} |", n, w = widths[ci]);
        }
        out.push('\n');
        for &m in &shifts {
            let _ = write!(out, "{:>row_head$} |", m);
            for (ci, &n) in degrees.iter().enumerate() {
                let _ = write!(out, " {:>w$} |", cell_text(n, m), w = widths[ci]);
            }
            out.push('\n');
        }
        out
    }
}

fn require_minimal(c: &ZComplex) -> Result<()> {
    if !c.is_minimal_flagged() {
        return Err(Error::NotMinimal);
    }
    Ok(())
}

/// Largest `j` with a nonzero perverse layer.
pub fn top_perverse_degree(c: &ZComplex) -> Result<i32> {
    require_minimal(c)?;
    c.objects()
        .iter()
        .map(perverse_degree_of)
        .max()
        .ok_or(Error::EmptyComplex)
}

/// Smallest `j` with a nonzero perverse layer.
pub fn min_perverse_degree(c: &ZComplex) -> Result<i32> {
    require_minimal(c)?;
    c.objects()
        .iter()
        .map(perverse_degree_of)
        .min()
        .ok_or(Error::EmptyComplex)
}

/// The `j`-th perverse cohomology: the subquotient on objects with
/// `n - m = j`, renormalized so every object sits on the diagonal `n = m`
/// (the shift index `j` is carried by the caller). Restricted differentials
/// are necessarily edge morphisms.
pub fn ph(c: &ZComplex, j: i32) -> Result<ZComplex> {
    require_minimal(c)?;
    let mut keep: HashMap<usize, usize> = HashMap::new();
    let mut objects = Vec::new();
    for (i, o) in c.objects().iter().enumerate() {
        if perverse_degree_of(o) == j {
            keep.insert(i, objects.len());
            objects.push(ZObject {
                vertex: o.vertex,
                shift: o.shift,
                degree: o.degree - j,
            });
        }
    }
    let mut diff = BTreeMap::new();
    for (i, jj, m) in c.entries() {
        if let (Some(&a), Some(&b)) = (keep.get(&i), keep.get(&jj)) {
            debug_assert_eq!(m.kind, MorKind::Edge);
            diff.insert((a, b), m.clone());
        }
    }
    Ok(ZComplex::from_parts(objects, diff, true))
}

/// Rank of a dense rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot);
        for r in (row + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &rows[row][col];
            for k in col..cols {
                let sub = &factor * &rows[row][k];
                rows[r][k] -= sub;
            }
        }
        row += 1;
        rank += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// Anchor vertices of a nonempty minimal complex: at the top perverse layer,
/// group the copies of `B_w(m)` and test whether the matrix of incoming edge
/// components (rows: copies, columns: sources in the previous degree) has a
/// nonzero left null space.
pub fn anchors(c: &ZComplex) -> Result<BTreeSet<usize>> {
    let k = top_perverse_degree(c)?;
    let mut blocks: BTreeMap<(usize, i32), Vec<usize>> = BTreeMap::new();
    for (i, o) in c.objects().iter().enumerate() {
        if perverse_degree_of(o) == k {
            blocks.entry((o.vertex, o.shift)).or_default().push(i);
        }
    }
    let mut incoming: HashMap<usize, Vec<(usize, BigRational)>> = HashMap::new();
    for (src, tgt, m) in c.entries() {
        incoming
            .entry(tgt)
            .or_default()
            .push((src, m.scale.clone()));
    }
    let mut out = BTreeSet::new();
    for ((vertex, _shift), rows) in blocks {
        if out.contains(&vertex) {
            continue;
        }
        let mut columns: BTreeSet<usize> = BTreeSet::new();
        for &r in &rows {
            if let Some(ins) = incoming.get(&r) {
                columns.extend(ins.iter().map(|&(src, _)| src));
            }
        }
        let col_index: HashMap<usize, usize> = columns
            .iter()
            .copied()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let matrix: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|&r| {
                let mut row = vec![BigRational::zero(); columns.len()];
                if let Some(ins) = incoming.get(&r) {
                    for (src, scale) in ins {
                        row[col_index[src]] = scale.clone();
                    }
                }
                row
            })
            .collect();
        if columns.is_empty() || rank(matrix) < rows.len() {
            out.insert(vertex);
        }
    }
    Ok(out)
}

/// Colors of the anchor set, `pi_s(anchors)`.
pub fn anchor_colors(graph: &CellGraph, c: &ZComplex) -> Result<BTreeSet<u8>> {
    Ok(anchors(c)?.into_iter().map(|v| graph.color(v)).collect())
}

/// Independent anchor-color detection: `t` corresponds to an anchor iff
/// applying `F_t` raises the top perverse degree by one.
pub fn anchor_colors_by_probe(graph: &CellGraph, c: &ZComplex) -> Result<BTreeSet<u8>> {
    let k = top_perverse_degree(c)?;
    let mut out = BTreeSet::new();
    for t in 0..graph_rank(graph) {
        let probed = minimize(&tensor_f(graph, t, c)?)?;
        let k2 = top_perverse_degree(&probed)?;
        debug_assert!(k2 == k || k2 == k + 1);
        if k2 == k + 1 {
            out.insert(t);
        }
    }
    Ok(out)
}

fn graph_rank(graph: &CellGraph) -> u8 {
    let mut max = 0;
    for i in 0..graph.vertex_count() {
        max = max.max(graph.color(i) + 1);
    }
    max
}
