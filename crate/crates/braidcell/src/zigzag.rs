//! Bounded complexes over the zigzag-truncated cell category, the elementary
//! Rouquier actions `F_r` and `E_r`, Gaussian-elimination minimization, and
//! isomorphism-invariant fingerprints.
//!
//! Morphism spaces between cell objects are truncated to the zigzag algebra
//! of the cell tree: identities (degree 0), one edge morphism per tree edge
//! (degree 1) and one loop per vertex (degree 2); two-step paths through a
//! vertex compose to the loop at their common endpoint, everything of degree
//! three or more is zero. `F_r` is the total complex of the multiplication
//! map `B_r (x) C -> C(1)`; on objects `B_r (x) B_w` is `B_w(-1) + B_w(1)`
//! when `r` is the left descent of `w` and the sum of the `r`-colored
//! neighbors of `w` otherwise, and on morphisms it acts by postcomposition
//! inside the zigzag algebra. `E_r` is the mirror total complex
//! `C(-1) -> B_r (x) C`. Differentials carry exact rational scalars so that
//! Gaussian elimination can divide.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cellgraph::CellGraph;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Elt};
use crate::error::{Error, Result};

/// Kind of a morphism between cell objects, graded by degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MorKind {
    Identity,
    Edge,
    Loop,
}

impl MorKind {
    pub fn degree(self) -> i32 {
        match self {
            MorKind::Identity => 0,
            MorKind::Edge => 1,
            MorKind::Loop => 2,
        }
    }
}

/// A scalar multiple of a basis morphism of the zigzag category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZMorphism {
    pub kind: MorKind,
    pub scale: BigRational,
}

impl ZMorphism {
    pub fn new(kind: MorKind, scale: BigRational) -> Self {
        ZMorphism { kind, scale }
    }

    pub fn unit(kind: MorKind) -> Self {
        ZMorphism {
            kind,
            scale: BigRational::one(),
        }
    }
}

/// Composition `first: src -> mid`, then `second: mid -> tgt` in the zigzag
/// algebra. Returns the kind of the composite, or `None` when it vanishes:
/// two edges close up into the loop at their common endpoint or die, and
/// loops annihilate everything except identities.
fn compose_kinds(first: MorKind, src: usize, second: MorKind, tgt: usize) -> Option<MorKind> {
    match (first, second) {
        (MorKind::Identity, k) | (k, MorKind::Identity) => Some(k),
        (MorKind::Edge, MorKind::Edge) if src == tgt => Some(MorKind::Loop),
        _ => None,
    }
}

/// A shifted cell object `B_w(shift)` placed in a cohomological degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZObject {
    /// Index of the vertex in the ambient [`CellGraph`].
    pub vertex: usize,
    /// Internal grading shift `m` of `B_w(m)`.
    pub shift: i32,
    /// Cohomological degree `n`.
    pub degree: i32,
}

/// A bounded complex of shifted cell objects with zigzag differentials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZComplex {
    objects: Vec<ZObject>,
    diff: BTreeMap<(usize, usize), ZMorphism>,
    minimal: bool,
}

/// An object as a plain `(vertex, shift, degree)` triple.
pub type ObjectKey = (usize, i32, i32);

/// Canonical descriptor of a minimal complex: the multiset of object triples
/// and the set of differential entries at the triple level. Complexes with
/// different fingerprints are non-isomorphic; equal fingerprints are reported
/// as equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub objects: Vec<ObjectKey>,
    pub entries: Vec<(ObjectKey, ObjectKey, MorKind)>,
}

impl ZComplex {
    pub fn empty() -> Self {
        ZComplex {
            objects: Vec::new(),
            diff: BTreeMap::new(),
            minimal: true,
        }
    }

    /// The one-object complex `B_w` in degree 0, shift 0.
    pub fn unit(graph: &CellGraph, w: Elt) -> Result<Self> {
        if !graph.categorical_allowed() {
            return Err(Error::BadBaseChoice(
                "graph was built with a forced base; override explicitly to act on it".into(),
            ));
        }
        let vertex = graph
            .vertex_index(w)
            .ok_or_else(|| Error::VertexOutsideGraph(format!("element #{}", w.index())))?;
        Ok(ZComplex {
            objects: vec![ZObject {
                vertex,
                shift: 0,
                degree: 0,
            }],
            diff: BTreeMap::new(),
            minimal: true,
        })
    }

    pub(crate) fn from_parts(
        objects: Vec<ZObject>,
        diff: BTreeMap<(usize, usize), ZMorphism>,
        minimal: bool,
    ) -> Self {
        ZComplex {
            objects,
            diff,
            minimal,
        }
    }

    pub fn objects(&self) -> &[ZObject] {
        &self.objects
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ZMorphism)> {
        self.diff.iter().map(|(&(i, j), m)| (i, j, m))
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn is_minimal_flagged(&self) -> bool {
        self.minimal
    }

    /// Direct sum; no differentials are created between the parts.
    pub fn direct_sum(parts: &[ZComplex]) -> ZComplex {
        let mut out = ZComplex::empty();
        out.minimal = parts.iter().all(|p| p.minimal);
        for part in parts {
            let offset = out.objects.len();
            out.objects.extend(part.objects.iter().copied());
            for (&(i, j), m) in &part.diff {
                out.diff.insert((i + offset, j + offset), m.clone());
            }
        }
        out
    }

    fn add_entry(&mut self, src: usize, tgt: usize, kind: MorKind, scale: BigRational) {
        if scale.is_zero() {
            return;
        }
        match self.diff.entry((src, tgt)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(ZMorphism::new(kind, scale));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                debug_assert_eq!(e.get().kind, kind, "two kinds between one object pair");
                e.get_mut().scale += scale;
                if e.get().scale.is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Structural validity: entries raise the degree by one, have the
    /// morphism degree demanded by the shifts, and connect compatible
    /// vertices.
    pub fn validate(&self, graph: &CellGraph) -> Result<()> {
        for (&(i, j), m) in &self.diff {
            let (a, b) = (self.objects[i], self.objects[j]);
            let ok = b.degree == a.degree + 1
                && b.shift - a.shift == m.kind.degree()
                && match m.kind {
                    MorKind::Identity | MorKind::Loop => a.vertex == b.vertex,
                    MorKind::Edge => graph.neighbors(a.vertex).contains(&b.vertex),
                };
            if !ok {
                return Err(Error::InconsistentDifferential(format!(
                    "entry {i} -> {j} has invalid type"
                )));
            }
        }
        Ok(())
    }

    /// Checks `d . d = 0` with exact scalars.
    pub fn d_squared_is_zero(&self) -> bool {
        let mut sums: HashMap<(usize, usize, MorKind), BigRational> = HashMap::new();
        for (&(i, j), f) in &self.diff {
            for (&(j2, k), g) in self.diff.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j, j2);
                let kind = compose_kinds(
                    f.kind,
                    self.objects[i].vertex,
                    g.kind,
                    self.objects[k].vertex,
                );
                if let Some(kind) = kind {
                    *sums.entry((i, k, kind)).or_insert_with(BigRational::zero) +=
                        &f.scale * &g.scale;
                }
            }
        }
        sums.values().all(|s| s.is_zero())
    }
}

/// Summand bookkeeping for `B_r (x) C`: each object contributes either the
/// pair `B_w(m-1), B_w(m+1)` (labels `Loop` and `Id`) or one summand per
/// `r`-colored neighbor (label `Edge`).
struct TensorPart {
    id_summand: Vec<Option<usize>>,
    loop_summand: Vec<Option<usize>>,
    edge_summand: HashMap<(usize, usize), usize>,
}

fn build_tensor_summands(
    graph: &CellGraph,
    r: u8,
    c: &ZComplex,
    objects: &mut Vec<ZObject>,
) -> Result<TensorPart> {
    let n = c.objects.len();
    let mut part = TensorPart {
        id_summand: vec![None; n],
        loop_summand: vec![None; n],
        edge_summand: HashMap::new(),
    };
    for (i, o) in c.objects.iter().enumerate() {
        if graph.color(o.vertex) == r {
            part.id_summand[i] = Some(objects.len());
            objects.push(ZObject {
                vertex: o.vertex,
                shift: o.shift + 1,
                degree: o.degree,
            });
            part.loop_summand[i] = Some(objects.len());
            objects.push(ZObject {
                vertex: o.vertex,
                shift: o.shift - 1,
                degree: o.degree,
            });
        } else {
            if graph.at_incomplete_boundary(o.vertex) {
                return Err(Error::WavefrontOutOfRadius(format!("vertex #{}", o.vertex)));
            }
            for y in graph.colored_neighbors(o.vertex, r) {
                part.edge_summand.insert((i, y), objects.len());
                objects.push(ZObject {
                    vertex: y,
                    shift: o.shift,
                    degree: o.degree,
                });
            }
        }
    }
    Ok(part)
}

/// The functor image `B_r (x) d` of the differential: every component is a
/// scalar multiple of an identity between equal summand objects, computed by
/// postcomposition inside the zigzag algebra.
fn tensor_functor_diff(c: &ZComplex, part: &TensorPart, out: &mut ZComplex) {
    for (&(i, j), f) in &c.diff {
        match f.kind {
            MorKind::Identity => {
                if let (Some(a), Some(b)) = (part.id_summand[i], part.id_summand[j]) {
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
                if let (Some(a), Some(b)) = (part.loop_summand[i], part.loop_summand[j]) {
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
                let sources: Vec<(usize, usize)> = part
                    .edge_summand
                    .iter()
                    .filter(|&(&(src, _), _)| src == i)
                    .map(|(&(_, y), &a)| (y, a))
                    .collect();
                for (y, a) in sources {
                    let b = part.edge_summand[&(j, y)];
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
            }
            MorKind::Edge => {
                // Id label then the edge: lands on the Edge-labeled summand
                // of the target indexed by the source vertex.
                if let Some(a) = part.id_summand[i] {
                    let src_vertex = c.objects[i].vertex;
                    let b = part.edge_summand[&(j, src_vertex)];
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
                // Edge label closing up into a loop at the target vertex.
                let tgt_vertex = c.objects[j].vertex;
                if let Some(&a) = part.edge_summand.get(&(i, tgt_vertex)) {
                    let b = part.loop_summand[j].expect("target of closing edge has color r");
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
            }
            MorKind::Loop => {
                if let Some(a) = part.id_summand[i] {
                    let b = part.loop_summand[j].expect("loop endpoints share a color");
                    out.add_entry(a, b, MorKind::Identity, f.scale.clone());
                }
            }
        }
    }
}

/// The elementary Rouquier action `F_r`: total complex of
/// `B_r (x) C -> C(1)` with `B_r (x) C` in the degrees of `C`.
pub fn tensor_f(graph: &CellGraph, r: u8, c: &ZComplex) -> Result<ZComplex> {
    let mut out = ZComplex::empty();
    out.minimal = false;
    let part = build_tensor_summands(graph, r, c, &mut out.objects)?;
    let shifted: Vec<usize> = c
        .objects
        .iter()
        .map(|o| {
            let idx = out.objects.len();
            out.objects.push(ZObject {
                vertex: o.vertex,
                shift: o.shift + 1,
                degree: o.degree + 1,
            });
            idx
        })
        .collect();
    // multiplication map components
    for i in 0..c.objects.len() {
        if let Some(a) = part.id_summand[i] {
            out.add_entry(a, shifted[i], MorKind::Identity, BigRational::one());
        }
        if let Some(a) = part.loop_summand[i] {
            out.add_entry(a, shifted[i], MorKind::Loop, BigRational::one());
        }
    }
    for (&(i, _), &a) in &part.edge_summand {
        out.add_entry(a, shifted[i], MorKind::Edge, BigRational::one());
    }
    tensor_functor_diff(c, &part, &mut out);
    // the differential of C(1), with the Koszul sign
    for (&(i, j), f) in &c.diff {
        out.add_entry(shifted[i], shifted[j], f.kind, -f.scale.clone());
    }
    if !out.d_squared_is_zero() {
        return Err(Error::ZigzagTruncationViolated(
            "d^2 != 0 after tensoring with F".into(),
        ));
    }
    Ok(out)
}

/// The inverse elementary action `E_r`: total complex of
/// `C(-1) -> B_r (x) C` with `B_r (x) C` in the degrees of `C`.
pub fn tensor_e(graph: &CellGraph, r: u8, c: &ZComplex) -> Result<ZComplex> {
    let mut out = ZComplex::empty();
    out.minimal = false;
    let part = build_tensor_summands(graph, r, c, &mut out.objects)?;
    let lowered: Vec<usize> = c
        .objects
        .iter()
        .map(|o| {
            let idx = out.objects.len();
            out.objects.push(ZObject {
                vertex: o.vertex,
                shift: o.shift - 1,
                degree: o.degree - 1,
            });
            idx
        })
        .collect();
    // comultiplication components, dual to the multiplication map
    for i in 0..c.objects.len() {
        if let Some(b) = part.id_summand[i] {
            out.add_entry(lowered[i], b, MorKind::Loop, BigRational::one());
        }
        if let Some(b) = part.loop_summand[i] {
            out.add_entry(lowered[i], b, MorKind::Identity, BigRational::one());
        }
    }
    for (&(i, _), &b) in &part.edge_summand {
        out.add_entry(lowered[i], b, MorKind::Edge, BigRational::one());
    }
    tensor_functor_diff(c, &part, &mut out);
    for (&(i, j), f) in &c.diff {
        out.add_entry(lowered[i], lowered[j], f.kind, -f.scale.clone());
    }
    if !out.d_squared_is_zero() {
        return Err(Error::ZigzagTruncationViolated(
            "d^2 != 0 after tensoring with E".into(),
        ));
    }
    Ok(out)
}

/// Removes contractible pairs by repeated Gaussian elimination until no
/// invertible identity component remains, correcting the surrounding
/// differential by `alpha - beta . delta^{-1} . gamma`.
pub fn minimize(c: &ZComplex) -> Result<ZComplex> {
    if !c.d_squared_is_zero() {
        return Err(Error::InconsistentDifferential(
            "before minimization".into(),
        ));
    }
    let mut objects = c.objects.clone();
    let mut diff = c.diff.clone();
    loop {
        let Some((&(bi, bj), _)) = diff.iter().find(|(_, m)| m.kind == MorKind::Identity) else {
            break;
        };
        let delta = diff.get(&(bi, bj)).unwrap().scale.clone();
        let ins: Vec<(usize, ZMorphism)> = diff
            .iter()
            .filter(|(&(a, j), _)| j == bj && a != bi)
            .map(|(&(a, _), m)| (a, m.clone()))
            .collect();
        let outs: Vec<(usize, ZMorphism)> = diff
            .iter()
            .filter(|(&(i, b), _)| i == bi && b != bj)
            .map(|(&(_, b), m)| (b, m.clone()))
            .collect();
        let mut corrections = Vec::new();
        for (a, gamma) in &ins {
            for (b, beta) in &outs {
                let kind = compose_kinds(
                    gamma.kind,
                    objects[*a].vertex,
                    beta.kind,
                    objects[*b].vertex,
                );
                if let Some(kind) = kind {
                    let scale = -(&gamma.scale * &beta.scale) / &delta;
                    corrections.push((*a, *b, kind, scale));
                }
            }
        }
        for (a, b, kind, scale) in corrections {
            if scale.is_zero() {
                continue;
            }
            match diff.entry((a, b)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(ZMorphism::new(kind, scale));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    debug_assert_eq!(e.get().kind, kind);
                    e.get_mut().scale += scale;
                    if e.get().scale.is_zero() {
                        e.remove();
                    }
                }
            }
        }
        // drop the pair and compact indices
        let mut remap = vec![usize::MAX; objects.len()];
        let mut kept = Vec::with_capacity(objects.len() - 2);
        for (idx, o) in objects.iter().enumerate() {
            if idx != bi && idx != bj {
                remap[idx] = kept.len();
                kept.push(*o);
            }
        }
        objects = kept;
        diff = diff
            .into_iter()
            .filter(|&((i, j), _)| i != bi && i != bj && j != bi && j != bj)
            .map(|((i, j), m)| ((remap[i], remap[j]), m))
            .collect();
    }
    let out = ZComplex {
        objects,
        diff,
        minimal: true,
    };
    if !out.d_squared_is_zero() {
        return Err(Error::InconsistentDifferential("after minimization".into()));
    }
    Ok(out)
}

/// Isomorphism-invariant descriptor of a minimal complex.
pub fn fingerprint(c: &ZComplex) -> Result<Fingerprint> {
    if !c.minimal {
        return Err(Error::NotMinimal);
    }
    let triple = |o: &ZObject| (o.vertex, o.shift, o.degree);
    let mut objects: Vec<_> = c.objects.iter().map(triple).collect();
    objects.sort_unstable();
    let mut entries: Vec<_> = c
        .diff
        .iter()
        .map(|(&(i, j), m)| (triple(&c.objects[i]), triple(&c.objects[j]), m.kind))
        .collect();
    entries.sort_unstable();
    entries.dedup();
    Ok(Fingerprint { objects, entries })
}

/// Applies `F` over a positive word, rightmost letter first, minimizing
/// after each step.
pub fn act_word(graph: &CellGraph, letters: &[u8], start: &ZComplex) -> Result<ZComplex> {
    let mut c = minimize(start)?;
    for &s in letters.iter().rev() {
        c = minimize(&tensor_f(graph, s, &c)?)?;
    }
    Ok(c)
}

/// Applies `F` for positive letters and `E` for inverse letters, rightmost
/// first, minimizing after each step.
pub fn act_signed_word(
    graph: &CellGraph,
    letters: &[(u8, bool)],
    start: &ZComplex,
) -> Result<ZComplex> {
    let mut c = minimize(start)?;
    for &(s, positive) in letters.iter().rev() {
        let next = if positive {
            tensor_f(graph, s, &c)?
        } else {
            tensor_e(graph, s, &c)?
        };
        c = minimize(&next)?;
    }
    Ok(c)
}

/// A dihedral wave computation: the minimal complex of
/// `F_{alternating word of length l} B_{[k]}` in `I2(m)`.
pub struct DihedralWave {
    pub system: CoxeterSystem,
    pub graph: CellGraph,
    pub complex: ZComplex,
    /// The braid word applied, leftmost letter first.
    pub word: Vec<u8>,
    pub k: usize,
    pub m: usize,
}

/// The alternating vertex `[k]` of the dihedral cell: the length-`k`
/// alternating word ending in the base generator.
pub fn dihedral_vertex(sys: &CoxeterSystem, k: usize) -> Result<Elt> {
    let word: Vec<u8> = (0..k)
        .map(|i| if (k - 1 - i) % 2 == 0 { 0 } else { 1 })
        .collect();
    sys.canonicalize(&word)
}

/// Computes the wave `F_{\hat l} B_{[k]}` in `I2(m)`, where the applied
/// alternating word starts (on the right) with the color opposite to the
/// color of `[k]`, so the first step expands.
pub fn dihedral_wave(m: usize, k: usize, l: usize) -> Result<DihedralWave> {
    if m < 3 {
        return Err(Error::IndexOutOfRange(format!("m = {m} must be >= 3")));
    }
    if !(1..m).contains(&k) {
        return Err(Error::IndexOutOfRange(format!(
            "k = {k} must satisfy 1 <= k <= m-1"
        )));
    }
    if l >= m {
        return Err(Error::IndexOutOfRange(format!(
            "l = {l} must satisfy 0 <= l <= m-1"
        )));
    }
    let system = CoxeterSystem::new(CoxeterMatrix::named(&format!("I2:{m}"))?);
    let graph = CellGraph::build(&system, 0, m - 1)?;
    let start_vertex = dihedral_vertex(&system, k)?;
    let color = if k % 2 == 1 { 0u8 } else { 1u8 };
    let opposite = 1 - color;
    // alternating word of length l whose rightmost letter is `opposite`
    let word: Vec<u8> = (0..l)
        .map(|i| {
            if (l - 1 - i) % 2 == 0 {
                opposite
            } else {
                color
            }
        })
        .collect();
    let complex = act_word(&graph, &word, &ZComplex::unit(&graph, start_vertex)?)?;
    Ok(DihedralWave {
        system,
        graph,
        complex,
        word,
        k,
        m,
    })
}

/// Structured-text dump of a complex: objects as `(vertex-word, shift,
/// degree)`, entries as `src -> tgt : kind * p/q`.
pub fn dump(sys: &CoxeterSystem, graph: &CellGraph, c: &ZComplex) -> String {
    let mut out = String::new();
    let mut order: Vec<usize> = (0..c.objects.len()).collect();
    order.sort_by_key(|&i| (c.objects[i].degree, c.objects[i].shift, c.objects[i].vertex));
    for &i in &order {
        let o = c.objects[i];
        out.push_str(&format!(
            "object ([{}], {}, {})\n",
            sys.display(graph.vertex(o.vertex)),
            o.shift,
            o.degree
        ));
    }
    let mut entries: Vec<_> = c.entries().collect();
    entries.sort_by_key(|&(i, j, _)| {
        (
            c.objects[i].degree,
            c.objects[i].shift,
            c.objects[i].vertex,
            c.objects[j].shift,
            c.objects[j].vertex,
        )
    });
    for (i, j, m) in entries {
        let (a, b) = (c.objects[i], c.objects[j]);
        let kind = match m.kind {
            MorKind::Identity => "id",
            MorKind::Edge => "edge",
            MorKind::Loop => "loop",
        };
        out.push_str(&format!(
            "entry ([{}], {}, {}) -> ([{}], {}, {}) : {} * {}\n",
            sys.display(graph.vertex(a.vertex)),
            a.shift,
            a.degree,
            sys.display(graph.vertex(b.vertex)),
            b.shift,
            b.degree,
            kind,
            m.scale
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SplitMix64;

    fn setup(name: &str) -> (CoxeterSystem, CellGraph) {
        let sys = CoxeterSystem::new(CoxeterMatrix::named(name).unwrap());
        let graph = CellGraph::build(&sys, 0, 16).unwrap();
        (sys, graph)
    }

    fn sorted_triples(c: &ZComplex) -> Vec<(usize, i32, i32)> {
        let mut v: Vec<_> = c
            .objects()
            .iter()
            .map(|o| (o.vertex, o.shift, o.degree))
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn unit_complex() {
        let (sys, graph) = setup("A2");
        let s = sys.generator(0);
        let u = ZComplex::unit(&graph, s).unwrap();
        assert_eq!(sorted_triples(&u), vec![(0, 0, 0)]);
        assert!(u.is_minimal_flagged());
        // a non-cell element is rejected
        let sts = sys.canonicalize(&[0, 1, 0]).unwrap();
        assert!(matches!(
            ZComplex::unit(&graph, sts),
            Err(Error::VertexOutsideGraph(_))
        ));
    }

    #[test]
    fn elementary_f_cases() {
        let (sys, graph) = setup("A3");
        // descent case: F_s B_s -> B_s(-1) in degree 0
        let s = sys.generator(0);
        let us = ZComplex::unit(&graph, s).unwrap();
        let raw = tensor_f(&graph, 0, &us).unwrap();
        assert_eq!(raw.objects().len(), 3);
        let min = minimize(&raw).unwrap();
        assert_eq!(sorted_triples(&min), vec![(0, -1, 0)]);

        // no r-colored neighbor: F_u B_s -> B_s(1) in degree 1
        let min = minimize(&tensor_f(&graph, 2, &us).unwrap()).unwrap();
        assert_eq!(sorted_triples(&min), vec![(0, 1, 1)]);

        // neighbor case: F_t B_s -> (B_ts -> B_s(1))
        let min = minimize(&tensor_f(&graph, 1, &us).unwrap()).unwrap();
        assert_eq!(sorted_triples(&min), vec![(0, 1, 1), (1, 0, 0)]);
        let entries: Vec<_> = min.entries().collect();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].2.kind, MorKind::Edge);
    }

    #[test]
    fn elementary_e_cases() {
        let (sys, graph) = setup("A3");
        let s = sys.generator(0);
        let us = ZComplex::unit(&graph, s).unwrap();
        // descent case: E_s B_s -> B_s(1) in degree 0
        let min = minimize(&tensor_e(&graph, 0, &us).unwrap()).unwrap();
        assert_eq!(sorted_triples(&min), vec![(0, 1, 0)]);
        // no edge: E_u B_s -> B_s(-1) in degree -1
        let min = minimize(&tensor_e(&graph, 2, &us).unwrap()).unwrap();
        assert_eq!(sorted_triples(&min), vec![(0, -1, -1)]);
    }

    #[test]
    fn f_and_e_are_inverse() {
        let (sys, graph) = setup("B3");
        for &w in graph.vertices() {
            let unit = ZComplex::unit(&graph, w).unwrap();
            let ufp = fingerprint(&unit).unwrap();
            for r in 0..sys.rank() as u8 {
                let fe = minimize(
                    &tensor_e(
                        &graph,
                        r,
                        &minimize(&tensor_f(&graph, r, &unit).unwrap()).unwrap(),
                    )
                    .unwrap(),
                )
                .unwrap();
                assert_eq!(fingerprint(&fe).unwrap(), ufp);
                let ef = minimize(
                    &tensor_f(
                        &graph,
                        r,
                        &minimize(&tensor_e(&graph, r, &unit).unwrap()).unwrap(),
                    )
                    .unwrap(),
                )
                .unwrap();
                assert_eq!(fingerprint(&ef).unwrap(), ufp);
            }
        }
    }

    #[test]
    fn minimize_basics() {
        let (sys, graph) = setup("A2");
        // a contractible two-object complex collapses to nothing
        let v = graph.vertex_index(sys.generator(0)).unwrap();
        let mut c = ZComplex::empty();
        c.minimal = false;
        c.objects.push(ZObject {
            vertex: v,
            shift: 0,
            degree: 0,
        });
        c.objects.push(ZObject {
            vertex: v,
            shift: 0,
            degree: 1,
        });
        c.add_entry(0, 1, MorKind::Identity, BigRational::one());
        let min = minimize(&c).unwrap();
        assert!(min.is_empty());
        // idempotent
        let again = minimize(&min).unwrap();
        assert_eq!(min, again);
    }

    #[test]
    fn braid_relations_at_fingerprint_level() {
        for name in ["A3", "B3", "I2:5", "I2:8"] {
            let (sys, graph) = setup(name);
            for &w in graph.vertices() {
                let unit = ZComplex::unit(&graph, w).unwrap();
                for a in 0..sys.rank() as u8 {
                    for b in (a + 1)..sys.rank() as u8 {
                        let m = match sys.matrix().order(a, b) {
                            crate::coxeter::Order::Finite(m) => m as usize,
                            crate::coxeter::Order::Infinite => continue,
                        };
                        let word_ab: Vec<u8> =
                            (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect();
                        let word_ba: Vec<u8> =
                            (0..m).map(|i| if i % 2 == 0 { b } else { a }).collect();
                        let lhs = act_word(&graph, &word_ab, &unit).unwrap();
                        let rhs = act_word(&graph, &word_ba, &unit).unwrap();
                        assert_eq!(
                            fingerprint(&lhs).unwrap(),
                            fingerprint(&rhs).unwrap(),
                            "braid relation failed in {name} at vertex {}",
                            sys.display(w)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn d_squared_and_t_exactness_on_random_words() {
        for name in ["A3", "B3", "H3"] {
            let (sys, graph) = setup(name);
            let mut rng = SplitMix64::new(17);
            for _ in 0..25 {
                let len = 1 + rng.below(8);
                let word: Vec<u8> = (0..len).map(|_| rng.below(sys.rank()) as u8).collect();
                for &w in graph.vertices() {
                    let mut c = ZComplex::unit(&graph, w).unwrap();
                    for &s in word.iter().rev() {
                        let prev_max = c
                            .objects()
                            .iter()
                            .map(|o| o.degree - o.shift)
                            .max()
                            .unwrap();
                        let raw = tensor_f(&graph, s, &c).unwrap();
                        assert!(raw.d_squared_is_zero());
                        c = minimize(&raw).unwrap();
                        c.validate(&graph).unwrap();
                        let min_pd = c
                            .objects()
                            .iter()
                            .map(|o| o.degree - o.shift)
                            .min()
                            .unwrap();
                        let max_pd = c
                            .objects()
                            .iter()
                            .map(|o| o.degree - o.shift)
                            .max()
                            .unwrap();
                        // left t-exactness and the one-step shift bound
                        assert!(min_pd >= 0);
                        assert!(max_pd <= prev_max + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn wave_lemma_single_object() {
        // F over the full alternating word of length m-1 lands on the
        // reflected vertex, shifted by (1)[-1].
        for m in 3..=8 {
            for k in 1..m {
                let wave = dihedral_wave(m, k, m - 1).unwrap();
                let reflected = dihedral_vertex(&wave.system, m - k).unwrap();
                let idx = wave.graph.vertex_index(reflected).unwrap();
                assert_eq!(sorted_triples(&wave.complex), vec![(idx, 1, 1)]);
            }
        }
    }

    /// (sources, sinks, arrows source->target), vertices by their index k.
    type Frame = (Vec<usize>, Vec<usize>, Vec<(usize, usize)>);

    #[test]
    fn wave_frames_match_m8_k3() {
        let frames: Vec<Frame> = vec![
            (vec![3], vec![], vec![]),
            (vec![2, 4], vec![3], vec![(2, 3), (4, 3)]),
            (
                vec![1, 3, 5],
                vec![2, 4],
                vec![(1, 2), (3, 2), (3, 4), (5, 4)],
            ),
            (
                vec![2, 4, 6],
                vec![1, 3, 5],
                vec![(2, 1), (2, 3), (4, 3), (4, 5), (6, 5)],
            ),
            (
                vec![3, 5, 7],
                vec![2, 4, 6],
                vec![(3, 2), (3, 4), (5, 4), (5, 6), (7, 6)],
            ),
            (
                vec![4, 6],
                vec![3, 5, 7],
                vec![(4, 3), (4, 5), (6, 5), (6, 7)],
            ),
            (vec![5], vec![4, 6], vec![(5, 4), (5, 6)]),
            (vec![], vec![5], vec![]),
        ];
        check_wave_frames(8, 3, &frames);
    }

    #[test]
    fn wave_frames_match_m8_k4() {
        let frames: Vec<Frame> = vec![
            (vec![4], vec![], vec![]),
            (vec![3, 5], vec![4], vec![(3, 4), (5, 4)]),
            (
                vec![2, 4, 6],
                vec![3, 5],
                vec![(2, 3), (4, 3), (4, 5), (6, 5)],
            ),
            (
                vec![1, 3, 5, 7],
                vec![2, 4, 6],
                vec![(1, 2), (3, 2), (3, 4), (5, 4), (5, 6), (7, 6)],
            ),
            (
                vec![2, 4, 6],
                vec![1, 3, 5, 7],
                vec![(2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 7)],
            ),
            (
                vec![3, 5],
                vec![2, 4, 6],
                vec![(3, 2), (3, 4), (5, 4), (5, 6)],
            ),
            (vec![4], vec![3, 5], vec![(4, 3), (4, 5)]),
            (vec![], vec![4], vec![]),
        ];
        check_wave_frames(8, 4, &frames);
    }

    fn check_wave_frames(m: usize, k: usize, frames: &[Frame]) {
        for (l, (sources, sinks, arrows)) in frames.iter().enumerate() {
            let wave = dihedral_wave(m, k, l).unwrap();
            let vidx = |kk: usize| {
                let w = dihedral_vertex(&wave.system, kk).unwrap();
                wave.graph.vertex_index(w).unwrap()
            };
            let mut expected: Vec<(usize, i32, i32)> = Vec::new();
            // at l = 0 the lone vertex sits at (0, 0); at l = m-1 at (1, 1)
            if l == 0 {
                expected.push((vidx(*sources.first().unwrap()), 0, 0));
            } else {
                for &kk in sources {
                    expected.push((vidx(kk), 0, 0));
                }
                for &kk in sinks {
                    expected.push((vidx(kk), 1, 1));
                }
            }
            expected.sort_unstable();
            assert_eq!(
                sorted_triples(&wave.complex),
                expected,
                "objects differ at m={m} k={k} l={l}"
            );
            let mut got_arrows: Vec<(usize, usize)> = wave
                .complex
                .entries()
                .map(|(i, j, mor)| {
                    assert_eq!(mor.kind, MorKind::Edge);
                    (
                        wave.complex.objects()[i].vertex,
                        wave.complex.objects()[j].vertex,
                    )
                })
                .collect();
            got_arrows.sort_unstable();
            let mut want_arrows: Vec<(usize, usize)> =
                arrows.iter().map(|&(a, b)| (vidx(a), vidx(b))).collect();
            want_arrows.sort_unstable();
            assert_eq!(
                got_arrows, want_arrows,
                "arrows differ at m={m} k={k} l={l}"
            );
        }
    }

    #[test]
    fn fingerprint_stable_under_relabeling() {
        let (sys, graph) = setup("A3");
        let unit = ZComplex::unit(&graph, sys.generator(0)).unwrap();
        let c = act_word(&graph, &[1, 0], &unit).unwrap();
        let fp = fingerprint(&c).unwrap();
        // reverse the object order and remap the differential keys
        let n = c.objects().len();
        let objects: Vec<ZObject> = c.objects().iter().rev().copied().collect();
        let diff = c
            .entries()
            .map(|(i, j, m)| ((n - 1 - i, n - 1 - j), m.clone()))
            .collect();
        let relabeled = ZComplex::from_parts(objects, diff, true);
        assert_eq!(fingerprint(&relabeled).unwrap(), fp);
    }

    #[test]
    fn fingerprint_requires_minimal() {
        let (sys, graph) = setup("A2");
        let raw = tensor_f(
            &graph,
            0,
            &ZComplex::unit(&graph, sys.generator(0)).unwrap(),
        )
        .unwrap();
        assert!(matches!(fingerprint(&raw), Err(Error::NotMinimal)));
    }

    #[test]
    fn affine_wavefront_guard() {
        let sys = CoxeterSystem::new(CoxeterMatrix::named("~A2").unwrap());
        let graph = CellGraph::build(&sys, 0, 3).unwrap();
        assert!(!graph.radius_complete());
        // drive the wave into the boundary
        let unit = ZComplex::unit(&graph, sys.generator(0)).unwrap();
        let mut word = Vec::new();
        let mut err = None;
        for len in 1..=6 {
            word.clear();
            for i in 0..len {
                word.push((i % 3) as u8);
            }
            match act_word(&graph, &word, &unit) {
                Ok(_) => {}
                Err(e) => {
                    err = Some(e);
                    break;
                }
            }
        }
        assert!(matches!(err, Some(Error::WavefrontOutOfRadius(_))));
    }
}
