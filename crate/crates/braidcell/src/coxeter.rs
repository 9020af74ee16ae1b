//! Generic Coxeter systems: canonical element representation, length,
//! descent sets, Bruhat order and bounded enumeration.
//!
//! Elements are identified by the ShortLex-least reduced word among all
//! reduced words of the element. Equality of words is decided by Tits'
//! solution to the word problem: two reduced words represent the same
//! element iff they are connected by braid moves alone, and a word is
//! non-reduced iff some braid-move-equivalent word contains an adjacent
//! equal pair. This avoids any reflection representation, so types like
//! H3 and I2(m) need no algebraic-number arithmetic.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};

/// Order of a product of two distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }
}

/// A Coxeter matrix over named generators.
///
/// Symmetric with diagonal 1 and off-diagonal entries in {2, 3, ...} or
/// infinity. The Coxeter graph (edges where the order is at least 3) must be
/// connected.
#[derive(Debug, Clone)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    orders: Vec<Vec<Order>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from generator names and a list of `(i, j, order)`
    /// entries; omitted pairs default to order 2.
    pub fn new(names: Vec<String>, entries: &[(usize, usize, Order)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Parse("no generators".into()));
        }
        if n > 30 {
            return Err(Error::Parse("at most 30 generators supported".into()));
        }
        {
            let mut seen = HashSet::new();
            for name in &names {
                if !seen.insert(name.clone()) {
                    return Err(Error::Parse(format!("duplicate generator `{name}`")));
                }
            }
        }
        let mut orders = vec![vec![Order::Finite(2); n]; n];
        for (i, row) in orders.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for &(i, j, m) in entries {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange(format!("pair ({i}, {j})")));
            }
            if i == j {
                return Err(Error::Parse("diagonal orders are fixed to 1".into()));
            }
            if let Order::Finite(k) = m {
                if k < 2 {
                    return Err(Error::Parse(format!("order {k} below 2 for ({i}, {j})")));
                }
            }
            orders[i][j] = m;
            orders[j][i] = m;
        }
        let matrix = CoxeterMatrix { names, orders };
        if !matrix.is_connected() {
            return Err(Error::Parse(
                "Coxeter graph is not connected (system must be irreducible)".into(),
            ));
        }
        Ok(matrix)
    }

    /// Reads the structured-text system format:
    /// `{"generators": ["s","t","u"], "m": [["s","t",3],["t","u",4]]}`.
    /// Omitted pairs default to 2 and `"inf"` is accepted as an order.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let gens = value
            .get("generators")
            .and_then(|g| g.as_array())
            .ok_or_else(|| Error::Parse("missing `generators` array".into()))?;
        let names: Vec<String> = gens
            .iter()
            .map(|g| {
                g.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| Error::Parse("generator names must be strings".into()))
            })
            .collect::<Result<_>>()?;
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
        };
        let mut entries = Vec::new();
        if let Some(list) = value.get("m") {
            let list = list
                .as_array()
                .ok_or_else(|| Error::Parse("`m` must be an array".into()))?;
            for item in list {
                let triple = item
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| Error::Parse("each `m` entry must be [s, t, order]".into()))?;
                let i = index(
                    triple[0]
                        .as_str()
                        .ok_or_else(|| Error::Parse("bad generator in `m`".into()))?,
                )?;
                let j = index(
                    triple[1]
                        .as_str()
                        .ok_or_else(|| Error::Parse("bad generator in `m`".into()))?,
                )?;
                let m = match &triple[2] {
                    serde_json::Value::String(s) if s == "inf" => Order::Infinite,
                    serde_json::Value::Number(n) => {
                        let k = n.as_u64().ok_or_else(|| {
                            Error::Parse("orders must be positive integers".into())
                        })?;
                        Order::Finite(k as u32)
                    }
                    _ => return Err(Error::Parse("order must be an integer or \"inf\"".into())),
                };
                entries.push((i, j, m));
            }
        }
        CoxeterMatrix::new(names, &entries)
    }

    /// Built-in named systems: `A<n>`, `B<n>`, `H3`, `H4`, `I2:<m>`, `~A2`.
    ///
    /// For `B<n>` and `H<n>` the heavy edge is placed on the first pair of
    /// generators, so the first generator is always a valid cell base.
    pub fn named(name: &str) -> Result<Self> {
        let short = ["s", "t", "u"];
        let gen_names = |n: usize| -> Vec<String> {
            if n <= 3 {
                short[..n].iter().map(|s| s.to_string()).collect()
            } else {
                (1..=n).map(|i| format!("s{i}")).collect()
            }
        };
        let chain = |n: usize, first: u32| -> Result<Self> {
            let mut entries = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let m = if i == 0 { first } else { 3 };
                entries.push((i, i + 1, Order::Finite(m)));
            }
            CoxeterMatrix::new(gen_names(n), &entries)
        };
        if let Some(rest) = name.strip_prefix('A') {
            if let Ok(n) = rest.parse::<usize>() {
                if (1..=9).contains(&n) {
                    return chain(n, 3);
                }
            }
        }
        if let Some(rest) = name.strip_prefix('B') {
            if let Ok(n) = rest.parse::<usize>() {
                if (2..=9).contains(&n) {
                    return chain(n, 4);
                }
            }
        }
        match name {
            "H3" => return chain(3, 5),
            "H4" => return chain(4, 5),
            "~A2" => {
                return CoxeterMatrix::new(
                    gen_names(3),
                    &[
                        (0, 1, Order::Finite(3)),
                        (1, 2, Order::Finite(3)),
                        (0, 2, Order::Finite(3)),
                    ],
                )
            }
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("I2:") {
            if let Ok(m) = rest.parse::<u32>() {
                if m >= 3 {
                    return CoxeterMatrix::new(gen_names(2), &[(0, 1, Order::Finite(m))]);
                }
            }
        }
        Err(Error::Parse(format!("unknown system name `{name}`")))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, s: u8) -> &str {
        &self.names[s as usize]
    }

    pub fn gen_index(&self, name: &str) -> Result<u8> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    pub fn order(&self, s: u8, t: u8) -> Order {
        self.orders[s as usize][t as usize]
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank())
            .all(|i| (0..i).all(|j| matches!(self.orders[i][j], Order::Finite(m) if m <= 3)))
    }

    fn is_connected(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let linked = match self.orders[i][j] {
                    Order::Finite(m) => m >= 3,
                    Order::Infinite => true,
                };
                if linked && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Handle to a Coxeter group element interned in a [`CoxeterSystem`].
///
/// Handles are only meaningful together with the system that created them;
/// the identity is `Elt::ID` in every system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt(pub(crate) u32);

impl Elt {
    pub const ID: Elt = Elt(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

struct Tables {
    // canonical (ShortLex-least reduced) word per element
    words: Vec<Box<[u8]>>,
    by_word: HashMap<Box<[u8]>, Elt>,
    right: HashMap<(Elt, u8), Elt>,
    left: HashMap<(u8, Elt), Elt>,
    inverse: HashMap<Elt, Elt>,
    // bitsets over generators; None until first queried
    left_desc: Vec<Option<u32>>,
    right_desc: Vec<Option<u32>>,
    bruhat: HashMap<(Elt, Elt), bool>,
}

/// A Coxeter system with a growing, memoized element table.
///
/// The table is extended lazily as elements are touched; an element-count
/// budget guards against runaway exploration of infinite groups. All methods
/// take `&self`; the internal lock is never held across recursive calls, so
/// queries may be issued concurrently.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    budget: usize,
    inner: Mutex<Tables>,
}

/// Default cap on the number of distinct interned elements.
pub const DEFAULT_ELEMENT_BUDGET: usize = 200_000;

const CLOSURE_CAP: usize = 4_000_000;

enum Closure {
    /// The word is reduced; all braid-move-equivalent words, sorted.
    Reduced(Vec<Box<[u8]>>),
    /// The word is not reduced; an equivalent word had an adjacent equal
    /// pair, deleting it leaves this strictly shorter word.
    Deletion(Vec<u8>),
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        CoxeterSystem::with_budget(matrix, DEFAULT_ELEMENT_BUDGET)
    }

    pub fn with_budget(matrix: CoxeterMatrix, budget: usize) -> Self {
        let mut by_word = HashMap::new();
        by_word.insert(Vec::new().into_boxed_slice(), Elt::ID);
        CoxeterSystem {
            matrix,
            budget,
            inner: Mutex::new(Tables {
                words: vec![Vec::new().into_boxed_slice()],
                by_word,
                right: HashMap::new(),
                left: HashMap::new(),
                inverse: HashMap::new(),
                left_desc: vec![Some(0)],
                right_desc: vec![Some(0)],
                bruhat: HashMap::new(),
            }),
        }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The generator `s` as a group element.
    pub fn generator(&self, s: u8) -> Elt {
        assert!((s as usize) < self.rank(), "generator index out of range");
        self.intern(vec![s])
    }

    /// Canonical word of an element (empty for the identity).
    pub fn word(&self, w: Elt) -> Vec<u8> {
        self.inner.lock().unwrap().words[w.index()].to_vec()
    }

    pub fn len(&self, w: Elt) -> usize {
        self.inner.lock().unwrap().words[w.index()].len()
    }

    /// Renders an element as space-separated generator names, `e` for the identity.
    pub fn display(&self, w: Elt) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|&s| self.matrix.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Canonical form of an arbitrary generator word.
    pub fn canonicalize(&self, letters: &[u8]) -> Result<Elt> {
        for &s in letters {
            if s as usize >= self.rank() {
                return Err(Error::UnknownGenerator(format!("#{s}")));
            }
        }
        let mut cur = Elt::ID;
        for &s in letters {
            cur = self.right_mul(cur, s)?;
        }
        Ok(cur)
    }

    /// Right multiplication by a generator, `w * s`.
    pub fn right_mul(&self, w: Elt, s: u8) -> Result<Elt> {
        if let Some(&u) = self.inner.lock().unwrap().right.get(&(w, s)) {
            return Ok(u);
        }
        let mut word = self.word(w);
        word.push(s);
        let result = match self.braid_closure(&word)? {
            Closure::Deletion(shorter) => self.canonicalize(&shorter)?,
            Closure::Reduced(words) => {
                let elt = self.intern_checked(words[0].to_vec())?;
                self.store_descents_from_closure(elt, &words);
                elt
            }
        };
        let mut inner = self.inner.lock().unwrap();
        inner.right.insert((w, s), result);
        inner.right.insert((result, s), w);
        Ok(result)
    }

    /// Left multiplication by a generator, `s * w`.
    pub fn left_mul(&self, s: u8, w: Elt) -> Result<Elt> {
        if let Some(&u) = self.inner.lock().unwrap().left.get(&(s, w)) {
            return Ok(u);
        }
        let wi = self.inverse(w)?;
        let result = self.inverse(self.right_mul(wi, s)?)?;
        let mut inner = self.inner.lock().unwrap();
        inner.left.insert((s, w), result);
        inner.left.insert((s, result), w);
        Ok(result)
    }

    /// Product of two elements.
    pub fn mul(&self, a: Elt, b: Elt) -> Result<Elt> {
        let word = self.word(b);
        let mut cur = a;
        for &s in &word {
            cur = self.right_mul(cur, s)?;
        }
        Ok(cur)
    }

    pub fn inverse(&self, w: Elt) -> Result<Elt> {
        if let Some(&u) = self.inner.lock().unwrap().inverse.get(&w) {
            return Ok(u);
        }
        let mut word = self.word(w);
        word.reverse();
        // The reverse of a reduced word is reduced.
        let result = self.canonicalize(&word)?;
        let mut inner = self.inner.lock().unwrap();
        inner.inverse.insert(w, result);
        inner.inverse.insert(result, w);
        Ok(result)
    }

    /// Left descent set `{s : l(sw) < l(w)}` as a generator bitset.
    pub fn left_descents(&self, w: Elt) -> Result<u32> {
        if let Some(d) = self.inner.lock().unwrap().left_desc[w.index()] {
            return Ok(d);
        }
        self.compute_descents(w)?;
        Ok(self.inner.lock().unwrap().left_desc[w.index()].unwrap())
    }

    /// Right descent set `{s : l(ws) < l(w)}` as a generator bitset.
    pub fn right_descents(&self, w: Elt) -> Result<u32> {
        if let Some(d) = self.inner.lock().unwrap().right_desc[w.index()] {
            return Ok(d);
        }
        self.compute_descents(w)?;
        Ok(self.inner.lock().unwrap().right_desc[w.index()].unwrap())
    }

    pub fn has_left_descent(&self, w: Elt, s: u8) -> Result<bool> {
        Ok(self.left_descents(w)? >> s & 1 == 1)
    }

    pub fn has_right_descent(&self, w: Elt, s: u8) -> Result<bool> {
        Ok(self.right_descents(w)? >> s & 1 == 1)
    }

    /// Generators in a descent bitset, in declared order.
    pub fn bits_to_gens(&self, bits: u32) -> Vec<u8> {
        (0..self.rank() as u8)
            .filter(|s| bits >> s & 1 == 1)
            .collect()
    }

    /// Bruhat order test `y <= w`, by the standard descent recursion.
    pub fn bruhat_leq(&self, y: Elt, w: Elt) -> Result<bool> {
        if y == w {
            return Ok(true);
        }
        if self.len(y) >= self.len(w) {
            return Ok(false);
        }
        if let Some(&b) = self.inner.lock().unwrap().bruhat.get(&(y, w)) {
            return Ok(b);
        }
        // w != id here since l(y) < l(w).
        let s = self.bits_to_gens(self.left_descents(w)?)[0];
        let sw = self.left_mul(s, w)?;
        let sy = self.left_mul(s, y)?;
        let result = if self.len(sy) < self.len(y) {
            self.bruhat_leq(sy, sw)?
        } else {
            self.bruhat_leq(y, sw)?
        };
        self.inner.lock().unwrap().bruhat.insert((y, w), result);
        Ok(result)
    }

    /// All elements of length at most `max_len`, BFS by length.
    pub fn enumerate(&self, max_len: usize) -> Result<Vec<Elt>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut frontier = vec![Elt::ID];
        seen.insert(Elt::ID);
        out.push(Elt::ID);
        for _ in 0..max_len {
            let mut next = Vec::new();
            for &w in &frontier {
                for s in 0..self.rank() as u8 {
                    let u = self.right_mul(w, s)?;
                    if self.len(u) > self.len(w) && seen.insert(u) {
                        next.push(u);
                        out.push(u);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(out)
    }

    /// Number of reduced words of `w` (size of the braid-move closure).
    pub fn reduced_word_count(&self, w: Elt) -> Result<usize> {
        let word = self.word(w);
        match self.braid_closure(&word)? {
            Closure::Reduced(words) => Ok(words.len()),
            Closure::Deletion(_) => unreachable!("canonical words are reduced"),
        }
    }

    /// True if `w` has exactly one reduced word.
    pub fn has_unique_reduced_word(&self, w: Elt) -> Result<bool> {
        Ok(self.reduced_word_count(w)? == 1)
    }

    /// All reduced words of `w`, sorted.
    pub fn reduced_words(&self, w: Elt) -> Result<Vec<Vec<u8>>> {
        let word = self.word(w);
        match self.braid_closure(&word)? {
            Closure::Reduced(words) => Ok(words.iter().map(|b| b.to_vec()).collect()),
            Closure::Deletion(_) => unreachable!("canonical words are reduced"),
        }
    }

    fn compute_descents(&self, w: Elt) -> Result<()> {
        let word = self.word(w);
        let words = match self.braid_closure(&word)? {
            Closure::Reduced(words) => words,
            Closure::Deletion(_) => unreachable!("canonical words are reduced"),
        };
        self.store_descents_from_closure(w, &words);
        Ok(())
    }

    fn store_descents_from_closure(&self, w: Elt, words: &[Box<[u8]>]) {
        let mut left = 0u32;
        let mut right = 0u32;
        for word in words {
            if let Some(&first) = word.first() {
                left |= 1 << first;
            }
            if let Some(&last) = word.last() {
                right |= 1 << last;
            }
        }
        let mut inner = self.inner.lock().unwrap();
        inner.left_desc[w.index()] = Some(left);
        inner.right_desc[w.index()] = Some(right);
    }

    fn intern(&self, word: Vec<u8>) -> Elt {
        let mut inner = self.inner.lock().unwrap();
        let boxed = word.into_boxed_slice();
        if let Some(&e) = inner.by_word.get(&boxed) {
            return e;
        }
        let e = Elt(inner.words.len() as u32);
        inner.words.push(boxed.clone());
        inner.by_word.insert(boxed, e);
        inner.left_desc.push(None);
        inner.right_desc.push(None);
        e
    }

    fn intern_checked(&self, word: Vec<u8>) -> Result<Elt> {
        {
            let inner = self.inner.lock().unwrap();
            if inner.words.len() >= self.budget && !inner.by_word.contains_key(word.as_slice()) {
                return Err(Error::BudgetExceeded(format!(
                    "element table reached {} entries",
                    self.budget
                )));
            }
        }
        Ok(self.intern(word))
    }

    /// Braid-move closure of a word. Detects non-reducedness per Tits:
    /// a word is reduced iff no equivalent word has an adjacent equal pair.
    fn braid_closure(&self, word: &[u8]) -> Result<Closure> {
        if let Some(i) = adjacent_pair(word) {
            let mut shorter = word.to_vec();
            shorter.drain(i..i + 2);
            return Ok(Closure::Deletion(shorter));
        }
        let start: Box<[u8]> = word.into();
        let mut visited = HashSet::new();
        visited.insert(start.clone());
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for next in self.braid_moves_of(&cur) {
                if let Some(i) = adjacent_pair(&next) {
                    let mut shorter = next;
                    shorter.drain(i..i + 2);
                    return Ok(Closure::Deletion(shorter));
                }
                let boxed: Box<[u8]> = next.into();
                if visited.insert(boxed.clone()) {
                    if visited.len() > CLOSURE_CAP {
                        return Err(Error::BudgetExceeded("braid-move closure too large".into()));
                    }
                    queue.push_back(boxed);
                }
            }
        }
        let mut words: Vec<Box<[u8]>> = visited.into_iter().collect();
        words.sort();
        Ok(Closure::Reduced(words))
    }

    /// All words obtained from `word` by a single braid move.
    pub(crate) fn braid_moves_of(&self, word: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for i in 0..word.len().saturating_sub(1) {
            let a = word[i];
            let b = word[i + 1];
            if a == b {
                continue;
            }
            let m = match self.matrix.order(a, b) {
                Order::Finite(m) => m as usize,
                Order::Infinite => continue,
            };
            if i + m > word.len() {
                continue;
            }
            // check word[i..i+m] == a b a b ...
            let alternating = (0..m).all(|k| word[i + k] == if k % 2 == 0 { a } else { b });
            if alternating {
                let mut next = word.to_vec();
                for (k, slot) in next[i..i + m].iter_mut().enumerate() {
                    *slot = if k % 2 == 0 { b } else { a };
                }
                out.push(next);
            }
        }
        out
    }
}

fn adjacent_pair(word: &[u8]) -> Option<usize> {
    (0..word.len().saturating_sub(1)).find(|&i| word[i] == word[i + 1])
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.inner.lock().unwrap();
        write!(
            f,
            "CoxeterSystem(rank {}, {} elements interned)",
            self.rank(),
            inner.words.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::named("A2").unwrap())
    }

    #[test]
    fn canonicalize_examples() {
        let sys = a2();
        assert_eq!(sys.canonicalize(&[0, 0]).unwrap(), Elt::ID);
        let tst = sys.canonicalize(&[1, 0, 1]).unwrap();
        assert_eq!(sys.word(tst), vec![0, 1, 0]);
        let tsts = sys.canonicalize(&[1, 0, 1, 0]).unwrap();
        assert_eq!(sys.word(tsts), vec![0, 1]);
        assert_eq!(sys.len(tsts), 2);
    }

    #[test]
    fn mul_examples() {
        let sys = a2();
        let st = sys.canonicalize(&[0, 1]).unwrap();
        let ts = sys.canonicalize(&[1, 0]).unwrap();
        assert_eq!(sys.mul(st, Elt::ID).unwrap(), st);
        let s = sys.generator(0);
        assert_eq!(sys.mul(s, s).unwrap(), Elt::ID);
        assert_eq!(sys.mul(st, ts).unwrap(), Elt::ID);
    }

    #[test]
    fn descent_examples() {
        let sys = a2();
        assert_eq!(sys.left_descents(Elt::ID).unwrap(), 0);
        let sts = sys.canonicalize(&[0, 1, 0]).unwrap();
        assert_eq!(sys.left_descents(sts).unwrap(), 0b11);
        assert_eq!(sys.right_descents(sts).unwrap(), 0b11);
        let st = sys.canonicalize(&[0, 1]).unwrap();
        assert_eq!(sys.right_descents(st).unwrap(), 0b10);
        assert_eq!(sys.left_descents(st).unwrap(), 0b01);
    }

    #[test]
    fn bruhat_examples() {
        let sys = a2();
        let s = sys.generator(0);
        let sts = sys.canonicalize(&[0, 1, 0]).unwrap();
        let st = sys.canonicalize(&[0, 1]).unwrap();
        let ts = sys.canonicalize(&[1, 0]).unwrap();
        for w in sys.enumerate(3).unwrap() {
            assert!(sys.bruhat_leq(Elt::ID, w).unwrap());
        }
        assert!(sys.bruhat_leq(s, sts).unwrap());
        assert!(!sys.bruhat_leq(st, ts).unwrap());
        assert!(!sys.bruhat_leq(ts, st).unwrap());
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(a2().enumerate(3).unwrap().len(), 6);
        assert_eq!(a2().enumerate(0).unwrap().len(), 1);
        let i25 = CoxeterSystem::new(CoxeterMatrix::named("I2:5").unwrap());
        assert_eq!(i25.enumerate(5).unwrap().len(), 10);
        let a3 = CoxeterSystem::new(CoxeterMatrix::named("A3").unwrap());
        assert_eq!(a3.enumerate(6).unwrap().len(), 24);
        let b3 = CoxeterSystem::new(CoxeterMatrix::named("B3").unwrap());
        assert_eq!(b3.enumerate(9).unwrap().len(), 48);
        let h3 = CoxeterSystem::new(CoxeterMatrix::named("H3").unwrap());
        assert_eq!(h3.enumerate(15).unwrap().len(), 120);
        let a4 = CoxeterSystem::new(CoxeterMatrix::named("A4").unwrap());
        assert_eq!(a4.enumerate(10).unwrap().len(), 120);
    }

    #[test]
    fn length_changes_by_one() {
        for name in ["A3", "B3", "I2:7"] {
            let sys = CoxeterSystem::new(CoxeterMatrix::named(name).unwrap());
            for w in sys.enumerate(5).unwrap() {
                for s in 0..sys.rank() as u8 {
                    let ws = sys.right_mul(w, s).unwrap();
                    let diff = sys.len(ws) as i64 - sys.len(w) as i64;
                    assert!(diff == 1 || diff == -1, "l(ws) must differ by 1");
                }
            }
        }
    }

    #[test]
    fn word_times_inverse_word_is_identity() {
        let sys = CoxeterSystem::new(CoxeterMatrix::named("B3").unwrap());
        for w in sys.enumerate(6).unwrap() {
            let mut word = sys.word(w);
            let mut rev = word.clone();
            rev.reverse();
            word.extend_from_slice(&rev);
            assert_eq!(sys.canonicalize(&word).unwrap(), Elt::ID);
        }
    }

    #[test]
    fn descents_match_bruteforce_length_comparison() {
        for name in ["A3", "B3", "I2:7"] {
            let sys = CoxeterSystem::new(CoxeterMatrix::named(name).unwrap());
            for w in sys.enumerate(6).unwrap() {
                let mut left = 0u32;
                let mut right = 0u32;
                for s in 0..sys.rank() as u8 {
                    if sys.len(sys.left_mul(s, w).unwrap()) < sys.len(w) {
                        left |= 1 << s;
                    }
                    if sys.len(sys.right_mul(w, s).unwrap()) < sys.len(w) {
                        right |= 1 << s;
                    }
                }
                assert_eq!(sys.left_descents(w).unwrap(), left);
                assert_eq!(sys.right_descents(w).unwrap(), right);
            }
        }
    }

    /// Subword characterization of the Bruhat order, as an independent oracle:
    /// y <= w iff some reduced word of y occurs as a subword of a fixed
    /// reduced word of w.
    fn bruhat_by_subword(sys: &CoxeterSystem, y: Elt, w: Elt) -> bool {
        let hay = sys.word(w);
        sys.reduced_words(y)
            .unwrap()
            .iter()
            .any(|word| is_subword(word, &hay))
    }

    fn is_subword(needle: &[u8], hay: &[u8]) -> bool {
        let mut i = 0;
        for &x in hay {
            if i < needle.len() && needle[i] == x {
                i += 1;
            }
        }
        i == needle.len()
    }

    #[test]
    fn bruhat_matches_subword_property_in_a3() {
        let sys = CoxeterSystem::new(CoxeterMatrix::named("A3").unwrap());
        let all = sys.enumerate(6).unwrap();
        for &y in &all {
            for &w in &all {
                assert_eq!(
                    sys.bruhat_leq(y, w).unwrap(),
                    bruhat_by_subword(&sys, y, w),
                    "bruhat mismatch for {} <= {}",
                    sys.display(y),
                    sys.display(w)
                );
            }
        }
    }

    #[test]
    fn infinite_order_admits_no_move() {
        let m =
            CoxeterMatrix::new(vec!["s".into(), "t".into()], &[(0, 1, Order::Infinite)]).unwrap();
        let sys = CoxeterSystem::new(m);
        let w = sys.canonicalize(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(sys.len(w), 5);
        assert!(sys.has_unique_reduced_word(w).unwrap());
    }

    #[test]
    fn budget_guards_infinite_enumeration() {
        let m = CoxeterMatrix::named("~A2").unwrap();
        let sys = CoxeterSystem::with_budget(m, 50);
        let err = sys.enumerate(50).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    #[test]
    fn json_system_roundtrip() {
        let m = CoxeterMatrix::from_json(
            r#"{"generators": ["s","t","u"], "m": [["s","t",3],["t","u",4]]}"#,
        )
        .unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.order(0, 1), Order::Finite(3));
        assert_eq!(m.order(1, 2), Order::Finite(4));
        assert_eq!(m.order(0, 2), Order::Finite(2));
        let inf = CoxeterMatrix::from_json(r#"{"generators": ["s","t"], "m": [["s","t","inf"]]}"#)
            .unwrap();
        assert_eq!(inf.order(0, 1), Order::Infinite);
    }
}
