//! The positive braid monoid over a Coxeter system: words, monoid equality,
//! and the right-greedy Garside normal form.
//!
//! A normal form is a sequence of nontrivial Coxeter elements, stored
//! leftmost factor first, such that every adjacent pair `(x, y)` satisfies
//! the descent condition `D_R(x) ⊆ D_L(y)`. Normality of the whole sequence
//! reduces to this pairwise check, and the factorization is unique, so the
//! local sweep below computes the normal form. An independent brute-force
//! oracle recomputes it by exhaustive braid-relation rewriting.

use std::collections::{HashSet, VecDeque};

use crate::coxeter::{CoxeterSystem, Elt};
use crate::error::{Error, Result};

/// A word in the positive braid monoid, as a sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PositiveWord {
    pub letters: Vec<u8>,
}

impl PositiveWord {
    pub fn new(letters: Vec<u8>) -> Self {
        PositiveWord { letters }
    }

    /// Parses whitespace-separated generator names. A `-` prefix (an inverse)
    /// is rejected here; signed words are handled by the recovery and
    /// decategorification layers.
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if let Some(stripped) = token.strip_prefix('-') {
                return Err(Error::Parse(format!(
                    "inverse generator `-{stripped}` is not allowed in a positive word"
                )));
            }
            letters.push(sys.matrix().gen_index(token)?);
        }
        Ok(PositiveWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn display(&self, sys: &CoxeterSystem) -> String {
        self.letters
            .iter()
            .map(|&s| sys.matrix().name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A word with signs, for elements of the full braid group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedWord {
    /// `(generator, positive?)` pairs.
    pub letters: Vec<(u8, bool)>,
}

impl SignedWord {
    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, positive) = match token.strip_prefix('-') {
                Some(rest) => (rest, false),
                None => (token, true),
            };
            letters.push((sys.matrix().gen_index(name)?, positive));
        }
        Ok(SignedWord { letters })
    }
}

/// Garside normal form `(w_m, ..., w_1)`, stored leftmost factor first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    pub factors: Vec<Elt>,
}

impl NormalForm {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Re-multiplies the factors into a positive word.
    pub fn as_word(&self, sys: &CoxeterSystem) -> PositiveWord {
        let mut letters = Vec::new();
        for &f in &self.factors {
            letters.extend(sys.word(f));
        }
        PositiveWord { letters }
    }

    /// Renders as `(w_m)(w_{m-1})...(w_1)`, `()` for the empty braid.
    pub fn render(&self, sys: &CoxeterSystem) -> String {
        if self.factors.is_empty() {
            return "()".to_string();
        }
        self.factors
            .iter()
            .map(|&f| format!("({})", sys.display(f)))
            .collect()
    }

    /// Both invariants of the type: factors nontrivial, adjacent pairs normal.
    pub fn is_valid(&self, sys: &CoxeterSystem) -> Result<bool> {
        for &f in &self.factors {
            if f.is_identity() {
                return Ok(false);
            }
        }
        for pair in self.factors.windows(2) {
            if !is_normal_pair(sys, pair[0], pair[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The descent test for an adjacent factor pair: `D_R(x) ⊆ D_L(y)`.
pub fn is_normal_pair(sys: &CoxeterSystem, x: Elt, y: Elt) -> Result<bool> {
    let right = sys.right_descents(x)?;
    let left = sys.left_descents(y)?;
    Ok(right & !left == 0)
}

/// Garside normal form of a positive word by the local pair sweep.
///
/// Starting from the letter-by-letter factor sequence, any adjacent pair
/// `(x, y)` violating the descent condition is repaired by moving a letter
/// `s ∈ D_R(x) \ D_L(y)` from the right end of `x` to the left of `y` (both
/// moves are length-additive), deleting emptied factors, until every pair is
/// normal.
pub fn normal_form(sys: &CoxeterSystem, word: &PositiveWord) -> Result<NormalForm> {
    normal_form_with_chooser(sys, word, |bad| bad[0])
}

/// As [`normal_form`] but with a caller-chosen order of pair repairs, used to
/// test that the sweep is confluent.
pub fn normal_form_with_chooser(
    sys: &CoxeterSystem,
    word: &PositiveWord,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Result<NormalForm> {
    let mut factors: Vec<Elt> = word.letters.iter().map(|&s| sys.generator(s)).collect();
    loop {
        factors.retain(|f| !f.is_identity());
        let mut bad = Vec::new();
        for i in 0..factors.len().saturating_sub(1) {
            if !is_normal_pair(sys, factors[i], factors[i + 1])? {
                bad.push(i);
            }
        }
        let Some(&i) = bad.first() else { break };
        let i = if bad.len() > 1 { choose(&bad) } else { i };
        let (mut x, mut y) = (factors[i], factors[i + 1]);
        loop {
            let movable = sys.right_descents(x)? & !sys.left_descents(y)?;
            if movable == 0 {
                break;
            }
            let s = movable.trailing_zeros() as u8;
            x = sys.right_mul(x, s)?;
            y = sys.left_mul(s, y)?;
        }
        factors[i] = x;
        factors[i + 1] = y;
    }
    Ok(NormalForm { factors })
}

/// Monoid equality of two positive words.
pub fn monoid_equal(sys: &CoxeterSystem, a: &PositiveWord, b: &PositiveWord) -> Result<bool> {
    Ok(normal_form(sys, a)? == normal_form(sys, b)?)
}

/// Cap on the rewriting closure explored by the oracle.
pub const ORACLE_CLOSURE_CAP: usize = 2_000_000;

/// All positive words equal to `word` in the braid monoid. Equality of
/// positive words is generated by the braid relations alone (the presentation
/// is homogeneous), so this is a plain rewriting closure.
pub fn positive_closure(sys: &CoxeterSystem, word: &[u8]) -> Result<Vec<Vec<u8>>> {
    let start: Box<[u8]> = word.into();
    let mut visited = HashSet::new();
    visited.insert(start.clone());
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for next in sys.braid_moves_of(&cur) {
            let boxed: Box<[u8]> = next.into();
            if visited.insert(boxed.clone()) {
                if visited.len() > ORACLE_CLOSURE_CAP {
                    return Err(Error::BudgetExceeded(
                        "positive braid rewriting closure too large".into(),
                    ));
                }
                queue.push_back(boxed);
            }
        }
    }
    let mut words: Vec<Vec<u8>> = visited.into_iter().map(|b| b.to_vec()).collect();
    words.sort();
    Ok(words)
}

/// Independent normal-form verifier by exhaustive rewriting.
///
/// The final factor is the longest Coxeter element arising as a reduced
/// suffix over all the words in the rewriting closure; the procedure then
/// recurses on the remaining prefix.
pub fn oracle_normal_form(sys: &CoxeterSystem, word: &PositiveWord) -> Result<NormalForm> {
    let mut rest = word.letters.clone();
    let mut factors_rightmost_first = Vec::new();
    while !rest.is_empty() {
        let closure = positive_closure(sys, &rest)?;
        // Reduced suffix lengths of a single word form an initial segment
        // (a suffix of a reduced word is reduced), so extend until the first
        // failure per word, then take the maximum over the closure.
        let suffix_len = |w: &[u8]| -> Result<usize> {
            let mut k = 0;
            while k < w.len() {
                let suffix = &w[w.len() - k - 1..];
                if sys.len(sys.canonicalize(suffix)?) != suffix.len() {
                    break;
                }
                k += 1;
            }
            Ok(k)
        };
        let mut best_len = 0usize;
        for w in &closure {
            best_len = best_len.max(suffix_len(w)?);
        }
        // At the maximum the divisor must be unique; shorter reduced
        // suffixes may well differ as elements.
        let mut best: Option<(Elt, Vec<u8>)> = None;
        for w in &closure {
            if suffix_len(w)? != best_len {
                continue;
            }
            let elt = sys.canonicalize(&w[w.len() - best_len..])?;
            match &best {
                None => best = Some((elt, w[..w.len() - best_len].to_vec())),
                Some((prev, _)) => {
                    if *prev != elt {
                        return Err(Error::Parse(format!(
                            "oracle found two distinct maximal reduced suffixes of length {best_len}"
                        )));
                    }
                }
            }
        }
        let (elt, prefix) = best.expect("nonempty word has a reduced suffix");
        factors_rightmost_first.push(elt);
        rest = prefix;
    }
    factors_rightmost_first.reverse();
    Ok(NormalForm {
        factors: factors_rightmost_first,
    })
}
