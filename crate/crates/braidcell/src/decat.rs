//! Grothendieck-level cross-checks: classes of complexes in the cell module,
//! comparison with the Hecke action, and the Burau matrices of type A.
//!
//! The class of a complex is the alternating sum over objects of
//! `(-1)^degree v^shift` times the KL basis vector of the vertex. This is a
//! homotopy invariant, so it ignores minimization, and it intertwines the
//! elementary Rouquier actions with multiplication by `H_r` and `H_r^{-1}`
//! on the cell module.

use num_bigint::BigInt;
use num_traits::One;

use crate::braid::SignedWord;
use crate::cellgraph::CellGraph;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Elt};
use crate::error::{Error, Result};
use crate::hecke::{cell_action_std, CellVector};
use crate::ring::LaurentPoly;
use crate::zigzag::{act_signed_word, ZComplex};

/// The class of a complex in the cell module, in KL coordinates.
pub fn decat_class(graph: &CellGraph, c: &ZComplex) -> CellVector {
    let mut out = CellVector::zero();
    for o in c.objects() {
        let sign = if o.degree.rem_euclid(2) == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        out.add_term(
            graph.vertex(o.vertex),
            &LaurentPoly::monomial(sign, o.shift),
        );
    }
    out
}

/// The Hecke-side action of a signed braid word on a cell vector, rightmost
/// letter first.
pub fn hecke_action(
    graph: &CellGraph,
    letters: &[(u8, bool)],
    start: &CellVector,
) -> Result<CellVector> {
    let mut vec = start.clone();
    for &(s, positive) in letters.iter().rev() {
        vec = cell_action_std(graph, s, positive, &vec)?;
    }
    Ok(vec)
}

/// Checks that the class of the categorical action of a signed word equals
/// the Hecke cell action, on every KL basis vector of the cell.
pub fn verify_decat(graph: &CellGraph, word: &SignedWord) -> Result<bool> {
    for &w in graph.vertices() {
        let unit = ZComplex::unit(graph, w)?;
        let acted = act_signed_word(graph, &word.letters, &unit)?;
        let categorical = decat_class(graph, &acted);
        let algebraic = hecke_action(graph, &word.letters, &CellVector::unit(w))?;
        if categorical != algebraic {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Burau data for type `A_{n-1}`: the matrix of the operator induced by the
/// shifted elementary complex of the `i`-th generator on the cell module, in
/// the raw KL basis and rebased into the scaled basis
/// `u_j = (-1)^{j-1} v^j [B_[j]]`.
pub struct BurauData {
    pub system: CoxeterSystem,
    pub graph: CellGraph,
    /// Matrix in the KL basis `[B_[1]], ..., [B_[n-1]]`.
    pub raw: Vec<Vec<LaurentPoly>>,
    /// Matrix in the scaled basis; substituting `t = v^-2` gives the
    /// transpose of the standard reduced Burau matrix.
    pub scaled: Vec<Vec<LaurentPoly>>,
}

/// The operator of the braid generator on the decategorified cell module in
/// type `A_{n-1}`, normalized so that its matrix in the scaled basis has the
/// classical three-column block `(1 | -v^-2 | 1)` pattern with `v^-2` below
/// the diagonal.
pub fn burau_matrix(n: usize, i: usize) -> Result<BurauData> {
    if !(2..=10).contains(&n) {
        return Err(Error::IndexOutOfRange(format!("n = {n} must be in 2..=10")));
    }
    if !(1..n).contains(&i) {
        return Err(Error::IndexOutOfRange(format!(
            "i = {i} must satisfy 1 <= i <= n-1"
        )));
    }
    let system = CoxeterSystem::new(CoxeterMatrix::named(&format!("A{}", n - 1))?);
    let graph = CellGraph::build(&system, 0, n)?;
    let dim = n - 1;
    debug_assert_eq!(graph.vertex_count(), dim);
    // vertex [j] is the unique vertex colored by the j-th generator
    let vertex_by_color: Vec<Elt> = (0..dim)
        .map(|j| {
            let class = graph.color_class(j as u8);
            debug_assert_eq!(class.len(), 1);
            graph.vertex(class[0])
        })
        .collect();
    let neg_vinv = -&LaurentPoly::v_pow(-1);
    let mut raw = vec![vec![LaurentPoly::zero(); dim]; dim];
    for (col, &w) in vertex_by_color.iter().enumerate() {
        let image = cell_action_std(&graph, (i - 1) as u8, true, &CellVector::unit(w))?;
        let image = image.scaled(&neg_vinv);
        for (row, &u) in vertex_by_color.iter().enumerate() {
            raw[row][col] = image.coeff(u);
        }
    }
    let mut scaled = vec![vec![LaurentPoly::zero(); dim]; dim];
    for (row, scaled_row) in scaled.iter_mut().enumerate() {
        for (col, slot) in scaled_row.iter_mut().enumerate() {
            // u_j = (-1)^{j-1} v^j [B_[j]] with j = index + 1
            let sign = if (col as i32 - row as i32).rem_euclid(2) == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let rebase = LaurentPoly::monomial(sign, col as i32 - row as i32);
            *slot = &raw[row][col] * &rebase;
        }
    }
    Ok(BurauData {
        system,
        graph,
        raw,
        scaled,
    })
}

/// Product of square matrices over the Laurent ring.
pub fn mat_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for (i, out_row) in out.iter_mut().enumerate() {
        for (j, slot) in out_row.iter_mut().enumerate() {
            for k in 0..n {
                *slot += &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

/// Renders a matrix in the Laurent text format, one row per line.
pub fn render_matrix(m: &[Vec<LaurentPoly>]) -> String {
    let widths: Vec<usize> = (0..m.len())
        .map(|j| {
            m.iter()
                .map(|row| row[j].to_string().len())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    for row in m {
        out.push('[');
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&format!("{:>w$}", entry.to_string(), w = widths[j]));
        }
        out.push_str("]\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::PositiveWord;
    use crate::hecke::Hecke;
    use crate::sampling::{random_signed_word, SplitMix64};
    use crate::zigzag::{act_word, minimize, tensor_f};

    fn setup(name: &str) -> (CoxeterSystem, CellGraph) {
        let sys = CoxeterSystem::new(CoxeterMatrix::named(name).unwrap());
        let graph = CellGraph::build(&sys, 0, 16).unwrap();
        (sys, graph)
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn decat_class_examples() {
        let (sys, graph) = setup("A3");
        let s = sys.generator(0);
        let unit = ZComplex::unit(&graph, s).unwrap();
        assert_eq!(decat_class(&graph, &unit), CellVector::unit(s));
        // no-edge case of F: class is -v KL_w, matching the H action
        let acted = act_word(&graph, &[2], &unit).unwrap();
        assert_eq!(
            decat_class(&graph, &acted),
            CellVector::unit(s).scaled(&p("-v"))
        );
        // class is invariant under minimization
        let raw = tensor_f(&graph, 1, &unit).unwrap();
        assert_eq!(
            decat_class(&graph, &raw),
            decat_class(&graph, &minimize(&raw).unwrap())
        );
    }

    #[test]
    fn decat_matches_hecke_on_random_signed_words() {
        for name in ["A3", "B3", "I2:5"] {
            let (sys, graph) = setup(name);
            let mut rng = SplitMix64::new(59);
            for _ in 0..20 {
                let letters = random_signed_word(&mut rng, sys.rank(), 6);
                let word = SignedWord { letters };
                assert!(verify_decat(&graph, &word).unwrap(), "failed in {name}");
            }
            // empty word
            assert!(verify_decat(&graph, &SignedWord::default()).unwrap());
        }
    }

    #[test]
    fn single_inverse_letter_matches_inverse_action() {
        let (sys, graph) = setup("A2");
        let word = SignedWord {
            letters: vec![(1, false)],
        };
        assert!(verify_decat(&graph, &word).unwrap());
        let _ = sys;
    }

    #[test]
    fn burau_block_pattern_n5() {
        // rows i-1, i, i+1 of the displayed block: identity except row i,
        // which reads (v^-2, -v^-2, 1).
        for i in 1..=4usize {
            let data = burau_matrix(5, i).unwrap();
            let m = &data.scaled;
            for (r, row) in m.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let expect = if r == i - 1 {
                        if c == i - 1 {
                            p("-v^-2")
                        } else if c + 2 == i {
                            // column i-1 (0-based i-2)
                            p("v^-2")
                        } else if c == i {
                            p("1")
                        } else {
                            LaurentPoly::zero()
                        }
                    } else if r == c {
                        p("1")
                    } else {
                        LaurentPoly::zero()
                    };
                    assert_eq!(entry, &expect, "n=5 i={i} entry ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn burau_satisfies_braid_and_commutation_relations() {
        for n in 3..=6usize {
            let mats: Vec<_> = (1..n).map(|i| burau_matrix(n, i).unwrap().scaled).collect();
            for i in 0..mats.len() {
                for j in (i + 1)..mats.len() {
                    if j == i + 1 {
                        let lhs = mat_mul(&mat_mul(&mats[i], &mats[j]), &mats[i]);
                        let rhs = mat_mul(&mat_mul(&mats[j], &mats[i]), &mats[j]);
                        assert_eq!(lhs, rhs, "braid relation {i},{j} in n={n}");
                    } else {
                        let lhs = mat_mul(&mats[i], &mats[j]);
                        let rhs = mat_mul(&mats[j], &mats[i]);
                        assert_eq!(lhs, rhs, "commutation {i},{j} in n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn burau_is_transpose_of_reduced_burau_at_t_equals_v_minus_2() {
        // the standard reduced Burau block for sigma_i has row i-1 equal to
        // (1, t, 0), row i equal to (0, -t, 0) and row i+1 equal to (0, 1, 1)
        let t = p("v^-2");
        for n in 3..=5usize {
            for i in 1..n {
                let dim = n - 1;
                let mut standard = vec![vec![LaurentPoly::zero(); dim]; dim];
                for (r, row) in standard.iter_mut().enumerate() {
                    row[r] = LaurentPoly::one();
                }
                let c = i - 1;
                standard[c][c] = -&t;
                if c > 0 {
                    standard[c - 1][c] = t.clone();
                }
                if c + 1 < dim {
                    standard[c + 1][c] = LaurentPoly::one();
                }
                let data = burau_matrix(n, i).unwrap();
                for r in 0..dim {
                    for cc in 0..dim {
                        assert_eq!(
                            data.scaled[r][cc], standard[cc][r],
                            "transpose mismatch n={n} i={i} ({r},{cc})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn class_respects_sums_and_shifts() {
        let (sys, graph) = setup("A3");
        let unit = ZComplex::unit(&graph, sys.generator(0)).unwrap();
        let acted = act_word(&graph, &[1, 0], &unit).unwrap();
        // direct sum adds classes
        let sum = ZComplex::direct_sum(&[acted.clone(), unit.clone()]);
        assert_eq!(
            decat_class(&graph, &sum),
            decat_class(&graph, &acted).add(&decat_class(&graph, &unit))
        );
        // an internal shift (1) multiplies the class by v, a cohomological
        // shift [1] negates it
        let internal: Vec<_> = acted
            .objects()
            .iter()
            .map(|o| crate::zigzag::ZObject {
                vertex: o.vertex,
                shift: o.shift + 1,
                degree: o.degree,
            })
            .collect();
        let diff: std::collections::BTreeMap<_, _> = acted
            .entries()
            .map(|(i, j, m)| ((i, j), m.clone()))
            .collect();
        let shifted = ZComplex::from_parts(internal, diff.clone(), false);
        assert_eq!(
            decat_class(&graph, &shifted),
            decat_class(&graph, &acted).scaled(&p("v"))
        );
        let homological: Vec<_> = acted
            .objects()
            .iter()
            .map(|o| crate::zigzag::ZObject {
                vertex: o.vertex,
                shift: o.shift,
                degree: o.degree - 1,
            })
            .collect();
        let rotated = ZComplex::from_parts(homological, diff, false);
        assert_eq!(
            decat_class(&graph, &rotated),
            decat_class(&graph, &acted).scaled(&p("-1"))
        );
    }

    #[test]
    fn decat_class_of_action_equals_hecke_class_action() {
        // [F_word(B_w)] = Psi(word) . KL_w including KL coefficients beyond
        // plus/minus monomials
        let (sys, graph) = setup("A3");
        let hecke = Hecke::new(&sys);
        let word = PositiveWord::new(vec![0, 1, 0, 2, 1]);
        for &w in graph.vertices() {
            let acted =
                act_word(&graph, &word.letters, &ZComplex::unit(&graph, w).unwrap()).unwrap();
            let signed: Vec<(u8, bool)> = word.letters.iter().map(|&s| (s, true)).collect();
            let expect = hecke_action(&graph, &signed, &CellVector::unit(w)).unwrap();
            assert_eq!(decat_class(&graph, &acted), expect);
        }
        let _ = hecke;
    }
}
