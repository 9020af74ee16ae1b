//! The Hecke algebra in the standard basis, the Kazhdan-Lusztig basis, mu
//! values, the standard pairing as a graded hom rank, and the action on the
//! left cell module.
//!
//! Standard basis relations, in the normalization used throughout:
//! `H_s^2 = (v^-1 - v) H_s + 1` plus the braid relations. The KL basis
//! element `KL_w` is computed by the inductive left-handed multiplication
//! `KL_w = KL_s KL_{sw} - sum mu(z, sw) KL_z` over `z < sw` with `sz < z`,
//! for any left descent `s` of `w`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cellgraph::CellGraph;
use crate::coxeter::{CoxeterSystem, Elt};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of the Hecke algebra in standard-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<Elt, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt::default()
    }

    pub fn std(w: Elt) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: Elt) -> LaurentPoly {
        self.terms
            .get(&w)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elt, &LaurentPoly)> {
        self.terms.iter().map(|(&w, p)| (w, p))
    }

    pub fn support(&self) -> impl Iterator<Item = Elt> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, w: Elt, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, p) in other.terms() {
            out.add_term(w, p);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, p) in other.terms() {
            out.add_term(w, &-p);
        }
        out
    }

    pub fn scaled(&self, p: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, q) in self.terms() {
            out.add_term(w, &(q * p));
        }
        out
    }

    pub fn display(&self, sys: &CoxeterSystem) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(w, p)| format!("({}) H[{}]", p, sys.display(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Hecke algebra computations over a Coxeter system, with a synchronized
/// Kazhdan-Lusztig memo table.
pub struct Hecke<'a> {
    sys: &'a CoxeterSystem,
    kl: Mutex<BTreeMap<Elt, Arc<HeckeElt>>>,
}

impl<'a> Hecke<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        Hecke {
            sys,
            kl: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.sys
    }

    /// Multiplication by a standard generator: `H_s * h` or `h * H_s`.
    pub fn mul_std_gen(&self, s: u8, h: &HeckeElt, side: Side) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        let vinv_minus_v = &LaurentPoly::v_pow(-1) - &LaurentPoly::v();
        for (w, p) in h.terms() {
            let sw = match side {
                Side::Left => self.sys.left_mul(s, w)?,
                Side::Right => self.sys.right_mul(w, s)?,
            };
            if self.sys.len(sw) > self.sys.len(w) {
                out.add_term(sw, p);
            } else {
                out.add_term(w, &(p * &vinv_minus_v));
                out.add_term(sw, p);
            }
        }
        Ok(out)
    }

    /// Multiplication by an inverse generator, `H_s^{-1} = H_s + (v - v^-1)`.
    pub fn mul_std_gen_inv(&self, s: u8, h: &HeckeElt, side: Side) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        let v_minus_vinv = &LaurentPoly::v() - &LaurentPoly::v_pow(-1);
        for (w, p) in h.terms() {
            let sw = match side {
                Side::Left => self.sys.left_mul(s, w)?,
                Side::Right => self.sys.right_mul(w, s)?,
            };
            if self.sys.len(sw) < self.sys.len(w) {
                out.add_term(sw, p);
            } else {
                out.add_term(w, &(p * &v_minus_vinv));
                out.add_term(sw, p);
            }
        }
        Ok(out)
    }

    /// The Kazhdan-Lusztig basis element of `w`, expanded in the standard
    /// basis. Memoized.
    pub fn kl_basis(&self, w: Elt) -> Result<Arc<HeckeElt>> {
        if let Some(hit) = self.kl.lock().unwrap().get(&w) {
            return Ok(hit.clone());
        }
        let result = if w.is_identity() {
            HeckeElt::std(Elt::ID)
        } else {
            let s = self.sys.bits_to_gens(self.sys.left_descents(w)?)[0];
            let sw = self.sys.left_mul(s, w)?;
            let lower = self.kl_basis(sw)?;
            // KL_s * KL_{sw} = H_s * KL_{sw} + v * KL_{sw}
            let mut prod = self.mul_std_gen(s, &lower, Side::Left)?;
            prod = prod.add(&lower.scaled(&LaurentPoly::v()));
            // subtract mu(z, sw) KL_z over z < sw with s a left descent of z
            for (z, hz) in lower.terms() {
                if z == sw {
                    continue;
                }
                let mu = hz.coeff(1);
                if mu.is_zero() || !self.sys.has_left_descent(z, s)? {
                    continue;
                }
                let klz = self.kl_basis(z)?;
                prod = prod.sub(&klz.scaled(&LaurentPoly::monomial(mu, 0)));
            }
            debug_assert!(prod.coeff(w).is_one());
            prod
        };
        let arc = Arc::new(result);
        self.kl
            .lock()
            .unwrap()
            .entry(w)
            .or_insert_with(|| arc.clone());
        Ok(arc)
    }

    /// The Kazhdan-Lusztig polynomial `h_{y,w}` in this normalization.
    pub fn h_poly(&self, y: Elt, w: Elt) -> Result<LaurentPoly> {
        Ok(self.kl_basis(w)?.coeff(y))
    }

    /// `mu(y, x)`: the coefficient of `v` in `h_{y,x}`, extended
    /// symmetrically, zero on incomparable pairs.
    pub fn mu(&self, y: Elt, x: Elt) -> Result<BigInt> {
        if y == x {
            return Ok(BigInt::zero());
        }
        let (lo, hi) = if self.sys.len(y) < self.sys.len(x) {
            (y, x)
        } else {
            (x, y)
        };
        if !self.sys.bruhat_leq(lo, hi)? {
            return Ok(BigInt::zero());
        }
        Ok(self.h_poly(lo, hi)?.coeff(1))
    }

    /// Graded rank of `Hom(B_x, B_y)` by the standard pairing:
    /// `(KL_x, KL_y) = sum over z <= x, y of h_{z,x} h_{z,y}`.
    pub fn hom_rank(&self, x: Elt, y: Elt) -> Result<LaurentPoly> {
        let bx = self.kl_basis(x)?;
        let by = self.kl_basis(y)?;
        let mut out = LaurentPoly::zero();
        for (z, hx) in bx.terms() {
            let hy = by.coeff(z);
            if !hy.is_zero() {
                out += &(hx * &hy);
            }
        }
        Ok(out)
    }

    /// The bar involution `v -> v^-1`, `H_x -> H_{x^-1}^{-1}`, applied to an
    /// element in standard coordinates.
    pub fn bar(&self, h: &HeckeElt) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        for (w, p) in h.terms() {
            let barred = self.bar_std(w)?;
            out = out.add(&barred.scaled(&p.bar()));
        }
        Ok(out)
    }

    /// `bar(H_w) = H_{s_1}^{-1} ... H_{s_k}^{-1}` for `w = s_1 ... s_k` reduced.
    fn bar_std(&self, w: Elt) -> Result<HeckeElt> {
        let word = self.sys.word(w);
        let mut out = HeckeElt::std(Elt::ID);
        for &s in word.iter().rev() {
            out = self.mul_std_gen_inv(s, &out, Side::Left)?;
        }
        Ok(out)
    }
}

/// An element of the left cell module in the images of the KL basis,
/// supported on the vertices of a cell graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellVector {
    coords: BTreeMap<Elt, LaurentPoly>,
}

impl CellVector {
    pub fn zero() -> Self {
        CellVector::default()
    }

    pub fn unit(w: Elt) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(w, LaurentPoly::one());
        CellVector { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, w: Elt) -> LaurentPoly {
        self.coords
            .get(&w)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elt, &LaurentPoly)> {
        self.coords.iter().map(|(&w, p)| (w, p))
    }

    pub fn add_term(&mut self, w: Elt, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.coords.entry(w).or_default();
        *slot += p;
        if slot.is_zero() {
            self.coords.remove(&w);
        }
    }

    pub fn add(&self, other: &CellVector) -> CellVector {
        let mut out = self.clone();
        for (w, p) in other.terms() {
            out.add_term(w, p);
        }
        out
    }

    pub fn scaled(&self, p: &LaurentPoly) -> CellVector {
        let mut out = CellVector::zero();
        for (w, q) in self.terms() {
            out.add_term(w, &(q * p));
        }
        out
    }

    pub fn display(&self, sys: &CoxeterSystem) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(w, p)| format!("({}) KL[{}]", p, sys.display(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Action of `KL_r` on the cell module: `(v + v^-1)` times a vertex with
/// left descent `r`, otherwise the sum of its `r`-colored neighbors. Terms
/// leaving the unique-reduced-expression cell are discarded, which realizes
/// the quotient.
pub fn cell_action_kl(graph: &CellGraph, r: u8, vec: &CellVector) -> Result<CellVector> {
    let mut out = CellVector::zero();
    let gap = &LaurentPoly::v() + &LaurentPoly::v_pow(-1);
    for (w, p) in vec.terms() {
        let i = graph
            .vertex_index(w)
            .ok_or_else(|| Error::VertexOutsideGraph(format!("element #{}", w.index())))?;
        if graph.color(i) == r {
            out.add_term(w, &(p * &gap));
        } else {
            if graph.at_incomplete_boundary(i) {
                return Err(Error::WavefrontOutOfRadius(format!(
                    "vertex #{i} at radius boundary"
                )));
            }
            for j in graph.colored_neighbors(i, r) {
                out.add_term(graph.vertex(j), p);
            }
        }
    }
    Ok(out)
}

/// Action of `H_r` (`positive`) or `H_r^{-1}` on the cell module, via
/// `H_r = KL_r - v` and `H_r^{-1} = KL_r - v^{-1}`.
pub fn cell_action_std(
    graph: &CellGraph,
    r: u8,
    positive: bool,
    vec: &CellVector,
) -> Result<CellVector> {
    let kl = cell_action_kl(graph, r, vec)?;
    let shift = if positive {
        LaurentPoly::v()
    } else {
        LaurentPoly::v_pow(-1)
    };
    Ok(kl.add(&vec.scaled(&-&shift)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::named(name).unwrap())
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let s = a2.generator(0);
        let hs = HeckeElt::std(s);
        let sq = hecke.mul_std_gen(0, &hs, Side::Left).unwrap();
        assert_eq!(sq.coeff(s), p("v^-1 - v"));
        assert_eq!(sq.coeff(Elt::ID), p("1"));
        // H_s . H_id = H_s
        let h = hecke
            .mul_std_gen(0, &HeckeElt::std(Elt::ID), Side::Left)
            .unwrap();
        assert_eq!(h, hs);
        // lengths add: H_s H_t H_s = H_{sts}
        let mut x = HeckeElt::std(Elt::ID);
        for s in [0u8, 1, 0] {
            x = hecke.mul_std_gen(s, &x, Side::Left).unwrap();
        }
        assert_eq!(x, HeckeElt::std(a2.canonicalize(&[0, 1, 0]).unwrap()));
    }

    #[test]
    fn right_multiplication_mirrors_left() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let st = a2.canonicalize(&[0, 1]).unwrap();
        // H_{st} . H_t = (v^-1 - v) H_{st} + H_s
        let out = hecke
            .mul_std_gen(1, &HeckeElt::std(st), Side::Right)
            .unwrap();
        assert_eq!(out.coeff(st), p("v^-1 - v"));
        assert_eq!(out.coeff(a2.generator(0)), p("1"));
        // and the inverse undoes it
        let back = hecke.mul_std_gen_inv(1, &out, Side::Right).unwrap();
        assert_eq!(back, HeckeElt::std(st));
    }

    #[test]
    fn kl_basis_small_cases() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let s = a2.generator(0);
        let kls = hecke.kl_basis(s).unwrap();
        assert_eq!(kls.coeff(s), p("1"));
        assert_eq!(kls.coeff(Elt::ID), p("v"));
        assert_eq!(kls.terms().count(), 2);

        let st = a2.canonicalize(&[0, 1]).unwrap();
        let klst = hecke.kl_basis(st).unwrap();
        assert_eq!(klst.coeff(st), p("1"));
        assert_eq!(klst.coeff(s), p("v"));
        assert_eq!(klst.coeff(a2.generator(1)), p("v"));
        assert_eq!(klst.coeff(Elt::ID), p("v^2"));
    }

    #[test]
    fn dihedral_kl_polynomials_are_monomials() {
        for name in ["I2:5", "I2:7", "I2:8"] {
            let system = sys(name);
            let hecke = Hecke::new(&system);
            let m = match system.matrix().order(0, 1) {
                crate::coxeter::Order::Finite(m) => m as usize,
                _ => unreachable!(),
            };
            for w in system.enumerate(m).unwrap() {
                let kl = hecke.kl_basis(w).unwrap();
                for y in system.enumerate(m).unwrap() {
                    if system.bruhat_leq(y, w).unwrap() {
                        let expect = LaurentPoly::v_pow((system.len(w) - system.len(y)) as i32);
                        assert_eq!(kl.coeff(y), expect);
                    } else {
                        assert!(kl.coeff(y).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn affine_a2_golden_value() {
        let system = sys("~A2");
        let hecke = Hecke::new(&system);
        // stus with generators s, t, u
        let stus = system.canonicalize(&[0, 1, 2, 0]).unwrap();
        assert_eq!(system.len(stus), 4);
        let h = hecke.h_poly(system.generator(0), stus).unwrap();
        assert_eq!(h, p("v^3 + v"));
    }

    #[test]
    fn b3_path_counterexample_goldens() {
        let m = CoxeterMatrix::from_json(
            r#"{"generators": ["s","t","u"], "m": [["s","t",3],["t","u",4]]}"#,
        )
        .unwrap();
        let system = CoxeterSystem::new(m);
        let hecke = Hecke::new(&system);
        let stuts = system.canonicalize(&[0, 1, 2, 1, 0]).unwrap();
        assert_eq!(system.len(stuts), 5);
        let us = system.canonicalize(&[2, 0]).unwrap();
        assert_eq!(hecke.h_poly(us, stuts).unwrap(), p("v^3 + v"));
        assert_eq!(
            hecke.h_poly(system.generator(2), stuts).unwrap(),
            p("v^4 + v^2")
        );
        assert_eq!(
            hecke.h_poly(system.generator(0), stuts).unwrap(),
            p("v^4 + v^2")
        );
        assert_eq!(hecke.h_poly(Elt::ID, stuts).unwrap(), p("v^5 + v^3"));
    }

    #[test]
    fn mu_examples() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let s = a2.generator(0);
        let st = a2.canonicalize(&[0, 1]).unwrap();
        let ts = a2.canonicalize(&[1, 0]).unwrap();
        assert_eq!(hecke.mu(st, st).unwrap(), BigInt::zero());
        assert_eq!(hecke.mu(s, st).unwrap(), BigInt::from(1));
        assert_eq!(hecke.mu(st, s).unwrap(), BigInt::from(1));
        assert_eq!(hecke.mu(st, ts).unwrap(), BigInt::zero());
    }

    #[test]
    fn hom_rank_examples() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let s = a2.generator(0);
        assert_eq!(hecke.hom_rank(s, s).unwrap(), p("1 + v^2"));
        let t = a2.generator(1);
        // distinct cell elements: positive degrees only
        let r = hecke.hom_rank(s, t).unwrap();
        assert!(r.coeff(0).is_zero());
    }

    #[test]
    fn kl_basis_is_bar_invariant_and_upper_triangular() {
        for name in ["A3", "B3", "I2:7", "~A2"] {
            let system = sys(name);
            let hecke = Hecke::new(&system);
            for w in system.enumerate(6).unwrap() {
                let kl = hecke.kl_basis(w).unwrap();
                // degree bounds: h_{w,w} = 1 and h_{y,w} in vZ[v] for y < w
                for (y, h) in kl.terms() {
                    if y == w {
                        assert!(h.is_one());
                    } else {
                        assert!(
                            h.min_exp().unwrap() >= 1,
                            "h_({}, {}) = {} not in vZ[v]",
                            system.display(y),
                            system.display(w),
                            h
                        );
                        assert!(system.bruhat_leq(y, w).unwrap());
                    }
                }
                let barred = hecke.bar(&kl).unwrap();
                assert_eq!(
                    barred,
                    *kl,
                    "KL element of {} not bar-invariant",
                    system.display(w)
                );
            }
        }
    }

    #[test]
    fn cell_actions() {
        let a2 = sys("A2");
        let hecke = Hecke::new(&a2);
        let graph = CellGraph::build(&a2, 0, 10).unwrap();
        let s = a2.generator(0);
        let ts = a2.canonicalize(&[1, 0]).unwrap();
        let gap = p("v + v^-1");

        // descent case: KL_s . KL_s = (v + v^-1) KL_s in the cell module
        let acted = cell_action_kl(&graph, 0, &CellVector::unit(s)).unwrap();
        assert_eq!(acted, CellVector::unit(s).scaled(&gap));

        // single edge: KL_t . KL_s = KL_ts
        let acted = cell_action_kl(&graph, 1, &CellVector::unit(s)).unwrap();
        assert_eq!(acted, CellVector::unit(ts));

        // no r-colored edge, not a descent: zero (A2 has only colors s, t)
        let a3 = sys("A3");
        let g3 = CellGraph::build(&a3, 0, 10).unwrap();
        let s3 = a3.generator(0);
        let acted = cell_action_kl(&g3, 2, &CellVector::unit(s3)).unwrap();
        assert!(acted.is_zero());

        // std action, no-edge non-descent case: H_r . KL_w = -v KL_w
        let acted = cell_action_std(&g3, 2, true, &CellVector::unit(s3)).unwrap();
        assert_eq!(acted, CellVector::unit(s3).scaled(&p("-v")));
        // descent case: H_r . KL_w = v^-1 KL_w
        let acted = cell_action_std(&g3, 0, true, &CellVector::unit(s3)).unwrap();
        assert_eq!(acted, CellVector::unit(s3).scaled(&p("v^-1")));

        // H_r^{-1} (H_r vec) = vec
        let hecke_check = |vec: &CellVector| {
            for r in 0..3u8 {
                let forward = cell_action_std(&g3, r, true, vec).unwrap();
                let back = cell_action_std(&g3, r, false, &forward).unwrap();
                assert_eq!(&back, vec);
            }
        };
        let mut vec = CellVector::unit(s3);
        vec.add_term(a3.canonicalize(&[1, 0]).unwrap(), &p("v^2 - 3"));
        hecke_check(&vec);
        let _ = hecke;
    }

    #[test]
    fn cell_edge_criterion_matches_mu() {
        for name in ["A3", "B3", "I2:5"] {
            let system = sys(name);
            let hecke = Hecke::new(&system);
            let graph = CellGraph::build(&system, 0, 16).unwrap();
            assert!(graph.check_mu_edges(&hecke).unwrap());
            let mut corrupted = graph.clone();
            corrupted.corrupt_drop_edge();
            assert!(!corrupted.check_mu_edges(&hecke).unwrap());
        }
    }
}
