//! Kazhdan-Lusztig polynomials, mu values and graded hom ranks, including
//! the smoothness of the distinguished cell and the classical failure when
//! the base generator is chosen badly.
//!
//! ```bash
//! cargo run -p braidcell --example kl_polynomials
//! ```

use braidcell::cellgraph::CellGraph;
use braidcell::cli::smoothness_offenders;
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem, Elt};
use braidcell::hecke::Hecke;

fn main() -> braidcell::Result<()> {
    // KL basis elements in A2
    let a2 = CoxeterSystem::new(CoxeterMatrix::named("A2")?);
    let hecke = Hecke::new(&a2);
    let st = a2.canonicalize(&[0, 1])?;
    println!("KL basis element of [s t] in A2, standard coordinates:");
    println!("  {}", hecke.kl_basis(st)?.display(&a2));
    println!("mu(s, st) = {}", hecke.mu(a2.generator(0), st)?);
    println!(
        "hom rank (s, s) = {}\n",
        hecke.hom_rank(a2.generator(0), a2.generator(0))?
    );

    // every KL polynomial over the cell is a power of v in finite type
    for name in ["A4", "B3", "H3", "I2:8"] {
        let sys = CoxeterSystem::new(CoxeterMatrix::named(name)?);
        let graph = CellGraph::build(&sys, 0, 16)?;
        let offenders = smoothness_offenders(&sys, &graph)?;
        println!(
            "{name}: {} cell elements, all h(y, w) are powers of v: {}",
            graph.vertex_count(),
            offenders.is_empty()
        );
    }

    // the affine example with a degree-one self-morphism witness
    let affine = CoxeterSystem::new(CoxeterMatrix::named("~A2")?);
    let hecke = Hecke::new(&affine);
    let stus = affine.canonicalize(&[0, 1, 2, 0])?;
    println!(
        "\n~A2: h(s, stus) = {}",
        hecke.h_poly(affine.generator(0), stus)?
    );

    // chain s-t(3), t-u(4) with base s: the cell is not rationally smooth
    let matrix = CoxeterMatrix::from_json(
        r#"{"generators": ["s","t","u"], "m": [["s","t",3],["t","u",4]]}"#,
    )?;
    let path = CoxeterSystem::new(matrix);
    let hecke = Hecke::new(&path);
    let stuts = path.canonicalize(&[0, 1, 2, 1, 0])?;
    println!("\nbad base (s next to the light edge), KL polynomials at stuts:");
    for (label, y) in [
        ("us", path.canonicalize(&[2, 0])?),
        ("u", path.generator(2)),
        ("s", path.generator(0)),
        ("e", Elt::ID),
    ] {
        println!("  h({label:2}, stuts) = {}", hecke.h_poly(y, stuts)?);
    }
    Ok(())
}
