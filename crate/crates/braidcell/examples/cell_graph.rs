//! Building cell trees: vertices with a unique reduced expression and fixed
//! right descent, colored by their left descent.
//!
//! ```bash
//! cargo run -p braidcell --example cell_graph
//! ```

use braidcell::cellgraph::CellGraph;
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem};
use braidcell::hecke::Hecke;

fn main() -> braidcell::Result<()> {
    for name in ["A4", "B3", "H3", "I2:8"] {
        let sys = CoxeterSystem::new(CoxeterMatrix::named(name)?);
        let graph = CellGraph::build(&sys, 0, 16)?;
        let hecke = Hecke::new(&sys);
        println!("== {name}");
        print!("{}", graph.export(&sys));
        println!(
            "tree: {}, edges match the mu criterion: {}\n",
            graph.is_tree(),
            graph.check_mu_edges(&hecke)?
        );
    }

    // a radius-bounded affine graph
    let affine = CoxeterSystem::new(CoxeterMatrix::named("~A2")?);
    let graph = CellGraph::build(&affine, 0, 6)?;
    println!("== ~A2 out to radius 6");
    print!("{}", graph.export(&affine));

    // the base rule can be bypassed deliberately to see the 5-vertex path
    // whose top element fails rational smoothness
    let matrix = CoxeterMatrix::from_json(
        r#"{"generators": ["s","t","u"], "m": [["s","t",3],["t","u",4]]}"#,
    )?;
    let path = CoxeterSystem::new(matrix);
    println!("\n== forced base s on the s-t(3), t-u(4) chain");
    match CellGraph::build(&path, 0, 10) {
        Err(e) => println!("unforced build refused: {e}"),
        Ok(_) => unreachable!(),
    }
    let forced = CellGraph::build_forced(&path, 0, 10)?;
    print!("{}", forced.export(&path));
    Ok(())
}
