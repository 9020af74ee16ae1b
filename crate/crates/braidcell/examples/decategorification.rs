//! Classes of complexes in the cell module: the alternating sum over
//! objects intertwines the categorical braid action with the Hecke action,
//! for inverse letters too.
//!
//! ```bash
//! cargo run -p braidcell --example decategorification
//! ```

use braidcell::braid::SignedWord;
use braidcell::cellgraph::CellGraph;
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem};
use braidcell::decat::{decat_class, hecke_action, verify_decat};
use braidcell::hecke::CellVector;
use braidcell::zigzag::{act_signed_word, ZComplex};

fn main() -> braidcell::Result<()> {
    let sys = CoxeterSystem::new(CoxeterMatrix::named("B3")?);
    let graph = CellGraph::build(&sys, 0, 16)?;

    let word = SignedWord::parse(&sys, "s -t s u")?;
    println!("signed word: s -t s u acting on each cell object of B3\n");
    for &w in graph.vertices() {
        let acted = act_signed_word(&graph, &word.letters, &ZComplex::unit(&graph, w)?)?;
        let class = decat_class(&graph, &acted);
        let hecke = hecke_action(&graph, &word.letters, &CellVector::unit(w))?;
        println!("B[{}]:", sys.display(w));
        println!("  class of the action : {}", class.display(&sys));
        println!("  Hecke module action : {}", hecke.display(&sys));
        assert_eq!(class, hecke);
    }

    for text in ["", "s t s", "-s -t", "u s -u t -s"] {
        let word = SignedWord::parse(&sys, text)?;
        println!(
            "verify_decat(\"{text}\") = {}",
            verify_decat(&graph, &word)?
        );
    }
    Ok(())
}
