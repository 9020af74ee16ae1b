//! Reading the Garside normal form off the categorical action: top perverse
//! degree counts factors, anchors name the descent letters, shrinking with
//! inverse complexes closes factors.
//!
//! ```bash
//! cargo run -p braidcell --example garside_recovery
//! ```

use braidcell::braid::{normal_form, PositiveWord};
use braidcell::cellgraph::CellGraph;
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem};
use braidcell::recovery::{check_garside_theorem, recover_traced};

fn main() -> braidcell::Result<()> {
    let sys = CoxeterSystem::new(CoxeterMatrix::named("A3")?);
    let graph = CellGraph::build(&sys, 0, 16)?;

    let word = PositiveWord::parse(&sys, "t s t u s t")?;
    println!("input word: [{}]", word.display(&sys));
    println!(
        "combinatorial normal form: {}\n",
        normal_form(&sys, &word)?.render(&sys)
    );

    let (recovered, trace) = recover_traced(&sys, &graph, &word)?;
    for (i, step) in trace.steps.iter().enumerate() {
        let anchors = step
            .anchor_vertices
            .iter()
            .map(|&v| format!("[{}]", sys.display(graph.vertex(v))))
            .collect::<Vec<_>>()
            .join(" ");
        println!(
            "step {i}: top degree {}  anchors {{{anchors}}}  apply E_{}{}",
            step.top_degree,
            sys.matrix().name(step.chosen),
            if step.factor_closed {
                "  -> factor closed"
            } else {
                ""
            }
        );
    }
    println!(
        "\nrecovered from the action alone: {}",
        recovered.render(&sys)
    );
    assert_eq!(recovered, normal_form(&sys, &word)?);

    // the batch report compares everything at once
    println!();
    for text in ["s", "s t s", "u u t s", "s t u s t u s t s t"] {
        let w = PositiveWord::parse(&sys, text)?;
        let report = check_garside_theorem(&sys, &graph, &w)?;
        println!("{}", report.render(&sys));
    }
    Ok(())
}
