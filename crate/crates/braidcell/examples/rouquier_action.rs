//! The elementary complexes acting on cell objects: the three shapes of
//! `F_r B_w`, invertibility against `E_r`, and braid relations checked at
//! the fingerprint level.
//!
//! ```bash
//! cargo run -p braidcell --example rouquier_action
//! ```

use braidcell::cellgraph::CellGraph;
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem};
use braidcell::zigzag::{act_word, dump, fingerprint, minimize, tensor_e, tensor_f, ZComplex};

fn main() -> braidcell::Result<()> {
    let sys = CoxeterSystem::new(CoxeterMatrix::named("A3")?);
    let graph = CellGraph::build(&sys, 0, 16)?;
    let s = sys.generator(0);
    let unit = ZComplex::unit(&graph, s)?;

    println!("three shapes of F_r applied to B_s in A3:");
    for (label, r) in [
        ("descent color s", 0u8),
        ("neighbor color t", 1),
        ("far color u", 2),
    ] {
        let min = minimize(&tensor_f(&graph, r, &unit)?)?;
        println!("-- {label}:");
        print!("{}", dump(&sys, &graph, &min));
    }

    println!("E_r undoes F_r up to isomorphism:");
    for r in 0..3u8 {
        let back = minimize(&tensor_e(
            &graph,
            r,
            &minimize(&tensor_f(&graph, r, &unit)?)?,
        )?)?;
        println!(
            "  r = {}: fingerprint equals the unit: {}",
            sys.matrix().name(r),
            fingerprint(&back)? == fingerprint(&unit)?
        );
    }

    println!("\nbraid relations at the fingerprint level, every cell vertex:");
    for &w in graph.vertices() {
        let u = ZComplex::unit(&graph, w)?;
        let sts = act_word(&graph, &[0, 1, 0], &u)?;
        let tst = act_word(&graph, &[1, 0, 1], &u)?;
        println!(
            "  F_s F_t F_s B_{:7} == F_t F_s F_t: {}",
            format!("[{}]", sys.display(w)),
            fingerprint(&sts)? == fingerprint(&tst)?
        );
    }
    Ok(())
}
