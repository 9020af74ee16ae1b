//! The decategorified action in type A is a twisted reduced Burau
//! representation; its generator matrices come straight out of the cell
//! module.
//!
//! ```bash
//! cargo run -p braidcell --example burau_matrices
//! ```

use braidcell::decat::{burau_matrix, mat_mul, render_matrix};

fn main() -> braidcell::Result<()> {
    let n = 5;
    for i in 1..n {
        let data = burau_matrix(n, i)?;
        println!("sigma_{i} on {n} strands, scaled basis:");
        print!("{}", render_matrix(&data.scaled));
    }

    // braid relation check: adjacent generators braid, distant ones commute
    let m1 = burau_matrix(n, 1)?.scaled;
    let m2 = burau_matrix(n, 2)?.scaled;
    let m4 = burau_matrix(n, 4)?.scaled;
    println!(
        "sigma_1 sigma_2 sigma_1 == sigma_2 sigma_1 sigma_2: {}",
        mat_mul(&mat_mul(&m1, &m2), &m1) == mat_mul(&mat_mul(&m2, &m1), &m2)
    );
    println!(
        "sigma_1 sigma_4 == sigma_4 sigma_1: {}",
        mat_mul(&m1, &m4) == mat_mul(&m4, &m1)
    );
    println!(
        "\n(substituting t = v^-2 gives the transpose of the classical reduced Burau matrices)"
    );
    Ok(())
}
