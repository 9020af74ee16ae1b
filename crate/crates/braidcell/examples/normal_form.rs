//! Garside normal forms of positive braid words, cross-checked against the
//! exhaustive rewriting oracle.
//!
//! ```bash
//! cargo run -p braidcell --example normal_form
//! ```

use braidcell::braid::{monoid_equal, normal_form, oracle_normal_form, PositiveWord};
use braidcell::coxeter::{CoxeterMatrix, CoxeterSystem};

fn main() -> braidcell::Result<()> {
    let sys = CoxeterSystem::new(CoxeterMatrix::named("A3")?);

    for text in ["s t s", "t s t s", "s s", "u t s u t", "s t u s t u s t"] {
        let word = PositiveWord::parse(&sys, text)?;
        let nf = normal_form(&sys, &word)?;
        let oracle = oracle_normal_form(&sys, &word)?;
        assert_eq!(nf, oracle);
        println!(
            "{:14} -> {}   ({} factors)",
            text,
            nf.render(&sys),
            nf.factor_count()
        );
    }

    // monoid equality is decided by comparing normal forms
    let a = PositiveWord::parse(&sys, "s t s")?;
    let b = PositiveWord::parse(&sys, "t s t")?;
    let c = PositiveWord::parse(&sys, "s t")?;
    println!(
        "\ns t s == t s t in the braid monoid: {}",
        monoid_equal(&sys, &a, &b)?
    );
    println!(
        "s t s == s t   in the braid monoid: {}",
        monoid_equal(&sys, &a, &c)?
    );

    // re-multiplying the factors always recovers the input braid
    let word = PositiveWord::parse(&sys, "t u t s t u")?;
    let nf = normal_form(&sys, &word)?;
    assert!(monoid_equal(&sys, &nf.as_word(&sys), &word)?);
    println!("\n{} re-multiplies to the input word: ok", nf.render(&sys));
    Ok(())
}
