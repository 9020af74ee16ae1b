//! The dihedral wave: acting with growing alternating braid words on one
//! cell object of `I2(8)` and watching the minimal complex travel, reflect
//! and die out on the cell path.
//!
//! ```bash
//! cargo run -p braidcell --example wave_table
//! ```

use braidcell::perverse::PerverseTable;
use braidcell::zigzag::dihedral_wave;

fn main() -> braidcell::Result<()> {
    for k in [3usize, 4] {
        println!("==== m = 8, start vertex [{k}] ====");
        for l in 0..=7 {
            let wave = dihedral_wave(8, k, l)?;
            let word = wave
                .word
                .iter()
                .map(|&s| wave.system.matrix().name(s))
                .collect::<Vec<_>>()
                .join(" ");
            println!("l = {l}   applied word: [{word}]");
            print!(
                "{}",
                PerverseTable::from_complex(&wave.complex).render(&wave.system, &wave.graph)
            );
            let mut arrows: Vec<String> = wave
                .complex
                .entries()
                .map(|(i, j, _)| {
                    format!(
                        "[{}] -> [{}]",
                        wave.system
                            .display(wave.graph.vertex(wave.complex.objects()[i].vertex)),
                        wave.system
                            .display(wave.graph.vertex(wave.complex.objects()[j].vertex))
                    )
                })
                .collect();
            arrows.sort();
            if !arrows.is_empty() {
                println!("arrows: {}", arrows.join(", "));
            }
            println!();
        }
    }
    Ok(())
}
