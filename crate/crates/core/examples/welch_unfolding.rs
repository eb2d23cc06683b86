//! Unfold the periodic Welch array for p = 7 along (1,1) into a Sidon set
//! modulo 42.

use sidonfold::ddc::{construct_welch, unfold_to_sidon, Anchor};
use sidonfold::folding::{folded_row, Direction};

fn main() -> sidonfold::Result<()> {
    let welch = construct_welch(7, 3)?;
    println!("{}\n", welch.render_ascii());
    println!(
        "doubly periodic DDC: {}",
        welch.is_doubly_periodic_ddc().is_ok()
    );

    let d = Direction::new(1, 1)?;
    let row = folded_row(welch.tiling(), d);
    let head: Vec<String> = row.points.iter().take(8).map(|p| p.to_string()).collect();
    println!("folded row starts {} ...", head.join(" "));

    let s = unfold_to_sidon(&welch, d, Anchor::LowerLeft)?;
    println!("Sidon set mod 42: {:?}", s.residues().unwrap());
    println!("verified: {}", s.verify_sidon().is_ok());
    Ok(())
}
