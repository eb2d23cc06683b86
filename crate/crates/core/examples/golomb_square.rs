//! The periodic Golomb array over GF(9). Square shapes admit no folding.

use sidonfold::ddc::construct_golomb;
use sidonfold::finite_field::Field;
use sidonfold::folding::folding_directions;

fn main() -> sidonfold::Result<()> {
    let f = Field::of_order(9)?;
    let g = f.primitive();
    let golomb = construct_golomb(&f, &g, &g)?;
    println!("{}\n", golomb.render_ascii());
    println!(
        "{} dots, doubly periodic DDC: {}",
        golomb.len(),
        golomb.is_doubly_periodic_ddc().is_ok()
    );
    println!(
        "folding directions on the 8x8 square: {:?}",
        folding_directions(golomb.tiling())
    );
    Ok(())
}
