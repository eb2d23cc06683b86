//! Exhaustive maxima: Sidon sets in small cyclic groups and dots in small
//! doubly periodic arrays.

use sidonfold::ddc::max_ddc_dots;
use sidonfold::group::GroupSpec;
use sidonfold::lattice::{Lattice, Tiling};
use sidonfold::sidon::{counting_bound, max_sidon_size};

fn main() -> sidonfold::Result<()> {
    for n in [7, 12, 13, 21, 22, 31] {
        let r = max_sidon_size(&GroupSpec::cyclic(n)?)?;
        println!(
            "Z_{n:<3} max {} (bound {}) witness {:?}",
            r.max,
            counting_bound(n),
            r.witness.residues().unwrap()
        );
    }
    for g in GroupSpec::all_of_order(16) {
        println!("{:?}: max {}", g.moduli(), max_sidon_size(&g)?.max);
    }

    let tiling = Tiling::fundamental(Lattice::rectangular(6, 7)?);
    let r = max_ddc_dots(&tiling)?;
    println!(
        "6x7 periodic array: at most {} dots\n{}",
        r.max,
        r.witness.render_ascii()
    );
    Ok(())
}
