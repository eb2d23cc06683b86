//! Fold a Bose Sidon set onto every foldable tiling of matching volume and
//! unfold it again.

use sidonfold::ddc::{fold_sidon_to_ddc, unfold_to_sidon, Anchor};
use sidonfold::folding::folding_directions;
use sidonfold::lattice::{Lattice, Tiling};
use sidonfold::sidon::construct_bose;

fn main() -> sidonfold::Result<()> {
    let s = construct_bose(5)?;
    let n = s.group().order() as i64;
    println!("Bose q=5 over Z_{n}: {:?}", s.residues().unwrap());
    // a = 1 gives 24 sheared strips; start from width 2
    for a in 2..=n {
        if n % a != 0 {
            continue;
        }
        let d = n / a;
        for b in 0..d {
            let tiling = Tiling::fundamental(Lattice::new([[a, b], [0, d]])?);
            let Some(&dir) = folding_directions(&tiling).first() else {
                continue;
            };
            let c = fold_sidon_to_ddc(&s, &tiling, dir)?;
            let back = unfold_to_sidon(&c, dir, Anchor::Origin)?;
            println!(
                "L = {} along ({dir}): periodic DDC {}, round trip {}",
                tiling.lattice(),
                c.is_doubly_periodic_ddc().is_ok(),
                back == s
            );
        }
    }
    Ok(())
}
