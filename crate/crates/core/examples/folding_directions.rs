//! Folding directions of a few tilings, with the closed-form gcd test next to
//! the simulation.

use sidonfold::arith::totient;
use sidonfold::folding::{defines_folding, defines_folding_gcd, folding_directions, Direction};
use sidonfold::lattice::{Lattice, Tiling};

fn main() -> sidonfold::Result<()> {
    for rows in [
        [[6, 0], [0, 7]],
        [[3, 1], [-2, 5]],
        [[4, 2], [2, 4]],
        [[5, 0], [0, 5]],
    ] {
        let lattice = Lattice::new(rows)?;
        let tiling = Tiling::fundamental(lattice);
        let dirs = folding_directions(&tiling);
        let n = tiling.size() as u64;
        println!(
            "L = {lattice}  V = {n}  phi(V) = {}  directions: {}",
            totient(n),
            dirs.len()
        );
        let shown: Vec<String> = dirs.iter().take(6).map(|d| format!("({d})")).collect();
        println!("  {}", shown.join(" "));
        for (d1, d2) in [(1, 1), (1, -1), (2, 1), (1, 0)] {
            let d = Direction::new(d1, d2)?;
            println!(
                "  d = ({d}): simulation {}, gcd test {:?}",
                defines_folding(&tiling, d),
                defines_folding_gcd(&lattice, n, d)
            );
        }
    }
    Ok(())
}
