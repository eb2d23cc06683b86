//! Reduction into a tile and minimal periods of doubly periodic patterns.

use sidonfold::lattice::{minimal_period, Lattice, Point, Shape, Tiling};

fn main() -> sidonfold::Result<()> {
    let lattice = Lattice::new([[2, 1], [1, 2]])?;
    let tiling = Tiling::new(
        lattice,
        Shape::new(vec![Point::new(0, 0), Point::new(1, 0), Point::new(2, 0)])?,
    )?;
    for p in [Point::new(2, 1), Point::new(5, -3), Point::new(-4, 7)] {
        let r = tiling.reduce(p);
        println!("{p} = {} + {}", r.center, r.offset);
    }

    let strip = Tiling::fundamental(Lattice::rectangular(4, 4)?);
    for dots in [
        vec![Point::new(0, 0)],
        vec![
            Point::new(0, 0),
            Point::new(2, 0),
            Point::new(0, 2),
            Point::new(2, 2),
        ],
        vec![
            Point::new(0, 0),
            Point::new(1, 2),
            Point::new(2, 0),
            Point::new(3, 2),
        ],
    ] {
        let period = minimal_period(&strip, &dots)?;
        let shown: Vec<String> = dots.iter().map(Point::to_string).collect();
        println!(
            "dots {} repeat along {} and {}, volume {}",
            shown.join(" "),
            period.first,
            period.second,
            period.volume()
        );
    }
    Ok(())
}
