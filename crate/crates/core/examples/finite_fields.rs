//! Arithmetic in GF(9) and GF(2^4): primitive elements, logarithms, inverses.

use sidonfold::finite_field::Field;

fn main() -> sidonfold::Result<()> {
    let f = Field::new(3, 2)?;
    let g = f.primitive();
    println!("GF(9) modulo {:?}, primitive element {g}", f.modulus());
    for e in 0..8 {
        let x = f.pow(&g, e)?;
        println!("  g^{e} = {x:<8} log = {}", f.discrete_log(&x)?);
    }

    let f = Field::new(2, 4)?;
    let g = f.primitive();
    let x = f.from_int(0b1011)?;
    let inv = f.div(&f.one(), &x)?;
    println!("GF(16): ({x})^-1 = {inv}, check {}", f.mul(&x, &inv)?);
    println!(
        "GF(16) has {} primitive elements, g has order {}",
        f.primitive_elements().len(),
        f.multiplicative_order(&g)?
    );
    Ok(())
}
