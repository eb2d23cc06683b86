//! The four algebraic Sidon families and how close each comes to optimal.

use sidonfold::finite_field::Field;
use sidonfold::group::{crt_flatten, SidonSequence};
use sidonfold::sidon::{
    check_optimality, construct_bose, construct_power_pairs, construct_ruzsa, construct_singer,
};

fn show(name: &str, s: &SidonSequence) {
    let report = check_optimality(s);
    println!(
        "{name:<8} |G| = {:<3} m = {:<2} bound = {:<2} {:?}  {}",
        report.group_order,
        report.size,
        report.upper_bound,
        report.verdict,
        serde_json::to_string(s).unwrap()
    );
}

fn main() -> sidonfold::Result<()> {
    for q in [3, 4, 5, 7] {
        println!("q = {q}");
        show("bose", &construct_bose(q)?);
        show("singer", &construct_singer(q)?);
        let f = Field::of_order(q)?;
        let product = construct_power_pairs(&f, &f.primitive())?;
        show("powers", &product);
        if f.degree() == 1 {
            show("ruzsa", &construct_ruzsa(q)?);
            let flat = crt_flatten(product.group())?.map_sequence(&product)?;
            println!(
                "         powers flattened to Z_{}: {:?}",
                q * (q - 1),
                flat.residues().unwrap()
            );
        }
    }
    Ok(())
}
