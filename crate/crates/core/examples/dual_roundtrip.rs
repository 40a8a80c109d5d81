//! Duals in the text matrix format, read back and compared.

use matroid_forge::io::{parse_matrix, write_matrix};
use matroid_forge::named::q6_rep;
use matroid_forge::{Matroid, StandardForm};

fn main() -> matroid_forge::Result<()> {
    let b2 = q6_rep(2);
    let text = write_matrix(b2.dual().matrix());
    print!("{text}");

    let back = StandardForm::new(parse_matrix(&text)?)?;
    let again = back.dual();
    assert!(Matroid::of_matrix(again.matrix()).equal_labeled(&Matroid::of_matrix(b2.matrix()))?);
    println!("dual of dual has the same labeled bases");
    Ok(())
}
