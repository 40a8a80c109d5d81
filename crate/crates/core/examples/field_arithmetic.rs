//! Arithmetic in GF(9) built from the least irreducible quadratic over GF(3).

use matroid_forge::Field;

fn main() -> matroid_forge::Result<()> {
    let f = Field::from_order(9)?;
    println!("{}", f.header());

    // element i is the polynomial whose base-3 digits are the coefficients of i
    let x = f.element(3)?;
    println!("x = {:?}", f.coefficients(x));
    println!("x^2 = {}", f.mul(x, x));
    println!("x^-1 = {}", f.inv(x)?);
    println!("frob(x) = {}", f.frobenius(x, 1));
    for a in f.elements(true) {
        assert_eq!(f.mul(a, f.inv(a)?), 1);
    }

    match Field::from_order(6) {
        Err(e) => println!("order 6: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
