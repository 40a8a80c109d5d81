//! All standard representations of Q6 over GF(3) and GF(5).

use matroid_forge::coordinatize::{build_problem, enumerate_representations};
use matroid_forge::named;
use matroid_forge::report::{self, Format};
use matroid_forge::Field;

fn main() -> matroid_forge::Result<()> {
    let q6 = named::builtin("Q6")?.matroid;
    let pins = [(1, 4), (2, 4), (2, 5), (3, 5), (1, 6)];
    let prob = build_problem(&q6, Some(&[1, 2, 3]), Some(&pins))?;
    println!("unknowns {:?}", prob.unknowns);
    for q in [3, 5] {
        let r = enumerate_representations(&prob, &Field::from_order(q)?, None)?;
        print!("{}", report::coordinatization(&r, Format::Plain));
    }
    Ok(())
}
