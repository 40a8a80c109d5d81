//! Breadth-first catalog from the whirl representations over GF(5). X7 shows
//! up at seven elements only when B is among the seeds.

use matroid_forge::catalog::generate_catalog;
use matroid_forge::named::{whirl, x7};
use matroid_forge::report::{self, Format};
use matroid_forge::Matroid;

fn main() -> matroid_forge::Result<()> {
    let x7 = Matroid::of_matrix(x7().matrix());
    for seeds in [vec![whirl(1)], vec![whirl(1), whirl(2)]] {
        let entries = generate_catalog(&seeds, 7)?;
        print!("{}", report::catalog(&entries, Format::Plain));
        let found = entries.iter().any(|e| e.matroid.is_isomorphic(&x7));
        println!("{} seed(s): X7 {}\n", seeds.len(), if found { "found" } else { "absent" });
    }
    Ok(())
}
