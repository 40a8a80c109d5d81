//! Single-element extensions of F7- over GF(5) and how stable each one is.

use matroid_forge::extension::{extend_all, stability_of};
use matroid_forge::named;
use matroid_forge::report::{self, tuple, Format};

fn main() -> matroid_forge::Result<()> {
    let base = named::f7_minus();
    let ext = extend_all(&base)?;
    let stab = stability_of(&ext)?;
    print!("{}", report::extensions(&ext, "extension", Some(&stab), Format::Plain));

    for class in &ext.classes {
        let groups: Vec<String> = ext
            .group_columns(class)
            .iter()
            .map(|g| g.iter().map(|c| tuple(c)).collect::<Vec<_>>().join(" "))
            .collect();
        println!("class {}: {}", class.class_id, groups.join(" | "));
    }
    Ok(())
}
