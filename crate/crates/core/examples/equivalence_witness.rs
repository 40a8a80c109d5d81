//! Comparing the three whirl representations over GF(5), with a replayable
//! witness for the one equivalent pair.

use matroid_forge::equivalence::{equivalent, Relation};
use matroid_forge::named::whirl;
use matroid_forge::report::{self, Format};

fn main() -> matroid_forge::Result<()> {
    let reps = [whirl(1), whirl(2), whirl(3)];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for rel in [Relation::Projective, Relation::Geometric] {
            let w = equivalent(reps[i].matrix(), reps[j].matrix(), rel)?;
            print!("{}-{} ", "ABC".as_bytes()[i] as char, "ABC".as_bytes()[j] as char);
            print!("{}", report::equivalence(rel, w.as_ref(), false, Format::Plain));
        }
    }

    let (b, c) = (reps[1].matrix(), reps[2].matrix());
    let w = equivalent(b, c, Relation::Geometric)?.expect("B and C are geometrically equivalent");
    println!("{}", serde_json::to_string(&w).unwrap());
    assert!(b.apply_witness(&w)?.entries_eq(c));
    Ok(())
}
