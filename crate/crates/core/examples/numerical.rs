//! Numerical semigroups: small elements, gaps, ideals and Arf closures.

use good_semigroups::{NumericalIdeal, NumericalSemigroup};

fn main() -> good_semigroups::Result<()> {
    let s = NumericalSemigroup::from_generators(&[4, 6, 13])?;
    println!("S = <4,6,13>");
    println!("  minimal generators {:?}", s.generators());
    println!("  small elements     {:?}", s.small_elements());
    println!("  gaps               {:?}", s.gaps());
    println!("  conductor {}, multiplicity {}", s.conductor(), s.multiplicity());
    println!("  arf: {}", s.is_arf());

    let t = s.arf_closure();
    println!("Arf closure: generators {:?}, small {:?}", t.generators(), t.small_elements());

    let e = NumericalIdeal::from_generators(&s, &[6, 13])?;
    println!("E = 6 + S ∪ 13 + S: small {:?}, conductor {}", e.small_elements(), e.conductor());
    println!("tail of S at 8: {:?}", s.tail(8).small_elements());
    Ok(())
}
