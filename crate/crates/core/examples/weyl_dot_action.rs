//! The ρ-shifted Weyl group action of S_m × S_n and dominant representatives.

use qbbw::rootdata::{RootData, Weight};
use qbbw::weyl::{dominant_representative, dot, WeylElement};

fn main() -> qbbw::Result<()> {
    let rd = RootData::new(2, 1)?;
    println!("gl(2|1), rho = {}", rd.rho().paren());

    let s1 = WeylElement::simple(2, 1, 1)?;
    let lam = Weight::parse("-2,0|0")?;
    println!("{s1} . {} = {}", lam.paren(), dot(&s1, &lam, &rd)?.paren());

    for s in ["-2,0|0", "-1,0|0", "3,1|2", "0,3|-1"] {
        let lam = Weight::parse(s)?;
        match dominant_representative(&lam, &rd)? {
            Some((w, mu)) => println!("{}: w = {w}, |w| = {}, w.lambda = {}", lam.paren(), w.length(), mu.paren()),
            None => println!("{}: singular", lam.paren()),
        }
    }

    let rd = RootData::new(2, 2)?;
    let w0 = WeylElement::longest(2, 2);
    println!("gl(2|2): |W| = {}, longest {w0} has length {}", WeylElement::all(2, 2).len(), w0.length());
    let lam = Weight::parse("0,0|0,0")?;
    println!("w0 . 0 = {}", dot(&w0, &lam, &rd)?.paren());
    Ok(())
}
