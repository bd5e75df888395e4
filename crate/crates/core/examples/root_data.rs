//! Roots, parities, ρ and the Levi factor of a parabolic in gl(m|n).

use qbbw::rootdata::{classify_subalgebra, levi_factor, RootData, SubalgebraSpec};

fn main() -> qbbw::Result<()> {
    for (m, n) in [(2, 1), (1, 2), (2, 2)] {
        let rd = RootData::new(m, n)?;
        let simple: Vec<String> = rd
            .simple_roots()
            .iter()
            .map(|r| format!("{r}{}", if r.is_odd() { "*" } else { "" }))
            .collect();
        println!("gl({m}|{n}): simple roots {} (* = odd), rho = {}", simple.join(" "), rd.rho().paren());
        println!(
            "  {} even and {} odd positive roots",
            rd.even_positive_roots().len(),
            rd.odd_positive_roots().len()
        );
    }

    let rd = RootData::new(2, 2)?;
    for theta in ["theta-=all", "theta+=1;theta-=all", "theta+=2;theta-=all", "theta+=1,2,3;theta-=1,2,3"] {
        let p = SubalgebraSpec::parse(&rd, theta)?;
        let kinds = classify_subalgebra(&rd, &p);
        print!("gl(2|2) {theta:<28} {kinds:?}");
        match levi_factor(&rd, &p) {
            Ok((_, blocks)) => println!("  levi {blocks} purely even: {}", blocks.is_purely_even()),
            Err(e) => println!("  ({e})"),
        }
    }
    Ok(())
}
