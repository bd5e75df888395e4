//! Formal characters: Gelfand-Tsetlin patterns, the Λ-factor and dual Kac modules.

use qbbw::characters::{char_dual_kac, char_irreducible_block, char_lambda_factor, dim_dual_kac, dim_weyl_block};
use qbbw::rootdata::{odd_positive_roots_of, RootData, SubalgebraSpec, Weight};

fn main() -> qbbw::Result<()> {
    let mu = [2, 1, 0];
    let ch = char_irreducible_block(&mu)?;
    println!("gl3 irreducible {mu:?}: {} weights, dim {} (Weyl formula {})", ch.num_terms(), ch.dim(), dim_weyl_block(&mu)?);

    let rd = RootData::new(1, 1)?;
    let full = SubalgebraSpec::full(&rd);
    let k = char_dual_kac(&rd, &full, &Weight::parse("0|0")?)?;
    println!("gl(1|1) dual Kac K_(0|0): {}", k.to_json());

    let rd = RootData::new(2, 2)?;
    let full = SubalgebraSpec::full(&rd);
    let lam = char_lambda_factor(&odd_positive_roots_of(&rd, &full)?, 2, 2);
    println!("gl(2|2) Lambda factor: {} weights, dim {}", lam.num_terms(), lam.dim());
    let mu = Weight::parse("1,0|0,-1")?;
    println!("gl(2|2) dim K_{} = {}", mu.paren(), dim_dual_kac(&rd, &full, &mu)?);

    // a smaller Levi factor gives a smaller Λ-factor
    let levi = SubalgebraSpec::parse(&rd, "theta+=2;theta-=2")?;
    println!("levi gl(1|1) inside gl(2|2): dim K_{} = {}", mu.paren(), dim_dual_kac(&rd, &levi, &mu)?);
    Ok(())
}
