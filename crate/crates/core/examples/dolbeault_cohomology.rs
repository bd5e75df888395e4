//! Cohomology of bundles over GL_q(m|n)/P, for both kinds of input module.

use qbbw::cohomology::{cross_check_theorems, dolbeault, BundleSpec, InputKind};
use qbbw::rootdata::{RootData, SubalgebraSpec, Weight};

fn main() -> qbbw::Result<()> {
    let rd = RootData::new(2, 1)?;
    let borel = SubalgebraSpec::parse(&rd, "theta-=all")?;
    for s in ["0,0|0", "-2,0|0", "-1,0|0", "-3,0|1"] {
        let spec = BundleSpec::new(rd.clone(), borel.clone(), Weight::parse(s)?, InputKind::Irreducible)?;
        println!("gl(2|1)/B, lambda = ({s}): {}", dolbeault(&spec)?);
    }

    let res = dolbeault(&BundleSpec::new(rd.clone(), borel.clone(), Weight::parse("-2,0|0")?, InputKind::Irreducible)?)?;
    println!("{}", res.to_json());

    // purely even Levi: both input kinds agree
    let p = SubalgebraSpec::parse(&rd, "theta+=1;theta-=all")?;
    let report = cross_check_theorems(&rd, &p, &Weight::parse("0,-3|1")?)?;
    println!("cross-check agrees: {} ({})", report.agrees(), report.irreducible);

    // a super Levi factor needs the dual Kac input
    let rd = RootData::new(1, 1)?;
    let g = SubalgebraSpec::parse(&rd, "theta+=1;theta-=1")?;
    let lam = Weight::parse("1|0")?;
    if let Err(e) = BundleSpec::new(rd.clone(), g.clone(), lam.clone(), InputKind::Irreducible) {
        println!("irreducible input rejected: {e}");
    }
    let spec = BundleSpec::new(rd, g, lam, InputKind::DualKac)?;
    println!("dual Kac input: {}", dolbeault(&spec)?);
    Ok(())
}
