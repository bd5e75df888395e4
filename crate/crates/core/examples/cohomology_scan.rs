//! Tabulates cohomology over a box of weights and summarizes degrees.

use std::collections::BTreeMap;

use qbbw::cohomology::{scan, InputKind};
use qbbw::rootdata::{RootData, SubalgebraSpec};

fn main() -> qbbw::Result<()> {
    let rd = RootData::new(2, 2)?;
    let p = SubalgebraSpec::parse(&rd, "theta-=all")?;
    let rows = scan(&rd, &p, InputKind::Irreducible, -2, 2)?;
    let mut by_degree: BTreeMap<String, usize> = BTreeMap::new();
    for row in &rows {
        let key = match &row.result {
            Ok(r) => match r.concentrated() {
                Some(c) => format!("degree {}", c.degree),
                None => "vanishes".to_string(),
            },
            Err(_) => "undefined".to_string(),
        };
        *by_degree.entry(key).or_default() += 1;
    }
    println!("gl(2|2)/B over [-2,2]^4: {} weights", rows.len());
    for (k, v) in by_degree {
        println!("  {k:<10} {v}");
    }
    for row in rows.iter().take(5) {
        if let Ok(r) = &row.result {
            println!("  {} -> {r}", row.lambda.paren());
        }
    }
    Ok(())
}
