//! Coproduct, counit and antipode of U_q(gl(m|n)) checked in tensor powers of V.

use qbbw::exactring::pretty;
use qbbw::uqrep::{antipode, coproduct, format_word, verify_hopf, Generator};

fn main() -> qbbw::Result<()> {
    for g in [Generator::E(1), Generator::F(1), Generator::K(2)] {
        let terms: Vec<String> = coproduct(g)
            .iter()
            .map(|t| format!("{} ⊗ {}", format_word(&t.left), format_word(&t.right)))
            .collect();
        let s: Vec<String> = antipode(g)
            .terms()
            .iter()
            .map(|(c, w)| format!("({})*{}", pretty(c), format_word(w)))
            .collect();
        println!("Δ({g}) = {}    S({g}) = {}", terms.join(" + "), s.join(" + "));
    }
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let report = verify_hopf(m, n, 2)?;
        println!("gl({m}|{n}): {} checks, {} failed", report.len(), report.failures().count());
    }
    Ok(())
}
