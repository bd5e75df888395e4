//! Defining relations of U_q(gl(m|n)) checked identically in q on V and V⊗V,
//! plus a deliberately broken representation as a negative control.

use qbbw::exactring::LaurentPoly;
use qbbw::uqrep::{root_vector, root_vector_choices, verify_relations, Generator, LMatrix, Rep};

fn main() -> qbbw::Result<()> {
    let v = Rep::vector(2, 2)?;
    let vv = Rep::tensor(&v, &v)?;
    for (label, rep) in [("V", &v), ("V⊗V", &vv)] {
        let report = verify_relations(rep);
        println!("gl(2|2) {label} (dim {}): {} relations, all pass: {}", rep.dim(), report.len(), report.all_passed());
    }
    for c in verify_relations(&v).checks().iter().filter(|c| c.name.starts_with("anticommute")) {
        println!("  {c}");
    }

    let e13 = root_vector(&v, 1, 3)?;
    println!("E13 in V:\n{e13}E13^2 = 0: {}", (&e13 * &e13).is_zero());
    let choices = root_vector_choices(&vv, 1, 4)?;
    println!("E14 on V⊗V via c = 2 and c = 3 agree: {}", choices[0].1 == choices[1].1);

    let bad = Rep::vector(1, 1)?.with_image(
        Generator::K(1),
        LMatrix::diagonal(vec![LaurentPoly::q_pow(2), LaurentPoly::one()]),
    )?;
    println!("corrupted gl(1|1) rep with K1 = diag(q^2, 1):");
    for c in verify_relations(&bad).failures() {
        println!("  {c}");
    }
    Ok(())
}
