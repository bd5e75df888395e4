//! Left and right translation actions on the matrix elements π_ij of V.

use qbbw::uqrep::{translation_actions, Generator, MatrixElement, Rep};

fn main() -> qbbw::Result<()> {
    let v = Rep::vector(2, 1)?;
    let x = [Generator::E(2)];
    for (i, j) in [(0, 2), (2, 2), (1, 0)] {
        let pi = MatrixElement::new(&v, i, j)?;
        let (dl, dr) = translation_actions(&v, &x, &pi);
        println!("pi{}{}: dL_E23 = {dl}, dR_E23 = {dr}", i + 1, j + 1);
    }

    // matrix elements are weight vectors for dR_K
    let pi = MatrixElement::new(&v, 0, 2)?;
    let (_, dr) = translation_actions(&v, &[Generator::K(3)], &pi);
    println!("dR_K3 pi13 = {dr}");

    // the two actions super-commute
    let (x, y) = (Generator::E(2), Generator::F(2));
    let mut ok = true;
    for pi in MatrixElement::all(&v) {
        let f = pi.functional(&v);
        let lr = f.dr(&v, &[y]).dl(&v, &[x]);
        let rl = f.dl(&v, &[x]).dr(&v, &[y]).scale_int(-1);
        ok &= lr == rl;
    }
    println!("dL_E23 dR_E32 = -dR_E32 dL_E23 on all pi_ij: {ok}");
    Ok(())
}
