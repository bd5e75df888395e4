use crate::error::{Error, Result};

use super::algebra::{counit, counit_word, coproduct, Generator};
use super::matrix::LMatrix;
use super::relations::{verify_relations, Report};
use super::rep::Rep;

/// Antipode and counit axioms for every generator, evaluated in `rep`.
pub fn verify_antipode_counit(rep: &Rep) -> Report {
    let mut report = Report::new();
    let dim = rep.dim();
    let id = LMatrix::identity(dim);
    for g in Generator::all(rep.rank()) {
        let eps = id.scale(&counit(g));
        let x = rep.image(g);
        let mut s_left = LMatrix::zeros(dim, dim);
        let mut s_right = LMatrix::zeros(dim, dim);
        let mut e_left = LMatrix::zeros(dim, dim);
        let mut e_right = LMatrix::zeros(dim, dim);
        for t in coproduct(g) {
            let l = rep.word_image(&t.left);
            let r = rep.word_image(&t.right);
            s_left = s_left + (&rep.antipode_image(&t.left) * &r).scale(&t.coeff);
            s_right = s_right + (&l * &rep.antipode_image(&t.right)).scale(&t.coeff);
            e_left = e_left + r.scale(&(&t.coeff * &counit_word(&t.left)));
            e_right = e_right + l.scale(&(&t.coeff * &counit_word(&t.right)));
        }
        report.check(format!("antipode-left({g})"), &[s_left - eps.clone()]);
        report.check(format!("antipode-right({g})"), &[s_right - eps]);
        report.check(format!("counit-left({g})"), &[e_left - x.clone()]);
        report.check(format!("counit-right({g})"), &[e_right - x.clone()]);
    }
    report
}

/// `(A⊗B)⊗C` and `A⊗(B⊗C)` agree generator by generator.
pub fn verify_coassociativity(a: &Rep, b: &Rep, c: &Rep) -> Result<Report> {
    let left = Rep::tensor(&Rep::tensor(a, b)?, c)?;
    let right = Rep::tensor(a, &Rep::tensor(b, c)?)?;
    let mut report = Report::new();
    for g in Generator::all(a.rank()) {
        report.check(format!("coassociative({g})"), &[left.image(g) - right.image(g)]);
    }
    Ok(report)
}

/// The Hopf structure checks for `U_q(gl(m|n))`:
/// antipode and counit axioms on `V^{⊗k}` for `k ≤ depth`, the relations
/// on `V⊗V` (so `Δ` is an algebra map) and on the counit representation
/// (so `ε` is one), and coassociativity on `V^{⊗3}` when `depth = 2`.
pub fn verify_hopf(m: usize, n: usize, depth: usize) -> Result<Report> {
    if !(1..=2).contains(&depth) {
        return Err(Error::IndexOutOfRange {
            index: depth,
            range: "1..=2".into(),
        });
    }
    let v = Rep::vector(m, n)?;
    let vv = Rep::tensor(&v, &v)?;
    let mut report = Report::new();
    report.extend_prefixed("V/", verify_antipode_counit(&v));
    if depth == 2 {
        report.extend_prefixed("VV/", verify_antipode_counit(&vv));
    }
    report.extend_prefixed("delta/", verify_relations(&vv));
    report.extend_prefixed("counit/", verify_relations(&Rep::trivial(m, n)?));
    if depth == 2 {
        report.extend_prefixed("VVV/", verify_coassociativity(&v, &v, &v)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_depth_two_passes() {
        let r = verify_hopf(1, 1, 2).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.get("V/antipode-left(K1)").is_some());
        assert!(r.get("VV/antipode-right(E12)").is_some());
    }

    #[test]
    fn depth_out_of_range() {
        assert!(verify_hopf(1, 1, 3).is_err());
        assert!(verify_hopf(1, 1, 0).is_err());
    }

    #[test]
    fn wrong_antipode_on_k_would_fail() {
        // S(K) = K fails the axiom: K·K != 1
        let v = Rep::vector(1, 1).unwrap();
        let k = v.image(Generator::K(1));
        assert!(!(k * k - LMatrix::identity(2)).is_zero());
    }
}
