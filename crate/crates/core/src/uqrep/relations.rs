use std::fmt;

use crate::exactring::LaurentPoly;

use super::algebra::{index_pair, Generator};
use super::matrix::LMatrix;
use super::rep::{q_index, q_index_inv, root_vector, Rep};

/// The outcome of one identity: it holds when every residual is the zero matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Largest `|exponent|` in any nonzero residual entry.
    pub residual_degree: Option<i64>,
}

impl Check {
    pub fn from_residuals(name: impl Into<String>, residuals: &[LMatrix]) -> Self {
        let residual_degree = residuals.iter().filter_map(LMatrix::max_degree).max();
        Self {
            name: name.into(),
            passed: residual_degree.is_none(),
            residual_degree,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.passed, self.residual_degree) {
            (true, _) => write!(f, "REL {} PASS", self.name),
            (false, Some(d)) => write!(f, "REL {} FAIL {d}", self.name),
            (false, None) => write!(f, "REL {} FAIL", self.name),
        }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn check(&mut self, name: impl Into<String>, residuals: &[LMatrix]) {
        self.push(Check::from_residuals(name, residuals));
    }

    /// Appends `other` with every name prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn e_name(a: usize, b: usize) -> String {
    format!("E{}", index_pair(a, b))
}

/// Evaluates every defining relation of the quantum supergroup in `rep`
/// and reports which ones vanish identically in `q`.
pub fn verify_relations(rep: &Rep) -> Report {
    use Generator::*;
    let mut report = Report::new();
    let m = rep.m();
    let r = rep.rank();
    let dim = rep.dim();
    let id = LMatrix::identity(dim);
    let img = |g| rep.image(g);
    let commutator = |x: &LMatrix, y: &LMatrix| x * y - y * x;

    for b in 1..=r {
        report.check(
            format!("inverse(K{b})"),
            &[img(K(b)) * img(KInv(b)) - id.clone(), img(KInv(b)) * img(K(b)) - id.clone()],
        );
    }
    for a in 1..=r {
        for b in a + 1..=r {
            let mut res = Vec::new();
            for x in [K(a), KInv(a)] {
                for y in [K(b), KInv(b)] {
                    res.push(commutator(img(x), img(y)));
                }
            }
            report.check(format!("commute(K{a},K{b})"), &res);
        }
    }

    // K_a X K_a^{-1} = q^{(ε_a, wt X)} X, with (ε_a, ε_c) = ±δ_ac
    let sign = |c: usize| if c <= m { 1 } else { -1 };
    let pair = |a: usize, c: usize| if a == c { sign(c) } else { 0 };
    for a in 1..=r {
        for b in 1..r {
            let up = pair(a, b) - pair(a, b + 1);
            let x = img(E(b));
            report.check(
                format!("weight(K{a},{})", e_name(b, b + 1)),
                &[&(img(K(a)) * x) * img(KInv(a)) - x.scale(&LaurentPoly::q_pow(up))],
            );
            let y = img(F(b));
            report.check(
                format!("weight(K{a},{})", e_name(b + 1, b)),
                &[&(img(K(a)) * y) * img(KInv(a)) - y.scale(&LaurentPoly::q_pow(-up))],
            );
        }
    }

    // [E_a, F_b} with the denominator q_a - q_a^{-1} cleared
    for a in 1..r {
        for b in 1..r {
            let (e, f) = (img(E(a)), img(F(b)));
            let s = if a == m && b == m { -1 } else { 1 };
            let bracket = e * f - (f * e).scale_int(s);
            let res = if a == b {
                let denom = &q_index(m, a) - &q_index_inv(m, a);
                let num = img(K(a)) * img(KInv(a + 1)) - img(KInv(a)) * img(K(a + 1));
                bracket.scale(&denom) - num
            } else {
                bracket
            };
            report.check(format!("bracket({},{})", e_name(a, a + 1), e_name(b + 1, b)), &[res]);
        }
    }

    report.check(format!("nilpotent({})", e_name(m, m + 1)), &[img(E(m)) * img(E(m))]);
    report.check(format!("nilpotent({})", e_name(m + 1, m)), &[img(F(m)) * img(F(m))]);

    for a in 1..r {
        for b in a + 2..r {
            report.check(
                format!("commute({},{})", e_name(a, a + 1), e_name(b, b + 1)),
                &[commutator(img(E(a)), img(E(b)))],
            );
            report.check(
                format!("commute({},{})", e_name(a + 1, a), e_name(b + 1, b)),
                &[commutator(img(F(a)), img(F(b)))],
            );
        }
    }

    let two = LaurentPoly::quantum_two();
    let serre = |x: &LMatrix, y: &LMatrix| {
        let xx = x * x;
        &(&xx * y) - &(&(x * y) * x).scale(&two) + y * &xx
    };
    for a in 1..r {
        if a == m {
            continue;
        }
        for b in [a.wrapping_sub(1), a + 1] {
            if b == 0 || b >= r {
                continue;
            }
            report.check(format!("serre+({a},{b})"), &[serre(img(E(a)), img(E(b)))]);
            report.check(format!("serre-({a},{b})"), &[serre(img(F(a)), img(F(b)))]);
        }
    }

    if m >= 2 && rep.n() >= 2 {
        let up = root_vector(rep, m - 1, m + 2).expect("indices in range");
        let down = root_vector(rep, m + 2, m - 1).expect("indices in range");
        report.check(
            format!("anticommute({},{})", e_name(m - 1, m + 2), e_name(m, m + 1)),
            &[&up * img(E(m)) + img(E(m)) * &up],
        );
        report.check(
            format!("anticommute({},{})", e_name(m + 2, m - 1), e_name(m + 1, m)),
            &[&down * img(F(m)) + img(F(m)) * &down],
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_vector_all_pass() {
        let v = Rep::vector(1, 1).unwrap();
        let rep = verify_relations(&v);
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.get("bracket(E12,E21)").is_some());
    }

    #[test]
    fn gl22_has_degree_four_relations() {
        let v = Rep::vector(2, 2).unwrap();
        let rep = verify_relations(&v);
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.get("anticommute(E14,E23)").unwrap().passed);
        assert!(rep.get("anticommute(E41,E32)").unwrap().passed);
    }

    #[test]
    fn corrupted_k_fails_weight_relations() {
        let v = Rep::vector(1, 1).unwrap();
        let bad = v
            .with_image(
                Generator::K(1),
                LMatrix::diagonal(vec![LaurentPoly::q_pow(2), LaurentPoly::one()]),
            )
            .unwrap();
        let rep = verify_relations(&bad);
        assert!(!rep.all_passed());
        assert!(rep.failures().any(|c| c.name.starts_with("weight(K1,")));
        assert!(rep.failures().any(|c| c.name == "inverse(K1)"));
    }

    #[test]
    fn report_line_format() {
        let c = Check::from_residuals("x", &[LMatrix::diagonal(vec![LaurentPoly::q_pow(-2)])]);
        assert_eq!(c.to_string(), "REL x FAIL 2");
        let ok = Check::from_residuals("y", &[LMatrix::zeros(1, 1)]);
        assert_eq!(ok.to_string(), "REL y PASS");
    }
}
