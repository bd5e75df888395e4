use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::{pretty, LaurentPoly};
use crate::rootdata::Parity;

use super::algebra::{word_parity, Generator};
use super::matrix::LMatrix;
use super::rep::Rep;

/// A linear functional on the algebra factoring through `rep`:
/// `f = Σ C_ij π_ij` with `⟨π_ij, y⟩ = ρ(y)_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    coeffs: LMatrix,
}

/// The matrix element `π_ij` of a representation, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixElement {
    pub i: usize,
    pub j: usize,
    pub parity: Parity,
}

impl MatrixElement {
    pub fn new(rep: &Rep, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx >= rep.dim() {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    range: format!("0..{}", rep.dim()),
                });
            }
        }
        Ok(Self {
            i,
            j,
            parity: rep.parity()[i] + rep.parity()[j],
        })
    }

    /// All `π_ij` of `rep`, row-major.
    pub fn all(rep: &Rep) -> Vec<Self> {
        let d = rep.dim();
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| Self::new(rep, i, j).expect("in range"))
            .collect()
    }

    pub fn functional(&self, rep: &Rep) -> Functional {
        Functional {
            coeffs: LMatrix::unit(rep.dim(), self.i, self.j),
        }
    }
}

impl Functional {
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: LMatrix::zeros(dim, dim),
        }
    }

    pub fn from_coeffs(coeffs: LMatrix) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &LMatrix {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// `⟨f, y⟩` for `y` given by its matrix in the representation.
    pub fn pair_matrix(&self, y: &LMatrix) -> LaurentPoly {
        self.coeffs
            .nonzero()
            .map(|(i, j, c)| c * y.get(i, j))
            .sum()
    }

    pub fn pair(&self, rep: &Rep, word: &[Generator]) -> LaurentPoly {
        self.pair_matrix(&rep.word_image(word))
    }

    /// `dR_x f`, defined by `⟨dR_x f, y⟩ = (-1)^{[x]} ⟨f, y x⟩`.
    pub fn dr(&self, rep: &Rep, x: &[Generator]) -> Functional {
        let c = &self.coeffs * &rep.word_image(x).transpose();
        let sign = word_parity(x, rep.m()).sign();
        Functional {
            coeffs: c.scale_int(sign),
        }
    }

    /// `dL_x f`, defined by `⟨dL_x f, y⟩ = (-1)^{[x][f]} ⟨f, S(x) y⟩`.
    /// The sign is applied per matrix element, so `f` need not be homogeneous.
    pub fn dl(&self, rep: &Rep, x: &[Generator]) -> Functional {
        let xp = word_parity(x, rep.m());
        let p = rep.parity();
        let mut signed = self.coeffs.clone();
        if xp.is_odd() {
            for (i, j, c) in self.coeffs.nonzero() {
                if (p[i] + p[j]).is_odd() {
                    signed.set(i, j, -c);
                }
            }
        }
        Functional {
            coeffs: &rep.antipode_image(x).transpose() * &signed,
        }
    }

    /// Terms as `(coefficient, π_ij)` in row-major order.
    pub fn terms(&self) -> Vec<(LaurentPoly, usize, usize)> {
        self.coeffs.nonzero().map(|(i, j, c)| (c.clone(), i, j)).collect()
    }
}

impl std::ops::Add for &Functional {
    type Output = Functional;
    fn add(self, rhs: &Functional) -> Functional {
        Functional {
            coeffs: &self.coeffs + &rhs.coeffs,
        }
    }
}

impl std::ops::Sub for &Functional {
    type Output = Functional;
    fn sub(self, rhs: &Functional) -> Functional {
        Functional {
            coeffs: &self.coeffs - &rhs.coeffs,
        }
    }
}

impl Functional {
    pub fn scale_int(&self, c: i64) -> Functional {
        Functional {
            coeffs: self.coeffs.scale_int(c),
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(c, i, j)| {
                let p = format!("pi{}{}", i + 1, j + 1);
                if c.is_one() {
                    p
                } else {
                    format!("({})*{p}", pretty(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(dL_x π_ij, dR_x π_ij)` expanded in matrix elements.
pub fn translation_actions(rep: &Rep, x: &[Generator], f: &MatrixElement) -> (Functional, Functional) {
    let func = f.functional(rep);
    (func.dl(rep, x), func.dr(rep, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqrep::algebra::antipode_word;

    fn words(rank: usize) -> Vec<Vec<Generator>> {
        let mut out = vec![vec![]];
        for g in Generator::all(rank) {
            out.push(vec![g]);
        }
        for g in Generator::all(rank) {
            for h in Generator::all(rank) {
                if !matches!(g, Generator::K(_) | Generator::KInv(_)) || !matches!(h, Generator::K(_) | Generator::KInv(_)) {
                    out.push(vec![g, h]);
                }
            }
        }
        out
    }

    #[test]
    fn identity_word_is_trivial() {
        let v = Rep::vector(1, 1).unwrap();
        for pi in MatrixElement::all(&v) {
            let (l, r) = translation_actions(&v, &[], &pi);
            assert_eq!(l, pi.functional(&v));
            assert_eq!(r, pi.functional(&v));
        }
    }

    #[test]
    fn matches_pairing_definitions() {
        let v = Rep::vector(2, 1).unwrap();
        let m = v.m();
        let ys = words(v.rank());
        for x in [vec![Generator::E(2)], vec![Generator::F(1), Generator::E(2)], vec![Generator::K(3)]] {
            let xp = word_parity(&x, m);
            let sx = v.element_image(&antipode_word(&x, m));
            let xm = v.word_image(&x);
            for pi in MatrixElement::all(&v) {
                let f = pi.functional(&v);
                let (dl, dr) = (f.dl(&v, &x), f.dr(&v, &x));
                for y in &ys {
                    let ym = v.word_image(y);
                    let want_r = f.pair_matrix(&(&ym * &xm)).scale(&crate::exactring::rat(xp.sign()));
                    assert_eq!(dr.pair_matrix(&ym), want_r);
                    let s = xp.sign_with(pi.parity);
                    let want_l = f.pair_matrix(&(&sx * &ym)).scale(&crate::exactring::rat(s));
                    assert_eq!(dl.pair_matrix(&ym), want_l);
                }
            }
        }
    }

    #[test]
    fn matrix_elements_are_dr_weight_vectors() {
        // dR_{K_a} π_ij = q^{(ε_j, ε_a)} π_ij
        let v = Rep::vector(2, 1).unwrap();
        for pi in MatrixElement::all(&v) {
            for a in 1..=3 {
                let (_, r) = translation_actions(&v, &[Generator::K(a)], &pi);
                let e = if pi.j + 1 != a { 0 } else if a <= 2 { 1 } else { -1 };
                let mut want = LMatrix::zeros(3, 3);
                want.set(pi.i, pi.j, LaurentPoly::q_pow(e));
                assert_eq!(r.coeffs(), &want);
            }
        }
    }
}
