use crate::error::{Error, Result};
use crate::exactring::LaurentPoly;
use crate::rootdata::{Parity, RootData, Weight};

use super::algebra::{antipode_word, coproduct, word_parity, Element, Generator};
use super::matrix::LMatrix;

/// A finite-dimensional representation given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    m: usize,
    n: usize,
    parity: Vec<Parity>,
    weights: Vec<Weight>,
    e: Vec<LMatrix>,
    f: Vec<LMatrix>,
    k: Vec<LMatrix>,
    kinv: Vec<LMatrix>,
}

impl Rep {
    /// The natural `(m+n)`-dimensional representation.
    pub fn vector(m: usize, n: usize) -> Result<Self> {
        let rd = RootData::new(m, n)?;
        let r = m + n;
        let parity: Vec<Parity> = (1..=r).map(|b| rd.index_parity(b)).collect();
        let weights = (1..=r)
            .map(|b| Weight::epsilon(m, n, b))
            .collect::<Result<Vec<_>>>()?;
        // K_a v_b = q^{(ε_b, ε_a)} v_b, and (ε_b, ε_a) = ±δ_ab
        let kdiag = |a: usize, s: i64| {
            LMatrix::diagonal(
                (1..=r)
                    .map(|b| {
                        if b == a {
                            LaurentPoly::q_pow(s * rd.index_parity(a).sign())
                        } else {
                            LaurentPoly::one()
                        }
                    })
                    .collect(),
            )
        };
        Ok(Self {
            m,
            n,
            parity,
            weights,
            e: (1..r).map(|a| LMatrix::unit(r, a - 1, a)).collect(),
            f: (1..r).map(|a| LMatrix::unit(r, a, a - 1)).collect(),
            k: (1..=r).map(|a| kdiag(a, 1)).collect(),
            kinv: (1..=r).map(|a| kdiag(a, -1)).collect(),
        })
    }

    /// The one-dimensional representation through the counit.
    pub fn trivial(m: usize, n: usize) -> Result<Self> {
        RootData::new(m, n)?;
        let r = m + n;
        Ok(Self {
            m,
            n,
            parity: vec![Parity::Even],
            weights: vec![Weight::zero(m, n)],
            e: vec![LMatrix::zeros(1, 1); r - 1],
            f: vec![LMatrix::zeros(1, 1); r - 1],
            k: vec![LMatrix::identity(1); r],
            kinv: vec![LMatrix::identity(1); r],
        })
    }

    /// `A ⊗ B` through the coproduct, with basis `(i, j) ↦ i·dim B + j`.
    pub fn tensor(a: &Rep, b: &Rep) -> Result<Self> {
        if a.context() != b.context() {
            return Err(Error::ContextMismatch {
                expected_m: a.m,
                expected_n: a.n,
                m: b.m,
                n: b.n,
            });
        }
        let (m, n) = a.context();
        let mut parity = Vec::with_capacity(a.dim() * b.dim());
        let mut weights = Vec::with_capacity(a.dim() * b.dim());
        for (pa, wa) in a.parity.iter().zip(&a.weights) {
            for (pb, wb) in b.parity.iter().zip(&b.weights) {
                parity.push(*pa + *pb);
                weights.push(wa.try_add(wb)?);
            }
        }
        let image = |g: Generator| -> LMatrix {
            let mut acc = LMatrix::zeros(a.dim() * b.dim(), a.dim() * b.dim());
            for t in coproduct(g) {
                let x = a.word_image(&t.left);
                let y = b.word_image(&t.right);
                let term = LMatrix::super_kron(&x, &y, word_parity(&t.right, m), &a.parity);
                acc = &acc + &term.scale(&t.coeff);
            }
            acc
        };
        let r = m + n;
        Ok(Self {
            m,
            n,
            parity,
            weights,
            e: (1..r).map(|i| image(Generator::E(i))).collect(),
            f: (1..r).map(|i| image(Generator::F(i))).collect(),
            k: (1..=r).map(|i| image(Generator::K(i))).collect(),
            kinv: (1..=r).map(|i| image(Generator::KInv(i))).collect(),
        })
    }

    /// `V^{⊗k}` for `k ≥ 1`, associated to the left.
    pub fn vector_power(m: usize, n: usize, k: usize) -> Result<Self> {
        let v = Self::vector(m, n)?;
        let mut acc = v.clone();
        for _ in 1..k.max(1) {
            acc = Self::tensor(&acc, &v)?;
        }
        Ok(acc)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Generator image; panics on an out-of-range index.
    pub fn image(&self, g: Generator) -> &LMatrix {
        match g {
            Generator::E(a) => &self.e[a - 1],
            Generator::F(a) => &self.f[a - 1],
            Generator::K(b) => &self.k[b - 1],
            Generator::KInv(b) => &self.kinv[b - 1],
        }
    }

    /// Like [`Rep::image`] but validates the index.
    pub fn try_image(&self, g: Generator) -> Result<&LMatrix> {
        g.validate(self.rank())?;
        Ok(self.image(g))
    }

    /// Returns a copy with one generator image replaced.
    pub fn with_image(&self, g: Generator, mat: LMatrix) -> Result<Self> {
        g.validate(self.rank())?;
        if (mat.rows(), mat.cols()) != (self.dim(), self.dim()) {
            return Err(Error::WrongLength {
                expected: self.dim(),
                got: mat.rows(),
            });
        }
        let mut out = self.clone();
        match g {
            Generator::E(a) => out.e[a - 1] = mat,
            Generator::F(a) => out.f[a - 1] = mat,
            Generator::K(b) => out.k[b - 1] = mat,
            Generator::KInv(b) => out.kinv[b - 1] = mat,
        }
        Ok(out)
    }

    /// Left-to-right matrix product of the word.
    pub fn word_image(&self, word: &[Generator]) -> LMatrix {
        word.iter()
            .fold(LMatrix::identity(self.dim()), |acc, g| &acc * self.image(*g))
    }

    pub fn element_image(&self, x: &Element) -> LMatrix {
        x.terms().iter().fold(LMatrix::zeros(self.dim(), self.dim()), |acc, (c, w)| {
            &acc + &self.word_image(w).scale(c)
        })
    }

    /// Image of `S(word)`.
    pub fn antipode_image(&self, word: &[Generator]) -> LMatrix {
        self.element_image(&antipode_word(word, self.m))
    }

    /// Structural checks: `K K^{-1} = 1`, homogeneity in weight and parity.
    /// Returns the list of violations.
    pub fn check_invariants(&self) -> Vec<String> {
        let mut out = Vec::new();
        let r = self.rank();
        let id = LMatrix::identity(self.dim());
        for b in 1..=r {
            if &self.k[b - 1] * &self.kinv[b - 1] != id {
                out.push(format!("K{b}*K{b}^-1 is not the identity"));
            }
        }
        let (m, n) = self.context();
        for g in Generator::all(r) {
            let shift = match g {
                Generator::E(a) => Weight::epsilon(m, n, a).and_then(|x| x.try_sub(&Weight::epsilon(m, n, a + 1)?)),
                Generator::F(a) => Weight::epsilon(m, n, a + 1).and_then(|x| x.try_sub(&Weight::epsilon(m, n, a)?)),
                _ => Ok(Weight::zero(m, n)),
            }
            .expect("indices in range");
            let gp = g.parity(m);
            for (i, j, _) in self.image(g).nonzero() {
                // the entry (i, j) maps v_j into the v_i direction
                let expected = self.weights[j].try_add(&shift).expect("same context");
                if self.weights[i] != expected {
                    out.push(format!("{g} is not weight-homogeneous at ({i},{j})"));
                }
                if self.parity[i] != self.parity[j] + gp {
                    out.push(format!("{g} has the wrong parity at ({i},{j})"));
                }
            }
        }
        out
    }

    /// The exponent `e` with `K_a v_i = q^e v_i`, if `K_a` acts that way on `v_i`.
    pub fn k_exponent(&self, a: usize, i: usize) -> Option<i64> {
        let d = self.k[a - 1].get(i, i);
        let e = d.min_exp()?;
        (d == &LaurentPoly::q_pow(e)).then_some(e)
    }
}

/// `q_c` as a Laurent monomial: `q` for `c ≤ m`, `q^{-1}` otherwise.
pub fn q_index(m: usize, c: usize) -> LaurentPoly {
    LaurentPoly::q_pow(if c <= m { 1 } else { -1 })
}

/// `q_c^{-1}`.
pub fn q_index_inv(m: usize, c: usize) -> LaurentPoly {
    LaurentPoly::q_pow(if c <= m { -1 } else { 1 })
}

/// The root vector `E_{ab}` evaluated in `rep`, with the default choice
/// `c = min(a, b) + 1` at every recursion step.
pub fn root_vector(rep: &Rep, a: usize, b: usize) -> Result<LMatrix> {
    check_pair(rep, a, b)?;
    if a.abs_diff(b) == 1 {
        return Ok(generator_for(rep, a, b).clone());
    }
    root_vector_via(rep, a, b, a.min(b) + 1)
}

/// `E_{ab}` using the split point `c` at the top level only.
pub fn root_vector_via(rep: &Rep, a: usize, b: usize, c: usize) -> Result<LMatrix> {
    check_pair(rep, a, b)?;
    if !(a.min(b) < c && c < a.max(b)) {
        return Err(Error::IndexOutOfRange {
            index: c,
            range: format!("{}..{}", a.min(b) + 1, a.max(b)),
        });
    }
    let x = root_vector(rep, a, c)?;
    let y = root_vector(rep, c, b)?;
    let coeff = if a < b {
        q_index_inv(rep.m(), c)
    } else {
        q_index(rep.m(), c)
    };
    Ok(&(&x * &y) - &(&y * &x).scale(&coeff))
}

/// Every admissible top-level split of `E_{ab}`, as `(c, matrix)`.
pub fn root_vector_choices(rep: &Rep, a: usize, b: usize) -> Result<Vec<(usize, LMatrix)>> {
    check_pair(rep, a, b)?;
    (a.min(b) + 1..a.max(b))
        .map(|c| root_vector_via(rep, a, b, c).map(|mat| (c, mat)))
        .collect()
}

fn check_pair(rep: &Rep, a: usize, b: usize) -> Result<()> {
    let r = rep.rank();
    for idx in [a, b] {
        if idx == 0 || idx > r {
            return Err(Error::IndexOutOfRange {
                index: idx,
                range: format!("1..={r}"),
            });
        }
    }
    if a == b {
        return Err(Error::IndexOutOfRange {
            index: b,
            range: format!("anything but {a}"),
        });
    }
    Ok(())
}

fn generator_for(rep: &Rep, a: usize, b: usize) -> &LMatrix {
    if b == a + 1 {
        rep.image(Generator::E(a))
    } else {
        rep.image(Generator::F(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_k_images() {
        let v = Rep::vector(1, 1).unwrap();
        assert_eq!(
            v.image(Generator::K(1)),
            &LMatrix::diagonal(vec![LaurentPoly::q(), LaurentPoly::one()])
        );
        assert_eq!(
            v.image(Generator::K(2)),
            &LMatrix::diagonal(vec![LaurentPoly::one(), LaurentPoly::q_pow(-1)])
        );
    }

    #[test]
    fn parity_vector() {
        let v = Rep::vector(2, 1).unwrap();
        assert_eq!(v.parity(), &[Parity::Even, Parity::Even, Parity::Odd]);
    }

    #[test]
    fn invariants_hold() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let v = Rep::vector(m, n).unwrap();
            assert!(v.check_invariants().is_empty());
            let vv = Rep::tensor(&v, &v).unwrap();
            assert_eq!(vv.dim(), (m + n) * (m + n));
            assert!(vv.check_invariants().is_empty(), "{:?}", vv.check_invariants());
        }
    }

    #[test]
    fn tensor_k_eigenvalues_match_weight_sums() {
        let v = Rep::vector(2, 1).unwrap();
        let vv = Rep::tensor(&v, &v).unwrap();
        for i in 0..vv.dim() {
            for a in 1..=3 {
                let w = vv.weights()[i].coord(a).to_integer();
                let sign = if a <= 2 { 1 } else { -1 };
                let expected: i64 = sign * i64::try_from(w).unwrap();
                assert_eq!(vv.k_exponent(a, i), Some(expected));
            }
        }
    }

    #[test]
    fn root_vector_base_case() {
        let v = Rep::vector(2, 1).unwrap();
        assert_eq!(&root_vector(&v, 1, 2).unwrap(), v.image(Generator::E(1)));
        assert_eq!(&root_vector(&v, 3, 2).unwrap(), v.image(Generator::F(2)));
    }

    #[test]
    fn root_vector_e13_squares_to_zero() {
        let v = Rep::vector(2, 1).unwrap();
        let e13 = root_vector(&v, 1, 3).unwrap();
        assert_eq!(e13, LMatrix::unit(3, 0, 2));
        assert!((&e13 * &e13).is_zero());
    }

    #[test]
    fn context_mismatch() {
        let a = Rep::vector(1, 1).unwrap();
        let b = Rep::vector(2, 1).unwrap();
        assert!(matches!(Rep::tensor(&a, &b), Err(Error::ContextMismatch { .. })));
    }
}
