//! The Weyl group `S_m × S_n` of `g₀`, its dot action, and the
//! dominance/regularity tests that drive the cohomology calculator.

use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::rootdata::{is_dominant_for, Root, RootData, Weight};

/// An element `(σ, τ)` of `S_m × S_n`.
///
/// `σ` is stored as 0-based images; acting on a weight sends the coordinate
/// at position `i` to position `σ(i)`, i.e. `ε_i ↦ ε_{σ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm_m: Vec<usize>,
    perm_n: Vec<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

fn inversions(p: &[usize]) -> usize {
    p.iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .count()
}

impl WeylElement {
    pub fn identity(m: usize, n: usize) -> Self {
        Self {
            perm_m: (0..m).collect(),
            perm_n: (0..n).collect(),
        }
    }

    /// Builds from 0-based image vectors.
    pub fn new(perm_m: Vec<usize>, perm_n: Vec<usize>) -> Result<Self> {
        if !is_permutation(&perm_m) || !is_permutation(&perm_n) {
            return Err(Error::Parse(format!("not a permutation pair: {perm_m:?} | {perm_n:?}")));
        }
        Ok(Self { perm_m, perm_n })
    }

    /// The simple transposition `s_a` swapping `a` and `a+1` (1-based, `a ≠ m`).
    pub fn simple(m: usize, n: usize, a: usize) -> Result<Self> {
        if a == 0 || a >= m + n || a == m {
            return Err(Error::IndexOutOfRange {
                index: a,
                range: format!("1..{} without {m}", m + n),
            });
        }
        let mut w = Self::identity(m, n);
        if a < m {
            w.perm_m.swap(a - 1, a);
        } else {
            w.perm_n.swap(a - m - 1, a - m);
        }
        Ok(w)
    }

    /// Longest element: reversal in each block.
    pub fn longest(m: usize, n: usize) -> Self {
        Self {
            perm_m: (0..m).rev().collect(),
            perm_n: (0..n).rev().collect(),
        }
    }

    /// All `m!·n!` elements.
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        let pm: Vec<Vec<usize>> = (0..m).permutations(m).collect();
        let pn: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        pm.iter()
            .cartesian_product(&pn)
            .map(|(a, b)| Self {
                perm_m: a.clone(),
                perm_n: b.clone(),
            })
            .collect()
    }

    pub fn m(&self) -> usize {
        self.perm_m.len()
    }

    pub fn n(&self) -> usize {
        self.perm_n.len()
    }

    pub fn perm_m(&self) -> &[usize] {
        &self.perm_m
    }

    pub fn perm_n(&self) -> &[usize] {
        &self.perm_n
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m(), self.n())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let comp = |a: &[usize], b: &[usize]| b.iter().map(|&i| a[i]).collect();
        Self {
            perm_m: comp(&self.perm_m, &other.perm_m),
            perm_n: comp(&self.perm_n, &other.perm_n),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = |p: &[usize]| {
            let mut out = vec![0; p.len()];
            for (i, &x) in p.iter().enumerate() {
                out[x] = i;
            }
            out
        };
        Self {
            perm_m: inv(&self.perm_m),
            perm_n: inv(&self.perm_n),
        }
    }

    /// Inversion count in each factor.
    pub fn length(&self) -> usize {
        inversions(&self.perm_m) + inversions(&self.perm_n)
    }

    fn check(&self, lambda: &Weight) -> Result<()> {
        if lambda.context() != (self.m(), self.n()) {
            return Err(Error::ContextMismatch {
                expected_m: self.m(),
                expected_n: self.n(),
                m: lambda.m(),
                n: lambda.n(),
            });
        }
        Ok(())
    }

    /// The linear action `λ ↦ wλ`.
    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        self.check(lambda)?;
        let m = self.m();
        let src = lambda.coords();
        let mut out = src.to_vec();
        for (i, &j) in self.perm_m.iter().enumerate() {
            out[j] = src[i].clone();
        }
        for (i, &j) in self.perm_n.iter().enumerate() {
            out[m + j] = src[m + i].clone();
        }
        Weight::new(m, self.n(), out)
    }

    /// One-line form, e.g. `[2,1|1]` (1-based images).
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("Weyl element '{s}' must look like [..|..]")))?;
        let (l, r) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("Weyl element '{s}' lacks '|'")))?;
        let block = |part: &str| -> Result<Vec<usize>> {
            part.split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Parse(format!("bad image '{}' in '{s}'", t.trim()))),
                })
                .collect()
        };
        Self::new(block(l)?, block(r)?)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(|x| (x + 1).to_string()).join(",");
        write!(f, "[{}|{}]", join(&self.perm_m), join(&self.perm_n))
    }
}

/// The dot action `w·λ = w(λ+ρ) − ρ`.
pub fn dot(w: &WeylElement, lambda: &Weight, rd: &RootData) -> Result<Weight> {
    rd.check_weight(lambda)?;
    let shifted = lambda.try_add(rd.rho())?;
    w.act(&shifted)?.try_sub(rd.rho())
}

/// Dominance with respect to an explicit set of positive even roots.
pub fn is_dominant(lambda: &Weight, rd: &RootData, even_positive: &[Root]) -> bool {
    is_dominant_for(rd, lambda, even_positive)
}

/// `g`-dominance: all positive even roots of `g`.
pub fn is_g_dominant(lambda: &Weight, rd: &RootData) -> bool {
    is_dominant(lambda, rd, &rd.even_positive_roots())
}

fn blocks(rd: &RootData) -> [std::ops::Range<usize>; 2] {
    [0..rd.m(), rd.m()..rd.rank()]
}

/// `g`-regularity: the coordinates of `λ+ρ` are pairwise distinct within each block.
pub fn is_regular(lambda: &Weight, rd: &RootData) -> bool {
    let Ok(shifted) = lambda.try_add(rd.rho()) else {
        return false;
    };
    let c = shifted.coords();
    blocks(rd)
        .into_iter()
        .all(|r| c[r].iter().all_unique())
}

/// The unique `w` making `w·λ` dominant, or `None` when `λ` is singular.
pub fn dominant_representative(lambda: &Weight, rd: &RootData) -> Result<Option<(WeylElement, Weight)>> {
    rd.check_weight(lambda)?;
    if !is_regular(lambda, rd) {
        return Ok(None);
    }
    let shifted = lambda.try_add(rd.rho())?;
    let c = shifted.coords();
    let sort_block = |range: std::ops::Range<usize>| -> Vec<usize> {
        let vals: Vec<&BigRational> = c[range].iter().collect();
        let order: Vec<usize> = (0..vals.len()).sorted_by(|&i, &j| vals[j].cmp(vals[i])).collect();
        // order[pos] = source index placed at pos; σ(source) = pos.
        let mut sigma = vec![0; vals.len()];
        for (pos, &src) in order.iter().enumerate() {
            sigma[src] = pos;
        }
        sigma
    };
    let [rm, rn] = blocks(rd);
    let w = WeylElement::new(sort_block(rm), sort_block(rn))?;
    let mu = dot(&w, lambda, rd)?;
    debug_assert!(is_g_dominant(&mu, rd));
    Ok(Some((w, mu)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w21(c: &[i64]) -> Weight {
        Weight::from_ints(2, 1, c).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let lam = w21(&[2, 0, 5]);
        assert_eq!(WeylElement::identity(2, 1).act(&lam).unwrap(), lam);
        let s1 = WeylElement::simple(2, 1, 1).unwrap();
        assert_eq!(s1.act(&lam).unwrap(), w21(&[0, 2, 5]));
        assert!(s1.compose(&s1).is_identity());
    }

    #[test]
    fn dot_gl21() {
        let rd = RootData::new(2, 1).unwrap();
        let s1 = WeylElement::simple(2, 1, 1).unwrap();
        assert_eq!(dot(&s1, &w21(&[-2, 0, 0]), &rd).unwrap(), w21(&[-1, -1, 0]));
        let lam = w21(&[3, -1, 4]);
        assert_eq!(dot(&WeylElement::identity(2, 1), &lam, &rd).unwrap(), lam);
    }

    #[test]
    fn lengths() {
        assert_eq!(WeylElement::identity(3, 2).length(), 0);
        assert_eq!(WeylElement::simple(2, 1, 1).unwrap().length(), 1);
        assert_eq!(WeylElement::longest(3, 2).length(), 4);
        assert_eq!(WeylElement::all(3, 2).len(), 12);
    }

    #[test]
    fn simple_rejects_odd_index() {
        assert!(WeylElement::simple(2, 2, 2).is_err());
        assert!(WeylElement::simple(2, 2, 4).is_err());
        assert!(WeylElement::simple(2, 2, 3).is_ok());
    }

    #[test]
    fn dominance_examples() {
        let rd = RootData::new(2, 1).unwrap();
        assert!(is_g_dominant(&w21(&[0, 0, 0]), &rd));
        assert!(!is_g_dominant(&w21(&[0, 1, 0]), &rd));
        assert!(is_g_dominant(&w21(&[3, 3, -1]), &rd));
        let rd12 = RootData::new(1, 2).unwrap();
        assert!(is_g_dominant(&Weight::from_ints(1, 2, &[0, 2, 1]).unwrap(), &rd12));
        assert!(!is_g_dominant(&Weight::from_ints(1, 2, &[0, 1, 2]).unwrap(), &rd12));
    }

    #[test]
    fn regularity_examples() {
        let rd = RootData::new(2, 1).unwrap();
        assert!(!is_regular(&w21(&[-1, 0, 0]), &rd));
        assert!(is_regular(&w21(&[0, 0, 0]), &rd));
        let rd11 = RootData::new(1, 1).unwrap();
        for a in -3..=3 {
            for b in -3..=3 {
                assert!(is_regular(&Weight::from_ints(1, 1, &[a, b]).unwrap(), &rd11));
            }
        }
    }

    #[test]
    fn representative_examples() {
        let rd = RootData::new(2, 1).unwrap();
        let (w, mu) = dominant_representative(&w21(&[0, 0, 0]), &rd).unwrap().unwrap();
        assert!(w.is_identity());
        assert_eq!(mu, w21(&[0, 0, 0]));

        let (w, mu) = dominant_representative(&w21(&[-2, 0, 0]), &rd).unwrap().unwrap();
        assert_eq!(w, WeylElement::simple(2, 1, 1).unwrap());
        assert_eq!(w.length(), 1);
        assert_eq!(mu, w21(&[-1, -1, 0]));

        assert_eq!(dominant_representative(&w21(&[-1, 0, 0]), &rd).unwrap(), None);
    }

    #[test]
    fn serialization() {
        let w = WeylElement::simple(2, 1, 1).unwrap();
        assert_eq!(w.to_string(), "[2,1|1]");
        assert_eq!(WeylElement::parse("[2,1|1]").unwrap(), w);
        assert!(WeylElement::parse("[1,1|1]").is_err());
        assert!(WeylElement::parse("2,1|1").is_err());
    }

    #[test]
    fn context_mismatch() {
        let rd = RootData::new(2, 1).unwrap();
        let bad = Weight::from_ints(1, 2, &[0, 0, 0]).unwrap();
        assert!(dot(&WeylElement::identity(2, 1), &bad, &rd).is_err());
        assert!(WeylElement::identity(2, 1).act(&bad).is_err());
    }
}
