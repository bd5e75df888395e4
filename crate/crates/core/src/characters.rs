//! The formal character ring `Z[h*_Z]` and the characters of the modules the
//! cohomology calculator produces: irreducible `gl_k` blocks (Gelfand-Tsetlin
//! patterns), the exterior-algebra factor `Λ(l₋₁)`, and dual Kac modules.
//!
//! At generic `q` the finite-dimensional irreducible `U_q(gl_k)`-modules of
//! integral dominant highest weight have the classical characters, so block
//! characters are computed classically.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{levi_blocks_of, LeviBlocks, Root, RootData, SubalgebraSpec, Weight};

/// A finite sum `Σ mult · e^weight` over integral weights of `gl(m|n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    m: usize,
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Character {
    pub fn zero(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `e^0`, the character of the trivial module.
    pub fn trivial(m: usize, n: usize) -> Self {
        Self::from_key(m, n, vec![0; m + n])
    }

    fn from_key(m: usize, n: usize, key: Vec<i64>) -> Self {
        let mut c = Self::zero(m, n);
        c.terms.insert(key, BigInt::one());
        c
    }

    /// `e^μ`.
    pub fn monomial(mu: &Weight) -> Result<Self> {
        Ok(Self::from_key(mu.m(), mu.n(), mu.require_integral()?))
    }

    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut c = Self::zero(m, n);
        for (k, v) in terms {
            if k.len() != m + n {
                return Err(Error::WrongLength {
                    expected: m + n,
                    got: k.len(),
                });
            }
            c.add_term(k, v);
        }
        Ok(c)
    }

    fn add_term(&mut self, key: Vec<i64>, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += mult;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn context(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic weight order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.terms
            .keys()
            .map(|k| Weight::from_ints(self.m, self.n, k).expect("stored keys have the right length"))
    }

    pub fn multiplicity(&self, mu: &Weight) -> BigInt {
        mu.to_ints()
            .and_then(|k| self.terms.get(&k).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// The specialization `e^μ ↦ 1`.
    pub fn dim(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Largest weight in lexicographic order, with its multiplicity.
    pub fn lex_max(&self) -> Option<(Weight, BigInt)> {
        self.terms
            .iter()
            .next_back()
            .map(|(k, v)| (Weight::from_ints(self.m, self.n, k).unwrap(), v.clone()))
    }

    fn check(&self, other: &Character) -> Result<()> {
        if self.context() != other.context() {
            return Err(Error::ContextMismatch {
                expected_m: self.m,
                expected_n: self.n,
                m: other.m,
                n: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Character) -> Result<Character> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Character) -> Result<Character> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        Ok(out)
    }

    /// Ring product: `e^μ · e^ν = e^{μ+ν}` (tensor product of `h`-modules).
    pub fn try_mul(&self, other: &Character) -> Result<Character> {
        self.check(other)?;
        let mut out = Character::zero(self.m, self.n);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let key = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.add_term(key, v1 * v2);
            }
        }
        Ok(out)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CharacterJson::from(self)).expect("character JSON is always serializable")
    }

    /// Compact JSON, terms sorted lexicographically by weight.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let dto: CharacterJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("character JSON: {e}")))?;
        dto.try_into()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("character JSON: {e}")))?;
        Self::from_json_value(&v)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    weight: Vec<i64>,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    context: [usize; 2],
    terms: Vec<TermJson>,
}

impl From<&Character> for CharacterJson {
    fn from(c: &Character) -> Self {
        CharacterJson {
            context: [c.m, c.n],
            terms: c
                .terms
                .iter()
                .map(|(k, v)| TermJson {
                    weight: k.clone(),
                    mult: v.to_i64().expect("multiplicity exceeds i64"),
                })
                .collect(),
        }
    }
}

impl TryFrom<CharacterJson> for Character {
    type Error = Error;
    fn try_from(dto: CharacterJson) -> Result<Self> {
        let [m, n] = dto.context;
        Character::from_terms(m, n, dto.terms.into_iter().map(|t| (t.weight, BigInt::from(t.mult))))
    }
}

fn check_block_dominant(mu: &[i64]) -> Result<()> {
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant {
            weight: format!("{mu:?}"),
            what: format!("gl{}", mu.len()),
        });
    }
    Ok(())
}

/// Weights of all Gelfand-Tsetlin patterns with top row `top` (a partition).
fn gt_weights(top: &[i64]) -> BTreeMap<Vec<i64>, BigInt> {
    let k = top.len();
    let mut out = BTreeMap::new();
    // rows[j] has length j+1; rows[k-1] = top.
    fn recurse(row: &[i64], sums: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, BigInt>, k: usize) {
        sums.push(row.iter().sum());
        if row.len() == 1 {
            // sums = [|row_k|, ..., |row_1|]; weight_i = |row_i| - |row_{i-1}|.
            let mut wt = vec![0; k];
            for i in 0..k {
                let s_i = sums[k - 1 - i];
                let s_prev = if i == 0 { 0 } else { sums[k - i] };
                wt[i] = s_i - s_prev;
            }
            *out.entry(wt).or_insert_with(BigInt::zero) += 1;
        } else {
            let mut next = vec![0; row.len() - 1];
            fill(row, 0, &mut next, sums, out, k);
        }
        sums.pop();
    }
    fn fill(
        row: &[i64],
        i: usize,
        next: &mut Vec<i64>,
        sums: &mut Vec<i64>,
        out: &mut BTreeMap<Vec<i64>, BigInt>,
        k: usize,
    ) {
        if i == next.len() {
            let snapshot = next.clone();
            recurse(&snapshot, sums, out, k);
            return;
        }
        for x in row[i + 1]..=row[i] {
            next[i] = x;
            fill(row, i + 1, next, sums, out, k);
        }
    }
    if k == 0 {
        out.insert(Vec::new(), BigInt::one());
        return out;
    }
    recurse(top, &mut Vec::new(), &mut out, k);
    out
}

/// Character of the irreducible `gl_k`-module of highest weight `mu`
/// (non-increasing), returned in the purely even context `(k, 0)`.
pub fn char_irreducible_block(mu: &[i64]) -> Result<Character> {
    check_block_dominant(mu)?;
    let k = mu.len();
    // Shift by the determinant to reach a partition, then shift back.
    let c = mu.last().copied().filter(|&x| x < 0).map_or(0, |x| -x);
    let top: Vec<i64> = mu.iter().map(|x| x + c).collect();
    let terms = gt_weights(&top)
        .into_iter()
        .map(|(wt, mult)| (wt.into_iter().map(|x| x - c).collect(), mult));
    Character::from_terms(k, 0, terms)
}

/// Weyl dimension formula `∏_{i<j} (μ_i − μ_j + j − i)/(j − i)`.
pub fn dim_weyl_block(mu: &[i64]) -> Result<BigInt> {
    check_block_dominant(mu)?;
    let mut acc = BigRational::one();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let num = BigInt::from(mu[i] - mu[j] + (j - i) as i64);
            let den = BigInt::from((j - i) as i64);
            acc *= BigRational::new(num, den);
        }
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

fn embed(block: &Character, start: usize, m: usize, n: usize) -> Character {
    let mut out = Character::zero(m, n);
    for (k, v) in block.terms() {
        let mut key = vec![0; m + n];
        key[start - 1..start - 1 + k.len()].copy_from_slice(k);
        out.add_term(key, v.clone());
    }
    out
}

fn l0_block_weights(blocks: &LeviBlocks, mu: &[i64]) -> Vec<(usize, Vec<i64>)> {
    blocks
        .even_subblocks()
        .into_iter()
        .map(|(s, e)| (s, mu[s - 1..e].to_vec()))
        .collect()
}

fn check_levi_dominant(blocks: &LeviBlocks, mu: &Weight) -> Result<Vec<i64>> {
    let key = mu.require_integral()?;
    for (s, part) in l0_block_weights(blocks, &key) {
        if part.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant {
                weight: mu.paren(),
                what: format!("the Levi factor {blocks} (block starting at {s})"),
            });
        }
    }
    Ok(key)
}

/// Whether `μ` is integral and dominant for the even roots of the Levi.
pub fn is_levi_dominant(blocks: &LeviBlocks, mu: &Weight) -> bool {
    check_levi_dominant(blocks, mu).is_ok()
}

/// Character of the irreducible `l₀`-module of highest weight `μ`: the product
/// of the even sub-block characters (a super block is split at `m`).
pub fn char_levi_irreducible(rd: &RootData, blocks: &LeviBlocks, mu: &Weight) -> Result<Character> {
    rd.check_weight(mu)?;
    let key = check_levi_dominant(blocks, mu)?;
    let (m, n) = (rd.m(), rd.n());
    let mut acc = Character::trivial(m, n);
    for (s, part) in l0_block_weights(blocks, &key) {
        let block = char_irreducible_block(&part)?;
        acc = acc.try_mul(&embed(&block, s, m, n))?;
    }
    Ok(acc)
}

/// Product of the `l₀` block Weyl dimensions at `μ`.
pub fn dim_levi_irreducible(blocks: &LeviBlocks, mu: &Weight) -> Result<BigInt> {
    let key = check_levi_dominant(blocks, mu)?;
    l0_block_weights(blocks, &key)
        .into_iter()
        .map(|(_, part)| dim_weyl_block(&part))
        .product()
}

/// `∏_{γ} (1 + e^{−γ})`, the character of `Λ(l₋₁)`.
pub fn char_lambda_factor(odd_roots: &[Root], m: usize, n: usize) -> Character {
    let mut acc = Character::trivial(m, n);
    for root in odd_roots {
        let mut key = vec![0; m + n];
        key[root.a - 1] -= 1;
        key[root.b - 1] += 1;
        let factor = Character::trivial(m, n)
            .try_add(&Character::from_key(m, n, key))
            .unwrap();
        acc = acc.try_mul(&factor).unwrap();
    }
    acc
}

/// Character of the dual Kac module `K_μ^(l) ≅ Λ(l₋₁) ⊗ L_μ^(l≤0)` over the
/// reductive subalgebra `levi`.
pub fn char_dual_kac(rd: &RootData, levi: &SubalgebraSpec, mu: &Weight) -> Result<Character> {
    let blocks = levi_blocks_of(rd, levi)?;
    let lambda = char_lambda_factor(&blocks.odd_positive_roots(), rd.m(), rd.n());
    lambda.try_mul(&char_levi_irreducible(rd, &blocks, mu)?)
}

/// `dim K_μ^(l) = 2^{|Φ₁⁺(l)|} · dim L_μ`, from the Weyl dimension formula.
pub fn dim_dual_kac(rd: &RootData, levi: &SubalgebraSpec, mu: &Weight) -> Result<BigInt> {
    let blocks = levi_blocks_of(rd, levi)?;
    let odd = blocks.odd_positive_roots().len();
    Ok((BigInt::one() << odd) * dim_levi_irreducible(&blocks, mu)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn trivial_is_identity() {
        let a = Character::from_terms(2, 1, [(vec![1, 0, 0], big(1)), (vec![0, 1, 0], big(2))]).unwrap();
        assert_eq!(a.try_mul(&Character::trivial(2, 1)).unwrap(), a);
    }

    #[test]
    fn binomial_square() {
        let e1 = Character::from_terms(2, 1, [(vec![1, 0, 0], big(1))]).unwrap();
        let e2 = Character::from_terms(2, 1, [(vec![0, 1, 0], big(1))]).unwrap();
        let s = e1.try_add(&e2).unwrap();
        let sq = s.try_mul(&s).unwrap();
        let expected = Character::from_terms(
            2,
            1,
            [(vec![2, 0, 0], big(1)), (vec![1, 1, 0], big(2)), (vec![0, 2, 0], big(1))],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn context_mismatch_errors() {
        assert!(Character::trivial(2, 1).try_mul(&Character::trivial(1, 2)).is_err());
    }

    #[test]
    fn gl2_vector_and_determinant() {
        let v = char_irreducible_block(&[1, 0]).unwrap();
        assert_eq!(v.terms().map(|(k, _)| k.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(v.dim(), big(2));
        let d = char_irreducible_block(&[-3, -3]).unwrap();
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d.multiplicity(&Weight::from_ints(2, 0, &[-3, -3]).unwrap()), big(1));
    }

    #[test]
    fn gl3_adjoint_dimension() {
        assert_eq!(char_irreducible_block(&[2, 1, 0]).unwrap().dim(), big(8));
        assert_eq!(dim_weyl_block(&[2, 1, 0]).unwrap(), big(8));
        // zero weight of the adjoint has multiplicity 2
        let c = char_irreducible_block(&[2, 1, 0]).unwrap();
        assert_eq!(c.multiplicity(&Weight::from_ints(3, 0, &[1, 1, 1]).unwrap()), big(2));
    }

    #[test]
    fn weyl_dim_closed_forms() {
        for d in 0..6 {
            assert_eq!(dim_weyl_block(&[d, 0]).unwrap(), big(d + 1));
        }
        assert_eq!(dim_weyl_block(&[7]).unwrap(), big(1));
        assert!(dim_weyl_block(&[0, 1]).is_err());
        assert!(char_irreducible_block(&[0, 2, 1]).is_err());
    }

    #[test]
    fn levi_irreducible_examples() {
        let rd = RootData::new(2, 1).unwrap();
        let cartan = LeviBlocks::from_edges(&rd, &Default::default());
        let mu = Weight::from_ints(2, 1, &[4, -2, 7]).unwrap();
        let c = char_levi_irreducible(&rd, &cartan, &mu).unwrap();
        assert_eq!(c, Character::monomial(&mu).unwrap());

        let gl2 = LeviBlocks::from_edges(&rd, &[1].into());
        let c = char_levi_irreducible(&rd, &gl2, &Weight::from_ints(2, 1, &[1, 0, 5]).unwrap()).unwrap();
        let keys: Vec<Vec<i64>> = c.terms().map(|(k, _)| k.to_vec()).collect();
        assert_eq!(keys, vec![vec![0, 1, 5], vec![1, 0, 5]]);

        let c = char_levi_irreducible(&rd, &cartan, &Weight::from_ints(2, 1, &[-1, -1, 0]).unwrap()).unwrap();
        assert_eq!(c.dim(), big(1));

        assert!(char_levi_irreducible(&rd, &gl2, &Weight::from_ints(2, 1, &[0, 1, 0]).unwrap()).is_err());
    }

    #[test]
    fn lambda_factor_examples() {
        assert_eq!(char_lambda_factor(&[], 2, 1), Character::trivial(2, 1));
        let rd = RootData::new(1, 1).unwrap();
        let c = char_lambda_factor(&rd.odd_positive_roots(), 1, 1);
        let expected = Character::from_terms(1, 1, [(vec![0, 0], big(1)), (vec![-1, 1], big(1))]).unwrap();
        assert_eq!(c, expected);
        let rd = RootData::new(2, 2).unwrap();
        assert_eq!(char_lambda_factor(&rd.odd_positive_roots(), 2, 2).dim(), big(16));
    }

    #[test]
    fn dual_kac_examples() {
        let rd = RootData::new(1, 1).unwrap();
        let g = SubalgebraSpec::full(&rd);
        let mu = Weight::from_ints(1, 1, &[3, -2]).unwrap();
        let c = char_dual_kac(&rd, &g, &mu).unwrap();
        let expected = Character::from_terms(1, 1, [(vec![3, -2], big(1)), (vec![2, -1], big(1))]).unwrap();
        assert_eq!(c, expected);

        // purely even Levi: no exterior factor
        let rd = RootData::new(2, 1).unwrap();
        let levi = SubalgebraSpec::reductive(&rd, [1].into()).unwrap();
        let blocks = levi_blocks_of(&rd, &levi).unwrap();
        let mu = Weight::from_ints(2, 1, &[2, 0, 1]).unwrap();
        assert_eq!(
            char_dual_kac(&rd, &levi, &mu).unwrap(),
            char_levi_irreducible(&rd, &blocks, &mu).unwrap()
        );

        let g = SubalgebraSpec::full(&rd);
        let mu = Weight::from_ints(2, 1, &[1, 0, 0]).unwrap();
        assert_eq!(char_dual_kac(&rd, &g, &mu).unwrap().dim(), big(8));
        assert_eq!(dim_dual_kac(&rd, &g, &mu).unwrap(), big(8));
        assert!(char_dual_kac(&rd, &SubalgebraSpec::lower_borel(&rd), &mu).is_err());
    }

    #[test]
    fn json_format() {
        let rd = RootData::new(1, 1).unwrap();
        let c = char_dual_kac(&rd, &SubalgebraSpec::full(&rd), &Weight::from_ints(1, 1, &[0, 0]).unwrap()).unwrap();
        let s = c.to_json();
        assert_eq!(
            s,
            r#"{"context":[1,1],"terms":[{"weight":[-1,1],"mult":1},{"weight":[0,0],"mult":1}]}"#
        );
        assert_eq!(Character::from_json(&s).unwrap(), c);
        assert!(Character::from_json(r#"{"context":[1,1],"terms":[{"weight":[1],"mult":1}]}"#).is_err());
    }
}
