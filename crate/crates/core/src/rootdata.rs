//! Root data of `gl(m|n)` relative to the distinguished (upper triangular)
//! Borel subalgebra, plus the Θ-set description of regular subalgebras.
//!
//! Indices of the standard basis `ε_1..ε_{m+n}` are 1-based throughout the
//! public API, matching the usual matrix-unit notation.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::{rat, ratio};

/// Sign of the odd half-sum in ρ = ρ₀ + ODD_RHO_SIGN·ρ₁.
///
/// `-1` gives the supersymmetric convention ρ = ρ₀ − ρ₁.
pub const ODD_RHO_SIGN: i64 = -1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{[self]}`.
    pub fn sign(self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }

    /// `(-1)^{[self][other]}`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_odd(self.is_odd() != rhs.is_odd())
    }
}

/// A weight: a rational coordinate vector in the ε-basis of `h*` for `gl(m|n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    m: usize,
    n: usize,
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(m: usize, n: usize, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != m + n {
            return Err(Error::WrongLength {
                expected: m + n,
                got: coords.len(),
            });
        }
        Ok(Self { m, n, coords })
    }

    pub fn from_ints(m: usize, n: usize, coords: &[i64]) -> Result<Self> {
        Self::new(m, n, coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            coords: vec![BigRational::zero(); m + n],
        }
    }

    /// The basis weight `ε_a`, 1-based.
    pub fn epsilon(m: usize, n: usize, a: usize) -> Result<Self> {
        check_index(a, m + n)?;
        let mut w = Self::zero(m, n);
        w.coords[a - 1] = BigRational::one();
        Ok(w)
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

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// The coordinate at 1-based index `a`.
    pub fn coord(&self, a: usize) -> &BigRational {
        &self.coords[a - 1]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn require_integral(&self) -> Result<Vec<i64>> {
        self.to_ints()
            .ok_or_else(|| Error::NotIntegral(self.to_string()))
    }

    pub fn same_context(&self, other: &Weight) -> Result<()> {
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

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.same_context(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.same_context(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Weight {
        Weight {
            m: self.m,
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &BigRational) -> Weight {
        Weight {
            m: self.m,
            n: self.n,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Parses the block-delimited form `"2,0|-1"`; the split at `|` fixes `(m, n)`.
    pub fn parse(s: &str) -> Result<Self> {
        let (left, right) = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight '{s}' lacks the '|' block separator")))?;
        let parse_block = |part: &str| -> Result<Vec<BigRational>> {
            if part.trim().is_empty() {
                return Err(Error::Parse(format!("weight '{s}' has an empty block")));
            }
            part.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<BigRational>()
                        .map_err(|_| Error::Parse(format!("bad coordinate '{}' in weight '{s}'", t.trim())))
                })
                .collect()
        };
        let l = parse_block(left)?;
        let r = parse_block(right)?;
        let (m, n) = (l.len(), r.len());
        Weight::new(m, n, l.into_iter().chain(r).collect())
    }

    /// Parenthesized display, e.g. `(-1,-1|0)`.
    pub fn paren(&self) -> String {
        format!("({self})")
    }
}

/// Block-delimited form, e.g. `2,0|-1`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |cs: &[BigRational]| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.coords[..self.m]), join(&self.coords[self.m..]))
    }
}

fn check_index(a: usize, max: usize) -> Result<()> {
    if a == 0 || a > max {
        return Err(Error::IndexOutOfRange {
            index: a,
            range: format!("1..={max}"),
        });
    }
    Ok(())
}

/// The root `ε_a − ε_b` (1-based, `a ≠ b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub a: usize,
    pub b: usize,
    pub parity: Parity,
}

impl Root {
    pub fn new(m: usize, a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        let odd = (a <= m) != (b <= m);
        Root {
            a,
            b,
            parity: Parity::from_odd(odd),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.a < self.b
    }

    pub fn is_odd(&self) -> bool {
        self.parity.is_odd()
    }

    pub fn weight(&self, m: usize, n: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        w.coords[self.a - 1] = rat(1);
        w.coords[self.b - 1] = rat(-1);
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.a, self.b)
    }
}

/// The full root system of `gl(m|n)` with parities and ρ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    m: usize,
    n: usize,
    all_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    simple_roots: Vec<Root>,
    rho: Weight,
}

impl RootData {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::NotSuperSetting { m, n });
        }
        let r = m + n;
        let all_roots: Vec<Root> = (1..=r)
            .flat_map(|a| (1..=r).filter(move |&b| b != a).map(move |b| Root::new(m, a, b)))
            .collect();
        let positive_roots: Vec<Root> = all_roots.iter().copied().filter(Root::is_positive).collect();
        let simple_roots = (1..r).map(|a| Root::new(m, a, a + 1)).collect();

        let half = ratio(1, 2);
        let mut rho = Weight::zero(m, n);
        for root in &positive_roots {
            let sign = if root.is_odd() { rat(ODD_RHO_SIGN) } else { rat(1) };
            let c = &half * &sign;
            rho.coords[root.a - 1] += &c;
            rho.coords[root.b - 1] -= &c;
        }
        Ok(RootData {
            m,
            n,
            all_roots,
            positive_roots,
            simple_roots,
            rho,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn all_roots(&self) -> &[Root] {
        &self.all_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn even_positive_roots(&self) -> Vec<Root> {
        self.positive_roots.iter().copied().filter(|r| !r.is_odd()).collect()
    }

    pub fn odd_positive_roots(&self) -> Vec<Root> {
        self.positive_roots.iter().copied().filter(Root::is_odd).collect()
    }

    /// Parity of the basis index `a`: even for `a ≤ m`.
    pub fn index_parity(&self, a: usize) -> Parity {
        Parity::from_odd(a > self.m)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.context() != (self.m, self.n) {
            return Err(Error::ContextMismatch {
                expected_m: self.m,
                expected_n: self.n,
                m: w.m,
                n: w.n,
            });
        }
        Ok(())
    }

    pub fn root_weight(&self, root: &Root) -> Weight {
        root.weight(self.m, self.n)
    }

    /// `(μ, ν) = Σ_{a≤m} μ_a ν_a − Σ_{a>m} μ_a ν_a`.
    pub fn form(&self, mu: &Weight, nu: &Weight) -> Result<BigRational> {
        self.check_weight(mu)?;
        self.check_weight(nu)?;
        let mut acc = BigRational::zero();
        for (i, (x, y)) in mu.coords.iter().zip(&nu.coords).enumerate() {
            if i < self.m {
                acc += x * y;
            } else {
                acc -= x * y;
            }
        }
        Ok(acc)
    }

    /// `(μ, α)` for a root, without materializing the root weight.
    pub fn pair_root(&self, mu: &Weight, root: &Root) -> BigRational {
        let s = |i: usize| if i <= self.m { rat(1) } else { rat(-1) };
        mu.coord(root.a) * s(root.a) - mu.coord(root.b) * s(root.b)
    }

    /// `(α, α)`: 2 for even roots in the first block, −2 in the second, 0 for odd.
    pub fn root_norm(&self, root: &Root) -> BigRational {
        let s = |i: usize| if i <= self.m { rat(1) } else { rat(-1) };
        s(root.a) + s(root.b)
    }
}

/// A regular subalgebra, given by `Θ₀ ⊆ I` and `Θ₊, Θ₋ ⊆ I′`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubalgebraSpec {
    pub theta0: BTreeSet<usize>,
    pub theta_plus: BTreeSet<usize>,
    pub theta_minus: BTreeSet<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubalgebraKind {
    Reductive,
    ParabolicLower,
    ParabolicUpper,
}

/// Result of [`classify_subalgebra`]. Every Θ-spec is regular; `kinds` lists
/// the finer classes that apply. An empty list is the "other" class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kinds: Vec<SubalgebraKind>,
}

impl Classification {
    pub fn is(&self, kind: SubalgebraKind) -> bool {
        self.kinds.contains(&kind)
    }

    pub fn is_reductive(&self) -> bool {
        self.is(SubalgebraKind::Reductive)
    }

    pub fn is_parabolic(&self) -> bool {
        self.is(SubalgebraKind::ParabolicLower) || self.is(SubalgebraKind::ParabolicUpper)
    }

    pub fn is_other(&self) -> bool {
        self.kinds.is_empty()
    }
}

fn full_set(range: std::ops::RangeInclusive<usize>) -> BTreeSet<usize> {
    range.collect()
}

impl SubalgebraSpec {
    pub fn new(
        rd: &RootData,
        theta0: BTreeSet<usize>,
        theta_plus: BTreeSet<usize>,
        theta_minus: BTreeSet<usize>,
    ) -> Result<Self> {
        let r = rd.rank();
        for &a in &theta0 {
            check_index(a, r)?;
        }
        for &a in theta_plus.iter().chain(&theta_minus) {
            check_index(a, r - 1)?;
        }
        Ok(Self {
            theta0,
            theta_plus,
            theta_minus,
        })
    }

    /// The Cartan subalgebra `h`.
    pub fn cartan(rd: &RootData) -> Self {
        Self::reductive(rd, BTreeSet::new()).unwrap()
    }

    /// The whole of `g`.
    pub fn full(rd: &RootData) -> Self {
        Self::reductive(rd, full_set(1..=rd.rank() - 1)).unwrap()
    }

    /// The lower Borel `b̄`.
    pub fn lower_borel(rd: &RootData) -> Self {
        Self::lower_parabolic(rd, BTreeSet::new()).unwrap()
    }

    /// The reductive subalgebra with `Θ₊ = Θ₋ = theta`.
    pub fn reductive(rd: &RootData, theta: BTreeSet<usize>) -> Result<Self> {
        Self::new(rd, full_set(1..=rd.rank()), theta.clone(), theta)
    }

    /// The parabolic containing `b̄` with the given `Θ₊`.
    pub fn lower_parabolic(rd: &RootData, theta_plus: BTreeSet<usize>) -> Result<Self> {
        Self::new(rd, full_set(1..=rd.rank()), theta_plus, full_set(1..=rd.rank() - 1))
    }

    /// Parses `"theta+=1,3;theta-=all"`. `all` means `I′` (or `I` for
    /// `theta0`); an omitted `theta0` defaults to `I`, omitted `theta±` to ∅.
    pub fn parse(rd: &RootData, s: &str) -> Result<Self> {
        let r = rd.rank();
        let mut theta0 = full_set(1..=r);
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for clause in s.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (key, val) = clause
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("Θ clause '{clause}' needs '='")))?;
            let key = key.trim();
            let all = if key == "theta0" { r } else { r - 1 };
            let set = parse_index_set(val.trim(), all)?;
            match key {
                "theta0" => theta0 = set,
                "theta+" => plus = set,
                "theta-" => minus = set,
                _ => return Err(Error::Parse(format!("unknown Θ key '{key}' (use theta0, theta+, theta-)"))),
            }
        }
        Self::new(rd, theta0, plus, minus)
    }
}

fn parse_index_set(val: &str, all: usize) -> Result<BTreeSet<usize>> {
    if val == "all" {
        return Ok(full_set(1..=all));
    }
    val.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad Θ index '{t}'"))))
        .collect()
}

impl fmt::Display for SubalgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<usize>| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "theta0={};theta+={};theta-={}",
            join(&self.theta0),
            join(&self.theta_plus),
            join(&self.theta_minus)
        )
    }
}

pub fn classify_subalgebra(rd: &RootData, spec: &SubalgebraSpec) -> Classification {
    let i_all = full_set(1..=rd.rank());
    let i_prime = full_set(1..=rd.rank() - 1);
    let mut kinds = Vec::new();
    if spec.theta0 == i_all {
        if spec.theta_plus == spec.theta_minus {
            kinds.push(SubalgebraKind::Reductive);
        }
        if spec.theta_minus == i_prime {
            kinds.push(SubalgebraKind::ParabolicLower);
        }
        if spec.theta_plus == i_prime {
            kinds.push(SubalgebraKind::ParabolicUpper);
        }
    }
    Classification { kinds }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// `gl_k`, entirely inside one parity block.
    Even { k: usize },
    /// `gl(m′|n′)`, straddling the index `m`.
    Super { m: usize, n: usize },
}

/// A connected interval `start..=end` of `I` (1-based, inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LeviBlock {
    pub start: usize,
    pub end: usize,
    pub kind: BlockKind,
}

impl LeviBlock {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.start <= a && a <= self.end
    }

    pub fn is_super(&self) -> bool {
        matches!(self.kind, BlockKind::Super { .. })
    }
}

impl fmt::Display for LeviBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BlockKind::Even { k } => write!(f, "gl{k}[{}..{}]", self.start, self.end),
            BlockKind::Super { m, n } => write!(f, "gl({m}|{n})[{}..{}]", self.start, self.end),
        }
    }
}

/// Block decomposition of a reductive subalgebra into `gl_k` and at most one
/// `gl(m′|n′)` factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviBlocks {
    m: usize,
    blocks: Vec<LeviBlock>,
}

impl LeviBlocks {
    /// Connected components of the graph with edges `(a, a+1)` for `a ∈ edges`.
    pub fn from_edges(rd: &RootData, edges: &BTreeSet<usize>) -> Self {
        let m = rd.m();
        let mut blocks = Vec::new();
        let mut start = 1;
        for a in 1..=rd.rank() {
            if a == rd.rank() || !edges.contains(&a) {
                let kind = if start <= m && m < a {
                    BlockKind::Super { m: m - start + 1, n: a - m }
                } else {
                    BlockKind::Even { k: a - start + 1 }
                };
                blocks.push(LeviBlock { start, end: a, kind });
                start = a + 1;
            }
        }
        LeviBlocks { m, blocks }
    }

    pub fn blocks(&self) -> &[LeviBlock] {
        &self.blocks
    }

    pub fn is_purely_even(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_super())
    }

    pub fn super_block(&self) -> Option<&LeviBlock> {
        self.blocks.iter().find(|b| b.is_super())
    }

    /// Intervals of `l₀ = l ∩ g₀`: super blocks split at `m`.
    pub fn even_subblocks(&self) -> Vec<(usize, usize)> {
        let m = self.m;
        let mut out = Vec::new();
        for b in &self.blocks {
            if b.is_super() {
                out.push((b.start, m));
                out.push((m + 1, b.end));
            } else {
                out.push((b.start, b.end));
            }
        }
        out
    }

    /// Positive even roots of the Levi, i.e. of `l₀`.
    pub fn even_positive_roots(&self) -> Vec<Root> {
        let m = self.m;
        self.even_subblocks()
            .into_iter()
            .flat_map(|(s, e)| (s..=e).flat_map(move |a| (a + 1..=e).map(move |b| Root::new(m, a, b))))
            .collect()
    }

    /// Odd positive roots `ε_a − ε_b` (`a ≤ m < b`) lying in one block.
    pub fn odd_positive_roots(&self) -> Vec<Root> {
        let m = self.m;
        self.blocks
            .iter()
            .filter(|b| b.is_super())
            .flat_map(|b| (b.start..=m).flat_map(move |a| (m + 1..=b.end).map(move |c| Root::new(m, a, c))))
            .collect()
    }
}

impl fmt::Display for LeviBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Levi factor of a parabolic containing `b̄`.
pub fn levi_factor(rd: &RootData, parabolic: &SubalgebraSpec) -> Result<(SubalgebraSpec, LeviBlocks)> {
    let class = classify_subalgebra(rd, parabolic);
    if !class.is(SubalgebraKind::ParabolicLower) {
        let why = if class.is(SubalgebraKind::ParabolicUpper) {
            "upper parabolics (containing b) are not supported; need theta-=all"
        } else {
            "not a parabolic subalgebra containing the lower Borel; need theta0=all and theta-=all"
        };
        return Err(Error::InvalidSubalgebra(format!("{parabolic}: {why}")));
    }
    let common: BTreeSet<usize> = parabolic
        .theta_plus
        .intersection(&parabolic.theta_minus)
        .copied()
        .collect();
    let levi = SubalgebraSpec::reductive(rd, common.clone())?;
    Ok((levi, LeviBlocks::from_edges(rd, &common)))
}

/// Block structure of a reductive spec.
pub fn levi_blocks_of(rd: &RootData, levi: &SubalgebraSpec) -> Result<LeviBlocks> {
    if !classify_subalgebra(rd, levi).is_reductive() {
        return Err(Error::InvalidSubalgebra(format!("{levi}: not reductive (need theta0=all, theta+=theta-)")));
    }
    Ok(LeviBlocks::from_edges(rd, &levi.theta_plus))
}

/// `Φ₁⁺(l)` for a reductive `l`.
pub fn odd_positive_roots_of(rd: &RootData, levi: &SubalgebraSpec) -> Result<Vec<Root>> {
    Ok(levi_blocks_of(rd, levi)?.odd_positive_roots())
}

/// Whether `2(λ,α)/(α,α)` is a non-negative integer for every `α` in `roots`
/// (which must be even).
pub fn is_dominant_for(rd: &RootData, lambda: &Weight, roots: &[Root]) -> bool {
    roots.iter().all(|root| {
        debug_assert!(!root.is_odd());
        let v = rat(2) * rd.pair_root(lambda, root) / rd.root_norm(root);
        v.is_integer() && !v.is_negative()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, n: usize, c: &[i64]) -> Weight {
        Weight::from_ints(m, n, c).unwrap()
    }

    #[test]
    fn gl11_has_two_odd_roots() {
        let rd = RootData::new(1, 1).unwrap();
        assert_eq!(rd.all_roots().len(), 2);
        assert!(rd.all_roots().iter().all(Root::is_odd));
    }

    #[test]
    fn rho_gl21() {
        let rd = RootData::new(2, 1).unwrap();
        assert_eq!(rd.rho(), &w(2, 1, &[0, -1, 1]));
    }

    #[test]
    fn gl22_root_counts() {
        let rd = RootData::new(2, 2).unwrap();
        assert_eq!(rd.even_positive_roots().len(), 2);
        assert_eq!(rd.odd_positive_roots().len(), 4);
        assert_eq!(rd.all_roots().len(), 12);
    }

    #[test]
    fn rejects_non_super() {
        assert_eq!(RootData::new(0, 2), Err(Error::NotSuperSetting { m: 0, n: 2 }));
        assert!(RootData::new(3, 0).is_err());
    }

    #[test]
    fn bilinear_form_signature() {
        let rd = RootData::new(2, 1).unwrap();
        let e = |a| Weight::epsilon(2, 1, a).unwrap();
        assert_eq!(rd.form(&e(1), &e(1)).unwrap(), rat(1));
        assert_eq!(rd.form(&e(3), &e(3)).unwrap(), rat(-1));
        assert_eq!(rd.form(&e(1), &e(2)).unwrap(), rat(0));
        assert!(rd.form(&e(1), &Weight::zero(1, 2)).is_err());
    }

    #[test]
    fn classification() {
        let rd = RootData::new(2, 1).unwrap();
        let h = SubalgebraSpec::cartan(&rd);
        assert_eq!(classify_subalgebra(&rd, &h).kinds, vec![SubalgebraKind::Reductive]);
        let bbar = SubalgebraSpec::lower_borel(&rd);
        assert_eq!(classify_subalgebra(&rd, &bbar).kinds, vec![SubalgebraKind::ParabolicLower]);
        let g = SubalgebraSpec::full(&rd);
        let c = classify_subalgebra(&rd, &g);
        assert!(c.is_reductive() && c.is(SubalgebraKind::ParabolicLower) && c.is(SubalgebraKind::ParabolicUpper));
        let odd = SubalgebraSpec::new(&rd, [1].into(), [1].into(), BTreeSet::new()).unwrap();
        assert!(classify_subalgebra(&rd, &odd).is_other());
    }

    #[test]
    fn levi_blocks_gl21() {
        let rd = RootData::new(2, 1).unwrap();
        let (levi, blocks) = levi_factor(&rd, &SubalgebraSpec::lower_borel(&rd)).unwrap();
        assert_eq!(levi, SubalgebraSpec::cartan(&rd));
        assert_eq!(blocks.blocks().len(), 3);
        assert!(blocks.blocks().iter().all(|b| b.kind == BlockKind::Even { k: 1 }));

        let p1 = SubalgebraSpec::lower_parabolic(&rd, [1].into()).unwrap();
        let (_, b1) = levi_factor(&rd, &p1).unwrap();
        assert_eq!(b1.to_string(), "[gl2[1..2], gl1[3..3]]");

        let p2 = SubalgebraSpec::lower_parabolic(&rd, [2].into()).unwrap();
        let (_, b2) = levi_factor(&rd, &p2).unwrap();
        assert_eq!(b2.to_string(), "[gl1[1..1], gl(1|1)[2..3]]");
        assert_eq!(b2.even_subblocks(), vec![(1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn levi_rejects_upper_and_non_parabolic() {
        let rd = RootData::new(2, 1).unwrap();
        let upper = SubalgebraSpec::new(&rd, (1..=3).collect(), [1, 2].into(), BTreeSet::new()).unwrap();
        assert!(matches!(levi_factor(&rd, &upper), Err(Error::InvalidSubalgebra(_))));
        assert!(levi_factor(&rd, &SubalgebraSpec::cartan(&rd)).is_err());
    }

    #[test]
    fn odd_roots_of_levi() {
        let rd = RootData::new(1, 1).unwrap();
        let full = odd_positive_roots_of(&rd, &SubalgebraSpec::full(&rd)).unwrap();
        assert_eq!(full, vec![Root::new(1, 1, 2)]);
        assert!(odd_positive_roots_of(&rd, &SubalgebraSpec::cartan(&rd)).unwrap().is_empty());

        let rd = RootData::new(2, 2).unwrap();
        let levi = SubalgebraSpec::reductive(&rd, [2].into()).unwrap();
        assert_eq!(odd_positive_roots_of(&rd, &levi).unwrap(), vec![Root::new(2, 2, 3)]);
        let bbar = SubalgebraSpec::lower_borel(&rd);
        assert!(odd_positive_roots_of(&rd, &bbar).is_err());
    }

    #[test]
    fn weight_text_format() {
        let x = Weight::parse("2,0|-1").unwrap();
        assert_eq!(x, w(2, 1, &[2, 0, -1]));
        assert_eq!(x.to_string(), "2,0|-1");
        assert_eq!(x.paren(), "(2,0|-1)");
        assert!(Weight::parse("2,0,-1").is_err());
        assert!(Weight::parse("2,x|1").is_err());
        assert!(Weight::parse("|1").is_err());
        let h = Weight::parse("1/2|-3/2").unwrap();
        assert!(!h.is_integral());
    }

    #[test]
    fn theta_text_format() {
        let rd = RootData::new(2, 2).unwrap();
        let p = SubalgebraSpec::parse(&rd, "theta+=1,3;theta-=all").unwrap();
        assert_eq!(p, SubalgebraSpec::lower_parabolic(&rd, [1, 3].into()).unwrap());
        let q = SubalgebraSpec::parse(&rd, &p.to_string()).unwrap();
        assert_eq!(p, q);
        assert!(SubalgebraSpec::parse(&rd, "theta+=4").is_err());
        assert!(SubalgebraSpec::parse(&rd, "theta0=0").is_err());
        assert!(SubalgebraSpec::parse(&rd, "beta=1").is_err());
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd.sign_with(Parity::Odd), -1);
        assert_eq!(Parity::Odd.sign_with(Parity::Even), 1);
    }
}
