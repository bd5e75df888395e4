use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactring::LaurentPoly;
use crate::rootdata::Parity;

/// A Chevalley-type generator of the quantum supergroup, 1-based.
///
/// `E(a)` is `E_{a,a+1}`, `F(a)` is `E_{a+1,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Generator {
    /// Odd exactly for `E(m)` and `F(m)`.
    pub fn parity(self, m: usize) -> Parity {
        match self {
            Generator::E(a) | Generator::F(a) => Parity::from_odd(a == m),
            _ => Parity::Even,
        }
    }

    /// Checks the index against the rank `m + n`.
    pub fn validate(self, rank: usize) -> Result<()> {
        let (idx, hi) = match self {
            Generator::E(a) | Generator::F(a) => (a, rank - 1),
            Generator::K(b) | Generator::KInv(b) => (b, rank),
        };
        if idx == 0 || idx > hi {
            return Err(Error::IndexOutOfRange {
                index: idx,
                range: format!("1..={hi}"),
            });
        }
        Ok(())
    }

    /// All generators for rank `r`, in a fixed order.
    pub fn all(rank: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for a in 1..rank {
            out.push(Generator::E(a));
        }
        for a in 1..rank {
            out.push(Generator::F(a));
        }
        for b in 1..=rank {
            out.push(Generator::K(b));
        }
        for b in 1..=rank {
            out.push(Generator::KInv(b));
        }
        out
    }
}

pub(crate) fn index_pair(a: usize, b: usize) -> String {
    if a < 10 && b < 10 {
        format!("{a}{b}")
    } else {
        format!("{a},{b}")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::E(a) => write!(f, "E{}", index_pair(a, a + 1)),
            Generator::F(a) => write!(f, "E{}", index_pair(a + 1, a)),
            Generator::K(b) => write!(f, "K{b}"),
            Generator::KInv(b) => write!(f, "K{b}^-1"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Accepts `E12`, `E21`, `E3,4`, `K2`, `K2^-1`, `Kinv2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        if let Some(rest) = s.strip_prefix("Kinv") {
            return rest.parse().map(Generator::KInv).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('K') {
            if let Some(idx) = rest.strip_suffix("^-1") {
                return idx.parse().map(Generator::KInv).map_err(|_| bad());
            }
            return rest.parse().map(Generator::K).map_err(|_| bad());
        }
        let rest = s.strip_prefix('E').ok_or_else(bad)?;
        let (a, b): (usize, usize) = if let Some((x, y)) = rest.split_once(',') {
            (x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?)
        } else if rest.len() == 2 {
            (rest[..1].parse().map_err(|_| bad())?, rest[1..].parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        if b == a + 1 {
            Ok(Generator::E(a))
        } else if a == b + 1 {
            Ok(Generator::F(b))
        } else {
            Err(bad())
        }
    }
}

/// A monomial in the generators, read left to right.
pub type Word = Vec<Generator>;

pub fn word_parity(word: &[Generator], m: usize) -> Parity {
    word.iter().fold(Parity::Even, |p, g| p + g.parity(m))
}

pub fn format_word(word: &[Generator]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}

/// Parses `E12*K1^-1*E21`; `1` or the empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "1" {
        return Ok(Vec::new());
    }
    s.split('*').map(str::parse).collect()
}

/// A finite linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: Vec<(LaurentPoly, Word)>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self {
            terms: vec![(LaurentPoly::one(), w)],
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(vec![g])
    }

    pub fn from_terms(terms: Vec<(LaurentPoly, Word)>) -> Self {
        Self {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(LaurentPoly, Word)] {
        &self.terms
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, w)| (d * c, w.clone())).collect())
    }

    pub fn add(&self, other: &Element) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    /// Concatenation product, no normal ordering.
    pub fn mul(&self, other: &Element) -> Self {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((c1 * c2, w));
            }
        }
        Self::from_terms(terms)
    }
}

/// One summand `c · left ⊗ right` of a coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub coeff: LaurentPoly,
    pub left: Word,
    pub right: Word,
}

fn tterm(coeff: i64, left: Word, right: Word) -> TensorTerm {
    TensorTerm {
        coeff: LaurentPoly::from_int(coeff),
        left,
        right,
    }
}

/// `Δ` on a generator.
pub fn coproduct(g: Generator) -> Vec<TensorTerm> {
    use Generator::*;
    match g {
        E(a) => vec![tterm(1, vec![E(a)], vec![K(a), KInv(a + 1)]), tterm(1, vec![], vec![E(a)])],
        F(a) => vec![tterm(1, vec![F(a)], vec![]), tterm(1, vec![KInv(a), K(a + 1)], vec![F(a)])],
        K(b) => vec![tterm(1, vec![K(b)], vec![K(b)])],
        KInv(b) => vec![tterm(1, vec![KInv(b)], vec![KInv(b)])],
    }
}

/// `ε` on a generator.
pub fn counit(g: Generator) -> LaurentPoly {
    match g {
        Generator::E(_) | Generator::F(_) => LaurentPoly::zero(),
        Generator::K(_) | Generator::KInv(_) => LaurentPoly::one(),
    }
}

pub fn counit_word(word: &[Generator]) -> LaurentPoly {
    word.iter().fold(LaurentPoly::one(), |acc, g| &acc * &counit(*g))
}

/// `S` on a generator.
pub fn antipode(g: Generator) -> Element {
    use Generator::*;
    let minus = LaurentPoly::from_int(-1);
    match g {
        E(a) => Element::from_terms(vec![(minus, vec![E(a), KInv(a), K(a + 1)])]),
        F(a) => Element::from_terms(vec![(minus, vec![K(a), KInv(a + 1), F(a)])]),
        K(b) => Element::generator(KInv(b)),
        KInv(b) => Element::generator(K(b)),
    }
}

/// `S` on a word: a super anti-homomorphism,
/// `S(x1…xk) = (-1)^{Σ_{i<j}[xi][xj]} S(xk)…S(x1)`.
pub fn antipode_word(word: &[Generator], m: usize) -> Element {
    let odd = word.iter().filter(|g| g.parity(m).is_odd()).count();
    let sign = if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
    let mut acc = Element::one();
    for g in word.iter().rev() {
        acc = acc.mul(&antipode(*g));
    }
    acc.scale(&LaurentPoly::from_int(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in Generator::all(4) {
            let s = g.to_string();
            assert_eq!(s.parse::<Generator>().unwrap(), g, "{s}");
        }
        assert_eq!("E21".parse::<Generator>().unwrap(), Generator::F(1));
        assert_eq!("Kinv3".parse::<Generator>().unwrap(), Generator::KInv(3));
        assert!("E13".parse::<Generator>().is_err());
    }

    #[test]
    fn parity_of_generators() {
        assert!(Generator::E(2).parity(2).is_odd());
        assert!(!Generator::E(1).parity(2).is_odd());
        assert!(!Generator::K(2).parity(2).is_odd());
    }

    #[test]
    fn antipode_sign_on_odd_pair() {
        // two odd letters pick up one sign
        let w = vec![Generator::E(1), Generator::F(1)];
        let s = antipode_word(&w, 1);
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[0].0, LaurentPoly::from_int(-1));
        assert_eq!(s.terms()[0].1.len(), 6);
    }

    #[test]
    fn word_parsing() {
        let w = parse_word("E12*K1^-1").unwrap();
        assert_eq!(w, vec![Generator::E(1), Generator::KInv(1)]);
        assert_eq!(format_word(&w), "E12*K1^-1");
        assert!(parse_word("1").unwrap().is_empty());
    }
}
