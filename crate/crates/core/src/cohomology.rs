//! Dolbeault cohomology `H^{0,k}(G/P, S(Ξ))` of quantum homogeneous
//! supervector bundles over `GL_q(m|n)`, for a parabolic `P ⊇ B̄`.
//!
//! Two kinds of input module are supported:
//!
//! * [`InputKind::Irreducible`]: a finite-dimensional irreducible `U_q(p)`-module
//!   `L_λ^(p)` whose Levi factor is purely even;
//! * [`InputKind::DualKac`]: the dual Kac module `K_λ^(l)` inflated to `U_q(p)`,
//!   for any reductive Levi factor.
//!
//! In both cases the cohomology vanishes in every degree when `λ` is singular,
//! and otherwise is `K_μ^(g)` in the single degree `|w|`, where `w` is the
//! unique Weyl group element making `μ = w·λ` dominant.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::characters::{char_dual_kac, dim_dual_kac, is_levi_dominant, Character};
use crate::error::{Error, Result};
use crate::rootdata::{levi_factor, LeviBlocks, RootData, SubalgebraSpec, Weight};
use crate::weyl::{dominant_representative, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Irreducible,
    DualKac,
}

impl std::str::FromStr for InputKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irreducible" => Ok(InputKind::Irreducible),
            "dual_kac" => Ok(InputKind::DualKac),
            _ => Err(Error::Parse(format!("input kind '{s}' (use irreducible or dual_kac)"))),
        }
    }
}

/// A validated bundle: parabolic, derived Levi factor, and input highest weight.
#[derive(Clone, Debug)]
pub struct BundleSpec {
    rd: RootData,
    parabolic: SubalgebraSpec,
    levi: SubalgebraSpec,
    blocks: LeviBlocks,
    lambda: Weight,
    input_kind: InputKind,
}

impl BundleSpec {
    pub fn new(rd: RootData, parabolic: SubalgebraSpec, lambda: Weight, input_kind: InputKind) -> Result<Self> {
        rd.check_weight(&lambda)?;
        let (levi, blocks) = levi_factor(&rd, &parabolic)?;
        if !lambda.is_integral() {
            return Err(Error::InputModuleUndefined(format!("{} is not integral", lambda.paren())));
        }
        if !is_levi_dominant(&blocks, &lambda) {
            return Err(Error::InputModuleUndefined(format!(
                "{} is not dominant for the Levi factor {blocks}",
                lambda.paren()
            )));
        }
        if input_kind == InputKind::Irreducible && !blocks.is_purely_even() {
            return Err(Error::HypothesisViolated(format!("Levi factor {blocks} has a super block")));
        }
        Ok(Self {
            rd,
            parabolic,
            levi,
            blocks,
            lambda,
            input_kind,
        })
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    pub fn parabolic(&self) -> &SubalgebraSpec {
        &self.parabolic
    }

    pub fn levi(&self) -> &SubalgebraSpec {
        &self.levi
    }

    pub fn levi_blocks(&self) -> &LeviBlocks {
        &self.blocks
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn input_kind(&self) -> InputKind {
        self.input_kind
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concentrated {
    pub degree: usize,
    pub w: WeylElement,
    pub mu: Weight,
    pub character: Character,
    pub dimension: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyResult {
    /// `H^{0,k} = 0` for every `k`.
    Vanishes,
    /// `H^{0,k} = K_μ^(g)` for `k = degree`, zero otherwise.
    Concentrated(Concentrated),
}

impl CohomologyResult {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, CohomologyResult::Vanishes)
    }

    pub fn concentrated(&self) -> Option<&Concentrated> {
        match self {
            CohomologyResult::Concentrated(c) => Some(c),
            CohomologyResult::Vanishes => None,
        }
    }

    /// `{"status":"vanishes"}` or
    /// `{"status":"concentrated","degree":k,"w":"[..|..]","mu":[..],"dimension":"..","character":{..}}`.
    pub fn to_json_value(&self) -> Value {
        match self {
            CohomologyResult::Vanishes => json!({ "status": "vanishes" }),
            CohomologyResult::Concentrated(c) => json!({
                "status": "concentrated",
                "degree": c.degree,
                "w": c.w.to_string(),
                "mu": c.mu.to_ints().expect("mu is integral"),
                "dimension": c.dimension.to_string(),
                "character": c.character.to_json_value(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("cohomology JSON: {what}"));
        match v.get("status").and_then(Value::as_str) {
            Some("vanishes") => Ok(CohomologyResult::Vanishes),
            Some("concentrated") => {
                let character = Character::from_json_value(v.get("character").ok_or_else(|| bad("missing character"))?)?;
                let (m, n) = character.context();
                let degree = v
                    .get("degree")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| bad("missing degree"))? as usize;
                let w = WeylElement::parse(v.get("w").and_then(Value::as_str).ok_or_else(|| bad("missing w"))?)?;
                let mu: Vec<i64> = serde_json::from_value(v.get("mu").cloned().ok_or_else(|| bad("missing mu"))?)
                    .map_err(|e| bad(&e.to_string()))?;
                let dimension: BigInt = v
                    .get("dimension")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("missing dimension"))?
                    .parse()
                    .map_err(|_| bad("dimension is not an integer"))?;
                Ok(CohomologyResult::Concentrated(Concentrated {
                    degree,
                    w,
                    mu: Weight::from_ints(m, n, &mu)?,
                    character,
                    dimension,
                }))
            }
            _ => Err(bad("status must be 'vanishes' or 'concentrated'")),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("cohomology JSON: {e}")))?;
        Self::from_json_value(&v)
    }
}

/// One-line human form, e.g. `degree=1 mu=(-1,-1|0) dim=4`.
impl fmt::Display for CohomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyResult::Vanishes => write!(f, "vanishes"),
            CohomologyResult::Concentrated(c) => {
                write!(f, "degree={} mu={} dim={}", c.degree, c.mu.paren(), c.dimension)
            }
        }
    }
}

/// Computes `H^{0,•}(G/P, S(Ξ))` for the bundle.
pub fn dolbeault(spec: &BundleSpec) -> Result<CohomologyResult> {
    let rd = &spec.rd;
    let Some((w, mu)) = dominant_representative(&spec.lambda, rd)? else {
        return Ok(CohomologyResult::Vanishes);
    };
    let g = SubalgebraSpec::full(rd);
    let character = char_dual_kac(rd, &g, &mu)?;
    let dimension = dim_dual_kac(rd, &g, &mu)?;
    Ok(CohomologyResult::Concentrated(Concentrated {
        degree: w.length(),
        w,
        mu,
        character,
        dimension,
    }))
}

/// Outcome of running both input kinds on a purely even Levi factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub irreducible: CohomologyResult,
    pub dual_kac: CohomologyResult,
}

impl CrossCheckReport {
    pub fn agrees(&self) -> bool {
        self.irreducible == self.dual_kac
    }

    /// Empty when the two results agree.
    pub fn diff(&self) -> String {
        if self.agrees() {
            return String::new();
        }
        format!(
            "irreducible: {}\ndual_kac:    {}",
            self.irreducible.to_json(),
            self.dual_kac.to_json()
        )
    }
}

/// Runs [`dolbeault`] with both input kinds; on a purely even Levi factor the
/// two input modules coincide, so the results must too.
pub fn cross_check_theorems(rd: &RootData, parabolic: &SubalgebraSpec, lambda: &Weight) -> Result<CrossCheckReport> {
    let irr = BundleSpec::new(rd.clone(), parabolic.clone(), lambda.clone(), InputKind::Irreducible)?;
    let kac = BundleSpec::new(rd.clone(), parabolic.clone(), lambda.clone(), InputKind::DualKac)?;
    Ok(CrossCheckReport {
        irreducible: dolbeault(&irr)?,
        dual_kac: dolbeault(&kac)?,
    })
}

/// One row of a λ-grid scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub lambda: Weight,
    /// `Err` when λ is not a valid input for this parabolic.
    pub result: std::result::Result<CohomologyResult, Error>,
}

/// Evaluates every integral λ with coordinates in `lo..=hi`, in lexicographic order.
pub fn scan(
    rd: &RootData,
    parabolic: &SubalgebraSpec,
    input_kind: InputKind,
    lo: i64,
    hi: i64,
) -> Result<Vec<ScanRow>> {
    levi_factor(rd, parabolic)?;
    let r = rd.rank();
    let mut rows = Vec::new();
    if lo > hi {
        return Ok(rows);
    }
    let mut coords = vec![lo; r];
    loop {
        let lambda = Weight::from_ints(rd.m(), rd.n(), &coords)?;
        let result = BundleSpec::new(rd.clone(), parabolic.clone(), lambda.clone(), input_kind)
            .and_then(|spec| dolbeault(&spec));
        rows.push(ScanRow { lambda, result });
        // odometer, last coordinate fastest
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(rows);
            }
            i -= 1;
            if coords[i] < hi {
                coords[i] += 1;
                break;
            }
            coords[i] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(m: usize, n: usize, theta: &str, lam: &[i64], kind: InputKind) -> Result<BundleSpec> {
        let rd = RootData::new(m, n).unwrap();
        let p = SubalgebraSpec::parse(&rd, theta).unwrap();
        BundleSpec::new(rd, p, Weight::from_ints(m, n, lam).unwrap(), kind)
    }

    #[test]
    fn gl11_degree_zero_dim_two() {
        for (a, b) in [(0, 0), (3, -5), (-2, 7)] {
            let spec = bundle(1, 1, "theta-=all", &[a, b], InputKind::Irreducible).unwrap();
            let c = dolbeault(&spec).unwrap();
            let c = c.concentrated().unwrap();
            assert_eq!(c.degree, 0);
            assert_eq!(c.mu, *spec.lambda());
            assert_eq!(c.dimension, BigInt::from(2));
            assert_eq!(c.character.num_terms(), 2);
        }
    }

    #[test]
    fn gl21_singular_vanishes() {
        let spec = bundle(2, 1, "theta-=all", &[-1, 0, 0], InputKind::Irreducible).unwrap();
        assert_eq!(dolbeault(&spec).unwrap(), CohomologyResult::Vanishes);
    }

    #[test]
    fn gl21_degree_one() {
        let spec = bundle(2, 1, "theta-=all", &[-2, 0, 0], InputKind::Irreducible).unwrap();
        let res = dolbeault(&spec).unwrap();
        assert_eq!(res.to_string(), "degree=1 mu=(-1,-1|0) dim=4");
        assert_eq!(res.concentrated().unwrap().character.dim(), BigInt::from(4));
    }

    #[test]
    fn input_validation() {
        // not l-dominant for the gl2 block
        assert!(matches!(
            bundle(2, 1, "theta+=1;theta-=all", &[0, 1, 0], InputKind::DualKac),
            Err(Error::InputModuleUndefined(_))
        ));
        // super Levi with irreducible input
        assert!(matches!(
            bundle(2, 1, "theta+=2;theta-=all", &[0, 0, 0], InputKind::Irreducible),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(bundle(2, 1, "theta+=2;theta-=all", &[0, 0, 0], InputKind::DualKac).is_ok());
        // upper parabolic
        assert!(matches!(
            bundle(2, 1, "theta+=all", &[0, 0, 0], InputKind::DualKac),
            Err(Error::InvalidSubalgebra(_))
        ));
    }

    #[test]
    fn cross_check_examples() {
        let cases: [(usize, usize, &str, &[i64]); 3] = [
            (2, 1, "theta+=1;theta-=all", &[1, 0, 0]),
            (1, 2, "theta+=2;theta-=all", &[0, 1, 0]),
            (2, 2, "theta+=1,3;theta-=all", &[0, 0, 0, 0]),
        ];
        for (m, n, theta, lam) in cases {
            let rd = RootData::new(m, n).unwrap();
            let p = SubalgebraSpec::parse(&rd, theta).unwrap();
            let rep = cross_check_theorems(&rd, &p, &Weight::from_ints(m, n, lam).unwrap()).unwrap();
            assert!(rep.agrees(), "{}", rep.diff());
        }
    }

    #[test]
    fn json_roundtrip() {
        let spec = bundle(2, 1, "theta-=all", &[-2, 0, 0], InputKind::DualKac).unwrap();
        let res = dolbeault(&spec).unwrap();
        let s = res.to_json();
        assert!(s.starts_with(r#"{"status":"concentrated","degree":1,"w":"[2,1|1]","mu":[-1,-1,0],"dimension":"4","#));
        assert_eq!(CohomologyResult::from_json(&s).unwrap(), res);
        let v = CohomologyResult::Vanishes;
        assert_eq!(v.to_json(), r#"{"status":"vanishes"}"#);
        assert_eq!(CohomologyResult::from_json(&v.to_json()).unwrap(), v);
        assert!(CohomologyResult::from_json(r#"{"status":"maybe"}"#).is_err());
    }

    #[test]
    fn scan_is_lexicographic() {
        let rd = RootData::new(1, 1).unwrap();
        let p = SubalgebraSpec::lower_borel(&rd);
        let rows = scan(&rd, &p, InputKind::DualKac, -1, 1).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0].lambda.to_string(), "-1|-1");
        assert_eq!(rows[1].lambda.to_string(), "-1|0");
        assert!(rows.iter().all(|r| r.result.as_ref().unwrap().concentrated().is_some()));
    }
}
