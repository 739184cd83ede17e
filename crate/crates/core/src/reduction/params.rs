//! Gadget size parameters, their soundness constraints, and the counting
//! formulas `α1`, `α2`, `φ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex gadgets are `(p, q)`-grained, edge gadgets `(p_e, q_e)`-grained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub p: u64,
    pub q: u64,
    pub p_e: u64,
    pub q_e: u64,
}

impl ParamSet {
    pub fn new(p: u64, q: u64, p_e: u64, q_e: u64) -> Self {
        ParamSet { p, q, p_e, q_e }
    }

    pub fn uniform(s: u64) -> Self {
        ParamSet::new(s, s, s, s)
    }

    pub fn is_positive(&self) -> bool {
        self.p > 0 && self.q > 0 && self.p_e > 0 && self.q_e > 0
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.p, self.q, self.p_e, self.q_e)
    }
}

/// `p = 25n² + 30n`, `q = 12n² + 12n + 1`, `p' = 11n² + 6n`, `q' = 5n² + 1`.
pub fn closed_form_parameters(n: u64) -> Result<ParamSet> {
    if n < 4 {
        return Err(Error::Precondition(format!("parameters need n >= 4, got {n}")));
    }
    let eval = || -> Option<ParamSet> {
        let n2 = n.checked_mul(n)?;
        Some(ParamSet {
            p: n2.checked_mul(25)?.checked_add(n.checked_mul(30)?)?,
            q: n2.checked_mul(12)?.checked_add(n.checked_mul(12)?)?.checked_add(1)?,
            p_e: n2.checked_mul(11)?.checked_add(n.checked_mul(6)?)?,
            q_e: n2.checked_mul(5)?.checked_add(1)?,
        })
    };
    eval().ok_or(Error::Overflow("closed-form parameters"))
}

/// Interval-construction sizes: `q = 200n³ + 1`, `p = 2q + 7n`,
/// `q' = 10n² + 1`, `p' = 2q' + 7n`.
pub fn interval_parameters(n: u64) -> Result<ParamSet> {
    let eval = || -> Option<ParamSet> {
        let q = n.checked_pow(3)?.checked_mul(200)?.checked_add(1)?;
        let q_e = n.checked_pow(2)?.checked_mul(10)?.checked_add(1)?;
        let seven_n = n.checked_mul(7)?;
        Some(ParamSet {
            p: q.checked_mul(2)?.checked_add(seven_n)?,
            q,
            p_e: q_e.checked_mul(2)?.checked_add(seven_n)?,
            q_e,
        })
    };
    eval().ok_or(Error::Overflow("interval parameters"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub n: u64,
    pub m: u64,
    pub constraints: Vec<Constraint>,
    pub sound: bool,
}

impl ConstraintReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.constraints.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    pub fn failing(&self) -> impl Iterator<Item = &str> {
        self.constraints.iter().filter(|c| !c.holds).map(|c| c.name.as_str())
    }
}

/// Checks the gadget-lemma conditions (`q, q' > 6n`; `p > 2q + 6n`,
/// `p' > 2q' + 6n`; `q, q'` odd) and the link conditions (`q > 6n + p'`,
/// `p' > 2q' > 9n²`). Comparisons are done in 128-bit arithmetic.
pub fn validate_parameters(n: u64, m: u64, params: &ParamSet) -> ConstraintReport {
    let (n128, p, q, pe, qe) = (
        n as u128,
        params.p as u128,
        params.q as u128,
        params.p_e as u128,
        params.q_e as u128,
    );
    let six_n = 6 * n128;
    let checks = [
        ("q > 6n", q > six_n),
        ("q' > 6n", qe > six_n),
        ("p > 2q + 6n", p > 2 * q + six_n),
        ("p' > 2q' + 6n", pe > 2 * qe + six_n),
        ("q odd", q % 2 == 1),
        ("q' odd", qe % 2 == 1),
        ("q > 6n + p'", q > six_n + pe),
        ("p' > 2q'", pe > 2 * qe),
        ("2q' > 9n^2", 2 * qe > 9 * n128 * n128),
    ];
    let constraints: Vec<Constraint> = checks
        .iter()
        .map(|&(name, holds)| Constraint {
            name: name.to_owned(),
            holds,
        })
        .collect();
    let sound = constraints.iter().all(|c| c.holds);
    ConstraintReport {
        n,
        m,
        constraints,
        sound,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphas {
    pub alpha1: u64,
    pub alpha2: u64,
    pub phi: u64,
}

/// `α1 = n[2pq + q² + 6q + 3(p+q)(n-1)]`,
/// `α2 = m[2p'q' + q'² + 2p' + 2(p'+q')(m-1)]`, `φ = α1 + α2 + 2q'k`.
pub fn alpha_phi(n: u64, m: u64, params: &ParamSet, k: u64) -> Result<Alphas> {
    let ParamSet { p, q, p_e, q_e } = *params;
    let a1 = || -> Option<u64> {
        let inner = 2u64
            .checked_mul(p)?
            .checked_mul(q)?
            .checked_add(q.checked_mul(q)?)?
            .checked_add(q.checked_mul(6)?)?
            .checked_add(3u64.checked_mul(p.checked_add(q)?)?.checked_mul(n.saturating_sub(1))?)?;
        n.checked_mul(inner)
    };
    let a2 = || -> Option<u64> {
        let inner = 2u64
            .checked_mul(p_e)?
            .checked_mul(q_e)?
            .checked_add(q_e.checked_mul(q_e)?)?
            .checked_add(p_e.checked_mul(2)?)?
            .checked_add(2u64.checked_mul(p_e.checked_add(q_e)?)?.checked_mul(m.saturating_sub(1))?)?;
        m.checked_mul(inner)
    };
    let alpha1 = a1().ok_or(Error::Overflow("alpha1"))?;
    let alpha2 = a2().ok_or(Error::Overflow("alpha2"))?;
    let phi = q_e
        .checked_mul(2)
        .and_then(|t| t.checked_mul(k))
        .and_then(|t| t.checked_add(alpha1))
        .and_then(|t| t.checked_add(alpha2))
        .ok_or(Error::Overflow("phi"))?;
    Ok(Alphas { alpha1, alpha2, phi })
}

/// Parameter choice as written on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamChoice {
    /// [`closed_form_parameters`]
    ClosedForm,
    /// [`interval_parameters`]
    Interval,
    Explicit(ParamSet),
}

impl ParamChoice {
    pub fn resolve(&self, n: u64) -> Result<ParamSet> {
        match self {
            ParamChoice::ClosedForm => closed_form_parameters(n),
            ParamChoice::Interval => interval_parameters(n),
            ParamChoice::Explicit(p) => Ok(*p),
        }
    }
}

impl FromStr for ParamChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-form" => return Ok(ParamChoice::ClosedForm),
            "interval" => return Ok(ParamChoice::Interval),
            _ => {}
        }
        let bad = || Error::Precondition(format!("parameters must be closed-form, interval or p:q:pe:qe, got {s:?}"));
        let values: Vec<u64> = s
            .split(':')
            .map(|v| v.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [p, q, p_e, q_e] = values.as_slice() else {
            return Err(bad());
        };
        let set = ParamSet::new(*p, *q, *p_e, *q_e);
        if !set.is_positive() {
            return Err(bad());
        }
        Ok(ParamChoice::Explicit(set))
    }
}
