//! Outcome record shared by every verifier.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{mod_reduce, padic_valuation, PAdicContext, Rat, Valuation};

/// A parameter value; integers order numerically so that sweeps sort as expected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Int(i64),
    Rat(Rat),
    Text(String),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Rat(v) => write!(f, "{v}"),
            Param::Text(v) => f.write_str(v),
        }
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<u64> for Param {
    fn from(v: u64) -> Self {
        Param::Int(v as i64)
    }
}

impl From<&Rat> for Param {
    fn from(v: &Rat) -> Self {
        Param::Rat(v.clone())
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// What a check compared: a residue, a valuation, an exact value, ...
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    Residue(BigInt),
    Valuation(Valuation),
    /// Lower bound a valuation was required to meet.
    AtLeast(i64),
    Value(Rat),
    Values(Vec<Rat>),
    Text(String),
    None,
}

impl Witness {
    /// Residue mod `p^k` if `q` is a p-adic integer, otherwise its valuation.
    pub fn of_side(q: &Rat, ctx: &PAdicContext) -> Self {
        match mod_reduce(q, ctx) {
            Ok(r) => Witness::Residue(r),
            Err(_) => Witness::Valuation(
                padic_valuation(q, ctx.p()).expect("context prime was validated"),
            ),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Residue(r) => write!(f, "{r}"),
            Witness::Valuation(v) => write!(f, "v={v}"),
            Witness::AtLeast(b) => write!(f, "v>={b}"),
            Witness::Value(v) => write!(f, "{v}"),
            Witness::Values(vs) => {
                let parts: Vec<String> = vs.iter().map(Rat::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Witness::Text(t) => f.write_str(t),
            Witness::None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckResult {
    pub check_name: String,
    pub parameters: BTreeMap<String, Param>,
    pub status: Status,
    pub lhs_witness: Witness,
    pub rhs_witness: Witness,
    pub modulus: String,
}

impl CheckResult {
    pub fn new(check_name: impl Into<String>) -> Self {
        Self {
            check_name: check_name.into(),
            parameters: BTreeMap::new(),
            status: Status::Fail,
            lhs_witness: Witness::None,
            rhs_witness: Witness::None,
            modulus: String::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(mut self, pass: bool) -> Self {
        self.status = if pass { Status::Pass } else { Status::Fail };
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.lhs_witness = Witness::Text(reason.into());
        self
    }

    pub fn witnesses(mut self, lhs: Witness, rhs: Witness) -> Self {
        self.lhs_witness = lhs;
        self.rhs_witness = rhs;
        self
    }

    pub fn modulus(mut self, label: impl Into<String>) -> Self {
        self.modulus = label.into();
        self
    }

    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// `(check_name, parameters)` ordering key used for canonical output.
    pub fn sort_key(&self) -> (&str, &BTreeMap<String, Param>) {
        (&self.check_name, &self.parameters)
    }

    /// Exact equality of two rationals, recorded with both values as witnesses.
    pub fn equality(self, lhs: Rat, rhs: Rat) -> Self {
        let pass = lhs == rhs;
        self.passed(pass)
            .witnesses(Witness::Value(lhs), Witness::Value(rhs))
            .modulus("exact")
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(
            f,
            "{status} {} [{}] lhs={} rhs={} mod {}",
            self.check_name,
            params.join(", "),
            self.lhs_witness,
            self.rhs_witness,
            self.modulus
        )
    }
}
