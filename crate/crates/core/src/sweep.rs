//! Parameter-grid drivers. Grid points are evaluated in parallel and the
//! results sorted into canonical order, so output never depends on scheduling.

use rayon::prelude::*;

use crate::arith::{padic_valuation, primes_in_range, Rat, Valuation};
use crate::check::CheckResult;
use crate::congruences::{
    verify_cc10, verify_cc5, verify_cc7, verify_cc8_fact, verify_cc9,
    verify_constant_recombination, verify_guo_bb1, verify_lemma_2p, verify_rv, verify_sun_p4,
};
use crate::error::Result;
use crate::identities::{
    bb4_recurrence_sweep, check_bb2, check_bb4_direct, check_bb4_initial, check_cc1, check_cc4,
    check_liu26, check_recurrence_self_test, check_telescope, RecurrenceOrder4, Side,
};
use crate::integrality::{
    verify_integer_valued, verify_schmidt_divisibility, Epsilon, IntegralityParams,
};
use crate::sequences::RVFamily;

/// Samples used by the recurrence transcription self-test, and its seed.
pub const SELF_TEST_SAMPLES: usize = 20;
pub const SELF_TEST_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcWhich {
    Cc5,
    Cc7,
    Cc8,
    Cc9,
    Cc10,
    All,
}

impl std::str::FromStr for CcWhich {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "cc5" => Self::Cc5,
            "cc7" => Self::Cc7,
            "cc8" => Self::Cc8,
            "cc9" => Self::Cc9,
            "cc10" => Self::Cc10,
            "all" => Self::All,
            _ => return Err(format!("unknown congruence {s:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityName {
    Cc1,
    Cc4,
    Liu26,
    Telescope,
    Bb2,
    Bb4Direct,
    Bb4Recurrence,
    All,
}

impl IdentityName {
    /// Default upper bound of the swept parameter.
    pub fn default_max(self) -> u64 {
        match self {
            Self::Cc1 | Self::Bb2 => 8,
            Self::Cc4 | Self::Telescope => 12,
            Self::Liu26 => 60,
            Self::Bb4Direct => 25,
            Self::Bb4Recurrence => 40,
            Self::All => 0,
        }
    }

    const EACH: [IdentityName; 7] = [
        Self::Cc1,
        Self::Cc4,
        Self::Liu26,
        Self::Telescope,
        Self::Bb2,
        Self::Bb4Direct,
        Self::Bb4Recurrence,
    ];
}

impl std::str::FromStr for IdentityName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "cc1" => Self::Cc1,
            "cc4" => Self::Cc4,
            "liu26" => Self::Liu26,
            "telescope" => Self::Telescope,
            "bb2" => Self::Bb2,
            "bb4-direct" => Self::Bb4Direct,
            "bb4-recurrence" => Self::Bb4Recurrence,
            "all" => Self::All,
            _ => return Err(format!("unknown identity {s:?}")),
        })
    }
}

/// Default `n` range for the `A_m(n)` sweeps.
pub const BB4_DEFAULT_NMAX: u64 = 25;

pub fn default_guo_points() -> Vec<Rat> {
    ["0", "1", "2", "-1/2", "-1/3", "1/3", "2/5"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sweep {
    Rv {
        pmax: u64,
    },
    Lemma2p {
        pmax: u64,
    },
    SunP4 {
        pmax: u64,
    },
    GuoBb1 {
        pmax: u64,
        xs: Vec<Rat>,
    },
    Cc {
        which: CcWhich,
        pmax: u64,
    },
    Identity {
        name: IdentityName,
        max: Option<u64>,
        nmax: Option<u64>,
    },
    Integrality {
        nmax: u64,
        mmax: u32,
        eps: Vec<Epsilon>,
    },
    Schmidt {
        nmax: u64,
        mmax: u32,
        eps: Vec<Epsilon>,
    },
}

type Task = Box<dyn Fn() -> Result<CheckResult> + Send + Sync>;

fn task(f: impl Fn() -> Result<CheckResult> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn run_tasks(tasks: Vec<Task>) -> Result<Vec<CheckResult>> {
    tasks.par_iter().map(|t| t()).collect()
}

/// Stable canonical order: check name, then parameters.
pub fn sort_results(results: &mut [CheckResult]) {
    results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

fn family_sweep(pmax: u64, f: fn(RVFamily, u64) -> Result<CheckResult>) -> Vec<Task> {
    let mut tasks = Vec::new();
    for p in primes_in_range(5, pmax) {
        for fam in RVFamily::ALL {
            tasks.push(task(move || f(fam, p)));
        }
    }
    tasks
}

fn point_sweep(pmax: u64, f: fn(&Rat, u64) -> Result<CheckResult>) -> Vec<Task> {
    let mut tasks = Vec::new();
    for p in primes_in_range(5, pmax) {
        for fam in RVFamily::ALL {
            tasks.push(task(move || f(&fam.sun_x(), p)));
        }
    }
    tasks
}

fn is_padic_integer(x: &Rat, p: u64) -> bool {
    padic_valuation(&Rat::from(x.denom()), p) == Ok(Valuation::Finite(0))
}

fn cc_tasks(which: CcWhich, pmax: u64) -> Vec<Task> {
    let mut tasks = Vec::new();
    let all = which == CcWhich::All;
    if all || which == CcWhich::Cc5 {
        tasks.extend(point_sweep(pmax, verify_cc5));
    }
    if all || which == CcWhich::Cc7 {
        for p in primes_in_range(5, pmax) {
            for s in p..=2 * p - 2 {
                tasks.push(task(move || verify_cc7(s, p)));
            }
        }
    }
    if all || which == CcWhich::Cc8 {
        tasks.extend(point_sweep(pmax, verify_cc8_fact));
    }
    if all || which == CcWhich::Cc9 {
        tasks.extend(point_sweep(pmax, verify_cc9));
    }
    if all || which == CcWhich::Cc10 {
        tasks.extend(point_sweep(pmax, verify_cc10));
        for fam in RVFamily::ALL {
            tasks.push(task(move || Ok(verify_constant_recombination(fam))));
        }
    }
    tasks
}

fn identity_results(
    name: IdentityName,
    max: Option<u64>,
    nmax: Option<u64>,
) -> Result<Vec<CheckResult>> {
    if name == IdentityName::All {
        let mut out = Vec::new();
        for each in IdentityName::EACH {
            out.extend(identity_results(each, max, nmax)?);
        }
        return Ok(out);
    }
    let max = max.unwrap_or(name.default_max());
    let mut tasks: Vec<Task> = Vec::new();
    match name {
        IdentityName::Cc1 => {
            for j in 0..=max {
                for k in 0..=max {
                    tasks.push(task(move || Ok(check_cc1(j, k))));
                }
            }
        }
        IdentityName::Cc4 => {
            for k in 0..=max {
                for s in 0..=2 * k {
                    tasks.push(task(move || check_cc4(k, s)));
                }
            }
        }
        IdentityName::Liu26 => {
            for s in 0..=max {
                tasks.push(task(move || Ok(check_liu26(s))));
            }
        }
        IdentityName::Telescope => {
            for n in 1..=max {
                tasks.push(task(move || check_telescope(n)));
            }
        }
        IdentityName::Bb2 => {
            for n in 0..=max {
                tasks.push(task(move || Ok(check_bb2(n))));
            }
        }
        IdentityName::Bb4Direct => {
            let nmax = nmax.unwrap_or(max);
            for m in 0..=max {
                for n in 0..=nmax {
                    tasks.push(task(move || Ok(check_bb4_direct(m, n))));
                }
            }
        }
        IdentityName::Bb4Recurrence => {
            return bb4_recurrence_results(max, nmax.unwrap_or(BB4_DEFAULT_NMAX))
        }
        IdentityName::All => unreachable!(),
    }
    run_tasks(tasks)
}

/// Self-test, then initial values, then residuals on both sides. A failed
/// self-test blocks certification.
fn bb4_recurrence_results(m_max: u64, n_max: u64) -> Result<Vec<CheckResult>> {
    let rec = RecurrenceOrder4::new();
    let self_test = check_recurrence_self_test(&rec, SELF_TEST_SAMPLES, SELF_TEST_SEED);
    if !self_test.pass() {
        let blocked = CheckResult::new("bb4-recurrence").skipped("transcription self-test failed");
        return Ok(vec![self_test, blocked]);
    }
    let mut out = vec![self_test];
    let initial: Result<Vec<CheckResult>> = (0..=3u64)
        .flat_map(|m| (0..=n_max).map(move |n| (m, n)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(m, n)| check_bb4_initial(m, n))
        .collect();
    out.extend(initial?);
    let residuals: Result<Vec<Vec<CheckResult>>> = [Side::Lhs, Side::Rhs]
        .into_par_iter()
        .map(|side| bb4_recurrence_sweep(&rec, side, m_max, n_max))
        .collect();
    out.extend(residuals?.into_iter().flatten());
    Ok(out)
}

impl Sweep {
    pub fn run(&self) -> Result<Vec<CheckResult>> {
        let mut results = match self {
            Sweep::Rv { pmax } => run_tasks(family_sweep(*pmax, verify_rv))?,
            Sweep::Lemma2p { pmax } => run_tasks(family_sweep(*pmax, verify_lemma_2p))?,
            Sweep::SunP4 { pmax } => run_tasks(family_sweep(*pmax, verify_sun_p4))?,
            Sweep::GuoBb1 { pmax, xs } => {
                let mut tasks = Vec::new();
                for p in primes_in_range(3, *pmax) {
                    for x in xs {
                        let x = x.clone();
                        if is_padic_integer(&x, p) {
                            tasks.push(task(move || verify_guo_bb1(&x, p)));
                        } else {
                            tasks.push(task(move || {
                                Ok(CheckResult::new("guo-bb1")
                                    .param("p", p)
                                    .param("x", &x)
                                    .skipped("x is not a p-adic integer"))
                            }));
                        }
                    }
                }
                run_tasks(tasks)?
            }
            Sweep::Cc { which, pmax } => run_tasks(cc_tasks(*which, *pmax))?,
            Sweep::Identity { name, max, nmax } => identity_results(*name, *max, *nmax)?,
            Sweep::Integrality { nmax, mmax, eps } => {
                let mut tasks = Vec::new();
                for n in 1..=*nmax {
                    for m in 1..=*mmax {
                        for &e in eps {
                            tasks.push(task(move || {
                                Ok(verify_integer_valued(&IntegralityParams::new(n, m, e)?))
                            }));
                        }
                    }
                }
                run_tasks(tasks)?
            }
            Sweep::Schmidt { nmax, mmax, eps } => {
                let mut tasks = Vec::new();
                for n in 1..=*nmax {
                    for m in 1..=*mmax {
                        for &e in eps {
                            tasks.push(task(move || verify_schmidt_divisibility(n, m, e)));
                        }
                    }
                }
                run_tasks(tasks)?
            }
        };
        sort_results(&mut results);
        Ok(results)
    }
}
