//! Named checks run over one digraph at a time, and sweeps that drive them
//! over exhaustive or seeded random instance sets.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{permutations, PermutationView};
use crate::deformation::{deformed_u_thm, TMatrix};
use crate::digraph::{
    random_digraph_with, random_tournament_with, random_two_cycle_free_with, Digraph, Enumeration, Family,
};
use crate::edgelist::format_digraph;
use crate::error::{Error, Result};
use crate::hamiltonian::{count_hamps, verify_berge, verify_mod4, verify_redei};
use crate::lemmas::{signed_linear_sum, signed_permutation_count, signed_sum_per_perm};
use crate::limits::Limits;
use crate::poly::Rational;
use crate::redei::{in_sv_d_dbar, phi, u_fundamental, u_p_thm1, u_p_thm2, u_p_thm3, u_via_definition};
use crate::registry::{Named, Registry};

/// The instances a verifier is meaningful for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceClass {
    AllDigraphs,
    Tournaments,
    TwoCycleFree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn equal<T: PartialEq + fmt::Display>(what: &str, left: T, right: T) -> Check {
        let pass = left == right;
        let detail = if pass {
            String::new()
        } else {
            format!("{what}: {left} != {right}")
        };
        Check { pass, detail }
    }

    fn and(self, other: impl FnOnce() -> Result<Check>) -> Result<Check> {
        if self.pass {
            other()
        } else {
            Ok(self)
        }
    }

    fn flag(pass: bool, detail: impl FnOnce() -> String) -> Check {
        Check {
            pass,
            detail: if pass { String::new() } else { detail() },
        }
    }
}

pub trait Verifier: Named + Send + Sync {
    fn class(&self) -> InstanceClass;

    fn check(&self, d: &Digraph, limits: &Limits) -> Result<Check>;
}

fn faithful_vars(d: &Digraph) -> usize {
    d.n().max(1)
}

macro_rules! verifier {
    ($ty:ident, $name:literal, $summary:literal, $class:expr, |$d:ident, $limits:ident| $body:block) => {
        pub struct $ty;

        impl Named for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn summary(&self) -> &'static str {
                $summary
            }
        }

        impl Verifier for $ty {
            fn class(&self) -> InstanceClass {
                $class
            }

            fn check(&self, $d: &Digraph, $limits: &Limits) -> Result<Check> $body
        }
    };
}

verifier!(
    SignedCycleVerifier,
    "thm1",
    "signed cycle expansion equals the listing definition, expanded in n variables",
    InstanceClass::AllDigraphs,
    |d, limits| {
        let vars = faithful_vars(d);
        let lhs = u_p_thm1(d, limits)?.expand(vars)?;
        let rhs = u_via_definition(d, vars, limits)?;
        Ok(Check::flag(lhs == rhs, || {
            format!(
                "expansions differ in {vars} variables; power-sum form {}",
                u_p_thm1(d, limits).unwrap()
            )
        }))
    }
);

verifier!(
    OddCycleVerifier,
    "thm2",
    "odd-cycle expansion equals the signed one and lies in N[p1, 2p3, 2p5, ...]",
    InstanceClass::Tournaments,
    |d, limits| {
        let odd = u_p_thm2(d, limits)?;
        let signed = u_p_thm1(d, limits)?;
        Check::equal("thm2 vs thm1", &odd, &signed).and(|| {
            Ok(Check::flag(odd.in_odd_power_sum_semiring(), || {
                format!("{odd} is outside the odd power-sum semiring")
            }))
        })
    }
);

verifier!(
    RiskFreeVerifier,
    "thm3",
    "risk-free expansion equals the signed one and is p-positive",
    InstanceClass::TwoCycleFree,
    |d, limits| {
        let risk_free = u_p_thm3(d, limits)?;
        let signed = u_p_thm1(d, limits)?;
        Check::equal("thm3 vs thm1", &risk_free, &signed).and(|| {
            let ok = risk_free.is_p_positive() && risk_free.has_integer_coefficients();
            Ok(Check::flag(ok, || format!("{risk_free} is not p-positive")))
        })
    }
);

verifier!(
    AntipodeVerifier,
    "antipode",
    "omega(U_D) = U_complement and S(U_D) = (-1)^n U_complement",
    InstanceClass::AllDigraphs,
    |d, limits| {
        let u = u_p_thm1(d, limits)?;
        let u_bar = u_p_thm1(&d.complement(), limits)?;
        let sign = Rational::from_integer(if d.n().is_multiple_of(2) { 1 } else { -1 }.into());
        Check::equal("omega", &u.omega(), &u_bar)
            .and(|| Ok(Check::equal("antipode", &u.antipode(), &u_bar.scale(&sign))))
    }
);

verifier!(
    ZetaVerifier,
    "zeta",
    "zeta(U_D) counts the hamps of the complement",
    InstanceClass::AllDigraphs,
    |d, limits| {
        let hamps = Rational::from_integer(count_hamps(&d.complement(), limits)?.into());
        Check::equal("zeta of power-sum form", u_p_thm1(d, limits)?.zeta(), hamps.clone()).and(|| {
            Ok(Check::equal(
                "zeta of fundamental form",
                u_fundamental(d, limits)?.zeta(),
                hamps,
            ))
        })
    }
);

verifier!(
    RedeiVerifier,
    "redei",
    "a tournament has an odd number of hamps",
    InstanceClass::Tournaments,
    |d, limits| {
        let r = verify_redei(d, limits)?;
        Ok(Check::flag(r.pass, || format!("{} hamps", r.hamps)))
    }
);

verifier!(
    Mod4Verifier,
    "mod4",
    "hamps = 1 + 2 * (nontrivial odd cycles) mod 4 for a tournament",
    InstanceClass::Tournaments,
    |d, limits| {
        let r = verify_mod4(d, limits)?;
        Ok(Check::flag(r.pass, || {
            format!(
                "{} hamps, {} odd cycles: {} != {} mod 4",
                r.hamps, r.odd_cycles, r.lhs_mod4, r.rhs_mod4
            )
        }))
    }
);

verifier!(
    BergeVerifier,
    "berge",
    "D and its complement have hamp counts of equal parity",
    InstanceClass::AllDigraphs,
    |d, limits| {
        let r = verify_berge(d, limits)?;
        Ok(Check::flag(r.pass, || {
            format!("{} vs {} hamps", r.hamps, r.hamps_complement)
        }))
    }
);

verifier!(
    LemmaVerifier,
    "lemmas",
    "linear-subset sums, per-permutation signs and the indicator deformation agree with hamp counts and U_D",
    InstanceClass::AllDigraphs,
    |d, limits| {
        let hamps = BigInt::from(count_hamps(&d.complement(), limits)?);
        Check::equal("linear-subset sum", signed_linear_sum(d, limits)?, hamps.clone())
            .and(|| {
                Ok(Check::equal(
                    "signed permutation count",
                    signed_permutation_count(d, limits)?,
                    hamps,
                ))
            })?
            .and(|| {
                for images in permutations(d.n()) {
                    let sigma = PermutationView::new(images)?;
                    let expected = if !in_sv_d_dbar(d, &sigma) {
                        0
                    } else if phi(d, &sigma).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    };
                    let got = signed_sum_per_perm(d, &sigma, limits)?;
                    if got != expected {
                        return Ok(Check::equal(
                            &format!("per-permutation sum at {:?}", sigma.images()),
                            got,
                            expected,
                        ));
                    }
                }
                Ok(Check::flag(true, String::new))
            })?
            .and(|| {
                let deformed = deformed_u_thm(&TMatrix::from_digraph(d), limits)?;
                Ok(Check::equal("indicator deformation", deformed, u_p_thm1(d, limits)?))
            })
    }
);

pub type VerifierRegistry = Registry<dyn Verifier>;

impl Default for VerifierRegistry {
    fn default() -> Self {
        let mut r: VerifierRegistry = Registry::new("verifier");
        let all: [Arc<dyn Verifier>; 9] = [
            Arc::new(SignedCycleVerifier),
            Arc::new(OddCycleVerifier),
            Arc::new(RiskFreeVerifier),
            Arc::new(AntipodeVerifier),
            Arc::new(ZetaVerifier),
            Arc::new(RedeiVerifier),
            Arc::new(Mod4Verifier),
            Arc::new(BergeVerifier),
            Arc::new(LemmaVerifier),
        ];
        for v in all {
            r.register(v).unwrap();
        }
        r
    }
}

/// Which instances a sweep visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum SweepMode {
    /// Every instance of the class on exactly `n` vertices, in enumeration order.
    Exhaustive { n: usize },
    /// `count` instances; instance `i` draws its size from `1..=max_n` and
    /// its arcs from a ChaCha8 stream keyed by `(seed, i)`.
    Random { count: u64, max_n: usize, seed: u64 },
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepMode::Exhaustive { n } => write!(f, "exhaustive n={n}"),
            SweepMode::Random { count, max_n, seed } => write!(f, "random k={count} max-n={max_n} seed={seed}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub mode: SweepMode,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub keep_going: bool,
    pub limits: Limits,
}

impl SweepConfig {
    pub fn new(mode: SweepMode) -> Self {
        SweepConfig {
            mode,
            jobs: None,
            keep_going: false,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: u64,
    #[serde(serialize_with = "edge_list")]
    pub digraph: Digraph,
    pub detail: String,
}

fn edge_list<S: serde::Serializer>(d: &Digraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_digraph(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub verifier: &'static str,
    pub class: InstanceClass,
    #[serde(flatten)]
    pub mode: SweepMode,
    pub checked: u64,
    pub passed: u64,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} pass ({})",
            self.verifier, self.passed, self.checked, self.mode
        )
    }
}

/// Produces instance `index` of a sweep; `None` for exhaustive indices
/// filtered out of the class.
struct InstanceSource {
    class: InstanceClass,
    mode: SweepMode,
    enumeration: Option<Enumeration>,
}

impl InstanceSource {
    fn new(class: InstanceClass, mode: SweepMode, limits: &Limits) -> Result<Self> {
        let enumeration = match mode {
            SweepMode::Exhaustive { n } => {
                let family = match class {
                    InstanceClass::Tournaments => Family::Tournaments,
                    _ => Family::Digraphs { loops: true },
                };
                Some(Enumeration::new(n, family, limits)?)
            }
            SweepMode::Random { max_n, .. } => {
                if max_n == 0 {
                    return Err(Error::Invalid("--max-n must be at least 1".into()));
                }
                if max_n > Digraph::MAX_VERTICES {
                    return Err(Error::Invalid(format!(
                        "--max-n {max_n} exceeds {}",
                        Digraph::MAX_VERTICES
                    )));
                }
                None
            }
        };
        Ok(InstanceSource {
            class,
            mode,
            enumeration,
        })
    }

    fn len(&self) -> u64 {
        match (&self.enumeration, self.mode) {
            (Some(e), _) => e.total(),
            (None, SweepMode::Random { count, .. }) => count,
            (None, SweepMode::Exhaustive { .. }) => unreachable!(),
        }
    }

    fn get(&self, index: u64) -> Option<Digraph> {
        match (&self.enumeration, self.mode) {
            (Some(e), _) => {
                let d = e.instance(index);
                (self.class != InstanceClass::TwoCycleFree || d.is_two_cycle_free()).then_some(d)
            }
            (None, SweepMode::Random { max_n, seed, .. }) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index);
                let n = rng.gen_range(1..=max_n);
                Some(match self.class {
                    InstanceClass::AllDigraphs => random_digraph_with(&mut rng, n, 0.5, true),
                    InstanceClass::Tournaments => random_tournament_with(&mut rng, n),
                    InstanceClass::TwoCycleFree => random_two_cycle_free_with(&mut rng, n),
                })
            }
            (None, SweepMode::Exhaustive { .. }) => unreachable!(),
        }
    }
}

/// The `index`-th instance a sweep with this class and mode would visit.
pub fn sweep_instance(class: InstanceClass, mode: SweepMode, index: u64, limits: &Limits) -> Result<Option<Digraph>> {
    let source = InstanceSource::new(class, mode, limits)?;
    if index >= source.len() {
        return Err(Error::Invalid(format!("instance {index} out of range")));
    }
    Ok(source.get(index))
}

const CHUNK_PER_WORKER: u64 = 64;

/// Runs `verifier` over the sweep's instances on a pool of `config.jobs`
/// workers. Instances are processed in index-ordered chunks, so the report
/// (including which failure stops the sweep) does not depend on scheduling.
pub fn run_sweep(verifier: &dyn Verifier, config: &SweepConfig) -> Result<SweepReport> {
    let limits = &config.limits;
    let source = InstanceSource::new(verifier.class(), config.mode, limits)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        if jobs == 0 {
            return Err(Error::Invalid("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| Error::Invalid(e.to_string()))?;
    let chunk = CHUNK_PER_WORKER * pool.current_num_threads() as u64;

    let mut report = SweepReport {
        verifier: verifier.name(),
        class: verifier.class(),
        mode: config.mode,
        checked: 0,
        passed: 0,
        failures: Vec::new(),
    };
    let total = source.len();
    let mut start = 0;
    while start < total {
        let end = (start + chunk).min(total);
        let results: Vec<Option<(u64, Digraph, Check)>> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| match source.get(i) {
                    None => Ok(None),
                    Some(d) => verifier.check(&d, limits).map(|c| Some((i, d, c))),
                })
                .collect::<Result<_>>()
        })?;
        for (index, digraph, check) in results.into_iter().flatten() {
            report.checked += 1;
            if check.pass {
                report.passed += 1;
            } else {
                report.failures.push(Failure {
                    index,
                    digraph,
                    detail: check.detail,
                });
                if !config.keep_going {
                    return Ok(report);
                }
            }
        }
        start = end;
    }
    Ok(report)
}
