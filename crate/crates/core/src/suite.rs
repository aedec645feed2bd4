//! The verification runner: computes goldens and runs every applicable
//! checker over the elaborated corpus, collecting reports in corpus order.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::action::{
    self, check_coprime_quotient, check_fixed_point_fstar, check_fstar_height_bound,
    check_nonsoluble_length_bound, check_nonsoluble_length_step, check_thompson,
    check_wang_chen, sample_invariant_normal_subgroups, CoprimeAction,
};
use crate::algebra::{is_soluble, Subgroup};
use crate::corpus::ElaboratedEntry;
use crate::error::{Error, Result};
use crate::report::{HypothesisStatus, TheoremReport};
use crate::series::{
    action_kernel_on_components, fitting_height, fitting_subgroup, generalized_fitting_subgroup,
    group_is_simple, h_star, is_prime, nonsoluble_length, soluble_radical,
};
use crate::Limits;

/// Identifier of the structural (non-action) checker.
pub const CHECK_COMPONENT_KERNEL: &str = "component-kernel";

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub limits: Limits,
    /// When set, only checkers matching this name run (`golden` matches all
    /// golden comparisons).
    pub only: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<TheoremReport>,
    /// Unexpected per-entry errors (internal or input), one message each.
    pub diagnostics: Vec<String>,
    /// True when every hypothesis-met checker passed and every golden
    /// matched.
    pub ok: bool,
}

struct Runner<'a> {
    opts: &'a SuiteOptions,
    reports: Vec<TheoremReport>,
    diagnostics: Vec<String>,
}

impl<'a> Runner<'a> {
    fn should_run(&self, checker: &str) -> bool {
        match &self.opts.only {
            None => true,
            Some(f) => checker == f || (f == "golden" && checker.starts_with("golden:")),
        }
    }

    /// Records the checker result, downgrading capacity and domain failures
    /// to statuses and logging anything unexpected.
    fn record(&mut self, entry: &str, checker: &str, result: Result<TheoremReport>, start: Instant) {
        let mut report = match result {
            Ok(r) => r,
            Err(Error::Capacity { .. }) => TheoremReport::capacity(checker),
            Err(Error::Domain(_)) => TheoremReport::hypothesis_not_met(checker),
            Err(e) => {
                self.diagnostics
                    .push(format!("{entry}/{checker}: {e}"));
                TheoremReport::verdict(checker, false)
            }
        };
        report.timing_ms = start.elapsed().as_millis() as u64;
        self.reports.push(report.for_entry(entry));
    }

    fn skip(&mut self, entry: &str, checker: &str) {
        self.reports
            .push(TheoremReport::hypothesis_not_met(checker).for_entry(entry));
    }
}

/// Computes one golden invariant of an entry.
fn compute_invariant(key: &str, entry: &ElaboratedEntry, limits: &Limits) -> Result<BigUint> {
    let g = &entry.group;
    match key {
        "order" => Ok(g.order()),
        "degree" => Ok(BigUint::from(g.degree())),
        "lambda" => Ok(BigUint::from(nonsoluble_length(g, limits)?)),
        "hstar" => Ok(BigUint::from(h_star(g, limits)?)),
        "height" => Ok(BigUint::from(fitting_height(g, limits)?)),
        "radical_order" => Ok(soluble_radical(g, limits)?.order()),
        "fitting_order" => Ok(fitting_subgroup(g, limits)?.order()),
        "fstar_order" => Ok(generalized_fitting_subgroup(g, limits)?.fstar.order()),
        "components" => Ok(BigUint::from(
            generalized_fitting_subgroup(g, limits)?.components.len(),
        )),
        "centralizer_order" => {
            let act = entry
                .action
                .as_ref()
                .ok_or_else(|| Error::invalid("centralizer_order needs an automorphism"))?;
            Ok(act.fixed_point_subgroup(limits)?.order())
        }
        other => Err(Error::invalid(format!("unknown invariant `{other}`"))),
    }
}

/// Runs goldens and all applicable checkers for each entry, in corpus order.
pub fn run_suite(entries: &[ElaboratedEntry], opts: &SuiteOptions) -> SuiteOutcome {
    let limits = &opts.limits;
    let mut runner = Runner {
        opts,
        reports: Vec::new(),
        diagnostics: Vec::new(),
    };
    for entry in entries {
        // Golden comparisons.
        for (key, expected) in &entry.expect {
            let checker = format!("golden:{key}");
            if !runner.should_run(&checker) {
                continue;
            }
            let start = Instant::now();
            let result = compute_invariant(key, entry, limits).map(|value| {
                let mut r = TheoremReport::inequality(
                    &checker,
                    value.to_u64().unwrap_or(u64::MAX),
                    expected.to_u64().unwrap_or(u64::MAX),
                );
                r.pass = value == *expected;
                r.slack = 0;
                r
            });
            runner.record(&entry.name, &checker, result, start);
        }

        // Structural checker on nonsoluble groups: the kernel of the action
        // on the simple factors above the radical is soluble mod the layer.
        if runner.should_run(CHECK_COMPONENT_KERNEL)
            && !is_soluble(&Subgroup::whole(entry.group.clone()))
        {
            let start = Instant::now();
            let result = action_kernel_on_components(&entry.group, limits).map(|r| {
                TheoremReport::verdict(CHECK_COMPONENT_KERNEL, r.kernel_mod_layer_soluble)
            });
            runner.record(&entry.name, CHECK_COMPONENT_KERNEL, result, start);
        }

        // Action checkers.
        if let Some(act) = &entry.action {
            run_action_checkers(&mut runner, entry, act, limits);
        }
    }
    let ok = runner.reports.iter().all(TheoremReport::acceptable)
        && runner
            .reports
            .iter()
            .filter(|r| r.checker.starts_with("golden:"))
            .all(|r| r.hypothesis == HypothesisStatus::Met && r.pass)
        && runner.diagnostics.is_empty();
    SuiteOutcome {
        reports: runner.reports,
        diagnostics: runner.diagnostics,
        ok,
    }
}

fn run_action_checkers(
    runner: &mut Runner,
    entry: &ElaboratedEntry,
    act: &CoprimeAction,
    limits: &Limits,
) {
    let coprime = act.is_coprime() && act.is_semidirect();
    let prime_order = coprime && is_prime(act.a_order());
    let group_soluble = is_soluble(&Subgroup::whole(act.group().clone()));
    let simple = coprime
        && act.group().order_within(limits.enumeration)
        && !act.group().is_abelian()
        && group_is_simple(act.group(), limits).unwrap_or(false);

    // Coprime quotient lemma: one row per sampled invariant normal subgroup.
    if runner.should_run(action::CHECK_COPRIME_QUOTIENT) {
        if coprime {
            let start = Instant::now();
            match sample_invariant_normal_subgroups(act, limits) {
                Ok(samples) => {
                    for n in samples {
                        let start = Instant::now();
                        let result = check_coprime_quotient(act, &n, limits);
                        runner.record(&entry.name, action::CHECK_COPRIME_QUOTIENT, result, start);
                    }
                }
                Err(e) => {
                    runner.record(&entry.name, action::CHECK_COPRIME_QUOTIENT, Err(e), start)
                }
            }
        } else {
            runner.skip(&entry.name, action::CHECK_COPRIME_QUOTIENT);
        }
    }

    type Checker = (
        &'static str,
        bool,
        fn(&CoprimeAction, &Limits) -> Result<TheoremReport>,
    );
    let checkers: [Checker; 6] = [
        (action::CHECK_FIXED_POINT_FSTAR, prime_order, check_fixed_point_fstar),
        (
            action::CHECK_FSTAR_HEIGHT_BOUND,
            coprime && is_soluble(act.a_part()),
            check_fstar_height_bound,
        ),
        (action::CHECK_LENGTH_BOUND, coprime, check_nonsoluble_length_bound),
        (action::CHECK_LENGTH_STEP, prime_order, check_nonsoluble_length_step),
        (action::CHECK_THOMPSON, coprime && group_soluble, check_thompson),
        (
            action::CHECK_WANG_CHEN,
            coprime && !act.a_is_trivial() && simple,
            check_wang_chen,
        ),
    ];
    for (checker, hypotheses_met, run) in checkers {
        if !runner.should_run(checker) {
            continue;
        }
        if !hypotheses_met {
            runner.skip(&entry.name, checker);
            continue;
        }
        let start = Instant::now();
        let result = run(act, limits);
        runner.record(&entry.name, checker, result, start);
    }
}
