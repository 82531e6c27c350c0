//! Deletion certificates and the audit trail solvers fill while running.
//!
//! Certificates serialize deterministically: keys are sorted, rationals are
//! written as `"p/q"` strings and no wall-clock data is recorded.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::graph::VertexSet;
use crate::rational::{fmt_q, Q};

/// Counters, per-phase weight charges and invariant violations.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Audit {
    pub counters: BTreeMap<String, u64>,
    /// Weight charged per phase. A vertex picked twice is charged twice, so
    /// the sum bounds the solution weight from above.
    pub phases: BTreeMap<String, Q>,
    pub violations: Vec<String>,
}

impl Audit {
    pub fn count(&mut self, key: &str, by: u64) {
        *self.counters.entry(key.to_string()).or_insert(0) += by;
    }

    /// Keeps the larger value. Keys recorded this way must contain `max`
    /// so that `merge` also keeps the larger value.
    pub fn max(&mut self, key: &str, v: u64) {
        debug_assert!(key.contains("max"));
        let e = self.counters.entry(key.to_string()).or_insert(0);
        *e = (*e).max(v);
    }

    pub fn charge(&mut self, phase: &str, w: &Q) {
        *self.phases.entry(phase.to_string()).or_insert_with(Q::zero) += w;
    }

    /// Records a violation when `ok` is false. Returns `ok`.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        if !ok {
            self.violations.push(msg());
        }
        ok
    }

    pub fn merge(&mut self, other: Audit) {
        for (k, v) in other.counters {
            let e = self.counters.entry(k.clone()).or_insert(0);
            if k.contains("max") {
                *e = (*e).max(v);
            } else {
                *e += v;
            }
        }
        for (k, v) in other.phases {
            *self.phases.entry(k).or_insert_with(Q::zero) += v;
        }
        self.violations.extend(other.violations);
    }
}

/// Solution of a deletion problem with the bounds it was measured against.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub solution: VertexSet,
    pub weight: Q,
    /// The residual graph passed the family check.
    pub feasible: bool,
    /// Cover LP of the graph left after short-obstruction hitting.
    pub lp_bound: Q,
    /// Cover LP of the short obstructions; zero where there is no such phase.
    pub hitting_bound: Q,
    /// Exact optimum when known.
    pub exact_opt: Option<Q>,
    /// `factor·lp_bound + hitting_factor·hitting_bound`.
    pub bound: Q,
    pub factor: Q,
    pub hitting_factor: Q,
    /// Named constants used by the run, stringified.
    pub constants: BTreeMap<String, String>,
    pub audit: Audit,
    pub repairs: usize,
}

impl Certificate {
    /// Largest certified lower bound on the optimum.
    pub fn lower_bound(&self) -> Q {
        let mut lb = self.lp_bound.clone().max(self.hitting_bound.clone());
        if let Some(e) = &self.exact_opt {
            lb = lb.max(e.clone());
        }
        lb
    }

    pub fn within_bound(&self) -> bool {
        self.weight <= self.bound
    }

    /// `weight / lower_bound`, `None` when the bound is zero.
    pub fn ratio(&self) -> Option<Q> {
        let lb = self.lower_bound();
        lb.is_positive().then(|| &self.weight / lb)
    }

    /// No violation, no repair, feasible and within the bound.
    pub fn clean(&self) -> bool {
        self.feasible && self.within_bound() && self.repairs == 0 && self.audit.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let qmap = |m: &BTreeMap<String, Q>| -> Value {
            m.iter().map(|(k, v)| (k.clone(), Value::String(fmt_q(v)))).collect()
        };
        json!({
            "problem": self.problem,
            "n": self.n,
            "m": self.m,
            "solution": self.solution,
            "weight": fmt_q(&self.weight),
            "feasible": self.feasible,
            "lp_bound": fmt_q(&self.lp_bound),
            "hitting_bound": fmt_q(&self.hitting_bound),
            "lower_bound": fmt_q(&self.lower_bound()),
            "exact_opt": self.exact_opt.as_ref().map(fmt_q),
            "bound": fmt_q(&self.bound),
            "factor": fmt_q(&self.factor),
            "hitting_factor": fmt_q(&self.hitting_factor),
            "within_bound": self.within_bound(),
            "ratio": self.ratio().as_ref().map(fmt_q),
            "constants": self.constants,
            "counters": self.audit.counters,
            "phases": qmap(&self.audit.phases),
            "violations": self.audit.violations,
            "repairs": self.repairs,
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain data");
        s.push('\n');
        s
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let ratio = self
            .ratio()
            .map(|r| format!("{:.3}", crate::rational::to_f64(&r)))
            .unwrap_or_else(|| "-".into());
        format!(
            "{}: n={} m={} |S|={} weight={} lower_bound={} bound={} ratio={} feasible={} repairs={} violations={}",
            self.problem,
            self.n,
            self.m,
            self.solution.len(),
            fmt_q(&self.weight),
            fmt_q(&self.lower_bound()),
            fmt_q(&self.bound),
            ratio,
            self.feasible,
            self.repairs,
            self.audit.violations.len()
        )
    }
}
