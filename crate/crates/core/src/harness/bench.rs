//! Benchmark suites: generate, solve, audit against the oracle, report.
//!
//! Records come out in suite order whatever the thread count. Wall times are
//! kept apart from the records so record files are byte-reproducible.

use std::path::Path;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cert::Certificate;
use crate::config::Config;
use crate::cvd::solve_cvd;
use crate::dhvd::solve_dhvd;
use crate::error::{Error, Result};
use crate::harness::gen::{gen_instance, GenSpec, Generator, RNG_NAME};
use crate::harness::oracle::{exact_oracle, Problem, ProblemKind};
use crate::io::Instance;
use crate::minor::MinorFamily;
use crate::multicut::{solve_multicut, MulticutInstance};
use crate::pmfd::solve_pmfd;
use crate::rational::{fmt_q, to_f64, Q};

pub const SCHEMA: &str = "vdapprox-bench/1";

pub const CSV_COLUMNS: &[&str] = &[
    "index", "problem", "family", "generator", "n", "seed", "weights", "m", "solution_size", "weight",
    "lp_bound", "hitting_bound", "lower_bound", "exact_opt", "bound", "ratio", "exact_ratio", "feasible",
    "within_bound", "repairs", "violations", "ok", "error",
];

/// One line of a suite: `count` instances with seeds `spec.seed..`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteItem {
    pub problem: ProblemKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub spec: GenSpec,
    #[serde(default = "one")]
    pub count: u64,
}

fn one() -> u64 {
    1
}

fn default_exact_max_n() -> usize {
    14
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    #[serde(default)]
    pub name: String,
    /// Instances up to this size also get the exact oracle.
    #[serde(default = "default_exact_max_n")]
    pub exact_max_n: usize,
    #[serde(default)]
    pub items: Vec<SuiteItem>,
}

impl Suite {
    pub fn from_json(text: &str) -> Result<Suite> {
        let s: Suite = serde_json::from_str(text)?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        for it in &self.items {
            it.spec.validate()?;
            let p = Problem::new(it.problem, it.family.as_deref())?;
            if !matches!(p, Problem::Pmfd(_)) && it.family.is_some() {
                return Err(Error::Input(format!("family given for {}", it.problem.name())));
            }
        }
        Ok(())
    }

    /// Expanded instance list in suite order.
    pub fn jobs(&self) -> Vec<(ProblemKind, Option<String>, GenSpec)> {
        let mut out = Vec::new();
        for it in &self.items {
            for i in 0..it.count {
                let mut s = it.spec.clone();
                s.seed = it.spec.seed + i;
                out.push((it.problem, it.family.clone(), s));
            }
        }
        out
    }

    /// The suite behind `bench --suite default`.
    pub fn default_suite() -> Suite {
        let item = |problem, family: Option<&str>, g, n, k, p: f64, pairs, count| {
            let mut spec = GenSpec::new(g, n, 0);
            spec.k = k;
            spec.p = p;
            spec.pairs = pairs;
            spec.weights = crate::harness::gen::WeightDist::UniformInt;
            SuiteItem {
                problem,
                family: family.map(str::to_string),
                spec,
                count,
            }
        };
        use Generator::*;
        use ProblemKind::*;
        Suite {
            name: "default".into(),
            exact_max_n: 14,
            items: vec![
                item(MulticutChordal, None, CliqueTree, 12, 0, 0.1, 4, 10),
                item(MulticutChordal, None, CliqueTree, 40, 0, 0.1, 8, 10),
                item(MulticutGeneral, None, ErdosRenyi, 12, 0, 0.25, 4, 10),
                item(MulticutGeneral, None, ErdosRenyi, 30, 0, 0.1, 6, 10),
                item(Cvd, None, PlantedHoles, 12, 2, 0.1, 0, 10),
                item(Cvd, None, PlantedHoles, 40, 4, 0.1, 0, 10),
                item(Cvd, None, CliqueChordal, 30, 5, 0.3, 0, 5),
                item(Dhvd, None, Pruning, 12, 3, 0.1, 0, 10),
                item(Dhvd, None, Pruning, 30, 6, 0.1, 0, 10),
                item(Dhvd, None, PlantedHoles, 30, 3, 0.1, 0, 5),
                item(Pmfd, Some("k2"), ErdosRenyi, 12, 0, 0.25, 0, 5),
                item(Pmfd, Some("c3"), ErdosRenyi, 12, 0, 0.25, 0, 5),
                item(Pmfd, Some("k4"), ErdosRenyi, 12, 0, 0.35, 0, 5),
                item(Pmfd, Some("c3"), ErdosRenyi, 30, 0, 0.08, 0, 5),
                item(Pmfd, Some("k4"), ErdosRenyi, 24, 0, 0.15, 0, 5),
            ],
        }
    }
}

/// Solves one instance under `cfg`.
pub fn solve_instance(kind: ProblemKind, family: Option<&str>, inst: &Instance, cfg: &Config) -> Result<Certificate> {
    let g = &inst.graph;
    match kind {
        ProblemKind::Cvd => solve_cvd(g, &cfg.cvd, &cfg.lp, &cfg.separator),
        ProblemKind::Dhvd => solve_dhvd(g, &cfg.dhvd, &cfg.lp, &cfg.separator),
        ProblemKind::Pmfd => {
            let f = MinorFamily::builtin(family.ok_or_else(|| Error::Input("pmfd needs a family".into()))?)?;
            solve_pmfd(g, &f, &cfg.pmfd, &cfg.lp, &cfg.separator)
        }
        ProblemKind::MulticutChordal | ProblemKind::MulticutGeneral => {
            let mi = MulticutInstance::new(g.clone(), inst.pairs.clone())?;
            solve_multicut(&mi, kind == ProblemKind::MulticutChordal, &cfg.lp)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub index: usize,
    pub problem: ProblemKind,
    pub family: Option<String>,
    pub spec: GenSpec,
    pub m: usize,
    pub cert: Option<Certificate>,
    pub exact_opt: Option<Q>,
    pub error: Option<String>,
    /// Seconds; not part of the record files.
    pub wall: f64,
}

impl BenchRecord {
    /// `lp ≤ opt ≤ weight` where known, plus the certificate's own checks.
    pub fn consistent(&self) -> bool {
        let Some(c) = &self.cert else { return false };
        let lp_ok = c.lp_bound <= c.weight && c.hitting_bound <= c.weight;
        let exact_ok = match &self.exact_opt {
            Some(e) => c.lp_bound <= *e && c.hitting_bound <= *e && *e <= c.weight,
            None => true,
        };
        lp_ok && exact_ok
    }

    /// Feasible, within its bound and consistent.
    pub fn ok(&self) -> bool {
        self.error.is_none()
            && self.consistent()
            && self.cert.as_ref().is_some_and(|c| c.feasible && c.within_bound() && c.audit.violations.is_empty())
    }

    pub fn exact_ratio(&self) -> Option<Q> {
        let c = self.cert.as_ref()?;
        let e = self.exact_opt.as_ref()?;
        if e.is_zero() {
            return None;
        }
        Some(&c.weight / e)
    }

    fn fields(&self) -> Vec<String> {
        let opt = |v: Option<&Q>| v.map(fmt_q).unwrap_or_default();
        let c = self.cert.as_ref();
        let s = &self.spec;
        vec![
            self.index.to_string(),
            self.problem.name().to_string(),
            self.family.clone().unwrap_or_default(),
            serde_json::to_value(s.generator).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            s.n.to_string(),
            s.seed.to_string(),
            serde_json::to_value(s.weights).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            self.m.to_string(),
            c.map(|c| c.solution.len().to_string()).unwrap_or_default(),
            opt(c.map(|c| &c.weight)),
            opt(c.map(|c| &c.lp_bound)),
            opt(c.map(|c| &c.hitting_bound)),
            c.map(|c| fmt_q(&c.lower_bound())).unwrap_or_default(),
            opt(self.exact_opt.as_ref()),
            opt(c.map(|c| &c.bound)),
            c.and_then(|c| c.ratio()).as_ref().map(fmt_q).unwrap_or_default(),
            self.exact_ratio().as_ref().map(fmt_q).unwrap_or_default(),
            c.map(|c| c.feasible.to_string()).unwrap_or_else(|| "false".into()),
            c.map(|c| c.within_bound().to_string()).unwrap_or_else(|| "false".into()),
            c.map(|c| c.repairs.to_string()).unwrap_or_default(),
            c.map(|c| c.audit.violations.len().to_string()).unwrap_or_default(),
            self.ok().to_string(),
            self.error.clone().unwrap_or_default(),
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "problem": self.problem.name(),
            "family": self.family,
            "spec": self.spec,
            "m": self.m,
            "exact_opt": self.exact_opt.as_ref().map(fmt_q),
            "exact_ratio": self.exact_ratio().as_ref().map(fmt_q),
            "ok": self.ok(),
            "error": self.error,
            "certificate": self.cert.as_ref().map(|c| c.to_json()),
        })
    }
}

fn run_one(index: usize, kind: ProblemKind, family: Option<String>, spec: GenSpec, exact_max_n: usize, cfg: &Config) -> BenchRecord {
    let start = Instant::now();
    let mut rec = BenchRecord {
        index,
        problem: kind,
        family: family.clone(),
        spec: spec.clone(),
        m: 0,
        cert: None,
        exact_opt: None,
        error: None,
        wall: 0.0,
    };
    let res = (|| -> Result<(Certificate, Option<Q>, usize)> {
        let inst = gen_instance(&spec)?;
        let mut cert = solve_instance(kind, family.as_deref(), &inst, cfg)?;
        let limit = if kind == ProblemKind::Pmfd { cfg.oracle.max_n_pmfd } else { cfg.oracle.max_n };
        let exact = if spec.n <= exact_max_n.min(limit) {
            let p = Problem::new(kind, family.as_deref())?;
            let r = exact_oracle(&p, &inst, limit)?;
            cert.exact_opt = Some(r.weight.clone());
            Some(r.weight)
        } else {
            None
        };
        Ok((cert, exact, inst.graph.m()))
    })();
    match res {
        Ok((cert, exact, m)) => {
            rec.cert = Some(cert);
            rec.exact_opt = exact;
            rec.m = m;
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec.wall = start.elapsed().as_secs_f64();
    rec
}

/// Runs every instance of `suite` on `cfg.jobs` threads.
pub fn run_bench(suite: &Suite, cfg: &Config) -> Result<Vec<BenchRecord>> {
    suite.validate()?;
    cfg.validate()?;
    let jobs = suite.jobs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(pool.install(|| {
        jobs.into_par_iter()
            .enumerate()
            .map(|(i, (k, f, s))| run_one(i, k, f, s, suite.exact_max_n, cfg))
            .collect()
    }))
}

pub fn records_csv(records: &[BenchRecord]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).map_err(|e| Error::Internal(e.to_string()))?;
    for r in records {
        w.write_record(r.fields()).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(format!("# {SCHEMA} rng={RNG_NAME}\n{body}"))
}

pub fn records_json(records: &[BenchRecord], suite: &Suite, cfg: &Config) -> String {
    let v = json!({
        "schema": SCHEMA,
        "rng": RNG_NAME,
        "suite": suite,
        "config": cfg,
        "records": records.iter().map(BenchRecord::to_json).collect::<Vec<_>>(),
        "summary": summary(records),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain data");
    s.push('\n');
    s
}

pub fn timings_csv(records: &[BenchRecord]) -> String {
    let mut s = String::from("index,problem,n,seed,seconds\n");
    for r in records {
        s.push_str(&format!("{},{},{},{},{:.4}\n", r.index, r.problem.name(), r.spec.n, r.spec.seed, r.wall));
    }
    s
}

fn median(v: &mut [Q]) -> Option<Q> {
    if v.is_empty() {
        return None;
    }
    v.sort();
    Some(v[(v.len() - 1) / 2].clone())
}

/// Per-problem counts and ratio statistics.
pub fn summary(records: &[BenchRecord]) -> Value {
    let mut kinds: Vec<ProblemKind> = records.iter().map(|r| r.problem).collect();
    kinds.sort();
    kinds.dedup();
    let mut per = serde_json::Map::new();
    for k in kinds {
        let rs: Vec<&BenchRecord> = records.iter().filter(|r| r.problem == k).collect();
        let feasible = rs.iter().filter(|r| r.cert.as_ref().is_some_and(|c| c.feasible)).count();
        let mut ratios: Vec<Q> = rs.iter().filter_map(|r| r.cert.as_ref().and_then(|c| c.ratio())).collect();
        let mut exact: Vec<Q> = rs.iter().filter_map(|r| r.exact_ratio()).collect();
        let f = |v: Option<Q>| v.map(|q| json!({"exact": fmt_q(&q), "approx": format!("{:.4}", to_f64(&q))}));
        per.insert(
            k.name().to_string(),
            json!({
                "instances": rs.len(),
                "feasible": feasible,
                "all_feasible": feasible == rs.len(),
                "ok": rs.iter().filter(|r| r.ok()).count(),
                "errors": rs.iter().filter(|r| r.error.is_some()).count(),
                "repairs": rs.iter().filter_map(|r| r.cert.as_ref()).map(|c| c.repairs).sum::<usize>(),
                "violations": rs.iter().filter_map(|r| r.cert.as_ref()).map(|c| c.audit.violations.len()).sum::<usize>(),
                "max_ratio": f(ratios.iter().max().cloned()),
                "median_ratio": f(median(&mut ratios)),
                "max_exact_ratio": f(exact.iter().max().cloned()),
                "median_exact_ratio": f(median(&mut exact)),
            }),
        );
    }
    json!({
        "instances": records.len(),
        "all_ok": records.iter().all(BenchRecord::ok),
        "repairs": records.iter().filter_map(|r| r.cert.as_ref()).map(|c| c.repairs).sum::<usize>(),
        "problems": per,
    })
}

/// Writes `records.csv`, `records.json`, `summary.json` and `timings.csv`.
pub fn write_outputs(dir: &Path, records: &[BenchRecord], suite: &Suite, cfg: &Config) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("records.csv"), records_csv(records)?)?;
    std::fs::write(dir.join("records.json"), records_json(records, suite, cfg))?;
    let mut s = serde_json::to_string_pretty(&summary(records)).expect("plain data");
    s.push('\n');
    std::fs::write(dir.join("summary.json"), s)?;
    std::fs::write(dir.join("timings.csv"), timings_csv(records))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite() {
        let s = Suite::from_json(r#"{"items": []}"#).unwrap();
        let r = run_bench(&s, &Config::default()).unwrap();
        let csv = records_csv(&r).unwrap();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.lines().nth(1).unwrap().starts_with("index,problem"));
    }

    #[test]
    fn small_suite_is_ok_and_exact() {
        let s = Suite::from_json(
            r#"{"items": [
                {"problem": "cvd", "spec": {"generator": "planted-holes", "n": 10, "seed": 0, "k": 2}, "count": 3},
                {"problem": "multicut-chordal", "spec": {"generator": "clique-tree", "n": 9, "seed": 0, "pairs": 3}, "count": 2},
                {"problem": "pmfd", "family": "c3", "spec": {"generator": "erdos-renyi", "n": 8, "seed": 0, "p": 0.4}}
            ]}"#,
        )
        .unwrap();
        let r = run_bench(&s, &Config::default()).unwrap();
        assert_eq!(r.len(), 6);
        for rec in &r {
            assert!(rec.ok(), "{:?}", rec.error);
            assert!(rec.exact_opt.is_some());
        }
        assert!(Suite::from_json(r#"{"items": [{"problem": "cvd", "family": "k2", "spec": {"generator": "clique-tree", "n": 5, "seed": 0}}]}"#).is_err());
    }
}
