//! The verification campaigns. Each re-derives one published result from
//! the decision procedures and records every claim it checks.

mod census;
mod families;
mod fig2;
mod lemma20;
mod oracle;
mod prop7;
mod section3;
mod table1;
mod theorem1;
mod theorem2;

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use rayon::ThreadPool;
use tperfect_core::decision::{Classifier, DecisionError};
use tperfect_core::generators::IsoClaim;
use tperfect_core::graph::{graph6_encode, is_isomorphic};
use tperfect_core::pattern::PatternExpr;
use tperfect_core::polytope::DdOptions;
use tperfect_core::Graph;

use crate::report::{CampaignReport, CheckRecord};

/// Campaign names accepted by [`Verifier::run`], in `all` order.
pub const CAMPAIGNS: [&str; 10] =
    ["prop7", "lemma20", "fig2", "theorem1", "theorem2", "table1", "section3", "census", "families", "oracle"];

/// Shared state for campaigns: the memo cache and the worker pool.
pub struct Verifier {
    classifier: Classifier,
    pool: ThreadPool,
}

impl Verifier {
    /// `jobs = 0` lets the pool pick one worker per core.
    pub fn new(jobs: usize, opts: DdOptions) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        Verifier { classifier: Classifier::new(opts), pool }
    }

    pub fn classifier(&self) -> &Classifier {
        &self.classifier
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Maps `f` over `items` on the pool; results keep input order.
    pub(crate) fn par_map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }

    /// Runs a campaign by name, `None` for an unknown name.
    pub fn run(&self, name: &str) -> Option<CampaignReport> {
        Some(match name {
            "prop7" => self.verify_prop7(),
            "lemma20" => self.verify_lemma20(),
            "fig2" => self.verify_fig2(),
            "theorem1" => self.verify_theorem1(),
            "theorem2" => self.verify_theorem2(),
            "table1" => self.verify_table1_and_lemma8(),
            "section3" => self.verify_section3(),
            "census" => self.verify_small_census(),
            "families" => self.verify_named_families(),
            "oracle" => self.oracle_equivalence_sweep(7),
            _ => return None,
        })
    }

    fn t_perfect(&self, g: &Graph) -> String {
        show(self.classifier.is_t_perfect(g))
    }

    fn minimally(&self, g: &Graph) -> String {
        show(self.classifier.is_minimally_t_imperfect(g))
    }

    fn core(&self, g: &Graph) -> String {
        show(self.classifier.is_core(g))
    }

    /// Checks that two pattern expressions realize isomorphic graphs.
    fn iso_check(&self, c: &IsoClaim) -> CheckRecord {
        let t = Instant::now();
        let claim = format!("{} is isomorphic to {}", c.left, c.right);
        match (realize(&c.left), realize(&c.right)) {
            (Ok(a), Ok(b)) => CheckRecord::compare(claim, c.anchor, g6(&a), true, is_isomorphic(&a, &b), t),
            (a, b) => {
                let err = a.err().or(b.err()).unwrap_or_default();
                CheckRecord::compare(claim, c.anchor, format!("{} ~ {}", c.left, c.right), "realizable", err, t)
            }
        }
    }

    /// Realizes `text` and records `what(g)` against `expected`.
    fn on_pattern(
        &self,
        text: &str,
        claim: String,
        anchor: &str,
        expected: impl Display,
        what: impl FnOnce(&Graph) -> String,
    ) -> CheckRecord {
        let t = Instant::now();
        match realize(text) {
            Ok(g) => CheckRecord::compare(claim, anchor, g6(&g), expected, what(&g), t),
            Err(e) => CheckRecord::compare(claim, anchor, text, expected, e, t),
        }
    }
}

pub(crate) fn realize(text: &str) -> Result<Graph, String> {
    let expr: PatternExpr = text.parse().map_err(|e| format!("{text}: {e}"))?;
    expr.realize().map_err(|e| format!("{text}: {e}"))
}

pub(crate) fn g6(g: &Graph) -> String {
    graph6_encode(g)
}

pub(crate) fn show<T: Display>(r: Result<T, DecisionError>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}
