use std::time::Instant;

use tperfect_core::generators::{prop7_patterns, table2_rows, Deletion, ReductionRow};
use tperfect_core::graph::is_isomorphic;
use tperfect_core::pattern::PatternSpec;
use tperfect_core::VertexSet;

use super::{g6, realize, Verifier};
use crate::report::{CampaignReport, CheckRecord};

impl Verifier {
    /// Every listed graph is t-perfect, directly, and through its clique
    /// reduction: `G - x` for `x` in a triangle `K` is K4-free perfect or
    /// a named t-perfect graph.
    pub fn verify_prop7(&self) -> CampaignReport {
        let anchor = "Proposition 7";
        let list = prop7_patterns();
        let mut checks = self.par_map(&list, |p| {
            self.on_pattern(p, format!("{p} is t-perfect"), anchor, true, |g| self.t_perfect(g))
        });
        let rows: Vec<&str> = table2_rows().iter().map(|r| r.graph).collect();
        for p in list.iter().filter(|p| !rows.contains(p)) {
            checks.push(self.on_pattern(p, format!("{p} is almost bipartite"), "Proposition 7 proof", true, |g| {
                g.is_almost_bipartite().to_string()
            }));
        }
        checks.extend(self.replay_rows(table2_rows()));
        CampaignReport::new(
            "prop7",
            vec!["the first five graphs are settled as almost bipartite; the rest by clique reduction".into()],
            checks,
        )
    }

    /// Replays clique-deletion rows: `K` is a clique and each `G - x` is as
    /// stated, with named graphs also checked t-perfect.
    pub(crate) fn replay_rows(&self, rows: &[ReductionRow]) -> Vec<CheckRecord> {
        let per_row = self.par_map(rows, |r| self.replay_row(r));
        per_row.into_iter().flatten().collect()
    }

    fn replay_row(&self, r: &ReductionRow) -> Vec<CheckRecord> {
        let t = Instant::now();
        let names: Vec<String> = r.clique.iter().map(|v| v.to_string()).collect();
        let kname = format!("{{{}}}", names.join(", "));
        let spec: PatternSpec = match r.graph.parse() {
            Ok(s) => s,
            Err(e) => return vec![CheckRecord::compare(format!("{} parses", r.graph), r.anchor, r.graph, "ok", e, t)],
        };
        let g = spec.realize();
        let input = g6(&g);
        let slots: Vec<Option<usize>> = r.clique.iter().map(|&v| spec.vertex(v)).collect();
        let mut out = Vec::new();
        let k: Option<VertexSet> = slots.iter().copied().collect::<Option<Vec<_>>>().map(|v| v.into_iter().collect());
        out.push(CheckRecord::compare(
            format!("{kname} is a clique of {}", r.graph),
            r.anchor,
            input.clone(),
            true,
            k.is_some_and(|k| k.len() == 3 && g.is_clique(k)),
            t,
        ));
        for ((x, slot), d) in r.clique.iter().zip(&slots).zip(&r.deletions) {
            let t = Instant::now();
            let Some(v) = *slot else {
                out.push(CheckRecord::compare(format!("{} has {x}", r.graph), r.anchor, input.clone(), true, false, t));
                continue;
            };
            let h = g.delete_vertex(v).expect("order >= 5");
            match d {
                Deletion::Star => out.push(CheckRecord::compare(
                    format!("{} - {x} is K4-free and perfect", r.graph),
                    r.anchor,
                    g6(&h),
                    true,
                    h.clique_number() < 4 && h.is_perfect(),
                    t,
                )),
                Deletion::Named(name) => {
                    let (iso, tp) = match realize(name) {
                        Ok(n) => (is_isomorphic(&h, &n).to_string(), self.t_perfect(&n)),
                        Err(e) => (e.clone(), e),
                    };
                    out.push(CheckRecord::compare(
                        format!("{} - {x} is isomorphic to {name}", r.graph),
                        r.anchor,
                        g6(&h),
                        true,
                        iso,
                        t,
                    ));
                    out.push(CheckRecord::compare(format!("{name} is t-perfect"), r.anchor, g6(&h), true, tp, t));
                }
            }
        }
        out
    }
}
