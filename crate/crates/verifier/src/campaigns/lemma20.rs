use std::time::Instant;

use tperfect_core::generators::{figure2_patterns, lemma20_isomorphisms, table3_rows};
use tperfect_core::polytope::{build_tstab_hrep, RatVector, Rational};

use super::{g6, realize, Verifier};
use crate::report::{CampaignReport, CheckRecord};

impl Verifier {
    /// The two (3,3)-partitionable graphs without a `C10^2` are minimally
    /// t-imperfect.
    pub fn verify_lemma20(&self) -> CampaignReport {
        let anchor = "Lemma 20 proof";
        let fig = figure2_patterns();
        // (12*435*1) and its complement (1*2*435*1*)
        let graphs = [fig[4], fig[9]];
        let mut checks = Vec::new();
        for p in graphs {
            let t = Instant::now();
            let g = match realize(p) {
                Ok(g) => g,
                Err(e) => {
                    checks.push(CheckRecord::compare(format!("{p} realizes"), anchor, p, "ok", e, t));
                    continue;
                }
            };
            let input = g6(&g);
            let n = g.order() as i64;
            let x = RatVector::constant(g.order(), Rational::new(1, 3));
            let member = build_tstab_hrep(&g).contains_point(&x).map_err(|e| e.to_string());
            checks.push(CheckRecord::compare(
                format!("the all-1/3 point lies in P({p})"),
                anchor,
                input.clone(),
                "Ok(true)",
                format!("{member:?}"),
                t,
            ));
            let t = Instant::now();
            checks.push(CheckRecord::compare(
                format!("x({p}) = {n}/3"),
                anchor,
                input.clone(),
                Rational::new(n, 3),
                x.sum(),
                t,
            ));
            let t = Instant::now();
            let alpha = g.independence_number();
            checks.push(CheckRecord::compare(format!("alpha({p}) = 3"), anchor, input.clone(), 3, alpha, t));
            let t = Instant::now();
            checks.push(CheckRecord::compare(
                format!("x({p}) exceeds alpha, so {p} is t-imperfect"),
                anchor,
                input.clone(),
                "true false",
                format!("{} {}", x.sum() > Rational::integer(alpha as i64), self.t_perfect(&g)),
                t,
            ));
            let t = Instant::now();
            let bad: Vec<usize> = g.vertices().iter().filter(|&v| g.is_independent(g.neighbors(v))).collect();
            checks.push(CheckRecord::compare(
                format!("no neighborhood in {p} is independent"),
                anchor,
                input.clone(),
                "[]",
                format!("{bad:?}"),
                t,
            ));
            let t = Instant::now();
            checks.push(CheckRecord::compare(
                format!("{p} is minimally t-imperfect"),
                "Lemma 20",
                input,
                true,
                self.minimally(&g),
                t,
            ));
        }
        let isos = lemma20_isomorphisms();
        checks.extend(self.par_map(&isos, |c| self.iso_check(c)));
        let rows = table3_rows();
        checks.extend(self.par_map(rows, |r| {
            self.on_pattern(r.graph, format!("{} is t-perfect", r.graph), r.anchor, true, |g| self.t_perfect(g))
        }));
        checks.extend(self.replay_rows(rows));
        CampaignReport::new("lemma20", vec![], checks)
    }
}
