use std::time::Instant;

use tperfect_core::generators::{complete, cycle, mobius_ladder, wheel};
use tperfect_core::Graph;

use super::{g6, Verifier};
use crate::report::{CampaignReport, CheckRecord};

impl Verifier {
    pub fn verify_named_families(&self) -> CampaignReport {
        let anchor = "named families";
        let ok = |r: Result<Graph, _>| r.expect("valid parameters");
        let mti: Vec<(&str, Graph)> = vec![
            ("W5", ok(wheel(5))),
            ("W7", ok(wheel(7))),
            ("complement of C7", ok(cycle(7)).complement()),
            ("M4", ok(mobius_ladder(4))),
        ];
        let mut checks = self.par_map(&mti, |(name, g)| {
            let t = Instant::now();
            CheckRecord::compare(format!("{name} is minimally t-imperfect"), anchor, g6(g), true, self.minimally(g), t)
        });
        let c7 = ok(cycle(7));
        let t = Instant::now();
        checks.push(CheckRecord::compare("C7 is t-perfect", anchor, g6(&c7), true, self.t_perfect(&c7), t));
        let t = Instant::now();
        checks.push(CheckRecord::compare("C7 is core", anchor, g6(&c7), true, self.core(&c7), t));
        for (name, g) in [("C9", ok(cycle(9))), ("complement of K5", ok(complete(5)).complement())] {
            let t = Instant::now();
            checks.push(CheckRecord::compare(format!("{name} is t-perfect"), anchor, g6(&g), true, self.t_perfect(&g), t));
            let t = Instant::now();
            checks.push(CheckRecord::compare(format!("{name} is not core"), anchor, g6(&g), false, self.core(&g), t));
        }
        CampaignReport::new("families", vec![], checks)
    }
}
