use std::time::Instant;

use tperfect_core::generators::{cycle_power, figure2_entries};
use tperfect_core::graph::{canonical_form, is_isomorphic};

use super::{g6, realize, Verifier};
use crate::report::{CampaignReport, CheckRecord};

impl Verifier {
    /// The ten (3,3)-partitionable graphs: their defining structure,
    /// minimal t-imperfection, no clique separator, and the row pairing.
    pub fn verify_fig2(&self) -> CampaignReport {
        let entries = figure2_entries();
        let mut checks: Vec<CheckRecord> = self
            .par_map(entries, |e| {
                let p = e.text;
                vec![
                    self.on_pattern(p, format!("{p} is (3,3)-partitionable"), e.anchor, true, |g| {
                        g.is_pq_partitionable(3, 3).to_string()
                    }),
                    self.on_pattern(p, format!("{p} is minimally t-imperfect"), e.anchor, true, |g| self.minimally(g)),
                    self.on_pattern(p, format!("{p} has no clique separator"), e.anchor, false, |g| {
                        g.has_clique_separator().to_string()
                    }),
                ]
            })
            .into_iter()
            .flatten()
            .collect();

        // row 2 against complements of row 1
        let t = Instant::now();
        let observed = match entries.iter().map(|e| realize(e.text)).collect::<Result<Vec<_>, _>>() {
            Ok(gs) => {
                let forms: Vec<_> = gs.iter().map(canonical_form).collect();
                let matches: Vec<Vec<usize>> = (0..5)
                    .map(|i| {
                        let c = canonical_form(&gs[i].complement());
                        (5..10).filter(|&j| forms[j] == c).collect()
                    })
                    .collect();
                let mut hit: Vec<usize> = matches.iter().flatten().copied().collect();
                hit.sort_unstable();
                if matches.iter().all(|m| m.len() == 1) && hit == [5, 6, 7, 8, 9] {
                    "a perfect matching".to_string()
                } else {
                    format!("row-1 matches {matches:?}")
                }
            }
            Err(e) => e,
        };
        checks.push(CheckRecord::compare(
            "complements of the first row match the second row one to one",
            "Figure 2",
            "figure 2",
            "a perfect matching",
            observed,
            t,
        ));

        let t = Instant::now();
        let f = entries[5].text;
        let c10 = cycle_power(10, 2).expect("valid").complement();
        checks.push(match realize(f) {
            Ok(g) => CheckRecord::compare(
                format!("{f} is isomorphic to the complement of C10^2"),
                entries[5].anchor,
                g6(&g),
                true,
                is_isomorphic(&g, &c10),
                t,
            ),
            Err(e) => CheckRecord::compare("figure 2(f) realizes", entries[5].anchor, f, "ok", e, t),
        });
        CampaignReport::new("fig2", vec![], checks)
    }
}
