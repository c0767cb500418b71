use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use tperfect_core::decision::degree_bounded;
use tperfect_core::generators::{
    lemma13_self_complementary, prop10_patterns, prop11_patterns, prop12_patterns, prop9_patterns,
};
use tperfect_core::graph::{canonical_form, CanonicalForm};

use super::{g6, realize, Verifier};
use crate::report::{CampaignReport, CheckRecord};
use crate::sweep::distinct_pattern_graphs;

impl Verifier {
    /// Degree-bounded core graphs of order nine: all t-perfect, exactly
    /// five self-complementary, each one of the listed graphs.
    pub fn verify_section3(&self) -> CampaignReport {
        let anchor = "Lemma 13";
        let mut checks = Vec::new();
        let t = Instant::now();
        let cands = distinct_pattern_graphs(9);
        let bounded: Vec<_> = cands.iter().filter(|(_, g, _)| degree_bounded(g)).cloned().collect();
        let core = self.par_map(&bounded, |(_, g, _)| self.classifier().is_core(g));
        let mut errors = 0;
        let mut survivors = Vec::new();
        for (c, k) in bounded.iter().zip(core) {
            match k {
                Ok(true) => survivors.push(c.clone()),
                Ok(false) => {}
                Err(_) => errors += 1,
            }
        }
        checks.push(CheckRecord::compare(
            "every degree-bounded order-9 pattern graph has a core decision",
            anchor,
            "order 9 pattern space",
            0,
            errors,
            t,
        ));
        checks.extend(self.par_map(&survivors, |(spec, g, _)| {
            let t = Instant::now();
            CheckRecord::compare(format!("{spec} is t-perfect"), anchor, g6(g), true, self.t_perfect(g), t)
        }));

        let t = Instant::now();
        let want: Result<BTreeSet<CanonicalForm>, String> =
            lemma13_self_complementary().iter().map(|p| realize(p).map(|g| canonical_form(&g))).collect();
        let sc: Vec<_> = survivors.iter().filter(|(_, g, c)| canonical_form(&g.complement()) == *c).collect();
        let got: BTreeSet<CanonicalForm> = sc.iter().map(|c| c.2.clone()).collect();
        let names: Vec<String> = sc.iter().map(|c| c.0.to_string()).collect();
        checks.push(CheckRecord::compare(
            "the self-complementary survivors are exactly the five named",
            anchor,
            "order 9 pattern space",
            "5 true",
            match want {
                Ok(w) if got == w => format!("{} true", got.len()),
                Ok(_) => format!("{} false {names:?}", got.len()),
                Err(e) => e,
            },
            t,
        ));

        let mut listed: BTreeMap<CanonicalForm, &str> = BTreeMap::new();
        let mut bad_names = Vec::new();
        for p in prop9_patterns().into_iter().chain(prop10_patterns()).chain(prop11_patterns()).chain(prop12_patterns()) {
            match realize(p) {
                Ok(g) => {
                    listed.entry(canonical_form(&g)).or_insert(p);
                }
                Err(e) => bad_names.push(e),
            }
        }
        let t = Instant::now();
        checks.push(CheckRecord::compare("every listed graph realizes", "Propositions 9-12", "-", "[]", format!("{bad_names:?}"), t));
        for (spec, g, c) in &survivors {
            let t = Instant::now();
            checks.push(CheckRecord::compare(
                format!("{spec} is one of the graphs listed in Propositions 9-12"),
                "Propositions 9-12",
                g6(g),
                "listed",
                if listed.contains_key(c) { "listed" } else { "not listed" },
                t,
            ));
        }
        let t = Instant::now();
        let example = "(13*4*2*)";
        let present = realize(example).map(|g| survivors.iter().any(|s| s.2 == canonical_form(&g)));
        checks.push(CheckRecord::compare(
            format!("{example} is among the survivors"),
            "Proposition 10",
            example,
            "true",
            present.map_or_else(|e| e, |b| b.to_string()),
            t,
        ));
        CampaignReport::new(
            "section3",
            vec![format!(
                "{} order-9 pattern classes, {} degree-bounded, {} degree-bounded core",
                cands.len(),
                bounded.len(),
                survivors.len()
            )],
            checks,
        )
    }
}
