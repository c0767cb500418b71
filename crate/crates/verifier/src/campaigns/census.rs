use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use tperfect_core::generators::{census_core_counts, order6_listed, order7_listed, wheel};
use tperfect_core::graph::{canonical_form, CanonicalForm};
use tperfect_core::pattern::{PatternSpec, VertexName};
use tperfect_core::Graph;

use super::{g6, Verifier};
use crate::report::{CampaignReport, CheckRecord};
use crate::sweep::{all_graphs, distinct_pattern_graphs};

const ANCHOR: &str = "census";

impl Verifier {
    /// Core classes of pattern graphs of `order` and their complements.
    fn core_classes(&self, order: usize) -> Result<BTreeMap<CanonicalForm, Graph>, String> {
        let mut all: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for (_, g, c) in distinct_pattern_graphs(order) {
            let h = g.complement();
            all.entry(canonical_form(&h)).or_insert(h);
            all.insert(c, g);
        }
        let items: Vec<(CanonicalForm, Graph)> = all.into_iter().collect();
        let core = self.par_map(&items, |(_, g)| self.classifier().is_core(g));
        let mut out = BTreeMap::new();
        for ((c, g), k) in items.into_iter().zip(core) {
            if k.map_err(|e| format!("{}: {e}", g6(&g)))? {
                out.insert(c, g);
            }
        }
        Ok(out)
    }

    fn listed_checks(&self, list: &[&str], v: VertexName, cores: &BTreeSet<CanonicalForm>) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        for p in list {
            let t = Instant::now();
            let spec: PatternSpec = p.parse().expect("transcribed patterns parse");
            let g = spec.realize();
            let c = canonical_form(&g);
            out.push(CheckRecord::compare(format!("{p} is core"), ANCHOR, g6(&g), true, cores.contains(&c), t));
            let t = Instant::now();
            out.push(CheckRecord::compare(
                format!("{p} is almost bipartite"),
                ANCHOR,
                g6(&g),
                true,
                g.is_almost_bipartite(),
                t,
            ));
            let t = Instant::now();
            let x = spec.vertex(v).expect("hole vertex");
            out.push(CheckRecord::compare(
                format!("{p} - {v} is bipartite"),
                ANCHOR,
                g6(&g),
                true,
                g.delete_vertex(x).expect("order > 1").is_bipartite(),
                t,
            ));
        }
        out
    }

    /// Core graphs of orders 5 to 7 containing a 5-hole.
    pub fn verify_small_census(&self) -> CampaignReport {
        let mut checks = Vec::new();
        let mut by_order = BTreeMap::new();
        for (order, want) in census_core_counts() {
            let t = Instant::now();
            let r = self.core_classes(order);
            checks.push(CheckRecord::compare(
                format!("{want} core classes of order {order}"),
                ANCHOR,
                format!("order {order} pattern space and complements"),
                want,
                r.as_ref().map_or_else(|e| e.clone(), |m| m.len().to_string()),
                t,
            ));
            by_order.insert(order, r.map(|m| m.into_keys().collect::<BTreeSet<_>>()).unwrap_or_default());
        }
        let (six, v3) = order6_listed();
        checks.extend(self.listed_checks(&six, v3, &by_order[&6]));
        let (seven, v4) = order7_listed();
        checks.extend(self.listed_checks(&seven, v4, &by_order[&7]));
        let t = Instant::now();
        let mut named = BTreeSet::new();
        for p in &seven {
            let g = p.parse::<PatternSpec>().expect("transcribed patterns parse").realize();
            named.insert(canonical_form(&g));
            named.insert(canonical_form(&g.complement()));
        }
        checks.push(CheckRecord::compare(
            "the order-7 core classes are the eight listed graphs and their complements",
            ANCHOR,
            "order 7",
            true,
            named == by_order[&7],
            t,
        ));
        // every graph with a 5-hole other than W5 and its complement, not
        // just pattern graphs
        let layers = all_graphs(7);
        let w5 = canonical_form(&wheel(5).expect("valid"));
        let w5_bar = canonical_form(&wheel(5).expect("valid").complement());
        for (order, _) in census_core_counts() {
            let t = Instant::now();
            let layer: Vec<_> = layers[order - 1]
                .iter()
                .filter(|g| !g.five_holes().is_empty() && ![&w5, &w5_bar].contains(&&canonical_form(g)))
                .collect();
            let core = self.par_map(&layer, |g| self.classifier().is_core(g));
            let forms: Result<BTreeSet<CanonicalForm>, String> = layer
                .iter()
                .zip(core)
                .filter_map(|(g, k)| match k {
                    Ok(true) => Some(Ok(canonical_form(g))),
                    Ok(false) => None,
                    Err(e) => Some(Err(e.to_string())),
                })
                .collect();
            checks.push(CheckRecord::compare(
                format!("all graphs of order {order}: core classes with a 5-hole, W5 and its complement aside, are the pattern ones"),
                ANCHOR,
                format!("all graphs of order {order}"),
                true,
                forms.map_or_else(|e| e, |f| {
                    let same = f == by_order[&order];
                    if same { "true".into() } else { format!("false: {} classes against {}", f.len(), by_order[&order].len()) }
                }),
                t,
            ));
        }
        let classes: BTreeSet<CanonicalForm> =
            seven.iter().map(|p| canonical_form(&p.parse::<PatternSpec>().expect("parses").realize())).collect();
        CampaignReport::new(
            "census",
            vec![
                "counts are over pattern graphs around a 5-hole and their complements".into(),
                "almost-bipartiteness is checked both for some vertex and for the named hole vertex".into(),
                format!("the {} listed order-7 graphs fall into {} isomorphism classes", seven.len(), classes.len()),
            ],
            checks,
        )
    }
}
