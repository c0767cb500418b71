use std::time::Instant;

use tperfect_core::decision::{check_observation, label_five_hole, OBSERVATIONS};
use tperfect_core::generators::{lemma8_isomorphisms, lemma8_named, table1_cells, CellClaim, Table1Cell};
use tperfect_core::graph::is_isomorphic;
use tperfect_core::pattern::{PatternSpec, VertexName};
use tperfect_core::{Graph, VertexSet};

use super::{g6, realize, Verifier};
use crate::report::{CampaignReport, CheckRecord};
use crate::sweep::distinct_pattern_graphs;

const ANCHOR: &str = "Table 1";

/// A vertex of degree 2 off some 5-hole (the given one if any).
fn degree_two_off_hole(g: &Graph, hole: Option<&[usize]>) -> bool {
    let holes = match hole {
        Some(h) => vec![h.to_vec()],
        None => g.five_holes(),
    };
    holes.iter().any(|h| {
        let on: VertexSet = h.iter().copied().collect();
        g.vertices().difference(on).iter().any(|u| g.degree(u) == 2)
    })
}

impl Verifier {
    fn cell_check(&self, c: &Table1Cell) -> CheckRecord {
        let t = Instant::now();
        let spec = PatternSpec::from_parts([1, 2, 3], c.u_edges.iter().copied(), c.rings.iter().copied())
            .expect("indices in range");
        let g = spec.realize();
        let at = format!("[{} x {}] {spec}", c.row, c.col);
        let input = g6(&g);
        match c.claim {
            CellClaim::Degree { u, degree } => {
                let v = spec.vertex(VertexName::U(u)).expect("u1..u3 present");
                CheckRecord::compare(format!("{at}: d(u{u}) = {degree}"), ANCHOR, input, degree, g.degree(v), t)
            }
            CellClaim::Violates { obs, i } => {
                let observed = match label_five_hole(&g, &spec.hole()) {
                    Ok(lab) => {
                        if check_observation(&g, &lab, obs, i) {
                            "holds"
                        } else {
                            "violated"
                        }
                    }
                    .to_string(),
                    Err(e) => e.to_string(),
                };
                let name = OBSERVATIONS[obs as usize - 1];
                CheckRecord::compare(format!("{at}: violates {name} at i = {i}"), ANCHOR, input, "violated", observed, t)
            }
            CellClaim::Iso(name) | CellClaim::ComplementIso(name) => {
                let comp = matches!(c.claim, CellClaim::ComplementIso(_));
                let h = if comp { g.complement() } else { g };
                let observed = realize(name).map_or_else(|e| e, |n| is_isomorphic(&h, &n).to_string());
                let what = if comp { "its complement is" } else { "is" };
                CheckRecord::compare(format!("{at}: {what} isomorphic to {name}"), ANCHOR, input, true, observed, t)
            }
        }
    }

    /// Every cell of the order-8 table, the graphs that close Lemma 8, and
    /// the lemma itself over every order-8 core pattern graph.
    pub fn verify_table1_and_lemma8(&self) -> CampaignReport {
        let cells = table1_cells();
        let mut checks = self.par_map(&cells, |c| self.cell_check(c));
        let named = lemma8_named();
        checks.extend(self.par_map(&named, |p| {
            self.on_pattern(p, format!("{p} is t-perfect"), "Lemma 8 proof", true, |g| self.t_perfect(g))
        }));
        let isos = lemma8_isomorphisms();
        checks.extend(self.par_map(&isos, |c| self.iso_check(c)));

        let t = Instant::now();
        let cands = distinct_pattern_graphs(8);
        let core = self.par_map(&cands, |(_, g, _)| self.classifier().is_core(g));
        let cores: Vec<_> = cands.iter().zip(core).filter(|(_, c)| matches!(c, Ok(true) | Err(_))).collect();
        checks.push(CheckRecord::compare(
            "every order-8 pattern graph has a core decision",
            "Lemma 8",
            "order 8 pattern space",
            0,
            cores.iter().filter(|(_, c)| c.is_err()).count(),
            t,
        ));
        let cores: Vec<_> = cores.into_iter().filter(|(_, c)| c.is_ok()).map(|(c, _)| c).collect();
        checks.extend(self.par_map(&cores, |(spec, g, _)| {
            let t = Instant::now();
            let h = g.complement();
            let cl = self.classifier();
            let observed = match (cl.is_t_perfect(g), cl.is_t_perfect(&h)) {
                (Ok(a), Ok(b)) => {
                    (a || b || degree_two_off_hole(g, Some(&spec.hole())) || degree_two_off_hole(&h, None)).to_string()
                }
                (Err(e), _) | (_, Err(e)) => e.to_string(),
            };
            CheckRecord::compare(
                format!("core {spec}: it or its complement is t-perfect or has a degree-2 vertex in U"),
                "Lemma 8",
                g6(g),
                true,
                observed,
                t,
            )
        }));
        CampaignReport::new(
            "table1",
            vec![format!(
                "Lemma 8 swept over the {} order-8 pattern classes, {} of them core",
                cands.len(),
                cores.len()
            )],
            checks,
        )
    }
}
