use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{is_t_perfect_with, one_step_t_minors, DecisionError, TPerfection};
use crate::graph::{canonize, graph6_encode, CanonicalForm, Graph};
use crate::polytope::{DdOptions, RatVector};

/// Classification of one isomorphism class, stated on its canonical
/// representative: `witness` is in the canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub graph: Graph,
    pub canonical: CanonicalForm,
    pub t_perfect: bool,
    pub witness: Option<RatVector>,
    pub minimally_t_imperfect: Option<bool>,
    pub core: Option<bool>,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 7)?;
        st.serialize_field("graph6", &graph6_encode(&self.graph))?;
        st.serialize_field("canonical", &self.canonical.to_hex())?;
        st.serialize_field("n", &self.graph.order())?;
        st.serialize_field("t_perfect", &self.t_perfect)?;
        st.serialize_field("witness", &self.witness.as_ref().map(|w| w.to_strings()))?;
        st.serialize_field("minimally_t_imperfect", &self.minimally_t_imperfect)?;
        st.serialize_field("core", &self.core)?;
        st.end()
    }
}

type Slot<T> = Arc<OnceLock<Result<T, DecisionError>>>;

/// Memoizing front end shared by all campaigns. Each isomorphism class has
/// its polytope enumerated at most once, even under concurrent use.
pub struct Classifier {
    opts: DdOptions,
    tp: DashMap<CanonicalForm, Slot<TPerfection>>,
    verdicts: DashMap<CanonicalForm, Slot<Verdict>>,
    runs: AtomicUsize,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier::new(DdOptions::default())
    }
}

impl Classifier {
    pub fn new(opts: DdOptions) -> Self {
        Classifier { opts, tp: DashMap::new(), verdicts: DashMap::new(), runs: AtomicUsize::new(0) }
    }

    pub fn options(&self) -> &DdOptions {
        &self.opts
    }

    /// Number of t-perfection decisions actually computed.
    pub fn decisions_computed(&self) -> usize {
        self.runs.load(Ordering::Relaxed)
    }

    pub fn cached_classes(&self) -> usize {
        self.tp.len()
    }

    fn canonical_tp(&self, c: &Graph, key: &CanonicalForm) -> Result<TPerfection, DecisionError> {
        let slot = self.tp.entry(key.clone()).or_default().clone();
        slot.get_or_init(|| {
            self.runs.fetch_add(1, Ordering::Relaxed);
            is_t_perfect_with(c, &self.opts)
        })
        .clone()
    }

    /// t-perfection of `g`, with the witness in `g`'s own labelling.
    pub fn t_perfection(&self, g: &Graph) -> Result<TPerfection, DecisionError> {
        let c = canonize(g);
        let r = self.canonical_tp(&c.graph, &c.form)?;
        Ok(TPerfection { t_perfect: r.t_perfect, witness: r.witness.map(|w| w.permuted(&c.order)) })
    }

    pub fn is_t_perfect(&self, g: &Graph) -> Result<bool, DecisionError> {
        let c = canonize(g);
        Ok(self.canonical_tp(&c.graph, &c.form)?.t_perfect)
    }

    fn minors_t_perfect(&self, g: &Graph) -> Result<bool, DecisionError> {
        for m in one_step_t_minors(g) {
            if !self.is_t_perfect(&m.graph)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_minimally_t_imperfect(&self, g: &Graph) -> Result<bool, DecisionError> {
        Ok(!self.is_t_perfect(g)? && self.minors_t_perfect(g)?)
    }

    pub fn is_core(&self, g: &Graph) -> Result<bool, DecisionError> {
        Ok(self.minors_t_perfect(g)? && self.minors_t_perfect(&g.complement())?)
    }

    pub fn classify(&self, g: &Graph) -> Result<Verdict, DecisionError> {
        let c = canonize(g);
        let slot = self.verdicts.entry(c.form.clone()).or_default().clone();
        slot.get_or_init(|| {
            let tp = self.canonical_tp(&c.graph, &c.form)?;
            let minors_ok = self.minors_t_perfect(&c.graph)?;
            let core = minors_ok && self.minors_t_perfect(&c.graph.complement())?;
            Ok(Verdict {
                graph: c.graph,
                canonical: c.form.clone(),
                t_perfect: tp.t_perfect,
                witness: tp.witness,
                minimally_t_imperfect: Some(!tp.t_perfect && minors_ok),
                core: Some(core),
            })
        })
        .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Rational;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn k4_verdict() {
        let k4 = Graph::empty(4).unwrap().complement();
        let v = Classifier::default().classify(&k4).unwrap();
        assert!(!v.t_perfect);
        assert_eq!(v.minimally_t_imperfect, Some(true));
        assert_eq!(v.core, Some(true));
        assert_eq!(v.witness, Some(RatVector::constant(4, Rational::new(1, 3))));
    }

    #[test]
    fn c7_complement_and_p4() {
        let cl = Classifier::default();
        let v = cl.classify(&cycle(7).complement()).unwrap();
        assert!(!v.t_perfect);
        assert_eq!(v.minimally_t_imperfect, Some(true));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(cl.classify(&p4).unwrap().t_perfect);
    }

    #[test]
    fn memo_is_shared_across_labellings() {
        let cl = Classifier::default();
        let g = cycle(7).complement();
        let h = g.permute(&[3, 1, 4, 0, 6, 5, 2]);
        let a = cl.classify(&g).unwrap();
        let runs = cl.decisions_computed();
        let b = cl.classify(&h).unwrap();
        assert_eq!(a, b);
        assert_eq!(cl.decisions_computed(), runs);
    }

    #[test]
    fn witness_follows_input_labelling() {
        // K4 on vertices 1, 2, 4, 5 of a 6-vertex graph
        let mut g = Graph::empty(6).unwrap();
        for (a, b) in [(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (4, 5), (0, 3)] {
            g.add_edge(a, b).unwrap();
        }
        let w = Classifier::default().t_perfection(&g).unwrap().witness.unwrap();
        assert_eq!(w.to_string(), "0/1 1/3 1/3 0/1 1/3 1/3");
    }

    #[test]
    fn verdict_json_shape() {
        let k4 = Graph::empty(4).unwrap().complement();
        let v = Classifier::default().classify(&k4).unwrap();
        let mut out = Vec::new();
        let mut ser = serde_json::Serializer::new(&mut out);
        v.serialize(&mut ser).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with(r#"{"graph6":"C~","canonical":"04fc","n":4,"t_perfect":false,"witness":["1/3","1/3","1/3","1/3"]"#), "{text}");
    }
}
