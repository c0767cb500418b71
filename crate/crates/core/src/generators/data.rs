//! Transcribed lists and tables, in their published order.
//!
//! This file is the single place where published graph names enter the
//! code. Every entry carries an anchor naming where it was read from, and
//! `checksum_material` feeds a pinned digest so any edit here is deliberate.

use std::fmt::Write;

use crate::pattern::VertexName::{self, U, V};

/// One transcribed pattern with the place it was read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub text: &'static str,
    pub anchor: &'static str,
}

const fn e(text: &'static str, anchor: &'static str) -> Entry {
    Entry { text, anchor }
}

/// Outcome claimed for `G - x` in a clique-deletion row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deletion {
    /// K4-free perfect.
    Star,
    /// Isomorphic to this (t-perfect) pattern expression.
    Named(&'static str),
}

/// `graph` is t-perfect because `clique` is a clique and every `G - x`,
/// `x` in `clique`, is t-perfect as stated in `deletions`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionRow {
    pub graph: &'static str,
    pub clique: [VertexName; 3],
    pub deletions: [Deletion; 3],
    pub anchor: &'static str,
}

/// What an order-8 configuration cell asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellClaim {
    /// `d(u_u) = degree`.
    Degree { u: u8, degree: usize },
    /// The configuration violates observation `obs` at rotation `i`.
    Violates { obs: u8, i: u8 },
    /// The configuration is isomorphic to this pattern.
    Iso(&'static str),
    /// The complement of the configuration is isomorphic to this pattern.
    ComplementIso(&'static str),
}

/// A cell of the order-8 table: `u1, u2, u3` present, the given rings and
/// U-edges, and the claim made about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Cell {
    pub row: &'static str,
    pub col: &'static str,
    pub rings: &'static [u8],
    pub u_edges: &'static [(u8, u8)],
    pub claim: CellClaim,
}

/// `left` and `right` (pattern expressions) are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClaim {
    pub left: String,
    pub right: String,
    pub anchor: &'static str,
}

fn iso(left: &str, right: &str, anchor: &'static str) -> IsoClaim {
    IsoClaim { left: left.to_string(), right: right.to_string(), anchor }
}

const FIGURE2: [Entry; 10] = [
    e("(123451)", "Figure 2(a)"),
    e("(12*3451)", "Figure 2(b)"),
    e("(1*23*451*)", "Figure 2(c)"),
    e("(1234*5*1)", "Figure 2(d)"),
    e("(12*435*1)", "Figure 2(e)"),
    e("(1*2*3*4*5*1*)", "Figure 2(f)"),
    e("(1*23*4*5*1*)", "Figure 2(g)"),
    e("(1*2*3*451*)", "Figure 2(h)"),
    e("(12*34*5*1)", "Figure 2(i)"),
    e("(1*2*435*1*)", "Figure 2(j)"),
];

const FIGURE3: [Entry; 5] = [
    e("(2*413*)", "Figure 3(a)"),
    e("(13*2*4)", "Figure 3(b)"),
    e("(12*3*4)", "Figure 3(c)"),
    e("(1*234*)", "Figure 3(d)"),
    e("(1*324*)", "Figure 3(e)"),
];

const PROP7: [&str; 31] = [
    "(12)",
    "(1|2*)",
    "(12*)",
    "(1*|2*)",
    "(1*2*)",
    "(1|23)",
    "(3*12*)",
    "(1*3*|2*)",
    "(1|2*4)",
    "(142*)",
    "(1|2*4*)",
    "(14*2*)",
    "(1*|2*|4*)",
    "(1*2*4)",
    "(1*2*4*)",
    "(13*4*2*)",
    "(13*4*2)",
    "(1*3*4*2)",
    "(1*2*4*3)",
    "(23*14)",
    "(23*1*4)",
    "(231*4)",
    "(14*32)",
    "(1*2*4*3*1*)",
    "(12*4*3)",
    "(13*2*41)",
    "(13*2*4)",
    "(14|23)",
    "(14*3*2)",
    "(13*|2*4)",
    "(2*413*)",
];

const S: Deletion = Deletion::Star;
const fn n(text: &'static str) -> Deletion {
    Deletion::Named(text)
}
const fn row(graph: &'static str, clique: [VertexName; 3], deletions: [Deletion; 3], anchor: &'static str) -> ReductionRow {
    ReductionRow { graph, clique, deletions, anchor }
}

const T2: &str = "Table 2";
const T3: &str = "Table 3";

const TABLE2: [ReductionRow; 26] = [
    row("(1|23)", [V(3), V(4), U(1)], [S, S, n("(12)")], T2),
    row("(1|2*4)", [V(1), V(2), U(4)], [S, S, n("(1|2*)")], T2),
    row("(142*)", [V(1), V(2), U(4)], [S, n("(1|2*)"), n("(1|2*)")], T2),
    row("(1|2*4*)", [V(1), V(2), U(4)], [S, S, n("(1|2*)")], T2),
    row("(14*2*)", [V(1), V(2), U(4)], [S, S, n("(1|2*)")], T2),
    row("(1*|2*|4*)", [V(1), V(2), U(4)], [S, S, n("(1*|2*)")], T2),
    row("(1*2*4)", [V(1), V(2), U(4)], [S, S, n("(1*2*)")], T2),
    row("(1*2*4*)", [V(4), V(5), U(2)], [S, S, n("(1*|2*|4*)-u2")], T2),
    row("(3*12*)", [V(1), V(5), U(3)], [n("(1*2*4*)-u1"), n("(12*)"), n("(12*)")], T2),
    row("(1*3*|2*)", [V(4), V(5), U(2)], [n("(12*)"), n("(12*)"), n("(1*2*4*)-u1")], T2),
    row("(13*4*2*)", [V(4), V(5), U(2)], [n("(1|2*4*)"), S, n("(1*2*4)")], T2),
    row("(13*4*2)", [V(4), V(5), U(2)], [S, S, n("(1*2*4)")], T2),
    row("(1*3*4*2)", [V(4), V(5), U(2)], [S, S, n("(1*2*4*)")], T2),
    row("(1*2*4*3)", [V(1), V(5), U(3)], [S, S, n("(1*2*4*)")], T2),
    row("(23*14)", [V(4), V(5), U(2)], [S, S, n("(142*)")], T2),
    row("(23*1*4)", [V(4), V(5), U(2)], [S, S, n("(14*2*)")], T2),
    row("(231*4)", [V(3), V(4), U(1)], [S, S, n("(1|23)")], T2),
    row("(14*32)", [V(3), V(4), U(1)], [S, S, n("(12*3451)-{u3,u4}")], T2),
    row("(1*2*4*3*1*)", [V(4), V(5), U(2)], [n("(1*2*4*)"), S, n("(1*2*4*)")], T2),
    row("(12*4*3)", [V(3), V(4), U(1)], [S, S, n("(1*2*4*3)-u1")], T2),
    row("(13*2*41)", [V(4), V(5), U(2)], [S, S, n("(142*)")], T2),
    row("(13*2*4)", [V(4), V(5), U(2)], [S, S, n("(1|2*4)")], T2),
    row("(14|23)", [V(3), V(4), U(1)], [n("(1|23)"), S, n("(1|23)")], T2),
    row("(14*3*2)", [V(3), V(4), U(1)], [S, S, n("(1234*5*1)-{u1,u2}")], T2),
    row("(13*|2*4)", [V(4), V(5), U(2)], [n("(1|2*4)"), S, n("(1|2*4)")], T2),
    row("(2*413*)", [V(4), V(5), U(2)], [n("(142*)"), S, n("(142*)")], T2),
];

const TABLE3: [ReductionRow; 5] = [
    row("(1*324*)", [V(3), V(4), U(1)], [S, S, n("(231*4)-u4")], T3),
    row("(213*4)", [V(1), V(2), U(4)], [S, S, n("(231*4)-u4")], T3),
    row("(213*4*)", [V(1), V(2), U(4)], [S, S, n("(231*4)-u4")], T3),
    row("(14*32*)", [V(3), V(4), U(1)], [S, S, n("(1*23*451*)-{u4,u5}")], T3),
    row("(14*3*2*)", [V(3), V(4), U(1)], [S, S, n("(1*2*3*451*)-{u4,u5}")], T3),
];

const ALL_RINGS: &[u8] = &[1, 2, 3];
const C_ALL: &[(u8, u8)] = &[(1, 2), (1, 3), (2, 3)];
const C_12_13: &[(u8, u8)] = &[(1, 2), (1, 3)];
const C_12_23: &[(u8, u8)] = &[(1, 2), (2, 3)];
const C_12: &[(u8, u8)] = &[(1, 2)];
const C_13: &[(u8, u8)] = &[(1, 3)];
const COLS: [(&str, &[(u8, u8)]); 5] =
    [("all", C_ALL), ("{u1u2, u1u3}", C_12_13), ("{u1u2, u2u3}", C_12_23), ("{u1u2}", C_12), ("{u1u3}", C_13)];
const ROWS: [(&str, &[u8]); 8] = [
    ("all", ALL_RINGS),
    ("{u1v1, u2v2}", &[1, 2]),
    ("{u1v1, u3v3}", &[1, 3]),
    ("{u2v2, u3v3}", &[2, 3]),
    ("{u1v1}", &[1]),
    ("{u2v2}", &[2]),
    ("{u3v3}", &[3]),
    ("none", &[]),
];

const fn d(u: u8, degree: usize) -> CellClaim {
    CellClaim::Degree { u, degree }
}
const fn ob(obs: u8, i: u8) -> CellClaim {
    CellClaim::Violates { obs, i }
}
const fn is(text: &'static str) -> CellClaim {
    CellClaim::Iso(text)
}

/// Claims in row-major order, rows and columns as in `ROWS` and `COLS`.
const TABLE1: [[CellClaim; 5]; 8] = [
    [d(1, 5), d(1, 5), d(2, 5), ob(1, 3), is("(1*3*|2*)")],
    [d(1, 5), d(1, 5), d(2, 5), d(3, 2), is("(1*3|2*)")],
    [d(1, 5), d(1, 5), is("(1*23*)"), ob(1, 3), d(2, 2)],
    [d(2, 5), is("(3*12*)"), d(2, 5), ob(1, 3), is("(1*3|2*)")],
    [d(1, 5), d(1, 5), is("(1*23)"), d(3, 2), d(2, 2)],
    [d(2, 5), ob(4, 2), d(2, 5), d(3, 2), ob(4, 2)],
    [d(3, 5), is("(3*12)"), is("(1*23)"), ob(1, 3), d(2, 2)],
    [CellClaim::ComplementIso("(1*|2*|4*)"), ob(4, 2), is("(123)"), d(3, 2), d(2, 2)],
];

const LEMMA8_NAMED: [&str; 8] =
    ["(1*3*|2*)", "(1*3|2*)", "(1*23*)", "(3*12*)", "(1*23)", "(3*12)", "(1*|2*|4*)", "(123)"];

const PROP9: [&str; 10] = [
    "(123451)-u1",
    "(1*2*3*4*5*1*)-u1",
    "(1*23*451*)-u3",
    "(1234*5*1)-u4",
    "(1*2*3*451*)-u4",
    "(12*34*5*1)-u1",
    "(1*23*451*)-u4",
    "(1*2*3*451*)-u1",
    "(1*23*451*)-u2",
    "(1234*5*1)-u2",
];

const PROP10: [&str; 5] = ["(13*4*2*)", "(13*4*2)", "(1*3*4*2)", "(13*|2*4)", "(2*413*)"];

const PROP11: [&str; 5] = ["(12*4*3)", "(1*2*4*3*1*)", "(1*2*4*3)", "(12*435*1)-u2", "(1*2*435*1*)-u5"];

const PROP12: [&str; 11] = [
    "(23*14)",
    "(23*1*4)",
    "(231*4)",
    "(14*32)",
    "(13*2*41)",
    "(13*2*4)",
    "(14|23)",
    "(14*3*2)",
    "(1*2*435*1*)-u3",
    "(12*435*1)-u3",
    "(12*435*1)-u1",
];

const LEMMA13: [&str; 5] = ["(1*23*451*)-u2", "(1234*5*1)-u2", "(12*435*1)-u1", "(13*2*4)", "(2*413*)"];

const ORDER6: [&str; 2] = ["(1)", "(1*)"];
const ORDER7: [&str; 8] = ["(12)", "(1*2)", "(12*)", "(1*2*)", "(1|2)", "(1*|2)", "(1|2*)", "(1*|2*)"];

/// Non-isomorphic graphs on `1..=7` vertices.
pub const GRAPH_COUNTS_BY_ORDER: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
/// Non-isomorphic graphs on 10 vertices; recorded, never enumerated.
pub const GRAPH_COUNT_ORDER_10: u64 = 12_005_168;

pub fn figure2_entries() -> &'static [Entry] {
    &FIGURE2
}

/// The ten (3,3)-partitionable graphs: first row, then second row.
pub fn figure2_patterns() -> Vec<&'static str> {
    FIGURE2.iter().map(|e| e.text).collect()
}

pub fn figure3_entries() -> &'static [Entry] {
    &FIGURE3
}

/// The five self-complementary t-perfect graphs of order nine.
pub fn figure3_patterns() -> Vec<&'static str> {
    FIGURE3.iter().map(|e| e.text).collect()
}

pub fn prop7_patterns() -> Vec<&'static str> {
    PROP7.to_vec()
}

pub fn prop7_entries() -> Vec<Entry> {
    PROP7.iter().map(|&t| e(t, "Proposition 7")).collect()
}

pub fn table2_rows() -> &'static [ReductionRow] {
    &TABLE2
}

pub fn table3_rows() -> &'static [ReductionRow] {
    &TABLE3
}

/// All forty cells of the order-8 table, row-major.
pub fn table1_cells() -> Vec<Table1Cell> {
    let mut out = Vec::with_capacity(40);
    for (r, &(row, rings)) in ROWS.iter().enumerate() {
        for (c, &(col, u_edges)) in COLS.iter().enumerate() {
            out.push(Table1Cell { row, col, rings, u_edges, claim: TABLE1[r][c] });
        }
    }
    out
}

/// Distinct graph names appearing in the order-8 table, in reading order.
pub fn table1_graph_names() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in table1_cells() {
        if let CellClaim::Iso(t) | CellClaim::ComplementIso(t) = c.claim {
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out
}

/// The graphs whose t-perfection settles the order-8 case.
pub fn lemma8_named() -> Vec<&'static str> {
    LEMMA8_NAMED.to_vec()
}

pub fn lemma8_isomorphisms() -> Vec<IsoClaim> {
    let a = "Lemma 8 proof";
    vec![
        iso("(1*3|2*)", "(2*413*)-u1", a),
        iso("(3*12)", "(12*435*1)-{u1,u2}", a),
        iso("(1*23*)", "(12*435*1)-{u3,u4}", a),
        iso("(1*23)", "(12*3451)-{u1,u5}", a),
        iso("(123)", "(123451)-{u1,u5}", a),
    ]
}

/// Symmetries and deletions stated for the two graphs of Lemma 20.
pub fn lemma20_isomorphisms() -> Vec<IsoClaim> {
    let a = "Lemma 20 proof";
    let mut out = Vec::new();
    for g in ["(12*435*1)", "(1*2*435*1*)"] {
        out.push(iso(&format!("{g}-u2"), &format!("{g}-u5"), a));
        out.push(iso(&format!("{g}-u3"), &format!("{g}-u4"), a));
        for i in 1..=5 {
            out.push(iso(&format!("{g}-u{i}"), &format!("{g}-v{i}"), a));
        }
        out.push(iso(&format!("{g}-u1"), "(1*324*)", a));
    }
    out.push(iso("(12*435*1)-u2", "(213*4)", a));
    out.push(iso("(1*2*435*1*)-u2", "(213*4*)", a));
    out.push(iso("(12*435*1)-u3", "(14*32*)", a));
    out.push(iso("(1*2*435*1*)-u3", "(14*3*2*)", a));
    out
}

pub fn theorem2_isomorphisms() -> Vec<IsoClaim> {
    let a = "Theorem 2 proof";
    vec![
        iso("(12*3*4)", "(1234*5*1)-u2", a),
        iso("(1*234*)", "(1*23*451*)-u2", a),
        iso("(1*324*)", "(12*435*1)-u1", a),
    ]
}

/// Order-9 candidates with all of `u1u2, u2u3, u3u4`: deletions of
/// (3,3)-partitionable graphs.
pub fn prop9_patterns() -> Vec<&'static str> {
    PROP9.to_vec()
}

pub fn prop10_patterns() -> Vec<&'static str> {
    PROP10.to_vec()
}

pub fn prop11_patterns() -> Vec<&'static str> {
    PROP11.to_vec()
}

pub fn prop12_patterns() -> Vec<&'static str> {
    PROP12.to_vec()
}

/// The only self-complementary degree-bounded core graphs of order nine.
pub fn lemma13_self_complementary() -> Vec<&'static str> {
    LEMMA13.to_vec()
}

/// Core graphs per order, up to isomorphism: `(order, count)`.
pub fn census_core_counts() -> [(usize, usize); 3] {
    [(5, 1), (6, 2), (7, 16)]
}

/// The order-6 core graphs, each bipartite once `v3` is removed.
pub fn order6_listed() -> (Vec<&'static str>, VertexName) {
    (ORDER6.to_vec(), V(3))
}

/// Half of the order-7 core graphs, each bipartite once `v4` is removed.
pub fn order7_listed() -> (Vec<&'static str>, VertexName) {
    (ORDER7.to_vec(), V(4))
}

fn dump_rows(out: &mut String, title: &str, rows: &[ReductionRow]) {
    for r in rows {
        let k: Vec<String> = r.clique.iter().map(|v| v.to_string()).collect();
        let dels: Vec<&str> = r
            .deletions
            .iter()
            .map(|d| match d {
                Deletion::Star => "*",
                Deletion::Named(t) => t,
            })
            .collect();
        writeln!(out, "{title} {} K={} {}", r.graph, k.join(","), dels.join(" ")).unwrap();
    }
}

/// Every transcribed value as text, one fact per line.
pub fn checksum_material() -> String {
    let mut out = String::new();
    for x in FIGURE2.iter().chain(&FIGURE3) {
        writeln!(out, "{} {}", x.anchor, x.text).unwrap();
    }
    for t in PROP7 {
        writeln!(out, "prop7 {t}").unwrap();
    }
    dump_rows(&mut out, "t2", &TABLE2);
    dump_rows(&mut out, "t3", &TABLE3);
    for c in table1_cells() {
        writeln!(out, "t1 [{}] [{}] {:?} {:?} {:?}", c.row, c.col, c.rings, c.u_edges, c.claim).unwrap();
    }
    for (name, list) in [
        ("l8", &LEMMA8_NAMED[..]),
        ("p9", &PROP9[..]),
        ("p10", &PROP10[..]),
        ("p11", &PROP11[..]),
        ("p12", &PROP12[..]),
        ("l13", &LEMMA13[..]),
        ("o6", &ORDER6[..]),
        ("o7", &ORDER7[..]),
    ] {
        writeln!(out, "{name} {}", list.join(" ")).unwrap();
    }
    for c in lemma8_isomorphisms().iter().chain(&lemma20_isomorphisms()).chain(&theorem2_isomorphisms()) {
        writeln!(out, "{} {} ~ {}", c.anchor, c.left, c.right).unwrap();
    }
    writeln!(out, "counts {:?} {GRAPH_COUNT_ORDER_10} {:?}", GRAPH_COUNTS_BY_ORDER, census_core_counts()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use sha2::{Digest, Sha256};

    use super::*;
    use crate::pattern::{PatternExpr, PatternSpec};

    #[test]
    fn lengths() {
        assert_eq!(figure2_patterns().len(), 10);
        assert_eq!(figure3_patterns().len(), 5);
        assert_eq!(prop7_patterns().len(), 31);
        assert_eq!(table2_rows().len(), 26);
        assert_eq!(table3_rows().len(), 5);
        assert_eq!(table1_cells().len(), 40);
        assert_eq!(lemma13_self_complementary().len(), 5);
    }

    #[test]
    fn first_entries() {
        assert_eq!(figure2_patterns()[0], "(123451)");
        assert_eq!(figure3_patterns()[1], "(13*2*4)");
        let r = table2_rows()[0];
        assert_eq!(r.graph, "(1|23)");
        assert_eq!(r.clique, [V(3), V(4), U(1)]);
        assert_eq!(r.deletions, [Deletion::Star, Deletion::Star, Deletion::Named("(12)")]);
    }

    #[test]
    fn table2_covers_the_nonpath_prop7_graphs() {
        // the five two-vertex and two ring-only graphs are settled directly
        let rows: Vec<&str> = table2_rows().iter().map(|r| r.graph).collect();
        let missing: Vec<&str> = prop7_patterns().into_iter().filter(|p| !rows.contains(p)).collect();
        assert_eq!(missing, vec!["(12)", "(1|2*)", "(12*)", "(1*|2*)", "(1*2*)"]);
    }

    #[test]
    fn table1_names_match_the_lemma_list() {
        let mut a = table1_graph_names();
        let mut b = lemma8_named();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn every_string_parses() {
        let plain = figure2_patterns()
            .into_iter()
            .chain(figure3_patterns())
            .chain(prop7_patterns())
            .chain(table2_rows().iter().chain(table3_rows()).map(|r| r.graph))
            .chain(lemma8_named())
            .chain(prop10_patterns())
            .chain(order6_listed().0)
            .chain(order7_listed().0);
        for t in plain {
            let spec: PatternSpec = t.parse().unwrap_or_else(|e| panic!("{t}: {e}"));
            assert_eq!(spec.to_string().parse::<PatternSpec>().unwrap(), spec);
        }
        let exprs = prop9_patterns()
            .into_iter()
            .chain(prop11_patterns())
            .chain(prop12_patterns())
            .chain(lemma13_self_complementary())
            .map(str::to_string)
            .chain(table2_rows().iter().chain(table3_rows()).flat_map(|r| {
                r.deletions.iter().filter_map(|d| match d {
                    Deletion::Named(t) => Some(t.to_string()),
                    Deletion::Star => None,
                })
            }))
            .chain(
                lemma8_isomorphisms()
                    .into_iter()
                    .chain(lemma20_isomorphisms())
                    .chain(theorem2_isomorphisms())
                    .flat_map(|c| [c.left, c.right]),
            );
        for t in exprs {
            let x: PatternExpr = t.parse().unwrap_or_else(|e| panic!("{t}: {e}"));
            x.realize().unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }

    #[test]
    fn checksum_pins_the_transcriptions() {
        let digest = hex::encode(Sha256::digest(checksum_material().as_bytes()));
        assert_eq!(digest, "50e6fb3b9b21c22eb0bea07198e098367c134b9a0359326cc259eede6a3090c1");
    }
}
