#![allow(dead_code)]

use dks_core::graph::{Graph, Vertex};
use dks_core::value::Value;

/// Seven-vertex outerplanar graph: outer cycle c b a e f g d, chords b-e,
/// b-g and c-g.
pub fn outerplanar7() -> Graph {
    let names = ["a", "b", "c", "d", "e", "f", "g"];
    let id = |s: &str| names.iter().position(|&n| n == s).unwrap() as Vertex;
    let pairs = [
        ("c", "b"),
        ("b", "a"),
        ("a", "e"),
        ("e", "f"),
        ("f", "g"),
        ("g", "d"),
        ("d", "c"),
        ("b", "e"),
        ("b", "g"),
        ("c", "g"),
    ];
    let edges: Vec<_> = pairs.iter().map(|&(u, v)| (id(u), id(v))).collect();
    Graph::from_edges(7, &edges)
        .unwrap()
        .with_names(names.iter().map(|s| s.to_string()).collect())
}

/// Tables in the dump layout: a label line, rows `00` to `11` of
/// tab-separated cells, a blank line.
pub fn parse_tables(text: &str) -> Vec<(String, [Vec<Value>; 4])> {
    text.split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .map(|block| {
            let mut lines = block.lines();
            let label = lines.next().unwrap().to_owned();
            let rows: Vec<Vec<Value>> = lines
                .map(|l| {
                    l.split('\t')
                        .skip(1)
                        .map(|c| match c {
                            "∅" => Value::ABSENT,
                            n => Value::new(n.parse().unwrap()),
                        })
                        .collect()
                })
                .collect();
            (label, rows.try_into().unwrap())
        })
        .collect()
}

pub fn printed_tables() -> Vec<(String, [Vec<Value>; 4])> {
    parse_tables(include_str!("../../../../data/printed_tables.tsv"))
}
