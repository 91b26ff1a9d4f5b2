//! Cross-checks the memoized decision-tree search against explicit
//! enumeration of every full adaptive query tree.

use std::collections::HashMap;

use qparity::algorithms::{classical_min_queries, dj_promise_functions, parity_query_complexity};
use qparity::oracles::{classify, enumerate_functions, TruthTable};

type Property = Box<dyn Fn(TruthTable) -> u8>;

#[derive(Clone)]
enum Tree {
    Leaf,
    Query(usize, Box<Tree>, Box<Tree>),
}

/// Every tree that asks exactly `depth` distinct points on every path.
fn full_trees(depth: usize, available: &[usize]) -> Vec<Tree> {
    if depth == 0 {
        return vec![Tree::Leaf];
    }
    let mut out = Vec::new();
    for (k, &x) in available.iter().enumerate() {
        let rest: Vec<usize> = available
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, &y)| y)
            .collect();
        let subtrees = full_trees(depth - 1, &rest);
        for zero in &subtrees {
            for one in &subtrees {
                out.push(Tree::Query(
                    x,
                    Box::new(zero.clone()),
                    Box::new(one.clone()),
                ));
            }
        }
    }
    out
}

fn leaf_of(tree: &Tree, f: TruthTable) -> Vec<bool> {
    let mut path = Vec::new();
    let mut node = tree;
    while let Tree::Query(x, zero, one) = node {
        let answer = f.eval(*x);
        path.push(answer);
        node = if answer { one } else { zero };
    }
    path
}

fn decides<L: PartialEq + Clone>(
    tree: &Tree,
    domain: &[TruthTable],
    property: &impl Fn(TruthTable) -> L,
) -> bool {
    let mut at_leaf: HashMap<Vec<bool>, L> = HashMap::new();
    for &f in domain {
        let label = property(f);
        match at_leaf.get(&leaf_of(tree, f)) {
            Some(seen) if *seen != label => return false,
            Some(_) => {}
            None => {
                at_leaf.insert(leaf_of(tree, f), label);
            }
        }
    }
    true
}

fn brute_force_min_depth<L: PartialEq + Clone>(
    domain: &[TruthTable],
    property: impl Fn(TruthTable) -> L,
) -> usize {
    (0..=4)
        .find(|&d| {
            full_trees(d, &[0, 1, 2, 3])
                .iter()
                .any(|t| decides(t, domain, &property))
        })
        .expect("querying all four points always decides")
}

#[test]
fn tree_counts() {
    assert_eq!(full_trees(1, &[0, 1, 2, 3]).len(), 4);
    assert_eq!(full_trees(2, &[0, 1, 2, 3]).len(), 36);
    assert_eq!(full_trees(4, &[0, 1, 2, 3]).len(), 576);
}

#[test]
fn parity_depth_agrees() {
    let all = enumerate_functions();
    let oracle = brute_force_min_depth(&all, |f| classify(f).parity);
    assert_eq!(oracle, 4);
    assert_eq!(parity_query_complexity(), oracle);
}

#[test]
fn dj_promise_depth_agrees() {
    let domain = dj_promise_functions();
    let constant = |f: TruthTable| matches!(classify(f).ones, 0 | 4);
    let oracle = brute_force_min_depth(&domain, constant);
    assert_eq!(oracle, 3);
    assert_eq!(classical_min_queries(&domain, constant), oracle);
}

#[test]
fn assorted_properties_agree() {
    let all = enumerate_functions();
    let properties: Vec<(&str, Property)> = vec![
        ("constant", Box::new(|_| 0)),
        ("f(01)", Box::new(|f| f.eval(1) as u8)),
        (
            "f(00) and f(11)",
            Box::new(|f| (f.eval(0) && f.eval(3)) as u8),
        ),
        (
            "f(00) or f(01)",
            Box::new(|f| (f.eval(0) || f.eval(1)) as u8),
        ),
        ("majority", Box::new(|f| (f.ones() >= 3) as u8)),
        ("ones count", Box::new(|f| f.ones())),
        ("any one", Box::new(|f| (f.ones() > 0) as u8)),
    ];
    for (name, p) in &properties {
        let oracle = brute_force_min_depth(&all, p);
        assert_eq!(classical_min_queries(&all, p), oracle, "{name}");
    }
}
