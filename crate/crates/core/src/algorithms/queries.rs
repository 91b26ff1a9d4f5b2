//! Deterministic classical query complexity by exhaustive search over
//! adaptive decision trees.

use std::collections::HashMap;

use crate::oracles::{classify, enumerate_functions, Parity, TruthTable};

const INPUTS: usize = 4;

/// Minimum depth of an adaptive decision tree that queries `f` at input
/// points and outputs `property(f)` correctly for every `f` in `domain`.
///
/// The domain holds at most 32 tables (in practice a subset of the 16).
pub fn classical_min_queries<L, P>(domain: &[TruthTable], property: P) -> usize
where
    L: PartialEq,
    P: Fn(TruthTable) -> L,
{
    assert!(domain.len() <= 32, "domain larger than 32 functions");
    let labels: Vec<L> = domain.iter().map(|&f| property(f)).collect();
    let full = if domain.len() == 32 {
        u32::MAX
    } else {
        (1u32 << domain.len()) - 1
    };
    let mut search = Search {
        domain,
        labels: &labels,
        memo: HashMap::new(),
    };
    search.depth(full, 0)
}

struct Search<'a, L> {
    domain: &'a [TruthTable],
    labels: &'a [L],
    memo: HashMap<(u32, u8), usize>,
}

impl<L: PartialEq> Search<'_, L> {
    fn members(&self, alive: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.domain.len()).filter(move |i| alive >> i & 1 == 1)
    }

    fn is_decided(&self, alive: u32) -> bool {
        let mut it = self.members(alive);
        match it.next() {
            None => true,
            Some(first) => it.all(|i| self.labels[i] == self.labels[first]),
        }
    }

    /// `alive` is the set of functions consistent with the answers so far,
    /// `queried` the set of input points already asked.
    fn depth(&mut self, alive: u32, queried: u8) -> usize {
        if self.is_decided(alive) {
            return 0;
        }
        if let Some(&d) = self.memo.get(&(alive, queried)) {
            return d;
        }
        let mut best = usize::MAX;
        for x in (0..INPUTS).filter(|x| queried >> x & 1 == 0) {
            let (mut zero, mut one) = (0u32, 0u32);
            for i in self.members(alive) {
                if self.domain[i].eval(x) {
                    one |= 1 << i;
                } else {
                    zero |= 1 << i;
                }
            }
            let next = queried | 1 << x;
            let worst = self.depth(zero, next).max(self.depth(one, next));
            best = best.min(worst.saturating_add(1));
        }
        self.memo.insert((alive, queried), best);
        best
    }
}

/// Query complexity of deciding even/odd over all 16 functions.
pub fn parity_query_complexity() -> usize {
    classical_min_queries(&enumerate_functions(), |f| classify(f).parity)
}

/// Constant and balanced functions: classes `[0,4]`, `[2,2]`, `[4,0]`.
pub fn dj_promise_functions() -> Vec<TruthTable> {
    enumerate_functions()
        .into_iter()
        .filter(|f| classify(*f).parity == Parity::Even)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_needs_all_four_queries() {
        assert_eq!(parity_query_complexity(), 4);
    }

    #[test]
    fn constant_property_needs_no_queries() {
        assert_eq!(
            classical_min_queries(&enumerate_functions(), |_| Parity::Even),
            0
        );
    }

    #[test]
    fn dj_promise_needs_three() {
        let domain = dj_promise_functions();
        assert_eq!(domain.len(), 8);
        let constant = |f: TruthTable| matches!(classify(f).ones, 0 | 4);
        assert_eq!(classical_min_queries(&domain, constant), 3);
    }

    #[test]
    fn single_point_property_needs_one_query() {
        assert_eq!(
            classical_min_queries(&enumerate_functions(), |f| f.eval(2)),
            1
        );
    }

    #[test]
    fn identifying_the_function_needs_four() {
        assert_eq!(
            classical_min_queries(&enumerate_functions(), |f| f.index()),
            4
        );
    }

    #[test]
    fn empty_domain_is_trivially_decided() {
        assert_eq!(classical_min_queries(&[], |f| f.index()), 0);
    }
}
