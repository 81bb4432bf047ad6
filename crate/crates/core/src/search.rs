//! Complete backtracking search for an equitable L-coloring of `K_{n,m}`.
//!
//! Vertices are visited `u_1..u_n` then `v_1..v_m`, colors in ascending
//! order. A partial coloring is extended only when the color has spare
//! capacity under the equity bound and is unused on the opposite side.
//! On side `A` a counting bound prunes branches where the remaining
//! vertices outnumber the spare capacity of all colors still available.

use crate::types::{Color, Coloring, KAssignment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub coloring: Option<Coloring>,
    /// Partial colorings visited (one per tentative color placement).
    pub nodes: u64,
}

pub fn find_equitable_coloring(assignment: &KAssignment) -> Option<Coloring> {
    search_equitable_coloring(assignment).coloring
}

pub fn search_equitable_coloring(assignment: &KAssignment) -> SearchOutcome {
    let mut palette: Vec<Color> = assignment
        .lists_uprime()
        .iter()
        .chain(assignment.lists_a())
        .flatten()
        .copied()
        .collect();
    palette.sort_unstable();
    palette.dedup();
    let index_of = |c: &Color| palette.binary_search(c).expect("color is in the palette");
    let lists: Vec<Vec<usize>> = assignment
        .lists_uprime()
        .iter()
        .chain(assignment.lists_a())
        .map(|l| l.iter().map(index_of).collect())
        .collect();

    let mut search = Search {
        n: assignment.instance().n(),
        bound: assignment.equity_bound().get(),
        lists: &lists,
        count: vec![0; palette.len()],
        used_on_uprime: vec![0; palette.len()],
        chosen: vec![0; lists.len()],
        stamp: vec![0; palette.len()],
        epoch: 0,
        nodes: 0,
    };
    let found = search.extend(0);
    let coloring = found.then(|| {
        let n = search.n;
        Coloring {
            colors_uprime: search.chosen[..n].iter().map(|&c| palette[c]).collect(),
            colors_a: search.chosen[n..].iter().map(|&c| palette[c]).collect(),
        }
    });
    SearchOutcome {
        coloring,
        nodes: search.nodes,
    }
}

struct Search<'a> {
    n: usize,
    bound: usize,
    lists: &'a [Vec<usize>],
    count: Vec<usize>,
    used_on_uprime: Vec<usize>,
    chosen: Vec<usize>,
    // scratch marks for the capacity bound
    stamp: Vec<u64>,
    epoch: u64,
    nodes: u64,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.lists.len() {
            return true;
        }
        let on_uprime = pos < self.n;
        if !on_uprime && !self.capacity_suffices(pos) {
            return false;
        }
        for &c in &self.lists[pos] {
            if self.count[c] >= self.bound {
                continue;
            }
            // side A' is colored first, so only A needs the cross-side test
            if !on_uprime && self.used_on_uprime[c] > 0 {
                continue;
            }
            self.nodes += 1;
            self.count[c] += 1;
            if on_uprime {
                self.used_on_uprime[c] += 1;
            }
            self.chosen[pos] = c;
            if self.extend(pos + 1) {
                return true;
            }
            self.count[c] -= 1;
            if on_uprime {
                self.used_on_uprime[c] -= 1;
            }
        }
        false
    }

    fn capacity_suffices(&mut self, pos: usize) -> bool {
        self.epoch += 1;
        let remaining = self.lists.len() - pos;
        let mut capacity = 0;
        for list in &self.lists[pos..] {
            for &c in list {
                if self.stamp[c] != self.epoch {
                    self.stamp[c] = self.epoch;
                    if self.used_on_uprime[c] == 0 {
                        capacity += self.bound - self.count[c];
                    }
                }
            }
            if capacity >= remaining {
                return true;
            }
        }
        capacity >= remaining
    }
}
