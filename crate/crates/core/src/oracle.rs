//! Ground truth by exhaustive search.
//!
//! [`decide_choosable`] enumerates k-assignments of `K_{n,m}` up to color
//! relabeling and permutation of same-side vertices, and runs the complete
//! coloring search on each one.
//!
//! Enumeration is orderly: lists are generated vertex by vertex
//! (`u_1..u_n`, then `v_1..v_m`) in lexicographic order, subject to
//!
//! * restricted growth: the colors a list introduces for the first time are
//!   the next consecutive unused labels, and
//! * within each side, lists are nondecreasing in lexicographic order.
//!
//! The lexicographically least member of every orbit satisfies both (a
//! violation could be swapped away to get a smaller member), so every orbit
//! is visited at least once. Some orbits are visited more than once; that
//! only costs time. Assignments with a safe color (see `Enumerator::viable`)
//! are skipped, since each bad one has a bad counterpart without one.
//!
//! Leaves are visited in lexicographic order, so the first uncolorable one
//! is the least witness. Work is split into prefix slices processed in
//! fixed-size batches; the verdict, witness and counters depend only on the
//! slices, never on the thread count.

use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::criteria;
use crate::error::OracleError;
use crate::par::{self, Parallelism};
use crate::search::search_equitable_coloring;
use crate::types::{Color, Instance, KAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleStatus {
    Choosable,
    NotChoosable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub status: OracleStatus,
    /// An assignment with no equitable coloring; present iff `NotChoosable`.
    pub witness: Option<KAssignment>,
    pub assignments_examined: u64,
    pub colorings_examined: u64,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideConfig {
    /// Caps the color universe below `k·(n+m)`.
    pub universe_size: Option<usize>,
    /// Most canonical assignments to examine before giving up.
    pub budget: u64,
    pub parallelism: Parallelism,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            universe_size: None,
            budget: DEFAULT_BUDGET,
            parallelism: Parallelism::default(),
        }
    }
}

/// The uniform assignment `{0..k-1}` everywhere. It has no equitable
/// coloring when `m > ⌈(m+n)/k⌉·(k−1)`: whatever colors `A'` takes, side `A`
/// has at most `k−1` colors of capacity `⌈(m+n)/k⌉` left.
pub fn badk_counterexample(n: usize, m: usize, k: usize) -> Result<KAssignment, OracleError> {
    let instance = Instance::new(n, m)?;
    if k == 0 || !criteria::uniform_obstruction(n as u64, m as u64, k as u64) {
        return Err(OracleError::Precondition(format!(
            "m = {m} does not exceed ceil((m+n)/k)*(k-1) for n = {n}, k = {k}; the uniform assignment is colorable"
        )));
    }
    Ok(KAssignment::uniform(instance, k)?)
}

/// Slices are cut at the shallowest depth with at least this many prefixes.
const MIN_SLICES: usize = 64;
/// Slices per batch. Fixed so that budget checks are thread-count independent.
const BATCH: usize = 64;

struct Enumerator {
    n: usize,
    m: usize,
    k: usize,
    universe: usize,
    sigma: usize,
    skip_safe: bool,
    // candidate lists for each count of labels already in use, sorted
    candidates: Vec<OnceLock<Vec<Vec<u32>>>>,
}

/// A partial assignment: lists for the first `lists.len()` vertices.
#[derive(Clone, Debug)]
struct Prefix {
    lists: Vec<Vec<u32>>,
    seen: usize,
    /// Per label, how many lists on `[A', A]` contain it.
    holders: Vec<[usize; 2]>,
}

impl Prefix {
    fn empty(universe: usize) -> Self {
        Prefix {
            lists: Vec::new(),
            seen: 0,
            holders: vec![[0; 2]; universe],
        }
    }

    fn push(&mut self, list: &[u32], side: usize) {
        for &c in list {
            self.holders[c as usize][side] += 1;
        }
        self.seen = self.seen.max(list.last().map_or(0, |&x| x as usize + 1));
        self.lists.push(list.to_vec());
    }

    fn pop(&mut self, side: usize, seen: usize) {
        let list = self.lists.pop().expect("nonempty prefix");
        for c in list {
            self.holders[c as usize][side] -= 1;
        }
        self.seen = seen;
    }
}

enum SliceOutcome {
    Complete,
    Witness(KAssignment),
    OverBudget,
}

struct SliceResult {
    examined: u64,
    nodes: u64,
    outcome: SliceOutcome,
}

fn k_subsets(pool: usize, size: usize, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, start: usize, tail: &[u32]) {
    if cur.len() == size {
        let mut l = cur.clone();
        l.extend_from_slice(tail);
        out.push(l);
        return;
    }
    for x in start..pool {
        if pool - x < size - cur.len() {
            break;
        }
        cur.push(x as u32);
        k_subsets(pool, size, out, cur, x + 1, tail);
        cur.pop();
    }
}

impl Enumerator {
    fn new(n: usize, m: usize, k: usize, universe: usize, skip_safe: bool) -> Self {
        let candidates = (0..=universe).map(|_| OnceLock::new()).collect();
        Enumerator {
            n,
            m,
            k,
            universe,
            sigma: (n + m).div_ceil(k),
            skip_safe,
            candidates,
        }
    }

    fn len(&self) -> usize {
        self.n + self.m
    }

    fn side(&self, pos: usize) -> usize {
        usize::from(pos >= self.n)
    }

    fn candidates(&self, seen: usize) -> &[Vec<u32>] {
        self.candidates[seen].get_or_init(|| {
            let mut out = Vec::new();
            for reused in 0..=self.k.min(seen) {
                let fresh = self.k - reused;
                if seen + fresh > self.universe {
                    continue;
                }
                let tail: Vec<u32> = (seen..seen + fresh).map(|x| x as u32).collect();
                k_subsets(seen, reused, &mut out, &mut Vec::new(), 0, &tail);
            }
            out.sort_unstable();
            out
        })
    }

    /// Lists allowed at the next position of `prefix`, in lexicographic order.
    fn next_lists<'a>(&'a self, prefix: &Prefix) -> &'a [Vec<u32>] {
        let pos = prefix.lists.len();
        let all = self.candidates(prefix.seen);
        if pos == 0 || pos == self.n {
            return all;
        }
        let prev = &prefix.lists[pos - 1];
        &all[all.partition_point(|c| c < prev)..]
    }

    /// Whether `prefix` can still be completed without a safe color.
    ///
    /// A color is safe when all of its holders sit on one side and there are
    /// at most `sigma` of them: those holders can always take it. So an
    /// assignment with a safe color is colorable iff the rest is, and any
    /// bad assignment stays bad when the holders' lists are replaced by
    /// copies of other lists, which removes the color. Repeating this shows
    /// every bad assignment has a bad counterpart without safe colors, so
    /// only those are enumerated.
    fn viable(&self, prefix: &Prefix) -> bool {
        if !self.skip_safe {
            return true;
        }
        let pos = prefix.lists.len();
        let left_uprime = self.n.saturating_sub(pos);
        let left = [left_uprime, self.len() - pos - left_uprime];
        let mut slots_needed = 0;
        for &[on_uprime, on_a] in &prefix.holders[..prefix.seen] {
            if on_uprime > 0 && on_a > 0 {
                continue;
            }
            let side = usize::from(on_uprime == 0);
            let held = on_uprime + on_a;
            if left[1 - side] > 0 {
                slots_needed += 1;
            } else if held <= self.sigma {
                let more = self.sigma + 1 - held;
                if more > left[side] {
                    return false;
                }
                slots_needed += more;
            }
        }
        slots_needed <= self.k * (left[0] + left[1])
    }

    fn slices(&self) -> Vec<Prefix> {
        let mut level = vec![Prefix::empty(self.universe)];
        while level.len() < MIN_SLICES && level[0].lists.len() < self.len() {
            let side = self.side(level[0].lists.len());
            level = level
                .iter()
                .flat_map(|p| {
                    self.next_lists(p).iter().filter_map(move |l| {
                        let mut child = p.clone();
                        child.push(l, side);
                        self.viable(&child).then_some(child)
                    })
                })
                .collect();
            if level.is_empty() {
                break;
            }
        }
        level
    }

    fn to_assignment(&self, lists: &[Vec<u32>]) -> KAssignment {
        let conv = |ls: &[Vec<u32>]| -> Vec<Vec<Color>> {
            ls.iter().map(|l| l.iter().copied().map(Color).collect()).collect()
        };
        KAssignment::new(self.k, conv(&lists[..self.n]), conv(&lists[self.n..]))
            .expect("enumerated lists are well formed")
    }

    fn walk(&self, prefix: &mut Prefix, visit: &mut dyn FnMut(&[Vec<u32>]) -> ControlFlow<()>) -> ControlFlow<()> {
        let pos = prefix.lists.len();
        if pos == self.len() {
            return visit(&prefix.lists);
        }
        let side = self.side(pos);
        let seen = prefix.seen;
        for list in self.next_lists(prefix) {
            prefix.push(list, side);
            let flow = if self.viable(prefix) {
                self.walk(prefix, visit)
            } else {
                ControlFlow::Continue(())
            };
            prefix.pop(side, seen);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run_slice(&self, slice: &Prefix, cap: u64) -> SliceResult {
        let mut result = SliceResult {
            examined: 0,
            nodes: 0,
            outcome: SliceOutcome::Complete,
        };
        let mut prefix = slice.clone();
        let _ = self.walk(&mut prefix, &mut |lists| {
            if result.examined == cap {
                result.outcome = SliceOutcome::OverBudget;
                return ControlFlow::Break(());
            }
            result.examined += 1;
            let assignment = self.to_assignment(lists);
            let found = search_equitable_coloring(&assignment);
            result.nodes += found.nodes;
            if found.coloring.is_none() {
                result.outcome = SliceOutcome::Witness(assignment);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        result
    }
}

/// Decides equitable k-choosability of `K_{n,m}` by exhaustive search over
/// canonical k-assignments on a universe of `min(universe_size, k·(n+m))`
/// colors. Fails with [`OracleError::BudgetExceeded`] once more than
/// `config.budget` assignments would be needed.
pub fn decide_choosable(n: usize, m: usize, k: usize, config: &DecideConfig) -> Result<OracleVerdict, OracleError> {
    decide(n, m, k, config, true)
}

fn decide(n: usize, m: usize, k: usize, config: &DecideConfig, skip_safe: bool) -> Result<OracleVerdict, OracleError> {
    Instance::new(n, m)?;
    if k == 0 {
        return Err(OracleError::Precondition("k must be at least 1".into()));
    }
    let full = k * (n + m);
    let universe = config.universe_size.map_or(full, |u| u.min(full));
    if universe < k {
        return Err(OracleError::UniverseTooSmall { universe, k });
    }

    let enumerator = Enumerator::new(n, m, k, universe, skip_safe);
    let slices = enumerator.slices();
    let par = config.parallelism;

    par::install(par, || {
        let mut examined = 0u64;
        let mut nodes = 0u64;
        for batch in slices.chunks(BATCH) {
            let cap = config.budget - examined;
            let results = par::map_ordered(batch, par, |s| enumerator.run_slice(s, cap));
            for r in results {
                match r.outcome {
                    SliceOutcome::Witness(witness) => {
                        return Ok(OracleVerdict {
                            status: OracleStatus::NotChoosable,
                            witness: Some(witness),
                            assignments_examined: examined + r.examined,
                            colorings_examined: nodes + r.nodes,
                        });
                    }
                    SliceOutcome::OverBudget => return Err(OracleError::BudgetExceeded { budget: config.budget }),
                    SliceOutcome::Complete => {
                        examined += r.examined;
                        nodes += r.nodes;
                        if examined > config.budget {
                            return Err(OracleError::BudgetExceeded { budget: config.budget });
                        }
                    }
                }
            }
        }
        Ok(OracleVerdict {
            status: OracleStatus::Choosable,
            witness: None,
            assignments_examined: examined,
            colorings_examined: nodes,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::find_equitable_coloring;

    fn seq() -> DecideConfig {
        DecideConfig {
            parallelism: Parallelism::Sequential,
            ..DecideConfig::default()
        }
    }

    #[test]
    fn counterexample_examples() {
        let a = badk_counterexample(1, 3, 2).unwrap();
        assert!(a.lists_a().iter().all(|l| l == &[Color(0), Color(1)]));
        assert_eq!(find_equitable_coloring(&a), None);

        let a = badk_counterexample(2, 139, 13).unwrap();
        assert_eq!(a.k(), 13);
        assert_eq!(a.lists_uprime()[0].len(), 13);

        let a = badk_counterexample(1, 1, 1).unwrap();
        assert_eq!(a.lists_uprime(), &[vec![Color(0)]]);

        assert!(matches!(
            badk_counterexample(1, 2, 2),
            Err(OracleError::Precondition(_))
        ));
    }

    #[test]
    fn first_vertex_list_is_fixed() {
        let e = Enumerator::new(1, 2, 2, 6, true);
        assert_eq!(e.candidates(0), &[vec![0, 1]]);
        // two seen labels: reuse 0, 1 or 2 of them
        assert_eq!(e.candidates(2), &[vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn small_verdicts() {
        let v = decide_choosable(1, 2, 2, &seq()).unwrap();
        assert_eq!(v.status, OracleStatus::Choosable);
        assert!(v.witness.is_none());

        let v = decide_choosable(1, 3, 2, &seq()).unwrap();
        assert_eq!(v.status, OracleStatus::NotChoosable);
        // the least witness is the uniform assignment
        assert_eq!(
            v.witness,
            Some(KAssignment::uniform(Instance::new(1, 3).unwrap(), 2).unwrap())
        );
    }

    #[test]
    fn three_three_is_not_two_choosable() {
        let v = decide_choosable(3, 3, 2, &seq()).unwrap();
        assert_eq!(v.status, OracleStatus::NotChoosable);
        assert_eq!(find_equitable_coloring(v.witness.as_ref().unwrap()), None);
    }

    #[test]
    fn budget_is_reported() {
        let config = DecideConfig { budget: 3, ..seq() };
        assert_eq!(
            decide_choosable(1, 4, 3, &config),
            Err(OracleError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn universe_guard() {
        let config = DecideConfig {
            universe_size: Some(1),
            ..seq()
        };
        assert_eq!(
            decide_choosable(1, 1, 2, &config),
            Err(OracleError::UniverseTooSmall { universe: 1, k: 2 })
        );
    }

    #[test]
    fn thread_count_does_not_change_the_result() {
        for (n, m, k) in [(1, 4, 2), (2, 3, 2), (2, 4, 2), (1, 3, 3)] {
            let a = decide_choosable(n, m, k, &seq()).unwrap();
            for threads in [2, 5] {
                let config = DecideConfig {
                    parallelism: Parallelism::Parallel { threads: Some(threads) },
                    ..seq()
                };
                assert_eq!(
                    decide_choosable(n, m, k, &config).unwrap(),
                    a,
                    "({n},{m},{k}) with {threads} threads"
                );
            }
        }
    }

    /// Every k-assignment over `universe` colors, no symmetry reduction.
    fn brute_force_choosable(n: usize, m: usize, k: usize, universe: u32) -> bool {
        let mut lists: Vec<Vec<Color>> = Vec::new();
        for mask in 0u32..(1 << universe) {
            if mask.count_ones() as usize == k {
                lists.push((0..universe).filter(|c| mask >> c & 1 == 1).map(Color).collect());
            }
        }
        let total = n + m;
        let mut idx = vec![0usize; total];
        loop {
            let chosen: Vec<Vec<Color>> = idx.iter().map(|&i| lists[i].clone()).collect();
            let a = KAssignment::new(k, chosen[..n].to_vec(), chosen[n..].to_vec()).unwrap();
            if find_equitable_coloring(&a).is_none() {
                return false;
            }
            let mut p = 0;
            loop {
                if p == total {
                    return true;
                }
                idx[p] += 1;
                if idx[p] < lists.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    #[test]
    fn canonical_enumeration_matches_brute_force() {
        for (n, m, k) in [
            (1, 1, 1),
            (1, 1, 2),
            (1, 2, 2),
            (1, 3, 2),
            (2, 2, 2),
            (2, 1, 2),
            (1, 2, 3),
        ] {
            let universe = (k * (n + m)) as u32;
            let expected = brute_force_choosable(n, m, k, universe);
            let got = decide_choosable(n, m, k, &seq()).unwrap();
            assert_eq!(
                got.status == OracleStatus::Choosable,
                expected,
                "K_{{{n},{m}}}, k = {k}"
            );
        }
    }

    #[test]
    fn skipping_safe_colors_preserves_verdicts() {
        for n in 1..=3 {
            for m in 1..=(5 - n) {
                for k in 1..=3 {
                    if k * (n + m) > 12 {
                        continue;
                    }
                    let reduced = decide(n, m, k, &seq(), true).unwrap();
                    let full = decide(n, m, k, &seq(), false).unwrap();
                    assert_eq!(reduced.status, full.status, "K_{{{n},{m}}}, k = {k}");
                    assert!(reduced.assignments_examined <= full.assignments_examined);
                }
            }
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = decide_choosable(1, 3, 2, &seq()).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with(r#"{"status":"NOT_CHOOSABLE","witness":{"n":1,"m":3,"k":2,"#));
        assert_eq!(serde_json::from_str::<OracleVerdict>(&text).unwrap(), v);
    }
}
