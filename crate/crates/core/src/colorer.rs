//! Constructive equitable L-colorings.
//!
//! Every choice the constructions leave open is resolved by lowest color
//! id, then lowest vertex index, so outputs and traces are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::check::check_equitable;
use crate::criteria;
use crate::error::ColorerError;
use crate::search;
use crate::types::{Color, Coloring, KAssignment};

/// One color-extraction round: `color` was given to exactly `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRound {
    pub t: usize,
    pub color: Color,
    pub vertices: Vec<usize>,
}

/// The rounds of a greedy process plus the vertices colored one by one
/// after it stopped. Vertex ids index the side being colored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GreedyTrace {
    pub rounds: Vec<TraceRound>,
    pub leftover: Vec<(usize, Color)>,
}

impl GreedyTrace {
    /// One JSON object per round, newline separated.
    pub fn to_json_lines(&self) -> String {
        self.rounds
            .iter()
            .map(|r| serde_json::to_string(r).expect("trace rounds serialize") + "\n")
            .collect()
    }

    fn push_round(&mut self, color: Color, vertices: Vec<usize>) {
        let t = self.rounds.len() + 1;
        self.rounds.push(TraceRound { t, color, vertices });
    }
}

/// Residual lists of an edgeless vertex set being colored.
struct Residual {
    lists: Vec<Vec<Color>>,
    colors: Vec<Option<Color>>,
}

impl Residual {
    fn new(lists: Vec<Vec<Color>>) -> Self {
        let colors = vec![None; lists.len()];
        Residual { lists, colors }
    }

    fn uncolored(&self) -> Vec<usize> {
        (0..self.lists.len()).filter(|&v| self.colors[v].is_none()).collect()
    }

    /// Lowest color lying in at least `threshold` of the lists of `among`.
    fn frequent_color(&self, among: &[usize], threshold: usize) -> Option<Color> {
        let mut freq: BTreeMap<Color, usize> = BTreeMap::new();
        for &v in among {
            for &c in &self.lists[v] {
                *freq.entry(c).or_default() += 1;
            }
        }
        freq.into_iter().find(|&(_, f)| f >= threshold).map(|(c, _)| c)
    }

    fn holders(&self, among: &[usize], color: Color) -> Vec<usize> {
        among
            .iter()
            .copied()
            .filter(|&v| self.lists[v].binary_search(&color).is_ok())
            .collect()
    }

    fn assign(&mut self, vertices: &[usize], color: Color) {
        for &v in vertices {
            debug_assert!(self.colors[v].is_none());
            self.colors[v] = Some(color);
        }
    }

    fn remove_color(&mut self, color: Color) {
        for v in 0..self.lists.len() {
            if self.colors[v].is_none() {
                if let Ok(pos) = self.lists[v].binary_search(&color) {
                    self.lists[v].remove(pos);
                }
            }
        }
    }

    /// Colors every uncolored vertex with the lowest color of its residual list.
    fn finish_greedily(&mut self, trace: &mut GreedyTrace) {
        for v in self.uncolored() {
            let c = *self.lists[v]
                .first()
                .expect("residual list is nonempty when the process stops");
            self.colors[v] = Some(c);
            trace.leftover.push((v, c));
        }
    }

    /// While some color lies in `sigma` uncolored lists, give it to the
    /// `sigma` lowest holders and strip it everywhere; then finish greedily.
    fn sigma_process(&mut self, sigma: usize, trace: &mut GreedyTrace) {
        loop {
            let active = self.uncolored();
            if active.is_empty() {
                return;
            }
            let Some(c) = self.frequent_color(&active, sigma) else {
                break;
            };
            let chosen: Vec<usize> = self.holders(&active, c).into_iter().take(sigma).collect();
            self.assign(&chosen, c);
            self.remove_color(c);
            trace.push_round(c, chosen);
        }
        self.finish_greedily(trace);
    }

    fn into_colors(self) -> Vec<Color> {
        self.colors
            .into_iter()
            .map(|c| c.expect("every vertex colored"))
            .collect()
    }
}

fn sorted_set(list: &[Color]) -> Vec<Color> {
    let mut l = list.to_vec();
    l.sort_unstable();
    l.dedup();
    l
}

/// Colors an edgeless vertex set from `lists` so no color is used more than
/// `sigma` times, provided every list has at least `eta` colors and there
/// are at most `sigma * eta` vertices.
pub fn greedy_sigma_color(
    lists: &[Vec<Color>],
    eta: usize,
    sigma: usize,
) -> Result<(Vec<Color>, GreedyTrace), ColorerError> {
    if eta == 0 || sigma == 0 {
        return Err(ColorerError::Precondition(format!(
            "eta = {eta} and sigma = {sigma} must be positive"
        )));
    }
    let lists: Vec<Vec<Color>> = lists.iter().map(|l| sorted_set(l)).collect();
    if let Some((index, l)) = lists.iter().enumerate().find(|(_, l)| l.len() < eta) {
        return Err(ColorerError::ListTooShort {
            index,
            len: l.len(),
            eta,
        });
    }
    let capacity = sigma.saturating_mul(eta);
    if lists.len() > capacity {
        return Err(ColorerError::TooManyVertices {
            count: lists.len(),
            capacity,
        });
    }
    let mut trace = GreedyTrace::default();
    let mut residual = Residual::new(lists);
    residual.sigma_process(sigma, &mut trace);
    Ok((residual.into_colors(), trace))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorerOutput {
    pub coloring: Coloring,
    pub trace: GreedyTrace,
}

/// Picks pairwise distinct colors for `lists`, each the lowest color of its
/// list not taken by an earlier one. `None` if some list runs out.
fn distinct_representatives(lists: &[Vec<Color>]) -> Option<Vec<Color>> {
    let mut taken = Vec::with_capacity(lists.len());
    for l in lists {
        let c = *l.iter().find(|c| !taken.contains(*c))?;
        taken.push(c);
    }
    Some(taken)
}

fn strip(lists: &[Vec<Color>], colors: &[Color]) -> Vec<Vec<Color>> {
    lists
        .iter()
        .map(|l| l.iter().copied().filter(|c| !colors.contains(c)).collect())
        .collect()
}

fn debug_verify(assignment: &KAssignment, coloring: &Coloring) {
    if cfg!(debug_assertions) {
        let report = check_equitable(assignment, coloring).expect("coloring has the instance's shape");
        assert!(
            report.pass,
            "constructed coloring is not equitable: {:?}",
            report.violations
        );
    }
}

/// Colors `K_{n,m}` when `m ≤ ⌈(m+n)/k⌉·(k−n)`: distinct colors on `A'`,
/// then [`greedy_sigma_color`] on `A` with `eta = k−n` and
/// `sigma = ⌈(m+n)/k⌉`.
pub fn color_knm_main(assignment: &KAssignment) -> Result<ColorerOutput, ColorerError> {
    let inst = assignment.instance();
    let (n, m, k) = (inst.n(), inst.m(), assignment.k());
    if !criteria::sufficient_bound(n as u64, m as u64, k as u64) {
        return Err(ColorerError::Precondition(format!(
            "m = {m} exceeds ceil((m+n)/k)*(k-n) for n = {n}, k = {k}"
        )));
    }
    let reps =
        distinct_representatives(assignment.lists_uprime()).expect("k > n leaves a fresh color for every vertex of A'");
    let residual = strip(assignment.lists_a(), &reps);
    let sigma = assignment.equity_bound().get();
    let (colors_a, trace) =
        greedy_sigma_color(&residual, k - n, sigma).expect("residual lists meet the greedy precondition");
    let coloring = Coloring {
        colors_uprime: reps,
        colors_a,
    };
    debug_verify(assignment, &coloring);
    Ok(ColorerOutput { coloring, trace })
}

/// Co-occurrence counts between the two lists on side `A'` of `K_{2,m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCounts {
    pub first: Vec<Color>,
    pub second: Vec<Color>,
    /// `beta[i][j]`: number of `v ∈ A` whose list holds `first[i]` and `second[j]`.
    pub beta: Vec<Vec<usize>>,
    /// `gamma[v] = |L(u_1) ∩ L(v)| · |L(u_2) ∩ L(v)|`.
    pub gamma: Vec<usize>,
}

impl PairCounts {
    pub fn beta_total(&self) -> usize {
        self.beta.iter().flatten().sum()
    }

    pub fn gamma_total(&self) -> usize {
        self.gamma.iter().sum()
    }
}

fn require_disjoint_pair(assignment: &KAssignment) -> Result<(), ColorerError> {
    let n = assignment.instance().n();
    if n != 2 {
        return Err(ColorerError::NotTwoSided(n));
    }
    let [first, second] = assignment.lists_uprime() else {
        unreachable!()
    };
    match first.iter().find(|c| second.binary_search(c).is_ok()) {
        Some(&c) => Err(ColorerError::ListsNotDisjoint(c)),
        None => Ok(()),
    }
}

pub fn pair_counts(assignment: &KAssignment) -> Result<PairCounts, ColorerError> {
    require_disjoint_pair(assignment)?;
    let first = assignment.lists_uprime()[0].clone();
    let second = assignment.lists_uprime()[1].clone();
    let k = assignment.k();
    let mut beta = vec![vec![0; k]; k];
    let mut gamma = Vec::with_capacity(assignment.instance().m());
    for list in assignment.lists_a() {
        let a: Vec<usize> = (0..k).filter(|&i| list.binary_search(&first[i]).is_ok()).collect();
        let b: Vec<usize> = (0..k).filter(|&j| list.binary_search(&second[j]).is_ok()).collect();
        for &i in &a {
            for &j in &b {
                beta[i][j] += 1;
            }
        }
        gamma.push(a.len() * b.len());
    }
    Ok(PairCounts {
        first,
        second,
        beta,
        gamma,
    })
}

/// A color for each vertex of `A'` in `K_{2,m}`, with `beta` the number of
/// lists on `A` containing both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairChoice {
    pub cq: Color,
    pub cr: Color,
    pub beta: usize,
}

/// For disjoint lists on `A'`, the lexicographically least pair
/// `(cq, cr) ∈ L(u_1) × L(u_2)` contained in at most `m/4` lists on `A`.
/// Such a pair exists: the counts sum to at most `⌈k/2⌉⌊k/2⌋·m ≤ k²m/4`.
pub fn choose_disjoint_pair(assignment: &KAssignment) -> Result<PairChoice, ColorerError> {
    let counts = pair_counts(assignment)?;
    debug_assert_eq!(counts.beta_total(), counts.gamma_total());
    let m = assignment.instance().m();
    for (i, row) in counts.beta.iter().enumerate() {
        for (j, &beta) in row.iter().enumerate() {
            if 4 * beta <= m {
                return Ok(PairChoice {
                    cq: counts.first[i],
                    cr: counts.second[j],
                    beta,
                });
            }
        }
    }
    panic!("no pair with 4*beta <= m = {m}; the averaging bound is violated")
}

/// Colors `K_{2,m}` whenever `m ≤ ⌈(m+2)/k⌉·(k−1)`.
///
/// Large k (`k ≥ m+2`) gets a rainbow coloring and `k = 2` an exhaustive
/// search. Otherwise a color shared by both lists on `A'` is used on both
/// and `A` is finished by [`greedy_sigma_color`]; with disjoint lists the
/// pair from [`choose_disjoint_pair`] is used and `A` is colored by the
/// deficient-set process before the final greedy pass.
pub fn color_k2m(assignment: &KAssignment) -> Result<ColorerOutput, ColorerError> {
    let inst = assignment.instance();
    let (n, m, k) = (inst.n(), inst.m(), assignment.k());
    if n != 2 {
        return Err(ColorerError::NotTwoSided(n));
    }
    if !criteria::small_side_characterization(2, m as u64, k as u64) {
        return Err(ColorerError::Precondition(format!(
            "m = {m} exceeds ceil((m+2)/k)*(k-1) for k = {k}"
        )));
    }
    let out = if k >= m + 2 {
        rainbow(assignment)
    } else if k <= 2 {
        // only k = 2, m <= 3 meets the precondition here
        let coloring =
            search::find_equitable_coloring(assignment).expect("K_{2,m} with m <= 3 is equitably 2-choosable");
        ColorerOutput {
            coloring,
            trace: GreedyTrace::default(),
        }
    } else {
        let [first, second] = assignment.lists_uprime() else {
            unreachable!()
        };
        match first.iter().find(|c| second.binary_search(c).is_ok()) {
            Some(&shared) => shared_color_path(assignment, shared),
            None => disjoint_path(assignment),
        }
    };
    debug_verify(assignment, &out.coloring);
    Ok(out)
}

/// Every vertex gets its own color; fine when `k ≥ n + m`.
fn rainbow(assignment: &KAssignment) -> ColorerOutput {
    let all: Vec<Vec<Color>> = assignment
        .lists_uprime()
        .iter()
        .chain(assignment.lists_a())
        .cloned()
        .collect();
    let mut colors = distinct_representatives(&all).expect("k >= n + m leaves a fresh color for every vertex");
    let colors_a = colors.split_off(assignment.instance().n());
    ColorerOutput {
        coloring: Coloring {
            colors_uprime: colors,
            colors_a,
        },
        trace: GreedyTrace::default(),
    }
}

fn shared_color_path(assignment: &KAssignment, shared: Color) -> ColorerOutput {
    let k = assignment.k();
    let sigma = assignment.equity_bound().get();
    let residual = strip(assignment.lists_a(), &[shared]);
    let (colors_a, trace) =
        greedy_sigma_color(&residual, k - 1, sigma).expect("residual lists meet the greedy precondition");
    ColorerOutput {
        coloring: Coloring {
            colors_uprime: vec![shared, shared],
            colors_a,
        },
        trace,
    }
}

fn disjoint_path(assignment: &KAssignment) -> ColorerOutput {
    let k = assignment.k();
    let sigma = assignment.equity_bound().get();
    let pair = choose_disjoint_pair(assignment).expect("lists on A' are disjoint");
    let mut res = Residual::new(strip(assignment.lists_a(), &[pair.cq, pair.cr]));
    let mut trace = GreedyTrace::default();

    // B_t: uncolored vertices whose residual list has the minimum possible
    // length k-1-t at round t.
    let deficient = |res: &Residual, t: usize| -> Vec<usize> {
        res.uncolored()
            .into_iter()
            .filter(|&v| res.lists[v].len() == k - 1 - t)
            .collect()
    };

    let mut t = 1;
    let mut previous: Option<Vec<usize>> = None;
    let stop_set = loop {
        let b = deficient(&res, t);
        if let Some(prev) = &previous {
            debug_assert!(b.iter().all(|v| prev.contains(v)), "B_t must shrink");
        }
        match res.frequent_color(&b, sigma) {
            Some(c) => {
                assert!(t < k - 2, "deficient-set process ran past round k-3");
                let chosen: Vec<usize> = res.holders(&b, c).into_iter().take(sigma).collect();
                res.assign(&chosen, c);
                res.remove_color(c);
                trace.push_round(c, chosen);
                previous = Some(b);
                t += 1;
            }
            None => break b,
        }
    };
    let alpha = t;
    debug_assert!(alpha <= k - 2);

    let remaining = res.uncolored();
    match res.frequent_color(&remaining, sigma) {
        None => res.finish_greedily(&mut trace),
        Some(c) => {
            let patch = res.holders(&stop_set, c);
            assert!(patch.len() < sigma, "the process would have continued with color {c}");
            let need = sigma - patch.len();
            let outside: Vec<usize> = res
                .holders(&remaining, c)
                .into_iter()
                .filter(|v| !patch.contains(v))
                .collect();
            assert!(
                outside.len() >= need,
                "color {c} has {} holders outside the deficient set, {need} needed",
                outside.len()
            );
            let mut chosen = patch;
            chosen.extend_from_slice(&outside[..need]);
            chosen.sort_unstable();
            res.assign(&chosen, c);
            res.remove_color(c);
            trace.push_round(c, chosen);

            let eta = k - 1 - alpha;
            let left = res.uncolored();
            assert!(
                left.len() <= sigma * eta,
                "{} vertices left for capacity {}",
                left.len(),
                sigma * eta
            );
            assert!(
                left.iter().all(|&v| res.lists[v].len() >= eta),
                "residual list shorter than {eta}"
            );
            res.sigma_process(sigma, &mut trace);
        }
    }
    ColorerOutput {
        coloring: Coloring {
            colors_uprime: vec![pair.cq, pair.cr],
            colors_a: res.into_colors(),
        },
        trace,
    }
}

/// Which coloring procedure to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Auto,
    Main,
    K2m,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Algorithm::Auto => "auto",
            Algorithm::Main => "main",
            Algorithm::K2m => "k2m",
            Algorithm::Oracle => "oracle",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "main" => Ok(Algorithm::Main),
            "k2m" => Ok(Algorithm::K2m),
            "oracle" => Ok(Algorithm::Oracle),
            _ => Err(format!("unknown algorithm {s:?}")),
        }
    }
}

/// Result of [`color`]: the procedure that actually ran and its output, or
/// `None` for the coloring when the exhaustive search found nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dispatched {
    pub algorithm: Algorithm,
    pub coloring: Option<Coloring>,
    pub trace: GreedyTrace,
}

/// Resolves `Auto` to a concrete procedure for this assignment.
pub fn select_algorithm(assignment: &KAssignment) -> Algorithm {
    let inst = assignment.instance();
    let (n, m, k) = (inst.n() as u64, inst.m() as u64, assignment.k() as u64);
    if k <= 2 {
        Algorithm::Oracle
    } else if (n == 2 && criteria::small_side_characterization(2, m, k))
        || (m == 2 && criteria::small_side_characterization(2, n, k))
    {
        Algorithm::K2m
    } else if criteria::sufficient_bound(n, m, k) || criteria::sufficient_bound(m, n, k) {
        Algorithm::Main
    } else {
        Algorithm::Oracle
    }
}

/// Runs `algorithm`, swapping the partite sets when the constructive
/// procedure only applies to the other orientation. Trace vertex ids then
/// refer to the side that was actually colored by the greedy process.
pub fn color(assignment: &KAssignment, algorithm: Algorithm) -> Result<Dispatched, ColorerError> {
    let algorithm = match algorithm {
        Algorithm::Auto => select_algorithm(assignment),
        a => a,
    };
    let inst = assignment.instance();
    let (n, m, k) = (inst.n() as u64, inst.m() as u64, assignment.k() as u64);
    let oriented = |f: fn(&KAssignment) -> Result<ColorerOutput, ColorerError>, swap: bool| {
        if swap {
            f(&assignment.transposed()).map(|out| (out.coloring.transposed(), out.trace))
        } else {
            f(assignment).map(|out| (out.coloring, out.trace))
        }
    };
    let (coloring, trace) = match algorithm {
        Algorithm::Oracle => (search::find_equitable_coloring(assignment), GreedyTrace::default()),
        Algorithm::Main => {
            let swap = !criteria::sufficient_bound(n, m, k) && criteria::sufficient_bound(m, n, k);
            let (c, t) = oriented(color_knm_main, swap)?;
            (Some(c), t)
        }
        Algorithm::K2m => {
            let swap = n != 2 && m == 2;
            let (c, t) = oriented(color_k2m, swap)?;
            (Some(c), t)
        }
        Algorithm::Auto => unreachable!(),
    };
    Ok(Dispatched {
        algorithm,
        coloring,
        trace,
    })
}
