//! Arithmetic criteria for equitable k-choosability of `K_{n,m}`.
//!
//! Every predicate is exact: ceilings are integer divisions and interval
//! endpoints are rationals, so boundary cases such as
//! `m = ⌈(m+n)/k⌉(k-1)` are never misjudged.

use std::fmt::{self, Write as _};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Contradiction;
use crate::par::{self, Parallelism};

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// `m ≤ ⌈(m+n)/k⌉·(k−n)`: a system of distinct representatives on `A'`
/// followed by a bounded greedy coloring of `A` always succeeds. False
/// whenever `k ≤ n`.
pub fn sufficient_bound(n: u64, m: u64, k: u64) -> bool {
    assert!(n >= 1 && m >= 1 && k >= 1);
    if k <= n {
        return false;
    }
    let (n, m, k) = (n as u128, m as u128, k as u128);
    m <= ceil_div(m + n, k) * (k - n)
}

/// `m > ⌈(m+n)/k⌉·(k−1)`: the uniform assignment `{0..k-1}` admits no
/// equitable coloring, so `K_{n,m}` is not equitably k-choosable.
pub fn uniform_obstruction(n: u64, m: u64, k: u64) -> bool {
    assert!(n >= 1 && m >= 1 && k >= 1);
    let (n, m, k) = (n as u128, m as u128, k as u128);
    m > ceil_div(m + n, k) * (k - 1)
}

/// `m ≤ ⌈(m+n)/k⌉·(k−1)`, the negation of [`uniform_obstruction`]. For
/// `n ≤ 2` this is exactly equitable k-choosability.
pub fn small_side_characterization(n: u64, m: u64, k: u64) -> bool {
    !uniform_obstruction(n, m, k)
}

/// The known max-degree result: equitably k-choosable when
/// `k ≥ max{n, m}`, except that `K_{2l+1,2l+1}` is left undecided.
pub fn max_degree_bound(n: u64, m: u64, k: u64) -> bool {
    assert!(n >= 1 && m >= 1 && k >= 1);
    k >= n.max(m) && !(n == m && n % 2 == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Yes => "YES",
            Status::No => "NO",
            Status::Unknown => "UNKNOWN",
        })
    }
}

/// The rule that decided a verdict. Wire names are fixed by the JSON format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// [`sufficient_bound`] in either orientation.
    #[serde(rename = "THM_MAIN")]
    SufficientBound,
    /// [`uniform_obstruction`] in either orientation.
    #[serde(rename = "THM_BADK")]
    UniformObstruction,
    /// [`small_side_characterization`] on a star `K_{1,m}`.
    #[serde(rename = "COR_STAR")]
    StarCharacterization,
    /// [`small_side_characterization`] on `K_{2,m}`.
    #[serde(rename = "THM_K2M")]
    TwoCharacterization,
    /// [`max_degree_bound`].
    #[serde(rename = "KPW_MAXDEG")]
    MaxDegree,
    /// One color cannot properly color an edge.
    #[serde(rename = "TRIVIAL_K1")]
    SingleColor,
    #[serde(rename = "NONE")]
    None,
}

impl Rule {
    pub fn wire_name(self) -> &'static str {
        match self {
            Rule::SufficientBound => "THM_MAIN",
            Rule::UniformObstruction => "THM_BADK",
            Rule::StarCharacterization => "COR_STAR",
            Rule::TwoCharacterization => "THM_K2M",
            Rule::MaxDegree => "KPW_MAXDEG",
            Rule::SingleColor => "TRIVIAL_K1",
            Rule::None => "NONE",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.wire_name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub rule: Rule,
}

impl Verdict {
    fn yes(rule: Rule) -> Self {
        Verdict {
            status: Status::Yes,
            rule,
        }
    }

    fn no(rule: Rule) -> Self {
        Verdict {
            status: Status::No,
            rule,
        }
    }

    fn unknown() -> Self {
        Verdict {
            status: Status::Unknown,
            rule: Rule::None,
        }
    }
}

/// Decides equitable k-choosability of `K_{n,m}` from the criteria alone.
///
/// Stars and `K_{2,m}` are decided by their characterizations. Otherwise a
/// single color gives NO, then any sufficient condition (either orientation)
/// gives YES, then the uniform obstruction (either orientation) gives NO,
/// and anything left is UNKNOWN. Every rule is evaluated regardless of
/// which one decides, and a YES rule firing alongside a NO rule is reported
/// as a [`Contradiction`].
pub fn classify(n: u64, m: u64, k: u64) -> Result<Verdict, Contradiction> {
    assert!(n >= 1 && m >= 1 && k >= 1, "classify needs n, m, k >= 1");
    let main_fires = sufficient_bound(n, m, k) || sufficient_bound(m, n, k);
    let kpw_fires = max_degree_bound(n, m, k);
    let badk_fires = uniform_obstruction(n, m, k) || uniform_obstruction(m, n, k);

    let small = n.min(m);
    let large = n.max(m);
    let verdict = match small {
        1 | 2 => {
            let rule = if small == 1 {
                Rule::StarCharacterization
            } else {
                Rule::TwoCharacterization
            };
            if small_side_characterization(small, large, k) {
                Verdict::yes(rule)
            } else {
                Verdict::no(rule)
            }
        }
        _ if k == 1 => Verdict::no(Rule::SingleColor),
        _ if main_fires => Verdict::yes(Rule::SufficientBound),
        _ if kpw_fires => Verdict::yes(Rule::MaxDegree),
        _ if badk_fires => Verdict::no(Rule::UniformObstruction),
        _ => Verdict::unknown(),
    };

    let contradiction = |detail: String| Contradiction { n, m, k, detail };
    match verdict.status {
        Status::Yes if badk_fires => Err(contradiction(format!("{} says YES but THM_BADK fires", verdict.rule))),
        Status::No if main_fires || kpw_fires => Err(contradiction(format!(
            "{} says NO but {} fires",
            verdict.rule,
            if main_fires { "THM_MAIN" } else { "KPW_MAXDEG" }
        ))),
        _ => Ok(verdict),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IntervalKind {
    YesInterval,
    NoInterval,
}

/// A half-open real interval `[lower, upper)` of k values with a common
/// verdict, generated for the index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KInterval {
    pub lower: Ratio<u64>,
    pub upper: Ratio<u64>,
    pub kind: IntervalKind,
    pub index: u64,
}

impl KInterval {
    pub fn contains(&self, k: u64) -> bool {
        let k = Ratio::from_integer(k);
        self.lower <= k && k < self.upper
    }

    /// The integers inside the interval, ascending.
    pub fn integers(&self) -> std::ops::Range<u64> {
        let first = self.lower.ceil().to_integer();
        let end = self.upper.ceil().to_integer();
        first..end.max(first)
    }
}

impl fmt::Display for KInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lower, self.upper)
    }
}

/// Smallest `t ≥ 1` with `t² ≥ 1 + m/n`, i.e. `t²·n ≥ n + m`.
fn ceil_sqrt_ratio(n: u64, m: u64) -> u64 {
    let target = n as u128 + m as u128;
    let fits = |t: u64| (t as u128) * (t as u128) * (n as u128) >= target;
    let (mut lo, mut hi) = (1u64, 1u64);
    while !fits(hi) {
        lo = hi;
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    hi
}

/// For `i = 2..=⌈√(1+m/n)⌉` the intervals `[(m+in)/i, (m+n)/(i−1))`; every
/// integer k inside one satisfies [`sufficient_bound`]. Intervals may be
/// empty, and they need not cover every k the bound accepts.
pub fn yes_intervals(n: u64, m: u64) -> Vec<KInterval> {
    assert!(n >= 1 && m >= 1);
    (2..=ceil_sqrt_ratio(n, m))
        .map(|i| KInterval {
            lower: Ratio::new(m + i * n, i),
            upper: Ratio::new(m + n, i - 1),
            kind: IntervalKind::YesInterval,
            index: i,
        })
        .collect()
}

/// For `i = n+1..=n+m` the intervals `[(m+n)/i, (m+i)/i)`; every integer k
/// inside one satisfies [`uniform_obstruction`].
pub fn no_intervals(n: u64, m: u64) -> Vec<KInterval> {
    assert!(n >= 1 && m >= 1);
    (n + 1..=n + m)
        .map(|i| KInterval {
            lower: Ratio::new(m + n, i),
            upper: Ratio::new(m + i, i),
            kind: IntervalKind::NoInterval,
            index: i,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub k: u64,
    pub status: Status,
    pub rule: Rule,
}

impl SpectrumEntry {
    pub fn verdict(&self) -> Verdict {
        Verdict {
            status: self.status,
            rule: self.rule,
        }
    }
}

/// Verdicts for every k in `1..=k_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "SpectrumJson", into = "SpectrumJson")]
pub struct SpectrumReport {
    pub n: u64,
    pub m: u64,
    pub k_max: u64,
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    n: u64,
    m: u64,
    entries: Vec<SpectrumEntry>,
}

impl From<SpectrumJson> for SpectrumReport {
    fn from(j: SpectrumJson) -> Self {
        SpectrumReport {
            n: j.n,
            m: j.m,
            k_max: j.entries.len() as u64,
            entries: j.entries,
        }
    }
}

impl From<SpectrumReport> for SpectrumJson {
    fn from(r: SpectrumReport) -> Self {
        SpectrumJson {
            n: r.n,
            m: r.m,
            entries: r.entries,
        }
    }
}

impl SpectrumReport {
    /// The k values with the given status, ascending.
    pub fn ks_with(&self, status: Status) -> Vec<u64> {
        self.entries
            .iter()
            .filter(|e| e.status == status)
            .map(|e| e.k)
            .collect()
    }

    /// Plain ASCII table, one row per k.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "K_{{{},{}}}  k = 1..{}", self.n, self.m, self.k_max);
        let _ = writeln!(out, "{:>6}  {:<8} rule", "k", "status");
        for e in &self.entries {
            let _ = writeln!(out, "{:>6}  {:<8} {}", e.k, e.status, e.rule);
        }
        out
    }
}

/// Spectra at least this long are classified on the thread pool.
const PARALLEL_SPECTRUM_MIN: u64 = 1 << 14;

/// Classifies every k in `1..=k_max`. A `k_max ≥ n + m` makes the report
/// complete, since every larger k is YES.
pub fn spectrum(n: u64, m: u64, k_max: u64) -> Result<SpectrumReport, Contradiction> {
    let par = if k_max >= PARALLEL_SPECTRUM_MIN {
        Parallelism::default()
    } else {
        Parallelism::Sequential
    };
    spectrum_with(n, m, k_max, par)
}

pub fn spectrum_with(n: u64, m: u64, k_max: u64, par: Parallelism) -> Result<SpectrumReport, Contradiction> {
    let ks: Vec<u64> = (1..=k_max).collect();
    let entries = par::install(par, || {
        par::map_ordered(&ks, par, |&k| {
            classify(n, m, k).map(|v| SpectrumEntry {
                k,
                status: v.status,
                rule: v.rule,
            })
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    Ok(SpectrumReport { n, m, k_max, entries })
}
