mod common;

use std::time::Instant;

use common::*;
use equichoose::colorer::{color, Algorithm};
use equichoose::criteria::{classify, uniform_obstruction, Status};
use equichoose::{
    badk_counterexample, check_equitable, decide_choosable, find_equitable_coloring, Color, Coloring, DecideConfig,
    KAssignment, OracleStatus,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn expected(n: usize, m: usize, k: usize) -> Status {
    classify(n as u64, m as u64, k as u64).unwrap().status
}

#[test]
fn oracle_agrees_with_small_side_characterization() {
    let started = Instant::now();
    for n in 1..=2usize {
        for m in 1..=7 - n {
            for k in 1..=3usize {
                let v = decide_choosable(n, m, k, &DecideConfig::default()).unwrap();
                let want = expected(n, m, k);
                assert_eq!(
                    v.status == OracleStatus::Choosable,
                    want == Status::Yes,
                    "K_{{{n},{m}}} k={k}"
                );
                if let Some(w) = &v.witness {
                    assert!(find_equitable_coloring(w).is_none());
                }
            }
        }
    }
    eprintln!("small side grid: {:?}", started.elapsed());
}

#[test]
fn oracle_never_contradicts_a_decided_verdict() {
    for (n, m, k) in [(3, 3, 1), (3, 3, 2), (3, 3, 3), (3, 4, 2), (4, 4, 2), (3, 5, 2)] {
        let v = decide_choosable(n, m, k, &DecideConfig::default()).unwrap();
        match expected(n, m, k) {
            Status::Yes => assert_eq!(v.status, OracleStatus::Choosable, "({n},{m},{k})"),
            Status::No => assert_eq!(v.status, OracleStatus::NotChoosable, "({n},{m},{k})"),
            Status::Unknown => {}
        }
    }
}

#[test]
fn counterexamples_are_uncolorable() {
    for n in 1..=7usize {
        for m in 1..=8 - n {
            for k in 1..=2 * (n + m) {
                if !uniform_obstruction(n as u64, m as u64, k as u64) {
                    assert!(badk_counterexample(n, m, k).is_err());
                    continue;
                }
                let a = badk_counterexample(n, m, k).unwrap();
                assert!(find_equitable_coloring(&a).is_none(), "({n},{m},{k})");
            }
        }
    }
}

#[test]
fn colorer_succeeds_where_oracle_says_choosable() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (n, m, k) in [(1, 2, 2), (1, 4, 3), (2, 2, 3), (2, 3, 3), (2, 4, 3), (1, 5, 4)] {
        assert_eq!(expected(n, m, k), Status::Yes, "({n},{m},{k})");
        let v = decide_choosable(n, m, k, &DecideConfig::default()).unwrap();
        assert_eq!(v.status, OracleStatus::Choosable);
        for _ in 0..200 {
            let a = random_assignment(&mut rng, n, m, k, 2 * k);
            let out = color(&a, Algorithm::Auto).unwrap();
            let coloring = out.coloring.expect("choosable instance left uncolored");
            assert!(check_equitable(&a, &coloring).unwrap().pass);
        }
    }
}

/// Every map from vertices to colors of their lists, checked one by one.
fn exhaustive_colorable(a: &KAssignment) -> bool {
    let lists: Vec<&[Color]> = a.lists_uprime().iter().chain(a.lists_a()).map(Vec::as_slice).collect();
    let n = a.instance().n();
    let mut idx = vec![0usize; lists.len()];
    loop {
        let colors: Vec<Color> = idx.iter().zip(&lists).map(|(&i, l)| l[i]).collect();
        let c = Coloring {
            colors_uprime: colors[..n].to_vec(),
            colors_a: colors[n..].to_vec(),
        };
        if check_equitable(a, &c).unwrap().pass {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return false;
            }
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn relabel(a: &KAssignment, perm: &[u32], up_order: &[usize], a_order: &[usize]) -> KAssignment {
    let map = |l: &Vec<Color>| l.iter().map(|c| Color(perm[c.0 as usize])).collect::<Vec<_>>();
    KAssignment::new(
        a.k(),
        up_order.iter().map(|&i| map(&a.lists_uprime()[i])).collect(),
        a_order.iter().map(|&i| map(&a.lists_a()[i])).collect(),
    )
    .unwrap()
}

fn small_assignment() -> impl Strategy<Value = (KAssignment, u64)> {
    (1usize..=3, 1usize..=3, 1usize..=3, 0usize..=3, any::<u64>()).prop_filter_map(
        "at most five vertices",
        |(n, m, k, extra, seed)| {
            (n + m <= 5).then(|| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (random_assignment(&mut rng, n, m, k, k + extra), seed)
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn search_matches_exhaustive_enumeration((a, _) in small_assignment()) {
        let found = find_equitable_coloring(&a);
        if let Some(c) = &found {
            prop_assert!(check_equitable(&a, c).unwrap().pass);
        }
        prop_assert_eq!(found.is_some(), exhaustive_colorable(&a));
    }

    #[test]
    fn colorability_is_invariant_under_relabeling((a, seed) in small_assignment()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut perm: Vec<u32> = (0..2 * a.k() as u32 + 3).collect();
        perm.shuffle(&mut rng);
        let mut up: Vec<usize> = (0..a.instance().n()).collect();
        let mut av: Vec<usize> = (0..a.instance().m()).collect();
        up.shuffle(&mut rng);
        av.shuffle(&mut rng);
        let b = relabel(&a, &perm, &up, &av);
        prop_assert_eq!(find_equitable_coloring(&a).is_some(), find_equitable_coloring(&b).is_some());
        prop_assert_eq!(find_equitable_coloring(&a).is_some(), find_equitable_coloring(&a.transposed()).is_some());
    }

    #[test]
    fn checker_accepts_only_valid_colorings((a, seed) in small_assignment()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick = |l: &Vec<Color>, rng: &mut ChaCha8Rng| *l.choose(rng).unwrap();
        let c = Coloring {
            colors_uprime: a.lists_uprime().iter().map(|l| pick(l, &mut rng)).collect(),
            colors_a: a.lists_a().iter().map(|l| pick(l, &mut rng)).collect(),
        };
        let r = check_equitable(&a, &c).unwrap();
        prop_assert_eq!(r.pass, r.violations.is_empty());
        prop_assert_eq!(&r, &check_equitable(&a, &c).unwrap());
        if r.pass {
            let bound = a.equity_bound().get();
            prop_assert!(class_sizes(&c).values().all(|&s| s <= bound));
            prop_assert!(c.colors_uprime.iter().all(|x| !c.colors_a.contains(x)));
        }
    }
}
