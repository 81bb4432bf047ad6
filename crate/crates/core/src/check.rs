//! The definitional checker for equitable L-colorings of `K_{n,m}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::StructuralError;
use crate::types::{Color, Coloring, KAssignment, Side, Vertex};

/// One broken constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `f(v)` is not in `L(v)`.
    NotInList { vertex: Vertex, color: Color },
    /// The color is used on both partite sets, so some edge is monochromatic.
    CrossSide {
        color: Color,
        uprime: Vec<Vertex>,
        a: Vec<Vertex>,
    },
    /// The color class is larger than `⌈(n+m)/k⌉`.
    ClassTooLarge { color: Color, size: usize, bound: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

/// Checks list containment, properness and the equity bound, reporting every
/// violation. Properness uses the bipartite shortcut: no color on both sides.
pub fn check_equitable(assignment: &KAssignment, coloring: &Coloring) -> Result<CheckReport, StructuralError> {
    let inst = assignment.instance();
    for (side, expected, found) in [
        (Side::Uprime, inst.n(), coloring.colors_uprime.len()),
        (Side::A, inst.m(), coloring.colors_a.len()),
    ] {
        if expected != found {
            return Err(StructuralError::LengthMismatch { side, expected, found });
        }
    }

    let mut violations = Vec::new();
    // color -> (vertices on A', vertices on A)
    let mut classes: BTreeMap<Color, (Vec<Vertex>, Vec<Vertex>)> = BTreeMap::new();

    let vertices = (0..inst.n()).map(Vertex::u).chain((0..inst.m()).map(Vertex::v));
    for vertex in vertices {
        let color = coloring.color(vertex);
        if assignment.list(vertex).binary_search(&color).is_err() {
            violations.push(Violation::NotInList { vertex, color });
        }
        let entry = classes.entry(color).or_default();
        match vertex.side {
            Side::Uprime => entry.0.push(vertex),
            Side::A => entry.1.push(vertex),
        }
    }

    let bound = assignment.equity_bound().get();
    for (color, (uprime, a)) in classes {
        let size = uprime.len() + a.len();
        if size > bound {
            violations.push(Violation::ClassTooLarge { color, size, bound });
        }
        if !uprime.is_empty() && !a.is_empty() {
            violations.push(Violation::CrossSide { color, uprime, a });
        }
    }

    Ok(CheckReport {
        pass: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assignment(k: usize, up: &[&[u32]], a: &[&[u32]]) -> KAssignment {
        let conv = |ls: &[&[u32]]| ls.iter().map(|l| l.iter().copied().map(Color).collect()).collect();
        KAssignment::new(k, conv(up), conv(a)).unwrap()
    }

    fn coloring(up: &[u32], a: &[u32]) -> Coloring {
        Coloring {
            colors_uprime: up.iter().copied().map(Color).collect(),
            colors_a: a.iter().copied().map(Color).collect(),
        }
    }

    #[test]
    fn single_edge_proper() {
        let l = assignment(2, &[&[0, 1]], &[&[0, 1]]);
        let r = check_equitable(&l, &coloring(&[0], &[1])).unwrap();
        assert!(r.pass);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn single_edge_monochromatic() {
        let l = assignment(2, &[&[0, 1]], &[&[0, 1]]);
        let r = check_equitable(&l, &coloring(&[0], &[0])).unwrap();
        assert!(!r.pass);
        // with bound ⌈2/2⌉ = 1 the shared color also overfills its class
        assert_eq!(
            r.violations,
            vec![
                Violation::ClassTooLarge {
                    color: Color(0),
                    size: 2,
                    bound: 1
                },
                Violation::CrossSide {
                    color: Color(0),
                    uprime: vec![Vertex::u(0)],
                    a: vec![Vertex::v(0)]
                },
            ]
        );
    }

    #[test]
    fn star_overuses_a_color() {
        let l = assignment(2, &[&[0, 1]], &[&[0, 1], &[0, 1], &[0, 1]]);
        let r = check_equitable(&l, &coloring(&[0], &[1, 1, 1])).unwrap();
        assert!(!r.pass);
        assert_eq!(
            r.violations,
            vec![Violation::ClassTooLarge {
                color: Color(1),
                size: 3,
                bound: 2
            }]
        );
    }

    #[test]
    fn reports_every_violation() {
        let l = assignment(2, &[&[0, 1]], &[&[0, 1], &[0, 1], &[0, 1]]);
        let r = check_equitable(&l, &coloring(&[5], &[0, 0, 0])).unwrap();
        assert_eq!(r.violations.len(), 2);
        assert!(r.violations.contains(&Violation::NotInList {
            vertex: Vertex::u(0),
            color: Color(5)
        }));
        assert!(r.violations.contains(&Violation::ClassTooLarge {
            color: Color(0),
            size: 3,
            bound: 2
        }));
    }

    #[test]
    fn length_mismatch_is_structural() {
        let l = assignment(2, &[&[0, 1]], &[&[0, 1]]);
        let err = check_equitable(&l, &coloring(&[0], &[1, 1])).unwrap_err();
        assert_eq!(
            err,
            StructuralError::LengthMismatch {
                side: Side::A,
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn violation_json_round_trip() {
        let v = Violation::CrossSide {
            color: Color(3),
            uprime: vec![Vertex::u(1)],
            a: vec![Vertex::v(0)],
        };
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"{"kind":"cross_side","color":3,"uprime":["u_2"],"a":["v_1"]}"#);
        assert_eq!(serde_json::from_str::<Violation>(&text).unwrap(), v);
    }
}
