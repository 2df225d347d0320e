//! Small named matroids used by tests, benchmarks and the command line.

use itertools::Itertools;

use crate::{Matroid, Subset};

/// Lines of the Fano plane on `{0, ..., 6}`.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5],
];

pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn uniform(r: usize, size: usize) -> Matroid {
    Matroid::uniform(r, size).expect("valid uniform parameters")
}

pub fn triangle() -> Matroid {
    Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).expect("valid graph")
}

pub fn k4() -> Matroid {
    Matroid::graphic(4, &K4_EDGES).expect("valid graph")
}

/// `K4` with the edge `23` removed.
pub fn k4_minus_edge() -> Matroid {
    Matroid::graphic(4, &K4_EDGES[..5]).expect("valid graph")
}

/// `K5` with a fixed edge labeling on vertices `0..5`. Its β-nbc bases are
/// `0256, 0257, 0259, 0368, 0378, 0379`.
pub const K5_EDGES: [(usize, usize); 10] = [
    (0, 2),
    (3, 4),
    (0, 4),
    (2, 4),
    (1, 4),
    (2, 3),
    (1, 2),
    (0, 1),
    (0, 3),
    (1, 3),
];

pub fn k5() -> Matroid {
    Matroid::graphic(5, &K5_EDGES).expect("valid graph")
}

/// The 28 non-collinear triples of the Fano plane.
pub fn fano() -> Matroid {
    let lines: Vec<Subset> = FANO_LINES.iter().map(|l| l.iter().collect()).collect();
    let bases = (0..7)
        .combinations(3)
        .map(Subset::from)
        .filter(|b| !lines.contains(b));
    Matroid::with_ground_size(7, bases).expect("Fano bases satisfy exchange")
}

/// The standard corpus with display names.
pub fn corpus() -> Vec<(&'static str, Matroid)> {
    vec![
        ("U(1,2)", uniform(1, 2)),
        ("U(2,4)", uniform(2, 4)),
        ("U(2,5)", uniform(2, 5)),
        ("U(3,5)", uniform(3, 5)),
        ("U(3,6)", uniform(3, 6)),
        ("triangle", triangle()),
        ("K4", k4()),
        ("K4 minus edge", k4_minus_edge()),
        ("Fano", fano()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(fano().bases().len(), 28);
        assert_eq!(fano().rank(), 3);
        assert_eq!(k4().bases().len(), 16);
        assert_eq!(k4_minus_edge().bases().len(), 8);
        assert_eq!(corpus().len(), 9);
        assert_eq!(k5().bases().len(), 125);
    }
}
