//! The catalogue of named example spaces.
//!
//! Fixture names are frozen identifiers; changing a fixture's contents is a
//! breaking change.

use crate::semitopology::Semitopology;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub points: Vec<&'static str>,
    pub generators: Vec<Vec<&'static str>>,
}

impl Fixture {
    pub fn build(&self) -> Semitopology {
        Semitopology::build(self.points.iter().copied(), self.generators.clone())
            .expect("fixtures are well formed")
    }
}

fn majority_generators() -> Vec<Vec<&'static str>> {
    const IDS: [&str; 6] = ["0", "1", "2", "3", "4", "5"];
    let mut gens = Vec::new();
    for mask in 0u32..64 {
        if mask.count_ones() == 4 {
            gens.push((0..6).filter(|i| mask & (1 << i) != 0).map(|i| IDS[i]).collect());
        }
    }
    gens
}

/// Every fixture, in catalogue order.
pub fn all() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "SIERP",
            description: "Sierpinski space: two points, {1} open",
            points: vec!["0", "1"],
            generators: vec![vec!["1"]],
        },
        Fixture {
            name: "TL3",
            description: "three points, opens generated by {0} and {2}; 1 is weakly regular and conflicted",
            points: vec!["0", "1", "2"],
            generators: vec![vec!["0"], vec!["2"]],
        },
        Fixture {
            name: "TR3",
            description: "three points, opens generated by {0}, {0,1}, {2}, {1,2}; community of 1 is empty",
            points: vec!["0", "1", "2"],
            generators: vec![vec!["0"], vec!["0", "1"], vec!["2"], vec!["1", "2"]],
        },
        Fixture {
            name: "STAR4",
            description: "points 0,1,2,*; * is quasiregular and unconflicted but not strongly compatible",
            points: vec!["0", "1", "2", "*"],
            generators: vec![
                vec!["0"],
                vec!["1"],
                vec!["2"],
                vec!["0", "1", "*"],
                vec!["1", "2", "*"],
            ],
        },
        Fixture {
            name: "TRI3",
            description: "three points, opens generated by the three pairs; regular, T1, not sober",
            points: vec!["0", "1", "2"],
            generators: vec![vec!["0", "1"], vec!["1", "2"], vec!["0", "2"]],
        },
        Fixture {
            name: "SQ4",
            description: "four points on a square, opens generated by adjacent pairs; Hausdorff with no topens",
            points: vec!["0", "1", "2", "3"],
            generators: vec![
                vec!["3", "0"],
                vec!["0", "1"],
                vec!["1", "2"],
                vec!["2", "3"],
            ],
        },
        Fixture {
            name: "IRR5",
            description: "five points; 0 is quasiregular with community {1,2} not containing it",
            points: vec!["0", "1", "2", "3", "4"],
            generators: vec![
                vec!["1"],
                vec!["2"],
                vec!["3"],
                vec!["4"],
                vec!["0", "1", "2", "3"],
                vec!["0", "1", "2", "4"],
            ],
        },
        Fixture {
            name: "CHAIN5",
            description: "points -2..2, opens generated by adjacent pairs",
            points: vec!["-2", "-1", "0", "1", "2"],
            generators: vec![
                vec!["-2", "-1"],
                vec!["-1", "0"],
                vec!["0", "1"],
                vec!["1", "2"],
            ],
        },
        Fixture {
            name: "MAJ6",
            description: "six points, opens are the empty set and every subset of size at least 4",
            points: vec!["0", "1", "2", "3", "4", "5"],
            generators: majority_generators(),
        },
    ]
}

pub fn get(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

fn named(name: &str) -> Semitopology {
    get(name).expect("known fixture").build()
}

pub fn sierp() -> Semitopology {
    named("SIERP")
}
pub fn tl3() -> Semitopology {
    named("TL3")
}
pub fn tr3() -> Semitopology {
    named("TR3")
}
pub fn star4() -> Semitopology {
    named("STAR4")
}
pub fn tri3() -> Semitopology {
    named("TRI3")
}
pub fn sq4() -> Semitopology {
    named("SQ4")
}
pub fn irr5() -> Semitopology {
    named("IRR5")
}
pub fn chain5() -> Semitopology {
    named("CHAIN5")
}
pub fn maj6() -> Semitopology {
    named("MAJ6")
}
